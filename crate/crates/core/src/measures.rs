//! Bipartition negativities and the tripartite negativity.
//!
//! The tripartite negativity certifies non-separability when positive but
//! does not fully quantify multipartite entanglement of mixed states.

use crate::channel::{ReservoirParams, Temperature};
use crate::error::Result;
use crate::qmat::{hermitian_eigenvalues, partial_transpose, Qubit};
use crate::states::DensityMatrix;

/// Eigenvalues of the partial transpose in `(-ε, 0)` count as zero.
pub const NEGATIVITY_EPS: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NegativityReport {
    pub n_a_bc: f64,
    pub n_b_ca: f64,
    pub n_c_ab: f64,
    pub tripartite: f64,
}

impl NegativityReport {
    pub fn bipartitions(&self) -> [f64; 3] {
        [self.n_a_bc, self.n_b_ca, self.n_c_ab]
    }
}

/// `-Σ μ_i` over the negative eigenvalues of `ρ^{T_K}`.
pub fn negativity(rho: &DensityMatrix, subsystem: Qubit) -> Result<f64> {
    let spec = hermitian_eigenvalues(&partial_transpose(rho, subsystem))?;
    Ok(-spec.negative_sum(NEGATIVITY_EPS))
}

/// `N = (N_{A-BC} N_{B-CA} N_{C-AB})^{1/3}`
pub fn tripartite_negativity(rho: &DensityMatrix) -> Result<NegativityReport> {
    let n_a_bc = negativity(rho, Qubit::A)?;
    let n_b_ca = negativity(rho, Qubit::B)?;
    let n_c_ab = negativity(rho, Qubit::C)?;
    Ok(NegativityReport {
        n_a_bc,
        n_b_ca,
        n_c_ab,
        tripartite: (n_a_bc * n_b_ca * n_c_ab).cbrt(),
    })
}

/// Signed entanglement margin: `min_K (-λ_min(ρ^{T_K}))`.
///
/// Positive exactly when every bipartition has a negative partial-transpose
/// eigenvalue, so its zero crossing is the death time of the tripartite
/// negativity without the flat region of the clipped value.
pub fn entanglement_margin(rho: &DensityMatrix) -> Result<f64> {
    let mut margin = f64::INFINITY;
    for q in Qubit::ALL {
        let spec = hermitian_eigenvalues(&partial_transpose(rho, q))?;
        margin = margin.min(-spec.min());
    }
    Ok(margin)
}

/// `(α, β)` of the closed-form GHZ negativity for decay factor `p`.
pub fn ghz_alpha_beta(temperature: Temperature, p: f64) -> (f64, f64) {
    let p2 = p * p;
    let p4 = p2 * p2;
    match temperature {
        Temperature::Finite(n) => {
            let m = 2.0 * n + 1.0;
            let nn = 2.0 * n * (n + 1.0);
            let alpha = (1.0 - p2) * (nn * (3.0 * p4 - 1.0) + 2.0 * p4 - p2) / (2.0 * m.powi(3));
            let beta = (1.0 - p2) * (nn * (p2 + 1.0) + p2) / (2.0 * m * m);
            (alpha, beta)
        }
        // leading order in 1/n̄
        Temperature::Infinite => (0.0, (1.0 - p4) / 4.0),
    }
}

/// `sqrt(α² + p⁶) − β`; the closed-form negativity is half its positive part.
pub fn ghz_negativity_margin(params: &ReservoirParams) -> Result<f64> {
    let p = params.uniform_decay_factor()?;
    let (alpha, beta) = ghz_alpha_beta(params.temperature(), p);
    Ok((alpha * alpha + p.powi(6)).sqrt() - beta)
}

/// `N(ρ_GHZ) = ½ max{0, sqrt(α² + p⁶) − β}`
pub fn analytic_negativity_ghz(params: &ReservoirParams) -> Result<f64> {
    Ok(0.5 * ghz_negativity_margin(params)?.max(0.0))
}
