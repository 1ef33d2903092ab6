//! Independent thermal reservoirs acting on each qubit.
//!
//! Ladder-operator convention: decay (the `n̄+1` process) moves population
//! from the first basis state of a qubit to the second, so
//!
//! ```text
//! σ⁻ = [[0, 0],      σ⁺ = [[0, 1],
//!       [1, 0]]            [0, 0]]
//! ```
//!
//! and under pure decay every state flows to `|111⟩⟨111|`. This is the only
//! choice under which the master equation and the Kraus solution describe
//! the same flow.

use std::fmt;

use crate::error::{Error, Result};
use crate::qmat::{local_left, local_right, local_sandwich, tensor3, ComplexMatrix, Qubit, C64, ONE, ZERO};
use crate::states::DensityMatrix;

pub fn sigma_minus() -> ComplexMatrix {
    ComplexMatrix::from_row_major(vec![ZERO, ZERO, ONE, ZERO])
}

pub fn sigma_plus() -> ComplexMatrix {
    ComplexMatrix::from_row_major(vec![ZERO, ONE, ZERO, ZERO])
}

/// Reservoir temperature as a mean thermal photon number.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Temperature {
    Finite(f64),
    /// `n̄ → ∞`. Time is measured as `n̄t`, so `γt` reads as `n̄γt`.
    Infinite,
}

impl Temperature {
    pub fn from_nbar(nbar: f64) -> Result<Self> {
        if nbar == f64::INFINITY {
            Ok(Temperature::Infinite)
        } else if nbar.is_finite() && nbar >= 0.0 {
            Ok(Temperature::Finite(nbar))
        } else {
            Err(Error::InvalidParams(format!("nbar must be >= 0, got {nbar}")))
        }
    }

    /// `n̄`, with `f64::INFINITY` for the infinite-temperature limit.
    pub fn nbar(self) -> f64 {
        match self {
            Temperature::Finite(n) => n,
            Temperature::Infinite => f64::INFINITY,
        }
    }

    /// `((n̄+1)/(2n̄+1), n̄/(2n̄+1))`: weights of the decay and excitation
    /// Kraus pairs.
    pub fn thermal_weights(self) -> (f64, f64) {
        match self {
            Temperature::Finite(n) => ((n + 1.0) / (2.0 * n + 1.0), n / (2.0 * n + 1.0)),
            Temperature::Infinite => (0.5, 0.5),
        }
    }

    /// Rates multiplying `γ` for the decay and excitation generators, in
    /// this temperature's time unit.
    pub fn lindblad_rates(self) -> (f64, f64) {
        match self {
            Temperature::Finite(n) => (n + 1.0, n),
            Temperature::Infinite => (1.0, 1.0),
        }
    }

    /// Factor turning `γt` into the exponent scale `(2n̄+1)γt`.
    pub fn time_scale(self) -> f64 {
        match self {
            Temperature::Finite(n) => 2.0 * n + 1.0,
            Temperature::Infinite => 2.0,
        }
    }
}

impl fmt::Display for Temperature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Temperature::Finite(n) => write!(f, "{n}"),
            Temperature::Infinite => f.write_str("inf"),
        }
    }
}

impl std::str::FromStr for Temperature {
    type Err = Error;

    /// A non-negative number, or `inf` for the infinite-temperature limit.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") || s.eq_ignore_ascii_case("infinity") {
            return Ok(Temperature::Infinite);
        }
        let nbar: f64 = s
            .parse()
            .map_err(|_| Error::InvalidParams(format!("nbar '{s}' is not a number or 'inf'")))?;
        Temperature::from_nbar(nbar)
    }
}

/// Mean photon number, per-qubit damping rates and elapsed time.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ReservoirParams {
    temperature: Temperature,
    gamma: [f64; 3],
    t: f64,
}

impl ReservoirParams {
    pub fn new(temperature: Temperature, gamma: [f64; 3], t: f64) -> Result<Self> {
        if let Temperature::Finite(n) = temperature {
            if !(n.is_finite() && n >= 0.0) {
                return Err(Error::InvalidParams(format!("nbar must be >= 0, got {n}")));
            }
        }
        if gamma.iter().any(|g| !(g.is_finite() && *g >= 0.0)) {
            return Err(Error::InvalidParams(format!("damping rates must be >= 0, got {gamma:?}")));
        }
        if !(t.is_finite() && t >= 0.0) {
            return Err(Error::InvalidParams(format!("time must be >= 0, got {t}")));
        }
        Ok(ReservoirParams {
            temperature,
            gamma,
            t,
        })
    }

    /// Equal rates `γ = 1` on all three qubits, so `t` is `γt`.
    pub fn uniform(nbar: f64, gamma_t: f64) -> Result<Self> {
        Self::new(Temperature::from_nbar(nbar)?, [1.0; 3], gamma_t)
    }

    pub fn temperature(&self) -> Temperature {
        self.temperature
    }

    pub fn gamma(&self) -> [f64; 3] {
        self.gamma
    }

    pub fn time(&self) -> f64 {
        self.t
    }

    pub fn with_time(&self, t: f64) -> Result<Self> {
        Self::new(self.temperature, self.gamma, t)
    }

    /// `(2n̄+1)γ_K t`
    pub fn rescaled_time(&self, qubit: Qubit) -> f64 {
        self.temperature.time_scale() * self.gamma[qubit.index()] * self.t
    }

    /// `p_K = exp(-(2n̄+1)γ_K t / 2)`
    pub fn decay_factor(&self, qubit: Qubit) -> f64 {
        (-0.5 * self.rescaled_time(qubit)).exp()
    }

    /// The common `γ` when all three rates agree.
    pub fn uniform_gamma(&self) -> Result<f64> {
        let [a, b, c] = self.gamma;
        if a == b && b == c {
            Ok(a)
        } else {
            Err(Error::UnequalRates(self.gamma))
        }
    }

    /// The common decay factor `p`, requiring equal rates.
    pub fn uniform_decay_factor(&self) -> Result<f64> {
        self.uniform_gamma()?;
        Ok(self.decay_factor(Qubit::A))
    }
}

/// The four single-qubit Kraus operators of one reservoir.
#[derive(Clone, Debug, PartialEq)]
pub struct KrausSet {
    pub ops: [ComplexMatrix; 4],
}

impl KrausSet {
    /// `max |Σ E†E - I|`
    pub fn completeness_defect(&self) -> f64 {
        let mut sum = ComplexMatrix::zeros(2);
        for e in &self.ops {
            sum += &e.adjoint().matmul(e);
        }
        sum.max_abs_diff(&ComplexMatrix::identity(2))
    }
}

pub fn single_qubit_kraus(params: &ReservoirParams, qubit: Qubit) -> KrausSet {
    let p = params.decay_factor(qubit);
    let s = (1.0 - p * p).max(0.0).sqrt();
    let (w_dec, w_exc) = params.temperature.thermal_weights();
    let (a, b) = (w_dec.sqrt(), w_exc.sqrt());
    let r = |x: f64| C64::new(x, 0.0);
    KrausSet {
        ops: [
            ComplexMatrix::from_row_major(vec![r(a * p), ZERO, ZERO, r(a)]),
            ComplexMatrix::from_row_major(vec![r(b), ZERO, ZERO, r(b * p)]),
            ComplexMatrix::from_row_major(vec![ZERO, r(b * s), ZERO, ZERO]),
            ComplexMatrix::from_row_major(vec![ZERO, ZERO, r(a * s), ZERO]),
        ],
    }
}

/// All 64 products `G_ijk = E_i^A ⊗ E_j^B ⊗ E_k^C`, ordered by `(i, j, k)`.
pub fn three_qubit_kraus(params: &ReservoirParams) -> Vec<ComplexMatrix> {
    let [ka, kb, kc] = Qubit::ALL.map(|q| single_qubit_kraus(params, q));
    let mut out = Vec::with_capacity(64);
    for ea in &ka.ops {
        for eb in &kb.ops {
            for ec in &kc.ops {
                out.push(tensor3(ea, eb, ec));
            }
        }
    }
    out
}

/// `ρ(t) = Σ_ijk G_ijk ρ(0) G_ijk†`, accumulated term by term.
pub fn apply_channel(rho0: &DensityMatrix, params: &ReservoirParams) -> DensityMatrix {
    let mut out = ComplexMatrix::zeros(8);
    for g in three_qubit_kraus(params) {
        if g.max_abs() == 0.0 {
            continue;
        }
        out += &g.sandwich(rho0);
    }
    DensityMatrix::new_unchecked(out)
}

/// Same map as [`apply_channel`], applied one qubit at a time.
pub fn apply_channel_factorized(rho0: &DensityMatrix, params: &ReservoirParams) -> DensityMatrix {
    let mut rho = rho0.matrix().clone();
    for q in Qubit::ALL {
        let kraus = single_qubit_kraus(params, q);
        let mut next = ComplexMatrix::zeros(8);
        for e in &kraus.ops {
            if e.max_abs() == 0.0 {
                continue;
            }
            next += &local_sandwich(e, q, &rho);
        }
        rho = next;
    }
    DensityMatrix::new_unchecked(rho)
}

/// `dρ/dt = ½ Σ_{K,m} γ_K (2LρL† − L†Lρ − ρL†L)` with
/// `L_{K,1} = √(n̄+1) σ_K⁻` and `L_{K,2} = √n̄ σ_K⁺`.
pub fn lindblad_rhs(rho: &ComplexMatrix, params: &ReservoirParams) -> ComplexMatrix {
    let (r_dec, r_exc) = params.temperature.lindblad_rates();
    let ladders = [(sigma_minus(), r_dec), (sigma_plus(), r_exc)];
    let mut out = ComplexMatrix::zeros(8);
    for q in Qubit::ALL {
        let gamma = params.gamma[q.index()];
        for (op, rate) in &ladders {
            let k = gamma * rate;
            if k == 0.0 {
                continue;
            }
            let ldl = op.adjoint().matmul(op);
            let jump = local_sandwich(op, q, rho).scale_real(2.0);
            let left = local_left(&ldl, q, rho);
            let right = local_right(rho, &ldl, q);
            out += &(&(&jump - &left) - &right).scale_real(0.5 * k);
        }
    }
    out
}

/// Fixed-step classical RK4 integration of [`lindblad_rhs`] from 0 to `params.time()`.
pub fn lindblad_integrate(
    rho0: &DensityMatrix,
    params: &ReservoirParams,
    steps: usize,
) -> Result<DensityMatrix> {
    if steps == 0 {
        return Err(Error::InvalidParams("steps must be >= 1".into()));
    }
    let h = params.time() / steps as f64;
    let mut rho = rho0.matrix().clone();
    for _ in 0..steps {
        let k1 = lindblad_rhs(&rho, params);
        let k2 = lindblad_rhs(&(&rho + &k1.scale_real(0.5 * h)), params);
        let k3 = lindblad_rhs(&(&rho + &k2.scale_real(0.5 * h)), params);
        let k4 = lindblad_rhs(&(&rho + &k3.scale_real(h)), params);
        let mut incr = k1;
        incr += &k2.scale_real(2.0);
        incr += &k3.scale_real(2.0);
        incr += &k4;
        rho += &incr.scale_real(h / 6.0);
    }
    DensityMatrix::new(rho)
}
