//! Average teleportation fidelity of the decayed GHZ and W channels.
//!
//! Only the reduced element-combination formulas are evaluated; elements
//! are 1-based `ρ^{ij}` labels in the `|abc⟩ ↦ 4a+2b+c+1` basis.

use std::f64::consts::SQRT_2;

use crate::channel::{ReservoirParams, Temperature};
use crate::error::Result;
use crate::states::DensityMatrix;

/// Best fidelity achievable with classical communication alone.
pub const CLASSICAL_FIDELITY: f64 = 2.0 / 3.0;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FidelityValue {
    pub f_av: f64,
    pub classical_margin: f64,
}

impl FidelityValue {
    pub fn new(f_av: f64) -> Self {
        FidelityValue {
            f_av,
            classical_margin: f_av - CLASSICAL_FIDELITY,
        }
    }

    pub fn is_nonclassical(&self) -> bool {
        self.classical_margin > 0.0
    }
}

/// `(1 + ρ^{11+44+55+88} + 2ρ^{18}) / 3`
pub fn fidelity_ghz(rho: &DensityMatrix) -> Result<FidelityValue> {
    let e = |r, c| rho.real_element(r, c);
    let diag = e(1, 1)? + e(4, 4)? + e(5, 5)? + e(8, 8)?;
    Ok(FidelityValue::new((1.0 + diag + 2.0 * e(1, 8)?) / 3.0))
}

/// `(1 + ρ^{22+33+44+88+35−46} + 2√2 ρ^{23}) / 3`
pub fn fidelity_w(rho: &DensityMatrix) -> Result<FidelityValue> {
    let e = |r, c| rho.real_element(r, c);
    let combo = e(2, 2)? + e(3, 3)? + e(4, 4)? + e(8, 8)? + e(3, 5)? - e(4, 6)?;
    Ok(FidelityValue::new((1.0 + combo + 2.0 * SQRT_2 * e(2, 3)?) / 3.0))
}

/// `1/2 + p³/3 + p⁴/6 + (1−p²)² / (6(2n̄+1)²)`
pub fn analytic_fidelity_ghz(params: &ReservoirParams) -> Result<FidelityValue> {
    let p = params.uniform_decay_factor()?;
    let thermal = match params.temperature() {
        Temperature::Finite(n) => (1.0 - p * p).powi(2) / (6.0 * (2.0 * n + 1.0).powi(2)),
        Temperature::Infinite => 0.0,
    };
    Ok(FidelityValue::new(0.5 + p.powi(3) / 3.0 + p.powi(4) / 6.0 + thermal))
}

/// `5p⁴/6 − p²/2 + 2/3`, the W-channel fidelity at zero temperature.
pub fn zero_temperature_fidelity_w(p: f64) -> f64 {
    5.0 * p.powi(4) / 6.0 - p * p / 2.0 + 2.0 / 3.0
}
