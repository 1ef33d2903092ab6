//! Death times, the critical negativity at the fidelity threshold, and the
//! closed-form reference constants.
//!
//! Times are `γτ` with `γ = 1` on every qubit. In the infinite-temperature
//! mode the unit is `n̄γτ` instead.

use std::f64::consts::SQRT_2;
use std::fmt;
use std::str::FromStr;

use crate::bell::{maximize_violation, AxisPair, BellQuantity};
use crate::channel::{apply_channel_factorized, ReservoirParams, Temperature};
use crate::error::{Error, Result};
use crate::measures::{entanglement_margin, tripartite_negativity};
use crate::states::{DensityMatrix, StateBranch};
use crate::teleport::{fidelity_ghz, fidelity_w, CLASSICAL_FIDELITY};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TrackedQuantity {
    Negativity,
    Fidelity,
    Bell(BellQuantity),
}

impl TrackedQuantity {
    pub const ALL: [TrackedQuantity; 8] = [
        TrackedQuantity::Negativity,
        TrackedQuantity::Fidelity,
        TrackedQuantity::Bell(BellQuantity::ALL[0]),
        TrackedQuantity::Bell(BellQuantity::ALL[1]),
        TrackedQuantity::Bell(BellQuantity::ALL[2]),
        TrackedQuantity::Bell(BellQuantity::ALL[3]),
        TrackedQuantity::Bell(BellQuantity::ALL[4]),
        TrackedQuantity::Bell(BellQuantity::ALL[5]),
    ];

    pub fn name(self) -> &'static str {
        match self {
            TrackedQuantity::Negativity => "negativity",
            TrackedQuantity::Fidelity => "fidelity",
            TrackedQuantity::Bell(q) => q.name(),
        }
    }

    /// The value the quantity is compared against: 0, 2/3, or the Bell bound.
    pub fn threshold(self) -> f64 {
        match self {
            TrackedQuantity::Negativity => 0.0,
            TrackedQuantity::Fidelity => CLASSICAL_FIDELITY,
            TrackedQuantity::Bell(q) => q.threshold(),
        }
    }
}

impl fmt::Display for TrackedQuantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TrackedQuantity {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        TrackedQuantity::ALL
            .into_iter()
            .find(|q| q.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                format!("unknown quantity '{s}' (expected negativity, fidelity, svetlichny or wwzb_p1..wwzb_p5)")
            })
    }
}

/// The state at time `tau` with unit rates on all three qubits.
pub fn state_at(branch: StateBranch, temperature: Temperature, tau: f64) -> Result<DensityMatrix> {
    let params = ReservoirParams::new(temperature, [1.0; 3], tau)?;
    Ok(apply_channel_factorized(&branch.initial_state(), &params))
}

/// The plotted value of `quantity` on `rho`: tripartite negativity, `F_av`,
/// or `max |⟨B⟩|` over the branch's measurement frame.
pub fn evaluate(branch: StateBranch, quantity: TrackedQuantity, rho: &DensityMatrix) -> Result<f64> {
    match quantity {
        TrackedQuantity::Negativity => Ok(tripartite_negativity(rho)?.tripartite),
        TrackedQuantity::Fidelity => Ok(fidelity(branch, rho)?),
        TrackedQuantity::Bell(q) => Ok(maximize_violation(rho, q, AxisPair::for_branch(branch))?.max_abs_expectation),
    }
}

/// Signed distance above the threshold. For the negativity this is the
/// smooth [`entanglement_margin`] rather than the clipped negativity.
pub fn signed_margin(branch: StateBranch, quantity: TrackedQuantity, rho: &DensityMatrix) -> Result<f64> {
    match quantity {
        TrackedQuantity::Negativity => entanglement_margin(rho),
        TrackedQuantity::Fidelity => Ok(fidelity(branch, rho)? - CLASSICAL_FIDELITY),
        TrackedQuantity::Bell(q) => {
            Ok(maximize_violation(rho, q, AxisPair::for_branch(branch))?.signed_excess())
        }
    }
}

fn fidelity(branch: StateBranch, rho: &DensityMatrix) -> Result<f64> {
    Ok(match branch {
        StateBranch::Ghz => fidelity_ghz(rho)?.f_av,
        StateBranch::W => fidelity_w(rho)?.f_av,
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CrossingSearch {
    pub window: (f64, f64),
    pub scan_step: f64,
    pub tolerance: f64,
    /// A crossing is only declared once the curve is below `-margin`.
    pub margin: f64,
    /// Curves starting at or below this value report [`Crossing::StartsBelow`].
    pub start_tolerance: f64,
}

impl Default for CrossingSearch {
    fn default() -> Self {
        CrossingSearch {
            window: (0.0, 20.0),
            scan_step: 1e-3,
            tolerance: 1e-10,
            margin: 0.0,
            start_tolerance: 1e-12,
        }
    }
}

impl CrossingSearch {
    pub fn for_quantity(quantity: TrackedQuantity) -> Self {
        let margin = match quantity {
            // rounding noise on λ_min is far below this; a true death
            // passes it within a step of the zero
            TrackedQuantity::Negativity => 1e-10,
            _ => 0.0,
        };
        CrossingSearch {
            margin,
            ..Default::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Crossing {
    At(f64),
    /// Positive throughout the window.
    NoneInWindow,
    /// Not above the threshold at the start of the window.
    StartsBelow,
}

/// First downward zero of `curve` in the window: forward scan for a
/// bracket, then bisection on the sign.
pub fn find_crossing(mut curve: impl FnMut(f64) -> Result<f64>, search: &CrossingSearch) -> Result<Crossing> {
    let (lo, hi) = search.window;
    let valid = hi > lo && search.scan_step > 0.0 && search.tolerance > 0.0;
    if !valid {
        return Err(Error::InvalidParams(format!("bad crossing search {search:?}")));
    }
    if curve(lo)? <= search.start_tolerance {
        return Ok(Crossing::StartsBelow);
    }
    let mut last_positive = lo;
    let mut k = 1u64;
    loop {
        let t = (lo + k as f64 * search.scan_step).min(hi);
        let g = curve(t)?;
        if g > 0.0 {
            last_positive = t;
        } else if g <= -search.margin {
            let (mut a, mut b) = (last_positive, t);
            while b - a > search.tolerance {
                let mid = 0.5 * (a + b);
                if curve(mid)? > 0.0 {
                    a = mid;
                } else {
                    b = mid;
                }
            }
            return Ok(Crossing::At(0.5 * (a + b)));
        }
        if t >= hi {
            return Ok(Crossing::NoneInWindow);
        }
        k += 1;
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CriticalReport {
    pub quantity: TrackedQuantity,
    pub crossing: Crossing,
    /// Crossing time; `+∞` without a crossing in the window, NaN when the
    /// quantity never exceeds its threshold.
    pub tau_gamma: f64,
    pub exists: bool,
    /// Tripartite negativity at the fidelity crossing.
    pub n_at_tau: Option<f64>,
}

/// Time at which `quantity` falls to its threshold along the branch.
pub fn critical_time(branch: StateBranch, quantity: TrackedQuantity, temperature: Temperature) -> Result<CriticalReport> {
    critical_time_with(branch, quantity, temperature, &CrossingSearch::for_quantity(quantity))
}

pub fn critical_time_with(
    branch: StateBranch,
    quantity: TrackedQuantity,
    temperature: Temperature,
    search: &CrossingSearch,
) -> Result<CriticalReport> {
    let crossing = find_crossing(
        |tau| signed_margin(branch, quantity, &state_at(branch, temperature, tau)?),
        search,
    )?;
    let (tau_gamma, exists) = match crossing {
        Crossing::At(t) => (t, true),
        Crossing::NoneInWindow => (f64::INFINITY, false),
        Crossing::StartsBelow => (f64::NAN, false),
    };
    let n_at_tau = match (quantity, crossing) {
        (TrackedQuantity::Fidelity, Crossing::At(t)) => {
            Some(tripartite_negativity(&state_at(branch, temperature, t)?)?.tripartite)
        }
        _ => None,
    };
    Ok(CriticalReport {
        quantity,
        crossing,
        tau_gamma,
        exists,
        n_at_tau,
    })
}

/// Tripartite negativity at the time the fidelity reaches 2/3.
pub fn critical_negativity(branch: StateBranch, temperature: Temperature) -> Result<f64> {
    critical_time(branch, TrackedQuantity::Fidelity, temperature)?
        .n_at_tau
        .ok_or(Error::NoCrossing("fidelity"))
}

/// Every critical time of one branch at one temperature.
#[derive(Clone, Debug, PartialEq)]
pub struct CriticalProfile {
    pub branch: StateBranch,
    pub temperature: Temperature,
    /// Svetlichny, then WWZB P1..P5.
    pub bell: [CriticalReport; 6],
    pub fidelity: CriticalReport,
    pub negativity: CriticalReport,
}

impl CriticalProfile {
    pub fn critical_negativity(&self) -> Option<f64> {
        self.fidelity.n_at_tau
    }
}

pub fn critical_profile(branch: StateBranch, temperature: Temperature) -> Result<CriticalProfile> {
    let mut bell = Vec::with_capacity(6);
    for q in BellQuantity::ALL {
        bell.push(critical_time(branch, TrackedQuantity::Bell(q), temperature)?);
    }
    Ok(CriticalProfile {
        branch,
        temperature,
        bell: bell.try_into().expect("six Bell quantities"),
        fidelity: critical_time(branch, TrackedQuantity::Fidelity, temperature)?,
        negativity: critical_time(branch, TrackedQuantity::Negativity, temperature)?,
    })
}

/// Closed-form critical values, for use as references.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClosedFormConstants {
    /// GHZ `γτ_T` at `n̄ = 0`: `ln[(3+√5)/2]`.
    pub ghz_tau_t_zero: f64,
    /// GHZ `N_c` at `n̄ = 0`: `(2 − √5 + √(197 − 88√5))/4`.
    pub ghz_n_c_zero: f64,
    /// Root in (0, 1) of `p⁴ + 2p³ = 1`.
    pub ghz_infinite_p: f64,
    /// `½(p³ − (1 − p⁴)/4)` at that root.
    pub ghz_infinite_n_c: f64,
    /// `3(2n̄+1)γτ_S` for GHZ: `ln 2`. Also P3.
    pub ghz_svetlichny_scaled: f64,
    /// `3(2n̄+1)γτ` for GHZ P2: `ln(5/4)`.
    pub ghz_p2_scaled: f64,
    /// `3(2n̄+1)γτ` for GHZ P5: `ln 4`.
    pub ghz_p5_scaled: f64,
    /// W `γτ_T` at `n̄ = 0`: `ln(5/3)`.
    pub w_tau_t_zero: f64,
    /// W `γτ_S` at `n̄ = 0`: `ln[(16+20√2)/(4+9√2+√(274+328√2))]`.
    pub w_tau_s_zero: f64,
    /// W `γτ_{B_P5}` at `n̄ = 0`: `ln[(20+8√2)/(9+2√2+√(169+68√2))]`.
    pub w_tau_p5_zero: f64,
}

pub fn closed_form_constants() -> ClosedFormConstants {
    let s5 = 5f64.sqrt();
    let p = ghz_infinite_decay_root();
    ClosedFormConstants {
        ghz_tau_t_zero: ((3.0 + s5) / 2.0).ln(),
        ghz_n_c_zero: (2.0 - s5 + (197.0 - 88.0 * s5).sqrt()) / 4.0,
        ghz_infinite_p: p,
        ghz_infinite_n_c: 0.5 * (p.powi(3) - (1.0 - p.powi(4)) / 4.0),
        ghz_svetlichny_scaled: 2f64.ln(),
        ghz_p2_scaled: 1.25f64.ln(),
        ghz_p5_scaled: 4f64.ln(),
        w_tau_t_zero: (5.0f64 / 3.0).ln(),
        w_tau_s_zero: ((16.0 + 20.0 * SQRT_2) / (4.0 + 9.0 * SQRT_2 + (274.0 + 328.0 * SQRT_2).sqrt())).ln(),
        w_tau_p5_zero: ((20.0 + 8.0 * SQRT_2) / (9.0 + 2.0 * SQRT_2 + (169.0 + 68.0 * SQRT_2).sqrt())).ln(),
    }
}

/// Newton iteration for `p⁴ + 2p³ − 1 = 0` from `p = 1`; the polynomial is
/// convex and increasing on (0, 1], so the iterates decrease monotonically.
fn ghz_infinite_decay_root() -> f64 {
    let mut p = 1.0f64;
    for _ in 0..100 {
        let f = p.powi(4) + 2.0 * p.powi(3) - 1.0;
        let df = 4.0 * p.powi(3) + 6.0 * p * p;
        let next = p - f / df;
        if (next - p).abs() < 1e-16 {
            return next;
        }
        p = next;
    }
    p
}

/// Closed-form GHZ Bell death time `k / (3(2n̄+1))` (`k/6` in the
/// infinite-temperature unit). `None` for P1 and P4, which never exceed 2.
pub fn ghz_bell_death_time(quantity: BellQuantity, temperature: Temperature) -> Option<f64> {
    use crate::bell::WwzbClass::*;
    let c = closed_form_constants();
    let k = match quantity {
        BellQuantity::Svetlichny | BellQuantity::Wwzb(P3) => c.ghz_svetlichny_scaled,
        BellQuantity::Wwzb(P2) => c.ghz_p2_scaled,
        BellQuantity::Wwzb(P5) => c.ghz_p5_scaled,
        BellQuantity::Wwzb(P1 | P4) => return None,
    };
    Some(k / (3.0 * temperature.time_scale()))
}

/// `2√2(a² − 2a + 2)` with `a = 3(2n̄+1)γt/2`: the quadratic expansion of
/// the GHZ Svetlichny maximum `4√2 e^{−a}`.
pub fn short_time_svetlichny(params: &ReservoirParams) -> Result<f64> {
    let gamma = params.uniform_gamma()?;
    let a = 1.5 * params.temperature().time_scale() * gamma * params.time();
    Ok(2.0 * SQRT_2 * (a * a - 2.0 * a + 2.0))
}
