//! Svetlichny and WWZB Bell operators and their maximal violation.
//!
//! Qubit A measures along a fixed pair of Pauli axes (`σ_y, σ_x` for the
//! GHZ branch, `σ_z, σ_x` for the W branch). Qubits B and C measure the
//! same pair rotated by their own angle:
//!
//! ```text
//! M_K  = cos θ_K M_A − sin θ_K M'_A
//! M'_K = sin θ_K M_A + cos θ_K M'_A
//! ```
//!
//! Every expectation value is then a bilinear form in `(cos θ_B, sin θ_B)`
//! and `(cos θ_C, sin θ_C)`, which is what [`AngleForm`] stores.

use std::f64::consts::{PI, SQRT_2, TAU};
use std::fmt;
use std::str::FromStr;

use crate::channel::{apply_channel, ReservoirParams};
use crate::error::Result;
use crate::qmat::{expectation, pauli, tensor3, ComplexMatrix};
use crate::states::{w_state, DensityMatrix, StateBranch};

/// Qubit-A measurement axes `(M_A, M'_A)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AxisPair {
    /// `M_A = σ_y`, `M'_A = σ_x`
    YX,
    /// `M_A = σ_z`, `M'_A = σ_x`
    ZX,
}

impl AxisPair {
    pub fn for_branch(branch: StateBranch) -> Self {
        match branch {
            StateBranch::Ghz => AxisPair::YX,
            StateBranch::W => AxisPair::ZX,
        }
    }

    fn vectors(self) -> ([f64; 3], [f64; 3]) {
        match self {
            AxisPair::YX => ([0.0, 1.0, 0.0], [1.0, 0.0, 0.0]),
            AxisPair::ZX => ([0.0, 0.0, 1.0], [1.0, 0.0, 0.0]),
        }
    }
}

/// Bloch directions of a party's unprimed and primed observables.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PartySettings {
    pub unprimed: [f64; 3],
    pub primed: [f64; 3],
}

impl PartySettings {
    fn rotated(axes: AxisPair, theta: f64) -> Self {
        let (a, ap) = axes.vectors();
        let (s, c) = theta.sin_cos();
        PartySettings {
            unprimed: std::array::from_fn(|i| c * a[i] - s * ap[i]),
            primed: std::array::from_fn(|i| s * a[i] + c * ap[i]),
        }
    }

    fn pick(&self, primed: bool) -> [f64; 3] {
        if primed {
            self.primed
        } else {
            self.unprimed
        }
    }

    pub fn operators(&self) -> [ComplexMatrix; 2] {
        [pauli::along(self.unprimed), pauli::along(self.primed)]
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MeasurementFrame {
    pub axes: AxisPair,
    pub theta_b: f64,
    pub theta_c: f64,
}

impl MeasurementFrame {
    pub fn new(axes: AxisPair, theta_b: f64, theta_c: f64) -> Self {
        MeasurementFrame {
            axes,
            theta_b,
            theta_c,
        }
    }

    /// Settings of parties A, B, C.
    pub fn settings(&self) -> [PartySettings; 3] {
        [
            PartySettings::rotated(self.axes, 0.0),
            PartySettings::rotated(self.axes, self.theta_b),
            PartySettings::rotated(self.axes, self.theta_c),
        ]
    }
}

/// `[[M_A, M'_A], [M_B, M'_B], [M_C, M'_C]]` as 2×2 matrices.
pub fn build_measurements(frame: &MeasurementFrame) -> [[ComplexMatrix; 2]; 3] {
    frame.settings().map(|s| s.operators())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WwzbClass {
    P1,
    P2,
    P3,
    P4,
    P5,
}

impl WwzbClass {
    pub const ALL: [WwzbClass; 5] = [
        WwzbClass::P1,
        WwzbClass::P2,
        WwzbClass::P3,
        WwzbClass::P4,
        WwzbClass::P5,
    ];
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BellQuantity {
    Svetlichny,
    Wwzb(WwzbClass),
}

impl BellQuantity {
    pub const ALL: [BellQuantity; 6] = [
        BellQuantity::Svetlichny,
        BellQuantity::Wwzb(WwzbClass::P1),
        BellQuantity::Wwzb(WwzbClass::P2),
        BellQuantity::Wwzb(WwzbClass::P3),
        BellQuantity::Wwzb(WwzbClass::P4),
        BellQuantity::Wwzb(WwzbClass::P5),
    ];

    /// Local-realistic bound: 4 for Svetlichny, 2 for every WWZB class.
    pub fn threshold(self) -> f64 {
        match self {
            BellQuantity::Svetlichny => 4.0,
            BellQuantity::Wwzb(_) => 2.0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BellQuantity::Svetlichny => "svetlichny",
            BellQuantity::Wwzb(WwzbClass::P1) => "wwzb_p1",
            BellQuantity::Wwzb(WwzbClass::P2) => "wwzb_p2",
            BellQuantity::Wwzb(WwzbClass::P3) => "wwzb_p3",
            BellQuantity::Wwzb(WwzbClass::P4) => "wwzb_p4",
            BellQuantity::Wwzb(WwzbClass::P5) => "wwzb_p5",
        }
    }

    fn terms(self) -> &'static [Term] {
        match self {
            BellQuantity::Svetlichny => SVETLICHNY,
            BellQuantity::Wwzb(WwzbClass::P1) => P1,
            BellQuantity::Wwzb(WwzbClass::P2) => P2,
            BellQuantity::Wwzb(WwzbClass::P3) => P3,
            BellQuantity::Wwzb(WwzbClass::P4) => P4,
            BellQuantity::Wwzb(WwzbClass::P5) => P5,
        }
    }
}

impl fmt::Display for BellQuantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BellQuantity {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        BellQuantity::ALL
            .into_iter()
            .find(|q| q.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown Bell quantity '{s}'"))
    }
}

/// `coeff · M_A^{(')} M_B^{(')} M_C^{(')}`, `primed[k]` selecting the primed
/// observable of party k.
struct Term {
    coeff: f64,
    primed: [bool; 3],
}

const fn t(coeff: f64, a: bool, b: bool, c: bool) -> Term {
    Term {
        coeff,
        primed: [a, b, c],
    }
}

const U: bool = false;
const P: bool = true;

static SVETLICHNY: &[Term] = &[
    t(1.0, U, U, U),
    t(1.0, U, U, P),
    t(1.0, U, P, U),
    t(1.0, P, U, U),
    t(-1.0, P, P, P),
    t(-1.0, P, P, U),
    t(-1.0, P, U, P),
    t(-1.0, U, P, P),
];

static P1: &[Term] = &[t(2.0, U, U, U)];

static P2: &[Term] = &[
    t(-0.5, U, U, U),
    t(0.5, U, U, P),
    t(0.5, U, P, U),
    t(0.5, P, U, U),
    t(0.5, U, P, P),
    t(0.5, P, U, P),
    t(0.5, P, P, U),
    t(0.5, P, P, P),
];

// [M_A(M_B + M'_B) + M'_A(M_B − M'_B)] M_C
static P3: &[Term] = &[
    t(1.0, U, U, U),
    t(1.0, U, P, U),
    t(1.0, P, U, U),
    t(-1.0, P, P, U),
];

// M_A M_B (M_C + M'_C) − M'_A M'_B (M_C − M'_C)
static P4: &[Term] = &[
    t(1.0, U, U, U),
    t(1.0, U, U, P),
    t(-1.0, P, P, U),
    t(1.0, P, P, P),
];

static P5: &[Term] = &[
    t(1.0, U, U, P),
    t(1.0, U, P, U),
    t(1.0, P, U, U),
    t(-1.0, P, P, P),
];

pub fn bell_operator(quantity: BellQuantity, frame: &MeasurementFrame) -> ComplexMatrix {
    let ops = build_measurements(frame);
    let mut out = ComplexMatrix::zeros(8);
    for term in quantity.terms() {
        let [a, b, c] = term.primed.map(usize::from);
        out += &tensor3(&ops[0][a], &ops[1][b], &ops[2][c]).scale_real(term.coeff);
    }
    out
}

pub fn svetlichny_operator(frame: &MeasurementFrame) -> ComplexMatrix {
    bell_operator(BellQuantity::Svetlichny, frame)
}

pub fn wwzb_operator(class: WwzbClass, frame: &MeasurementFrame) -> ComplexMatrix {
    bell_operator(BellQuantity::Wwzb(class), frame)
}

/// `T_abc = tr[(σ_a ⊗ σ_b ⊗ σ_c) ρ]` for `a, b, c ∈ {x, y, z}`.
#[derive(Clone, Debug, PartialEq)]
pub struct CorrelationTensor {
    t: [[[f64; 3]; 3]; 3],
}

impl CorrelationTensor {
    pub fn from_state(rho: &DensityMatrix) -> Result<Self> {
        let s = pauli::all();
        let mut t = [[[0.0; 3]; 3]; 3];
        for (a, sa) in s.iter().enumerate() {
            for (b, sb) in s.iter().enumerate() {
                for (c, sc) in s.iter().enumerate() {
                    t[a][b][c] = expectation(&tensor3(sa, sb, sc), rho)?;
                }
            }
        }
        Ok(CorrelationTensor { t })
    }

    /// `⟨(n_A·σ) ⊗ (n_B·σ) ⊗ (n_C·σ)⟩`
    pub fn correlator(&self, na: [f64; 3], nb: [f64; 3], nc: [f64; 3]) -> f64 {
        let mut acc = 0.0;
        for a in 0..3 {
            if na[a] == 0.0 {
                continue;
            }
            for b in 0..3 {
                if nb[b] == 0.0 {
                    continue;
                }
                for c in 0..3 {
                    acc += na[a] * nb[b] * nc[c] * self.t[a][b][c];
                }
            }
        }
        acc
    }

    /// Expectation of a Bell operator built from arbitrary party settings.
    pub fn bell_expectation(&self, quantity: BellQuantity, settings: &[PartySettings; 3]) -> f64 {
        quantity
            .terms()
            .iter()
            .map(|term| {
                let [a, b, c] = term.primed;
                term.coeff
                    * self.correlator(settings[0].pick(a), settings[1].pick(b), settings[2].pick(c))
            })
            .sum()
    }
}

/// `⟨B⟩` for a frame, through the correlation tensor.
pub fn frame_expectation(quantity: BellQuantity, corr: &CorrelationTensor, frame: &MeasurementFrame) -> f64 {
    corr.bell_expectation(quantity, &frame.settings())
}

/// `⟨B⟩(θ_B, θ_C) = Σ_ij k_ij u_i(θ_B) u_j(θ_C)` with `u = (cos, sin)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AngleForm {
    pub k: [[f64; 2]; 2],
}

impl AngleForm {
    pub fn new(quantity: BellQuantity, corr: &CorrelationTensor, axes: AxisPair) -> Self {
        let (a, ap) = axes.vectors();
        let neg = |v: [f64; 3]| v.map(|x| -x);
        // coefficient of cos θ and of sin θ in (M_K, M'_K)
        let parts = [
            PartySettings {
                unprimed: a,
                primed: ap,
            },
            PartySettings {
                unprimed: neg(ap),
                primed: a,
            },
        ];
        let party_a = PartySettings {
            unprimed: a,
            primed: ap,
        };
        let mut k = [[0.0; 2]; 2];
        for (i, pb) in parts.iter().enumerate() {
            for (j, pc) in parts.iter().enumerate() {
                k[i][j] = corr.bell_expectation(quantity, &[party_a, *pb, *pc]);
            }
        }
        AngleForm { k }
    }

    pub fn eval(&self, theta_b: f64, theta_c: f64) -> f64 {
        let (sb, cb) = theta_b.sin_cos();
        let (sc, cc) = theta_c.sin_cos();
        self.k[0][0] * cb * cc + self.k[0][1] * cb * sc + self.k[1][0] * sb * cc + self.k[1][1] * sb * sc
    }

    /// `max |⟨B⟩|` over all angles: the largest singular value of `k`.
    pub fn exact_max_abs(&self) -> f64 {
        let [[a, b], [c, d]] = self.k;
        0.5 * ((a + d).hypot(b - c) + (a - d).hypot(b + c))
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ViolationReport {
    pub quantity: BellQuantity,
    /// `(θ_B, θ_C)` in `[0, 2π)²`
    pub best_angles: (f64, f64),
    pub max_abs_expectation: f64,
    /// `max{max_abs_expectation − threshold, 0}`, zero up to [`VIOLATION_EPS`]
    pub violation: f64,
}

impl ViolationReport {
    /// `max_abs_expectation − threshold`, negative when not violated.
    pub fn signed_excess(&self) -> f64 {
        self.max_abs_expectation - self.quantity.threshold()
    }
}

/// Excesses at or below this are rounding noise, not violation.
pub const VIOLATION_EPS: f64 = 1e-12;

fn clipped_violation(value: f64, quantity: BellQuantity) -> f64 {
    let excess = value - quantity.threshold();
    if excess > VIOLATION_EPS {
        excess
    } else {
        0.0
    }
}

/// Grid spacing for the coarse angle scan.
pub const GRID_STEP: f64 = PI / 60.0;
/// Angle tolerance of the golden-section refinement.
pub const ANGLE_TOL: f64 = 1e-8;

/// Maximizes `|⟨B⟩|` over `(θ_B, θ_C)` with qubit A on the given axes.
pub fn maximize_violation(rho: &DensityMatrix, quantity: BellQuantity, axes: AxisPair) -> Result<ViolationReport> {
    let corr = CorrelationTensor::from_state(rho)?;
    Ok(maximize_form(&AngleForm::new(quantity, &corr, axes), quantity))
}

/// Coarse grid followed by coordinate-wise golden-section refinement.
pub fn maximize_form(form: &AngleForm, quantity: BellQuantity) -> ViolationReport {
    let n = (TAU / GRID_STEP).round() as usize;
    let objective = |tb: f64, tc: f64| form.eval(tb, tc).abs();

    let trig: Vec<(f64, f64)> = (0..n).map(|i| (i as f64 * GRID_STEP).sin_cos()).collect();
    let [[k00, k01], [k10, k11]] = form.k;

    // Iterating θ_B outer, θ_C inner and replacing only on a clear
    // improvement keeps the lexicographically smallest of equal maxima.
    let mut best = (0.0, 0.0, objective(0.0, 0.0));
    for (i, &(sb, cb)) in trig.iter().enumerate() {
        let (rc, rs) = (k00 * cb + k10 * sb, k01 * cb + k11 * sb);
        for (j, &(sc, cc)) in trig.iter().enumerate() {
            let v = (rc * cc + rs * sc).abs();
            if v > best.2 + 1e-12 {
                best = (i as f64 * GRID_STEP, j as f64 * GRID_STEP, v);
            }
        }
    }

    // ⟨B⟩ splits into a sinusoid in θ_B + θ_C plus one in θ_B − θ_C, so
    // the diagonals are searched too; otherwise near-degenerate forms
    // leave a flat ridge that coordinate steps only zigzag along.
    const DIRECTIONS: [(f64, f64); 4] = [(1.0, 0.0), (0.0, 1.0), (1.0, 1.0), (1.0, -1.0)];
    let (mut tb, mut tc, mut value) = best;
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for (db, dc) in DIRECTIONS {
            let line = |x: f64| objective(tb + x * db, tc + x * dc);
            let x = golden_max(line, -GRID_STEP, GRID_STEP, 0.1 * ANGLE_TOL);
            let candidate = line(x);
            if candidate > value {
                tb += x * db;
                tc += x * dc;
                value = candidate;
                moved = moved.max(x.abs());
            }
        }
        if moved < ANGLE_TOL {
            break;
        }
    }

    ViolationReport {
        quantity,
        best_angles: (tb.rem_euclid(TAU), tc.rem_euclid(TAU)),
        max_abs_expectation: value,
        violation: clipped_violation(value, quantity),
    }
}

/// Golden-section search for a maximum of a unimodal `f` on `[lo, hi]`.
fn golden_max(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    while hi - lo > tol {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        }
    }
    0.5 * (lo + hi)
}

/// Result of the unrestricted direction search.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExtendedReport {
    pub quantity: BellQuantity,
    pub settings: [PartySettings; 3],
    pub max_abs_expectation: f64,
    pub violation: f64,
}

/// Maximizes `|⟨B⟩|` over arbitrary Bloch directions for all six
/// observables, by alternating exact single-direction updates from several
/// starting points. A lower bound on the true optimum.
pub fn maximize_violation_extended(rho: &DensityMatrix, quantity: BellQuantity) -> Result<ExtendedReport> {
    let corr = CorrelationTensor::from_state(rho)?;

    let mut starts: Vec<[PartySettings; 3]> = Vec::new();
    for axes in [AxisPair::YX, AxisPair::ZX] {
        let r = maximize_form(&AngleForm::new(quantity, &corr, axes), quantity);
        starts.push(MeasurementFrame::new(axes, r.best_angles.0, r.best_angles.1).settings());
    }
    // deterministic spread of extra starts on the sphere
    let golden = PI * (3.0 - 5f64.sqrt());
    let dir = |k: usize| {
        let z = 1.0 - 2.0 * ((k % 64) as f64 + 0.5) / 64.0;
        let r = (1.0 - z * z).sqrt();
        let phi = golden * k as f64;
        [r * phi.cos(), r * phi.sin(), z]
    };
    for s in 0..12 {
        let base = 6 * s + 1;
        starts.push(std::array::from_fn(|p| PartySettings {
            unprimed: dir(base + 2 * p),
            primed: dir(base + 2 * p + 7),
        }));
    }

    let mut best: Option<ExtendedReport> = None;
    for start in starts {
        let (settings, value) = alternating_ascent(&corr, quantity, start);
        if best.as_ref().is_none_or(|b| value > b.max_abs_expectation) {
            best = Some(ExtendedReport {
                quantity,
                settings,
                max_abs_expectation: value,
                violation: clipped_violation(value, quantity),
            });
        }
    }
    Ok(best.expect("at least one start"))
}

fn alternating_ascent(
    corr: &CorrelationTensor,
    quantity: BellQuantity,
    mut settings: [PartySettings; 3],
) -> ([PartySettings; 3], f64) {
    let sign = if corr.bell_expectation(quantity, &settings) >= 0.0 { 1.0 } else { -1.0 };
    let mut value = sign * corr.bell_expectation(quantity, &settings);
    for _ in 0..500 {
        for party in 0..3 {
            for primed in [false, true] {
                // the objective is linear in each single direction
                let mut grad = [0.0; 3];
                for (axis, g) in grad.iter_mut().enumerate() {
                    let mut trial = settings;
                    let mut e = [0.0; 3];
                    e[axis] = 1.0;
                    if primed {
                        trial[party].primed = e;
                    } else {
                        trial[party].unprimed = e;
                    }
                    *g = sign * corr.bell_expectation(quantity, &trial);
                }
                let norm = grad.iter().map(|x| x * x).sum::<f64>().sqrt();
                if norm > 0.0 {
                    let v = grad.map(|x| x / norm);
                    if primed {
                        settings[party].primed = v;
                    } else {
                        settings[party].unprimed = v;
                    }
                }
            }
        }
        let next = sign * corr.bell_expectation(quantity, &settings);
        let done = next - value < 1e-14;
        value = value.max(next);
        if done {
            break;
        }
    }
    (settings, value)
}

/// Printed closed forms of `⟨B⟩` along each branch's trajectory.
///
/// GHZ: a function of `p` and `θ_B + θ_C` only. W: combinations of the
/// elements of the evolved `ρ_W(t)` (real, and symmetric under exchanging
/// qubits A and B when the rates are equal).
pub fn closed_form_expectation(
    branch: StateBranch,
    quantity: BellQuantity,
    params: &ReservoirParams,
    theta_b: f64,
    theta_c: f64,
) -> Result<f64> {
    match branch {
        StateBranch::Ghz => {
            let p3 = params.uniform_decay_factor()?.powi(3);
            let (s, c) = (theta_b + theta_c).sin_cos();
            Ok(match quantity {
                BellQuantity::Svetlichny => 4.0 * p3 * (s - c),
                BellQuantity::Wwzb(WwzbClass::P1 | WwzbClass::P4) => 2.0 * p3 * s,
                BellQuantity::Wwzb(WwzbClass::P2) => -p3 * (2.0 * s + c),
                BellQuantity::Wwzb(WwzbClass::P3) => 2.0 * p3 * (s - c),
                BellQuantity::Wwzb(WwzbClass::P5) => -4.0 * p3 * c,
            })
        }
        StateBranch::W => {
            params.uniform_gamma()?;
            let rho = apply_channel(&w_state(), params);
            w_closed_form(&rho, quantity, theta_b, theta_c)
        }
    }
}

fn w_closed_form(rho: &DensityMatrix, quantity: BellQuantity, tb: f64, tc: f64) -> Result<f64> {
    // ρ^{ij ± kl ± ...} with 1-based two-digit labels
    let combo = |terms: &[(f64, usize)]| -> Result<f64> {
        terms
            .iter()
            .map(|&(sign, ij)| Ok(sign * rho.real_element(ij / 10, ij % 10)?))
            .sum()
    };
    let pops = combo(&[(1.0, 11), (1.0, 44), (1.0, 66), (1.0, 77)])?;
    let long = pops
        + combo(&[
            (1.0, 46),
            (1.0, 47),
            (1.0, 67),
            (-1.0, 23),
            (-1.0, 25),
            (-1.0, 35),
        ])?;
    let c23_47 = combo(&[(1.0, 23), (-1.0, 47)])?;
    let (sbc, cbc) = (tb + tc).sin_cos();
    let (sb, cb) = tb.sin_cos();
    let (sc, cc) = tc.sin_cos();
    let q = PI / 4.0;

    Ok(match quantity {
        BellQuantity::Svetlichny => (2.0 * long - 1.0) * (sbc + cbc),
        BellQuantity::Wwzb(WwzbClass::P1) => (4.0 * pops - 2.0) * cb * cc + 4.0 * c23_47 * sb * sc,
        BellQuantity::Wwzb(WwzbClass::P2) => {
            combo(&[(1.0, 25), (1.0, 35), (-1.0, 46), (-1.0, 47)])? * cbc
                + combo(&[(1.0, 25), (-1.0, 35), (1.0, 46), (-1.0, 47)])? * (tb - tc).sin()
                + (combo(&[(1.0, 23), (-1.0, 67)])? - pops + 0.5) * (cbc - sbc)
        }
        BellQuantity::Wwzb(WwzbClass::P3) => {
            let x_plus = SQRT_2 * (tb + q).sin() * cc;
            let x_minus = SQRT_2 * (tb - q).sin() * sc;
            (2.0 * (pops + combo(&[(-1.0, 35), (1.0, 46)])?) - 1.0) * x_plus + 4.0 * c23_47 * x_minus
        }
        BellQuantity::Wwzb(WwzbClass::P4) => {
            let y_plus = SQRT_2 * (tc + q).sin() * cb;
            let y_minus = SQRT_2 * (tc - q).sin() * cb;
            (2.0 * pops - 1.0) * y_plus + 2.0 * combo(&[(1.0, 35), (-1.0, 46)])? * y_minus + 4.0 * c23_47 * sb * sc
        }
        BellQuantity::Wwzb(WwzbClass::P5) => (2.0 * long - 1.0) * sbc,
    })
}

/// Closed-form `max |⟨B⟩|` along the GHZ trajectory: `c · p³` with
/// `c = 4√2, 2, √5, 2√2, 2, 4` for S, P1, ..., P5.
pub fn ghz_max_expectation(quantity: BellQuantity, params: &ReservoirParams) -> Result<f64> {
    let p3 = params.uniform_decay_factor()?.powi(3);
    let c = match quantity {
        BellQuantity::Svetlichny => 4.0 * SQRT_2,
        BellQuantity::Wwzb(WwzbClass::P1 | WwzbClass::P4) => 2.0,
        BellQuantity::Wwzb(WwzbClass::P2) => 5f64.sqrt(),
        BellQuantity::Wwzb(WwzbClass::P3) => 2.0 * SQRT_2,
        BellQuantity::Wwzb(WwzbClass::P5) => 4.0,
    };
    Ok(c * p3)
}

/// `(4+5√2)p⁴ − (2+9√2/2)p² + √2`: max `|⟨S⟩|` for the W channel at zero temperature.
pub fn w_zero_temperature_svetlichny_max(p: f64) -> f64 {
    let p2 = p * p;
    (4.0 + 5.0 * SQRT_2) * p2 * p2 - (2.0 + 4.5 * SQRT_2) * p2 + SQRT_2
}
