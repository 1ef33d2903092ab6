//! Three-qubit density matrices and the two initial states.

use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};
use crate::qmat::{hermitian_eigenvalues, ComplexMatrix, C64};

const HERMITIAN_TOL: f64 = 1e-12;
const TRACE_TOL: f64 = 1e-12;
const POSITIVITY_TOL: f64 = 1e-10;
const NORM_TOL: f64 = 1e-10;
const REAL_ELEMENT_TOL: f64 = 1e-10;

/// An 8×8 Hermitian, unit-trace, positive semidefinite matrix.
#[derive(Clone, PartialEq)]
pub struct DensityMatrix(ComplexMatrix);

impl DensityMatrix {
    /// Validates `m` against the density-matrix invariants.
    pub fn new(m: ComplexMatrix) -> Result<Self> {
        if m.dim() != 8 {
            return Err(Error::InvalidState(format!("dimension {} != 8", m.dim())));
        }
        let defect = m.hermiticity_defect();
        if defect > HERMITIAN_TOL {
            return Err(Error::InvalidState(format!("not Hermitian (defect {defect:e})")));
        }
        let tr = m.trace();
        if (tr.re - 1.0).abs() > TRACE_TOL || tr.im.abs() > TRACE_TOL {
            return Err(Error::InvalidState(format!("trace {tr} != 1")));
        }
        let min = hermitian_eigenvalues(&m)?.min();
        if min < -POSITIVITY_TOL {
            return Err(Error::InvalidState(format!("negative eigenvalue {min:e}")));
        }
        Ok(DensityMatrix(m))
    }

    /// Wraps a matrix the caller knows to be a valid state (e.g. the output
    /// of a CPTP map applied to a valid state).
    pub(crate) fn new_unchecked(m: ComplexMatrix) -> Self {
        debug_assert_eq!(m.dim(), 8);
        DensityMatrix(m)
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.0
    }

    /// `tr ρ²`
    pub fn purity(&self) -> f64 {
        self.0.matmul(&self.0).trace().re
    }

    /// The element `ρ^{ij}` with 1-based indices, required to be real.
    pub fn real_element(&self, row: usize, col: usize) -> Result<f64> {
        let z = self.0[(row - 1, col - 1)];
        if z.im.abs() > REAL_ELEMENT_TOL {
            return Err(Error::ComplexElement {
                row,
                col,
                imag: z.im,
            });
        }
        Ok(z.re)
    }

    /// `I / 8`
    pub fn maximally_mixed() -> Self {
        DensityMatrix(ComplexMatrix::identity(8).scale_real(0.125))
    }

    /// The projector onto the basis ket with 0-based index `index`.
    pub fn basis(index: usize) -> Self {
        assert!(index < 8);
        DensityMatrix(ComplexMatrix::from_fn(8, |r, c| {
            if r == index && c == index {
                C64::new(1.0, 0.0)
            } else {
                C64::new(0.0, 0.0)
            }
        }))
    }
}

impl Deref for DensityMatrix {
    type Target = ComplexMatrix;

    fn deref(&self) -> &ComplexMatrix {
        &self.0
    }
}

impl AsRef<ComplexMatrix> for DensityMatrix {
    fn as_ref(&self) -> &ComplexMatrix {
        &self.0
    }
}

impl fmt::Debug for DensityMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DensityMatrix({:?})", self.0)
    }
}

/// `|ψ⟩⟨ψ|` for a normalized three-qubit ket.
pub fn pure_state(amplitudes: &[C64; 8]) -> Result<DensityMatrix> {
    let norm2: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
    if (norm2 - 1.0).abs() > NORM_TOL {
        return Err(Error::NotNormalized(norm2));
    }
    Ok(DensityMatrix(ComplexMatrix::outer(amplitudes)))
}

/// `(|000⟩ + |111⟩)/√2`
pub fn ghz_state() -> DensityMatrix {
    let h = C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let z = C64::new(0.0, 0.0);
    pure_state(&[h, z, z, z, z, z, z, h]).expect("GHZ ket is normalized")
}

/// `(√2|001⟩ + |010⟩ + |100⟩)/2`, the √2-weighted W-class ket.
pub fn w_state() -> DensityMatrix {
    let z = C64::new(0.0, 0.0);
    let half = C64::new(0.5, 0.0);
    let heavy = C64::new(std::f64::consts::SQRT_2 / 2.0, 0.0);
    pure_state(&[z, heavy, half, z, half, z, z, z]).expect("W ket is normalized")
}

/// Which initial state a trajectory starts from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StateBranch {
    Ghz,
    W,
}

impl StateBranch {
    pub fn initial_state(self) -> DensityMatrix {
        match self {
            StateBranch::Ghz => ghz_state(),
            StateBranch::W => w_state(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            StateBranch::Ghz => "ghz",
            StateBranch::W => "w",
        }
    }
}

impl fmt::Display for StateBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for StateBranch {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "ghz" => Ok(StateBranch::Ghz),
            "w" => Ok(StateBranch::W),
            other => Err(format!("unknown branch '{other}' (expected ghz or w)")),
        }
    }
}
