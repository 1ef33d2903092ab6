//! Small dense complex matrices.
//!
//! Everything here is sized for three qubits at most: states and operators
//! are 8×8, single-qubit operators 2×2. Three-qubit matrices use the basis
//! index `4a + 2b + c` for the ket `|abc⟩`, so qubit A is the most
//! significant bit.

use std::fmt;
use std::ops::{Add, AddAssign, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;

pub(crate) const ZERO: C64 = C64::new(0.0, 0.0);
pub(crate) const ONE: C64 = C64::new(1.0, 0.0);

/// Dense square complex matrix, row-major.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<C64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be positive");
        ComplexMatrix {
            dim,
            data: vec![ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |r, c| if r == c { ONE } else { ZERO })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut m = Self::zeros(dim);
        for r in 0..dim {
            for c in 0..dim {
                m.data[r * dim + c] = f(r, c);
            }
        }
        m
    }

    /// Builds a matrix from row-major entries; panics unless `entries.len()`
    /// is a perfect square.
    pub fn from_row_major(entries: Vec<C64>) -> Self {
        let dim = (entries.len() as f64).sqrt().round() as usize;
        assert_eq!(dim * dim, entries.len(), "entry count is not a square");
        ComplexMatrix { dim, data: entries }
    }

    pub fn from_real(dim: usize, entries: &[f64]) -> Self {
        assert_eq!(entries.len(), dim * dim);
        ComplexMatrix {
            dim,
            data: entries.iter().map(|&x| C64::new(x, 0.0)).collect(),
        }
    }

    pub fn diagonal(diag: &[C64]) -> Self {
        Self::from_fn(diag.len(), |r, c| if r == c { diag[r] } else { ZERO })
    }

    pub fn real_diagonal(diag: &[f64]) -> Self {
        Self::from_fn(diag.len(), |r, c| {
            if r == c {
                C64::new(diag[r], 0.0)
            } else {
                ZERO
            }
        })
    }

    /// `|v⟩⟨v|`
    pub fn outer(v: &[C64]) -> Self {
        Self::from_fn(v.len(), |r, c| v[r] * v[c].conj())
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn as_slice(&self) -> &[C64] {
        &self.data
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |r, c| self[(c, r)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |r, c| self[(c, r)])
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn scale(&self, k: C64) -> Self {
        ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().map(|&z| z * k).collect(),
        }
    }

    pub fn scale_real(&self, k: f64) -> Self {
        self.scale(C64::new(k, 0.0))
    }

    pub fn matmul(&self, other: &ComplexMatrix) -> Self {
        assert_eq!(self.dim, other.dim, "matmul dimension mismatch");
        let n = self.dim;
        let mut out = Self::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.data[r * n + k];
                if a == ZERO {
                    continue;
                }
                for c in 0..n {
                    out.data[r * n + c] += a * other.data[k * n + c];
                }
            }
        }
        out
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &ComplexMatrix) -> Self {
        let (n, m) = (self.dim, other.dim);
        Self::from_fn(n * m, |r, c| {
            self[(r / m, c / m)] * other[(r % m, c % m)]
        })
    }

    /// `A ρ A†`
    pub fn sandwich(&self, rho: &ComplexMatrix) -> Self {
        self.matmul(rho).matmul(&self.adjoint())
    }

    pub fn max_abs_diff(&self, other: &ComplexMatrix) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest entrywise deviation from Hermiticity, `max |h_ij - conj(h_ji)|`.
    pub fn hermiticity_defect(&self) -> f64 {
        let n = self.dim;
        let mut worst = 0.0f64;
        for r in 0..n {
            for c in r..n {
                worst = worst.max((self[(r, c)] - self[(c, r)].conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_defect() <= tol
    }

    /// `(h + h†) / 2`
    pub fn hermitian_part(&self) -> Self {
        Self::from_fn(self.dim, |r, c| (self[(r, c)] + self[(c, r)].conj()) * 0.5)
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;

    #[inline]
    fn index(&self, (r, c): (usize, usize)) -> &C64 {
        assert!(r < self.dim && c < self.dim, "index ({r}, {c}) out of range");
        &self.data[r * self.dim + c]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    #[inline]
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut C64 {
        assert!(r < self.dim && c < self.dim, "index ({r}, {c}) out of range");
        &mut self.data[r * self.dim + c]
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim);
        ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim);
        ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl AddAssign<&ComplexMatrix> for ComplexMatrix {
    fn add_assign(&mut self, rhs: &ComplexMatrix) {
        assert_eq!(self.dim, rhs.dim);
        for (a, b) in self.data.iter_mut().zip(&rhs.data) {
            *a += b;
        }
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.matmul(rhs)
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.dim, self.dim)?;
        for r in 0..self.dim {
            write!(f, "  ")?;
            for c in 0..self.dim {
                let z = self[(r, c)];
                write!(f, "{:+.6}{:+.6}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

pub fn tensor_product(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    a.kron(b)
}

/// `a ⊗ b ⊗ c`
pub fn tensor3(a: &ComplexMatrix, b: &ComplexMatrix, c: &ComplexMatrix) -> ComplexMatrix {
    a.kron(b).kron(c)
}

pub mod pauli {
    use super::{ComplexMatrix, C64, ONE, ZERO};

    pub fn identity() -> ComplexMatrix {
        ComplexMatrix::identity(2)
    }

    pub fn x() -> ComplexMatrix {
        ComplexMatrix::from_row_major(vec![ZERO, ONE, ONE, ZERO])
    }

    pub fn y() -> ComplexMatrix {
        let i = C64::new(0.0, 1.0);
        ComplexMatrix::from_row_major(vec![ZERO, -i, i, ZERO])
    }

    pub fn z() -> ComplexMatrix {
        ComplexMatrix::real_diagonal(&[1.0, -1.0])
    }

    /// `[x, y, z]`
    pub fn all() -> [ComplexMatrix; 3] {
        [x(), y(), z()]
    }

    /// `n · σ` for a real 3-vector `n`.
    pub fn along(n: [f64; 3]) -> ComplexMatrix {
        let [x, y, z] = all();
        let mut out = x.scale_real(n[0]);
        out += &y.scale_real(n[1]);
        out += &z.scale_real(n[2]);
        out
    }
}

/// One of the three qubits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Qubit {
    A,
    B,
    C,
}

impl Qubit {
    pub const ALL: [Qubit; 3] = [Qubit::A, Qubit::B, Qubit::C];

    pub fn index(self) -> usize {
        match self {
            Qubit::A => 0,
            Qubit::B => 1,
            Qubit::C => 2,
        }
    }

    /// Bit mask of this qubit inside a three-qubit basis index.
    #[inline]
    pub fn mask(self) -> usize {
        1 << (2 - self.index())
    }

    #[inline]
    fn bit(self, basis: usize) -> usize {
        (basis & self.mask()) >> (2 - self.index())
    }

    #[inline]
    fn with_bit(self, basis: usize, bit: usize) -> usize {
        (basis & !self.mask()) | (bit << (2 - self.index()))
    }
}

impl fmt::Display for Qubit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Qubit::A => "A",
            Qubit::B => "B",
            Qubit::C => "C",
        };
        f.write_str(s)
    }
}

fn assert_three_qubit(m: &ComplexMatrix) {
    assert_eq!(m.dim(), 8, "expected an 8x8 three-qubit matrix");
}

/// Transposes the index of one qubit, leaving the other two untouched.
pub fn partial_transpose(rho: &ComplexMatrix, subsystem: Qubit) -> ComplexMatrix {
    assert_three_qubit(rho);
    let m = subsystem.mask();
    ComplexMatrix::from_fn(8, |r, c| rho[((r & !m) | (c & m), (c & !m) | (r & m))])
}

/// Embeds a single-qubit operator into the three-qubit space.
pub fn lift(op: &ComplexMatrix, qubit: Qubit) -> ComplexMatrix {
    assert_eq!(op.dim(), 2);
    let id = ComplexMatrix::identity(2);
    match qubit {
        Qubit::A => tensor3(op, &id, &id),
        Qubit::B => tensor3(&id, op, &id),
        Qubit::C => tensor3(&id, &id, op),
    }
}

/// `lift(op, qubit) · m` without forming the 8×8 operator.
pub fn local_left(op: &ComplexMatrix, qubit: Qubit, m: &ComplexMatrix) -> ComplexMatrix {
    assert_eq!(op.dim(), 2);
    assert_three_qubit(m);
    ComplexMatrix::from_fn(8, |r, c| {
        let br = qubit.bit(r);
        (0..2)
            .map(|b| op[(br, b)] * m[(qubit.with_bit(r, b), c)])
            .sum()
    })
}

/// `m · lift(op, qubit)` without forming the 8×8 operator.
pub fn local_right(m: &ComplexMatrix, op: &ComplexMatrix, qubit: Qubit) -> ComplexMatrix {
    assert_eq!(op.dim(), 2);
    assert_three_qubit(m);
    ComplexMatrix::from_fn(8, |r, c| {
        let bc = qubit.bit(c);
        (0..2)
            .map(|b| m[(r, qubit.with_bit(c, b))] * op[(b, bc)])
            .sum()
    })
}

/// `lift(op) · m · lift(op)†`
pub fn local_sandwich(op: &ComplexMatrix, qubit: Qubit, m: &ComplexMatrix) -> ComplexMatrix {
    local_right(&local_left(op, qubit, m), &op.adjoint(), qubit)
}

/// Options for the Jacobi eigenvalue iteration.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct JacobiOptions {
    /// Maximum entrywise `|h - h†|` accepted as Hermitian.
    pub hermiticity_tol: f64,
    /// Convergence threshold on the off-diagonal Frobenius norm, relative to
    /// `max(1, ‖h‖_F)`.
    pub off_diagonal_tol: f64,
    pub max_sweeps: usize,
}

impl Default for JacobiOptions {
    fn default() -> Self {
        JacobiOptions {
            hermiticity_tol: 1e-10,
            off_diagonal_tol: 1e-13,
            max_sweeps: 64,
        }
    }
}

/// Real eigenvalues of a Hermitian matrix in ascending order.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianSpectrum {
    eigenvalues: Vec<f64>,
}

impl HermitianSpectrum {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.eigenvalues
    }

    pub fn min(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn max(&self) -> f64 {
        *self.eigenvalues.last().expect("spectrum is never empty")
    }

    pub fn sum(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }

    /// Sum of the eigenvalues below `-eps`; values in `(-eps, 0)` count as zero.
    pub fn negative_sum(&self, eps: f64) -> f64 {
        self.eigenvalues.iter().filter(|&&x| x < -eps).sum()
    }
}

pub fn hermitian_eigenvalues(h: &ComplexMatrix) -> Result<HermitianSpectrum> {
    hermitian_eigenvalues_with(h, &JacobiOptions::default())
}

fn off_diagonal_norm(h: &ComplexMatrix) -> f64 {
    let n = h.dim();
    let mut acc = 0.0;
    for r in 0..n {
        for c in 0..n {
            if r != c {
                acc += h[(r, c)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

/// Cyclic complex Jacobi diagonalization.
///
/// Each rotation first removes the phase of the pivot `h_pq` with
/// `diag(1, e^{-iφ})`, then applies the real rotation that zeroes the
/// resulting symmetric 2×2 block.
pub fn hermitian_eigenvalues_with(
    h: &ComplexMatrix,
    opts: &JacobiOptions,
) -> Result<HermitianSpectrum> {
    let defect = h.hermiticity_defect();
    if defect > opts.hermiticity_tol {
        return Err(Error::NonHermitian(defect));
    }
    let mut a = h.hermitian_part();
    let n = a.dim();
    let threshold = opts.off_diagonal_tol * a.frobenius_norm().max(1.0);

    let mut off = off_diagonal_norm(&a);
    let mut sweeps = 0;
    while off > threshold {
        if sweeps == opts.max_sweeps {
            return Err(Error::NoConvergence { sweeps, off_norm: off });
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, p, q);
            }
        }
        sweeps += 1;
        off = off_diagonal_norm(&a);
    }

    let mut eigenvalues: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
    eigenvalues.sort_by(f64::total_cmp);
    Ok(HermitianSpectrum { eigenvalues })
}

fn rotate(a: &mut ComplexMatrix, p: usize, q: usize) {
    let b = a[(p, q)];
    let g = b.norm();
    if g == 0.0 {
        return;
    }
    let phase = b / g;
    let (ap, aq) = (a[(p, p)].re, a[(q, q)].re);
    let theta = 0.5 * f64::atan2(-2.0 * g, ap - aq);
    let (s, c) = theta.sin_cos();

    // V restricted to (p, q): [[c, s], [-s e^{-iφ}, c e^{-iφ}]]
    let vpp = C64::new(c, 0.0);
    let vpq = C64::new(s, 0.0);
    let vqp = -phase.conj() * s;
    let vqq = phase.conj() * c;

    let n = a.dim();
    // a <- a V
    for k in 0..n {
        let (akp, akq) = (a[(k, p)], a[(k, q)]);
        a[(k, p)] = akp * vpp + akq * vqp;
        a[(k, q)] = akp * vpq + akq * vqq;
    }
    // a <- V† a
    for k in 0..n {
        let (apk, aqk) = (a[(p, k)], a[(q, k)]);
        a[(p, k)] = vpp.conj() * apk + vqp.conj() * aqk;
        a[(q, k)] = vpq.conj() * apk + vqq.conj() * aqk;
    }
    a[(p, q)] = ZERO;
    a[(q, p)] = ZERO;
    a[(p, p)].im = 0.0;
    a[(q, q)].im = 0.0;
}

/// `Re tr(op · rho)`; fails when the trace has a non-negligible imaginary part.
pub fn expectation(op: &ComplexMatrix, rho: &ComplexMatrix) -> Result<f64> {
    if op.dim() != rho.dim() {
        return Err(Error::DimensionMismatch {
            left: op.dim(),
            right: rho.dim(),
        });
    }
    let n = op.dim();
    let mut tr = ZERO;
    for r in 0..n {
        for c in 0..n {
            tr += op[(r, c)] * rho[(c, r)];
        }
    }
    if tr.im.abs() > 1e-10 {
        return Err(Error::ComplexExpectation(tr.im));
    }
    Ok(tr.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    fn ghz_matrix() -> ComplexMatrix {
        ComplexMatrix::from_fn(8, |r, c| {
            if (r == 0 || r == 7) && (c == 0 || c == 7) {
                C64::new(0.5, 0.0)
            } else {
                ZERO
            }
        })
    }

    #[test]
    fn identity_tensor_identity() {
        let i2 = ComplexMatrix::identity(2);
        assert_eq!(tensor_product(&i2, &i2), ComplexMatrix::identity(4));
    }

    #[test]
    fn diagonal_tensor_product() {
        let p = 0.3;
        let d = ComplexMatrix::real_diagonal(&[p, 1.0]);
        let expected = ComplexMatrix::real_diagonal(&[p * p, p, p, 1.0]);
        assert!(tensor_product(&d, &d).max_abs_diff(&expected) < 1e-15);
    }

    #[test]
    fn kron_index_layout() {
        let a = ComplexMatrix::from_real(2, &[1.0, 2.0, 3.0, 4.0]);
        let b = ComplexMatrix::from_real(2, &[5.0, 6.0, 7.0, 8.0]);
        let k = a.kron(&b);
        for i in 0..2 {
            for j in 0..2 {
                for kk in 0..2 {
                    for l in 0..2 {
                        assert_eq!(k[(i * 2 + kk, j * 2 + l)], a[(i, j)] * b[(kk, l)]);
                    }
                }
            }
        }
    }

    #[test]
    fn partial_transpose_moves_ghz_coherence() {
        let pt = partial_transpose(&ghz_matrix(), Qubit::A);
        // |000⟩⟨111| -> |100⟩⟨011|, i.e. 1-based (5,4) and (4,5)
        assert_eq!(pt[(3, 4)], c(0.5));
        assert_eq!(pt[(4, 3)], c(0.5));
        assert_eq!(pt[(0, 7)], ZERO);
        assert_eq!(pt[(0, 0)], c(0.5));
    }

    #[test]
    fn partial_transpose_of_product_state() {
        let ra = ComplexMatrix::from_row_major(vec![
            c(0.7),
            C64::new(0.1, 0.2),
            C64::new(0.1, -0.2),
            c(0.3),
        ]);
        let rb = ComplexMatrix::from_row_major(vec![c(0.4), C64::new(0.0, 0.3), C64::new(0.0, -0.3), c(0.6)]);
        let rc = ComplexMatrix::real_diagonal(&[0.9, 0.1]);
        let rho = tensor3(&ra, &rb, &rc);
        let expected = tensor3(&ra.transpose(), &rb, &rc);
        assert!(partial_transpose(&rho, Qubit::A).max_abs_diff(&expected) < 1e-16);
        let expected_b = tensor3(&ra, &rb.transpose(), &rc);
        assert!(partial_transpose(&rho, Qubit::B).max_abs_diff(&expected_b) < 1e-16);
    }

    #[test]
    fn ghz_partial_transpose_spectrum() {
        let spec = hermitian_eigenvalues(&partial_transpose(&ghz_matrix(), Qubit::A)).unwrap();
        let expected = [-0.5, 0.0, 0.0, 0.0, 0.0, 0.5, 0.5, 0.5];
        for (x, e) in spec.eigenvalues().iter().zip(expected) {
            assert_abs_diff_eq!(*x, e, epsilon = 1e-14);
        }
    }

    #[test]
    fn diagonal_spectrum_sorted() {
        let d = ComplexMatrix::real_diagonal(&[3.0, -1.0, 0.5]);
        assert_eq!(hermitian_eigenvalues(&d).unwrap().eigenvalues(), &[-1.0, 0.5, 3.0]);
    }

    #[test]
    fn pauli_xx_spectrum() {
        let xx = tensor_product(&pauli::x(), &pauli::x());
        let spec = hermitian_eigenvalues(&xx).unwrap();
        for (x, e) in spec.eigenvalues().iter().zip([-1.0, -1.0, 1.0, 1.0]) {
            assert_abs_diff_eq!(*x, e, epsilon = 1e-14);
        }
    }

    #[test]
    fn complex_two_by_two() {
        // [[1, i], [-i, 1]] has eigenvalues 0 and 2
        let h = ComplexMatrix::from_row_major(vec![c(1.0), C64::new(0.0, 1.0), C64::new(0.0, -1.0), c(1.0)]);
        let spec = hermitian_eigenvalues(&h).unwrap();
        assert_abs_diff_eq!(spec.min(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(spec.max(), 2.0, epsilon = 1e-15);
    }

    #[test]
    fn non_hermitian_rejected() {
        let m = ComplexMatrix::from_real(2, &[1.0, 2.0, 0.0, 1.0]);
        assert!(matches!(hermitian_eigenvalues(&m), Err(Error::NonHermitian(_))));
    }

    #[test]
    fn tiny_asymmetry_is_symmetrized() {
        let m = ComplexMatrix::from_real(2, &[1.0, 1.0 + 1e-12, 1.0, 1.0]);
        let spec = hermitian_eigenvalues(&m).unwrap();
        assert_abs_diff_eq!(spec.max(), 2.0, epsilon = 1e-11);
    }

    #[test]
    fn expectation_of_identity_is_trace() {
        assert_abs_diff_eq!(
            expectation(&ComplexMatrix::identity(8), &ghz_matrix()).unwrap(),
            1.0,
            epsilon = 1e-15
        );
    }

    #[test]
    fn expectation_dimension_mismatch() {
        let err = expectation(&ComplexMatrix::identity(4), &ghz_matrix()).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { left: 4, right: 8 });
    }

    #[test]
    fn local_ops_match_lifted_products() {
        let op = ComplexMatrix::from_row_major(vec![c(0.2), C64::new(0.5, -0.1), c(0.0), C64::new(0.3, 0.4)]);
        let m = ComplexMatrix::from_fn(8, |r, cc| C64::new((r * 8 + cc) as f64, (r as f64) - (cc as f64)));
        for q in Qubit::ALL {
            let l = lift(&op, q);
            assert!(local_left(&op, q, &m).max_abs_diff(&l.matmul(&m)) < 1e-12);
            assert!(local_right(&m, &op, q).max_abs_diff(&m.matmul(&l)) < 1e-12);
            assert!(local_sandwich(&op, q, &m).max_abs_diff(&l.sandwich(&m)) < 1e-12);
        }
    }

    #[test]
    fn three_partial_transposes_give_full_transpose() {
        let m = ComplexMatrix::from_fn(8, |r, cc| C64::new((r * 3 + cc) as f64, (r * cc) as f64 * 0.1));
        let all = Qubit::ALL
            .iter()
            .fold(m.clone(), |acc, &q| partial_transpose(&acc, q));
        assert_eq!(all, m.transpose());
    }
}
