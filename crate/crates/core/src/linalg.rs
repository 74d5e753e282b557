//! Dense complex-matrix primitives shared by the criteria and bounds.
//!
//! Composite indices follow `|i>_A |j>_B -> i * d_B + j`, so a bipartite
//! operator is a `d_A x d_A` block matrix whose `(i, j)` block is the
//! `d_B x d_B` matrix `Z_ij`.

use nalgebra::linalg::{SymmetricEigen, SVD};
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type CMatrix = DMatrix<Complex64>;
pub type CVector = DVector<Complex64>;

const SVD_MAX_ITERATIONS: usize = 10_000;
const EIGEN_MAX_ITERATIONS: usize = 10_000;

/// Local dimensions of a bipartite system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dims {
    pub a: usize,
    pub b: usize,
}

impl Dims {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidDimension(format!("subsystem dimensions must be positive, got {a}x{b}")));
        }
        Ok(Dims { a, b })
    }

    /// Dimension of the composite space, `d_A * d_B`.
    pub fn total(&self) -> usize {
        self.a * self.b
    }

    /// `k = min(d_A, d_B)`.
    pub fn k(&self) -> usize {
        self.a.min(self.b)
    }

    pub fn swapped(&self) -> Dims {
        Dims { a: self.b, b: self.a }
    }

    fn check_square(&self, m: &CMatrix) -> Result<()> {
        let n = self.total();
        if m.nrows() != n || m.ncols() != n {
            return Err(Error::DimensionMismatch(format!(
                "expected {n}x{n} operator for {}x{} system, got {}x{}",
                self.a,
                self.b,
                m.nrows(),
                m.ncols()
            )));
        }
        Ok(())
    }
}

/// Which tensor factor an operation acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

pub fn is_finite(m: &CMatrix) -> bool {
    m.iter().all(|z| z.re.is_finite() && z.im.is_finite())
}

/// Column-stacking vectorization: `(a_11, a_21, ..., a_m1, a_12, ..., a_mn)^T`.
#[doc(alias = "vec")]
pub fn vectorize(a: &CMatrix) -> CVector {
    // nalgebra stores column-major, which is exactly the stacking order.
    CVector::from_column_slice(a.as_slice())
}

/// Inverse of [`vectorize`].
pub fn unvectorize(v: &CVector, rows: usize, cols: usize) -> Result<CMatrix> {
    if v.len() != rows * cols {
        return Err(Error::DimensionMismatch(format!(
            "vector of length {} cannot fill a {rows}x{cols} matrix",
            v.len()
        )));
    }
    Ok(CMatrix::from_column_slice(rows, cols, v.as_slice()))
}

pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.kronecker(b)
}

/// Traces out `traced`, returning the reduced operator on the other factor.
pub fn partial_trace(m: &CMatrix, dims: Dims, traced: Subsystem) -> Result<CMatrix> {
    dims.check_square(m)?;
    let (da, db) = (dims.a, dims.b);
    let out = match traced {
        Subsystem::B => CMatrix::from_fn(da, da, |i, j| (0..db).map(|k| m[(i * db + k, j * db + k)]).sum()),
        Subsystem::A => CMatrix::from_fn(db, db, |k, l| (0..da).map(|i| m[(i * db + k, i * db + l)]).sum()),
    };
    Ok(out)
}

/// Transposes the B indices inside every block: `(id ⊗ T)(M)`.
pub fn partial_transpose(m: &CMatrix, dims: Dims) -> Result<CMatrix> {
    dims.check_square(m)?;
    let db = dims.b;
    Ok(CMatrix::from_fn(m.nrows(), m.ncols(), |r, c| {
        let (i, k) = (r / db, r % db);
        let (j, l) = (c / db, c % db);
        m[(i * db + l, j * db + k)]
    }))
}

/// Realignment `R(M)`: a `d_A^2 x d_B^2` matrix whose rows are `vec(Z_ij)^T`,
/// listed as `Z_11, Z_21, ..., Z_m1, Z_12, ..., Z_mm`.
pub fn realign(m: &CMatrix, dims: Dims) -> Result<CMatrix> {
    dims.check_square(m)?;
    let (da, db) = (dims.a, dims.b);
    Ok(CMatrix::from_fn(da * da, db * db, |row, col| {
        let (i, j) = (row % da, row / da);
        let (k, l) = (col % db, col / db);
        m[(i * db + k, j * db + l)]
    }))
}

/// Reorders a bipartite operator from `A ⊗ B` to `B ⊗ A`.
pub fn swap_subsystems(m: &CMatrix, dims: Dims) -> Result<CMatrix> {
    dims.check_square(m)?;
    let (da, db) = (dims.a, dims.b);
    Ok(CMatrix::from_fn(m.nrows(), m.ncols(), |r, c| {
        let (k, i) = (r / da, r % da);
        let (l, j) = (c / da, c % da);
        m[(i * db + k, j * db + l)]
    }))
}

/// All `min(m, n)` singular values in descending order.
pub fn singular_values(a: &CMatrix) -> Result<Vec<f64>> {
    if !is_finite(a) {
        return Err(Error::NonFinite);
    }
    if a.is_empty() {
        return Ok(Vec::new());
    }
    let svd = SVD::try_new(a.clone(), false, false, f64::EPSILON, SVD_MAX_ITERATIONS).ok_or(Error::SvdNoConvergence)?;
    let mut values: Vec<f64> = svd.singular_values.iter().copied().collect();
    values.sort_by(|x, y| y.total_cmp(x));
    Ok(values)
}

/// Sum of all singular values (trace norm), `tr sqrt(A^† A)`.
///
/// Tiny singular values are summed, never truncated.
pub fn ky_fan_norm(a: &CMatrix) -> Result<f64> {
    Ok(singular_values(a)?.iter().sum())
}

/// `tr(M^2)` of a square matrix, as a real number.
pub fn purity(m: &CMatrix) -> Result<f64> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(format!("purity needs a square matrix, got {}x{}", m.nrows(), m.ncols())));
    }
    let n = m.nrows();
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..n {
        for j in 0..n {
            acc += m[(i, j)] * m[(j, i)];
        }
    }
    Ok(acc.re)
}

/// Eigenvalues of a Hermitian matrix in ascending order.
///
/// Only the lower triangle is read.
pub fn hermitian_eigenvalues(m: &CMatrix) -> Result<Vec<f64>> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(format!("eigenvalues need a square matrix, got {}x{}", m.nrows(), m.ncols())));
    }
    if !is_finite(m) {
        return Err(Error::NonFinite);
    }
    let eig = SymmetricEigen::try_new(m.clone(), f64::EPSILON, EIGEN_MAX_ITERATIONS).ok_or(Error::EigenNoConvergence)?;
    let mut values: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    values.sort_by(f64::total_cmp);
    Ok(values)
}

/// Largest entrywise modulus of `M - M^†`.
pub fn hermiticity_defect(m: &CMatrix) -> f64 {
    let n = m.nrows().min(m.ncols());
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in 0..=i {
            worst = worst.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    worst
}

pub fn identity(n: usize) -> CMatrix {
    CMatrix::identity(n, n)
}

pub(crate) fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}
