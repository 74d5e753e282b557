//! Validated state types: mixed bipartite states, pure states and Schmidt spectra.

use num_complex::Complex64;

use crate::error::{Error, Invariant, Result};
use crate::linalg::{self, CMatrix, CVector, Dims, Subsystem};

/// Maximum entrywise `|M - M^†|` accepted for a density matrix.
pub const HERMITIAN_TOL: f64 = 1e-10;
/// Maximum `|tr M - 1|` accepted for a density matrix.
pub const TRACE_TOL: f64 = 1e-10;
/// Smallest eigenvalue accepted is `-PSD_TOL`.
pub const PSD_TOL: f64 = 1e-9;
/// Maximum `| ||psi|| - 1 |` for pure states.
pub const NORM_TOL: f64 = 1e-10;
/// Maximum `|sum(lambda) - 1|` for a Schmidt spectrum.
pub const SPECTRUM_SUM_TOL: f64 = 1e-10;
/// Schmidt coefficients above `-SPECTRUM_FLOOR` are clamped to zero; below it they are rejected.
pub const SPECTRUM_FLOOR: f64 = 1e-12;

/// A Hermitian, positive semidefinite, unit-trace operator on `C^{d_A} ⊗ C^{d_B}`.
///
/// All invariants are checked once, at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct BipartiteDensityMatrix {
    dims: Dims,
    matrix: CMatrix,
}

impl BipartiteDensityMatrix {
    pub fn new(dim_a: usize, dim_b: usize, matrix: CMatrix) -> Result<Self> {
        let dims = Dims::new(dim_a, dim_b)?;
        let n = dims.total();
        if matrix.nrows() != n || matrix.ncols() != n {
            return Err(Error::DimensionMismatch(format!(
                "d_A * d_B = {n} but matrix is {}x{}",
                matrix.nrows(),
                matrix.ncols()
            )));
        }
        if !linalg::is_finite(&matrix) {
            return Err(Error::NonFinite);
        }
        let defect = linalg::hermiticity_defect(&matrix);
        if defect > HERMITIAN_TOL {
            return Err(Error::invariant(Invariant::Hermitian, format!("max |M - M^†| = {defect:e}")));
        }
        let trace = matrix.trace();
        if (trace.re - 1.0).abs() > TRACE_TOL || trace.im.abs() > TRACE_TOL {
            return Err(Error::invariant(Invariant::Trace, format!("trace = {} + {}i", trace.re, trace.im)));
        }
        let min_eig = linalg::hermitian_eigenvalues(&matrix)?[0];
        if min_eig < -PSD_TOL {
            return Err(Error::invariant(
                Invariant::PositiveSemidefinite,
                format!("minimum eigenvalue = {min_eig:e}"),
            ));
        }
        Ok(BipartiteDensityMatrix { dims, matrix })
    }

    /// Convenience constructor from a row-major list of real entries.
    pub fn from_real_rows(dim_a: usize, dim_b: usize, rows: &[f64]) -> Result<Self> {
        let n = dim_a * dim_b;
        if rows.len() != n * n {
            return Err(Error::DimensionMismatch(format!("expected {} entries, got {}", n * n, rows.len())));
        }
        let m = CMatrix::from_row_iterator(n, n, rows.iter().map(|&x| Complex64::new(x, 0.0)));
        Self::new(dim_a, dim_b, m)
    }

    /// `rho_A ⊗ rho_B` for two single-system density matrices.
    pub fn product(rho_a: &CMatrix, rho_b: &CMatrix) -> Result<Self> {
        Self::new(rho_a.nrows(), rho_b.nrows(), linalg::kron(rho_a, rho_b))
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    pub fn dim_a(&self) -> usize {
        self.dims.a
    }

    pub fn dim_b(&self) -> usize {
        self.dims.b
    }

    /// `k = min(d_A, d_B)`, taken from the declared dimensions.
    pub fn k(&self) -> usize {
        self.dims.k()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> CMatrix {
        self.matrix
    }

    pub fn is_real(&self) -> bool {
        self.matrix.iter().all(|z| z.im == 0.0)
    }

    /// Reduced state on A (B traced out).
    pub fn reduced_a(&self) -> CMatrix {
        linalg::partial_trace(&self.matrix, self.dims, Subsystem::B).expect("dimensions checked at construction")
    }

    /// Reduced state on B (A traced out).
    pub fn reduced_b(&self) -> CMatrix {
        linalg::partial_trace(&self.matrix, self.dims, Subsystem::A).expect("dimensions checked at construction")
    }

    pub fn partial_trace(&self, traced: Subsystem) -> CMatrix {
        match traced {
            Subsystem::A => self.reduced_b(),
            Subsystem::B => self.reduced_a(),
        }
    }

    pub fn partial_transpose(&self) -> CMatrix {
        linalg::partial_transpose(&self.matrix, self.dims).expect("dimensions checked at construction")
    }

    pub fn realign(&self) -> CMatrix {
        linalg::realign(&self.matrix, self.dims).expect("dimensions checked at construction")
    }

    pub fn purity(&self) -> f64 {
        linalg::purity(&self.matrix).expect("square by construction")
    }

    /// The same state with the tensor factors exchanged.
    pub fn swap_subsystems(&self) -> BipartiteDensityMatrix {
        let matrix = linalg::swap_subsystems(&self.matrix, self.dims).expect("dimensions checked at construction");
        BipartiteDensityMatrix { dims: self.dims.swapped(), matrix }
    }
}

/// Unit vector on `C^{d_A} ⊗ C^{d_B}`, amplitude index `i * d_B + j` for `|i>|j>`.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    dims: Dims,
    amplitudes: CVector,
}

impl PureState {
    pub fn new(dim_a: usize, dim_b: usize, amplitudes: CVector) -> Result<Self> {
        let dims = Dims::new(dim_a, dim_b)?;
        if amplitudes.len() != dims.total() {
            return Err(Error::DimensionMismatch(format!(
                "expected {} amplitudes, got {}",
                dims.total(),
                amplitudes.len()
            )));
        }
        if amplitudes.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        let norm = amplitudes.norm();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::invariant(Invariant::Normalization, format!("||psi|| = {norm}")));
        }
        Ok(PureState { dims, amplitudes })
    }

    /// Normalizes `amplitudes` before validating.
    pub fn normalized(dim_a: usize, dim_b: usize, amplitudes: CVector) -> Result<Self> {
        let norm = amplitudes.norm();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::invariant(Invariant::Normalization, "cannot normalize a zero or non-finite vector"));
        }
        Self::new(dim_a, dim_b, amplitudes.unscale(norm))
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    pub fn k(&self) -> usize {
        self.dims.k()
    }

    pub fn amplitudes(&self) -> &CVector {
        &self.amplitudes
    }

    /// The `d_A x d_B` coefficient matrix `C` with `psi = sum_ij C_ij |i>|j>`.
    pub fn amplitude_matrix(&self) -> CMatrix {
        let db = self.dims.b;
        CMatrix::from_fn(self.dims.a, db, |i, j| self.amplitudes[i * db + j])
    }

    /// `|psi><psi|`.
    pub fn projector(&self) -> CMatrix {
        &self.amplitudes * self.amplitudes.adjoint()
    }

    pub fn to_density(&self) -> BipartiteDensityMatrix {
        BipartiteDensityMatrix::new(self.dims.a, self.dims.b, self.projector())
            .expect("projector onto a unit vector is a valid state")
    }
}

/// Nonnegative Schmidt coefficients `lambda_0 >= lambda_1 >= ...` summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct SchmidtSpectrum {
    lambdas: Vec<f64>,
}

impl SchmidtSpectrum {
    /// Sorts descending and clamps entries in `[-1e-12, 0)` to zero.
    pub fn new(mut lambdas: Vec<f64>) -> Result<Self> {
        if lambdas.is_empty() {
            return Err(Error::invariant(Invariant::SpectrumSum, "empty spectrum"));
        }
        if let Some(bad) = lambdas.iter().find(|x| !x.is_finite() || **x < -SPECTRUM_FLOOR) {
            return Err(Error::Parameter(format!("Schmidt coefficient {bad} is negative or non-finite")));
        }
        let sum: f64 = lambdas.iter().sum();
        if (sum - 1.0).abs() > SPECTRUM_SUM_TOL {
            return Err(Error::invariant(Invariant::SpectrumSum, format!("sum = {sum}")));
        }
        for x in lambdas.iter_mut() {
            *x = x.max(0.0);
        }
        lambdas.sort_by(|x, y| y.total_cmp(x));
        Ok(SchmidtSpectrum { lambdas })
    }

    pub fn lambdas(&self) -> &[f64] {
        &self.lambdas
    }

    pub fn len(&self) -> usize {
        self.lambdas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lambdas.is_empty()
    }

    /// `sum_{i<j} sqrt(lambda_i lambda_j)`.
    pub fn cross_sum(&self) -> f64 {
        let l = &self.lambdas;
        let mut acc = 0.0;
        for i in 0..l.len() {
            for j in i + 1..l.len() {
                acc += (l[i] * l[j]).sqrt();
            }
        }
        acc
    }

    /// `sum_i lambda_i^2`, the purity of either marginal.
    pub fn marginal_purity(&self) -> f64 {
        self.lambdas.iter().map(|x| x * x).sum()
    }
}
