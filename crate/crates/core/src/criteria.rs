//! Separability tests. Every test reports a margin `lhs - rhs` of its
//! inequality; a margin above the detection tolerance certifies entanglement.

use std::fmt;

use crate::density::BipartiteDensityMatrix;
use crate::error::{Error, Result};
use crate::linalg::{self, c, CMatrix};

/// Margins at or below this value are not treated as detections.
pub const DETECTION_TOL: f64 = 1e-9;

/// Relative slack added to the Ky Fan tolerance for large `(alpha, beta)`.
const KYFAN_RELATIVE_TOL: f64 = 1e-13;

/// Border weights `(alpha, beta)` of the extended realignment matrix, both `>= 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriterionParams {
    alpha: f64,
    beta: f64,
}

impl CriterionParams {
    pub const ZERO: CriterionParams = CriterionParams { alpha: 0.0, beta: 0.0 };

    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        for (name, v) in [("alpha", alpha), ("beta", beta)] {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::Parameter(format!("{name} must be finite and nonnegative, got {v}")));
            }
        }
        Ok(CriterionParams { alpha, beta })
    }

    /// `alpha = beta = x`.
    pub fn diagonal(x: f64) -> Result<Self> {
        Self::new(x, x)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn swapped(&self) -> Self {
        CriterionParams { alpha: self.beta, beta: self.alpha }
    }

    /// `sqrt((alpha^2 + 1)(beta^2 + 1))`, the largest norm a separable state can reach.
    pub fn separable_bound(&self) -> f64 {
        ((self.alpha * self.alpha + 1.0) * (self.beta * self.beta + 1.0)).sqrt()
    }

    fn norm_sq(&self) -> f64 {
        self.alpha * self.alpha + self.beta * self.beta
    }
}

impl fmt::Display for CriterionParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "alpha={}, beta={}", self.alpha, self.beta)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Criterion {
    Ppt,
    Ccnr,
    EnhancedRealignment,
    KyFanFamily,
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Criterion::Ppt => "PPT",
            Criterion::Ccnr => "CCNR",
            Criterion::EnhancedRealignment => "enhanced realignment",
            Criterion::KyFanFamily => "Ky Fan family",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CriterionVerdict {
    pub criterion: Criterion,
    pub params: Option<CriterionParams>,
    pub lhs: f64,
    pub rhs: f64,
    /// `lhs - rhs`; positive means the separability inequality is violated.
    pub margin: f64,
    pub tolerance: f64,
    pub detected: bool,
}

impl CriterionVerdict {
    fn new(criterion: Criterion, params: Option<CriterionParams>, lhs: f64, rhs: f64, tolerance: f64) -> Self {
        let margin = lhs - rhs;
        CriterionVerdict { criterion, params, lhs, rhs, margin, tolerance, detected: margin > tolerance }
    }
}

/// Positive partial transpose test; the margin is minus the smallest eigenvalue of `rho^{T_B}`.
pub fn ppt_test(rho: &BipartiteDensityMatrix) -> Result<CriterionVerdict> {
    let min_eig = linalg::hermitian_eigenvalues(&rho.partial_transpose())?[0];
    Ok(CriterionVerdict::new(Criterion::Ppt, None, -min_eig, 0.0, DETECTION_TOL))
}

/// `||R(rho)||_1 <= 1`.
pub fn ccnr_test(rho: &BipartiteDensityMatrix) -> Result<CriterionVerdict> {
    let lhs = linalg::ky_fan_norm(&rho.realign())?;
    Ok(CriterionVerdict::new(Criterion::Ccnr, None, lhs, 1.0, DETECTION_TOL))
}

/// `||R(rho - rho_A ⊗ rho_B)||_1 <= sqrt(1 - tr rho_A^2) sqrt(1 - tr rho_B^2)`.
pub fn enhanced_realignment_test(rho: &BipartiteDensityMatrix) -> Result<CriterionVerdict> {
    let rho_a = rho.reduced_a();
    let rho_b = rho.reduced_b();
    let diff = rho.matrix() - linalg::kron(&rho_a, &rho_b);
    let lhs = linalg::ky_fan_norm(&linalg::realign(&diff, rho.dims())?)?;
    let mixedness = |m: &CMatrix| -> Result<f64> { Ok((1.0 - linalg::purity(m)?).max(0.0).sqrt()) };
    let rhs = mixedness(&rho_a)? * mixedness(&rho_b)?;
    Ok(CriterionVerdict::new(Criterion::EnhancedRealignment, None, lhs, rhs, DETECTION_TOL))
}

/// The bordered realignment matrix
///
/// ```text
/// [ alpha*beta          alpha*vec(rho_B)^T ]
/// [ beta*vec(rho_A)     R(rho)             ]
/// ```
///
/// of size `(d_A^2 + 1) x (d_B^2 + 1)`.
pub fn build_m(rho: &BipartiteDensityMatrix, params: CriterionParams) -> CMatrix {
    let (alpha, beta) = (params.alpha, params.beta);
    let vec_a = linalg::vectorize(&rho.reduced_a());
    let vec_b = linalg::vectorize(&rho.reduced_b());
    let r = rho.realign();
    let mut m = CMatrix::zeros(r.nrows() + 1, r.ncols() + 1);
    m[(0, 0)] = c(alpha * beta);
    for (j, z) in vec_b.iter().enumerate() {
        m[(0, j + 1)] = z * alpha;
    }
    for (i, z) in vec_a.iter().enumerate() {
        m[(i + 1, 0)] = z * beta;
    }
    m.view_mut((1, 1), r.shape()).copy_from(&r);
    m
}

/// Detection tolerance for the Ky Fan family at `params`: `max(1e-9, 1e-13 * sqrt((a^2+1)(b^2+1)))`.
pub fn kyfan_tolerance(params: CriterionParams) -> f64 {
    DETECTION_TOL.max(KYFAN_RELATIVE_TOL * params.separable_bound())
}

/// `||M_{alpha,beta}(rho)||_KF <= sqrt((alpha^2+1)(beta^2+1))` for separable `rho`.
pub fn kyfan_criterion_test(rho: &BipartiteDensityMatrix, params: CriterionParams) -> Result<CriterionVerdict> {
    let lhs = linalg::ky_fan_norm(&build_m(rho, params))?;
    Ok(CriterionVerdict::new(
        Criterion::KyFanFamily,
        Some(params),
        lhs,
        params.separable_bound(),
        kyfan_tolerance(params),
    ))
}

/// A finite list of `(alpha, beta)` points to search.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamGrid {
    points: Vec<CriterionParams>,
}

fn log_spaced(lo: f64, hi: f64, n: usize) -> Result<Vec<f64>> {
    if !(lo > 0.0 && hi >= lo && hi.is_finite()) || n == 0 {
        return Err(Error::Parameter(format!("invalid log-spaced range [{lo}, {hi}] with {n} points")));
    }
    if n == 1 {
        return Ok(vec![lo]);
    }
    let ratio = (hi / lo).ln();
    Ok((0..n).map(|i| lo * (ratio * i as f64 / (n - 1) as f64).exp()).collect())
}

impl ParamGrid {
    pub fn new(points: Vec<CriterionParams>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::Parameter("parameter grid is empty".into()));
        }
        Ok(ParamGrid { points })
    }

    /// `alpha = beta` at `n` log-spaced values in `[lo, hi]`.
    pub fn log_diagonal(lo: f64, hi: f64, n: usize) -> Result<Self> {
        let points = log_spaced(lo, hi, n)?.into_iter().map(|x| CriterionParams { alpha: x, beta: x }).collect();
        Self::new(points)
    }

    /// Cartesian product of `n` log-spaced values per axis.
    pub fn log_product(lo: f64, hi: f64, n: usize) -> Result<Self> {
        let axis = log_spaced(lo, hi, n)?;
        let points = axis
            .iter()
            .flat_map(|&a| axis.iter().map(move |&b| CriterionParams { alpha: a, beta: b }))
            .collect();
        Self::new(points)
    }

    /// Cartesian product of `n` evenly spaced values per axis on `[lo, hi]`.
    pub fn linear_product(lo: f64, hi: f64, n: usize) -> Result<Self> {
        if n < 2 || !(lo >= 0.0 && hi >= lo && hi.is_finite()) {
            return Err(Error::Parameter(format!("invalid linear range [{lo}, {hi}] with {n} points")));
        }
        let axis: Vec<f64> = (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect();
        let points = axis
            .iter()
            .flat_map(|&a| axis.iter().map(move |&b| CriterionParams { alpha: a, beta: b }))
            .collect();
        Self::new(points)
    }

    /// The diagonal search (60 points) followed by the product search (15 per axis), both on `[1e-2, 1e4]`.
    pub fn standard() -> Self {
        Self::log_diagonal(1e-2, 1e4, 60)
            .and_then(|g| Ok(g.chain(Self::log_product(1e-2, 1e4, 15)?)))
            .expect("static grid is valid")
    }

    pub fn chain(mut self, other: ParamGrid) -> Self {
        self.points.extend(other.points);
        self
    }

    pub fn points(&self) -> &[CriterionParams] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

impl Default for ParamGrid {
    fn default() -> Self {
        Self::standard()
    }
}

/// Grid search for the largest Ky Fan margin. Ties go to the smaller `alpha^2 + beta^2`.
pub fn optimize_params(rho: &BipartiteDensityMatrix, grid: &ParamGrid) -> Result<(CriterionParams, CriterionVerdict)> {
    let mut best: Option<CriterionVerdict> = None;
    for &params in grid.points() {
        let verdict = kyfan_criterion_test(rho, params)?;
        let better = match &best {
            None => true,
            Some(b) => {
                let bp = b.params.expect("Ky Fan verdicts carry params");
                verdict.margin > b.margin || (verdict.margin == b.margin && params.norm_sq() < bp.norm_sq())
            }
        };
        if better {
            best = Some(verdict);
        }
    }
    let verdict = best.expect("grids are nonempty");
    Ok((verdict.params.expect("Ky Fan verdicts carry params"), verdict))
}
