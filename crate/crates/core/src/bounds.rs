//! Pure-state concurrence and CREN, and the mixed-state lower bounds derived
//! from the Ky Fan family.
//!
//! For a mixed state with `k = min(d_A, d_B)` and margin
//! `m = ||M_{alpha,beta}(rho)||_KF - sqrt((1+alpha^2)(1+beta^2))`:
//!
//! * concurrence `C(rho) >= sqrt(2 / (k(k-1))) * m`
//! * CREN `N(rho) >= m / (k-1)`
//!
//! A right-hand side is reported clamped to zero whenever the criterion does not
//! detect the state, i.e. the margin is within round-off of the separable bound.

use std::fmt;

pub use crate::density::SchmidtSpectrum;
use crate::criteria::{self, CriterionParams, CriterionVerdict};
use crate::density::{BipartiteDensityMatrix, PureState};
use crate::error::{Error, Result};
use crate::linalg::{self, c, CMatrix};
use crate::states;

const SCHMIDT_DIAGONAL_TOL: f64 = 1e-12;

/// Schmidt coefficients: squared singular values of the amplitude matrix, descending.
pub fn schmidt_coefficients(psi: &PureState) -> Result<SchmidtSpectrum> {
    let sv = linalg::singular_values(&psi.amplitude_matrix())?;
    let squares: Vec<f64> = sv.iter().map(|s| s * s).collect();
    let total: f64 = squares.iter().sum();
    SchmidtSpectrum::new(squares.into_iter().map(|x| x / total).collect())
}

/// `sqrt(2 (1 - tr rho_A^2))`.
pub fn pure_concurrence(psi: &PureState) -> Result<f64> {
    let spectrum = schmidt_coefficients(psi)?;
    Ok((2.0 * (1.0 - spectrum.marginal_purity())).max(0.0).sqrt())
}

/// `2 sum_{i<j} sqrt(lambda_i lambda_j) / (k - 1)`; zero when `k = 1`.
pub fn pure_cren(psi: &PureState) -> Result<f64> {
    let k = psi.k();
    if k < 2 {
        return Ok(0.0);
    }
    let spectrum = schmidt_coefficients(psi)?;
    Ok(2.0 * spectrum.cross_sum() / (k - 1) as f64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Measure {
    Concurrence,
    Cren,
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Measure::Concurrence => "concurrence",
            Measure::Cren => "CREN",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub measure: Measure,
    pub params: CriterionParams,
    /// Right-hand side before clamping; may be negative.
    pub raw: f64,
    /// `raw` when the margin exceeds the detection tolerance, otherwise 0.
    pub bound: f64,
    pub clamped: bool,
}

impl BoundReport {
    fn new(measure: Measure, verdict: &CriterionVerdict, scale: f64) -> Self {
        let raw = scale * verdict.margin;
        let params = verdict.params.unwrap_or(CriterionParams::ZERO);
        if verdict.detected {
            BoundReport { measure, params, raw, bound: raw, clamped: false }
        } else {
            BoundReport { measure, params, raw, bound: 0.0, clamped: true }
        }
    }
}

pub fn concurrence_lower_bound(rho: &BipartiteDensityMatrix, params: CriterionParams) -> Result<BoundReport> {
    let k = rho.k();
    if k < 2 {
        return Err(Error::TrivialSubsystem);
    }
    let scale = (2.0 / (k * (k - 1)) as f64).sqrt();
    let verdict = criteria::kyfan_criterion_test(rho, params)?;
    Ok(BoundReport::new(Measure::Concurrence, &verdict, scale))
}

pub fn cren_lower_bound(rho: &BipartiteDensityMatrix, params: CriterionParams) -> Result<BoundReport> {
    let k = rho.k();
    if k < 2 {
        return Err(Error::TrivialSubsystem);
    }
    let verdict = criteria::kyfan_criterion_test(rho, params)?;
    Ok(BoundReport::new(Measure::Cren, &verdict, 1.0 / (k - 1) as f64))
}

pub fn lower_bound(measure: Measure, rho: &BipartiteDensityMatrix, params: CriterionParams) -> Result<BoundReport> {
    match measure {
        Measure::Concurrence => concurrence_lower_bound(rho, params),
        Measure::Cren => cren_lower_bound(rho, params),
    }
}

/// Returns `(C^2(psi), 8/(k(k-1)) (sum_{i<j} sqrt(lambda_i lambda_j))^2)`; the first is never smaller.
pub fn pure_state_chen_bound_check(psi: &PureState) -> Result<(f64, f64)> {
    let concurrence = pure_concurrence(psi)?;
    let k = psi.k();
    let rhs = if k < 2 {
        0.0
    } else {
        let cross = schmidt_coefficients(psi)?.cross_sum();
        8.0 / (k * (k - 1)) as f64 * cross * cross
    };
    Ok((concurrence * concurrence, rhs))
}

/// For `psi = sum_i sqrt(lambda_i) |ii>`, returns `||M(psi)||` and
/// `||M(sigma)|| + 2 sum_{i<j} sqrt(lambda_i lambda_j)` with `sigma = sum_i lambda_i |ii><ii|`.
///
/// The two agree because the off-diagonal part of `R(|psi><psi|)` is orthogonal to `M(sigma)`.
pub fn pure_m_decomposition_check(psi: &PureState, params: CriterionParams) -> Result<(f64, f64)> {
    let amps = psi.amplitude_matrix();
    let dims = psi.dims();
    let mut lambdas = Vec::with_capacity(dims.k());
    for i in 0..dims.a {
        for j in 0..dims.b {
            let z = amps[(i, j)];
            if i == j {
                if z.im.abs() > SCHMIDT_DIAGONAL_TOL || z.re < -SCHMIDT_DIAGONAL_TOL {
                    return Err(Error::NotSchmidtDiagonal);
                }
                lambdas.push(z.norm_sqr());
            } else if z.norm() > SCHMIDT_DIAGONAL_TOL {
                return Err(Error::NotSchmidtDiagonal);
            }
        }
    }
    let spectrum = SchmidtSpectrum::new(lambdas)?;

    let norm_m = linalg::ky_fan_norm(&criteria::build_m(&psi.to_density(), params))?;

    let n = dims.total();
    let mut sigma = CMatrix::zeros(n, n);
    for (i, &l) in spectrum.lambdas().iter().enumerate() {
        // The spectrum is sorted, but any permutation of |ii> gives the same norm.
        sigma[(i * dims.b + i, i * dims.b + i)] = c(l);
    }
    let sigma = BipartiteDensityMatrix::new(dims.a, dims.b, sigma)?;
    let norm_m1 = linalg::ky_fan_norm(&criteria::build_m(&sigma, params))?;
    Ok((norm_m, norm_m1 + 2.0 * spectrum.cross_sum()))
}

/// A base state mixed with white noise at weight `w`: `(1 - w) rho + w I / d`.
#[derive(Debug, Clone)]
pub struct NoiseFamily {
    base: BipartiteDensityMatrix,
}

impl NoiseFamily {
    pub fn new(base: BipartiteDensityMatrix) -> Self {
        NoiseFamily { base }
    }

    pub fn base(&self) -> &BipartiteDensityMatrix {
        &self.base
    }

    pub fn state_at(&self, noise_weight: f64) -> Result<BipartiteDensityMatrix> {
        states::mix_white_noise(&self.base, noise_weight)
    }

    pub fn bound_at(&self, noise_weight: f64, params: CriterionParams, measure: Measure) -> Result<BoundReport> {
        lower_bound(measure, &self.state_at(noise_weight)?, params)
    }
}

const THRESHOLD_SCAN_POINTS: usize = 101;
const THRESHOLD_MAX_ITERATIONS: usize = 80;
const THRESHOLD_TOL: f64 = 1e-6;

/// Largest noise weight at which the bound is still positive.
///
/// A 101-point scan locates the last positive grid point; bisection then
/// refines the crossing to 1e-6. Returns 0 when the noiseless bound is not positive.
pub fn detection_threshold(family: &NoiseFamily, params: CriterionParams, measure: Measure) -> Result<f64> {
    let raw = |w: f64| -> Result<f64> { Ok(family.bound_at(w, params, measure)?.raw) };

    let scan: Vec<(f64, f64)> = (0..THRESHOLD_SCAN_POINTS)
        .map(|i| {
            let w = i as f64 / (THRESHOLD_SCAN_POINTS - 1) as f64;
            raw(w).map(|r| (w, r))
        })
        .collect::<Result<_>>()?;

    if scan[0].1 <= 0.0 {
        return Ok(0.0);
    }
    let sign_changes = scan.windows(2).filter(|p| (p[0].1 > 0.0) != (p[1].1 > 0.0)).count();
    if sign_changes > 1 {
        log::warn!("bound is not monotone in the noise weight ({sign_changes} sign changes); using the last positive scan point");
    }
    let last = scan.iter().rposition(|&(_, r)| r > 0.0).expect("first point is positive");
    if last + 1 == scan.len() {
        return Ok(1.0);
    }

    let (mut lo, mut hi) = (scan[last].0, scan[last + 1].0);
    for _ in 0..THRESHOLD_MAX_ITERATIONS {
        if hi - lo <= THRESHOLD_TOL {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if raw(mid)? > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
