//! Constructors for named states, noise mixing and seeded random samplers.

pub(crate) mod io;

pub use io::{from_json_str, read_state, to_json_string, write_state};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Exp1, StandardNormal};

use crate::density::{BipartiteDensityMatrix, PureState, SchmidtSpectrum, PSD_TOL};
use crate::error::{Error, Result};
use crate::linalg::{self, c, CMatrix, CVector, Dims};

/// `sum_i sqrt(lambda_i) |ii>`.
pub fn pure_from_schmidt(lambdas: &SchmidtSpectrum, dim_a: usize, dim_b: usize) -> Result<PureState> {
    let dims = Dims::new(dim_a, dim_b)?;
    if lambdas.len() > dims.k() {
        return Err(Error::Parameter(format!(
            "{} Schmidt coefficients do not fit a {dim_a}x{dim_b} system",
            lambdas.len()
        )));
    }
    let mut amps = CVector::zeros(dims.total());
    for (i, &l) in lambdas.lambdas().iter().enumerate() {
        amps[i * dim_b + i] = c(l.sqrt());
    }
    // Re-normalize away the <= 1e-10 slack allowed in the spectrum sum.
    PureState::normalized(dim_a, dim_b, amps)
}

/// `|Phi+> = (|00> + |11>)/sqrt(2)`.
pub fn bell_pure() -> PureState {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    PureState::new(2, 2, CVector::from_vec(vec![c(s), c(0.0), c(0.0), c(s)])).expect("unit vector")
}

pub fn bell_state() -> BipartiteDensityMatrix {
    bell_pure().to_density()
}

/// `|v_a> ⊗ |v_b>` normalized.
pub fn product_pure(a: &CVector, b: &CVector) -> Result<PureState> {
    let v = CVector::from_iterator(a.len() * b.len(), a.iter().flat_map(|x| b.iter().map(move |y| x * y)));
    PureState::normalized(a.len(), b.len(), v)
}

/// `I / (d_A d_B)`.
pub fn maximally_mixed(dim_a: usize, dim_b: usize) -> Result<BipartiteDensityMatrix> {
    let n = Dims::new(dim_a, dim_b)?.total();
    BipartiteDensityMatrix::new(dim_a, dim_b, linalg::identity(n) / c(n as f64))
}

/// Real parameters of the 3x3 chessboard family; `s = a c / n` and `t = a d / m` are derived.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChessboardParams {
    pub m: f64,
    pub n: f64,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl ChessboardParams {
    /// The parameter set used for the bound-entangled chessboard example.
    pub const EXAMPLE: ChessboardParams = ChessboardParams {
        m: 0.469,
        n: -0.3161,
        a: 0.33,
        b: -0.109,
        c: -0.65,
        d: 0.8560,
    };

    pub fn s(&self) -> f64 {
        self.a * self.c / self.n
    }

    pub fn t(&self) -> f64 {
        self.a * self.d / self.m
    }

    /// The four unnormalized vectors `V_1..V_4` as 9-vectors (A index major).
    pub fn vectors(&self) -> [[f64; 9]; 4] {
        let ChessboardParams { m, n, a, b, c, d } = *self;
        let (s, t) = (self.s(), self.t());
        [
            [m, 0.0, s, 0.0, n, 0.0, 0.0, 0.0, 0.0],
            [0.0, a, 0.0, b, 0.0, c, 0.0, 0.0, 0.0],
            [n, 0.0, 0.0, 0.0, -m, 0.0, t, 0.0, 0.0],
            [0.0, b, 0.0, -a, 0.0, 0.0, 0.0, d, 0.0],
        ]
    }

    /// `N = sum_i ||V_i||^2`.
    pub fn normalization(&self) -> f64 {
        self.vectors().iter().flatten().map(|x| x * x).sum()
    }

    fn validate(&self) -> Result<()> {
        let all = [self.m, self.n, self.a, self.b, self.c, self.d];
        if all.iter().any(|x| !x.is_finite()) {
            return Err(Error::Parameter("chessboard parameters must be finite".into()));
        }
        if self.m == 0.0 || self.n == 0.0 {
            return Err(Error::Parameter("chessboard parameters m and n must be nonzero".into()));
        }
        Ok(())
    }
}

/// `(1/N) sum_i |V_i><V_i|` on 3x3.
///
/// The result is expected to be PPT; a violation is logged as a warning, not rejected.
pub fn chessboard_state(params: &ChessboardParams) -> Result<BipartiteDensityMatrix> {
    params.validate()?;
    let norm = params.normalization();
    if norm.is_nan() || norm <= 0.0 {
        return Err(Error::Parameter("chessboard normalization is zero".into()));
    }
    let mut rho = CMatrix::zeros(9, 9);
    for v in params.vectors() {
        for i in 0..9 {
            for j in 0..9 {
                rho[(i, j)] += c(v[i] * v[j] / norm);
            }
        }
    }
    let rho = BipartiteDensityMatrix::new(3, 3, rho)?;
    let pt_min = linalg::hermitian_eigenvalues(&rho.partial_transpose())?[0];
    if pt_min < -PSD_TOL {
        log::warn!("chessboard state with {params:?} is not PPT (partial transpose min eigenvalue {pt_min:e})");
    }
    Ok(rho)
}

/// The five orthonormal tiles vectors `psi_0..psi_4` on 3x3.
pub fn tiles_vectors() -> [CVector; 5] {
    let e = |i: usize| {
        let mut v = CVector::zeros(3);
        v[i] = c(1.0);
        v
    };
    let tensor = |x: &CVector, y: &CVector| {
        CVector::from_iterator(9, x.iter().flat_map(|p| y.iter().map(move |q| p * q)))
    };
    let r2 = c(std::f64::consts::SQRT_2);
    let (e0, e1, e2) = (e(0), e(1), e(2));
    let sum = &e0 + &e1 + &e2;
    [
        tensor(&e0, &(&e0 - &e1)) / r2,
        tensor(&(&e0 - &e1), &e2) / r2,
        tensor(&e2, &(&e1 - &e2)) / r2,
        tensor(&(&e1 - &e2), &e0) / r2,
        tensor(&sum, &sum) / c(3.0),
    ]
}

/// `(1/4)(I - sum_i |psi_i><psi_i|)`: the rank-4 PPT entangled tiles state.
pub fn tiles_ppt_state() -> BipartiteDensityMatrix {
    let mut rho = linalg::identity(9);
    for v in tiles_vectors() {
        rho -= &v * v.adjoint();
    }
    BipartiteDensityMatrix::new(3, 3, rho / c(4.0)).expect("tiles state is valid")
}

/// `(1 - w) rho + w I / (d_A d_B)`; `w` is the weight of the white noise.
pub fn mix_white_noise(rho: &BipartiteDensityMatrix, noise_weight: f64) -> Result<BipartiteDensityMatrix> {
    if !(0.0..=1.0).contains(&noise_weight) {
        return Err(Error::Parameter(format!("noise weight {noise_weight} is outside [0, 1]")));
    }
    let n = rho.dims().total();
    let mixed = rho.matrix() * c(1.0 - noise_weight) + linalg::identity(n) * c(noise_weight / n as f64);
    BipartiteDensityMatrix::new(rho.dim_a(), rho.dim_b(), mixed)
}

fn gaussian(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

fn check_sampler_dims(dim_a: usize, dim_b: usize) -> Result<()> {
    Dims::new(dim_a, dim_b).map(|_| ())
}

/// Ginibre-ensemble mixed state `G G^† / tr(G G^†)`, deterministic per seed.
pub fn random_density(dim_a: usize, dim_b: usize, seed: u64) -> Result<BipartiteDensityMatrix> {
    check_sampler_dims(dim_a, dim_b)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = dim_a * dim_b;
    let g = CMatrix::from_fn(n, n, |_, _| gaussian(&mut rng));
    let mut rho = &g * g.adjoint();
    let tr = rho.trace().re;
    rho /= c(tr);
    // Remove rounding asymmetry so the Hermiticity check sees an exact adjoint.
    let rho = (&rho + rho.adjoint()) * c(0.5);
    BipartiteDensityMatrix::new(dim_a, dim_b, rho)
}

/// Uniformly distributed unit vector in `C^d` (normalized complex Gaussian).
pub fn random_unit_vector(dim: usize, rng: &mut ChaCha8Rng) -> CVector {
    loop {
        let v = CVector::from_fn(dim, |_, _| gaussian(rng));
        let norm = v.norm();
        if norm > 0.0 {
            return v.unscale(norm);
        }
    }
}

/// Random pure state on `C^{d_A} ⊗ C^{d_B}`.
pub fn random_pure(dim_a: usize, dim_b: usize, seed: u64) -> Result<PureState> {
    check_sampler_dims(dim_a, dim_b)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    PureState::new(dim_a, dim_b, random_unit_vector(dim_a * dim_b, &mut rng))
}

/// Convex mixture of `terms` random pure product states with flat-Dirichlet weights.
pub fn random_separable(dim_a: usize, dim_b: usize, terms: usize, seed: u64) -> Result<BipartiteDensityMatrix> {
    check_sampler_dims(dim_a, dim_b)?;
    if terms == 0 {
        return Err(Error::Parameter("a separable mixture needs at least one term".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let raw: Vec<f64> = (0..terms).map(|_| rng.sample::<f64, _>(Exp1)).collect();
    let total: f64 = raw.iter().sum();
    let n = dim_a * dim_b;
    let mut rho = CMatrix::zeros(n, n);
    for w in raw {
        let a = random_unit_vector(dim_a, &mut rng);
        let b = random_unit_vector(dim_b, &mut rng);
        let psi = CVector::from_iterator(n, a.iter().flat_map(|x| b.iter().map(move |y| x * y)));
        rho += (&psi * psi.adjoint()) * c(w / total);
    }
    let rho = (&rho + rho.adjoint()) * c(0.5);
    BipartiteDensityMatrix::new(dim_a, dim_b, rho)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schmidt_spectrum_too_long() {
        let s = SchmidtSpectrum::new(vec![0.5, 0.3, 0.2]).unwrap();
        assert!(matches!(pure_from_schmidt(&s, 2, 3), Err(Error::Parameter(_))));
    }

    #[test]
    fn product_from_trivial_spectrum() {
        let s = SchmidtSpectrum::new(vec![1.0, 0.0]).unwrap();
        let psi = pure_from_schmidt(&s, 2, 2).unwrap();
        assert_eq!(psi.amplitudes()[0], c(1.0));
        assert!(psi.amplitudes().iter().skip(1).all(|z| *z == c(0.0)));
    }

    #[test]
    fn chessboard_rejects_zero_m_or_n() {
        let mut p = ChessboardParams::EXAMPLE;
        p.n = 0.0;
        assert!(chessboard_state(&p).is_err());
        p = ChessboardParams::EXAMPLE;
        p.m = 0.0;
        assert!(chessboard_state(&p).is_err());
    }

    #[test]
    fn degenerate_chessboard_is_diagonal_rank_two() {
        let p = ChessboardParams { m: 1.0, n: 1.0, a: 0.0, b: 0.0, c: 0.0, d: 0.0 };
        let rho = chessboard_state(&p).unwrap();
        assert!((rho.matrix().trace().re - 1.0).abs() < 1e-14);
        let eig = linalg::hermitian_eigenvalues(rho.matrix()).unwrap();
        assert_eq!(eig.iter().filter(|x| **x > 1e-12).count(), 2);
    }

    #[test]
    fn noise_weight_out_of_range() {
        let rho = bell_state();
        assert!(mix_white_noise(&rho, -0.1).is_err());
        assert!(mix_white_noise(&rho, 1.5).is_err());
        assert!(mix_white_noise(&rho, f64::NAN).is_err());
    }

    #[test]
    fn samplers_need_terms_and_dims() {
        assert!(random_separable(2, 2, 0, 1).is_err());
        assert!(random_density(0, 2, 1).is_err());
    }
}
