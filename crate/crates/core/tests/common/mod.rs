//! Test-only oracles, written independently of the library's numerical paths.
#![allow(dead_code)]

use kyfan_sep::{CMatrix, CVector};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

/// Cyclic Jacobi eigenvalues of a real symmetric matrix (row-major, n x n), ascending.
pub fn jacobi_symmetric_eigenvalues(mut a: Vec<f64>, n: usize) -> Vec<f64> {
    let idx = |i: usize, j: usize| i * n + j;
    for _sweep in 0..100 {
        let off: f64 = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).map(|(i, j)| a[idx(i, j)].powi(2)).sum();
        let scale: f64 = a.iter().map(|x| x * x).sum::<f64>().max(f64::MIN_POSITIVE);
        if off <= 1e-30 * scale {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[idx(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[idx(q, q)] - a[idx(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let cos = 1.0 / (t * t + 1.0).sqrt();
                let sin = t * cos;
                for k in 0..n {
                    let akp = a[idx(k, p)];
                    let akq = a[idx(k, q)];
                    a[idx(k, p)] = cos * akp - sin * akq;
                    a[idx(k, q)] = sin * akp + cos * akq;
                }
                for k in 0..n {
                    let apk = a[idx(p, k)];
                    let aqk = a[idx(q, k)];
                    a[idx(p, k)] = cos * apk - sin * aqk;
                    a[idx(q, k)] = sin * apk + cos * aqk;
                }
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[idx(i, i)]).collect();
    eig.sort_by(f64::total_cmp);
    eig
}

/// Eigenvalues of a Hermitian matrix via the real embedding `[[Re, -Im], [Im, Re]]`, ascending.
pub fn hermitian_eigenvalues_oracle(h: &CMatrix) -> Vec<f64> {
    let n = h.nrows();
    let m = 2 * n;
    let mut a = vec![0.0; m * m];
    for i in 0..n {
        for j in 0..n {
            // Symmetrize explicitly so tiny Hermiticity defects do not leak in.
            let z = (h[(i, j)] + h[(j, i)].conj()) * 0.5;
            a[i * m + j] = z.re;
            a[(i + n) * m + (j + n)] = z.re;
            a[i * m + (j + n)] = -z.im;
            a[(i + n) * m + j] = z.im;
        }
    }
    let all = jacobi_symmetric_eigenvalues(a, m);
    // Every eigenvalue appears twice.
    all.chunks(2).map(|p| 0.5 * (p[0] + p[1])).collect()
}

/// Singular values from the eigenvalues of the smaller Gram matrix, descending.
pub fn singular_values_oracle(a: &CMatrix) -> Vec<f64> {
    let gram = if a.nrows() >= a.ncols() { a.adjoint() * a } else { a * a.adjoint() };
    let mut s: Vec<f64> = hermitian_eigenvalues_oracle(&gram).into_iter().map(|x| x.max(0.0).sqrt()).collect();
    s.reverse();
    s
}

/// `sum sqrt(eig(A^† A))`; accurate for well-conditioned matrices only.
pub fn gram_trace_norm_oracle(a: &CMatrix) -> f64 {
    singular_values_oracle(a).iter().sum()
}

/// Trace norm from the Hermitian dilation `[[0, A], [A^†, 0]]`, whose eigenvalues are `±sigma_i`.
/// Accurate for rank-deficient matrices too.
pub fn trace_norm_oracle(a: &CMatrix) -> f64 {
    let (m, n) = a.shape();
    let mut h = CMatrix::zeros(m + n, m + n);
    h.view_mut((0, m), (m, n)).copy_from(a);
    h.view_mut((m, 0), (n, m)).copy_from(&a.adjoint());
    0.5 * hermitian_eigenvalues_oracle(&h).iter().map(|x| x.abs()).sum::<f64>()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gaussian_matrix(rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> CMatrix {
    CMatrix::from_fn(rows, cols, |_, _| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
}

pub fn real_gaussian_matrix(rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> CMatrix {
    CMatrix::from_fn(rows, cols, |_, _| Complex64::new(rng.sample(StandardNormal), 0.0))
}

/// Haar-ish random unitary: Gram-Schmidt on a complex Gaussian matrix.
pub fn random_unitary(n: usize, rng: &mut ChaCha8Rng) -> CMatrix {
    let g = gaussian_matrix(n, n, rng);
    let mut cols: Vec<CVector> = Vec::with_capacity(n);
    for j in 0..n {
        let mut v = g.column(j).into_owned();
        for u in &cols {
            let proj = u.dotc(&v);
            v -= u * proj;
        }
        let norm = v.norm();
        cols.push(v / Complex64::new(norm, 0.0));
    }
    CMatrix::from_columns(&cols)
}

/// Density matrix `G G^T / tr` with a real Gaussian `G` of the given rank.
pub fn random_real_density(n: usize, rank: usize, rng: &mut ChaCha8Rng) -> CMatrix {
    let g = real_gaussian_matrix(n, rank, rng);
    let rho = &g * g.transpose();
    let tr = rho.trace();
    let rho = rho / tr;
    let rho = (&rho + rho.transpose()) * Complex64::new(0.5, 0.0);
    rho.map(|z| Complex64::new(z.re, 0.0))
}

/// Direct block-by-block realignment: row `i + j*d_A` is `vec(Z_ij)^T`, built by
/// slicing out each block and stacking its columns by hand.
pub fn realign_by_blocks(m: &CMatrix, da: usize, db: usize) -> CMatrix {
    let mut out = CMatrix::zeros(da * da, db * db);
    for j in 0..da {
        for i in 0..da {
            let block = m.view((i * db, j * db), (db, db)).into_owned();
            let mut stacked = Vec::with_capacity(db * db);
            for col in 0..db {
                for row in 0..db {
                    stacked.push(block[(row, col)]);
                }
            }
            for (t, z) in stacked.into_iter().enumerate() {
                out[(i + j * da, t)] = z;
            }
        }
    }
    out
}

pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    assert_eq!(a.shape(), b.shape());
    a.iter().zip(b.iter()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

pub fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}
