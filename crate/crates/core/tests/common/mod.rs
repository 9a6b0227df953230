//! Shared oracles and statistical thresholds for the integration tests.
#![allow(dead_code)]

use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rmtdpp::numlin::{lu_det, DenseMatrix, Lu};

/// Upper 1% point of chi-square with `dof` degrees of freedom
/// (Wilson-Hilferty; within 0.5% of the exact value for dof >= 2).
pub fn chi2_critical_1pct(dof: usize) -> f64 {
    if dof == 1 {
        return 6.634_896_601;
    }
    let k = dof as f64;
    let z = 2.326_347_874;
    k * (1.0 - 2.0 / (9.0 * k) + z * (2.0 / (9.0 * k)).sqrt()).powi(3)
}

/// One-sample Kolmogorov-Smirnov critical value at 1%.
pub fn ks_critical_1pct(n: usize) -> f64 {
    1.628 / (n as f64).sqrt()
}

/// Two-sample Kolmogorov-Smirnov critical value at 1%.
pub fn ks2_critical_1pct(n: usize, m: usize) -> f64 {
    1.628 * ((n + m) as f64 / (n * m) as f64).sqrt()
}

pub fn ks2_statistic(a: &[f64], b: &[f64]) -> f64 {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    let (mut i, mut j, mut d) = (0usize, 0usize, 0f64);
    while i < a.len() && j < b.len() {
        let x = a[i].min(b[j]);
        while i < a.len() && a[i] <= x {
            i += 1;
        }
        while j < b.len() && b[j] <= x {
            j += 1;
        }
        d = d.max((i as f64 / a.len() as f64 - j as f64 / b.len() as f64).abs());
    }
    d
}

/// Chi-square statistic of observed counts against probabilities.
pub fn chi2_statistic(counts: &[usize], probs: &[f64]) -> f64 {
    let n: usize = counts.iter().sum();
    counts
        .iter()
        .zip(probs)
        .filter(|(_, &p)| p > 0.0)
        .map(|(&c, &p)| {
            let e = n as f64 * p;
            (c as f64 - e).powi(2) / e
        })
        .sum()
}

pub fn mask(set: &[usize]) -> usize {
    set.iter().fold(0, |m, &i| m | (1 << i))
}

/// `P(J = S)` for every subset mask `S`: `(-1)^{|S^c|} det(K - I_{S^c})`.
pub fn atom_oracle(k: &DenseMatrix<f64>) -> Vec<f64> {
    let n = k.rows();
    (0..1usize << n)
        .map(|s| {
            let mut m = k.clone();
            let mut sign = 1.0;
            for i in 0..n {
                if s & (1 << i) == 0 {
                    m[(i, i)] -= 1.0;
                    sign = -sign;
                }
            }
            sign * lu_det(&m).unwrap_or(0.0)
        })
        .collect()
}

/// `K = L (I + L)^{-1}` with `L = A A^T + c I` plus, when `skew`, a
/// skew-symmetric part. The symmetric part of `L` is positive definite, so
/// every principal minor of `L` is positive and `K` is a valid marginal
/// kernel, symmetric only when `skew` is false.
pub fn l_ensemble_kernel(n: usize, seed: u64, skew: bool) -> DenseMatrix<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = DenseMatrix::from_fn(n, n, |_, _| rng.random::<f64>() - 0.5);
    let mut l = a.matmul(&a.transpose()).unwrap().add(&DenseMatrix::identity(n).scale(0.3)).unwrap();
    if skew {
        let b = DenseMatrix::from_fn(n, n, |_, _| rng.random::<f64>() - 0.5);
        l = l.add(&b.sub(&b.transpose()).unwrap().scale(0.8)).unwrap();
    }
    let inv = Lu::factor(&DenseMatrix::identity(n).add(&l).unwrap()).inverse().unwrap();
    l.matmul(&inv).unwrap()
}

/// `n x r` matrix with orthonormal columns (modified Gram-Schmidt).
pub fn random_orthonormal(n: usize, r: usize, seed: u64) -> DenseMatrix<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut y = DenseMatrix::from_fn(n, r, |_, _| rng.random::<f64>() - 0.5);
    for c in 0..r {
        for p in 0..c {
            let dot: f64 = (0..n).map(|i| y[(i, c)] * y[(i, p)]).sum();
            for i in 0..n {
                let v = y[(i, p)];
                y[(i, c)] -= dot * v;
            }
        }
        let norm = (0..n).map(|i| y[(i, c)].powi(2)).sum::<f64>().sqrt();
        for i in 0..n {
            y[(i, c)] /= norm;
        }
    }
    y
}

/// Non-symmetric rank-`r` projection `A (A^T W A)^{-1} A^T W` with a random
/// positive diagonal `W`. By Cauchy-Binet its atoms are
/// `det(W_S) det(A_S)^2 / det(A^T W A) >= 0`, so it is a valid DPP kernel.
pub fn oblique_projection(n: usize, r: usize, seed: u64) -> DenseMatrix<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = DenseMatrix::from_fn(n, r, |_, _| rng.random::<f64>() - 0.5);
    let w: Vec<f64> = (0..n).map(|_| 0.2 + 2.0 * rng.random::<f64>()).collect();
    let wa = DenseMatrix::from_fn(n, r, |i, j| w[i] * a[(i, j)]);
    let inv = Lu::factor(&a.transpose().matmul(&wa).unwrap()).inverse().unwrap();
    a.matmul(&inv).unwrap().matmul(&wa.transpose()).unwrap()
}

pub fn mean_var(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let m = xs.iter().sum::<f64>() / n;
    (m, xs.iter().map(|x| (x - m).powi(2)).sum::<f64>() / (n - 1.0))
}

pub fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    xs[xs.len() / 2]
}
