//! Monte Carlo checks of the process samplers against exact quantities.

mod common;

use common::{ks2_critical_1pct, ks2_statistic, mean_var};
use rmtdpp::airyproc::{build_block_kernel, sample_airy_path, simulate_dbm, two_time_prob, MultitimeGrid};
use rmtdpp::samplers::Rng;

const TW_MEAN: f64 = -1.771_086_807_411;
const TW_VAR: f64 = 0.813_194_792_8;

fn correlation(a: &[f64], b: &[f64]) -> f64 {
    let (ma, va) = mean_var(a);
    let (mb, vb) = mean_var(b);
    let cov = a.iter().zip(b).map(|(x, y)| (x - ma) * (y - mb)).sum::<f64>() / (a.len() - 1) as f64;
    cov / (va * vb).sqrt()
}

fn airy_runs(times: &[f64], cells: usize, runs: usize, seed: u64) -> Vec<Vec<f64>> {
    let grid = MultitimeGrid::new(times, -5.0, 2.5, cells).unwrap();
    let k = build_block_kernel(&grid);
    let mut rng = Rng::new(seed);
    (0..runs).map(|_| sample_airy_path(&k, &mut rng).unwrap().values).collect()
}

fn column(runs: &[Vec<f64>], j: usize) -> Vec<f64> {
    runs.iter().map(|r| r[j]).collect()
}

#[test]
fn dbm_marginal_is_tracy_widom() {
    let runs = 300;
    let mut rng = Rng::new(17);
    let paths: Vec<Vec<f64>> = (0..runs)
        .map(|_| simulate_dbm(100, &[0.0, 1.0], &mut rng).unwrap().values)
        .collect();
    for j in 0..2 {
        let (m, v) = mean_var(&column(&paths, j));
        let band = 3.0 * (TW_VAR / runs as f64).sqrt() + 0.15;
        assert!((m - TW_MEAN).abs() < band, "time {j}: mean {m}");
        assert!((v - TW_VAR).abs() < 0.3, "time {j}: variance {v}");
    }
    let s = -1.5;
    let both = paths.iter().filter(|p| p[0] <= s && p[1] <= s).count() as f64 / runs as f64;
    let exact = two_time_prob(1.0, s, s, 30).unwrap();
    let sd = (exact * (1.0 - exact) / runs as f64).sqrt();
    assert!((both - exact).abs() < 3.0 * sd + 0.06, "joint {both} vs {exact}");
}

#[test]
fn airy_process_is_stationary() {
    let runs = airy_runs(&[0.0, 0.5, 1.0, 1.5], 60, 400, 23);
    let first = column(&runs, 0);
    for j in 1..4 {
        let other = column(&runs, j);
        let d = ks2_statistic(&first, &other);
        assert!(d < ks2_critical_1pct(first.len(), other.len()), "time {j}: D = {d}");
    }
}

#[test]
fn airy_process_correlation_decays() {
    let runs = airy_runs(&[0.0, 0.25, 10.0], 60, 500, 29);
    let a0 = column(&runs, 0);
    let near = correlation(&a0, &column(&runs, 1));
    let far = correlation(&a0, &column(&runs, 2));
    // Var(A(t) - A(0)) ~ 2t for small t.
    let expect_near = 1.0 - 0.25 / TW_VAR;
    assert!((near - expect_near).abs() < 0.15, "near correlation {near}");
    assert!(far.abs() < 0.15, "far correlation {far}");
}
