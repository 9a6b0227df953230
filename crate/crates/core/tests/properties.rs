//! Property tests for structural invariants.

mod common;

use proptest::prelude::*;
use rmtdpp::aztec::{self, AztecGraph};
use rmtdpp::cli::parse_grid;
use rmtdpp::fredholm::{fredholm_det, IntervalSpec};
use rmtdpp::kernels::{airy_kernel, condition_on, sine_kernel, Kernel};
use rmtdpp::numlin::{lu_det, schur_step, sym_eigenvalues, DenseMatrix};
use rmtdpp::samplers::{sample_general, sample_ortho_proj, Rng};
use rmtdpp::specfun::gauss_legendre;

fn matrix(n: usize) -> impl Strategy<Value = DenseMatrix<f64>> {
    prop::collection::vec(-1.0f64..1.0, n * n).prop_map(move |v| {
        let mut m = DenseMatrix::new(n, n, v).unwrap();
        for i in 0..n {
            m[(i, i)] += n as f64;
        }
        m
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn schur_step_factors_determinant(a in matrix(6), i in 0usize..6) {
        let full = lu_det(&a).unwrap();
        let s = schur_step(&a, i, 0.0).unwrap();
        let reduced = lu_det(&s).unwrap();
        prop_assert!((full - a[(i, i)] * reduced).abs() <= 1e-9 * full.abs().max(1.0));
    }

    #[test]
    fn symmetric_spectrum_sums_to_trace(a in matrix(7)) {
        let s = a.add(&a.transpose()).unwrap();
        let ev = sym_eigenvalues(&s).unwrap();
        let sum: f64 = ev.iter().sum();
        prop_assert!((sum - s.trace()).abs() < 1e-9 * s.trace().abs().max(1.0));
        let prod: f64 = ev.iter().product();
        let det = lu_det(&s).unwrap();
        prop_assert!((prod - det).abs() <= 1e-8 * det.abs().max(1.0));
    }

    #[test]
    fn gauss_legendre_exact_to_degree(m in 2usize..24, a in -3.0f64..0.0, w in 0.1f64..4.0) {
        let rule = gauss_legendre(m);
        let b = a + w;
        let deg = (2 * m - 1) as i32;
        let got = rule.integrate(a, b, |x| x.powi(deg));
        let want = (b.powi(deg + 1) - a.powi(deg + 1)) / (deg + 1) as f64;
        prop_assert!((got - want).abs() <= 1e-10 * want.abs().max(b.abs().max(a.abs()).powi(deg + 1)));
    }

    #[test]
    fn classical_kernels_are_symmetric(x in -6.0f64..4.0, y in -6.0f64..4.0) {
        let k = airy_kernel();
        prop_assert!((k.eval(x, y) - k.eval(y, x)).abs() < 1e-12);
        let s = sine_kernel();
        prop_assert!((s.eval(x, y) - s.eval(y, x)).abs() < 1e-12);
    }

    #[test]
    fn pinned_kernel_vanishes_at_pin(p in -3.0f64..1.0, y in -4.0f64..2.0) {
        let k = condition_on(&airy_kernel(), &[p]).unwrap();
        prop_assert!(k.eval(p, y).abs() < 1e-9);
        prop_assert!(k.eval(y, p).abs() < 1e-9);
    }

    #[test]
    fn airy_gap_probability_is_monotone(s in -5.0f64..3.0, d in 0.05f64..1.0) {
        let k = airy_kernel();
        let lo = fredholm_det(k.as_ref(), &IntervalSpec::right_infinite(s), 40).unwrap();
        let hi = fredholm_det(k.as_ref(), &IntervalSpec::right_infinite(s + d), 40).unwrap();
        prop_assert!((0.0..=1.0).contains(&lo) && (0.0..=1.0 + 1e-12).contains(&hi));
        prop_assert!(hi >= lo - 1e-12);
    }

    #[test]
    fn projection_sample_has_rank_size(seed in any::<u64>(), n in 4usize..20, r in 1usize..4) {
        let y = common::random_orthonormal(n, r, seed);
        let mut rng = Rng::new(seed);
        let s = sample_ortho_proj(&y, &mut rng).unwrap();
        prop_assert_eq!(s.len(), r);
        prop_assert!(s.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(s.iter().all(|&i| i < n));
    }

    #[test]
    fn general_sampler_is_deterministic(seed in any::<u64>()) {
        let k = common::l_ensemble_kernel(8, seed, false);
        let a = sample_general(&k, &mut Rng::new(seed), None).unwrap();
        let b = sample_general(&k, &mut Rng::new(seed), None).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn grid_has_expected_length(start in -10i32..10, steps in 0usize..200) {
        let step = 0.05;
        let start = start as f64 * 0.5;
        let stop = start + steps as f64 * step;
        let g = parse_grid(&format!("{start}:{step}:{stop}")).unwrap();
        prop_assert_eq!(g.len(), steps + 1);
        prop_assert!(g.windows(2).all(|w| w[1] > w[0]));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn random_tilings_are_valid(n in 1usize..6, seed in any::<u64>()) {
        let g = AztecGraph::new(n).unwrap();
        let t = aztec::sample_tiling(n, &mut Rng::new(seed)).unwrap();
        prop_assert_eq!(t.dominoes.len(), n * (n + 1));
        prop_assert!(t.validate(&g).is_ok());
        let paths = aztec::classify_and_extract_paths(&t).unwrap();
        prop_assert_eq!(paths.len(), n);
        prop_assert!(paths.iter().all(|p| p.is_continuous()));
    }

    #[test]
    fn top_path_is_continuous(n in 1usize..6, seed in any::<u64>()) {
        let p = aztec::sample_top_dr_path(n, &mut Rng::new(seed)).unwrap();
        prop_assert!(p.is_continuous());
        prop_assert!(!p.segments.is_empty());
    }
}
