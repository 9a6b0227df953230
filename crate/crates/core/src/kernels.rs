//! Correlation kernels and their conditional (pinned) versions.

use std::f64::consts::PI;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::numlin::{DenseMatrix, Lu, COND_TOL};
use crate::specfun::{airy, bessel_j, gauss_legendre, hermite_phi_all, hermite_phi_pair};

/// Below this separation the ratio form of an integrable kernel is replaced
/// by a Taylor expansion about the diagonal.
pub const DIAG_EPS: f64 = 1e-4;

/// A real correlation kernel `K(x, y)`.
pub trait Kernel: Send + Sync {
    fn eval(&self, x: f64, y: f64) -> f64;

    fn diag(&self, x: f64) -> f64 {
        self.eval(x, x)
    }

    fn label(&self) -> String;

    /// `[K(x_i, y_j)]`. Implementations override this to reuse per-point work.
    fn matrix(&self, xs: &[f64], ys: &[f64]) -> DenseMatrix {
        DenseMatrix::from_fn(xs.len(), ys.len(), |r, c| {
            if xs[r] == ys[c] {
                self.diag(xs[r])
            } else {
                self.eval(xs[r], ys[c])
            }
        })
    }
}

/// Shared handle to a kernel.
pub type KernelFn = Arc<dyn Kernel>;

impl fmt::Debug for dyn Kernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Kernel({})", self.label())
    }
}

/// `[F(x)G(y) - G(x)F(y)] / (x - y)` close to the diagonal, from the
/// derivatives `f[k] = F^(k)(x)`, `g[k] = G^(k)(x)` and `h = y - x`.
fn integrable_near_diag(f: &[f64], g: &[f64], h: f64) -> f64 {
    let mut sum = 0.0;
    let mut hp = 1.0;
    let mut fact = 1.0;
    for k in 1..f.len().min(g.len()) {
        fact *= k as f64;
        sum += hp / fact * (f[0] * g[k] - g[0] * f[k]);
        hp *= h;
    }
    -sum
}

const TAYLOR_ORDER: usize = 7;

/// Kernel backed by a closure; the diagonal is `f(x, x)`.
pub struct FnKernel<F> {
    label: String,
    f: F,
}

impl<F: Fn(f64, f64) -> f64 + Send + Sync> FnKernel<F> {
    pub fn new(label: impl Into<String>, f: F) -> Self {
        Self {
            label: label.into(),
            f,
        }
    }
}

impl<F: Fn(f64, f64) -> f64 + Send + Sync> Kernel for FnKernel<F> {
    fn eval(&self, x: f64, y: f64) -> f64 {
        (self.f)(x, y)
    }

    fn label(&self) -> String {
        self.label.clone()
    }
}

/// Wraps a closure as a shared kernel.
pub fn fn_kernel(
    label: impl Into<String>,
    f: impl Fn(f64, f64) -> f64 + Send + Sync + 'static,
) -> KernelFn {
    Arc::new(FnKernel::new(label, f))
}

// ---------------------------------------------------------------- Airy

/// The Airy kernel `(Ai(x)Ai'(y) - Ai'(x)Ai(y)) / (x - y)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct AiryKernel;

/// `Ai^(k)(x)` for `k < n`, from `Ai'' = x Ai`.
fn airy_derivatives(x: f64, ai: f64, aip: f64, n: usize) -> Vec<f64> {
    let mut d = vec![0.0; n];
    d[0] = ai;
    if n > 1 {
        d[1] = aip;
    }
    for k in 0..n.saturating_sub(2) {
        // (x A)^(k) = x A^(k) + k A^(k-1)
        let prev = if k > 0 { k as f64 * d[k - 1] } else { 0.0 };
        d[k + 2] = x * d[k] + prev;
    }
    d
}

impl AiryKernel {
    fn entry(x: f64, ax: (f64, f64), y: f64, ay: (f64, f64)) -> f64 {
        let h = y - x;
        if h == 0.0 {
            return ax.1 * ax.1 - x * ax.0 * ax.0;
        }
        if h.abs() < DIAG_EPS {
            let d = airy_derivatives(x, ax.0, ax.1, TAYLOR_ORDER + 1);
            return integrable_near_diag(&d[..TAYLOR_ORDER], &d[1..], h);
        }
        (ax.0 * ay.1 - ax.1 * ay.0) / (x - y)
    }
}

impl Kernel for AiryKernel {
    fn eval(&self, x: f64, y: f64) -> f64 {
        Self::entry(x, airy(x), y, airy(y))
    }

    fn diag(&self, x: f64) -> f64 {
        let (ai, aip) = airy(x);
        aip * aip - x * ai * ai
    }

    fn label(&self) -> String {
        "airy".into()
    }

    fn matrix(&self, xs: &[f64], ys: &[f64]) -> DenseMatrix {
        let ax: Vec<_> = xs.iter().map(|&x| airy(x)).collect();
        let ay: Vec<_> = ys.iter().map(|&y| airy(y)).collect();
        DenseMatrix::from_fn(xs.len(), ys.len(), |r, c| Self::entry(xs[r], ax[r], ys[c], ay[c]))
    }
}

pub fn airy_kernel() -> KernelFn {
    Arc::new(AiryKernel)
}

// ---------------------------------------------------------------- sine

/// The sine kernel `sin(pi(x - y)) / (pi(x - y))`.
#[derive(Debug, Clone, Copy, Default)]
pub struct SineKernel;

fn sinc_pi(d: f64) -> f64 {
    let t = PI * d;
    if t.abs() < 1e-4 {
        let t2 = t * t;
        1.0 - t2 / 6.0 + t2 * t2 / 120.0
    } else {
        t.sin() / t
    }
}

impl Kernel for SineKernel {
    fn eval(&self, x: f64, y: f64) -> f64 {
        sinc_pi(x - y)
    }

    fn diag(&self, _x: f64) -> f64 {
        1.0
    }

    fn label(&self) -> String {
        "sine".into()
    }
}

pub fn sine_kernel() -> KernelFn {
    Arc::new(SineKernel)
}

// ---------------------------------------------------------------- Bessel

/// Hard-edge Bessel kernel of integer order on `(0, inf)`.
#[derive(Debug, Clone, Copy)]
pub struct BesselKernel {
    alpha: usize,
}

#[derive(Debug, Clone, Copy)]
struct BesselPoint {
    /// `F(x) = J_a(sqrt x)`
    f: f64,
    /// `G(x) = sqrt(x) J_a'(sqrt x) / 2`
    g: f64,
    /// `F'(x)`
    fp: f64,
}

impl BesselKernel {
    fn point(&self, x: f64) -> BesselPoint {
        let x = x.max(0.0);
        let z = x.sqrt();
        let (j, jp) = bessel_j(self.alpha as f64, z).expect("integer order");
        let fp = if z > 0.0 {
            jp / (2.0 * z)
        } else {
            // J_a(sqrt x) = (x/4)^{a/2}/a! (1 - ...)
            match self.alpha {
                0 => -0.25,
                2 => 0.125,
                _ => 0.0,
            }
        };
        BesselPoint {
            f: j,
            g: 0.5 * z * jp,
            fp,
        }
    }

    /// `F^(k)(x)` for `k < n` from `4x^2 F'' + 4x F' + (x - a^2) F = 0`.
    fn derivatives(&self, x: f64, p: BesselPoint, n: usize) -> Vec<f64> {
        let a2 = (self.alpha * self.alpha) as f64;
        let mut d = vec![0.0; n];
        d[0] = p.f;
        if n > 1 {
            d[1] = p.fp;
        }
        for k in 0..n.saturating_sub(2) {
            let kf = k as f64;
            let prev = if k > 0 { kf * d[k - 1] } else { 0.0 };
            d[k + 2] = -((8.0 * kf + 4.0) * x * d[k + 1]
                + (4.0 * kf * (kf - 1.0) + 4.0 * kf + x - a2) * d[k]
                + prev)
                / (4.0 * x * x);
        }
        d
    }

    fn diag_value(&self, x: f64) -> f64 {
        let z = x.max(0.0).sqrt();
        let a = self.alpha as f64;
        let j = bessel_j(a, z).expect("integer order").0;
        let jp1 = bessel_j(a + 1.0, z).expect("integer order").0;
        let jm1 = if self.alpha == 0 {
            -jp1
        } else {
            bessel_j(a - 1.0, z).expect("integer order").0
        };
        0.25 * (j * j - jp1 * jm1)
    }

    fn entry(&self, x: f64, px: BesselPoint, y: f64, py: BesselPoint) -> f64 {
        let h = y - x;
        if h == 0.0 {
            return self.diag_value(x);
        }
        if h.abs() < DIAG_EPS {
            // The expansion needs |h| well inside the radius set by x.
            if h.abs() < 1e-2 * x {
                let f = self.derivatives(x, px, TAYLOR_ORDER + 1);
                let g: Vec<f64> = (0..TAYLOR_ORDER)
                    .map(|k| x * f[k + 1] + k as f64 * f[k])
                    .collect();
                return integrable_near_diag(&f[..TAYLOR_ORDER], &g, h);
            }
            if x.min(y) <= 1e-2 * DIAG_EPS {
                return self.diag_value(0.5 * (x + y));
            }
        }
        (px.f * py.g - px.g * py.f) / (x - y)
    }
}

impl Kernel for BesselKernel {
    fn eval(&self, x: f64, y: f64) -> f64 {
        self.entry(x, self.point(x), y, self.point(y))
    }

    fn diag(&self, x: f64) -> f64 {
        self.diag_value(x)
    }

    fn label(&self) -> String {
        format!("bessel(alpha={})", self.alpha)
    }

    fn matrix(&self, xs: &[f64], ys: &[f64]) -> DenseMatrix {
        let px: Vec<_> = xs.iter().map(|&x| self.point(x)).collect();
        let py: Vec<_> = ys.iter().map(|&y| self.point(y)).collect();
        DenseMatrix::from_fn(xs.len(), ys.len(), |r, c| self.entry(xs[r], px[r], ys[c], py[c]))
    }
}

pub fn bessel_kernel(alpha: usize) -> KernelFn {
    Arc::new(BesselKernel { alpha })
}

// ---------------------------------------------------------------- Hermite

/// GUE kernel `sum_{i<N} phi_i(x) phi_i(y)`.
#[derive(Debug, Clone, Copy)]
pub struct HermiteKernel {
    n: usize,
}

impl HermiteKernel {
    fn entry(&self, x: f64, px: (f64, f64), y: f64, py: (f64, f64)) -> f64 {
        if (x - y).abs() < DIAG_EPS {
            let a = hermite_phi_all(self.n, x);
            let b = hermite_phi_all(self.n, y);
            return a.iter().zip(&b).map(|(p, q)| p * q).sum();
        }
        // px = (phi_{N-1}, phi_N)
        (self.n as f64 / 2.0).sqrt() * (px.1 * py.0 - px.0 * py.1) / (x - y)
    }
}

impl Kernel for HermiteKernel {
    fn eval(&self, x: f64, y: f64) -> f64 {
        self.entry(x, hermite_phi_pair(self.n, x), y, hermite_phi_pair(self.n, y))
    }

    fn diag(&self, x: f64) -> f64 {
        hermite_phi_all(self.n, x).iter().map(|p| p * p).sum()
    }

    fn label(&self) -> String {
        format!("hermite(N={})", self.n)
    }

    fn matrix(&self, xs: &[f64], ys: &[f64]) -> DenseMatrix {
        let px: Vec<_> = xs.iter().map(|&x| hermite_phi_pair(self.n, x)).collect();
        let py: Vec<_> = ys.iter().map(|&y| hermite_phi_pair(self.n, y)).collect();
        DenseMatrix::from_fn(xs.len(), ys.len(), |r, c| self.entry(xs[r], px[r], ys[c], py[c]))
    }
}

pub fn hermite_kernel(n: usize) -> KernelFn {
    assert!(n >= 1, "hermite kernel needs N >= 1");
    Arc::new(HermiteKernel { n })
}

// ---------------------------------------------------------------- pinned

/// A kernel conditioned on points at the given locations:
/// `K(x, y) - k_x^T G^{-1} k_y` with `G = [K(s_i, s_j)]`.
pub struct PinnedKernel {
    base: KernelFn,
    pins: Vec<f64>,
    gram: Lu<f64>,
}

impl PinnedKernel {
    pub fn pins(&self) -> &[f64] {
        &self.pins
    }

    pub fn base(&self) -> &KernelFn {
        &self.base
    }

    fn correction(&self, x: f64, y: f64) -> f64 {
        let kx: Vec<f64> = self.pins.iter().map(|&s| self.base.eval(x, s)).collect();
        let ky: Vec<f64> = self.pins.iter().map(|&s| self.base.eval(s, y)).collect();
        let sol = self.gram.solve_vec(&ky).expect("gram factor checked at construction");
        kx.iter().zip(&sol).map(|(a, b)| a * b).sum()
    }
}

impl Kernel for PinnedKernel {
    fn eval(&self, x: f64, y: f64) -> f64 {
        let base = if x == y { self.base.diag(x) } else { self.base.eval(x, y) };
        base - self.correction(x, y)
    }

    fn label(&self) -> String {
        let pins: Vec<String> = self.pins.iter().map(|s| format!("{s}")).collect();
        format!("{}|{}", self.base.label(), pins.join(","))
    }

    fn matrix(&self, xs: &[f64], ys: &[f64]) -> DenseMatrix {
        let k = self.base.matrix(xs, ys);
        let kxs = self.base.matrix(xs, &self.pins);
        let ksy = self.base.matrix(&self.pins, ys);
        let sol = self.gram.solve(&ksy).expect("gram factor checked at construction");
        let corr = kxs.matmul(&sol).expect("shapes agree");
        k.sub(&corr).expect("shapes agree")
    }
}

/// Conditions `base` on eigenvalues at every point of `pins`.
pub fn condition_on(base: &KernelFn, pins: &[f64]) -> Result<PinnedKernel> {
    for (i, a) in pins.iter().enumerate() {
        if !a.is_finite() || pins[..i].contains(a) {
            return Err(Error::SingularGram);
        }
    }
    let g = base.matrix(pins, pins);
    let gram = Lu::factor(&g);
    if gram.is_singular() {
        return Err(Error::SingularGram);
    }
    // Judge conditioning after equilibration: pins where the density differs
    // by orders of magnitude are harmless for the solves.
    let d: Vec<f64> = (0..pins.len())
        .map(|i| {
            let v = g[(i, i)];
            if v > 0.0 { 1.0 / v.sqrt() } else { 1.0 }
        })
        .collect();
    let scaled = DenseMatrix::from_fn(pins.len(), pins.len(), |r, c| d[r] * g[(r, c)] * d[c]);
    let scaled_lu = Lu::factor(&scaled);
    if scaled_lu.is_singular() || scaled_lu.condition_estimate() > COND_TOL {
        return Err(Error::SingularGram);
    }
    Ok(PinnedKernel {
        base: Arc::clone(base),
        pins: pins.to_vec(),
        gram,
    })
}

/// [`condition_on`] wrapped in a shareable handle.
pub fn pinned(base: &KernelFn, pins: &[f64]) -> Result<KernelFn> {
    if pins.is_empty() {
        return Ok(Arc::clone(base));
    }
    Ok(Arc::new(condition_on(base, pins)?))
}

// ---------------------------------------------------------------- extended Airy

/// Extended Airy kernel between times `s` and `t`.
#[derive(Debug, Clone, Copy)]
pub struct ExtendedAiryKernel {
    s: f64,
    t: f64,
}

/// Above this shift `Ai(x + lambda)^2` is far below double precision for
/// any abscissa the kernel is used at.
const LAMBDA_CAP: f64 = 60.0;
/// For time gaps below this the `s < t` branch goes through the Gaussian
/// identity, above it through the truncated negative half-line.
const GAUSSIAN_SWITCH: f64 = 2.0;

fn half_line_rule() -> &'static [(f64, f64)] {
    static RULE: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    RULE.get_or_init(|| {
        let q = gauss_legendre(80);
        q.nodes
            .iter()
            .zip(&q.weights)
            .filter_map(|(&t, &w)| {
                let u = 0.5 * (t + 1.0);
                let lam = u / (1.0 - u);
                (lam < LAMBDA_CAP).then(|| (lam, 0.5 * w / ((1.0 - u) * (1.0 - u))))
            })
            .collect()
    })
}

impl ExtendedAiryKernel {
    /// Nodes and weights (exponential factor included) for the integral part.
    fn rule(&self) -> Vec<(f64, f64)> {
        let tau = self.t - self.s;
        if tau <= 0.0 {
            // s >= t: int_0^inf e^{-lambda (s - t)} ...
            half_line_rule()
                .iter()
                .map(|&(l, w)| (l, w * (tau * l).exp()))
                .collect()
        } else if tau < GAUSSIAN_SWITCH {
            half_line_rule()
                .iter()
                .map(|&(l, w)| (l, w * (tau * l).exp()))
                .collect()
        } else {
            // -int_{-L}^0 e^{lambda tau} ..., L set by e^{-L tau} <= 1e-16
            let big_l = 37.0 / tau;
            let panels = big_l.ceil() as usize;
            let q = gauss_legendre(80);
            let mut out = Vec::with_capacity(panels * 80);
            for p in 0..panels {
                let a = -big_l + p as f64 * big_l / panels as f64;
                let b = a + big_l / panels as f64;
                let (xs, ws) = q.mapped(a, b);
                for (l, w) in xs.into_iter().zip(ws) {
                    out.push((l, -w * (tau * l).exp()));
                }
            }
            out
        }
    }

    /// Closed-form part of the `s < t` Gaussian identity.
    fn gaussian(&self, x: f64, y: f64) -> f64 {
        let tau = self.t - self.s;
        if tau <= 0.0 || tau >= GAUSSIAN_SWITCH {
            return 0.0;
        }
        let e = -(x - y).powi(2) / (4.0 * tau) - tau * (x + y) / 2.0 + tau.powi(3) / 12.0;
        e.exp() / (4.0 * PI * tau).sqrt()
    }

    fn with_rule(&self, rule: &[(f64, f64)], xs: &[f64], ys: &[f64]) -> DenseMatrix {
        let profile = |x: f64| -> Vec<f64> { rule.iter().map(|&(l, w)| w * airy(x + l).0).collect() };
        let px: Vec<Vec<f64>> = xs.iter().map(|&x| profile(x)).collect();
        let py: Vec<Vec<f64>> = ys
            .iter()
            .map(|&y| rule.iter().map(|&(l, _)| airy(y + l).0).collect())
            .collect();
        DenseMatrix::from_fn(xs.len(), ys.len(), |r, c| {
            let dot: f64 = px[r].iter().zip(&py[c]).map(|(a, b)| a * b).sum();
            dot - self.gaussian(xs[r], ys[c])
        })
    }
}

impl Kernel for ExtendedAiryKernel {
    fn eval(&self, x: f64, y: f64) -> f64 {
        if self.s == self.t {
            return AiryKernel.eval(x, y);
        }
        let rule = self.rule();
        self.with_rule(&rule, &[x], &[y])[(0, 0)]
    }

    fn diag(&self, x: f64) -> f64 {
        self.eval(x, x)
    }

    fn label(&self) -> String {
        format!("extended_airy(s={}, t={})", self.s, self.t)
    }

    fn matrix(&self, xs: &[f64], ys: &[f64]) -> DenseMatrix {
        if self.s == self.t {
            return AiryKernel.matrix(xs, ys);
        }
        let rule = self.rule();
        self.with_rule(&rule, xs, ys)
    }
}

impl ExtendedAiryKernel {
    /// The integral representation even when `s == t` (used to validate it).
    pub fn integral_form(&self, x: f64, y: f64) -> f64 {
        let rule = self.rule();
        self.with_rule(&rule, &[x], &[y])[(0, 0)]
    }
}

pub fn extended_airy_kernel(s: f64, t: f64) -> KernelFn {
    Arc::new(ExtendedAiryKernel { s, t })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numlin::lu_det;
    use crate::specfun::hermite_phi;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn det_of(k: &KernelFn, xs: &[f64]) -> f64 {
        lu_det(&k.matrix(xs, xs)).unwrap_or(0.0)
    }

    #[test]
    fn hermite_examples() {
        let k = hermite_kernel(1);
        assert!((k.diag(0.0) - 1.0 / PI.sqrt()).abs() < 1e-15);
        assert!((k.eval(0.3, -0.8) - hermite_phi(0, 0.3) * hermite_phi(0, -0.8)).abs() < 1e-15);
        assert!(det_of(&k, &[0.1, 0.7]).abs() < 1e-15);
    }

    #[test]
    fn hermite_trace_and_reproducing() {
        let k = hermite_kernel(5);
        let rule = gauss_legendre(200);
        let tr = rule.integrate(-10.0, 10.0, |x| k.diag(x));
        assert!((tr - 5.0).abs() < 1e-8);
        let r300 = gauss_legendre(300);
        for (x, y) in [(0.2, -0.5), (1.3, 1.30001), (-2.0, 0.0)] {
            let lhs = r300.integrate(-12.0, 12.0, |z| k.eval(x, z) * k.eval(z, y));
            assert!((lhs - k.eval(x, y)).abs() < 1e-7);
        }
    }

    #[test]
    fn hermite_cd_matches_sum() {
        let k = HermiteKernel { n: 12 };
        for (x, y) in [(0.3, 1.1), (-2.5, 0.4), (3.0, 3.5)] {
            let a = hermite_phi_all(12, x);
            let b = hermite_phi_all(12, y);
            let direct: f64 = a.iter().zip(&b).map(|(p, q)| p * q).sum();
            assert!((k.eval(x, y) - direct).abs() < 1e-13);
        }
    }

    #[test]
    fn airy_examples() {
        let k = airy_kernel();
        // Ai'(0)^2 = (3^{-1/3} / Gamma(1/3))^2
        assert!((k.diag(0.0) - 0.066_987_483_779_663_99).abs() < 1e-14);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            let x = rng.random_range(-8.0..5.0);
            let y = rng.random_range(-8.0..5.0);
            assert!((k.eval(x, y) - k.eval(y, x)).abs() < 1e-13);
        }
        for x in [-2.0, 0.0, 2.0] {
            let d = k.diag(x);
            assert!(((k.eval(x, x + 1e-8) - d) / d).abs() < 1e-6);
            let sym = 0.5 * (k.eval(x, x + 1e-5) + k.eval(x, x - 1e-5));
            assert!(((sym - d) / d).abs() < 1e-6);
        }
    }

    #[test]
    fn airy_near_diagonal_is_smooth() {
        // Across the switch between the Taylor and the ratio form.
        let k = airy_kernel();
        for x in [-3.0, -0.5, 1.5] {
            let y = x + 0.99 * DIAG_EPS;
            let (ax, apx) = airy(x);
            let (ay, apy) = airy(y);
            let ratio = (ax * apy - apx * ay) / (x - y);
            assert!((k.eval(x, y) - ratio).abs() < 1e-11);
        }
    }

    #[test]
    fn sine_examples() {
        let k = sine_kernel();
        assert_eq!(k.diag(0.37), 1.0);
        assert!(k.eval(0.0, 1.0).abs() < 1e-15);
        assert!((k.eval(0.0, 0.5) - 2.0 / PI).abs() < 1e-15);
        assert!((k.eval(0.0, 1e-6) - 1.0).abs() < 1e-11);
    }

    #[test]
    fn bessel_examples() {
        for alpha in 0..3 {
            let k = bessel_kernel(alpha);
            let mut rng = ChaCha8Rng::seed_from_u64(alpha as u64);
            for _ in 0..100 {
                let x = rng.random_range(0.0..60.0);
                let y = rng.random_range(0.0..60.0);
                assert!((k.eval(x, y) - k.eval(y, x)).abs() < 1e-12);
            }
            for x in [1.0, 10.0] {
                let d = k.diag(x);
                assert!(((k.eval(x, x + 1e-6) - d) / d).abs() < 1e-6, "alpha={alpha} x={x}");
                let sym = 0.5 * (k.eval(x, x + 1e-5) + k.eval(x, x - 1e-5));
                assert!(((sym - d) / d).abs() < 1e-6, "alpha={alpha} x={x}");
                // Taylor branch against the ratio form just inside the switch
                let y = x + 0.99 * DIAG_EPS;
                let (jx, jpx) = bessel_j(alpha as f64, x.sqrt()).unwrap();
                let (jy, jpy) = bessel_j(alpha as f64, y.sqrt()).unwrap();
                let ratio = (jx * y.sqrt() * jpy - x.sqrt() * jpx * jy) / (2.0 * (x - y));
                assert!((k.eval(x, y) - ratio).abs() < 1e-10, "alpha={alpha} x={x}");
            }
        }
        // alpha = 0: K(0, 0) = 1/4, consistent with the exp(-s/4) gap law
        assert!((bessel_kernel(0).diag(0.0) - 0.25).abs() < 1e-15);
    }

    #[test]
    fn bessel_kernel_matches_definition() {
        let alpha = 1usize;
        let k = bessel_kernel(alpha);
        let (x, y): (f64, f64) = (2.3, 7.9);
        let (jx, jpx) = bessel_j(1.0, x.sqrt()).unwrap();
        let (jy, jpy) = bessel_j(1.0, y.sqrt()).unwrap();
        let expect = (jx * y.sqrt() * jpy - x.sqrt() * jpx * jy) / (2.0 * (x - y));
        assert!((k.eval(x, y) - expect).abs() < 1e-15);
    }

    #[test]
    fn correlation_determinants_nonnegative() {
        let kernels: Vec<(KernelFn, f64, f64)> = vec![
            (hermite_kernel(6), -4.0, 4.0),
            (airy_kernel(), -6.0, 3.0),
            (sine_kernel(), -3.0, 3.0),
            (bessel_kernel(1), 0.0, 30.0),
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (k, lo, hi) in kernels {
            for n in 1..=4 {
                for _ in 0..20 {
                    let mut xs: Vec<f64> = (0..n).map(|_| rng.random_range(lo..hi)).collect();
                    xs.sort_by(f64::total_cmp);
                    assert!(det_of(&k, &xs) >= -1e-10, "{}", k.label());
                }
            }
        }
    }

    #[test]
    fn pinned_annihilates_pins() {
        let bases = [airy_kernel(), sine_kernel(), hermite_kernel(4)];
        for base in bases {
            let p = condition_on(&base, &[-0.3]).unwrap();
            for y in [-1.0, 0.0, 2.0] {
                assert!(p.eval(-0.3, y).abs() < 1e-10);
                assert!(p.eval(y, -0.3).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn pinned_airy_closed_form() {
        let (x, y, s): (f64, f64, f64) = (-1.0, 0.5, -0.3);
        let p = condition_on(&airy_kernel(), &[s]).unwrap();
        let (ax, apx) = airy(x);
        let (ay, apy) = airy(y);
        let (as_, aps) = airy(s);
        let expect = AiryKernel.eval(x, y)
            - (ax * aps - as_ * apx) * (as_ * apy - ay * aps)
                / ((x - s) * (y - s) * (s * as_ * as_ - aps * aps));
        assert!((p.eval(x, y) - expect).abs() < 1e-10);
    }

    #[test]
    fn pinned_sine_closed_form() {
        let p = condition_on(&sine_kernel(), &[0.0]).unwrap();
        for (x, y) in [(0.3, 1.7), (-0.4, 0.9), (2.2, 2.5)] {
            let expect = (PI * (x - y)).sin() / (PI * (x - y))
                - (PI * x).sin() * (PI * y).sin() / (PI * PI * x * y);
            assert!((p.eval(x, y) - expect).abs() < 1e-14);
        }
    }

    #[test]
    fn pinned_composition_law() {
        let base = airy_kernel();
        let one: KernelFn = Arc::new(condition_on(&base, &[-1.0]).unwrap());
        let nested = condition_on(&one, &[0.4]).unwrap();
        let joint = condition_on(&base, &[-1.0, 0.4]).unwrap();
        for (x, y) in [(-2.0, 1.0), (0.0, 0.0), (-0.5, -1.5)] {
            assert!((nested.eval(x, y) - joint.eval(x, y)).abs() < 1e-10);
        }
        let xs = [-2.0, -0.7, 0.3];
        let m = joint.matrix(&xs, &xs);
        for r in 0..3 {
            for c in 0..3 {
                assert!((m[(r, c)] - joint.eval(xs[r], xs[c])).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn pinned_determinant_identity() {
        let base = airy_kernel();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let s = rng.random_range(-3.0..1.0);
            let xs: Vec<f64> = (0..3).map(|_| rng.random_range(-4.0..1.5)).collect();
            let mut all = xs.clone();
            all.push(s);
            let lhs = det_of(&base, &all);
            let p: KernelFn = Arc::new(condition_on(&base, &[s]).unwrap());
            let rhs = base.diag(s) * det_of(&p, &xs);
            assert!((lhs - rhs).abs() <= 1e-9 * lhs.abs().max(1e-12));
        }
    }

    #[test]
    fn pinned_rejects_degenerate_pins() {
        let base = airy_kernel();
        assert_eq!(condition_on(&base, &[0.5, 0.5]).err(), Some(Error::SingularGram));
        let rank_one = hermite_kernel(1);
        assert_eq!(condition_on(&rank_one, &[0.1, 0.9]).err(), Some(Error::SingularGram));
    }

    #[test]
    fn extended_airy_equal_times() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let k = ExtendedAiryKernel { s: 1.0, t: 1.0 };
        for _ in 0..20 {
            let x = rng.random_range(-5.0..2.5);
            let y = rng.random_range(-5.0..2.5);
            assert!((k.integral_form(x, y) - AiryKernel.eval(x, y)).abs() < 1e-8);
            assert_eq!(k.eval(x, y), AiryKernel.eval(x, y));
        }
    }

    #[test]
    fn extended_airy_damping() {
        let d0 = AiryKernel.diag(0.0);
        let v = extended_airy_kernel(0.5, 0.0).eval(0.0, 0.0);
        assert!(v > 0.0 && v < d0);
        // Ai is positive and decreasing on the half-line, so the damped
        // integral is bounded by Ai(0)^2 / (s - t).
        let ai0 = airy(0.0).0;
        for gap in [2.0, 10.0, 40.0] {
            let v = extended_airy_kernel(gap, 0.0).eval(0.0, 0.0);
            assert!(v > 0.0 && v <= ai0 * ai0 / gap, "gap={gap}");
        }
    }

    #[test]
    fn extended_airy_backward_branches_agree() {
        // Gaussian identity versus the direct truncated integral, each
        // evaluated independently at a gap where both are accurate.
        let g = 1.0;
        for (x, y) in [(0.0, 0.0), (-3.0, 1.0), (2.0, -4.0)] {
            let via_identity = ExtendedAiryKernel { s: 0.0, t: g }.eval(x, y);
            let tau = g;
            let big_l = 37.0 / tau;
            let q = gauss_legendre(80);
            let panels = 40;
            let mut direct = 0.0;
            for p in 0..panels {
                let a = -big_l + p as f64 * big_l / panels as f64;
                direct -= q.integrate(a, a + big_l / panels as f64, |l| {
                    (l * tau).exp() * airy(x + l).0 * airy(y + l).0
                });
            }
            assert!((via_identity - direct).abs() < 1e-10, "{via_identity} {direct}");
        }
        // continuity across the switch between the two evaluation routes
        let a = ExtendedAiryKernel { s: 0.0, t: GAUSSIAN_SWITCH - 1e-9 }.eval(-1.0, 0.5);
        let b = ExtendedAiryKernel { s: 0.0, t: GAUSSIAN_SWITCH + 1e-9 }.eval(-1.0, 0.5);
        assert!((a - b).abs() < 1e-10);
    }
}
