//! Eigenvalue statistics of the β = 2 scaling limits (and finite GUE) as
//! Fredholm determinants of conditioned kernels.
//!
//! The basic move: a density with a level forced at `x` is `K(x, x)` times a
//! gap probability of the kernel conditioned on `x`. Extreme, second,
//! joint-extreme, spacing and bulk gap laws all follow from it.
//!
//! Soft-edge and finite-GUE intervals `(s, inf)` are truncated at a fixed
//! upper cutoff; hard-edge intervals `(0, s)` use the `x = u^2` rule.

use crate::error::{Error, Result};
use crate::fredholm::{discretize, IntervalSpec};
use crate::kernels::{
    airy_kernel, bessel_kernel, condition_on, hermite_kernel, sine_kernel, Kernel, KernelFn,
};
use crate::numlin::lu_det;
use crate::specfun::gauss_legendre;

/// Prefactors below this short-circuit a density to 0.
pub const TINY_DENSITY: f64 = 1e-280;
/// Pins closer than this count as coincident.
pub const COINCIDENT: f64 = 1e-9;
/// Soft-edge truncation box.
pub const SOFT_BOX: (f64, f64) = (-10.0, 8.0);
/// Upper end of the bulk spacing range.
pub const BULK_UPPER: f64 = 12.0;

/// Which scaling limit (or finite ensemble) a statistic refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnsembleEdge {
    /// Airy kernel, largest eigenvalues.
    Soft,
    /// Bessel kernel of order `alpha`, smallest eigenvalues.
    Hard { alpha: usize },
    /// Sine kernel, unit mean spacing.
    Bulk,
    /// `N x N` GUE (Hermite kernel), largest eigenvalues.
    FiniteGue { n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Largest,
    Smallest,
}

impl EnsembleEdge {
    pub fn kernel(&self) -> KernelFn {
        match *self {
            Self::Soft => airy_kernel(),
            Self::Hard { alpha } => bessel_kernel(alpha),
            Self::Bulk => sine_kernel(),
            Self::FiniteGue { n } => hermite_kernel(n),
        }
    }

    pub fn direction(&self) -> Direction {
        match self {
            Self::Hard { .. } => Direction::Smallest,
            _ => Direction::Largest,
        }
    }

    pub fn label(&self) -> String {
        match *self {
            Self::Soft => "soft".into(),
            Self::Hard { alpha } => format!("hard(alpha={alpha})"),
            Self::Bulk => "bulk".into(),
            Self::FiniteGue { n } => format!("gue(N={n})"),
        }
    }

    /// Truncation box holding all but a negligible part of the extreme
    /// eigenvalues' mass.
    pub fn support(&self) -> (f64, f64) {
        match *self {
            Self::Soft => SOFT_BOX,
            Self::Hard { alpha } => {
                // CCDF of the second level decays like exp(-s/4 + (alpha+2) sqrt s);
                // this s keeps that exponent below -40.
                let a = 2.0 * (alpha as f64 + 2.0);
                let r = a + (a * a + 160.0).sqrt();
                (0.0, r * r)
            }
            Self::Bulk => (0.0, BULK_UPPER),
            Self::FiniteGue { n } => {
                let up = gue_upper(n);
                (-up, up)
            }
        }
    }

    /// Interval length covered by the nominal quadrature order (in `sqrt x`
    /// units at the hard edge).
    fn reference_length(&self) -> f64 {
        match *self {
            Self::Soft | Self::Bulk => 12.0,
            Self::Hard { .. } => 10.0,
            Self::FiniteGue { n } => 2.0 * gue_upper(n),
        }
    }

    /// Interval that must be free of further levels when the extreme level
    /// sits at `s`; `None` when it is empty.
    pub fn beyond(&self, s: f64) -> Result<Option<IntervalSpec>> {
        match *self {
            Self::Soft | Self::FiniteGue { .. } => {
                let up = self.support().1;
                if s >= up {
                    Ok(None)
                } else {
                    IntervalSpec::finite(s, up).map(Some)
                }
            }
            Self::Hard { .. } => {
                if s <= 0.0 {
                    Ok(None)
                } else {
                    IntervalSpec::square_root(s).map(Some)
                }
            }
            Self::Bulk => Err(Error::UnsupportedVariant),
        }
    }

    /// Quadrature order for `j`: `m` up to the reference length, then
    /// proportionally more.
    fn order_for(&self, j: &IntervalSpec, m: usize) -> usize {
        let len = match *j {
            IntervalSpec::Finite { a, b } => b - a,
            IntervalSpec::SquareRoot { b } => b.sqrt(),
            _ => self.reference_length(),
        };
        m.max((m as f64 * len / self.reference_length()).ceil() as usize)
    }

    /// The extremal direction's "beyond" ordering: `a` is more extreme than `b`.
    fn more_extreme(&self, a: f64, b: f64) -> bool {
        match self.direction() {
            Direction::Largest => a > b,
            Direction::Smallest => a < b,
        }
    }
}

/// Soft-edge cutoff mapped into GUE(N) units.
fn gue_upper(n: usize) -> f64 {
    let nf = n.max(1) as f64;
    (2.0 * nf).sqrt() + SOFT_BOX.1 / (2f64.sqrt() * nf.powf(1.0 / 6.0))
}

/// Quadrature orders and tolerances.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StatsConfig {
    /// Fredholm order for standalone values.
    pub order: usize,
    /// Fredholm order inside integrals.
    pub inner_order: usize,
    /// Nodes per axis of the 2-D rule.
    pub grid: usize,
    /// Target accuracy of adaptive 1-D moments.
    pub rtol: f64,
}

impl Default for StatsConfig {
    fn default() -> Self {
        Self {
            order: 40,
            inner_order: 20,
            grid: 64,
            rtol: 1e-11,
        }
    }
}

/// First four standardized moments of a density.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentSummary {
    pub mean: f64,
    pub variance: f64,
    pub skewness: f64,
    pub excess_kurtosis: f64,
    /// Total mass seen by the quadrature (1 up to truncation).
    pub mass: f64,
    pub order_used: usize,
    pub est_error: f64,
}

impl MomentSummary {
    /// From weighted samples `(x, w)` with `w` already including the density.
    fn from_weighted(points: impl Iterator<Item = (f64, f64)> + Clone, order: usize) -> Self {
        let mass: f64 = points.clone().map(|(_, w)| w).sum();
        let mean = points.clone().map(|(x, w)| w * x).sum::<f64>() / mass;
        let central = |k: i32| points.clone().map(|(x, w)| w * (x - mean).powi(k)).sum::<f64>() / mass;
        let variance = central(2);
        Self {
            mean,
            variance,
            skewness: central(3) / variance.powf(1.5),
            excess_kurtosis: central(4) / (variance * variance) - 3.0,
            mass,
            order_used: order,
            est_error: f64::NAN,
        }
    }

    fn values(&self) -> [f64; 4] {
        [self.mean, self.variance, self.skewness, self.excess_kurtosis]
    }

    fn max_diff(&self, other: &Self) -> f64 {
        self.values()
            .iter()
            .zip(other.values())
            .map(|(a, b)| (a - b).abs() / b.abs().max(1.0))
            .fold(0.0, f64::max)
    }
}

/// Largest 1-D order tried by [`moments`].
pub const MAX_MOMENT_ORDER: usize = 768;

/// Moments of `pdf` on `support` by Gauss-Legendre with order doubling from
/// 24 until two passes agree to `rtol`.
pub fn moments(pdf: impl Fn(f64) -> Result<f64>, support: &IntervalSpec, rtol: f64) -> Result<MomentSummary> {
    let pass = |n: usize| -> Result<MomentSummary> {
        let (x, w) = support.rule(n);
        let mut pts = Vec::with_capacity(n);
        for (x, w) in x.into_iter().zip(w) {
            pts.push((x, w * pdf(x)?));
        }
        Ok(MomentSummary::from_weighted(pts.into_iter(), n))
    };
    let mut n = 24;
    let mut prev = pass(n)?;
    while 2 * n <= MAX_MOMENT_ORDER {
        n *= 2;
        let mut cur = pass(n)?;
        let diff = cur.max_diff(&prev);
        cur.est_error = diff;
        if diff <= rtol {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::NoConvergence(n))
}

/// Weighted nodes of a 2-D rule on the truncated simplex of ordered pairs.
#[derive(Debug, Clone)]
pub struct JointGrid {
    /// `(x1, x2, weight * density)`, `x1` the more extreme level.
    pub nodes: Vec<(f64, f64, f64)>,
    pub order: usize,
}

impl JointGrid {
    fn sum(&self, f: impl Fn(f64, f64) -> f64) -> f64 {
        self.nodes.iter().map(|&(a, b, w)| w * f(a, b)).sum()
    }

    pub fn mass(&self) -> f64 {
        self.sum(|_, _| 1.0)
    }

    /// Pearson correlation of the two levels.
    pub fn correlation(&self) -> f64 {
        let m = self.mass();
        let e1 = self.sum(|a, _| a) / m;
        let e2 = self.sum(|_, b| b) / m;
        let v1 = self.sum(|a, _| (a - e1) * (a - e1)) / m;
        let v2 = self.sum(|_, b| (b - e2) * (b - e2)) / m;
        let c = self.sum(|a, b| (a - e1) * (b - e2)) / m;
        c / (v1 * v2).sqrt()
    }

    /// Moments of the gap `|x1 - x2|`.
    pub fn spacing_moments(&self) -> MomentSummary {
        MomentSummary::from_weighted(self.nodes.iter().map(|&(a, b, w)| ((a - b).abs(), w)), self.order)
    }
}

/// Statistics of one ensemble with a fixed configuration.
#[derive(Clone)]
pub struct EdgeStats {
    edge: EnsembleEdge,
    kernel: KernelFn,
    config: StatsConfig,
}

impl EdgeStats {
    pub fn new(edge: EnsembleEdge) -> Self {
        Self::with_config(edge, StatsConfig::default())
    }

    pub fn with_config(edge: EnsembleEdge, config: StatsConfig) -> Self {
        Self {
            edge,
            kernel: edge.kernel(),
            config,
        }
    }

    pub fn edge(&self) -> EnsembleEdge {
        self.edge
    }

    pub fn config(&self) -> &StatsConfig {
        &self.config
    }

    fn require_extreme(&self) -> Result<()> {
        if self.edge == EnsembleEdge::Bulk {
            Err(Error::UnsupportedVariant)
        } else {
            Ok(())
        }
    }

    /// `P(exactly j levels in J)` for `j <= kmax` with kernel `k`.
    fn counts(&self, k: &dyn Kernel, j: Option<IntervalSpec>, m: usize, kmax: usize) -> Result<Vec<f64>> {
        match j {
            None => {
                let mut v = vec![0.0; kmax + 1];
                v[0] = 1.0;
                Ok(v)
            }
            Some(j) => discretize(k, &j, self.edge.order_for(&j, m))?.count_probabilities(kmax),
        }
    }

    /// Probability of no level beyond `s` (CDF at the soft edge, CCDF at
    /// the hard edge).
    pub fn gap_probability(&self, s: f64) -> Result<f64> {
        self.gap_probability_with_order(s, self.config.order)
    }

    pub fn gap_probability_with_order(&self, s: f64, m: usize) -> Result<f64> {
        self.require_extreme()?;
        Ok(self.counts(self.kernel.as_ref(), self.edge.beyond(s)?, m, 0)?[0])
    }

    /// `P(lambda_extreme <= s)`.
    pub fn extreme_cdf(&self, s: f64) -> Result<f64> {
        let g = self.gap_probability(s)?;
        Ok(match self.edge.direction() {
            Direction::Largest => g,
            Direction::Smallest => 1.0 - g,
        })
    }

    pub fn extreme_ccdf(&self, s: f64) -> Result<f64> {
        Ok(1.0 - self.extreme_cdf(s)?)
    }

    /// Density of the extreme level: `K(s, s) det(I - K^(s)|beyond(s))`.
    pub fn extreme_pdf(&self, s: f64) -> Result<f64> {
        self.extreme_pdf_with_order(s, self.config.order)
    }

    pub fn extreme_pdf_with_order(&self, s: f64, m: usize) -> Result<f64> {
        self.require_extreme()?;
        let pre = self.kernel.diag(s);
        if !(pre >= TINY_DENSITY) {
            return Ok(0.0);
        }
        let k = condition_on(&self.kernel, &[s])?;
        Ok(pre * self.counts(&k, self.edge.beyond(s)?, m, 0)?[0])
    }

    /// Probability of at most one level beyond `s`.
    fn at_most_one_beyond(&self, s: f64) -> Result<f64> {
        self.require_extreme()?;
        let p = self.counts(self.kernel.as_ref(), self.edge.beyond(s)?, self.config.order, 1)?;
        Ok(p[0] + p[1])
    }

    /// `P(lambda_2 <= s)` for the second level in the extremal direction.
    pub fn second_cdf(&self, s: f64) -> Result<f64> {
        let p = self.at_most_one_beyond(s)?;
        Ok(match self.edge.direction() {
            Direction::Largest => p,
            Direction::Smallest => 1.0 - p,
        })
    }

    /// `P(lambda_2 >= s)`.
    pub fn second_ccdf(&self, s: f64) -> Result<f64> {
        Ok(1.0 - self.second_cdf(s)?)
    }

    /// `K(s, s) P(exactly one level beyond s | level at s)`.
    pub fn second_pdf(&self, s: f64) -> Result<f64> {
        self.second_pdf_with_order(s, self.config.order)
    }

    pub fn second_pdf_with_order(&self, s: f64, m: usize) -> Result<f64> {
        self.require_extreme()?;
        let pre = self.kernel.diag(s);
        if !(pre >= TINY_DENSITY) {
            return Ok(0.0);
        }
        let k = condition_on(&self.kernel, &[s])?;
        Ok(pre * self.counts(&k, self.edge.beyond(s)?, m, 1)?[1])
    }

    /// Joint density of the `k = xs.len()` most extreme levels at `xs`;
    /// 0 unless `xs` is strictly ordered from the extreme inward.
    pub fn joint_pdf(&self, xs: &[f64]) -> Result<f64> {
        self.joint_pdf_with_order(xs, self.config.order)
    }

    pub fn joint_pdf_with_order(&self, xs: &[f64], m: usize) -> Result<f64> {
        self.require_extreme()?;
        let Some(&last) = xs.last() else {
            return Err(Error::InvalidConfig("empty point list".into()));
        };
        for w in xs.windows(2) {
            if (w[0] - w[1]).abs() < COINCIDENT || !self.edge.more_extreme(w[0], w[1]) {
                return Ok(0.0);
            }
        }
        let pre = lu_det(&self.kernel.matrix(xs, xs)).unwrap_or(0.0);
        if !(pre >= TINY_DENSITY) {
            return Ok(0.0);
        }
        let k = match condition_on(&self.kernel, xs) {
            Ok(k) => k,
            Err(Error::SingularGram) => self.condition_greedy(xs)?,
            Err(e) => return Err(e),
        };
        Ok(pre * self.counts(&k, self.edge.beyond(last)?, m, 0)?[0])
    }

    /// Conditions on the largest prefix-compatible subset of `xs`. Used when
    /// two pins are so close that their Gram block is numerically singular;
    /// the density there is already of the order of the (tiny) prefactor.
    fn condition_greedy(&self, xs: &[f64]) -> Result<crate::kernels::PinnedKernel> {
        let mut keep: Vec<f64> = Vec::with_capacity(xs.len());
        for &x in xs {
            keep.push(x);
            if condition_on(&self.kernel, &keep).is_err() {
                keep.pop();
            }
        }
        condition_on(&self.kernel, &keep)
    }

    /// Order-`n` rule on the truncated simplex, evaluated with inner order
    /// `m`. Soft/GUE: `x1` over the box, `x2` below it. Hard: the same in
    /// `u = sqrt x`.
    pub fn joint_grid(&self, n: usize, m: usize) -> Result<JointGrid> {
        self.require_extreme()?;
        let (lo, hi) = self.edge.support();
        let q = gauss_legendre(n);
        let hard = self.edge.direction() == Direction::Smallest;
        let (a, b) = if hard { (0.0, hi.sqrt()) } else { (lo, hi) };
        let (outer, outer_w) = q.mapped(a, b);
        let mut nodes = Vec::with_capacity(n * n);
        for (&u1, &w1) in outer.iter().zip(&outer_w) {
            let (inner, inner_w) = if hard { q.mapped(u1, b) } else { q.mapped(a, u1) };
            for (&u2, &w2) in inner.iter().zip(&inner_w) {
                let (x1, x2, jac) = if hard {
                    (u1 * u1, u2 * u2, 4.0 * u1 * u2)
                } else {
                    (u1, u2, 1.0)
                };
                let f = self.joint_pdf_with_order(&[x1, x2], m)?;
                nodes.push((x1, x2, w1 * w2 * jac * f));
            }
        }
        Ok(JointGrid { nodes, order: n })
    }

    /// Density of the first spacing `d = |lambda_1 - lambda_2|`.
    pub fn spacing_pdf(&self, d: f64) -> Result<f64> {
        self.require_extreme()?;
        if d <= 0.0 {
            return Ok(0.0);
        }
        let (lo, hi) = self.edge.support();
        let n = self.config.grid;
        let m = self.config.inner_order;
        let mut acc = 0.0;
        match self.edge.direction() {
            Direction::Largest => {
                if lo + d >= hi {
                    return Ok(0.0);
                }
                let (x, w) = gauss_legendre(n).mapped(lo + d, hi);
                for (x, w) in x.into_iter().zip(w) {
                    acc += w * self.joint_pdf_with_order(&[x, x - d], m)?;
                }
            }
            Direction::Smallest => {
                let (x, w) = IntervalSpec::square_root(hi)?.rule(n);
                for (x, w) in x.into_iter().zip(w) {
                    acc += w * self.joint_pdf_with_order(&[x, x + d], m)?;
                }
            }
        }
        Ok(acc)
    }

    /// `P(first spacing <= d)`: one minus the integral over the extreme
    /// level `x` of `K(x, x) P(no other level within d of x or beyond | x)`.
    pub fn spacing_cdf(&self, d: f64) -> Result<f64> {
        self.require_extreme()?;
        if d <= 0.0 {
            return Ok(0.0);
        }
        let (lo, hi) = self.edge.support();
        let n = self.config.grid;
        let m = self.config.inner_order;
        let hard = self.edge.direction() == Direction::Smallest;
        let (xs, ws) = if hard {
            IntervalSpec::square_root(hi)?.rule(n)
        } else {
            gauss_legendre(n).mapped(lo, hi)
        };
        let mut acc = 0.0;
        for (x, w) in xs.into_iter().zip(ws) {
            let pre = self.kernel.diag(x);
            if !(pre >= TINY_DENSITY) {
                continue;
            }
            let j = if hard {
                IntervalSpec::square_root(x + d)?
            } else if x - d >= hi {
                continue;
            } else {
                IntervalSpec::finite(x - d, hi)?
            };
            let k = condition_on(&self.kernel, &[x])?;
            acc += w * pre * self.counts(&k, Some(j), m, 0)?[0];
        }
        Ok(1.0 - acc)
    }

    fn box_interval(&self) -> Result<IntervalSpec> {
        let (lo, hi) = self.edge.support();
        match self.edge.direction() {
            Direction::Largest => IntervalSpec::finite(lo, hi),
            Direction::Smallest => IntervalSpec::square_root(hi),
        }
    }

    pub fn extreme_moments(&self) -> Result<MomentSummary> {
        moments(|s| self.extreme_pdf(s), &self.box_interval()?, self.config.rtol)
    }

    pub fn second_moments(&self) -> Result<MomentSummary> {
        moments(|s| self.second_pdf(s), &self.box_interval()?, self.config.rtol)
    }

    /// Two grids (`3n/4` and `n` nodes per axis); the difference is the
    /// error estimate.
    fn two_grids(&self) -> Result<(JointGrid, JointGrid)> {
        let n = self.config.grid;
        let m = self.config.inner_order;
        Ok((self.joint_grid((3 * n / 4).max(2), m)?, self.joint_grid(n, m)?))
    }

    pub fn spacing_moments(&self) -> Result<MomentSummary> {
        let (coarse, fine) = self.two_grids()?;
        let c = coarse.spacing_moments();
        let mut f = fine.spacing_moments();
        f.est_error = f.max_diff(&c);
        Ok(f)
    }

    /// Correlation coefficient of the two most extreme levels with its
    /// error estimate.
    pub fn corr_coeff(&self) -> Result<(f64, f64)> {
        let (coarse, fine) = self.two_grids()?;
        let r = fine.correlation();
        Ok((r, (r - coarse.correlation()).abs()))
    }
}

// ---------------------------------------------------------------- bulk

/// `E(0; s) = det(I - K_sin|(0, s))`.
pub fn bulk_gap_probability(s: f64, m: usize) -> Result<f64> {
    if s <= 0.0 {
        return Ok(1.0);
    }
    let j = IntervalSpec::finite(0.0, s)?;
    discretize(sine_kernel().as_ref(), &j, bulk_order(s, m))?.count_probabilities(0).map(|p| p[0])
}

fn bulk_order(s: f64, m: usize) -> usize {
    m.max((m as f64 * s / BULK_UPPER).ceil() as usize)
}

/// `P(D > s)` for the distance `D` from a level to the next one on its
/// right: `det(I - K_sin^(0)|(0, s))`.
pub fn bulk_gap_ccdf(s: f64) -> Result<f64> {
    bulk_gap_ccdf_with_order(s, StatsConfig::default().order)
}

pub fn bulk_gap_ccdf_with_order(s: f64, m: usize) -> Result<f64> {
    if s <= 0.0 {
        return Ok(1.0);
    }
    let k = condition_on(&sine_kernel(), &[0.0])?;
    let j = IntervalSpec::finite(0.0, s)?;
    discretize(&k, &j, bulk_order(s, m))?.count_probabilities(0).map(|p| p[0])
}

/// Density of `D`: `K^(0)(s, s) det(I - K^(0, s)|(0, s))`.
pub fn bulk_gap_pdf(s: f64) -> Result<f64> {
    bulk_gap_pdf_with_order(s, StatsConfig::default().order)
}

pub fn bulk_gap_pdf_with_order(s: f64, m: usize) -> Result<f64> {
    if s < COINCIDENT {
        return Ok(0.0);
    }
    let base = sine_kernel();
    let pins = [0.0, s];
    let pre = lu_det(&base.matrix(&pins, &pins)).unwrap_or(0.0);
    if !(pre >= TINY_DENSITY) {
        return Ok(0.0);
    }
    let k = match condition_on(&base, &pins) {
        Ok(k) => k,
        // only for s within a few 1e-7 of 0, where the conditional gap
        // probability of (0, s) is 1 to working precision
        Err(Error::SingularGram) => return Ok(pre),
        Err(e) => return Err(e),
    };
    let j = IntervalSpec::finite(0.0, s)?;
    Ok(pre * discretize(&k, &j, bulk_order(s, m))?.count_probabilities(0)?[0])
}

pub fn bulk_gap_moments(rtol: f64) -> Result<MomentSummary> {
    moments(bulk_gap_pdf, &IntervalSpec::finite(0.0, BULK_UPPER)?, rtol)
}

/// `(d/da, -d/db) det(I - K|(a, b))` from conditioned determinants:
/// `K(a, a) det(I - K^(a)|(a, b))` and the same at `b`.
pub fn endpoint_densities(k: &KernelFn, a: f64, b: f64, m: usize) -> Result<(f64, f64)> {
    let j = IntervalSpec::finite(a, b)?;
    let at = |x: f64| -> Result<f64> {
        let pre = k.diag(x);
        if !(pre >= TINY_DENSITY) {
            return Ok(0.0);
        }
        let c = condition_on(k, &[x])?;
        Ok(pre * discretize(&c, &j, m)?.count_probabilities(0)?[0])
    };
    Ok((at(a)?, at(b)?))
}

// ---------------------------------------------------------------- wrappers

pub fn extreme_cdf(e: EnsembleEdge, s: f64) -> Result<f64> {
    EdgeStats::new(e).extreme_cdf(s)
}

pub fn extreme_pdf(e: EnsembleEdge, s: f64) -> Result<f64> {
    EdgeStats::new(e).extreme_pdf(s)
}

pub fn second_cdf(e: EnsembleEdge, s: f64) -> Result<f64> {
    EdgeStats::new(e).second_cdf(s)
}

pub fn second_pdf(e: EnsembleEdge, s: f64) -> Result<f64> {
    EdgeStats::new(e).second_pdf(s)
}

pub fn joint_pdf_extremes(e: EnsembleEdge, xs: &[f64]) -> Result<f64> {
    EdgeStats::new(e).joint_pdf(xs)
}

pub fn spacing_pdf(e: EnsembleEdge, d: f64) -> Result<f64> {
    EdgeStats::new(e).spacing_pdf(d)
}

pub fn spacing_cdf(e: EnsembleEdge, d: f64) -> Result<f64> {
    EdgeStats::new(e).spacing_cdf(d)
}

pub fn corr_coeff(e: EnsembleEdge) -> Result<f64> {
    Ok(EdgeStats::new(e).corr_coeff()?.0)
}
