//! The Airy process: multitime sampling from the discretized extended Airy
//! kernel, two-time distribution functions, and a matrix-level Dyson
//! Brownian motion reference.

use std::fmt::Write as _;

use num_complex::Complex64;
use rand::Rng as _;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::kernels::extended_airy_kernel;
use crate::numlin::{hermitian_eigenvalues, lu_det, DenseMatrix};
use crate::rmtstats::{EdgeStats, EnsembleEdge};
use crate::samplers::{Force, LazyConditional, Outcome, Rng};
use crate::specfun::gauss_legendre;

/// Spatial window used when none is given.
pub const DEFAULT_WINDOW: (f64, f64) = (-5.0, 2.5);
pub const DEFAULT_CELLS: usize = 150;
pub const DEFAULT_DT: f64 = 0.025;
pub const MIN_CELLS: usize = 16;
/// Upper truncation of `(s, inf)` in [`two_time_prob`].
const TWO_TIME_UPPER: f64 = 8.0;

/// Times and spatial cells of a discretized multitime kernel.
#[derive(Debug, Clone, PartialEq)]
pub struct MultitimeGrid {
    times: Vec<f64>,
    x_lo: f64,
    x_hi: f64,
    cells: usize,
}

impl MultitimeGrid {
    /// Repeated times are merged; times must otherwise be ascending.
    pub fn new(times: &[f64], x_lo: f64, x_hi: f64, cells: usize) -> Result<Self> {
        if times.is_empty() || times.iter().any(|t| !t.is_finite()) {
            return Err(Error::InvalidConfig("need at least one finite time".into()));
        }
        if times.windows(2).any(|w| w[1] < w[0]) {
            return Err(Error::InvalidConfig("times must be ascending".into()));
        }
        if !(x_lo < x_hi) || !x_lo.is_finite() || !x_hi.is_finite() {
            return Err(Error::InvalidConfig(format!("bad window [{x_lo}, {x_hi}]")));
        }
        if cells < MIN_CELLS {
            return Err(Error::InvalidConfig(format!("need at least {MIN_CELLS} cells, got {cells}")));
        }
        let mut times = times.to_vec();
        times.dedup();
        Ok(Self { times, x_lo, x_hi, cells })
    }

    /// `count` times `t0, t0 + dt, ...` on the default window.
    pub fn uniform(t0: f64, dt: f64, count: usize, cells: usize) -> Result<Self> {
        let times: Vec<f64> = (0..count).map(|i| t0 + i as f64 * dt).collect();
        Self::new(&times, DEFAULT_WINDOW.0, DEFAULT_WINDOW.1, cells)
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn window(&self) -> (f64, f64) {
        (self.x_lo, self.x_hi)
    }

    pub fn cells(&self) -> usize {
        self.cells
    }

    pub fn dx(&self) -> f64 {
        (self.x_hi - self.x_lo) / self.cells as f64
    }

    pub fn midpoints(&self) -> Vec<f64> {
        let dx = self.dx();
        (0..self.cells).map(|a| self.x_lo + (a as f64 + 0.5) * dx).collect()
    }

    pub fn dim(&self) -> usize {
        self.times.len() * self.cells
    }
}

/// Blocks `K^ext(t_j, t_k)(x_a, x_b) dx`, index `j * cells + a`.
#[derive(Debug, Clone)]
pub struct BlockKernel {
    pub grid: MultitimeGrid,
    pub matrix: DenseMatrix<f64>,
}

impl BlockKernel {
    pub fn block(&self, j: usize, k: usize) -> DenseMatrix<f64> {
        let m = self.grid.cells;
        let idx_j: Vec<usize> = (j * m..(j + 1) * m).collect();
        let idx_k: Vec<usize> = (k * m..(k + 1) * m).collect();
        self.matrix.select(&idx_j, &idx_k)
    }
}

pub fn build_block_kernel(g: &MultitimeGrid) -> BlockKernel {
    let m = g.cells;
    let n = g.times.len();
    let xs = g.midpoints();
    let dx = g.dx();
    let mut matrix = DenseMatrix::zeros(n * m, n * m);
    for (j, &tj) in g.times.iter().enumerate() {
        for (k, &tk) in g.times.iter().enumerate() {
            let b = extended_airy_kernel(tj, tk).matrix(&xs, &xs);
            for a in 0..m {
                for c in 0..m {
                    matrix[(j * m + a, k * m + c)] = b[(a, c)] * dx;
                }
            }
        }
    }
    BlockKernel { grid: g.clone(), matrix }
}

/// Largest-eigenvalue positions aligned with `times`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProcessPath {
    pub times: Vec<f64>,
    pub values: Vec<f64>,
}

impl ProcessPath {
    /// `t,value` rows behind a `# seed=` comment line.
    pub fn to_csv(&self, seed: u64) -> String {
        let mut s = format!("# seed={seed}\nt,value\n");
        for (t, v) in self.times.iter().zip(&self.values) {
            let _ = writeln!(s, "{t:.16e},{v:.16e}");
        }
        s
    }
}

/// One Airy process sample: in each time block cells are observed from the
/// top down until the first occupied one, whose midpoint is recorded; the
/// remaining cells of that block are never observed.
pub fn sample_airy_path(k: &BlockKernel, rng: &mut Rng) -> Result<ProcessPath> {
    let g = &k.grid;
    let m = g.cells;
    let xs = g.midpoints();
    let mut obs = LazyConditional::new(|a: usize, b: usize| k.matrix[(a, b)]);
    let mut values = Vec::with_capacity(g.times.len());
    for j in 0..g.times.len() {
        let mut hit = None;
        for a in (0..m).rev() {
            if obs.observe(j * m + a, Force::None, rng)? == Outcome::In {
                hit = Some(xs[a]);
                break;
            }
        }
        values.push(hit.ok_or(Error::NoEigenvalueFound(j))?);
    }
    Ok(ProcessPath {
        times: g.times.clone(),
        values,
    })
}

/// `P(A(0) <= s1, A(t_gap) <= s2)` from the two-block Fredholm determinant
/// with `m` Gauss-Legendre nodes per block on `(s_i, 8)`.
pub fn two_time_prob(t_gap: f64, s1: f64, s2: f64, m: usize) -> Result<f64> {
    if m < 10 {
        return Err(Error::InvalidConfig(format!("need at least 10 nodes per block, got {m}")));
    }
    if !t_gap.is_finite() || s1.is_nan() || s2.is_nan() {
        return Err(Error::NonFinite);
    }
    if t_gap == 0.0 {
        return EdgeStats::new(EnsembleEdge::Soft).extreme_cdf(s1.min(s2));
    }
    // stationary and reversible: only |t_gap| matters
    let times = [0.0, t_gap.abs()];
    let q = gauss_legendre(m);
    let mut nodes: Vec<(usize, f64, f64)> = Vec::new();
    for (j, s) in [s1, s2].into_iter().enumerate() {
        if s < TWO_TIME_UPPER {
            let (x, w) = q.mapped(s, TWO_TIME_UPPER);
            nodes.extend(x.into_iter().zip(w).map(|(x, w)| (j, x, w)));
        }
    }
    if nodes.is_empty() {
        return Ok(1.0);
    }
    let mut a = DenseMatrix::zeros(nodes.len(), nodes.len());
    for j in 0..2 {
        for k in 0..2 {
            let rows: Vec<usize> = (0..nodes.len()).filter(|&r| nodes[r].0 == j).collect();
            let cols: Vec<usize> = (0..nodes.len()).filter(|&c| nodes[c].0 == k).collect();
            if rows.is_empty() || cols.is_empty() {
                continue;
            }
            let xr: Vec<f64> = rows.iter().map(|&r| nodes[r].1).collect();
            let xc: Vec<f64> = cols.iter().map(|&c| nodes[c].1).collect();
            let b = extended_airy_kernel(times[j], times[k]).matrix(&xr, &xc);
            for (ri, &r) in rows.iter().enumerate() {
                for (ci, &c) in cols.iter().enumerate() {
                    a[(r, c)] = -(nodes[r].2 * nodes[c].2).sqrt() * b[(ri, ci)];
                }
            }
        }
    }
    for i in 0..nodes.len() {
        a[(i, i)] += 1.0;
    }
    match lu_det(&a) {
        Ok(d) => Ok(d),
        Err(Error::Singular) => Ok(0.0),
        Err(e) => Err(e),
    }
}

fn gue(n: usize, rng: &mut Rng) -> DenseMatrix<Complex64> {
    // density proportional to exp(-tr H^2)
    let mut h = DenseMatrix::zeros(n, n);
    for i in 0..n {
        let d: f64 = rng.sample(StandardNormal);
        h[(i, i)] = Complex64::new(d / 2f64.sqrt(), 0.0);
        for j in i + 1..n {
            let (re, im): (f64, f64) = (rng.sample(StandardNormal), rng.sample(StandardNormal));
            let z = Complex64::new(re, im) / 2.0;
            h[(i, j)] = z;
            h[(j, i)] = z.conj();
        }
    }
    h
}

/// Rescaled largest eigenvalue `sqrt(2) N^{1/6} (lambda_max(N^{-1/3} t) - sqrt(2N))`
/// of a stationary GUE diffusion (matrix Ornstein-Uhlenbeck process, started
/// from GUE) at the requested times.
pub fn simulate_dbm(n: usize, times: &[f64], rng: &mut Rng) -> Result<ProcessPath> {
    if n < 2 {
        return Err(Error::InvalidConfig(format!("matrix size must be >= 2, got {n}")));
    }
    if times.is_empty() || times.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::InvalidConfig("times must be non-empty and ascending".into()));
    }
    let nf = n as f64;
    let scale = 2f64.sqrt() * nf.powf(1.0 / 6.0);
    let centre = (2.0 * nf).sqrt();
    let mut h = gue(n, rng);
    let mut values = Vec::with_capacity(times.len());
    for (i, &t) in times.iter().enumerate() {
        if i > 0 {
            let tau = (t - times[i - 1]) * nf.powf(-1.0 / 3.0);
            if tau > 0.0 {
                let rho = (-tau).exp();
                let noise = gue(n, rng);
                h = h.scale(Complex64::new(rho, 0.0)).add(&noise.scale(Complex64::new((1.0 - rho * rho).sqrt(), 0.0)))?;
            }
        }
        let top = *hermitian_eigenvalues(&h)?.last().expect("n >= 2");
        values.push(scale * (top - centre));
    }
    Ok(ProcessPath {
        times: times.to_vec(),
        values,
    })
}
