//! Exact samplers for finite determinantal point processes.
//!
//! [`sample_general`] observes indices one at a time (Bernoulli draw, then a
//! rank-one Schur update); [`sample_ortho_proj`], [`sample_hermitian`] and
//! [`sample_nonherm_proj`] are the specialised projection/Hermitian variants.
//! [`DppState`] and [`LazyConditional`] expose single observations with
//! optional forcing for callers that need a custom order.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::error::{Error, Result};
use crate::kernels::Kernel;
use crate::numlin::{
    householder_compress, schur_update_in_place, sym_eigen, DenseMatrix, Scalar, PIVOT_TOL,
};

/// Slack allowed on Bernoulli parameters before they are rejected. Long
/// elimination chains (thousands of rank-one updates) drift by ~1e-8.
pub const MARGINAL_TOL: f64 = 1e-6;
const IMAG_TOL: f64 = 1e-6;

/// Seeded ChaCha20 generator.
///
/// Stream layout: stream 0 is the default; callers that need several
/// independent sequences from one seed (one per sample or per worker) use
/// `Rng::with_stream(seed, k)` with distinct `k`.
#[derive(Debug, Clone)]
pub struct Rng {
    seed: u64,
    stream: u64,
    inner: ChaCha20Rng,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Self::with_stream(seed, 0)
    }

    pub fn with_stream(seed: u64, stream: u64) -> Self {
        let mut inner = ChaCha20Rng::seed_from_u64(seed);
        inner.set_stream(stream);
        Self { seed, stream, inner }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn stream(&self) -> u64 {
        self.stream
    }

    /// Uniform on `[0, 1)` with 53 random bits.
    pub fn uniform(&mut self) -> f64 {
        (self.inner.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

impl RngCore for Rng {
    fn next_u32(&mut self) -> u32 {
        self.inner.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    fn fill_bytes(&mut self, dst: &mut [u8]) {
        self.inner.fill_bytes(dst)
    }
}

/// Requested outcome of an observation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Force {
    #[default]
    None,
    In,
    Out,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    In,
    Out,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Observation {
    pub index: usize,
    pub outcome: Outcome,
    pub forced: bool,
}

/// Real Bernoulli parameter of a (possibly complex) diagonal entry.
pub(crate) fn bernoulli_parameter<T: Scalar>(p: T, step: usize) -> Result<f64> {
    if p.im().abs() > IMAG_TOL || !p.is_finite() {
        return Err(Error::InvalidMarginal { step, value: p.re() });
    }
    let v = p.re();
    if !(-MARGINAL_TOL..=1.0 + MARGINAL_TOL).contains(&v) {
        return Err(Error::InvalidMarginal { step, value: v });
    }
    Ok(v.clamp(0.0, 1.0))
}

/// Draws (or applies) the outcome for Bernoulli parameter `p`.
fn decide(p: f64, force: Force, rng: &mut Rng) -> Result<(Outcome, bool)> {
    match force {
        Force::In if p <= PIVOT_TOL => Err(Error::ForcedImpossible(p)),
        Force::Out if 1.0 - p <= PIVOT_TOL => Err(Error::ForcedImpossible(1.0 - p)),
        Force::In => Ok((Outcome::In, true)),
        Force::Out => Ok((Outcome::Out, true)),
        Force::None => {
            // Near-deterministic parameters are not divided by afterwards.
            let outcome = if p <= PIVOT_TOL {
                Outcome::Out
            } else if 1.0 - p <= PIVOT_TOL {
                Outcome::In
            } else if rng.uniform() < p {
                Outcome::In
            } else {
                Outcome::Out
            };
            Ok((outcome, false))
        }
    }
}

/// Mutable state of a sequential sampler on a dense kernel.
#[derive(Debug, Clone)]
pub struct DppState<T: Scalar = f64> {
    working: DenseMatrix<T>,
    active: Vec<bool>,
    log: Vec<Observation>,
}

impl<T: Scalar> DppState<T> {
    pub fn new(k: &DenseMatrix<T>) -> Result<Self> {
        if !k.is_square() {
            return Err(Error::DimensionMismatch {
                expected: (k.rows(), k.rows()),
                got: (k.rows(), k.cols()),
            });
        }
        Ok(Self {
            working: k.clone(),
            active: vec![true; k.rows()],
            log: Vec::new(),
        })
    }

    pub fn len(&self) -> usize {
        self.active.len()
    }

    pub fn is_empty(&self) -> bool {
        self.active.is_empty()
    }

    pub fn working(&self) -> &DenseMatrix<T> {
        &self.working
    }

    pub fn log(&self) -> &[Observation] {
        &self.log
    }

    pub fn is_observed(&self, i: usize) -> bool {
        !self.active[i]
    }

    /// Current inclusion probability of an unobserved index.
    pub fn probability(&self, i: usize) -> Result<f64> {
        bernoulli_parameter(self.working[(i, i)], self.log.len())
    }

    pub fn observe(&mut self, i: usize, force: Force, rng: &mut Rng) -> Result<Outcome> {
        if i >= self.len() {
            return Err(Error::InvalidConfig(format!("index {i} out of range")));
        }
        if !self.active[i] {
            return Err(Error::AlreadyObserved(i));
        }
        let p = self.probability(i)?;
        let (outcome, forced) = decide(p, force, rng)?;
        let shift = match outcome {
            Outcome::In => T::zero(),
            Outcome::Out => T::one(),
        };
        schur_update_in_place(&mut self.working, i, shift, &mut self.active)?;
        self.log.push(Observation {
            index: i,
            outcome,
            forced,
        });
        Ok(outcome)
    }

    /// Indices observed as present, ascending.
    pub fn sample(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self
            .log
            .iter()
            .filter(|o| o.outcome == Outcome::In)
            .map(|o| o.index)
            .collect();
        s.sort_unstable();
        s
    }
}

/// Sequential sampler for any valid marginal kernel. Indices listed in
/// `order` are observed first, in that order; the rest follow ascending.
pub fn sample_general<T: Scalar>(
    k: &DenseMatrix<T>,
    rng: &mut Rng,
    order: Option<&[usize]>,
) -> Result<Vec<usize>> {
    let mut state = DppState::new(k)?;
    let n = state.len();
    let mut seq: Vec<usize> = Vec::with_capacity(n);
    if let Some(order) = order {
        let mut seen = vec![false; n];
        for &i in order {
            if i >= n || seen[i] {
                return Err(Error::InvalidConfig(format!("bad observation order entry {i}")));
            }
            seen[i] = true;
            seq.push(i);
        }
        seq.extend((0..n).filter(|&i| !seen[i]));
    } else {
        seq.extend(0..n);
    }
    for i in seq {
        state.observe(i, Force::None, rng)?;
    }
    Ok(state.sample())
}

/// Index drawn with probability `weights[j] / total` by a single uniform.
pub(crate) fn categorical(weights: &[f64], total: f64, rng: &mut Rng) -> Option<usize> {
    let target = rng.uniform() * total;
    let mut acc = 0.0;
    let mut last = None;
    for (j, &w) in weights.iter().enumerate() {
        if w <= 0.0 {
            continue;
        }
        acc += w;
        last = Some(j);
        if target < acc {
            return Some(j);
        }
    }
    // roundoff: the weights summed to slightly less than `total`
    last
}

/// Sampler for the projection DPP `K = Y Y^T` with orthonormal columns.
pub fn sample_ortho_proj(y: &DenseMatrix<f64>, rng: &mut Rng) -> Result<Vec<usize>> {
    let r = y.cols();
    let gram = y.transpose().matmul(y)?;
    let dev = gram.sub(&DenseMatrix::identity(r))?.max_abs();
    if dev > 1e-10 {
        return Err(Error::NotOrthonormal(dev));
    }
    let mut y = y.clone();
    let mut out = Vec::with_capacity(r);
    for i in 0..r {
        let norms: Vec<f64> = (0..y.rows())
            .map(|row| y.row(row).iter().map(|v| v * v).sum())
            .collect();
        let j = categorical(&norms, (r - i) as f64, rng)
            .ok_or_else(|| Error::NumericalBreakdown("no mass left in projection sampler".into()))?;
        out.push(j);
        let z = householder_compress(&y, j)?;
        let keep: Vec<usize> = (1..z.cols()).collect();
        let rows: Vec<usize> = (0..z.rows()).collect();
        y = z.select(&rows, &keep);
        for c in 0..y.cols() {
            y[(j, c)] = 0.0;
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Eigenvalue thinning followed by [`sample_ortho_proj`].
pub fn sample_hermitian(k: &DenseMatrix<f64>, rng: &mut Rng) -> Result<Vec<usize>> {
    let ed = sym_eigen(k)?;
    for &l in &ed.values {
        if !(-MARGINAL_TOL..=1.0 + MARGINAL_TOL).contains(&l) {
            return Err(Error::SpectrumOutOfRange(l));
        }
    }
    let keep: Vec<usize> = ed
        .values
        .iter()
        .enumerate()
        .filter(|(_, &l)| rng.uniform() < l.clamp(0.0, 1.0))
        .map(|(i, _)| i)
        .collect();
    let rows: Vec<usize> = (0..k.rows()).collect();
    sample_ortho_proj(&ed.vectors.select(&rows, &keep), rng)
}

/// Samples a continuous Hermitian DPP by discretizing `(lo, hi)` into
/// `cells` equal cells with `K_ab = K(x_a, x_b) dx` at the midpoints.
/// Returns the midpoints of the occupied cells, ascending.
pub fn sample_discretized(k: &dyn Kernel, lo: f64, hi: f64, cells: usize, rng: &mut Rng) -> Result<Vec<f64>> {
    if cells == 0 || !(lo < hi) {
        return Err(Error::InvalidConfig(format!("bad discretization ({lo}, {hi}) with {cells} cells")));
    }
    let dx = (hi - lo) / cells as f64;
    let xs: Vec<f64> = (0..cells).map(|a| lo + (a as f64 + 0.5) * dx).collect();
    let mut picked = sample_hermitian(&k.matrix(&xs, &xs).scale(dx), rng)?;
    picked.sort_unstable();
    Ok(picked.into_iter().map(|a| xs[a]).collect())
}

/// Sampler for a (not necessarily Hermitian) projection kernel `K^2 = K`.
pub fn sample_nonherm_proj<T: Scalar>(k: &DenseMatrix<T>, rng: &mut Rng) -> Result<Vec<usize>> {
    let n = k.rows();
    let k2 = k.matmul(k)?;
    let resid = k2.sub(k)?.max_abs();
    if resid > 1e-8 * k.max_abs().max(1.0) {
        return Err(Error::NotProjection(resid));
    }
    let tr = k.trace();
    if tr.im().abs() > 1e-8 {
        return Err(Error::NotProjection(tr.im().abs()));
    }
    let r = tr.re().round().max(0.0) as usize;
    let mut work = k.clone();
    let mut active = vec![true; n];
    let mut out = Vec::with_capacity(r);
    for i in 0..r {
        let mut weights = vec![0.0; n];
        for j in 0..n {
            if active[j] {
                weights[j] = bernoulli_parameter(work[(j, j)], i)?;
            }
        }
        let j = categorical(&weights, (r - i) as f64, rng)
            .ok_or_else(|| Error::NumericalBreakdown(format!("no mass left at step {i}")))?;
        schur_update_in_place(&mut work, j, T::zero(), &mut active)
            .map_err(|_| Error::NumericalBreakdown(format!("vanishing pivot at step {i}")))?;
        out.push(j);
    }
    out.sort_unstable();
    Ok(out)
}

/// Sequential observations on a kernel that is only evaluated on demand.
///
/// Keeps `(K_OO - D)^{-1}` for the observed set `O` (with `D` the 0/1
/// exclusion shifts) and grows it by bordering, so observing `k` indices
/// costs `O(k^3)` in total plus `O(k^2)` kernel evaluations, regardless of
/// the ground-set size.
pub struct LazyConditional<T: Scalar, F: Fn(usize, usize) -> T> {
    entry: F,
    observed: Vec<usize>,
    inverse: Vec<Vec<T>>,
    log: Vec<Observation>,
}

impl<T: Scalar, F: Fn(usize, usize) -> T> LazyConditional<T, F> {
    pub fn new(entry: F) -> Self {
        Self {
            entry,
            observed: Vec::new(),
            inverse: Vec::new(),
            log: Vec::new(),
        }
    }

    pub fn log(&self) -> &[Observation] {
        &self.log
    }

    /// `(K(i, O), K(O, i))`
    fn borders(&self, i: usize) -> (Vec<T>, Vec<T>) {
        let row = self.observed.iter().map(|&o| (self.entry)(i, o)).collect();
        let col = self.observed.iter().map(|&o| (self.entry)(o, i)).collect();
        (row, col)
    }

    /// Conditional diagonal entry together with `inv * K(O, i)` and
    /// `K(i, O) * inv`.
    fn conditional(&self, i: usize) -> (T, Vec<T>, Vec<T>) {
        let (row, col) = self.borders(i);
        let k = self.observed.len();
        let mut ic = vec![T::zero(); k];
        let mut ri = vec![T::zero(); k];
        for a in 0..k {
            for b in 0..k {
                ic[a] += self.inverse[a][b] * col[b];
                ri[b] += row[a] * self.inverse[a][b];
            }
        }
        let mut p = (self.entry)(i, i);
        for a in 0..k {
            p -= row[a] * ic[a];
        }
        (p, ic, ri)
    }

    pub fn probability(&self, i: usize) -> Result<f64> {
        bernoulli_parameter(self.conditional(i).0, self.log.len())
    }

    pub fn observe(&mut self, i: usize, force: Force, rng: &mut Rng) -> Result<Outcome> {
        if self.observed.contains(&i) {
            return Err(Error::AlreadyObserved(i));
        }
        let (p_raw, ic, ri) = self.conditional(i);
        let p = bernoulli_parameter(p_raw, self.log.len())?;
        let (outcome, forced) = decide(p, force, rng)?;
        let shift = match outcome {
            Outcome::In => T::zero(),
            Outcome::Out => T::one(),
        };
        let s = p_raw - shift;
        if s.abs() < PIVOT_TOL {
            return Err(Error::PivotTooSmall(s.abs()));
        }
        // Bordered inverse: [[inv + ic ri / s, -ic / s], [-ri / s, 1 / s]]
        let k = self.observed.len();
        for a in 0..k {
            for b in 0..k {
                let v = ic[a] * ri[b] / s;
                self.inverse[a][b] += v;
            }
            let v = T::zero() - ic[a] / s;
            self.inverse[a].push(v);
        }
        let mut last: Vec<T> = ri.iter().map(|&v| T::zero() - v / s).collect();
        last.push(T::one() / s);
        self.inverse.push(last);
        self.observed.push(i);
        self.log.push(Observation {
            index: i,
            outcome,
            forced,
        });
        Ok(outcome)
    }
}
