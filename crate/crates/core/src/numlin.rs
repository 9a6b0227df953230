//! Dense linear algebra used by the samplers and the Fredholm machinery.
//!
//! Everything here is written against the small [`Scalar`] trait so the same
//! elimination code serves real kernels and the complex inverse-Kasteleyn
//! kernel of the Aztec diamond.

use std::fmt::Debug;
use std::ops::{Add, AddAssign, Div, Index, IndexMut, Mul, MulAssign, Neg, Sub, SubAssign};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Pivots smaller than this are treated as deterministic outcomes by
/// [`schur_step`] rather than divided by.
pub const PIVOT_TOL: f64 = 1e-12;

/// Largest accepted condition estimate for a pinned block.
pub const COND_TOL: f64 = 1e12;

/// Pivot magnitude below which LU declares a matrix singular.
pub const SINGULAR_PIVOT: f64 = 1e-300;

const EIGEN_MAX_SWEEPS: usize = 30;

/// Real or complex double-precision scalar.
pub trait Scalar:
    Copy
    + Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_f64(x: f64) -> Self;
    /// Modulus.
    fn abs(self) -> f64;
    fn re(self) -> f64;
    fn im(self) -> f64;
    fn conj(self) -> Self;
    fn is_finite(self) -> bool;
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_f64(x: f64) -> Self {
        x
    }
    fn abs(self) -> f64 {
        f64::abs(self)
    }
    fn re(self) -> f64 {
        self
    }
    fn im(self) -> f64 {
        0.0
    }
    fn conj(self) -> Self {
        self
    }
    fn is_finite(self) -> bool {
        f64::is_finite(self)
    }
}

impl Scalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_f64(x: f64) -> Self {
        Complex64::new(x, 0.0)
    }
    fn abs(self) -> f64 {
        self.norm()
    }
    fn re(self) -> f64 {
        self.re
    }
    fn im(self) -> f64 {
        self.im
    }
    fn conj(self) -> Self {
        Complex64::conj(&self)
    }
    fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix<T: Scalar = f64> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> DenseMatrix<T> {
    /// Builds a matrix from row-major data, rejecting non-finite entries.
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: (rows, cols),
                got: (data.len(), 1),
            });
        }
        if !data.iter().all(|x| x.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    /// Panics on ragged input; intended for literals in tests and examples.
    pub fn from_rows(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            data: rows.iter().flatten().copied().collect(),
        }
    }

    pub fn diagonal(values: &[T]) -> Self {
        let mut m = Self::zeros(values.len(), values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = v;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self[(r, c)]).collect()
    }

    pub fn all_finite(&self) -> bool {
        self.data.iter().all(|x| x.is_finite())
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn trace(&self) -> T {
        let n = self.rows.min(self.cols);
        (0..n).fold(T::zero(), |acc, i| acc + self[(i, i)])
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)])
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: (self.cols, other.cols),
                got: (other.rows, other.cols),
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == T::zero() {
                    continue;
                }
                let orow = other.row(k);
                let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (d, &b) in dst.iter_mut().zip(orow) {
                    *d += a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| a - b).collect(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| a + b).collect(),
        })
    }

    pub fn scale(&self, s: T) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| a * s).collect(),
        }
    }

    /// Submatrix with the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |r, c| self[(rows[r], cols[c])])
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: (self.rows, self.cols),
                got: (other.rows, other.cols),
            });
        }
        Ok(())
    }

    fn checked(self) -> Result<Self> {
        if self.all_finite() {
            Ok(self)
        } else {
            Err(Error::NonFinite)
        }
    }
}

impl<T: Scalar> Index<(usize, usize)> for DenseMatrix<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl<T: Scalar> IndexMut<(usize, usize)> for DenseMatrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

fn require_square<T: Scalar>(a: &DenseMatrix<T>) -> Result<usize> {
    if a.is_square() {
        Ok(a.rows)
    } else {
        Err(Error::DimensionMismatch {
            expected: (a.rows, a.rows),
            got: (a.rows, a.cols),
        })
    }
}

/// One step of unpivoted elimination with pivot `A[i,i] - shift`.
///
/// Returns the Schur complement on the remaining indices, in their original
/// order. `shift = 0` conditions on inclusion of `i`, `shift = 1` on its
/// exclusion.
pub fn schur_step<T: Scalar>(a: &DenseMatrix<T>, i: usize, shift: f64) -> Result<DenseMatrix<T>> {
    let n = require_square(a)?;
    let mut work = a.clone();
    let mut active = vec![true; n];
    schur_update_in_place(&mut work, i, T::from_f64(shift), &mut active)?;
    let keep: Vec<usize> = (0..n).filter(|&k| k != i).collect();
    work.select(&keep, &keep).checked()
}

/// In-place elimination on the rows/columns flagged in `active`.
///
/// Index `i` is marked inactive afterwards. Returns the pivot that was used.
pub fn schur_update_in_place<T: Scalar>(
    a: &mut DenseMatrix<T>,
    i: usize,
    shift: T,
    active: &mut [bool],
) -> Result<T> {
    let n = require_square(a)?;
    let pivot = a[(i, i)] - shift;
    if pivot.abs() < PIVOT_TOL {
        return Err(Error::PivotTooSmall(pivot.abs()));
    }
    active[i] = false;
    let idx: Vec<usize> = (0..n).filter(|&k| active[k]).collect();
    let col: Vec<T> = idx.iter().map(|&r| a[(r, i)] / pivot).collect();
    let row: Vec<T> = idx.iter().map(|&c| a[(i, c)]).collect();
    for (ri, &r) in idx.iter().enumerate() {
        let f = col[ri];
        if f == T::zero() {
            continue;
        }
        for (ci, &c) in idx.iter().enumerate() {
            let v = a[(r, c)] - f * row[ci];
            a[(r, c)] = v;
        }
    }
    a[(i, i)] = pivot;
    Ok(pivot)
}

/// Schur complement `A_BB - A_BP (A_PP - shift I)^{-1} A_PB` on the complement
/// `B` of `pinned`, indices in increasing order.
pub fn block_schur<T: Scalar>(
    a: &DenseMatrix<T>,
    pinned: &[usize],
    shift: f64,
) -> Result<DenseMatrix<T>> {
    let n = require_square(a)?;
    let mut is_pinned = vec![false; n];
    for &p in pinned {
        if p >= n || is_pinned[p] {
            return Err(Error::InvalidConfig(format!("bad pinned index {p}")));
        }
        is_pinned[p] = true;
    }
    let rest: Vec<usize> = (0..n).filter(|&k| !is_pinned[k]).collect();
    if pinned.is_empty() {
        return Ok(a.select(&rest, &rest));
    }
    let mut app = a.select(pinned, pinned);
    for k in 0..pinned.len() {
        app[(k, k)] -= T::from_f64(shift);
    }
    let lu = Lu::factor(&app);
    if lu.is_singular() || lu.condition_estimate() > COND_TOL {
        return Err(Error::SingularPinnedBlock);
    }
    let apb = a.select(pinned, &rest);
    let x = lu.solve(&apb).map_err(|_| Error::SingularPinnedBlock)?;
    let abp = a.select(&rest, pinned);
    a.select(&rest, &rest).sub(&abp.matmul(&x)?)?.checked()
}

/// LU factorization with partial pivoting, `P A = L U`.
#[derive(Debug, Clone)]
pub struct Lu<T: Scalar> {
    lu: DenseMatrix<T>,
    perm: Vec<usize>,
    sign: f64,
    singular: bool,
    norm1: f64,
}

impl<T: Scalar> Lu<T> {
    pub fn factor(a: &DenseMatrix<T>) -> Self {
        let n = a.rows;
        assert!(a.is_square(), "LU of a non-square matrix");
        let norm1 = (0..n)
            .map(|c| (0..n).map(|r| a[(r, c)].abs()).sum::<f64>())
            .fold(0.0, f64::max);
        let mut lu = a.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut sign = 1.0;
        let mut singular = false;
        for k in 0..n {
            let (p, pmax) = (k..n)
                .map(|r| (r, lu[(r, k)].abs()))
                .fold((k, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
            if pmax < SINGULAR_PIVOT {
                singular = true;
                continue;
            }
            if p != k {
                for c in 0..n {
                    lu.data.swap(k * n + c, p * n + c);
                }
                perm.swap(k, p);
                sign = -sign;
            }
            let piv = lu[(k, k)];
            for r in k + 1..n {
                let f = lu[(r, k)] / piv;
                lu[(r, k)] = f;
                if f == T::zero() {
                    continue;
                }
                for c in k + 1..n {
                    let v = lu[(k, c)];
                    lu[(r, c)] -= f * v;
                }
            }
        }
        Self {
            lu,
            perm,
            sign,
            singular,
            norm1,
        }
    }

    pub fn is_singular(&self) -> bool {
        self.singular
    }

    pub fn dim(&self) -> usize {
        self.lu.rows
    }

    pub fn det(&self) -> T {
        if self.singular {
            return T::zero();
        }
        let n = self.lu.rows;
        (0..n).fold(T::from_f64(self.sign), |acc, i| acc * self.lu[(i, i)])
    }

    /// Solves `A X = B`.
    pub fn solve(&self, b: &DenseMatrix<T>) -> Result<DenseMatrix<T>> {
        let n = self.lu.rows;
        if b.rows != n {
            return Err(Error::DimensionMismatch {
                expected: (n, b.cols),
                got: (b.rows, b.cols),
            });
        }
        if self.singular {
            return Err(Error::Singular);
        }
        let mut out = DenseMatrix::zeros(n, b.cols);
        let mut col = vec![T::zero(); n];
        for j in 0..b.cols {
            for i in 0..n {
                col[i] = b[(self.perm[i], j)];
            }
            self.solve_in_place(&mut col);
            for i in 0..n {
                out[(i, j)] = col[i];
            }
        }
        out.checked()
    }

    /// Solves `A x = b` for a vector already permuted into pivot order.
    fn solve_in_place(&self, x: &mut [T]) {
        let n = self.lu.rows;
        for i in 0..n {
            let mut s = x[i];
            for k in 0..i {
                s -= self.lu[(i, k)] * x[k];
            }
            x[i] = s;
        }
        for i in (0..n).rev() {
            let mut s = x[i];
            for k in i + 1..n {
                s -= self.lu[(i, k)] * x[k];
            }
            x[i] = s / self.lu[(i, i)];
        }
    }

    pub fn solve_vec(&self, b: &[T]) -> Result<Vec<T>> {
        if self.singular {
            return Err(Error::Singular);
        }
        let mut x: Vec<T> = self.perm.iter().map(|&p| b[p]).collect();
        self.solve_in_place(&mut x);
        Ok(x)
    }

    pub fn inverse(&self) -> Result<DenseMatrix<T>> {
        self.solve(&DenseMatrix::identity(self.lu.rows))
    }

    /// `||A||_1 ||A^{-1}||_1`, infinite for singular input.
    pub fn condition_estimate(&self) -> f64 {
        match self.inverse() {
            Ok(inv) => {
                let n = inv.rows;
                let inv1 = (0..n)
                    .map(|c| (0..n).map(|r| inv[(r, c)].abs()).sum::<f64>())
                    .fold(0.0, f64::max);
                self.norm1 * inv1
            }
            Err(_) => f64::INFINITY,
        }
    }
}

/// Determinant by partially pivoted LU.
pub fn lu_det<T: Scalar>(a: &DenseMatrix<T>) -> Result<T> {
    require_square(a)?;
    let lu = Lu::factor(a);
    if lu.is_singular() {
        return Err(Error::Singular);
    }
    Ok(lu.det())
}

/// Solves `A X = B` by partially pivoted LU.
pub fn lu_solve<T: Scalar>(a: &DenseMatrix<T>, b: &DenseMatrix<T>) -> Result<DenseMatrix<T>> {
    require_square(a)?;
    Lu::factor(a).solve(b)
}

/// Right-multiplies `y` by a Householder reflector that maps row `row` onto
/// `(||y_row||, 0, ..., 0)`.
pub fn householder_compress(y: &DenseMatrix<f64>, row: usize) -> Result<DenseMatrix<f64>> {
    let v = y.row(row).to_vec();
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm < 1e-14 {
        return Err(Error::ZeroRow);
    }
    // u = v + sign(v0) |v| e0 reflects v onto -sign(v0)|v| e0; the first
    // column is negated afterwards when needed so the leading entry is +|v|.
    let s = if v[0] >= 0.0 { 1.0 } else { -1.0 };
    let mut u = v.clone();
    u[0] += s * norm;
    let unorm2: f64 = u.iter().map(|x| x * x).sum();
    let mut out = y.clone();
    if unorm2 > 0.0 {
        let k = y.cols;
        for r in 0..y.rows {
            let rowv = &mut out.data[r * k..(r + 1) * k];
            let dot: f64 = rowv.iter().zip(&u).map(|(a, b)| a * b).sum();
            let f = 2.0 * dot / unorm2;
            for (a, b) in rowv.iter_mut().zip(&u) {
                *a -= f * b;
            }
        }
    }
    if out[(row, 0)] < 0.0 {
        for r in 0..out.rows {
            out[(r, 0)] = -out[(r, 0)];
        }
    }
    for c in 1..out.cols {
        out[(row, c)] = 0.0;
    }
    out.checked()
}

/// Symmetric eigendecomposition with ascending eigenvalues.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    /// Orthonormal eigenvectors stored as columns.
    pub vectors: DenseMatrix<f64>,
}

fn symmetrized(a: &DenseMatrix<f64>) -> Result<DenseMatrix<f64>> {
    let n = require_square(a)?;
    if !a.all_finite() {
        return Err(Error::NonFinite);
    }
    Ok(DenseMatrix::from_fn(n, n, |r, c| 0.5 * (a[(r, c)] + a[(c, r)])))
}

/// Householder tridiagonalization followed by implicit-shift QL.
pub fn sym_eigen(a: &DenseMatrix<f64>) -> Result<EigenDecomposition> {
    let a = symmetrized(a)?;
    let n = a.rows;
    if n == 0 {
        return Ok(EigenDecomposition {
            values: vec![],
            vectors: DenseMatrix::zeros(0, 0),
        });
    }
    let mut v = a.data.clone();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    tridiagonalize(&mut v, &mut d, &mut e, n, true);
    tridiagonal_ql(&mut d, &mut e, Some(&mut v), n)?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[i].total_cmp(&d[j]));
    let values = order.iter().map(|&i| d[i]).collect();
    let vectors = DenseMatrix::from_fn(n, n, |r, c| v[r * n + order[c]]);
    Ok(EigenDecomposition { values, vectors })
}

/// Eigenvalues only, ascending.
pub fn sym_eigenvalues(a: &DenseMatrix<f64>) -> Result<Vec<f64>> {
    let a = symmetrized(a)?;
    let n = a.rows;
    if n == 0 {
        return Ok(vec![]);
    }
    let mut v = a.data.clone();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    tridiagonalize(&mut v, &mut d, &mut e, n, false);
    tridiagonal_ql(&mut d, &mut e, None, n)?;
    d.sort_by(f64::total_cmp);
    Ok(d)
}

/// Eigenvalues of a complex Hermitian matrix, ascending. Complex Householder
/// reflections bring it to tridiagonal form; the off-diagonal phases are then
/// irrelevant and the real QL iteration finishes the job.
pub fn hermitian_eigenvalues(a: &DenseMatrix<Complex64>) -> Result<Vec<f64>> {
    let n = require_square(a)?;
    if !a.all_finite() {
        return Err(Error::NonFinite);
    }
    if n == 0 {
        return Ok(vec![]);
    }
    let mut h = DenseMatrix::from_fn(n, n, |r, c| 0.5 * (a[(r, c)] + a[(c, r)].conj()));
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    let mut v = vec![Complex64::new(0.0, 0.0); n];
    let mut p = vec![Complex64::new(0.0, 0.0); n];
    for k in 0..n.saturating_sub(1) {
        d[k] = h[(k, k)].re;
        let norm = (k + 1..n).map(|i| h[(i, k)].norm_sqr()).sum::<f64>().sqrt();
        let x0 = h[(k + 1, k)];
        let tail = norm * norm - x0.norm_sqr();
        if tail <= f64::MIN_POSITIVE {
            e[k + 1] = x0.norm();
            continue;
        }
        let phase = if x0.norm() > 0.0 { x0 / x0.norm() } else { Complex64::new(1.0, 0.0) };
        let alpha = -phase * norm;
        for i in k + 1..n {
            v[i] = h[(i, k)];
        }
        v[k + 1] -= alpha;
        let vn = (k + 1..n).map(|i| v[i].norm_sqr()).sum::<f64>().sqrt();
        for vi in v.iter_mut().take(n).skip(k + 1) {
            *vi /= vn;
        }
        for i in k + 1..n {
            p[i] = (k + 1..n).map(|j| h[(i, j)] * v[j]).sum();
        }
        let kk: f64 = (k + 1..n).map(|i| (v[i].conj() * p[i]).re).sum();
        for i in k + 1..n {
            p[i] -= kk * v[i];
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let upd = v[i] * p[j].conj() + p[i] * v[j].conj();
                h[(i, j)] -= 2.0 * upd;
            }
        }
        e[k + 1] = norm;
    }
    d[n - 1] = h[(n - 1, n - 1)].re;
    tridiagonal_ql(&mut d, &mut e, None, n)?;
    d.sort_by(f64::total_cmp);
    Ok(d)
}

/// Householder reduction to tridiagonal form (row-major `v`, overwritten by
/// the accumulated transform when `accumulate` is set).
fn tridiagonalize(v: &mut [f64], d: &mut [f64], e: &mut [f64], n: usize, accumulate: bool) {
    let at = |r: usize, c: usize| r * n + c;
    for j in 0..n {
        d[j] = v[at(n - 1, j)];
    }
    for i in (1..n).rev() {
        let mut scale = 0.0;
        let mut h = 0.0;
        for k in 0..i {
            scale += d[k].abs();
        }
        if scale == 0.0 {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = v[at(i - 1, j)];
                v[at(i, j)] = 0.0;
                v[at(j, i)] = 0.0;
            }
        } else {
            for k in 0..i {
                d[k] /= scale;
                h += d[k] * d[k];
            }
            let mut f = d[i - 1];
            let mut g = h.sqrt();
            if f > 0.0 {
                g = -g;
            }
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for j in 0..i {
                e[j] = 0.0;
            }
            for j in 0..i {
                f = d[j];
                v[at(j, i)] = f;
                g = e[j] + v[at(j, j)] * f;
                for k in j + 1..i {
                    g += v[at(k, j)] * d[k];
                    e[k] += v[at(k, j)] * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for j in 0..i {
                e[j] /= h;
                f += e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] -= hh * d[j];
            }
            for j in 0..i {
                f = d[j];
                g = e[j];
                for k in j..i {
                    v[at(k, j)] -= f * e[k] + g * d[k];
                }
                d[j] = v[at(i - 1, j)];
                v[at(i, j)] = 0.0;
            }
        }
        d[i] = h;
    }
    if accumulate {
        for i in 0..n - 1 {
            v[at(n - 1, i)] = v[at(i, i)];
            v[at(i, i)] = 1.0;
            let h = d[i + 1];
            if h != 0.0 {
                for k in 0..=i {
                    d[k] = v[at(k, i + 1)] / h;
                }
                for j in 0..=i {
                    let mut g = 0.0;
                    for k in 0..=i {
                        g += v[at(k, i + 1)] * v[at(k, j)];
                    }
                    for k in 0..=i {
                        v[at(k, j)] -= g * d[k];
                    }
                }
            }
            for k in 0..=i {
                v[at(k, i + 1)] = 0.0;
            }
        }
        for j in 0..n {
            d[j] = v[at(n - 1, j)];
            v[at(n - 1, j)] = 0.0;
        }
        v[at(n - 1, n - 1)] = 1.0;
    } else {
        // Without accumulation the diagonal still lives on the diagonal of v.
        for j in 0..n {
            d[j] = v[at(j, j)];
        }
    }
    e[0] = 0.0;
}

fn tridiagonal_ql(d: &mut [f64], e: &mut [f64], mut v: Option<&mut [f64]>, n: usize) -> Result<()> {
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;
    let mut f = 0.0;
    let mut tst1: f64 = 0.0;
    let eps = f64::EPSILON;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n - 1 && e[m].abs() > eps * tst1 {
            m += 1;
        }
        if m > l {
            let mut iter = 0;
            loop {
                iter += 1;
                if iter > EIGEN_MAX_SWEEPS {
                    return Err(Error::NoConvergence(EIGEN_MAX_SWEEPS));
                }
                let mut g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = p.hypot(1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for di in d.iter_mut().take(n).skip(l + 2) {
                    *di -= h;
                }
                f += h;
                p = d[m];
                let mut c = 1.0;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0;
                let mut s2 = 0.0;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[i];
                    h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    if let Some(v) = v.as_deref_mut() {
                        for k in 0..n {
                            let hk = v[k * n + i + 1];
                            v[k * n + i + 1] = s * v[k * n + i] + c * hk;
                            v[k * n + i] = c * v[k * n + i] - s * hk;
                        }
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
    Ok(())
}
