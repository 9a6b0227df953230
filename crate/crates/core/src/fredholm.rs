//! Nyström discretization of integral operators and the Fredholm
//! determinants and resolvent traces built on it.

use crate::error::{Error, Result};
use crate::kernels::Kernel;
use crate::numlin::{sym_eigenvalues, DenseMatrix, Lu};
use crate::specfun::gauss_legendre;

/// Default scale of the semi-infinite maps.
pub const DEFAULT_SCALE: f64 = 10.0;
/// Relative asymmetry below which an operator is treated as symmetric.
pub const SYMMETRY_TOL: f64 = 1e-8;
/// Largest order tried by [`adaptive`].
pub const MAX_ORDER: usize = 2048;

/// Integration domain of an operator restriction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum IntervalSpec {
    Finite { a: f64, b: f64 },
    /// `(s, inf)` through `x = s + c (1 + u) / (1 - u)`.
    RightInfinite { s: f64, c: f64 },
    /// `(-inf, s)` through `x = s - c (1 - u) / (1 + u)`.
    LeftInfinite { s: f64, c: f64 },
    /// `(0, b)` through `x = u^2`, `u` in `(0, sqrt b)`; suits kernels whose
    /// natural variable is `sqrt x` (hard edge).
    SquareRoot { b: f64 },
}

impl IntervalSpec {
    pub fn finite(a: f64, b: f64) -> Result<Self> {
        if !(a < b) || !a.is_finite() || !b.is_finite() {
            return Err(Error::InvalidConfig(format!("empty interval ({a}, {b})")));
        }
        Ok(Self::Finite { a, b })
    }

    pub fn square_root(b: f64) -> Result<Self> {
        if !(b > 0.0) || !b.is_finite() {
            return Err(Error::InvalidConfig(format!("empty interval (0, {b})")));
        }
        Ok(Self::SquareRoot { b })
    }

    pub fn right_infinite(s: f64) -> Self {
        Self::RightInfinite { s, c: DEFAULT_SCALE }
    }

    pub fn left_infinite(s: f64) -> Self {
        Self::LeftInfinite { s, c: DEFAULT_SCALE }
    }

    /// Same interval with another map scale (no effect on finite intervals).
    pub fn with_scale(self, c: f64) -> Self {
        match self {
            Self::RightInfinite { s, .. } => Self::RightInfinite { s, c },
            Self::LeftInfinite { s, .. } => Self::LeftInfinite { s, c },
            f => f,
        }
    }

    pub fn contains(&self, x: f64) -> bool {
        match *self {
            Self::Finite { a, b } => a < x && x < b,
            Self::RightInfinite { s, .. } => x > s,
            Self::LeftInfinite { s, .. } => x < s,
            Self::SquareRoot { b } => 0.0 < x && x < b,
        }
    }

    /// Quadrature nodes and (positive) weights of order `m` on the interval.
    pub fn rule(&self, m: usize) -> (Vec<f64>, Vec<f64>) {
        let q = gauss_legendre(m);
        match *self {
            Self::Finite { a, b } => q.mapped(a, b),
            Self::RightInfinite { s, c } => q
                .nodes
                .iter()
                .zip(&q.weights)
                .map(|(&u, &w)| (s + c * (1.0 + u) / (1.0 - u), w * 2.0 * c / ((1.0 - u) * (1.0 - u))))
                .unzip(),
            Self::LeftInfinite { s, c } => q
                .nodes
                .iter()
                .zip(&q.weights)
                .map(|(&u, &w)| (s - c * (1.0 - u) / (1.0 + u), w * 2.0 * c / ((1.0 + u) * (1.0 + u))))
                .unzip(),
            Self::SquareRoot { b } => {
                let (u, w) = q.mapped(0.0, b.sqrt());
                u.iter().zip(&w).map(|(&u, &w)| (u * u, 2.0 * u * w)).unzip()
            }
        }
    }
}

/// `A = W^{1/2} [K(x_i, x_j)] W^{1/2}` on quadrature nodes.
#[derive(Debug, Clone)]
pub struct NystromOperator {
    pub points: Vec<f64>,
    pub sqw: Vec<f64>,
    pub matrix: DenseMatrix,
    pub order: usize,
}

pub fn discretize(k: &dyn Kernel, j: &IntervalSpec, m: usize) -> Result<NystromOperator> {
    if m < 2 {
        return Err(Error::InvalidConfig(format!("quadrature order {m} < 2")));
    }
    let (points, w) = j.rule(m);
    let sqw: Vec<f64> = w.iter().map(|w| w.sqrt()).collect();
    let mut matrix = k.matrix(&points, &points);
    for r in 0..m {
        for c in 0..m {
            matrix[(r, c)] *= sqw[r] * sqw[c];
        }
    }
    if !matrix.all_finite() {
        return Err(Error::NonFinite);
    }
    Ok(NystromOperator {
        points,
        sqw,
        matrix,
        order: m,
    })
}

impl NystromOperator {
    fn i_minus_a(&self) -> DenseMatrix {
        DenseMatrix::identity(self.order).sub(&self.matrix).expect("square")
    }

    /// `det(I - A)`; exact singularity is reported as 0.
    pub fn det(&self) -> f64 {
        Lu::factor(&self.i_minus_a()).det()
    }

    /// `tr((I - A)^{-1} A)`.
    pub fn resolvent_trace(&self) -> Result<f64> {
        Ok(self.det_and_resolvent_trace()?.1)
    }

    /// Both quantities from one factorization.
    pub fn det_and_resolvent_trace(&self) -> Result<(f64, f64)> {
        let lu = Lu::factor(&self.i_minus_a());
        if lu.is_singular() || lu.condition_estimate() > 1e15 {
            return Err(Error::ResolventSingular);
        }
        let x = lu.solve(&self.matrix).map_err(|_| Error::ResolventSingular)?;
        Ok((lu.det(), x.trace()))
    }
}

impl NystromOperator {
    /// `P(exactly j levels in J)` for `j = 0..=kmax`.
    ///
    /// Symmetric operators go through the eigenvalues and the product
    /// `prod_i (1 - l_i + l_i z)`, which stays accurate when `I - A` is
    /// numerically singular. Otherwise only `kmax <= 1` is available, from an
    /// LU factorization (`P(1) = det * tr L`).
    pub fn count_probabilities(&self, kmax: usize) -> Result<Vec<f64>> {
        let asym = self.matrix.sub(&self.matrix.transpose())?.max_abs();
        if asym <= SYMMETRY_TOL * self.matrix.max_abs().max(1e-300) {
            // symmetric up to the rounding of conditioned kernels
            let sym = self.matrix.add(&self.matrix.transpose())?.scale(0.5);
            let lambda = sym_eigenvalues(&sym)?;
            let mut poly = vec![0.0; kmax + 1];
            poly[0] = 1.0;
            for l in lambda {
                for j in (0..=kmax).rev() {
                    let lower = if j > 0 { poly[j - 1] } else { 0.0 };
                    poly[j] = (1.0 - l) * poly[j] + l * lower;
                }
            }
            return Ok(poly);
        }
        if kmax > 1 {
            return Err(Error::InvalidConfig("level counts above one need a symmetric kernel".into()));
        }
        let (d, t) = self.det_and_resolvent_trace()?;
        Ok([d, d * t][..=kmax].to_vec())
    }
}

/// `det(I - K|J)` with an order-`m` rule.
pub fn fredholm_det(k: &dyn Kernel, j: &IntervalSpec, m: usize) -> Result<f64> {
    Ok(discretize(k, j, m)?.det())
}

/// `tr((I - K)^{-1} K |J)` with an order-`m` rule.
pub fn resolvent_trace(k: &dyn Kernel, j: &IntervalSpec, m: usize) -> Result<f64> {
    discretize(k, j, m)?.resolvent_trace()
}

/// Doubles the order from `m0` until two successive values agree to `rtol`
/// (relative, or absolute for values below one).
pub fn adaptive(mut f: impl FnMut(usize) -> Result<f64>, m0: usize, rtol: f64) -> Result<(f64, usize)> {
    if !(rtol >= 1e-14) {
        return Err(Error::InvalidConfig(format!("rtol {rtol} below 1e-14")));
    }
    let mut m = m0.max(2);
    let mut prev = f(m)?;
    loop {
        let next_m = 2 * m;
        if next_m > MAX_ORDER {
            return Err(Error::NoConvergenceWithBest { best: prev, order: m });
        }
        let cur = f(next_m)?;
        if (cur - prev).abs() <= rtol * cur.abs().max(1.0) {
            return Ok((cur, next_m));
        }
        prev = cur;
        m = next_m;
    }
}
