//! Determinants and linear solves over exact rings.

use rayon::prelude::*;

use super::coeff::{Coeff, Scalar};
use super::poly::Poly;
use super::qt::QtScalar;
use crate::error::{Error, Result};

/// Commutative ring with exact division, as needed by fraction-free elimination.
pub trait ExactRing: Clone + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn div_exact(&self, other: &Self) -> Result<Self>;
}

impl<C: Coeff> ExactRing for Poly<C> {
    fn zero_like(&self) -> Self {
        Poly::zero(self.ctx())
    }
    fn one_like(&self) -> Self {
        Poly::one(self.ctx())
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self.add_poly(other)
    }
    fn sub(&self, other: &Self) -> Self {
        self.sub_poly(other)
    }
    fn mul(&self, other: &Self) -> Self {
        self.mul_poly(other)
    }
    fn neg(&self) -> Self {
        self.neg_poly()
    }
    fn div_exact(&self, other: &Self) -> Result<Self> {
        self.exact_div(other)
    }
}

macro_rules! field_ring {
    ($t:ty) => {
        impl ExactRing for $t {
            fn zero_like(&self) -> Self {
                <$t as Coeff>::zero()
            }
            fn one_like(&self) -> Self {
                <$t as Coeff>::one()
            }
            fn is_zero(&self) -> bool {
                Coeff::is_zero(self)
            }
            fn add(&self, other: &Self) -> Self {
                Coeff::add(self, other)
            }
            fn sub(&self, other: &Self) -> Self {
                Coeff::sub(self, other)
            }
            fn mul(&self, other: &Self) -> Self {
                Coeff::mul(self, other)
            }
            fn neg(&self) -> Self {
                Coeff::neg(self)
            }
            fn div_exact(&self, other: &Self) -> Result<Self> {
                let inv = other.inv().ok_or(Error::DivisionByZero)?;
                Ok(Coeff::mul(self, &inv))
            }
        }
    };
}

field_ring!(Scalar);
field_ring!(QtScalar);

fn check_square<R>(m: &[Vec<R>]) -> usize {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "matrix is not square");
    n
}

/// Laplace expansion along the first row; the top-level minors run in parallel.
pub fn det_cofactor<R: ExactRing>(m: &[Vec<R>]) -> R {
    let n = check_square(m);
    assert!(n > 0, "empty matrix has no reference element; use det_or_one");
    let cols: Vec<usize> = (0..n).collect();
    let terms: Vec<R> = (0..n)
        .into_par_iter()
        .map(|j| {
            if m[0][j].is_zero() {
                return m[0][j].clone();
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&c| c != j).collect();
            let minor = cofactor_rec(m, 1, &rest);
            let t = m[0][j].mul(&minor);
            if j % 2 == 1 {
                t.neg()
            } else {
                t
            }
        })
        .collect();
    let mut acc = m[0][0].zero_like();
    for t in terms {
        acc = acc.add(&t);
    }
    acc
}

fn cofactor_rec<R: ExactRing>(m: &[Vec<R>], row: usize, cols: &[usize]) -> R {
    if cols.is_empty() {
        return m[0][0].one_like();
    }
    if cols.len() == 1 {
        return m[row][cols[0]].clone();
    }
    let mut acc = m[0][0].zero_like();
    for (k, &j) in cols.iter().enumerate() {
        if m[row][j].is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&c| c != j).collect();
        let t = m[row][j].mul(&cofactor_rec(m, row + 1, &rest));
        acc = if k % 2 == 1 { acc.sub(&t) } else { acc.add(&t) };
    }
    acc
}

/// Fraction-free Bareiss elimination with row pivoting.
pub fn det_bareiss<R: ExactRing>(m: &[Vec<R>]) -> Result<R> {
    let n = check_square(m);
    assert!(n > 0, "empty matrix");
    let mut a: Vec<Vec<R>> = m.to_vec();
    let mut sign_negative = false;
    let mut prev = a[0][0].one_like();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    sign_negative = !sign_negative;
                }
                None => return Ok(a[0][0].zero_like()),
            }
        }
        let pivot = a[k][k].clone();
        let rows: Vec<Vec<R>> = (k + 1..n)
            .into_par_iter()
            .map(|i| {
                let mut row = a[i].clone();
                for j in k + 1..n {
                    let v = pivot.mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                    row[j] = v.div_exact(&prev)?;
                }
                row[k] = pivot.zero_like();
                Ok(row)
            })
            .collect::<Result<_>>()?;
        for (off, row) in rows.into_iter().enumerate() {
            a[k + 1 + off] = row;
        }
        prev = pivot;
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if sign_negative { d.neg() } else { d })
}

/// Cofactor expansion up to 4×4, Bareiss above.
pub fn determinant<R: ExactRing>(m: &[Vec<R>]) -> Result<R> {
    if m.len() <= 4 {
        Ok(det_cofactor(m))
    } else {
        det_bareiss(m)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearSolution<C> {
    Unique(Vec<C>),
    /// Consistent with a solution space of the given dimension.
    Underdetermined(usize),
    Inconsistent,
}

/// Gauss–Jordan elimination over a field for a possibly non-square system `A x = b`.
pub fn solve_linear<C: Coeff>(a: &[Vec<C>], b: &[C]) -> LinearSolution<C> {
    let rows = a.len();
    let cols = a.first().map(|r| r.len()).unwrap_or(0);
    let mut m: Vec<Vec<C>> = a
        .iter()
        .zip(b)
        .map(|(r, v)| {
            let mut r = r.clone();
            r.push(v.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv().unwrap();
        for j in c..=cols {
            m[r][j] = m[r][j].mul(&inv);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=cols {
                    let v = m[i][j].sub(&f.mul(&m[r][j]));
                    m[i][j] = v;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if (r..rows).any(|i| !m[i][cols].is_zero()) {
        return LinearSolution::Inconsistent;
    }
    if pivots.len() < cols {
        return LinearSolution::Underdetermined(cols - pivots.len());
    }
    let mut x = vec![C::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][cols].clone();
    }
    LinearSolution::Unique(x)
}

/// Inverse of a square matrix over a field, `None` when singular.
pub fn invert<C: Coeff>(a: &[Vec<C>]) -> Option<Vec<Vec<C>>> {
    let n = check_square(a);
    let mut cols: Vec<Vec<C>> = Vec::with_capacity(n);
    for k in 0..n {
        let e: Vec<C> = (0..n).map(|i| if i == k { C::one() } else { C::zero() }).collect();
        match solve_linear(a, &e) {
            LinearSolution::Unique(x) => cols.push(x),
            _ => return None,
        }
    }
    Some((0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::coeff::scalar;
    use crate::exact_algebra::context::VarContext;

    #[test]
    fn cofactor_and_bareiss_agree() {
        let c = VarContext::new(3).unwrap();
        let x: Vec<Poly> = (1..=3).map(|i| Poly::x(c, i)).collect();
        let y: Vec<Poly> = (1..=3).map(|i| Poly::y(c, i)).collect();
        let m: Vec<Vec<Poly>> = (0..3)
            .map(|i| (0..3).map(|j| (&x[i] - &y[j]).pow((i + j) as u32 % 3 + 1)).collect())
            .collect();
        assert_eq!(det_cofactor(&m), det_bareiss(&m).unwrap());
    }

    #[test]
    fn bareiss_pivots_on_zero() {
        let m = vec![vec![scalar(0), scalar(1)], vec![scalar(1), scalar(0)]];
        assert_eq!(det_bareiss(&m).unwrap(), scalar(-1));
    }

    #[test]
    fn linear_solve_classifies() {
        let a = vec![vec![scalar(1), scalar(1)], vec![scalar(1), scalar(-1)]];
        assert_eq!(solve_linear(&a, &[scalar(2), scalar(0)]), LinearSolution::Unique(vec![scalar(1), scalar(1)]));
        let a = vec![vec![scalar(1), scalar(1)], vec![scalar(2), scalar(2)]];
        assert_eq!(solve_linear(&a, &[scalar(1), scalar(2)]), LinearSolution::Underdetermined(1));
        assert_eq!(solve_linear(&a, &[scalar(1), scalar(3)]), LinearSolution::Inconsistent);
    }
}
