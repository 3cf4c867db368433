//! Alphabets of monomial letters and the symmetric functions of their differences.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::combinatorics::Composition;
use crate::error::{Error, Result};
use crate::exact_algebra::{determinant, Coeff, LaurentPoly, Param, Poly, Scalar, VarContext, ZERO_EXPONENTS};

/// Finite multiset of monomial letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    ctx: VarContext,
    letters: Vec<LaurentPoly>,
}

impl Alphabet {
    pub fn new(ctx: VarContext, letters: Vec<LaurentPoly>) -> Result<Self> {
        for l in &letters {
            if !l.is_monomial() {
                return Err(Error::NotMonomial(l.to_string()));
            }
            assert_eq!(l.ctx(), ctx, "letter from a different context");
        }
        Ok(Self { ctx, letters })
    }

    pub fn empty(ctx: VarContext) -> Self {
        Self { ctx, letters: Vec::new() }
    }

    /// `{x_1, …, x_n}` of the context.
    pub fn x(ctx: VarContext) -> Self {
        Self { ctx, letters: (1..=ctx.nx()).map(|i| Poly::x(ctx, i)).collect() }
    }

    pub fn y(ctx: VarContext) -> Self {
        Self { ctx, letters: (1..=ctx.ny()).map(|j| Poly::y(ctx, j)).collect() }
    }

    pub fn single(letter: LaurentPoly) -> Result<Self> {
        let ctx = letter.ctx();
        Self::new(ctx, vec![letter])
    }

    pub fn ctx(&self) -> VarContext {
        self.ctx
    }

    pub fn letters(&self) -> &[LaurentPoly] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `A(1 + t + ⋯ + t^r)`: every letter repeated with factors `t^0..t^r`.
    pub fn geometric(&self, r: usize) -> Self {
        let mut letters = Vec::with_capacity(self.len() * (r + 1));
        for l in &self.letters {
            for k in 0..=r {
                letters.push(l * &Poly::param_power(self.ctx, Param::T, k as i16));
            }
        }
        Self { ctx: self.ctx, letters }
    }

    /// Letters scaled by a unit monomial.
    pub fn scaled(&self, factor: &LaurentPoly) -> Result<Self> {
        Self::new(self.ctx, self.letters.iter().map(|l| l * factor).collect())
    }

    /// `A^∨ = {1/a}`.
    pub fn dual(&self) -> Self {
        let letters = self
            .letters
            .iter()
            .map(|l| {
                let (e, c) = l.terms().next().map(|(e, c)| (*e, c.clone())).unwrap();
                let mut ne = ZERO_EXPONENTS;
                for i in 0..ne.len() {
                    ne[i] = -e[i];
                }
                Poly::monomial(self.ctx, ne, c.inv().unwrap())
            })
            .collect();
        Self { ctx: self.ctx, letters }
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        Self { ctx: self.ctx, letters }
    }

    pub fn minus(&self, other: &Self) -> AlphabetDiff {
        AlphabetDiff::new(self.clone(), other.clone())
    }

    pub fn as_diff(&self) -> AlphabetDiff {
        AlphabetDiff::new(self.clone(), Self::empty(self.ctx))
    }

    pub fn sum(&self) -> LaurentPoly {
        self.letters.iter().fold(Poly::zero(self.ctx), |a, l| a + l)
    }

    pub fn shares_letter_with(&self, other: &Self) -> bool {
        self.letters.iter().any(|a| other.letters.contains(a))
    }
}

/// Formal difference `plus − minus`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphabetDiff {
    pub plus: Alphabet,
    pub minus: Alphabet,
}

impl AlphabetDiff {
    pub fn new(plus: Alphabet, minus: Alphabet) -> Self {
        assert_eq!(plus.ctx, minus.ctx, "alphabets from different contexts");
        Self { plus, minus }
    }

    pub fn ctx(&self) -> VarContext {
        self.plus.ctx
    }

    /// Complete functions `S_0..S_max` of the difference.
    pub fn series(&self, max: usize) -> CompleteSeries {
        CompleteSeries::new(self, max)
    }

    fn key(&self) -> (Vec<LaurentPoly>, Vec<LaurentPoly>) {
        let mut p = self.plus.letters.clone();
        let mut m = self.minus.letters.clone();
        p.sort();
        m.sort();
        (p, m)
    }
}

fn series_mul(a: &[LaurentPoly], b: &[LaurentPoly], max: usize) -> Vec<LaurentPoly> {
    let ctx = a[0].ctx();
    (0..=max)
        .map(|k| (0..=k).fold(Poly::zero(ctx), |acc, i| acc + &a[i] * &b[k - i]))
        .collect()
}

/// Coefficients of `∏(1 − z b) / ∏(1 − z a)` up to a fixed degree.
#[derive(Clone, Debug)]
pub struct CompleteSeries {
    coeffs: Vec<LaurentPoly>,
    ctx: VarContext,
}

impl CompleteSeries {
    pub fn new(d: &AlphabetDiff, max: usize) -> Self {
        let ctx = d.ctx();
        let mut acc: Vec<LaurentPoly> = (0..=max).map(|k| if k == 0 { Poly::one(ctx) } else { Poly::zero(ctx) }).collect();
        for a in &d.plus.letters {
            // multiply by 1/(1 − z a): running prefix sums weighted by a
            for k in 1..=max {
                let prev = &acc[k - 1] * a;
                acc[k] = &acc[k] + &prev;
            }
        }
        for b in &d.minus.letters {
            let factor: Vec<LaurentPoly> = (0..=max)
                .map(|k| match k {
                    0 => Poly::one(ctx),
                    1 => -b,
                    _ => Poly::zero(ctx),
                })
                .collect();
            acc = series_mul(&acc, &factor, max);
        }
        Self { coeffs: acc, ctx }
    }

    /// `S_j`; zero for `j < 0`. Panics if `j` exceeds the computed degree.
    pub fn get(&self, j: i64) -> LaurentPoly {
        if j < 0 {
            return Poly::zero(self.ctx);
        }
        self.coeffs[j as usize].clone()
    }

    pub fn max_degree(&self) -> usize {
        self.coeffs.len() - 1
    }
}

/// Memo table of complete series keyed by (difference, degree); safe to share across threads.
#[derive(Default)]
pub struct SeriesCache {
    table: Mutex<HashMap<(Vec<LaurentPoly>, Vec<LaurentPoly>, usize), CompleteSeries>>,
}

impl SeriesCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, d: &AlphabetDiff, max: usize) -> CompleteSeries {
        let (p, m) = d.key();
        let key = (p, m, max);
        if let Some(s) = self.table.lock().unwrap().get(&key) {
            return s.clone();
        }
        let s = CompleteSeries::new(d, max);
        self.table.lock().unwrap().insert(key, s.clone());
        s
    }
}

pub fn complete_function(j: i64, d: &AlphabetDiff) -> LaurentPoly {
    if j < 0 {
        return Poly::zero(d.ctx());
    }
    d.series(j as usize).get(j)
}

fn jacobi_trudi(v: &Composition, series: &[CompleteSeries], ctx: VarContext) -> Result<LaurentPoly> {
    let n = v.len();
    if n == 0 {
        return Ok(Poly::one(ctx));
    }
    let m: Vec<Vec<LaurentPoly>> = (0..n)
        .map(|i| (0..n).map(|j| series[j].get(v.parts()[j] as i64 + j as i64 - i as i64)).collect())
        .collect();
    determinant(&m)
}

fn max_index(v: &Composition) -> usize {
    v.parts().iter().enumerate().map(|(j, p)| p + j).max().unwrap_or(0)
}

/// `S_v(d) = det(S_{v_j + j − i}(d))`.
pub fn schur(v: &Composition, d: &AlphabetDiff) -> Result<LaurentPoly> {
    let s = d.series(max_index(v));
    jacobi_trudi(v, &vec![s; v.len()], d.ctx())
}

/// Multi-Schur function: column `j` takes complete functions of `column_diffs[j]`.
pub fn multi_schur(v: &Composition, column_diffs: &[AlphabetDiff]) -> Result<LaurentPoly> {
    if column_diffs.len() != v.len() {
        return Err(Error::OutOfRange(format!("{} column differences for an index of length {}", column_diffs.len(), v.len())));
    }
    let max = max_index(v);
    let series: Vec<CompleteSeries> = column_diffs.iter().map(|d| d.series(max)).collect();
    let ctx = column_diffs.first().map(|d| d.ctx()).unwrap_or(VarContext::parameters());
    jacobi_trudi(v, &series, ctx)
}

/// Multi-Schur function with series drawn from a shared cache.
pub fn multi_schur_cached(v: &Composition, column_diffs: &[AlphabetDiff], cache: &SeriesCache) -> Result<LaurentPoly> {
    let max = max_index(v);
    let series: Vec<CompleteSeries> = column_diffs.iter().map(|d| cache.get(d, max)).collect();
    jacobi_trudi(v, &series, column_diffs[0].ctx())
}

/// `R(A, B) = ∏ (a − b)`.
pub fn resultant(a: &Alphabet, b: &Alphabet) -> LaurentPoly {
    let mut acc = Poly::one(a.ctx);
    for x in &a.letters {
        for y in &b.letters {
            acc = acc * (x - y);
        }
    }
    acc
}

/// `Δ(A) = ∏_{i<j} (a_j − a_i)` in list order.
pub fn vandermonde(a: &Alphabet) -> LaurentPoly {
    let mut acc = Poly::one(a.ctx);
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            acc = acc * (&a.letters[j] - &a.letters[i]);
        }
    }
    acc
}

/// `e_j` of the letters.
pub fn elementary(j: usize, a: &Alphabet) -> LaurentPoly {
    let mut e: Vec<LaurentPoly> = vec![Poly::one(a.ctx)];
    for l in &a.letters {
        let mut next = e.clone();
        next.push(Poly::zero(a.ctx));
        for k in 1..next.len() {
            next[k] = &next[k] + &(&e[k - 1] * l);
        }
        e = next;
    }
    e.get(j).cloned().unwrap_or_else(|| Poly::zero(a.ctx))
}

/// Right-hand side of the elimination factorization: `(−1)^j e_j(B) R(A, B)`.
pub fn factorise_rhs(j: usize, a: &Alphabet, b: &Alphabet) -> LaurentPoly {
    let sign = if j % 2 == 0 { Scalar::one() } else { -Scalar::one() };
    elementary(j, b).scale(&sign) * resultant(a, b)
}

/// Index `(j, β^α)` of the factorizing multi-Schur function.
pub fn factorise_index(j: usize, alpha: usize, beta: usize) -> Composition {
    Composition::repeated(beta, alpha).prepend(j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::Var;

    fn ctx() -> VarContext {
        VarContext::with_counts(3, 3).unwrap()
    }

    #[test]
    fn complete_function_examples() {
        let c = ctx();
        let a = Alphabet::new(c, vec![Poly::x(c, 1), Poly::x(c, 2)]).unwrap();
        let b = Alphabet::new(c, vec![Poly::y(c, 1), Poly::y(c, 2)]).unwrap();
        let d = a.minus(&b);
        assert_eq!(complete_function(1, &d), a.sum() - b.sum());
        assert_eq!(complete_function(-1, &d), Poly::zero(c));
        assert_eq!(complete_function(0, &d), Poly::one(c));
        let neg = Alphabet::empty(c).minus(&b);
        assert_eq!(complete_function(2, &neg), Poly::y(c, 1) * Poly::y(c, 2));
        let x1 = Poly::x(c, 1);
        let x2 = Poly::x(c, 2);
        assert_eq!(complete_function(2, &a.as_diff()), &x1 * &x1 + &x1 * &x2 + &x2 * &x2);
        assert!(complete_function(3, &a.minus(&a)).is_zero());
    }

    #[test]
    fn schur_examples() {
        let c = ctx();
        let a = Alphabet::new(c, vec![Poly::x(c, 1), Poly::x(c, 2)]).unwrap();
        let v = Composition::new(vec![1, 1]);
        assert_eq!(schur(&v, &a.as_diff()).unwrap(), Poly::x(c, 1) * Poly::x(c, 2));
        let single_a = Alphabet::single(Poly::x(c, 1)).unwrap();
        let single_b = Alphabet::single(Poly::y(c, 1)).unwrap();
        let (xa, yb) = (Poly::x(c, 1), Poly::y(c, 1));
        assert_eq!(schur(&v, &single_a.minus(&single_b)).unwrap(), -(&yb * &(&xa - &yb)));
        assert!(schur(&Composition::zeros(3), &a.as_diff()).unwrap().is_one());
    }

    #[test]
    fn factorise_example() {
        let c = ctx();
        let a = Alphabet::new(c, vec![Poly::x(c, 1), Poly::x(c, 2)]).unwrap();
        let b = Alphabet::single(Poly::y(c, 1)).unwrap();
        let v = factorise_index(1, 2, 1);
        let d = a.minus(&b);
        let lhs = multi_schur(&v, &vec![d.clone(); 3]).unwrap();
        let y = Poly::y(c, 1);
        let expected = -(&y * &(Poly::x(c, 1) - &y) * (Poly::x(c, 2) - &y));
        assert_eq!(lhs, expected);
        assert_eq!(lhs, factorise_rhs(1, &a, &b));
    }

    #[test]
    fn resultant_and_vandermonde() {
        let c = ctx();
        let x1 = Poly::x(c, 1);
        let y1 = Poly::y(c, 1);
        let t = Poly::var(c, Var::T);
        let a = Alphabet::single(x1.clone()).unwrap();
        let b = Alphabet::single(y1.clone()).unwrap().geometric(1);
        assert_eq!(resultant(&a, &b), (&x1 - &y1) * (&x1 - &(&t * &y1)));
        assert!(resultant(&Alphabet::empty(c), &b).is_one());
        let x = Alphabet::x(c);
        let (x2, x3) = (Poly::x(c, 2), Poly::x(c, 3));
        assert_eq!(vandermonde(&x), (&x2 - &x1) * (&x3 - &x1) * (&x3 - &x2));
    }
}
