//! Divided differences, Hecke operators, the Euler–Poincaré summation and affine shifts.
//!
//! Operators act on the right: `hecke_cup(&f, 1, n)` is `f ∪_1`, and a chain
//! `f A B` is evaluated as `B(A(f))`.

use rayon::prelude::*;

use crate::combinatorics::permutations;
use crate::error::{Error, Result};
use crate::exact_algebra::{
    absorb_parameters, LaurentPoly, Param, Poly, QtScalar, RationalFn, Scalar, Var, VarContext,
};

/// Anything x-operators can act on. y variables and parameters stay inert.
pub trait Operand: Clone + Send + Sync + PartialEq + std::fmt::Debug {
    fn ctx(&self) -> VarContext;
    fn zero_in(ctx: VarContext) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, p: &LaurentPoly) -> Self;
    fn swapped(&self, a: Var, b: Var) -> Self;
    /// Applies `x_i ↦ x_{perm[i]+1}` (0-based one-line notation).
    fn permuted(&self, perm: &[usize]) -> Self;
    fn substituted(&self, assignment: &[(Var, LaurentPoly)]) -> Result<Self>;
    fn div_exact(&self, d: &LaurentPoly) -> Result<Self>;
}

fn perm_images(perm: &[usize]) -> Vec<usize> {
    perm.iter().map(|p| p + 1).collect()
}

impl Operand for Poly<Scalar> {
    fn ctx(&self) -> VarContext {
        Poly::ctx(self)
    }
    fn zero_in(ctx: VarContext) -> Self {
        Poly::zero(ctx)
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, p: &LaurentPoly) -> Self {
        self * p
    }
    fn swapped(&self, a: Var, b: Var) -> Self {
        self.swap_vars(a, b)
    }
    fn permuted(&self, perm: &[usize]) -> Self {
        self.permute_x(&perm_images(perm))
    }
    fn substituted(&self, assignment: &[(Var, LaurentPoly)]) -> Result<Self> {
        self.substitute(assignment)
    }
    fn div_exact(&self, d: &LaurentPoly) -> Result<Self> {
        self.exact_div(d)
    }
}

impl Operand for Poly<QtScalar> {
    fn ctx(&self) -> VarContext {
        Poly::ctx(self)
    }
    fn zero_in(ctx: VarContext) -> Self {
        Poly::zero(ctx)
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, p: &LaurentPoly) -> Self {
        self * &absorb_parameters(p)
    }
    fn swapped(&self, a: Var, b: Var) -> Self {
        self.swap_vars(a, b)
    }
    fn permuted(&self, perm: &[usize]) -> Self {
        self.permute_x(&perm_images(perm))
    }
    fn substituted(&self, assignment: &[(Var, LaurentPoly)]) -> Result<Self> {
        let lifted: Vec<(Var, Poly<QtScalar>)> = assignment.iter().map(|(v, p)| (*v, absorb_parameters(p))).collect();
        self.substitute(&lifted)
    }
    fn div_exact(&self, d: &LaurentPoly) -> Result<Self> {
        self.exact_div(&absorb_parameters(d))
    }
}

impl Operand for RationalFn {
    fn ctx(&self) -> VarContext {
        RationalFn::ctx(self)
    }
    fn zero_in(ctx: VarContext) -> Self {
        RationalFn::zero(ctx)
    }
    fn is_zero(&self) -> bool {
        RationalFn::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn minus(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn times(&self, p: &LaurentPoly) -> Self {
        self.mul(&RationalFn::from_poly(p))
    }
    fn swapped(&self, a: Var, b: Var) -> Self {
        self.swap_vars(a, b)
    }
    fn permuted(&self, perm: &[usize]) -> Self {
        let images = perm_images(perm);
        self.map_polys(|p| p.permute_x(&images))
    }
    fn substituted(&self, assignment: &[(Var, LaurentPoly)]) -> Result<Self> {
        self.substitute(assignment)
    }
    fn div_exact(&self, d: &LaurentPoly) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.mul(&RationalFn::from_poly(d).inv()?).reduce())
    }
}

fn check_x<F: Operand>(f: &F, i: usize) -> Result<()> {
    if i == 0 || i > f.ctx().nx() {
        return Err(Error::IndexOutOfRange(format!("x{i} not in context")));
    }
    Ok(())
}

/// `∂_{a,b} f = (f − f^{a↔b}) / (a − b)`.
pub fn divided_difference<F: Operand>(f: &F, a: Var, b: Var) -> Result<F> {
    if a == b {
        return Err(Error::OutOfRange("divided difference needs two distinct variables".into()));
    }
    let ctx = f.ctx();
    ctx.index(a)?;
    ctx.index(b)?;
    let num = f.minus(&f.swapped(a, b));
    if num.is_zero() {
        return Ok(F::zero_in(ctx));
    }
    num.div_exact(&(Poly::var(ctx, a) - Poly::var(ctx, b)))
}

/// `∂_i = ∂_{x_i, x_{i+1}}`.
pub fn partial<F: Operand>(f: &F, i: usize) -> Result<F> {
    check_x(f, i + 1)?;
    check_x(f, i)?;
    divided_difference(f, Var::X(i), Var::X(i + 1))
}

fn check_hecke_index(i: usize, n: usize) -> Result<()> {
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange(format!("Hecke index {i} outside 1..={}", n.saturating_sub(1))));
    }
    Ok(())
}

/// `f ∪_i = (f · (t x_i − x_{i+1})) ∂_i`.
pub fn hecke_cup<F: Operand>(f: &F, i: usize, n: usize) -> Result<F> {
    check_hecke_index(i, n)?;
    check_x(f, i + 1)?;
    let ctx = f.ctx();
    let w = Poly::t(ctx) * Poly::x(ctx, i) - Poly::x(ctx, i + 1);
    partial(&f.times(&w), i)
}

/// `T_i = ∪_i − 1`.
pub fn hecke_t<F: Operand>(f: &F, i: usize, n: usize) -> Result<F> {
    Ok(hecke_cup(f, i, n)?.minus(f))
}

/// Weight attached to one permutation in the summation; see [`permutation_weights`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationWeight {
    pub permutation: Vec<usize>,
    /// `Δ_t^w` with `Δ_t = ∏_{i<j} (t x_i − x_j)`.
    pub numerator: LaurentPoly,
    pub sign: i8,
}

/// `Δ_t = ∏_{i<j≤n} (t x_i − x_j)`.
pub fn t_vandermonde(ctx: VarContext, n: usize) -> LaurentPoly {
    let t = Poly::t(ctx);
    let mut acc = Poly::one(ctx);
    for i in 1..=n {
        for j in i + 1..=n {
            acc = acc * (&t * &Poly::x(ctx, i) - Poly::x(ctx, j));
        }
    }
    acc
}

/// `∏_{i<j≤n} (x_i − x_j)`, the denominator of the summation.
pub fn descending_vandermonde(ctx: VarContext, n: usize) -> LaurentPoly {
    let mut acc = Poly::one(ctx);
    for i in 1..=n {
        for j in i + 1..=n {
            acc = acc * (Poly::x(ctx, i) - Poly::x(ctx, j));
        }
    }
    acc
}

pub fn permutation_weights(ctx: VarContext, n: usize) -> Vec<PermutationWeight> {
    let dt = t_vandermonde(ctx, n);
    permutations(n)
        .into_iter()
        .map(|(p, s)| PermutationWeight { numerator: dt.permute_x(&perm_images(&p)), permutation: p, sign: s })
        .collect()
}

/// `f ∪_ω = Σ_w (f Δ_t / Δ)^w`, computed as one antisymmetrization and one exact division.
pub fn cup_omega<F: Operand>(f: &F, n: usize) -> Result<F> {
    let ctx = f.ctx();
    if n == 0 || n > ctx.nx() {
        return Err(Error::IndexOutOfRange(format!("summation over {n} variables in a context with {}", ctx.nx())));
    }
    let g = f.times(&t_vandermonde(ctx, n));
    let terms: Vec<F> = permutations(n)
        .into_par_iter()
        .map(|(p, s)| {
            let mut full: Vec<usize> = p.clone();
            full.extend(n..ctx.nx());
            let h = g.permuted(&full);
            if s < 0 {
                F::zero_in(ctx).minus(&h)
            } else {
                h
            }
        })
        .collect();
    let sum = terms.iter().fold(F::zero_in(ctx), |acc, t| acc.plus(t));
    sum.div_exact(&descending_vandermonde(ctx, n))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum ShiftKind {
    /// `x_{i+n} = q x_i`
    Q,
    /// `x_{i+n} = x_i / t`
    InverseT,
    /// `x_{i+n} = 0`
    Zero,
}

impl ShiftKind {
    pub fn scale(&self, ctx: VarContext) -> LaurentPoly {
        match self {
            ShiftKind::Q => Poly::var(ctx, Var::Q),
            ShiftKind::InverseT => Poly::param_power(ctx, Param::T, -1),
            ShiftKind::Zero => Poly::zero(ctx),
        }
    }
}

/// `x_i ↦ x_{i+1}` for `i < n`, `x_n ↦ s x_1`.
pub fn affine_shift<F: Operand>(f: &F, kind: ShiftKind, n: usize) -> Result<F> {
    let ctx = f.ctx();
    if n == 0 || n > ctx.nx() {
        return Err(Error::IndexOutOfRange(format!("shift over {n} variables")));
    }
    let mut assignment: Vec<(Var, LaurentPoly)> = (1..n).map(|i| (Var::X(i), Poly::x(ctx, i + 1))).collect();
    assignment.push((Var::X(n), kind.scale(ctx) * Poly::x(ctx, 1)));
    f.substituted(&assignment)
}

/// `f (1 − t^{p_1} σ)(1 − t^{p_2} σ)⋯` applied left to right.
pub fn shift_product<F: Operand>(f: &F, kind: ShiftKind, powers: &[i16], n: usize) -> Result<F> {
    let ctx = f.ctx();
    let mut g = f.clone();
    for &p in powers {
        let shifted = affine_shift(&g, kind, n)?;
        g = g.minus(&shifted.times(&Poly::param_power(ctx, Param::T, p)));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(n: usize) -> VarContext {
        VarContext::new(n).unwrap()
    }

    #[test]
    fn divided_difference_examples() {
        let c = ctx(2);
        let (a, b) = (LaurentPoly::x(c, 1), LaurentPoly::x(c, 2));
        assert!(divided_difference(&a, Var::X(1), Var::X(2)).unwrap().is_one());
        assert!(divided_difference(&(&a + &b), Var::X(1), Var::X(2)).unwrap().is_zero());
        assert_eq!(divided_difference(&(&a * &a), Var::X(1), Var::X(2)).unwrap(), &a + &b);
    }

    #[test]
    fn hecke_examples() {
        let c = ctx(2);
        let (x1, x2) = (LaurentPoly::x(c, 1), LaurentPoly::x(c, 2));
        let one_plus_t = LaurentPoly::one(c) + LaurentPoly::t(c);
        assert_eq!(hecke_cup(&LaurentPoly::one(c), 1, 2).unwrap(), one_plus_t);
        assert_eq!(hecke_cup(&x2, 1, 2).unwrap(), &x1 + &x2);
        let sym = &x1 * &x2;
        assert_eq!(hecke_cup(&sym, 1, 2).unwrap(), &one_plus_t * &sym);
        assert!(matches!(hecke_cup(&x1, 2, 2), Err(Error::IndexOutOfRange(_))));
    }

    #[test]
    fn cup_omega_examples() {
        let c = ctx(2);
        let (x1, x2) = (LaurentPoly::x(c, 1), LaurentPoly::x(c, 2));
        let t = LaurentPoly::t(c);
        let one_plus_t = LaurentPoly::one(c) + &t;
        assert_eq!(cup_omega(&LaurentPoly::one(c), 2).unwrap(), one_plus_t);
        assert_eq!(cup_omega(&x1, 2).unwrap(), &t * &(&x1 + &x2));
        assert_eq!(cup_omega(&(&x1 * &x2), 2).unwrap(), &one_plus_t * &(&x1 * &x2));
    }

    #[test]
    fn shift_examples() {
        let c = ctx(2);
        let (x1, x2) = (LaurentPoly::x(c, 1), LaurentPoly::x(c, 2));
        let t = LaurentPoly::t(c);
        assert_eq!(affine_shift(&x1, ShiftKind::InverseT, 2).unwrap(), x2);
        assert_eq!(affine_shift(&x2, ShiftKind::Q, 2).unwrap(), LaurentPoly::var(c, Var::Q) * &x1);
        assert!(affine_shift(&(&x1 * &x2), ShiftKind::Zero, 2).unwrap().is_zero());
        assert_eq!(shift_product(&x1, ShiftKind::InverseT, &[], 2).unwrap(), x1);
        assert_eq!(shift_product(&x1, ShiftKind::InverseT, &[1], 2).unwrap(), &x1 - &(&t * &x2));
        assert_eq!(shift_product(&x1, ShiftKind::Zero, &[1, 2], 2).unwrap(), &x1 - &((&t + &t * &t) * &x2));
    }

    #[test]
    fn rational_operand_agrees_with_polynomial() {
        let c = ctx(3);
        let f = LaurentPoly::x(c, 1) * LaurentPoly::x(c, 1) * LaurentPoly::y(c, 2) + LaurentPoly::x(c, 3);
        let p = cup_omega(&f, 3).unwrap();
        let r = cup_omega(&RationalFn::from_poly(&f), 3).unwrap();
        assert_eq!(r.to_poly().unwrap(), p);
        let q = cup_omega(&absorb_parameters(&f), 3).unwrap();
        assert_eq!(q, absorb_parameters(&p));
    }
}
