//! Sparse Laurent polynomials over an exact coefficient field.
//!
//! Terms are stored in a `BTreeMap` keyed by dense exponent vectors, so the
//! last entry is the leading term under lex order and equality is structural.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::coeff::{Coeff, Scalar};
use super::context::{Exponents, Param, Var, VarContext, MAX_VARS, ZERO_EXPONENTS};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<C: Coeff = Scalar> {
    ctx: VarContext,
    terms: BTreeMap<Exponents, C>,
}

/// Canonical-order polynomial with rational coefficients; `t`, `q` are variables.
pub type LaurentPoly = Poly<Scalar>;

pub(crate) fn add_exps(a: &Exponents, b: &Exponents) -> Exponents {
    let mut out = ZERO_EXPONENTS;
    for i in 0..MAX_VARS {
        out[i] = a[i] + b[i];
    }
    out
}

pub(crate) fn sub_exps(a: &Exponents, b: &Exponents) -> Exponents {
    let mut out = ZERO_EXPONENTS;
    for i in 0..MAX_VARS {
        out[i] = a[i] - b[i];
    }
    out
}

fn neg_exps(a: &Exponents) -> Exponents {
    let mut out = ZERO_EXPONENTS;
    for i in 0..MAX_VARS {
        out[i] = -a[i];
    }
    out
}

impl<C: Coeff> Poly<C> {
    pub fn zero(ctx: VarContext) -> Self {
        Self { ctx, terms: BTreeMap::new() }
    }

    pub fn one(ctx: VarContext) -> Self {
        Self::constant(ctx, C::one())
    }

    pub fn constant(ctx: VarContext, c: C) -> Self {
        Self::monomial(ctx, ZERO_EXPONENTS, c)
    }

    pub fn from_int(ctx: VarContext, n: i64) -> Self {
        Self::constant(ctx, C::from_int(n))
    }

    pub fn monomial(ctx: VarContext, exps: Exponents, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Self { ctx, terms }
    }

    pub fn from_terms(ctx: VarContext, terms: impl IntoIterator<Item = (Exponents, C)>) -> Self {
        let mut p = Self::zero(ctx);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Monomial `c · v^e`.
    pub fn var_power(ctx: VarContext, v: Var, e: i16) -> Self {
        let mut exps = ZERO_EXPONENTS;
        exps[ctx.idx(v)] = e;
        Self::monomial(ctx, exps, C::one())
    }

    pub fn var(ctx: VarContext, v: Var) -> Self {
        Self::var_power(ctx, v, 1)
    }

    pub fn x(ctx: VarContext, i: usize) -> Self {
        Self::var(ctx, Var::X(i))
    }

    pub fn y(ctx: VarContext, j: usize) -> Self {
        Self::var(ctx, Var::Y(j))
    }

    /// The parameter `t` or `q`: a constant when the coefficient field absorbs it,
    /// otherwise the corresponding variable.
    pub fn param(ctx: VarContext, p: Param) -> Self {
        match C::param(p) {
            Some(c) => Self::constant(ctx, c),
            None => Self::var(ctx, p.into()),
        }
    }

    pub fn param_power(ctx: VarContext, p: Param, e: i16) -> Self {
        match C::param(p) {
            Some(c) => {
                let base = Self::constant(ctx, c);
                if e >= 0 {
                    base.pow(e as u32)
                } else {
                    let inv = base.as_constant().and_then(|c| c.inv()).expect("parameter is a unit");
                    Self::constant(ctx, inv).pow((-e) as u32)
                }
            }
            None => Self::var_power(ctx, p.into(), e),
        }
    }

    pub fn t(ctx: VarContext) -> Self {
        Self::param(ctx, Param::T)
    }

    pub fn ctx(&self) -> VarContext {
        self.ctx
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &C)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exps: &Exponents) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => self.terms.get(&ZERO_EXPONENTS).cloned(),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_term(&self) -> Option<(&Exponents, &C)> {
        self.terms.last_key_value()
    }

    pub fn add_term(&mut self, exps: Exponents, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(existing) => {
                let s = existing.add(&c);
                if s.is_zero() {
                    self.terms.remove(&exps);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    fn check_ctx(&self, other: &Self) {
        assert_eq!(self.ctx, other.ctx, "polynomials live in different variable contexts");
    }

    pub fn add_poly(&self, other: &Self) -> Self {
        self.check_ctx(other);
        let (big, small) = if self.terms.len() >= other.terms.len() { (self, other) } else { (other, self) };
        let mut out = big.clone();
        for (e, c) in &small.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub_poly(&self, other: &Self) -> Self {
        self.check_ctx(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.neg());
        }
        out
    }

    pub fn neg_poly(&self) -> Self {
        Self { ctx: self.ctx, terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect() }
    }

    pub fn mul_poly(&self, other: &Self) -> Self {
        self.check_ctx(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.ctx);
        }
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        let mut acc: HashMap<Exponents, C> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let key = add_exps(ea, eb);
                let prod = ca.mul(cb);
                match acc.get_mut(&key) {
                    Some(v) => *v = v.add(&prod),
                    None => {
                        acc.insert(key, prod);
                    }
                }
            }
        }
        Self { ctx: self.ctx, terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.ctx);
        }
        Self { ctx: self.ctx, terms: self.terms.iter().map(|(e, v)| (*e, v.mul(c))).collect() }
    }

    pub fn mul_monomial(&self, exps: &Exponents, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.ctx);
        }
        Self { ctx: self.ctx, terms: self.terms.iter().map(|(e, v)| (add_exps(e, exps), v.mul(c))).collect() }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut result = Self::one(self.ctx);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_poly(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_poly(&base);
            }
        }
        result
    }

    pub fn product<'a>(ctx: VarContext, factors: impl IntoIterator<Item = &'a Self>) -> Self {
        factors.into_iter().fold(Self::one(ctx), |acc, f| acc.mul_poly(f))
    }

    /// Componentwise minimum and maximum exponents over the support.
    pub fn exponent_bounds(&self) -> Option<(Exponents, Exponents)> {
        let mut it = self.terms.keys();
        let first = *it.next()?;
        let (mut lo, mut hi) = (first, first);
        for e in it {
            for i in 0..MAX_VARS {
                lo[i] = lo[i].min(e[i]);
                hi[i] = hi[i].max(e[i]);
            }
        }
        Some((lo, hi))
    }

    pub fn degree_in(&self, v: Var) -> i16 {
        let i = self.ctx.idx(v);
        self.terms.keys().map(|e| e[i]).max().unwrap_or(0)
    }

    /// Whether no x- or y-variable appears with a negative exponent.
    pub fn is_polynomial_in_xy(&self) -> bool {
        let ctx = self.ctx;
        self.terms.keys().all(|e| (0..ctx.nx() + ctx.ny()).all(|i| e[i] >= 0))
    }

    pub fn mentions(&self, v: Var) -> bool {
        let i = self.ctx.idx(v);
        self.terms.keys().any(|e| e[i] != 0)
    }

    pub fn y_degree_of(ctx: &VarContext, e: &Exponents) -> i32 {
        (ctx.nx()..ctx.nx() + ctx.ny()).map(|i| e[i] as i32).sum()
    }

    /// Drops every term whose total y-degree exceeds `max_degree`.
    pub fn truncate_y_degree(&self, max_degree: usize) -> Self {
        let ctx = self.ctx;
        Self {
            ctx,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| Self::y_degree_of(&ctx, e) <= max_degree as i32)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    pub fn filter_terms(&self, mut keep: impl FnMut(&Exponents) -> bool) -> Self {
        Self {
            ctx: self.ctx,
            terms: self.terms.iter().filter(|(e, _)| keep(e)).map(|(e, c)| (*e, c.clone())).collect(),
        }
    }

    pub fn map_coeffs<D: Coeff>(&self, mut f: impl FnMut(&C) -> D) -> Poly<D> {
        Poly::from_terms(self.ctx, self.terms.iter().map(|(e, c)| (*e, f(c))))
    }

    /// Re-homes the polynomial in a wider or narrower context via an index map
    /// (`map[i]` is the target slot of source slot `i`).
    pub fn rehome(&self, target: VarContext, map: &[usize]) -> Self {
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut ne = ZERO_EXPONENTS;
            for i in 0..self.ctx.len() {
                if e[i] != 0 {
                    ne[map[i]] += e[i];
                }
            }
            out.add_term(ne, c.clone());
        }
        out
    }

    /// Exact division. Fails with `NotDivisible` when `d` does not divide `self`.
    ///
    /// Quotient exponents are confined to the box forced by the Newton polytopes
    /// of the operands; this bounds the loop when no quotient exists. In x and y
    /// the quotient must stay polynomial whenever both operands are.
    pub fn exact_div(&self, d: &Self) -> Result<Self> {
        self.check_ctx(d);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.ctx));
        }
        let (dlm, dlc) = d.leading_term().map(|(e, c)| (*e, c.clone())).unwrap();
        let dlc_inv = dlc.inv().ok_or(Error::DivisionByZero)?;
        if d.terms.len() == 1 {
            let inv = neg_exps(&dlm);
            let q = self.mul_monomial(&inv, &dlc_inv);
            if self.is_polynomial_in_xy() && d.is_polynomial_in_xy() && !q.is_polynomial_in_xy() {
                return Err(Error::NotDivisible("monomial divisor leaves negative exponents".into()));
            }
            return Ok(q);
        }
        let (pmin, pmax) = self.exponent_bounds().unwrap();
        let (dmin, dmax) = d.exponent_bounds().unwrap();
        let mut lo = sub_exps(&pmin, &dmin);
        let hi = sub_exps(&pmax, &dmax);
        let xy = self.ctx.nx() + self.ctx.ny();
        for i in 0..xy {
            if pmin[i] >= 0 && dmin[i] >= 0 {
                lo[i] = lo[i].max(0);
            }
        }
        let in_box = |e: &Exponents| (0..self.ctx.len()).all(|i| e[i] >= lo[i] && e[i] <= hi[i]);

        let mut rem = self.terms.clone();
        let mut quot: BTreeMap<Exponents, C> = BTreeMap::new();
        let divisor: Vec<(Exponents, C)> = d.terms.iter().map(|(e, c)| (*e, c.clone())).collect();
        while let Some((m, c)) = rem.last_key_value() {
            let qm = sub_exps(m, &dlm);
            if !in_box(&qm) {
                return Err(Error::NotDivisible(format!(
                    "quotient term outside admissible exponent box ({} terms left)",
                    rem.len()
                )));
            }
            let qc = c.mul(&dlc_inv);
            for (de, dc) in &divisor {
                let key = add_exps(&qm, de);
                let v = qc.mul(dc);
                match rem.get_mut(&key) {
                    Some(existing) => {
                        let s = existing.sub(&v);
                        if s.is_zero() {
                            rem.remove(&key);
                        } else {
                            *existing = s;
                        }
                    }
                    None => {
                        rem.insert(key, v.neg());
                    }
                }
            }
            quot.insert(qm, qc);
        }
        Ok(Self { ctx: self.ctx, terms: quot })
    }

    /// Simultaneous substitution of variables by polynomials of the same context.
    ///
    /// A variable occurring with a negative exponent must map to a unit monomial.
    pub fn substitute(&self, assignment: &[(Var, Poly<C>)]) -> Result<Self> {
        let mut images: Vec<Option<&Poly<C>>> = vec![None; self.ctx.len()];
        for (v, img) in assignment {
            self.check_ctx(img);
            images[self.ctx.index(*v)?] = Some(img);
        }
        if images.iter().all(|i| i.map(|p| p.terms.len() <= 1).unwrap_or(true)) {
            return self.substitute_monomial_images(&images);
        }
        let mut cache: HashMap<(usize, i16), Poly<C>> = HashMap::new();
        let mut out = Self::zero(self.ctx);
        for (e, c) in &self.terms {
            let mut kept = ZERO_EXPONENTS;
            let mut factor = Self::constant(self.ctx, c.clone());
            for i in 0..self.ctx.len() {
                if e[i] == 0 {
                    continue;
                }
                match images[i] {
                    None => kept[i] = e[i],
                    Some(img) => {
                        let key = (i, e[i]);
                        if !cache.contains_key(&key) {
                            let p = if e[i] > 0 {
                                img.pow(e[i] as u32)
                            } else {
                                invert_monomial(img, self.ctx.var_at(i))?.pow((-e[i]) as u32)
                            };
                            cache.insert(key, p);
                        }
                        factor = factor.mul_poly(&cache[&key]);
                    }
                }
            }
            out = out.add_poly(&factor.mul_monomial(&kept, &C::one()));
        }
        Ok(out)
    }

    fn substitute_monomial_images(&self, images: &[Option<&Poly<C>>]) -> Result<Self> {
        let parts: Vec<Option<Option<(Exponents, C)>>> = images
            .iter()
            .map(|img| img.map(|p| p.terms.iter().next().map(|(e, c)| (*e, c.clone()))))
            .collect();
        let mut out = Self::zero(self.ctx);
        'terms: for (e, c) in &self.terms {
            let mut ne = ZERO_EXPONENTS;
            let mut nc = c.clone();
            for i in 0..self.ctx.len() {
                let k = e[i];
                if k == 0 {
                    continue;
                }
                match &parts[i] {
                    None => ne[i] += k,
                    Some(None) => {
                        if k > 0 {
                            continue 'terms;
                        }
                        return Err(Error::DivisionByZero);
                    }
                    Some(Some((ie, ic))) => {
                        for j in 0..MAX_VARS {
                            ne[j] += ie[j] * k;
                        }
                        let base = if k > 0 {
                            ic.clone()
                        } else {
                            ic.inv().ok_or(Error::DivisionByZero)?
                        };
                        for _ in 0..k.unsigned_abs() {
                            nc = nc.mul(&base);
                        }
                    }
                }
            }
            out.add_term(ne, nc);
        }
        Ok(out)
    }

    pub fn swap_vars(&self, a: Var, b: Var) -> Self {
        let (ia, ib) = (self.ctx.idx(a), self.ctx.idx(b));
        Self {
            ctx: self.ctx,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut ne = *e;
                    ne.swap(ia, ib);
                    (ne, c.clone())
                })
                .collect(),
        }
    }

    /// Applies `x_i ↦ x_{perm[i-1]}` (1-based images) to the first `perm.len()` x-variables.
    pub fn permute_x(&self, perm: &[usize]) -> Self {
        Self {
            ctx: self.ctx,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut ne = *e;
                    for slot in ne.iter_mut().take(perm.len()) {
                        *slot = 0;
                    }
                    for (i, &target) in perm.iter().enumerate() {
                        ne[target - 1] += e[i];
                    }
                    (ne, c.clone())
                })
                .collect(),
        }
    }
}

fn invert_monomial<C: Coeff>(p: &Poly<C>, v: Var) -> Result<Poly<C>> {
    if p.terms.len() != 1 {
        return Err(Error::NonInvertibleImage(format!(
            "{v} has a negative exponent but its image has {} terms",
            p.terms.len()
        )));
    }
    let (e, c) = p.terms.iter().next().unwrap();
    let ci = c.inv().ok_or(Error::DivisionByZero)?;
    Ok(Poly::monomial(p.ctx, neg_exps(e), ci))
}

impl<C: Coeff + Ord> PartialOrd for Poly<C> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<C: Coeff + Ord> Ord for Poly<C> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ctx.cmp(&other.ctx).then_with(|| self.terms.iter().cmp(other.terms.iter()))
    }
}

impl<C: Coeff> std::hash::Hash for Poly<C>
where
    C: std::hash::Hash,
{
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ctx.hash(state);
        for (e, c) in &self.terms {
            e.hash(state);
            c.hash(state);
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl<C: Coeff> $tr<&Poly<C>> for &Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: &Poly<C>) -> Poly<C> {
                self.$inner(rhs)
            }
        }
        impl<C: Coeff> $tr<Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: Poly<C>) -> Poly<C> {
                self.$inner(&rhs)
            }
        }
        impl<C: Coeff> $tr<&Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: &Poly<C>) -> Poly<C> {
                self.$inner(rhs)
            }
        }
        impl<C: Coeff> $tr<Poly<C>> for &Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: Poly<C>) -> Poly<C> {
                self.$inner(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_poly);
forward_binop!(Sub, sub, sub_poly);
forward_binop!(Mul, mul, mul_poly);

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        self.neg_poly()
    }
}

impl<C: Coeff> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        self.neg_poly()
    }
}

pub(crate) fn render_monomial(ctx: &VarContext, e: &Exponents) -> String {
    let mut parts = Vec::new();
    for i in 0..ctx.len() {
        match e[i] {
            0 => {}
            1 => parts.push(ctx.var_at(i).to_string()),
            k => parts.push(format!("{}^{}", ctx.var_at(i), k)),
        }
    }
    parts.join("*")
}

impl<C: Coeff> fmt::Display for Poly<C> {
    /// Terms in descending lex order, e.g. `x1^2 - 3/2*t*y1 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mono = render_monomial(&self.ctx, e);
            let (negative, body) = if c.needs_parens() {
                (false, format!("({})", c.render()))
            } else if c.is_negative_unit_like() {
                (true, c.neg().render())
            } else {
                (false, c.render())
            };
            let sep = match (first, negative) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let term = if mono.is_empty() {
                body
            } else if body == "1" {
                mono
            } else {
                format!("{body}*{mono}")
            };
            write!(f, "{sep}{term}")?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::coeff::scalar;

    fn ctx2() -> VarContext {
        VarContext::new(2).unwrap()
    }

    #[test]
    fn exact_division_of_constructed_product() {
        let c = ctx2();
        let x1 = LaurentPoly::x(c, 1);
        let y1 = LaurentPoly::y(c, 1);
        let t = LaurentPoly::t(c);
        let a = &x1 - &y1;
        let b = &x1 - &(&t * &y1);
        assert_eq!((&a * &b).exact_div(&a).unwrap(), b);
        assert!(LaurentPoly::zero(c).exact_div(&a).unwrap().is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let c = ctx2();
        let x1 = LaurentPoly::x(c, 1);
        let x2 = LaurentPoly::x(c, 2);
        let p = &x1 * &x1 - &x2 * &x2;
        assert_eq!(p.exact_div(&(&x1 - &x2)).unwrap(), &x1 + &x2);
    }

    #[test]
    fn division_errors() {
        let c = ctx2();
        let x1 = LaurentPoly::x(c, 1);
        let x2 = LaurentPoly::x(c, 2);
        assert_eq!(x1.exact_div(&LaurentPoly::zero(c)), Err(Error::DivisionByZero));
        assert!(matches!((&x1 + &LaurentPoly::one(c)).exact_div(&(&x1 - &x2)), Err(Error::NotDivisible(_))));
        assert!(matches!(x1.exact_div(&x2), Err(Error::NotDivisible(_))));
    }

    #[test]
    fn laurent_division_in_t() {
        let c = ctx2();
        let t = LaurentPoly::t(c);
        let tinv = LaurentPoly::param_power(c, Param::T, -1);
        let p = &t + &tinv;
        assert_eq!(p.exact_div(&tinv).unwrap(), &t * &t + LaurentPoly::one(c));
    }

    #[test]
    fn substitution_examples() {
        let c = VarContext::new(2).unwrap();
        let x1 = LaurentPoly::x(c, 1);
        let x2 = LaurentPoly::x(c, 2);
        let y1 = LaurentPoly::y(c, 1);
        let y2 = LaurentPoly::y(c, 2);
        let t = LaurentPoly::t(c);
        let ty1 = &t * &y1;
        let p = &x1 - &ty1;
        assert!(p.substitute(&[(Var::X(1), ty1.clone())]).unwrap().is_zero());
        let p = &x1 * &x2;
        let got = p.substitute(&[(Var::X(1), y1.clone()), (Var::X(2), &t * &t * &y2)]).unwrap();
        assert_eq!(got, &t * &t * &y1 * &y2);
        let tinv = LaurentPoly::param_power(c, Param::T, -1);
        let p = &tinv * &x1;
        assert_eq!(p.substitute(&[(Var::X(1), ty1.clone())]).unwrap(), y1);
        // negative power of t with a non-monomial image
        let p = tinv.clone();
        assert!(matches!(
            p.substitute(&[(Var::T, &t + &LaurentPoly::one(c))]),
            Err(Error::NonInvertibleImage(_))
        ));
    }

    #[test]
    fn display_is_canonical() {
        let c = ctx2();
        let x1 = LaurentPoly::x(c, 1);
        let t = LaurentPoly::t(c);
        let p = &x1 * &x1 - (&t * &LaurentPoly::constant(c, scalar(3))) + LaurentPoly::one(c);
        assert_eq!(p.to_string(), "x1^2 - 3*t + 1");
        assert_eq!(LaurentPoly::one(c).to_string(), "1");
    }
}
