//! Rational functions in partially factored normal form.

use std::collections::BTreeMap;
use std::fmt;

use super::coeff::{Coeff, Scalar};
use super::context::{Exponents, Var, VarContext, MAX_VARS, ZERO_EXPONENTS};
use super::poly::{add_exps, render_monomial, sub_exps, Poly};
use crate::error::{Error, Result};

/// `unit · x^monomial · ∏ f^k` with every `f` a non-monomial polynomial whose
/// monomial content is 1 and whose leading coefficient is 1.
///
/// Distinct keys need not be coprime; `==` is value equality (cross-multiplied).
#[derive(Clone, Debug)]
pub struct RationalFn {
    ctx: VarContext,
    unit: Scalar,
    monomial: Exponents,
    factors: BTreeMap<Poly<Scalar>, i32>,
}

struct Normalized {
    unit: Scalar,
    monomial: Exponents,
    factor: Option<Poly<Scalar>>,
}

fn normalize(p: &Poly<Scalar>) -> Normalized {
    let (lo, _) = p.exponent_bounds().expect("nonzero");
    let inv = sub_exps(&ZERO_EXPONENTS, &lo);
    let shifted = p.mul_monomial(&inv, &Scalar::one());
    let lc = shifted.leading_term().map(|(_, c)| c.clone()).unwrap();
    if shifted.is_constant() {
        return Normalized { unit: lc, monomial: lo, factor: None };
    }
    let monic = shifted.scale(&lc.recip());
    Normalized { unit: lc, monomial: lo, factor: Some(monic) }
}

impl RationalFn {
    pub fn zero(ctx: VarContext) -> Self {
        Self { ctx, unit: Scalar::zero(), monomial: ZERO_EXPONENTS, factors: BTreeMap::new() }
    }

    pub fn one(ctx: VarContext) -> Self {
        Self::constant(ctx, Scalar::one())
    }

    pub fn constant(ctx: VarContext, c: Scalar) -> Self {
        Self { ctx, unit: c, monomial: ZERO_EXPONENTS, factors: BTreeMap::new() }
    }

    pub fn from_poly(p: &Poly<Scalar>) -> Self {
        let ctx = p.ctx();
        if p.is_zero() {
            return Self::zero(ctx);
        }
        let n = normalize(p);
        let mut factors = BTreeMap::new();
        if let Some(f) = n.factor {
            factors.insert(f, 1);
        }
        Self { ctx, unit: n.unit, monomial: n.monomial, factors }
    }

    /// Product `∏ p^k` over the given factors with integer multiplicities.
    pub fn from_factors<'a>(ctx: VarContext, items: impl IntoIterator<Item = (&'a Poly<Scalar>, i32)>) -> Result<Self> {
        let mut out = Self::one(ctx);
        for (p, k) in items {
            if p.is_zero() {
                if k < 0 {
                    return Err(Error::DivisionByZero);
                }
                if k > 0 {
                    return Ok(Self::zero(ctx));
                }
                continue;
            }
            out = out.mul(&Self::from_poly(p).pow(k));
        }
        Ok(out)
    }

    pub fn ctx(&self) -> VarContext {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.unit.is_zero()
    }

    pub fn unit(&self) -> &Scalar {
        &self.unit
    }

    pub fn factors(&self) -> impl Iterator<Item = (&Poly<Scalar>, i32)> {
        self.factors.iter().map(|(p, k)| (p, *k))
    }

    pub fn monomial_part(&self) -> &Exponents {
        &self.monomial
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.ctx, other.ctx, "rational functions live in different contexts");
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.ctx);
        }
        let mut factors = self.factors.clone();
        for (p, k) in &other.factors {
            let e = factors.entry(p.clone()).or_insert(0);
            *e += k;
            if *e == 0 {
                factors.remove(p);
            }
        }
        Self {
            ctx: self.ctx,
            unit: &self.unit * &other.unit,
            monomial: add_exps(&self.monomial, &other.monomial),
            factors,
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self {
            ctx: self.ctx,
            unit: self.unit.recip(),
            monomial: sub_exps(&ZERO_EXPONENTS, &self.monomial),
            factors: self.factors.iter().map(|(p, k)| (p.clone(), -k)).collect(),
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?).reduce())
    }

    pub fn pow(&self, k: i32) -> Self {
        if k == 0 {
            return Self::one(self.ctx);
        }
        if self.is_zero() {
            assert!(k > 0, "zero to a negative power");
            return self.clone();
        }
        let mut unit = Scalar::one();
        let base = if k > 0 { self.unit.clone() } else { self.unit.recip() };
        for _ in 0..k.unsigned_abs() {
            unit *= &base;
        }
        let mut monomial = ZERO_EXPONENTS;
        for i in 0..MAX_VARS {
            monomial[i] = self.monomial[i] * k as i16;
        }
        Self { ctx: self.ctx, unit, monomial, factors: self.factors.iter().map(|(p, m)| (p.clone(), m * k)).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.ctx);
        }
        let mut out = self.clone();
        out.unit *= c;
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Scalar::one())
    }

    /// Splits into (numerator, denominator) polynomials; t/q monomials with negative
    /// exponents and negative x/y exponents both go to the denominator.
    pub fn numerator_denominator(&self) -> (Poly<Scalar>, Poly<Scalar>) {
        let mut np = ZERO_EXPONENTS;
        let mut dp = ZERO_EXPONENTS;
        for i in 0..MAX_VARS {
            if self.monomial[i] >= 0 {
                np[i] = self.monomial[i];
            } else {
                dp[i] = -self.monomial[i];
            }
        }
        let mut num = Poly::monomial(self.ctx, np, self.unit.clone());
        let mut den = Poly::monomial(self.ctx, dp, Scalar::one());
        for (p, k) in &self.factors {
            if *k > 0 {
                num = num.mul_poly(&p.pow(*k as u32));
            } else {
                den = den.mul_poly(&p.pow((-k) as u32));
            }
        }
        (num, den)
    }

    /// Exact sum over the least common multiple of tracked denominators.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.ctx, other.ctx, "rational functions live in different contexts");
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let ctx = self.ctx;
        let mut common_mono = ZERO_EXPONENTS;
        for i in 0..MAX_VARS {
            common_mono[i] = self.monomial[i].min(other.monomial[i]);
        }
        let mut common: BTreeMap<Poly<Scalar>, i32> = BTreeMap::new();
        let keys: std::collections::BTreeSet<&Poly<Scalar>> = self.factors.keys().chain(other.factors.keys()).collect();
        for &p in &keys {
            let a = self.factors.get(p).copied().unwrap_or(0);
            let b = other.factors.get(p).copied().unwrap_or(0);
            let m = a.min(b);
            if m != 0 {
                common.insert(p.clone(), m);
            }
        }
        let rest = |x: &Self| -> Poly<Scalar> {
            let mono = sub_exps(&x.monomial, &common_mono);
            let mut acc = Poly::monomial(ctx, mono, x.unit.clone());
            for &p in &keys {
                let k = x.factors.get(p).copied().unwrap_or(0);
                let left = k - common.get(p).copied().unwrap_or(0);
                if left > 0 {
                    acc = acc.mul_poly(&p.pow(left as u32));
                }
            }
            acc
        };
        let sum = rest(self).add_poly(&rest(other));
        if sum.is_zero() {
            return Self::zero(ctx);
        }
        let shared = Self { ctx, unit: Scalar::one(), monomial: common_mono, factors: common };
        shared.mul(&Self::from_poly(&sum)).reduce()
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Cancels denominator factors that divide numerator factors exactly.
    pub fn reduce(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let dens: Vec<Poly<Scalar>> = self.factors.iter().filter(|(_, k)| **k < 0).map(|(p, _)| p.clone()).collect();
        if dens.is_empty() {
            return self.clone();
        }
        let mut out = Self { ctx: self.ctx, unit: self.unit.clone(), monomial: self.monomial, factors: BTreeMap::new() };
        let mut den_mult: BTreeMap<Poly<Scalar>, i32> =
            self.factors.iter().filter(|(_, k)| **k < 0).map(|(p, k)| (p.clone(), -k)).collect();
        for (p, k) in self.factors.iter().filter(|(_, k)| **k > 0) {
            for _ in 0..*k {
                let mut cur = p.clone();
                for d in &dens {
                    while den_mult[d] > 0 && cur.num_terms() >= d.num_terms() {
                        match cur.exact_div(d) {
                            Ok(q) => {
                                cur = q;
                                *den_mult.get_mut(d).unwrap() -= 1;
                            }
                            Err(_) => break,
                        }
                    }
                }
                out = out.mul(&Self::from_poly(&cur));
            }
        }
        for (d, k) in den_mult {
            if k > 0 {
                *out.factors.entry(d.clone()).or_insert(0) -= k;
                if out.factors[&d] == 0 {
                    out.factors.remove(&d);
                }
            }
        }
        out
    }

    /// Value equality by cross-multiplication of canonical polynomials.
    pub fn rat_equal(&self, other: &Self) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        let q = self.mul(&other.inv().expect("nonzero"));
        let (n, d) = q.numerator_denominator();
        n == d
    }

    /// The polynomial this rational function equals, if any.
    pub fn to_poly(&self) -> Result<Poly<Scalar>> {
        let r = self.reduce();
        let (n, d) = r.numerator_denominator();
        let q = if d.is_one() { n } else { n.exact_div(&d)? };
        if !q.is_polynomial_in_xy() {
            return Err(Error::NotDivisible("negative x/y exponents remain".into()));
        }
        Ok(q)
    }

    /// Simultaneous substitution; images are polynomials of the same context.
    pub fn substitute(&self, assignment: &[(Var, Poly<Scalar>)]) -> Result<Self> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        let ctx = self.ctx;
        let mut mono_kept = self.monomial;
        let mut out = Self::constant(ctx, self.unit.clone());
        for (v, img) in assignment {
            let i = ctx.index(*v)?;
            let e = self.monomial[i];
            mono_kept[i] = 0;
            if e == 0 {
                continue;
            }
            if img.is_zero() {
                if e < 0 {
                    return Err(Error::DivisionByZero);
                }
                return Ok(Self::zero(ctx));
            }
            out = out.mul(&Self::from_poly(img).pow(e as i32));
        }
        out = out.mul(&Self { ctx, unit: Scalar::one(), monomial: mono_kept, factors: BTreeMap::new() });
        for (p, k) in &self.factors {
            let s = p.substitute(assignment)?;
            if s.is_zero() {
                if *k < 0 {
                    return Err(Error::DivisionByZero);
                }
                return Ok(Self::zero(ctx));
            }
            out = out.mul(&Self::from_poly(&s).pow(*k));
        }
        Ok(out)
    }

    /// Applies an exponent-slot relabelling to every part (e.g. a variable swap).
    pub fn map_polys(&self, f: impl Fn(&Poly<Scalar>) -> Poly<Scalar>) -> Self {
        let ctx = self.ctx;
        let mono = f(&Poly::monomial(ctx, self.monomial, Scalar::one()));
        let mut out = Self::from_poly(&mono).scale(&self.unit);
        for (p, k) in &self.factors {
            out = out.mul(&Self::from_poly(&f(p)).pow(*k));
        }
        out
    }

    pub fn swap_vars(&self, a: Var, b: Var) -> Self {
        self.map_polys(|p| p.swap_vars(a, b))
    }

    pub fn mentions(&self, v: Var) -> bool {
        let i = self.ctx.idx(v);
        self.monomial[i] != 0 || self.factors.keys().any(|p| p.mentions(v))
    }
}

impl PartialEq for RationalFn {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx && self.rat_equal(other)
    }
}

impl From<&Poly<Scalar>> for RationalFn {
    fn from(p: &Poly<Scalar>) -> Self {
        Self::from_poly(p)
    }
}

impl From<Poly<Scalar>> for RationalFn {
    fn from(p: Poly<Scalar>) -> Self {
        Self::from_poly(&p)
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = vec![self.unit.to_string()];
        let mono = render_monomial(&self.ctx, &self.monomial);
        if !mono.is_empty() {
            parts.push(mono);
        }
        for (p, k) in &self.factors {
            if *k == 1 {
                parts.push(format!("({p})"));
            } else {
                parts.push(format!("({p})^{k}"));
            }
        }
        write!(f, "{}", parts.join(" * "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup() -> (VarContext, Poly<Scalar>, Poly<Scalar>, Poly<Scalar>) {
        let c = VarContext::new(2).unwrap();
        (c, Poly::x(c, 1), Poly::x(c, 2), Poly::y(c, 1))
    }

    #[test]
    fn sum_with_one_sided_denominator() {
        let ctx = VarContext::new(1).unwrap();
        let d = Poly::one(ctx) - Poly::x(ctx, 1);
        let f = RationalFn::from_factors(ctx, [(&d, -1)]).unwrap();
        // 1/(1−x) − 1 = x/(1−x)
        let g = f.sub(&RationalFn::one(ctx));
        let expected = RationalFn::from_poly(&Poly::x(ctx, 1)).mul(&f);
        assert!(g.rat_equal(&expected));
    }

    #[test]
    fn self_quotient_is_one() {
        let (c, x1, x2, _) = setup();
        let d = RationalFn::from_poly(&(&x1 - &x2));
        assert!(d.div(&d).unwrap().rat_equal(&RationalFn::one(c)));
    }

    #[test]
    fn sign_matters() {
        let (_, x1, _, y1) = setup();
        let a = RationalFn::from_poly(&(&x1 - &y1)).inv().unwrap();
        let b = RationalFn::from_poly(&(&y1 - &x1)).inv().unwrap();
        assert!(!a.rat_equal(&b));
        assert!(a.rat_equal(&b.neg()));
    }

    #[test]
    fn factored_quotient_matches_polynomial() {
        let (c, x1, x2, _) = setup();
        let sq = &x1 * &x1 - &x2 * &x2;
        let r = RationalFn::from_factors(c, [(&sq, 1), (&(&x1 - &x2), -1)]).unwrap();
        assert!(r.rat_equal(&RationalFn::from_poly(&(&x1 + &x2))));
        assert_eq!(r.to_poly().unwrap(), &x1 + &x2);
    }

    #[test]
    fn addition_over_common_denominator() {
        let (c, x1, x2, _) = setup();
        // 1/(x1-x2) + 1/(x2-x1) = 0
        let a = RationalFn::from_poly(&(&x1 - &x2)).inv().unwrap();
        let b = RationalFn::from_poly(&(&x2 - &x1)).inv().unwrap();
        assert!(a.add(&b).is_zero());
        // x1/(x1-x2) + x2/(x2-x1) = 1
        let s = a.mul(&RationalFn::from_poly(&x1)).add(&b.mul(&RationalFn::from_poly(&x2)));
        assert_eq!(s.to_poly().unwrap(), Poly::one(c));
    }

    #[test]
    fn substitution_into_denominators() {
        let (c, x1, _, y1) = setup();
        let r = RationalFn::from_poly(&(&x1 - &y1)).inv().unwrap();
        assert_eq!(r.substitute(&[(Var::X(1), y1.clone())]), Err(Error::DivisionByZero));
        let s = r.substitute(&[(Var::X(1), &y1 + &Poly::one(c))]).unwrap();
        assert_eq!(s.to_poly().unwrap(), Poly::one(c));
    }
}
