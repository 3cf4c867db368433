//! Reduced rational functions in the parameters `t`, `q`.

use std::fmt;

use num_traits::Signed;

use super::coeff::{Coeff, Scalar};
use super::context::{Exponents, Param, Var, VarContext, ZERO_EXPONENTS};
use super::poly::{sub_exps, Poly};
use crate::error::{Error, Result};

/// Element of Q(t, q), kept as `num/den` with `gcd(num, den) = 1`, both genuine
/// polynomials, and the lowest lex term of `den` normalized to coefficient 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct QtScalar {
    num: Poly<Scalar>,
    den: Poly<Scalar>,
}

const PCTX: VarContext = VarContext::parameters();

type Uni = Vec<Scalar>;
type Bi = Vec<Uni>;

fn uni_trim(mut a: Uni) -> Uni {
    while a.last().map(|c| c.is_zero()).unwrap_or(false) {
        a.pop();
    }
    a
}

fn uni_rem(a: &Uni, b: &Uni) -> Uni {
    let mut r = a.clone();
    let db = b.len() - 1;
    let lc_inv = b[db].recip();
    while r.len() > db {
        let k = r.len() - 1;
        let f = &r[k] * &lc_inv;
        let shift = k - db;
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] = &r[shift + i] - &f * bi;
        }
        r = uni_trim(r);
    }
    r
}

fn uni_monic(a: Uni) -> Uni {
    match a.last() {
        None => a,
        Some(lc) => {
            let inv = lc.recip();
            a.iter().map(|c| c * &inv).collect()
        }
    }
}

fn uni_gcd(a: &Uni, b: &Uni) -> Uni {
    let (mut a, mut b) = (uni_trim(a.clone()), uni_trim(b.clone()));
    while !b.is_empty() {
        let r = uni_rem(&a, &b);
        a = b;
        b = r;
    }
    uni_monic(a)
}

fn uni_mul(a: &Uni, b: &Uni) -> Uni {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Scalar::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

fn uni_sub(a: &Uni, b: &Uni) -> Uni {
    let mut out = vec![Scalar::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    uni_trim(out)
}

/// Exact univariate quotient; callers guarantee divisibility.
fn uni_div(a: &Uni, b: &Uni) -> Uni {
    let mut r = a.clone();
    let db = b.len() - 1;
    if r.len() <= db {
        return Vec::new();
    }
    let mut q = vec![Scalar::zero(); r.len() - db];
    let lc_inv = b[db].recip();
    while r.len() > db {
        let k = r.len() - 1;
        let f = &r[k] * &lc_inv;
        let shift = k - db;
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] = &r[shift + i] - &f * bi;
        }
        q[shift] = f;
        r = uni_trim(r);
    }
    q
}

fn to_bi(p: &Poly<Scalar>) -> Bi {
    let (ti, qi) = (PCTX.t_index(), PCTX.q_index());
    let dt = p.terms().map(|(e, _)| e[ti] as usize).max().unwrap_or(0);
    let mut out: Bi = vec![Vec::new(); dt + 1];
    for (e, c) in p.terms() {
        let row = &mut out[e[ti] as usize];
        let k = e[qi] as usize;
        if row.len() <= k {
            row.resize(k + 1, Scalar::zero());
        }
        row[k] = c.clone();
    }
    out
}

fn from_bi(b: &Bi) -> Poly<Scalar> {
    let (ti, qi) = (PCTX.t_index(), PCTX.q_index());
    let mut p = Poly::zero(PCTX);
    for (i, row) in b.iter().enumerate() {
        for (k, c) in row.iter().enumerate() {
            let mut e = ZERO_EXPONENTS;
            e[ti] = i as i16;
            e[qi] = k as i16;
            p.add_term(e, c.clone());
        }
    }
    p
}

fn bi_trim(mut a: Bi) -> Bi {
    for row in a.iter_mut() {
        *row = uni_trim(std::mem::take(row));
    }
    while a.last().map(|r| r.is_empty()).unwrap_or(false) {
        a.pop();
    }
    a
}

fn bi_content(a: &Bi) -> Uni {
    let mut g: Uni = Vec::new();
    for row in a {
        if row.is_empty() {
            continue;
        }
        g = if g.is_empty() { uni_monic(row.clone()) } else { uni_gcd(&g, row) };
        if g.len() == 1 {
            break;
        }
    }
    g
}

fn bi_primitive(a: &Bi) -> Bi {
    let c = bi_content(a);
    a.iter().map(|row| if row.is_empty() { Vec::new() } else { uni_div(row, &c) }).collect()
}

/// Pseudo-remainder of `a` by `b` in Q[q][t].
fn bi_prem(a: &Bi, b: &Bi) -> Bi {
    let db = b.len() - 1;
    let lc = &b[db];
    let mut r = a.clone();
    while r.len() > db {
        let k = r.len() - 1;
        let lr = r[k].clone();
        let shift = k - db;
        let mut next: Bi = r.iter().map(|row| uni_mul(row, lc)).collect();
        for (i, bi) in b.iter().enumerate() {
            next[shift + i] = uni_sub(&next[shift + i], &uni_mul(&lr, bi));
        }
        r = bi_trim(next);
    }
    r
}

fn bi_gcd(a: &Bi, b: &Bi) -> Bi {
    let ca = bi_content(a);
    let cb = bi_content(b);
    let g_cont = uni_gcd(&ca, &cb);
    let (mut u, mut v) = (bi_primitive(a), bi_primitive(b));
    if u.len() < v.len() {
        std::mem::swap(&mut u, &mut v);
    }
    while v.len() > 1 {
        let r = bi_prem(&u, &v);
        u = v;
        if r.is_empty() {
            v = Vec::new();
            break;
        }
        v = bi_primitive(&r);
    }
    let g = if v.is_empty() { u } else { vec![vec![Scalar::from_int(1)]] };
    g.iter().map(|row| uni_mul(row, &g_cont)).collect()
}

/// Greatest common divisor in Q[t, q], normalized to leading coefficient 1.
pub fn gcd_tq(a: &Poly<Scalar>, b: &Poly<Scalar>) -> Poly<Scalar> {
    if a.is_zero() {
        return monic(b);
    }
    if b.is_zero() {
        return monic(a);
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one(PCTX);
    }
    monic(&from_bi(&bi_gcd(&bi_trim(to_bi(a)), &bi_trim(to_bi(b)))))
}

fn monic(p: &Poly<Scalar>) -> Poly<Scalar> {
    match p.leading_term() {
        None => p.clone(),
        Some((_, c)) => p.scale(&c.recip()),
    }
}

impl QtScalar {
    pub fn new(num: Poly<Scalar>, den: Poly<Scalar>) -> Result<Self> {
        if num.ctx() != PCTX || den.ctx() != PCTX {
            return Err(Error::InvalidContext("QtScalar parts must live in the parameter context".into()));
        }
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn from_poly(p: Poly<Scalar>) -> Self {
        Self::reduce(p, Poly::one(PCTX))
    }

    pub fn context() -> VarContext {
        PCTX
    }

    pub fn t() -> Self {
        Self::from_poly(Poly::var(PCTX, Var::T))
    }

    pub fn q() -> Self {
        Self::from_poly(Poly::var(PCTX, Var::Q))
    }

    pub fn param_monomial(t_exp: i16, q_exp: i16) -> Self {
        let mut e = ZERO_EXPONENTS;
        e[PCTX.t_index()] = t_exp;
        e[PCTX.q_index()] = q_exp;
        Self::from_poly(Poly::monomial(PCTX, e, Scalar::from_int(1)))
    }

    pub fn numerator(&self) -> &Poly<Scalar> {
        &self.num
    }

    pub fn denominator(&self) -> &Poly<Scalar> {
        &self.den
    }

    pub fn as_poly(&self) -> Option<&Poly<Scalar>> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    fn reduce(num: Poly<Scalar>, den: Poly<Scalar>) -> Self {
        if num.is_zero() {
            return Self { num, den: Poly::one(PCTX) };
        }
        // clear negative exponents so both parts are genuine polynomials
        let shift = {
            let (nlo, _) = num.exponent_bounds().unwrap();
            let (dlo, _) = den.exponent_bounds().unwrap();
            let mut s = ZERO_EXPONENTS;
            for i in 0..PCTX.len() {
                s[i] = -(nlo[i].min(dlo[i]));
            }
            s
        };
        let one = Scalar::from_int(1);
        let mut num = num.mul_monomial(&shift, &one);
        let mut den = den.mul_monomial(&shift, &one);
        // pull common monomial content
        let (nlo, _) = num.exponent_bounds().unwrap();
        let (dlo, _) = den.exponent_bounds().unwrap();
        let mut common = ZERO_EXPONENTS;
        for i in 0..PCTX.len() {
            common[i] = nlo[i].min(dlo[i]);
        }
        if common != ZERO_EXPONENTS {
            let inv = sub_exps(&ZERO_EXPONENTS, &common);
            num = num.mul_monomial(&inv, &one);
            den = den.mul_monomial(&inv, &one);
        }
        if !den.is_constant() {
            let g = gcd_tq(&num, &den);
            if !g.is_one() {
                num = num.exact_div(&g).expect("gcd divides numerator");
                den = den.exact_div(&g).expect("gcd divides denominator");
            }
        }
        let lc = den.terms().next().map(|(_, c)| c.clone()).unwrap();
        if lc != one {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Self { num, den }
    }

    /// Substitutes the parameter `q` by a Laurent polynomial in `t`, `q`.
    pub fn substitute_q(&self, image: &Poly<Scalar>) -> Result<Self> {
        let n = self.num.substitute(&[(Var::Q, image.clone())])?;
        let d = self.den.substitute(&[(Var::Q, image.clone())])?;
        Self::new(n, d)
    }

    pub fn substitute_t(&self, image: &Poly<Scalar>) -> Result<Self> {
        let n = self.num.substitute(&[(Var::T, image.clone())])?;
        let d = self.den.substitute(&[(Var::T, image.clone())])?;
        Self::new(n, d)
    }

    pub fn mentions(&self, p: Param) -> bool {
        self.num.mentions(p.into()) || self.den.mentions(p.into())
    }

    pub fn pow(&self, e: i32) -> Self {
        let base = if e < 0 { self.inv().expect("nonzero base") } else { self.clone() };
        let mut out = Self::one();
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// Compact ascending rendering such as `1-t` or `(1-t)/(1-q)`.
    pub fn compact(&self) -> String {
        let n = compact_poly(&self.num);
        if self.den.is_one() {
            return n;
        }
        let d = compact_poly(&self.den);
        let wrap = |s: String, p: &Poly<Scalar>| if p.num_terms() > 1 { format!("({s})") } else { s };
        if self.num.num_terms() > 1 {
            format!("({n})/{}", wrap(d, &self.den))
        } else {
            format!("{n}/{}", wrap(d, &self.den))
        }
    }
}

fn compact_poly(p: &Poly<Scalar>) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, (e, c)) in p.terms().enumerate() {
        let mono = super::poly::render_monomial(&PCTX, e);
        let neg = c.is_negative();
        let a = c.abs();
        let body = if mono.is_empty() {
            a.to_string()
        } else if a == Scalar::from_int(1) {
            mono
        } else {
            format!("{a}*{mono}")
        };
        match (i, neg) {
            (0, true) => s.push('-'),
            (0, false) => {}
            (_, true) => s.push('-'),
            (_, false) => s.push('+'),
        }
        s.push_str(&body);
    }
    s
}

impl fmt::Display for QtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() && self.num.num_terms() > 1 {
            write!(f, "({})", self.compact())
        } else {
            write!(f, "{}", self.compact())
        }
    }
}

impl Coeff for QtScalar {
    fn zero() -> Self {
        Self { num: Poly::zero(PCTX), den: Poly::one(PCTX) }
    }
    fn one() -> Self {
        Self { num: Poly::one(PCTX), den: Poly::one(PCTX) }
    }
    fn from_int(n: i64) -> Self {
        Self { num: Poly::from_int(PCTX, n), den: Poly::one(PCTX) }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
    fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::reduce(&self.num + &other.num, self.den.clone());
        }
        Self::reduce(&self.num * &other.den + &other.num * &self.den, &self.den * &other.den)
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self { num: &self.num * &other.num, den: Poly::one(PCTX) };
        }
        Self::reduce(&self.num * &other.num, &self.den * &other.den)
    }
    fn neg(&self) -> Self {
        Self { num: -&self.num, den: self.den.clone() }
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::reduce(self.den.clone(), self.num.clone()))
        }
    }
    fn param(p: Param) -> Option<Self> {
        Some(match p {
            Param::T => Self::t(),
            Param::Q => Self::q(),
        })
    }
    fn from_scalar(s: &Scalar) -> Self {
        Self { num: Poly::constant(PCTX, s.clone()), den: Poly::one(PCTX) }
    }
    fn render(&self) -> String {
        self.compact()
    }
    fn needs_parens(&self) -> bool {
        self.num.num_terms() > 1 || !self.den.is_one()
    }
    fn is_negative_unit_like(&self) -> bool {
        self.den.is_one() && self.num.num_terms() == 1 && self.num.terms().next().unwrap().1.is_negative()
    }
}

/// Moves `t`, `q` exponents of a rational-coefficient polynomial into its coefficients.
pub fn absorb_parameters(p: &Poly<Scalar>) -> Poly<QtScalar> {
    let ctx = p.ctx();
    let (ti, qi) = (ctx.t_index(), ctx.q_index());
    let mut out = Poly::zero(ctx);
    for (e, c) in p.terms() {
        let mut base: Exponents = *e;
        let (te, qe) = (base[ti], base[qi]);
        base[ti] = 0;
        base[qi] = 0;
        let coeff = QtScalar::param_monomial(te, qe).mul(&QtScalar::from_scalar(c));
        out.add_term(base, coeff);
    }
    out
}

/// Inverse of [`absorb_parameters`]; fails when a coefficient has a non-monomial denominator.
pub fn release_parameters(p: &Poly<QtScalar>) -> Result<Poly<Scalar>> {
    let ctx = p.ctx();
    let (ti, qi) = (ctx.t_index(), ctx.q_index());
    let mut out = Poly::zero(ctx);
    for (e, c) in p.terms() {
        if !c.den.is_monomial() {
            return Err(Error::NotDivisible(format!("coefficient {c} is not a Laurent polynomial")));
        }
        let (de, dc) = c.den.terms().next().unwrap();
        let inv = dc.recip();
        for (ne, nc) in c.num.terms() {
            let mut full = *e;
            full[ti] += ne[PCTX.t_index()] - de[PCTX.t_index()];
            full[qi] += ne[PCTX.q_index()] - de[PCTX.q_index()];
            out.add_term(full, nc * &inv);
        }
    }
    Ok(out)
}

/// Embeds a parameter-context polynomial into `ctx`.
pub fn lift_parameters(p: &Poly<Scalar>, ctx: VarContext) -> Poly<Scalar> {
    p.rehome(ctx, &[ctx.t_index(), ctx.q_index()])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> QtScalar {
        QtScalar::t()
    }
    fn q() -> QtScalar {
        QtScalar::q()
    }
    fn one() -> QtScalar {
        QtScalar::one()
    }

    #[test]
    fn reduction_cancels_common_factors() {
        let a = one().sub(&t().mul(&t()));
        let b = one().sub(&t());
        let r = a.mul(&b.inv().unwrap());
        assert_eq!(r, one().add(&t()));
        assert!(r.as_poly().is_some());
    }

    #[test]
    fn bivariate_gcd() {
        let a = one().sub(&q().mul(&t()));
        let b = one().sub(&q());
        let x = a.mul(&b).mul(&t().add(&q()));
        let y = a.mul(&one().add(&t()));
        let r = x.mul(&y.inv().unwrap());
        assert_eq!(*r.denominator(), *one().add(&t()).numerator());
        let expected = b.mul(&t().add(&q())).mul(&one().add(&t()).inv().unwrap());
        assert_eq!(r, expected);
    }

    #[test]
    fn sums_over_distinct_denominators() {
        let u = one().sub(&q()).inv().unwrap();
        let v = q().mul(&one().sub(&q()).inv().unwrap());
        assert_eq!(u.sub(&v), one());
        let tinv = t().inv().unwrap();
        assert_eq!(tinv.mul(&t()), one());
        assert_eq!(tinv.compact(), "1/t");
    }

    #[test]
    fn rendering() {
        assert_eq!(one().sub(&t()).to_string(), "(1-t)");
        let mac = one().sub(&t()).mul(&one().sub(&q()).inv().unwrap());
        assert_eq!(mac.compact(), "(1-t)/(1-q)");
    }

    #[test]
    fn parameter_round_trip() {
        let ctx = VarContext::new(1).unwrap();
        let p = Poly::<Scalar>::x(ctx, 1) * Poly::var_power(ctx, Var::T, -2) + Poly::var(ctx, Var::Q);
        let absorbed = absorb_parameters(&p);
        assert_eq!(absorbed.num_terms(), 2);
        assert_eq!(release_parameters(&absorbed).unwrap(), p);
    }
}
