//! Hall–Littlewood polynomials from `∪_ω`, Macdonald polynomials by Gram–Schmidt in the
//! monomial basis, the `(q, t)` scalar product and the constants `b_λ`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::alphabets::{schur, Alphabet};
use crate::combinatorics::{partitions_of, permutations, Partition};
use crate::error::{Error, Result};
use crate::exact_algebra::{
    absorb_parameters, determinant, gcd_tq, invert, one_minus_t_power, Coeff, Exponents, LaurentPoly, Param, Poly, QtScalar, Scalar, Var,
    VarContext, ZERO_EXPONENTS,
};
use crate::operators::{cup_omega, descending_vandermonde};

/// Largest weight handled by the power-sum transition and Gram–Schmidt.
pub const DEFAULT_DEGREE_BOUND: usize = 5;

/// Symmetric function in the monomial basis `m_λ`, coefficients in `ℚ(q, t)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SymFnExpr {
    coefficients: BTreeMap<Partition, QtScalar>,
}

impl SymFnExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(lambda: Partition) -> Self {
        Self::from_terms([(lambda, QtScalar::one())])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, QtScalar)>) -> Self {
        let mut s = Self::zero();
        for (l, c) in terms {
            s.add_term(l, c);
        }
        s
    }

    pub fn add_term(&mut self, lambda: Partition, c: QtScalar) {
        match self.coefficients.get_mut(&lambda) {
            Some(e) => {
                *e = e.add(&c);
                if e.is_zero() {
                    self.coefficients.remove(&lambda);
                }
            }
            None if !c.is_zero() => {
                self.coefficients.insert(lambda, c);
            }
            None => {}
        }
    }

    pub fn coefficients(&self) -> &BTreeMap<Partition, QtScalar> {
        &self.coefficients
    }

    pub fn coefficient(&self, lambda: &Partition) -> QtScalar {
        self.coefficients.get(lambda).cloned().unwrap_or_else(QtScalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Common weight of all terms, `None` when empty or inhomogeneous.
    pub fn weight(&self) -> Option<usize> {
        let ws: BTreeSet<usize> = self.coefficients.keys().map(|l| l.weight()).collect();
        if ws.len() == 1 {
            ws.into_iter().next()
        } else {
            None
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.coefficients.is_empty() || self.weight().is_some()
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut s = self.clone();
        for (l, c) in &other.coefficients {
            s.add_term(l.clone(), c.clone());
        }
        s
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.plus(&other.scale(&QtScalar::one().neg()))
    }

    pub fn scale(&self, c: &QtScalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { coefficients: self.coefficients.iter().map(|(l, v)| (l.clone(), v.mul(c))).collect() }
    }

    /// Applies `f` to each coefficient, dropping zeros.
    pub fn map_coefficients(&self, f: impl Fn(&QtScalar) -> Result<QtScalar>) -> Result<Self> {
        let mut s = Self::zero();
        for (l, c) in &self.coefficients {
            s.add_term(l.clone(), f(c)?);
        }
        Ok(s)
    }

    /// `q ↦ t`.
    pub fn at_q_equals_t(&self) -> Result<Self> {
        let t = Poly::t(QtScalar::context());
        self.map_coefficients(|c| c.substitute_q(&t))
    }

    /// `q ↦ 0`.
    pub fn at_q_zero(&self) -> Result<Self> {
        let z = Poly::zero(QtScalar::context());
        self.map_coefficients(|c| c.substitute_q(&z))
    }
}

impl fmt::Display for SymFnExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.coefficients.iter().rev().map(|(l, c)| format!("{c}*m{l}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

fn weight_context(k: usize) -> Result<VarContext> {
    VarContext::with_counts(k.max(1), 0)
}

fn partition_exponents(ctx: VarContext, lambda: &Partition) -> Exponents {
    let mut e = ZERO_EXPONENTS;
    for (i, &p) in lambda.parts().iter().enumerate() {
        e[ctx.index(Var::X(i + 1)).expect("in range")] = p as i16;
    }
    e
}

/// `m_λ` in the given letters (zero when `λ` has more parts than letters).
pub fn monomial_symmetric(ctx: VarContext, lambda: &Partition, letters: &[Var]) -> Result<LaurentPoly> {
    let n = letters.len();
    if lambda.length() > n {
        return Ok(Poly::zero(ctx));
    }
    let padded = lambda.padded(n);
    let distinct: BTreeSet<Vec<usize>> =
        permutations(n).into_iter().map(|(p, _)| p.iter().map(|&i| padded[i]).collect()).collect();
    let mut out = Poly::zero(ctx);
    for exps in distinct {
        let mut e = ZERO_EXPONENTS;
        for (v, &k) in letters.iter().zip(&exps) {
            e[ctx.index(*v)?] = k as i16;
        }
        out.add_term(e, <Scalar as Coeff>::one());
    }
    Ok(out)
}

/// Coefficients of `m_λ` (|λ| = k, ℓ(λ) ≤ nx) in a symmetric polynomial in x.
pub fn monomial_coefficients(f: &LaurentPoly, k: usize) -> SymFnExpr {
    let g = absorb_parameters(f);
    let ctx = g.ctx();
    SymFnExpr::from_terms(
        partitions_of(k)
            .into_iter()
            .filter(|l| l.length() <= ctx.nx())
            .map(|l| {
                let c = g.coefficient(&partition_exponents(ctx, &l));
                (l, c)
            }),
    )
}

/// `p_μ = Σ_λ to_monomial[μ][λ] m_λ` at a fixed weight, and the inverse.
#[derive(Clone, Debug)]
pub struct PowerSumTransition {
    pub weight: usize,
    pub partitions: Vec<Partition>,
    pub to_monomial: Vec<Vec<Scalar>>,
    pub from_monomial: Vec<Vec<Scalar>>,
}

impl PowerSumTransition {
    pub fn new(k: usize, bound: usize) -> Result<Self> {
        if k > bound {
            return Err(Error::BoundExceeded(format!("weight {k} exceeds the degree bound {bound}")));
        }
        let parts = partitions_of(k);
        let ctx = weight_context(k)?;
        let power = |j: usize| (1..=ctx.nx()).fold(Poly::zero(ctx), |acc, i| acc + Poly::x(ctx, i).pow(j as u32));
        let to_monomial: Vec<Vec<Scalar>> = parts
            .par_iter()
            .map(|mu| {
                let p = mu.parts().iter().fold(LaurentPoly::one(ctx), |acc, &j| acc * power(j));
                parts.iter().map(|l| p.coefficient(&partition_exponents(ctx, l))).collect()
            })
            .collect();
        let from_monomial = invert(&to_monomial).expect("power sums form a basis");
        Ok(Self { weight: k, partitions: parts, to_monomial, from_monomial })
    }

    pub fn position(&self, lambda: &Partition) -> Option<usize> {
        self.partitions.iter().position(|l| l == lambda)
    }
}

/// Transition data at weight `k` under the default bound.
pub fn monomial_to_powersum(k: usize) -> Result<PowerSumTransition> {
    PowerSumTransition::new(k, DEFAULT_DEGREE_BOUND)
}

/// `⟨p_μ, p_μ⟩ = z_μ ∏_i (1 − q^{μ_i})/(1 − t^{μ_i})`.
pub fn powersum_norm(mu: &Partition) -> QtScalar {
    let ctx = QtScalar::context();
    mu.parts().iter().fold(QtScalar::from_scalar(&Scalar::from_integer(mu.z())), |acc, &m| {
        let num = Poly::one(ctx) - Poly::param_power(ctx, Param::Q, m as i16);
        let r = QtScalar::new(num, one_minus_t_power(ctx, m as i16)).expect("nonzero");
        acc.mul(&r)
    })
}

struct WeightData {
    transition: PowerSumTransition,
    /// Common denominator `D` of the power-sum norms.
    denom: Poly<Scalar>,
    /// `gram[a][b] = D · ⟨m_a, m_b⟩`, polynomial in `q, t`.
    gram: Vec<Vec<Poly<Scalar>>>,
    /// Inverse Gram matrix up to a polynomial factor: `E · ⟨g_a, g_b⟩` for the dual basis
    /// `g_a = Σ_μ (p_μ in m)[a] p_μ / ⟨p_μ, p_μ⟩`.
    dual_gram: Vec<Vec<Poly<Scalar>>>,
}

fn weight_cache() -> &'static Mutex<HashMap<usize, Arc<WeightData>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<WeightData>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn poly_lcm(a: &Poly<Scalar>, b: &Poly<Scalar>) -> Poly<Scalar> {
    let g = gcd_tq(a, b);
    (a * b).exact_div(&g).expect("gcd divides")
}

fn weight_data(k: usize) -> Result<Arc<WeightData>> {
    if let Some(d) = weight_cache().lock().unwrap().get(&k) {
        return Ok(d.clone());
    }
    let ctx = QtScalar::context();
    let transition = monomial_to_powersum(k)?;
    let norms: Vec<(Poly<Scalar>, Poly<Scalar>)> = transition
        .partitions
        .iter()
        .map(|mu| {
            let z = Poly::constant(ctx, Scalar::from_integer(mu.z()));
            mu.parts().iter().fold((z, Poly::one(ctx)), |(num, den), &m| {
                (num * (Poly::one(ctx) - Poly::param_power(ctx, Param::Q, m as i16)), den * one_minus_t_power(ctx, m as i16))
            })
        })
        .collect();
    let denom = norms.iter().fold(Poly::one(ctx), |acc, (_, d)| poly_lcm(&acc, d));
    let scaled: Vec<Poly<Scalar>> =
        norms.iter().map(|(num, den)| num * &denom.exact_div(den).expect("lcm")).collect();
    let n = transition.partitions.len();
    let inv = &transition.from_monomial;
    let gram: Vec<Vec<Poly<Scalar>>> = (0..n)
        .into_par_iter()
        .map(|a| {
            (0..n)
                .map(|b| (0..n).fold(Poly::zero(ctx), |acc, mu| acc + scaled[mu].scale(&(&inv[a][mu] * &inv[b][mu]))))
                .collect()
        })
        .collect();
    let dual_denom = norms.iter().fold(Poly::one(ctx), |acc, (num, _)| poly_lcm(&acc, num));
    let dual_scaled: Vec<Poly<Scalar>> =
        norms.iter().map(|(num, den)| den * &dual_denom.exact_div(num).expect("lcm")).collect();
    let fwd = &transition.to_monomial;
    let dual_gram: Vec<Vec<Poly<Scalar>>> = (0..n)
        .into_par_iter()
        .map(|a| {
            (0..n)
                .map(|b| (0..n).fold(Poly::zero(ctx), |acc, mu| acc + dual_scaled[mu].scale(&(&fwd[mu][a] * &fwd[mu][b]))))
                .collect()
        })
        .collect();
    let d = Arc::new(WeightData { transition, denom, gram, dual_gram });
    weight_cache().lock().unwrap().insert(k, d.clone());
    Ok(d)
}

/// Numerators over a common denominator.
fn common_denominator<'a>(cs: impl Iterator<Item = &'a QtScalar>) -> (Vec<Poly<Scalar>>, Poly<Scalar>) {
    let cs: Vec<&QtScalar> = cs.collect();
    let d = cs.iter().fold(Poly::one(QtScalar::context()), |acc, c| poly_lcm(&acc, c.denominator()));
    let nums = cs.iter().map(|c| c.numerator() * &d.exact_div(c.denominator()).expect("lcm")).collect();
    (nums, d)
}

/// Macdonald's scalar product of two homogeneous symmetric functions of equal weight.
pub fn macdonald_scalar(f: &SymFnExpr, g: &SymFnExpr) -> Result<QtScalar> {
    if f.is_zero() || g.is_zero() {
        return Ok(QtScalar::zero());
    }
    let (wf, wg) = match (f.weight(), g.weight()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::OutOfRange("scalar product of inhomogeneous symmetric functions".into())),
    };
    if wf != wg {
        return Err(Error::WeightMismatch(wf, wg));
    }
    let d = weight_data(wf)?;
    let tr = &d.transition;
    let (fnum, fden) = common_denominator(f.coefficients().values());
    let (gnum, gden) = common_denominator(g.coefficients().values());
    let mut acc = Poly::zero(QtScalar::context());
    for (la, ca) in f.coefficients().keys().zip(&fnum) {
        let a = tr.position(la).expect("partition of the weight");
        for (lb, cb) in g.coefficients().keys().zip(&gnum) {
            let b = tr.position(lb).expect("partition of the weight");
            acc = acc + &(ca * cb) * &d.gram[a][b];
        }
    }
    QtScalar::new(acc, &(&fden * &gden) * &d.denom)
}

fn macdonald_cache() -> &'static Mutex<HashMap<usize, Arc<Vec<(Partition, SymFnExpr)>>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<(Partition, SymFnExpr)>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// All `P_λ` of weight `k`, lex ascending.
///
/// Gram–Schmidt along lex order: `P_λ − m_λ` lies in the span of the earlier `m_μ` and is
/// fixed by orthogonality to them. The linear system is solved by Cramer's rule, on the
/// Gram matrix of the earlier partitions or, when that block is larger, on the dual
/// Gram matrix of the later ones (`P_λ` is also the combination of dual vectors `g_κ`,
/// `κ ≥ λ`, with no `m_κ` above `λ`).
pub fn macdonald_family(k: usize) -> Result<Arc<Vec<(Partition, SymFnExpr)>>> {
    if let Some(v) = macdonald_cache().lock().unwrap().get(&k) {
        return Ok(v.clone());
    }
    let d = weight_data(k)?;
    let count = d.transition.partitions.len();
    let fam: Vec<(Partition, SymFnExpr)> = (0..count)
        .into_par_iter()
        .map(|i| {
            let p = if i <= count - 1 - i { lower_solve(&d, i)? } else { upper_solve(&d, i)? };
            Ok((d.transition.partitions[i].clone(), p))
        })
        .collect::<Result<_>>()?;
    let fam = Arc::new(fam);
    macdonald_cache().lock().unwrap().insert(k, fam.clone());
    Ok(fam)
}

fn lower_solve(d: &WeightData, i: usize) -> Result<SymFnExpr> {
    let parts = &d.transition.partitions;
    let mut p = SymFnExpr::monomial(parts[i].clone());
    if i == 0 {
        return Ok(p);
    }
    let a: Vec<Vec<Poly<Scalar>>> = (0..i).map(|nu| (0..i).map(|mu| d.gram[mu][nu].clone()).collect()).collect();
    let det = determinant(&a)?;
    for mu in 0..i {
        let mut am = a.clone();
        for (nu, row) in am.iter_mut().enumerate() {
            row[mu] = -d.gram[i][nu].clone();
        }
        p.add_term(parts[mu].clone(), QtScalar::new(determinant(&am)?, det.clone())?);
    }
    Ok(p)
}

fn upper_solve(d: &WeightData, i: usize) -> Result<SymFnExpr> {
    let parts = &d.transition.partitions;
    let n = parts.len();
    let upper: Vec<usize> = (i..n).collect();
    let h: Vec<Vec<Poly<Scalar>>> = upper.iter().map(|&r| upper.iter().map(|&c| d.dual_gram[r][c].clone()).collect()).collect();
    let det = determinant(&h)?;
    // cofactors solving h w = e_λ, up to the common factor 1/det
    let ctx = QtScalar::context();
    let cof: Vec<Poly<Scalar>> = (0..upper.len())
        .map(|kappa| {
            let mut hk = h.clone();
            for (r, row) in hk.iter_mut().enumerate() {
                row[kappa] = if r == 0 { Poly::one(ctx) } else { Poly::zero(ctx) };
            }
            determinant(&hk)
        })
        .collect::<Result<_>>()?;
    let mut p = SymFnExpr::monomial(parts[i].clone());
    for rho in 0..i {
        let num = upper.iter().zip(&cof).fold(Poly::zero(ctx), |acc, (&kappa, c)| acc + c * &d.dual_gram[kappa][rho]);
        p.add_term(parts[rho].clone(), QtScalar::new(num, det.clone())?);
    }
    Ok(p)
}

/// `P_λ(x; q, t)` in the monomial basis.
pub fn macdonald_p(lambda: &Partition) -> Result<SymFnExpr> {
    let fam = macdonald_family(lambda.weight())?;
    Ok(fam.iter().find(|(l, _)| l == lambda).expect("partition of the weight").1.clone())
}

/// `b_λ = 1 / ⟨P_λ, P_λ⟩`.
pub fn b_constant(lambda: &Partition) -> Result<QtScalar> {
    // ⟨P_λ, P_λ⟩ = ⟨P_λ, m_λ⟩ by orthogonality to the lower terms
    let p = macdonald_p(lambda)?;
    macdonald_scalar(&p, &SymFnExpr::monomial(lambda.clone()))?.inv().ok_or(Error::DivisionByZero)
}

/// Evaluates a symmetric function in `x_1..x_n`.
pub fn restrict_to_variables(f: &SymFnExpr, n: usize) -> Result<Poly<QtScalar>> {
    let ctx = VarContext::with_counts(n, 0)?;
    let letters: Vec<Var> = (1..=n).map(Var::X).collect();
    restrict_to_letters(f, ctx, &letters)
}

/// Evaluates a symmetric function in the given letters of `ctx`.
pub fn restrict_to_letters(f: &SymFnExpr, ctx: VarContext, letters: &[Var]) -> Result<Poly<QtScalar>> {
    let mut out = Poly::zero(ctx);
    for (l, c) in f.coefficients() {
        let m = absorb_parameters(&monomial_symmetric(ctx, l, letters)?);
        out = out + m.scale(c);
    }
    Ok(out)
}

/// `v_m(t) = ∏_{j=1}^m (1 − t^j)/(1 − t)` as a polynomial in `ctx`.
fn v_block(ctx: VarContext, m: usize) -> LaurentPoly {
    (1..=m).fold(Poly::one(ctx), |acc, j| {
        acc * one_minus_t_power(ctx, j as i16).exact_div(&one_minus_t_power(ctx, 1)).expect("exact")
    })
}

fn c_lambda_poly(ctx: VarContext, lambda: &Partition, n: usize) -> Result<LaurentPoly> {
    if lambda.length() > n {
        return Err(Error::OutOfRange(format!("{lambda} has more than {n} parts")));
    }
    let mut m = lambda.multiplicities();
    if m.is_empty() {
        m.push(0);
    }
    m[0] = n - lambda.length();
    Ok(m.iter().fold(Poly::one(ctx), |acc, &mi| acc * v_block(ctx, mi)))
}

/// `c_λ = ∏_{i≥0} ∏_{j=1}^{m_i} (1 − t^j)/(1 − t)`, zeros counted up to `n`.
pub fn c_lambda(lambda: &Partition, n: usize) -> Result<QtScalar> {
    Ok(QtScalar::from_poly(c_lambda_poly(QtScalar::context(), lambda, n)?))
}

fn dominant_monomial(ctx: VarContext, lambda: &Partition) -> LaurentPoly {
    Poly::monomial(ctx, partition_exponents(ctx, lambda), <Scalar as Coeff>::one())
}

/// Classical `P_λ(x_1..x_n; t) = v_λ(t)^{-1} Σ_w w(x^λ ∏_{i<j} (x_i − t x_j)/(x_i − x_j))`.
pub fn classical_hall_littlewood(lambda: &Partition, n: usize) -> Result<LaurentPoly> {
    let ctx = VarContext::with_counts(n, 0)?;
    let t = Poly::t(ctx);
    let mut kernel = dominant_monomial(ctx, lambda);
    for i in 1..=n {
        for j in i + 1..=n {
            kernel = kernel * (Poly::x(ctx, i) - &t * &Poly::x(ctx, j));
        }
    }
    let sum = permutations(n)
        .into_par_iter()
        .map(|(p, s)| {
            let images: Vec<usize> = p.iter().map(|&i| i + 1).collect();
            let h = kernel.permute_x(&images);
            if s < 0 {
                -h
            } else {
                h
            }
        })
        .reduce(|| Poly::zero(ctx), |a, b| a + b);
    sum.exact_div(&descending_vandermonde(ctx, n))?.exact_div(&c_lambda_poly(ctx, lambda, n)?)
}

/// `x^λ` with exponents increasing along `x_1..x_n`, the reading under which `∪_ω`
/// sends the monomial to a multiple of `P_λ`.
pub fn increasing_monomial(ctx: VarContext, lambda: &Partition, n: usize) -> LaurentPoly {
    let mut e = ZERO_EXPONENTS;
    for (i, &p) in lambda.increasing(n).parts().iter().enumerate() {
        e[ctx.index(Var::X(i + 1)).expect("in range")] = p as i16;
    }
    Poly::monomial(ctx, e, <Scalar as Coeff>::one())
}

/// `k` with `f = k · P`, if `f` is a `ℚ(q, t)`-multiple of `P`.
pub fn proportionality(f: &LaurentPoly, p: &LaurentPoly) -> Option<QtScalar> {
    let (fa, pa) = (absorb_parameters(f), absorb_parameters(p));
    let (e, lead) = pa.leading_term()?;
    let k = fa.coefficient(e).mul(&lead.inv()?);
    (pa.scale(&k) == fa).then_some(k)
}

/// `(P, k)` with `x^λ ∪_ω = k · P` and `P` the classical Hall–Littlewood polynomial,
/// `x^λ` read with increasing exponents.
pub fn hl_from_cup(lambda: &Partition, n: usize) -> Result<(LaurentPoly, QtScalar)> {
    let ctx = VarContext::with_counts(n, 0)?;
    if lambda.length() > n {
        return Err(Error::OutOfRange(format!("{lambda} has more than {n} parts")));
    }
    let image = cup_omega(&increasing_monomial(ctx, lambda, n), n)?;
    let p = classical_hall_littlewood(lambda, n)?;
    let k = proportionality(&image, &p)
        .ok_or_else(|| Error::NotProportional(format!("x^{lambda} under the summation is not a multiple of P_{lambda}")))?;
    Ok((p, k))
}

/// Same with the decreasing reading `x_1^{λ_1}⋯x_n^{λ_n}`; `None` when not proportional.
pub fn cup_decreasing_ratio(lambda: &Partition, n: usize) -> Result<Option<QtScalar>> {
    let ctx = VarContext::with_counts(n, 0)?;
    let image = cup_omega(&dominant_monomial(ctx, lambda), n)?;
    Ok(proportionality(&image, &classical_hall_littlewood(lambda, n)?))
}

/// `s_λ` in the monomial basis, from the Jacobi–Trudi determinant in `|λ|` letters.
pub fn schur_in_monomials(lambda: &Partition) -> Result<SymFnExpr> {
    let k = lambda.weight();
    let ctx = weight_context(k)?;
    let s = schur(&lambda.increasing(ctx.nx()), &Alphabet::x(ctx).as_diff())?;
    Ok(monomial_coefficients(&s, k))
}

/// Classical `P_λ(x; t)` in the monomial basis.
pub fn hall_littlewood_in_monomials(lambda: &Partition) -> Result<SymFnExpr> {
    let k = lambda.weight();
    let n = k.max(1);
    Ok(monomial_coefficients(&classical_hall_littlewood(lambda, n)?, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qt(num: LaurentPoly, den: LaurentPoly) -> QtScalar {
        QtScalar::new(num, den).unwrap()
    }

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn transition_examples() {
        let tr = monomial_to_powersum(3).unwrap();
        let i = tr.position(&p(&[1, 1, 1])).unwrap();
        let row: Vec<Scalar> = tr.partitions.iter().map(|l| tr.to_monomial[i][tr.position(l).unwrap()].clone()).collect();
        // order (1,1,1), (2,1), (3)
        assert_eq!(row, vec![crate::exact_algebra::scalar(6), crate::exact_algebra::scalar(3), crate::exact_algebra::scalar(1)]);
        assert!(matches!(monomial_to_powersum(6), Err(Error::BoundExceeded(_))));
    }

    #[test]
    fn scalar_examples() {
        let c = QtScalar::context();
        let m1 = SymFnExpr::monomial(p(&[1]));
        assert_eq!(macdonald_scalar(&m1, &m1).unwrap(), qt(Poly::one(c) - Poly::param(c, Param::Q), one_minus_t_power(c, 1)));
        assert!(matches!(macdonald_scalar(&m1, &SymFnExpr::monomial(p(&[2]))), Err(Error::WeightMismatch(1, 2))));
    }

    #[test]
    fn p2_coefficient() {
        let c = QtScalar::context();
        let (t, q) = (Poly::t(c), Poly::param(c, Param::Q));
        let p2 = macdonald_p(&p(&[2])).unwrap();
        let expected = qt((Poly::one(c) + &q) * (Poly::one(c) - &t), Poly::one(c) - &q * &t);
        assert_eq!(p2.coefficient(&p(&[1, 1])), expected);
        assert!(p2.coefficient(&p(&[2])).is_one());
    }

    #[test]
    fn lower_and_upper_solves_agree() {
        for k in 2..=4 {
            let d = weight_data(k).unwrap();
            for i in 1..d.transition.partitions.len() {
                assert_eq!(lower_solve(&d, i).unwrap(), upper_solve(&d, i).unwrap(), "weight {k}, index {i}");
            }
        }
    }

    #[test]
    fn b_of_one() {
        let c = QtScalar::context();
        assert_eq!(b_constant(&p(&[1])).unwrap(), qt(one_minus_t_power(c, 1), Poly::one(c) - Poly::param(c, Param::Q)));
        assert!(b_constant(&Partition::empty()).unwrap().is_one());
    }

    #[test]
    fn c_lambda_examples() {
        let c = QtScalar::context();
        let one_plus_t = QtScalar::from_poly(Poly::one(c) + Poly::t(c));
        assert_eq!(c_lambda(&Partition::empty(), 2).unwrap(), one_plus_t);
        assert!(c_lambda(&p(&[1]), 2).unwrap().is_one());
        assert_eq!(c_lambda(&p(&[2, 2, 1]), 3).unwrap(), one_plus_t);
    }

    #[test]
    fn hl_examples() {
        let c = QtScalar::context();
        let (p0, k0) = hl_from_cup(&Partition::empty(), 2).unwrap();
        assert!(p0.is_one());
        assert_eq!(k0, QtScalar::from_poly(Poly::one(c) + Poly::t(c)));
        let (p1, k1) = hl_from_cup(&p(&[1]), 2).unwrap();
        assert_eq!(p1, Poly::x(p1.ctx(), 1) + Poly::x(p1.ctx(), 2));
        assert!(k1.is_one());
        // the decreasing reading picks up t at (1) and breaks proportionality at (2)
        assert_eq!(cup_decreasing_ratio(&p(&[1]), 2).unwrap(), Some(QtScalar::t()));
        assert_eq!(cup_decreasing_ratio(&p(&[2]), 2).unwrap(), None);
    }

    #[test]
    fn restriction() {
        let f = SymFnExpr::monomial(p(&[1, 1]));
        assert!(restrict_to_variables(&f, 1).unwrap().is_zero());
        let g = restrict_to_variables(&SymFnExpr::monomial(p(&[2, 1])), 2).unwrap();
        assert_eq!(g.num_terms(), 2);
    }
}
