//! Gaudin functions `F_n^r(x, y)`: the cleared determinant, the multi-Schur
//! determinant, specializations `x ⊂ {t^k y_i}` and the odd-level Schur expansion.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::alphabets::{multi_schur_cached, schur, vandermonde, Alphabet, AlphabetDiff, SeriesCache};
use crate::combinatorics::{Composition, Partition};
use crate::error::{Error, Result};
use crate::exact_algebra::{determinant, Coeff, LaurentPoly, Param, Poly, Scalar, Var, VarContext};
use crate::report::VerificationReport;
use crate::schubert::interpolate;

/// Level `r` and alphabet size `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GaudinParams {
    pub n: usize,
    pub r: usize,
}

impl GaudinParams {
    pub fn new(n: usize, r: usize) -> Result<Self> {
        if n == 0 || r == 0 {
            return Err(Error::OutOfRange(format!("n = {n}, r = {r}: both must be at least 1")));
        }
        Ok(Self { n, r })
    }

    /// `□ = (n−1)^r`.
    pub fn square(&self) -> Composition {
        Composition::repeated(self.n - 1, self.r)
    }

    /// `⊞ = ((n−1)r)^n`.
    pub fn box_partition(&self) -> Partition {
        Partition::new(vec![(self.n - 1) * self.r; self.n])
    }

    pub fn ctx(&self) -> Result<VarContext> {
        VarContext::new(self.n)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeBound {
    pub max_n: usize,
    pub max_r: usize,
}

impl Default for SizeBound {
    fn default() -> Self {
        Self { max_n: 3, max_r: 3 }
    }
}

impl SizeBound {
    pub fn unbounded() -> Self {
        Self { max_n: 7, max_r: usize::MAX }
    }

    pub fn check(&self, p: &GaudinParams) -> Result<()> {
        if p.n > self.max_n || p.r > self.max_r {
            return Err(Error::BoundExceeded(format!(
                "(n, r) = ({}, {}) exceeds the bound n ≤ {}, r ≤ {}",
                p.n, p.r, self.max_n, self.max_r
            )));
        }
        Ok(())
    }
}

/// `(−1)^{n(n−1)/2}`: sign relating the same-orientation Vandermonde product to the Cauchy determinant.
pub fn cauchy_sign(n: usize) -> Scalar {
    if (n * (n.saturating_sub(1)) / 2) % 2 == 0 {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

fn entry_factor(ctx: VarContext, i: usize, j: usize, r: usize) -> LaurentPoly {
    let x = Poly::x(ctx, i);
    let y = Poly::y(ctx, j);
    (0..=r).fold(Poly::one(ctx), |acc, k| acc * (&x - &(Poly::param_power(ctx, Param::T, k as i16) * &y)))
}

/// `det(E)` with `E_ij = ∏_{j'≠j} A_ij'`, `A_ij = ∏_k (x_i − t^k y_j)`.
///
/// Multiplying row `i` of `(1/A_ij)` by `∏_j A_ij` gives `E`, so
/// `det(E) = det(1/A) · R(x, y(1+⋯+t^r))` with no further power of `R` to remove.
pub fn cleared_determinant(p: &GaudinParams) -> Result<LaurentPoly> {
    let ctx = p.ctx()?;
    let n = p.n;
    let a: Vec<Vec<LaurentPoly>> = (1..=n).map(|i| (1..=n).map(|j| entry_factor(ctx, i, j, p.r)).collect()).collect();
    let e: Vec<Vec<LaurentPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).filter(|&jj| jj != j).fold(Poly::one(ctx), |acc, jj| acc * &a[i][jj]))
                .collect()
        })
        .collect();
    determinant(&e)
}

/// `Δ(x)Δ(y)` with both Vandermondes `∏_{i<j}(a_j − a_i)`.
pub fn vandermonde_product(ctx: VarContext) -> LaurentPoly {
    vandermonde(&Alphabet::x(ctx)) * vandermonde(&Alphabet::y(ctx))
}

/// The cleared determinant divided by `Δ(x)Δ(y)` exactly as written, both Vandermondes
/// oriented `∏_{i<j}(a_j − a_i)`. Differs from [`gaudin_raw`] by [`cauchy_sign`].
pub fn gaudin_raw_same_orientation(p: &GaudinParams, bound: &SizeBound) -> Result<LaurentPoly> {
    bound.check(p)?;
    let ctx = p.ctx()?;
    cleared_determinant(p)?.exact_div(&vandermonde_product(ctx))
}

/// `F_n^r` from the level-r determinant: `det(1/A) · R / (Δ(x)Δ(y))`, with the
/// Vandermonde orientation fixed by the Cauchy determinant
/// `det(1/(x_i − y_j)) = ∏_{i<j}(x_j − x_i)(y_i − y_j) / R(x, y)`.
pub fn gaudin_raw(p: &GaudinParams, bound: &SizeBound) -> Result<LaurentPoly> {
    Ok(gaudin_raw_same_orientation(p, bound)?.scale(&cauchy_sign(p.n)))
}

/// Column difference `y_i(1+⋯+t^r) − x`.
pub fn column_difference(ctx: VarContext, i: usize, r: usize, x: &Alphabet) -> AlphabetDiff {
    Alphabet::single(Poly::y(ctx, i)).expect("monomial").geometric(r).minus(x)
}

/// `F_n^r = Δ(y)^{-1} det_{i, j} S_{j, □}(y_i(1+⋯+t^r) − x)`, `j = 0..n−1`.
pub fn gaudin_multischur(p: &GaudinParams, bound: &SizeBound) -> Result<LaurentPoly> {
    bound.check(p)?;
    let ctx = p.ctx()?;
    let x = Alphabet::x(ctx);
    let cache = SeriesCache::new();
    let sq = p.square();
    let rows: Vec<Vec<LaurentPoly>> = (1..=p.n)
        .into_par_iter()
        .map(|i| {
            let d = column_difference(ctx, i, p.r, &x);
            (0..p.n)
                .map(|j| {
                    let v = sq.prepend(j);
                    multi_schur_cached(&v, &vec![d.clone(); v.len()], &cache)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    determinant(&rows)?.exact_div(&vandermonde(&Alphabet::y(ctx)))
}

/// Exponents `ε_i ∈ [0, r]` encoding `x_i = y_i t^{ε_i}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SpecializationChoice {
    pub epsilons: Vec<usize>,
}

impl SpecializationChoice {
    pub fn new(epsilons: Vec<usize>, p: &GaudinParams) -> Result<Self> {
        if epsilons.len() != p.n || epsilons.iter().any(|&e| e > p.r) {
            return Err(Error::OutOfRange(format!("epsilons {epsilons:?} invalid for (n, r) = ({}, {})", p.n, p.r)));
        }
        Ok(Self { epsilons })
    }

    pub fn point(&self) -> SpecializationPoint {
        SpecializationPoint { letters: self.epsilons.iter().enumerate().map(|(i, &e)| (i + 1, e)).collect() }
    }
}

/// An ordered choice `x_i = t^{k_i} y_{j_i}`, stored as `(j_i, k_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SpecializationPoint {
    pub letters: Vec<(usize, usize)>,
}

impl SpecializationPoint {
    pub fn has_repeated_y(&self) -> bool {
        let mut js: Vec<usize> = self.letters.iter().map(|l| l.0).collect();
        js.sort_unstable();
        js.windows(2).any(|w| w[0] == w[1])
    }

    /// Reordered by y-index; a choice when every y appears once.
    pub fn canonical(&self) -> Self {
        let mut letters = self.letters.clone();
        letters.sort();
        Self { letters }
    }

    pub fn as_choice(&self) -> Option<SpecializationChoice> {
        let c = self.canonical();
        if c.letters.iter().enumerate().all(|(i, l)| l.0 == i + 1) {
            Some(SpecializationChoice { epsilons: c.letters.iter().map(|l| l.1).collect() })
        } else {
            None
        }
    }

    pub fn images(&self, ctx: VarContext) -> Vec<LaurentPoly> {
        self.letters
            .iter()
            .map(|&(j, k)| Poly::param_power(ctx, Param::T, k as i16) * Poly::y(ctx, j))
            .collect()
    }

    pub fn assignment(&self, ctx: VarContext) -> Vec<(Var, LaurentPoly)> {
        self.images(ctx).into_iter().enumerate().map(|(i, p)| (Var::X(i + 1), p)).collect()
    }

    pub fn label(&self) -> String {
        let parts: Vec<String> = self
            .letters
            .iter()
            .enumerate()
            .map(|(i, &(j, k))| match k {
                0 => format!("x{}=y{j}", i + 1),
                1 => format!("x{}=t*y{j}", i + 1),
                _ => format!("x{}=t^{k}*y{j}", i + 1),
            })
            .collect();
        parts.join(",")
    }
}

/// `G_n^r = (Δ(x)/Δ(y)) ∏_i S_□(y_i(1+⋯+t^r) − x)` at the point, computed with the
/// specialized letters in place of x (no symbolic x is ever formed).
pub fn g_at_point(p: &GaudinParams, point: &SpecializationPoint) -> Result<LaurentPoly> {
    let ctx = p.ctx()?;
    if point.letters.len() != p.n {
        return Err(Error::OutOfRange(format!("point has {} letters, expected {}", point.letters.len(), p.n)));
    }
    let xs = Alphabet::new(ctx, point.images(ctx))?;
    let sq = p.square();
    let mut prod = vandermonde(&xs);
    if prod.is_zero() {
        return Ok(prod);
    }
    for i in 1..=p.n {
        let d = column_difference(ctx, i, p.r, &xs);
        prod = prod * schur(&sq, &d)?;
        if prod.is_zero() {
            return Ok(prod);
        }
    }
    prod.exact_div(&vandermonde(&Alphabet::y(ctx)))
}

pub fn gaudin_g_specialization(p: &GaudinParams, c: &SpecializationChoice) -> Result<LaurentPoly> {
    g_at_point(p, &c.point())
}

/// `F` evaluated at the point by substitution.
pub fn f_at_point(f: &LaurentPoly, point: &SpecializationPoint) -> Result<LaurentPoly> {
    f.substitute(&point.assignment(f.ctx()))
}

/// Every `n`-subset of `{t^k y_i}`, ordered by y-index (lexicographically sorted).
pub fn specialization_points(p: &GaudinParams) -> Vec<SpecializationPoint> {
    let letters: Vec<(usize, usize)> = (1..=p.n).flat_map(|j| (0..=p.r).map(move |k| (j, k))).collect();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    subsets(&letters, p.n, 0, &mut cur, &mut out);
    out.sort();
    out
}

fn subsets(
    letters: &[(usize, usize)],
    k: usize,
    start: usize,
    cur: &mut Vec<(usize, usize)>,
    out: &mut Vec<SpecializationPoint>,
) {
    if cur.len() == k {
        out.push(SpecializationPoint { letters: cur.clone() });
        return;
    }
    for i in start..letters.len() {
        cur.push(letters[i]);
        subsets(letters, k, i + 1, cur, out);
        cur.pop();
    }
}

/// Compares `F` and `G` at every set-specialization. Points with distinct y-indices
/// must agree; points with a repeated y must give `0` for both.
pub fn verify_specializations(p: &GaudinParams, bound: &SizeBound) -> Result<VerificationReport> {
    let f = gaudin_multischur(p, bound)?;
    let points = specialization_points(p);
    let results: Vec<(SpecializationPoint, Result<(LaurentPoly, LaurentPoly)>)> = points
        .par_iter()
        .map(|pt| (pt.clone(), f_at_point(&f, pt).and_then(|fv| Ok((fv, g_at_point(p, pt)?)))))
        .collect();
    let mut report =
        VerificationReport::new("specializations").param("n", p.n).param("r", p.r).param("points", points.len());
    for (pt, res) in results {
        match res {
            Ok((fv, gv)) => {
                let ok = fv == gv && (!pt.has_repeated_y() || fv.is_zero());
                let note = if ok {
                    if pt.has_repeated_y() {
                        Some("repeated y: F = G = 0".to_string())
                    } else {
                        None
                    }
                } else {
                    Some(format!("F = {fv}, G = {gv}"))
                };
                report.check(pt.label(), ok, note);
            }
            Err(e) => report.fail(pt.label(), e.to_string()),
        }
    }
    Ok(report.finish())
}

/// The shift sequence `z = (y_1..y_n, t y_1..t y_n, …, t^r y_1..t^r y_n)`.
pub fn interpolation_letters(p: &GaudinParams, ctx: VarContext) -> Vec<(usize, usize, LaurentPoly)> {
    (0..=p.r)
        .flat_map(|k| (1..=p.n).map(move |j| (j, k)))
        .map(|(j, k)| (j, k, Poly::param_power(ctx, Param::T, k as i16) * Poly::y(ctx, j)))
        .collect()
}

/// Reconstructs `F` from the values of `G` at the points `z^<u>`, `u ⊆ ⊞`, by Newton
/// interpolation in the factorial Schur basis; the system is triangular with nonzero
/// diagonal, so the solution is unique. Returns (reconstruction, unique).
pub fn reconstruct_from_g(p: &GaudinParams, bound: &SizeBound) -> Result<(LaurentPoly, bool)> {
    bound.check(p)?;
    let ctx = p.ctx()?;
    let z = interpolation_letters(p, ctx);
    let zpolys: Vec<LaurentPoly> = z.iter().map(|(_, _, l)| l.clone()).collect();
    let m = (p.n - 1) * p.r;
    let interp = interpolate(ctx, p.n, m, &zpolys, |u| {
        let letters = u.parts().iter().enumerate().map(|(i, ui)| (z[i + ui].0, z[i + ui].1)).collect();
        let pt = SpecializationPoint { letters };
        if pt.has_repeated_y() {
            g_at_point(p, &pt)
        } else {
            g_at_point(p, &pt.canonical())
        }
    })?;
    Ok((interp.reconstructed, interp.triangular_unique))
}

/// Schur expansion in the `2n` letters `x + y`, keyed by increasing index.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SchurReport {
    pub n: usize,
    pub r: usize,
    /// `(increasing index, coefficient)` pairs.
    pub terms: Vec<(Vec<usize>, String)>,
    pub symmetric: bool,
    pub single: bool,
    pub index: Option<Vec<usize>>,
    /// `β` such that the index is `[0,0,β,β,…,(n−1)β,(n−1)β]`, if it has that shape.
    pub beta: Option<usize>,
    pub degree: usize,
}

/// `det((x_i − y_j)/(x_i^{r+2} − y_j^{r+2})) ∏(x_i^{r+2} − y_j^{r+2}) / (Δ(x)Δ(y)R(x,y))`.
///
/// Cleared row-wise as `det(∏_{j'≠j} h_{r+1}(x_i, y_{j'}))`, using
/// `x^p − y^p = (x − y) h_{p−1}(x, y)`.
pub fn odd_symmetry_polynomial(n: usize, r: usize, bound: &SizeBound) -> Result<LaurentPoly> {
    if r % 2 == 0 {
        return Err(Error::OutOfRange(format!("level {r} is even")));
    }
    let p = GaudinParams::new(n, r)?;
    bound.check(&p)?;
    let ctx = p.ctx()?;
    let h = |i: usize, j: usize| -> LaurentPoly {
        let x = Poly::x(ctx, i);
        let y = Poly::y(ctx, j);
        (0..=r + 1).fold(Poly::zero(ctx), |acc, a| acc + x.pow(a as u32) * y.pow((r + 1 - a) as u32))
    };
    let hm: Vec<Vec<LaurentPoly>> = (1..=n).map(|i| (1..=n).map(|j| h(i, j)).collect()).collect();
    let e: Vec<Vec<LaurentPoly>> = (0..n)
        .map(|i| (0..n).map(|j| (0..n).filter(|&jj| jj != j).fold(Poly::one(ctx), |acc, jj| acc * &hm[i][jj])).collect())
        .collect();
    determinant(&e)?.exact_div(&vandermonde_product(ctx))
}

/// Expands a polynomial symmetric in the `2n` letters `x + y` in Schur functions, by
/// reading strictly decreasing exponents of `f · ∏_{a<b}(ℓ_a − ℓ_b)`.
pub fn schur_expand_xy(f: &LaurentPoly) -> BTreeMap<Vec<usize>, Scalar> {
    let ctx = f.ctx();
    let m = ctx.nx() + ctx.ny();
    let letters: Vec<LaurentPoly> = (1..=ctx.nx()).map(|i| Poly::x(ctx, i)).chain((1..=ctx.ny()).map(|j| Poly::y(ctx, j))).collect();
    let mut v = Poly::one(ctx);
    for a in 0..m {
        for b in a + 1..m {
            v = v * (&letters[a] - &letters[b]);
        }
    }
    let g = f * &v;
    let mut out = BTreeMap::new();
    for (e, c) in g.terms() {
        let ex: Vec<i16> = e[..m].to_vec();
        if ex.windows(2).all(|w| w[0] > w[1]) {
            let lambda: Vec<usize> = (0..m).map(|i| (ex[i] as i64 - (m - 1 - i) as i64) as usize).collect();
            let mut inc = lambda.clone();
            inc.reverse();
            out.insert(inc, c.clone());
        }
    }
    out
}

/// Whether `f` is invariant under every permutation of `x + y` (given separate symmetry, one
/// cross transposition suffices; the separate symmetries are checked too).
pub fn is_symmetric_in_xy(f: &LaurentPoly) -> bool {
    let ctx = f.ctx();
    let sep_x = (1..ctx.nx()).all(|i| f.swap_vars(Var::X(i), Var::X(i + 1)) == *f);
    let sep_y = (1..ctx.ny()).all(|j| f.swap_vars(Var::Y(j), Var::Y(j + 1)) == *f);
    sep_x && sep_y && f.swap_vars(Var::X(ctx.nx()), Var::Y(1)) == *f
}

fn beta_of(index: &[usize], n: usize) -> Option<usize> {
    if index.len() != 2 * n {
        return None;
    }
    let beta = if n >= 2 { index[2] } else { 0 };
    let shaped = (0..n).all(|k| index[2 * k] == k * beta && index[2 * k + 1] == k * beta);
    if shaped {
        Some(beta)
    } else {
        None
    }
}

pub fn odd_symmetry_schur(n: usize, r: usize, bound: &SizeBound) -> Result<SchurReport> {
    let f = odd_symmetry_polynomial(n, r, bound)?;
    let symmetric = is_symmetric_in_xy(&f);
    let expansion = schur_expand_xy(&f);
    let single = expansion.len() == 1 && expansion.values().next().map(|c| c.is_one()).unwrap_or(false);
    let index = if single { expansion.keys().next().cloned() } else { None };
    let beta = index.as_ref().and_then(|i| beta_of(i, n));
    let degree = f.terms().map(|(e, _)| e.iter().map(|&k| k as i64).sum::<i64>()).max().unwrap_or(0) as usize;
    Ok(SchurReport {
        n,
        r,
        terms: expansion.iter().map(|(k, c)| (k.clone(), c.to_string())).collect(),
        symmetric,
        single,
        index,
        beta,
        degree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b() -> SizeBound {
        SizeBound::default()
    }

    #[test]
    fn trivial_levels() {
        for r in 1..=2 {
            let p = GaudinParams::new(1, r).unwrap();
            assert!(gaudin_raw(&p, &b()).unwrap().is_one());
            assert!(gaudin_multischur(&p, &b()).unwrap().is_one());
        }
    }

    #[test]
    fn level_one_two_variables() {
        let p = GaudinParams::new(2, 1).unwrap();
        let f = gaudin_multischur(&p, &b()).unwrap();
        let ctx = f.ctx();
        let (x1, x2, y1, y2) = (Poly::x(ctx, 1), Poly::x(ctx, 2), Poly::y(ctx, 1), Poly::y(ctx, 2));
        let t = Poly::t(ctx);
        // negative of the same-orientation cleared determinant quotient
        let same = -(&t * &t * &y1 * &y2) - &t * &x1 * &x2 + &t * &(&x1 + &x2) * &(&y1 + &y2) - &t * &y1 * &y2 - &x1 * &x2;
        assert_eq!(gaudin_raw_same_orientation(&p, &b()).unwrap(), same);
        assert_eq!(f, -same);
    }

    #[test]
    fn bound_enforced() {
        let p = GaudinParams::new(4, 1).unwrap();
        assert!(matches!(gaudin_multischur(&p, &b()), Err(Error::BoundExceeded(_))));
    }

    #[test]
    fn repeated_y_gives_zero() {
        let p = GaudinParams::new(2, 1).unwrap();
        let pt = SpecializationPoint { letters: vec![(1, 0), (1, 1)] };
        assert!(g_at_point(&p, &pt).unwrap().is_zero());
    }

    #[test]
    fn odd_symmetry_smallest() {
        let s = odd_symmetry_schur(1, 1, &b()).unwrap();
        assert!(s.single);
        assert_eq!(s.index, Some(vec![0, 0]));
    }
}
