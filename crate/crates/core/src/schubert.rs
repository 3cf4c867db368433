//! Factorial Schur (Grassmannian Schubert) polynomials and interpolation at the points `y^<u>`.
//!
//! Indices follow the increasing convention: `v = (v_1 ≤ ⋯ ≤ v_n)`, and
//! `Y_v(x, z) = det((x_i | z)^{v_j + j − 1}) / ∏_{i<j}(x_j − x_i)` with
//! `(x | z)^k = (x − z_1)⋯(x − z_k)`.

use rayon::prelude::*;

use crate::alphabets::{schur, Alphabet};
use crate::combinatorics::{increasing_compositions, Composition, Partition};
use crate::error::{Error, Result};
use crate::exact_algebra::{det_cofactor, determinant, LaurentPoly, Poly, Var, VarContext};

fn check_increasing(v: &Composition) -> Result<()> {
    if !v.is_increasing() {
        return Err(Error::OutOfRange(format!("index {v} is not weakly increasing")));
    }
    Ok(())
}

/// `(x | z)^k`.
pub fn factorial_power(x: &LaurentPoly, z: &[LaurentPoly], k: usize) -> Result<LaurentPoly> {
    if k > z.len() {
        return Err(Error::OutOfRange(format!("factorial power {k} needs {k} shift letters, have {}", z.len())));
    }
    Ok(z[..k].iter().fold(Poly::one(x.ctx()), |acc, zm| acc * (x - zm)))
}

/// `Δ(x) = ∏_{i<j≤n} (x_j − x_i)`.
fn ascending_vandermonde(ctx: VarContext, n: usize) -> LaurentPoly {
    crate::alphabets::vandermonde(&Alphabet::new(ctx, (1..=n).map(|i| Poly::x(ctx, i)).collect()).unwrap())
}

/// `Y_v(x, z)` in `ctx` with explicit shift letters `z`.
pub fn factorial_schur_in(ctx: VarContext, v: &Composition, z: &[LaurentPoly]) -> Result<LaurentPoly> {
    check_increasing(v)?;
    let n = v.len();
    if n == 0 {
        return Ok(Poly::one(ctx));
    }
    if n > ctx.nx() {
        return Err(Error::InvalidContext(format!("index of length {n} needs {n} x-variables")));
    }
    let m: Vec<Vec<LaurentPoly>> = (0..n)
        .map(|i| {
            let xi = Poly::x(ctx, i + 1);
            (0..n).map(|j| factorial_power(&xi, z, v.parts()[j] + j)).collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    determinant(&m)?.exact_div(&ascending_vandermonde(ctx, n))
}

/// Context with `n` x-variables and enough y-variables for indices up to `max_part`.
pub fn schubert_context(n: usize, max_part: usize) -> Result<VarContext> {
    VarContext::with_counts(n, n + max_part)
}

pub fn y_letters(ctx: VarContext) -> Vec<LaurentPoly> {
    (1..=ctx.ny()).map(|j| Poly::y(ctx, j)).collect()
}

/// `Y_v(x, y)` with `y` sized to the index.
pub fn factorial_schur(v: &Composition, n: usize) -> Result<LaurentPoly> {
    if v.len() != n {
        return Err(Error::OutOfRange(format!("index {v} should have length {n}")));
    }
    let max = v.parts().last().copied().unwrap_or(0);
    let ctx = schubert_context(n, max)?;
    factorial_schur_in(ctx, v, &y_letters(ctx))
}

/// The point `y^<u> = {y_{1+u_1}, …, y_{n+u_n}}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlaggedPoint {
    pub u: Composition,
}

impl FlaggedPoint {
    pub fn new(u: Composition) -> Result<Self> {
        check_increasing(&u)?;
        Ok(Self { u })
    }

    /// 1-based indices `i + u_i` into the shift sequence.
    pub fn indices(&self) -> Vec<usize> {
        self.u.parts().iter().enumerate().map(|(i, p)| i + 1 + p).collect()
    }

    /// `x_i ↦ z_{i+u_i}`.
    pub fn assignment(&self, z: &[LaurentPoly]) -> Result<Vec<(Var, LaurentPoly)>> {
        self.indices()
            .into_iter()
            .enumerate()
            .map(|(i, k)| {
                z.get(k - 1)
                    .cloned()
                    .map(|zk| (Var::X(i + 1), zk))
                    .ok_or_else(|| Error::OutOfRange(format!("point needs z{k}")))
            })
            .collect()
    }

    pub fn evaluate(&self, f: &LaurentPoly, z: &[LaurentPoly]) -> Result<LaurentPoly> {
        f.substitute(&self.assignment(z)?)
    }
}

/// Diagram containment for increasing indices: `v ⊆ u` iff `v_i ≤ u_i` for all i.
pub fn diagram_contains(u: &Composition, v: &Composition) -> bool {
    u.len() == v.len() && u.parts().iter().zip(v.parts()).all(|(a, b)| b <= a)
}

/// Whether `Y_v(y^<u>, y) = 0`.
pub fn vanishing_check(v: &Composition, u: &Composition, n: usize) -> Result<bool> {
    if v.len() != n || u.len() != n {
        return Err(Error::OutOfRange("indices must have length n".into()));
    }
    let max = v.parts().last().copied().unwrap_or(0).max(u.parts().last().copied().unwrap_or(0));
    let ctx = schubert_context(n, max)?;
    let z = y_letters(ctx);
    let y = factorial_schur_in(ctx, v, &z)?;
    Ok(FlaggedPoint::new(u.clone())?.evaluate(&y, &z)?.is_zero())
}

/// Classical Schur polynomial `S_v(x_1..x_n)` for an increasing index.
pub fn schur_in_x(ctx: VarContext, v: &Composition) -> Result<LaurentPoly> {
    let n = v.len();
    let x = Alphabet::new(ctx, (1..=n).map(|i| Poly::x(ctx, i)).collect())?;
    schur(v, &x.as_diff())
}

/// `Y_v(x, {0, 0, …}) = S_v(x)` check for one index.
pub fn specializes_to_schur(v: &Composition) -> Result<bool> {
    let n = v.len();
    let max = v.parts().last().copied().unwrap_or(0);
    let ctx = schubert_context(n, max)?;
    let zeros = vec![Poly::zero(ctx); ctx.ny()];
    Ok(factorial_schur_in(ctx, v, &zeros)? == schur_in_x(ctx, v)?)
}

/// Shift-letter presets: `y_m ↦ m − 1` (factorial) or `y_m ↦ q^{m−1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShiftPreset {
    Factorial,
    QFactorial,
}

pub fn preset_letters(ctx: VarContext, preset: ShiftPreset, count: usize) -> Vec<LaurentPoly> {
    (0..count)
        .map(|m| match preset {
            ShiftPreset::Factorial => Poly::from_int(ctx, m as i64),
            ShiftPreset::QFactorial => Poly::var_power(ctx, Var::Q, m as i16),
        })
        .collect()
}

/// Outcome of the uniqueness system for one index.
#[derive(Clone, Debug, PartialEq)]
pub struct UniquenessOutcome {
    pub v: Composition,
    pub unknowns: usize,
    pub equations: usize,
    /// Determinant of the system is a nonzero polynomial in y.
    pub unique: bool,
    pub matches_factorial_schur: bool,
}

/// Solves for the Schur coefficients of the symmetric polynomial of degree `≤ |v|`
/// vanishing at every `y^<u>` with `|u| ≤ |v|`, `u ≠ v`, normalized at `y^<v>`.
pub fn uniqueness_system(v: &Composition) -> Result<UniquenessOutcome> {
    check_increasing(v)?;
    let n = v.len();
    let w = v.weight();
    let points = increasing_compositions(n, w);
    let basis = points.clone();
    let max = points.iter().map(|u| u.parts().last().copied().unwrap_or(0)).max().unwrap_or(0);
    let ctx = schubert_context(n, max)?;
    let z = y_letters(ctx);
    let target = factorial_schur_in(ctx, v, &z)?;
    let schurs: Vec<LaurentPoly> = basis.iter().map(|b| schur_in_x(ctx, b)).collect::<Result<_>>()?;
    let rows: Vec<(Vec<LaurentPoly>, LaurentPoly)> = points
        .par_iter()
        .map(|u| {
            let p = FlaggedPoint::new(u.clone())?;
            let row = schurs.iter().map(|s| p.evaluate(s, &z)).collect::<Result<Vec<_>>>()?;
            let rhs = if u == v { p.evaluate(&target, &z)? } else { Poly::zero(ctx) };
            Ok((row, rhs))
        })
        .collect::<Result<_>>()?;
    let a: Vec<Vec<LaurentPoly>> = rows.iter().map(|(r, _)| r.clone()).collect();
    let b: Vec<LaurentPoly> = rows.iter().map(|(_, r)| r.clone()).collect();
    let det = det_cofactor(&a);
    let unique = !det.is_zero();
    let mut matches = false;
    if unique {
        let mut f = Poly::zero(ctx);
        for k in 0..basis.len() {
            let mut ak = a.clone();
            for (i, row) in ak.iter_mut().enumerate() {
                row[k] = b[i].clone();
            }
            let ck = det_cofactor(&ak).exact_div(&det)?;
            f = f + ck * &schurs[k];
        }
        matches = f == target;
    }
    Ok(UniquenessOutcome { v: v.clone(), unknowns: basis.len(), equations: points.len(), unique, matches_factorial_schur: matches })
}

/// Newton interpolation in the factorial Schur basis `Y_v(x, z)`, `v ⊆ (m^n)`.
///
/// `value(u)` must return the target function at the point `z^<u>`; the system is
/// triangular because `Y_v(z^<u>, z) = 0` unless `v ⊆ u`, with nonzero diagonal for
/// distinct shift letters. Returns the coefficients and the reconstructed function.
pub struct Interpolation {
    pub coefficients: Vec<(Composition, LaurentPoly)>,
    pub reconstructed: LaurentPoly,
    /// Every diagonal entry `Y_u(z^<u>, z)` was nonzero.
    pub triangular_unique: bool,
}

pub fn interpolate(
    ctx: VarContext,
    n: usize,
    max_part: usize,
    z: &[LaurentPoly],
    value: impl Fn(&Composition) -> Result<LaurentPoly> + Sync,
) -> Result<Interpolation> {
    let all: Vec<Composition> = increasing_compositions(n, n * max_part)
        .into_iter()
        .filter(|u| u.parts().iter().all(|&p| p <= max_part))
        .collect();
    let basis: Vec<LaurentPoly> = all.par_iter().map(|v| factorial_schur_in(ctx, v, z)).collect::<Result<_>>()?;
    let targets: Vec<LaurentPoly> = all.par_iter().map(&value).collect::<Result<_>>()?;
    // table[u][v] = Y_v(z^<u>) for v ⊆ u
    let table: Vec<Vec<Option<LaurentPoly>>> = all
        .par_iter()
        .map(|u| {
            let p = FlaggedPoint::new(u.clone())?;
            all.iter()
                .zip(&basis)
                .map(|(v, y)| if diagram_contains(u, v) { p.evaluate(y, z).map(Some) } else { Ok(None) })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let mut coeffs: Vec<LaurentPoly> = Vec::with_capacity(all.len());
    let mut unique = true;
    for (iu, _) in all.iter().enumerate() {
        let mut rest = targets[iu].clone();
        for (iv, c) in coeffs.iter().enumerate() {
            if let Some(yv) = &table[iu][iv] {
                rest = rest - c * yv;
            }
        }
        let diag = table[iu][iu].clone().unwrap();
        if diag.is_zero() {
            unique = false;
            coeffs.push(Poly::zero(ctx));
            continue;
        }
        coeffs.push(rest.exact_div(&diag)?);
    }
    let reconstructed = coeffs.iter().zip(&basis).fold(Poly::zero(ctx), |acc, (c, y)| acc + c * y);
    Ok(Interpolation { coefficients: all.into_iter().zip(coeffs).collect(), reconstructed, triangular_unique: unique })
}

/// All (v, u) pairs with `|v|, |u| ≤ w` and length `n`, reporting agreement with containment.
pub fn vanishing_table(n: usize, w: usize) -> Result<Vec<(Composition, Composition, bool, bool)>> {
    let idx = increasing_compositions(n, w);
    let max = idx.iter().map(|u| u.parts().last().copied().unwrap_or(0)).max().unwrap_or(0);
    let ctx = schubert_context(n, max)?;
    let z = y_letters(ctx);
    let ys: Vec<LaurentPoly> = idx.par_iter().map(|v| factorial_schur_in(ctx, v, &z)).collect::<Result<_>>()?;
    let pairs: Vec<(usize, usize)> = (0..idx.len()).flat_map(|a| (0..idx.len()).map(move |b| (a, b))).collect();
    pairs
        .par_iter()
        .map(|&(iv, iu)| {
            let vanishes = FlaggedPoint::new(idx[iu].clone())?.evaluate(&ys[iv], &z)?.is_zero();
            let contains = diagram_contains(&idx[iu], &idx[iv]);
            Ok((idx[iv].clone(), idx[iu].clone(), vanishes, contains))
        })
        .collect()
}

/// Decreasing partition of an increasing index.
pub fn as_partition(v: &Composition) -> Partition {
    Partition::from_composition(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        assert!(factorial_schur(&Composition::zeros(2), 2).unwrap().is_one());
        let y = factorial_schur(&Composition::new(vec![1]), 1).unwrap();
        let ctx = y.ctx();
        assert_eq!(y, LaurentPoly::x(ctx, 1) - LaurentPoly::y(ctx, 1));
    }

    #[test]
    fn vanishing_examples() {
        let v = Composition::new(vec![0, 1]);
        assert!(!vanishing_check(&v, &v, 2).unwrap());
        assert!(vanishing_check(&v, &Composition::new(vec![0, 0]), 2).unwrap());
        assert!(!vanishing_check(&v, &Composition::new(vec![1, 1]), 2).unwrap());
        assert!(vanishing_check(&Composition::new(vec![1, 1]), &Composition::new(vec![0, 2]), 2).unwrap());
    }

    #[test]
    fn y_zero_gives_schur() {
        for v in increasing_compositions(2, 3) {
            assert!(specializes_to_schur(&v).unwrap(), "{v}");
        }
    }

    #[test]
    fn presets_have_requested_length() {
        let ctx = VarContext::new(2).unwrap();
        let f = preset_letters(ctx, ShiftPreset::Factorial, 3);
        assert_eq!(f[2], LaurentPoly::from_int(ctx, 2));
        let q = preset_letters(ctx, ShiftPreset::QFactorial, 3);
        assert_eq!(q[0], LaurentPoly::one(ctx));
        let v = Composition::new(vec![0, 1]);
        let y = factorial_schur_in(ctx, &v, &f).unwrap();
        // Y_{01}(x, {0,1,2,...}) = x1 + x2 − (0 + 1)
        assert_eq!(y, LaurentPoly::x(ctx, 1) + LaurentPoly::x(ctx, 2) - LaurentPoly::one(ctx));
    }
}
