//! Named verification suites driving the module verifiers, as used by the CLI.

use std::fmt;
use std::str::FromStr;
use std::sync::mpsc;
use std::thread;
use std::time::Duration;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::alphabets::{factorise_index, factorise_rhs, schur, Alphabet};
use crate::combinatorics::{increasing_compositions, partitions_up_to, Composition};
use crate::euler_poincare::{
    hl_test_scalar, verify_cauchy_qt, verify_fgmacdo_reduction, verify_hl_generating, verify_theorem_theta,
    warnaar_normalization, verify_warnaar,
};
use crate::exact_algebra::{t_factorial, Coeff, LaurentPoly, Param, Poly, QtScalar, Scalar, Var, VarContext, ZERO_EXPONENTS};
use crate::gaudin::{
    f_at_point, g_at_point, gaudin_multischur, gaudin_raw, odd_symmetry_schur, reconstruct_from_g,
    verify_specializations, GaudinParams, SizeBound, SpecializationPoint,
};
use crate::operators::{hecke_cup, hecke_t, partial};
use crate::orthogonal_bases::hl_from_cup;
use crate::report::VerificationReport;
use crate::schubert::{specializes_to_schur, uniqueness_system, vanishing_table};
use crate::{Error, Result};

/// Random instances per seeded suite.
pub const DEFAULT_SAMPLES: usize = 60;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Suite {
    Theorem1,
    Theorem2,
    Theta,
    Hecke,
    Factorise,
    HlGen,
    Fgmacdo,
    Warnaar,
    CauchyQt,
    Schubert,
    OddSymmetry,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Theorem1,
        Suite::Theorem2,
        Suite::Theta,
        Suite::Hecke,
        Suite::Factorise,
        Suite::HlGen,
        Suite::Fgmacdo,
        Suite::Warnaar,
        Suite::CauchyQt,
        Suite::Schubert,
        Suite::OddSymmetry,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorem1 => "theorem1",
            Suite::Theorem2 => "theorem2",
            Suite::Theta => "theta",
            Suite::Hecke => "hecke",
            Suite::Factorise => "factorise",
            Suite::HlGen => "hl-gen",
            Suite::Fgmacdo => "fgmacdo",
            Suite::Warnaar => "warnaar",
            Suite::CauchyQt => "cauchy-qt",
            Suite::Schubert => "schubert",
            Suite::OddSymmetry => "odd-symmetry",
        }
    }

    /// What the suite checks, in one line.
    pub fn anchor(self) -> &'static str {
        match self {
            Suite::Theorem1 => "Gaudin determinant quotient equals the multi-Schur function S_{0,box}(x-y, x-ty, ...)",
            Suite::Theorem2 => "F agrees with G at every set-specialization x in {t^k y_j}; reconstruction from G is unique",
            Suite::Theta => "x1^e x2...xn d1...d(n-1) against the theta-twisted symmetrizer on F_n^1",
            Suite::Hecke => "divided differences and Hecke operators: nilpotence, braid, commutation, quadratic relation",
            Suite::Factorise => "S_{j,beta^alpha}(A-B) = (-1)^j e_j(B) R(A,B), zero when A and B share a letter",
            Suite::HlGen => "Hall-Littlewood generating function through tau_0 shifts; x^lambda symmetrized is proportional to P_lambda",
            Suite::Fgmacdo => "Macdonald kernel with tau_q shifts reduces to the Hall-Littlewood one times a q-scaled kernel",
            Suite::Warnaar => "t-deformed Macdonald Cauchy sum with eigenvalue prod(1 - q^lambda_i t^(n-i+1))",
            Suite::CauchyQt => "sum b_lambda P_lambda(x) P_lambda(y) against sigma_1(xy(1-t)/(1-q))",
            Suite::Schubert => "factorial Schur vanishing at y^<u> versus diagram containment; Y_v(x,0) = S_v(x); uniqueness",
            Suite::OddSymmetry => "odd-level determinant is a single Schur function of x+y",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::OutOfRange(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
    Latex,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteConfig {
    pub suite: Suite,
    /// `None` runs the suite's default parameter set.
    pub n: Option<usize>,
    pub r: Option<usize>,
    pub trunc: Option<usize>,
    pub seed: u64,
    pub samples: usize,
    pub timeout_secs: Option<u64>,
    pub bound: SizeBound,
    pub format: Format,
}

impl SuiteConfig {
    pub fn new(suite: Suite) -> Self {
        Self {
            suite,
            n: None,
            r: None,
            trunc: None,
            seed: 0,
            samples: DEFAULT_SAMPLES,
            timeout_secs: None,
            bound: SizeBound::default(),
            format: Format::Text,
        }
    }

    pub fn with_n(mut self, n: usize) -> Self {
        self.n = Some(n);
        self
    }

    pub fn with_r(mut self, r: usize) -> Self {
        self.r = Some(r);
        self
    }

    pub fn with_trunc(mut self, d: usize) -> Self {
        self.trunc = Some(d);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    fn pairs(&self, defaults: &[(usize, usize)]) -> Vec<(usize, usize)> {
        match (self.n, self.r) {
            (None, None) => defaults.to_vec(),
            (n, r) => vec![(n.unwrap_or(2), r.unwrap_or(1))],
        }
    }

    fn report(&self) -> VerificationReport {
        let mut r = VerificationReport::new(self.suite.name());
        for (k, v) in [("n", self.n), ("r", self.r), ("trunc", self.trunc)] {
            if let Some(v) = v {
                r = r.param(k, v);
            }
        }
        if matches!(self.suite, Suite::Hecke | Suite::Factorise) {
            r = r.param("seed", self.seed).param("samples", self.samples);
        }
        r
    }
}

/// Runs the suite, failing the report if it does not finish within the timeout.
/// Usage errors (bad parameters, bound exceeded) come back as `Err`.
pub fn run_suite(config: &SuiteConfig) -> Result<VerificationReport> {
    let Some(secs) = config.timeout_secs else {
        return run_suite_inline(config);
    };
    let (tx, rx) = mpsc::channel();
    let c = config.clone();
    thread::spawn(move || {
        let _ = tx.send(run_suite_inline(&c));
    });
    match rx.recv_timeout(Duration::from_secs(secs)) {
        Ok(res) => res,
        Err(_) => {
            let mut r = config.report();
            r.fail("timeout", format!("no result after {secs} s"));
            Ok(r.finish())
        }
    }
}

pub fn run_suite_inline(config: &SuiteConfig) -> Result<VerificationReport> {
    let mut r = config.report();
    match config.suite {
        Suite::Theorem1 => theorem1(config, &mut r)?,
        Suite::Theorem2 => theorem2(config, &mut r)?,
        Suite::Theta => theta(config, &mut r)?,
        Suite::Hecke => hecke(config, &mut r)?,
        Suite::Factorise => factorise(config, &mut r)?,
        Suite::HlGen => hl_gen(config, &mut r)?,
        Suite::Fgmacdo => fgmacdo(config, &mut r)?,
        Suite::Warnaar => warnaar(config, &mut r)?,
        Suite::CauchyQt => cauchy_qt(config, &mut r)?,
        Suite::Schubert => schubert(config, &mut r)?,
        Suite::OddSymmetry => odd_symmetry(config, &mut r)?,
    }
    Ok(r.finish())
}

/// Rendering in the requested format; JSON is compact and newline-terminated.
pub fn render(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Text => report.to_text(),
        Format::Json => format!("{}\n", report.to_json()),
        Format::Latex => report.to_latex(),
    }
}

/// One entry per suite: `name  anchor`.
pub fn listing() -> String {
    Suite::ALL.iter().map(|s| format!("{:<13} {}\n", s.name(), s.anchor())).collect()
}

/// Reads `GAUDINLAB_THREADS` and sizes the global rayon pool. Ignores unparsable values.
pub fn configure_threads() {
    if let Some(k) = std::env::var("GAUDINLAB_THREADS").ok().and_then(|v| v.trim().parse::<usize>().ok()) {
        if k > 0 {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
        }
    }
}

fn theorem1(c: &SuiteConfig, rep: &mut VerificationReport) -> Result<()> {
    for (n, r) in c.pairs(&[(1, 1), (1, 2), (2, 1), (2, 2), (3, 1)]) {
        let p = GaudinParams::new(n, r)?;
        c.bound.check(&p)?;
        let raw = gaudin_raw(&p, &c.bound)?;
        let ms = gaudin_multischur(&p, &c.bound)?;
        let note = if raw == ms { Some(format!("{} terms", ms.num_terms())) } else { Some(format!("difference {}", &raw - &ms)) };
        rep.check(format!("n={n} r={r} raw = multi-Schur"), raw == ms, note);
    }
    Ok(())
}

/// `t^3 (y2 − y1)(y1 − t y2)^2 (t^2 y2 − y1)`.
pub fn worked_value(ctx: VarContext) -> LaurentPoly {
    let t = Poly::t(ctx);
    let (y1, y2) = (Poly::y(ctx, 1), Poly::y(ctx, 2));
    let a = &y2 - &y1;
    let b = &y1 - &(&t * &y2);
    let c = &(&t.pow(2) * &y2) - &y1;
    t.pow(3) * a * b.pow(2) * c
}

/// The point `x1 = y1, x2 = t^2 y2`.
pub fn worked_point() -> SpecializationPoint {
    SpecializationPoint { letters: vec![(1, 0), (2, 2)] }
}

fn theorem2(c: &SuiteConfig, rep: &mut VerificationReport) -> Result<()> {
    for (n, r) in c.pairs(&[(2, 1), (2, 2), (3, 1)]) {
        let p = GaudinParams::new(n, r)?;
        c.bound.check(&p)?;
        let specs = verify_specializations(&p, &c.bound)?;
        rep.absorb(&format!("n={n} r={r}"), &specs);
        if (n, r) == (2, 2) {
            let pt = worked_point();
            let f = gaudin_multischur(&p, &c.bound)?;
            let expected = worked_value(p.ctx()?);
            let (fv, gv) = (f_at_point(&f, &pt)?, g_at_point(&p, &pt)?);
            let ok = fv == expected && gv == expected;
            rep.check(format!("worked point {}", pt.label()), ok, Some(format!("G = F = {gv}")));
        }
        let (rec, unique) = reconstruct_from_g(&p, &c.bound)?;
        let f = gaudin_multischur(&p, &c.bound)?;
        rep.check(format!("n={n} r={r} reconstruction from G"), unique && rec == f, (!unique).then(|| "not unique".into()));
    }
    Ok(())
}

fn theta(c: &SuiteConfig, rep: &mut VerificationReport) -> Result<()> {
    let ns = c.n.map(|n| vec![n]).unwrap_or_else(|| vec![2, 3]);
    for n in ns {
        for e in 0..=2 {
            let sub = verify_theorem_theta(n, e)?;
            rep.absorb("", &sub);
            if let Some(k) = &sub.normalization {
                rep.set_normalization(format!("n={n}: LHS/RHS = {k}"));
            }
        }
    }
    Ok(())
}

/// A random Laurent-free polynomial in `x_1..x_n` with small coefficients and `t` powers.
pub fn random_poly(rng: &mut ChaCha8Rng, ctx: VarContext, n: usize) -> LaurentPoly {
    let mut p = Poly::zero(ctx);
    for _ in 0..rng.gen_range(1..=5) {
        let mut e = ZERO_EXPONENTS;
        for i in 1..=n {
            e[ctx.index(Var::X(i)).expect("x in context")] = rng.gen_range(0..=3);
        }
        e[ctx.t_index()] = rng.gen_range(0..=2);
        let mut k: i64 = rng.gen_range(-3..=3);
        if k == 0 {
            k = 1;
        }
        p.add_term(e, Scalar::from_integer(k.into()));
    }
    p
}

fn hecke(c: &SuiteConfig, rep: &mut VerificationReport) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(c.seed);
    if let Some(n) = c.n {
        if !(2..=4).contains(&n) {
            return Err(Error::OutOfRange(format!("hecke suite needs 2 <= n <= 4, got {n}")));
        }
    }
    let (mut counts, mut first_bad): ([usize; 5], Option<String>) = ([0; 5], None);
    for s in 0..c.samples {
        let n = c.n.unwrap_or_else(|| rng.gen_range(2..=4));
        let ctx = VarContext::new(n)?;
        let f = random_poly(&mut rng, ctx, n);
        let t = Poly::t(ctx);
        let mut fails = Vec::new();
        for i in 1..n {
            if !partial(&partial(&f, i)?, i)?.is_zero() {
                fails.push(format!("d{i}^2"));
            }
            let tf = hecke_t(&f, i, n)?;
            let quad = &(&hecke_t(&tf, i, n)? - &(&(&t - &Poly::one(ctx)) * &tf)) - &(&t * &f);
            if !quad.is_zero() {
                fails.push(format!("(T{i}-t)(T{i}+1)"));
            }
            let cup = hecke_cup(&f, i, n)?;
            if hecke_cup(&cup, i, n)? != &(&Poly::one(ctx) + &t) * &cup {
                fails.push(format!("cup{i}^2"));
            }
            if i + 1 < n {
                let a = hecke_t(&hecke_t(&hecke_t(&f, i, n)?, i + 1, n)?, i, n)?;
                let b = hecke_t(&hecke_t(&hecke_t(&f, i + 1, n)?, i, n)?, i + 1, n)?;
                counts[3] += 1;
                if a != b {
                    fails.push(format!("braid {i}"));
                }
            }
            for j in i + 2..n {
                counts[4] += 1;
                if hecke_t(&hecke_t(&f, i, n)?, j, n)? != hecke_t(&hecke_t(&f, j, n)?, i, n)? {
                    fails.push(format!("T{i}T{j} commute"));
                }
            }
            counts[0] += 1;
        }
        counts[1] += 1;
        counts[2] = counts[2].max(n);
        if !fails.is_empty() && first_bad.is_none() {
            first_bad = Some(format!("sample {s} (n={n}) f = {f}: {}", fails.join(", ")));
        }
    }
    let note = format!(
        "{} polynomials, {} index checks, {} braid checks, {} commutation checks",
        counts[1], counts[0], counts[3], counts[4]
    );
    match first_bad {
        None => rep.check("operator relations", true, Some(note)),
        Some(w) => rep.fail("operator relations", w),
    }
    Ok(())
}

/// A random monomial letter `±c t^k v`, `v ∈ {x1..x3, y1..y3}`.
fn random_letter(rng: &mut ChaCha8Rng, ctx: VarContext) -> LaurentPoly {
    let vars = [Var::X(1), Var::X(2), Var::X(3), Var::Y(1), Var::Y(2), Var::Y(3)];
    let v = *vars.choose(rng).expect("nonempty");
    let c = *[1i64, -1, 2].choose(rng).expect("nonempty");
    Poly::var(ctx, v) * Poly::param_power(ctx, Param::T, rng.gen_range(0..=1)) * Poly::from_int(ctx, c)
}

fn distinct_letters(rng: &mut ChaCha8Rng, ctx: VarContext, k: usize) -> Vec<LaurentPoly> {
    let mut out: Vec<LaurentPoly> = Vec::new();
    while out.len() < k {
        let l = random_letter(rng, ctx);
        if !out.contains(&l) {
            out.push(l);
        }
    }
    out
}

fn factorise(c: &SuiteConfig, rep: &mut VerificationReport) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(c.seed);
    let ctx = VarContext::new(3)?;
    let (mut overlap, mut first_bad) = (0usize, None);
    for s in 0..c.samples {
        let alpha = rng.gen_range(1..=3);
        let beta = rng.gen_range(1..=3);
        let j = rng.gen_range(0..=beta);
        let a_letters = distinct_letters(&mut rng, ctx, alpha);
        let mut b_letters = distinct_letters(&mut rng, ctx, beta);
        if s % 2 == 1 {
            let shared = a_letters.choose(&mut rng).expect("nonempty").clone();
            if !b_letters.contains(&shared) {
                let k = rng.gen_range(0..beta);
                b_letters[k] = shared;
            }
        }
        let a = Alphabet::new(ctx, a_letters)?;
        let b = Alphabet::new(ctx, b_letters)?;
        let lhs = schur(&factorise_index(j, alpha, beta), &a.minus(&b))?;
        let rhs = factorise_rhs(j, &a, &b);
        let shares = a.shares_letter_with(&b);
        overlap += shares as usize;
        let ok = lhs == rhs && (!shares || lhs.is_zero());
        if !ok && first_bad.is_none() {
            first_bad = Some(format!("sample {s}: alpha={alpha} beta={beta} j={j}, LHS = {lhs}, RHS = {rhs}"));
        }
    }
    let note = format!("{} alphabet pairs, {overlap} sharing a letter", c.samples);
    match first_bad {
        None => rep.check("factorisation", true, Some(note)),
        Some(w) => rep.fail("factorisation", w),
    }
    Ok(())
}

fn hl_gen(c: &SuiteConfig, rep: &mut VerificationReport) -> Result<()> {
    let ns = c.n.map(|n| vec![n]).unwrap_or_else(|| vec![1, 2]);
    for &n in &ns {
        let sub = verify_hl_generating(n)?;
        rep.absorb(&format!("n={n}"), &sub);
        let (s, ratio) = hl_test_scalar(n)?;
        rep.check(
            format!("n={n} scalar f(x1)x2..xn d1..d(n-1)"),
            true,
            Some(format!("{s}; ratio to (1-t^n)/(y1..yn) = {}", ratio.unwrap_or_else(|| "none".into()))),
        );
    }
    let hl_ns = c.n.map(|n| vec![n]).unwrap_or_else(|| vec![1, 2, 3]);
    let mut constants = Vec::new();
    for &n in &hl_ns {
        for l in partitions_up_to(3, n) {
            match hl_from_cup(&l, n) {
                Ok((_, k)) => {
                    rep.check(format!("n={n} lambda={l} proportional to P_lambda"), true, Some(format!("k = {k}")));
                    constants.push(format!("n={n} {l}: {k}"));
                }
                Err(Error::NotProportional(w)) => rep.fail(format!("n={n} lambda={l} proportional to P_lambda"), w),
                Err(e) => return Err(e),
            }
        }
    }
    rep.insert_param("hl_constants", constants);
    Ok(())
}

fn fgmacdo(c: &SuiteConfig, rep: &mut VerificationReport) -> Result<()> {
    let ns = c.n.map(|n| vec![n]).unwrap_or_else(|| vec![1, 2]);
    let d = c.trunc.unwrap_or(2);
    for n in ns {
        rep.absorb(&format!("n={n}"), &verify_fgmacdo_reduction(n, d)?);
    }
    Ok(())
}

fn warnaar(c: &SuiteConfig, rep: &mut VerificationReport) -> Result<()> {
    let runs: Vec<(usize, usize)> = match (c.n, c.trunc) {
        (Some(n), Some(d)) => vec![(n, d)],
        (Some(n), None) => (0..=if n == 1 { 3 } else { 2 }).map(|d| (n, d)).collect(),
        (None, Some(d)) => vec![(1, d), (2, d)],
        (None, None) => (0..=3).map(|d| (1, d)).chain((0..=2).map(|d| (2, d))).collect(),
    };
    let mut choices = Vec::new();
    for &(n, d) in &runs {
        let sub = verify_warnaar(n, d)?;
        rep.absorb(&format!("n={n} D={d}"), &sub);
        let out = warnaar_normalization(n, d)?;
        let fact = QtScalar::from_poly(t_factorial(QtScalar::context(), n));
        let choice = match &out.kappa {
            Some(k) if k.is_one() && fact.is_one() => "1 = [n]!".to_string(),
            Some(k) if k.is_one() => "1".to_string(),
            Some(_) => "[n]!".to_string(),
            None => match &out.empirical {
                Some((k, true)) => format!("other ({k})"),
                _ => "none".to_string(),
            },
        };
        choices.push(format!("n={n} D={d}: {choice}"));
        if let Some(k) = sub.normalization {
            rep.set_normalization(k);
        }
    }
    let kinds: Vec<&str> = choices.iter().map(|s| s.split(": ").nth(1).unwrap_or("")).collect();
    let consistent = kinds.iter().all(|k| k.contains("[n]!")) || kinds.iter().all(|k| k.starts_with('1'));
    if runs.len() > 1 {
        rep.check("kappa consistent across runs", consistent, Some(choices.join("; ")));
    }
    Ok(())
}

fn cauchy_qt(c: &SuiteConfig, rep: &mut VerificationReport) -> Result<()> {
    let n = c.n.unwrap_or(2);
    let d = c.trunc.unwrap_or(3);
    rep.absorb("", &verify_cauchy_qt(n, d)?);
    Ok(())
}

fn schubert(c: &SuiteConfig, rep: &mut VerificationReport) -> Result<()> {
    let ns = c.n.map(|n| vec![n]).unwrap_or_else(|| vec![1, 2, 3]);
    let w = c.trunc.unwrap_or(3);
    for &n in &ns {
        let table = vanishing_table(n, w)?;
        let bad = table.iter().find(|(_, _, vanishes, contains)| vanishes == contains);
        let note = match bad {
            None => format!("{} pairs", table.len()),
            Some((v, u, vanishes, _)) => format!("v={v} u={u} vanishes={vanishes}"),
        };
        rep.check(format!("n={n} vanishing iff not contained"), bad.is_none(), Some(note));
        for v in increasing_compositions(n, w) {
            rep.check(format!("n={n} Y_{v}(x,0) = S_{v}(x)"), specializes_to_schur(&v)?, None);
        }
    }
    if ns.contains(&2) || c.n.is_none() {
        for v in increasing_compositions(2, 2) {
            let out = uniqueness_system(&v)?;
            rep.check(
                format!("n=2 uniqueness v={v}"),
                out.unique && out.matches_factorial_schur,
                Some(format!("{} unknowns", out.unknowns)),
            );
        }
    }
    Ok(())
}

fn odd_symmetry(c: &SuiteConfig, rep: &mut VerificationReport) -> Result<()> {
    for (n, r) in c.pairs(&[(2, 1), (2, 3)]) {
        let s = odd_symmetry_schur(n, r, &c.bound)?;
        let index = s.index.clone().map(|v| Composition::new(v).to_string()).unwrap_or_else(|| "-".into());
        let mut ok = s.symmetric && s.single;
        if (n, r) == (2, 1) {
            ok &= s.index.as_deref() == Some(&[0, 0, 1, 1][..]);
        }
        let beta = s.beta.map(|b| b.to_string()).unwrap_or_else(|| "-".into());
        rep.check(format!("n={n} r={r} single Schur of x+y"), ok, Some(format!("index {index}, beta {beta}")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
        assert_eq!(listing().lines().count(), 11);
    }

    #[test]
    fn small_suites_pass() {
        let c = SuiteConfig::new(Suite::Theorem1).with_n(2).with_r(1);
        assert!(run_suite(&c).unwrap().passed());
        let mut c = SuiteConfig::new(Suite::Hecke).with_seed(3);
        c.samples = 8;
        assert!(run_suite(&c).unwrap().passed());
        let w = run_suite(&SuiteConfig::new(Suite::Warnaar).with_n(1).with_trunc(1)).unwrap();
        assert!(w.passed());
        assert_eq!(w.normalization.as_deref(), Some("(1-t)"));
    }

    #[test]
    fn bound_is_usage_error() {
        let c = SuiteConfig::new(Suite::Theorem1).with_n(9).with_r(9);
        assert!(matches!(run_suite(&c), Err(Error::BoundExceeded(_)) | Err(Error::OutOfRange(_))));
    }
}
