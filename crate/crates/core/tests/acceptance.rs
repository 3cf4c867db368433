//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use gaudinlab::combinatorics::{increasing_compositions, partitions_up_to};
use gaudinlab::euler_poincare::{verify_cauchy_qt, verify_hl_generating, verify_theorem_theta};
use gaudinlab::gaudin::{
    f_at_point, g_at_point, gaudin_multischur, gaudin_raw, odd_symmetry_schur, verify_specializations, GaudinParams,
    SizeBound,
};
use gaudinlab::orthogonal_bases::hl_from_cup;
use gaudinlab::report::VerificationReport;
use gaudinlab::schubert::{specializes_to_schur, vanishing_table};
use gaudinlab::suites::{run_suite, worked_point, worked_value, Suite, SuiteConfig};
use gaudinlab::Result;

struct Outcome {
    ok: bool,
    detail: String,
}

fn from_report(r: &VerificationReport) -> Outcome {
    let detail = match (&r.witness, &r.normalization) {
        (Some(w), _) => w.clone(),
        (None, Some(n)) => format!("{} checks, normalization {n}", r.checks.len()),
        (None, None) => match r.checks.as_slice() {
            [only] => only.note.clone().unwrap_or_else(|| only.label.clone()),
            all => format!("{} checks", all.len()),
        },
    };
    Outcome { ok: r.passed(), detail }
}

fn worked() -> Result<Outcome> {
    let p = GaudinParams::new(2, 2)?;
    let pt = worked_point();
    let expected = worked_value(p.ctx()?);
    let g = g_at_point(&p, &pt)?;
    let f = f_at_point(&gaudin_multischur(&p, &SizeBound::default())?, &pt)?;
    Ok(Outcome { ok: g == expected && f == expected, detail: format!("{}: G = {g}", pt.label()) })
}

fn theorem1() -> Result<Outcome> {
    let bound = SizeBound::default();
    let mut bad = Vec::new();
    for (n, r) in [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1)] {
        let p = GaudinParams::new(n, r)?;
        if gaudin_raw(&p, &bound)? != gaudin_multischur(&p, &bound)? {
            bad.push(format!("({n},{r})"));
        }
    }
    Ok(Outcome { ok: bad.is_empty(), detail: if bad.is_empty() { "5 cases".into() } else { bad.join(" ") } })
}

fn theorem2() -> Result<Outcome> {
    let mut points = 0;
    for (n, r) in [(2, 1), (2, 2), (3, 1)] {
        let rep = verify_specializations(&GaudinParams::new(n, r)?, &SizeBound::default())?;
        points += rep.checks.len();
        if !rep.passed() {
            return Ok(from_report(&rep));
        }
    }
    Ok(Outcome { ok: true, detail: format!("{points} specialization points") })
}

fn suite(s: Suite) -> Result<Outcome> {
    Ok(from_report(&run_suite(&SuiteConfig::new(s).with_seed(2024))?))
}

fn theta() -> Result<Outcome> {
    let mut failed = Vec::new();
    for n in [2, 3] {
        for e in 0..=2 {
            let r = verify_theorem_theta(n, e)?;
            if !r.passed() {
                failed.push(format!("n={n} f=x1^{e} LHS/RHS={}", r.normalization.unwrap_or_default()));
            }
        }
    }
    Ok(Outcome { ok: failed.is_empty(), detail: if failed.is_empty() { "6 cases".into() } else { failed.join("; ") } })
}

fn hl_generating() -> Result<Outcome> {
    for n in [1, 2] {
        let r = verify_hl_generating(n)?;
        if !r.passed() {
            return Ok(from_report(&r));
        }
    }
    Ok(Outcome { ok: true, detail: "n=1,2".into() })
}

fn hl_proportional() -> Result<Outcome> {
    let mut constants = Vec::new();
    for n in 1..=3 {
        for l in partitions_up_to(3, n) {
            match hl_from_cup(&l, n) {
                Ok((_, k)) => constants.push(format!("{n}:{l}={k}")),
                Err(e) => return Ok(Outcome { ok: false, detail: format!("n={n} lambda={l}: {e}") }),
            }
        }
    }
    Ok(Outcome { ok: true, detail: constants.join(" ") })
}

fn schubert() -> Result<Outcome> {
    let mut pairs = 0;
    for n in 1..=3 {
        for (v, u, vanishes, contains) in vanishing_table(n, 3)? {
            pairs += 1;
            if vanishes == contains {
                return Ok(Outcome { ok: false, detail: format!("v={v} u={u}") });
            }
        }
        for v in increasing_compositions(n, 3) {
            if !specializes_to_schur(&v)? {
                return Ok(Outcome { ok: false, detail: format!("Y_{v}(x,0) != S_{v}") });
            }
        }
    }
    Ok(Outcome { ok: true, detail: format!("{pairs} pairs") })
}

fn odd() -> Result<Outcome> {
    let bound = SizeBound::default();
    let a = odd_symmetry_schur(2, 1, &bound)?;
    let b = odd_symmetry_schur(2, 3, &bound)?;
    let ok = a.single && a.index.as_deref() == Some(&[0, 0, 1, 1][..]) && b.single && b.symmetric;
    Ok(Outcome { ok, detail: format!("(2,1) index {:?}; (2,3) index {:?}", a.index, b.index) })
}

fn main() -> ExitCode {
    let criteria: Vec<(&str, fn() -> Result<Outcome>)> = vec![
        ("worked-value G=F at x1=y1,x2=t^2*y2", worked),
        ("determinant quotient = multi-Schur", theorem1),
        ("F = G at set-specializations", theorem2),
        ("operator algebra", || suite(Suite::Hecke)),
        ("alphabet factorisation", || suite(Suite::Factorise)),
        ("theta symmetrization identity", theta),
        ("hall-littlewood generating function", hl_generating),
        ("truncated macdonald cauchy n=2 D=3", || Ok(from_report(&verify_cauchy_qt(2, 3)?))),
        ("t-deformed cauchy normalization", || suite(Suite::Warnaar)),
        ("hall-littlewood proportionality", hl_proportional),
        ("schubert vanishing", schubert),
        ("odd-level symmetry", odd),
    ];
    let mut all = true;
    for (name, f) in criteria {
        let start = Instant::now();
        let (ok, detail) = match f() {
            Ok(o) => (o.ok, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        all &= ok;
        println!("{} {name} ({} ms): {detail}", if ok { "PASS" } else { "FAIL" }, start.elapsed().as_millis());
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
