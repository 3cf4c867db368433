//! Verification reports and JSON / LaTeX rendering of polynomials.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::exact_algebra::{Coeff, Poly, Scalar};

pub const SCHEMA: &str = "gaudinlab.report/1";
pub const POLY_SCHEMA: &str = "gaudinlab.poly/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// One checked instance inside a report (a specialization point, a λ, a seed, …).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckEntry {
    pub label: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub schema: &'static str,
    #[serde(rename = "suite")]
    pub identity: String,
    pub params: BTreeMap<String, Value>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub normalization: Option<String>,
    pub checks: Vec<CheckEntry>,
    pub elapsed_ms: u128,
    #[serde(skip)]
    started: Option<Instant>,
}

impl VerificationReport {
    pub fn new(identity: impl Into<String>) -> Self {
        Self {
            schema: SCHEMA,
            identity: identity.into(),
            params: BTreeMap::new(),
            status: Status::Pass,
            witness: None,
            normalization: None,
            checks: Vec::new(),
            elapsed_ms: 0,
            started: Some(Instant::now()),
        }
    }

    pub fn param(mut self, key: &str, value: impl Serialize) -> Self {
        self.params.insert(key.to_string(), serde_json::to_value(value).expect("serializable"));
        self
    }

    pub fn insert_param(&mut self, key: &str, value: impl Serialize) {
        self.params.insert(key.to_string(), serde_json::to_value(value).expect("serializable"));
    }

    /// Records a check; the first failing check with a note becomes the witness.
    pub fn check(&mut self, label: impl Into<String>, ok: bool, note: Option<String>) {
        let label = label.into();
        if !ok {
            self.status = Status::Fail;
            if self.witness.is_none() {
                self.witness = Some(match &note {
                    Some(n) => format!("{label}: {n}"),
                    None => label.clone(),
                });
            }
        }
        self.checks.push(CheckEntry { label, status: if ok { Status::Pass } else { Status::Fail }, note });
    }

    pub fn fail(&mut self, label: impl Into<String>, why: impl Into<String>) {
        self.check(label, false, Some(why.into()));
    }

    /// Copies the checks of `other` under `prefix`, keeping its normalization if none is set.
    pub fn absorb(&mut self, prefix: &str, other: &VerificationReport) {
        for c in &other.checks {
            let label = if prefix.is_empty() { c.label.clone() } else { format!("{prefix} {}", c.label) };
            self.check(label, c.status == Status::Pass, c.note.clone());
        }
        if self.normalization.is_none() {
            self.normalization = other.normalization.clone();
        }
    }

    pub fn set_normalization(&mut self, n: impl Into<String>) {
        self.normalization = Some(n.into());
    }

    pub fn finish(mut self) -> Self {
        if let Some(s) = self.started.take() {
            self.elapsed_ms = s.elapsed().as_millis();
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("serializable")
    }

    /// JSON without the timing field, for reproducibility comparisons.
    pub fn to_json_untimed(&self) -> Value {
        let mut v = self.to_json();
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} [{}]", self.identity, self.status);
        for (k, v) in &self.params {
            s.push_str(&format!(" {k}={v}"));
        }
        s.push('\n');
        for c in &self.checks {
            match &c.note {
                Some(n) => s.push_str(&format!("  {} {}  {}\n", c.status, c.label, n)),
                None => s.push_str(&format!("  {} {}\n", c.status, c.label)),
            }
        }
        if let Some(n) = &self.normalization {
            s.push_str(&format!("  normalization: {n}\n"));
        }
        if let Some(w) = &self.witness {
            s.push_str(&format!("  witness: {w}\n"));
        }
        s
    }

    pub fn to_latex(&self) -> String {
        let mut s = format!("\\paragraph{{{}}} status: \\texttt{{{}}}\n\\begin{{itemize}}\n", latex_escape(&self.identity), self.status);
        for c in &self.checks {
            s.push_str(&format!("  \\item \\texttt{{{}}} {}\n", c.status, latex_escape(&c.label)));
        }
        s.push_str("\\end{itemize}\n");
        if let Some(n) = &self.normalization {
            s.push_str(&format!("normalization: ${}$\n", n));
        }
        s
    }
}

fn latex_escape(s: &str) -> String {
    s.replace('_', "\\_").replace('#', "\\#").replace('%', "\\%").replace('&', "\\&")
}

fn scalar_string(c: &Scalar) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

/// Sorted term list `[{coeff: "num/den", exps: [...]}]` plus the variable order.
pub fn poly_to_json(p: &Poly<Scalar>) -> Value {
    let ctx = p.ctx();
    let terms: Vec<Value> = p
        .terms()
        .map(|(e, c)| json!({ "coeff": scalar_string(c), "exps": e[..ctx.len()].to_vec() }))
        .collect();
    json!({ "schema": POLY_SCHEMA, "variables": ctx.variable_names(), "terms": terms })
}

/// Same layout for coefficients in any field, rendered as strings.
pub fn coeff_poly_to_json<C: Coeff>(p: &Poly<C>) -> Value {
    let ctx = p.ctx();
    let terms: Vec<Value> = p
        .terms()
        .map(|(e, c)| json!({ "coeff": c.render(), "exps": e[..ctx.len()].to_vec() }))
        .collect();
    json!({ "schema": POLY_SCHEMA, "variables": ctx.variable_names(), "terms": terms })
}

/// LaTeX rendering of a polynomial, highest terms first.
pub fn poly_to_latex(p: &Poly<Scalar>) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let ctx = p.ctx();
    let mut out = String::new();
    for (k, (e, c)) in p.terms().rev().enumerate() {
        let neg = c < &<Scalar as Coeff>::zero();
        let a = if neg { -c.clone() } else { c.clone() };
        let mut mono = String::new();
        for i in 0..ctx.len() {
            if e[i] == 0 {
                continue;
            }
            let name = match ctx.var_at(i) {
                crate::exact_algebra::Var::X(j) => format!("x_{{{j}}}"),
                crate::exact_algebra::Var::Y(j) => format!("y_{{{j}}}"),
                crate::exact_algebra::Var::T => "t".into(),
                crate::exact_algebra::Var::Q => "q".into(),
            };
            if e[i] == 1 {
                mono.push_str(&name);
            } else {
                mono.push_str(&format!("{name}^{{{}}}", e[i]));
            }
        }
        let coeff = if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("\\frac{{{}}}{{{}}}", a.numer(), a.denom())
        };
        let body = if mono.is_empty() {
            coeff
        } else if a == <Scalar as Coeff>::one() {
            mono
        } else {
            format!("{coeff}\\,{mono}")
        };
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::{ratio, VarContext};

    #[test]
    fn witness_is_first_failure() {
        let mut r = VerificationReport::new("demo").param("n", 2);
        r.check("a", true, None);
        r.check("b", false, Some("mismatch".into()));
        r.check("c", false, None);
        assert!(!r.passed());
        assert_eq!(r.witness.as_deref(), Some("b: mismatch"));
        let v = r.finish().to_json_untimed();
        assert_eq!(v["schema"], SCHEMA);
        assert!(v.get("elapsed_ms").is_none());
    }

    #[test]
    fn poly_json_and_latex() {
        let c = VarContext::new(1).unwrap();
        let p = Poly::<Scalar>::x(c, 1).scale(&ratio(-3, 2)) + Poly::one(c);
        let j = poly_to_json(&p);
        assert_eq!(j["terms"][0]["coeff"], "1/1");
        assert_eq!(j["terms"][1]["coeff"], "-3/2");
        assert_eq!(poly_to_latex(&p), "-\\frac{3}{2}\\,x_{1} + 1");
    }
}
