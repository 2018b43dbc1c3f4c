use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Duration;

use num_complex::Complex64;
use serde_json::{Map, Number, Value};

use super::{Eval, ParamName};
use crate::error::{Error, Result};

/// One form evaluated at one point.
#[derive(Debug, Clone, PartialEq)]
pub struct PointRecord {
    pub x: f64,
    pub form: &'static str,
    pub informational: bool,
    pub lhs: Option<Eval>,
    pub rhs: Option<Eval>,
    pub abs_err: f64,
    pub rel_err: f64,
    pub pass: bool,
    /// Evaluation failure on either side.
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FormSummary {
    pub label: &'static str,
    pub informational: bool,
    pub pass: bool,
    pub max_rel_err: f64,
    pub points: usize,
    pub errors: usize,
}

/// Outcome of one identity at one parameter set.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub identity_id: &'static str,
    pub params: Vec<(ParamName, f64)>,
    pub points: Vec<PointRecord>,
    /// Over gating forms only.
    pub max_rel_err: f64,
    /// Every gating point within tolerance and no gating evaluation error.
    pub pass: bool,
    pub forms: Vec<FormSummary>,
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Not serialized, so reports stay reproducible byte for byte.
    pub wall_time: Duration,
}

impl VerificationReport {
    /// Evaluation failures in gating forms.
    pub fn gating_errors(&self) -> usize {
        self.points.iter().filter(|p| !p.informational && p.error.is_some()).count()
    }

    pub fn params_json(&self) -> Value {
        let mut m = Map::new();
        for (name, v) in &self.params {
            let val = if name.is_integer() { Value::from(*v as u64) } else { num(*v) };
            m.insert(name.as_str().to_string(), val);
        }
        Value::Object(m)
    }

    pub fn to_json(&self) -> Value {
        let points = self.points.iter().map(point_json).collect();
        let forms = self
            .forms
            .iter()
            .map(|f| {
                let mut m = Map::new();
                m.insert("label".into(), f.label.into());
                m.insert("informational".into(), f.informational.into());
                m.insert("pass".into(), f.pass.into());
                m.insert("max_rel_err".into(), num(f.max_rel_err));
                m.insert("points".into(), f.points.into());
                m.insert("errors".into(), f.errors.into());
                Value::Object(m)
            })
            .collect();
        let mut m = Map::new();
        m.insert("identity_id".into(), self.identity_id.into());
        m.insert("params".into(), self.params_json());
        m.insert("points".into(), Value::Array(points));
        m.insert("max_rel_err".into(), num(self.max_rel_err));
        m.insert("pass".into(), self.pass.into());
        m.insert("forms".into(), Value::Array(forms));
        Value::Object(m)
    }
}

/// A JSON number printed with 17 significant digits; non-finite values
/// become `null`.
pub(crate) fn num(v: f64) -> Value {
    if !v.is_finite() {
        return Value::Null;
    }
    Value::Number(Number::from_str(&format!("{v:.16e}")).expect("formatted float is valid JSON"))
}

fn complex_json(c: Complex64) -> Value {
    let mut m = Map::new();
    m.insert("re".into(), num(c.re));
    m.insert("im".into(), num(c.im));
    Value::Object(m)
}

fn side_json(e: &Option<Eval>) -> Value {
    e.map_or(Value::Null, |e| num(e.value))
}

fn point_json(p: &PointRecord) -> Value {
    let mut m = Map::new();
    m.insert("x".into(), num(p.x));
    m.insert("form".into(), p.form.into());
    m.insert("lhs".into(), side_json(&p.lhs));
    m.insert("rhs".into(), side_json(&p.rhs));
    m.insert("abs_err".into(), num(p.abs_err));
    m.insert("rel_err".into(), num(p.rel_err));
    m.insert("pass".into(), p.pass.into());
    for (key, side) in [("lhs_complex", &p.lhs), ("rhs_complex", &p.rhs)] {
        if let Some(c) = side.and_then(|e| e.complex) {
            m.insert(key.into(), complex_json(c));
        }
    }
    if let Some(err) = &p.error {
        m.insert("error".into(), err.clone().into());
    }
    Value::Object(m)
}

/// Reports as a pretty-printed JSON array.
pub fn to_json_string(reports: &[VerificationReport]) -> String {
    let arr = Value::Array(reports.iter().map(VerificationReport::to_json).collect());
    let mut s = serde_json::to_string_pretty(&arr).expect("JSON values serialize");
    s.push('\n');
    s
}

fn fmt17(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        String::new()
    }
}

/// One CSV row per point.
pub fn to_csv_string(reports: &[VerificationReport]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::InvalidConfig(format!("CSV output: {e}"));
    w.write_record(["identity_id", "param_json", "x", "lhs", "rhs", "abs_err", "rel_err", "pass", "form"])
        .map_err(io)?;
    for r in reports {
        let params = r.params_json().to_string();
        for p in &r.points {
            let side = |e: &Option<Eval>| e.map_or(String::new(), |e| fmt17(e.value));
            w.write_record([
                r.identity_id.to_string(),
                params.clone(),
                fmt17(p.x),
                side(&p.lhs),
                side(&p.rhs),
                fmt17(p.abs_err),
                fmt17(p.rel_err),
                p.pass.to_string(),
                p.form.to_string(),
            ])
            .map_err(io)?;
        }
    }
    let bytes = w.into_inner().map_err(|e| Error::InvalidConfig(format!("CSV output: {e}")))?;
    Ok(String::from_utf8(bytes).expect("CSV built from UTF-8 strings"))
}

/// Human-readable summary, one block per report.
pub fn to_table_string(reports: &[VerificationReport]) -> String {
    let mut s = String::new();
    for r in reports {
        let params: Vec<String> = r
            .params
            .iter()
            .map(|(n, v)| if n.is_integer() { format!("{n}={v}") } else { format!("{n}={v:.6}") })
            .collect();
        let _ = writeln!(
            s,
            "{:<22} {:<32} {:<4} max_rel_err={:.3e}",
            r.identity_id,
            params.join(" "),
            if r.pass { "PASS" } else { "FAIL" },
            r.max_rel_err
        );
        for f in &r.forms {
            let tag = match (f.informational, f.pass) {
                (false, true) => "pass",
                (false, false) => "FAIL",
                (true, true) => "holds (informational)",
                (true, false) => "fails (informational)",
            };
            let errs = if f.errors > 0 { format!(" errors={}", f.errors) } else { String::new() };
            let _ = writeln!(s, "    {:<24} {tag:<22} max_rel_err={:.3e}{errs}", f.label, f.max_rel_err);
        }
        for p in r.points.iter().filter(|p| !p.informational && p.error.is_some()) {
            let _ = writeln!(s, "    error at x={} [{}]: {}", p.x, p.form, p.error.as_deref().unwrap_or(""));
        }
    }
    s
}
