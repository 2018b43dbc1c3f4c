//! The identity registry and the runner that verifies it.
//!
//! Every [`IdentityCase`] carries one or more [`Form`]s, each an independent
//! left/right pair. Gating forms decide `pass`; informational forms record
//! the outcome of a display as printed where it is known to be wrong, so a
//! report shows both readings side by side.

mod cases;
mod report;
mod runner;

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quad::QuadConfig;

pub use cases::registry;
pub use report::{to_csv_string, to_json_string, to_table_string, FormSummary, PointRecord, VerificationReport};
pub use runner::{find_case, run_all, run_cases, run_identity, run_identity_with, sample_params, RunConfig};

/// Default grid for identities anchored at zero.
pub const GRID_FINITE: [f64; 5] = [0.25, 0.5, 1.0, 2.0, 4.0];
/// Default grid for identities with an infinite integration limit.
pub const GRID_IMPROPER: [f64; 3] = [0.5, 1.0, 2.0];
pub const DEFAULT_REL_TOL: f64 = 1e-7;
pub const DEFAULT_ABS_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ParamName {
    A,
    K,
    N,
    M,
    Sigma,
    Loc,
}

impl ParamName {
    pub fn as_str(self) -> &'static str {
        match self {
            ParamName::A => "a",
            ParamName::K => "k",
            ParamName::N => "n",
            ParamName::M => "m",
            ParamName::Sigma => "sigma",
            ParamName::Loc => "loc",
        }
    }

    pub fn is_integer(self) -> bool {
        matches!(self, ParamName::K | ParamName::N | ParamName::M)
    }
}

impl fmt::Display for ParamName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Admissible range of one parameter. Real ranges are open, integer ranges
/// inclusive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamSpec {
    pub name: ParamName,
    pub lo: f64,
    pub hi: f64,
}

impl ParamSpec {
    pub const fn new(name: ParamName, lo: f64, hi: f64) -> Self {
        Self { name, lo, hi }
    }

    pub fn admits(&self, v: f64) -> bool {
        if self.name.is_integer() {
            v.fract() == 0.0 && v >= self.lo && v <= self.hi
        } else {
            v > self.lo && v < self.hi
        }
    }
}

/// Parameter values. Fields a case does not declare are ignored by it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Params {
    pub a: f64,
    pub k: u32,
    pub n: u32,
    pub m: u32,
    pub sigma: f64,
    pub loc: f64,
}

impl Default for Params {
    fn default() -> Self {
        Self { a: 2.0, k: 1, n: 1, m: 1, sigma: 1.0, loc: 0.0 }
    }
}

impl Params {
    pub fn get(&self, name: ParamName) -> f64 {
        match name {
            ParamName::A => self.a,
            ParamName::K => self.k as f64,
            ParamName::N => self.n as f64,
            ParamName::M => self.m as f64,
            ParamName::Sigma => self.sigma,
            ParamName::Loc => self.loc,
        }
    }

    /// Sets a parameter; integer parameters must be whole and non-negative.
    pub fn set(&mut self, name: ParamName, v: f64) -> Result<()> {
        if !v.is_finite() {
            return Err(Error::InvalidParam(format!("{name} must be finite")));
        }
        if name.is_integer() && (v.fract() != 0.0 || v < 0.0 || v > u32::MAX as f64) {
            return Err(Error::InvalidParam(format!("{name} must be a non-negative integer, got {v}")));
        }
        match name {
            ParamName::A => self.a = v,
            ParamName::K => self.k = v as u32,
            ParamName::N => self.n = v as u32,
            ParamName::M => self.m = v as u32,
            ParamName::Sigma => self.sigma = v,
            ParamName::Loc => self.loc = v,
        }
        Ok(())
    }

    fn with(mut self, name: ParamName, v: f64) -> Self {
        self.set(name, v).expect("registry defaults are valid");
        self
    }
}

/// One evaluated side. `complex` keeps a complex intermediate for the report.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eval {
    pub value: f64,
    pub complex: Option<Complex64>,
}

impl From<f64> for Eval {
    fn from(value: f64) -> Self {
        Self { value, complex: None }
    }
}

/// What an evaluator sees besides parameters and the point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalCtx {
    pub quad: QuadConfig,
    pub abs_tol: f64,
}

pub type SideFn = fn(&Params, f64, &EvalCtx) -> Result<Eval>;
/// A named predicate over parameters, e.g. `("a > k", |p| ...)`.
pub type Constraint = (&'static str, fn(&Params) -> bool);

/// One left/right pair of an identity.
#[derive(Clone, Copy)]
pub struct Form {
    pub label: &'static str,
    pub description: &'static str,
    /// Informational forms are reported but never decide `pass`.
    pub informational: bool,
    /// Whether the form is defined for the given parameters.
    pub applies: fn(&Params) -> bool,
    pub lhs: SideFn,
    pub rhs: SideFn,
}

impl fmt::Debug for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Form")
            .field("label", &self.label)
            .field("informational", &self.informational)
            .finish_non_exhaustive()
    }
}

#[derive(Debug, Clone)]
pub struct IdentityCase {
    pub id: &'static str,
    pub description: &'static str,
    /// Which weight and function generate the identity.
    pub origin: &'static str,
    pub params: Vec<ParamSpec>,
    /// Cross-parameter constraint beyond the individual ranges.
    pub constraint: Option<Constraint>,
    pub defaults: Vec<Params>,
    pub forms: Vec<Form>,
    pub x_grid: Vec<f64>,
    pub rel_tol: f64,
    pub abs_tol: f64,
}

impl IdentityCase {
    pub fn declares(&self, name: ParamName) -> bool {
        self.params.iter().any(|s| s.name == name)
    }

    pub fn validate(&self, p: &Params) -> Result<()> {
        for s in &self.params {
            let v = p.get(s.name);
            if !s.admits(v) {
                let range =
                    if s.name.is_integer() { format!("[{}, {}]", s.lo, s.hi) } else { format!("({}, {})", s.lo, s.hi) };
                return Err(Error::InvalidParam(format!("{}: {} = {v} outside {range}", self.id, s.name)));
            }
        }
        if let Some((what, ok)) = self.constraint {
            if !ok(p) {
                return Err(Error::InvalidParam(format!("{}: requires {what}", self.id)));
            }
        }
        Ok(())
    }

    /// Declared parameters with their values, in declaration order.
    pub fn param_values(&self, p: &Params) -> Vec<(ParamName, f64)> {
        self.params.iter().map(|s| (s.name, p.get(s.name))).collect()
    }
}
