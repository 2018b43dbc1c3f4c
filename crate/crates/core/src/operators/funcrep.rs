use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::jet::{Jet, MAX_ORDER};

/// An open interval `(lo, hi)`; either end may be infinite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub const REAL: Interval = Interval { lo: f64::NEG_INFINITY, hi: f64::INFINITY };
    pub const POSITIVE: Interval = Interval { lo: 0.0, hi: f64::INFINITY };

    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if lo.is_nan() || hi.is_nan() || lo >= hi {
            return Err(Error::InvalidConfig(format!("empty interval ({lo}, {hi})")));
        }
        Ok(Self { lo, hi })
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo < x && x < self.hi
    }

    /// The overlap of two intervals; may be empty, in which case nothing is
    /// contained.
    pub fn intersect(&self, other: &Interval) -> Interval {
        Interval { lo: self.lo.max(other.lo), hi: self.hi.min(other.hi) }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lo, self.hi)
    }
}

type JetFn = dyn Fn(f64, usize) -> Result<Jet> + Send + Sync;

/// A real function that can produce its jet of any order up to
/// [`MAX_ORDER`] at any point of its domain.
///
/// Combinators build new representations lazily: nothing is evaluated until
/// [`FuncRep::eval_jet`] is called.
#[derive(Clone)]
pub struct FuncRep {
    eval: Arc<JetFn>,
    domain: Interval,
}

impl fmt::Debug for FuncRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FuncRep").field("domain", &self.domain).finish_non_exhaustive()
    }
}

impl FuncRep {
    /// Wraps a raw jet evaluator. The closure must return a jet centred at
    /// `x` with exactly `order + 1` coefficients.
    pub fn new<F>(domain: Interval, f: F) -> Self
    where
        F: Fn(f64, usize) -> Result<Jet> + Send + Sync + 'static,
    {
        Self { eval: Arc::new(f), domain }
    }

    /// Builds a representation from an expression in the independent
    /// variable, evaluated in jet arithmetic.
    pub fn from_expr<F>(domain: Interval, expr: F) -> Self
    where
        F: Fn(&Jet) -> Result<Jet> + Send + Sync + 'static,
    {
        Self::new(domain, move |x, order| expr(&Jet::var(x, order)?))
    }

    pub fn constant(c: f64) -> Self {
        Self::new(Interval::REAL, move |x, order| Jet::constant(x, c, order))
    }

    pub fn domain(&self) -> Interval {
        self.domain
    }

    /// Same function on a narrower domain.
    pub fn restrict(&self, domain: Interval) -> Self {
        Self { eval: self.eval.clone(), domain: self.domain.intersect(&domain) }
    }

    pub fn eval_jet(&self, x: f64, order: usize) -> Result<Jet> {
        if order > MAX_ORDER {
            return Err(Error::UnsupportedOrder(order));
        }
        if !self.domain.contains(x) {
            return Err(Error::Domain(format!("x = {x} outside {}", self.domain)));
        }
        let jet = (self.eval)(x, order)?;
        if jet.order() != order || jet.center() != x {
            return Err(Error::JetMismatch);
        }
        jet.check_finite()?;
        Ok(jet)
    }

    pub fn value(&self, x: f64) -> Result<f64> {
        Ok(self.eval_jet(x, 0)?.value())
    }

    /// `f'`; its jet of order `m` reads `f` at order `m + 1`.
    pub fn derivative(&self) -> Self {
        let f = self.clone();
        Self::new(self.domain, move |x, order| {
            if order + 1 > MAX_ORDER {
                return Err(Error::InsufficientOrder { need: order + 1, have: MAX_ORDER });
            }
            f.eval_jet(x, order + 1)?.derivative()
        })
    }

    pub fn nth_derivative(&self, k: usize) -> Self {
        let f = self.clone();
        Self::new(self.domain, move |x, order| {
            if order + k > MAX_ORDER {
                return Err(Error::InsufficientOrder { need: order + k, have: MAX_ORDER });
            }
            let mut jet = f.eval_jet(x, order + k)?;
            for _ in 0..k {
                jet = jet.derivative()?;
            }
            Ok(jet)
        })
    }

    fn zip<F>(&self, other: &FuncRep, op: F) -> Self
    where
        F: Fn(&Jet, &Jet) -> Result<Jet> + Send + Sync + 'static,
    {
        let (f, g) = (self.clone(), other.clone());
        Self::new(self.domain.intersect(&other.domain), move |x, order| {
            op(&f.eval_jet(x, order)?, &g.eval_jet(x, order)?)
        })
    }

    pub fn add(&self, other: &FuncRep) -> Self {
        self.zip(other, |a, b| Ok(a + b))
    }

    pub fn sub(&self, other: &FuncRep) -> Self {
        self.zip(other, |a, b| Ok(a - b))
    }

    pub fn mul(&self, other: &FuncRep) -> Self {
        self.zip(other, |a, b| a.try_mul(b))
    }

    pub fn div(&self, other: &FuncRep) -> Self {
        self.zip(other, |a, b| a.div(b))
    }

    pub fn scale(&self, s: f64) -> Self {
        let f = self.clone();
        Self::new(self.domain, move |x, order| Ok(f.eval_jet(x, order)?.scale(s)))
    }

    /// `self ∘ inner`; the outer domain is checked at the inner value.
    pub fn compose(&self, inner: &FuncRep) -> Self {
        let (f, g) = (self.clone(), inner.clone());
        Self::new(inner.domain, move |x, order| {
            let gj = g.eval_jet(x, order)?;
            let fj = f.eval_jet(gj.value(), order)?;
            gj.compose_series(&fj)
        })
    }
}
