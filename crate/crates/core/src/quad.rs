//! Adaptive Gauss–Kronrod (10/21) quadrature.
//!
//! Integrals are oriented: `integrate(f, a, b) == -integrate(f, b, a)` holds
//! bit for bit because the reversed call flips the sign of the forward one.
//! Infinite endpoints are mapped onto finite ones with
//! `t = c ± u/(1-u)` (semi-infinite) or `t = u/(1-u^2)` (doubly infinite).
//! The rule never samples an endpoint, so integrable endpoint singularities
//! such as `t^(-1/2)` at zero are fine.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

/// An extended-real integration limit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Bound {
    NegInf,
    Finite(f64),
    PosInf,
}

impl Bound {
    fn rank(self) -> (i8, f64) {
        match self {
            Bound::NegInf => (-1, 0.0),
            Bound::Finite(v) => (0, v),
            Bound::PosInf => (1, 0.0),
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Bound::Finite(_))
    }

    pub fn finite(self) -> Option<f64> {
        match self {
            Bound::Finite(v) => Some(v),
            _ => None,
        }
    }
}

impl From<f64> for Bound {
    fn from(v: f64) -> Self {
        if v == f64::INFINITY {
            Bound::PosInf
        } else if v == f64::NEG_INFINITY {
            Bound::NegInf
        } else {
            Bound::Finite(v)
        }
    }
}

impl PartialOrd for Bound {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let (ra, va) = self.rank();
        let (rb, vb) = other.rank();
        match ra.cmp(&rb) {
            Ordering::Equal => va.partial_cmp(&vb),
            o => Some(o),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_evals: usize,
}

impl Default for QuadConfig {
    fn default() -> Self {
        Self { rel_tol: 1e-10, abs_tol: 1e-12, max_evals: 200_000 }
    }
}

impl QuadConfig {
    pub fn new(rel_tol: f64, abs_tol: f64, max_evals: usize) -> Result<Self> {
        let cfg = Self { rel_tol, abs_tol, max_evals };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) || !(self.abs_tol > 0.0) {
            return Err(Error::InvalidConfig("quadrature tolerances must be positive".into()));
        }
        if self.max_evals == 0 {
            return Err(Error::InvalidConfig("max_evals must be positive".into()));
        }
        Ok(())
    }

    /// Tolerances divided by `factor`, for integrands that themselves contain
    /// a quadrature.
    pub fn tightened(&self, factor: f64) -> Self {
        Self { rel_tol: (self.rel_tol / factor).max(1e-15), abs_tol: self.abs_tol / factor, max_evals: self.max_evals }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evals: usize,
}

impl QuadResult {
    fn negated(self) -> Self {
        Self { value: -self.value, ..self }
    }
}

#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995657163025808080735527280689003,
    0.973906528517171720077964012084452,
    0.930157491355708226001207180059508,
    0.865063366688984510732096688423493,
    0.780817726586416897063717578345042,
    0.679409568299024406234327365114874,
    0.562757134668604683339000099272694,
    0.433395394129247190799265943165784,
    0.294392862701460198131126603103866,
    0.148874338981631210884826001129720,
    0.000000000000000000000000000000000,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011694638867371874278064396062192,
    0.032558162307964727478818972459390,
    0.054755896574351996031381300244580,
    0.075039674810919952767043140916190,
    0.093125454583697605535065465083366,
    0.109387158802297641899210590325805,
    0.123491976262065851077208980053346,
    0.134709217311473325928054001771707,
    0.142775938577060080797094273138717,
    0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
];

// Gauss weights for the odd-indexed Kronrod nodes 1, 3, 5, 7, 9.
#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066671344308688137593568809893332,
    0.149451349150580593145776339657697,
    0.219086362515982043995534934228163,
    0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
];

const RULE_EVALS: usize = 21;

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}

impl Eq for Segment {}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn kronrod<F>(f: &F, a: f64, b: f64) -> Result<Segment>
where
    F: Fn(f64) -> Result<f64>,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center)?;
    let mut res_k = fc * WGK[10];
    let mut res_g = 0.0;
    let mut res_abs = res_k.abs();
    let mut fv1 = [0.0; 10];
    let mut fv2 = [0.0; 10];
    for j in 0..10 {
        let dx = half * XGK[j];
        let f1 = f(center - dx)?;
        let f2 = f(center + dx)?;
        fv1[j] = f1;
        fv2[j] = f2;
        res_k += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            res_g += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = res_k * 0.5;
    let mut res_asc = WGK[10] * (fc - mean).abs();
    for j in 0..10 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let value = res_k * half;
    let res_abs = res_abs * half.abs();
    let res_asc = res_asc * half.abs();
    let mut error = ((res_k - res_g) * half).abs();
    if res_asc != 0.0 && error != 0.0 {
        error = res_asc * (200.0 * error / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * res_abs);
    }
    Ok(Segment { a, b, value, error })
}

fn adapt<F>(g: &F, pieces: &[(f64, f64)], cfg: &QuadConfig) -> Result<QuadResult>
where
    F: Fn(f64) -> Result<f64>,
{
    let mut heap = BinaryHeap::new();
    let mut evals = 0;
    // segments too narrow to bisect further
    let mut frozen_value = 0.0;
    let mut frozen_error = 0.0;
    for &(a, b) in pieces {
        heap.push(kronrod(g, a, b)?);
        evals += RULE_EVALS;
    }
    loop {
        let value: f64 = frozen_value + heap.iter().map(|s| s.value).sum::<f64>();
        let error: f64 = frozen_error + heap.iter().map(|s| s.error).sum::<f64>();
        let tol = cfg.abs_tol.max(cfg.rel_tol * value.abs());
        if error <= tol || heap.is_empty() {
            if error <= tol {
                return Ok(QuadResult { value, error_estimate: error, evals });
            }
            return Err(Error::BudgetExhausted { evals, value, estimate: error });
        }
        if evals + 2 * RULE_EVALS > cfg.max_evals {
            return Err(Error::BudgetExhausted { evals, value, estimate: error });
        }
        let worst = heap.pop().expect("heap checked non-empty");
        let mid = 0.5 * (worst.a + worst.b);
        if !(mid > worst.a.min(worst.b) && mid < worst.a.max(worst.b))
            || (worst.b - worst.a).abs() <= 4.0 * f64::EPSILON * mid.abs().max(f64::MIN_POSITIVE)
        {
            frozen_value += worst.value;
            frozen_error += worst.error;
            continue;
        }
        heap.push(kronrod(g, worst.a, mid)?);
        heap.push(kronrod(g, mid, worst.b)?);
        evals += 2 * RULE_EVALS;
    }
}

fn checked<F>(f: &F, t: f64, jac: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    if !t.is_finite() {
        // the mapped node ran off to infinity; the integrand must vanish there
        return Ok(0.0);
    }
    let v = f(t)?;
    if !v.is_finite() {
        return Err(Error::NonFiniteSample(t));
    }
    if v == 0.0 {
        return Ok(0.0);
    }
    let out = v * jac;
    if !out.is_finite() {
        return Err(Error::NonFiniteSample(t));
    }
    Ok(out)
}

fn forward<F>(f: &F, lower: Bound, upper: Bound, cfg: &QuadConfig) -> Result<QuadResult>
where
    F: Fn(f64) -> Result<f64>,
{
    match (lower, upper) {
        (Bound::Finite(a), Bound::Finite(b)) => adapt(&|t| checked(f, t, 1.0), &[(a, b)], cfg),
        (Bound::Finite(c), Bound::PosInf) => {
            let g = |u: f64| {
                let s = 1.0 - u;
                checked(f, c + u / s, 1.0 / (s * s))
            };
            adapt(&g, &[(0.0, 1.0)], cfg)
        }
        (Bound::NegInf, Bound::Finite(c)) => {
            let g = |u: f64| {
                let s = 1.0 - u;
                checked(f, c - u / s, 1.0 / (s * s))
            };
            adapt(&g, &[(0.0, 1.0)], cfg)
        }
        (Bound::NegInf, Bound::PosInf) => {
            let g = |u: f64| {
                let s = 1.0 - u * u;
                checked(f, u / s, (1.0 + u * u) / (s * s))
            };
            adapt(&g, &[(-1.0, 0.0), (0.0, 1.0)], cfg)
        }
        _ => unreachable!("forward() is only called with lower < upper"),
    }
}

/// Oriented integral of a fallible integrand; integrand errors propagate.
pub fn try_integrate<F>(f: F, lower: Bound, upper: Bound, cfg: &QuadConfig) -> Result<QuadResult>
where
    F: Fn(f64) -> Result<f64>,
{
    cfg.validate()?;
    for b in [lower, upper] {
        if let Bound::Finite(v) = b {
            if v.is_nan() {
                return Err(Error::Domain("NaN integration limit".into()));
            }
        }
    }
    match lower.partial_cmp(&upper) {
        Some(Ordering::Equal) => Ok(QuadResult { value: 0.0, error_estimate: 0.0, evals: 0 }),
        Some(Ordering::Less) => forward(&f, lower, upper, cfg),
        Some(Ordering::Greater) => forward(&f, upper, lower, cfg).map(QuadResult::negated),
        None => Err(Error::Domain("unordered integration limits".into())),
    }
}

/// Oriented integral `∫_lower^upper f(t) dt`.
pub fn integrate<F>(f: F, lower: Bound, upper: Bound, cfg: &QuadConfig) -> Result<QuadResult>
where
    F: Fn(f64) -> f64,
{
    try_integrate(|t| Ok(f(t)), lower, upper, cfg)
}
