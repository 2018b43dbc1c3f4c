use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use super::funcrep::{FuncRep, Interval};
use crate::error::{Error, Result};
use crate::jet::Jet;
use crate::quad::{try_integrate, Bound, QuadConfig};

/// Highest iterated-weight level computed without a closed form.
pub const MAX_NUMERIC_LEVEL: usize = 6;

/// Number of closed-form levels generated by the built-in families.
const CLOSED_LEVELS: usize = 10;

struct Inner {
    name: String,
    w: FuncRep,
    alpha: Bound,
    /// `closed[k - 1]` is `w_k`.
    closed: Vec<FuncRep>,
    domain: Interval,
    positivity: Interval,
    cfg: QuadConfig,
}

/// A weight `w` anchored at `α`, with its iterated antiderivatives
/// `w_k(x) = ∫_α^x w_{k-1}(t) dt`, `w_0 = w`.
///
/// Integrals are oriented: for `α = +∞` the iterated weights pick up signs,
/// e.g. `w = e^{-t}` gives `w_k = (-1)^k e^{-x}`.
#[derive(Clone)]
pub struct Weight {
    inner: Arc<Inner>,
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Weight")
            .field("name", &self.inner.name)
            .field("alpha", &self.inner.alpha)
            .field("closed_levels", &self.inner.closed.len())
            .finish()
    }
}

fn expr<F>(domain: Interval, f: F) -> FuncRep
where
    F: Fn(&Jet) -> Result<Jet> + Send + Sync + 'static,
{
    FuncRep::from_expr(domain, f)
}

impl Weight {
    fn build(
        name: impl Into<String>,
        w: FuncRep,
        alpha: Bound,
        closed: Vec<FuncRep>,
        domain: Interval,
        positivity: Interval,
    ) -> Self {
        Self {
            inner: Arc::new(Inner {
                name: name.into(),
                w,
                alpha,
                closed,
                domain,
                positivity,
                cfg: QuadConfig::default(),
            }),
        }
    }

    /// A weight whose iterated antiderivatives are computed numerically.
    pub fn custom(name: impl Into<String>, w: FuncRep, alpha: Bound, positivity: Interval) -> Self {
        let domain = w.domain();
        Self::build(name, w, alpha, Vec::new(), domain, positivity)
    }

    /// A weight with caller-supplied closed forms `[w_1, w_2, ...]`.
    pub fn with_closed_forms(
        name: impl Into<String>,
        w: FuncRep,
        alpha: Bound,
        closed: Vec<FuncRep>,
        positivity: Interval,
    ) -> Self {
        let domain = w.domain();
        Self::build(name, w, alpha, closed, domain, positivity)
    }

    /// `w ≡ 1`, `α = 0`: `w_k = x^k / k!`.
    pub fn constant() -> Self {
        let closed = (1..=CLOSED_LEVELS)
            .map(|k| {
                let fact: f64 = (1..=k).map(|j| j as f64).product();
                expr(Interval::REAL, move |x| Ok(x.powi(k as i32)?.scale(1.0 / fact)))
            })
            .collect();
        Self::build("1", FuncRep::constant(1.0), Bound::Finite(0.0), closed, Interval::REAL, Interval::POSITIVE)
    }

    /// `w = t^p` on `t > 0`, `α = 0`, `p > -1`: `w_k = x^{p+k} / ((p+1)...(p+k))`.
    pub fn power(p: f64) -> Self {
        assert!(p > -1.0 && p.is_finite(), "power weight needs p > -1, got {p}");
        let closed = (1..=CLOSED_LEVELS)
            .map(|k| {
                let denom: f64 = (1..=k).map(|j| p + j as f64).product();
                expr(Interval::POSITIVE, move |x| Ok(x.powf(p + k as f64)?.scale(1.0 / denom)))
            })
            .collect();
        Self::build(
            format!("t^{p}"),
            expr(Interval::POSITIVE, move |x| x.powf(p)),
            Bound::Finite(0.0),
            closed,
            Interval::POSITIVE,
            Interval::POSITIVE,
        )
    }

    /// `w = e^{-t}`, `α = +∞`: `w_k = (-1)^k e^{-x}`.
    pub fn exp_decay() -> Self {
        let closed = (1..=CLOSED_LEVELS)
            .map(|k| {
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                expr(Interval::REAL, move |x| Ok(x.scale(-1.0).exp()?.scale(sign)))
            })
            .collect();
        Self::build(
            "e^-t",
            expr(Interval::REAL, |x| x.scale(-1.0).exp()),
            Bound::PosInf,
            closed,
            Interval::REAL,
            Interval::REAL,
        )
    }

    /// `w = e^{t}`, `α = -∞`: `w_k = e^{x}`.
    pub fn exp_growth() -> Self {
        let closed = (1..=CLOSED_LEVELS).map(|_| expr(Interval::REAL, |x| x.exp())).collect();
        Self::build("e^t", expr(Interval::REAL, |x| x.exp()), Bound::NegInf, closed, Interval::REAL, Interval::REAL)
    }

    /// `w = t e^{-t²/2}`, `α = -∞`: `w_1 = -e^{-x²/2}`,
    /// `w_2 = -√(π/2) (1 + erf(x/√2))`; higher levels are numeric.
    pub fn gaussian_moment() -> Self {
        let half_sq = |x: &Jet| (x * x).scale(-0.5);
        let w1 = expr(Interval::REAL, move |x| Ok(half_sq(x).exp()?.scale(-1.0)));
        let w2 = expr(Interval::REAL, |x| {
            let e = x.scale(1.0 / 2f64.sqrt()).erf()?;
            Ok(e.add_scalar(1.0).scale(-(PI / 2.0).sqrt()))
        });
        Self::build(
            "t e^{-t^2/2}",
            expr(Interval::REAL, move |x| x.try_mul(&half_sq(x).exp()?)),
            Bound::NegInf,
            vec![w1, w2],
            Interval::REAL,
            Interval::POSITIVE,
        )
    }

    /// Copy of this weight using `cfg` for every quadrature it triggers.
    pub fn with_quad_config(&self, cfg: QuadConfig) -> Self {
        let i = &self.inner;
        Self {
            inner: Arc::new(Inner {
                name: i.name.clone(),
                w: i.w.clone(),
                alpha: i.alpha,
                closed: i.closed.clone(),
                domain: i.domain,
                positivity: i.positivity,
                cfg,
            }),
        }
    }

    pub fn name(&self) -> &str {
        &self.inner.name
    }

    pub fn w(&self) -> &FuncRep {
        &self.inner.w
    }

    pub fn alpha(&self) -> Bound {
        self.inner.alpha
    }

    pub fn domain(&self) -> Interval {
        self.inner.domain
    }

    pub fn positivity_domain(&self) -> Interval {
        self.inner.positivity
    }

    pub fn quad_config(&self) -> &QuadConfig {
        &self.inner.cfg
    }

    /// Number of iterated weights available in closed form.
    pub fn closed_levels(&self) -> usize {
        self.inner.closed.len()
    }

    fn check_x(&self, x: f64) -> Result<()> {
        if self.inner.domain.contains(x) {
            Ok(())
        } else {
            Err(Error::Domain(format!("x = {x} outside weight domain {}", self.inner.domain)))
        }
    }

    /// `w_k(x) = (1/(k-1)!) ∫_α^x (x-t)^{k-1} w(t) dt`.
    fn numeric_wk(&self, k: usize, x: f64) -> Result<f64> {
        if k > MAX_NUMERIC_LEVEL {
            return Err(Error::Unsupported(format!(
                "iterated weight level {k} above {MAX_NUMERIC_LEVEL} without a closed form"
            )));
        }
        let fact: f64 = (1..k).map(|j| j as f64).product();
        let w = &self.inner.w;
        let r = try_integrate(
            |t| Ok((x - t).powi(k as i32 - 1) * w.value(t)?),
            self.inner.alpha,
            Bound::Finite(x),
            &self.inner.cfg,
        )?;
        Ok(r.value / fact)
    }

    /// `w_k(x)`; `w_0 = w`.
    pub fn weight_wk(&self, k: usize, x: f64) -> Result<f64> {
        self.check_x(x)?;
        match k {
            0 => self.inner.w.value(x),
            _ if k <= self.inner.closed.len() => self.inner.closed[k - 1].value(x),
            _ => self.numeric_wk(k, x),
        }
    }

    /// Jet of `w_k` at `x`. Above the closed forms the jet is the
    /// antiderivative of the `w_{k-1}` jet, anchored at the numeric value.
    pub fn wk_jet(&self, k: usize, x: f64, order: usize) -> Result<Jet> {
        self.check_x(x)?;
        if k == 0 {
            return self.inner.w.eval_jet(x, order);
        }
        if k <= self.inner.closed.len() {
            return self.inner.closed[k - 1].eval_jet(x, order);
        }
        let value = self.numeric_wk(k, x)?;
        if order == 0 {
            return Jet::constant(x, value, 0);
        }
        self.wk_jet(k - 1, x, order - 1)?.antiderivative(value)
    }

    /// `w_k` as a function representation.
    pub fn wk_rep(&self, k: usize) -> FuncRep {
        let me = self.clone();
        FuncRep::new(self.inner.domain, move |x, order| me.wk_jet(k, x, order))
    }

    /// `r_k(x) = w_k(x)² / (w_{k-1}(x) w_{k+1}(x))`, `k >= 1`.
    pub fn ratio_rk(&self, k: usize, x: f64) -> Result<f64> {
        Ok(self.ratio_jet(k, x, 0)?.value())
    }

    /// Jet of `r_k` at `x`.
    pub fn ratio_jet(&self, k: usize, x: f64, order: usize) -> Result<Jet> {
        if k == 0 {
            return Err(Error::InvalidParam("r_k is defined for k >= 1".into()));
        }
        let prev = self.wk_jet(k - 1, x, order)?;
        let cur = self.wk_jet(k, x, order)?;
        let next = self.wk_jet(k + 1, x, order)?;
        if prev.value() == 0.0 || next.value() == 0.0 {
            return Err(Error::SingularPoint(format!("r_{k}({x}) has a vanishing denominator")));
        }
        cur.try_mul(&cur)?.div(&prev.try_mul(&next)?)
    }

    /// Jet of `w_1 / w` at `x`.
    pub fn w1_over_w_jet(&self, x: f64, order: usize) -> Result<Jet> {
        let w = self.wk_jet(0, x, order)?;
        if w.value() == 0.0 {
            return Err(Error::SingularPoint(format!("w({x}) = 0")));
        }
        self.wk_jet(1, x, order)?.div(&w)
    }

    /// The weight `w_k` with the same anchor; its own iterated weights are
    /// `w_{k+j}`.
    pub fn iterated(&self, k: usize) -> Self {
        if k == 0 {
            return self.clone();
        }
        let i = &self.inner;
        let base = self.clone();
        let closed = (k + 1..=k + CLOSED_LEVELS).map(|j| base.wk_rep(j)).collect();
        Self {
            inner: Arc::new(Inner {
                name: format!("({})_{k}", i.name),
                w: self.wk_rep(k),
                alpha: i.alpha,
                closed,
                domain: i.domain,
                positivity: i.positivity,
                cfg: i.cfg,
            }),
        }
    }
}
