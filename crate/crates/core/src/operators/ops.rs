use super::funcrep::FuncRep;
use super::weight::Weight;
use crate::error::{Error, Result};
use crate::jet::{Jet, MAX_ORDER};
use crate::quad::{try_integrate, Bound};

fn need_order(order: usize, extra: usize) -> Result<usize> {
    let need = order + extra;
    if need > MAX_ORDER {
        Err(Error::InsufficientOrder { need, have: MAX_ORDER })
    } else {
        Ok(need)
    }
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        Err(Error::InvalidParam("operator order k must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// `∫_α^x w(t) h(t) dt` by quadrature.
pub fn weighted_integral(weight: &Weight, h: &FuncRep, x: f64) -> Result<f64> {
    let w = weight.w();
    let r = try_integrate(
        |t| {
            // an underflowed weight contributes nothing, even where h overflows
            let wt = w.value(t)?;
            if wt == 0.0 {
                return Ok(0.0);
            }
            Ok(wt * h.value(t)?)
        },
        weight.alpha(),
        Bound::Finite(x),
        weight.quad_config(),
    )?;
    Ok(r.value)
}

/// `H_w h(x) = (1/w_1(x)) ∫_α^x w(t) h(t) dt`.
///
/// Only the value of the numerator comes from quadrature; its higher
/// coefficients are those of the `w h` jet shifted by one, since the
/// numerator's derivative is `w h`.
pub fn hardy(weight: &Weight, h: &FuncRep) -> FuncRep {
    let (wt, h) = (weight.clone(), h.clone());
    let domain = weight.domain().intersect(&h.domain());
    FuncRep::new(domain, move |x, order| {
        let w1 = wt.wk_jet(1, x, order)?;
        if w1.value() == 0.0 {
            return Err(Error::SingularPoint(format!("w_1({x}) = 0")));
        }
        let n0 = weighted_integral(&wt, &h, x)?;
        let numer = if order == 0 {
            Jet::constant(x, n0, 0)?
        } else {
            let wh = wt.wk_jet(0, x, order - 1)?.try_mul(&h.eval_jet(x, order - 1)?)?;
            wh.antiderivative(n0)?
        };
        numer.div(&w1)
    })
}

/// `D_k^w f = ((w_1/w) d/dx)^k f`. A jet of order `m` reads `f` at order
/// `m + k` and nothing higher.
pub fn weighted_diff(weight: &Weight, f: &FuncRep, k: usize) -> Result<FuncRep> {
    check_k(k)?;
    let (wt, f) = (weight.clone(), f.clone());
    let domain = weight.domain().intersect(&f.domain());
    Ok(FuncRep::new(domain, move |x, order| {
        let top = need_order(order, k)?;
        let q = wt.w1_over_w_jet(x, top - 1)?;
        let mut cur = f.eval_jet(x, top)?;
        for _ in 0..k {
            let d = cur.derivative()?;
            cur = d.try_mul(&q.truncate(d.order())?)?;
        }
        Ok(cur)
    }))
}

/// `R_k f = r_k d/dx(r_{k-1} d/dx(... r_1 d/dx f))`.
pub fn quasi_diff(weight: &Weight, f: &FuncRep, k: usize) -> Result<FuncRep> {
    check_k(k)?;
    let (wt, f) = (weight.clone(), f.clone());
    let domain = weight.domain().intersect(&f.domain());
    Ok(FuncRep::new(domain, move |x, order| {
        let top = need_order(order, k)?;
        let mut cur = f.eval_jet(x, top)?;
        for i in 1..=k {
            let d = cur.derivative()?;
            cur = d.try_mul(&wt.ratio_jet(i, x, d.order())?)?;
        }
        Ok(cur)
    }))
}

/// `A f = f + (w_1/w) f'`, the inverse of `H_w`.
pub fn inverse_op(weight: &Weight, f: &FuncRep) -> FuncRep {
    let (wt, f) = (weight.clone(), f.clone());
    let domain = weight.domain().intersect(&f.domain());
    FuncRep::new(domain, move |x, order| {
        let g = f.eval_jet(x, need_order(order, 1)?)?;
        let q = wt.w1_over_w_jet(x, order)?;
        Ok(&g.truncate(order)? + &g.derivative()?.try_mul(&q)?)
    })
}

/// `C f(x) = e^{-x} ∫_{-∞}^x e^t f(t) dt`.
pub fn conj_c(f: &FuncRep) -> FuncRep {
    hardy(&Weight::exp_growth(), f)
}

/// As [`conj_c`] but with an explicit quadrature configuration.
pub fn conj_c_with(f: &FuncRep, cfg: crate::quad::QuadConfig) -> FuncRep {
    hardy(&Weight::exp_growth().with_quad_config(cfg), f)
}

/// `L f(x) = f(ln w_1(x))`, defined where `w_1 > 0`.
pub fn conj_l(weight: &Weight, f: &FuncRep) -> FuncRep {
    let (wt, f) = (weight.clone(), f.clone());
    FuncRep::new(weight.domain(), move |x, order| {
        let w1 = wt.wk_jet(1, x, order)?;
        if !(w1.value() > 0.0) {
            return Err(Error::Domain(format!("L needs w_1(x) > 0, got w_1({x}) = {}", w1.value())));
        }
        let inner = w1.ln()?;
        let outer = f.eval_jet(inner.value(), order)?;
        inner.compose_series(&outer)
    })
}
