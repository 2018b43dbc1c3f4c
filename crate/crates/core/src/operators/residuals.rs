use super::funcrep::FuncRep;
use super::ops::{hardy, quasi_diff, weighted_diff};
use super::weight::Weight;
use crate::error::{Error, Result};
use crate::quad::{try_integrate, Bound};

/// Two evaluations of sides that agree in exact arithmetic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Residual {
    pub lhs: f64,
    pub rhs: f64,
}

impl Residual {
    pub fn residual(&self) -> f64 {
        self.lhs - self.rhs
    }

    pub fn scale(&self) -> f64 {
        self.lhs.abs().max(self.rhs.abs())
    }

    /// `|lhs - rhs| <= rel_tol (1 + scale)`.
    pub fn within(&self, rel_tol: f64) -> bool {
        self.residual().abs() <= rel_tol * (1.0 + self.scale())
    }
}

/// `D_k^w (H_w h)(x)`.
pub fn thm1_lhs(weight: &Weight, h: &FuncRep, k: usize, x: f64) -> Result<f64> {
    weighted_diff(weight, &hardy(weight, h), k)?.value(x)
}

/// `H_w (D_k^w h)(x)`.
pub fn thm1_rhs(weight: &Weight, h: &FuncRep, k: usize, x: f64) -> Result<f64> {
    hardy(weight, &weighted_diff(weight, h, k)?).value(x)
}

/// `D_k^w (H_w h)(x)` against `H_w (D_k^w h)(x)`.
pub fn thm1_residual(weight: &Weight, h: &FuncRep, k: usize, x: f64) -> Result<Residual> {
    Ok(Residual { lhs: thm1_lhs(weight, h, k, x)?, rhs: thm1_rhs(weight, h, k, x)? })
}

/// `R_k (H_w h)(x)`.
pub fn thm2_lhs(weight: &Weight, h: &FuncRep, k: usize, x: f64) -> Result<f64> {
    quasi_diff(weight, &hardy(weight, h), k)?.value(x)
}

/// `(1/w_{k+1}(x)) ∫_α^x w_k(t) h^{(k)}(t) dt`, i.e. `H_{w_k} D_k h` up to
/// the normalisation of `w_k`.
pub fn thm2_rhs(weight: &Weight, h: &FuncRep, k: usize, x: f64) -> Result<f64> {
    if k == 0 {
        return Err(Error::InvalidParam("operator order k must be at least 1".into()));
    }
    let wk1 = weight.weight_wk(k + 1, x)?;
    if wk1 == 0.0 {
        return Err(Error::SingularPoint(format!("w_{}({x}) = 0", k + 1)));
    }
    let hk = h.nth_derivative(k);
    let integral = try_integrate(
        |t| {
            let wk = weight.weight_wk(k, t)?;
            if wk == 0.0 {
                return Ok(0.0);
            }
            Ok(wk * hk.value(t)?)
        },
        weight.alpha(),
        Bound::Finite(x),
        weight.quad_config(),
    )?;
    Ok(integral.value / wk1)
}

/// `R_k (H_w h)(x)` against `(1/w_{k+1}(x)) ∫_α^x w_k(t) h^{(k)}(t) dt`.
pub fn thm2_residual(weight: &Weight, h: &FuncRep, k: usize, x: f64) -> Result<Residual> {
    Ok(Residual { lhs: thm2_lhs(weight, h, k, x)?, rhs: thm2_rhs(weight, h, k, x)? })
}

/// The two commutation identities in differentiated form:
///
/// - `d/dx(w_1 D_k^w H_w h) = w D_k^w((1/w) d/dx(w_1 H_w h))`
/// - `d/dx(w_{k+1} R_k H_w h) = w_k d^k/dx^k((1/w) d/dx(w_1 H_w h))`
pub fn diff_identity_residuals(weight: &Weight, h: &FuncRep, k: usize, x: f64) -> Result<(Residual, Residual)> {
    let w = weight.w();
    let hh = hardy(weight, h);
    let inner = weight.wk_rep(1).mul(&hh).derivative().div(w);

    let lhs1 = weight.wk_rep(1).mul(&weighted_diff(weight, &hh, k)?).derivative().value(x)?;
    let rhs1 = w.mul(&weighted_diff(weight, &inner, k)?).value(x)?;

    let lhs2 = weight.wk_rep(k + 1).mul(&quasi_diff(weight, &hh, k)?).derivative().value(x)?;
    let rhs2 = weight.wk_rep(k).mul(&inner.nth_derivative(k)).value(x)?;

    Ok((Residual { lhs: lhs1, rhs: rhs1 }, Residual { lhs: lhs2, rhs: rhs2 }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::Interval;

    fn exp() -> FuncRep {
        FuncRep::from_expr(Interval::REAL, |x| x.exp())
    }

    #[test]
    fn commutation_examples() {
        let sin = FuncRep::from_expr(Interval::REAL, |x| x.sin());
        let en = FuncRep::from_expr(Interval::REAL, |x| x.scale(-1.0).exp());
        let cases =
            [(Weight::constant(), exp(), 1, 1.0), (Weight::power(2.0), sin, 2, 0.7), (Weight::power(1.5), en, 3, 2.0)];
        for (w, h, k, x) in cases {
            let r = thm1_residual(&w, &h, k, x).unwrap();
            assert!(r.residual().abs() <= 1e-8 * (1.0 + r.scale()), "{w:?} k={k}: {r:?}");
        }
    }

    #[test]
    fn quasi_commutation_examples() {
        let rod = FuncRep::from_expr(Interval::REAL, |x| (x * x).add_scalar(-1.0).powi(2));
        let gauss = FuncRep::from_expr(Interval::REAL, |x| (x * x).scale(-1.0).exp());
        let pw = FuncRep::from_expr(Interval::POSITIVE, |x| x.powi(3));
        let cases =
            [(Weight::constant(), rod, 2, 0.8), (Weight::constant(), gauss, 1, 1.0), (Weight::exp_decay(), pw, 2, 1.5)];
        for (w, h, k, x) in cases {
            let r = thm2_residual(&w, &h, k, x).unwrap();
            assert!(r.within(1e-7), "{w:?} k={k}: {r:?}");
        }
    }

    #[test]
    fn orientation_conventions() {
        // w = e^{-t}, α = +∞. Oriented w_k = (-1)^k e^{-x} with ∫_α^x agrees
        // with unsigned w_k = e^{-x} paired with ∫_x^∞ throughout; unsigned
        // weights paired with the oriented integral flip the right side.
        let h = FuncRep::from_expr(Interval::POSITIVE, |x| x.powi(3));
        let cfg = crate::quad::QuadConfig::default();
        let x = 1.5f64;
        for k in 1..=3 {
            let signed = thm2_residual(&Weight::exp_decay(), &h, k, x).unwrap();
            assert!(signed.within(1e-9), "{signed:?}");
            let hk = h.nth_derivative(k);
            let tail =
                crate::quad::try_integrate(|t| Ok((-t).exp() * hk.value(t)?), Bound::Finite(x), Bound::PosInf, &cfg)
                    .unwrap()
                    .value;
            let reversed = Residual { lhs: signed.lhs, rhs: tail / (-x).exp() };
            assert!(reversed.within(1e-9), "{reversed:?}");
            let mixed = Residual { lhs: signed.lhs, rhs: -tail / (-x).exp() };
            assert!(!mixed.within(1e-3), "{mixed:?}");
        }
    }

    #[test]
    fn differential_identities() {
        let cos = FuncRep::from_expr(Interval::REAL, |x| x.cos());
        let cubic = FuncRep::from_expr(Interval::REAL, |x| x.powi(3));
        let cases = [
            (Weight::constant(), exp(), 1, 1.0),
            (Weight::power(3.0), cos, 2, 0.5),
            (Weight::constant(), cubic.clone(), 2, 2.0),
        ];
        for (w, h, k, x) in cases {
            let (a, b) = diff_identity_residuals(&w, &h, k, x).unwrap();
            assert!(a.within(1e-7), "{a:?}");
            assert!(b.within(1e-7), "{b:?}");
        }
        // hand expansion for h = t³, w ≡ 1, k = 2: H h = x³/4, D_2^w H h = 9x³/4,
        // first display = 9x³; R_2 H h = 3 (x³/4)'' = 9x/2, w_3 R_2 H h = 3x⁴/4,
        // second display = 3x³
        let (a, b) = diff_identity_residuals(&Weight::constant(), &cubic, 2, 2.0).unwrap();
        assert!((a.lhs - 72.0).abs() < 1e-9 && (a.rhs - 72.0).abs() < 1e-9, "{a:?}");
        assert!((b.lhs - 24.0).abs() < 1e-9 && (b.rhs - 24.0).abs() < 1e-9, "{b:?}");
    }
}
