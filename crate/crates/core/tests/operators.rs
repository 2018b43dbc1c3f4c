//! Operator behaviour at hand-checkable points.

use approx::assert_relative_eq;
use hardy_calculus::functions;
use hardy_calculus::operators::{
    diff_identity_residuals, hardy, quasi_diff, thm1_residual, thm2_residual, weighted_diff, FuncRep, Interval, Weight,
};
use hardy_calculus::Error;

fn tiny(lhs: f64, rhs: f64, tol: f64) -> bool {
    (lhs - rhs).abs() <= tol * (1.0 + lhs.abs().max(rhs.abs()))
}

#[test]
fn iterated_weights_and_ratios() {
    let unit = Weight::constant();
    assert_relative_eq!(unit.weight_wk(2, 3.0).unwrap(), 4.5, max_relative = 1e-12);
    assert_relative_eq!(unit.ratio_rk(2, 0.7).unwrap(), 1.5, max_relative = 1e-12);
    let decay = Weight::exp_decay();
    for k in 0..4 {
        assert_relative_eq!(decay.weight_wk(k, 0.0).unwrap().abs(), 1.0, max_relative = 1e-10);
    }
    assert_relative_eq!(decay.ratio_rk(2, 1.3).unwrap(), 1.0, max_relative = 1e-10);
}

#[test]
fn hardy_mean_of_identity() {
    let t = functions::polynomial(vec![0.0, 1.0]);
    assert_relative_eq!(hardy(&Weight::constant(), &t).value(2.0).unwrap(), 1.0, max_relative = 1e-12);
}

#[test]
fn euler_operator_and_quasi_derivative() {
    let sq = functions::polynomial(vec![0.0, 0.0, 1.0]);
    let w = Weight::constant();
    assert_relative_eq!(weighted_diff(&w, &sq, 2).unwrap().value(1.5).unwrap(), 9.0, max_relative = 1e-12);
    assert_relative_eq!(quasi_diff(&w, &sq, 1).unwrap().value(1.0).unwrap(), 4.0, max_relative = 1e-12);
}

#[test]
fn order_zero_is_rejected() {
    let w = Weight::constant();
    assert!(matches!(weighted_diff(&w, &functions::exp(), 0), Err(Error::InvalidParam(_))));
    assert!(matches!(thm2_residual(&w, &functions::exp(), 0, 1.0), Err(Error::InvalidParam(_))));
}

#[test]
fn commutation_examples() {
    let cases = [
        (Weight::constant(), functions::exp(), 1, 1.0),
        (Weight::power(2.0), functions::sin(), 2, 0.7),
        (Weight::power(1.5), functions::exp_neg(), 3, 2.0),
    ];
    for (w, h, k, x) in cases {
        let r = thm1_residual(&w, &h, k, x).unwrap();
        assert!(tiny(r.lhs, r.rhs, 1e-8), "{} k={k} x={x}: {r:?}", w.name());
    }
}

#[test]
fn quasi_differential_examples() {
    let cases = [
        (Weight::constant(), functions::legendre_kernel(2), 2, 0.8),
        (Weight::constant(), functions::gaussian(1.0), 1, 1.0),
        (Weight::exp_decay(), functions::power(3.0), 2, 1.5),
    ];
    for (w, h, k, x) in cases {
        let r = thm2_residual(&w, &h, k, x).unwrap();
        assert!(tiny(r.lhs, r.rhs, 1e-7), "{} k={k} x={x}: {r:?}", w.name());
    }
}

#[test]
fn differential_identities_match_polynomial_expansion() {
    let w = Weight::constant();
    for (w, h, k, x) in [
        (w.clone(), functions::exp(), 1, 1.0),
        (Weight::power(3.0), functions::cos(), 2, 0.5),
        (w.clone(), functions::polynomial(vec![0.0, 0.0, 0.0, 1.0]), 2, 2.0),
    ] {
        let (a, b) = diff_identity_residuals(&w, &h, k, x).unwrap();
        assert!(a.within(1e-8) && b.within(1e-8), "{} k={k} x={x}: {a:?} {b:?}", w.name());
    }
    // H(t³) = x³/4 and (x d/dx)² x³/4 = 9x³/4, so d/dx(x · 9x³/4) = 9x³ = 72 at 2;
    // w₂ (x³)'' = (x²/2)(6x) = 3x³ = 24 at 2
    let cube = functions::polynomial(vec![0.0, 0.0, 0.0, 1.0]);
    let d = weighted_diff(&w, &hardy(&w, &cube), 2).unwrap();
    assert_relative_eq!(d.value(2.0).unwrap(), 18.0, max_relative = 1e-10);
    let (a, b) = diff_identity_residuals(&w, &cube, 2, 2.0).unwrap();
    assert_relative_eq!(a.lhs, 72.0, max_relative = 1e-10);
    assert_relative_eq!(a.rhs, 72.0, max_relative = 1e-10);
    assert_relative_eq!(b.lhs, 24.0, max_relative = 1e-10);
    assert_relative_eq!(b.rhs, 24.0, max_relative = 1e-10);
}

#[test]
fn numerator_derivative_recovers_integrand() {
    let weights = [Weight::constant(), Weight::power(2.0), Weight::power(1.5), Weight::exp_decay()];
    let fs = [functions::sin(), functions::gaussian(1.0), functions::polynomial(vec![1.0, 0.0, 0.0, 1.0])];
    for w in &weights {
        for f in &fs {
            let avg = hardy(w, f);
            for x in [0.5, 1.0, 3.0] {
                let num = w.wk_jet(1, x, 1).unwrap().try_mul(&avg.eval_jet(x, 1).unwrap()).unwrap();
                let target = w.w().value(x).unwrap() * f.value(x).unwrap();
                assert_relative_eq!(num.deriv(1), target, max_relative = 1e-8, epsilon = 1e-12);
            }
        }
    }
}

#[test]
fn domains_are_enforced() {
    let f = FuncRep::from_expr(Interval::new(0.0, f64::INFINITY).unwrap(), |t| t.ln());
    assert!(f.value(-1.0).is_err());
    assert!(hardy(&Weight::power(2.0), &functions::sin()).value(-1.0).is_err());
}
