use std::f64::consts::{E, PI};

use num_complex::Complex64;

use super::{
    Eval, EvalCtx, Form, IdentityCase, ParamName, ParamSpec, Params, DEFAULT_ABS_TOL, DEFAULT_REL_TOL, GRID_FINITE,
    GRID_IMPROPER,
};
use crate::ddouble::DD;
use crate::error::{Error, Result};
use crate::functions;
use crate::jet::Jet;
use crate::operators::{hardy, thm1_lhs, thm1_rhs, thm2_lhs, thm2_rhs, weighted_diff, FuncRep, Interval, Weight};
use crate::quad::{try_integrate, Bound};
use crate::specfun::{
    bell_poly, binomial, digamma, erf_complex, erf_real, factorial, falling_factorial, hermite, laguerre, legendre,
    lower_inc_gamma, perm_coeff, polygamma, sph_bessel_j, sph_bessel_jet, sph_bessel_scaled, stirling2,
    upper_inc_gamma,
};

use ParamName::{Loc, Sigma, A, K, M, N};

fn ok(v: f64) -> Result<Eval> {
    Ok(v.into())
}

fn always(_: &Params) -> bool {
    true
}

fn k_positive(p: &Params) -> bool {
    p.k >= 1
}

fn quad(f: impl Fn(f64) -> Result<f64>, lo: Bound, hi: f64, ctx: &EvalCtx) -> Result<f64> {
    Ok(try_integrate(f, lo, Bound::Finite(hi), &ctx.quad)?.value)
}

fn quad0(f: impl Fn(f64) -> Result<f64>, x: f64, ctx: &EvalCtx) -> Result<f64> {
    quad(f, Bound::Finite(0.0), x, ctx)
}

fn s2(n: u32, k: u32) -> Result<f64> {
    Ok(stirling2(n, k)? as f64)
}

fn fact(n: u32) -> Result<f64> {
    Ok(factorial(n)? as f64)
}

fn binom(n: u32, k: u32) -> Result<f64> {
    Ok(binomial(n, k)? as f64)
}

fn sign(n: u32) -> f64 {
    if n.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// `(x d/dx)^k f`, the weighted derivative of the unit weight anchored at 0.
fn x_ddx(f: &FuncRep, k: u32) -> Result<FuncRep> {
    if k == 0 {
        return Ok(f.clone());
    }
    weighted_diff(&Weight::constant(), f, k as usize)
}

fn unit(ctx: &EvalCtx) -> Weight {
    Weight::constant().with_quad_config(ctx.quad)
}

fn gauss_weight(ctx: &EvalCtx) -> Weight {
    Weight::gaussian_moment().with_quad_config(ctx.quad)
}

/// `(-1/x d/dx)^k f` evaluated at `x`.
fn minus_inv_x_ddx(f: &FuncRep, k: u32, x: f64, ctx: &EvalCtx) -> Result<f64> {
    if k == 0 {
        return f.value(x);
    }
    weighted_diff(&gauss_weight(ctx), f, k as usize)?.value(x)
}

// ---------------------------------------------------------------- ex1

fn ex1_base(a: f64) -> FuncRep {
    functions::power(-a).mul(&functions::lower_gamma(a))
}

fn ex1_lhs(p: &Params, x: f64, _: &EvalCtx) -> Result<Eval> {
    ok(x_ddx(&ex1_base(p.a), p.k)?.value(x)?)
}

fn ex1_rhs(p: &Params, x: f64, _: &EvalCtx) -> Result<Eval> {
    let mut s = 0.0;
    for i in 1..=p.k {
        let j = p.k - i + 1;
        s += sign(j) * s2(p.k, j)? * lower_inc_gamma(p.a + j as f64, x)?;
    }
    ok(x.powf(-p.a) * s)
}

fn ex1_k1_lhs(p: &Params, x: f64, _: &EvalCtx) -> Result<Eval> {
    ok(lower_inc_gamma(p.a + 1.0, x)?)
}

fn ex1_k1_rhs(p: &Params, x: f64, _: &EvalCtx) -> Result<Eval> {
    ok(p.a * lower_inc_gamma(p.a, x)? - x.powf(p.a) * (-x).exp())
}

fn ex1_k2_lhs(p: &Params, x: f64, _: &EvalCtx) -> Result<Eval> {
    ok(lower_inc_gamma(p.a + 2.0, x)?)
}

fn ex1_k2_rhs(p: &Params, x: f64, _: &EvalCtx) -> Result<Eval> {
    let a = p.a;
    ok(a * (a + 1.0) * lower_inc_gamma(a, x)? - (a + 1.0 + x) * x.powf(a) * (-x).exp())
}

fn ex1_thm_lhs(p: &Params, x: f64, ctx: &EvalCtx) -> Result<Eval> {
    let w = Weight::power(p.a - 1.0).with_quad_config(ctx.quad);
    ok(thm1_lhs(&w, &functions::exp_neg(), p.k as usize, x)?)
}

fn ex1_thm_rhs(p: &Params, x: f64, ctx: &EvalCtx) -> Result<Eval> {
    let w = Weight::power(p.a - 1.0).with_quad_config(ctx.quad);
    ok(thm1_rhs(&w, &functions::exp_neg(), p.k as usize, x)?)
}

fn ex1() -> IdentityCase {
    IdentityCase {
        id: "ex1-stirling-gamma",
        description: "(x d/dx)^k (x^-a γ(a,x)) = x^-a Σ_i (-1)^(k-i+1) S2(k,k-i+1) γ(a+k-i+1,x)",
        origin: "w(t) = t^(a-1), h(t) = e^-t, α = 0",
        params: vec![ParamSpec::new(A, 0.5, 6.0), ParamSpec::new(K, 1.0, 4.0)],
        constraint: None,
        defaults: vec![
            Params::default().with(A, 2.0).with(K, 1.0),
            Params::default().with(A, 2.0).with(K, 2.0),
            Params::default().with(A, 0.7).with(K, 3.0),
            Params::default().with(A, 3.5).with(K, 4.0),
        ],
        forms: vec![
            Form {
                label: "stirling-sum",
                description: "operator side by jets, sum side by incomplete gamma values",
                informational: false,
                applies: always,
                lhs: ex1_lhs,
                rhs: ex1_rhs,
            },
            Form {
                label: "special-k1",
                description: "γ(a+1,x) = a γ(a,x) - x^a e^-x",
                informational: false,
                applies: always,
                lhs: ex1_k1_lhs,
                rhs: ex1_k1_rhs,
            },
            Form {
                label: "special-k2",
                description: "γ(a+2,x) = a(a+1) γ(a,x) - (a+1+x) x^a e^-x",
                informational: false,
                applies: always,
                lhs: ex1_k2_lhs,
                rhs: ex1_k2_rhs,
            },
            Form {
                label: "commutation",
                description: "D_k^w H_w h = H_w D_k^w h",
                informational: false,
                applies: always,
                lhs: ex1_thm_lhs,
                rhs: ex1_thm_rhs,
            },
        ],
        x_grid: GRID_FINITE.to_vec(),
        rel_tol: DEFAULT_REL_TOL,
        abs_tol: DEFAULT_ABS_TOL,
    }
}

// ---------------------------------------------------------------- ex1 remark

fn rep_lhs(p: &Params, x: f64, _: &EvalCtx) -> Result<Eval> {
    ok(lower_inc_gamma(p.a + p.n as f64, x)?)
}

fn rep_rhs(p: &Params, x: f64, _: &EvalCtx) -> Result<Eval> {
    let d = ex1_base(p.a).eval_jet(x, p.n as usize)?.deriv(p.n as usize);
    ok(sign(p.n) * x.powf(p.a + p.n as f64) * d)
}

fn reexp_rhs(p: &Params, x: f64, _: &EvalCtx) -> Result<Eval> {
    let jet = ex1_base(p.a).eval_jet(x, p.k as usize)?;
    let mut s = 0.0;
    for i in 1..=p.k {
        let j = p.k - i + 1;
        s += s2(p.k, j)? * x.powi(j as i32) * jet.deriv(j as usize);
    }
    ok(s)
}

fn ex1_remark() -> IdentityCase {
    IdentityCase {
        id: "ex1-remark-gamma-rep",
        description: "γ(a+n,x) = (-1)^n x^(a+n) d^n/dx^n (x^-a γ(a,x)) and the Stirling re-expansion of (x d/dx)^k",
        origin: "w(t) = t^(a-1), h(t) = e^-t, α = 0 (derivative representation)",
        params: vec![ParamSpec::new(A, 0.5, 6.0), ParamSpec::new(N, 1.0, 6.0), ParamSpec::new(K, 1.0, 4.0)],
        constraint: None,
        defaults: vec![
            Params::default().with(A, 2.0).with(N, 1.0).with(K, 1.0),
            Params::default().with(A, 0.7).with(N, 2.0).with(K, 2.0),
            Params::default().with(A, 3.5).with(N, 4.0).with(K, 3.0),
            Params::default().with(A, 5.0).with(N, 6.0).with(K, 4.0),
        ],
        forms: vec![
            Form {
                label: "representation",
                description: "γ(a+n,x) against the n-th derivative of x^-a γ(a,x)",
                informational: false,
                applies: always,
                lhs: rep_lhs,
                rhs: rep_rhs,
            },
            Form {
                label: "stirling-reexpansion",
                description: "(x d/dx)^k f = Σ_i S2(k,k-i+1) x^(k-i+1) f^(k-i+1)",
                informational: false,
                applies: always,
                lhs: ex1_lhs,
                rhs: reexp_rhs,
            },
        ],
        x_grid: GRID_FINITE.to_vec(),
        rel_tol: DEFAULT_REL_TOL,
        abs_tol: DEFAULT_ABS_TOL,
    }
}

// ---------------------------------------------------------------- ex2

fn digamma_moment(n: u32, x: f64, ctx: &EvalCtx) -> Result<f64> {
    quad0(|t| Ok(t.powi(n as i32) * digamma(t)?), x, ctx)
}

fn ex2_lhs(p: &Params, x: f64, ctx: &EvalCtx) -> Result<Eval> {
    let (n, cx) = (p.n, *ctx);
    let numer = FuncRep::new(Interval::POSITIVE, move |x, order| {
        let v = digamma_moment(n, x, &cx)?;
        if order == 0 {
            return Jet::constant(x, v, 0);
        }
        let t = Jet::var(x, order - 1)?;
        let psi = functions::polygamma(0).eval_jet(x, order - 1)?;
        t.powi(n as i32)?.try_mul(&psi)?.antiderivative(v)
    });
    let f = functions::power(-(n as f64) - 1.0).mul(&numer);
    ok(x_ddx(&f, p.k)?.value(x)?)
}

fn ex2_rhs(p: &Params, x: f64, ctx: &EvalCtx) -> Result<Eval> {
    let mut s = 0.0;
    for i in 1..=p.k {
        let mom = quad0(|t| Ok(t.powi((p.n + i) as i32) * polygamma(i, t)?), x, ctx)?;
        s += s2(p.k, i)? * mom;
    }
    ok(s / x.powi(p.n as i32 + 1))
}

fn ex2_k1_lhs(p: &Params, x: f64, ctx: &EvalCtx) -> Result<Eval> {
    ok(quad0(|t| Ok(t.powi(p.n as i32 + 1) * polygamma(1, t)?), x, ctx)?)
}

fn ex2_k1_rhs(p: &Params, x: f64, ctx: &EvalCtx) -> Result<Eval> {
    let n = p.n as i32;
    ok(x.powi(n + 1) * digamma(x)? - (n + 1) as f64 * digamma_moment(p.n, x, ctx)?)
}

fn ex2_thm_lhs(p: &Params, x: f64, ctx: &EvalCtx) -> Result<Eval> {
    let w = Weight::power(p.n as f64).with_quad_config(ctx.quad);
    ok(thm1_lhs(&w, &functions::polygamma(0), p.k as usize, x)?)
}

fn ex2_thm_rhs(p: &Params, x: f64, ctx: &EvalCtx) -> Result<Eval> {
    let w = Weight::power(p.n as f64).with_quad_config(ctx.quad);
    ok(thm1_rhs(&w, &functions::polygamma(0), p.k as usize, x)?)
}

fn ex2() -> IdentityCase {
    IdentityCase {
        id: "ex2-polygamma",
        description: "(x d/dx)^k (x^-(n+1) ∫_0^x t^n ψ_0) = x^-(n+1) Σ_i S2(k,i) ∫_0^x t^(n+i) ψ_i",
        origin: "w(t) = t^n, h(t) = ψ_0(t), α = 0",
        params: vec![ParamSpec::new(N, 1.0, 6.0), ParamSpec::new(K, 1.0, 4.0)],
        constraint: None,
        defaults: vec![
            Params::default().with(N, 1.0).with(K, 1.0),
            Params::default().with(N, 2.0).with(K, 2.0),
            Params::default().with(N, 1.0).with(K, 3.0),
            Params::default().with(N, 4.0).with(K, 4.0),
        ],
        forms: vec![
            Form {
                label: "stirling-sum",
                description: "operator side by jets, sum side by polygamma moments",
                informational: false,
                applies: always,
                lhs: ex2_lhs,
                rhs: ex2_rhs,
            },
            Form {
                label: "trigamma-moment",
                description: "∫_0^x t^(n+1) ψ_1 = x^(n+1) ψ_0(x) - (n+1) ∫_0^x t^n ψ_0",
                informational: false,
                applies: always,
                lhs: ex2_k1_lhs,
                rhs: ex2_k1_rhs,
            },
            Form {
                label: "commutation",
                description: "D_k^w H_w h = H_w D_k^w h",
                informational: false,
                applies: always,
                lhs: ex2_thm_lhs,
                rhs: ex2_thm_rhs,
            },
        ],
        x_grid: GRID_FINITE.to_vec(),
        rel_tol: DEFAULT_REL_TOL,
        abs_tol: DEFAULT_ABS_TOL,
    }
}

// ---------------------------------------------------------------- ex3

fn ex3_lhs(p: &Params, x: f64, ctx: &EvalCtx) -> Result<Eval> {
    let w = Weight::power(p.m as f64).with_quad_config(ctx.quad);
    // H_w carries a factor m+1
    let avg = hardy(&w, &functions::bell_dobinski(p.n)).scale(1.0 / (p.m as f64 + 1.0));
    ok(x_ddx(&avg, p.k)?.value(x)?)
}

fn ex3_rhs(p: &Params, x: f64, _: &EvalCtx) -> Result<Eval> {
    let mut s = 0.0;
    for i in 1..=p.n {
        s += (i as f64).powi(p.k as i32) / (p.m + i + 1) as f64 * s2(p.n, i)? * x.powi(i as i32);
    }
    ok(s)
}

fn ex3_special_lhs(p: &Params, x: f64, ctx: &EvalCtx) -> Result<Eval> {
    let b = functions::bell_dobinski(p.n);
    ok(quad0(|t| b.value(t), x, ctx)?)
}

fn bell_integral_rhs(n: u32, x: f64, extra_power: i32) -> Result<f64> {
    let mut s = 0.0;
    for i in 1..=n {
        s += i as f64 / (i + 1) as f64 * s2(n, i)? * x.powi(i as i32 + extra_power);
    }
    Ok(x * bell_poly(n, x)? - s)
}

fn ex3_special_rhs(p: &Params, x: f64, _: &EvalCtx) -> Result<Eval> {
    ok(bell_integral_rhs(p.n, x, 1)?)
}

fn ex3_special_verbatim(p: &Params, x: f64, _: &EvalCtx) -> Result<Eval> {
    ok(bell_integral_rhs(p.n, x, 0)?)
}

fn ex3_thm_lhs(p: &Params, x: f64, ctx: &EvalCtx) -> Result<Eval> {
    let w = Weight::power(p.m as f64).with_quad_config(ctx.quad);
    ok(thm1_lhs(&w, &functions::bell_dobinski(p.n), p.k as usize, x)?)
}

fn ex3_thm_rhs(p: &Params, x: f64, ctx: &EvalCtx) -> Result<Eval> {
    let w = Weight::power(p.m as f64).with_quad_config(ctx.quad);
    ok(thm1_rhs(&w, &functions::bell_dobinski(p.n), p.k as usize, x)?)
}

fn ex3() -> IdentityCase {
    IdentityCase {
        id: "ex3-bell",
        description: "(x d/dx)^k (x^-(m+1) ∫_0^x t^m B_n) = Σ_i i^k/(m+i+1) S2(n,i) x^i",
        origin: "w(t) = t^m, h(t) = B_n(t), α = 0",
        params: vec![ParamSpec::new(M, 0.0, 6.0), ParamSpec::new(N, 0.0, 6.0), ParamSpec::new(K, 1.0, 4.0)],
        constraint: None,
        defaults: vec![
            Params::default().with(M, 0.0).with(N, 3.0).with(K, 1.0),
            Params::default().with(M, 2.0).with(N, 4.0).with(K, 2.0),
            Params::default().with(M, 1.0).with(N, 0.0).with(K, 1.0),
            Params::default().with(M, 3.0).with(N, 6.0).with(K, 3.0),
        ],
        forms: vec![
            Form {
                label: "stirling-sum",
                description: "averaged Dobinski series by quadrature and jets against the Stirling sum",
                informational: false,
                applies: always,
                lhs: ex3_lhs,
                rhs: ex3_rhs,
            },
            Form {
                label: "bell-integral",
                description: "∫_0^x B_n = x B_n(x) - Σ_i i/(i+1) S2(n,i) x^(i+1)",
                informational: false,
                applies: always,
                lhs: ex3_special_lhs,
                rhs: ex3_special_rhs,
            },
            Form {
                label: "bell-integral-verbatim",
                description: "the same with x^i in the sum, as printed",
                informational: true,
                applies: always,
                lhs: ex3_special_lhs,
                rhs: ex3_special_verbatim,
            },
            Form {
                label: "commutation",
                description: "D_k^w H_w h = H_w D_k^w h",
                informational: false,
                applies: always,
                lhs: ex3_thm_lhs,
                rhs: ex3_thm_rhs,
            },
        ],
        x_grid: GRID_FINITE.to_vec(),
        rel_tol: DEFAULT_REL_TOL,
        abs_tol: DEFAULT_ABS_TOL,
    }
}

// ---------------------------------------------------------------- ex4

fn legendre_moment(p: &Params, x: f64, ctx: &EvalCtx) -> Result<Eval> {
    ok(quad0(|t| Ok(t.powi(p.k as i32) * legendre(p.k, t)), x, ctx)?)
}

fn legendre_prefactor(k: u32) -> Result<f64> {
    Ok(1.0 / (2f64.powi(k as i32) * fact(k)?))
}

fn ex4_rodrigues_rhs(p: &Params, x: f64, ctx: &EvalCtx) -> Result<Eval> {
    let k = p.k as usize;
    let avg = hardy(&unit(ctx), &functions::legendre_kernel(p.k));
    let d = avg.eval_jet(x, k)?.deriv(k);
    ok(x.powi(p.k as i32 + 1) * legendre_prefactor(p.k)? * d)
}

fn legendre_sum(k: u32, x: f64) -> Result<f64> {
    let mut s = 0.0;
    for i in 0..=k / 2 {
        let num = binom(k, i)? * fact(2 * (k - i))?;
        let den = (2 * (k - i) + 1) as f64 * fact(k - 2 * i)?;
        s += sign(i) * num / den * x.powi((k - 2 * i) as i32);
    }
    Ok(s * legendre_prefactor(k)?)
}

fn ex4_sum_rhs(p: &Params, x: f64, _: &EvalCtx) -> Result<Eval> {
    ok(x.powi(p.k as i32 + 1) * legendre_sum(p.k, x)?)
}

fn ex4_sum_verbatim(p: &Params, x: f64, _: &EvalCtx) -> Result<Eval> {
    ok(legendre_sum(p.k, x)?)
}

fn ex4_thm_lhs(p: &Params, x: f64, ctx: &EvalCtx) -> Result<Eval> {
    ok(thm2_lhs(&unit(ctx), &functions::legendre_kernel(p.k), p.k as usize, x)?)
}

fn ex4_thm_rhs(p: &Params, x: f64, ctx: &EvalCtx) -> Result<Eval> {
    ok(thm2_rhs(&unit(ctx), &functions::legendre_kernel(p.k), p.k as usize, x)?)
}

fn ex4() -> IdentityCase {
    IdentityCase {
        id: "ex4-legendre",
        description: "∫_0^x t^k P_k = (x^(k+1)/(2^k k!)) d^k/dx^k ((1/x) ∫_0^x (t²-1)^k) and its closed binomial sum",
        origin: "w(t) = 1, h(t) = (t²-1)^k, α = 0",
        params: vec![ParamSpec::new(K, 1.0, 4.0)],
        constraint: None,
        defaults: (1..=4).map(|k| Params::default().with(K, k as f64)).collect(),
        forms: vec![
            Form {
                label: "rodrigues",
                description: "Legendre moment by quadrature against k-th derivative of the average",
                informational: false,
                applies: always,
                lhs: legendre_moment,
                rhs: ex4_rodrigues_rhs,
            },
            Form {
                label: "closed-sum",
                description: "closed binomial sum carrying the factor x^(k+1)",
                informational: false,
                applies: always,
                lhs: legendre_moment,
                rhs: ex4_sum_rhs,
            },
            Form {
                label: "closed-sum-verbatim",
                description: "closed binomial sum as printed, without x^(k+1)",
                informational: true,
                applies: always,
                lhs: legendre_moment,
                rhs: ex4_sum_verbatim,
            },
            Form {
                label: "quasi-commutation",
                description: "R_k H_w h = (1/w_(k+1)) ∫ w_k h^(k)",
                informational: false,
                applies: always,
                lhs: ex4_thm_lhs,
                rhs: ex4_thm_rhs,
            },
        ],
        x_grid: GRID_FINITE.to_vec(),
        rel_tol: DEFAULT_REL_TOL,
        abs_tol: DEFAULT_ABS_TOL,
    }
}

// ---------------------------------------------------------------- ex5

fn hermite_moment(k: u32, x: f64, ctx: &EvalCtx) -> Result<f64> {
    quad0(|t| Ok(t.powi(k as i32) * hermite(k, t) * (-t * t).exp()), x, ctx)
}

fn ex5_lhs(p: &Params, x: f64, ctx: &EvalCtx) -> Result<Eval> {
    ok(functions::two_over_sqrt_pi() * hermite_moment(p.k, x, ctx)?)
}

fn ex5_rhs(p: &Params, x: f64, _: &EvalCtx) -> Result<Eval> {
    let k = p.k as usize;
    let f = FuncRep::from_expr(Interval::REAL, |t| t.erf()?.div(t));
    ok(sign(p.k) * x.powi(p.k as i32 + 1) * f.eval_jet(x, k)?.deriv(k))
}

/// `Σ_{2n >= k} (-1)^(n+k) (2n)! / ((2n+1) n! (2n-k)!) x^(2n) · x^shift`.
///
/// The terms grow to about `e^{x²}` before decaying, so the partial sums
/// are accumulated in double-double; `x²` is formed exactly for the same
/// reason. Stops once the alternating tail bound falls below `tail_tol`.
fn hermite_series(k: u32, x: f64, shift: i32, tail_tol: f64) -> Result<f64> {
    let x2 = DD::from_f64(x) * DD::from_f64(x);
    let n0 = k.div_ceil(2);
    let c0 = sign(n0 + k) * fact(2 * n0)? / ((2 * n0 + 1) as f64 * fact(n0)? * fact(2 * n0 - k)?);
    let mut term = DD::from_f64(c0);
    for _ in 0..n0 {
        term = term * x2;
    }
    let scale = x.powi(shift);
    let mut sum = DD::from_f64(0.0);
    for n in n0..n0 + 600 {
        sum = sum + term;
        let nf = n as f64;
        let kf = k as f64;
        let num = (2.0 * nf + 2.0) * (2.0 * nf + 1.0) * (2.0 * nf + 1.0);
        let den = (2.0 * nf + 3.0) * (nf + 1.0) * (2.0 * nf + 2.0 - kf) * (2.0 * nf + 1.0 - kf);
        let next = -(term * x2).mul_f64(num).div_f64(den);
        let shrinking = next.to_f64().abs() < 0.5 * term.to_f64().abs();
        term = next;
        if shrinking && nf > x * x && (term.to_f64() * scale).abs() < tail_tol {
            return Ok(sum.to_f64() * scale);
        }
    }
    Err(Error::OutOfRange(format!("Hermite moment series at x = {x} did not converge in 600 terms")))
}

fn ex5_series_lhs(p: &Params, x: f64, ctx: &EvalCtx) -> Result<Eval> {
    ok(hermite_moment(p.k, x, ctx)?)
}

fn ex5_series_rhs(p: &Params, x: f64, ctx: &EvalCtx) -> Result<Eval> {
    ok(hermite_series(p.k, x, 1, 0.1 * ctx.abs_tol)?)
}

fn ex5_series_verbatim(p: &Params, x: f64, ctx: &EvalCtx) -> Result<Eval> {
    ok(hermite_series(p.k, x, -(p.k as i32), 0.1 * ctx.abs_tol)?)
}

fn ex5_thm_lhs(p: &Params, x: f64, ctx: &EvalCtx) -> Result<Eval> {
    let h = functions::gaussian(functions::two_over_sqrt_pi());
    ok(thm2_lhs(&unit(ctx), &h, p.k as usize, x)?)
}

fn ex5_thm_rhs(p: &Params, x: f64, ctx: &EvalCtx) -> Result<Eval> {
    let h = functions::gaussian(functions::two_over_sqrt_pi());
    ok(thm2_rhs(&unit(ctx), &h, p.k as usize, x)?)
}

fn ex5() -> IdentityCase {
    IdentityCase {
        id: "ex5-hermite-erf",
        description: "(2/√π) ∫_0^x t^k H_k e^(-t²) = (-1)^k x^(k+1) d^k/dx^k (erf(x)/x) and its power series",
        origin: "w(t) = 1, h(t) = (2/√π) e^(-t²), α = 0",
        params: vec![ParamSpec::new(K, 0.0, 4.0)],
        constraint: None,
        defaults: (0..=4).map(|k| Params::default().with(K, k as f64)).collect(),
        forms: vec![
            Form {
                label: "erf-derivative",
                description: "Hermite moment by quadrature against jets of erf(x)/x",
                informational: false,
                applies: always,
                lhs: ex5_lhs,
                rhs: ex5_rhs,
            },
            Form {
                label: "power-series",
                description: "∫_0^x t^k H_k e^(-t²) against Σ_(2n>=k) (-1)^(n+k) (2n)!/((2n+1) n! (2n-k)!) x^(2n+1)",
                informational: false,
                applies: always,
                lhs: ex5_series_lhs,
                rhs: ex5_series_rhs,
            },
            Form {
                label: "power-series-verbatim",
                description: "the same series with x^(2n-k) as printed",
                informational: true,
                applies: always,
                lhs: ex5_series_lhs,
                rhs: ex5_series_verbatim,
            },
            Form {
                label: "quasi-commutation",
                description: "R_k H_w h = (1/w_(k+1)) ∫ w_k h^(k)",
                informational: false,
                applies: k_positive,
                lhs: ex5_thm_lhs,
                rhs: ex5_thm_rhs,
            },
        ],
        x_grid: GRID_FINITE.to_vec(),
        rel_tol: DEFAULT_REL_TOL,
        abs_tol: DEFAULT_ABS_TOL,
    }
}

// ---------------------------------------------------------------- ex6

fn laguerre_moment(p: &Params, x: f64, ctx: &EvalCtx) -> Result<Eval> {
    let k = p.k;
    ok(quad0(|t| Ok(t.powi(k as i32) * (-t).exp() * laguerre(k, t)), x, ctx)?)
}

fn ex6_rodrigues_rhs(p: &Params, x: f64, _: &EvalCtx) -> Result<Eval> {
    let k = p.k as usize;
    let f = functions::lower_gamma(p.k as f64 + 1.0).div(&functions::power(1.0));
    ok(x.powi(p.k as i32 + 1) / fact(p.k)? * f.eval_jet(x, k)?.deriv(k))
}

fn ex6_sum_rhs(p: &Params, x: f64, _: &EvalCtx) -> Result<Eval> {
    let k = p.k;
    let mut s = 0.0;
    for i in 0..=k {
        let top = k + i;
        let mut inner = 0.0;
        for j in 0..=top {
            inner += perm_coeff(top, j)? as f64 * x.powi((top - j) as i32);
        }
        s += sign(i + 1) / fact(i)? * binom(k, i)? * ((-x).exp() * inner - fact(top)?);
    }
    ok(s)
}

fn ex6_thm_lhs(p: &Params, x: f64, ctx: &EvalCtx) -> Result<Eval> {
    ok(thm2_lhs(&unit(ctx), &functions::laguerre_kernel(p.k), p.k as usize, x)?)
}

fn ex6_thm_rhs(p: &Params, x: f64, ctx: &EvalCtx) -> Result<Eval> {
    ok(thm2_rhs(&unit(ctx), &functions::laguerre_kernel(p.k), p.k as usize, x)?)
}

fn ex6() -> IdentityCase {
    IdentityCase {
        id: "ex6-laguerre",
        description: "∫_0^x t^k e^-t L_k = (x^(k+1)/k!) d^k/dx^k (γ(k+1,x)/x) and the closed T(n,j) sum",
        origin: "w(t) = 1, h(t) = t^k e^-t, α = 0",
        params: vec![ParamSpec::new(K, 0.0, 4.0)],
        constraint: None,
        defaults: (0..=4).map(|k| Params::default().with(K, k as f64)).collect(),
        forms: vec![
            Form {
                label: "rodrigues",
                description: "Laguerre moment by quadrature against jets of γ(k+1,x)/x",
                informational: false,
                applies: always,
                lhs: laguerre_moment,
                rhs: ex6_rodrigues_rhs,
            },
            Form {
                label: "closed-sum",
                description: "Σ_i ((-1)^(i+1)/i!) C(k,i) [e^-x Σ_j T(k+i,j) x^(k+i-j) - (k+i)!]",
                informational: false,
                applies: always,
                lhs: laguerre_moment,
                rhs: ex6_sum_rhs,
            },
            Form {
                label: "quasi-commutation",
                description: "R_k H_w h = (1/w_(k+1)) ∫ w_k h^(k)",
                informational: false,
                applies: k_positive,
                lhs: ex6_thm_lhs,
                rhs: ex6_thm_rhs,
            },
        ],
        x_grid: GRID_FINITE.to_vec(),
        rel_tol: DEFAULT_REL_TOL,
        abs_tol: DEFAULT_ABS_TOL,
    }
}

// ---------------------------------------------------------------- ex7

fn upper_gamma_derivs(p: &Params, x: f64, binomials: bool) -> Result<f64> {
    let k = p.k as usize;
    let jet = functions::upper_gamma(p.a).eval_jet(x, k)?;
    let mut s = 0.0;
    for i in 0..=p.k {
        let c = if binomials { binom(p.k, i)? } else { 1.0 };
        s += c * jet.deriv(i as usize);
    }
    Ok(s)
}

fn ex7_lhs(p: &Params, x: f64, _: &EvalCtx) -> Result<Eval> {
    ok(upper_gamma_derivs(p, x, true)?)
}

fn ex7_verbatim(p: &Params, x: f64, _: &EvalCtx) -> Result<Eval> {
    ok(upper_gamma_derivs(p, x, false)?)
}

fn ex7_rhs(p: &Params, x: f64, _: &EvalCtx) -> Result<Eval> {
    ok(falling_factorial(p.a - 1.0, p.k) * upper_inc_gamma(p.a - p.k as f64, x)?)
}

fn ex7_k1_lhs(p: &Params, x: f64, _: &EvalCtx) -> Result<Eval> {
    ok(upper_inc_gamma(p.a + 1.0, x)?)
}

fn ex7_k1_rhs(p: &Params, x: f64, _: &EvalCtx) -> Result<Eval> {
    ok(p.a * upper_inc_gamma(p.a, x)? + x.powf(p.a) * (-x).exp())
}

fn ex7_weight(ctx: &EvalCtx) -> Weight {
    Weight::exp_decay().with_quad_config(ctx.quad)
}

fn ex7_thm_lhs(p: &Params, x: f64, ctx: &EvalCtx) -> Result<Eval> {
    ok(thm2_lhs(&ex7_weight(ctx), &functions::power(p.a - 1.0), p.k as usize, x)?)
}

fn ex7_thm_rhs(p: &Params, x: f64, ctx: &EvalCtx) -> Result<Eval> {
    ok(thm2_rhs(&ex7_weight(ctx), &functions::power(p.a - 1.0), p.k as usize, x)?)
}

fn ex7() -> IdentityCase {
    IdentityCase {
        id: "ex7-upper-gamma",
        description: "Σ_i C(k,i) d^i/dx^i Γ(a,x) = (a-1)_k Γ(a-k,x) for a > k",
        origin: "w(t) = e^-t, h(t) = t^(a-1), α = +∞",
        params: vec![ParamSpec::new(A, 0.5, 6.0), ParamSpec::new(K, 1.0, 4.0)],
        constraint: Some(("a > k", |p| p.a > p.k as f64)),
        defaults: vec![
            Params::default().with(A, 3.0).with(K, 1.0),
            Params::default().with(A, 3.5).with(K, 2.0),
            Params::default().with(A, 5.0).with(K, 3.0),
            Params::default().with(A, 5.5).with(K, 4.0),
        ],
        forms: vec![
            Form {
                label: "leibniz",
                description: "binomially weighted derivatives of Γ(a,x) against the falling factorial",
                informational: false,
                applies: always,
                lhs: ex7_lhs,
                rhs: ex7_rhs,
            },
            Form {
                label: "leibniz-verbatim",
                description: "the plain derivative sum as printed, without binomials",
                informational: true,
                applies: always,
                lhs: ex7_verbatim,
                rhs: ex7_rhs,
            },
            Form {
                label: "recurrence-k1",
                description: "Γ(a+1,x) = a Γ(a,x) + x^a e^-x",
                informational: false,
                applies: always,
                lhs: ex7_k1_lhs,
                rhs: ex7_k1_rhs,
            },
            Form {
                label: "quasi-commutation",
                description: "R_k H_w h = (1/w_(k+1)) ∫ w_k h^(k)",
                informational: false,
                applies: always,
                lhs: ex7_thm_lhs,
                rhs: ex7_thm_rhs,
            },
        ],
        x_grid: GRID_IMPROPER.to_vec(),
        rel_tol: DEFAULT_REL_TOL,
        abs_tol: DEFAULT_ABS_TOL,
    }
}

// ---------------------------------------------------------------- ex8

fn ex8_z(p: &Params, x: f64) -> f64 {
    (x - p.loc) / (2f64.sqrt() * p.sigma)
}

fn ex8_lhs(p: &Params, x: f64, ctx: &EvalCtx) -> Result<Eval> {
    let h = functions::shifted_gaussian(p.loc, p.sigma);
    let k = p.k as usize;
    let v = quad(
        |t| {
            let hk = h.eval_jet(t, k)?.deriv(k);
            // both factors underflow together in the left tail
            Ok(if hk == 0.0 { 0.0 } else { t.exp() * hk })
        },
        Bound::NegInf,
        x,
        ctx,
    )?;
    ok(v)
}

fn ex8_rhs(p: &Params, x: f64, _: &EvalCtx) -> Result<Eval> {
    let (k, s) = (p.k, p.sigma);
    let z = ex8_z(p, x);
    let r = 2f64.sqrt() * s;
    let mut sum = 0.0;
    for i in 0..k {
        sum += binom(k, i)? * r.powi(i as i32 - k as i32) * hermite(k - i - 1, z);
    }
    let bracket = 1.0 + erf_real(z) - functions::two_over_sqrt_pi() * (-z * z).exp() * sum;
    ok(sign(k) * s * (PI / 2.0).sqrt() * bracket)
}

fn ex8_verbatim_lhs(p: &Params, x: f64, ctx: &EvalCtx) -> Result<Eval> {
    let (m, s, k) = (p.loc, p.sigma, p.k as i32);
    let v =
        quad(|t| Ok((t - m + s * s).powi(k) * (-((t - m).powi(2) / (2.0 * s * s) + t)).exp()), Bound::NegInf, x, ctx)?;
    ok(v)
}

fn ex8_verbatim_rhs(p: &Params, x: f64, _: &EvalCtx) -> Result<Eval> {
    let (k, s) = (p.k, p.sigma);
    let z = ex8_z(p, x);
    let r = 2f64.sqrt() * s;
    let mut sum = 0.0;
    for i in 0..k {
        sum += binom(k - 1, i)? * r.powi(1 - k as i32 + i as i32) * hermite(k - i - 1, z);
    }
    let g = (-(x - p.loc).powi(2) / (2.0 * s * s)).exp();
    ok(s * (PI / 2.0).sqrt() * (erf_real(z) - functions::two_over_sqrt_pi() * g * sum))
}

fn ex8_weight(ctx: &EvalCtx) -> Weight {
    Weight::exp_growth().with_quad_config(ctx.quad)
}

fn ex8_thm_lhs(p: &Params, x: f64, ctx: &EvalCtx) -> Result<Eval> {
    let h = functions::shifted_gaussian(p.loc, p.sigma);
    ok(thm2_lhs(&ex8_weight(ctx), &h, p.k as usize, x)?)
}

fn ex8_thm_rhs(p: &Params, x: f64, ctx: &EvalCtx) -> Result<Eval> {
    let h = functions::shifted_gaussian(p.loc, p.sigma);
    ok(thm2_rhs(&ex8_weight(ctx), &h, p.k as usize, x)?)
}

fn ex8() -> IdentityCase {
    IdentityCase {
        id: "ex8-gaussian-hermite",
        description:
            "∫_-∞^x e^t h^(k) for h = e^(-(t-m)²/(2σ²) - t) in closed form through erf and Hermite polynomials",
        origin: "w(t) = e^t, h(t) = e^(-(t-m)²/(2σ²) - t), α = -∞",
        params: vec![ParamSpec::new(K, 1.0, 4.0), ParamSpec::new(Sigma, 0.5, 2.0), ParamSpec::new(Loc, -1.0, 1.0)],
        constraint: None,
        defaults: vec![
            Params::default().with(K, 1.0).with(Sigma, 1.0).with(Loc, 0.0),
            Params::default().with(K, 2.0).with(Sigma, 1.4).with(Loc, 0.3),
            Params::default().with(K, 3.0).with(Sigma, 0.7).with(Loc, -0.5),
            Params::default().with(K, 4.0).with(Sigma, 1.8).with(Loc, 0.9),
        ],
        forms: vec![
            Form {
                label: "quasi-commutation",
                description: "R_k H_w h = (1/w_(k+1)) ∫ w_k h^(k)",
                informational: false,
                applies: always,
                lhs: ex8_thm_lhs,
                rhs: ex8_thm_rhs,
            },
            Form {
                label: "closed-form",
                description:
                    "∫ e^t h^(k) = (-1)^k σ√(π/2) [1 + erf z - (2/√π) e^(-z²) Σ_i C(k,i) (√2σ)^(i-k) H_(k-i-1)(z)]",
                informational: false,
                applies: always,
                lhs: ex8_lhs,
                rhs: ex8_rhs,
            },
            Form {
                label: "closed-form-verbatim",
                description: "the final display as printed, with its exponent read at x",
                informational: true,
                applies: always,
                lhs: ex8_verbatim_lhs,
                rhs: ex8_verbatim_rhs,
            },
        ],
        x_grid: GRID_IMPROPER.to_vec(),
        rel_tol: DEFAULT_REL_TOL,
        abs_tol: DEFAULT_ABS_TOL,
    }
}

// ---------------------------------------------------------------- ex9

fn bessel_a_integrand(k: u32, t: f64) -> f64 {
    t * (-0.5 * t * t).exp() * sph_bessel_scaled(k, t)
}

fn ex9a_lhs(p: &Params, x: f64, ctx: &EvalCtx) -> Result<Eval> {
    ok(quad(|t| Ok(bessel_a_integrand(p.k, t)), Bound::NegInf, x, ctx)?)
}

fn ex9a_lhs_verbatim(p: &Params, x: f64, ctx: &EvalCtx) -> Result<Eval> {
    ok(quad0(|t| Ok(bessel_a_integrand(p.k, t)), x, ctx)?)
}

/// `(i/2) (erf((x+i)/√2) - erf((x-i)/√2))`, real for real `x`.
fn erf_pair(x: f64) -> Result<Complex64> {
    let s = 2f64.sqrt();
    let d = erf_complex(Complex64::new(x / s, 1.0 / s))? - erf_complex(Complex64::new(x / s, -1.0 / s))?;
    let c = Complex64::new(0.0, 0.5) * d;
    if c.im.abs() > 1e-10 * c.re.abs() {
        return Err(Error::AccuracyGuard(format!("imaginary residue {:e} at x = {x}", c.im)));
    }
    Ok(c)
}

fn ex9a_rhs(p: &Params, x: f64, ctx: &EvalCtx) -> Result<Eval> {
    // G = e^{x²/2} E with E the real erf pair; E' = √(2/π) e^{(1-x²)/2} sin x
    let g = FuncRep::new(Interval::REAL, |x, order| {
        let e0 = erf_pair(x)?.re;
        let t = Jet::var(x, order)?;
        let e = if order == 0 {
            Jet::constant(x, e0, 0)?
        } else {
            let t1 = t.truncate(order - 1)?;
            let de = (&t1 * &t1).scale(-0.5).add_scalar(0.5).exp()?.try_mul(&t1.sin()?)?;
            de.scale((2.0 / PI).sqrt()).antiderivative(e0)?
        };
        (&t * &t).scale(0.5).exp()?.try_mul(&e)
    });
    let d = minus_inv_x_ddx(&g, p.k, x, ctx)?;
    let value = (PI / (2.0 * E)).sqrt() * (-0.5 * x * x).exp() * d;
    Ok(Eval { value, complex: Some(erf_pair(x)?) })
}

fn ex9a_thm_lhs(p: &Params, x: f64, ctx: &EvalCtx) -> Result<Eval> {
    ok(thm1_lhs(&gauss_weight(ctx), &functions::sinc(), p.k as usize, x)?)
}

/// `H_w (D_k^w h)` with `D_k^w (sin t / t) = j_k(t) / t^k` in closed form.
/// Jets of `D_k^w h` lose about `2k` digits per decade near `t = 0`, which the
/// integral from `-∞` must cross.
fn ex9a_thm_rhs(p: &Params, x: f64, ctx: &EvalCtx) -> Result<Eval> {
    let k = p.k;
    let dk = FuncRep::new(Interval::REAL, move |t, order| {
        if order == 0 {
            Jet::constant(t, sph_bessel_scaled(k, t), 0)
        } else {
            Err(Error::Unsupported("value-only closed form".into()))
        }
    });
    ok(hardy(&gauss_weight(ctx), &dk).value(x)?)
}

fn ex9a_relation_lhs(p: &Params, x: f64, ctx: &EvalCtx) -> Result<Eval> {
    ok(minus_inv_x_ddx(&functions::sinc(), p.k, x, ctx)?)
}

fn ex9a_relation_rhs(p: &Params, x: f64, _: &EvalCtx) -> Result<Eval> {
    ok(sph_bessel_scaled(p.k, x))
}

fn ex9a() -> IdentityCase {
    IdentityCase {
        id: "ex9-bessel-a",
        description: "∫_-∞^x t^(1-k) e^(-t²/2) j_k = (i/2)√(π/(2e)) e^(-x²/2) (-(1/x) d/dx)^k [e^(x²/2) (erf((x+i)/√2) - erf((x-i)/√2))]",
        origin: "w(t) = t e^(-t²/2), h(t) = sin t / t, α = -∞",
        params: vec![ParamSpec::new(K, 0.0, 4.0)],
        constraint: None,
        defaults: (0..=4).map(|k| Params::default().with(K, k as f64)).collect(),
        forms: vec![
            Form {
                label: "erf-pair",
                description: "Bessel moment from -∞ against derivatives of the complex erf pair",
                informational: false,
                applies: always,
                lhs: ex9a_lhs,
                rhs: ex9a_rhs,
            },
            Form {
                label: "erf-pair-verbatim",
                description: "the same with the printed lower limit 0",
                informational: true,
                applies: always,
                lhs: ex9a_lhs_verbatim,
                rhs: ex9a_rhs,
            },
            Form {
                label: "commutation",
                description: "D_k^w H_w h = H_w D_k^w h, with D_k^w h = j_k(t)/t^k inside the integral",
                informational: false,
                applies: k_positive,
                lhs: ex9a_thm_lhs,
                rhs: ex9a_thm_rhs,
            },
            Form {
                label: "bessel-derivative",
                description: "(-(1/x) d/dx)^k (sin x / x) = j_k(x) / x^k",
                informational: false,
                applies: always,
                lhs: ex9a_relation_lhs,
                rhs: ex9a_relation_rhs,
            },
        ],
        x_grid: GRID_IMPROPER.to_vec(),
        rel_tol: DEFAULT_REL_TOL,
        abs_tol: DEFAULT_ABS_TOL,
    }
}

fn ex9b_lhs(p: &Params, x: f64, ctx: &EvalCtx) -> Result<Eval> {
    let n = p.m - p.k;
    let e = (n + 2) as i32;
    ok(quad0(|t| Ok(t.powi(e) * (-0.5 * t * t).exp() * sph_bessel_j(n, t)), x, ctx)?)
}

fn rayleigh_rhs(p: &Params, x: f64, ctx: &EvalCtx) -> Result<f64> {
    let (m, cx) = (p.m, *ctx);
    // G = e^{x²/2} ∫_0^x t^{m+2} e^{-t²/2} j_m
    let g = FuncRep::new(Interval::REAL, move |x, order| {
        let e = (m + 2) as i32;
        let v = quad0(|t| Ok(t.powi(e) * (-0.5 * t * t).exp() * sph_bessel_j(m, t)), x, &cx)?;
        let t = Jet::var(x, order)?;
        let f = if order == 0 {
            Jet::constant(x, v, 0)?
        } else {
            let t1 = t.truncate(order - 1)?;
            let integrand =
                t1.powi(e)?.try_mul(&(&t1 * &t1).scale(-0.5).exp()?)?.try_mul(&sph_bessel_jet(m, x, order - 1)?)?;
            integrand.antiderivative(v)?
        };
        (&t * &t).scale(0.5).exp()?.try_mul(&f)
    });
    Ok((-0.5 * x * x).exp() * minus_inv_x_ddx(&g, p.k, x, ctx)?)
}

fn ex9b_rhs(p: &Params, x: f64, ctx: &EvalCtx) -> Result<Eval> {
    ok(sign(p.k) * rayleigh_rhs(p, x, ctx)?)
}

fn ex9b_rhs_verbatim(p: &Params, x: f64, ctx: &EvalCtx) -> Result<Eval> {
    ok(rayleigh_rhs(p, x, ctx)?)
}

fn ex9b_thm_lhs(p: &Params, x: f64, ctx: &EvalCtx) -> Result<Eval> {
    ok(thm1_lhs(&gauss_weight(ctx), &functions::bessel_moment(p.m), p.k as usize, x)?)
}

fn ex9b_thm_rhs(p: &Params, x: f64, ctx: &EvalCtx) -> Result<Eval> {
    ok(thm1_rhs(&gauss_weight(ctx), &functions::bessel_moment(p.m), p.k as usize, x)?)
}

fn ex9b() -> IdentityCase {
    IdentityCase {
        id: "ex9-bessel-b",
        description: "∫_0^x t^(m-k+2) e^(-t²/2) j_(m-k) = (-1)^k e^(-x²/2) (-(1/x) d/dx)^k [e^(x²/2) ∫_0^x t^(m+2) e^(-t²/2) j_m]",
        origin: "w(t) = t e^(-t²/2), h(t) = t^(m+1) j_m(t), α = -∞ (Rayleigh relation)",
        params: vec![ParamSpec::new(M, 1.0, 6.0), ParamSpec::new(K, 1.0, 4.0)],
        constraint: Some(("m >= k", |p| p.m >= p.k)),
        defaults: vec![
            Params::default().with(M, 1.0).with(K, 1.0),
            Params::default().with(M, 2.0).with(K, 1.0),
            Params::default().with(M, 3.0).with(K, 2.0),
            Params::default().with(M, 4.0).with(K, 3.0),
            Params::default().with(M, 6.0).with(K, 4.0),
        ],
        forms: vec![
            Form {
                label: "rayleigh",
                description: "lower-order Bessel moment against the operator applied to the higher one",
                informational: false,
                applies: always,
                lhs: ex9b_lhs,
                rhs: ex9b_rhs,
            },
            Form {
                label: "rayleigh-verbatim",
                description: "the same without the sign (-1)^k, as printed",
                informational: true,
                applies: always,
                lhs: ex9b_lhs,
                rhs: ex9b_rhs_verbatim,
            },
            Form {
                label: "commutation",
                description: "D_k^w H_w h = H_w D_k^w h",
                informational: false,
                applies: always,
                lhs: ex9b_thm_lhs,
                rhs: ex9b_thm_rhs,
            },
        ],
        x_grid: GRID_IMPROPER.to_vec(),
        rel_tol: DEFAULT_REL_TOL,
        abs_tol: DEFAULT_ABS_TOL,
    }
}

/// All registered identities, in a fixed order.
pub fn registry() -> Vec<IdentityCase> {
    vec![ex1(), ex1_remark(), ex2(), ex3(), ex4(), ex5(), ex6(), ex7(), ex8(), ex9a(), ex9b()]
}
