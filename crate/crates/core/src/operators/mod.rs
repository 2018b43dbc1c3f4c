//! The averaging operator `H_w`, the differential operators that commute
//! with it, and residual evaluators for the commutation relations.
//!
//! Every operator maps a [`FuncRep`] to a new [`FuncRep`], so compositions
//! such as `D_k^w H_w h` are built lazily and evaluated through jets. The
//! only quadrature inside `H_w` is the value of `∫_α^x w h`; all derivatives
//! of `H_w h` are analytic consequences of `(w_1 H_w h)' = w h`.

mod funcrep;
mod ops;
mod residuals;
mod weight;

pub use funcrep::{FuncRep, Interval};
pub use ops::{conj_c, conj_c_with, conj_l, hardy, inverse_op, quasi_diff, weighted_diff, weighted_integral};
pub use residuals::{
    diff_identity_residuals, thm1_lhs, thm1_residual, thm1_rhs, thm2_lhs, thm2_residual, thm2_rhs, Residual,
};
pub use weight::{Weight, MAX_NUMERIC_LEVEL};
