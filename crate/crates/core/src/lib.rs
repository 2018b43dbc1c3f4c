//! Weighted Hardy-type averaging operators and the differential operators
//! that commute with them.
//!
//! The crate is organised bottom-up:
//!
//! - [`jet`]: truncated Taylor arithmetic giving exact high-order derivatives.
//! - [`quad`]: adaptive Gauss–Kronrod quadrature on finite, semi-infinite and
//!   doubly-infinite, oriented intervals.
//! - [`specfun`]: incomplete gamma, polygamma, error function (real and
//!   complex), orthogonal polynomials, spherical Bessel functions and exact
//!   integer combinatorics.
//! - [`operators`]: jet-capable functions ([`FuncRep`]), weights with iterated
//!   antiderivatives, the averaging operator `H_w`, the weighted differential
//!   operator `D_k^w`, the quasi-differential operator `R_k`, the inverse
//!   operator `A`, the conjugation pair `C`/`L`, and residual evaluators.
//! - [`functions`]: ready-made [`FuncRep`]s for the kernels used by the
//!   identity registry.
//! - [`identities`]: the identity registry and the verification runner.
//! - [`cli`]: the `hardy-verify` command-line front end.
//!
//! ```
//! use hardy_calculus::operators::{thm1_residual, Weight};
//! use hardy_calculus::functions;
//!
//! let w = Weight::power(2.0);
//! let r = thm1_residual(&w, &functions::sin(), 2, 0.7).unwrap();
//! assert!(r.residual().abs() <= 1e-7 * (1.0 + r.scale()));
//! ```

// NaN must fail domain and tolerance checks, so `!(x > 0.0)` is deliberate
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
mod ddouble;
pub mod error;
pub mod functions;
pub mod identities;
pub mod jet;
pub mod operators;
pub mod quad;
pub mod specfun;

pub use error::{Error, Result};
pub use jet::{Elementary, Jet, MAX_ORDER};
pub use operators::{FuncRep, Interval, Weight};
pub use quad::{integrate, try_integrate, Bound, QuadConfig, QuadResult};
