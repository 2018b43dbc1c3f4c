//! Special functions and exact combinatorics, written from scratch.
//!
//! Accuracy targets (relative): incomplete gamma 1e-12, polygamma 1e-11,
//! real erf 1e-13, spherical Bessel 1e-11. Tests compare each function with
//! an independent slow evaluation of its defining series or integral.

mod bessel;
mod combinatorics;
mod erf;
mod gamma;
mod orthopoly;
mod polygamma;

pub use bessel::{sph_bessel_j, sph_bessel_jet, sph_bessel_scaled};
pub use combinatorics::{bell_poly, binomial, factorial, falling_factorial, perm_coeff, stirling2, MAX_COMB_N};
pub use erf::{erf_complex, erf_real, erfc_real, COMPLEX_IM_GUARD};
pub use gamma::{gamma, ln_gamma, lower_inc_gamma, upper_inc_gamma};
pub use orthopoly::{hermite, laguerre, legendre};
pub use polygamma::{digamma, polygamma};
