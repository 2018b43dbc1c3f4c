//! A tour of the special functions.

use hardy_calculus::specfun::*;
use hardy_calculus::Result;
use num_complex::Complex64;

fn main() -> Result<()> {
    println!("γ(2.5, 1.3)  = {:.15e}", lower_inc_gamma(2.5, 1.3)?);
    println!("Γ(0.5, 1)    = {:.15e}", upper_inc_gamma(0.5, 1.0)?);
    println!("ψ(1)         = {:.15e}", digamma(1.0)?);
    println!("ψ_3(2.2)     = {:.15e}", polygamma(3, 2.2)?);
    println!("erf(0.8)     = {:.15e}", erf_real(0.8));
    let z = erf_complex(Complex64::new(0.5, 1.5))?;
    println!("erf(0.5+1.5i) = {:.15e} {:+.15e}i", z.re, z.im);
    println!("P_5(0.3)     = {:.15e}", legendre(5, 0.3));
    println!("H_4(1.1)     = {:.15e}", hermite(4, 1.1));
    println!("L_3(2.0)     = {:.15e}", laguerre(3, 2.0));
    println!("j_3(2.5)     = {:.15e}", sph_bessel_j(3, 2.5));
    println!("S2(10, 4)    = {}", stirling2(10, 4)?);
    println!("B_5(1.5)     = {:.15e}", bell_poly(5, 1.5)?);
    Ok(())
}
