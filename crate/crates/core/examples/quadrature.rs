//! Adaptive Gauss-Kronrod quadrature on finite, semi-infinite and
//! doubly-infinite intervals. Integrals are oriented: swapping the limits
//! flips the sign.

use hardy_calculus::{integrate, Bound, QuadConfig, Result};

fn main() -> Result<()> {
    let cfg = QuadConfig::default();

    let gauss = integrate(|t| (-t * t).exp(), Bound::NegInf, Bound::PosInf, &cfg)?;
    println!("∫ e^(-t²) over R = {:.15} (√π = {:.15})", gauss.value, std::f64::consts::PI.sqrt());
    println!("  error estimate {:.1e}, {} evaluations", gauss.error_estimate, gauss.evals);

    let tail = integrate(|t| t * (-t).exp(), Bound::Finite(1.0), Bound::PosInf, &cfg)?;
    println!("∫_1^∞ t e^-t dt = {:.15} (2/e = {:.15})", tail.value, 2.0 / std::f64::consts::E);

    let reversed = integrate(|t| t * (-t).exp(), Bound::PosInf, Bound::Finite(1.0), &cfg)?;
    println!("∫_∞^1 t e^-t dt = {:.15}", reversed.value);

    let tight = QuadConfig::new(1e-13, 1e-15, 100_000)?;
    let log = integrate(|t| t.ln(), 0.0.into(), 1.0.into(), &tight)?;
    println!("∫_0^1 ln t dt = {:.15} with an endpoint singularity", log.value);
    Ok(())
}
