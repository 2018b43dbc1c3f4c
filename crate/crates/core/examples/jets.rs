//! Exact high-order derivatives with truncated Taylor arithmetic.

use hardy_calculus::{Jet, Result};

fn main() -> Result<()> {
    // f(x) = e^{sin x} / (1 + x²) at x = 0.7, through order 6
    let x = Jet::var(0.7, 6)?;
    let f = x.sin()?.exp()?.div(&(&x * &x).add_scalar(1.0))?;
    for k in 0..=6 {
        println!("f^({k})(0.7) = {:+.15e}", f.deriv(k));
    }

    // the derivative of a jet is again a jet, one order lower
    let g = f.derivative()?;
    println!("f'(0.7) via derivative(): {:+.15e}", g.value());
    Ok(())
}
