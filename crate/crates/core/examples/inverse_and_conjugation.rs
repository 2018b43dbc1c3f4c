//! The inverse operator A undoes H_w, and the conjugation pair (C, L)
//! intertwines H_w with the exponential average: L C f = H_w L f.

use hardy_calculus::functions;
use hardy_calculus::operators::{conj_c, conj_l, hardy, inverse_op, Weight};
use hardy_calculus::Result;

fn main() -> Result<()> {
    let w = Weight::power(2.0);
    let f = functions::sin();
    for x in [0.5, 1.0, 2.0] {
        let round_trip = inverse_op(&w, &hardy(&w, &f)).value(x)?;
        println!("A H_w sin({x}) = {:+.14e}   sin({x}) = {:+.14e}", round_trip, x.sin());
    }

    let g = functions::gaussian(1.0);
    for x in [0.5, 1.0, 2.0] {
        let lhs = conj_l(&w, &conj_c(&g)).value(x)?;
        let rhs = hardy(&w, &conj_l(&w, &g)).value(x)?;
        println!("x = {x}: L C f = {:+.14e}  H_w L f = {:+.14e}", lhs, rhs);
    }
    Ok(())
}
