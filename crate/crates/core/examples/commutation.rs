//! The weighted differential operator commutes with the averaging operator:
//! D_k^w H_w h = H_w D_k^w h.

use hardy_calculus::functions;
use hardy_calculus::operators::{thm1_residual, thm2_residual, Weight};
use hardy_calculus::Result;

fn main() -> Result<()> {
    let weights = [Weight::constant(), Weight::power(1.0), Weight::power(2.0), Weight::exp_decay()];
    for w in &weights {
        for k in 1..=3 {
            let r = thm1_residual(w, &functions::cos(), k, 1.5)?;
            println!(
                "w = {:<6} k = {k}  D H cos = {:+.12e}  H D cos = {:+.12e}  residual {:.1e}",
                w.name(),
                r.lhs,
                r.rhs,
                r.residual()
            );
        }
    }

    // the quasi-differential form with iterated weights
    let r = thm2_residual(&Weight::exp_growth(), &functions::gaussian(1.0), 2, 0.5)?;
    println!("R_2 H h = {:+.12e}  H_(w_2) D_2 h = {:+.12e}", r.lhs, r.rhs);
    Ok(())
}
