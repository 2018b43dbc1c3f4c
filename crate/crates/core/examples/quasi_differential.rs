//! Iterated weights w_k, their ratios r_k, and the quasi-differential
//! operator R_k built from them.

use hardy_calculus::functions;
use hardy_calculus::operators::{hardy, quasi_diff, Weight};
use hardy_calculus::Result;

fn main() -> Result<()> {
    let x = 1.2;
    for w in [Weight::power(0.5), Weight::exp_decay(), Weight::gaussian_moment()] {
        print!("{:<14}", w.name());
        for k in 1..=4 {
            print!("  w_{k}({x}) = {:+.6e}", w.weight_wk(k, x)?);
        }
        println!();
        for k in 1..=3 {
            print!("{:<14}  r_{k}({x}) = {:+.6e}", "", w.ratio_rk(k, x)?);
        }
        println!();
    }

    // R_2 applied to an average of sin under w = t^2
    let w = Weight::power(2.0);
    let avg = hardy(&w, &functions::sin());
    let r2 = quasi_diff(&w, &avg, 2)?;
    println!("R_2 H_w sin at {x}: {:+.12e}", r2.value(x)?);
    Ok(())
}
