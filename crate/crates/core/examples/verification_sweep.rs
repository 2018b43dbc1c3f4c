//! Verify every identity at its default parameters plus seeded random
//! draws, and print a summary.

use std::time::Instant;

use hardy_calculus::identities::{run_all, to_table_string};
use hardy_calculus::{QuadConfig, Result};

fn main() -> Result<()> {
    let start = Instant::now();
    let reports = run_all(&QuadConfig::default(), 3, 2024)?;
    print!("{}", to_table_string(&reports));
    let failed = reports.iter().filter(|r| !r.pass).count();
    println!("{} parameter sets, {} failed, {:.2} s", reports.len(), failed, start.elapsed().as_secs_f64());
    Ok(())
}
