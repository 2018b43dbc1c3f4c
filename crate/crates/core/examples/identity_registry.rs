//! Browse the identity registry and verify one case in detail.

use hardy_calculus::identities::{find_case, registry, run_identity_with, Params, RunConfig};
use hardy_calculus::Result;

fn main() -> Result<()> {
    for case in registry() {
        let forms: Vec<String> = case
            .forms
            .iter()
            .map(|f| if f.informational { format!("({})", f.label) } else { f.label.to_string() })
            .collect();
        println!("{:<22} {}", case.id, case.origin);
        println!("{:<22} forms: {}", "", forms.join(", "));
    }

    let case = find_case("ex7-upper-gamma")?;
    let params = Params { a: 3.0, k: 1, ..Params::default() };
    let cfg = RunConfig { x_grid: Some(vec![1.0]), ..RunConfig::default() };
    let report = run_identity_with(&case, &params, &cfg)?;
    for p in &report.points {
        let (l, r) = (p.lhs.map(|e| e.value), p.rhs.map(|e| e.value));
        println!("{:<18} x = {}  lhs = {:?}  rhs = {:?}", p.form, p.x, l, r);
    }
    println!("4/e = {}", 4.0 / std::f64::consts::E);
    Ok(())
}
