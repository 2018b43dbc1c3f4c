//! The `hardy-verify` command-line front end.
//!
//! Exit codes: 0 when every gating form passes, 1 when some identity misses
//! its tolerance, 2 on evaluation errors, bad flags or unknown ids.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::identities::{
    find_case, registry, run_cases, to_csv_string, to_json_string, to_table_string, IdentityCase, ParamName, Params,
    RunConfig, VerificationReport,
};
use crate::quad::QuadConfig;

#[derive(Debug, Parser)]
#[command(name = "hardy-verify", version, about = "Verify weighted Hardy-operator identities numerically")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List registered identities.
    List,
    /// Run identities at their default (or overridden) parameters.
    Verify(RunArgs),
    /// As `verify`, plus seeded random parameter draws.
    Sweep(RunArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct RunArgs {
    /// Identity ids (comma separated or repeated); all when omitted.
    #[arg(long = "id", value_delimiter = ',')]
    ids: Vec<String>,
    #[arg(long)]
    rel_tol: Option<f64>,
    #[arg(long)]
    abs_tol: Option<f64>,
    /// Evaluation budget of each quadrature.
    #[arg(long)]
    max_evals: Option<usize>,
    /// Evaluation points, replacing each case's grid.
    #[arg(long = "x", value_delimiter = ',', allow_hyphen_values = true)]
    x: Vec<f64>,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<f64>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    sigma: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    loc: Option<f64>,
    /// Random parameter draws per identity (sweep only).
    #[arg(long, default_value_t = 3)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<std::path::PathBuf>,
}

impl RunArgs {
    fn overrides(&self) -> Vec<(ParamName, f64)> {
        let ints = [(ParamName::K, self.k), (ParamName::N, self.n), (ParamName::M, self.m)];
        let reals = [(ParamName::A, self.a), (ParamName::Sigma, self.sigma), (ParamName::Loc, self.loc)];
        ints.iter()
            .filter_map(|(n, v)| v.map(|v| (*n, v as f64)))
            .chain(reals.iter().filter_map(|(n, v)| v.map(|v| (*n, v))))
            .collect()
    }

    fn run_config(&self) -> Result<RunConfig> {
        let mut quad = QuadConfig::default();
        if let Some(e) = self.max_evals {
            quad.max_evals = e;
        }
        let cfg = RunConfig {
            quad,
            rel_tol: self.rel_tol,
            abs_tol: self.abs_tol,
            x_grid: if self.x.is_empty() { None } else { Some(self.x.clone()) },
        };
        cfg.validate()?;
        Ok(cfg)
    }

    fn cases(&self) -> Result<Vec<IdentityCase>> {
        if self.ids.is_empty() || self.ids.iter().any(|i| i == "all") {
            return Ok(registry());
        }
        self.ids.iter().map(|id| find_case(id)).collect()
    }
}

/// The default parameter sets, or a single set with the overrides applied
/// to the case's first default. Overrides of undeclared parameters are
/// ignored for that case.
fn parameter_sets(case: &IdentityCase, overrides: &[(ParamName, f64)]) -> Result<Vec<Params>> {
    if overrides.is_empty() {
        return Ok(case.defaults.clone());
    }
    let mut p = case.defaults.first().copied().unwrap_or_default();
    for (name, v) in overrides {
        if case.declares(*name) {
            p.set(*name, *v)?;
        }
    }
    case.validate(&p)?;
    Ok(vec![p])
}

fn execute(args: &RunArgs, sweep: bool) -> Result<(String, i32)> {
    let cfg = args.run_config()?;
    let cases = args.cases()?;
    let overrides = args.overrides();
    let fixed = cases.iter().map(|c| parameter_sets(c, &overrides)).collect::<Result<Vec<_>>>()?;
    if sweep && args.samples == 0 {
        return Err(Error::InvalidParam("--samples must be at least 1".into()));
    }
    let samples = if sweep { args.samples } else { 0 };
    let reports = run_cases(&cases, &fixed, samples, args.seed, &cfg)?;
    let text = match args.format {
        Format::Table => to_table_string(&reports),
        Format::Json => to_json_string(&reports),
        Format::Csv => to_csv_string(&reports)?,
    };
    Ok((text, exit_code(&reports)))
}

/// 2 if any gating evaluation failed, else 1 if any identity failed, else 0.
pub fn exit_code(reports: &[VerificationReport]) -> i32 {
    if reports.iter().any(|r| r.gating_errors() > 0) {
        2
    } else if reports.iter().any(|r| !r.pass) {
        1
    } else {
        0
    }
}

fn list() -> String {
    registry().iter().map(|c| format!("{}\t{}\t{}\n", c.id, c.description, c.origin)).collect()
}

fn emit(text: &str, output: Option<&std::path::Path>) -> Result<()> {
    let io = |e: std::io::Error| Error::InvalidConfig(format!("cannot write output: {e}"));
    match output {
        Some(path) => std::fs::write(path, text).map_err(io),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(io),
    }
}

/// Parses `args` (including the program name) and runs; returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let outcome = match &cli.command {
        Command::List => emit(&list(), None).map(|_| 0),
        Command::Verify(a) | Command::Sweep(a) => {
            let sweep = matches!(cli.command, Command::Sweep(_));
            execute(a, sweep).and_then(|(text, code)| emit(&text, a.output.as_deref()).map(|_| code))
        }
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("hardy-verify: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> i32 {
        main_with_args(std::iter::once("hardy-verify").chain(args.iter().copied()))
    }

    #[test]
    fn unknown_id_and_bad_flags_exit_two() {
        assert_eq!(run(&["verify", "--id", "nosuch"]), 2);
        assert_eq!(run(&["verify", "--bogus"]), 2);
        assert_eq!(run(&["verify", "--id", "ex4-legendre", "--rel-tol", "-1"]), 2);
        assert_eq!(run(&["verify", "--id", "ex7-upper-gamma", "--a", "1.5", "--k", "3"]), 2);
    }

    #[test]
    fn unknown_id_error_names_it() {
        let args = RunArgs::try_parse_from_verify(&["--id", "nosuch"]);
        let err = args.cases().unwrap_err();
        assert!(err.to_string().contains("nosuch"));
    }

    #[test]
    fn overrides_select_one_parameter_set() {
        let case = find_case("ex1-stirling-gamma").unwrap();
        let sets = parameter_sets(&case, &[(ParamName::A, 2.0), (ParamName::K, 1.0), (ParamName::Sigma, 9.0)]).unwrap();
        assert_eq!(sets.len(), 1);
        assert_eq!((sets[0].a, sets[0].k), (2.0, 1));
    }

    impl RunArgs {
        fn try_parse_from_verify(rest: &[&str]) -> RunArgs {
            let argv = ["hardy-verify", "verify"].iter().chain(rest.iter()).copied();
            match Cli::try_parse_from(argv).unwrap().command {
                Command::Verify(a) => a,
                _ => unreachable!(),
            }
        }
    }
}
