use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::report::{FormSummary, PointRecord, VerificationReport};
use super::{registry, EvalCtx, IdentityCase, Params};
use crate::error::{Error, Result};
use crate::quad::QuadConfig;

/// Quadrature settings plus optional overrides of each case's tolerances
/// and grid.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct RunConfig {
    pub quad: QuadConfig,
    pub rel_tol: Option<f64>,
    pub abs_tol: Option<f64>,
    pub x_grid: Option<Vec<f64>>,
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        self.quad.validate()?;
        for (name, t) in [("rel_tol", self.rel_tol), ("abs_tol", self.abs_tol)] {
            if let Some(t) = t {
                if !(t > 0.0 && t.is_finite()) {
                    return Err(Error::InvalidConfig(format!("{name} must be positive, got {t}")));
                }
            }
        }
        if let Some(g) = &self.x_grid {
            if g.is_empty() || g.iter().any(|x| !x.is_finite()) {
                return Err(Error::InvalidConfig("x grid must be a non-empty list of finite values".into()));
            }
        }
        Ok(())
    }
}

pub fn find_case(id: &str) -> Result<IdentityCase> {
    registry().into_iter().find(|c| c.id == id).ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// Runs one case at `params` over its default grid.
pub fn run_identity(case: &IdentityCase, params: &Params, cfg: &QuadConfig) -> Result<VerificationReport> {
    run_identity_with(case, params, &RunConfig { quad: *cfg, ..RunConfig::default() })
}

/// Runs one case; evaluation failures become failing point records.
pub fn run_identity_with(case: &IdentityCase, params: &Params, cfg: &RunConfig) -> Result<VerificationReport> {
    cfg.validate()?;
    case.validate(params)?;
    let start = Instant::now();
    let rel_tol = cfg.rel_tol.unwrap_or(case.rel_tol);
    let abs_tol = cfg.abs_tol.unwrap_or(case.abs_tol);
    let grid = cfg.x_grid.as_deref().unwrap_or(&case.x_grid);
    let ctx = EvalCtx { quad: cfg.quad, abs_tol };

    let mut points = Vec::new();
    let mut forms = Vec::new();
    for form in case.forms.iter().filter(|f| (f.applies)(params)) {
        let mut summary = FormSummary {
            label: form.label,
            informational: form.informational,
            pass: true,
            max_rel_err: 0.0,
            points: 0,
            errors: 0,
        };
        for &x in grid {
            let lhs = (form.lhs)(params, x, &ctx);
            let rhs = (form.rhs)(params, x, &ctx);
            let rec = match (lhs, rhs) {
                (Ok(l), Ok(r)) => {
                    let abs_err = (l.value - r.value).abs();
                    let scale = l.value.abs().max(r.value.abs());
                    let rel_err = if scale > 0.0 { abs_err / scale } else { abs_err };
                    // NaN comparisons are false, so a NaN side fails here
                    let pass = abs_err <= abs_tol + rel_tol * scale;
                    PointRecord {
                        x,
                        form: form.label,
                        informational: form.informational,
                        lhs: Some(l),
                        rhs: Some(r),
                        abs_err,
                        rel_err,
                        pass,
                        error: None,
                    }
                }
                (l, r) => {
                    let msg = [("lhs", l.as_ref().err()), ("rhs", r.as_ref().err())]
                        .iter()
                        .filter_map(|(side, e)| e.map(|e| format!("{side}: {e}")))
                        .collect::<Vec<_>>()
                        .join("; ");
                    summary.errors += 1;
                    PointRecord {
                        x,
                        form: form.label,
                        informational: form.informational,
                        lhs: l.ok(),
                        rhs: r.ok(),
                        abs_err: f64::NAN,
                        rel_err: f64::NAN,
                        pass: false,
                        error: Some(msg),
                    }
                }
            };
            summary.points += 1;
            summary.pass &= rec.pass;
            if rec.rel_err.is_finite() {
                summary.max_rel_err = summary.max_rel_err.max(rec.rel_err);
            }
            points.push(rec);
        }
        forms.push(summary);
    }

    let gating: Vec<&FormSummary> = forms.iter().filter(|f| !f.informational).collect();
    let pass = !gating.is_empty() && gating.iter().all(|f| f.pass);
    let max_rel_err = gating.iter().map(|f| f.max_rel_err).fold(0.0, f64::max);
    Ok(VerificationReport {
        identity_id: case.id,
        params: case.param_values(params),
        points,
        max_rel_err,
        pass,
        forms,
        rel_tol,
        abs_tol,
        wall_time: start.elapsed(),
    })
}

/// `count` parameter sets drawn uniformly from the case's declared ranges,
/// rejecting draws that violate its constraint.
pub fn sample_params(case: &IdentityCase, base: &Params, count: usize, rng: &mut ChaCha8Rng) -> Vec<Params> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mut p = *base;
        for s in &case.params {
            let v = if s.name.is_integer() {
                rng.gen_range(s.lo as u32..=s.hi as u32) as f64
            } else {
                let v = rng.gen_range(s.lo..s.hi);
                // keep the open bound open
                if v == s.lo {
                    (s.lo + s.hi) / 2.0
                } else {
                    v
                }
            };
            p.set(s.name, v).expect("sampled values are admissible");
        }
        if case.validate(&p).is_ok() {
            out.push(p);
        }
    }
    out
}

fn case_seed(seed: u64, index: usize) -> u64 {
    seed ^ (index as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

/// Runs `cases` at the given parameter sets plus `samples` seeded draws each.
/// Output order is deterministic: by case, then parameter set.
pub fn run_cases(
    cases: &[IdentityCase],
    fixed: &[Vec<Params>],
    samples: usize,
    seed: u64,
    cfg: &RunConfig,
) -> Result<Vec<VerificationReport>> {
    cfg.validate()?;
    let mut jobs = Vec::new();
    for (i, case) in cases.iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(case_seed(seed, i));
        let base = fixed[i].first().copied().unwrap_or_default();
        for p in &fixed[i] {
            jobs.push((case, *p));
        }
        for p in sample_params(case, &base, samples, &mut rng) {
            jobs.push((case, p));
        }
    }
    jobs.par_iter().map(|(case, p)| run_identity_with(case, p, cfg)).collect()
}

/// Every registered case at its default parameter sets plus
/// `param_samples` seeded random draws.
pub fn run_all(cfg: &QuadConfig, param_samples: usize, seed: u64) -> Result<Vec<VerificationReport>> {
    if param_samples == 0 {
        return Err(Error::InvalidParam("param_samples must be at least 1".into()));
    }
    let cases = registry();
    let fixed: Vec<Vec<Params>> = cases.iter().map(|c| c.defaults.clone()).collect();
    run_cases(&cases, &fixed, param_samples, seed, &RunConfig { quad: *cfg, ..RunConfig::default() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampling_is_deterministic_and_admissible() {
        for (i, case) in registry().iter().enumerate() {
            let draw = |s| {
                let mut rng = ChaCha8Rng::seed_from_u64(case_seed(s, i));
                sample_params(case, &Params::default(), 5, &mut rng)
            };
            let a = draw(7);
            assert_eq!(a, draw(7));
            for p in &a {
                case.validate(p).unwrap();
            }
        }
    }

    #[test]
    fn zero_samples_rejected() {
        assert!(matches!(run_all(&QuadConfig::default(), 0, 1), Err(Error::InvalidParam(_))));
    }

    #[test]
    fn failure_is_recorded_not_raised() {
        let case = find_case("ex1-stirling-gamma").unwrap();
        let cfg = RunConfig { x_grid: Some(vec![-1.0, 1.0]), ..RunConfig::default() };
        let r = run_identity_with(&case, &Params::default(), &cfg).unwrap();
        assert!(!r.pass);
        assert!(r.gating_errors() > 0);
        assert!(r.points.iter().any(|p| p.x == 1.0 && p.pass));
    }
}
