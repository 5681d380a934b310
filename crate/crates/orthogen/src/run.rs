//! Parallel verification of a selection.

use num_complex::Complex64;
use orthogen_core::identity::{
    chebyshev_points, complex_probe, verify_identity, IdentitySpec, SamplePlan, SamplePoint, VerificationReport,
};
use orthogen_core::integral::{verify_integral, verify_triangle, IntegralPlan, IntegralSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::report::{EntryReport, Report};
use crate::select::Entry;
use crate::{CliError, RunConfig};

/// Stable per-id stream so draws do not depend on selection or order.
pub fn id_seed(seed: u64, id: &str) -> u64 {
    // FNV-1a
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in id.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h ^ seed
}

/// Sample points of an identity: Chebyshev abscissae plus `draws` uniform
/// ones, for every parameter set and `ρ`.
pub fn identity_points(spec: &IdentitySpec, cfg: &RunConfig) -> Vec<SamplePoint> {
    let defaults = SamplePlan::default();
    let rhos = match &cfg.rhos {
        Some(r) => r.clone(),
        None => {
            let mut r = defaults.rhos.clone();
            if spec.complex_rho {
                r.push(complex_probe());
            }
            r
        }
    };
    let (lo, hi) = spec.x_range;
    let mut xs = chebyshev_points(cfg.x_count.unwrap_or(defaults.x_count), lo, hi);
    let mut rng = ChaCha8Rng::seed_from_u64(id_seed(cfg.seed, &spec.id));
    xs.extend((0..cfg.draws).map(|_| rng.gen_range(lo..=hi)));
    let mut out = Vec::new();
    for params in spec.param_sets() {
        for rho in &rhos {
            for x in &xs {
                out.push(SamplePoint {
                    x: *x,
                    rho: *rho,
                    params: params.clone(),
                });
            }
        }
    }
    out
}

pub fn integral_plan(cfg: &RunConfig) -> IntegralPlan {
    IntegralPlan {
        rhos: cfg.rhos.clone(),
        ..IntegralPlan::default()
    }
}

/// Consecutive points sharing `ρ` and parameters share coefficients, so
/// they are verified together.
fn check_identity(spec: &IdentitySpec, points: &[SamplePoint], tol: f64) -> VerificationReport {
    let mut groups: Vec<&[SamplePoint]> = Vec::new();
    let mut start = 0;
    for i in 1..=points.len() {
        if i == points.len() || points[i].rho != points[start].rho || points[i].params != points[start].params {
            groups.push(&points[start..i]);
            start = i;
        }
    }
    let samples = groups
        .par_iter()
        .map(|g| verify_identity(spec, g, tol).samples)
        .collect::<Vec<_>>()
        .concat();
    VerificationReport {
        id: spec.id.clone(),
        tolerance: tol,
        samples,
    }
}

fn check_integral(spec: &IntegralSpec, cfg: &RunConfig, tol: f64) -> EntryReport {
    let plan = integral_plan(cfg);
    let points = plan.points(spec);
    let samples = points
        .par_iter()
        .map(|p| verify_integral(spec, std::slice::from_ref(p), tol).samples)
        .collect::<Vec<_>>()
        .concat();
    let main = orthogen_core::identity::VerificationReport {
        id: spec.id.to_owned(),
        tolerance: tol,
        samples,
    };
    let triangle = verify_triangle(spec, &plan, tol).map_err(|e| e.to_string());
    EntryReport::integral(spec, &main, triangle)
}

pub fn verify_entry(entry: &Entry, cfg: &RunConfig) -> EntryReport {
    let tol = cfg.tol.unwrap_or_else(|| entry.tolerance());
    match entry {
        Entry::Identity(spec) => {
            let points = identity_points(spec, cfg);
            EntryReport::identity(spec, &check_identity(spec, &points, tol))
        }
        Entry::Integral(spec) => check_integral(spec, cfg, tol),
    }
}

/// Runs `f` on a pool with `jobs` threads, or the global pool.
pub fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, CliError> {
    match jobs {
        None => Ok(f()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| CliError::config(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

pub fn verify(entries: &[Entry], cfg: &RunConfig) -> Result<Report, CliError> {
    let results = with_jobs(cfg.jobs, || entries.par_iter().map(|e| verify_entry(e, cfg)).collect())?;
    Ok(Report::new(cfg, results))
}

/// `ρ` as written in reports.
pub fn rho_pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}
