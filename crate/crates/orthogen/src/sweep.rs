//! Residual and truncation surfaces along one axis: `ρ` or a named
//! parameter.

use num_complex::Complex64;
use orthogen_core::identity::{
    chebyshev_points, metric, terms_needed, verify_point, SamplePlan, SamplePoint, SampleStatus, K_CAP,
};
use orthogen_core::integral::{verify_integral, IntegralPlan};
use rayon::prelude::*;
use serde::Serialize;

use crate::select::Entry;
use crate::{CliError, Format, RunConfig};

/// Real `ρ` used when sweeping a parameter and no `--rho` is given.
pub const DEFAULT_SWEEP_RHO: f64 = 0.5;

#[derive(Clone, Debug, PartialEq)]
pub enum Axis {
    Rho,
    Param(String),
}

impl Axis {
    pub fn parse(name: &str) -> Axis {
        match name {
            "rho" | "ρ" => Axis::Rho,
            other => Axis::Param(other.to_owned()),
        }
    }

    pub fn name(&self) -> &str {
        match self {
            Axis::Rho => "rho",
            Axis::Param(p) => p,
        }
    }
}

/// Grid `from, from+step, …` up to `to` inclusive, with a little slack for
/// rounding in the step.
pub fn grid(from: f64, to: f64, step: f64) -> Result<Vec<f64>, CliError> {
    if !(from.is_finite() && to.is_finite() && step.is_finite()) || step <= 0.0 || to < from {
        return Err(CliError::config("empty sweep axis"));
    }
    let n = ((to - from) / step + 1e-9).floor() as usize;
    if n > 100_000 {
        return Err(CliError::config("sweep axis has too many points"));
    }
    // Rounded to 12 decimals so 0.05-steps print as written.
    Ok((0..=n).map(|i| ((from + i as f64 * step) * 1e12).round() / 1e12).collect())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    pub id: String,
    pub axis: String,
    pub value: f64,
    pub points: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub worst_residual: Option<f64>,
    /// Largest over judged points of the smallest truncation that stays
    /// within tolerance; the quadrature order for integrals.
    pub k_needed: Option<usize>,
    /// Largest truncation (or quadrature order) the verifier used.
    pub k_verified: usize,
    pub status: &'static str,
}

fn row(
    entry: &Entry,
    axis: &Axis,
    value: f64,
    outcomes: impl Iterator<Item = (SampleStatus, f64, usize, Option<usize>)>,
) -> SweepRow {
    let mut r = SweepRow {
        id: entry.id().to_owned(),
        axis: axis.name().to_owned(),
        value,
        points: 0,
        pass: 0,
        fail: 0,
        skipped: 0,
        worst_residual: None,
        k_needed: None,
        k_verified: 0,
        status: "skipped",
    };
    for (status, res, k_used, needed) in outcomes {
        r.points += 1;
        match status {
            SampleStatus::Pass => r.pass += 1,
            SampleStatus::Fail => r.fail += 1,
            SampleStatus::Skipped => {
                r.skipped += 1;
                continue;
            }
        }
        r.k_verified = r.k_verified.max(k_used);
        if res.is_finite() {
            r.worst_residual = Some(r.worst_residual.map_or(res, |w: f64| w.max(res)));
        }
        if let Some(n) = needed {
            r.k_needed = Some(r.k_needed.map_or(n, |m| m.max(n)));
        }
    }
    r.status = if r.fail > 0 {
        "fail"
    } else if r.pass > 0 {
        "pass"
    } else {
        "skipped"
    };
    r
}

fn fixed_rho(cfg: &RunConfig) -> Complex64 {
    cfg.rhos
        .as_ref()
        .and_then(|r| r.first().copied())
        .unwrap_or(Complex64::new(DEFAULT_SWEEP_RHO, 0.0))
}

fn sweep_value(entry: &Entry, axis: &Axis, value: f64, cfg: &RunConfig) -> SweepRow {
    let tol = cfg.tol.unwrap_or_else(|| entry.tolerance());
    let (rho, set) = match axis {
        Axis::Rho => (Complex64::new(value, 0.0), None),
        Axis::Param(name) => (fixed_rho(cfg), Some((name.as_str(), Complex64::new(value, 0.0)))),
    };
    match entry {
        Entry::Identity(spec) => {
            let mut params = spec.default_params();
            if let Some((name, v)) = set {
                params.set(name, v);
            }
            let xs = chebyshev_points(cfg.x_count.unwrap_or(SamplePlan::default().x_count), spec.x_range.0, spec.x_range.1);
            let outcomes: Vec<_> = xs
                .iter()
                .map(|&x| {
                    let point = SamplePoint {
                        x,
                        rho,
                        params: params.clone(),
                    };
                    let o = verify_point(spec, &point, tol);
                    let needed = match o.status {
                        SampleStatus::Skipped => None,
                        _ => terms_needed(spec, &point, tol, K_CAP).ok().flatten(),
                    };
                    (o.status, metric(&o), o.k_used, needed)
                })
                .collect();
            row(entry, axis, value, outcomes.into_iter())
        }
        Entry::Integral(spec) => {
            let mut params = spec.default_params();
            if let Some((name, v)) = set {
                params.set(name, v);
            }
            let plan = IntegralPlan {
                rhos: Some(vec![rho]),
                ..IntegralPlan::default()
            };
            let report = verify_integral(spec, &plan.points_with(spec, &params), tol);
            let outcomes: Vec<_> = report
                .samples
                .iter()
                .map(|o| (o.status, metric(o), o.k_used, Some(o.k_used)))
                .collect();
            row(entry, axis, value, outcomes.into_iter())
        }
    }
}

/// Checks that a parameter axis names a parameter of the entry.
pub fn check_axis(entry: &Entry, axis: &Axis) -> Result<(), CliError> {
    if let Axis::Param(name) = axis {
        let known = match entry {
            Entry::Identity(s) => s.default_params().contains(name),
            Entry::Integral(s) => s.default_params().contains(name),
        };
        if !known {
            return Err(CliError::config(format!("{} has no parameter `{name}`", entry.id())));
        }
    }
    Ok(())
}

pub fn sweep(entries: &[Entry], axis: &Axis, values: &[f64], cfg: &RunConfig) -> Result<Vec<SweepRow>, CliError> {
    if values.is_empty() {
        return Err(CliError::config("empty sweep axis"));
    }
    for e in entries {
        check_axis(e, axis)?;
    }
    let jobs: Vec<(&Entry, f64)> = entries.iter().flat_map(|e| values.iter().map(move |v| (e, *v))).collect();
    crate::run::with_jobs(cfg.jobs, || {
        jobs.par_iter()
            .map(|(e, v)| sweep_value(e, axis, *v, cfg))
            .collect()
    })
}

pub fn render(rows: &[SweepRow], format: Format) -> Result<String, CliError> {
    let err = |e: &dyn std::fmt::Display| CliError::config(e.to_string());
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(rows).map_err(|e| err(&e))?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in rows {
                w.serialize(r).map_err(|e| err(&e))?;
            }
            let bytes = w.into_inner().map_err(|e| err(&e))?;
            String::from_utf8(bytes).map_err(|e| err(&e))
        }
        Format::Human => {
            let mut s = String::new();
            for r in rows {
                let worst = r.worst_residual.map_or("-".to_owned(), |w| format!("{w:.2e}"));
                let need = r.k_needed.map_or("-".to_owned(), |k| k.to_string());
                s += &format!(
                    "{:<18} {}={:<8} {:<8} worst={:<9} K_needed={:<5} K={}\n",
                    r.id, r.axis, r.value, r.status, worst, need, r.k_verified
                );
            }
            Ok(s)
        }
    }
}
