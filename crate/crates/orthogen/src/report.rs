//! Report model and its JSON, CSV and plain-text renderings.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use orthogen_core::identity::{
    IdentitySpec, Params, SampleOutcome, SamplePoint, SampleStatus, VerificationReport,
};
use orthogen_core::integral::{IntegralPoint, IntegralSpec};
use serde::Serialize;

use crate::config::ConfigEcho;
use crate::run::rho_pair;
use crate::{CliError, Format, RunConfig};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    /// Seconds since the Unix epoch; the only field that varies between
    /// identical runs.
    pub generated_at: u64,
    pub config: ConfigEcho,
    pub status: &'static str,
    pub counts: Counts,
    pub results: Vec<EntryReport>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Counts {
    fn add(&mut self, status: &str) {
        match status {
            "pass" => self.pass += 1,
            "fail" => self.fail += 1,
            _ => self.skipped += 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum PointRecord {
    Identity {
        x: f64,
        rho: [f64; 2],
        params: BTreeMap<&'static str, [f64; 2]>,
    },
    Integral {
        k: usize,
        rho: [f64; 2],
        params: BTreeMap<&'static str, [f64; 2]>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SampleRecord {
    pub point: PointRecord,
    /// Truncation order for identities; quadrature order or Wilson panel
    /// count for integrals.
    #[serde(rename = "K")]
    pub k: usize,
    pub residual_abs: Option<f64>,
    pub residual_rel: Option<f64>,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SubReport {
    pub status: &'static str,
    pub counts: Counts,
    pub worst: Option<SampleRecord>,
    pub samples: Vec<SampleRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EntryReport {
    pub id: String,
    pub kind: &'static str,
    pub family: &'static str,
    pub tolerance: f64,
    pub status: &'static str,
    pub counts: Counts,
    pub worst: Option<SampleRecord>,
    pub samples: Vec<SampleRecord>,
    /// Quadrature projection of the source identity, for integrals.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub triangle: Option<SubReport>,
}

fn finite(v: f64) -> Option<f64> {
    v.is_finite().then_some(v)
}

fn params_map(p: &Params) -> BTreeMap<&'static str, [f64; 2]> {
    p.iter().map(|(k, v)| (k, [v.re, v.im])).collect()
}

fn record<P>(o: &SampleOutcome<P>, point: impl Fn(&P) -> PointRecord) -> SampleRecord {
    SampleRecord {
        point: point(&o.point),
        k: o.k_used,
        residual_abs: finite(o.residual_abs),
        residual_rel: finite(o.residual_rel),
        status: o.status.as_str(),
        note: o.note,
    }
}

fn identity_point(p: &SamplePoint) -> PointRecord {
    PointRecord::Identity {
        x: p.x,
        rho: rho_pair(p.rho),
        params: params_map(&p.params),
    }
}

fn integral_point(p: &IntegralPoint) -> PointRecord {
    PointRecord::Integral {
        k: p.k,
        rho: rho_pair(p.rho),
        params: params_map(&p.params),
    }
}

fn sub<P>(r: &VerificationReport<P>, point: impl Fn(&P) -> PointRecord + Copy) -> SubReport {
    let samples: Vec<SampleRecord> = r.samples.iter().map(|o| record(o, point)).collect();
    let mut counts = Counts::default();
    for s in &samples {
        counts.add(s.status);
    }
    SubReport {
        status: r.status().as_str(),
        counts,
        worst: r.worst().map(|o| record(o, point)),
        samples,
        error: None,
    }
}

impl EntryReport {
    pub fn identity(spec: &IdentitySpec, r: &VerificationReport) -> EntryReport {
        let s = sub(r, identity_point);
        EntryReport {
            id: spec.id.clone(),
            kind: "identity",
            family: spec.family.tag(),
            tolerance: r.tolerance,
            status: s.status,
            counts: s.counts,
            worst: s.worst,
            samples: s.samples,
            triangle: None,
        }
    }

    pub fn integral(
        spec: &IntegralSpec,
        r: &VerificationReport<IntegralPoint>,
        triangle: Result<VerificationReport<IntegralPoint>, String>,
    ) -> EntryReport {
        let s = sub(r, integral_point);
        let t = match triangle {
            Ok(t) => sub(&t, integral_point),
            Err(e) => SubReport {
                status: SampleStatus::Fail.as_str(),
                counts: Counts::default(),
                worst: None,
                samples: Vec::new(),
                error: Some(e),
            },
        };
        let status = if s.status == "fail" || t.status == "fail" {
            "fail"
        } else {
            s.status
        };
        EntryReport {
            id: spec.id.to_owned(),
            kind: "integral",
            family: spec.family.tag(),
            tolerance: r.tolerance,
            status,
            counts: s.counts,
            worst: s.worst,
            samples: s.samples,
            triangle: Some(t),
        }
    }

    /// Residual of the worst judged sample under the pass metric.
    pub fn worst_residual(&self) -> Option<f64> {
        self.worst.as_ref().map(residual_of)
    }
}

fn residual_of(s: &SampleRecord) -> f64 {
    match (s.residual_abs, s.residual_rel) {
        (Some(a), Some(r)) => a.min(r),
        (Some(a), None) => a,
        (None, Some(r)) => r,
        (None, None) => f64::NAN,
    }
}

impl Report {
    pub fn new(cfg: &RunConfig, results: Vec<EntryReport>) -> Report {
        let mut counts = Counts::default();
        for r in &results {
            counts.add(r.status);
        }
        let status = if counts.fail > 0 { "fail" } else { "pass" };
        let generated_at = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        Report {
            schema_version: SCHEMA_VERSION,
            generated_at,
            config: cfg.echo(),
            status,
            counts,
            results,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == "pass"
    }

    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).map_err(|e| CliError::config(e.to_string()))?;
                s.push('\n');
                Ok(s)
            }
            Format::Csv => self.csv(),
            Format::Human => Ok(self.human()),
        }
    }

    fn csv(&self) -> Result<String, CliError> {
        #[derive(Serialize)]
        struct Row<'a> {
            id: &'a str,
            kind: &'a str,
            part: &'a str,
            x: Option<f64>,
            k: Option<usize>,
            rho_re: f64,
            rho_im: f64,
            params: String,
            #[serde(rename = "K")]
            order: usize,
            residual_abs: Option<f64>,
            residual_rel: Option<f64>,
            status: &'a str,
            note: &'a str,
        }
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut put = |e: &EntryReport, part: &str, s: &SampleRecord| {
            let (x, k, rho, params) = match &s.point {
                PointRecord::Identity { x, rho, params } => (Some(*x), None, rho, params),
                PointRecord::Integral { k, rho, params } => (None, Some(*k), rho, params),
            };
            let params = params
                .iter()
                .map(|(n, v)| if v[1] == 0.0 { format!("{n}={}", v[0]) } else { format!("{n}={}{:+}i", v[0], v[1]) })
                .collect::<Vec<_>>()
                .join(";");
            w.serialize(Row {
                id: &e.id,
                kind: e.kind,
                part,
                x,
                k,
                rho_re: rho[0],
                rho_im: rho[1],
                params,
                order: s.k,
                residual_abs: s.residual_abs,
                residual_rel: s.residual_rel,
                status: s.status,
                note: s.note.unwrap_or(""),
            })
        };
        for e in &self.results {
            for s in &e.samples {
                put(e, "main", s).map_err(|e| CliError::config(e.to_string()))?;
            }
            for s in e.triangle.iter().flat_map(|t| &t.samples) {
                put(e, "triangle", s).map_err(|e| CliError::config(e.to_string()))?;
            }
        }
        let bytes = w.into_inner().map_err(|e| CliError::config(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| CliError::config(e.to_string()))
    }

    fn human(&self) -> String {
        let mut s = String::new();
        for e in &self.results {
            let worst = e.worst_residual().map_or("-".to_owned(), |w| format!("{w:.2e}"));
            s += &format!(
                "{:<18} {:<8} pass={:<4} fail={:<3} skip={:<3} worst={:<9} tol={:.0e}",
                e.id, e.status, e.counts.pass, e.counts.fail, e.counts.skipped, worst, e.tolerance
            );
            if let Some(t) = &e.triangle {
                let tw = t.worst.as_ref().map(residual_of).map_or("-".to_owned(), |w| format!("{w:.2e}"));
                s += &format!("  triangle {} worst={tw}", t.status);
            }
            s.push('\n');
        }
        s += &format!(
            "{}: {} passed, {} failed, {} skipped\n",
            self.status, self.counts.pass, self.counts.fail, self.counts.skipped
        );
        s
    }
}

/// Writes `text` to `path` through a temporary file in the same directory.
pub fn write_atomic(path: &Path, text: &str) -> Result<(), CliError> {
    let io = |source| CliError::Io {
        path: path.to_owned(),
        source,
    };
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(text.as_bytes()).map_err(io)?;
    tmp.as_file().sync_all().map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}

/// Prints to stdout or writes atomically to the configured file.
pub fn emit(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(p) => write_atomic(p, text),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            })
        }
    }
}
