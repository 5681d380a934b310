//! Run configuration: command-line flags layered over an optional
//! key-value file.
//!
//! The file holds one `key = value` per line, `#` starts a comment, and the
//! keys are the long flag names (`tol`, `rho`, `seed`, `format`, `out`,
//! `jobs`, `family`, `x-count`, `draws`, `ids`).

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;

use crate::CliError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    #[default]
    Human,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "human" => Ok(Format::Human),
            _ => Err(CliError::config(format!("unknown format `{s}` (json, csv, human)"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Human => "human",
        })
    }
}

/// Partially specified settings from one source.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Settings {
    pub ids: Vec<String>,
    pub family: Option<String>,
    pub tol: Option<f64>,
    pub rhos: Option<Vec<Complex64>>,
    pub x_count: Option<usize>,
    pub draws: Option<usize>,
    pub seed: Option<u64>,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
    pub jobs: Option<usize>,
}

impl Settings {
    /// Values set here win over `base`.
    pub fn over(self, base: Settings) -> Settings {
        Settings {
            ids: if self.ids.is_empty() { base.ids } else { self.ids },
            family: self.family.or(base.family),
            tol: self.tol.or(base.tol),
            rhos: self.rhos.or(base.rhos),
            x_count: self.x_count.or(base.x_count),
            draws: self.draws.or(base.draws),
            seed: self.seed.or(base.seed),
            format: self.format.or(base.format),
            out: self.out.or(base.out),
            jobs: self.jobs.or(base.jobs),
        }
    }

    pub fn from_file(path: &Path) -> Result<Settings, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_owned(),
            source,
        })?;
        Settings::parse(&text).map_err(|e| CliError::config(format!("{}: {e}", path.display())))
    }

    pub fn parse(text: &str) -> Result<Settings, CliError> {
        let mut s = Settings::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| CliError::config(format!("line {}: expected `key = value`", i + 1)))?;
            let (key, value) = (key.trim(), value.trim());
            let at = |e: CliError| CliError::config(format!("line {}: {e}", i + 1));
            match key {
                "ids" => s.ids = value.split([',', ' ']).filter(|t| !t.is_empty()).map(String::from).collect(),
                "family" => s.family = Some(value.to_owned()),
                "tol" => s.tol = Some(parse_tol(value).map_err(at)?),
                "rho" => s.rhos = Some(parse_rhos(value).map_err(at)?),
                "x-count" => s.x_count = Some(parse_num(key, value).map_err(at)?),
                "draws" => s.draws = Some(parse_num(key, value).map_err(at)?),
                "seed" => s.seed = Some(parse_num(key, value).map_err(at)?),
                "format" => s.format = Some(value.parse().map_err(at)?),
                "out" => s.out = Some(PathBuf::from(value)),
                "jobs" => s.jobs = Some(parse_num(key, value).map_err(at)?),
                _ => return Err(CliError::config(format!("line {}: unknown key `{key}`", i + 1))),
            }
        }
        Ok(s)
    }
}

fn parse_num<T: FromStr>(key: &str, value: &str) -> Result<T, CliError> {
    value
        .parse()
        .map_err(|_| CliError::config(format!("bad value `{value}` for {key}")))
}

pub fn parse_tol(value: &str) -> Result<f64, CliError> {
    match value.parse::<f64>() {
        Ok(t) if t > 0.0 && t.is_finite() => Ok(t),
        _ => Err(CliError::config(format!("tolerance must be a positive number, got `{value}`"))),
    }
}

/// Comma-separated real or complex values such as `0.3,0.2+0.1i`.
pub fn parse_rhos(value: &str) -> Result<Vec<Complex64>, CliError> {
    let out = value
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<Complex64>()
                .ok()
                .filter(|z| z.re.is_finite() && z.im.is_finite())
                .ok_or_else(|| CliError::config(format!("bad ρ value `{t}`")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if out.is_empty() {
        return Err(CliError::config("empty ρ list"));
    }
    Ok(out)
}

/// Fully resolved configuration of one run.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub ids: Vec<String>,
    pub family: Option<String>,
    pub tol: Option<f64>,
    pub rhos: Option<Vec<Complex64>>,
    pub x_count: Option<usize>,
    pub draws: usize,
    pub seed: u64,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub jobs: Option<usize>,
}

pub const DEFAULT_SEED: u64 = 7;

impl RunConfig {
    pub fn resolve(s: Settings) -> Result<RunConfig, CliError> {
        if s.x_count == Some(0) {
            return Err(CliError::config("x-count must be at least 1"));
        }
        if s.jobs == Some(0) {
            return Err(CliError::config("jobs must be at least 1"));
        }
        Ok(RunConfig {
            ids: s.ids,
            family: s.family,
            tol: s.tol,
            rhos: s.rhos,
            x_count: s.x_count,
            draws: s.draws.unwrap_or(0),
            seed: s.seed.unwrap_or(DEFAULT_SEED),
            format: s.format.unwrap_or_default(),
            out: s.out,
            jobs: s.jobs,
        })
    }

    /// Echo of everything that can change results; output path and thread
    /// count are left out so reports compare equal across them.
    pub fn echo(&self) -> ConfigEcho {
        ConfigEcho {
            ids: self.ids.clone(),
            family: self.family.clone(),
            tol: self.tol,
            rho: self.rhos.as_ref().map(|v| v.iter().map(|z| [z.re, z.im]).collect()),
            x_count: self.x_count,
            draws: self.draws,
            seed: self.seed,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConfigEcho {
    pub ids: Vec<String>,
    pub family: Option<String>,
    pub tol: Option<f64>,
    pub rho: Option<Vec<[f64; 2]>>,
    pub x_count: Option<usize>,
    pub draws: usize,
    pub seed: u64,
}
