use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use orthogen::config::{parse_rhos, parse_tol};
use orthogen::report::emit;
use orthogen::select::{catalogue, parse_family, select, ListRow};
use orthogen::sweep::{grid, Axis};
use orthogen::{CliError, Format, RunConfig, Settings};

#[derive(Parser)]
#[command(name = "orthogen", version, about = "Check generating-function expansions and their integrals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List identities and integrals.
    List {
        #[arg(long)]
        family: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Verify identities and integrals; ids may be globs such as 'JAC-*'.
    Verify {
        ids: Vec<String>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Tabulate residuals and truncation orders along one axis.
    Sweep {
        ids: Vec<String>,
        /// `rho` or a parameter name such as `gamma`.
        #[arg(long)]
        axis: String,
        #[arg(long, allow_hyphen_values = true)]
        from: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        to: Option<f64>,
        #[arg(long)]
        step: Option<f64>,
        /// Explicit comma-separated axis values.
        #[arg(long, allow_hyphen_values = true)]
        values: Option<String>,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Args)]
struct RunArgs {
    /// Key-value file with the same keys as the long flags.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    tol: Option<String>,
    /// Comma-separated ρ values; complex values as `0.3+0.2i`.
    #[arg(long, allow_hyphen_values = true)]
    rho: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long)]
    family: Option<String>,
    /// Chebyshev abscissae per (ρ, parameter set).
    #[arg(long)]
    x_count: Option<usize>,
    /// Extra seeded uniform abscissae per (ρ, parameter set).
    #[arg(long)]
    draws: Option<usize>,
}

impl RunArgs {
    fn resolve(self, ids: Vec<String>, default_format: Format) -> Result<RunConfig, CliError> {
        let file = match &self.config {
            Some(p) => Settings::from_file(p)?,
            None => Settings::default(),
        };
        let flags = Settings {
            ids,
            family: self.family,
            tol: self.tol.as_deref().map(parse_tol).transpose()?,
            rhos: self.rho.as_deref().map(parse_rhos).transpose()?,
            x_count: self.x_count,
            draws: self.draws,
            seed: self.seed,
            format: self.format,
            out: self.out,
            jobs: self.jobs,
        };
        let mut merged = flags.over(file);
        merged.format = merged.format.or(Some(default_format));
        RunConfig::resolve(merged)
    }
}

fn list(family: Option<String>, format: Format) -> Result<ExitCode, CliError> {
    let family = family.as_deref().map(parse_family).transpose()?;
    let rows: Vec<ListRow> = catalogue()
        .iter()
        .filter(|e| family.is_none_or(|f| e.family() == f))
        .map(ListRow::from)
        .collect();
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&rows).map_err(|e| CliError::config(e.to_string()))? + "\n",
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in &rows {
                w.serialize(r).map_err(|e| CliError::config(e.to_string()))?;
            }
            String::from_utf8(w.into_inner().map_err(|e| CliError::config(e.to_string()))?)
                .map_err(|e| CliError::config(e.to_string()))?
        }
        Format::Human => rows
            .iter()
            .map(|r| format!("{:<18} {:<8} {:<10} {:<6.0e} {}\n", r.id, r.kind, r.family, r.tolerance, r.anchor))
            .collect(),
    };
    emit(&text, None)?;
    Ok(ExitCode::SUCCESS)
}

fn verify(ids: Vec<String>, run: RunArgs) -> Result<ExitCode, CliError> {
    let cfg = run.resolve(ids, Format::Human)?;
    let entries = select(&cfg.ids, cfg.family.as_deref())?;
    let report = orthogen::run::verify(&entries, &cfg)?;
    emit(&report.render(cfg.format)?, cfg.out.as_deref())?;
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn sweep(
    ids: Vec<String>,
    axis: String,
    range: (Option<f64>, Option<f64>, Option<f64>),
    values: Option<String>,
    run: RunArgs,
) -> Result<ExitCode, CliError> {
    let cfg = run.resolve(ids, Format::Csv)?;
    if cfg.ids.is_empty() {
        return Err(CliError::config("sweep needs at least one id"));
    }
    let entries = select(&cfg.ids, cfg.family.as_deref())?;
    let values = match (values, range) {
        (Some(v), (None, None, None)) => v
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<f64>().map_err(|_| CliError::config(format!("bad axis value `{t}`"))))
            .collect::<Result<Vec<_>, _>>()?,
        (None, (Some(from), Some(to), Some(step))) => grid(from, to, step)?,
        _ => return Err(CliError::config("give either --values or all of --from, --to, --step")),
    };
    let rows = orthogen::sweep::sweep(&entries, &Axis::parse(&axis), &values, &cfg)?;
    emit(&orthogen::sweep::render(&rows, cfg.format)?, cfg.out.as_deref())?;
    Ok(if rows.iter().any(|r| r.status == "fail") { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::List { family, format } => list(family, format),
        Command::Verify { ids, run } => verify(ids, run),
        Command::Sweep {
            ids,
            axis,
            from,
            to,
            step,
            values,
            run,
        } => sweep(ids, axis, (from, to, step), values, run),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
