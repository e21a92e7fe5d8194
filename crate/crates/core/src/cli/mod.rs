//! The `bernoulli-ids` command line.
//!
//! Tabular commands (`closed`, `empirical`, `figure1`) write CSV with header
//! `x,ids_empirical,ids_closed,is_rational_point` and optionally an SVG plot
//! rendered from that CSV. Check commands (`verify-theorem1`,
//! `verify-prop1`, `bracket-check`) write JSON lines
//! `{check_id, params, pass, max_violation}` sorted by `check_id`.
//!
//! Exit status: 0 on success, 1 if a check fails, 2 on invalid configuration.

pub mod config;
pub mod svg;
pub mod table;
pub mod verify;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use thiserror::Error;

pub use config::{Cli, Command, EnergyArg, Options, RunConfig};
use table::Row;

use crate::error::Error as ModelError;
use crate::ids::{enumerate_rn, ids_closed_finite, ids_closed_series, ids_empirical};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(#[source] ModelError),
    #[error(transparent)]
    Compute(ModelError),
    #[error("cannot write {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("cannot render plot: {0}")]
    Plot(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) => 2,
            _ => 1,
        }
    }
}

impl From<ModelError> for CliError {
    fn from(e: ModelError) -> Self {
        CliError::Compute(e)
    }
}

/// What a successful run produced.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    /// Primary output: CSV or JSON lines.
    pub text: String,
    pub svg: Option<String>,
    /// False when a check command recorded a failing check.
    pub all_passed: bool,
}

/// I_p^≤ at an energy: exact at `a:b`, series on (0, 4), otherwise undefined.
fn closed_value(p: f64, e: &EnergyArg, tol: f64) -> crate::Result<Option<f64>> {
    match e {
        EnergyArg::Rational(r) => ids_closed_finite(p, r).map(Some),
        EnergyArg::Real(x) if *x > 0.0 && *x < 4.0 => ids_closed_series(p, *x, tol).map(|s| Some(s.value)),
        EnergyArg::Real(_) => Ok(None),
    }
}

/// Energies of the `figure1` grid: `4 i / (points + 1)`, `i = 1..=points`.
pub fn figure1_grid(points: usize) -> Vec<f64> {
    (1..=points).map(|i| 4.0 * i as f64 / (points + 1) as f64).collect()
}

pub const FIGURE1_GRID_POINTS: usize = 500;

/// Runs a validated configuration and returns its output without touching
/// the filesystem.
pub fn execute(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let tabular = |rows: Vec<Row>| {
        let text = table::to_csv_string(&rows);
        let svg = cfg.svg.as_ref().map(|_| svg::render_svg(&text)).transpose()?;
        Ok::<_, CliError>(Outcome {
            text,
            svg,
            all_passed: true,
        })
    };
    let checks = |mut records: Vec<verify::CheckRecord>| Outcome {
        all_passed: records.iter().all(|r| r.pass),
        text: verify::to_json_lines(&mut records),
        svg: None,
    };
    let p = cfg.p.unwrap_or(config::FIGURE1_P);

    match cfg.command {
        Command::Closed => {
            let rows = cfg
                .energies
                .iter()
                .map(|e| {
                    Ok(Row {
                        x: e.value(),
                        ids_empirical: None,
                        ids_closed: closed_value(p, e, cfg.tol)?,
                        is_rational_point: matches!(e, EnergyArg::Rational(_)),
                    })
                })
                .collect::<crate::Result<Vec<_>>>()?;
            tabular(rows)
        }
        Command::Empirical => {
            let zeta = cfg.zeta.expect("resolved");
            let xs: Vec<f64> = cfg.energies.iter().map(EnergyArg::value).collect();
            let est = ids_empirical(p, zeta, &xs, cfg.length, &cfg.seeds)?;
            let rows = cfg
                .energies
                .iter()
                .zip(est)
                .map(|(e, est)| {
                    Ok(Row {
                        x: e.value(),
                        ids_empirical: Some(est.estimate),
                        ids_closed: closed_value(p, e, cfg.tol)?,
                        is_rational_point: matches!(e, EnergyArg::Rational(_)),
                    })
                })
                .collect::<crate::Result<Vec<_>>>()?;
            tabular(rows)
        }
        Command::Figure1 => tabular(figure1_rows(cfg)?),
        Command::VerifyTheorem1 => {
            let ps = cfg.p.map(|p| vec![p]).unwrap_or_else(|| verify::THEOREM1_PS.to_vec());
            Ok(checks(verify::theorem1_suite(
                &verify::THEOREM1_PAIRS,
                &ps,
                cfg.length,
                &cfg.seeds,
            )?))
        }
        Command::VerifyProp1 => Ok(checks(verify::prop1_suite(cfg.n as usize, &verify::PROP1_TS)?)),
        Command::BracketCheck => {
            let ps = cfg.p.map(|p| vec![p]).unwrap_or_else(|| verify::BRACKET_PS.to_vec());
            let zetas = cfg
                .zeta
                .map(|z| vec![z])
                .unwrap_or_else(|| verify::BRACKET_ZETAS.to_vec());
            let base = cfg.seeds.first().copied().unwrap_or(0);
            Ok(checks(verify::bracket_suite(
                cfg.realizations,
                cfg.length,
                &ps,
                &zetas,
                20,
                base,
            )?))
        }
    }
}

/// Grid rows (series closed form) merged with the `R_n` rows (exact closed
/// form), sorted by energy, all with empirical estimates.
pub fn figure1_rows(cfg: &RunConfig) -> crate::Result<Vec<Row>> {
    let p = cfg.p.unwrap_or(config::FIGURE1_P);
    let zeta = cfg.zeta.unwrap_or_else(|| config::figure1_zeta(cfg.n));
    let mut energies: Vec<EnergyArg> = figure1_grid(FIGURE1_GRID_POINTS)
        .into_iter()
        .map(EnergyArg::Real)
        .collect();
    energies.extend(enumerate_rn(cfg.n, cfg.b_max).into_iter().map(EnergyArg::Rational));
    energies.sort_by(|a, b| a.value().total_cmp(&b.value()));

    let xs: Vec<f64> = energies.iter().map(EnergyArg::value).collect();
    let est = ids_empirical(p, zeta, &xs, cfg.length, &cfg.seeds)?;
    energies
        .iter()
        .zip(est)
        .map(|(e, est)| {
            Ok(Row {
                x: e.value(),
                ids_empirical: Some(est.estimate),
                ids_closed: closed_value(p, e, cfg.tol)?,
                is_rational_point: matches!(e, EnergyArg::Rational(_)),
            })
        })
        .collect()
}

fn write_to(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        }),
        None => io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            }),
    }
}

/// Validates `cli`, executes it and writes the outputs.
/// Returns the process exit code.
pub fn run(cli: &Cli) -> u8 {
    let cfg = match RunConfig::resolve(cli.command, &cli.opts) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {}", CliError::Config(e));
            return 2;
        }
    };
    let result = execute(&cfg).and_then(|out| {
        write_to(cfg.out.as_deref(), &out.text)?;
        if let (Some(path), Some(svg)) = (&cfg.svg, &out.svg) {
            write_to(Some(path), svg)?;
        }
        Ok(out.all_passed)
    });
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
