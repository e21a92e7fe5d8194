//! Command-line arguments and their validation into a [`RunConfig`].

use std::f64::consts::PI;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::error::{check_probability, Error, Result};
use crate::ids::{seed_range, RationalEnergy, DEFAULT_B_MAX, MIN_MATRIX_DIM};

#[derive(Debug, Parser)]
#[command(name = "bernoulli-ids", version, about = "IDS of the 1D Anderson-Bernoulli model")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Closed-form I_p^≤ at the given energies.
    Closed,
    /// Monte Carlo IDS at the given energies.
    Empirical,
    /// Empirical IDS, closed form and the R_n points on a 500-point grid.
    Figure1,
    /// Empirical vs closed form at seven rational energies above the critical bound.
    VerifyTheorem1,
    /// Eigenvalue bounds for the corner-perturbed Laplacian.
    VerifyProp1,
    /// Interlacing and bracketing counts on small random realizations.
    BracketCheck,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Closed => "closed",
            Command::Empirical => "empirical",
            Command::Figure1 => "figure1",
            Command::VerifyTheorem1 => "verify-theorem1",
            Command::VerifyProp1 => "verify-prop1",
            Command::BracketCheck => "bracket-check",
        }
    }
}

#[derive(Debug, Clone, Default, Args)]
pub struct Options {
    /// Bernoulli parameter p in (0, 1).
    #[arg(long, global = true)]
    pub p: Option<f64>,
    /// Disorder strength ζ.
    #[arg(long, global = true)]
    pub zeta: Option<f64>,
    /// Matrix dimension L (for bracket-check: the largest realization length).
    #[arg(long, global = true)]
    pub length: Option<usize>,
    /// Number of seeds, or an explicit comma-separated list.
    #[arg(long, global = true)]
    pub seeds: Option<String>,
    /// First seed when --seeds is a count.
    #[arg(long, global = true)]
    pub seed_base: Option<u64>,
    /// Comma-separated energies; `a:b` denotes 4 sin²(πa/(2b)) exactly.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub energies: Option<String>,
    /// Series truncation / solver tolerance.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Output path (CSV for tabular commands, JSON lines for checks); stdout if absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Optional SVG plot path (closed, empirical, figure1).
    #[arg(long, global = true)]
    pub svg: Option<PathBuf>,
    /// Size bound n of R_n (figure1) or largest interior size (verify-prop1).
    #[arg(long, global = true)]
    pub n: Option<u64>,
    /// Cutoff for the two infinite families of R_n.
    #[arg(long, global = true)]
    pub b_max: Option<u64>,
    /// Number of random realizations for bracket-check.
    #[arg(long, global = true)]
    pub realizations: Option<usize>,
}

/// An energy given either as a real number or exactly as `a:b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EnergyArg {
    Real(f64),
    Rational(RationalEnergy),
}

impl EnergyArg {
    pub fn value(&self) -> f64 {
        match self {
            EnergyArg::Real(x) => *x,
            EnergyArg::Rational(e) => e.value(),
        }
    }
}

pub fn parse_energies(s: &str) -> Result<Vec<EnergyArg>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|tok| {
            if let Some((a, b)) = tok.split_once(':') {
                let parse = |v: &str| {
                    v.trim()
                        .parse::<u64>()
                        .map_err(|_| Error::Parameter(format!("bad rational energy `{tok}`")))
                };
                Ok(EnergyArg::Rational(RationalEnergy::new(parse(a)?, parse(b)?)?))
            } else {
                tok.parse::<f64>()
                    .ok()
                    .filter(|x| x.is_finite())
                    .map(EnergyArg::Real)
                    .ok_or_else(|| Error::Parameter(format!("bad energy `{tok}`")))
            }
        })
        .collect()
}

pub fn parse_seeds(spec: Option<&str>, base: u64, default_count: usize) -> Result<Vec<u64>> {
    let Some(spec) = spec else {
        return Ok(seed_range(base, default_count));
    };
    let bad = || Error::Parameter(format!("bad seed specification `{spec}`"));
    if spec.contains(',') {
        let seeds = spec
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u64>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        if seeds.is_empty() {
            return Err(bad());
        }
        Ok(seeds)
    } else {
        let count: usize = spec.trim().parse().map_err(|_| bad())?;
        if count == 0 {
            return Err(Error::Parameter("at least one seed is required".into()));
        }
        Ok(seed_range(base, count))
    }
}

pub const FIGURE1_N: u64 = 20;
pub const FIGURE1_P: f64 = 0.3;
pub const DEFAULT_LENGTH: usize = 100_000;
pub const DEFAULT_SEEDS: usize = 5;
pub const DEFAULT_TOL: f64 = 1e-14;

pub fn figure1_zeta(n: u64) -> f64 {
    4.0 * n as f64 / PI + 4.0
}

/// Fully resolved, validated parameters for one run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    /// `None` lets verify-theorem1 and bracket-check sweep their default sets.
    pub p: Option<f64>,
    pub zeta: Option<f64>,
    pub length: usize,
    pub seeds: Vec<u64>,
    pub energies: Vec<EnergyArg>,
    pub tol: f64,
    pub n: u64,
    pub b_max: u64,
    pub realizations: usize,
    pub out: Option<PathBuf>,
    pub svg: Option<PathBuf>,
}

impl RunConfig {
    pub fn resolve(command: Command, o: &Options) -> Result<Self> {
        use Command::*;
        if let Some(p) = o.p {
            check_probability(p)?;
        }
        let p = match command {
            Closed | Empirical => Some(o.p.unwrap_or(FIGURE1_P)),
            Figure1 => Some(o.p.unwrap_or(FIGURE1_P)),
            _ => o.p,
        };
        let n = o.n.unwrap_or(match command {
            VerifyProp1 => 200,
            _ => FIGURE1_N,
        });
        let zeta = match command {
            Empirical => Some(o.zeta.unwrap_or(8.0)),
            Figure1 => Some(o.zeta.unwrap_or_else(|| figure1_zeta(n))),
            _ => o.zeta,
        };
        if let Some(z) = zeta {
            if !(z > 0.0 && z.is_finite()) {
                return Err(Error::Parameter(format!("zeta must be positive, got {z}")));
            }
        }
        if command == BracketCheck {
            if let Some(z) = zeta {
                if z < 8.0 {
                    return Err(Error::Parameter(format!("bracket-check needs zeta >= 8, got {z}")));
                }
            }
        }
        let default_length = if command == BracketCheck { 200 } else { DEFAULT_LENGTH };
        let length = o.length.unwrap_or(default_length);
        match command {
            Empirical | Figure1 | VerifyTheorem1 if length < MIN_MATRIX_DIM => {
                return Err(Error::Parameter(format!(
                    "length must be at least {MIN_MATRIX_DIM}, got {length}"
                )))
            }
            BracketCheck if length < 8 => {
                return Err(Error::Parameter(format!(
                    "bracket-check length must be at least 8, got {length}"
                )))
            }
            _ => {}
        }
        let seeds = parse_seeds(o.seeds.as_deref(), o.seed_base.unwrap_or(0), DEFAULT_SEEDS)?;
        let energies = match &o.energies {
            Some(s) => parse_energies(s)?,
            None => Vec::new(),
        };
        if matches!(command, Closed | Empirical) && energies.is_empty() {
            return Err(Error::Parameter(format!("`{}` needs --energies", command.name())));
        }
        if command == Closed {
            if let Some(x) = energies.iter().map(EnergyArg::value).find(|x| !(*x > 0.0 && *x < 4.0)) {
                return Err(Error::Domain(format!("closed form is defined on (0, 4), got {x}")));
            }
        }
        let tol = o.tol.unwrap_or(DEFAULT_TOL);
        if tol.is_nan() || tol <= 0.0 {
            return Err(Error::Parameter(format!("tol must be positive, got {tol}")));
        }
        if n == 0 && command == Figure1 {
            return Err(Error::Parameter("n must be at least 1".into()));
        }
        let b_max = o.b_max.unwrap_or(DEFAULT_B_MAX);
        if b_max < 2 {
            return Err(Error::Parameter(format!("b-max must be at least 2, got {b_max}")));
        }
        let realizations = o.realizations.unwrap_or(50);
        if realizations == 0 {
            return Err(Error::Parameter("realizations must be at least 1".into()));
        }
        Ok(Self {
            command,
            p,
            zeta,
            length,
            seeds,
            energies,
            tol,
            n,
            b_max,
            realizations,
            out: o.out.clone(),
            svg: o.svg.clone(),
        })
    }
}
