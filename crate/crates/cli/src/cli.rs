//! Command-line surface.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use ssvis_core::{Ifs, Point, Word};

use crate::args::{parse_ladder, parse_point, parse_theta, RhoLadder};
use crate::commands::{self, Format};
use crate::config::parse_config;
use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(name = "ssvis", version, about = "Projection and visibility experiments for planar self-similar sets")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// System description (JSON); the four-corner set when omitted.
    #[arg(long, global = true)]
    pub ifs: Option<PathBuf>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Cylinder budget for searches.
    #[arg(long, global = true, default_value_t = 1 << 20)]
    pub budget: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Orthogonal cover lengths along a cut ladder.
    Project {
        #[arg(long, value_parser = parse_theta, allow_hyphen_values = true)]
        theta: f64,
        #[arg(long, value_parser = parse_ladder)]
        rho_ladder: RhoLadder,
        /// Fill the `ms` column (breaks byte-identical output).
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Radial cover lengths along a cut ladder.
    Radial {
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        viewpoint: Point,
        #[arg(long, value_parser = parse_ladder)]
        rho_ladder: RhoLadder,
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Rotation-semigroup case analysis.
    Classify {
        #[command(flatten)]
        common: Common,
    },
    /// Recurrence word for a target word.
    Recurrence {
        #[arg(long)]
        word: Word,
        #[arg(long, default_value_t = 0.1)]
        delta: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Cylinders whose centers project within `r` of each other.
    Claim {
        #[arg(long, value_parser = parse_theta, allow_hyphen_values = true)]
        theta: f64,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Visibility certificates along a ladder of word counts.
    Certificate {
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        viewpoint: Point,
        #[arg(long, value_delimiter = ',', default_value = "2,4")]
        n_ladder: Vec<usize>,
        #[arg(long, default_value_t = 0.1)]
        delta: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Overlap bounds between two projected first-level pieces.
    Overlap {
        #[arg(long, value_parser = parse_theta, allow_hyphen_values = true)]
        theta: f64,
        /// Two one-based symbols, `i,j`.
        #[arg(long, value_delimiter = ',', num_args = 1)]
        branches: Vec<usize>,
        #[arg(long, value_parser = parse_ladder)]
        rho_ladder: RhoLadder,
        #[command(flatten)]
        common: Common,
    },
    /// SVG of the level-`depth` cylinders.
    Render {
        #[arg(long, default_value_t = 2)]
        depth: usize,
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        viewpoint: Option<Point>,
        #[command(flatten)]
        common: Common,
    },
    /// Similarity dimension and diameter bounds.
    Dimension {
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[command(flatten)]
        common: Common,
    },
}

impl Command {
    pub fn common(&self) -> &Common {
        match self {
            Command::Project { common, .. }
            | Command::Radial { common, .. }
            | Command::Classify { common }
            | Command::Recurrence { common, .. }
            | Command::Claim { common, .. }
            | Command::Certificate { common, .. }
            | Command::Overlap { common, .. }
            | Command::Render { common, .. }
            | Command::Dimension { common, .. } => common,
        }
    }
}

pub fn load_ifs(path: Option<&PathBuf>) -> Result<Ifs, CliError> {
    match path {
        None => Ok(Ifs::four_corner()),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| CliError::Config(format!("cannot read {}: {e}", p.display())))?;
            parse_config(&text)
        }
    }
}

/// Runs a parsed command and returns its output text.
pub fn execute(command: &Command) -> Result<String, CliError> {
    let common = command.common();
    let ifs = load_ifs(common.ifs.as_ref())?;
    let fmt = |default| common.format.unwrap_or(default);
    match command {
        Command::Project { theta, rho_ladder, timing, .. } => {
            commands::cmd_project(&ifs, *theta, rho_ladder, *timing, fmt(Format::Csv))
        }
        Command::Radial { viewpoint, rho_ladder, timing, .. } => {
            commands::cmd_radial(&ifs, *viewpoint, rho_ladder, *timing, fmt(Format::Csv))
        }
        Command::Classify { .. } => commands::cmd_classify(&ifs, fmt(Format::Text)),
        Command::Recurrence { word, delta, .. } => commands::cmd_recurrence(&ifs, word, *delta, fmt(Format::Text)),
        Command::Claim { theta, n, .. } => commands::cmd_claim(&ifs, *theta, *n, common.budget, fmt(Format::Text)),
        Command::Certificate { viewpoint, n_ladder, delta, .. } => {
            commands::cmd_certificate(&ifs, *viewpoint, n_ladder, *delta, common.budget, fmt(Format::Text))
        }
        Command::Overlap { theta, branches, rho_ladder, .. } => {
            let [i, j] = branches[..] else {
                return Err(CliError::Config("--branches takes exactly two symbols".into()));
            };
            commands::cmd_overlap(&ifs, *theta, (i, j), rho_ladder, fmt(Format::Csv))
        }
        Command::Render { depth, viewpoint, .. } => commands::cmd_render(&ifs, *depth, *viewpoint, fmt(Format::Svg)),
        Command::Dimension { tol, .. } => commands::cmd_dimension(&ifs, *tol, fmt(Format::Text)),
    }
}

/// Executes and writes to `--out` or stdout.
pub fn run(cli: &Cli) -> Result<(), CliError> {
    let text = execute(&cli.command)?;
    match &cli.command.common().out {
        Some(path) => std::fs::write(path, text)?,
        None => {
            use std::io::Write;
            std::io::stdout().write_all(text.as_bytes())?;
        }
    }
    Ok(())
}
