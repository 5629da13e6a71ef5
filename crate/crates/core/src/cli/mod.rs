//! Command-line surface: argument definitions, file formats and SVG output.
//!
//! Exit codes: 0 when every requested property holds, 1 when one fails,
//! 2 for unreadable input or bad parameters.

mod commands;
pub mod format;
pub mod render;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub use commands::{execute, parse_angle, Output};

#[derive(Debug, Parser)]
#[command(name = "greedy-grid", version, about = "Greedy grid drawings, Schnyder woods and greedy routing")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Hexagon family on 3i+4 vertices (--i).
    Cao,
    /// Hexagon family closed by its outer triangle (--i).
    #[value(name = "cao+")]
    CaoPlus,
    /// Nested triangles G_m on 3m vertices (--m).
    Nested,
    /// Two copies of G_m glued into K4 (--m).
    Glued,
    /// Random Halin graph on n vertices (--n, --seed).
    HalinRandom,
    /// Wheel on n vertices (--n).
    Wheel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Cao,
    CaoConvex,
    Halin,
    Wheel,
    /// Alpha-Schnyder drawing of a nested triangulation (--alpha).
    Witness,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a graph of one of the built-in families.
    Generate {
        family: Family,
        #[arg(long)]
        i: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw a graph file with one of the constructions.
    Draw {
        algorithm: Algorithm,
        input: PathBuf,
        /// Angle for the witness, e.g. 0.5, pi/6 or 2pi/9.
        #[arg(long)]
        alpha: Option<String>,
        /// Level-to-level scale of the witness.
        #[arg(long)]
        scale: Option<f64>,
        /// Translate so the smallest coordinates become zero.
        #[arg(long)]
        normalize: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check properties of a drawing file.
    Verify {
        input: PathBuf,
        /// Comma-separated subset of: planar, embedding, convex,
        /// strict-convex, angle-monotone, greedy, grid, wood, alpha.
        #[arg(long, default_value = "planar,convex,angle-monotone,greedy")]
        checks: String,
        /// Angle for the alpha check.
        #[arg(long)]
        alpha: Option<String>,
        /// Grid bound for the grid check.
        #[arg(long)]
        width: Option<u64>,
        #[arg(long)]
        height: Option<u64>,
    },
    /// Render a drawing file as SVG.
    Render {
        input: PathBuf,
        /// Pixels per unit.
        #[arg(long, default_value_t = 40.0)]
        scale: f64,
        #[arg(long)]
        no_labels: bool,
        /// Stroke colors of wood colors 1,2,3.
        #[arg(long)]
        colors: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Audit the level areas of an alpha-Schnyder drawing of G_m. Without an
    /// input file the built-in witness is audited.
    Audit {
        input: Option<PathBuf>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        alpha: String,
        /// Level-to-level scale of the built-in witness.
        #[arg(long)]
        scale: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Simulate greedy forwarding on a drawing file.
    Route {
        input: PathBuf,
        #[arg(long, default_value = "best-neighbor")]
        policy: String,
        #[arg(long, requires = "to")]
        from: Option<usize>,
        #[arg(long, requires = "from")]
        to: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Parses arguments, runs the command and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli.command) {
        Ok(out) => match out.emit() {
            Ok(()) => out.status,
            Err(e) => {
                eprintln!("error: {e}");
                2
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            commands::exit_code(&e)
        }
    }
}
