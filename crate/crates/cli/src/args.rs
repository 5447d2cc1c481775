use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use pga::verify::DEFAULT_SEED;

#[derive(Debug, Parser)]
#[command(name = "pga", version, about = "Plane-based geometric algebra toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the basis-blade product table.
    Cayley(CayleyArgs),
    /// Run the randomized formula suite against the analytic oracle.
    Check(CheckArgs),
    /// Kaleidoscope of two mirror planes at angle pi/k.
    Orbit(OrbitArgs),
    /// Sample the path of a point under a continuous screw motion.
    Screw(ScrewArgs),
    /// Integrate a free rigid body and report conservation.
    Top(TopArgs),
    /// Value and gradient of an expression by dual numbers.
    Diff(DiffArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Dim {
    #[value(name = "2d")]
    Two,
    #[value(name = "3d")]
    Three,
}

impl Dim {
    pub fn name(self) -> &'static str {
        match self {
            Dim::Two => "2d",
            Dim::Three => "3d",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Labels {
    /// Reference labels (1, e0, e1, e2, E0, E1, E2, I); 2d only.
    Reference,
    /// Ascending-index blade names such as e013.
    Canonical,
}

#[derive(Debug, Args)]
pub struct CayleyArgs {
    pub algebra: Dim,
    /// Label set; defaults to `reference` for 2d and `canonical` for 3d.
    #[arg(long, value_enum)]
    pub labels: Option<Labels>,
    /// Machine-readable output instead of an aligned table.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    pub dim: Dim,
    /// Trials per row (same as --trials).
    #[arg(value_name = "TRIALS", conflicts_with = "trials",
          value_parser = clap::value_parser!(u64).range(1..))]
    pub trials_pos: Option<u64>,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub trials: Option<u64>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Negative control: flip the sign of e1*e2 in the product table.
    #[arg(long, hide = true)]
    pub corrupt: bool,
}

impl CheckArgs {
    pub fn trial_count(&self) -> usize {
        self.trials.or(self.trials_pos).unwrap_or(1000) as usize
    }
}

#[derive(Debug, Args)]
pub struct OrbitArgs {
    /// Mirrors meet at angle pi/k; the group has 2k elements.
    #[arg(value_parser = clap::value_parser!(u32).range(2..=10_000))]
    pub k: u32,
    /// Euclidean point to replicate, as a JSON array [x, y, z].
    #[arg(long, default_value = "[1.0, 0.3, 0.0]")]
    pub point: String,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ScrewArgs {
    /// Axis: `x`, `y`, `z` or JSON {"point": [..], "direction": [..]}; `@file` reads a file.
    #[arg(long, default_value = "z")]
    pub axis: String,
    /// Total rotation in radians.
    #[arg(long, allow_negative_numbers = true)]
    pub angle: f64,
    /// Advance along the axis per radian.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub pitch: f64,
    /// Number of intervals; the path has samples + 1 rows.
    #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: u64,
    /// Point to transport, as a JSON array [x, y, z].
    #[arg(long, default_value = "[1.0, 0.0, 0.0]")]
    pub point: String,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TopArgs {
    /// `octahedron` or JSON [{"mass": m, "position": [x, y, z]}, ..]; `@file` reads a file.
    #[arg(long, default_value = "octahedron")]
    pub body: String,
    /// Initial body velocity: six bivector coordinates
    /// [w01, w02, w03, w23, w31, w12] or {"angular": [wx, wy, wz]}.
    #[arg(long, default_value = r#"{"angular": [0.0, 0.0, 1.0]}"#)]
    pub omega: String,
    #[arg(long, default_value_t = 1e-3, value_parser = positive, allow_negative_numbers = true)]
    pub dt: f64,
    #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub steps: u64,
    /// Record every n-th step (the last step is always recorded).
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub stride: u64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DiffArgs {
    /// Expression over + - * / ^, exp, ln, sin, cos, sqrt, pi, e.
    pub expression: String,
    /// Point: `x=1,y=2`, a JSON object, or a bare number for one variable.
    #[arg(long, allow_hyphen_values = true)]
    pub at: String,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn positive(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(format!("must be a positive finite number, got {s}"))
    }
}
