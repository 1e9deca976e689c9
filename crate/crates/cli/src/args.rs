//! Command-line arguments.

use std::f64::consts::FRAC_PI_2;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::sampling::DEFAULT_MARGIN;

#[derive(Debug, Parser)]
#[command(
    name = "quad",
    version,
    about = "Experiments with the balanced quadrangle map"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apply the map once.
    Step(StepArgs),
    /// Iterate and write the trajectory as CSV.
    Iterate(IterateArgs),
    /// Iterate until a cycle is found and classify it.
    Cycle(IterateArgs),
    /// Sample the trapezoid return map c(a).
    Curve(CurveArgs),
    /// Classify the limits of many seeded starting tuples.
    Basin(BasinArgs),
    /// Solve for the trapezoid fixed point or the generic 2-cycle.
    Solve {
        #[command(subcommand)]
        target: SolveTarget,
    },
    /// Jacobian spectrum of the map or its square at a tuple.
    Stability(StabilityArgs),
    /// Reproduce the published constants and claims.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Emit JSON instead of CSV.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Args)]
pub struct AngleArgs {
    /// Angles at A, B, C, D in radians.
    #[arg(
        long,
        value_delimiter = ',',
        required = true,
        allow_negative_numbers = true
    )]
    pub angles: Vec<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct StepArgs {
    #[command(flatten)]
    pub angles: AngleArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct IterationArgs {
    /// Recurrence tolerance for cycle detection.
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    #[arg(long, default_value_t = 10_000)]
    pub max_iter: usize,
    /// Keep iterates mirror-symmetric (for trapezoid and kite seeds).
    #[arg(long)]
    pub symmetric: bool,
}

#[derive(Debug, Clone, Args)]
pub struct IterateArgs {
    #[command(flatten)]
    pub angles: AngleArgs,
    #[command(flatten)]
    pub iteration: IterationArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct CurveArgs {
    #[arg(long, default_value_t = 1.4)]
    pub from: f64,
    #[arg(long, default_value_t = FRAC_PI_2)]
    pub to: f64,
    #[arg(long, default_value_t = 101)]
    pub samples: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Uniform values rescaled to sum 2π.
    Random,
    /// Tuples (a, π−a, π−a, a); iterated with the symmetric projection.
    Trapezoid,
}

#[derive(Debug, Clone, Args)]
pub struct BasinArgs {
    #[arg(long, default_value_t = 1000)]
    pub samples: u64,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Sampled angles stay in (margin, π − margin).
    #[arg(long, default_value_t = DEFAULT_MARGIN)]
    pub margin: f64,
    #[arg(long, value_enum, default_value_t = Family::Random)]
    pub family: Family,
    #[command(flatten)]
    pub iteration: IterationArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Subcommand)]
pub enum SolveTarget {
    /// Attracting fixed point of c(a) = a.
    Trapezoid(TrapezoidArgs),
    /// The generic 2-cycle.
    Cycle(CycleSolveArgs),
}

#[derive(Debug, Clone, Args)]
pub struct TrapezoidArgs {
    /// Lower end of the bisection bracket.
    #[arg(long, default_value_t = 1.4)]
    pub lo: f64,
    /// Upper end of the bisection bracket.
    #[arg(long, default_value_t = 1.5)]
    pub hi: f64,
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    /// Difference step for the slope c'(a*).
    #[arg(long, default_value_t = 1e-6)]
    pub h: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct CycleSolveArgs {
    /// Starting point (alpha, gamma, delta); defaults to a warmed-up orbit.
    #[arg(long, value_delimiter = ',')]
    pub initial: Option<Vec<f64>>,
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    #[arg(long, default_value_t = 10_000)]
    pub max_iter: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct StabilityArgs {
    #[command(flatten)]
    pub angles: AngleArgs,
    /// 1 for the map, 2 for its square.
    #[arg(long, default_value_t = 1)]
    pub order: u32,
    #[arg(long, default_value_t = 1e-6)]
    pub h: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub json: bool,
}
