//! Command-line front end for the balanced quadrangle map.

pub mod args;
pub mod commands;
pub mod error;
pub mod output;
pub mod sampling;
pub mod verify;

use std::io::Write;

use args::{Cli, Command, SolveTarget};

pub use error::CliError;

/// Run a parsed command; returns the process exit code.
pub fn run(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8 {
    let result = match &cli.command {
        Command::Step(a) => commands::step_cmd(a, stdout),
        Command::Iterate(a) => commands::iterate_cmd(a, stdout, stderr),
        Command::Cycle(a) => commands::cycle_cmd(a, stdout),
        Command::Curve(a) => commands::curve_cmd(a, stdout),
        Command::Basin(a) => commands::basin_cmd(a, stdout),
        Command::Solve { target } => match target {
            SolveTarget::Trapezoid(a) => commands::solve_trapezoid_cmd(a, stdout),
            SolveTarget::Cycle(a) => commands::solve_cycle_cmd(a, stdout),
        },
        Command::Stability(a) => commands::stability_cmd(a, stdout),
        Command::Verify(a) => commands::verify_cmd(a, stdout),
    };
    match result {
        Ok(code) => code,
        // Output piped into a reader that stopped early.
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            let _ = writeln!(stderr, "{e}");
            e.exit_code()
        }
    }
}
