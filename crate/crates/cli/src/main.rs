use std::io;
use std::process::ExitCode;

use clap::Parser;
use quadrangle_cli::args::Cli;

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors.
    let cli = Cli::parse();
    let code = quadrangle_cli::run(&cli, &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(code)
}
