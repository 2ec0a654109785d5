use std::process::ExitCode;

use clap::Parser;
use flatdual_cli::{exit, run, Cli, Command, Format};

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(p) = cli.precision.as_deref().filter(|p| *p != "double") {
        eprintln!("note: --precision {p} is not available, using double");
    }
    let format = match &cli.command {
        Command::Derivatives(a) => a.format,
        Command::Grad(a) | Command::Jac(a) | Command::Hess(a) => a.format,
    };
    match run(&cli) {
        Ok(report) => {
            match format {
                Format::Plain => print!("{}", report.to_plain()),
                Format::Json => println!("{}", report.to_json()),
            }
            if report.finite {
                ExitCode::from(exit::OK)
            } else {
                eprintln!("warning: result has non-finite components");
                ExitCode::from(exit::NON_FINITE)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit::USAGE)
        }
    }
}
