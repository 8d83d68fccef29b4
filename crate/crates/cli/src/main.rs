//! `apery`: tables, verification suites, evaluations and the gate report
//! for the linear forms u_n zeta(3) - v_n.
//!
//! Exit status: 0 on success, 1 when a check fails or a computation is
//! inconsistent, 2 on a usage error.

mod commands;
mod report;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{CommandFactory, Parser, Subcommand};

use report::{Format, Report};

#[derive(Parser, Debug)]
#[command(
    name = "apery",
    version,
    about = "Exact and certified computations for the zeta(3) linear forms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Largest n (for `eval`, the n evaluated)
    #[arg(long, global = true, default_value_t = 10)]
    n_max: u64,

    /// Decimal places of certified output
    #[arg(long, global = true, default_value_t = 30, value_parser = clap::value_parser!(u32).range(1..=100_000))]
    digits: u32,

    /// Denominator in the gate demonstration
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    q: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
enum Command {
    /// u_n, v_n, D_n, F_n and the growth bound per n
    Table,
    /// Telescoping, integrality, vanishing-sum, bound and coincidence suites
    Verify,
    /// Both forms at n = --n-max, by both evaluation paths
    Eval,
    /// Gate reports, the gate constant and the threshold scans
    Gate,
    /// Recover both certificates by linear algebra and compare
    Fit,
}

const EXIT_FAILURE: u8 = 1;

fn run(cli: &Cli) -> apery::Result<Report> {
    match cli.command {
        Command::Table => commands::table(cli.n_max, cli.digits),
        Command::Verify => commands::verify(cli.n_max, cli.digits),
        Command::Eval => commands::eval(cli.n_max, cli.digits),
        Command::Gate => commands::gate(cli.n_max, cli.q),
        Command::Fit => commands::fit(cli.n_max),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.command == Command::Gate && cli.n_max < 2 {
        Cli::command()
            .error(
                clap::error::ErrorKind::ValueValidation,
                "gate needs --n-max >= 2",
            )
            .exit();
    }
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_FAILURE);
        }
    };
    let written = match &cli.out {
        Some(path) => File::create(path).and_then(|f| {
            let mut w = BufWriter::new(f);
            report.render(cli.format, &mut w)?;
            w.flush()
        }),
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            report
                .render(cli.format, &mut lock)
                .and_then(|_| lock.flush())
        }
    };
    if let Err(e) = written {
        eprintln!("error: cannot write report: {e}");
        return ExitCode::from(EXIT_FAILURE);
    }
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAILURE)
    }
}
