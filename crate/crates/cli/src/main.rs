//! `gentrig`: tabulate trigonometric-like functions, exponentiate matrices,
//! classify conics and evaluate Bessel and hypercomplex quantities.

mod commands;
mod error;
mod matrix_io;
mod output;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::commands::HyperArgs;
use crate::error::CliResult;
use crate::matrix_io::read_matrix;
use crate::output::{write_report, Format, Report};

#[derive(Debug, Parser)]
#[command(
    name = "gentrig",
    version,
    about = "Generalized Euler identities from the command line"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    output_path: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Tabulate (θ, C, S) for the unit h² = a + bh.
    #[command(allow_negative_numbers = true)]
    Tlf {
        #[arg(long)]
        a: f64,
        #[arg(long)]
        b: f64,
        #[arg(long)]
        theta_min: f64,
        #[arg(long)]
        theta_max: f64,
        /// Number of intervals; steps + 1 rows are written.
        #[arg(long)]
        steps: usize,
    },
    /// e^{θM} for a square matrix read from JSON or CSV (`-` for stdin).
    #[command(allow_negative_numbers = true)]
    Expm {
        #[arg(long)]
        matrix_file: String,
        #[arg(long)]
        theta: f64,
    },
    /// Classify the conic x² + (tr M)xy + (det M)y² = 1 of a 2×2 matrix.
    #[command(allow_negative_numbers = true)]
    Conic {
        #[arg(long)]
        matrix_file: String,
    },
    /// (A₀, A₁, A₂) for the cubic unit η³ = a0 + a1·η + a2·η².
    #[command(allow_negative_numbers = true)]
    Cubic {
        #[arg(long)]
        a0: f64,
        #[arg(long)]
        a1: f64,
        #[arg(long)]
        a2: f64,
        #[arg(long)]
        theta: f64,
        #[arg(long, default_value_t = 0.0)]
        phi: f64,
    },
    /// Two-index Bessel function B_{m,n}(x).
    #[command(allow_negative_numbers = true)]
    Bessel {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        beta: f64,
        #[arg(long)]
        m: i64,
        #[arg(long)]
        n: i64,
        #[arg(long)]
        x: f64,
    },
    /// f(x + hy) = u + hv for a preset f: exp, sin, cos, geometric, identity, square.
    #[command(allow_negative_numbers = true)]
    Hyper {
        #[arg(long)]
        unit_a: f64,
        #[arg(long)]
        unit_b: f64,
        #[arg(long = "fn")]
        function: String,
        #[arg(long)]
        x: f64,
        #[arg(long)]
        y: f64,
        #[arg(long, default_value_t = 1e-4)]
        cr_step: f64,
        #[arg(long, default_value_t = 1e-3)]
        pde_step: f64,
    },
}

fn run(command: &Command) -> CliResult<Report> {
    match command {
        Command::Tlf {
            a,
            b,
            theta_min,
            theta_max,
            steps,
        } => commands::tlf(*a, *b, *theta_min, *theta_max, *steps),
        Command::Expm { matrix_file, theta } => commands::expm(&read_matrix(matrix_file)?, *theta),
        Command::Conic { matrix_file } => commands::conic(&read_matrix(matrix_file)?),
        Command::Cubic {
            a0,
            a1,
            a2,
            theta,
            phi,
        } => commands::cubic(*a0, *a1, *a2, *theta, *phi),
        Command::Bessel {
            alpha,
            beta,
            m,
            n,
            x,
        } => commands::bessel(*alpha, *beta, *m, *n, *x),
        Command::Hyper {
            unit_a,
            unit_b,
            function,
            x,
            y,
            cr_step,
            pde_step,
        } => commands::hyper(&HyperArgs {
            unit_a: *unit_a,
            unit_b: *unit_b,
            function,
            x: *x,
            y: *y,
            cr_step: *cr_step,
            pde_step: *pde_step,
        }),
    }
}

fn emit(cli: &Cli, report: &Report) -> CliResult<()> {
    match &cli.output_path {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            write_report(report, cli.format, &mut w)?;
            w.flush()?;
        }
        None => write_report(report, cli.format, io::stdout().lock())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli.command).and_then(|report| emit(&cli, &report)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("gentrig: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
