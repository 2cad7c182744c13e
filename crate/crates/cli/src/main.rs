//! `octad`: command-line driver for the exact computations in `octad-core`.
//!
//! Exit codes: 0 on success, 1 when a check disagrees with its expected
//! value, 2 on unusable input (the report is not written in that case).

mod commands;
mod input;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::input::InputError;

#[derive(Parser, Debug)]
#[command(name = "octad", version, about = "Exact checks on nets of quadrics, Cayley octads and their Jacobian rings")]
struct Cli {
    /// Read the command's JSON input from this file (`-` for stdin).
    #[arg(long, global = true)]
    input: Option<PathBuf>,

    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Pretty-print the JSON report.
    #[arg(long, global = true)]
    pretty: bool,

    /// Worker threads for parallel work (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Progress messages on stderr.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Discriminant quartic, smoothness, ranks along the curve and base locus of a net.
    AnalyzeNet {
        /// Inline JSON: `{"quadrics": [Q1, Q2, Q3]}` with 4x4 rows of "p/q" strings.
        #[arg(long)]
        net: Option<String>,
    },
    /// Derived entries s13, s23, s33 and the configuration matrix.
    OctadClose {
        /// Inline JSON: `{"s11": "-1", "s21": "3", ...}` or `{"free": [...]}`.
        #[arg(long)]
        params: Option<String>,
    },
    /// Hodge slices, tangent vectors, quadratic forms and the origin certificate.
    IvhsReport {
        /// Inline JSON parameters; a list of parameter objects is processed in parallel.
        #[arg(long)]
        params: Option<String>,
        /// Include wall-clock timings (makes the report nondeterministic).
        #[arg(long)]
        timings: bool,
    },
    /// The exterior-cube model: Q(theta), Lefschetz rank, primitive dimensions.
    WedgeCheck {
        /// Inline JSON 3x3 symmetric theta; E11 when omitted.
        #[arg(long)]
        theta: Option<String>,
    },
    /// Factor identities and the branch pullback at given branch points.
    HyperellipticCheck {
        /// Inline JSON list of 8 distinct rationals; 1..8 when omitted.
        #[arg(long)]
        lambdas: Option<String>,
    },
    /// Runs every built-in reference fixture.
    VerifyPaper,
}

/// A finished command: the report and whether every check agreed.
pub struct Outcome {
    pub report: serde_json::Value,
    pub mismatch: bool,
}

fn run(cli: &Cli) -> Result<Outcome, InputError> {
    let path = cli.input.as_deref();
    match &cli.command {
        Command::AnalyzeNet { net } => commands::analyze_net(net.as_deref(), path),
        Command::OctadClose { params } => commands::octad_close(params.as_deref(), path),
        Command::IvhsReport { params, timings } => {
            commands::ivhs_report(params.as_deref(), path, *timings, cli.verbose > 0)
        }
        Command::WedgeCheck { theta } => commands::wedge_check(theta.as_deref(), path),
        Command::HyperellipticCheck { lambdas } => commands::hyperelliptic_check(lambdas.as_deref(), path),
        Command::VerifyPaper => Ok(commands::verify_paper(cli.verbose > 0)),
    }
}

fn emit(cli: &Cli, report: &serde_json::Value) -> std::io::Result<()> {
    let mut text = if cli.pretty {
        serde_json::to_string_pretty(report)?
    } else {
        serde_json::to_string(report)?
    };
    text.push('\n');
    match &cli.output {
        Some(p) => std::fs::write(p, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: --jobs: {e}");
            return ExitCode::from(2);
        }
    }
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = emit(&cli, &outcome.report) {
        eprintln!("error: writing report: {e}");
        return ExitCode::from(2);
    }
    if outcome.mismatch {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
