use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use folia_cli::{exit_code, parse_param, run, to_json, Command, INPUT_ERROR};
use folia_core::theorems::{CheckOptions, SecondTypeMode};

/// Exact invariants and theorem checks for plane foliation germs.
#[derive(Parser)]
#[command(name = "folia", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Local invariants of the germ and of the divisor, if given.
    Invariants(Common),
    /// f^2 in (P, Q): membership, sigma^2 = 0 and the rank identity.
    CheckBs(Common),
    /// tau <= mu <= 2 tau and the equality case.
    CheckLiu(Common),
    /// The polar lower bound for mu.
    CheckCota(Common),
    /// Second type by the multiplicity criterion and/or the reduction.
    CheckSecondType(Common),
    /// Reduction of singularities by blow-ups.
    Reduce(Common),
    /// Euler identity, degree, singular set certificate, invariance.
    ProjectiveValidate(Common),
    /// Lower bound for the global Tjurina number of an invariant curve.
    ProjectiveGlobal(Common),
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Criterion,
    Reduction,
    Both,
}

#[derive(Args)]
struct Common {
    /// Input document.
    document: PathBuf,
    /// Parameter value, e.g. lambda=2 (repeatable).
    #[arg(long = "param", value_name = "NAME=VALUE", value_parser = parse_param)]
    params: Vec<(String, String)>,
    #[arg(long, default_value_t = 24)]
    max_blowups: usize,
    /// Highest truncation degree for the oracle.
    #[arg(long, default_value_t = 64)]
    truncation_cap: u32,
    /// Number of probes for the generic polar.
    #[arg(long, default_value_t = 7)]
    probes: usize,
    /// Print the report as JSON.
    #[arg(long)]
    json: bool,
    /// Also write the JSON report to this file.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "criterion")]
    mode: Mode,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, args) = match cli.command {
        Cmd::Invariants(a) => (Command::Invariants, a),
        Cmd::CheckBs(a) => (Command::CheckBs, a),
        Cmd::CheckLiu(a) => (Command::CheckLiu, a),
        Cmd::CheckCota(a) => (Command::CheckCota, a),
        Cmd::CheckSecondType(a) => (Command::CheckSecondType, a),
        Cmd::Reduce(a) => (Command::Reduce, a),
        Cmd::ProjectiveValidate(a) => (Command::ProjectiveValidate, a),
        Cmd::ProjectiveGlobal(a) => (Command::ProjectiveGlobal, a),
    };
    let text = match std::fs::read_to_string(&args.document) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {}: {e}", args.document.display());
            return ExitCode::from(INPUT_ERROR);
        }
    };
    let opts = CheckOptions {
        mode: match args.mode {
            Mode::Criterion => SecondTypeMode::Criterion,
            Mode::Reduction => SecondTypeMode::Reduction,
            Mode::Both => SecondTypeMode::Both,
        },
        max_blowups: args.max_blowups,
        probes: args.probes,
        truncation_cap: args.truncation_cap,
    };
    let report = match run(command, &text, &args.params, &opts) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {}: {e}", args.document.display());
            return ExitCode::from(INPUT_ERROR);
        }
    };
    let json = to_json(&report);
    if args.json {
        print!("{json}");
    } else {
        print!("{report}");
    }
    if let Some(path) = &args.out {
        if let Err(e) = std::fs::write(path, &json) {
            eprintln!("error: {}: {e}", path.display());
            return ExitCode::from(INPUT_ERROR);
        }
    }
    ExitCode::from(exit_code(&report))
}
