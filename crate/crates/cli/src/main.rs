use std::process::ExitCode;
use std::time::Instant;

use abelcodes::cocyclic::DEFAULT_CAP;
use abelcodes::Exec;
use abelcodes_cli::commands::{self, Common, Method};
use abelcodes_cli::report::{ErrorOutcome, Input, Payload, Report, SCHEMA_VERSION};
use abelcodes_cli::{exit_code, render, suite};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "abelcodes", version, about = "Cocyclic subgroups, automorphism witnesses and minimal abelian codes")]
struct Cli {
    /// Emit one JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for the randomized part of verify-suite.
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
    /// Largest group (or Sylow component) that brute force will walk.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: u64,
    /// Record wall time in the report.
    #[arg(long, global = true)]
    timing: bool,
    /// Run every kernel on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Formula,
    Brute,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Number of G-equivalence classes of minimal codes.
    Eta {
        group: String,
        #[arg(long, value_enum, default_value = "formula")]
        method: MethodArg,
    },
    /// Cocyclic subgroups grouped by isomorphism type.
    Inventory { group: String },
    /// An automorphism carrying one cocyclic subgroup onto another.
    Witness {
        group: String,
        /// Generators of H, e.g. "3,1;0,2" in the reference basis.
        #[arg(long, allow_hyphen_values = true)]
        h: String,
        #[arg(long, allow_hyphen_values = true)]
        k: String,
    },
    /// Minimal codes of GF(q) G.
    Codes {
        group: String,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        weights: bool,
        #[arg(long)]
        orbits: bool,
    },
    /// Runs acceptance criteria 1 to 8.
    VerifySuite,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let common = Common { cap: cli.cap, exec: if cli.sequential { Exec::Sequential } else { Exec::Parallel } };
    let start = Instant::now();
    let (name, (input, result)) = match &cli.command {
        Command::Eta { group, method } => {
            let method = match method {
                MethodArg::Formula => Method::Formula,
                MethodArg::Brute => Method::Brute,
                MethodArg::Both => Method::Both,
            };
            ("eta", commands::eta(group, method, &common))
        }
        Command::Inventory { group } => ("inventory", commands::inventory(group, &common)),
        Command::Witness { group, h, k } => ("witness", commands::witness(group, h, k, &common)),
        Command::Codes { group, q, weights, orbits } => ("codes", commands::codes(group, *q, *weights, *orbits, &common)),
        Command::VerifySuite => {
            let input = Input { seed: Some(cli.seed), cap: cli.cap, ..Input::default() };
            ("verify-suite", (input, Ok(Payload::Suite(suite::run_suite(cli.seed)))))
        }
    };
    let result = result.unwrap_or_else(|e| Payload::Error(ErrorOutcome { exit_code: exit_code(&e), message: e.to_string() }));
    let report = Report {
        schema_version: SCHEMA_VERSION,
        command: name.to_string(),
        input,
        timing_ms: cli.timing.then(|| start.elapsed().as_secs_f64() * 1e3),
        result,
    };
    let code = report.result.exit_code();
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    } else if matches!(report.result, Payload::Error(_)) {
        eprint!("{}", render::text(&report));
    } else {
        print!("{}", render::text(&report));
    }
    ExitCode::from(code as u8)
}
