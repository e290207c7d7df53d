//! Command-line front end over `mpc_hull::cli`.

use std::process::ExitCode;

use clap::Parser;
use mpc_hull::cli::{self, RunOptions};
use mpc_hull::code::DistanceCaps;

/// Duals, hulls and LCD checks for matrix-product codes over Z_m.
///
/// With only FILE, runs the file's `run` lines. `verify <suite>` and
/// `--suite` need no file.
#[derive(Parser)]
#[command(name = "mpc-hull", version)]
struct Args {
    /// Spec file. Omit for `verify`.
    file: Option<String>,

    /// Command and arguments, e.g. `mpc C1 C2 A`.
    #[arg(trailing_var_arg = true, allow_hyphen_values = true)]
    command: Vec<String>,

    /// Enumerate codes with at most this many codewords.
    #[arg(long, default_value_t = DistanceCaps::default().enum_cap)]
    enum_cap: u64,

    /// Weight bound for the search on larger codes.
    #[arg(long, default_value_t = DistanceCaps::default().weight_cap)]
    weight_cap: usize,

    /// Cross-check against brute-force enumeration where feasible.
    #[arg(long)]
    oracle: bool,

    /// Run a property suite (`all` for every suite).
    #[arg(long)]
    suite: Option<String>,
}

fn run(args: Args) -> Result<String, cli::CliError> {
    let opts = RunOptions {
        caps: DistanceCaps {
            enum_cap: args.enum_cap,
            weight_cap: args.weight_cap,
        },
        oracle: args.oracle,
    };
    let empty = || cli::parse_spec("ring 2\n").expect("trivial document");
    if let Some(suite) = &args.suite {
        return cli::run_command(&empty(), &["verify".into(), suite.clone()], opts);
    }
    match args.file.as_deref() {
        None => cli::run_command(&empty(), &[], opts),
        Some("verify") => {
            let mut cmd = vec!["verify".to_string()];
            cmd.extend(args.command);
            cli::run_command(&empty(), &cmd, opts)
        }
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| cli::CliError {
                kind: cli::FailureKind::Parse,
                line: None,
                message: format!("{path}: {e}"),
            })?;
            let doc = cli::parse_spec(&text).map_err(|e| cli::CliError {
                message: format!("{path}: {}", e.message),
                ..e
            })?;
            if args.command.is_empty() {
                cli::run_document(&doc, opts)
            } else {
                cli::run_command(&doc, &args.command, opts)
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Args::parse()) {
        Ok(report) => {
            print!("{report}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
