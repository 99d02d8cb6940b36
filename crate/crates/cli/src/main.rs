mod commands;
mod corpus;
mod error;
mod report;
mod session;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use burch_core::PrimeField;
use clap::{Parser, Subcommand, ValueEnum};

use commands::Outcome;
use error::CliError;
use report::Report;
use session::Session;

#[derive(Parser, Debug)]
#[command(name = "burch", version, about = "Burch ideals and rings over finite prime fields")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized searches.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Override the prime of the ring declaration.
    #[arg(long, global = true)]
    modulus: Option<u32>,
    /// Default resolution length.
    #[arg(long, global = true, default_value_t = 6)]
    max_length: usize,
    /// Add wall-clock time to the report.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Route {
    Definition,
    All,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether an ideal is Burch.
    Check {
        file: PathBuf,
        ideal: String,
        #[arg(long, value_enum, default_value_t = Route::Definition)]
        route: Route,
    },
    /// Numerical invariants of an ideal and its quotient ring.
    Invariants { file: PathBuf, ideal: String },
    /// Minimal free resolution of a module over the quotient by an ideal.
    Resolve {
        file: PathBuf,
        /// Ideal defining the ring.
        ring: String,
        /// Module name; `k` is the residue field.
        #[arg(default_value = "k")]
        module: String,
        #[arg(long)]
        length: Option<usize>,
    },
    /// Whether k is a direct summand of a syzygy module.
    SyzygySummand {
        file: PathBuf,
        ring: String,
        #[arg(default_value = "k")]
        module: String,
        #[arg(long)]
        index: usize,
    },
    /// Dimensions of Tor between two modules.
    Tor {
        file: PathBuf,
        ring: String,
        left: String,
        right: String,
        #[arg(long)]
        index: Option<usize>,
    },
    /// Weak and ordinary m-fullness.
    Mfull {
        file: PathBuf,
        ideal: String,
        #[arg(long)]
        trials: Option<usize>,
    },
    /// Cut a quotient down by a sequence of elements.
    Cut {
        file: PathBuf,
        ideal: String,
        /// Element to cut by; repeat for a sequence.
        #[arg(long = "by", required = true)]
        by: Vec<String>,
        #[arg(long)]
        allow_nonlinear: bool,
    },
    /// Fibre product of two quotients on disjoint variables.
    Fibre { file: PathBuf, left: String, right: String },
    /// Exhaustive check over monomial ideals of k[x,y].
    Sweep {
        #[arg(long, default_value_t = 3)]
        max_socle_degree: u32,
        /// Checks to run, comma separated; default all.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
    },
    /// Regression corpus of worked examples.
    Corpus {
        #[arg(long)]
        only: Option<String>,
        /// List entry names.
        #[arg(long)]
        list: bool,
    },
}

fn corpus(only: Option<&str>, list: bool, field: PrimeField, command: String) -> Result<Outcome, CliError> {
    let mut r = Report::new(command);
    if list {
        for e in corpus::ENTRIES {
            r.invariant(e.id, e.about);
        }
        return Ok(r.into());
    }
    let entries: Vec<&corpus::Entry> = match only {
        Some(id) => vec![corpus::find(id).ok_or_else(|| CliError::Input(format!("unknown corpus entry `{id}`")))?],
        None => corpus::ENTRIES.iter().collect(),
    };
    let mut failed = Vec::new();
    for e in entries {
        let items = e.run(field)?;
        let bad: Vec<&corpus::Item> = items.iter().filter(|i| !i.passed()).collect();
        r.verdict(e.id, if bad.is_empty() { "pass" } else { "fail" });
        if !bad.is_empty() {
            r.witness(e.id, &bad);
            failed.push(e.id);
        }
    }
    let failure = (!failed.is_empty()).then(|| CliError::Corpus(format!("failed entries {failed:?}")));
    Ok(Outcome { report: r, failure })
}

fn run(cli: &Cli, command: String) -> Result<Outcome, CliError> {
    let load = |f: &PathBuf| Session::read(f, cli.modulus);
    let field = || PrimeField::new(cli.modulus.unwrap_or(PrimeField::default().modulus())).map_err(CliError::from);
    match &cli.command {
        Command::Check { file, ideal, route } => {
            commands::check(&load(file)?, ideal, matches!(route, Route::All), command)
        }
        Command::Invariants { file, ideal } => commands::invariants(&load(file)?, ideal, command),
        Command::Resolve { file, ring, module, length } => {
            commands::resolve(&load(file)?, ring, module, length.unwrap_or(cli.max_length), command)
        }
        Command::SyzygySummand { file, ring, module, index } => {
            commands::syzygy_summand(&load(file)?, ring, module, *index, command)
        }
        Command::Tor { file, ring, left, right, index } => {
            commands::tor(&load(file)?, ring, left, right, *index, cli.max_length, command)
        }
        Command::Mfull { file, ideal, trials } => commands::mfull(&load(file)?, ideal, *trials, cli.seed, command),
        Command::Cut { file, ideal, by, allow_nonlinear } => {
            commands::cut(&load(file)?, ideal, by, *allow_nonlinear, command)
        }
        Command::Fibre { file, left, right } => commands::fibre(&load(file)?, left, right, command),
        Command::Sweep { max_socle_degree, checks } => commands::sweep_cmd(field()?, *max_socle_degree, checks, command),
        Command::Corpus { only, list } => corpus(only.as_deref(), *list, field()?, command),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = std::env::args().skip(1).filter(|a| a != "--timing").collect::<Vec<_>>().join(" ");
    let start = Instant::now();
    match run(&cli, command) {
        Ok(Outcome { mut report, failure }) => {
            if cli.timing {
                report.timing_ms = Some(start.elapsed().as_millis());
            }
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            match failure {
                Some(e) => {
                    eprintln!("{e}");
                    ExitCode::from(e.exit_code() as u8)
                }
                None => ExitCode::SUCCESS,
            }
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
