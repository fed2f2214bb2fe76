use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use log::error;

use submax::cli::{
    exit_code, parse_case, parse_corpus, render_classify, render_report, run_corpus, to_json, ClassifyDoc, ReportDoc,
};
use submax::engine::{verify_case, Tier, Verdict, DEFAULT_BUDGET};
use submax::oracle::classify;

#[derive(Parser)]
#[command(name = "submax", version, about = "π-submaximal subgroups of minimal simple groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CaseArgs {
    /// One of l2-2p, l2-3p, l2-prime, sz, l3-3.
    #[arg(long)]
    family: String,
    /// Field size (optional for l3-3).
    #[arg(long)]
    q: Option<u64>,
    /// Comma-separated primes; empty for π = ∅.
    #[arg(long, default_value = "")]
    pi: String,
}

#[derive(Subcommand)]
enum Command {
    /// Print the predicted π-submaximal subgroup classes.
    Classify {
        #[command(flatten)]
        case: CaseArgs,
        #[arg(long)]
        json: bool,
    },
    /// Compute the classes by brute force and compare with the prediction.
    Verify {
        #[command(flatten)]
        case: CaseArgs,
        #[arg(long, default_value = "full")]
        tier: Tier,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long)]
        json: bool,
        /// Step budget for searches.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Verify every case of a corpus file.
    Corpus {
        #[arg(long)]
        file: PathBuf,
        /// Write one JSON report per line here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
}

fn set_threads(threads: Option<usize>) {
    if let Some(n) = threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            error!("cannot configure {n} threads: {e}");
        }
    }
}

fn invalid(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match cli.command {
        Command::Classify { case, json } => {
            let case = match parse_case(&case.family, case.q, &case.pi) {
                Ok(c) => c,
                Err(e) => return invalid(e),
            };
            let res = match classify(&case) {
                Ok(r) => r,
                Err(e) => return invalid(e),
            };
            if json {
                println!("{}", to_json(&ClassifyDoc::new(&case, &res)));
            } else {
                print!("{}", render_classify(&case, &res));
            }
            ExitCode::SUCCESS
        }
        Command::Verify {
            case,
            tier,
            threads,
            json,
            budget,
        } => {
            set_threads(threads);
            let case = match parse_case(&case.family, case.q, &case.pi) {
                Ok(c) => c,
                Err(e) => return invalid(e),
            };
            let report = match verify_case(&case, tier, budget) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(3);
                }
            };
            if json {
                println!("{}", to_json(&ReportDoc::new(&report)));
            } else {
                print!("{}", render_report(&report));
            }
            ExitCode::from(exit_code(&report.verdict) as u8)
        }
        Command::Corpus {
            file,
            out,
            threads,
            budget,
        } => {
            set_threads(threads);
            let text = match std::fs::read_to_string(&file) {
                Ok(t) => t,
                Err(e) => return invalid(format!("{}: {e}", file.display())),
            };
            let corpus = match parse_corpus(&text) {
                Ok(c) => c,
                Err(e) => return invalid(format!("{}: {e}", file.display())),
            };
            let reports = run_corpus(&corpus, budget);
            if let Some(path) = out {
                let lines: String = reports
                    .iter()
                    .map(|r| to_json(&ReportDoc::new(r)) + "\n")
                    .collect();
                if let Err(e) = std::fs::write(&path, lines) {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(3);
                }
            }
            let mut matched = 0;
            for r in &reports {
                println!("{:<12} {} [{}]", r.verdict.label(), r.case, r.tier);
                for d in r.verdict.details() {
                    println!("             - {d}");
                }
                matched += usize::from(r.verdict.is_match());
            }
            println!("{matched}/{} cases match", reports.len());
            let code = if reports.iter().any(|r| matches!(r.verdict, Verdict::Mismatch(_))) {
                1
            } else if matched < reports.len() {
                3
            } else {
                0
            };
            ExitCode::from(code)
        }
    }
}
