use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use groupinv::corpus::{self, builtin_corpus, parse_corpus, GroupRecord, Source};
use groupinv::report::{pi_table, run_report, ReportOptions};
use groupinv::{Error, GroupContext};

/// Character-degree and class-size invariants of finite permutation groups.
#[derive(Parser)]
#[command(name = "groupinv", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check every criterion on a corpus and write the JSON report.
    Verify {
        /// Stanza-format corpus file.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Include the builtin groups (the default when no file is given).
        #[arg(long)]
        builtin: bool,
        /// Largest prime set for the π-parameterized checks.
        #[arg(long, default_value_t = 2)]
        pi_bound: usize,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print m_G, w_G and the u_π / |S_π| tables of one group.
    Invariants {
        #[arg(long)]
        group: String,
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        pi_bound: usize,
    },
    /// Print the character degree frequencies of one group.
    Degrees {
        #[arg(long)]
        group: String,
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
}

enum Failure {
    Input(String),
    Disagreement,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn read_corpus(path: &Path) -> Result<Vec<GroupRecord>, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let records = parse_corpus(&text, Source::File)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    if records.is_empty() {
        eprintln!("warning: {} contains no groups", path.display());
    }
    Ok(records)
}

fn load(file: Option<&Path>, builtin: bool) -> Result<Vec<GroupRecord>, Failure> {
    let mut records = Vec::new();
    if builtin || file.is_none() {
        records = builtin_corpus();
    }
    if let Some(path) = file {
        records.extend(read_corpus(path)?);
    }
    corpus::check_unique(&records)?;
    Ok(records)
}

fn lookup(name: &str, file: Option<&Path>) -> Result<GroupRecord, Failure> {
    let records = match file {
        Some(path) => read_corpus(path)?,
        None => builtin_corpus(),
    };
    Ok(corpus::find(&records, name)?.clone())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Verify {
            corpus,
            builtin,
            pi_bound,
            out,
        } => {
            let records = load(corpus.as_deref(), builtin)?;
            let report = run_report(&records, &ReportOptions { pi_bound });
            let json = report.to_json();
            match out {
                Some(path) => fs::write(&path, json)
                    .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?,
                None => print!("{json}"),
            }
            let s = &report.summary;
            eprintln!(
                "{} groups, {} skipped, {} verdicts, {} agree, {} disagree, {} experimental disagree",
                s.groups_evaluated,
                s.groups_skipped,
                s.total_verdicts,
                s.agreements,
                s.disagreements,
                s.experimental_disagreements
            );
            for skip in &report.skipped {
                eprintln!("skipped {}: {}", skip.name, skip.reason);
            }
            if report.exit_code() != 0 {
                return Err(Failure::Disagreement);
            }
        }
        Command::Invariants {
            group,
            corpus,
            pi_bound,
        } => {
            let record = lookup(&group, corpus.as_deref())?;
            let ctx = GroupContext::new(&record.name, &record.group)?;
            println!("group {}", record.name);
            println!("order {}", ctx.order());
            println!("m_G {}", ctx.degrees());
            println!("w_G {}", ctx.class_sizes());
            println!(
                "{:<12} {:>12} {:>12} {:>12} {:>12}",
                "pi", "u_pi", "u_pi'", "S_pi", "S_pi'"
            );
            for row in pi_table(&ctx, pi_bound) {
                println!(
                    "{:<12} {:>12} {:>12} {:>12} {:>12}",
                    row.pi, row.u_pi, row.u_pi_complement, row.s_pi, row.s_pi_complement
                );
            }
        }
        Command::Degrees { group, corpus } => {
            let record = lookup(&group, corpus.as_deref())?;
            println!("{}", groupinv::character_degrees(&record.group)?);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Disagreement) => ExitCode::from(1),
        Err(Failure::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
