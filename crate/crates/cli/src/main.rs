//! `ostar`: batch front-end for symmetry-class jobs.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ostar_core::groups::FiniteGroup;
use ostar_core::job::{parse_config, run_job_with_threads, Format, JobConfig, Task};
use ostar_core::{Error, Result};

#[derive(Parser)]
#[command(
    name = "ostar",
    version,
    about = "Orthogonal bases of decomposable symmetrized tensors"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a job file without computing anything.
    Validate {
        /// Job file, or `-` for stdin.
        config: PathBuf,
    },
    /// Run the tasks listed in the job file.
    Run(RunArgs),
    /// Character table only.
    Chartable(RunArgs),
    /// Verdicts only (add --verify for the brute-force pass).
    Decide(RunArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Job file, or `-` for stdin.
    config: PathBuf,
    /// Write the report here instead of stdout (overrides output.path).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Report format (overrides output.format).
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Cap on n^m for exhaustive index scans (overrides budgets.index).
    #[arg(long)]
    budget: Option<u64>,
    /// Worker threads; reports do not depend on this.
    #[arg(long)]
    threads: Option<usize>,
    /// Append the brute-force verification pass.
    #[arg(long)]
    verify: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

fn read_config(path: &PathBuf) -> Result<JobConfig> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Invalid(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?
    };
    parse_config(&text)
}

fn run(args: &RunArgs, tasks: Option<Vec<Task>>) -> Result<()> {
    let mut cfg = read_config(&args.config)?;
    if let Some(t) = tasks {
        cfg.tasks = t;
    }
    if args.verify {
        cfg.tasks.push(Task::Verify);
    }
    cfg.tasks.sort();
    cfg.tasks.dedup();
    if let Some(b) = args.budget {
        cfg.budgets.index = b;
    }
    let format = match args.format {
        Some(FormatArg::Json) => Format::Json,
        Some(FormatArg::Csv) => Format::Csv,
        None => cfg.output.format,
    };
    let report = run_job_with_threads(&cfg, args.threads)?;
    let text = report.render(format)?;
    match args
        .out
        .clone()
        .or_else(|| cfg.output.path.clone().map(PathBuf::from))
    {
        Some(path) => std::fs::write(&path, text)
            .map_err(|e| Error::Invalid(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Validate { config } => read_config(config).map(|cfg| {
            println!(
                "ok: {} (order {}), representation of degree {}, n = {}",
                cfg.label,
                cfg.group.order(),
                cfg.rep.degree(),
                cfg.n
            );
        }),
        Command::Run(args) => run(args, None),
        Command::Chartable(args) => run(args, Some(vec![Task::Chartable])),
        Command::Decide(args) => run(args, Some(vec![Task::Decide])),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
