mod checks;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use a5fano::barth::BarthFixtures;
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use checks::{Context, Suite, CATALOG};
use report::SuiteReport;

#[derive(Parser)]
#[command(
    name = "a5fano",
    version,
    about = "Exact verification of the Burkhardt quartic and the Barth double solid"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite.
    Verify {
        suite: Suite,
        /// Run only this check (repeatable); `name` or `suite/name`.
        #[arg(long = "check", value_name = "NAME")]
        checks: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Directory with replacement fixture files.
        #[arg(long)]
        fixtures: Option<PathBuf>,
        /// Worker threads.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
        jobs: u16,
    },
    /// Print every check with what it certifies.
    List,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match cli.command {
        Command::List => {
            let width = CATALOG.iter().map(|c| c.full_name().len()).max().unwrap_or(0);
            for c in CATALOG {
                println!("{:width$}  {}", c.full_name(), c.claim);
            }
            ExitCode::SUCCESS
        }
        Command::Verify { suite, checks, format, out, fixtures, jobs } => {
            let selected = match checks::select(suite, &checks) {
                Ok(s) => s,
                Err(e) => return usage_error(&e),
            };
            let fixtures = match fixtures {
                Some(dir) if !dir.is_dir() => {
                    return usage_error(&format!("fixture directory {} does not exist", dir.display()))
                }
                Some(dir) => BarthFixtures::from_dir(&dir),
                None => BarthFixtures::embedded(),
            };
            let pool = match rayon::ThreadPoolBuilder::new().num_threads(jobs.into()).build() {
                Ok(p) => p,
                Err(e) => return usage_error(&e.to_string()),
            };
            let ctx = Context::new(fixtures);
            let results = pool.install(|| selected.par_iter().map(|c| c.run(&ctx)).collect());
            let report = SuiteReport::new(&suite.to_string(), results);
            let text = match format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json(),
            };
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, text) {
                        return usage_error(&format!("cannot write {}: {e}", path.display()));
                    }
                }
                None => print!("{text}"),
            }
            if report.summary.fail == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
