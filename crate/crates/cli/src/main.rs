use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use tracemod_cli::{exit, run, Format, Options};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

/// Trace modules, rigidity and Ext over quotients of polynomial rings.
#[derive(Debug, Parser)]
#[command(name = "tracemod", version)]
struct Cli {
    /// Session file; standard input when absent.
    file: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    /// Seed for random ideal generation.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads for check censuses.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Degree cap for Gröbner computations.
    #[arg(long)]
    max_degree: Option<u32>,
    /// Largest i tried when searching for a nonvanishing Ext^i.
    #[arg(long)]
    ext_bound: Option<usize>,
    /// Largest vector space dimension an Artinian ring may have.
    #[arg(long)]
    dim_cap: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let source = match &cli.file {
        Some(path) => std::fs::read_to_string(path),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map(|_| s)
        }
    };
    let source = match source {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit::OTHER as u8);
        }
    };
    let defaults = Options::default();
    let options = Options {
        format: match cli.format {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        },
        seed: cli.seed,
        jobs: cli.jobs.max(1),
        max_degree: cli.max_degree,
        ext_bound: cli.ext_bound.unwrap_or(defaults.ext_bound),
        dim_cap: cli.dim_cap.unwrap_or(defaults.dim_cap),
    };
    let code = run(&source, &options, &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(code as u8)
}
