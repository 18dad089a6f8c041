use std::path::{Path, PathBuf};
use std::process::ExitCode;

use arthur_cli::global::{global_text, load_family, ramanujan_report};
use arthur_cli::orbits::{list_orbits, orbits_text};
use arthur_cli::report::to_machine;
use arthur_cli::{check_file, CliError, Format};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

#[derive(Parser)]
#[command(name = "arthur", version, about = "Exact packet verdicts for unramified Arthur parameters")]
struct Cli {
    #[arg(long, value_enum, default_value_t = FormatArg::Text, global = true)]
    format: FormatArg,
    /// Include per-root Euler factors and the dominant S.
    #[arg(long, global = true)]
    certify: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Report on one scenario file.
    Check { scenario: PathBuf },
    /// Report on every *.toml scenario in a directory.
    Batch { dir: PathBuf },
    /// Aggregate verdicts over a family of places.
    Global { family: PathBuf },
    /// List partitions, weighted diagrams and S for a type.
    Orbits { family: String, rank: usize },
}

fn scenario_files(dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let io = |source| CliError::Io {
        path: dir.display().to_string(),
        source,
    };
    let mut files = Vec::new();
    for entry in std::fs::read_dir(dir).map_err(io)? {
        let p = entry.map_err(io)?.path();
        if p.extension().is_some_and(|e| e == "toml") {
            files.push(p);
        }
    }
    files.sort();
    Ok(files)
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let format = match cli.format {
        FormatArg::Text => Format::Text,
        FormatArg::Machine => Format::Machine,
    };
    match &cli.command {
        Command::Check { scenario } => print!("{}", check_file(scenario, format, cli.certify)?),
        Command::Batch { dir } => {
            let files = scenario_files(dir)?;
            let results: Vec<_> = files
                .par_iter()
                .map(|f| check_file(f, format, cli.certify))
                .collect();
            let mut worst: Option<CliError> = None;
            for (f, r) in files.iter().zip(results) {
                match r {
                    Ok(out) => print!("{out}"),
                    Err(e) => {
                        eprintln!("{}: {e}", f.display());
                        if worst.as_ref().is_none_or(|w| e.exit_code() > w.exit_code()) {
                            worst = Some(e);
                        }
                    }
                }
            }
            if let Some(e) = worst {
                return Err(e);
            }
        }
        Command::Global { family } => {
            let g = ramanujan_report(&load_family(family)?)?;
            match format {
                Format::Text => print!("{}", global_text(&g)),
                Format::Machine => print!("{}", to_machine(&g)),
            }
        }
        Command::Orbits { family, rank } => {
            let o = list_orbits(family, *rank)?;
            match format {
                Format::Text => print!("{}", orbits_text(&o)),
                Format::Machine => print!("{}", to_machine(&o)),
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
