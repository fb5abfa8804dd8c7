use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use minkruled::{build_meshes, export_all, run_report, run_verify, CliError, SceneConfig};

/// Analysis and mesh export for involute trajectory ruled surfaces in Minkowski 3-space.
#[derive(Parser)]
#[command(name = "minkruled", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the analysis report for a scene.
    Report { config: PathBuf },
    /// Sample the scene's surfaces and write the configured outputs.
    Mesh { config: PathBuf },
    /// Cross-check closed-form drall and striction against finite differences.
    Verify {
        config: PathBuf,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        /// Overridden by MINKRULED_SEED.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

const EXIT_CONFIG: u8 = 2;
const EXIT_DEGENERATE: u8 = 3;

fn fail(e: CliError) -> ExitCode {
    eprintln!("error: {e}");
    match e {
        CliError::Config(_) | CliError::Io(_) => ExitCode::from(EXIT_CONFIG),
        CliError::Geometry(_) | CliError::Sampling { .. } => ExitCode::from(EXIT_DEGENERATE),
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Report { config } => {
            let cfg = SceneConfig::from_path(&config)?;
            let rep = run_report(&cfg)?;
            print!("{}", rep.text);
            Ok(if rep.warnings.is_empty() { ExitCode::SUCCESS } else { ExitCode::from(EXIT_DEGENERATE) })
        }
        Command::Mesh { config } => {
            let cfg = SceneConfig::from_path(&config)?;
            let meshes = build_meshes(&cfg)?;
            for path in export_all(&cfg, &meshes)? {
                println!("wrote {}", path.display());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { config, trials, seed } => {
            let seed = match std::env::var("MINKRULED_SEED") {
                Ok(v) => v
                    .trim()
                    .parse()
                    .map_err(|_| CliError::Config(format!("MINKRULED_SEED: not an unsigned integer: {v:?}")))?,
                Err(_) => seed,
            };
            let cfg = SceneConfig::from_path(&config)?;
            let out = run_verify(&cfg, trials, seed)?;
            print!("{}", out.text);
            Ok(if out.failures == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_CONFIG) } else { ExitCode::SUCCESS };
        }
    };
    run(cli).unwrap_or_else(fail)
}
