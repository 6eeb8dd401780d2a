use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use owsim::cli::{execute, grid_csv, parse_config, parse_formats, presets_text};
use owsim::scene::build_default_scene;

#[derive(Parser)]
#[command(
    name = "owsim",
    version,
    about = "Line-of-sight blockage simulator for indoor optical wireless rooms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a sweep from a JSON config file and write result tables
    Run {
        /// Path to the JSON config
        #[arg(long, short)]
        config: PathBuf,
        /// Override the output directory
        #[arg(long)]
        out: Option<PathBuf>,
        /// Override the output formats (csv, json)
        #[arg(long, value_delimiter = ',')]
        format: Option<Vec<String>>,
        /// Also write an SVG chart
        #[arg(long)]
        svg: bool,
    },
    /// List the built-in sweep scenarios
    Presets,
    /// Print the default receiver grid
    Grid {
        /// Dump the grid as CSV, to stdout or to the given path
        #[arg(long, num_args = 0..=1, default_missing_value = "-")]
        dump: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> owsim::Result<()> {
    match cli.command {
        Command::Run {
            config,
            out,
            format,
            svg,
        } => {
            let text = fs::read_to_string(&config)?;
            let mut cfg = parse_config(&text)?;
            if let Some(dir) = out {
                cfg.output.dir = dir;
            }
            if let Some(names) = format {
                cfg.output.formats = parse_formats(&names)?;
            }
            if svg {
                cfg.output.svg = true;
            }
            let outcome = execute(&cfg)?;
            for path in &outcome.files {
                println!("wrote {}", path.display());
            }
            for line in outcome.summary_lines() {
                println!("{line}");
            }
            Ok(())
        }
        Command::Presets => {
            print!("{}", presets_text());
            Ok(())
        }
        Command::Grid { dump } => {
            let csv = grid_csv(&build_default_scene());
            match dump {
                Some(path) if path.as_os_str() != "-" => {
                    fs::write(&path, csv)?;
                    println!("wrote {}", path.display());
                }
                _ => print!("{csv}"),
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
