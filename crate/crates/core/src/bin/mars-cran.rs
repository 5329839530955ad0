use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use mars_cran::report::{emit_tables, run_stages, Stage};
use mars_cran::scenario::load_scenario_with;
use mars_cran::Error;

/// Martian 3D C-RAN feasibility tables.
#[derive(Parser)]
#[command(version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Scenario file (key = value, TOML syntax).
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Override any scenario key, e.g. `--set grid_step_km=0.05`.
    #[arg(long = "set", global = true, value_name = "KEY=VALUE")]
    overrides: Vec<String>,

    #[arg(long, global = true, value_name = "mars|earth")]
    planet: Option<String>,

    /// Spacecraft to analyse; repeat or comma-separate.
    #[arg(long, global = true, value_name = "1u|6u|12u")]
    sat: Vec<String>,

    #[arg(long, global = true, value_name = "low|high|VALUE")]
    rho0: Option<String>,

    /// One-way latency budget in seconds.
    #[arg(long, global = true)]
    tau: Option<f64>,

    #[arg(long, global = true, value_name = "csv|json")]
    format: Option<String>,

    /// Output directory; tables go to stdout when omitted.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Density, velocity, drag, elevation and session time over the altitude grid.
    Sweep,
    /// Altitude where drag equals the thruster force.
    MinAltitude,
    /// Knee of the drag / session-time front.
    Knee,
    /// Session window and elevation/slant-range surface.
    Session,
    /// Unpowered orbital lifetimes and the altitude for the target lifetime.
    Lifetime,
    /// Everything, including the Earth comparison.
    Report,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error[{}]: {e}", e.code());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    let text = match &cli.config {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Error::Io {
            path: path.clone(),
            source: e,
        })?,
        None => String::new(),
    };
    let mut overrides = cli.overrides.clone();
    let quoted = |k: &str, v: &str| format!("{k}=\"{v}\"");
    if let Some(p) = &cli.planet {
        overrides.push(quoted("planet", p));
    }
    if !cli.sat.is_empty() {
        overrides.push(quoted("sats", &cli.sat.join(",")));
    }
    if let Some(r) = &cli.rho0 {
        overrides.push(if r.parse::<f64>().is_ok() {
            format!("rho0={r}")
        } else {
            quoted("rho0", r)
        });
    }
    if let Some(t) = cli.tau {
        overrides.push(format!("tau={t:e}"));
    }
    if let Some(f) = &cli.format {
        overrides.push(quoted("format", f));
    }
    let config = load_scenario_with(&text, &overrides)?;

    let stages: &[Stage] = match cli.command {
        Command::Sweep => &[Stage::Sweep],
        Command::MinAltitude => &[Stage::MinAltitude],
        Command::Knee => &[Stage::Knee],
        Command::Session => &[Stage::Session],
        Command::Lifetime => &[Stage::Lifetime],
        Command::Report => &Stage::ALL,
    };
    let bundle = run_stages(&config, stages)?;

    match cli.out.or(config.out.clone()) {
        Some(dir) => {
            for path in emit_tables(&bundle, config.format, &dir)? {
                println!("{}", path.display());
            }
        }
        None => {
            for (name, body) in bundle.render(config.format) {
                if name == "metadata.json" {
                    continue;
                }
                println!("==> {name} <==");
                print!("{body}");
            }
        }
    }
    Ok(())
}
