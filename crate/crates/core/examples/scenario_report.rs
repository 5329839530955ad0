//! Load a scenario from text, run the full pipeline and write every table.
//!
//! `cargo run --example scenario_report -- [out_dir]`

use mars_cran::report::{emit_tables, run_scenario, summary};
use mars_cran::scenario::{load_scenario, OutputFormat};

const SCENARIO: &str = r#"
planet = "mars"
rho0 = "high"
sats = ["6u", "12u"]
tau = 250e-6
grid_lo_km = 35
grid_hi_km = 75
grid_step_km = 0.5
lifetime_altitudes_km = [150, 175]

[spacecraft.12u]
mass_kg = 30
"#;

fn main() {
    if let Err(e) = run() {
        eprintln!("error[{}]: {e}", e.code());
        std::process::exit(e.exit_code());
    }
}

fn run() -> mars_cran::Result<()> {
    let config = load_scenario(SCENARIO)?;
    let bundle = run_scenario(&config)?;
    print!("{}", summary(&bundle));
    if let Some(dir) = std::env::args().nth(1) {
        for path in emit_tables(&bundle, OutputFormat::Csv, dir.as_ref())? {
            println!("wrote {}", path.display());
        }
    }
    Ok(())
}
