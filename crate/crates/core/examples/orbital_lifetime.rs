//! Unpowered decay: lifetimes from several starting altitudes and the altitude
//! that buys a two-year mission.

use mars_cran::lifetime::{SECONDS_PER_DAY, SECONDS_PER_YEAR};
use mars_cran::{altitude_for_lifetime, orbital_lifetime, AltitudeSearch, MarsDensity, PlanetProfile, SpacecraftSpec};

fn main() -> mars_cran::Result<()> {
    let mars = PlanetProfile::mars(MarsDensity::High);
    let horizon = 100.0 * SECONDS_PER_YEAR;
    for sat in [
        SpacecraftSpec::one_u(),
        SpacecraftSpec::six_u(),
        SpacecraftSpec::twelve_u(),
    ] {
        for h0_km in [75.0, 150.0, 175.0, 250.0] {
            let run = orbital_lifetime(&mars, &sat, h0_km * 1e3, horizon)?;
            println!(
                "{:>4} from {h0_km:>5} km: {:>14.1} s = {:>10.3} days ({}, {} steps)",
                sat.label(),
                run.lifetime_s,
                run.lifetime_s / SECONDS_PER_DAY,
                run.terminal_reason.as_str(),
                run.steps
            );
        }
    }

    let sat = SpacecraftSpec::twelve_u();
    let run = orbital_lifetime(&mars, &sat, 150e3, horizon)?;
    println!("12u decay from 150 km, every 20th sample:");
    for s in run.trajectory.iter().step_by(20) {
        println!(
            "  t = {:>10.0} s  h = {:>8.3} km  P = {:.2} s",
            s.t_s,
            s.altitude_m / 1e3,
            s.period_s
        );
    }

    let h = altitude_for_lifetime(&mars, &sat, 2.0 * SECONDS_PER_YEAR, &AltitudeSearch::default())?;
    println!("12u needs {:.1} km for a two-year lifetime", h / 1e3);
    Ok(())
}
