//! Density, orbital speed and drag across the low Mars orbit band.

use mars_cran::{atmospheric_density, circular_velocity, drag_force, MarsDensity, PlanetProfile, SpacecraftSpec};

fn main() -> mars_cran::Result<()> {
    let mars = PlanetProfile::mars(MarsDensity::High);
    let sats = [
        SpacecraftSpec::one_u(),
        SpacecraftSpec::six_u(),
        SpacecraftSpec::twelve_u(),
    ];
    println!(
        "{:>6} {:>12} {:>9} {:>11} {:>11} {:>11}",
        "h_km", "rho", "v_m_s", "F_1u", "F_6u", "F_12u"
    );
    for h_km in (25..=200).step_by(25) {
        let h = f64::from(h_km) * 1e3;
        print!(
            "{h_km:>6} {:>12.4e} {:>9.1}",
            atmospheric_density(&mars, h)?,
            circular_velocity(&mars, h)?
        );
        for s in &sats {
            print!(" {:>11.4e}", drag_force(&mars, s, h)?);
        }
        println!();
    }
    Ok(())
}
