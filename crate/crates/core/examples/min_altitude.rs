//! Lowest altitude each catalog CubeSat can hold with its thruster, for both
//! Mars reference densities.

use mars_cran::{min_sustainable_altitude, MarsDensity, PlanetProfile, SpacecraftSpec};

fn main() -> mars_cran::Result<()> {
    for density in [MarsDensity::Low, MarsDensity::High] {
        let mars = PlanetProfile::mars(density);
        println!("rho0 = {:e} kg/m^3", mars.reference_density());
        for s in [
            SpacecraftSpec::one_u(),
            SpacecraftSpec::six_u(),
            SpacecraftSpec::twelve_u(),
        ] {
            let h = min_sustainable_altitude(&mars, &s)?;
            println!(
                "  {:>4}: F_prop = {:>7} N  h_min = {:8.3} km",
                s.label(),
                s.thrust(),
                h.altitude_m / 1e3
            );
        }
    }
    Ok(())
}
