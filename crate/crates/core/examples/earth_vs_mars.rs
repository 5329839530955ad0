//! Minimum sustainable altitude on Earth versus Mars for the catalog CubeSats.

use mars_cran::{earth_comparison, MarsDensity, PlanetProfile, SpacecraftSpec};

fn main() -> mars_cran::Result<()> {
    let specs = [
        SpacecraftSpec::one_u(),
        SpacecraftSpec::six_u(),
        SpacecraftSpec::twelve_u(),
    ];
    let rows = earth_comparison(&PlanetProfile::mars(MarsDensity::High), &PlanetProfile::earth(), &specs)?;
    println!(
        "{:>4} {:>9} {:>9} {:>9} {:>8}",
        "sat", "mars_km", "earth_km", "ref_km", "delta"
    );
    for r in rows {
        println!(
            "{:>4} {:>9.2} {:>9.2} {:>9} {:>+8.2}",
            r.label,
            r.mars_min_m / 1e3,
            r.earth_min_m / 1e3,
            r.reference_km.map_or("-".into(), |v| v.to_string()),
            r.delta_km.unwrap_or(f64::NAN)
        );
    }
    Ok(())
}
