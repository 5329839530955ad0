//! Slant range, minimum elevation and session time for a UAV on the ground
//! served by a CubeSat within the fronthaul latency budget.

use mars_cran::{max_slant_range, session_time, slant_range, zenith_latency, MarsDensity, PlanetProfile};

fn main() -> mars_cran::Result<()> {
    let mars = PlanetProfile::mars(MarsDensity::High);
    let d_max = max_slant_range(250e-6)?;
    println!("d_max = {:.2} m", d_max);

    println!("slant range at 50 km altitude:");
    for deg in [0.0, 15.0, 30.0, 60.0, 90.0f64] {
        let d = slant_range(&mars, 50e3, 0.0, deg.to_radians())?;
        println!("  eps = {deg:>4} deg  d = {:8.3} km", d / 1e3);
    }

    println!(
        "{:>6} {:>9} {:>8} {:>8} {:>10}",
        "h_km", "eps_deg", "d_km", "t_s", "zenith_ms"
    );
    for h_km in [35.0, 45.0, 55.0, 67.1, 74.9] {
        let h = h_km * 1e3;
        let g = session_time(&mars, h, 0.0, d_max)?;
        println!(
            "{h_km:>6} {:>9.3} {:>8.3} {:>8.3} {:>10.4}",
            g.epsilon_rad.to_degrees(),
            g.slant_range_m / 1e3,
            g.session_time_s,
            zenith_latency(h, 0.0)? * 1e3
        );
    }
    // Above the ceiling even the zenith pass breaks the budget.
    match session_time(&mars, 80e3, 0.0, d_max) {
        Err(e) => println!("80 km: {e}"),
        Ok(g) => println!("80 km: t_s = {}", g.session_time_s),
    }
    Ok(())
}
