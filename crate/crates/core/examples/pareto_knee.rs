//! Sweep the deployable band of a 12U CubeSat and pick the knee of the
//! session-time / drag trade-off.

use mars_cran::feasibility::{altitude_grid, knee_altitude_weighted, KneeWeights};
use mars_cran::{feasibility_sweep, knee_altitude, LatencyBudget, MarsDensity, PlanetProfile, SpacecraftSpec};

fn main() -> mars_cran::Result<()> {
    let mars = PlanetProfile::mars(MarsDensity::High);
    let sat = SpacecraftSpec::twelve_u();
    let grid = altitude_grid(35e3, 75e3, 100.0)?;
    let rows = feasibility_sweep(&mars, &sat, &LatencyBudget::default(), 0.0, &grid)?;
    let deployable = rows.iter().filter(|r| r.deployable()).count();
    println!("{} grid points, {deployable} deployable", rows.len());

    let knee = knee_altitude(&rows)?;
    let p = knee.point();
    println!(
        "knee: h = {:.1} km  E = {:.5}  F_drag = {:.3} N ({:.2}% of thrust)  t_s = {:.3} s",
        knee.altitude_m / 1e3,
        knee.error,
        p.drag_n,
        100.0 * p.drag_n / sat.thrust(),
        p.session_time_s
    );

    for (wt, wf) in [(2.0, 1.0), (1.0, 2.0)] {
        let k = knee_altitude_weighted(
            &rows,
            KneeWeights {
                session_time: wt,
                drag: wf,
            },
        )?;
        println!("weights t_s:F = {wt}:{wf} -> h = {:.1} km", k.altitude_m / 1e3);
    }
    Ok(())
}
