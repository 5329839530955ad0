//! Acceptance criteria. Each test prints one `PASS`/`FAIL` line; run with
//! `cargo test --test acceptance -- --nocapture --test-threads=1` to see them.

use mars_cran::lifetime::{orbital_lifetime_with, AltitudeSearch, LifetimeOptions, SECONDS_PER_DAY, SECONDS_PER_YEAR};
use mars_cran::report::Stage;
use mars_cran::scenario::{load_scenario, OutputFormat};
use mars_cran::*;
use rand::{Rng, SeedableRng};

fn verdict(id: u8, what: &str, checks: &[(String, bool)]) {
    let pass = checks.iter().all(|c| c.1);
    let detail: Vec<String> = checks
        .iter()
        .map(|(s, ok)| format!("{s}{}", if *ok { "" } else { " [out of tolerance]" }))
        .collect();
    println!(
        "{} criterion {id} ({what}): {}",
        if pass { "PASS" } else { "FAIL" },
        detail.join("; ")
    );
    assert!(pass, "criterion {id} failed: {}", detail.join("; "));
}

fn within(label: &str, value: f64, target: f64, tol: f64) -> (String, bool) {
    (
        format!("{label} = {value:.4} (want {target} ± {tol})"),
        (value - target).abs() <= tol,
    )
}

fn in_range(label: &str, value: f64, lo: f64, hi: f64) -> (String, bool) {
    (
        format!("{label} = {value:.4} (want [{lo}, {hi}])"),
        (lo..=hi).contains(&value),
    )
}

fn mars() -> PlanetProfile {
    PlanetProfile::mars(MarsDensity::High)
}

#[test]
fn criterion_1_latency_budget() {
    let d = max_slant_range(250e-6).unwrap();
    verdict(1, "latency budget", &[within("d_max [m]", d, 74_948.11, 1.0)]);
}

#[test]
fn criterion_2_mars_min_altitudes() {
    let h = |s: SpacecraftSpec| min_sustainable_altitude(&mars(), &s).unwrap().altitude_m / 1e3;
    verdict(
        2,
        "Mars minimum altitudes",
        &[
            within("1U h_min [km]", h(SpacecraftSpec::one_u()), 134.5, 1.0),
            within("6U h_min [km]", h(SpacecraftSpec::six_u()), 108.0, 1.0),
            within("12U h_min [km]", h(SpacecraftSpec::twelve_u()), 35.0, 1.5),
        ],
    );
}

#[test]
fn criterion_3_knee_point() {
    let cfg = load_scenario("").unwrap();
    let spec = &cfg.spacecraft[0];
    let rows = feasibility_sweep(&cfg.planet, spec, &cfg.budget, cfg.h_uav_m, &cfg.grid.points().unwrap()).unwrap();
    let knee = knee_altitude(&rows).unwrap();
    let at = knee.point();
    verdict(
        3,
        "knee point",
        &[
            within("h_opt [km]", knee.altitude_m / 1e3, 67.1, 0.2),
            within("F_drag [N]", at.drag_n, 2.34, 0.05),
            within("t_s [s]", at.session_time_s, 9.6, 0.1),
            within("F_drag/F_prop [%]", 100.0 * at.drag_n / spec.thrust(), 5.2, 0.2),
        ],
    );
}

#[test]
fn criterion_4_session_time_curve() {
    let budget = LatencyBudget::default();
    let d_max = budget.max_range();
    let t = |h: f64| session_time(&mars(), h, 0.0, d_max).unwrap().session_time_s;
    let ceiling = d_max;
    let mut monotone = true;
    let mut prev = f64::INFINITY;
    let mut h = 35e3;
    while h < ceiling {
        let v = t(h);
        monotone &= v < prev;
        prev = v;
        h += 100.0;
    }
    let end = t(ceiling);
    monotone &= end < prev;
    verdict(
        4,
        "session-time curve",
        &[
            in_range("t_s(35 km) [s]", t(35e3), 18.0, 19.5),
            (
                format!("strictly decreasing over 35 km .. ceiling {:.3} km", ceiling / 1e3),
                monotone,
            ),
            (format!("t_s(ceiling) = {end:.4} s (want < 0.5)"), end < 0.5),
        ],
    );
}

#[test]
fn criterion_5_lifetimes() {
    let life = |s: SpacecraftSpec, h: f64| orbital_lifetime(&mars(), &s, h, 1e12).unwrap().lifetime_s;
    let days = |s, h| life(s, h) / SECONDS_PER_DAY;
    let two_years = altitude_for_lifetime(
        &mars(),
        &SpacecraftSpec::twelve_u(),
        2.0 * SECONDS_PER_YEAR,
        &AltitudeSearch::default(),
    )
    .unwrap();
    verdict(
        5,
        "lifetimes",
        &[
            in_range("12U 75 km [s]", life(SpacecraftSpec::twelve_u(), 75e3), 60.0, 300.0),
            in_range("12U 150 km [days]", days(SpacecraftSpec::twelve_u(), 150e3), 1.0, 2.0),
            within("1U 175 km [days]", days(SpacecraftSpec::one_u(), 175e3), 4.0, 1.0),
            within("6U 175 km [days]", days(SpacecraftSpec::six_u(), 175e3), 10.0, 2.5),
            within("12U 175 km [days]", days(SpacecraftSpec::twelve_u(), 175e3), 13.0, 3.25),
            in_range(
                "12U 250 km [years]",
                life(SpacecraftSpec::twelve_u(), 250e3) / SECONDS_PER_YEAR,
                20.0,
                30.0,
            ),
            within("12U 2-year altitude [km]", two_years / 1e3, 225.0, 10.0),
        ],
    );
}

#[test]
fn criterion_6_zenith_latency() {
    let ms = zenith_latency(225e3, 0.0).unwrap() * 1e3;
    verdict(6, "zenith latency", &[within("tau(225 km) [ms]", ms, 0.75, 0.01)]);
}

#[test]
fn criterion_7_earth_comparison() {
    let specs = [
        SpacecraftSpec::one_u(),
        SpacecraftSpec::six_u(),
        SpacecraftSpec::twelve_u(),
    ];
    let rows = earth_comparison(&mars(), &PlanetProfile::earth(), &specs).unwrap();
    let checks: Vec<(String, bool)> = rows
        .iter()
        .map(|r| {
            (
                format!(
                    "{}: Earth {:.2} km > Mars {:.2} km (reference {} km, delta {:+.2})",
                    r.label,
                    r.earth_min_m / 1e3,
                    r.mars_min_m / 1e3,
                    r.reference_km.unwrap(),
                    r.delta_km.unwrap()
                ),
                r.earth_min_m > r.mars_min_m,
            )
        })
        .collect();
    verdict(7, "Earth above Mars", &checks);
}

#[test]
fn criterion_8_property_suites() {
    let p = mars();
    let mut rng = rand::rngs::StdRng::seed_from_u64(2024);

    let mut worst = 0.0f64;
    for _ in 0..10_000 {
        let h_uav = rng.gen_range(0.0..10e3);
        let h_cs = h_uav + rng.gen_range(1.0..500e3);
        let eps = rng.gen_range(0.0..=std::f64::consts::FRAC_PI_2);
        let d = slant_range(&p, h_cs, h_uav, eps).unwrap();
        let (ru, rc) = (p.radius() + h_uav, p.radius() + h_cs);
        worst = worst.max((rc * rc - (ru * ru + d * d + 2.0 * ru * d * eps.sin())).abs() / (rc * rc));
    }

    let mut fd_worst = 0.0f64;
    for spec in [
        SpacecraftSpec::one_u(),
        SpacecraftSpec::six_u(),
        SpacecraftSpec::twelve_u(),
    ] {
        for h0 in [75e3, 150e3, 175e3, 250e3] {
            let tr = orbital_lifetime(&p, &spec, h0, 1e12).unwrap().trajectory;
            for i in 1..tr.len() - 1 {
                let fd = (tr[i + 1].period_s - tr[i - 1].period_s) / (tr[i + 1].t_s - tr[i - 1].t_s);
                let exact = period_decay_rate(&p, &spec, tr[i].altitude_m).unwrap();
                fd_worst = fd_worst.max(((fd - exact) / exact).abs());
            }
        }
    }

    let spec = SpacecraftSpec::twelve_u();
    let full = orbital_lifetime(&p, &spec, 150e3, 1e12).unwrap().lifetime_s;
    let half_opts = LifetimeOptions {
        horizon_s: 1e12,
        step_scale: 0.5,
        ..LifetimeOptions::default()
    };
    let half = orbital_lifetime_with(&p, &spec, 150e3, &half_opts).unwrap().lifetime_s;
    let convergence = (half / full - 1.0).abs();

    let mut grid_ok = true;
    for spec in [
        SpacecraftSpec::one_u(),
        SpacecraftSpec::six_u(),
        SpacecraftSpec::twelve_u(),
    ] {
        let h = min_sustainable_altitude(&p, &spec).unwrap().altitude_m;
        let scan = (0..400_000u32)
            .map(f64::from)
            .find(|&x| drag_force(&p, &spec, x).unwrap() <= spec.thrust())
            .unwrap();
        grid_ok &= scan - 1.0 <= h && h <= scan;
    }

    let cfg = load_scenario("").unwrap();
    let rows = feasibility_sweep(&p, &spec, &cfg.budget, 0.0, &cfg.grid.points().unwrap()).unwrap();
    let base = knee_altitude(&rows).unwrap().altitude_m;
    let scaled: Vec<FeasibilityRow> = rows
        .iter()
        .map(|r| FeasibilityRow {
            session_time_s: r.session_time_s.map(|t| 3.7 * t - 11.0),
            drag_n: 0.02 * r.drag_n + 5.0,
            ..*r
        })
        .collect();
    let affine_ok = knee_altitude(&scaled).unwrap().altitude_m == base;

    let all = load_scenario("sats = '1u,6u,12u'").unwrap();
    let stages = [
        Stage::MinAltitude,
        Stage::Sweep,
        Stage::Session,
        Stage::Knee,
        Stage::EarthComparison,
    ];
    let a = report::run_stages(&all, &stages).unwrap();
    let b = report::run_stages(&all, &stages).unwrap();
    let deterministic = a.render(OutputFormat::Csv) == b.render(OutputFormat::Csv)
        && a.render(OutputFormat::Json) == b.render(OutputFormat::Json);

    verdict(
        8,
        "property suites",
        &[
            (
                format!("law-of-cosines residual {worst:.2e} (want < 1e-9)"),
                worst < 1e-9,
            ),
            (
                format!("finite-difference dP/dt error {:.3}% (want < 1%)", 100.0 * fd_worst),
                fd_worst < 0.01,
            ),
            (
                format!("half-step change {:.2e} (want < 5e-3)", convergence),
                convergence < 5e-3,
            ),
            ("bisection agrees with 1 m grid".into(), grid_ok),
            ("knee invariant under affine rescaling".into(), affine_ok),
            ("byte-identical repeated runs".into(), deterministic),
        ],
    );
}
