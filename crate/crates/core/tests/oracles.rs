//! Independent oracles for the numerical routines: brute-force scans,
//! quadrature and direct law-of-cosines algebra, none of which share code
//! paths with the library implementations they check.

use std::f64::consts::{FRAC_PI_2, PI};

use mars_cran::feasibility::altitude_grid;
use mars_cran::lifetime::{orbital_lifetime_with, LifetimeOptions, TerminalReason};
use mars_cran::*;
use proptest::prelude::*;

fn mars() -> PlanetProfile {
    PlanetProfile::mars(MarsDensity::High)
}

const D_MAX: f64 = 299_792_458.0 * 250e-6;

/// Slant range by solving `d² + 2·ru·sinε·d - (rc² - ru²) = 0` for its positive root.
fn quadratic_slant(planet: &PlanetProfile, h_cs: f64, h_uav: f64, eps: f64) -> f64 {
    let ru = planet.radius() + h_uav;
    let rc = planet.radius() + h_cs;
    let b = ru * eps.sin();
    -b + (b * b + rc * rc - ru * ru).sqrt()
}

/// Elevation where the quadratic slant range meets `d_max`, by plain bisection.
fn bisect_elevation(planet: &PlanetProfile, h_cs: f64, h_uav: f64, d_max: f64) -> f64 {
    let (mut lo, mut hi) = (0.0, FRAC_PI_2);
    if quadratic_slant(planet, h_cs, h_uav, 0.0) <= d_max {
        return 0.0;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if quadratic_slant(planet, h_cs, h_uav, mid) > d_max {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Lifetime as `∫ dh / |dh/dt|` from the surface to `h0`, composite Simpson.
///
/// For a circular orbit `dh/dt = -ρ(h) · (A·C_D/m) · sqrt(μ (R + h))`.
fn quadrature_lifetime(planet: &PlanetProfile, spec: &SpacecraftSpec, h0: f64) -> f64 {
    let b = cross_section(spec) * spec.drag_coefficient() / spec.mass();
    let mu = planet.gravitational_constant() * planet.mass();
    let f = |h: f64| {
        let rho = planet.reference_density() * (-h / planet.scale_height()).exp();
        1.0 / (rho * b * (mu * (planet.radius() + h)).sqrt())
    };
    let n = 200_000;
    let dx = h0 / n as f64;
    let mut sum = f(0.0) + f(h0);
    for i in 1..n {
        sum += f(i as f64 * dx) * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    sum * dx / 3.0
}

#[test]
fn closed_form_elevation_matches_bisection() {
    for h_uav in [0.0, 2e3, 10e3] {
        let mut h = h_uav + 1e3;
        while h <= h_uav + D_MAX {
            let closed = min_elevation(&mars(), h, h_uav, D_MAX).unwrap();
            let oracle = bisect_elevation(&mars(), h, h_uav, D_MAX);
            assert!((closed - oracle).abs() < 1e-7, "h={h} {closed} {oracle}");
            h += 500.0;
        }
    }
}

#[test]
fn slant_range_at_low_orbit_limit() {
    // Elevation at which the 35 km orbit sits exactly d_max away.
    let eps = bisect_elevation(&mars(), 35e3, 0.0, D_MAX);
    assert!((eps - 0.47613).abs() < 1e-4, "{eps}");
    let d = slant_range(&mars(), 35e3, 0.0, eps).unwrap();
    assert!((d - 74_948.11).abs() < 0.01);
}

#[test]
fn session_time_spot_values() {
    // Frozen from the independent closed forms above (θ = asin(d·cosε / rc), t = θ·rc / v).
    for (h, expected) in [(35e3, 18.882_734_6), (67.1e3, 9.602_185_34)] {
        let eps = bisect_elevation(&mars(), h, 0.0, D_MAX);
        let rc = mars().radius() + h;
        let v = (mars().gravitational_constant() * mars().mass() / rc).sqrt();
        let oracle = (D_MAX * eps.cos() / rc).asin() * rc / v;
        assert!((oracle - expected).abs() < 1e-6);
        let t = session_time(&mars(), h, 0.0, D_MAX).unwrap().session_time_s;
        assert!((t - oracle).abs() < 1e-6, "{t} {oracle}");
    }
}

#[test]
fn min_altitude_agrees_with_meter_scan() {
    for spec in [
        SpacecraftSpec::one_u(),
        SpacecraftSpec::six_u(),
        SpacecraftSpec::twelve_u(),
    ] {
        let bisected = min_sustainable_altitude(&mars(), &spec).unwrap().altitude_m;
        // First whole metre where drag no longer exceeds thrust.
        let rho0 = mars().reference_density();
        let mu = mars().gravitational_constant() * mars().mass();
        let area = cross_section(&spec);
        let drag = |h: f64| 0.5 * rho0 * (-h / mars().scale_height()).exp() * mu / (mars().radius() + h) * 2.0 * area;
        let scan = (0..400_000u32)
            .map(f64::from)
            .find(|&h| drag(h) <= spec.thrust())
            .unwrap();
        assert!(
            scan - 1.0 <= bisected && bisected <= scan,
            "{} {bisected} {scan}",
            spec.label()
        );
    }
}

#[test]
fn lifetime_matches_quadrature() {
    for (spec, h0) in [
        (SpacecraftSpec::twelve_u(), 75e3),
        (SpacecraftSpec::twelve_u(), 150e3),
        (SpacecraftSpec::one_u(), 175e3),
        (SpacecraftSpec::six_u(), 175e3),
        (SpacecraftSpec::twelve_u(), 250e3),
    ] {
        let run = orbital_lifetime(&mars(), &spec, h0, 1e12).unwrap();
        assert_eq!(run.terminal_reason, TerminalReason::SurfaceReached);
        let oracle = quadrature_lifetime(&mars(), &spec, h0);
        let rel = (run.lifetime_s / oracle - 1.0).abs();
        assert!(
            rel < 1e-4,
            "{} h0={h0}: {} vs {oracle} ({rel:e})",
            spec.label(),
            run.lifetime_s
        );
    }
}

#[test]
fn trajectory_finite_differences_match_decay_rate() {
    for spec in [
        SpacecraftSpec::one_u(),
        SpacecraftSpec::six_u(),
        SpacecraftSpec::twelve_u(),
    ] {
        for h0 in [75e3, 150e3, 175e3, 250e3] {
            let run = orbital_lifetime(&mars(), &spec, h0, 1e12).unwrap();
            let tr = &run.trajectory;
            for i in 1..tr.len() - 1 {
                let fd = (tr[i + 1].period_s - tr[i - 1].period_s) / (tr[i + 1].t_s - tr[i - 1].t_s);
                let exact = period_decay_rate(&mars(), &spec, tr[i].altitude_m).unwrap();
                assert!(((fd - exact) / exact).abs() < 0.01, "{} h0={h0} i={i}", spec.label());
            }
        }
    }
}

#[test]
fn trajectory_samples_are_circular_orbits() {
    let run = orbital_lifetime(&mars(), &SpacecraftSpec::six_u(), 175e3, 1e12).unwrap();
    for s in &run.trajectory {
        let v = circular_velocity(&mars(), s.altitude_m).unwrap();
        let lhs = s.period_s * v;
        let rhs = 2.0 * PI * (mars().radius() + s.altitude_m);
        assert!((lhs / rhs - 1.0).abs() < 1e-6);
    }
}

#[test]
fn half_step_convergence() {
    let spec = SpacecraftSpec::twelve_u();
    let full = orbital_lifetime_with(&mars(), &spec, 150e3, &LifetimeOptions::default()).unwrap();
    let half = orbital_lifetime_with(
        &mars(),
        &spec,
        150e3,
        &LifetimeOptions {
            step_scale: 0.5,
            ..LifetimeOptions::default()
        },
    )
    .unwrap();
    assert!((half.lifetime_s / full.lifetime_s - 1.0).abs() < 0.005);
}

#[test]
fn lifetime_increases_with_altitude() {
    let spec = SpacecraftSpec::twelve_u();
    let mut prev = 0.0;
    for h in altitude_grid(35e3, 250e3, 5e3).unwrap() {
        let t = orbital_lifetime(&mars(), &spec, h, 1e12).unwrap().lifetime_s;
        assert!(t > prev, "h={h}");
        prev = t;
    }
}

#[test]
fn session_time_decreases_over_band() {
    let mut prev = f64::INFINITY;
    for h in altitude_grid(35e3, 74.9e3, 100.0).unwrap() {
        let t = session_time(&mars(), h, 0.0, D_MAX).unwrap().session_time_s;
        assert!(t < prev);
        prev = t;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn law_of_cosines_round_trip(h_uav in 0.0..10e3f64, dz in 1.0..500e3f64, eps in 0.0..=FRAC_PI_2) {
        let p = mars();
        let h_cs = h_uav + dz;
        let d = slant_range(&p, h_cs, h_uav, eps).unwrap();
        let ru = p.radius() + h_uav;
        let rc = p.radius() + h_cs;
        let residual = rc * rc - (ru * ru + d * d + 2.0 * ru * d * eps.sin());
        prop_assert!(residual.abs() / (rc * rc) < 1e-9);
    }
}

proptest! {
    #[test]
    fn heavier_never_shortens_lifetime(k in 1.0..4.0f64, h0 in 60e3..160e3f64) {
        let spec = SpacecraftSpec::six_u();
        let heavy = spec.with_mass(spec.mass() * k).unwrap();
        let a = orbital_lifetime(&mars(), &spec, h0, 1e12).unwrap().lifetime_s;
        let b = orbital_lifetime(&mars(), &heavy, h0, 1e12).unwrap().lifetime_s;
        prop_assert!(b >= a * (1.0 - 1e-9));
    }

    #[test]
    fn lifetime_monotone_random_pairs(h1 in 35e3..250e3f64, dh in 100.0..50e3f64) {
        let spec = SpacecraftSpec::twelve_u();
        let a = orbital_lifetime(&mars(), &spec, h1, 1e12).unwrap().lifetime_s;
        let b = orbital_lifetime(&mars(), &spec, h1 + dh, 1e12).unwrap().lifetime_s;
        prop_assert!(b > a);
    }
}
