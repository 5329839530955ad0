//! Circular-orbit kinematics and aerodynamic drag.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{check_altitude, Result};
use crate::models::{cross_section, PlanetProfile, SpacecraftSpec};

/// A circular orbit at a given altitude, all fields mutually consistent.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OrbitState {
    pub altitude_m: f64,
    pub radius_m: f64,
    pub velocity_m_s: f64,
    pub period_s: f64,
}

impl OrbitState {
    pub fn at_altitude(planet: &PlanetProfile, h: f64) -> Result<Self> {
        check_altitude(h)?;
        Ok(Self::unchecked(planet, h))
    }

    pub(crate) fn unchecked(planet: &PlanetProfile, h: f64) -> Self {
        let r = planet.radius() + h;
        OrbitState {
            altitude_m: h,
            radius_m: r,
            velocity_m_s: (planet.mu() / r).sqrt(),
            period_s: period_at_radius(planet, r),
        }
    }
}

/// `sqrt(G·M / (R + h))`.
pub fn circular_velocity(planet: &PlanetProfile, h: f64) -> Result<f64> {
    check_altitude(h)?;
    Ok(velocity_unchecked(planet, h))
}

/// `½ · ρ(h) · v(h)² · C_D · A`.
pub fn drag_force(planet: &PlanetProfile, spec: &SpacecraftSpec, h: f64) -> Result<f64> {
    check_altitude(h)?;
    Ok(drag_unchecked(planet, spec, h))
}

/// `2π · sqrt((R + h)³ / (G·M))`.
pub fn orbital_period(planet: &PlanetProfile, h: f64) -> Result<f64> {
    check_altitude(h)?;
    Ok(period_at_radius(planet, planet.radius() + h))
}

/// Drag-induced period change `dP/dt = -3π · ρ(h) · (R + h) · A·C_D/m`.
///
/// Always negative.
pub fn period_decay_rate(planet: &PlanetProfile, spec: &SpacecraftSpec, h: f64) -> Result<f64> {
    check_altitude(h)?;
    Ok(decay_rate_unchecked(planet, spec, h))
}

/// Orbit radius for a circular period, `(G·M · (P/2π)²)^(1/3)`.
pub fn radius_from_period(planet: &PlanetProfile, period_s: f64) -> f64 {
    let n = period_s / (2.0 * PI);
    (planet.mu() * n * n).cbrt()
}

pub(crate) fn velocity_unchecked(planet: &PlanetProfile, h: f64) -> f64 {
    (planet.mu() / (planet.radius() + h)).sqrt()
}

pub(crate) fn drag_unchecked(planet: &PlanetProfile, spec: &SpacecraftSpec, h: f64) -> f64 {
    let v = velocity_unchecked(planet, h);
    0.5 * planet.density_unchecked(h) * v * v * spec.drag_coefficient() * cross_section(spec)
}

pub(crate) fn decay_rate_unchecked(planet: &PlanetProfile, spec: &SpacecraftSpec, h: f64) -> f64 {
    -3.0 * PI * planet.density_unchecked(h) * (planet.radius() + h) * spec.ballistic_factor()
}

fn period_at_radius(planet: &PlanetProfile, r: f64) -> f64 {
    2.0 * PI * (r * r * r / planet.mu()).sqrt()
}
