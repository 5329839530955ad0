//! UAV to CubeSat line-of-sight geometry under a one-way latency budget.
//!
//! The UAV sits at `h_uav` above the surface, the CubeSat circles at `h_cs`.
//! For elevation `ε` the slant range follows from the law of cosines in the
//! triangle (planet centre, UAV, CubeSat):
//!
//! ```text
//! (R + h_cs)² = (R + h_uav)² + d² + 2 (R + h_uav) d sin ε
//! ```
//!
//! The session time is the zenith to loss-of-signal arc, i.e. from `ε = π/2`
//! down to the elevation where the slant range reaches the budgeted maximum.

use std::f64::consts::FRAC_PI_2;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::models::PlanetProfile;
use crate::orbit::velocity_unchecked;

/// Speed of light in vacuum, m/s.
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Tight one-way latency for physical-layer split options 7 and 8.
pub const IDEAL_SPLIT_LATENCY_S: f64 = 250e-6;

/// Relative slack on the zenith-feasibility check, so that
/// `h_cs = h_uav + d_max` built in floating point still counts as feasible.
const ZENITH_SLACK: f64 = 1e-12;

/// Latency budget and the maximum slant range it allows (`d_max = c · τ`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LatencyBudget {
    tau_s: f64,
    max_range_m: f64,
}

impl LatencyBudget {
    pub fn from_latency(tau_s: f64) -> Result<Self> {
        Ok(LatencyBudget {
            tau_s,
            max_range_m: max_slant_range(tau_s)?,
        })
    }

    /// Budget given directly as a range; the latency is derived as `d / c`.
    pub fn from_range(max_range_m: f64) -> Result<Self> {
        if !(max_range_m.is_finite() && max_range_m > 0.0) {
            return Err(Error::domain(
                "d_max",
                max_range_m,
                "must be finite and strictly positive",
            ));
        }
        Ok(LatencyBudget {
            tau_s: max_range_m / SPEED_OF_LIGHT,
            max_range_m,
        })
    }

    pub fn tau(&self) -> f64 {
        self.tau_s
    }

    pub fn max_range(&self) -> f64 {
        self.max_range_m
    }
}

impl Default for LatencyBudget {
    fn default() -> Self {
        LatencyBudget {
            tau_s: IDEAL_SPLIT_LATENCY_S,
            max_range_m: SPEED_OF_LIGHT * IDEAL_SPLIT_LATENCY_S,
        }
    }
}

/// One evaluated pass geometry at the loss-of-signal edge.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LinkGeometry {
    pub h_cs_m: f64,
    pub h_uav_m: f64,
    /// Minimum usable elevation.
    pub epsilon_rad: f64,
    /// Slant range at `epsilon_rad`.
    pub slant_range_m: f64,
    pub theta_max_rad: f64,
    pub arc_length_m: f64,
    pub velocity_m_s: f64,
    pub session_time_s: f64,
}

/// `c · τ`.
pub fn max_slant_range(tau_s: f64) -> Result<f64> {
    if !(tau_s.is_finite() && tau_s > 0.0) {
        return Err(Error::domain("tau", tau_s, "must be finite and strictly positive"));
    }
    Ok(SPEED_OF_LIGHT * tau_s)
}

/// Line-of-sight distance between UAV and CubeSat at elevation `epsilon`.
pub fn slant_range(planet: &PlanetProfile, h_cs: f64, h_uav: f64, epsilon: f64) -> Result<f64> {
    check_pair(h_cs, h_uav)?;
    if !(0.0..=FRAC_PI_2).contains(&epsilon) {
        return Err(Error::domain("elevation", epsilon, "must lie in [0, pi/2]"));
    }
    Ok(slant_unchecked(planet, h_cs, h_uav, epsilon))
}

/// Lowest elevation at which the slant range stays within `d_max`.
///
/// Solved in closed form from the law of cosines. Returns 0 when even the
/// horizon is close enough.
pub fn min_elevation(planet: &PlanetProfile, h_cs: f64, h_uav: f64, d_max: f64) -> Result<f64> {
    check_pair(h_cs, h_uav)?;
    if !(d_max.is_finite() && d_max > 0.0) {
        return Err(Error::domain("d_max", d_max, "must be finite and strictly positive"));
    }
    let zenith = h_cs - h_uav;
    if zenith > d_max * (1.0 + ZENITH_SLACK) {
        return Err(Error::LatencyInfeasible {
            zenith_distance_m: zenith,
            max_range_m: d_max,
        });
    }
    let ru = planet.radius() + h_uav;
    let rc = planet.radius() + h_cs;
    // rc² - ru² written as a product to avoid cancellation.
    let sin_eps = (zenith * (rc + ru) - d_max * d_max) / (2.0 * ru * d_max);
    Ok(sin_eps.clamp(0.0, 1.0).asin())
}

/// Session window from zenith to loss of signal for a CubeSat at `h_cs`.
pub fn session_time(planet: &PlanetProfile, h_cs: f64, h_uav: f64, d_max: f64) -> Result<LinkGeometry> {
    let epsilon = min_elevation(planet, h_cs, h_uav, d_max)?;
    // Below the horizon clamp the edge is the horizon itself, not d_max.
    let edge = if epsilon == 0.0 {
        slant_unchecked(planet, h_cs, h_uav, 0.0)
    } else {
        d_max
    };
    let rc = planet.radius() + h_cs;
    let theta_max = (edge * epsilon.cos() / rc).clamp(-1.0, 1.0).asin();
    let arc_length = theta_max * rc;
    let velocity = velocity_unchecked(planet, h_cs);
    Ok(LinkGeometry {
        h_cs_m: h_cs,
        h_uav_m: h_uav,
        epsilon_rad: epsilon,
        slant_range_m: edge,
        theta_max_rad: theta_max,
        arc_length_m: arc_length,
        velocity_m_s: velocity,
        session_time_s: arc_length / velocity,
    })
}

/// One-way propagation delay with the CubeSat overhead.
pub fn zenith_latency(h_cs: f64, h_uav: f64) -> Result<f64> {
    check_pair(h_cs, h_uav)?;
    Ok((h_cs - h_uav) / SPEED_OF_LIGHT)
}

fn check_pair(h_cs: f64, h_uav: f64) -> Result<()> {
    if !(h_uav.is_finite() && h_uav >= 0.0) {
        return Err(Error::domain("h_uav", h_uav, "must be finite and non-negative"));
    }
    if !(h_cs.is_finite() && h_cs > h_uav) {
        return Err(Error::domain("h_cs", h_cs, "must be finite and above the UAV"));
    }
    Ok(())
}

fn slant_unchecked(planet: &PlanetProfile, h_cs: f64, h_uav: f64, epsilon: f64) -> f64 {
    let ru = planet.radius() + h_uav;
    let rc = planet.radius() + h_cs;
    let ratio = rc / ru;
    let (s, c) = epsilon.sin_cos();
    let root = (ratio * ratio - c * c).sqrt();
    // (root - s) · ru, rationalised: (root - s)(root + s) = ratio² - 1.
    (h_cs - h_uav) * (rc + ru) / (ru * (root + s))
}
