//! Unpowered orbital decay and lifetime.
//!
//! The orbital period is integrated forward under the drag-induced decay rate
//! with classic RK4. The altitude is never integrated directly: after every
//! step it is recovered from the period by inverting the circular-orbit period
//! relation, so the two cannot drift apart.
//!
//! Step size is adaptive. The initial altitude is cut into equal slices no
//! thicker than a tenth of the scale height and no larger than a `1e-3 · P`
//! period change (both caps multiplied by [`LifetimeOptions::step_scale`]), and
//! each time step is solved by bisection so that it lands on the next slice.
//! The last slice ends exactly on the surface, which keeps sample spacing
//! smooth right up to impact. The run stops at the surface, when the period
//! collapses, or when the time horizon is exceeded.

use serde::Serialize;

use crate::error::{check_altitude, Error, Result};
use crate::models::{PlanetProfile, SpacecraftSpec};
use crate::orbit::{decay_rate_unchecked, orbital_period, radius_from_period};
use crate::roots::{bisect, first_true};

pub const SECONDS_PER_DAY: f64 = 86_400.0;
/// Julian year.
pub const SECONDS_PER_YEAR: f64 = 365.25 * SECONDS_PER_DAY;

const MAX_PERIOD_FRACTION: f64 = 1e-3;
const MAX_SCALE_HEIGHT_FRACTION: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TerminalReason {
    SurfaceReached,
    PeriodCollapsed,
    HorizonExceeded,
}

impl TerminalReason {
    pub fn as_str(self) -> &'static str {
        match self {
            TerminalReason::SurfaceReached => "surface_reached",
            TerminalReason::PeriodCollapsed => "period_collapsed",
            TerminalReason::HorizonExceeded => "horizon_exceeded",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LifetimeSample {
    pub t_s: f64,
    pub altitude_m: f64,
    pub period_s: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LifetimeResult {
    /// Elapsed time at termination. Equals the horizon when it was exceeded;
    /// the trajectory may then end earlier if the last stretch left the period
    /// unchanged at floating-point resolution.
    pub lifetime_s: f64,
    pub terminal_reason: TerminalReason,
    /// Thinned trajectory, first and last samples always kept.
    pub trajectory: Vec<LifetimeSample>,
    /// Integration steps taken, before thinning.
    pub steps: usize,
}

impl LifetimeResult {
    pub fn lifetime_days(&self) -> f64 {
        self.lifetime_s / SECONDS_PER_DAY
    }

    pub fn lifetime_years(&self) -> f64 {
        self.lifetime_s / SECONDS_PER_YEAR
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LifetimeOptions {
    pub horizon_s: f64,
    /// Multiplies both step caps. 0.5 halves every step.
    pub step_scale: f64,
    pub max_samples: usize,
}

impl Default for LifetimeOptions {
    fn default() -> Self {
        LifetimeOptions {
            horizon_s: 100.0 * SECONDS_PER_YEAR,
            step_scale: 1.0,
            max_samples: 10_000,
        }
    }
}

/// Lifetime from `h0` with default step control and the given horizon.
pub fn orbital_lifetime(
    planet: &PlanetProfile,
    spec: &SpacecraftSpec,
    h0: f64,
    horizon_s: f64,
) -> Result<LifetimeResult> {
    let options = LifetimeOptions {
        horizon_s,
        ..LifetimeOptions::default()
    };
    orbital_lifetime_with(planet, spec, h0, &options)
}

pub fn orbital_lifetime_with(
    planet: &PlanetProfile,
    spec: &SpacecraftSpec,
    h0: f64,
    options: &LifetimeOptions,
) -> Result<LifetimeResult> {
    check_altitude(h0)?;
    if h0 == 0.0 {
        return Err(Error::domain("initial altitude", h0, "must be strictly positive"));
    }
    if !(options.horizon_s.is_finite() && options.horizon_s > 0.0) {
        return Err(Error::domain(
            "horizon",
            options.horizon_s,
            "must be finite and strictly positive",
        ));
    }
    if !(options.step_scale > 0.0 && options.step_scale <= 100.0) {
        return Err(Error::domain("step_scale", options.step_scale, "must lie in (0, 100]"));
    }
    if options.max_samples < 2 {
        return Err(Error::domain(
            "max_samples",
            options.max_samples as f64,
            "must be at least 2",
        ));
    }

    let decay = Decay { planet, spec };
    let horizon = options.horizon_s;
    let surface_period = orbital_period(planet, 0.0)?;

    // Equal altitude slices, each within both caps. The period cap is tightest
    // at the surface radius, so checking it there covers every slice.
    let period_cap = planet.radius() * (1.0 - (1.0 - MAX_PERIOD_FRACTION * options.step_scale).powf(2.0 / 3.0));
    let slice_cap = f64::min(
        MAX_SCALE_HEIGHT_FRACTION * options.step_scale * planet.scale_height(),
        period_cap,
    );
    let slices = (h0 / slice_cap).ceil().max(1.0) as u64;

    let mut t = 0.0;
    let mut period = orbital_period(planet, h0)?;
    let mut samples = vec![LifetimeSample {
        t_s: 0.0,
        altitude_m: h0,
        period_s: period,
    }];
    let mut steps = 0usize;

    let reason = loop {
        let h = decay.altitude(period);
        let k = steps as u64 + 1;
        let target = if k >= slices {
            0.0
        } else {
            h0 * (1.0 - k as f64 / slices as f64)
        };
        let mut dt = decay.time_to_altitude(period, h, target)?;

        let mut clamped = false;
        if t + dt >= horizon {
            dt = horizon - t;
            clamped = true;
        }
        if !(dt.is_finite() && dt > 0.0) || t + dt == t {
            return Err(Error::StepUnderflow { altitude_m: h });
        }

        let next = decay.rk4(period, dt);
        steps += 1;
        if !(next.is_finite() && next > 0.0) {
            t += dt;
            samples.push(LifetimeSample {
                t_s: t,
                altitude_m: -planet.radius(),
                period_s: 0.0,
            });
            break TerminalReason::PeriodCollapsed;
        }
        if next >= period {
            if clamped {
                // Decay over the remaining horizon is below period resolution.
                t = horizon;
                break TerminalReason::HorizonExceeded;
            }
            return Err(Error::StepUnderflow { altitude_m: h });
        }

        t = if clamped { horizon } else { t + dt };
        if clamped {
            samples.push(LifetimeSample {
                t_s: t,
                altitude_m: decay.altitude(next),
                period_s: next,
            });
            break TerminalReason::HorizonExceeded;
        }
        if target == 0.0 {
            samples.push(LifetimeSample {
                t_s: t,
                altitude_m: 0.0,
                period_s: surface_period,
            });
            break TerminalReason::SurfaceReached;
        }
        period = next;
        samples.push(LifetimeSample {
            t_s: t,
            altitude_m: decay.altitude(next),
            period_s: next,
        });
    };

    Ok(LifetimeResult {
        lifetime_s: t,
        terminal_reason: reason,
        trajectory: thin(samples, options.max_samples),
        steps,
    })
}

/// Search bounds for [`altitude_for_lifetime`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AltitudeSearch {
    pub grid_step_m: f64,
    pub ceiling_m: f64,
    pub step_scale: f64,
}

impl Default for AltitudeSearch {
    fn default() -> Self {
        AltitudeSearch {
            grid_step_m: 100.0,
            ceiling_m: 1_000e3,
            step_scale: 1.0,
        }
    }
}

/// Lowest grid altitude whose unpowered lifetime reaches `target_s`.
///
/// Altitudes are multiples of `search.grid_step_m`. The returned `h` satisfies
/// `lifetime(h) >= target` and `lifetime(h - step) < target`.
pub fn altitude_for_lifetime(
    planet: &PlanetProfile,
    spec: &SpacecraftSpec,
    target_s: f64,
    search: &AltitudeSearch,
) -> Result<f64> {
    if !(target_s.is_finite() && target_s > 0.0) {
        return Err(Error::domain(
            "target lifetime",
            target_s,
            "must be finite and strictly positive",
        ));
    }
    if !(search.grid_step_m.is_finite() && search.grid_step_m > 0.0) {
        return Err(Error::domain(
            "grid step",
            search.grid_step_m,
            "must be finite and strictly positive",
        ));
    }
    if !(search.ceiling_m.is_finite() && search.ceiling_m >= search.grid_step_m) {
        return Err(Error::domain(
            "ceiling",
            search.ceiling_m,
            "must be at least one grid step",
        ));
    }
    let options = LifetimeOptions {
        horizon_s: target_s,
        step_scale: search.step_scale,
        max_samples: 2,
    };
    let reaches = |k: u64| -> Result<bool> {
        let run = orbital_lifetime_with(planet, spec, k as f64 * search.grid_step_m, &options)?;
        Ok(run.terminal_reason == TerminalReason::HorizonExceeded || run.lifetime_s >= target_s)
    };
    let top = (search.ceiling_m / search.grid_step_m).floor() as u64;
    if reaches(1)? {
        return Ok(search.grid_step_m);
    }
    if !reaches(top)? {
        return Err(Error::CeilingExceeded {
            ceiling_m: top as f64 * search.grid_step_m,
            target_s,
        });
    }
    let k = first_true(1, top, reaches)?;
    Ok(k as f64 * search.grid_step_m)
}

struct Decay<'a> {
    planet: &'a PlanetProfile,
    spec: &'a SpacecraftSpec,
}

impl Decay<'_> {
    fn altitude(&self, period: f64) -> f64 {
        radius_from_period(self.planet, period) - self.planet.radius()
    }

    fn rate(&self, period: f64) -> f64 {
        decay_rate_unchecked(self.planet, self.spec, self.altitude(period))
    }

    /// Step length that carries the orbit from altitude `h` down to `target`.
    fn time_to_altitude(&self, period: f64, h: f64, target: f64) -> Result<f64> {
        let r = self.planet.radius() + h;
        let dh_dt = 2.0 / 3.0 * r / period * self.rate(period);
        let above = |dt: f64| self.altitude(self.rk4(period, dt)) > target;
        let mut hi = (h - target) / dh_dt.abs();
        let mut grown = 0;
        while above(hi) {
            hi *= 1.5;
            grown += 1;
            if grown > 60 || !hi.is_finite() {
                return Err(Error::StepUnderflow { altitude_m: h });
            }
        }
        let (_, dt) = bisect(0.0, hi, hi * 1e-13, above);
        Ok(dt)
    }

    fn rk4(&self, p: f64, dt: f64) -> f64 {
        let k1 = self.rate(p);
        let k2 = self.rate(p + 0.5 * dt * k1);
        let k3 = self.rate(p + 0.5 * dt * k2);
        let k4 = self.rate(p + dt * k3);
        p + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    }
}

fn thin(samples: Vec<LifetimeSample>, max: usize) -> Vec<LifetimeSample> {
    let n = samples.len();
    if n <= max {
        return samples;
    }
    (0..max)
        .map(|i| samples[(i as u128 * (n as u128 - 1) / (max as u128 - 1)) as usize])
        .collect()
}
