//! Thrust-versus-drag altitude floors, altitude sweeps and knee selection.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{session_time, LatencyBudget};
use crate::models::{FormFactor, PlanetProfile, SpacecraftSpec};
use crate::orbit::{drag_unchecked, velocity_unchecked};
use crate::roots::bisect;

/// Bracket width for the thrust/drag crossing, m.
const CROSSING_TOLERANCE_M: f64 = 1e-6;

/// Normalised knee errors closer than this to the minimum count as ties.
const KNEE_TIE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SustainableAltitude {
    pub altitude_m: f64,
    /// True when drag never exceeds the thrust, even at the surface.
    pub drag_negligible: bool,
}

/// Altitude where drag equals the available thrust.
///
/// Drag is strictly decreasing in altitude, so everything at or above the
/// returned altitude can be held with the thruster.
pub fn min_sustainable_altitude(planet: &PlanetProfile, spec: &SpacecraftSpec) -> Result<SustainableAltitude> {
    let thrust = spec.thrust();
    let drag = |h: f64| drag_unchecked(planet, spec, h);
    if drag(0.0) <= thrust {
        return Ok(SustainableAltitude {
            altitude_m: 0.0,
            drag_negligible: true,
        });
    }
    let mut upper = 100e3;
    while drag(upper) > thrust {
        upper *= 2.0;
        if !upper.is_finite() {
            return Err(Error::domain("thrust", thrust, "drag never falls below thrust"));
        }
    }
    let (_, hi) = bisect(0.0, upper, CROSSING_TOLERANCE_M, |h| drag(h) > thrust);
    Ok(SustainableAltitude {
        altitude_m: hi,
        drag_negligible: false,
    })
}

/// Evenly spaced altitudes `lo, lo + step, ...` up to and including `hi`.
///
/// Points are computed as `lo + i·step` rather than accumulated.
pub fn altitude_grid(lo: f64, hi: f64, step: f64) -> Result<Vec<f64>> {
    if !(lo.is_finite() && lo >= 0.0) {
        return Err(Error::domain("grid lo", lo, "must be finite and non-negative"));
    }
    if !(hi.is_finite() && hi > lo) {
        return Err(Error::domain("grid hi", hi, "must be finite and above grid lo"));
    }
    if !(step.is_finite() && step > 0.0) {
        return Err(Error::domain("grid step", step, "must be finite and strictly positive"));
    }
    let n = ((hi - lo) / step + 1e-9).floor() as usize;
    Ok((0..=n).map(|i| lo + i as f64 * step).collect())
}

/// One altitude sample of a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FeasibilityRow {
    pub altitude_m: f64,
    pub density: f64,
    pub velocity_m_s: f64,
    pub drag_n: f64,
    pub thrust_margin_n: f64,
    /// `None` when the zenith distance already exceeds the budget.
    pub epsilon_min_rad: Option<f64>,
    pub session_time_s: Option<f64>,
}

impl FeasibilityRow {
    pub fn latency_feasible(&self) -> bool {
        self.session_time_s.is_some()
    }

    /// Latency-feasible and holdable with the thruster.
    pub fn deployable(&self) -> bool {
        self.latency_feasible() && self.thrust_margin_n >= 0.0
    }
}

pub fn feasibility_sweep(
    planet: &PlanetProfile,
    spec: &SpacecraftSpec,
    budget: &LatencyBudget,
    h_uav: f64,
    grid: &[f64],
) -> Result<Vec<FeasibilityRow>> {
    if grid.is_empty() {
        return Err(Error::domain("grid", 0.0, "must not be empty"));
    }
    if let Some(w) = grid
        .windows(2)
        .find(|w| w[1].partial_cmp(&w[0]) != Some(std::cmp::Ordering::Greater))
    {
        return Err(Error::domain("grid", w[1], "must be strictly increasing"));
    }
    if let Some(&h) = grid.iter().find(|&&h| !(h.is_finite() && h > h_uav)) {
        return Err(Error::domain("grid", h, "every altitude must lie above the UAV"));
    }

    grid.iter()
        .map(|&h| {
            let drag = drag_unchecked(planet, spec, h);
            let link = match session_time(planet, h, h_uav, budget.max_range()) {
                Ok(g) => Some(g),
                Err(Error::LatencyInfeasible { .. }) => None,
                Err(e) => return Err(e),
            };
            Ok(FeasibilityRow {
                altitude_m: h,
                density: planet.density_unchecked(h),
                velocity_m_s: velocity_unchecked(planet, h),
                drag_n: drag,
                thrust_margin_n: spec.thrust() - drag,
                epsilon_min_rad: link.map(|g| g.epsilon_rad),
                session_time_s: link.map(|g| g.session_time_s),
            })
        })
        .collect()
}

/// Relative weights of the two objectives in the knee error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KneeWeights {
    pub session_time: f64,
    pub drag: f64,
}

impl Default for KneeWeights {
    fn default() -> Self {
        KneeWeights {
            session_time: 1.0,
            drag: 1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ParetoPoint {
    pub altitude_m: f64,
    pub session_time_s: f64,
    pub drag_n: f64,
    pub session_time_norm: f64,
    pub drag_norm: f64,
    /// Forward-difference error; `None` on the last point, which has no successor.
    pub knee_error: Option<f64>,
    pub is_knee: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Knee {
    pub altitude_m: f64,
    pub error: f64,
    /// Position of the knee within `points`.
    pub index: usize,
    pub points: Vec<ParetoPoint>,
}

impl Knee {
    pub fn point(&self) -> &ParetoPoint {
        &self.points[self.index]
    }
}

/// Knee of the drag / session-time front with equal weights.
pub fn knee_altitude(rows: &[FeasibilityRow]) -> Result<Knee> {
    knee_altitude_weighted(rows, KneeWeights::default())
}

/// Knee of the drag / session-time front.
///
/// Both objectives are min-max normalised over the deployable rows (latency
/// feasible, drag within thrust). Row `i` scores
/// `w_t·|t̂(i+1) - t̂(i)| + w_f·|F̂(i+1) - F̂(i)|` and the lowest score wins,
/// ties going to the lower altitude.
pub fn knee_altitude_weighted(rows: &[FeasibilityRow], weights: KneeWeights) -> Result<Knee> {
    let band: Vec<&FeasibilityRow> = rows.iter().filter(|r| r.deployable()).collect();
    if band.len() < 3 {
        return Err(Error::domain(
            "feasible rows",
            band.len() as f64,
            "knee selection needs at least three",
        ));
    }
    if band
        .windows(2)
        .any(|w| w[1].altitude_m.partial_cmp(&w[0].altitude_m) != Some(std::cmp::Ordering::Greater))
    {
        return Err(Error::domain("feasible rows", 0.0, "must be in increasing altitude"));
    }
    let spacing = band[1].altitude_m - band[0].altitude_m;
    if band
        .windows(2)
        .any(|w| ((w[1].altitude_m - w[0].altitude_m) - spacing).abs() > 1e-6 * spacing)
    {
        return Err(Error::domain("feasible rows", spacing, "must lie on a uniform grid"));
    }
    for w in [weights.session_time, weights.drag] {
        if !(w.is_finite() && w >= 0.0) {
            return Err(Error::domain("knee weight", w, "must be finite and non-negative"));
        }
    }

    let session: Vec<f64> = band.iter().map(|r| r.session_time_s.unwrap_or_default()).collect();
    let drag: Vec<f64> = band.iter().map(|r| r.drag_n).collect();
    let session_norm = min_max(&session);
    let drag_norm = min_max(&drag);

    let errors: Vec<f64> = (0..band.len() - 1)
        .map(|i| {
            weights.session_time * (session_norm[i + 1] - session_norm[i]).abs()
                + weights.drag * (drag_norm[i + 1] - drag_norm[i]).abs()
        })
        .collect();
    let best = errors.iter().copied().fold(f64::INFINITY, f64::min);
    let index = errors
        .iter()
        .position(|&e| e <= best + KNEE_TIE)
        .expect("at least two errors");

    let points = band
        .iter()
        .enumerate()
        .map(|(i, r)| ParetoPoint {
            altitude_m: r.altitude_m,
            session_time_s: session[i],
            drag_n: drag[i],
            session_time_norm: session_norm[i],
            drag_norm: drag_norm[i],
            knee_error: errors.get(i).copied(),
            is_knee: i == index,
        })
        .collect();

    Ok(Knee {
        altitude_m: band[index].altitude_m,
        error: errors[index],
        index,
        points,
    })
}

fn min_max(values: &[f64]) -> Vec<f64> {
    let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let span = hi - lo;
    values
        .iter()
        .map(|&v| if span > 0.0 { (v - lo) / span } else { 0.0 })
        .collect()
}

/// Earth minimum altitudes quoted for the cataloged platforms, km.
pub fn earth_reference_km(form_factor: FormFactor) -> Option<f64> {
    match form_factor {
        FormFactor::OneU => Some(163.5),
        FormFactor::SixU => Some(143.0),
        FormFactor::TwelveU => Some(86.5),
        FormFactor::Custom => None,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EarthComparison {
    pub label: String,
    pub mars_min_m: f64,
    pub earth_min_m: f64,
    pub reference_km: Option<f64>,
    /// Model minus reference, km.
    pub delta_km: Option<f64>,
}

/// Minimum sustainable altitude of each platform on both bodies.
///
/// Report-only: the quoted Earth references are carried alongside the model
/// values, with the difference, and never enforced.
pub fn earth_comparison(
    mars: &PlanetProfile,
    earth: &PlanetProfile,
    specs: &[SpacecraftSpec],
) -> Result<Vec<EarthComparison>> {
    specs
        .iter()
        .map(|spec| {
            let mars_min = min_sustainable_altitude(mars, spec)?.altitude_m;
            let earth_min = min_sustainable_altitude(earth, spec)?.altitude_m;
            let reference = earth_reference_km(spec.form_factor());
            Ok(EarthComparison {
                label: spec.label().to_string(),
                mars_min_m: mars_min,
                earth_min_m: earth_min,
                reference_km: reference,
                delta_km: reference.map(|r| earth_min / 1e3 - r),
            })
        })
        .collect()
}
