//! Scenario files.
//!
//! Scenarios are flat `key = value` files (TOML syntax) with optional sections
//! for overriding the built-in body and spacecraft catalogs. Every key is
//! optional; an empty file is the default Mars / 12U / 250 µs scenario.
//! Boundary units are km, degrees and seconds (years where noted).
//!
//! ```toml
//! planet = "mars"            # mars | earth
//! rho0 = "high"              # low | high | <kg/m³>
//! sats = ["12u"]             # catalog keys or names defined below
//! tau = 250e-6               # one-way latency budget, s
//! # d_max_km = 75            # budget as a range instead of tau
//! h_uav_km = 0.0             # UAV hover height, 0..=10
//! grid_lo_km = 35.0
//! grid_hi_km = 75.0
//! grid_step_km = 0.1
//! lifetime_altitudes_km = [75, 150, 175, 250]
//! lifetime_target_years = 2.0
//! horizon_years = 100.0
//! step_scale = 1.0
//! max_samples = 10000
//! knee_weights = [1.0, 1.0]  # [session time, drag]
//! elevation_step_deg = 1.0
//! format = "csv"             # csv | json
//! out = "report"
//!
//! [body]                     # overrides for the selected planet
//! scale_height_km = 11.1
//!
//! [spacecraft.12u]           # override a catalog entry
//! mass_kg = 30.0
//!
//! [spacecraft.heavy6u]       # or define a custom one (all fields required)
//! dims_m = [0.2, 0.3, 0.1]
//! mass_kg = 14.0
//! drag_coefficient = 2.2
//! thrust_n = 0.08
//! ```

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::feasibility::{altitude_grid, KneeWeights};
use crate::geometry::{LatencyBudget, IDEAL_SPLIT_LATENCY_S};
use crate::lifetime::{LifetimeOptions, SECONDS_PER_YEAR};
use crate::models::{FormFactor, MarsDensity, PlanetProfile, SpacecraftSpec, DEFAULT_DRAG_COEFFICIENT};

pub const MAX_UAV_HEIGHT_M: f64 = 10e3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl OutputFormat {
    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Some(OutputFormat::Csv),
            "json" => Some(OutputFormat::Json),
            _ => None,
        }
    }

    pub fn extension(self) -> &'static str {
        match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        }
    }
}

/// Altitude grid bounds, m.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSpec {
    pub lo_m: f64,
    pub hi_m: f64,
    pub step_m: f64,
}

impl GridSpec {
    pub fn points(&self) -> Result<Vec<f64>> {
        altitude_grid(self.lo_m, self.hi_m, self.step_m)
    }
}

/// A validated scenario with defaults applied.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScenarioConfig {
    pub planet: PlanetProfile,
    /// `low`, `high` or `custom`; how the reference density was chosen.
    pub rho0_choice: String,
    pub spacecraft: Vec<SpacecraftSpec>,
    pub budget: LatencyBudget,
    pub h_uav_m: f64,
    pub grid: GridSpec,
    pub lifetime_altitudes_m: Vec<f64>,
    pub lifetime_target_s: f64,
    pub lifetime: LifetimeOptions,
    pub knee_weights: KneeWeights,
    pub elevation_step_deg: f64,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
}

impl Default for ScenarioConfig {
    fn default() -> Self {
        load_scenario("").expect("empty scenario is valid")
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScenario {
    planet: Option<String>,
    rho0: Option<Rho0>,
    sats: Option<OneOrMany>,
    tau: Option<f64>,
    d_max_km: Option<f64>,
    h_uav_km: Option<f64>,
    grid_lo_km: Option<f64>,
    grid_hi_km: Option<f64>,
    grid_step_km: Option<f64>,
    lifetime_altitudes_km: Option<Vec<f64>>,
    lifetime_target_years: Option<f64>,
    horizon_years: Option<f64>,
    step_scale: Option<f64>,
    max_samples: Option<i64>,
    knee_weights: Option<[f64; 2]>,
    elevation_step_deg: Option<f64>,
    format: Option<String>,
    out: Option<PathBuf>,
    body: Option<RawBody>,
    #[serde(default)]
    spacecraft: BTreeMap<String, RawSpacecraft>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum Rho0 {
    Value(f64),
    Named(String),
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum OneOrMany {
    One(String),
    Many(Vec<String>),
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBody {
    gravitational_constant: Option<f64>,
    mass_kg: Option<f64>,
    radius_km: Option<f64>,
    scale_height_km: Option<f64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpacecraft {
    dims_m: Option<[f64; 3]>,
    mass_kg: Option<f64>,
    drag_coefficient: Option<f64>,
    thrust_n: Option<f64>,
}

/// Parses and validates scenario text.
pub fn load_scenario(text: &str) -> Result<ScenarioConfig> {
    load_scenario_with(text, &[])
}

/// Reads a scenario file.
pub fn load_scenario_file(path: &Path) -> Result<ScenarioConfig> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    load_scenario(&text)
}

/// Parses scenario text, then applies `key=value` overrides on top.
///
/// Override keys may be dotted (`spacecraft.12u.mass_kg=30`). Values use TOML
/// syntax; anything that does not parse as a TOML value is taken as a string.
pub fn load_scenario_with(text: &str, overrides: &[String]) -> Result<ScenarioConfig> {
    let mut table: toml::Table = toml::from_str(text).map_err(|e| Error::ConfigParse {
        message: e.message().trim().to_string(),
    })?;
    for item in overrides {
        apply_override(&mut table, item)?;
    }
    let raw = RawScenario::deserialize(toml::Value::Table(table)).map_err(map_de_error)?;
    raw.validate()
}

fn apply_override(table: &mut toml::Table, item: &str) -> Result<()> {
    let (key, value) = item.split_once('=').ok_or_else(|| Error::ConfigParse {
        message: format!("override `{item}` is not of the form key=value"),
    })?;
    let key = key.trim();
    let value = value.trim();
    let parsed = toml::from_str::<toml::Table>(&format!("v = {value}"))
        .ok()
        .and_then(|mut t| t.remove("v"))
        .unwrap_or_else(|| toml::Value::String(value.to_string()));

    let mut parts: Vec<&str> = key.split('.').collect();
    let last = parts
        .pop()
        .filter(|k| !k.is_empty())
        .ok_or_else(|| Error::ConfigParse {
            message: format!("override `{item}` has an empty key"),
        })?;
    let mut node = table;
    for part in parts {
        let entry = node
            .entry(part.to_string())
            .or_insert_with(|| toml::Value::Table(toml::Table::new()));
        node = entry
            .as_table_mut()
            .ok_or_else(|| Error::invalid(part, "is not a section"))?;
    }
    node.insert(last.to_string(), parsed);
    Ok(())
}

fn map_de_error(e: toml::de::Error) -> Error {
    let message = e.message().trim().to_string();
    if let Some(rest) = message.strip_prefix("unknown field `") {
        if let Some(end) = rest.find('`') {
            return Error::UnknownKey {
                key: rest[..end].to_string(),
            };
        }
    }
    Error::ConfigParse { message }
}

impl RawScenario {
    fn validate(self) -> Result<ScenarioConfig> {
        let planet_key = self.planet.as_deref().unwrap_or("mars").to_ascii_lowercase();
        let (mut planet, rho0_choice) = match (planet_key.as_str(), &self.rho0) {
            ("mars", None) => (PlanetProfile::mars(MarsDensity::High), "high".to_string()),
            ("mars", Some(Rho0::Named(n))) => match n.to_ascii_lowercase().as_str() {
                "high" => (PlanetProfile::mars(MarsDensity::High), "high".to_string()),
                "low" => (PlanetProfile::mars(MarsDensity::Low), "low".to_string()),
                _ => {
                    return Err(Error::invalid(
                        "rho0",
                        format!("expected low, high or a number, got `{n}`"),
                    ))
                }
            },
            ("mars", Some(Rho0::Value(v))) => {
                positive("rho0", *v)?;
                (PlanetProfile::mars_with_rho0(*v), "custom".to_string())
            }
            ("earth", None) => (PlanetProfile::earth(), "default".to_string()),
            ("earth", Some(Rho0::Value(v))) => {
                positive("rho0", *v)?;
                let e = PlanetProfile::earth();
                let p = PlanetProfile::new(
                    "earth",
                    e.gravitational_constant(),
                    e.mass(),
                    e.radius(),
                    e.scale_height(),
                    *v,
                )?;
                (p, "custom".to_string())
            }
            ("earth", Some(Rho0::Named(n))) => {
                return Err(Error::invalid(
                    "rho0",
                    format!("`{n}` only applies to mars; give a number"),
                ))
            }
            (other, _) => {
                return Err(Error::UnknownEntry {
                    key: "planet".into(),
                    name: other.to_string(),
                })
            }
        };
        if let Some(body) = self.body {
            let g = body.gravitational_constant.unwrap_or(planet.gravitational_constant());
            let m = body.mass_kg.unwrap_or(planet.mass());
            let r = body.radius_km.map_or(planet.radius(), |v| v * 1e3);
            let h = body.scale_height_km.map_or(planet.scale_height(), |v| v * 1e3);
            for (key, v) in [
                ("body.gravitational_constant", g),
                ("body.mass_kg", m),
                ("body.radius_km", r),
                ("body.scale_height_km", h),
            ] {
                positive(key, v)?;
            }
            planet = PlanetProfile::new(planet.name(), g, m, r, h, planet.reference_density())?;
        }

        let sat_keys = match self.sats {
            None => vec!["12u".to_string()],
            Some(OneOrMany::One(s)) => s.split(',').map(|s| s.trim().to_string()).collect(),
            Some(OneOrMany::Many(v)) => v,
        };
        if sat_keys.is_empty() {
            return Err(Error::invalid("sats", "select at least one spacecraft"));
        }
        let mut spacecraft = Vec::with_capacity(sat_keys.len());
        for key in &sat_keys {
            spacecraft.push(resolve_spacecraft(key, &self.spacecraft)?);
        }
        for name in self.spacecraft.keys() {
            if !sat_keys.iter().any(|k| k.eq_ignore_ascii_case(name)) && FormFactor::parse(name).is_none() {
                // Custom definitions must be valid even when not selected.
                resolve_spacecraft(name, &self.spacecraft)?;
            }
        }

        let budget = match (self.tau, self.d_max_km) {
            (Some(_), Some(_)) => return Err(Error::invalid("d_max_km", "give either tau or d_max_km, not both")),
            (_, Some(d)) => {
                positive("d_max_km", d)?;
                LatencyBudget::from_range(d * 1e3)?
            }
            (tau, None) => {
                let tau = tau.unwrap_or(IDEAL_SPLIT_LATENCY_S);
                positive("tau", tau)?;
                LatencyBudget::from_latency(tau)?
            }
        };

        let h_uav_m = self.h_uav_km.unwrap_or(0.0) * 1e3;
        if !(h_uav_m.is_finite() && (0.0..=MAX_UAV_HEIGHT_M).contains(&h_uav_m)) {
            return Err(Error::invalid("h_uav_km", "must lie in [0, 10]"));
        }

        let grid = GridSpec {
            lo_m: self.grid_lo_km.unwrap_or(35.0) * 1e3,
            hi_m: self.grid_hi_km.unwrap_or(75.0) * 1e3,
            step_m: self.grid_step_km.unwrap_or(0.1) * 1e3,
        };
        positive("grid_step_km", grid.step_m)?;
        if !(grid.lo_m.is_finite() && grid.lo_m > h_uav_m) {
            return Err(Error::invalid("grid_lo_km", "must lie above the UAV height"));
        }
        if !(grid.hi_m.is_finite() && grid.hi_m > grid.lo_m) {
            return Err(Error::invalid("grid_hi_km", "must exceed grid_lo_km"));
        }

        let lifetime_altitudes_m: Vec<f64> = self
            .lifetime_altitudes_km
            .unwrap_or_else(|| vec![75.0, 150.0, 175.0, 250.0])
            .into_iter()
            .map(|h| h * 1e3)
            .collect();
        for &h in &lifetime_altitudes_m {
            positive("lifetime_altitudes_km", h)?;
        }
        let lifetime_target_s = self.lifetime_target_years.unwrap_or(2.0) * SECONDS_PER_YEAR;
        positive("lifetime_target_years", lifetime_target_s)?;

        let defaults = LifetimeOptions::default();
        let horizon_s = self.horizon_years.map_or(defaults.horizon_s, |y| y * SECONDS_PER_YEAR);
        positive("horizon_years", horizon_s)?;
        let step_scale = self.step_scale.unwrap_or(defaults.step_scale);
        if !(step_scale > 0.0 && step_scale <= 100.0) {
            return Err(Error::invalid("step_scale", "must lie in (0, 100]"));
        }
        let max_samples = match self.max_samples {
            None => defaults.max_samples,
            Some(n) if n >= 2 => n as usize,
            Some(_) => return Err(Error::invalid("max_samples", "must be at least 2")),
        };

        let [w_t, w_f] = self.knee_weights.unwrap_or([1.0, 1.0]);
        if !(w_t.is_finite() && w_f.is_finite() && w_t >= 0.0 && w_f >= 0.0 && w_t + w_f > 0.0) {
            return Err(Error::invalid("knee_weights", "must be non-negative and not both zero"));
        }

        let elevation_step_deg = self.elevation_step_deg.unwrap_or(1.0);
        if !(elevation_step_deg > 0.0 && elevation_step_deg <= 90.0) {
            return Err(Error::invalid("elevation_step_deg", "must lie in (0, 90]"));
        }

        let format = match self.format.as_deref() {
            None => OutputFormat::Csv,
            Some(f) => OutputFormat::parse(f)
                .ok_or_else(|| Error::invalid("format", format!("expected csv or json, got `{f}`")))?,
        };

        Ok(ScenarioConfig {
            planet,
            rho0_choice,
            spacecraft,
            budget,
            h_uav_m,
            grid,
            lifetime_altitudes_m,
            lifetime_target_s,
            lifetime: LifetimeOptions {
                horizon_s,
                step_scale,
                max_samples,
            },
            knee_weights: KneeWeights {
                session_time: w_t,
                drag: w_f,
            },
            elevation_step_deg,
            format,
            out: self.out,
        })
    }
}

fn resolve_spacecraft(key: &str, overrides: &BTreeMap<String, RawSpacecraft>) -> Result<SpacecraftSpec> {
    let over = overrides
        .iter()
        .find(|(k, _)| k.eq_ignore_ascii_case(key))
        .map(|(_, v)| v);
    let section = format!("spacecraft.{key}");
    let field = |name: &str| format!("{section}.{name}");

    let base = FormFactor::parse(key).and_then(SpacecraftSpec::catalog);
    match (base, over) {
        (Some(base), None) => Ok(base),
        (Some(base), Some(o)) => SpacecraftSpec::new(
            base.label(),
            base.form_factor(),
            o.dims_m.unwrap_or(base.dimensions()),
            o.mass_kg.unwrap_or(base.mass()),
            o.drag_coefficient.unwrap_or(base.drag_coefficient()),
            o.thrust_n.unwrap_or(base.thrust()),
        )
        .map_err(|e| Error::invalid(section.clone(), e.to_string())),
        (None, Some(o)) => {
            let dims = o
                .dims_m
                .ok_or_else(|| Error::invalid(field("dims_m"), "required for a custom spacecraft"))?;
            let mass = o
                .mass_kg
                .ok_or_else(|| Error::invalid(field("mass_kg"), "required for a custom spacecraft"))?;
            let thrust = o
                .thrust_n
                .ok_or_else(|| Error::invalid(field("thrust_n"), "required for a custom spacecraft"))?;
            SpacecraftSpec::new(
                key,
                FormFactor::Custom,
                dims,
                mass,
                o.drag_coefficient.unwrap_or(DEFAULT_DRAG_COEFFICIENT),
                thrust,
            )
            .map_err(|e| Error::invalid(section.clone(), e.to_string()))
        }
        (None, None) => Err(Error::UnknownEntry {
            key: "sats".into(),
            name: key.to_string(),
        }),
    }
}

fn positive(key: &str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Error::invalid(
            key,
            format!("must be finite and strictly positive, got {v}"),
        ))
    }
}
