//! End-to-end scenario runs and deterministic table output.
//!
//! A [`ReportBundle`] is a metadata block plus a list of named [`Table`]s.
//! Tables render to CSV (header row with units in the column names) or to JSON
//! carrying the same columns in the same order. Numbers are rounded to nine
//! significant digits in both formats. Nothing time- or host-dependent is
//! written, so identical inputs give byte-identical files.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::feasibility::{
    earth_comparison, feasibility_sweep, knee_altitude_weighted, min_sustainable_altitude, FeasibilityRow,
};
use crate::geometry::{session_time, slant_range, zenith_latency, SPEED_OF_LIGHT};
use crate::lifetime::{
    altitude_for_lifetime, orbital_lifetime_with, AltitudeSearch, SECONDS_PER_DAY, SECONDS_PER_YEAR,
};
use crate::models::{cross_section, PlanetProfile, SpacecraftSpec};
use crate::scenario::{OutputFormat, ScenarioConfig};

/// Header of the per-spacecraft sweep table.
pub const SWEEP_COLUMNS: [&str; 8] = [
    "h_km",
    "rho_kg_m3",
    "v_m_s",
    "F_drag_N",
    "eps_min_deg",
    "t_s_s",
    "thrust_margin_N",
    "zenith_latency_ms",
];

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Cell {
    Num(f64),
    Int(u64),
    Text(String),
    Bool(bool),
    Missing,
}

impl Cell {
    pub fn as_f64(&self) -> Option<f64> {
        match self {
            Cell::Num(v) => Some(*v),
            Cell::Int(v) => Some(*v as f64),
            _ => None,
        }
    }

    fn opt(v: Option<f64>) -> Cell {
        v.map_or(Cell::Missing, Cell::Num)
    }

    fn text(s: impl Into<String>) -> Cell {
        Cell::Text(s.into())
    }

    fn csv(&self) -> String {
        match self {
            Cell::Num(v) => format_number(*v),
            Cell::Int(v) => v.to_string(),
            Cell::Text(s) if s.contains([',', '"', '\n']) => format!("\"{}\"", s.replace('"', "\"\"")),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
            Cell::Missing => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Num(v) => serde_json::Number::from_f64(round_sig(*v)).map_or(Value::Null, Value::Number),
            Cell::Int(v) => json!(v),
            Cell::Text(s) => json!(s),
            Cell::Bool(b) => json!(b),
            Cell::Missing => Value::Null,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Table {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    fn new(name: impl Into<String>, columns: &[&str]) -> Self {
        Table {
            name: name.into(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len(), "table {}", self.name);
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::csv).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| Value::Array(r.iter().map(Cell::json).collect()))
            .collect();
        let doc = json!({ "table": self.name, "columns": self.columns, "rows": rows });
        let mut s = serde_json::to_string_pretty(&doc).expect("table serialises");
        s.push('\n');
        s
    }
}

/// Pipeline stages; `report` runs all of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Stage {
    MinAltitude,
    Sweep,
    Session,
    Knee,
    Lifetime,
    EarthComparison,
}

impl Stage {
    pub const ALL: [Stage; 6] = [
        Stage::MinAltitude,
        Stage::Sweep,
        Stage::Session,
        Stage::Knee,
        Stage::Lifetime,
        Stage::EarthComparison,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Stage::MinAltitude => "min-altitude",
            Stage::Sweep => "sweep",
            Stage::Session => "session",
            Stage::Knee => "knee",
            Stage::Lifetime => "lifetime",
            Stage::EarthComparison => "earth-comparison",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportBundle {
    pub metadata: Value,
    pub tables: Vec<Table>,
}

impl ReportBundle {
    pub fn table(&self, name: &str) -> Option<&Table> {
        self.tables.iter().find(|t| t.name == name)
    }

    /// `(file name, contents)` for every artifact, metadata first.
    pub fn render(&self, format: OutputFormat) -> Vec<(String, String)> {
        let mut meta = serde_json::to_string_pretty(&self.metadata).expect("metadata serialises");
        meta.push('\n');
        let mut files = vec![("metadata.json".to_string(), meta)];
        for t in &self.tables {
            let body = match format {
                OutputFormat::Csv => t.to_csv(),
                OutputFormat::Json => t.to_json(),
            };
            files.push((format!("{}.{}", t.name, format.extension()), body));
        }
        files
    }
}

/// Runs every stage.
pub fn run_scenario(config: &ScenarioConfig) -> Result<ReportBundle> {
    run_stages(config, &Stage::ALL)
}

pub fn run_stages(config: &ScenarioConfig, stages: &[Stage]) -> Result<ReportBundle> {
    let mut stages = stages.to_vec();
    stages.sort();
    stages.dedup();

    let mut tables = Vec::new();
    for stage in &stages {
        let produced = match stage {
            Stage::MinAltitude => min_altitude_tables(config),
            Stage::Sweep => sweep_tables(config),
            Stage::Session => session_tables(config),
            Stage::Knee => knee_tables(config),
            Stage::Lifetime => lifetime_tables(config),
            Stage::EarthComparison => earth_tables(config),
        };
        tables.extend(produced.map_err(|e| e.at_stage(stage.name()))?);
    }
    Ok(ReportBundle {
        metadata: metadata(config, &stages),
        tables,
    })
}

/// Writes every artifact of `bundle` into `dir`, creating it if needed.
pub fn emit_tables(bundle: &ReportBundle, format: OutputFormat, dir: &Path) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    bundle
        .render(format)
        .into_iter()
        .map(|(name, body)| {
            let path = dir.join(name);
            std::fs::write(&path, body).map_err(|e| Error::io(&path, e))?;
            Ok(path)
        })
        .collect()
}

/// Rounds to nine significant digits.
pub fn round_sig(v: f64) -> f64 {
    if v == 0.0 || !v.is_finite() {
        return v;
    }
    format!("{v:.8e}").parse().expect("formatted float parses")
}

/// Nine significant digits, plain notation for everyday magnitudes.
pub fn format_number(v: f64) -> String {
    if !v.is_finite() {
        return if v.is_nan() {
            "nan".into()
        } else if v > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    let r = round_sig(v);
    if r == 0.0 {
        "0".into()
    } else if (1e-4..1e15).contains(&r.abs()) {
        format!("{r}")
    } else {
        format!("{r:e}")
    }
}

fn metadata(config: &ScenarioConfig, stages: &[Stage]) -> Value {
    let spacecraft: Vec<Value> = config
        .spacecraft
        .iter()
        .map(|s| {
            json!({
                "label": s.label(),
                "form_factor": s.form_factor(),
                "dimensions_m": s.dimensions(),
                "mass_kg": s.mass(),
                "drag_coefficient": s.drag_coefficient(),
                "thrust_N": s.thrust(),
                "cross_section_m2": cross_section(s),
                "ballistic_factor_m2_kg": s.ballistic_factor(),
            })
        })
        .collect();
    let earth = PlanetProfile::earth();
    json!({
        "tool": env!("CARGO_PKG_NAME"),
        "version": env!("CARGO_PKG_VERSION"),
        "stages": stages.iter().map(|s| s.name()).collect::<Vec<_>>(),
        "constants": {
            "speed_of_light_m_s": SPEED_OF_LIGHT,
            "seconds_per_day": SECONDS_PER_DAY,
            "seconds_per_year": SECONDS_PER_YEAR,
            "planet": planet_json(&config.planet),
            "rho0_choice": config.rho0_choice,
            "earth_for_comparison": planet_json(&earth),
            "spacecraft": spacecraft,
            "tau_s": config.budget.tau(),
            "d_max_m": config.budget.max_range(),
            "h_uav_m": config.h_uav_m,
        },
        "config": config,
    })
}

fn planet_json(p: &PlanetProfile) -> Value {
    json!({
        "name": p.name(),
        "gravitational_constant": p.gravitational_constant(),
        "mass_kg": p.mass(),
        "radius_m": p.radius(),
        "scale_height_m": p.scale_height(),
        "rho0_kg_m3": p.reference_density(),
    })
}

fn sweep_rows(config: &ScenarioConfig, spec: &SpacecraftSpec) -> Result<Vec<FeasibilityRow>> {
    feasibility_sweep(
        &config.planet,
        spec,
        &config.budget,
        config.h_uav_m,
        &config.grid.points()?,
    )
}

fn min_altitude_tables(config: &ScenarioConfig) -> Result<Vec<Table>> {
    let mut t = Table::new(
        "min_altitude",
        &["sat", "planet", "rho0_kg_m3", "F_prop_N", "h_min_km", "drag_negligible"],
    );
    for spec in &config.spacecraft {
        let h = min_sustainable_altitude(&config.planet, spec)?;
        t.push(vec![
            Cell::text(spec.label()),
            Cell::text(config.planet.name()),
            Cell::Num(config.planet.reference_density()),
            Cell::Num(spec.thrust()),
            Cell::Num(h.altitude_m / 1e3),
            Cell::Bool(h.drag_negligible),
        ]);
    }
    Ok(vec![t])
}

fn sweep_tables(config: &ScenarioConfig) -> Result<Vec<Table>> {
    let mut tables = Vec::new();
    for spec in &config.spacecraft {
        let mut t = Table::new(format!("sweep_{}", spec.label()), &SWEEP_COLUMNS);
        for r in sweep_rows(config, spec)? {
            t.push(vec![
                Cell::Num(r.altitude_m / 1e3),
                Cell::Num(r.density),
                Cell::Num(r.velocity_m_s),
                Cell::Num(r.drag_n),
                Cell::opt(r.epsilon_min_rad.map(f64::to_degrees)),
                Cell::opt(r.session_time_s),
                Cell::Num(r.thrust_margin_n),
                Cell::Num(zenith_latency(r.altitude_m, config.h_uav_m)? * 1e3),
            ]);
        }
        tables.push(t);
    }
    Ok(tables)
}

fn session_tables(config: &ScenarioConfig) -> Result<Vec<Table>> {
    let grid = config.grid.points()?;
    let d_max = config.budget.max_range();
    let mut session = Table::new(
        "session",
        &[
            "h_km",
            "eps_min_deg",
            "d_km",
            "theta_max_rad",
            "d_arc_km",
            "v_m_s",
            "t_s_s",
        ],
    );
    let mut surface = Table::new("elevation", &["h_km", "eps_deg", "d_km", "within_budget"]);
    let steps = (90.0 / config.elevation_step_deg).floor() as usize;
    for &h in &grid {
        match session_time(&config.planet, h, config.h_uav_m, d_max) {
            Ok(g) => session.push(vec![
                Cell::Num(h / 1e3),
                Cell::Num(g.epsilon_rad.to_degrees()),
                Cell::Num(g.slant_range_m / 1e3),
                Cell::Num(g.theta_max_rad),
                Cell::Num(g.arc_length_m / 1e3),
                Cell::Num(g.velocity_m_s),
                Cell::Num(g.session_time_s),
            ]),
            Err(Error::LatencyInfeasible { .. }) => {}
            Err(e) => return Err(e),
        }
        for k in 0..=steps {
            let deg = (k as f64 * config.elevation_step_deg).min(90.0);
            let d = slant_range(&config.planet, h, config.h_uav_m, deg.to_radians())?;
            surface.push(vec![
                Cell::Num(h / 1e3),
                Cell::Num(deg),
                Cell::Num(d / 1e3),
                Cell::Bool(d <= d_max),
            ]);
        }
    }
    Ok(vec![session, surface])
}

fn knee_tables(config: &ScenarioConfig) -> Result<Vec<Table>> {
    let mut summary = Table::new(
        "knee",
        &[
            "sat",
            "h_opt_km",
            "E_min",
            "F_drag_N",
            "t_s_s",
            "F_drag_over_F_prop_pct",
            "note",
        ],
    );
    let mut tables = Vec::new();
    for spec in &config.spacecraft {
        let rows = sweep_rows(config, spec)?;
        let knee = match knee_altitude_weighted(&rows, config.knee_weights) {
            Ok(k) => k,
            Err(Error::Domain {
                quantity: "feasible rows",
                value,
                ..
            }) if value < 3.0 => {
                summary.push(vec![
                    Cell::text(spec.label()),
                    Cell::Missing,
                    Cell::Missing,
                    Cell::Missing,
                    Cell::Missing,
                    Cell::Missing,
                    Cell::text(format!("{value} deployable rows; knee needs at least 3")),
                ]);
                continue;
            }
            Err(e) => return Err(e),
        };
        let mut pareto = Table::new(
            format!("pareto_{}", spec.label()),
            &["h_km", "t_s_s", "F_drag_N", "t_s_norm", "F_drag_norm", "E", "knee"],
        );
        for p in &knee.points {
            pareto.push(vec![
                Cell::Num(p.altitude_m / 1e3),
                Cell::Num(p.session_time_s),
                Cell::Num(p.drag_n),
                Cell::Num(p.session_time_norm),
                Cell::Num(p.drag_norm),
                Cell::opt(p.knee_error),
                Cell::Bool(p.is_knee),
            ]);
        }
        let at = knee.point();
        summary.push(vec![
            Cell::text(spec.label()),
            Cell::Num(knee.altitude_m / 1e3),
            Cell::Num(knee.error),
            Cell::Num(at.drag_n),
            Cell::Num(at.session_time_s),
            Cell::Num(100.0 * at.drag_n / spec.thrust()),
            Cell::text(""),
        ]);
        tables.push(pareto);
    }
    tables.insert(0, summary);
    Ok(tables)
}

fn lifetime_tables(config: &ScenarioConfig) -> Result<Vec<Table>> {
    let mut summary = Table::new(
        "lifetimes",
        &[
            "sat",
            "h0_km",
            "lifetime_s",
            "lifetime_days",
            "lifetime_years",
            "terminal_reason",
            "steps",
        ],
    );
    let mut target = Table::new("lifetime_target", &["sat", "target_years", "h_km", "zenith_latency_ms"]);
    let mut curves = Vec::new();
    for spec in &config.spacecraft {
        let mut curve = Table::new(
            format!("lifetime_{}", spec.label()),
            &["h0_km", "t_s", "t_days", "h_km", "P_s"],
        );
        for &h0 in &config.lifetime_altitudes_m {
            let run = orbital_lifetime_with(&config.planet, spec, h0, &config.lifetime)?;
            summary.push(vec![
                Cell::text(spec.label()),
                Cell::Num(h0 / 1e3),
                Cell::Num(run.lifetime_s),
                Cell::Num(run.lifetime_days()),
                Cell::Num(run.lifetime_years()),
                Cell::text(run.terminal_reason.as_str()),
                Cell::Int(run.steps as u64),
            ]);
            for s in &run.trajectory {
                curve.push(vec![
                    Cell::Num(h0 / 1e3),
                    Cell::Num(s.t_s),
                    Cell::Num(s.t_s / SECONDS_PER_DAY),
                    Cell::Num(s.altitude_m / 1e3),
                    Cell::Num(s.period_s),
                ]);
            }
        }
        let search = AltitudeSearch {
            step_scale: config.lifetime.step_scale,
            ..AltitudeSearch::default()
        };
        let h = altitude_for_lifetime(&config.planet, spec, config.lifetime_target_s, &search)?;
        target.push(vec![
            Cell::text(spec.label()),
            Cell::Num(config.lifetime_target_s / SECONDS_PER_YEAR),
            Cell::Num(h / 1e3),
            Cell::Num(zenith_latency(h, config.h_uav_m)? * 1e3),
        ]);
        curves.push(curve);
    }
    let mut tables = vec![summary, target];
    tables.extend(curves);
    Ok(tables)
}

fn earth_tables(config: &ScenarioConfig) -> Result<Vec<Table>> {
    let mut t = Table::new(
        "earth_comparison",
        &["sat", "mars_h_min_km", "earth_h_min_km", "reference_km", "delta_km"],
    );
    let mars = if config.planet.name() == "mars" {
        config.planet.clone()
    } else {
        PlanetProfile::mars(Default::default())
    };
    for row in earth_comparison(&mars, &PlanetProfile::earth(), &config.spacecraft)? {
        t.push(vec![
            Cell::text(row.label),
            Cell::Num(row.mars_min_m / 1e3),
            Cell::Num(row.earth_min_m / 1e3),
            Cell::opt(row.reference_km),
            Cell::opt(row.delta_km),
        ]);
    }
    Ok(vec![t])
}

/// Plain-text summary of a bundle for terminals.
pub fn summary(bundle: &ReportBundle) -> String {
    let mut out = String::new();
    for t in &bundle.tables {
        let _ = writeln!(out, "{}: {} rows", t.name, t.rows.len());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nine_significant_digits() {
        assert_eq!(format_number(67.1), "67.1");
        assert_eq!(format_number(2.337425876200526), "2.33742588");
        assert_eq!(format_number(74_948.114_5), "74948.1145");
        assert_eq!(format_number(2.3673e-6), "2.3673e-6");
        assert_eq!(format_number(0.0), "0");
        assert_eq!(format_number(844_868_322.178), "844868322");
        assert_eq!(round_sig(1.234567891234), 1.23456789);
    }

    #[test]
    fn csv_escaping_and_missing() {
        let mut t = Table::new("x", &["a", "b", "c"]);
        t.push(vec![Cell::text("p,q"), Cell::Missing, Cell::Bool(true)]);
        assert_eq!(t.to_csv(), "a,b,c\n\"p,q\",,true\n");
        let js: Value = serde_json::from_str(&t.to_json()).unwrap();
        assert_eq!(js["rows"][0][1], Value::Null);
        assert_eq!(js["columns"][2], "c");
    }
}
