//! Feasibility toolkit for a Martian 3D C-RAN, where UAV-borne radio units
//! split baseband processing with CubeSats in very low orbit.
//!
//! The physical-layer split options need a one-way latency of about 250 µs,
//! which caps the UAV to CubeSat slant range at `c · τ ≈ 75 km`. Everything
//! else follows from that bound and the thin Martian atmosphere:
//!
//! | Module | What it computes |
//! |--------|------------------|
//! | [`models`] | Planet profiles, exponential atmosphere, CubeSat catalog, cross-section |
//! | [`orbit`] | Circular velocity, drag force, period, drag-induced period decay |
//! | [`lifetime`] | Unpowered decay integration and the altitude for a target lifetime |
//! | [`geometry`] | Slant range, minimum elevation, session time, zenith latency |
//! | [`feasibility`] | Thrust-limited altitude floor, altitude sweeps, knee of the drag/session front |
//! | [`scenario`] | Scenario files and overrides |
//! | [`report`] | End-to-end runs and CSV/JSON tables |
//!
//! ```
//! use mars_cran::{models::*, orbit::drag_force, geometry::*};
//!
//! let mars = PlanetProfile::mars(MarsDensity::High);
//! let sat = SpacecraftSpec::twelve_u();
//! let drag = drag_force(&mars, &sat, 67.1e3).unwrap();
//! assert!((drag - 2.34).abs() < 0.01);
//!
//! let d_max = max_slant_range(250e-6).unwrap();
//! let pass = session_time(&mars, 67.1e3, 0.0, d_max).unwrap();
//! assert!((pass.session_time_s - 9.6).abs() < 0.01);
//! ```
//!
//! All quantities are SI internally; km and degrees only appear in scenario
//! files and report tables.

pub mod error;
pub mod feasibility;
pub mod geometry;
pub mod lifetime;
pub mod models;
pub mod orbit;
pub mod report;
mod roots;
pub mod scenario;

pub use error::{Error, Result};
pub use feasibility::{
    earth_comparison, feasibility_sweep, knee_altitude, knee_altitude_weighted, min_sustainable_altitude,
    FeasibilityRow, Knee, KneeWeights, ParetoPoint,
};
pub use geometry::{
    max_slant_range, min_elevation, session_time, slant_range, zenith_latency, LatencyBudget, LinkGeometry,
};
pub use lifetime::{
    altitude_for_lifetime, orbital_lifetime, orbital_lifetime_with, AltitudeSearch, LifetimeOptions, LifetimeResult,
    TerminalReason,
};
pub use models::{atmospheric_density, cross_section, FormFactor, MarsDensity, PlanetProfile, SpacecraftSpec};
pub use orbit::{circular_velocity, drag_force, orbital_period, period_decay_rate, OrbitState};
pub use report::{emit_tables, run_scenario, run_stages, ReportBundle, Stage};
pub use scenario::{load_scenario, load_scenario_file, OutputFormat, ScenarioConfig};
