//! Planetary environments, the exponential atmosphere and the CubeSat catalog.
//!
//! Everything is SI: metres, kilograms, seconds, newtons. Conversion to km or
//! degrees only happens at the report boundary.

use std::fmt;

use serde::Serialize;

use crate::error::{check_altitude, Error, Result};

/// Newtonian constant used for both built-in bodies, N·m²·kg⁻².
pub const GRAVITATIONAL_CONSTANT: f64 = 6.67e-11;

/// Default drag coefficient for a tumbling parallelepiped.
pub const DEFAULT_DRAG_COEFFICIENT: f64 = 2.0;

/// Mars reference surface density, low and high bounds (kg/m³).
pub const MARS_RHO0_LOW: f64 = 1e-4;
pub const MARS_RHO0_HIGH: f64 = 1e-3;

/// Which of the two Mars reference densities to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MarsDensity {
    Low,
    #[default]
    High,
}

impl MarsDensity {
    pub fn rho0(self) -> f64 {
        match self {
            MarsDensity::Low => MARS_RHO0_LOW,
            MarsDensity::High => MARS_RHO0_HIGH,
        }
    }
}

/// Gravitational and atmospheric constants for one body.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PlanetProfile {
    name: String,
    gravitational_constant: f64,
    mass_kg: f64,
    radius_m: f64,
    scale_height_m: f64,
    reference_density: f64,
}

impl PlanetProfile {
    pub fn new(
        name: impl Into<String>,
        gravitational_constant: f64,
        mass_kg: f64,
        radius_m: f64,
        scale_height_m: f64,
        reference_density: f64,
    ) -> Result<Self> {
        positive("gravitational_constant", gravitational_constant)?;
        positive("mass", mass_kg)?;
        positive("radius", radius_m)?;
        positive("scale_height", scale_height_m)?;
        positive("rho0", reference_density)?;
        Ok(PlanetProfile {
            name: name.into(),
            gravitational_constant,
            mass_kg,
            radius_m,
            scale_height_m,
            reference_density,
        })
    }

    /// Mars with the chosen reference density (H = 11.1 km).
    pub fn mars(density: MarsDensity) -> Self {
        Self::mars_with_rho0(density.rho0())
    }

    pub fn mars_with_rho0(rho0: f64) -> Self {
        PlanetProfile {
            name: "mars".into(),
            gravitational_constant: GRAVITATIONAL_CONSTANT,
            mass_kg: 6.39e23,
            radius_m: 3389.5e3,
            scale_height_m: 11.1e3,
            reference_density: rho0,
        }
    }

    /// Earth with H = 8.5 km and sea-level density 1.217 kg/m³.
    ///
    /// Mass and radius are the usual reference values (5.972e24 kg, 6371 km).
    pub fn earth() -> Self {
        PlanetProfile {
            name: "earth".into(),
            gravitational_constant: GRAVITATIONAL_CONSTANT,
            mass_kg: 5.972e24,
            radius_m: 6.371e6,
            scale_height_m: 8.5e3,
            reference_density: 1.217,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn gravitational_constant(&self) -> f64 {
        self.gravitational_constant
    }

    pub fn mass(&self) -> f64 {
        self.mass_kg
    }

    pub fn radius(&self) -> f64 {
        self.radius_m
    }

    pub fn scale_height(&self) -> f64 {
        self.scale_height_m
    }

    pub fn reference_density(&self) -> f64 {
        self.reference_density
    }

    /// G·M in m³/s².
    pub fn mu(&self) -> f64 {
        self.gravitational_constant * self.mass_kg
    }

    pub(crate) fn density_unchecked(&self, h: f64) -> f64 {
        self.reference_density * (-h / self.scale_height_m).exp()
    }
}

/// Exponential atmosphere: `rho0 · exp(-h / H)`.
pub fn atmospheric_density(planet: &PlanetProfile, h: f64) -> Result<f64> {
    check_altitude(h)?;
    Ok(planet.density_unchecked(h))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FormFactor {
    #[serde(rename = "1U")]
    OneU,
    #[serde(rename = "6U")]
    SixU,
    #[serde(rename = "12U")]
    TwelveU,
    #[serde(rename = "custom")]
    Custom,
}

impl FormFactor {
    pub const CATALOG: [FormFactor; 3] = [FormFactor::OneU, FormFactor::SixU, FormFactor::TwelveU];

    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().as_str() {
            "1u" => Some(FormFactor::OneU),
            "6u" => Some(FormFactor::SixU),
            "12u" => Some(FormFactor::TwelveU),
            "custom" => Some(FormFactor::Custom),
            _ => None,
        }
    }

    /// Lower-case key used in configs, CLI flags and file names.
    pub fn key(self) -> &'static str {
        match self {
            FormFactor::OneU => "1u",
            FormFactor::SixU => "6u",
            FormFactor::TwelveU => "12u",
            FormFactor::Custom => "custom",
        }
    }
}

impl fmt::Display for FormFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FormFactor::OneU => "1U",
            FormFactor::SixU => "6U",
            FormFactor::TwelveU => "12U",
            FormFactor::Custom => "custom",
        };
        f.write_str(s)
    }
}

/// CubeSat platform: box dimensions, mass, drag coefficient and available thrust.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpacecraftSpec {
    label: String,
    form_factor: FormFactor,
    dimensions_m: [f64; 3],
    mass_kg: f64,
    drag_coefficient: f64,
    thrust_n: f64,
}

impl SpacecraftSpec {
    pub fn new(
        label: impl Into<String>,
        form_factor: FormFactor,
        dimensions_m: [f64; 3],
        mass_kg: f64,
        drag_coefficient: f64,
        thrust_n: f64,
    ) -> Result<Self> {
        for d in dimensions_m {
            positive("dimensions", d)?;
        }
        positive("mass", mass_kg)?;
        positive("drag_coefficient", drag_coefficient)?;
        positive("thrust", thrust_n)?;
        Ok(SpacecraftSpec {
            label: label.into(),
            form_factor,
            dimensions_m,
            mass_kg,
            drag_coefficient,
            thrust_n,
        })
    }

    /// Commercial 1U: 10×10×10 cm, 1.33 kg, 1 mN off-the-shelf thruster.
    pub fn one_u() -> Self {
        Self::catalog_entry(FormFactor::OneU, [0.10, 0.10, 0.10], 1.33, 1e-3)
    }

    /// MarCO-class 6U: 20×30×10 cm, 13.5 kg, four 10 mN MiPS thrusters.
    pub fn six_u() -> Self {
        Self::catalog_entry(FormFactor::SixU, [0.20, 0.30, 0.10], 13.5, 4.0 * 10e-3)
    }

    /// Hybrid 12U: 20×30×20 cm, 25 kg, 44.4 N hybrid rocket motor.
    pub fn twelve_u() -> Self {
        Self::catalog_entry(FormFactor::TwelveU, [0.20, 0.30, 0.20], 25.0, 44.4)
    }

    /// Built-in entry for a cataloged form factor; `None` for `Custom`.
    pub fn catalog(form_factor: FormFactor) -> Option<Self> {
        match form_factor {
            FormFactor::OneU => Some(Self::one_u()),
            FormFactor::SixU => Some(Self::six_u()),
            FormFactor::TwelveU => Some(Self::twelve_u()),
            FormFactor::Custom => None,
        }
    }

    fn catalog_entry(form_factor: FormFactor, dimensions_m: [f64; 3], mass_kg: f64, thrust_n: f64) -> Self {
        SpacecraftSpec {
            label: form_factor.key().to_string(),
            form_factor,
            dimensions_m,
            mass_kg,
            drag_coefficient: DEFAULT_DRAG_COEFFICIENT,
            thrust_n,
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn form_factor(&self) -> FormFactor {
        self.form_factor
    }

    pub fn dimensions(&self) -> [f64; 3] {
        self.dimensions_m
    }

    pub fn mass(&self) -> f64 {
        self.mass_kg
    }

    pub fn drag_coefficient(&self) -> f64 {
        self.drag_coefficient
    }

    pub fn thrust(&self) -> f64 {
        self.thrust_n
    }

    /// Same platform with a different mass.
    pub fn with_mass(&self, mass_kg: f64) -> Result<Self> {
        positive("mass", mass_kg)?;
        Ok(SpacecraftSpec {
            mass_kg,
            ..self.clone()
        })
    }

    /// Same platform with a different thruster.
    pub fn with_thrust(&self, thrust_n: f64) -> Result<Self> {
        positive("thrust", thrust_n)?;
        Ok(SpacecraftSpec {
            thrust_n,
            ..self.clone()
        })
    }

    /// Ballistic factor A·C_D/m in m²/kg.
    pub fn ballistic_factor(&self) -> f64 {
        cross_section(self) * self.drag_coefficient / self.mass_kg
    }
}

/// Mean projected area of a box: half the sum of its three distinct face areas.
///
/// Solar arrays are not included.
pub fn cross_section(spec: &SpacecraftSpec) -> f64 {
    let [a, b, c] = spec.dimensions_m;
    0.5 * (a * b + b * c + a * c)
}

fn positive(quantity: &'static str, value: f64) -> Result<()> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(Error::domain(quantity, value, "must be finite and strictly positive"))
    }
}
