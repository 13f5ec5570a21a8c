//! Physical constants and the mass parameter `M = 2m/ħ²`.
//!
//! Everything in the crate works either in pure numbers (`M = 1`) or in the
//! molecular system of eV, Å and amu. The constant set is pinned to a single
//! CODATA release so that tabulated energies are reproducible.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

/// Name of the constant release used for [`CODATA_2018`].
pub const CODATA_RELEASE: &str = "CODATA 2018";

/// Constants needed to express `2m/ħ²` in eV⁻¹·Å⁻².
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhysicalConstants {
    /// ħc in eV·Å.
    pub hbar_c: f64,
    /// Atomic mass constant energy equivalent m_u c² in eV.
    pub amu_c2: f64,
}

pub const CODATA_2018: PhysicalConstants = PhysicalConstants {
    hbar_c: 1_973.269_804,
    amu_c2: 931.494_102_42e6,
};

impl PhysicalConstants {
    /// `(name, value, unit)` rows, in a fixed order.
    pub fn table(&self) -> Vec<(&'static str, f64, &'static str)> {
        vec![
            ("hbar_c", self.hbar_c, "eV*Angstrom"),
            ("amu_c2", self.amu_c2, "eV"),
            (
                "hbar2_over_2amu",
                self.hbar_c * self.hbar_c / (2.0 * self.amu_c2),
                "eV*Angstrom^2",
            ),
        ]
    }
}

/// Unit system of the inputs and outputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum UnitSystem {
    /// Pure numbers with `M = 1`.
    #[default]
    Dimensionless,
    /// Energies in eV, lengths in Å, masses in amu.
    Molecular,
}

/// Returns `M = 2·mu/ħ²` for a reduced mass `mu` in amu.
///
/// In the dimensionless system `mu` is ignored and `M = 1`.
pub fn mass_parameter(mu: f64, system: UnitSystem) -> Result<f64> {
    mass_parameter_with(mu, system, &CODATA_2018)
}

pub fn mass_parameter_with(mu: f64, system: UnitSystem, c: &PhysicalConstants) -> Result<f64> {
    match system {
        UnitSystem::Dimensionless => Ok(1.0),
        UnitSystem::Molecular => {
            if !(mu > 0.0) || !mu.is_finite() {
                return Err(domain(format!(
                    "reduced mass mu must be positive, got {mu}"
                )));
            }
            Ok(2.0 * mu * c.amu_c2 / (c.hbar_c * c.hbar_c))
        }
    }
}
