//! Non-relativistic hydrogenic baseline at the same nuclear charge and
//! particle mass (infinite nuclear mass), built independently of the
//! Klein-Gordon path so the two can validate each other.

use crate::error::Result;
use crate::kg::RadialDensity;
use crate::states::{QuantumState, SystemSpec};

/// Radial probability-density factor D(r) = R_nl^2(r) of the hydrogenic
/// state, normalized so that int D r^2 dr = 1.
pub fn sch_density(system: &SystemSpec, state: &QuantumState) -> Result<RadialDensity> {
    RadialDensity::new_hydrogenic(system, state)
}

/// Non-relativistic bound-state energy -mass Z^2 / (2 n^2) in atomic units.
pub fn sch_energy(system: &SystemSpec, state: &QuantumState) -> f64 {
    -system.mass * system.z * system.z / (2.0 * (state.n * state.n) as f64)
}
