//! Physical constants, quantum-number validation, and the derived
//! relativistic parameter set of one (system, state) pair.

use crate::error::{Error, Result};

/// CODATA 2018 fine-structure constant; fixes c = 1/alpha = 137.035999084 a.u.
pub const FINE_STRUCTURE_CONSTANT: f64 = 7.297_352_569_3e-3;

/// pi^- meson rest mass in atomic units (electron masses).
pub const PION_MASS: f64 = 273.132054;

/// Safety margin kept between gamma = Z*alpha and the critical coupling
/// l + 1/2. At the critical value the effective orbital number degenerates
/// to -1/2 and the charge density stops being normalizable.
pub const CRITICAL_MARGIN: f64 = 1e-9;

/// Nuclear charge, particle mass and fine-structure constant; fixes all
/// physical scales of the problem. Z is accepted as a positive real so that
/// charge scans and non-relativistic-limit studies are possible.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemSpec {
    pub z: f64,
    pub mass: f64,
    pub alpha: f64,
}

impl SystemSpec {
    /// Speed of light in atomic units.
    pub fn speed_of_light(&self) -> f64 {
        1.0 / self.alpha
    }

    /// Rest energy m0 c^2 in atomic units.
    pub fn rest_energy(&self) -> f64 {
        let c = self.speed_of_light();
        self.mass * c * c
    }

    /// Coulomb coupling gamma = Z * alpha.
    pub fn gamma(&self) -> f64 {
        self.z * self.alpha
    }
}

/// Quantum numbers (n, l, m) with the usual hydrogenic constraints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuantumState {
    pub n: u32,
    pub l: u32,
    pub m: i32,
}

impl QuantumState {
    /// True for circular states l = n - 1 (nodeless radial function).
    pub fn is_circular(&self) -> bool {
        self.l == self.n - 1
    }
}

/// Derived relativistic quantities of one (system, state) pair.
///
/// `lambda = n - l + l_eff` plays the role of an effective principal quantum
/// number: the energy is rest_energy / sqrt(1 + (gamma/lambda)^2) and the
/// scaled radial variable is s = beta * r.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KgParams {
    /// Coulomb coupling Z * alpha.
    pub gamma: f64,
    /// Effective orbital number sqrt((l+1/2)^2 - gamma^2) - 1/2.
    pub l_eff: f64,
    /// Relativistic energy eigenvalue (rest energy included).
    pub energy: f64,
    /// Inverse length scale of the bound state, s = beta * r.
    pub beta: f64,
    /// Coulomb parameter n - l + l_eff.
    pub lambda: f64,
    /// Squared normalization constant of the radial function (inverse length).
    pub norm_sq: f64,
}

pub fn make_system(z: f64, mass: f64) -> Result<SystemSpec> {
    make_system_with_alpha(z, mass, FINE_STRUCTURE_CONSTANT)
}

pub fn make_system_with_alpha(z: f64, mass: f64, alpha: f64) -> Result<SystemSpec> {
    if !z.is_finite() || z <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "nuclear charge Z must be positive and finite, got {z}"
        )));
    }
    if !mass.is_finite() || mass <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "particle mass must be positive and finite, got {mass}"
        )));
    }
    if !alpha.is_finite() || alpha <= 0.0 || alpha >= 1.0 {
        return Err(Error::InvalidArgument(format!(
            "fine-structure constant must lie in (0, 1), got {alpha}"
        )));
    }
    Ok(SystemSpec { z, mass, alpha })
}

pub fn make_state(n: i64, l: i64, m: i64) -> Result<QuantumState> {
    if n < 1 {
        return Err(Error::InvalidQuantumNumbers(format!(
            "principal quantum number must satisfy n >= 1, got n = {n}"
        )));
    }
    if l < 0 || l > n - 1 {
        return Err(Error::InvalidQuantumNumbers(format!(
            "orbital quantum number must satisfy 0 <= l <= n - 1, got l = {l} with n = {n}"
        )));
    }
    if m.abs() > l {
        return Err(Error::InvalidQuantumNumbers(format!(
            "magnetic quantum number must satisfy |m| <= l, got m = {m} with l = {l}"
        )));
    }
    Ok(QuantumState {
        n: n as u32,
        l: l as u32,
        m: m as i32,
    })
}

/// Derived parameter set for a Klein-Gordon bound state.
///
/// Subcriticality gamma < l + 1/2 is required; beyond it the effective
/// orbital number turns complex. beta is evaluated through the identity
/// rest^2 - energy^2 = rest^2 x^2/(1+x^2) with x = gamma/lambda, which is
/// free of cancellation for small gamma and keeps energy/beta =
/// (c/2) lambda/gamma exact to machine precision.
pub fn kg_params(system: &SystemSpec, state: &QuantumState) -> Result<KgParams> {
    let gamma = system.gamma();
    let limit = state.l as f64 + 0.5;
    if gamma >= limit - CRITICAL_MARGIN {
        return Err(Error::SupercriticalCharge { gamma, limit });
    }
    let l_eff = (limit * limit - gamma * gamma).sqrt() - 0.5;
    let lambda = state.n as f64 - state.l as f64 + l_eff;

    let c = system.speed_of_light();
    let rest = system.rest_energy();
    let x = gamma / lambda;
    let root = (1.0 + x * x).sqrt();
    let energy = rest / root;
    let beta = 2.0 * rest * x / (c * root);
    let norm_sq = (rest * gamma / c) / (lambda * lambda + gamma * gamma);

    Ok(KgParams {
        gamma,
        l_eff,
        energy,
        beta,
        lambda,
        norm_sq,
    })
}
