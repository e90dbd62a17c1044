//! Radial expectation values <r^k>, the centroid, the second moment and the
//! Heisenberg variance, in closed form for Klein-Gordon states, with the
//! circular-state specializations and the Schrödinger baseline.
//!
//! Conversion note: all expressions are evaluated in atomic units
//! (hbar = m_e = e = 1), so hbar*c becomes c = 1/alpha, Z e^2 becomes
//! gamma*c, and m0 c^2 is mass*c^2. Lengths come out in bohr.

use crate::error::{Error, Result};
use crate::special::log_gamma;
use crate::states::{kg_params, QuantumState, SystemSpec};
use std::collections::BTreeMap;

/// Moments of one radial charge distribution.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentsResult {
    /// Centroid <r>.
    pub r_mean: f64,
    /// Second moment <r^2>.
    pub r2: f64,
    /// Heisenberg variance <r^2> - <r>^2.
    pub sigma2: f64,
    /// All computed moments, keyed by k.
    pub moments: BTreeMap<i32, f64>,
}

/// Laguerre moment integral
/// J_nl(k) = int_0^inf x^(2 l_eff + k + 2) e^-x [Lt_{n-l-1}^(2 l_eff + 1)(x)]^2 dx,
/// evaluated as a finite sum of gamma-function ratios. The lower summation
/// index is clamped at zero; below it the squared binomial factor vanishes.
/// k = -1 reproduces the orthonormality integral and equals one.
pub fn j_integral(n: u32, l: u32, l_eff: f64, k: i32) -> Result<f64> {
    if n < 1 || l > n - 1 {
        return Err(Error::InvalidArgument(format!(
            "j_integral requires 1 <= l + 1 <= n, got n = {n}, l = {l}"
        )));
    }
    if !l_eff.is_finite() || l_eff <= -0.5 {
        return Err(Error::InvalidArgument(format!(
            "j_integral requires l_eff > -1/2, got {l_eff}"
        )));
    }
    if k < -1 {
        return Err(Error::InvalidArgument(format!(
            "j_integral requires k >= -1 (the integral may diverge), got k = {k}"
        )));
    }
    let q = (n - l - 1) as i32;
    let prefactor =
        (log_gamma(q as f64 + 1.0)? - log_gamma(q as f64 + 2.0 * l_eff + 2.0)?).exp();
    let mut total = 0.0;
    for j in (q - k - 1).max(0)..=q {
        let binom = binomial(k + 1, q - j);
        let log_term =
            log_gamma(2.0 * l_eff + (k + j) as f64 + 3.0)? - log_gamma(j as f64 + 1.0)?;
        total += binom * binom * log_term.exp();
    }
    Ok(prefactor * total)
}

fn binomial(n: i32, k: i32) -> f64 {
    if k < 0 || k > n {
        return 0.0;
    }
    let mut value = 1.0;
    for i in 0..k {
        value = value * (n - i) as f64 / (i + 1) as f64;
    }
    value
}

/// Closed-form radial expectation value <r^k> of the Lorentz-invariant
/// charge density, k >= 0. k = 0 restates the charge normalization and is
/// exactly one.
pub fn radial_moment(system: &SystemSpec, state: &QuantumState, k: u32) -> Result<f64> {
    let p = kg_params(system, state)?;
    let c = system.speed_of_light();
    let rest = system.rest_energy();
    let k = k as i32;
    let j_k = j_integral(state.n, state.l, p.l_eff, k)?;
    let j_km1 = j_integral(state.n, state.l, p.l_eff, k - 1)?;
    Ok(p.norm_sq / rest * p.beta.powi(-k) * ((p.energy / p.beta) * j_k + p.gamma * c * j_km1))
}

/// Centroid, second moment and Heisenberg variance of a Klein-Gordon state.
pub fn heisenberg(system: &SystemSpec, state: &QuantumState) -> Result<MomentsResult> {
    let r0 = radial_moment(system, state, 0)?;
    let r_mean = radial_moment(system, state, 1)?;
    let r2 = radial_moment(system, state, 2)?;
    let mut moments = BTreeMap::new();
    moments.insert(0, r0);
    moments.insert(1, r_mean);
    moments.insert(2, r2);
    Ok(MomentsResult {
        r_mean,
        r2,
        sigma2: r2 - r_mean * r_mean,
        moments,
    })
}

/// Dedicated closed forms for circular states (l = n - 1), an algebraic
/// route independent of the general J-integral assembly.
pub fn circular_closed_forms(system: &SystemSpec, n: u32) -> Result<MomentsResult> {
    if n < 1 {
        return Err(Error::InvalidQuantumNumbers(
            "circular closed forms require n >= 1".into(),
        ));
    }
    let state = QuantumState { n, l: n - 1, m: 0 };
    let p = kg_params(system, &state)?;
    let g = p.gamma;
    let le = p.l_eff;
    let length = system.speed_of_light() / system.rest_energy(); // hbar c / (m0 c^2)

    let r_mean = 0.25 * length / (g * (1.0 + (g / (le + 1.0)).powi(2)).sqrt())
        * ((2.0 * le + 2.0) * (2.0 * le + 3.0) + 4.0 * g * g);
    let r2 = length * length / (2.0 * g * g)
        * (le + 1.0)
        * (2.0 * le + 3.0)
        * ((le + 1.0) * (le + 2.0) + g * g);
    let lp1 = le + 1.0;
    let sigma2 = length * length * (lp1 / (4.0 * g * g))
        * (lp1 * (2.0 * le + 3.0) * (lp1 * lp1 + 2.0 * g * g) + 2.0 * g.powi(4))
        / (lp1 * lp1 + g * g);

    let mut moments = BTreeMap::new();
    moments.insert(1, r_mean);
    moments.insert(2, r2);
    Ok(MomentsResult {
        r_mean,
        r2,
        sigma2,
        moments,
    })
}

/// Textbook hydrogenic moments at the same charge and mass: the comparison
/// baseline for every ratio.
pub fn sch_moments(system: &SystemSpec, state: &QuantumState) -> MomentsResult {
    let n2 = (state.n * state.n) as f64;
    let ll1 = (state.l * (state.l + 1)) as f64;
    let zm = system.z * system.mass;
    let r_mean = (3.0 * n2 - ll1) / (2.0 * zm);
    let r2 = n2 * (5.0 * n2 + 1.0 - 3.0 * ll1) / (2.0 * zm * zm);
    let mut moments = BTreeMap::new();
    moments.insert(0, 1.0);
    moments.insert(1, r_mean);
    moments.insert(2, r2);
    MomentsResult {
        r_mean,
        r2,
        sigma2: r2 - r_mean * r_mean,
        moments,
    }
}
