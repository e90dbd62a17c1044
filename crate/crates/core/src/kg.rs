//! Klein-Gordon Coulomb bound states: the reduced radial function u, the
//! Lorentz-invariant charge density in physical radial coordinates, and the
//! full 3-D density assembled from radial and angular factors.
//!
//! The charge density of a negatively charged spin-0 particle is weighted by
//! (energy - V(r))/(m0 c^2), so the total charge rather than the probability
//! integrates to one. With V = -Z/r this weight is positive everywhere and
//! pulls density toward the origin relative to the Schrödinger case.

use crate::error::{Error, Result};
use crate::special::{self, AngularDensity};
use crate::states::{kg_params, QuantumState, SystemSpec};

/// Which wave equation produced a radial density.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theory {
    KleinGordon,
    Schrodinger,
}

impl std::fmt::Display for Theory {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Theory::KleinGordon => write!(f, "Klein-Gordon"),
            Theory::Schrodinger => write!(f, "Schrodinger"),
        }
    }
}

/// Reduced radial function u(s) = N s^(l_eff + 1) e^(-s/2) Lt_q^(2 l_eff + 1)(s)
/// and its derivative with respect to s, where Lt is the orthonormal Laguerre
/// polynomial of degree q = n - l - 1. u vanishes at the origin and at
/// infinity and has exactly q interior zeros.
pub fn radial_u(system: &SystemSpec, state: &QuantumState, s: f64) -> Result<(f64, f64)> {
    if !s.is_finite() || s <= 0.0 {
        return Err(Error::Domain(format!(
            "radial_u requires s > 0, got {s}"
        )));
    }
    let params = kg_params(system, state)?;
    let q = state.n - state.l - 1;
    let a = 2.0 * params.l_eff + 1.0;
    let scale = params.norm_sq.sqrt() * special::laguerre_norm_factor(q, a)?;
    Ok(reduced_u(s, params.l_eff, q, a, scale))
}

fn reduced_u(s: f64, l_eff: f64, q: u32, a: f64, scale: f64) -> (f64, f64) {
    let (lag, dlag) = special::laguerre_conventional(q, a, s);
    let envelope = scale * s.powf(l_eff + 1.0) * (-0.5 * s).exp();
    let u = envelope * lag;
    let du = envelope * (((l_eff + 1.0) / s - 0.5) * lag + dlag);
    (u, du)
}

/// Radial factor D(r) of a normalized charge density, with its analytic
/// derivative and the endpoint metadata the quadrature driver needs:
/// int_0^inf D(r) r^2 dr = 1, D ~ r^zero_exponent as r -> 0+, and the tail
/// decays exponentially on decay_scale.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialDensity {
    pub theory: Theory,
    pub zero_exponent: f64,
    pub decay_scale: f64,
    form: Form,
}

#[derive(Debug, Clone, PartialEq)]
enum Form {
    KleinGordon {
        z: f64,
        rest_energy: f64,
        energy: f64,
        beta: f64,
        l_eff: f64,
        degree: u32,
        parameter: f64,
        scale: f64,
    },
    Hydrogenic {
        kappa: f64,
        l: u32,
        degree: u32,
        parameter: f64,
        scale: f64,
    },
}

impl RadialDensity {
    pub(crate) fn new_klein_gordon(system: &SystemSpec, state: &QuantumState) -> Result<Self> {
        let params = kg_params(system, state)?;
        let q = state.n - state.l - 1;
        let a = 2.0 * params.l_eff + 1.0;
        let scale = params.norm_sq.sqrt() * special::laguerre_norm_factor(q, a)?;
        Ok(RadialDensity {
            theory: Theory::KleinGordon,
            zero_exponent: 2.0 * params.l_eff - 1.0,
            decay_scale: 1.0 / params.beta,
            form: Form::KleinGordon {
                z: system.z,
                rest_energy: system.rest_energy(),
                energy: params.energy,
                beta: params.beta,
                l_eff: params.l_eff,
                degree: q,
                parameter: a,
                scale,
            },
        })
    }

    pub(crate) fn new_hydrogenic(system: &SystemSpec, state: &QuantumState) -> Result<Self> {
        let kappa = system.mass * system.z / state.n as f64;
        let q = state.n - state.l - 1;
        let a = (2 * state.l + 1) as f64;
        // R = N (2 kr)^l e^{-kr} Lt_q^{(2l+1)}(2 kr); N^2 = 4 k^3 / n makes
        // int R^2 r^2 dr = 1.
        let scale = (4.0 * kappa.powi(3) / state.n as f64).sqrt()
            * special::laguerre_norm_factor(q, a)?;
        Ok(RadialDensity {
            theory: Theory::Schrodinger,
            zero_exponent: 2.0 * state.l as f64,
            decay_scale: state.n as f64 / (system.mass * system.z),
            form: Form::Hydrogenic {
                kappa,
                l: state.l,
                degree: q,
                parameter: a,
                scale,
            },
        })
    }

    /// D(r); multiplied by an angular density it gives the 3-D charge
    /// density, and int D r^2 dr = 1.
    pub fn value(&self, r: f64) -> f64 {
        match &self.form {
            Form::KleinGordon {
                z,
                rest_energy,
                energy,
                beta,
                l_eff,
                degree,
                parameter,
                scale,
            } => {
                let (u, _) = reduced_u(beta * r, *l_eff, *degree, *parameter, *scale);
                (energy + z / r) / rest_energy * u * u / (r * r)
            }
            Form::Hydrogenic { .. } => {
                let (radial, _) = self.hydrogenic_r(r);
                radial * radial
            }
        }
    }

    /// dD/dr, assembled from the analytic radial-function derivatives.
    pub fn derivative(&self, r: f64) -> f64 {
        match &self.form {
            Form::KleinGordon {
                z,
                rest_energy,
                energy,
                beta,
                l_eff,
                degree,
                parameter,
                scale,
            } => {
                let (u, du) = reduced_u(beta * r, *l_eff, *degree, *parameter, *scale);
                let weight = (energy + z / r) / rest_energy;
                let dweight = -z / (rest_energy * r * r);
                dweight * u * u / (r * r)
                    + weight * (2.0 * u * du * beta / (r * r) - 2.0 * u * u / (r * r * r))
            }
            Form::Hydrogenic { .. } => {
                let (radial, dradial) = self.hydrogenic_r(r);
                2.0 * radial * dradial
            }
        }
    }

    /// (D')^2 / D * r^2, the radial Fisher integrand, in a form that stays
    /// finite across the interior zeros of the radial function where D and
    /// D' vanish together.
    pub fn fisher_integrand(&self, r: f64) -> f64 {
        match &self.form {
            Form::KleinGordon {
                z,
                rest_energy,
                energy,
                beta,
                l_eff,
                degree,
                parameter,
                scale,
            } => {
                // D = u^2 g with g = (energy + Z/r)/(rest r^2):
                // (D')^2/D = (2 beta u' g + u g')^2 / g.
                let (u, du) = reduced_u(beta * r, *l_eff, *degree, *parameter, *scale);
                let g = (energy + z / r) / (rest_energy * r * r);
                let dg = -z / (rest_energy * r * r * r * r)
                    - 2.0 * (energy + z / r) / (rest_energy * r * r * r);
                let num = 2.0 * beta * du * g + u * dg;
                r * r * num * num / g
            }
            Form::Hydrogenic { .. } => {
                let (_, dradial) = self.hydrogenic_r(r);
                4.0 * dradial * dradial * r * r
            }
        }
    }

    /// (R(r), dR/dr) for the hydrogenic form.
    fn hydrogenic_r(&self, r: f64) -> (f64, f64) {
        match &self.form {
            Form::Hydrogenic {
                kappa,
                l,
                degree,
                parameter,
                scale,
            } => {
                let x = 2.0 * kappa * r;
                let (lag, dlag) = special::laguerre_conventional(*degree, *parameter, x);
                let envelope = scale * x.powi(*l as i32) * (-0.5 * x).exp();
                let radial = envelope * lag;
                let pow_term = if *l == 0 { 0.0 } else { *l as f64 / x };
                let dradial = 2.0 * kappa * envelope * ((pow_term - 0.5) * lag + dlag);
                (radial, dradial)
            }
            Form::KleinGordon { .. } => unreachable!("hydrogenic accessor on Klein-Gordon form"),
        }
    }
}

/// Lorentz-invariant radial charge density of a Klein-Gordon bound state:
/// D(r) = [(energy + Z/r)/(m0 c^2)] u^2(beta r)/r^2.
pub fn kg_density(system: &SystemSpec, state: &QuantumState) -> Result<RadialDensity> {
    RadialDensity::new_klein_gordon(system, state)
}

/// Full 3-D charge density rho(r, theta) = D(r) A(theta).
pub fn density_3d(density: &RadialDensity, angular: &AngularDensity, r: f64, theta: f64) -> f64 {
    density.value(r) * angular.value(theta)
}
