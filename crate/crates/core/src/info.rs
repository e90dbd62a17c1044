//! Shannon entropy with radial-angular separation, Shannon entropic power,
//! and Fisher information, for both theories.
//!
//! Entropies are in nats. The total entropy splits as S = S[radial] +
//! S[angular]; the angular part is common to the Klein-Gordon and
//! Schrödinger densities of the same (l, m), so it cancels in every
//! entropic-power ratio. The Fisher integral of a phi-independent density
//! decomposes into a radial gradient term plus <r^-2> times the angular
//! gradient integral; for Klein-Gordon S states the radial term diverges
//! and the measure is reported as undefined rather than infinite.

use crate::error::{Error, Result};
use crate::kg::{kg_density, RadialDensity, Theory};
use crate::quadrature::{integrate_finite, integrate_semi_infinite, ConvergenceReport};
use crate::schrodinger::sch_density;
use crate::special::angular_density;
use crate::states::{kg_params, QuantumState, SystemSpec};
use std::f64::consts::PI;

/// Default relative tolerance for Shannon integrals.
pub const SHANNON_TOL: f64 = 1e-8;
/// Default relative tolerance for the steeper Fisher integrals.
pub const FISHER_TOL: f64 = 1e-7;

/// Shannon measures of one state in one theory.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasureReport {
    pub theory: Theory,
    /// -int D ln(D) r^2 dr, in nats.
    pub shannon_radial: f64,
    /// -int A ln(A) dOmega, in nats.
    pub shannon_angular: f64,
    pub shannon_total: f64,
    /// (1/(2 pi e)) exp(2 S / 3); a volume-like global spreading measure.
    pub entropic_power: f64,
    /// Fisher information, when defined; populated by callers that need it.
    pub fisher: Option<f64>,
    pub radial_convergence: ConvergenceReport,
    pub angular_convergence: ConvergenceReport,
}

fn neg_x_ln_x(x: f64) -> f64 {
    if x > 0.0 {
        -x * x.ln()
    } else {
        0.0
    }
}

fn require_converged(report: ConvergenceReport) -> Result<ConvergenceReport> {
    if report.converged {
        Ok(report)
    } else {
        Err(Error::IntegrationFailure { report })
    }
}

/// Radial Shannon entropy -int_0^inf D ln(D) r^2 dr of a normalized radial
/// density. The integrand behaves like r^(z+2) ln r at the origin, with z
/// the density's zero exponent; the quadrature driver absorbs that through
/// its power substitution.
pub fn shannon_radial(density: &RadialDensity, tol: f64) -> Result<ConvergenceReport> {
    let report = integrate_semi_infinite(
        |r| neg_x_ln_x(density.value(r)) * r * r,
        density.zero_exponent + 2.0,
        density.decay_scale,
        tol,
    )?;
    require_converged(report)
}

/// Angular Shannon entropy -int |Y_lm|^2 ln |Y_lm|^2 dOmega.
pub fn shannon_angular(l: u32, m: i32, tol: f64) -> Result<ConvergenceReport> {
    let a = angular_density(l, m)?;
    let report = integrate_finite(
        |theta| neg_x_ln_x(a.value(theta)) * theta.sin(),
        0.0,
        PI,
        tol,
    )?;
    let report = require_converged(report)?;
    Ok(ConvergenceReport {
        value: 2.0 * PI * report.value,
        ..report
    })
}

fn density_for(system: &SystemSpec, state: &QuantumState, theory: Theory) -> Result<RadialDensity> {
    match theory {
        Theory::KleinGordon => kg_density(system, state),
        Theory::Schrodinger => sch_density(system, state),
    }
}

/// Shannon entropies and entropic power of one state in one theory.
pub fn shannon_report(
    system: &SystemSpec,
    state: &QuantumState,
    theory: Theory,
    tol: f64,
) -> Result<MeasureReport> {
    let density = density_for(system, state, theory)?;
    let radial = shannon_radial(&density, tol)?;
    let angular = shannon_angular(state.l, state.m, tol)?;
    let total = radial.value + angular.value;
    Ok(MeasureReport {
        theory,
        shannon_radial: radial.value,
        shannon_angular: angular.value,
        shannon_total: total,
        entropic_power: (2.0 / 3.0 * total).exp() / (2.0 * PI * std::f64::consts::E),
        fisher: None,
        radial_convergence: radial,
        angular_convergence: angular,
    })
}

/// Fisher information int |grad rho|^2 / rho dV, through the decomposition
/// I = int (D')^2/D r^2 dr + <r^-2> * int (dA/dtheta)^2/A dOmega
/// valid for phi-independent densities.
///
/// For Klein-Gordon states the radial integral converges only when the
/// effective orbital number is positive; every S state (and nothing else at
/// the charges treated here) fails that and yields `FisherUndefined`.
pub fn fisher(system: &SystemSpec, state: &QuantumState, theory: Theory, tol: f64) -> Result<f64> {
    if theory == Theory::KleinGordon {
        let p = kg_params(system, state)?;
        if p.l_eff <= 0.0 {
            return Err(Error::FisherUndefined(format!(
                "the Klein-Gordon Fisher integral diverges for l_eff = {} <= 0 (n={}, l={}); \
                 S states have no finite Fisher information",
                p.l_eff, state.n, state.l
            )));
        }
    }
    let density = density_for(system, state, theory)?;
    let radial = require_converged(integrate_semi_infinite(
        |r| density.fisher_integrand(r),
        density.zero_exponent,
        density.decay_scale,
        tol,
    )?)?;
    let r_minus_2 = require_converged(integrate_semi_infinite(
        |r| density.value(r),
        density.zero_exponent,
        density.decay_scale,
        tol,
    )?)?;
    let a = angular_density(state.l, state.m)?;
    let angular = require_converged(integrate_finite(
        |theta| {
            let value = a.value(theta);
            if value > 0.0 {
                let d = a.theta_derivative(theta);
                d * d / value * theta.sin()
            } else {
                0.0
            }
        },
        0.0,
        PI,
        tol,
    )?)?;
    Ok(radial.value + r_minus_2.value * 2.0 * PI * angular.value)
}
