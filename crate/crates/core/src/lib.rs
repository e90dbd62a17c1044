//! Bound states of a spinless relativistic (Klein-Gordon) charged particle
//! in a Coulomb potential, the Lorentz-invariant charge density, and
//! quantitative spreading measures: radial moments, Heisenberg variance,
//! Shannon entropic power and Fisher information. Every quantity is computed
//! side by side with its non-relativistic Schrödinger counterpart so that the
//! relativistic charge compression can be expressed as ratios.
//!
//! Atomic units (ℏ = mₑ = e = 1) are used throughout, so the speed of light
//! is 1/α. Masses are given in electron masses; the default particle is the
//! π⁻ meson at 273.132054 a.u. in the infinite-nuclear-mass approximation.
//!
//! Every type is an immutable value after construction and every operation
//! is a pure function, so all of it is safe for unrestricted concurrent use.

pub mod error;
pub mod info;
pub mod kg;
pub mod moments;
pub mod quadrature;
pub mod schrodinger;
pub mod special;
pub mod states;

pub use error::{Error, Result};
pub use info::{
    fisher, shannon_angular, shannon_radial, shannon_report, MeasureReport, FISHER_TOL,
    SHANNON_TOL,
};
pub use kg::{density_3d, kg_density, radial_u, RadialDensity, Theory};
pub use moments::{
    circular_closed_forms, heisenberg, j_integral, radial_moment, sch_moments, MomentsResult,
};
pub use quadrature::{
    gauss_legendre, integrate_finite, integrate_semi_infinite, ConvergenceReport, QuadratureRule,
};
pub use schrodinger::{sch_density, sch_energy};
pub use special::{angular_density, laguerre_orthonormal, log_gamma, AngularDensity};
pub use states::{
    kg_params, make_state, make_system, make_system_with_alpha, KgParams, QuantumState,
    SystemSpec, FINE_STRUCTURE_CONSTANT, PION_MASS,
};
