//! Error types shared across the crate.

use crate::quadrature::ConvergenceReport;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid quantum numbers: {0}")]
    InvalidQuantumNumbers(String),

    /// gamma = Z*alpha reached the critical coupling for this l; the
    /// effective orbital number would be complex or degenerate.
    #[error("supercritical charge: gamma = Z*alpha = {gamma} must stay below l + 1/2 = {limit}")]
    SupercriticalCharge { gamma: f64, limit: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("integrand evaluated to a non-finite value at r = {abscissa:e}")]
    IntegrandFailure { abscissa: f64 },

    #[error(
        "integration did not converge: value {:e}, relative error estimate {:e} after {} levels",
        report.value, report.estimated_error, report.levels_used
    )]
    IntegrationFailure { report: ConvergenceReport },

    /// The Fisher integral diverges for this state; S states of the
    /// Klein-Gordon problem have no finite Fisher information.
    #[error("Fisher information undefined: {0}")]
    FisherUndefined(String),
}

pub type Result<T> = std::result::Result<T, Error>;
