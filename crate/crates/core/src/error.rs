use thiserror::Error;

use crate::distributions::MemberId;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum BurrError {
    #[error("parameter `{name}` must be positive and finite, got {value}")]
    InvalidParameter { name: &'static str, value: f64 },

    #[error("member {member} requires parameter(s): {}", missing.join(", "))]
    MissingParameters {
        member: MemberId,
        missing: Vec<&'static str>,
    },

    #[error("unknown parameter `{0}`")]
    UnknownParameter(String),

    #[error("{what} out of domain: {value}")]
    Domain { what: &'static str, value: f64 },

    #[error("root finding failed for member {member}: bracket [{lo}, {hi}] after {iterations} iterations")]
    NoConvergence {
        member: MemberId,
        lo: f64,
        hi: f64,
        iterations: usize,
    },

    #[error("{operation} is not supported for member {member}")]
    Unsupported {
        member: MemberId,
        operation: &'static str,
    },

    #[error("tail of member {member} is not integrable (gamma = {gamma})")]
    NonIntegrable { member: MemberId, gamma: f64 },

    #[error("statistic undefined: {0}")]
    Statistic(String),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, BurrError>;
