use std::fmt;

/// Errors raised by the special functions, the quadrature engine and the registry.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("pole at {0}")]
    Pole(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("branch cut: {0}")]
    BranchCut(String),
    #[error("singularity: {0}")]
    Singularity(String),
    #[error("outside the supported region: {0}")]
    OutOfRegion(String),
    #[error("{what} did not converge: {detail}")]
    NonConvergence { what: String, detail: String },
    #[error("integrand returned a non-finite value at x = {x:e}")]
    IntegrandNaN { x: f64 },
    #[error("inner integral failed at outer abscissa {outer:e}: {source}")]
    Inner {
        outer: f64,
        #[source]
        source: Box<Error>,
    },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown identity id {0:?}")]
    UnknownId(String),
    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn domain(msg: impl fmt::Display) -> Self {
        Error::Domain(msg.to_string())
    }

    pub(crate) fn region(msg: impl fmt::Display) -> Self {
        Error::OutOfRegion(msg.to_string())
    }

    pub(crate) fn no_conv(what: &str, detail: impl fmt::Display) -> Self {
        Error::NonConvergence {
            what: what.to_string(),
            detail: detail.to_string(),
        }
    }

    /// True for errors that mean "these parameters are not admissible"
    /// rather than "the numerics broke down".
    pub fn is_domain_like(&self) -> bool {
        matches!(
            self,
            Error::Pole(_)
                | Error::Domain(_)
                | Error::BranchCut(_)
                | Error::Singularity(_)
                | Error::OutOfRegion(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
