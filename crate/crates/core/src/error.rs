use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

/// Errors raised by the spectral pipeline.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid dimensions m={m}, b={b}: {reason}")]
    InvalidDimensions { m: i64, b: i64, reason: &'static str },
    #[error("integrability violated: min(E_lf) + min(E'_rf) = {sum} is not > -1")]
    IntegrabilityViolation { sum: String },
    #[error("invalid argument: {0}")]
    Domain(&'static str),
    #[error("cone degree {p} outside 0..={max}")]
    InvalidDegree { p: usize, max: usize },
    #[error("fibre eigenvalue cutoff {have} too small for nu cutoff (need >= {need})")]
    InsufficientFiberCutoff { have: f64, need: f64 },
    #[error("nu spectrum complete only to {have}, radial cutoff needs {need}")]
    IncompleteSpectrum { have: f64, need: f64 },
    #[error("block of A in degree {p} has negative eigenvalue {nu2}")]
    NegativeBlockEigenvalue { p: usize, nu2: f64 },
    #[error("too few modes below cutoff to attempt matching ({count} < 10)")]
    TooFewModes { count: usize },
    #[error("unscaled I_nu requested at z={z}; use the scaled form for z > 50")]
    ScalingRequired { z: f64 },
    #[error("tail bound {tail:e} not below 1e-10 x trace {value:e} at t={t:e}")]
    TailNotCertified { t: f64, tail: f64, value: f64 },
    #[error("time grids do not match")]
    MismatchedGrids,
    #[error("{samples} samples for {terms} template terms (need at least twice as many)")]
    InsufficientSamples { samples: usize, terms: usize },
    #[error("fit matrix condition estimate {condition:e} exceeds 1e12")]
    IllConditioned { condition: f64 },
    #[error("fit residual {residual:e} exceeds {limit:e}")]
    FitResidualTooLarge { residual: f64, limit: f64 },
    #[error("large-time decay rate unknown (smallest positive eigenvalue required)")]
    DecayRateUnknown,
    #[error("missing form degree {k}")]
    MissingDegree { k: usize },
    #[error("unknown model: {0}")]
    UnknownModel(&'static str),
    #[error("no convergence: {0}")]
    NoConvergence(&'static str),
}

impl Error {
    /// True for failures of numerical certification (tail bounds, conditioning,
    /// fit quality, convergence), as opposed to invalid input.
    pub fn is_certification_failure(&self) -> bool {
        matches!(
            self,
            Error::TailNotCertified { .. }
                | Error::IllConditioned { .. }
                | Error::FitResidualTooLarge { .. }
                | Error::NoConvergence(_)
                | Error::NegativeBlockEigenvalue { .. }
        )
    }
}
