use thiserror::Error;

/// Every failure mode the library reports. Messages are written for CLI
/// display; variants carry enough structure for programmatic dispatch.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain: {0}")]
    Domain(String),
    #[error("pole: {0}")]
    Pole(String),
    #[error("singular: {0}")]
    Singular(String),
    /// Continuation rejected because s is too close to the singular point 1/k
    /// (or to a point where ζ(ks) vanishes); `k` is the offending index.
    #[error("near singular point 1/{k}: {msg}")]
    NearSingular { k: u64, msg: String },
    #[error("branch cut: {0}")]
    BranchCut(String),
    #[error("capacity: {0}")]
    Capacity(String),
    #[error("missed zero: {0}")]
    MissedZero(String),
    #[error("format error at line {line}: {msg}")]
    Format { line: usize, msg: String },
    #[error("order error at line {line}: {msg}")]
    Order { line: usize, msg: String },
    #[error("quadrature did not converge: {0}")]
    Quadrature(String),
    #[error("tail hypothesis violated: {0}")]
    TailUnbounded(String),
    #[error("zero eigenvalue: {0}")]
    ZeroEigenvalue(String),
    #[error("not zeta-regularizable: {0}")]
    NotRegularizable(String),
    #[error("io: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
