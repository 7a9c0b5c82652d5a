use alloc::string::String;

/// Errors raised by the algebra and relaxation layers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("variable mismatch: {0}")]
    VariableMismatch(String),
    /// A Sturm count was requested at an endpoint that is itself a root.
    #[error("interval endpoint {0} is a root")]
    EndpointRoot(String),
    #[error("sign could not be decided: {0}")]
    Undecidable(String),
    #[error("unsupported scope: {0}")]
    UnsupportedScope(String),
    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),
    /// A level polynomial vanishes identically over an open cell.
    #[error("polynomial {0} vanishes identically over a sample")]
    NonDelineable(String),
    #[error("root counts differ across probes of a sector: {0}")]
    DelineabilityMismatch(String),
    #[error("linear transformation is singular")]
    SingularTransform,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("relaxation order {k} is below the minimal order {k0}")]
    OrderTooLow { k: u32, k0: u32 },
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = core::result::Result<T, Error>;
