use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite value encountered: {0}")]
    NonFinite(String),

    #[error("division by a jet with zero constant term (too close to the anchor?)")]
    DivisionByZero,

    #[error("jet order {have} is insufficient, need at least {need}")]
    InsufficientOrder { need: usize, have: usize },

    #[error("jet order {0} exceeds the supported maximum")]
    UnsupportedOrder(usize),

    #[error("jets do not share center and order")]
    JetMismatch,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("integer overflow computing {0}")]
    Overflow(String),

    #[error("quadrature budget exhausted after {evals} evaluations (estimate {estimate:e}, value {value:e})")]
    BudgetExhausted { evals: usize, value: f64, estimate: f64 },

    #[error("integrand returned a non-finite value at t = {0:e}")]
    NonFiniteSample(f64),

    #[error("singular point: {0}")]
    SingularPoint(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("accuracy guard exceeded: {0}")]
    AccuracyGuard(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("unknown identity id `{0}`")]
    UnknownIdentity(String),

    #[error("invalid parameter: {0}")]
    InvalidParam(String),
}
