use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generators have gcd {gcd}; the complement would be infinite")]
    NonCoprimeGenerators { gcd: u64 },
    #[error("generator must be positive")]
    ZeroGenerator,
    #[error("invalid pattern: {0}")]
    InvalidPattern(String),
    #[error("malformed incidence structure: {0}")]
    MalformedStructure(String),
    #[error("not an ({r},{k})-configuration: {reason}")]
    NotAConfiguration { r: usize, k: usize, reason: String },
    #[error("non-integral parameter: {0}")]
    NonIntegralParameter(String),
    #[error("{0} is not a prime power")]
    NotAPrimePower(u64),
    #[error("q = {q} is smaller than max(r, k) = {needed}")]
    ParameterTooLarge { q: u64, needed: u64 },
    #[error("modulus {v} is smaller than 2*length+1 = {needed}")]
    ModulusTooSmall { v: usize, needed: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("gluing repair failed: {0}")]
    RepairFailed(String),
    #[error("no Golomb ruler of order {order} with length <= {max_length}")]
    BudgetExceeded { order: usize, max_length: u32 },
    #[error("no known Golomb ruler length for order {0}")]
    UnknownOrder(usize),
    #[error("not a Golomb ruler: {0:?}")]
    NotGolomb(Vec<u32>),
}

impl Error {
    /// Stable machine-readable code, used on the CLI error line.
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptyGenerators => "empty_generators",
            Error::NonCoprimeGenerators { .. } => "non_coprime_generators",
            Error::ZeroGenerator => "zero_generator",
            Error::InvalidPattern(_) => "invalid_pattern",
            Error::MalformedStructure(_) => "malformed_structure",
            Error::NotAConfiguration { .. } => "not_a_configuration",
            Error::NonIntegralParameter(_) => "non_integral_parameter",
            Error::NotAPrimePower(_) => "not_a_prime_power",
            Error::ParameterTooLarge { .. } => "parameter_too_large",
            Error::ModulusTooSmall { .. } => "modulus_too_small",
            Error::InvalidParameter(_) => "invalid_parameter",
            Error::RepairFailed(_) => "repair_failed",
            Error::BudgetExceeded { .. } => "budget_exceeded",
            Error::UnknownOrder(_) => "unknown_order",
            Error::NotGolomb(_) => "not_golomb",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
