use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid system specification: component {component}: {reason}")]
    InvalidSpec { component: String, reason: String },

    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },

    #[error("root {0} is not in the catalog of this root system")]
    StaleRoot(String),

    #[error("element does not belong to the Weyl group of {0}")]
    ComponentMismatch(String),

    #[error("group of order {order} exceeds the enumeration cap {cap}")]
    TooLarge { order: u128, cap: u128 },

    #[error("root {0} is not simple")]
    NotSimple(String),

    #[error("{what} out of range: {detail}")]
    Range { what: &'static str, detail: String },

    #[error("no formula branch applies to {0}")]
    NoBranch(String),

    #[error("formula branches {first} and {second} disagree at {at}")]
    ConflictingBranches {
        first: &'static str,
        second: &'static str,
        at: String,
    },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("property violated: {0}")]
    PropertyViolation(String),

    #[error("outcome space too large: {0} indicator variables (at most 20)")]
    OutcomeSpaceTooLarge(usize),

    #[error("empty sample")]
    EmptySample,

    #[error("variance must be positive, got {0}")]
    NonPositiveVariance(String),
}
