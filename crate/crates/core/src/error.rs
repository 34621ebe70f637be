use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error in {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("{what} is {value}, above the cap of {cap}")]
    Limit {
        what: &'static str,
        value: usize,
        cap: usize,
    },

    #[error("element index {index} out of range for a group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("set item {item:?}: element index {index} out of range for a group of order {order}")]
    ItemOutOfRange { item: String, index: usize, order: usize },

    #[error("set lives in a group of order {found}, expected order {expected}")]
    DomainMismatch { expected: usize, found: usize },

    #[error("{0} must be non-empty")]
    EmptySet(&'static str),

    #[error("|B| = {b} but |A| = {a}; the sets must have equal size")]
    SizeMismatch { b: usize, a: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
