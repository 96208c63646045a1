use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A malformed `.hs`/`.hx` document. Lines and columns are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("inconsistent dimensions: {0}")]
    InconsistentDimensions(String),
    #[error("duplicate index {value} at {line}:{column}")]
    DuplicateIndex {
        line: usize,
        column: usize,
        value: u32,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("non-canonical syndrome former: {0}")]
    NonCanonical(String),
    #[error("polynomial matrix has no nonzero entry")]
    EmptyMatrix,
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("cycle length {requested} is above the configured cap {cap}")]
    CapExceeded { requested: u32, cap: u32 },
    #[error("window of {nodes} nodes exceeds the node budget {budget}")]
    ResourceLimit { nodes: usize, budget: usize },
    #[error("search budget of {budget} candidates exhausted ({progress})")]
    BudgetExceeded { budget: u64, progress: Progress },
}

/// Partial progress carried by [`Error::BudgetExceeded`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Progress {
    pub candidates: u64,
    /// Every width strictly below this one was searched completely.
    pub completed_below_lh: u32,
}

impl fmt::Display for Progress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} candidates examined, no solution below L_h={}",
            self.candidates, self.completed_below_lh
        )
    }
}
