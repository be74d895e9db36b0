use thiserror::Error;

use crate::patterns::PatternWitness;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid edge ({0}, {1}) for a graph on {2} vertices")]
    InvalidEdge(usize, usize, usize),
    #[error("vertex {0} is outside 0..{1}")]
    InvalidVertex(usize, usize),
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("search budget of {0} nodes exhausted")]
    TimeBudgetExceeded(u64),
    #[error("desk cap exceeded: {0}")]
    DeskCapExceeded(String),
    #[error("input graph is disconnected")]
    DisconnectedInput,
    #[error("size vector has even length {0}")]
    EvenLength(usize),
    #[error("color budget {0} is below 3")]
    BudgetTooSmall(usize),
    #[error("malformed size vector: {0}")]
    InvalidSizes(String),
    #[error("{0} is too small for this family")]
    TooSmall(String),
    #[error("size vector {0:?} is not an obstruction for k = {1}")]
    NotAnObstruction(Vec<usize>, usize),
    #[error("input contains a forbidden {}", .0.kind)]
    FreenessViolation(Box<PatternWitness>),
    #[error("vertex {0} has an unclassifiable neighborhood on the reference cycle")]
    UnclassifiedNeighbor(usize),
    #[error("structural separation failed: {0}")]
    SeparationViolation(String),
    #[error("independence number is {0}, expected at most 2")]
    AlphaNotTwo(usize),
    #[error("unsupported decider: k = {0}, family {1}")]
    UnsupportedDecider(usize, String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for the two "gave up" errors that callers count separately from
    /// genuine failures.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::TimeBudgetExceeded(_) | Error::DeskCapExceeded(_)
        )
    }
}

/// Node counter shared by one search call.
#[derive(Debug, Clone)]
pub(crate) struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub(crate) fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::TimeBudgetExceeded(self.limit))
        } else {
            Ok(())
        }
    }
}
