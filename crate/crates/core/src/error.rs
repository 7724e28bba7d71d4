use thiserror::Error;

use crate::bounds::Certificate;
use crate::rational::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("malformed rational {0:?}")]
    ParseRational(String),

    #[error("division by zero")]
    DivisionByZero,

    /// A space, event or partition violates one of its construction invariants.
    #[error("invalid space: {0}")]
    InvalidSpace(String),

    #[error("unknown atom label {0:?}")]
    UnknownAtom(String),

    #[error("event belongs to a different probability space")]
    ForeignEvent,

    #[error("conditioning event has probability zero")]
    ZeroConditioningEvent,

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partition has {0} block(s); at least 2 are required")]
    PartitionTooSmall(usize),

    #[error("events {0} and {1} have identical atom sets; the model needs distinct events")]
    IdenticalEvents(&'static str, &'static str),

    #[error("cell {cell} has conditional correlation {value}, expected {expected}")]
    ScreeningHypothesisViolated {
        cell: usize,
        value: Rational,
        expected: Rational,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("completed tail value {symbol} = {value} is outside (0,1)")]
    TailOutOfRange { symbol: String, value: Rational },

    #[error("infeasible profile: {0}")]
    InfeasibleProfile(Box<Certificate>),

    #[error("construction failed: {0}")]
    ConstructionFailed(String),

    #[error("cell {0} of the event pair has probability zero")]
    DegenerateCell(&'static str),

    #[error("split ratio r[{cell}][{column}] has negative numerator {numerator}")]
    NegativeRatio {
        cell: usize,
        column: usize,
        numerator: Rational,
    },

    #[error("search would examine {required} partitions, budget is {budget}")]
    SearchBudgetExceeded { required: String, budget: u64 },

    #[error("malformed space file: {0}")]
    Format(String),
}
