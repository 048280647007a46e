use crate::coalition::Coalition;
use thiserror::Error;

/// Errors raised while constructing or combining games, cost profiles and
/// derived objects. Every validation failure names the invariant it violates.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("player count must be at least 2, got {0}")]
    PlayerCountTooSmall(usize),
    #[error("player count must be at most {max}, got {got}")]
    PlayerCountTooLarge { got: usize, max: usize },
    #[error("worth of the empty coalition must be 0")]
    NonzeroEmptyWorth,
    #[error("coalition {0} has negative worth")]
    NegativeWorth(Coalition),
    #[error("the grand coalition must have positive worth")]
    ZeroGrandWorth,
    #[error("worth map is missing coalition {0}")]
    MissingCoalition(Coalition),
    #[error("unexpected coalition {0} in map")]
    UnexpectedCoalition(Coalition),
    #[error("coalition {0} has negative cost")]
    NegativeCost(Coalition),
    #[error("cost map domain must be exactly the non-trivial coalitions (2^n - n - 2 of them)")]
    CostDomainMismatch,
    #[error("coalition {0} has zero worth but positive cost")]
    Assumption1Violation(Coalition),
    #[error("supplied examination order is not nondecreasing in cost at position {0}")]
    OrderNotSorted(usize),
    #[error("supplied examination order is not a permutation of the non-trivial coalitions")]
    OrderNotPermutation,
    #[error("known family must contain the empty coalition, every singleton and the grand coalition")]
    BadKnownFamily,
    #[error("stage {got} out of range, must be at most {max}")]
    StageOutOfRange { got: usize, max: usize },
    #[error("operands have different player counts ({0} vs {1})")]
    DimensionMismatch(usize, usize),
    #[error("grand worths do not both equal the required level")]
    AlphaMismatch,
    #[error("coalition must be non-empty")]
    EmptyCoalition,
    #[error("coalition {0} is trivial (singleton or grand), expected a non-trivial one")]
    TrivialCoalition(Coalition),
    #[error("coalition {0} is not in the known family")]
    CoalitionNotKnown(Coalition),
    #[error("player index {0} out of range for {1} players")]
    PlayerOutOfRange(usize, usize),
    #[error("permutation oracle supports at most {max} players, got {got}")]
    TooManyPlayers { got: usize, max: usize },
    #[error("examination orders of the operands do not match")]
    OrderMismatch,
}

pub type Result<T> = std::result::Result<T, GameError>;
