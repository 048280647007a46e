//! Verification machinery: brute-force oracles that are independent of the
//! production code paths, seeded game generators, and randomized axiom
//! suites with per-axiom reporting.

pub mod axioms;
pub mod generate;
pub mod oracle;

pub use axioms::{
    check_indicator_axioms, check_value_axioms, AxiomOutcome, AxiomReport, Counterexample,
};
pub use generate::{
    aligned_pair, planted_unanimity_game, planted_zero_below_grand, random_game,
    random_game_alpha, GeneratorConfig,
};
pub use oracle::{
    dividend_oracle, recompose_oracle, shapley_permutation_oracle, ORACLE_MAX_PLAYERS,
};
