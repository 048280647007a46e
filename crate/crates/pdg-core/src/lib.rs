//! Cooperative game analysis when coalition worths are revealed one costly
//! examination at a time.
//!
//! The library models transferable-utility games whose characteristic
//! function is only partially known: the singleton worths and the grand
//! coalition's worth are given up front, and the remaining coalitions are
//! examined one by one in nondecreasing order of examination cost. After
//! each examination the accumulated costs are charged equally to the
//! players, and payoffs are recomputed from the worths known so far.
//!
//! Everything is computed in exact rational arithmetic ([`Rational`]).
//!
//! The main pieces:
//!
//! - the game model: [`FullGame`], [`CostProfile`], [`KnownFamily`],
//!   [`PartialGame`], and the game algebra (stage-aligned sums, the
//!   grand-capped sum, joins and meets, unanimity games, the dividend
//!   transform and its inverse);
//! - payoffs: the per-stage value table ([`staged_value`]), the classic
//!   and known-family Shapley values, and the CIS value;
//! - structure predicates: [`is_partnership`], [`is_zero_coalition`],
//!   [`is_p_type`], [`is_carrier`];
//! - stopping rules for the examination process and the payoff trace they
//!   induce ([`run_examination`]);
//! - verification: brute-force oracles, seeded generators, and randomized
//!   axiom suites (see [`verify`]).

pub mod algebra;
pub mod coalition;
pub mod cost;
pub mod dividends;
pub mod error;
pub mod exit;
pub mod fileio;
pub mod game;
pub mod partial;
pub mod structures;
pub mod values;
pub mod verify;

pub use algebra::{
    game_join, game_meet, game_sum, game_sum_capped, moebius_decompose, moebius_recompose,
    summed_cost_profile, unanimity_game, unity_game,
};
pub use coalition::{Coalition, KeyError, MAX_PLAYERS};
pub use cost::{make_cost_profile, make_cost_profile_with_order, CostProfile};
pub use dividends::{harsanyi_dividends, DividendMap};
pub use error::{GameError, Result};
pub use exit::{
    effective_stop, gamma, gamma_a, gamma_b, run_examination, ExitRule, ExitTrace,
    IndicatorVector,
};
pub use fileio::{
    parse_game_file, rational_from_text, rational_to_text, rational_to_value,
    serialize_game_file, FileError,
};
pub use game::{frac, make_full_game, rat, FullGame, Rational};
pub use partial::{restrict, stage_family, KnownFamily, PartialGame};
pub use structures::{is_carrier, is_p_type, is_partnership, is_zero_coalition};
pub use values::{cis_value, shapley_classic, shapley_pdg, staged_value, StageMatrix};
pub use verify::{check_indicator_axioms, check_value_axioms, AxiomReport, GeneratorConfig};
