//! Full games: nonnegative worth functions on the whole coalition lattice.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::coalition::{Coalition, MAX_PLAYERS};
use crate::error::{GameError, Result};

/// Exact arithmetic used throughout: arbitrary-precision rationals.
pub type Rational = BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Shorthand for the rational `p/q`.
pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// A transferable-utility game: a worth for every coalition of `n` players,
/// with `worth(∅) = 0`, `worth(S) ≥ 0` everywhere and `worth(N) > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullGame {
    n: usize,
    /// Worth per coalition, indexed by bitmask; length `2^n`.
    worth: Vec<Rational>,
}

pub(crate) fn check_player_count(n: usize) -> Result<()> {
    if n < 2 {
        return Err(GameError::PlayerCountTooSmall(n));
    }
    if n > MAX_PLAYERS {
        return Err(GameError::PlayerCountTooLarge { got: n, max: MAX_PLAYERS });
    }
    Ok(())
}

impl FullGame {
    /// Validates and wraps a worth vector indexed by coalition bitmask.
    pub fn new(n: usize, worth: Vec<Rational>) -> Result<FullGame> {
        check_player_count(n)?;
        if worth.len() != 1 << n {
            return Err(GameError::MissingCoalition(Coalition::grand(n)));
        }
        if !worth[0].is_zero() {
            return Err(GameError::NonzeroEmptyWorth);
        }
        for (mask, w) in worth.iter().enumerate() {
            if w < &Rational::zero() {
                return Err(GameError::NegativeWorth(Coalition::from_mask(mask as u32)));
            }
        }
        if worth[(1usize << n) - 1].is_zero() {
            return Err(GameError::ZeroGrandWorth);
        }
        Ok(FullGame { n, worth })
    }

    /// Wraps a worth vector without the nonnegativity / positive-grand-worth
    /// checks. Used for objects that live outside the validated class, such
    /// as the zero game produced by a unanimity game with coefficient 0.
    pub(crate) fn new_unchecked(n: usize, worth: Vec<Rational>) -> FullGame {
        debug_assert_eq!(worth.len(), 1 << n);
        FullGame { n, worth }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn grand(&self) -> Coalition {
        Coalition::grand(self.n)
    }

    pub fn worth(&self, s: Coalition) -> &Rational {
        &self.worth[s.mask() as usize]
    }

    /// The full worth vector, indexed by coalition bitmask.
    pub fn worths(&self) -> &[Rational] {
        &self.worth
    }
}

/// Builds a validated game from a worth map. The map must cover every
/// non-empty coalition; the empty coalition may be listed (with worth 0) or
/// omitted.
pub fn make_full_game(n: usize, worths: &BTreeMap<Coalition, Rational>) -> Result<FullGame> {
    check_player_count(n)?;
    let size = 1usize << n;
    for s in worths.keys() {
        if s.mask() as usize >= size {
            return Err(GameError::UnexpectedCoalition(*s));
        }
    }
    let mut vec = vec![Rational::zero(); size];
    for s in Coalition::all(n) {
        match worths.get(&s) {
            Some(w) => vec[s.mask() as usize] = w.clone(),
            None if s.is_empty() => {}
            None => return Err(GameError::MissingCoalition(s)),
        }
    }
    FullGame::new(n, vec)
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;
    use crate::cost::{make_cost_profile, CostProfile};

    /// The three-player game used as the running worked example: singleton
    /// worths 5, 3, 0; pair worths 10, 8, 5; grand worth 20.
    pub fn example_game() -> FullGame {
        let mut worths = BTreeMap::new();
        worths.insert(Coalition::from_players([0]), rat(5));
        worths.insert(Coalition::from_players([1]), rat(3));
        worths.insert(Coalition::from_players([2]), rat(0));
        worths.insert(Coalition::from_players([0, 1]), rat(10));
        worths.insert(Coalition::from_players([0, 2]), rat(8));
        worths.insert(Coalition::from_players([1, 2]), rat(5));
        worths.insert(Coalition::grand(3), rat(20));
        make_full_game(3, &worths).unwrap()
    }

    /// Examination costs pairing with [`example_game`]: 3 on {1,2}, 2 on the
    /// other pairs, giving the order ({1,3}, {2,3}, {1,2}).
    pub fn example_costs() -> CostProfile {
        let game = example_game();
        let mut costs = BTreeMap::new();
        costs.insert(Coalition::from_players([0, 1]), rat(3));
        costs.insert(Coalition::from_players([0, 2]), rat(2));
        costs.insert(Coalition::from_players([1, 2]), rat(2));
        make_cost_profile(&game, &costs).unwrap()
    }
}
