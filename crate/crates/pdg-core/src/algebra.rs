//! Game algebra: sums, capped sums, lattice operations, unanimity and unity
//! games, and the Möbius decomposition into the unanimity basis.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::coalition::Coalition;
use crate::cost::{make_cost_profile_with_order, CostProfile};
use crate::error::{GameError, Result};
use crate::game::{check_player_count, FullGame, Rational};

fn check_same_n(v: &FullGame, w: &FullGame) -> Result<usize> {
    if v.n() != w.n() {
        return Err(GameError::DimensionMismatch(v.n(), w.n()));
    }
    Ok(v.n())
}

/// Pointwise sum of two games together with the summed cost profile.
///
/// The k-th stage cost of the result is the sum of the operands' k-th stage
/// costs, and the result keeps the left operand's examination order. That
/// order stays nondecreasing (both summands are), but the combined profile
/// can break the zero-worth-zero-cost rule when the operands' orders
/// disagree; that surfaces as `Assumption1Violation`.
pub fn game_sum(
    v: &FullGame,
    cv: &CostProfile,
    w: &FullGame,
    cw: &CostProfile,
) -> Result<(FullGame, CostProfile)> {
    let n = check_same_n(v, w)?;
    let worth = (0..1usize << n)
        .map(|m| v.worths()[m].clone() + &w.worths()[m])
        .collect();
    let sum = FullGame::new(n, worth)?;
    let profile = summed_cost_profile(&sum, cv, cw)?;
    Ok((sum, profile))
}

/// Combines two cost profiles stage-by-stage along the left operand's order.
pub fn summed_cost_profile(
    sum: &FullGame,
    cv: &CostProfile,
    cw: &CostProfile,
) -> Result<CostProfile> {
    if cv.n() != cw.n() {
        return Err(GameError::DimensionMismatch(cv.n(), cw.n()));
    }
    if sum.n() != cv.n() {
        return Err(GameError::DimensionMismatch(sum.n(), cv.n()));
    }
    let left = cv.stage_costs();
    let right = cw.stage_costs();
    let costs: BTreeMap<Coalition, Rational> = cv
        .order()
        .iter()
        .zip(left.into_iter().zip(right))
        .map(|(s, (a, b))| (*s, a + b))
        .collect();
    make_cost_profile_with_order(sum, &costs, cv.order())
}

/// Sum inside the fixed-grand-worth class: pointwise below the grand
/// coalition, pinned to `alpha` at it. Both operands must have grand worth
/// `alpha`.
pub fn game_sum_capped(v: &FullGame, w: &FullGame, alpha: &Rational) -> Result<FullGame> {
    let n = check_same_n(v, w)?;
    let grand = (1usize << n) - 1;
    if v.worths()[grand] != *alpha || w.worths()[grand] != *alpha {
        return Err(GameError::AlphaMismatch);
    }
    let worth = (0..1usize << n)
        .map(|m| {
            if m == grand {
                alpha.clone()
            } else {
                v.worths()[m].clone() + &w.worths()[m]
            }
        })
        .collect();
    FullGame::new(n, worth)
}

/// Pointwise maximum.
pub fn game_join(v: &FullGame, w: &FullGame) -> Result<FullGame> {
    let n = check_same_n(v, w)?;
    let worth = (0..1usize << n)
        .map(|m| v.worths()[m].clone().max(w.worths()[m].clone()))
        .collect();
    FullGame::new(n, worth)
}

/// Pointwise minimum.
pub fn game_meet(v: &FullGame, w: &FullGame) -> Result<FullGame> {
    let n = check_same_n(v, w)?;
    let worth = (0..1usize << n)
        .map(|m| v.worths()[m].clone().min(w.worths()[m].clone()))
        .collect();
    FullGame::new(n, worth)
}

/// The scaled unanimity game `coeff · u_S`: worth `coeff` on supersets of
/// `S`, zero elsewhere.
///
/// With `coeff = 0` (or a negative coefficient, as produced by Möbius
/// decomposition) the result lies outside the validated game class; it is
/// still usable as an operand of the algebra.
pub fn unanimity_game(n: usize, s: Coalition, coeff: &Rational) -> Result<FullGame> {
    check_player_count(n)?;
    if s.is_empty() {
        return Err(GameError::EmptyCoalition);
    }
    if s.mask() >= 1 << n {
        return Err(GameError::UnexpectedCoalition(s));
    }
    let worth = (0..1u32 << n)
        .map(|m| {
            if Coalition::from_mask(m).is_superset_of(s) {
                coeff.clone()
            } else {
                Rational::zero()
            }
        })
        .collect();
    Ok(FullGame::new_unchecked(n, worth))
}

/// The unity game of `v` and `S`: agrees with `v` on singletons, `S` and the
/// grand coalition; zero on every other coalition. `S` must be non-trivial.
pub fn unity_game(v: &FullGame, s: Coalition) -> Result<FullGame> {
    let n = v.n();
    if s.is_empty() || s.is_trivial(n) || s.mask() >= 1 << n {
        return Err(GameError::TrivialCoalition(s));
    }
    let worth = (0..1u32 << n)
        .map(|m| {
            let t = Coalition::from_mask(m);
            if t.len() == 1 || t == s || t == Coalition::grand(n) {
                v.worth(t).clone()
            } else {
                Rational::zero()
            }
        })
        .collect();
    Ok(FullGame::new_unchecked(n, worth))
}

/// Coefficients of the unanimity-basis expansion `v = Σ_S c_S · u_S`,
/// indexed by coalition bitmask; computed by the in-place Möbius transform
/// over the subset lattice.
pub fn moebius_decompose(game: &FullGame) -> Vec<Rational> {
    let n = game.n();
    let mut f: Vec<Rational> = game.worths().to_vec();
    for i in 0..n {
        let bit = 1usize << i;
        for mask in 0..1usize << n {
            if mask & bit != 0 {
                let sub = f[mask ^ bit].clone();
                f[mask] -= sub;
            }
        }
    }
    f
}

/// Inverse of [`moebius_decompose`]: the zeta transform, validated as a
/// game. Fails when the coefficients do not describe a valid game.
pub fn moebius_recompose(n: usize, coeffs: &[Rational]) -> Result<FullGame> {
    check_player_count(n)?;
    if coeffs.len() != 1 << n {
        return Err(GameError::MissingCoalition(Coalition::grand(n)));
    }
    let mut f = coeffs.to_vec();
    for i in 0..n {
        let bit = 1usize << i;
        for mask in 0..1usize << n {
            if mask & bit != 0 {
                let sub = f[mask ^ bit].clone();
                f[mask] += sub;
            }
        }
    }
    FullGame::new(n, f)
}
