//! Brute-force reference implementations, deliberately independent of the
//! production code paths they are checked against.

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;

use crate::coalition::Coalition;
use crate::dividends::DividendMap;
use crate::error::{GameError, Result};
use crate::game::{FullGame, Rational};

/// Largest player count for the `n!` permutation enumeration.
pub const ORACLE_MAX_PLAYERS: usize = 8;

/// The Shapley value as the average marginal contribution over every player
/// order.
pub fn shapley_permutation_oracle(game: &FullGame) -> Result<Vec<Rational>> {
    let n = game.n();
    if n > ORACLE_MAX_PLAYERS {
        return Err(GameError::TooManyPlayers { got: n, max: ORACLE_MAX_PLAYERS });
    }
    let mut totals = vec![Rational::zero(); n];
    let mut orders = 0u64;
    for perm in (0..n).permutations(n) {
        orders += 1;
        let mut coalition = Coalition::EMPTY;
        for player in perm {
            let with = coalition.union(Coalition::singleton(player));
            totals[player] += game.worth(with) - game.worth(coalition);
            coalition = with;
        }
    }
    let count = Rational::from_integer(BigInt::from(orders));
    Ok(totals.into_iter().map(|t| t / &count).collect())
}

/// Dividends by the closed-form alternating sum
/// `d(S) = Σ_{T ⊆ S} (−1)^{|S|−|T|} v(T)`, evaluated per coalition.
pub fn dividend_oracle(game: &FullGame) -> DividendMap {
    let n = game.n();
    let mut values = vec![Rational::zero(); 1 << n];
    for s in Coalition::all(n) {
        let mut total = Rational::zero();
        for t in s.subsets() {
            if (s.len() - t.len()) % 2 == 0 {
                total += game.worth(t);
            } else {
                total -= game.worth(t);
            }
        }
        values[s.mask() as usize] = total;
    }
    DividendMap::from_vec(n, values)
}

/// Reference expansion `Σ_S c_S · u_S` evaluated pointwise, without the fast
/// zeta transform.
pub fn recompose_oracle(n: usize, coeffs: &[Rational]) -> Vec<Rational> {
    let mut worth = vec![Rational::zero(); 1 << n];
    for (mask, w) in worth.iter_mut().enumerate() {
        let t = Coalition::from_mask(mask as u32);
        for s in t.subsets() {
            *w += &coeffs[s.mask() as usize];
        }
    }
    worth
}
