//! Payoff computations: the staged cost-adjusted value, the classic and
//! partial-game Shapley values, and the CIS value.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::coalition::Coalition;
use crate::cost::CostProfile;
use crate::dividends::{harsanyi_dividends, StagedDividends};
use crate::error::{GameError, Result};
use crate::game::{FullGame, Rational};
use crate::partial::PartialGame;

/// The per-stage payoff table: one column per examination stage
/// `k = 0 … 2^n − n − 2`, one row per player.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StageMatrix {
    n: usize,
    columns: Vec<Vec<Rational>>,
}

impl StageMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of columns, `2^n − n − 1`.
    pub fn num_columns(&self) -> usize {
        self.columns.len()
    }

    /// Payoffs after `k` examinations, one entry per player.
    pub fn column(&self, k: usize) -> &[Rational] {
        &self.columns[k]
    }

    pub fn entry(&self, player: usize, k: usize) -> &Rational {
        &self.columns[k][player]
    }

    pub fn columns(&self) -> &[Vec<Rational>] {
        &self.columns
    }

    #[cfg(test)]
    pub(crate) fn set_entry(&mut self, player: usize, k: usize, value: Rational) {
        self.columns[k][player] = value;
    }
}

/// Computes the staged value: at stage `k` every player receives its
/// per-capita share of the dividends of known proper coalitions it belongs
/// to, plus an equal share of the grand-coalition dividend net of the costs
/// accrued so far.
///
/// Stages are computed incrementally: examining `S_k` disturbs only the
/// dividends of known supersets of `S_k`, and those changes are folded into
/// per-player running sums.
pub fn staged_value(game: &FullGame, profile: &CostProfile) -> Result<StageMatrix> {
    let n = game.n();
    if n != profile.n() {
        return Err(GameError::DimensionMismatch(n, profile.n()));
    }
    let grand = Coalition::grand(n);
    let mut engine = StagedDividends::new(game);

    // Running per-player sums over proper known coalitions; the grand
    // dividend is tracked separately because it is shared over all n.
    let mut proper_share: Vec<Rational> = (0..n)
        .map(|i| game.worth(Coalition::singleton(i)).clone())
        .collect();
    let mut grand_dividend = engine.get(grand).clone();
    let mut accrued = Rational::zero();

    let mut columns = Vec::with_capacity(profile.num_stages() + 1);
    let column = |proper: &[Rational], top: &Rational, spent: &Rational| {
        let equal_share = (top - spent) / Rational::from_integer(BigInt::from(n));
        proper.iter().map(|p| p + &equal_share).collect::<Vec<_>>()
    };
    columns.push(column(&proper_share, &grand_dividend, &accrued));

    for k in 1..=profile.num_stages() {
        let examined = profile.stage_coalition(k);
        for (s, delta) in engine.add(game, examined) {
            if s == grand {
                grand_dividend += &delta;
            } else {
                let share = delta / Rational::from_integer(BigInt::from(s.len()));
                for i in s.members() {
                    proper_share[i] += &share;
                }
            }
        }
        accrued += profile.cost(examined);
        columns.push(column(&proper_share, &grand_dividend, &accrued));
    }

    Ok(StageMatrix { n, columns })
}

/// The classic Shapley value via the marginal-contribution coefficient
/// formula: `φ_i = Σ_{S ∋ i} (|S|−1)!(n−|S|)!/n! · (v(S) − v(S∖i))`.
pub fn shapley_classic(game: &FullGame) -> Vec<Rational> {
    let n = game.n();
    let mut factorial = vec![BigInt::one(); n + 1];
    for i in 1..=n {
        factorial[i] = &factorial[i - 1] * BigInt::from(i);
    }
    let mut payoff = vec![Rational::zero(); n];
    for mask in 1u32..1 << n {
        let s = Coalition::from_mask(mask);
        let weight = Rational::new(
            &factorial[s.len() - 1] * &factorial[n - s.len()],
            factorial[n].clone(),
        );
        for i in s.members() {
            let marginal = game.worth(s) - game.worth(s.without(i));
            payoff[i] += &weight * marginal;
        }
    }
    payoff
}

/// The Shapley value of a partial game: each player's per-capita share of
/// the dividends of the known coalitions containing it.
pub fn shapley_pdg(pg: &PartialGame) -> Vec<Rational> {
    let n = pg.n();
    let dividends = harsanyi_dividends(pg);
    let mut payoff = vec![Rational::zero(); n];
    for s in pg.known().iter() {
        if s.is_empty() {
            continue;
        }
        let share = dividends.get(s) / Rational::from_integer(BigInt::from(s.len()));
        for i in s.members() {
            payoff[i] += &share;
        }
    }
    payoff
}

/// The CIS value: each player keeps its own worth plus an equal share of the
/// remaining surplus of the grand coalition.
pub fn cis_value(game: &FullGame) -> Vec<Rational> {
    let n = game.n();
    let mut singles = Rational::zero();
    for i in 0..n {
        singles += game.worth(Coalition::singleton(i));
    }
    let equal_share = (game.worth(game.grand()) - singles) / Rational::from_integer(BigInt::from(n));
    (0..n)
        .map(|i| game.worth(Coalition::singleton(i)) + &equal_share)
        .collect()
}
