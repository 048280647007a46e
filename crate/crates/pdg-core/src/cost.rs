//! Examination costs and the examination order over non-trivial coalitions.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::coalition::Coalition;
use crate::error::{GameError, Result};
use crate::game::{FullGame, Rational};

/// Examination costs on the `2^n - n - 2` non-trivial coalitions, together
/// with the order in which they are examined. The order is nondecreasing in
/// cost; the coalition examined at stage `k` (1-based) is `order[k - 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CostProfile {
    n: usize,
    /// Cost per coalition, indexed by bitmask; zero at trivial entries.
    cost: Vec<Rational>,
    order: Vec<Coalition>,
}

fn check_cost_map(
    game: &FullGame,
    costs: &BTreeMap<Coalition, Rational>,
) -> Result<(usize, Vec<Rational>)> {
    let n = game.n();
    let expected: Vec<Coalition> = Coalition::non_trivial(n).collect();
    if costs.len() != expected.len() || !expected.iter().all(|s| costs.contains_key(s)) {
        return Err(GameError::CostDomainMismatch);
    }
    let mut vec = vec![Rational::zero(); 1 << n];
    for (s, c) in costs {
        if c < &Rational::zero() {
            return Err(GameError::NegativeCost(*s));
        }
        if !c.is_zero() && game.worth(*s).is_zero() {
            return Err(GameError::Assumption1Violation(*s));
        }
        vec[s.mask() as usize] = c.clone();
    }
    Ok((n, vec))
}

/// Builds a profile with the order derived from the costs: nondecreasing
/// cost, ties broken by ascending bitmask.
pub fn make_cost_profile(
    game: &FullGame,
    costs: &BTreeMap<Coalition, Rational>,
) -> Result<CostProfile> {
    let (n, cost) = check_cost_map(game, costs)?;
    let mut order: Vec<Coalition> = Coalition::non_trivial(n).collect();
    order.sort_by(|a, b| {
        cost[a.mask() as usize]
            .cmp(&cost[b.mask() as usize])
            .then(a.mask().cmp(&b.mask()))
    });
    Ok(CostProfile { n, cost, order })
}

/// Builds a profile with a caller-supplied order, which must be a
/// permutation of the non-trivial coalitions and nondecreasing in cost.
pub fn make_cost_profile_with_order(
    game: &FullGame,
    costs: &BTreeMap<Coalition, Rational>,
    order: &[Coalition],
) -> Result<CostProfile> {
    let (n, cost) = check_cost_map(game, costs)?;
    let mut seen = vec![false; 1 << n];
    for s in order {
        let idx = s.mask() as usize;
        if idx >= (1 << n) || s.is_trivial(n) || s.is_empty() || seen[idx] {
            return Err(GameError::OrderNotPermutation);
        }
        seen[idx] = true;
    }
    if order.len() != Coalition::non_trivial(n).count() {
        return Err(GameError::OrderNotPermutation);
    }
    for pos in 1..order.len() {
        if cost[order[pos].mask() as usize] < cost[order[pos - 1].mask() as usize] {
            return Err(GameError::OrderNotSorted(pos));
        }
    }
    Ok(CostProfile { n, cost, order: order.to_vec() })
}

impl CostProfile {
    /// Builds a profile from explicit per-stage data without the sortedness
    /// or Assumption-1 checks: the order-invariance axiom deliberately feeds
    /// orders that break Assumption 2.
    pub(crate) fn from_order_unchecked(
        n: usize,
        order: Vec<Coalition>,
        stage_costs: &[Rational],
    ) -> CostProfile {
        debug_assert_eq!(order.len(), stage_costs.len());
        let mut cost = vec![Rational::zero(); 1 << n];
        for (s, c) in order.iter().zip(stage_costs) {
            cost[s.mask() as usize] = c.clone();
        }
        CostProfile { n, cost, order }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of examination stages, `2^n - n - 2`.
    pub fn num_stages(&self) -> usize {
        self.order.len()
    }

    /// Examination order; the coalition at index `k - 1` is examined at
    /// stage `k`.
    pub fn order(&self) -> &[Coalition] {
        &self.order
    }

    /// The coalition examined at 1-based stage `k`.
    pub fn stage_coalition(&self, k: usize) -> Coalition {
        self.order[k - 1]
    }

    pub fn cost(&self, s: Coalition) -> &Rational {
        &self.cost[s.mask() as usize]
    }

    /// Total cost accrued after the first `k` examinations.
    pub fn accrued(&self, k: usize) -> Rational {
        self.order[..k]
            .iter()
            .map(|s| &self.cost[s.mask() as usize])
            .sum()
    }

    /// Per-stage cost sequence in examination order.
    pub fn stage_costs(&self) -> Vec<Rational> {
        self.order
            .iter()
            .map(|s| self.cost[s.mask() as usize].clone())
            .collect()
    }
}
