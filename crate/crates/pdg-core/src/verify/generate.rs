//! Seeded random generation of games and cost profiles under the standing
//! assumptions, including structured variants that plant the special shapes
//! the conditional axioms need.

use std::collections::BTreeMap;

use num_traits::{Signed, ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coalition::Coalition;
use crate::cost::{make_cost_profile, make_cost_profile_with_order, CostProfile};
use crate::error::{GameError, Result};
use crate::game::{frac, rat, FullGame, Rational};

/// Parameters for the random generators. Identical configurations produce
/// identical output.
#[derive(Debug, Clone)]
pub struct GeneratorConfig {
    pub n: usize,
    pub seed: u64,
    /// Inclusive worth interval; sampled on a grid of sixths.
    pub worth_range: (Rational, Rational),
    /// Probability that a proper coalition gets worth 0.
    pub zero_probability: f64,
    /// Costs are sampled from `[0, cost_scale]`.
    pub cost_scale: Rational,
    /// Rotate in planted games so that partnership / carrier / zero-game
    /// preconditions actually fire.
    pub structured: bool,
}

impl GeneratorConfig {
    pub fn new(n: usize, seed: u64) -> GeneratorConfig {
        GeneratorConfig {
            n,
            seed,
            worth_range: (rat(0), rat(12)),
            zero_probability: 0.3,
            cost_scale: rat(3),
            structured: false,
        }
    }

    /// The configuration for one trial of a suite: seed shifted by the trial
    /// index, everything else shared.
    pub fn for_trial(&self, trial: usize) -> GeneratorConfig {
        GeneratorConfig { seed: self.seed.wrapping_add(trial as u64), ..self.clone() }
    }

    fn check(&self) {
        let (lo, hi) = &self.worth_range;
        assert!(lo >= &Rational::zero(), "worth range must be nonnegative");
        assert!(hi > &Rational::zero() && hi >= lo, "worth range must be ordered with positive top");
        assert!((0.0..=1.0).contains(&self.zero_probability), "probability out of range");
        assert!(self.cost_scale >= Rational::zero(), "cost scale must be nonnegative");
    }
}

fn rng_for(config: &GeneratorConfig) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(config.seed)
}

/// Number of sixths in `r`, rounded down; zero for negative input.
fn sixths(r: &Rational) -> u64 {
    let floored = (r * rat(6)).floor();
    if floored.is_negative() {
        return 0;
    }
    floored.to_integer().to_u64().unwrap_or(u64::MAX)
}

/// Uniform draw from the sixths grid of `[lo, hi]`.
fn draw_rational(rng: &mut ChaCha8Rng, lo: &Rational, hi: &Rational) -> Rational {
    let span = sixths(&(hi - lo));
    let ticks = rng.random_range(0..=span);
    lo + frac(ticks as i64, 6)
}

/// Uniform draw from the sixths grid of `(0, hi]`; requires `hi > 0`.
fn draw_positive(rng: &mut ChaCha8Rng, hi: &Rational) -> Rational {
    let span = sixths(hi).max(1);
    let ticks = rng.random_range(1..=span);
    frac(ticks as i64, 6)
}

fn draw_worths(
    rng: &mut ChaCha8Rng,
    config: &GeneratorConfig,
    grand: Option<&Rational>,
) -> Vec<Rational> {
    let n = config.n;
    let (lo, hi) = &config.worth_range;
    let mut worths = vec![Rational::zero(); 1 << n];
    for s in Coalition::all(n) {
        if s.is_empty() || s == Coalition::grand(n) {
            continue;
        }
        worths[s.mask() as usize] = if rng.random_bool(config.zero_probability) {
            Rational::zero()
        } else {
            draw_rational(rng, lo, hi)
        };
    }
    let top = match grand {
        Some(alpha) => alpha.clone(),
        None => {
            let drawn = draw_rational(rng, lo, hi);
            if drawn.is_zero() {
                draw_positive(rng, hi)
            } else {
                drawn
            }
        }
    };
    worths[(1usize << n) - 1] = top;
    worths
}

fn draw_costs(
    rng: &mut ChaCha8Rng,
    config: &GeneratorConfig,
    game: &FullGame,
) -> BTreeMap<Coalition, Rational> {
    Coalition::non_trivial(config.n)
        .map(|s| {
            let cost = if game.worth(s).is_zero() || config.cost_scale.is_zero() {
                Rational::zero()
            } else {
                draw_rational(rng, &Rational::zero(), &config.cost_scale)
            };
            (s, cost)
        })
        .collect()
}

/// A random game and cost profile satisfying the standing assumptions.
pub fn random_game(config: &GeneratorConfig) -> (FullGame, CostProfile) {
    config.check();
    let mut rng = rng_for(config);
    let worths = draw_worths(&mut rng, config, None);
    let game = FullGame::new(config.n, worths).expect("generated game is valid");
    let costs = draw_costs(&mut rng, config, &game);
    let profile = make_cost_profile(&game, &costs).expect("generated costs are valid");
    (game, profile)
}

/// As [`random_game`] but with the grand worth pinned to `alpha`.
pub fn random_game_alpha(
    config: &GeneratorConfig,
    alpha: &Rational,
) -> Result<(FullGame, CostProfile)> {
    config.check();
    if alpha.is_negative() {
        return Err(GameError::NegativeWorth(Coalition::grand(config.n)));
    }
    if alpha.is_zero() {
        return Err(GameError::ZeroGrandWorth);
    }
    let mut rng = rng_for(config);
    let worths = draw_worths(&mut rng, config, Some(alpha));
    let game = FullGame::new(config.n, worths).expect("generated game is valid");
    let costs = draw_costs(&mut rng, config, &game);
    let profile = make_cost_profile(&game, &costs).expect("generated costs are valid");
    Ok((game, profile))
}

/// A scaled unanimity game on a random pair of players, with costs drawn
/// only where the worth is positive. The pair is a partnership of the game
/// and becomes a carrier at the stage that examines it.
pub fn planted_unanimity_game(config: &GeneratorConfig) -> (FullGame, CostProfile) {
    config.check();
    let mut rng = rng_for(config);
    let first = rng.random_range(0..config.n);
    let second = (first + rng.random_range(1..config.n)) % config.n;
    let support = Coalition::from_players([first, second]);
    let coeff = draw_positive(&mut rng, &config.worth_range.1);
    let game = crate::algebra::unanimity_game(config.n, support, &coeff)
        .expect("pair support is non-empty");
    let costs = draw_costs(&mut rng, config, &game);
    let profile = make_cost_profile(&game, &costs).expect("generated costs are valid");
    (game, profile)
}

/// A game that is zero on every proper coalition, with zero costs. Every
/// non-trivial coalition is a partnership and every stage family satisfies
/// the zero-game shape.
pub fn planted_zero_below_grand(config: &GeneratorConfig) -> (FullGame, CostProfile) {
    config.check();
    let mut rng = rng_for(config);
    let mut worths = vec![Rational::zero(); 1 << config.n];
    worths[(1usize << config.n) - 1] = draw_positive(&mut rng, &config.worth_range.1);
    let game = FullGame::new(config.n, worths).expect("generated game is valid");
    let costs = Coalition::non_trivial(config.n).map(|s| (s, Rational::zero())).collect();
    let profile = make_cost_profile(&game, &costs).expect("zero costs are valid");
    (game, profile)
}

/// Two games sharing one examination order, so that stage families line up
/// under stage-by-stage profile sums. Coalitions with zero worth in either
/// game get zero cost in both and are examined first (in bitmask order); the
/// remaining coalitions follow in a shuffled order with strictly increasing
/// costs in each game.
///
/// With `alpha` set, both grand worths are pinned to it.
pub fn aligned_pair(
    config: &GeneratorConfig,
    alpha: Option<&Rational>,
) -> ((FullGame, CostProfile), (FullGame, CostProfile)) {
    config.check();
    let mut rng = rng_for(config);
    let n = config.n;
    let v = FullGame::new(n, draw_worths(&mut rng, config, alpha)).expect("valid game");
    let w = FullGame::new(n, draw_worths(&mut rng, config, alpha)).expect("valid game");

    let (mut zero_first, mut rest): (Vec<Coalition>, Vec<Coalition>) = Coalition::non_trivial(n)
        .partition(|s| v.worth(*s).is_zero() || w.worth(*s).is_zero());
    zero_first.sort_by_key(|s| s.mask());
    rest.shuffle(&mut rng);

    let mut order = zero_first;
    order.extend(rest.iter().copied());

    let mut costs_v: BTreeMap<Coalition, Rational> =
        order.iter().map(|s| (*s, Rational::zero())).collect();
    let mut costs_w = costs_v.clone();
    let unit = if config.cost_scale.is_zero() { rat(1) } else { config.cost_scale.clone() };
    let mut level_v = Rational::zero();
    let mut level_w = Rational::zero();
    for s in &rest {
        level_v += draw_positive(&mut rng, &unit);
        level_w += draw_positive(&mut rng, &unit);
        if !config.cost_scale.is_zero() {
            costs_v.insert(*s, level_v.clone());
            costs_w.insert(*s, level_w.clone());
        }
    }

    let pv = make_cost_profile_with_order(&v, &costs_v, &order)
        .expect("aligned profile is valid by construction");
    let pw = make_cost_profile_with_order(&w, &costs_w, &order)
        .expect("aligned profile is valid by construction");
    ((v, pv), (w, pw))
}
