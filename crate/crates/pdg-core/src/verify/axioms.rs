//! Randomized axiom suites for the staged value and the exit indicators.
//!
//! Each suite runs seeded trials, checks every axiom whose precondition
//! holds for the drawn game, and tallies pass / fail / skip per axiom. The
//! first failing instance is kept in replayable game-file form.

use itertools::Itertools;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::algebra::{game_sum, game_sum_capped, summed_cost_profile};
use crate::coalition::Coalition;
use crate::cost::CostProfile;
use crate::error::{GameError, Result};
use crate::exit::{ExitRule, IndicatorVector};
use crate::fileio::serialize_game_file;
use crate::game::{rat, FullGame, Rational};
use crate::partial::{restrict, stage_family};
use crate::structures::{is_carrier, is_partnership};
use crate::values::{staged_value, StageMatrix};
use crate::verify::generate::{
    aligned_pair, planted_unanimity_game, planted_zero_below_grand, random_game, GeneratorConfig,
};

/// A failing instance, serialized in the game-file format so it can be
/// replayed through the library or the command-line tools.
#[derive(Debug, Clone)]
pub struct Counterexample {
    pub game: String,
    /// Second operand, for the pairwise axioms.
    pub partner: Option<String>,
    pub stage: Option<usize>,
    pub detail: String,
}

/// Tallies for one axiom across a suite run. Every trial is accounted for:
/// `passed + failed + skipped` equals the number of trials.
#[derive(Debug, Clone)]
pub struct AxiomOutcome {
    pub name: String,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    /// Failures of this axiom are a documented property, not a defect.
    pub expected_failure: bool,
    pub counterexample: Option<Counterexample>,
}

impl AxiomOutcome {
    fn new(name: impl Into<String>) -> AxiomOutcome {
        AxiomOutcome {
            name: name.into(),
            passed: 0,
            failed: 0,
            skipped: 0,
            expected_failure: false,
            counterexample: None,
        }
    }

    fn expected(name: impl Into<String>) -> AxiomOutcome {
        AxiomOutcome { expected_failure: true, ..AxiomOutcome::new(name) }
    }

    fn pass(&mut self) {
        self.passed += 1;
    }

    fn skip(&mut self) {
        self.skipped += 1;
    }

    fn fail(&mut self, cx: Counterexample) {
        self.failed += 1;
        if self.counterexample.is_none() {
            self.counterexample = Some(cx);
        }
    }

    pub fn trials(&self) -> usize {
        self.passed + self.failed + self.skipped
    }

    /// Trials in which the axiom's precondition actually held.
    pub fn fired(&self) -> usize {
        self.passed + self.failed
    }

    pub fn is_unexpected(&self) -> bool {
        self.failed > 0 && !self.expected_failure
    }
}

/// The result of a suite run: one row per axiom.
#[derive(Debug, Clone)]
pub struct AxiomReport {
    pub outcomes: Vec<AxiomOutcome>,
}

impl AxiomReport {
    pub fn outcome(&self, name: &str) -> Option<&AxiomOutcome> {
        self.outcomes.iter().find(|o| o.name == name)
    }

    /// Number of axioms that failed without being marked as expected.
    pub fn unexpected_failures(&self) -> usize {
        self.outcomes.iter().filter(|o| o.is_unexpected()).count()
    }

    pub fn render_text(&self) -> String {
        let width = self
            .outcomes
            .iter()
            .map(|o| o.name.len())
            .max()
            .unwrap_or(0)
            .max("axiom".len());
        let mut out = String::new();
        out.push_str(&format!(
            "{:<width$}  {:>6}  {:>6}  {:>6}  note",
            "axiom", "pass", "fail", "skip"
        ));
        out.push('\n');
        for o in &self.outcomes {
            let note = if o.failed > 0 && o.expected_failure {
                "expected failure"
            } else if o.failed > 0 {
                "UNEXPECTED FAILURE"
            } else if o.fired() == 0 {
                "never fired"
            } else {
                ""
            };
            let line = format!(
                "{:<width$}  {:>6}  {:>6}  {:>6}  {}",
                o.name, o.passed, o.failed, o.skipped, note
            );
            out.push_str(line.trim_end());
            out.push('\n');
        }
        for o in &self.outcomes {
            let Some(cx) = o.counterexample.as_ref().filter(|_| o.failed > 0) else {
                continue;
            };
            out.push('\n');
            out.push_str(&format!("first counterexample for {}", o.name));
            if let Some(k) = cx.stage {
                out.push_str(&format!(" (stage {k})"));
            }
            out.push_str(":\n");
            out.push_str(&format!("  {}\n", cx.detail));
            for line in cx.game.lines() {
                out.push_str(&format!("  {line}\n"));
            }
            if let Some(partner) = &cx.partner {
                out.push_str("  paired with:\n");
                for line in partner.lines() {
                    out.push_str(&format!("  {line}\n"));
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "axioms": self.outcomes.iter().map(|o| json!({
                "name": o.name,
                "passed": o.passed,
                "failed": o.failed,
                "skipped": o.skipped,
                "expected_failure": o.expected_failure,
                "counterexample": o.counterexample.as_ref().map(|c| json!({
                    "game": c.game,
                    "partner": c.partner,
                    "stage": c.stage,
                    "detail": c.detail,
                })),
            })).collect::<Vec<_>>(),
            "unexpected_failures": self.unexpected_failures(),
        })
    }
}

/// Stage at which some column fails to sum to the grand worth net of
/// accrued costs, if any.
pub(crate) fn efficiency_violation(
    game: &FullGame,
    profile: &CostProfile,
    matrix: &StageMatrix,
) -> Option<(usize, String)> {
    let grand = game.worth(game.grand());
    for k in 0..matrix.num_columns() {
        let total = matrix
            .column(k)
            .iter()
            .fold(Rational::zero(), |acc, x| acc + x);
        let expected = grand - profile.accrued(k);
        if total != expected {
            return Some((k, format!("column {k} sums to {total}, expected {expected}")));
        }
    }
    None
}

/// Pair of players whose stage-0 payoff gap differs from their singleton
/// worth gap, if any.
pub(crate) fn fairness_violation(game: &FullGame, matrix: &StageMatrix) -> Option<String> {
    let n = game.n();
    for i in 0..n {
        for j in (i + 1)..n {
            let payoff_gap = matrix.entry(i, 0) - matrix.entry(j, 0);
            let worth_gap = game.worth(Coalition::singleton(i)) - game.worth(Coalition::singleton(j));
            if payoff_gap != worth_gap {
                return Some(format!(
                    "players {} and {} at column 0: payoff gap {payoff_gap}, singleton gap {worth_gap}",
                    i + 1,
                    j + 1
                ));
            }
        }
    }
    None
}

/// Whenever the examined coalition is a partnership, its members must be
/// paid equally at that stage. Returns whether any stage fired and the
/// first violation.
pub(crate) fn partnership_check(
    game: &FullGame,
    profile: &CostProfile,
    matrix: &StageMatrix,
) -> (bool, Option<(usize, String)>) {
    let mut fired = false;
    for k in 1..=profile.num_stages() {
        let s = profile.stage_coalition(k);
        if !is_partnership(game, s) {
            continue;
        }
        fired = true;
        let mut members = s.members();
        let first = members.next().expect("examined coalitions are non-trivial");
        for i in members {
            if matrix.entry(i, k) != matrix.entry(first, k) {
                return (
                    true,
                    Some((
                        k,
                        format!(
                            "partnership {s} examined at stage {k}: players {} and {} receive {} and {}",
                            first + 1,
                            i + 1,
                            matrix.entry(first, k),
                            matrix.entry(i, k)
                        ),
                    )),
                );
            }
        }
    }
    (fired, None)
}

/// Whenever the examined coalition is a carrier of the stage restriction,
/// players outside it must be paid exactly their equal share of the accrued
/// costs (negatively).
pub(crate) fn carrier_check(
    game: &FullGame,
    profile: &CostProfile,
    matrix: &StageMatrix,
) -> (bool, Option<(usize, String)>) {
    let n = game.n();
    let mut fired = false;
    for k in 1..=profile.num_stages() {
        let s = profile.stage_coalition(k);
        let family = stage_family(profile, k).expect("stage is in range");
        let pg = restrict(game, &family).expect("matching dimensions");
        if !is_carrier(&pg, s).expect("the examined coalition is known") {
            continue;
        }
        fired = true;
        let expected = -(profile.accrued(k) / rat(n as i64));
        for i in (0..n).filter(|i| !s.contains(*i)) {
            if matrix.entry(i, k) != &expected {
                return (
                    true,
                    Some((
                        k,
                        format!(
                            "carrier {s} examined at stage {k}: outside player {} receives {} instead of {expected}",
                            i + 1,
                            matrix.entry(i, k)
                        ),
                    )),
                );
            }
        }
    }
    (fired, None)
}

/// Whenever every known coalition below the grand one has zero worth, the
/// column must split the grand worth equally.
pub(crate) fn zero_game_check(
    game: &FullGame,
    profile: &CostProfile,
    matrix: &StageMatrix,
) -> (bool, Option<(usize, String)>) {
    let n = game.n();
    let grand = Coalition::grand(n);
    let mut fired = false;
    for k in 0..=profile.num_stages() {
        let family = stage_family(profile, k).expect("stage is in range");
        if family.iter().any(|t| t != grand && !game.worth(t).is_zero()) {
            continue;
        }
        fired = true;
        let expected = game.worth(grand) / rat(n as i64);
        for i in 0..n {
            if matrix.entry(i, k) != &expected {
                return (
                    true,
                    Some((
                        k,
                        format!(
                            "zero game at stage {k}: player {} receives {} instead of {expected}",
                            i + 1,
                            matrix.entry(i, k)
                        ),
                    )),
                );
            }
        }
    }
    (fired, None)
}

fn matrix_sum_mismatch(
    total: &StageMatrix,
    left: &StageMatrix,
    right: &StageMatrix,
) -> Option<(usize, usize)> {
    for k in 0..total.num_columns() {
        for i in 0..total.n() {
            if total.entry(i, k) != &(left.entry(i, k) + right.entry(i, k)) {
                return Some((k, i));
            }
        }
    }
    None
}

/// Runs the staged-value axiom suite over `trials` seeded games.
///
/// Unconditional axioms (efficiency, singleton fairness, additivity over
/// order-aligned pairs) are exercised on every trial. Conditional axioms
/// (partnership symmetry, carrier outsiders, zero-game split) count a skip
/// when no stage of the drawn game meets their precondition; enable
/// [`GeneratorConfig::structured`] to plant games that reach them.
pub fn check_value_axioms(trials: usize, config: &GeneratorConfig) -> AxiomReport {
    let mut efficiency = AxiomOutcome::new("efficiency");
    let mut additivity = AxiomOutcome::new("additivity");
    let mut partnership = AxiomOutcome::new("partnership-symmetry");
    let mut carrier = AxiomOutcome::new("carrier-outsiders");
    let mut fairness = AxiomOutcome::new("singleton-fairness");
    let mut zero_game = AxiomOutcome::new("zero-game-split");

    for t in 0..trials {
        let cfg = config.for_trial(t);
        let (game, profile) = if cfg.structured {
            match t % 3 {
                1 => planted_unanimity_game(&cfg),
                2 => planted_zero_below_grand(&cfg),
                _ => random_game(&cfg),
            }
        } else {
            random_game(&cfg)
        };
        let matrix = staged_value(&game, &profile).expect("matching dimensions");
        let cx = |stage: Option<usize>, detail: String| Counterexample {
            game: serialize_game_file(&game, &profile),
            partner: None,
            stage,
            detail,
        };

        match efficiency_violation(&game, &profile, &matrix) {
            None => efficiency.pass(),
            Some((k, detail)) => efficiency.fail(cx(Some(k), detail)),
        }
        match fairness_violation(&game, &matrix) {
            None => fairness.pass(),
            Some(detail) => fairness.fail(cx(Some(0), detail)),
        }
        match partnership_check(&game, &profile, &matrix) {
            (false, _) => partnership.skip(),
            (true, None) => partnership.pass(),
            (true, Some((k, detail))) => partnership.fail(cx(Some(k), detail)),
        }
        match carrier_check(&game, &profile, &matrix) {
            (false, _) => carrier.skip(),
            (true, None) => carrier.pass(),
            (true, Some((k, detail))) => carrier.fail(cx(Some(k), detail)),
        }
        match zero_game_check(&game, &profile, &matrix) {
            (false, _) => zero_game.skip(),
            (true, None) => zero_game.pass(),
            (true, Some((k, detail))) => zero_game.fail(cx(Some(k), detail)),
        }

        // Additivity needs a pair sharing one examination order so that the
        // stage-by-stage sum is defined; misaligned sums count as skips.
        let ((v, cv), (w, cw)) = aligned_pair(&cfg, None);
        match game_sum(&v, &cv, &w, &cw) {
            Err(_) => additivity.skip(),
            Ok((sum, cs)) => {
                let total = staged_value(&sum, &cs).expect("matching dimensions");
                let left = staged_value(&v, &cv).expect("matching dimensions");
                let right = staged_value(&w, &cw).expect("matching dimensions");
                match matrix_sum_mismatch(&total, &left, &right) {
                    None => additivity.pass(),
                    Some((k, i)) => additivity.fail(Counterexample {
                        game: serialize_game_file(&v, &cv),
                        partner: Some(serialize_game_file(&w, &cw)),
                        stage: Some(k),
                        detail: format!(
                            "player {} at column {k}: expected {} + {} = {}, got {}",
                            i + 1,
                            left.entry(i, k),
                            right.entry(i, k),
                            left.entry(i, k) + right.entry(i, k),
                            total.entry(i, k)
                        ),
                    }),
                }
            }
        }
    }

    AxiomReport {
        outcomes: vec![efficiency, additivity, partnership, carrier, fairness, zero_game],
    }
}

fn first_flag_mismatch(a: &IndicatorVector, b: &IndicatorVector) -> Option<usize> {
    a.flags()
        .iter()
        .zip(b.flags())
        .position(|(x, y)| x != y)
        .map(|pos| pos + 1)
}

fn order_text(order: &[Coalition]) -> String {
    order.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ")
}

/// Whether `rule` produces different indicator vectors for different
/// examination orders of the same game, tried exhaustively.
fn order_variation(rule: ExitRule, game: &FullGame, profile: &CostProfile) -> Option<String> {
    let baseline = rule.evaluate(game, profile).expect("matching dimensions");
    for perm in profile
        .order()
        .to_vec()
        .into_iter()
        .permutations(profile.num_stages())
    {
        let costs: Vec<Rational> = perm.iter().map(|s| profile.cost(*s).clone()).collect();
        let permuted = CostProfile::from_order_unchecked(game.n(), perm.clone(), &costs);
        let flags = rule.evaluate(game, &permuted).expect("matching dimensions");
        if flags != baseline {
            return Some(format!(
                "order {} gives {baseline} but order {} gives {flags}",
                order_text(profile.order()),
                order_text(&perm)
            ));
        }
    }
    None
}

/// Runs the exit-indicator axiom suite over `trials` seeded pairs of games
/// whose grand worth is pinned to `alpha`.
///
/// Checks, per rule: join additivity under the grand-capped stage-by-stage
/// sum; continuation at stages whose examined coalition had zero worth; and
/// (exhaustively, at three players) invariance under reordering the
/// examination sequence. The order-invariance row for the zero-worth rule
/// is marked as an expected failure: that rule reads the examined
/// coalition's worth, which depends on the order.
pub fn check_indicator_axioms(
    trials: usize,
    config: &GeneratorConfig,
    alpha: &Rational,
) -> Result<AxiomReport> {
    if alpha.is_negative() {
        return Err(GameError::NegativeWorth(Coalition::grand(config.n)));
    }
    if alpha.is_zero() {
        return Err(GameError::ZeroGrandWorth);
    }

    let rules = [ExitRule::Gamma, ExitRule::GammaA, ExitRule::GammaB];
    let mut join_rows: Vec<AxiomOutcome> = rules
        .iter()
        .map(|r| AxiomOutcome::new(format!("join-additivity({})", r.name())))
        .collect();
    let mut zero_rows: Vec<AxiomOutcome> = rules
        .iter()
        .map(|r| AxiomOutcome::new(format!("zero-continuation({})", r.name())))
        .collect();
    let order_rules = [ExitRule::GammaA, ExitRule::GammaB];
    let mut order_rows = vec![
        AxiomOutcome::new("order-invariance(gammaA)"),
        AxiomOutcome::expected("order-invariance(gammaB)"),
    ];

    for t in 0..trials {
        let cfg = config.for_trial(t);
        let ((v, cv), (w, cw)) = aligned_pair(&cfg, Some(alpha));

        let sum = game_sum_capped(&v, &w, alpha).expect("grand worths are pinned to alpha");
        match summed_cost_profile(&sum, &cv, &cw) {
            Err(_) => join_rows.iter_mut().for_each(AxiomOutcome::skip),
            Ok(cs) => {
                for (idx, rule) in rules.iter().enumerate() {
                    let combined = rule.evaluate(&sum, &cs).expect("matching dimensions");
                    let left = rule.evaluate(&v, &cv).expect("matching dimensions");
                    let right = rule.evaluate(&w, &cw).expect("matching dimensions");
                    let joined = left.join(&right);
                    if combined == joined {
                        join_rows[idx].pass();
                    } else {
                        join_rows[idx].fail(Counterexample {
                            game: serialize_game_file(&v, &cv),
                            partner: Some(serialize_game_file(&w, &cw)),
                            stage: first_flag_mismatch(&combined, &joined),
                            detail: format!(
                                "the sum evaluates to {combined} but the per-game join is {joined}"
                            ),
                        });
                    }
                }
            }
        }

        let zero_stages: Vec<usize> = (2..=cv.num_stages())
            .filter(|k| v.worth(cv.stage_coalition(k - 1)).is_zero())
            .collect();
        for (idx, rule) in rules.iter().enumerate() {
            if zero_stages.is_empty() {
                zero_rows[idx].skip();
                continue;
            }
            let flags = rule.evaluate(&v, &cv).expect("matching dimensions");
            match zero_stages.iter().find(|k| flags.flag(**k)) {
                None => zero_rows[idx].pass(),
                Some(k) => zero_rows[idx].fail(Counterexample {
                    game: serialize_game_file(&v, &cv),
                    partner: None,
                    stage: Some(*k),
                    detail: format!(
                        "{} raises the stop flag at stage {k} although the coalition examined there had zero worth",
                        rule.name()
                    ),
                }),
            }
        }

        if cfg.n == 3 {
            for (idx, rule) in order_rules.iter().enumerate() {
                match order_variation(*rule, &v, &cv) {
                    None => order_rows[idx].pass(),
                    Some(detail) => order_rows[idx].fail(Counterexample {
                        game: serialize_game_file(&v, &cv),
                        partner: None,
                        stage: None,
                        detail,
                    }),
                }
            }
        } else {
            order_rows.iter_mut().for_each(AxiomOutcome::skip);
        }
    }

    let mut outcomes = join_rows;
    outcomes.extend(zero_rows);
    outcomes.extend(order_rows);
    Ok(AxiomReport { outcomes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::fixtures::{example_costs, example_game};

    #[test]
    fn value_axioms_hold_on_plain_random_games() {
        let report = check_value_axioms(60, &GeneratorConfig::new(3, 17));
        for o in &report.outcomes {
            assert_eq!(o.failed, 0, "{} failed: {:?}", o.name, o.counterexample);
            assert_eq!(o.trials(), 60, "{} must account for every trial", o.name);
        }
        assert_eq!(report.unexpected_failures(), 0);
        assert_eq!(report.outcome("efficiency").unwrap().passed, 60);
        assert_eq!(report.outcome("singleton-fairness").unwrap().passed, 60);
    }

    #[test]
    fn structured_trials_reach_the_conditional_axioms() {
        let mut config = GeneratorConfig::new(3, 400);
        config.structured = true;
        let report = check_value_axioms(90, &config);
        for name in ["partnership-symmetry", "carrier-outsiders", "zero-game-split"] {
            let o = report.outcome(name).unwrap();
            assert!(o.fired() >= 15, "{name} fired only {} times", o.fired());
            assert_eq!(o.failed, 0, "{name} failed: {:?}", o.counterexample);
        }
    }

    #[test]
    fn checkers_catch_a_corrupted_matrix() {
        let game = example_game();
        let profile = example_costs();

        let mut matrix = staged_value(&game, &profile).unwrap();
        assert!(efficiency_violation(&game, &profile, &matrix).is_none());
        matrix.set_entry(0, 1, rat(100));
        let (stage, _) = efficiency_violation(&game, &profile, &matrix)
            .expect("corruption must be detected");
        assert_eq!(stage, 1);

        let mut matrix = staged_value(&game, &profile).unwrap();
        assert!(fairness_violation(&game, &matrix).is_none());
        matrix.set_entry(0, 0, rat(0));
        assert!(fairness_violation(&game, &matrix).is_some());
    }

    #[test]
    fn indicator_suite_documents_the_rules() {
        let report =
            check_indicator_axioms(200, &GeneratorConfig::new(3, 2024), &rat(20)).unwrap();

        // The threshold rule compares worths against the capped grand worth,
        // which is not additive stage by stage.
        let gamma_join = report.outcome("join-additivity(gamma)").unwrap();
        assert!(
            gamma_join.failed > 0,
            "expected capped-sum counterexamples to appear"
        );
        assert!(gamma_join.counterexample.is_some());
        assert_eq!(report.outcome("join-additivity(gammaA)").unwrap().failed, 0);
        assert_eq!(report.outcome("join-additivity(gammaB)").unwrap().failed, 0);

        for rule in ["gamma", "gammaA", "gammaB"] {
            let o = report.outcome(&format!("zero-continuation({rule})")).unwrap();
            assert_eq!(o.failed, 0, "{rule} stops on a zero-worth stage");
            assert!(o.fired() >= 50, "zero-worth stages should be common");
        }

        assert_eq!(report.outcome("order-invariance(gammaA)").unwrap().failed, 0);
        let gb = report.outcome("order-invariance(gammaB)").unwrap();
        assert!(gb.failed > 0, "the zero-worth rule depends on the order");
        assert!(gb.expected_failure);
        assert!(!gb.is_unexpected());

        assert_eq!(report.unexpected_failures(), 1);
    }

    #[test]
    fn order_rows_are_skipped_away_from_three_players() {
        let report = check_indicator_axioms(5, &GeneratorConfig::new(4, 9), &rat(30)).unwrap();
        let o = report.outcome("order-invariance(gammaA)").unwrap();
        assert_eq!(o.skipped, 5);
    }

    #[test]
    fn reports_render_and_serialize() {
        let report = check_indicator_axioms(30, &GeneratorConfig::new(3, 77), &rat(20)).unwrap();
        let text = report.render_text();
        assert!(text.contains("join-additivity(gamma)"));
        assert!(text.contains("order-invariance(gammaB)"));
        let value = report.to_json();
        assert_eq!(
            value["axioms"].as_array().unwrap().len(),
            report.outcomes.len()
        );
        assert!(value["unexpected_failures"].is_number());
    }

    #[test]
    fn alpha_must_be_positive() {
        assert_eq!(
            check_indicator_axioms(1, &GeneratorConfig::new(3, 0), &rat(0)).unwrap_err(),
            GameError::ZeroGrandWorth
        );
    }
}
