//! Exit rules: indicator functions that decide when to stop paying for
//! coalition-worth examinations, and the stopping semantics built on them.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::cost::CostProfile;
use crate::error::{GameError, Result};
use crate::game::{FullGame, Rational};
use crate::values::staged_value;

/// A boolean per examination stage `k = 1 … 2^n − n − 2`. A 1 at stage `k`
/// means examinations stop before the stage-`k` examination is paid for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndicatorVector(Vec<bool>);

impl IndicatorVector {
    pub fn new(flags: Vec<bool>) -> IndicatorVector {
        IndicatorVector(flags)
    }

    pub fn flags(&self) -> &[bool] {
        &self.0
    }

    /// The flag at 1-based stage `k`.
    pub fn flag(&self, k: usize) -> bool {
        self.0[k - 1]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Elementwise boolean join with another vector of the same length.
    pub fn join(&self, other: &IndicatorVector) -> IndicatorVector {
        debug_assert_eq!(self.len(), other.len());
        IndicatorVector(self.0.iter().zip(&other.0).map(|(a, b)| *a || *b).collect())
    }
}

impl fmt::Display for IndicatorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered: Vec<&str> = self.0.iter().map(|b| if *b { "1" } else { "0" }).collect();
        write!(f, "({})", rendered.join(","))
    }
}

/// The raw indicator plus the closed stopping semantics: the first 1 stops
/// everything after it, so the number of examinations actually performed is
/// one less than the first flagged stage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExitTrace {
    pub raw: IndicatorVector,
    /// First stage whose flag is set, if any.
    pub stop_stage: Option<usize>,
    pub examinations_performed: usize,
}

/// Applies the stopping semantics to a raw indicator vector.
pub fn effective_stop(raw: IndicatorVector) -> ExitTrace {
    let stop_stage = raw.flags().iter().position(|f| *f).map(|idx| idx + 1);
    let examinations_performed = match stop_stage {
        Some(k) => k - 1,
        None => raw.len(),
    };
    ExitTrace { raw, stop_stage, examinations_performed }
}

/// The proposed rule: stop once the worth just examined is at least the
/// decreased grand worth, i.e. `v(S_{k−1}) ≥ v(N) − Σ_{l<k} c(S_l)`; never
/// stop at stage 1.
pub fn gamma(game: &FullGame, profile: &CostProfile) -> Result<IndicatorVector> {
    if game.n() != profile.n() {
        return Err(GameError::DimensionMismatch(game.n(), profile.n()));
    }
    let grand_worth = game.worth(game.grand());
    let flags = (1..=profile.num_stages())
        .map(|k| {
            if k == 1 {
                return false;
            }
            let examined = profile.stage_coalition(k - 1);
            game.worth(examined) >= &(grand_worth - profile.accrued(k - 1))
        })
        .collect();
    Ok(IndicatorVector::new(flags))
}

/// The always-examine rule: every flag is 0.
pub fn gamma_a(_game: &FullGame, profile: &CostProfile) -> IndicatorVector {
    IndicatorVector::new(vec![false; profile.num_stages()])
}

/// The cost-averse rule: continue only while the last examined worth was
/// zero; never stop at stage 1.
pub fn gamma_b(game: &FullGame, profile: &CostProfile) -> IndicatorVector {
    let flags = (1..=profile.num_stages())
        .map(|k| k != 1 && !game.worth(profile.stage_coalition(k - 1)).is_zero())
        .collect();
    IndicatorVector::new(flags)
}

/// The three exit rules, selectable by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitRule {
    Gamma,
    GammaA,
    GammaB,
}

impl ExitRule {
    pub fn evaluate(self, game: &FullGame, profile: &CostProfile) -> Result<IndicatorVector> {
        match self {
            ExitRule::Gamma => gamma(game, profile),
            ExitRule::GammaA => Ok(gamma_a(game, profile)),
            ExitRule::GammaB => Ok(gamma_b(game, profile)),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ExitRule::Gamma => "gamma",
            ExitRule::GammaA => "gammaA",
            ExitRule::GammaB => "gammaB",
        }
    }
}

impl FromStr for ExitRule {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<ExitRule, String> {
        match s {
            "gamma" => Ok(ExitRule::Gamma),
            "gammaA" => Ok(ExitRule::GammaA),
            "gammaB" => Ok(ExitRule::GammaB),
            other => Err(format!("unknown exit rule {other:?}, expected gamma, gammaA or gammaB")),
        }
    }
}

/// Runs the examination process under a rule: evaluates the indicator,
/// closes it into a trace, and returns the staged-value column at the number
/// of examinations actually performed.
pub fn run_examination(
    game: &FullGame,
    profile: &CostProfile,
    rule: ExitRule,
) -> Result<(ExitTrace, Vec<Rational>)> {
    let raw = rule.evaluate(game, profile)?;
    let trace = effective_stop(raw);
    let matrix = staged_value(game, profile)?;
    let payoffs = matrix.column(trace.examinations_performed).to_vec();
    Ok((trace, payoffs))
}
