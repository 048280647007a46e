//! The JSON game-file format: players, worths, costs and an optional
//! examination order, with exact-rational values.
//!
//! ```json
//! {
//!   "players": 3,
//!   "worth": { "1": 5, "2": 3, "3": 0, "1,2": 10, "1,3": 8, "2,3": 5, "N": 20 },
//!   "costs": { "1,2": 3, "1,3": 2, "2,3": 2 },
//!   "order": ["1,3", "2,3", "1,2"]
//! }
//! ```
//!
//! Rational values may be JSON integers, finite decimals (converted
//! exactly), or strings of the form `"p/q"` with `q > 0`. Output always uses
//! the canonical reduced form: a bare integer when the denominator is 1,
//! `"p/q"` otherwise.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{Map, Value};

use crate::coalition::{Coalition, KeyError};
use crate::cost::{make_cost_profile, make_cost_profile_with_order, CostProfile};
use crate::error::GameError;
use crate::game::{make_full_game, FullGame, Rational};

/// Failure to read a game file. `Game` wraps semantic validation failures;
/// every other variant is a structural problem with the document itself.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FileError {
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("{0}")]
    Shape(String),
    #[error("bad coalition key {key:?} in {field}: {source}")]
    Key {
        field: &'static str,
        key: String,
        source: KeyError,
    },
    #[error("{context}: {token:?} is not a rational (expected an integer, a finite decimal, or \"p/q\" with q > 0)")]
    Number { context: String, token: String },
    #[error(transparent)]
    Game(#[from] GameError),
}

impl FileError {
    /// True when the error is a validation failure of an otherwise
    /// well-formed document, as opposed to a parse failure.
    pub fn is_validation(&self) -> bool {
        matches!(self, FileError::Game(_))
    }
}

fn pow10(exp: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), exp as usize)
}

/// Parses the textual form of a rational: `p/q`, an integer, or a finite
/// decimal with optional exponent.
pub fn rational_from_text(text: &str) -> Option<Rational> {
    let text = text.trim();
    if let Some((p, q)) = text.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q <= BigInt::zero() {
            return None;
        }
        return Some(Rational::new(p, q));
    }
    let (mantissa, exp) = match text.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().ok()?),
        None => (text, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    if frac_part.contains(['+', '-']) || (int_part.is_empty() && frac_part.is_empty()) {
        return None;
    }
    let digits: BigInt = format!("{int_part}{frac_part}").parse().ok()?;
    let shift = exp.checked_sub(i32::try_from(frac_part.len()).ok()?)?;
    if shift.unsigned_abs() > 10_000 {
        return None;
    }
    if shift >= 0 {
        Some(Rational::from_integer(digits * pow10(shift as u32)))
    } else {
        Some(Rational::new(digits, pow10(shift.unsigned_abs())))
    }
}

/// Canonical text for a rational: bare integer or reduced `p/q`.
pub fn rational_to_text(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn rational_from_value(value: &Value, context: &str) -> Result<Rational, FileError> {
    let token = match value {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        other => {
            return Err(FileError::Number {
                context: context.to_string(),
                token: other.to_string(),
            })
        }
    };
    rational_from_text(&token).ok_or_else(|| FileError::Number {
        context: context.to_string(),
        token,
    })
}

/// Canonical JSON encoding of a rational: a bare number for integers, a
/// `"p/q"` string otherwise.
pub fn rational_to_value(r: &Rational) -> Value {
    if r.is_integer() {
        let digits = r.numer().to_string();
        Value::Number(digits.parse().expect("integer digits form a JSON number"))
    } else {
        Value::String(rational_to_text(r))
    }
}

fn object<'a>(value: &'a Value, what: &str) -> Result<&'a Map<String, Value>, FileError> {
    value
        .as_object()
        .ok_or_else(|| FileError::Shape(format!("{what} must be a JSON object")))
}

fn coalition_map(
    doc: &Map<String, Value>,
    field: &'static str,
    n: usize,
    required: bool,
) -> Result<Option<BTreeMap<Coalition, Rational>>, FileError> {
    let value = match doc.get(field) {
        Some(v) => v,
        None if required => {
            return Err(FileError::Shape(format!("missing required field \"{field}\"")))
        }
        None => return Ok(None),
    };
    let entries = object(value, &format!("\"{field}\""))?;
    let mut map = BTreeMap::new();
    for (key, raw) in entries {
        let coalition = Coalition::parse_key(key, n).map_err(|source| FileError::Key {
            field,
            key: key.clone(),
            source,
        })?;
        let rational = rational_from_value(raw, &format!("{field}[{key:?}]"))?;
        map.insert(coalition, rational);
    }
    Ok(Some(map))
}

/// Parses a game file into a validated game and cost profile. When the
/// document supplies an `order` it is validated against the costs; otherwise
/// the order is derived from the costs and the bitmask tie-break.
pub fn parse_game_file(text: &str) -> Result<(FullGame, CostProfile), FileError> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| FileError::Json(e.to_string()))?;
    let doc = object(&value, "the game file")?;

    let players = doc
        .get("players")
        .ok_or_else(|| FileError::Shape("missing required field \"players\"".to_string()))?;
    let n = players
        .as_u64()
        .and_then(|v| usize::try_from(v).ok())
        .ok_or_else(|| FileError::Shape("\"players\" must be a nonnegative integer".to_string()))?;
    if n < 2 {
        return Err(GameError::PlayerCountTooSmall(n).into());
    }
    if n > crate::coalition::MAX_PLAYERS {
        return Err(GameError::PlayerCountTooLarge { got: n, max: crate::coalition::MAX_PLAYERS }.into());
    }

    let worths = coalition_map(doc, "worth", n, true)?.expect("required field");
    let game = make_full_game(n, &worths)?;

    let costs = coalition_map(doc, "costs", n, false)?.unwrap_or_default();

    let profile = match doc.get("order") {
        None => make_cost_profile(&game, &costs)?,
        Some(raw) => {
            let entries = raw
                .as_array()
                .ok_or_else(|| FileError::Shape("\"order\" must be an array of coalition keys".to_string()))?;
            let mut order = Vec::with_capacity(entries.len());
            for entry in entries {
                let key = entry.as_str().ok_or_else(|| {
                    FileError::Shape("\"order\" entries must be strings".to_string())
                })?;
                let coalition =
                    Coalition::parse_key(key, n).map_err(|source| FileError::Key {
                        field: "order",
                        key: key.to_string(),
                        source,
                    })?;
                order.push(coalition);
            }
            make_cost_profile_with_order(&game, &costs, &order)?
        }
    };
    Ok((game, profile))
}

/// Serializes a game and profile back into the file format. Output is
/// deterministic: object keys are sorted and the examination order is always
/// written out.
pub fn serialize_game_file(game: &FullGame, profile: &CostProfile) -> String {
    let n = game.n();
    let mut worth = Map::new();
    for s in Coalition::all(n) {
        if !s.is_empty() {
            worth.insert(s.key(), rational_to_value(game.worth(s)));
        }
    }
    let mut costs = Map::new();
    for s in Coalition::non_trivial(n) {
        costs.insert(s.key(), rational_to_value(profile.cost(s)));
    }
    let order: Vec<Value> = profile
        .order()
        .iter()
        .map(|s| Value::String(s.key()))
        .collect();

    let mut doc = Map::new();
    doc.insert("players".to_string(), Value::from(n as u64));
    doc.insert("worth".to_string(), Value::Object(worth));
    doc.insert("costs".to_string(), Value::Object(costs));
    doc.insert("order".to_string(), Value::Array(order));
    let mut text = serde_json::to_string_pretty(&Value::Object(doc)).expect("serializable document");
    text.push('\n');
    text
}
