//! JSON game documents.
//!
//! ```json
//! { "name": "rps", "players": 2, "strategies": [3, 3],
//!   "payoffs": [[0, -1, 1, ...], [0, 1, -1, ...]] }
//! ```
//!
//! Entries may be JSON integers or decimals, `"p/q"` strings, or decimal
//! strings. Serialization emits plain integers when the denominator is one
//! and `"p/q"` strings otherwise.

use serde_json::{Map, Number, Value};

use super::model::Game;
use super::space::{GameSpace, DEFAULT_SPACE_CAP};
use crate::error::{Error, Result};
use crate::linalg::{format_rational, parse_rational, Rational};

pub fn parse_game(text: &str) -> Result<Game> {
    parse_game_with_cap(text, DEFAULT_SPACE_CAP)
}

pub fn parse_game_with_cap(text: &str, cap: usize) -> Result<Game> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    game_from_json(&value, cap)
}

pub fn serialize_game(g: &Game) -> String {
    serde_json::to_string_pretty(&game_to_json(g)).expect("JSON values always serialize")
}

pub fn game_from_json(value: &Value, cap: usize) -> Result<Game> {
    let obj = value.as_object().ok_or_else(|| Error::Malformed("top level must be an object".into()))?;

    let players = obj
        .get("players")
        .ok_or_else(|| Error::Malformed("missing \"players\"".into()))?
        .as_u64()
        .filter(|&n| n >= 1)
        .ok_or_else(|| Error::Malformed("\"players\" must be a positive integer".into()))?;

    let strategies = obj
        .get("strategies")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Malformed("\"strategies\" must be an array".into()))?
        .iter()
        .map(|v| {
            v.as_u64()
                .and_then(|k| usize::try_from(k).ok())
                .ok_or_else(|| Error::Malformed("strategy counts must be nonnegative integers".into()))
        })
        .collect::<Result<Vec<usize>>>()?;
    if strategies.len() as u64 != players {
        return Err(Error::Malformed(format!(
            "\"players\" is {players} but \"strategies\" lists {} counts",
            strategies.len()
        )));
    }
    let space = GameSpace::with_cap(strategies, cap)?;

    let rows = obj
        .get("payoffs")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Malformed("\"payoffs\" must be an array of arrays".into()))?;
    let rows = rows
        .iter()
        .enumerate()
        .map(|(i, row)| row.as_array().ok_or_else(|| Error::Malformed(format!("payoffs[{i}] must be an array"))))
        .collect::<Result<Vec<_>>>()?;
    if rows.len() != space.players() {
        return Err(Error::PayoffCountMismatch(format!(
            "expected {} payoff rows, got {}",
            space.players(),
            rows.len()
        )));
    }
    let payoffs = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            if row.len() != space.profiles() {
                return Err(Error::PayoffCountMismatch(format!(
                    "payoffs[{i}] has {} entries, expected {}",
                    row.len(),
                    space.profiles()
                )));
            }
            row.iter()
                .enumerate()
                .map(|(j, v)| entry_from_json(v).map_err(|e| Error::Malformed(format!("payoffs[{i}][{j}]: {e}"))))
                .collect()
        })
        .collect::<Result<Vec<Vec<Rational>>>>()?;

    let game = Game::new(space, payoffs)?;
    match obj.get("name") {
        None | Some(Value::Null) => Ok(game),
        Some(Value::String(name)) => Ok(game.with_name(name.clone())),
        Some(_) => Err(Error::Malformed("\"name\" must be a string".into())),
    }
}

fn entry_from_json(v: &Value) -> Result<Rational> {
    match v {
        // With arbitrary precision enabled the number keeps its source text.
        Value::Number(n) => parse_rational(&n.to_string()),
        Value::String(s) => parse_rational(s),
        other => Err(Error::InvalidRational(other.to_string())),
    }
}

pub fn game_to_json(g: &Game) -> Value {
    let mut obj = Map::new();
    if let Some(name) = g.name() {
        obj.insert("name".into(), Value::String(name.to_string()));
    }
    obj.insert("players".into(), Value::from(g.space().players()));
    obj.insert(
        "strategies".into(),
        Value::Array(g.space().strategy_counts().iter().map(|&k| Value::from(k)).collect()),
    );
    obj.insert(
        "payoffs".into(),
        Value::Array(
            g.payoff_rows().iter().map(|row| Value::Array(row.iter().map(rational_to_json).collect())).collect(),
        ),
    );
    Value::Object(obj)
}

/// JSON integer when the denominator is one, `"p/q"` string otherwise.
pub fn rational_to_json(r: &Rational) -> Value {
    if r.is_integer() {
        let text = r.numer().to_string();
        Value::Number(text.parse::<Number>().expect("integer text is a JSON number"))
    } else {
        Value::String(format_rational(r))
    }
}
