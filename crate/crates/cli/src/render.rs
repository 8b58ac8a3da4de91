use std::io::Write;

use gamedecomp::game::game_to_json;
use gamedecomp::linalg::{format_decimal, format_rational};
use gamedecomp::{Game, Matrix, Rational};
use serde_json::Value;

/// Places used for CSV output when `--decimal` is not given.
pub const DEFAULT_CSV_DIGITS: usize = 6;

/// Renders rationals exactly as `p/q` strings, or as rounded decimals
/// when a digit count is set.
#[derive(Clone, Copy, Debug)]
pub struct Render {
    decimal: Option<usize>,
}

impl Render {
    pub fn new(decimal: Option<usize>) -> Self {
        Self { decimal }
    }

    pub fn number(&self, r: &Rational) -> Value {
        match self.decimal {
            None => Value::String(format_rational(r)),
            Some(d) => Value::String(format_decimal(r, d)),
        }
    }

    pub fn numbers(&self, values: &[Rational]) -> Value {
        Value::Array(values.iter().map(|v| self.number(v)).collect())
    }

    /// A game document that parses back as a game. Exact mode keeps the
    /// library's own serialization.
    pub fn game(&self, g: &Game) -> Value {
        let mut doc = game_to_json(g);
        if self.decimal.is_some() {
            let rows = g.payoff_rows().iter().map(|row| self.numbers(row)).collect();
            doc["payoffs"] = Value::Array(rows);
        }
        doc
    }

    pub fn matrix(&self, m: &Matrix) -> Value {
        Value::Array((0..m.rows()).map(|r| self.numbers(m.row(r))).collect())
    }

    /// Label stored in every document so approximate output is never
    /// mistaken for exact output.
    pub fn arithmetic(&self) -> Value {
        match self.decimal {
            None => Value::String("exact".into()),
            Some(d) => Value::String(format!("approximate: decimals rounded to {d} places")),
        }
    }
}

pub fn write_csv(out: impl Write, m: &Matrix, digits: usize) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in 0..m.rows() {
        w.write_record(m.row(r).iter().map(|v| format_decimal(v, digits)))?;
    }
    w.flush()?;
    Ok(())
}
