//! Exact rational scalars and their text forms.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses an integer (`-12`), a fraction (`-9/8`) or a finite decimal
/// (`0.125`, `-1.5e-3`). A leading U+2212 minus sign is accepted.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::InvalidRational(text.to_string());
    let s = text.trim().replace('\u{2212}', "-");
    if s.is_empty() {
        return Err(bad());
    }

    if let Some((num, den)) = s.split_once('/') {
        let num = parse_int(num.trim()).ok_or_else(bad)?;
        let den = parse_int(den.trim()).ok_or_else(bad)?;
        if den.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(num, den));
    }

    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => {
            let exp: i64 = s[pos + 1..].parse().map_err(|_| bad())?;
            (&s[..pos], exp)
        }
        None => (s.as_str(), 0),
    };

    let (negative, body) = match mantissa.as_bytes().first() {
        Some(b'-') => (true, &mantissa[1..]),
        Some(b'+') => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (whole, fraction) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && fraction.is_empty() {
        return Err(bad());
    }
    if !whole.bytes().chain(fraction.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }

    let digits = format!("{whole}{fraction}");
    let mut value = Rational::from_integer(digits.parse::<BigInt>().map_err(|_| bad())?);
    let scale = exponent - fraction.len() as i64;
    let ten = BigInt::from(10);
    if scale >= 0 {
        value *= Rational::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        value /= Rational::from_integer(num_traits::pow(ten, (-scale) as usize));
    }
    Ok(if negative { -value } else { value })
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// `p/q`, or plain `p` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Fixed-point decimal rendering with `digits` places, rounded half away
/// from zero. Approximate by construction.
pub fn format_decimal(r: &Rational, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = r.abs() * Rational::from_integer(scale.clone());
    let (q, rem) = scaled.numer().div_rem(scaled.denom());
    let twice = rem * 2;
    let rounded = if &twice >= scaled.denom() { q + BigInt::one() } else { q };

    let (int_part, frac_part) = rounded.div_rem(&scale);
    let sign = if r.is_negative() && !rounded.is_zero() { "-" } else { "" };
    if digits == 0 {
        return format!("{sign}{int_part}");
    }
    let frac_digits = frac_part.to_string();
    format!("{sign}{int_part}.{}{frac_digits}", "0".repeat(digits - frac_digits.len()))
}

/// Least common multiple of the denominators of `values` (1 for an empty slice).
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Sign of a rational as -1, 0 or 1.
pub fn signum(r: &Rational) -> i8 {
    match r.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fraction_with_unicode_minus() {
        assert_eq!(parse_rational("\u{2212}9/8").unwrap(), frac(-9, 8));
        assert_eq!(parse_rational("-9/8").unwrap(), frac(-9, 8));
        assert_eq!(parse_rational("6/4").unwrap(), frac(3, 2));
        assert_eq!(parse_rational("3/-6").unwrap(), frac(-1, 2));
    }

    #[test]
    fn parses_decimals() {
        assert_eq!(parse_rational("0.125").unwrap(), frac(1, 8));
        assert_eq!(parse_rational("-1.5").unwrap(), frac(-3, 2));
        assert_eq!(parse_rational(".5").unwrap(), frac(1, 2));
        assert_eq!(parse_rational("2.").unwrap(), int(2));
        assert_eq!(parse_rational("1.5e2").unwrap(), int(150));
        assert_eq!(parse_rational("25E-2").unwrap(), frac(1, 4));
        assert_eq!(parse_rational("42").unwrap(), int(42));
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "abc", "1/0", "1/", "/2", "1.2.3", "-", ".", "1e", "0x10", "1/2/3"] {
            assert!(parse_rational(s).is_err(), "{s:?} should not parse");
        }
    }

    #[test]
    fn formats_integers_plainly() {
        assert_eq!(format_rational(&int(-7)), "-7");
        assert_eq!(format_rational(&frac(10, -4)), "-5/2");
    }

    #[test]
    fn decimal_rounding() {
        assert_eq!(format_decimal(&frac(1, 3), 4), "0.3333");
        assert_eq!(format_decimal(&frac(2, 3), 4), "0.6667");
        assert_eq!(format_decimal(&frac(-1, 8), 2), "-0.13");
        assert_eq!(format_decimal(&frac(-1, 1000), 2), "0.00");
        assert_eq!(format_decimal(&frac(19, 2), 0), "10");
        assert_eq!(format_decimal(&int(3), 3), "3.000");
        assert_eq!(format_decimal(&frac(1, 48), 6), "0.020833");
    }
}
