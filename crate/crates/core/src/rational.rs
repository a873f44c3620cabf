//! Exact rational arithmetic used throughout the crate.
//!
//! All continuous quantities (c, k, alpha, interval endpoints, chain element
//! values) are arbitrary-precision rationals in canonical form: positive
//! denominator, gcd(|numerator|, denominator) = 1. `BigRational` maintains
//! exactly that form, so it backs the type directly.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = num_rational::BigRational;

/// Rational from a machine integer.
pub fn rat(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Rational from an unsigned machine integer.
pub fn rat_u32(value: u32) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn rat_u64(value: u64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Rational `numer/denom`. Panics if `denom == 0`; intended for literals.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Parses `num/den` or a bare integer, with optional sign.
pub fn parse_rational(text: &str) -> Result<Rational, String> {
    let text = text.trim();
    let (numer_text, denom_text) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let numer: BigInt = numer_text
        .parse()
        .map_err(|_| format!("`{text}` is not a rational (bad numerator)"))?;
    let denom: BigInt = denom_text
        .parse()
        .map_err(|_| format!("`{text}` is not a rational (bad denominator)"))?;
    if denom.is_zero() {
        return Err(format!("`{text}` has a zero denominator"));
    }
    Ok(Rational::new(numer, denom))
}

/// The value as `u32` if it is an integer in range.
pub fn to_u32(r: &Rational) -> Option<u32> {
    if r.is_integer() {
        r.to_integer().to_u32()
    } else {
        None
    }
}

/// `Some(true)` if an even integer, `Some(false)` if an odd integer, `None` otherwise.
pub fn integer_parity_even(r: &Rational) -> Option<bool> {
    if r.is_integer() {
        let two = BigInt::from(2);
        Some((r.to_integer() % two).is_zero())
    } else {
        None
    }
}

/// True when `r >= 1`.
pub fn at_least_one(r: &Rational) -> bool {
    *r >= Rational::one()
}

/// True when `r > 0`.
pub fn positive(r: &Rational) -> bool {
    r.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("5").unwrap(), rat(5));
        assert_eq!(parse_rational("13/2").unwrap(), ratio(13, 2));
        assert_eq!(parse_rational("-3/4").unwrap(), ratio(-3, 4));
        assert_eq!(parse_rational(" 6/4 ").unwrap(), ratio(3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1.5").is_err());
    }

    #[test]
    fn display_is_num_slash_den() {
        assert_eq!(ratio(13, 2).to_string(), "13/2");
        assert_eq!(rat(9).to_string(), "9");
        assert_eq!(ratio(-6, 4).to_string(), "-3/2");
    }

    #[test]
    fn parity_of_integers_only() {
        assert_eq!(integer_parity_even(&rat(4)), Some(true));
        assert_eq!(integer_parity_even(&rat(-3)), Some(false));
        assert_eq!(integer_parity_even(&ratio(1, 2)), None);
    }
}
