//! Exact rational numbers and their `p/q` text form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Parses `p/q` (q > 0) or a bare integer `p`. The result is normalized.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::InvalidRational(text.to_string());
    let trimmed = text.trim();
    let (num, den) = match trimmed.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (trimmed, "1"),
    };
    if num.is_empty() || den.is_empty() || den.starts_with(['-', '+']) {
        return Err(bad());
    }
    let p: BigInt = num.parse().map_err(|_| bad())?;
    let q: BigInt = den.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

/// Renders as `p/q`, or `p` when the denominator is one.
pub fn format_rational(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn integer(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Checks that `weights` is a probability vector: nonnegative, summing exactly to one.
pub fn validate_distribution(weights: &[Rational]) -> Result<()> {
    if weights.is_empty() {
        return Err(Error::NotAPmf("no entries".into()));
    }
    if let Some(w) = weights.iter().find(|w| w.is_negative()) {
        return Err(Error::NotAPmf(format!("negative entry {}", format_rational(w))));
    }
    let total: Rational = weights.iter().sum();
    if !total.is_one() {
        return Err(Error::NotAPmf(format!("entries sum to {}", format_rational(&total))));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_normalizes() {
        assert_eq!(parse_rational("2/4").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("-3/6").unwrap(), ratio(-1, 2));
        assert_eq!(parse_rational(" 7 ").unwrap(), integer(7));
        assert_eq!(format_rational(&parse_rational("10/4").unwrap()), "5/2");
        assert_eq!(format_rational(&integer(0)), "0");
    }

    #[test]
    fn rejects_malformed() {
        for text in ["", "1/0", "1/-2", "a/b", "1/", "/2", "0.5", "1/2/3"] {
            assert!(parse_rational(text).is_err(), "{text}");
        }
    }

    #[test]
    fn distribution_checks() {
        assert!(validate_distribution(&[ratio(1, 2), ratio(1, 2)]).is_ok());
        assert!(validate_distribution(&[ratio(9, 10)]).is_err());
        assert!(validate_distribution(&[ratio(3, 2), ratio(-1, 2)]).is_err());
        assert!(validate_distribution(&[]).is_err());
    }
}
