use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ExactqError;

/// Arbitrary-precision fraction, always reduced with a positive denominator.
///
/// `num_rational::Ratio` normalises on every construction and arithmetic
/// operation, which is exactly the canonical form the rest of the crate relies
/// on. Its `Display` prints `p` or `p/q`, matching the on-disk encoding.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d` in lowest terms. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses the `"p"` / `"p/q"` encoding used in algebra files and reports.
///
/// The denominator must be written as a strictly positive integer; the
/// numerator may carry a sign. Non-reduced input (`"2/4"`) is accepted and
/// reduced.
pub fn parse_rational(s: &str) -> Result<Rational, ExactqError> {
    let bad = || ExactqError::BadRational(s.to_string());
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let valid_int = |t: &str, signed: bool| {
        let digits = if signed { t.strip_prefix('-').or_else(|| t.strip_prefix('+')).unwrap_or(t) } else { t };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid_int(num, true) {
        return Err(bad());
    }
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = match den {
        None => BigInt::one(),
        Some(d) => {
            if !valid_int(d, false) {
                return Err(bad());
            }
            d.parse().map_err(|_| bad())?
        }
    };
    if d.is_zero() || d.is_negative() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_reduces() {
        assert_eq!(parse_rational("2/4").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("-3").unwrap(), rat(-3));
        assert_eq!(parse_rational("-6/4").unwrap(), ratio(-3, 2));
        assert_eq!(parse_rational("0/7").unwrap(), rat(0));
        assert_eq!(parse_rational("-6/4").unwrap().to_string(), "-3/2");
        assert_eq!(rat(5).to_string(), "5");
    }

    #[test]
    fn rejects_malformed() {
        for s in ["", "1/0", "1/-2", "a", "1/2/3", "1.5", "/3", "3/", "--1"] {
            assert!(parse_rational(s).is_err(), "{s} should be rejected");
        }
    }

    #[test]
    fn stored_reduced_with_positive_denominator() {
        let q = Rational::new(BigInt::from(10), BigInt::from(-4));
        assert_eq!(*q.denom(), BigInt::from(2));
        assert_eq!(*q.numer(), BigInt::from(-5));
    }
}
