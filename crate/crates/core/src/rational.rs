//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use std::str::FromStr;

/// Arbitrary-precision rational, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {0:?} (expected \"p\" or \"p/q\")")]
pub struct ParseRationalError(pub String);

/// Parses `"p"` or `"p/q"`; a zero denominator is rejected.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let t = s.trim();
    if let Some((_, d)) = t.split_once('/') {
        if d.trim().trim_start_matches(['+', '-']).chars().all(|c| c == '0') {
            return Err(ParseRationalError(s.to_string()));
        }
    }
    Rational::from_str(t).map_err(|_| ParseRationalError(s.to_string()))
}

pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub(crate) fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

pub(crate) fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, j| acc * BigInt::from(j))
}

pub(crate) fn rat_pow(r: &Rational, k: u32) -> Rational {
    let mut acc = rat(1);
    for _ in 0..k {
        acc *= r;
    }
    acc
}

pub(crate) fn is_zero(r: &Rational) -> bool {
    num_traits::Zero::is_zero(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_normalise() {
        assert_eq!(parse_rational("6/4").unwrap(), ratio(3, 2));
        assert_eq!(parse_rational("-3/2").unwrap(), ratio(-3, 2));
        assert_eq!(parse_rational(" 5 ").unwrap(), rat(5));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(format_rational(&ratio(2, -4)), "-1/2");
    }

    #[test]
    fn sum_is_reduced() {
        let s = ratio(1, 6) + ratio(1, 3);
        assert_eq!(s, ratio(1, 2));
        assert_eq!(s.denom(), &BigInt::from(2));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 5), BigInt::from(0));
        assert_eq!(factorial(4), BigInt::from(24));
    }
}
