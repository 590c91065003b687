//! The scalar field: arbitrary-precision rationals.
//!
//! Scalars are [`num_rational::BigRational`] values, always stored reduced
//! with a positive denominator. They display as `p/q`, or plain `p` when the
//! denominator is 1, and parse back from either form.

use alloc::string::String;
use alloc::string::ToString;

use num_bigint::BigInt;

pub use num_rational::BigRational as Rational;
pub use num_traits::{One, Signed, Zero};

/// The rational `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parse `p/q` or `p`. Rejects zero denominators and malformed input.
pub fn parse(s: &str) -> Option<Rational> {
    s.trim().parse::<Rational>().ok()
}

/// Render as `p/q`, or `p` when the denominator is 1.
pub fn format(r: &Rational) -> String {
    r.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["3/4", "-3/4", "0", "7", "-12"] {
            let r = parse(s).unwrap();
            assert_eq!(format(&r), s);
        }
    }

    #[test]
    fn parse_normalizes_sign_and_gcd() {
        assert_eq!(parse("2/4").unwrap(), rat(1, 2));
        assert_eq!(parse("3/-6").unwrap(), rat(-1, 2));
        assert_eq!(format(&rat(3, -6)), "-1/2");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse("1/0").is_none());
        assert!(parse("a/b").is_none());
        assert!(parse("").is_none());
    }
}
