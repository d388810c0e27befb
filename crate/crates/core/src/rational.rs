//! Exact rational numbers.
//!
//! Every signature value in this crate is an exact fraction; nothing is ever
//! rounded. The representation is [`num_rational::BigRational`], which keeps
//! fractions in lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

/// Arbitrary-precision rational number, always in lowest terms.
pub type Rational = num_rational::BigRational;

/// Shorthand for a rational from small integers. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn rat_int<T: Into<BigInt>>(n: T) -> Rational {
    Rational::from_integer(n.into())
}

/// Best-effort `f64` approximation, for display only.
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}
