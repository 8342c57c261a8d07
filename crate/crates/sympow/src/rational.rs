//! Exact rational scalars: arbitrary-precision, always reduced.
//!
//! Backed by `num_rational::BigRational`, which keeps the invariants this
//! crate relies on (reduced fraction, positive denominator). Helpers here
//! cover construction from integers and the decimal-string serialization the
//! machine output format uses.

use num_bigint::BigInt;
use num_rational::BigRational;

pub type Rational = BigRational;

/// `n` as a rational.
pub fn rational_int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// `n / d` reduced. Panics on a zero denominator.
pub fn rational(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `"3/2"` for proper fractions, `"3"` for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
