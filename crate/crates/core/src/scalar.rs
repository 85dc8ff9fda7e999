//! Exact rational scalars.
//!
//! Every coefficient in the crate is an arbitrary-precision rational; there is
//! no floating point anywhere. `BigRational` keeps fractions reduced with a
//! positive denominator, which is exactly the canonical form the JSON
//! interfaces require.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar.
pub type Scalar = BigRational;

/// Parses `p` or `p/q` into a reduced rational. The denominator must be nonzero.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let bad = || Error::InvalidScalar(text.to_string());
    let mut parts = text.splitn(2, '/');
    let numer = parts.next().ok_or_else(bad)?.trim();
    let numer: BigInt = numer.parse().map_err(|_| bad())?;
    match parts.next() {
        None => Ok(BigRational::from_integer(numer)),
        Some(denom) => {
            let denom: BigInt = denom.trim().parse().map_err(|_| bad())?;
            if denom.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(numer, denom))
        }
    }
}

/// Canonical text form: integers print without the denominator, everything
/// else prints as `p/q` in lowest terms with a positive `q`.
pub fn format_scalar(value: &Scalar) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Shorthand for small integer scalars, mostly used by tests.
pub fn int(value: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(value))
}

/// Shorthand for `p/q` scalars, mostly used by tests.
pub fn ratio(numer: i64, denom: i64) -> Scalar {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn is_zero(value: &Scalar) -> bool {
    value.is_zero()
}

pub fn is_one(value: &Scalar) -> bool {
    value.is_one()
}

pub fn abs(value: &Scalar) -> Scalar {
    value.abs()
}
