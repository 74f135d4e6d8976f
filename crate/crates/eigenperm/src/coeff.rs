//! Exact rational coefficients.
//!
//! Sequence entries and series coefficients are arbitrary-precision
//! rationals, always stored in lowest terms with a positive denominator.
//! No rounding ever occurs anywhere in this crate.

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational coefficient.
///
/// Backed by [`num::BigRational`], which keeps values reduced with a
/// positive denominator by construction.
pub type Coeff = BigRational;

/// Coefficient from a machine integer.
pub fn coeff_int(v: i64) -> Coeff {
    Coeff::from_integer(BigInt::from(v))
}

/// Coefficient p/q from machine integers. Panics when `q == 0`.
pub fn coeff_rat(p: i64, q: i64) -> Coeff {
    assert!(q != 0, "zero denominator");
    Coeff::new(BigInt::from(p), BigInt::from(q))
}

/// Parse a coefficient written as an integer (`-12`) or a ratio (`3/4`).
pub fn parse_coeff(s: &str) -> Result<Coeff> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt> {
        t.parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("invalid integer {t:?}")))
    };
    match s.split('/').collect::<Vec<_>>().as_slice() {
        [n] => Ok(Coeff::from_integer(parse_int(n)?)),
        [n, d] => {
            let numer = parse_int(n)?;
            let denom = parse_int(d)?;
            if denom.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Coeff::new(numer, denom))
        }
        _ => Err(Error::Parse(format!("invalid coefficient {s:?}"))),
    }
}

/// Exact non-negative square root, when the value is the square of a
/// rational. `None` otherwise (no approximation is attempted).
pub fn rational_sqrt(c: &Coeff) -> Option<Coeff> {
    if c.is_negative() {
        return None;
    }
    if c.is_zero() {
        return Some(Coeff::zero());
    }
    // Numerator and denominator are coprime, so the value is a rational
    // square iff both are perfect squares.
    let sn = c.numer().sqrt();
    let sd = c.denom().sqrt();
    if &(&sn * &sn) == c.numer() && &(&sd * &sd) == c.denom() {
        Some(Coeff::new(sn, sd))
    } else {
        None
    }
}

/// True when the coefficient is an integer.
pub fn is_integer(c: &Coeff) -> bool {
    c.denom().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_integer_and_ratio() {
        assert_eq!(parse_coeff("42").unwrap(), coeff_int(42));
        assert_eq!(parse_coeff("-3").unwrap(), coeff_int(-3));
        assert_eq!(parse_coeff("3/4").unwrap(), coeff_rat(3, 4));
        assert_eq!(parse_coeff(" 6/8 ").unwrap(), coeff_rat(3, 4));
        assert_eq!(parse_coeff("-2/-4").unwrap(), coeff_rat(1, 2));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_coeff("").is_err());
        assert!(parse_coeff("1/0").is_err());
        assert!(parse_coeff("1/2/3").is_err());
        assert!(parse_coeff("x").is_err());
    }

    #[test]
    fn sqrt_of_squares() {
        assert_eq!(rational_sqrt(&coeff_int(4)), Some(coeff_int(2)));
        assert_eq!(rational_sqrt(&coeff_rat(4, 9)), Some(coeff_rat(2, 3)));
        assert_eq!(rational_sqrt(&coeff_int(0)), Some(coeff_int(0)));
        assert_eq!(rational_sqrt(&coeff_int(2)), None);
        assert_eq!(rational_sqrt(&coeff_rat(1, 3)), None);
        assert_eq!(rational_sqrt(&coeff_int(-4)), None);
    }
}
