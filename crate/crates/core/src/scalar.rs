//! Exact rational scalars and their canonical text form (`"p/q"` or `"n"`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Ground-field element. `BigRational` keeps itself reduced with a positive
/// denominator, which is the canonical form every comparison relies on.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

pub fn to_f64(s: &Scalar) -> f64 {
    s.to_f64().unwrap_or_else(|| {
        // numerator/denominator may each overflow f64 even when the ratio fits
        let n = s.numer().to_f64().unwrap_or(f64::NAN);
        let d = s.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Parses `-?digits(/digits)?`, surrounding whitespace allowed.
pub fn parse_rational(text: &str) -> Result<Scalar> {
    let t = text.trim();
    let bad = || Error::InvalidRational(text.to_string());
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (t, None),
    };
    let digits = num.strip_prefix('-').unwrap_or(num);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = match den {
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            d.parse().map_err(|_| bad())?
        }
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(Error::ZeroDenominator(text.to_string()));
    }
    Ok(Scalar::new(n, d))
}

/// Canonical reduced text: `"n"` for integers, `"p/q"` otherwise.
pub fn emit_rational(s: &Scalar) -> String {
    if s.is_integer() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

pub fn abs(s: &Scalar) -> Scalar {
    s.abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_and_reduces() {
        assert_eq!(parse_rational("3/6").unwrap(), ratio(1, 2));
        assert_eq!(emit_rational(&parse_rational("3/6").unwrap()), "1/2");
        assert_eq!(emit_rational(&parse_rational("-0").unwrap()), "0");
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert_eq!(emit_rational(&int(7)), "7");
    }

    #[test]
    fn rejects_malformed() {
        for t in ["", "-", "1/", "/2", "1.5", "a", "1/2/3", "+3", "1/-2"] {
            assert!(
                matches!(parse_rational(t), Err(Error::InvalidRational(_))),
                "{t}"
            );
        }
        assert!(matches!(
            parse_rational("1/0"),
            Err(Error::ZeroDenominator(_))
        ));
    }

    #[test]
    fn negative_denominator_never_emitted() {
        assert_eq!(emit_rational(&ratio(1, -3)), "-1/3");
    }

    proptest! {
        #[test]
        fn round_trip(p in -1_000_000i64..1_000_000, q in 1i64..1_000_000) {
            let s = ratio(p, q);
            let text = emit_rational(&s);
            prop_assert_eq!(parse_rational(&text).unwrap(), s.clone());
            prop_assert_eq!(emit_rational(&parse_rational(&text).unwrap()), text);
        }
    }
}
