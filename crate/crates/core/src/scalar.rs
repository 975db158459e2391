//! Scalar field for element coefficients.
//!
//! Every coefficient in this crate is an exact arbitrary-precision fraction.
//! Repeated Cayley-Dickson products square coefficient magnitudes, so
//! fixed-width integers would overflow long before the sedenions are reached.
//! [`Rational`] is kept in canonical form (positive denominator, reduced,
//! zero as `0/1`) so structural equality coincides with numeric equality.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{NumRef, One, Zero};

use crate::error::{Error, Result};

/// Exact rational number in canonical form.
pub type Rational = BigRational;

/// Coefficient type accepted by [`CdElement`](crate::CdElement).
///
/// Anything with ring operations, including by-reference right operands,
/// qualifies: `Rational` for exact work, `i64` for fast integer-only
/// searches.
pub trait Scalar: NumRef + Clone + Neg<Output = Self> + Debug + Send + Sync {}

impl<T> Scalar for T where T: NumRef + Clone + Neg<Output = T> + Debug + Send + Sync {}

/// Builds the canonical fraction `n/d`.
pub fn rat_normalize(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Result<Rational> {
    let d = d.into();
    if d.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    // Ratio::new reduces, moves the sign to the numerator and maps 0/d to 0/1.
    Ok(Rational::new(n.into(), d))
}

/// Shorthand for small literals. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    rat_normalize(n, d).expect("literal rational with zero denominator")
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Multiplicative inverse, failing on zero instead of panicking.
pub fn rat_recip(x: &Rational) -> Result<Rational> {
    if x.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(x.recip())
}

/// Parses `n` or `n/d` (optional leading `-` on the numerator, `d > 0`).
pub fn parse_rational(src: &str) -> Result<Rational> {
    let bad = || Error::Usage(format!("invalid rational literal {src:?}"));
    let (num, den) = match src.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (src, None),
    };
    let num: BigInt = num.trim().parse().map_err(|_| bad())?;
    let den: BigInt = match den {
        Some(d) => {
            let d = d.trim();
            if d.starts_with(['-', '+']) {
                return Err(bad());
            }
            d.parse().map_err(|_| bad())?
        }
        None => BigInt::one(),
    };
    rat_normalize(num, den)
}

/// Text form `n/d`, with the denominator dropped when it is 1.
pub fn format_rational(x: &Rational) -> String {
    x.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::cmp::Ordering;

    #[test]
    fn normalize_reduces() {
        let x = rat_normalize(2, 4).unwrap();
        assert_eq!((x.numer().clone(), x.denom().clone()), (1.into(), 2.into()));
    }

    #[test]
    fn normalize_moves_sign_to_numerator() {
        let x = rat_normalize(3, -6).unwrap();
        assert_eq!(
            (x.numer().clone(), x.denom().clone()),
            ((-1).into(), 2.into())
        );
    }

    #[test]
    fn zero_is_unique() {
        let x = rat_normalize(0, 7).unwrap();
        assert_eq!((x.numer().clone(), x.denom().clone()), (0.into(), 1.into()));
        assert_eq!(x, rat_normalize(0, -3).unwrap());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(rat_normalize(1, 0), Err(Error::ZeroDenominator));
    }

    #[test]
    fn field_ops() {
        assert_eq!(rat(1, 2) + rat(1, 3), rat(5, 6));
        assert_eq!(rat(-2, 3) * rat(3, 4), rat(-1, 2));
        assert_eq!(rat_recip(&rat(-5, 7)).unwrap(), rat(-7, 5));
        assert_eq!(rat_recip(&int(0)), Err(Error::DivisionByZero));
        assert_eq!(rat(1, 2) - rat(3, 4), rat(-1, 4));
        assert_eq!(-rat(1, 2), rat(-1, 2));
    }

    #[test]
    fn ordering() {
        assert_eq!(rat(1, 2).cmp(&rat(2, 4)), Ordering::Equal);
        assert_eq!(rat(-1, 3).cmp(&int(0)), Ordering::Less);
        assert_eq!(rat(7, 2).cmp(&int(3)), Ordering::Greater);
    }

    #[test]
    fn text_form() {
        assert_eq!(format_rational(&rat(6, 3)), "2");
        assert_eq!(format_rational(&rat(-3, 6)), "-1/2");
        assert_eq!(parse_rational("-1/2").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("4").unwrap(), int(4));
        assert_eq!(parse_rational("1/0"), Err(Error::ZeroDenominator));
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("x").is_err());
    }

    // Overflows i64 after a handful of squarings.
    #[test]
    fn big_values_stay_exact() {
        let mut x = rat(3, 2);
        for _ in 0..8 {
            x = x.clone() * &x;
        }
        assert_eq!(x.numer().to_string(), BigInt::from(3).pow(256).to_string());
        assert_eq!(x.denom().clone(), BigInt::from(2).pow(256));
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-1000i64..1000, 1i64..1000).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn field_axioms(x in arb_rational(), y in arb_rational(), z in arb_rational()) {
            prop_assert_eq!((x.clone() + &y) + &z, x.clone() + (y.clone() + &z));
            prop_assert_eq!((x.clone() * &y) * &z, x.clone() * (y.clone() * &z));
            prop_assert_eq!(x.clone() * (y.clone() + &z), x.clone() * &y + x.clone() * &z);
            prop_assert_eq!(x.clone() + (-x.clone()), int(0));
            if !x.is_zero() {
                prop_assert_eq!(x.clone() * rat_recip(&x).unwrap(), int(1));
            }
        }

        #[test]
        fn normalize_idempotent(n in -10_000i64..10_000, d in 1i64..10_000) {
            let once = rat_normalize(n, d).unwrap();
            let twice = rat_normalize(once.numer().clone(), once.denom().clone()).unwrap();
            prop_assert!(once.denom() > &BigInt::zero());
            prop_assert!(num_integer::Integer::gcd(once.numer(), once.denom()).is_one());
            prop_assert_eq!(once, twice);
        }

        #[test]
        fn text_round_trip(x in arb_rational()) {
            prop_assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
        }
    }
}
