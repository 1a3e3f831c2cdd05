//! Minimal commutative-ring interface shared by the symbolic and the exact
//! rational matrix kernels.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::poly::Poly;

/// Operations every coefficient ring must provide. Implemented by [`Poly`]
/// (exact integer coefficients) and [`BigRational`] (specialized matrices).
pub trait RingElem: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(k: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Exact division: `Some(q)` with `q * d == self`, `None` when `self` is
    /// not a multiple of `d` or `d` is zero.
    fn exact_div(&self, d: &Self) -> Option<Self>;
    /// Size proxy (term count) used for pivot tie-breaking.
    fn complexity(&self) -> usize;
}

impl RingElem for Poly {
    fn zero() -> Self {
        Poly::zero()
    }

    fn one() -> Self {
        Poly::one()
    }

    fn from_int(k: i64) -> Self {
        Poly::constant(k)
    }

    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        Poly::add(self, rhs)
    }

    fn sub(&self, rhs: &Self) -> Self {
        Poly::sub(self, rhs)
    }

    fn neg(&self) -> Self {
        Poly::neg(self)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Poly::mul(self, rhs)
    }

    fn exact_div(&self, d: &Self) -> Option<Self> {
        Poly::exact_div(self, d).ok()
    }

    fn complexity(&self) -> usize {
        self.num_terms()
    }
}

impl RingElem for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn from_int(k: i64) -> Self {
        BigRational::from_integer(k.into())
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn exact_div(&self, d: &Self) -> Option<Self> {
        if Zero::is_zero(d) {
            None
        } else {
            Some(self / d)
        }
    }

    fn complexity(&self) -> usize {
        usize::from(!Zero::is_zero(self))
    }
}

/// Parses an exact rational like `"3"`, `"-5/7"`, or `"0"`.
pub fn parse_rational(text: &str) -> Result<BigRational, String> {
    let trimmed = text.trim();
    let (numer, denom) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (trimmed, None),
    };
    let n: num_bigint::BigInt = numer
        .parse()
        .map_err(|_| format!("invalid integer {numer:?}"))?;
    let d: num_bigint::BigInt = match denom {
        Some(d) => d.parse().map_err(|_| format!("invalid integer {d:?}"))?,
        None => One::one(),
    };
    if d.is_zero() {
        return Err(format!("zero denominator in {trimmed:?}"));
    }
    Ok(BigRational::new(n, d))
}

/// Renders a rational without a denominator when it is integral.
pub fn rational_to_string(value: &BigRational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("3").unwrap(), RingElem::from_int(3));
        assert_eq!(
            parse_rational("-6/4").unwrap(),
            BigRational::new((-3).into(), 2.into())
        );
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn rational_round_trip_strings() {
        for s in ["0", "7", "-7", "3/2", "-3/2"] {
            assert_eq!(rational_to_string(&parse_rational(s).unwrap()), s);
        }
    }
}
