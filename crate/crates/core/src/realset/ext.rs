use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::Error;

/// Exact rational number used for every endpoint and point in the kernel.
pub type Rational = BigRational;

/// `n/d` as a [`Rational`]. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `p`, `p/q`, or a finite decimal such as `-0.25`, exactly.
pub fn parse_rational(src: &str) -> Result<Rational, Error> {
    let s = src.trim();
    let bad = || Error::Validation(format!("malformed rational literal `{src}`"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((num, den)) = s.split_once('/') {
        let num = BigInt::from_str(num.trim()).map_err(|_| bad())?;
        let den = BigInt::from_str(den.trim()).map_err(|_| bad())?;
        if den.is_zero() {
            return Err(Error::Validation(format!("zero denominator in `{src}`")));
        }
        return Ok(Rational::new(num, den));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let negative = whole.trim_start().starts_with('-');
        let digits = whole.trim_start_matches(['-', '+']);
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        if !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let whole_part =
            if digits.is_empty() { BigInt::zero() } else { BigInt::from_str(digits).map_err(|_| bad())? };
        let frac_part = BigInt::from_str(frac).map_err(|_| bad())?;
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let magnitude = Rational::new(whole_part * &scale + frac_part, scale);
        return Ok(if negative { -magnitude } else { magnitude });
    }
    BigInt::from_str(s).map(Rational::from_integer).map_err(|_| bad())
}

/// Renders `p` or `p/q`; the form accepted back by [`parse_rational`].
pub fn fmt_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// A rational number or one of the two infinite symbols.
///
/// The derived order places `NegInf` below every rational and `PosInf` above.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtRational {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl ExtRational {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            ExtRational::Finite(q) => Some(q),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtRational::Finite(_))
    }

    /// Image under `x -> slope * x + offset` (`slope != 0`).
    pub(crate) fn affine(&self, slope: &Rational, offset: &Rational) -> ExtRational {
        let flip = slope.is_negative();
        match self {
            ExtRational::Finite(q) => ExtRational::Finite(q * slope + offset),
            ExtRational::NegInf if flip => ExtRational::PosInf,
            ExtRational::NegInf => ExtRational::NegInf,
            ExtRational::PosInf if flip => ExtRational::NegInf,
            ExtRational::PosInf => ExtRational::PosInf,
        }
    }
}

impl From<Rational> for ExtRational {
    fn from(q: Rational) -> Self {
        ExtRational::Finite(q)
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRational::NegInf => f.write_str("-inf"),
            ExtRational::PosInf => f.write_str("inf"),
            ExtRational::Finite(q) => f.write_str(&fmt_rational(q)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_places_infinities_outside() {
        let mut v =
            [ExtRational::PosInf, ExtRational::Finite(int(3)), ExtRational::NegInf, ExtRational::Finite(rat(-7, 2))];
        v.sort();
        assert_eq!(v[0], ExtRational::NegInf);
        assert_eq!(v[1], ExtRational::Finite(rat(-7, 2)));
        assert_eq!(v[3], ExtRational::PosInf);
    }

    #[test]
    fn lowest_terms() {
        let q = rat(6, -4);
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(2));
    }

    #[test]
    fn parses_decimals_and_fractions() {
        assert_eq!(parse_rational("0.5").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-0.5").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("-.25").unwrap(), rat(-1, 4));
        assert_eq!(parse_rational("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-12").unwrap(), int(-12));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1.").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn render_round_trips() {
        for q in [rat(1, 2), rat(-7, 3), int(0), int(-4)] {
            assert_eq!(parse_rational(&fmt_rational(&q)).unwrap(), q);
        }
    }
}
