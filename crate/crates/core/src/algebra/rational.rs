//! Helpers around arbitrary-precision rationals.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number; always in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        // Fall back to a scaled division for huge numerators/denominators.
        let shift = q.numer().bits().max(q.denom().bits()).saturating_sub(900) as usize;
        let n = (q.numer() >> shift).to_f64().unwrap_or(f64::NAN);
        let d = (q.denom() >> shift).to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Formats `a` or `a/b`.
pub fn format(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `a`, `-a`, `a/b` or a finite decimal such as `1.25`, `-0.5`, `1e-9`.
pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    if let Some((mantissa, exp)) = s.split_once(['e', 'E']) {
        let e: i32 = exp.parse().map_err(|_| Error::Parse { position: 0, message: format!("invalid exponent: {s:?}") })?;
        if e.unsigned_abs() > 10_000 {
            return Err(Error::Parse { position: 0, message: format!("exponent out of range: {s:?}") });
        }
        let m = parse(mantissa)?;
        let p = Rational::from_integer(num_traits::pow(BigInt::from(10), e.unsigned_abs() as usize));
        return Ok(if e < 0 { m / p } else { m * p });
    }
    let bad = |msg: &str| Error::Parse { position: 0, message: format!("{msg}: {s:?}") };
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad("invalid numerator"))?;
        let d: BigInt = d.trim().parse().map_err(|_| bad("invalid denominator"))?;
        if d.is_zero() {
            return Err(bad("zero denominator"));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let negative = whole.trim_start().starts_with('-');
        let whole_digits = whole.trim_start_matches(['-', '+']);
        if !frac.chars().all(|c| c.is_ascii_digit())
            || !whole_digits.chars().all(|c| c.is_ascii_digit())
            || (whole_digits.is_empty() && frac.is_empty())
        {
            return Err(bad("invalid decimal"));
        }
        let w: BigInt = if whole_digits.is_empty() { BigInt::zero() } else { whole_digits.parse().unwrap() };
        let f: BigInt = if frac.is_empty() { BigInt::zero() } else { frac.parse().unwrap() };
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let mag = Rational::new(w * &scale + f, scale);
        return Ok(if negative { -mag } else { mag });
    }
    let n: BigInt = s.parse().map_err(|_| bad("invalid integer"))?;
    Ok(Rational::from_integer(n))
}

/// Fixed-width decimal with `digits` fractional digits, rounded toward -∞ or +∞.
pub fn to_decimal(q: &Rational, digits: usize, round_up: bool) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = q * Rational::from_integer(scale.clone());
    let v = if round_up { scaled.ceil() } else { scaled.floor() }.to_integer();
    let negative = v.is_negative();
    let mag = v.abs().to_string();
    let padded = format!("{:0>width$}", mag, width = digits + 1);
    let (i, f) = padded.split_at(padded.len() - digits);
    let sign = if negative { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{i}")
    } else {
        format!("{sign}{i}.{f}")
    }
}

/// Simplest rational (smallest denominator, then smallest magnitude numerator)
/// in the closed interval `[lo, hi]`, via continued fractions.
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    assert!(lo <= hi);
    if lo.is_positive() {
        simplest_positive(lo, hi)
    } else if hi.is_negative() {
        -simplest_positive(&-hi, &-lo)
    } else {
        Rational::zero()
    }
}

fn simplest_positive(lo: &Rational, hi: &Rational) -> Rational {
    let fl = lo.floor();
    if &fl == lo {
        return fl;
    }
    if fl.clone() + Rational::one() <= *hi {
        return fl + Rational::one();
    }
    // lo and hi share the integer part; recurse on reciprocals of fractional parts.
    let a = lo - &fl;
    let b = hi - &fl;
    let inner = simplest_positive(&b.recip(), &a.recip());
    fl + inner.recip()
}

pub fn cmp_abs(a: &Rational, b: &Rational) -> Ordering {
    a.abs().cmp(&b.abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_forms() {
        assert_eq!(parse("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse("-1.25").unwrap(), rat(-5, 4));
        assert_eq!(parse("1.0").unwrap(), int(1));
        assert_eq!(parse(".5").unwrap(), rat(1, 2));
        assert!(parse("1/0").is_err());
        assert!(parse("abc").is_err());
        assert_eq!(parse("1e-9").unwrap(), rat(1, 1_000_000_000));
        assert_eq!(parse("2.5E2").unwrap(), int(250));
        assert!(parse("1e").is_err());
    }

    #[test]
    fn decimals_round_outward() {
        let q = rat(-4, 3);
        assert_eq!(to_decimal(&q, 5, false), "-1.33334");
        assert_eq!(to_decimal(&q, 5, true), "-1.33333");
        assert_eq!(to_decimal(&rat(1, 8), 2, true), "0.13");
        assert_eq!(to_decimal(&int(0), 3, false), "0.000");
    }

    #[test]
    fn simplest_rational() {
        assert_eq!(simplest_between(&rat(1, 3), &rat(1, 2)), rat(1, 2));
        assert_eq!(simplest_between(&rat(31, 100), &rat(34, 100)), rat(1, 3));
        assert_eq!(simplest_between(&rat(-34, 100), &rat(-31, 100)), rat(-1, 3));
        assert_eq!(simplest_between(&rat(-1, 7), &rat(1, 9)), int(0));
        assert_eq!(simplest_between(&rat(7, 5), &rat(7, 5)), rat(7, 5));
    }
}
