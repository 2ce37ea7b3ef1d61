//! Laurent polynomials in one variable over ℚ and the `≐` normal form.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::Poly;
use super::rational::{self, Rational};
use crate::error::{Error, Result};

/// Element of ℚ[t, t⁻¹]: a finite map from exponent to non-zero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_terms([(0, c)])
    }

    pub fn monomial(c: Rational, e: i64) -> Self {
        Self::from_terms([(e, c)])
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents are summed.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Rational)>) -> Self {
        let mut map: BTreeMap<i64, Rational> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        LaurentPolynomial { terms: map }
    }

    /// Integer coefficients in ascending order starting at `t^0`.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(i, &c)| (i as i64, rational::int(c))))
    }

    pub fn from_poly(p: &Poly) -> Self {
        Self::from_poly_shifted(p, 0)
    }

    /// `t^shift · p(t)`.
    pub fn from_poly_shifted(p: &Poly, shift: i64) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(i, c)| (i as i64 + shift, c.clone())))
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i64) -> Rational {
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Width of the exponent support (`max - min`); the degree of the normal form.
    pub fn span(&self) -> Option<u64> {
        Some((self.max_exponent()? - self.min_exponent()?) as u64)
    }

    /// True for non-zero constants after stripping units, i.e. single-term polynomials.
    pub fn is_unit_multiple(&self) -> bool {
        self.terms.len() == 1
    }

    /// Leading coefficient (of the highest exponent).
    pub fn lead(&self) -> Rational {
        self.terms.values().next_back().cloned().unwrap_or_else(Rational::zero)
    }

    /// Returns `(p, shift)` with `self = t^shift · p(t)` and `p(0) != 0`.
    pub fn to_poly(&self) -> (Poly, i64) {
        let Some(lo) = self.min_exponent() else {
            return (Poly::zero(), 0);
        };
        let hi = self.max_exponent().unwrap();
        let mut coeffs = vec![Rational::zero(); (hi - lo) as usize + 1];
        for (e, c) in &self.terms {
            coeffs[(e - lo) as usize] = c.clone();
        }
        (Poly::from_coeffs(coeffs), lo)
    }

    /// Representative of the class of `self` under multiplication by units `±t^k`:
    /// minimum exponent zero and positive leading coefficient.
    pub fn normalize(&self) -> Result<LaurentPolynomial> {
        let lo = self.min_exponent().ok_or(Error::ZeroPolynomial)?;
        let sign = if self.lead().is_negative() { -Rational::one() } else { Rational::one() };
        Ok(Self::from_terms(self.terms.iter().map(|(e, c)| (e - lo, c * &sign))))
    }

    /// Normal form as a dense polynomial with non-zero constant term.
    pub fn normal_poly(&self) -> Result<Poly> {
        Ok(self.normalize()?.to_poly().0)
    }

    /// `p ≐ q`: equal up to multiplication by `±t^k`.
    pub fn unit_equivalent(&self, other: &LaurentPolynomial) -> bool {
        match (self.normalize(), other.normalize()) {
            (Ok(a), Ok(b)) => a == b,
            (Err(_), Err(_)) => true,
            _ => false,
        }
    }

    /// `p(t^n)` for any non-zero integer `n`.
    pub fn substitute_power(&self, n: i64) -> LaurentPolynomial {
        assert!(n != 0, "substitution t -> t^0 is not a ring automorphism");
        Self::from_terms(self.terms.iter().map(|(e, c)| (e * n, c.clone())))
    }

    /// `p(t⁻¹)`.
    pub fn conjugate(&self) -> LaurentPolynomial {
        self.substitute_power(-1)
    }

    pub fn eval(&self, t: &Rational) -> Option<Rational> {
        if t.is_zero() && self.min_exponent().is_some_and(|e| e < 0) {
            return None;
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            acc += c * pow_i64(t, *e);
        }
        Some(acc)
    }

    pub fn scale(&self, c: &Rational) -> LaurentPolynomial {
        Self::from_terms(self.terms.iter().map(|(e, a)| (*e, a * c)))
    }

    pub fn pow(&self, e: u32) -> LaurentPolynomial {
        (0..e).fold(LaurentPolynomial::one(), |acc, _| &acc * self)
    }

    /// Renders with an arbitrary variable name (used for the `x = t + t⁻¹` polynomials).
    pub fn to_string_var(&self, var: char) -> String {
        format_terms(self.terms.iter().rev().map(|(e, c)| (*e, c.clone())), var)
    }

    pub fn parse_var(s: &str, var: char) -> Result<LaurentPolynomial> {
        super::parse::parse_polynomial(s, var)
    }
}

fn pow_i64(t: &Rational, e: i64) -> Rational {
    let base = if e < 0 { t.recip() } else { t.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

/// Writes terms (already in display order) in the text grammar, e.g. `4*t^2 - 9*t + 4`.
pub(crate) fn format_terms(terms: impl Iterator<Item = (i64, Rational)>, var: char) -> String {
    let mut out = String::new();
    for (e, c) in terms {
        let negative = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let var_part = match e {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{e}"),
        };
        if var_part.is_empty() {
            out.push_str(&rational::format(&mag));
        } else if mag.is_one() {
            out.push_str(&var_part);
        } else {
            out.push_str(&rational::format(&mag));
            out.push('*');
            out.push_str(&var_part);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Monic normalized gcd in ℚ[t, t⁻¹]; a constant `1` result means coprime.
pub fn lp_gcd(p: &LaurentPolynomial, q: &LaurentPolynomial) -> Result<LaurentPolynomial> {
    let g = match (p.is_zero(), q.is_zero()) {
        (true, true) => return Err(Error::ZeroPolynomial),
        (true, false) => q.normal_poly()?.monic(),
        (false, true) => p.normal_poly()?.monic(),
        (false, false) => p.normal_poly()?.gcd(&q.normal_poly()?),
    };
    Ok(LaurentPolynomial::from_poly(&g))
}

/// `p ≐ p(t⁻¹)`.
pub fn is_symmetric(p: &LaurentPolynomial) -> Result<bool> {
    Ok(p.normalize()? == p.conjugate().normalize()?)
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_var('t'))
    }
}

impl FromStr for LaurentPolynomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        super::parse::parse_polynomial(s, 't')
    }
}

impl Serialize for LaurentPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for LaurentPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(self.terms().chain(rhs.terms()).map(|(e, c)| (e, c.clone())))
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(self.terms().map(|(e, c)| (e, -c)))
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(
            self.terms().flat_map(|(e, a)| rhs.terms().map(move |(f, b)| (e + f, a * b))),
        )
    }
}
