//! Dense univariate polynomials over ℚ.
//!
//! This is the workhorse behind [`LaurentPolynomial`](super::LaurentPolynomial):
//! once a Laurent polynomial is shifted to have minimum exponent zero it is an
//! ordinary polynomial, and division, gcd and squarefree decomposition all live
//! here.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;

/// Polynomial with rational coefficients stored in ascending order of degree.
/// Trailing zeros are never stored, so the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The polynomial `t`.
    pub fn x() -> Self {
        Poly::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Poly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        Poly::from_coeffs(coeffs.iter().cloned().map(Rational::from_integer).collect())
    }

    /// Ascending coefficients.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + super::rational::to_f64(c);
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let inv = self.lead().recip();
        self.scale(&inv)
    }

    pub fn derivative(&self) -> Poly {
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `p(t^n)` for `n >= 1`.
    pub fn inflate(&self, n: usize) -> Poly {
        assert!(n >= 1);
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); (self.coeffs.len() - 1) * n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * n] = c.clone();
        }
        Poly::from_coeffs(coeffs)
    }

    /// Reciprocal polynomial `t^deg · p(1/t)`.
    pub fn reversed(&self) -> Poly {
        let mut c = self.coeffs.clone();
        c.reverse();
        Poly::from_coeffs(c)
    }

    /// Number of factors of `t` dividing `self`.
    pub fn trailing_zeros(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    pub fn shift_down(&self, k: usize) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().skip(k).cloned().collect())
    }

    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() < divisor.coeffs.len() {
            return (Poly::zero(), self.clone());
        }
        let inv_lead = divisor.lead().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &inv_lead;
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * d;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    /// Exact quotient; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.div_rem(self).1.is_zero()
    }

    /// Monic gcd; the gcd of two zero polynomials is zero.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Content-free integer coefficients with positive leading coefficient.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
        ints.into_iter().map(|c| c / &content * &sign).collect()
    }

    /// Yun's squarefree decomposition: returns `(g_i, i)` with `monic(self) = Π g_i^i`,
    /// each `g_i` monic, squarefree, nonconstant and pairwise coprime.
    pub fn squarefree_decomposition(&self) -> Vec<(Poly, usize)> {
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let a = f.gcd(&fp);
        let mut b = f.div_exact(&a).expect("gcd divides");
        let mut c = fp.div_exact(&a).expect("gcd divides");
        let mut d = &c - &b.derivative();
        let mut i = 1;
        loop {
            let g = b.gcd(&d);
            if !g.is_constant() {
                out.push((g.clone(), i));
            }
            b = b.div_exact(&g).expect("gcd divides");
            if b.is_constant() {
                break;
            }
            c = d.div_exact(&g).expect("gcd divides");
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    pub fn squarefree_part(&self) -> Poly {
        if self.is_constant() {
            return self.monic();
        }
        let f = self.monic();
        f.div_exact(&f.gcd(&f.derivative())).expect("gcd divides")
    }

    /// Render with variable name `var`, highest degree first.
    pub fn to_string_var(&self, var: char) -> String {
        let terms: Vec<(i64, Rational)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as i64, c.clone()))
            .collect();
        super::laurent::format_terms(terms.into_iter().rev(), var)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_var('t'))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64s(c)
    }

    #[test]
    fn division_round_trips() {
        let a = p(&[6, -13, 6]);
        let b = p(&[-2, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert_eq!(r.eval(&Rational::from_integer(0.into())), a.eval(&Rational::from_integer(2.into())));
    }

    #[test]
    fn gcd_of_shared_factor() {
        let f = p(&[-2, 1]);
        let a = &f * &p(&[1, 1]);
        let b = &f * &p(&[3, 0, 1]);
        assert_eq!(a.gcd(&b), f);
    }

    #[test]
    fn squarefree_decomposition_recovers_multiplicities() {
        let a = p(&[-1, 1]);
        let b = p(&[1, 1, 1]);
        let f = &(&a.pow(3) * &b) * &p(&[5]);
        let d = f.squarefree_decomposition();
        assert_eq!(d, vec![(b, 1), (a, 3)]);
    }

    #[test]
    fn primitive_integer_clears_denominators() {
        let f = Poly::from_coeffs(vec![
            Rational::new(1.into(), 2.into()),
            Rational::new((-3).into(), 4.into()),
        ]);
        let ints: Vec<i64> = f.primitive_integer().iter().map(|c| c.try_into().unwrap()).collect();
        assert_eq!(ints, vec![-2, 3]);
    }

    #[test]
    fn inflate_and_reverse() {
        let f = p(&[1, 2, 3]);
        assert_eq!(f.inflate(2), p(&[1, 0, 2, 0, 3]));
        assert_eq!(f.reversed(), p(&[3, 2, 1]));
    }
}
