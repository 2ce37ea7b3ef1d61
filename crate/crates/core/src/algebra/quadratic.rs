//! Exact arithmetic in real quadratic fields ℚ(√D).

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::factor;
use super::rational::{self, Rational};

/// Element `a + b·√d` of ℚ(√d), `d > 1` squarefree, with the real embedding √d > 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    pub a: Rational,
    pub b: Rational,
    pub d: BigInt,
}

impl QuadraticSurd {
    pub fn new(a: Rational, b: Rational, d: BigInt) -> Self {
        debug_assert!(d > BigInt::one());
        QuadraticSurd { a, b, d }
    }

    pub fn rational(a: Rational, d: BigInt) -> Self {
        QuadraticSurd::new(a, Rational::zero(), d)
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn conj(&self) -> Self {
        QuadraticSurd::new(self.a.clone(), -&self.b, self.d.clone())
    }

    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * Rational::from_integer(self.d.clone())
    }

    pub fn trace(&self) -> Rational {
        &self.a + &self.a
    }

    /// Algebraic integer test: minimal polynomial `t² - tr·t + N` has integer coefficients.
    pub fn is_integral(&self) -> bool {
        self.trace().is_integer() && self.norm().is_integer()
    }

    pub fn add(&self, o: &Self) -> Self {
        QuadraticSurd::new(&self.a + &o.a, &self.b + &o.b, self.d.clone())
    }

    pub fn sub(&self, o: &Self) -> Self {
        QuadraticSurd::new(&self.a - &o.a, &self.b - &o.b, self.d.clone())
    }

    pub fn neg(&self) -> Self {
        QuadraticSurd::new(-&self.a, -&self.b, self.d.clone())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let d = Rational::from_integer(self.d.clone());
        QuadraticSurd::new(
            &self.a * &o.a + &self.b * &o.b * d,
            &self.a * &o.b + &self.b * &o.a,
            self.d.clone(),
        )
    }

    pub fn inv(&self) -> Self {
        let n = self.norm();
        assert!(!n.is_zero(), "inverse of zero");
        QuadraticSurd::new(&self.a / &n, -&self.b / &n, self.d.clone())
    }

    pub fn div(&self, o: &Self) -> Self {
        self.mul(&o.inv())
    }

    pub fn pow(&self, e: i64) -> Self {
        let mut base = if e < 0 { self.inv() } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = QuadraticSurd::rational(Rational::one(), self.d.clone());
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Sign of the real number `a + b√d`, decided exactly.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&Rational::zero());
        let sb = self.b.cmp(&Rational::zero());
        if sb == Ordering::Equal {
            return sa;
        }
        if sa == Ordering::Equal || sa == sb {
            return sb;
        }
        // Opposite signs: compare a² with b²d.
        let a2 = &self.a * &self.a;
        let b2d = &self.b * &self.b * Rational::from_integer(self.d.clone());
        match a2.cmp(&b2d) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() == Ordering::Less {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn to_f64(&self) -> f64 {
        rational::to_f64(&self.a) + rational::to_f64(&self.b) * rational::to_f64(&Rational::from_integer(self.d.clone())).sqrt()
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", rational::format(&self.a));
        }
        let b = rational::format(&self.b.abs());
        let root = if self.b.abs().is_one() { format!("sqrt({})", self.d) } else { format!("{b}*sqrt({})", self.d) };
        if self.a.is_zero() {
            let sign = if self.b.is_negative() { "-" } else { "" };
            write!(f, "{sign}{root}")
        } else {
            let sign = if self.b.is_negative() { "-" } else { "+" };
            write!(f, "{} {sign} {root}", rational::format(&self.a))
        }
    }
}

/// Writes a positive rational `r` as `s² · D` with `D` a squarefree positive integer.
/// Returns `None` when the integer involved cannot be factored.
pub fn square_decompose(r: &Rational) -> Option<(Rational, BigInt)> {
    assert!(r.is_positive());
    // r = n/m = (n·m)/m²
    let nm = r.numer() * r.denom();
    let (sq, free) = squarefree_split(&nm)?;
    Some((Rational::new(sq, r.denom().clone()), free))
}

/// `n = s² · f` with `f` squarefree, for a positive integer `n`.
pub fn squarefree_split(n: &BigInt) -> Option<(BigInt, BigInt)> {
    let root = n.sqrt();
    if &(&root * &root) == n {
        return Some((root, BigInt::one()));
    }
    let f = factor::factorize(n)?;
    let mut s = BigInt::one();
    let mut free = BigInt::one();
    for (p, e) in f {
        let p = BigInt::from(p);
        s *= num_traits::pow(p.clone(), (e / 2) as usize);
        if e % 2 == 1 {
            free *= p;
        }
    }
    Some((s, free))
}
