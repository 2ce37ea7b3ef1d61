//! Certified enclosures with rational endpoints.
//!
//! Every function here returns an interval guaranteed to contain the true
//! real value: endpoints are rounded outward to dyadic rationals with `prec`
//! fractional bits, series are truncated at alternating-series error bounds,
//! and monotone functions are evaluated at the appropriate endpoint.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

fn two_pow(prec: u32) -> BigInt {
    BigInt::one() << prec as usize
}

pub fn floor_dyadic(q: &Rational, prec: u32) -> Rational {
    let s = two_pow(prec);
    Rational::new((q * Rational::from_integer(s.clone())).floor().to_integer(), s)
}

pub fn ceil_dyadic(q: &Rational, prec: u32) -> Rational {
    let s = two_pow(prec);
    Rational::new((q * Rational::from_integer(s.clone())).ceil().to_integer(), s)
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi, "empty interval");
        Interval { lo, hi }
    }

    pub fn point(q: Rational) -> Self {
        Interval { lo: q.clone(), hi: q }
    }

    pub fn zero() -> Self {
        Interval::point(Rational::zero())
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, q: &Rational) -> bool {
        &self.lo <= q && q <= &self.hi
    }

    pub fn round_out(&self, prec: u32) -> Self {
        Interval { lo: floor_dyadic(&self.lo, prec), hi: ceil_dyadic(&self.hi, prec) }
    }

    pub fn add(&self, o: &Interval) -> Interval {
        Interval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    pub fn sub(&self, o: &Interval) -> Interval {
        Interval { lo: &self.lo - &o.hi, hi: &self.hi - &o.lo }
    }

    pub fn neg(&self) -> Interval {
        Interval { lo: -&self.hi, hi: -&self.lo }
    }

    pub fn scale(&self, c: &Rational) -> Interval {
        let a = &self.lo * c;
        let b = &self.hi * c;
        if a <= b {
            Interval { lo: a, hi: b }
        } else {
            Interval { lo: b, hi: a }
        }
    }

    pub fn mul(&self, o: &Interval) -> Interval {
        let p = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = p.iter().min().unwrap().clone();
        let hi = p.iter().max().unwrap().clone();
        Interval { lo, hi }
    }

    /// Division by an interval not containing zero.
    pub fn div(&self, o: &Interval) -> Interval {
        assert!(o.lo.is_positive() || o.hi.is_negative(), "interval division by zero");
        self.mul(&Interval::new(o.hi.recip(), o.lo.recip()))
    }

    /// Absolute value enclosure.
    pub fn abs(&self) -> Interval {
        if self.lo >= Rational::zero() {
            self.clone()
        } else if self.hi <= Rational::zero() {
            self.neg()
        } else {
            Interval::new(Rational::zero(), (-&self.lo).max(self.hi.clone()))
        }
    }

    pub fn midpoint_f64(&self) -> f64 {
        rational::to_f64(&((&self.lo + &self.hi) / rational::int(2)))
    }
}

/// Enclosure of √q for rational q ≥ 0.
pub fn sqrt_rational(q: &Rational, prec: u32) -> Interval {
    assert!(!q.is_negative());
    let scale = Rational::from_integer(two_pow(2 * prec));
    let s = two_pow(prec);
    let lo_n = (q * &scale).floor().to_integer().sqrt();
    let hi_arg = (q * &scale).ceil().to_integer();
    let mut hi_n = hi_arg.sqrt();
    if &hi_n * &hi_n < hi_arg {
        hi_n += 1;
    }
    Interval::new(Rational::new(lo_n, s.clone()), Rational::new(hi_n, s))
}

/// Alternating Taylor series for atan on `0 ≤ v ≤ 1/4`.
fn atan_series(v: &Rational, prec: u32) -> Interval {
    if v.is_zero() {
        return Interval::zero();
    }
    let tol = Rational::new(BigInt::one(), two_pow(prec + 4));
    let v2 = v * v;
    let mut power = v.clone();
    let mut prev;
    let mut sum = Rational::zero();
    let mut k: i64 = 0;
    loop {
        let term = &power / rational::int(2 * k + 1);
        prev = sum.clone();
        if k % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
        if term < tol {
            break;
        }
        power = &power * &v2;
        k += 1;
    }
    let (lo, hi) = if prev <= sum { (prev, sum) } else { (sum, prev) };
    Interval::new(lo, hi).round_out(prec)
}

fn atan_increasing(iv: &Interval, prec: u32) -> Interval {
    Interval::new(atan_point(&iv.lo, prec).lo, atan_point(&iv.hi, prec).hi)
}

/// Enclosure of atan(u) for rational u ≥ 0.
pub fn atan_point(u: &Rational, prec: u32) -> Interval {
    assert!(!u.is_negative());
    let quarter = rational::rat(1, 4);
    if u <= &quarter {
        let lo = atan_series(&floor_dyadic(u, prec + 8), prec).lo;
        let hi = atan_series(&ceil_dyadic(u, prec + 8), prec).hi;
        return Interval::new(lo, hi);
    }
    if u > &Rational::one() {
        // atan(u) = π/2 - atan(1/u)
        let half_pi = pi(prec).scale(&rational::rat(1, 2));
        return half_pi.sub(&atan_point(&u.recip(), prec)).round_out(prec);
    }
    // Half-angle reduction: atan(u) = 2·atan(u / (1 + √(1 + u²))).
    let s = sqrt_rational(&(u * u + Rational::one()), prec + 8);
    let v = Interval::new(
        floor_dyadic(&(u / (Rational::one() + &s.hi)), prec + 8),
        ceil_dyadic(&(u / (Rational::one() + &s.lo)), prec + 8),
    );
    atan_increasing(&v, prec).scale(&rational::int(2)).round_out(prec)
}

fn pi_cache() -> &'static Mutex<HashMap<u32, Interval>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Interval>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Enclosure of π via Machin's formula π = 16·atan(1/5) − 4·atan(1/239).
pub fn pi(prec: u32) -> Interval {
    if let Some(v) = pi_cache().lock().unwrap().get(&prec) {
        return v.clone();
    }
    let a = atan_series(&rational::rat(1, 5), prec + 8).scale(&rational::int(16));
    let b = atan_series(&rational::rat(1, 239), prec + 8).scale(&rational::int(4));
    let v = a.sub(&b).round_out(prec);
    pi_cache().lock().unwrap().insert(prec, v.clone());
    v
}

/// Enclosure of arccos(y) for rational y in (-1, 1).
pub fn arccos_point(y: &Rational, prec: u32) -> Interval {
    assert!(y > &-Rational::one() && y < &Rational::one(), "arccos argument outside (-1, 1)");
    // arccos(y) = 2·atan(√((1 - y)/(1 + y)))
    let z = (Rational::one() - y) / (Rational::one() + y);
    let u = sqrt_rational(&z, prec + 8);
    atan_increasing(&u, prec).scale(&rational::int(2)).round_out(prec)
}

/// Enclosure of arccos(y)/π for an interval of y inside (-1, 1).
pub fn arccos_over_pi(y: &Interval, prec: u32) -> Interval {
    // arccos is decreasing.
    let lo = arccos_point(&y.hi, prec).lo;
    let hi = arccos_point(&y.lo, prec).hi;
    Interval::new(lo, hi).div(&pi(prec)).round_out(prec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn contains_f64(iv: &Interval, x: f64, slack: f64) -> bool {
        rational::to_f64(&iv.lo) <= x + slack && x - slack <= rational::to_f64(&iv.hi)
    }

    #[test]
    fn pi_enclosure_is_tight_and_correct() {
        let p = pi(80);
        assert!(p.width() < rat(1, 1 << 40));
        assert!(p.lo < rat(314159265358979324, 100000000000000000));
        assert!(p.hi > rat(314159265358979323, 100000000000000000));
    }

    #[test]
    fn sqrt_brackets() {
        let s = sqrt_rational(&int(2), 40);
        assert!(&s.lo * &s.lo <= int(2) && int(2) <= &s.hi * &s.hi);
        assert_eq!(sqrt_rational(&rat(9, 4), 10), Interval::point(rat(3, 2)));
    }

    #[test]
    fn atan_and_arccos_values() {
        for u in [rat(1, 10), rat(1, 3), int(1), int(3), int(50)] {
            let iv = atan_point(&u, 60);
            assert!(contains_f64(&iv, rational::to_f64(&u).atan(), 1e-15), "atan({u})");
            assert!(iv.width() < rat(1, 1 << 50));
        }
        // arccos(1/2) / π = 1/3
        let third = arccos_over_pi(&Interval::point(rat(1, 2)), 60);
        assert!(third.contains(&rat(1, 3)));
        assert!(third.width() < rat(1, 1 << 50));
        let obtuse = arccos_over_pi(&Interval::point(rat(-7, 10)), 60);
        assert!(contains_f64(&obtuse, (-0.7f64).acos() / std::f64::consts::PI, 1e-12));
    }
}
