//! Integer factorisation for the small numbers met in knot polynomials:
//! trial division, then Miller–Rabin and Pollard's rho once the cofactor fits
//! in a `u64`.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

const TRIAL_LIMIT: u64 = 1 << 16;

/// Prime factorisation of `|n|` as `prime -> exponent`. Returns `None` when a
/// cofactor larger than `u64::MAX` survives trial division.
pub fn factorize(n: &BigInt) -> Option<BTreeMap<BigUint, u32>> {
    let mut n = n.magnitude().clone();
    let mut out = BTreeMap::new();
    if n.is_zero() {
        return None;
    }
    let mut p = 2u64;
    while p < TRIAL_LIMIT {
        let bp = BigUint::from(p);
        if &bp * &bp > n {
            break;
        }
        while (&n % &bp).is_zero() {
            n /= &bp;
            *out.entry(bp.clone()).or_insert(0) += 1;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n.is_one() {
        return Some(out);
    }
    let rest = n.to_u64()?;
    let mut stack = vec![rest];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime_u64(m) {
            *out.entry(BigUint::from(m)).or_insert(0) += 1;
            continue;
        }
        let d = pollard_rho(m);
        stack.push(d);
        stack.push(m / d);
    }
    Some(out)
}

/// All positive divisors of `|n|` (n ≠ 0), or `None` if `n` cannot be factored.
pub fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let f = factorize(n)?;
    let mut divs = vec![BigInt::one()];
    for (p, e) in f {
        let p = BigInt::from(p);
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = d.clone();
            next.push(pk.clone());
            for _ in 0..e {
                pk *= &p;
                next.push(pk.clone());
            }
        }
        divs = next;
    }
    divs.sort();
    Some(divs)
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = x.abs_diff(y).gcd(&n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factors_small_and_large() {
        let f = factorize(&BigInt::from(-360)).unwrap();
        let v: Vec<(u64, u32)> = f.into_iter().map(|(p, e)| (p.to_u64().unwrap(), e)).collect();
        assert_eq!(v, vec![(2, 3), (3, 2), (5, 1)]);
        // 1000003 * 998244353
        let n = BigInt::from(1_000_003u64) * BigInt::from(998_244_353u64);
        let f = factorize(&n).unwrap();
        assert_eq!(f.len(), 2);
        assert!(factorize(&BigInt::zero()).is_none());
    }

    #[test]
    fn divisor_lists() {
        let d: Vec<i64> = divisors(&BigInt::from(12)).unwrap().iter().map(|d| d.try_into().unwrap()).collect();
        assert_eq!(d, vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(&BigInt::from(1)).unwrap(), vec![BigInt::one()]);
    }

    #[test]
    fn primality() {
        assert!(is_prime_u64(998_244_353));
        assert!(!is_prime_u64(1_000_003 * 3));
        assert!(is_prime_u64(18_446_744_073_709_551_557));
    }
}
