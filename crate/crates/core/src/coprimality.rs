//! Coprimality and strong coprimality of Laurent polynomials.
//!
//! `p` and `q` are strongly coprime when `p(tⁿ)` and `q(tᵏ)` are coprime for all
//! non-zero integers `n, k`. A common root `z` of `p(tⁿ)` and `q(tᵏ)` gives roots
//! `r = zⁿ` of `p` and `s = zᵏ` of `q`; after dividing out `gcd(n, k)` this is the
//! same as a relation `rᵏ = sⁿ` with `gcd(k, n) = 1`. The decision procedure
//! classifies roots and looks for such relations exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use crate::algebra::factor;
use crate::algebra::laurent::{lp_gcd, LaurentPolynomial};
use crate::algebra::poly::Poly;
use crate::algebra::quadratic::QuadraticSurd;
use crate::algebra::rational::Rational;
use crate::algebra::roots::{classify_roots, RootDescriptor, RootKind};
use crate::error::{Error, Result};

/// Default bound on `|k|, |n|` when searching relations between elements of
/// norm ±1 in a real quadratic field.
pub const DEFAULT_EXPONENT_LIMIT: u64 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Coprime,
    NotCoprime,
    StronglyCoprime,
    NotStronglyCoprime,
    Undecidable,
}

impl Relation {
    pub fn as_str(&self) -> &'static str {
        match self {
            Relation::Coprime => "Coprime",
            Relation::NotCoprime => "NotCoprime",
            Relation::StronglyCoprime => "StronglyCoprime",
            Relation::NotStronglyCoprime => "NotStronglyCoprime",
            Relation::Undecidable => "Undecidable",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    CommonFactor(LaurentPolynomial),
    /// `root_pᵏ = root_qⁿ`.
    Dependence { root_p: RootDescriptor, root_q: RootDescriptor, k: i64, n: i64 },
    /// Root pairs whose dependence could not be decided.
    Blocking(Vec<(RootDescriptor, RootDescriptor)>),
    /// The deciding index (1-based) of a sequence comparison and its verdict.
    Sequence { index: usize, verdict: Box<CoprimalityVerdict> },
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoprimalityVerdict {
    pub relation: Relation,
    pub witness: Option<Witness>,
}

impl CoprimalityVerdict {
    fn bare(relation: Relation) -> Self {
        CoprimalityVerdict { relation, witness: None }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({"relation": self.relation.as_str()});
        if let Some(w) = &self.witness {
            v["witness"] = match w {
                Witness::CommonFactor(g) => json!({"common_factor": g.to_string()}),
                Witness::Dependence { root_p, root_q, k, n } => json!({
                    "k": k,
                    "n": n,
                    "root_p": root_p.to_json(),
                    "root_q": root_q.to_json(),
                }),
                Witness::Blocking(pairs) => json!({
                    "blocking": pairs.iter().map(|(a, b)| json!([a.to_json(), b.to_json()])).collect::<Vec<_>>(),
                }),
                Witness::Sequence { index, verdict } => json!({"index": index, "verdict": verdict.to_json()}),
            };
        }
        v
    }
}

impl Serialize for CoprimalityVerdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

/// Outcome of a multiplicative-dependence test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dependence {
    /// `rᵏ = sⁿ` with `k, n ≠ 0`.
    Dependent { k: i64, n: i64 },
    Independent,
    Undecidable,
}

impl Dependence {
    fn swapped(self) -> Dependence {
        match self {
            Dependence::Dependent { k, n } => Dependence::Dependent { k: n, n: k },
            d => d,
        }
    }
}

/// Plain coprimality in ℚ[t, t⁻¹].
pub fn coprime(p: &LaurentPolynomial, q: &LaurentPolynomial) -> Result<CoprimalityVerdict> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = lp_gcd(p, q)?;
    Ok(if g.is_unit_multiple() {
        CoprimalityVerdict::bare(Relation::Coprime)
    } else {
        CoprimalityVerdict { relation: Relation::NotCoprime, witness: Some(Witness::CommonFactor(integral(&g)?)) }
    })
}

/// Primitive integer representative.
fn integral(g: &LaurentPolynomial) -> Result<LaurentPolynomial> {
    Ok(LaurentPolynomial::from_poly(&Poly::from_bigints(&g.normal_poly()?.primitive_integer())))
}

pub fn multiplicatively_dependent(r: &RootDescriptor, s: &RootDescriptor) -> Dependence {
    multiplicatively_dependent_with_limit(r, s, DEFAULT_EXPONENT_LIMIT)
}

/// Decides whether `rᵏ = sⁿ` for some coprime non-zero `k, n`.
pub fn multiplicatively_dependent_with_limit(r: &RootDescriptor, s: &RootDescriptor, limit: u64) -> Dependence {
    use RootKind::*;
    match (&r.kind, &s.kind) {
        // e^{2πi/a}^(L/b) = e^{2πi/b}^(L/a) with L = lcm(a, b)
        (RootOfUnity(a), RootOfUnity(b)) => {
            let l = a.lcm(b);
            Dependence::Dependent { k: (l / b) as i64, n: (l / a) as i64 }
        }
        (RootOfUnity(_), _) | (_, RootOfUnity(_)) => Dependence::Independent,
        (Unsupported { .. }, _) | (_, Unsupported { .. }) => Dependence::Undecidable,
        (RationalRoot(x), RationalRoot(y)) => rational_dependence(x, y),
        (QuadraticRoot { d, .. }, QuadraticRoot { d: e, .. }) if d != e => Dependence::Independent,
        (QuadraticRoot { d, .. }, _) => field_dependence(&r.as_surd(d).unwrap(), &s.as_surd(d).unwrap(), limit),
        (_, QuadraticRoot { d, .. }) => field_dependence(&s.as_surd(d).unwrap(), &r.as_surd(d).unwrap(), limit).swapped(),
    }
}

/// Exponent vector of a positive rational over its primes.
fn prime_exponents(x: &Rational) -> Option<std::collections::BTreeMap<BigInt, i64>> {
    let mut out = std::collections::BTreeMap::new();
    for (p, e) in factor::factorize(x.numer())? {
        out.insert(BigInt::from(p), e as i64);
    }
    for (p, e) in factor::factorize(x.denom())? {
        *out.entry(BigInt::from(p)).or_insert(0) -= e as i64;
    }
    Some(out)
}

/// For positive rationals `x, y ≠ 1`: the primitive `(k, n)`, `n > 0`, with `xᵏ = yⁿ`.
/// `Some(None)` when there is none, `None` when factorisation fails.
fn log_relation(x: &Rational, y: &Rational) -> Option<Option<(i64, i64)>> {
    let a = prime_exponents(x)?;
    let b = prime_exponents(y)?;
    if a.len() != b.len() || a.keys().ne(b.keys()) {
        return Some(None);
    }
    let (p0, a0) = a.iter().next()?;
    let b0 = b[p0];
    // k·a = n·b with (k, n) = (b0, a0)/gcd.
    let g = a0.gcd(&b0);
    let (mut k, mut n) = (b0 / g, a0 / g);
    if n < 0 {
        k = -k;
        n = -n;
    }
    let proportional = a.iter().all(|(p, ai)| k * ai == n * b[p]);
    Some(proportional.then_some((k, n)))
}

fn rational_dependence(x: &Rational, y: &Rational) -> Dependence {
    match log_relation(&x.abs(), &y.abs()) {
        None => Dependence::Undecidable,
        Some(None) => Dependence::Independent,
        Some(Some((k, n))) => {
            let neg_lhs = x.is_negative() && k % 2 != 0;
            let neg_rhs = y.is_negative() && n % 2 != 0;
            if neg_lhs == neg_rhs {
                Dependence::Dependent { k, n }
            } else {
                Dependence::Independent
            }
        }
    }
}

/// `r, s` in the same real quadratic field, at least one irrational.
fn field_dependence(r: &QuadraticSurd, s: &QuadraticSurd, limit: u64) -> Dependence {
    let nr = r.norm().abs();
    let ns = s.norm().abs();
    let confirm = |k: i64, n: i64| -> Option<bool> {
        let lhs = r.pow(k);
        let rhs = s.pow(n);
        if lhs == rhs {
            Some(true)
        } else if lhs == rhs.neg() {
            Some(false)
        } else {
            None
        }
    };
    match (nr.is_one(), ns.is_one()) {
        (false, false) => match log_relation(&nr, &ns) {
            None => Dependence::Undecidable,
            Some(None) => Dependence::Independent,
            // Any coprime solution is ±(k, n).
            Some(Some((k, n))) => match confirm(k, n) {
                Some(true) => Dependence::Dependent { k, n },
                _ => Dependence::Independent,
            },
        },
        (true, true) => {
            if r.is_integral() != s.is_integral() {
                return Dependence::Independent;
            }
            // |r|ᵏ = |s|ⁿ: k/n is a convergent of log|s| / log|r|.
            let lr = r.to_f64().abs().ln();
            let ls = s.to_f64().abs().ln();
            if lr == 0.0 || ls == 0.0 || !lr.is_finite() || !ls.is_finite() {
                return Dependence::Undecidable;
            }
            for (k, n) in convergents(ls / lr, limit) {
                match confirm(k, n) {
                    Some(true) => return Dependence::Dependent { k, n },
                    Some(false) => return Dependence::Independent,
                    None => {}
                }
            }
            Dependence::Undecidable
        }
        _ => Dependence::Independent,
    }
}

/// Continued-fraction convergents `p/q` of `x` with `|p|, q ≤ limit`, as `(p, q)`.
fn convergents(x: f64, limit: u64) -> Vec<(i64, i64)> {
    let limit = limit as i64;
    let mut out = Vec::new();
    let (mut h0, mut h1) = (0i64, 1i64);
    let (mut k0, mut k1) = (1i64, 0i64);
    let mut y = x;
    for _ in 0..64 {
        let a = y.floor();
        if !a.is_finite() || a.abs() > limit as f64 {
            break;
        }
        let a = a as i64;
        let h2 = a * h1 + h0;
        let k2 = a * k1 + k0;
        if h2.abs() > limit || k2 > limit {
            break;
        }
        if h2 != 0 {
            out.push((h2, k2));
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        let frac = y - a as f64;
        if frac.abs() < 1e-12 {
            break;
        }
        y = 1.0 / frac;
    }
    out
}

/// Strong coprimality decided from classified roots.
pub fn strongly_coprime(p: &LaurentPolynomial, q: &LaurentPolynomial) -> Result<CoprimalityVerdict> {
    strongly_coprime_with_limit(p, q, DEFAULT_EXPONENT_LIMIT)
}

pub fn strongly_coprime_with_limit(p: &LaurentPolynomial, q: &LaurentPolynomial, limit: u64) -> Result<CoprimalityVerdict> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.normal_poly()?.is_constant() || q.normal_poly()?.is_constant() {
        return Ok(CoprimalityVerdict::bare(Relation::StronglyCoprime));
    }
    let rp = distinct_roots(classify_roots(p)?);
    let rq = distinct_roots(classify_roots(q)?);
    let mut blocking = Vec::new();
    for a in &rp {
        for b in &rq {
            match multiplicatively_dependent_with_limit(a, b, limit) {
                Dependence::Dependent { k, n } => {
                    return Ok(CoprimalityVerdict {
                        relation: Relation::NotStronglyCoprime,
                        witness: Some(Witness::Dependence { root_p: a.clone(), root_q: b.clone(), k, n }),
                    })
                }
                Dependence::Undecidable => blocking.push((a.clone(), b.clone())),
                Dependence::Independent => {}
            }
        }
    }
    Ok(if blocking.is_empty() {
        CoprimalityVerdict::bare(Relation::StronglyCoprime)
    } else {
        CoprimalityVerdict { relation: Relation::Undecidable, witness: Some(Witness::Blocking(blocking)) }
    })
}

fn distinct_roots(roots: Vec<RootDescriptor>) -> Vec<RootDescriptor> {
    let mut out: Vec<RootDescriptor> = Vec::new();
    for r in roots {
        if !out.iter().any(|o| o.kind == r.kind) {
            out.push(r);
        }
    }
    out
}

const ORACLE_PRIME: u64 = 2_147_483_647;

fn reduce_mod(c: &BigInt) -> u64 {
    let m = BigInt::from(ORACLE_PRIME);
    c.mod_floor(&m).to_u64().unwrap()
}

fn inv_mod(a: u64) -> u64 {
    let mut acc = 1u64;
    let mut base = a;
    let mut e = ORACLE_PRIME - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % ORACLE_PRIME;
        }
        base = base * base % ORACLE_PRIME;
        e >>= 1;
    }
    acc
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Degree of `gcd(a, b)` over 𝔽_p, coefficients ascending.
fn gcd_degree_mod(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let lb_inv = inv_mod(*b.last().unwrap());
        while a.len() >= b.len() {
            let shift = a.len() - b.len();
            let f = a.last().unwrap() * lb_inv % ORACLE_PRIME;
            for (i, bi) in b.iter().enumerate() {
                let sub = f * bi % ORACLE_PRIME;
                a[i + shift] = (a[i + shift] + ORACLE_PRIME - sub) % ORACLE_PRIME;
            }
            trim(&mut a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// `p(tᵉ)` in normal form: a polynomial with non-zero constant term.
fn substituted(p: &Poly, e: i64) -> Poly {
    let base = if e < 0 { p.reversed() } else { p.clone() };
    base.inflate(e.unsigned_abs() as usize)
}

fn coprime_after_substitution(p: &Poly, q: &Poly, n: i64, k: i64) -> bool {
    let a = substituted(p, n);
    let b = substituted(q, k);
    let ai = a.primitive_integer();
    let bi = b.primitive_integer();
    let am: Vec<u64> = ai.iter().map(reduce_mod).collect();
    let bm: Vec<u64> = bi.iter().map(reduce_mod).collect();
    if am.last() != Some(&0) && bm.last() != Some(&0) && gcd_degree_mod(am, bm) == 0 {
        return true;
    }
    a.gcd(&b).is_constant()
}

/// Brute-force test: `gcd(p(tⁿ), q(tᵏ))` is constant for all `1 ≤ |n|, |k| ≤ B`.
pub fn strongly_coprime_oracle(p: &LaurentPolynomial, q: &LaurentPolynomial, bound: u64) -> Result<bool> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let pp = p.normal_poly()?;
    let qq = q.normal_poly()?;
    if pp.is_constant() || qq.is_constant() {
        return Ok(true);
    }
    let b = bound as i64;
    // (n, k) and (−n, −k) give the same gcd up to units, and a common factor
    // d = gcd(n, k) can be divided out, so n > 0 and gcd(n, k) = 1 suffice.
    for n in 1..=b {
        for k in (1..=b).flat_map(|k| [k, -k]) {
            if n.gcd(&k) != 1 {
                continue;
            }
            if !coprime_after_substitution(&pp, &qq, n, k) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Sequence comparison: coprime at index 1, or strongly coprime at some later index.
pub fn sequence_strongly_coprime(ps: &[LaurentPolynomial], qs: &[LaurentPolynomial]) -> Result<CoprimalityVerdict> {
    if ps.len() != qs.len() {
        return Err(Error::LengthMismatch { left: ps.len(), right: qs.len() });
    }
    if ps.is_empty() {
        return Err(Error::InvalidInput("polynomial sequences must be non-empty".into()));
    }
    let first = coprime(&ps[0], &qs[0])?;
    let via = |index: usize, verdict: CoprimalityVerdict, relation: Relation| CoprimalityVerdict {
        relation,
        witness: Some(Witness::Sequence { index, verdict: Box::new(verdict) }),
    };
    if first.relation == Relation::Coprime {
        return Ok(via(1, first, Relation::StronglyCoprime));
    }
    let mut undecided = None;
    for i in 1..ps.len() {
        let v = strongly_coprime(&ps[i], &qs[i])?;
        match v.relation {
            Relation::StronglyCoprime => return Ok(via(i + 1, v, Relation::StronglyCoprime)),
            Relation::Undecidable if undecided.is_none() => undecided = Some((i + 1, v)),
            _ => {}
        }
    }
    Ok(match undecided {
        Some((i, v)) => via(i, v, Relation::Undecidable),
        None => via(1, first, Relation::NotStronglyCoprime),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn lp(c: &[i64]) -> LaurentPolynomial {
        LaurentPolynomial::from_i64s(c)
    }

    fn q_m(m: i64) -> LaurentPolynomial {
        lp(&[m * (m + 1), -(m * m + (m + 1) * (m + 1)), m * (m + 1)])
    }

    fn delta_m(m: i64) -> LaurentPolynomial {
        lp(&[m * m, -(2 * m * m + 1), m * m])
    }

    fn root(kind: RootKind) -> RootDescriptor {
        RootDescriptor { kind, multiplicity: 1 }
    }

    #[test]
    fn plain_coprimality() {
        assert_eq!(coprime(&delta_m(2), &delta_m(3)).unwrap().relation, Relation::Coprime);
        let p = delta_m(2);
        let v = coprime(&p, &(&p * &lp(&[-2, 1]))).unwrap();
        assert_eq!(v.relation, Relation::NotCoprime);
        match v.witness {
            Some(Witness::CommonFactor(g)) => assert!(g.unit_equivalent(&p), "{g} vs {p}"),
            w => panic!("unexpected witness {w:?} for {p}"),
        }
        assert_eq!(coprime(&q_m(2), &q_m(2)).unwrap().relation, Relation::NotCoprime);
        assert_eq!(coprime(&LaurentPolynomial::zero(), &p), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn dependence_cases() {
        let r = |x: Rational| root(RootKind::RationalRoot(x));
        assert_eq!(multiplicatively_dependent(&r(int(2)), &r(int(4))), Dependence::Dependent { k: 2, n: 1 });
        assert_eq!(multiplicatively_dependent(&r(rat(2, 3)), &r(rat(3, 4))), Dependence::Independent);
        assert_eq!(
            multiplicatively_dependent(&root(RootKind::RootOfUnity(3)), &root(RootKind::RootOfUnity(2))),
            Dependence::Dependent { k: 3, n: 2 }
        );
        assert_eq!(
            multiplicatively_dependent(&root(RootKind::RootOfUnity(4)), &root(RootKind::RootOfUnity(2))),
            Dependence::Dependent { k: 2, n: 1 }
        );
        assert_eq!(multiplicatively_dependent(&root(RootKind::RootOfUnity(2)), &r(int(2))), Dependence::Independent);
        // (−2)¹ vs 2¹: only even exponents relate them.
        assert_eq!(multiplicatively_dependent(&r(int(-2)), &r(int(2))), Dependence::Independent);
        assert_eq!(multiplicatively_dependent(&r(int(-2)), &r(int(-8))), Dependence::Dependent { k: 3, n: 1 });
        assert_eq!(multiplicatively_dependent(&r(int(-2)), &r(int(4))), Dependence::Dependent { k: 2, n: 1 });
    }

    #[test]
    fn quadratic_dependence() {
        let d5 = BigInt::from(5);
        let phi = root(RootKind::QuadraticRoot { a: rat(1, 2), b: rat(1, 2), d: d5.clone() });
        // φ³ = 2 + √5
        let phi3 = root(RootKind::QuadraticRoot { a: int(2), b: int(1), d: d5.clone() });
        assert_eq!(multiplicatively_dependent(&phi, &phi3), Dependence::Dependent { k: 3, n: 1 });
        assert_eq!(multiplicatively_dependent(&phi3, &phi), Dependence::Dependent { k: 1, n: 3 });
        let sqrt2 = root(RootKind::QuadraticRoot { a: int(0), b: int(1), d: BigInt::from(2) });
        let two = root(RootKind::RationalRoot(int(2)));
        assert_eq!(multiplicatively_dependent(&sqrt2, &two), Dependence::Dependent { k: 2, n: 1 });
        let sqrt3 = root(RootKind::QuadraticRoot { a: int(0), b: int(1), d: BigInt::from(3) });
        assert_eq!(multiplicatively_dependent(&sqrt2, &sqrt3), Dependence::Independent);
        let other = root(RootKind::QuadraticRoot { a: rat(9, 8), b: rat(1, 8), d: BigInt::from(17) });
        assert_eq!(multiplicatively_dependent(&other, &two), Dependence::Independent);
        let cubic = root(RootKind::Unsupported { degree: 3, factor: Poly::from_i64s(&[-2, 0, 0, 1]) });
        assert_eq!(multiplicatively_dependent(&cubic, &two), Dependence::Undecidable);
    }

    #[test]
    fn strong_coprimality_examples() {
        assert_eq!(strongly_coprime(&q_m(2), &q_m(3)).unwrap().relation, Relation::StronglyCoprime);
        let v = strongly_coprime(&lp(&[-2, 1]), &lp(&[-4, 1])).unwrap();
        assert_eq!(v.relation, Relation::NotStronglyCoprime);
        assert!(matches!(v.witness, Some(Witness::Dependence { k: 2, n: 1, .. })));
        let v = strongly_coprime(&q_m(4), &q_m(4)).unwrap();
        assert!(matches!(v.witness, Some(Witness::Dependence { k: 1, n: 1, .. })));
        assert_eq!(strongly_coprime(&lp(&[2, 1]), &lp(&[-2, 1])).unwrap().relation, Relation::StronglyCoprime);
        assert_eq!(strongly_coprime(&lp(&[5]), &q_m(2)).unwrap().relation, Relation::StronglyCoprime);
        assert_eq!(strongly_coprime(&lp(&[-2, 0, 0, 1]), &q_m(2)).unwrap().relation, Relation::Undecidable);
    }

    #[test]
    fn oracle_examples() {
        assert!(strongly_coprime_oracle(&q_m(2), &q_m(3), 8).unwrap());
        assert!(!strongly_coprime_oracle(&lp(&[-2, 1]), &lp(&[-4, 1]), 2).unwrap());
        assert!(!strongly_coprime_oracle(&q_m(3), &q_m(3), 1).unwrap());
        assert!(strongly_coprime_oracle(&lp(&[2, 1]), &lp(&[-2, 1]), 6).unwrap());
    }

    #[test]
    fn sequences() {
        let v = sequence_strongly_coprime(&[delta_m(2), q_m(5)], &[delta_m(3), q_m(5)]).unwrap();
        assert_eq!(v.relation, Relation::StronglyCoprime);
        assert!(matches!(v.witness, Some(Witness::Sequence { index: 1, .. })));
        let v = sequence_strongly_coprime(&[delta_m(2), q_m(5)], &[delta_m(2), q_m(7)]).unwrap();
        assert!(matches!(v.witness, Some(Witness::Sequence { index: 2, .. })));
        let v = sequence_strongly_coprime(&[delta_m(2), q_m(5)], &[delta_m(2), q_m(5)]).unwrap();
        assert_eq!(v.relation, Relation::NotStronglyCoprime);
        assert_eq!(
            sequence_strongly_coprime(&[delta_m(2)], &[delta_m(2), q_m(5)]),
            Err(Error::LengthMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn json_shape() {
        let v = strongly_coprime(&q_m(2), &q_m(3)).unwrap();
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"{"relation":"StronglyCoprime"}"#);
    }
}
