//! Classification of the non-zero complex roots of a Laurent polynomial into
//! rational roots, roots of unity, real quadratic irrationals and everything
//! else.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use super::factor;
use super::laurent::LaurentPolynomial;
use super::poly::Poly;
use super::quadratic::{square_decompose, QuadraticSurd};
use super::rational::{self, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RootKind {
    RationalRoot(Rational),
    RootOfUnity(u64),
    /// `a + b·√d`, `b ≠ 0`, `d > 1` squarefree.
    QuadraticRoot { a: Rational, b: Rational, d: BigInt },
    /// A root of an irreducible factor outside the supported classes.
    Unsupported { degree: usize, factor: Poly },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootDescriptor {
    pub kind: RootKind,
    pub multiplicity: usize,
}

impl RootDescriptor {
    pub fn is_unsupported(&self) -> bool {
        matches!(self.kind, RootKind::Unsupported { .. })
    }

    /// The root as an element of ℚ(√d), when it is rational or real quadratic.
    pub fn as_surd(&self, d: &BigInt) -> Option<QuadraticSurd> {
        match &self.kind {
            RootKind::RationalRoot(r) => Some(QuadraticSurd::rational(r.clone(), d.clone())),
            RootKind::RootOfUnity(1) => Some(QuadraticSurd::rational(Rational::one(), d.clone())),
            RootKind::RootOfUnity(2) => Some(QuadraticSurd::rational(-Rational::one(), d.clone())),
            RootKind::QuadraticRoot { a, b, d: e } if e == d => Some(QuadraticSurd::new(a.clone(), b.clone(), d.clone())),
            _ => None,
        }
    }

    /// Monic minimal polynomial over ℚ.
    pub fn minimal_poly(&self) -> Poly {
        match &self.kind {
            RootKind::RationalRoot(r) => Poly::from_coeffs(vec![-r, Rational::one()]),
            RootKind::RootOfUnity(n) => cyclotomic(*n),
            RootKind::QuadraticRoot { a, b, d } => {
                let norm = a * a - b * b * Rational::from_integer(d.clone());
                Poly::from_coeffs(vec![norm, -(a + a), Rational::one()])
            }
            RootKind::Unsupported { factor, .. } => factor.monic(),
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = match &self.kind {
            RootKind::RationalRoot(r) => json!({"kind": "RationalRoot", "value": rational::format(r)}),
            RootKind::RootOfUnity(n) => json!({"kind": "RootOfUnity", "order": n}),
            RootKind::QuadraticRoot { a, b, d } => json!({
                "kind": "QuadraticRoot",
                "a": rational::format(a),
                "b": rational::format(b),
                "D": d.to_string(),
            }),
            RootKind::Unsupported { degree, factor } => json!({
                "kind": "Unsupported",
                "degree": degree,
                "factor": factor.to_string_var('t'),
            }),
        };
        v["multiplicity"] = json!(self.multiplicity);
        v
    }
}

impl fmt::Display for RootKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootKind::RationalRoot(r) => write!(f, "{}", rational::format(r)),
            RootKind::RootOfUnity(1) => write!(f, "1"),
            RootKind::RootOfUnity(2) => write!(f, "-1"),
            RootKind::RootOfUnity(n) => write!(f, "primitive {n}-th root of unity"),
            RootKind::QuadraticRoot { a, b, d } => {
                write!(f, "{}", QuadraticSurd::new(a.clone(), b.clone(), d.clone()))
            }
            RootKind::Unsupported { factor, .. } => write!(f, "root of {}", factor.to_string_var('t')),
        }
    }
}

impl Serialize for RootDescriptor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

/// `n` is a perfect square.
pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &(&r * &r) == n
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut m = n;
    let mut out = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if m > 1 {
        out -= out / m;
    }
    out
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn cyclotomic_cache() -> &'static Mutex<HashMap<u64, Poly>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Poly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The `n`-th cyclotomic polynomial Φₙ.
pub fn cyclotomic(n: u64) -> Poly {
    assert!(n >= 1);
    if let Some(p) = cyclotomic_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    // Φ_1 = x - 1; Φ_{kp}(x) = Φ_k(x^p)/Φ_k(x) for p ∤ k; Φ_n(x) = Φ_rad(n)(x^{n/rad(n)}).
    let primes = prime_divisors(n);
    let mut phi = Poly::from_i64s(&[-1, 1]);
    for p in &primes {
        let inflated = phi.inflate(*p as usize);
        phi = inflated.div_exact(&phi).expect("cyclotomic recursion is exact");
    }
    let rad: u64 = primes.iter().product();
    let phi = phi.inflate((n / rad) as usize);
    cyclotomic_cache().lock().unwrap().insert(n, phi.clone());
    phi
}

/// Every non-zero complex root of `normalize(p)`, classified, with multiplicity.
pub fn classify_roots(p: &LaurentPolynomial) -> Result<Vec<RootDescriptor>> {
    let f = p.normal_poly()?;
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let mut out = Vec::new();
    for (g, mult) in f.squarefree_decomposition() {
        for kind in classify_squarefree(&g) {
            out.push(RootDescriptor { kind, multiplicity: mult });
        }
    }
    Ok(out)
}

fn linear_root_kind(r: Rational) -> RootKind {
    if r.is_one() {
        RootKind::RootOfUnity(1)
    } else if r == -Rational::one() {
        RootKind::RootOfUnity(2)
    } else {
        RootKind::RationalRoot(r)
    }
}

fn classify_squarefree(g: &Poly) -> Vec<RootKind> {
    let mut out = Vec::new();
    let mut g = g.monic();

    extract_rational_roots(&mut g, &mut out);

    let deg = g.degree().unwrap_or(0) as u64;
    if deg >= 2 {
        let mut n = 3u64;
        while n <= 2 * deg * deg + 2 && g.degree().unwrap_or(0) >= 2 {
            let phi_n = euler_phi(n);
            if phi_n <= g.degree().unwrap() as u64 {
                if let Some(q) = g.div_exact(&cyclotomic(n)) {
                    g = q;
                    for _ in 0..phi_n {
                        out.push(RootKind::RootOfUnity(n));
                    }
                }
            }
            n += 1;
        }
    }

    match g.degree().unwrap_or(0) {
        0 => {}
        2 => out.extend(quadratic_kinds(&g)),
        _ => {
            for factor in split_quadratic_factors(&g) {
                if factor.degree() == Some(2) {
                    out.extend(quadratic_kinds(&factor));
                } else {
                    out.push(RootKind::Unsupported { degree: factor.degree().unwrap(), factor });
                }
            }
        }
    }
    out
}

/// Removes all rational roots of the squarefree polynomial `g`.
fn extract_rational_roots(g: &mut Poly, out: &mut Vec<RootKind>) {
    if g.degree() == Some(1) {
        let r = -g.coeff(0) / g.coeff(1);
        out.push(linear_root_kind(r));
        *g = Poly::one();
        return;
    }
    let ints = g.primitive_integer();
    let (Some(a0), Some(an)) = (ints.first(), ints.last()) else { return };
    if a0.is_zero() {
        return;
    }
    let (Some(num_divs), Some(den_divs)) = (factor::divisors(a0), factor::divisors(an)) else {
        return;
    };
    let bound = super::real_roots::root_bound(g);
    for q in &den_divs {
        for p in &num_divs {
            if g.degree().unwrap_or(0) == 0 {
                return;
            }
            let r = Rational::new(p.clone(), q.clone());
            if r.denom() != q || r > bound {
                // Non-reduced candidates repeat an earlier one.
                continue;
            }
            for cand in [r.clone(), -r] {
                if g.eval(&cand).is_zero() {
                    *g = g.div_exact(&Poly::from_coeffs(vec![-&cand, Rational::one()])).expect("root divides");
                    out.push(linear_root_kind(cand));
                }
            }
        }
    }
}

/// Roots of an irreducible monic quadratic over ℚ.
fn quadratic_kinds(g: &Poly) -> Vec<RootKind> {
    let g = g.monic();
    let half_b = g.coeff(1) / rational::int(2);
    let disc = &half_b * &half_b - g.coeff(0);
    let a = -half_b;
    if disc.is_positive() {
        if let Some((s, d)) = square_decompose(&disc) {
            if d > BigInt::one() {
                return vec![
                    RootKind::QuadraticRoot { a: a.clone(), b: s.clone(), d: d.clone() },
                    RootKind::QuadraticRoot { a, b: -s, d },
                ];
            }
        }
    }
    vec![RootKind::Unsupported { degree: 2, factor: g }]
}

/// Splits off every quadratic factor with rational coefficients, located from
/// numerical root approximations and confirmed by exact division. Returns the
/// quadratic factors followed by the remaining cofactor, if nonconstant.
fn split_quadratic_factors(g: &Poly) -> Vec<Poly> {
    let mut rest = g.monic();
    let mut out = Vec::new();
    let ints = rest.primitive_integer();
    let lead = Rational::from_integer(ints.last().unwrap().clone());
    let mut roots = numeric_roots(&rest);
    let mut i = 0;
    'outer: while i < roots.len() {
        for j in i + 1..roots.len() {
            let s = roots[i] + roots[j];
            let p = roots[i] * roots[j];
            if s.im.abs() > 1e-6 * (1.0 + s.norm()) || p.im.abs() > 1e-6 * (1.0 + p.norm()) {
                continue;
            }
            let lead_f = rational::to_f64(&lead);
            let (Some(sr), Some(pr)) = (rational_near(s.re, lead_f, &lead), rational_near(p.re, lead_f, &lead)) else {
                continue;
            };
            let quad = Poly::from_coeffs(vec![pr, -sr, Rational::one()]);
            if let Some(q) = rest.div_exact(&quad) {
                rest = q;
                out.push(quad);
                roots.remove(j);
                roots.remove(i);
                continue 'outer;
            }
        }
        i += 1;
    }
    if rest.degree().unwrap_or(0) > 0 {
        out.push(rest);
    }
    out
}

fn rational_near(x: f64, lead_f: f64, lead: &Rational) -> Option<Rational> {
    let scaled = (x * lead_f).round();
    if !scaled.is_finite() || scaled.abs() > 9.0e15 {
        return None;
    }
    Some(Rational::from_integer(BigInt::from(scaled as i64)) / lead)
}

/// Durand–Kerner iteration on the monic polynomial `g`.
pub(crate) fn numeric_roots(g: &Poly) -> Vec<Complex64> {
    let n = g.degree().unwrap_or(0);
    if n == 0 {
        return Vec::new();
    }
    let lead = g.lead();
    let c: Vec<Complex64> = g
        .coeffs()
        .iter()
        .map(|a| Complex64::new((a / &lead).to_f64().unwrap_or(f64::NAN), 0.0))
        .collect();
    let eval = |z: Complex64| c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, a| acc * z + a);
    let radius = 1.0 + c[..n].iter().map(|a| a.norm()).fold(0.0, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32) * (radius / 2.0).max(1.0)).collect();
    for _ in 0..2000 {
        let mut delta: f64 = 0.0;
        for i in 0..n {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    denom *= z[i] - z[j];
                }
            }
            if denom.norm() == 0.0 {
                denom = Complex64::new(1e-12, 0.0);
            }
            let step = eval(z[i]) / denom;
            z[i] -= step;
            delta = delta.max(step.norm() / (1.0 + z[i].norm()));
        }
        if delta < 1e-15 {
            break;
        }
    }
    z
}
