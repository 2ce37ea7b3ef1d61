//! The Levine–Tristram signature as a step function of `θ ∈ (0, π]`.
//!
//! A point `ω = e^{iθ}` of the upper half circle is encoded by `x = ω + ω̄ = 2cos θ`.
//! Unit-circle roots of `Δ` are the roots in `(−2, 2)` of the polynomial `P` with
//! `Δ(t) = t^h · P(t + t⁻¹)`. Between consecutive roots the signature of
//! `(1−ω)V + (1−ω̄)Vᵀ` is constant and is evaluated exactly at a rational `x`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::{alexander, SeifertMatrix};
use crate::algebra::interval::{arccos_over_pi, Interval};
use crate::algebra::matrix::{inertia, IntegerMatrix};
use crate::algebra::poly::Poly;
use crate::algebra::quadratic::{square_decompose, QuadraticSurd};
use crate::algebra::rational::{self, Rational};
use crate::algebra::real_roots::{isolate_real_roots, RealAlgebraic};
use crate::algebra::roots::{cyclotomic, euler_phi};

/// Exact description of a jump angle.
#[derive(Clone, Debug)]
pub enum JumpAngle {
    /// `θ/π` is rational: `ω` is a root of unity.
    RationalMultipleOfPi(Rational),
    /// `θ = arccos(x/2)` for the algebraic `x`.
    Arccos,
}

#[derive(Clone, Debug)]
pub struct Jump {
    /// `x = 2cos θ`, a root of the symmetrized Alexander polynomial.
    pub x: RealAlgebraic,
    pub angle: JumpAngle,
}

impl Jump {
    /// Certified enclosure of `θ/π` of width at most `2^-prec` (roughly).
    pub fn theta_over_pi(&self, prec: u32) -> Interval {
        match &self.angle {
            JumpAngle::RationalMultipleOfPi(q) => Interval::point(q.clone()),
            JumpAngle::Arccos => {
                let x = strictly_inside(&self.x, prec);
                let half = rational::rat(1, 2);
                arccos_over_pi(&Interval::new(x.lo() * &half, x.hi() * &half), prec)
            }
        }
    }
}

/// Refines an `x` in `(−2, 2)` until its enclosure sits strictly inside `(−2, 2)`
/// and is narrower than `2^-(prec + 4)`.
pub(crate) fn strictly_inside(x: &RealAlgebraic, prec: u32) -> RealAlgebraic {
    let mut x = x.clone();
    let two = rational::int(2);
    let target = Rational::new(BigInt::one(), BigInt::one() << (prec as usize + 4));
    loop {
        let w = x.width();
        if x.lo() > &-two.clone() && x.hi() < &two && w <= target {
            return x;
        }
        x.refine_to(&(w / rational::int(2)).min(target.clone()));
    }
}

#[derive(Clone, Debug)]
pub struct SignatureProfile {
    /// Ordered by increasing `θ`, i.e. decreasing `x`.
    pub jumps: Vec<Jump>,
    /// `σ` on each open arc, starting from the arc next to `θ = 0`.
    pub arc_values: Vec<i64>,
    /// Rational `x` at which each arc value was evaluated.
    pub arc_samples: Vec<Rational>,
    pub classical_signature: i64,
}

impl SignatureProfile {
    /// Value at a jump point: the average of the two adjacent arcs.
    pub fn value_at_jump(&self, i: usize) -> Rational {
        Rational::new(BigInt::from(self.arc_values[i] + self.arc_values[i + 1]), BigInt::from(2))
    }

    pub fn is_identically_zero(&self) -> bool {
        self.arc_values.iter().all(|&s| s == 0)
    }

    /// Signature at the point with `x = 2cos θ`, for rational `x`.
    pub fn value_at_x(&self, x: &Rational) -> Rational {
        for (i, j) in self.jumps.iter().enumerate() {
            match j.x.cmp_rational(x) {
                std::cmp::Ordering::Less => return Rational::from_integer(BigInt::from(self.arc_values[i])),
                std::cmp::Ordering::Equal => return self.value_at_jump(i),
                std::cmp::Ordering::Greater => {}
            }
        }
        Rational::from_integer(BigInt::from(*self.arc_values.last().unwrap()))
    }

    pub fn to_json(&self, prec: u32) -> Value {
        let jumps: Vec<Value> = self
            .jumps
            .iter()
            .enumerate()
            .map(|(i, j)| {
                let theta = j.theta_over_pi(prec);
                let exact = match &j.angle {
                    JumpAngle::RationalMultipleOfPi(q) => rational::format(q),
                    JumpAngle::Arccos => "arccos(x/2)/pi".to_string(),
                };
                json!({
                    "x_poly": j.x.poly().to_string_var('x'),
                    "x_interval": [rational::format(j.x.lo()), rational::format(j.x.hi())],
                    "theta_over_pi": exact,
                    "theta_over_pi_enclosure": [
                        rational::to_decimal(&theta.lo, 15, false),
                        rational::to_decimal(&theta.hi, 15, true),
                    ],
                    "value": rational::format(&self.value_at_jump(i)),
                })
            })
            .collect();
        json!({
            "jumps": jumps,
            "arc_values": self.arc_values,
            "arc_sample_x": self.arc_samples.iter().map(rational::format).collect::<Vec<_>>(),
            "classical_signature": self.classical_signature,
        })
    }
}

/// `P(x)` with `Δ(t) = t^h · P(t + t⁻¹)` for a palindromic `Δ` of degree `2h`.
pub(crate) fn symmetrize(delta: &Poly) -> Poly {
    let deg = delta.degree().unwrap_or(0);
    assert!(deg.is_multiple_of(2), "symmetric polynomial of odd degree");
    let h = deg / 2;
    // D_j(x) = t^j + t^-j: D_0 = 2, D_1 = x, D_{j+1} = x D_j − D_{j−1}.
    let mut out = Poly::constant(delta.coeff(h));
    let mut prev = Poly::constant(rational::int(2));
    let mut cur = Poly::x();
    for j in 1..=h {
        out = &out + &cur.scale(&delta.coeff(h + j));
        let next = &(&Poly::x() * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    out
}

/// Signature of `(1−ω)V + (1−ω̄)Vᵀ` at `x = ω + ω̄`, for rational `−2 ≤ x < 2`,
/// or `None` when `4 − x²` resists factorisation.
pub fn signature_at_x(v: &SeifertMatrix, x: &Rational) -> Option<i64> {
    let n = v.size();
    if n == 0 {
        return Some(0);
    }
    let a = v.matrix();
    let sym = a.add(&a.transpose()).expect("square");
    let two = rational::int(2);
    let s_scale = &two - x;
    if x == &-two.clone() {
        return Some(inertia(&rational_rows(&sym, &s_scale)).signature());
    }
    // 2·H = (2 − x)(V + Vᵀ) + i·√(4 − x²)(Vᵀ − V); the real form [[S, −K], [K, S]]
    // has twice its signature.
    let skew = a.transpose().sub(a).expect("square");
    let r = rational::int(4) - x * x;
    let (s0, d) = square_decompose(&r)?;
    let s_rows = rational_rows(&sym, &s_scale);
    let k_rows = rational_rows(&skew, &s0);
    let doubled = if d.is_one() {
        inertia(&real_form(&s_rows, &k_rows)).signature()
    } else {
        let lift_s = |q: Rational| QuadraticSurd::rational(q, d.clone());
        let s_rows: Vec<Vec<QuadraticSurd>> = s_rows.into_iter().map(|r| r.into_iter().map(lift_s).collect()).collect();
        let k_rows: Vec<Vec<QuadraticSurd>> = k_rows
            .into_iter()
            .map(|r| r.into_iter().map(|q| QuadraticSurd::new(Rational::zero(), q, d.clone())).collect())
            .collect();
        inertia(&real_form(&s_rows, &k_rows)).signature()
    };
    debug_assert!(doubled % 2 == 0);
    Some(doubled / 2)
}

fn rational_rows(m: &IntegerMatrix, scale: &Rational) -> Vec<Vec<Rational>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(|e| Rational::from_integer(e.clone()) * scale).collect())
        .collect()
}

fn real_form<T: Clone + NegOf>(s: &[Vec<T>], k: &[Vec<T>]) -> Vec<Vec<T>> {
    let n = s.len();
    let mut out = vec![Vec::with_capacity(2 * n); 2 * n];
    for i in 0..n {
        for j in 0..n {
            out[i].push(s[i][j].clone());
        }
        for j in 0..n {
            out[i].push(k[i][j].neg_of());
        }
        for j in 0..n {
            out[n + i].push(k[i][j].clone());
        }
        for j in 0..n {
            out[n + i].push(s[i][j].clone());
        }
    }
    out
}

trait NegOf {
    fn neg_of(&self) -> Self;
}

impl NegOf for Rational {
    fn neg_of(&self) -> Self {
        -self
    }
}

impl NegOf for QuadraticSurd {
    fn neg_of(&self) -> Self {
        self.neg()
    }
}

/// The Levine–Tristram signature profile on `θ ∈ (0, π]`.
pub fn signature_profile(v: &SeifertMatrix) -> SignatureProfile {
    let delta = alexander(v).to_poly().0;
    let p = symmetrize(&delta);
    let two = rational::int(2);
    let mut jumps: Vec<Jump> = Vec::new();
    if !p.is_constant() {
        let psf = p.squarefree_part();
        let cyclo = cyclotomic_angles(&delta, &psf);
        let mut roots = isolate_real_roots(&psf, &-two.clone(), &two);
        roots.reverse();
        for iv in roots {
            let x = strictly_inside(&RealAlgebraic::new(psf.clone(), iv), 4);
            let angle = cyclo
                .iter()
                .find(|(y, _)| y.same_number(&x))
                .map(|(_, q)| JumpAngle::RationalMultipleOfPi(q.clone()))
                .unwrap_or(JumpAngle::Arccos);
            jumps.push(Jump { x, angle });
        }
    }

    // Closed sampling windows between consecutive jumps, from θ = 0⁺ to θ = π.
    let mut windows: Vec<(Rational, Rational)> = Vec::with_capacity(jumps.len() + 1);
    let mut upper = two.clone();
    for (i, j) in jumps.iter().enumerate() {
        let hi = if i == 0 { (j.x.hi() + &two) / &two } else { upper.clone() };
        windows.push((j.x.hi().clone(), hi));
        upper = j.x.lo().clone();
    }
    windows.push((-two.clone(), if jumps.is_empty() { -two.clone() } else { upper }));

    let mut arc_values = Vec::with_capacity(windows.len());
    let mut arc_samples = Vec::with_capacity(windows.len());
    for (lo, hi) in windows {
        let (x, s) = sample_window(v, &lo, &hi);
        arc_values.push(s);
        arc_samples.push(x);
    }
    let classical_signature = signature_at_x(v, &-two).expect("x = -2 needs no square root");
    debug_assert_eq!(*arc_values.last().unwrap(), classical_signature);
    SignatureProfile { jumps, arc_values, arc_samples, classical_signature }
}

fn sample_window(v: &SeifertMatrix, lo: &Rational, hi: &Rational) -> (Rational, i64) {
    let mut x = rational::simplest_between(lo, hi);
    let mut denom = 2i64;
    loop {
        if let Some(s) = signature_at_x(v, &x) {
            return (x, s);
        }
        // Fall back to other points of the window.
        x = lo + (hi - lo) / rational::int(denom);
        denom += 1;
    }
}

/// For each `n ≥ 3` with `Φₙ | Δ`, the roots `2cos(2πj/n)` of the symmetrized
/// `Φₙ`, paired with `θ/π = 2j/n`.
fn cyclotomic_angles(delta: &Poly, psf: &Poly) -> Vec<(RealAlgebraic, Rational)> {
    let mut out = Vec::new();
    let deg = delta.degree().unwrap_or(0) as u64;
    let two = rational::int(2);
    for n in 3..=(2 * deg * deg + 2) {
        if euler_phi(n) > deg {
            continue;
        }
        let phi = cyclotomic(n);
        if !phi.divides(delta) {
            continue;
        }
        let psi = symmetrize(&phi);
        debug_assert!(psi.divides(psf));
        let mut roots = isolate_real_roots(&psi, &-two.clone(), &two);
        roots.reverse();
        let js = (1..n).filter(|j| 2 * j < n && j.gcd(&n) == 1);
        for (iv, j) in roots.into_iter().zip(js) {
            out.push((RealAlgebraic::new(psi.clone(), iv), Rational::new(BigInt::from(2 * j), BigInt::from(n))));
        }
    }
    out
}
