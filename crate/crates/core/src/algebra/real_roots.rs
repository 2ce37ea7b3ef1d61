//! Real root isolation with Sturm sequences, and real algebraic numbers given
//! by an isolating interval.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use super::poly::Poly;
use super::rational::{self, Rational};

/// Sturm chain `p, p', -rem(p, p'), ...` of a squarefree polynomial.
#[derive(Clone, Debug)]
pub struct SturmChain {
    seq: Vec<Poly>,
}

impl SturmChain {
    pub fn new(p: &Poly) -> Self {
        let mut seq = vec![p.clone()];
        if p.is_constant() {
            return SturmChain { seq };
        }
        seq.push(p.derivative());
        loop {
            let n = seq.len();
            let r = seq[n - 2].div_rem(&seq[n - 1]).1;
            if r.is_zero() {
                break;
            }
            seq.push(-&r);
        }
        SturmChain { seq }
    }

    /// Sign changes of the chain at `x`, zeros skipped.
    pub fn variations(&self, x: &Rational) -> usize {
        let mut last = Ordering::Equal;
        let mut count = 0;
        for q in &self.seq {
            let s = q.eval(x).cmp(&Rational::zero());
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Number of distinct real roots in `(a, b]`.
    pub fn count(&self, a: &Rational, b: &Rational) -> usize {
        self.variations(a).saturating_sub(self.variations(b))
    }
}

/// Open interval `(lo, hi)` containing exactly one root of a squarefree
/// polynomial, with neither endpoint a root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isolated {
    pub lo: Rational,
    pub hi: Rational,
}

/// Isolates all real roots of the squarefree polynomial `p` in `(lo, hi)`;
/// the endpoints must not be roots. Returned in increasing order.
pub fn isolate_real_roots(p: &Poly, lo: &Rational, hi: &Rational) -> Vec<Isolated> {
    assert!(!p.eval(lo).is_zero() && !p.eval(hi).is_zero(), "isolation endpoints must not be roots");
    let chain = SturmChain::new(p);
    let mut out = Vec::new();
    let mut stack = vec![(lo.clone(), hi.clone())];
    while let Some((a, b)) = stack.pop() {
        let n = chain.count(&a, &b);
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push(Isolated { lo: a, hi: b });
            continue;
        }
        let m = (&a + &b) / rational::int(2);
        if p.eval(&m).is_zero() {
            // Shrink a window around the exact rational root until it holds nothing else.
            let mut eps = (&b - &a) / rational::int(4);
            loop {
                let l = &m - &eps;
                let r = &m + &eps;
                if !p.eval(&l).is_zero() && !p.eval(&r).is_zero() && chain.count(&l, &r) == 1 {
                    stack.push((a.clone(), l.clone()));
                    stack.push((r.clone(), b.clone()));
                    out.push(Isolated { lo: l, hi: r });
                    break;
                }
                eps /= rational::int(2);
            }
        } else {
            stack.push((a, m.clone()));
            stack.push((m, b));
        }
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    out
}

/// Cauchy bound: every real root has absolute value below the result.
pub fn root_bound(p: &Poly) -> Rational {
    let lead = p.lead().abs();
    let m = p.coeffs().iter().map(|c| c.abs() / &lead).max().unwrap_or_else(Rational::zero);
    m + rational::int(1)
}

/// All real roots of `p` (any polynomial), isolated.
pub fn real_roots(p: &Poly) -> Vec<Isolated> {
    if p.is_constant() {
        return Vec::new();
    }
    let sf = p.squarefree_part();
    let b = root_bound(&sf);
    isolate_real_roots(&sf, &-b.clone(), &b)
}

/// A real algebraic number: the unique root of a squarefree `poly` inside `(lo, hi)`.
#[derive(Clone, Debug)]
pub struct RealAlgebraic {
    poly: Poly,
    lo: Rational,
    hi: Rational,
}

impl RealAlgebraic {
    pub fn new(poly: Poly, iv: Isolated) -> Self {
        debug_assert!(!poly.is_constant());
        RealAlgebraic { poly, lo: iv.lo, hi: iv.hi }
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// Bisects until the enclosure is no wider than `width`.
    pub fn refine_to(&mut self, width: &Rational) {
        let sign_lo = self.poly.eval(&self.lo).cmp(&Rational::zero());
        while &self.width() > width {
            let m = (&self.lo + &self.hi) / rational::int(2);
            let s = self.poly.eval(&m).cmp(&Rational::zero());
            if s == Ordering::Equal {
                let d = width / rational::int(4);
                let d = d.min(&self.width() / rational::int(4));
                self.lo = &m - &d;
                self.hi = &m + &d;
                return;
            }
            if s == sign_lo {
                self.lo = m;
            } else {
                self.hi = m;
            }
        }
    }

    /// The number `-self`.
    pub fn neg(&self) -> RealAlgebraic {
        let coeffs = self
            .poly
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect();
        RealAlgebraic { poly: Poly::from_coeffs(coeffs), lo: -&self.hi, hi: -&self.lo }
    }

    pub fn to_f64(&self) -> f64 {
        let mut c = self.clone();
        c.refine_to(&Rational::new(1.into(), num_bigint::BigInt::from(1u64 << 60)));
        rational::to_f64(&((&c.lo + &c.hi) / rational::int(2)))
    }

    /// Exact equality of two real algebraic numbers.
    pub fn same_number(&self, other: &RealAlgebraic) -> bool {
        let g = self.poly.gcd(&other.poly);
        if g.is_constant() {
            return false;
        }
        let lo = (&self.lo).max(&other.lo).clone();
        let hi = (&self.hi).min(&other.hi).clone();
        if lo >= hi {
            return false;
        }
        // Endpoints are non-roots of both defining polynomials, hence of g.
        SturmChain::new(&g).count(&lo, &hi) == 1
    }

    /// Exact comparison against a rational.
    pub fn cmp_rational(&self, q: &Rational) -> Ordering {
        if q <= &self.lo {
            return Ordering::Greater;
        }
        if q >= &self.hi {
            return Ordering::Less;
        }
        if self.poly.eval(q).is_zero() {
            return Ordering::Equal;
        }
        let s_lo = self.poly.eval(&self.lo).cmp(&Rational::zero());
        let s_q = self.poly.eval(q).cmp(&Rational::zero());
        if s_lo == s_q {
            // No sign change on (lo, q): the root lies in (q, hi).
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    /// Exact ordering of two distinct-or-equal real algebraic numbers.
    pub fn cmp(&self, other: &RealAlgebraic) -> Ordering {
        if self.same_number(other) {
            return Ordering::Equal;
        }
        let mut a = self.clone();
        let mut b = other.clone();
        loop {
            if a.hi <= b.lo {
                return Ordering::Less;
            }
            if b.hi <= a.lo {
                return Ordering::Greater;
            }
            let wa = a.width() / rational::int(2);
            let wb = b.width() / rational::int(2);
            a.refine_to(&wa);
            b.refine_to(&wb);
        }
    }
}
