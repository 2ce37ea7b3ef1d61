//! ρ₀, the average of the Levine–Tristram signature over the circle.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::signature::{signature_profile, strictly_inside, Jump, JumpAngle};
use super::SeifertMatrix;
use crate::algebra::interval::{arccos_over_pi, Interval};
use crate::algebra::rational::{self, Rational};
use crate::algebra::real_roots::RealAlgebraic;

const DECIMAL_DIGITS: usize = 15;
const MAX_PREC: u32 = 4096;

pub fn default_tolerance() -> Rational {
    rational::rat(1, 1_000_000_000)
}

/// `c + Σ cᵢ · arccos(xᵢ/2)/π` with `0 < xᵢ < 2` distinct real algebraic numbers.
#[derive(Clone, Debug)]
pub struct AngleCombination {
    constant: Rational,
    angles: Vec<(Rational, RealAlgebraic)>,
}

impl AngleCombination {
    pub fn zero() -> Self {
        AngleCombination { constant: Rational::zero(), angles: Vec::new() }
    }

    pub fn rational(q: Rational) -> Self {
        AngleCombination { constant: q, angles: Vec::new() }
    }

    /// `arccos(x/2)/π` for `x` in `(−2, 2)`, using `arccos(−y) = π − arccos(y)`
    /// to keep every stored `x` positive.
    pub fn arccos_over_pi(x: &RealAlgebraic) -> Self {
        match x.cmp_rational(&Rational::zero()) {
            Ordering::Greater => AngleCombination { constant: Rational::zero(), angles: vec![(Rational::one(), x.clone())] },
            Ordering::Less => AngleCombination { constant: Rational::one(), angles: vec![(-Rational::one(), x.neg())] },
            Ordering::Equal => AngleCombination::rational(rational::rat(1, 2)),
        }
    }

    /// `θ/π` of a jump.
    pub fn of_jump(j: &Jump) -> Self {
        match &j.angle {
            JumpAngle::RationalMultipleOfPi(q) => AngleCombination::rational(q.clone()),
            JumpAngle::Arccos => AngleCombination::arccos_over_pi(&j.x),
        }
    }

    pub fn constant(&self) -> &Rational {
        &self.constant
    }

    pub fn angles(&self) -> &[(Rational, RealAlgebraic)] {
        &self.angles
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.angles.is_empty().then_some(&self.constant)
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.angles.is_empty()
    }

    pub fn add(&self, o: &AngleCombination) -> AngleCombination {
        let mut out = self.clone();
        out.constant += &o.constant;
        for (c, x) in &o.angles {
            match out.angles.iter_mut().find(|(_, y)| y.same_number(x)) {
                Some(slot) => slot.0 += c,
                None => out.angles.push((c.clone(), x.clone())),
            }
        }
        out.angles.retain(|(c, _)| !c.is_zero());
        out
    }

    pub fn scale(&self, k: &Rational) -> AngleCombination {
        if k.is_zero() {
            return AngleCombination::zero();
        }
        AngleCombination {
            constant: &self.constant * k,
            angles: self.angles.iter().map(|(c, x)| (c * k, x.clone())).collect(),
        }
    }

    pub fn neg(&self) -> AngleCombination {
        self.scale(&-Rational::one())
    }

    pub fn sub(&self, o: &AngleCombination) -> AngleCombination {
        self.add(&o.neg())
    }

    /// Certified enclosure computed at `prec` bits.
    pub fn enclosure_at(&self, prec: u32) -> Interval {
        let mut acc = Interval::point(self.constant.clone());
        for (c, x) in &self.angles {
            let x = strictly_inside(x, prec);
            let half = rational::rat(1, 2);
            let a = arccos_over_pi(&Interval::new(x.lo() * &half, x.hi() * &half), prec);
            acc = acc.add(&a.scale(c));
        }
        acc
    }

    /// Certified enclosure of width at most `tol`, raising precision as needed.
    pub fn enclose(&self, tol: &Rational) -> Interval {
        if self.angles.is_empty() {
            return Interval::point(self.constant.clone());
        }
        let tol_bits = (tol.denom().bits() as i64 - tol.numer().bits() as i64).max(0) as u32;
        let mut prec = tol_bits + 16;
        loop {
            let iv = self.enclosure_at(prec);
            if &iv.width() <= tol || prec >= MAX_PREC {
                return iv;
            }
            prec = (prec * 2).min(MAX_PREC);
        }
    }

    pub fn to_json(&self) -> Value {
        let angles: Vec<Value> = self
            .angles
            .iter()
            .map(|(c, x)| {
                json!({
                    "coefficient": rational::format(c),
                    "x_poly": x.poly().to_string_var('x'),
                    "x_interval": [rational::format(x.lo()), rational::format(x.hi())],
                })
            })
            .collect();
        json!({"constant": rational::format(&self.constant), "arccos_terms": angles})
    }
}

impl PartialEq for AngleCombination {
    fn eq(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }
}

impl fmt::Display for AngleCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        if !self.constant.is_zero() || self.angles.is_empty() {
            write!(f, "{}", rational::format(&self.constant))?;
            first = false;
        }
        for (c, x) in &self.angles {
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            let coeff = if mag.is_one() { String::new() } else { format!("{}*", rational::format(&mag)) };
            let body = format!("{coeff}arccos(r/2)/pi [r root of {} in ({}, {})]", x.poly().to_string_var('x'), rational::format(x.lo()), rational::format(x.hi()));
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                write!(f, "{body}")?;
                first = false;
            } else {
                write!(f, " {sign} {body}")?;
            }
        }
        Ok(())
    }
}

/// ρ₀ as the exact formal sum `Σ σⱼ·μⱼ` over arcs together with a certified
/// numerical enclosure.
#[derive(Clone, Debug)]
pub struct RhoZero {
    /// `(σⱼ, μⱼ)`: arc value and normalized arc measure.
    pub terms: Vec<(i64, AngleCombination)>,
    value: AngleCombination,
    pub numeric: Interval,
    pub tolerance: Rational,
}

impl RhoZero {
    pub fn from_terms(terms: Vec<(i64, AngleCombination)>, tol: &Rational) -> Self {
        let value = terms
            .iter()
            .fold(AngleCombination::zero(), |acc, (s, mu)| acc.add(&mu.scale(&Rational::from_integer(BigInt::from(*s)))));
        let numeric = value.enclose(tol);
        RhoZero { terms, value, numeric, tolerance: tol.clone() }
    }

    pub fn zero(tol: &Rational) -> Self {
        RhoZero::from_terms(Vec::new(), tol)
    }

    /// The exact value with equal angles merged.
    pub fn exact(&self) -> &AngleCombination {
        &self.value
    }

    pub fn exact_rational(&self) -> Option<&Rational> {
        self.value.as_rational()
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn add(&self, o: &RhoZero) -> RhoZero {
        let tol = (&self.tolerance).min(&o.tolerance).clone();
        let mut terms = self.terms.clone();
        terms.extend(o.terms.iter().cloned());
        RhoZero::from_terms(terms, &tol)
    }

    pub fn neg(&self) -> RhoZero {
        let terms = self.terms.iter().map(|(s, mu)| (-s, mu.clone())).collect();
        RhoZero {
            terms,
            value: self.value.neg(),
            numeric: self.numeric.neg(),
            tolerance: self.tolerance.clone(),
        }
    }

    /// Recomputes the enclosure at a smaller tolerance.
    pub fn tightened(&self, tol: &Rational) -> RhoZero {
        RhoZero { numeric: self.value.enclose(tol), tolerance: tol.clone(), ..self.clone() }
    }

    /// Enclosure of `|ρ₀|`.
    pub fn abs_interval(&self) -> Interval {
        self.numeric.abs()
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(s, mu)| json!({"sigma": s, "measure": mu.to_string()}))
            .collect();
        json!({
            "exact": self.value.to_string(),
            "exact_terms": terms,
            "numeric": {
                "lo": rational::to_decimal(&self.numeric.lo, DECIMAL_DIGITS, false),
                "hi": rational::to_decimal(&self.numeric.hi, DECIMAL_DIGITS, true),
            },
        })
    }
}

impl PartialEq for RhoZero {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

pub fn rho_zero(v: &SeifertMatrix) -> RhoZero {
    rho_zero_with_tol(v, &default_tolerance())
}

/// `ρ₀ = Σⱼ σⱼ (θⱼ₊₁ − θⱼ)/π` with `θ₀ = 0`, `θₖ₊₁ = π`, using the symmetry
/// `σ(ω̄) = σ(ω)` to integrate over the upper half circle only.
pub fn rho_zero_with_tol(v: &SeifertMatrix, tol: &Rational) -> RhoZero {
    let profile = signature_profile(v);
    let mut bounds = vec![AngleCombination::zero()];
    bounds.extend(profile.jumps.iter().map(AngleCombination::of_jump));
    bounds.push(AngleCombination::rational(Rational::one()));
    let terms = profile
        .arc_values
        .iter()
        .enumerate()
        .map(|(j, &s)| (s, bounds[j + 1].sub(&bounds[j])))
        .collect();
    RhoZero::from_terms(terms, tol)
}
