//! Seifert-matrix invariants: Alexander polynomial, Arf invariant,
//! Levine–Tristram signature profile and the averaged signature ρ₀.

mod rho;
mod signature;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};

use crate::algebra::laurent::LaurentPolynomial;
use crate::algebra::matrix::{IntegerMatrix, RationalMatrix};
use crate::algebra::poly::Poly;
use crate::algebra::rational::Rational;
use crate::error::{Error, Result};

pub use rho::{default_tolerance, rho_zero, rho_zero_with_tol, AngleCombination, RhoZero};
pub use signature::{signature_at_x, signature_profile, Jump, JumpAngle, SignatureProfile};

/// A Seifert matrix: square integer `V` with `det(V − Vᵀ) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeifertMatrix {
    v: IntegerMatrix,
}

impl SeifertMatrix {
    pub fn new(v: IntegerMatrix) -> Result<Self> {
        if !v.is_square() {
            return Err(Error::InvalidSeifertMatrix(format!("{}x{} matrix is not square", v.rows(), v.cols())));
        }
        let d = v.sub(&v.transpose())?.det()?;
        if !d.is_one() {
            return Err(Error::InvalidSeifertMatrix(format!("det(V - V^T) = {d}, expected 1")));
        }
        Ok(SeifertMatrix { v })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let m = IntegerMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
            .map_err(|e| Error::InvalidSeifertMatrix(e.to_string()))?;
        SeifertMatrix::new(m)
    }

    /// The empty matrix, a Seifert matrix for the unknot.
    pub fn unknot() -> Self {
        SeifertMatrix { v: IntegerMatrix::zeros(0, 0) }
    }

    pub fn size(&self) -> usize {
        self.v.rows()
    }

    pub fn genus(&self) -> usize {
        self.size() / 2
    }

    pub fn matrix(&self) -> &IntegerMatrix {
        &self.v
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Vec<Value>> = self
            .v
            .to_rows()
            .iter()
            .map(|r| r.iter().map(|x| x.to_i64().map(Value::from).unwrap_or_else(|| Value::from(x.to_string()))).collect())
            .collect();
        json!({"size": self.size(), "entries": entries})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::InvalidInput(format!("seifert matrix: {m}"));
        let size = v.get("size").and_then(Value::as_u64).ok_or_else(|| bad("missing integer field \"size\""))? as usize;
        let rows = v.get("entries").and_then(Value::as_array).ok_or_else(|| bad("missing array field \"entries\""))?;
        if rows.len() != size {
            return Err(bad(&format!("\"size\" is {size} but \"entries\" has {} rows", rows.len())));
        }
        let mut out = Vec::with_capacity(size);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_array().ok_or_else(|| bad(&format!("entries[{i}] is not an array")))?;
            if row.len() != size {
                return Err(bad(&format!("entries[{i}] has {} entries, expected {size}", row.len())));
            }
            let mut r = Vec::with_capacity(size);
            for (j, x) in row.iter().enumerate() {
                let n = match x {
                    Value::Number(n) => n.as_i64().map(BigInt::from),
                    Value::String(s) => s.trim().parse::<BigInt>().ok(),
                    _ => None,
                };
                r.push(n.ok_or_else(|| bad(&format!("entries[{i}][{j}] is not an integer")))?);
            }
            out.push(r);
        }
        let m = if size == 0 { IntegerMatrix::zeros(0, 0) } else { IntegerMatrix::from_rows(out)? };
        SeifertMatrix::new(m)
    }
}

impl Serialize for SeifertMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SeifertMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        SeifertMatrix::from_json(&v).map_err(D::Error::custom)
    }
}

impl fmt::Display for SeifertMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

/// `normalize(det(V − t·Vᵀ))`; the unknot gives 1.
pub fn alexander(v: &SeifertMatrix) -> LaurentPolynomial {
    let n = v.size();
    if n == 0 {
        return LaurentPolynomial::one();
    }
    let a = v.matrix();
    let at = a.transpose();
    // The determinant has degree ≤ n in t: interpolate through t = 0..=n.
    let points: Vec<(Rational, Rational)> = (0..=n as i64)
        .map(|t| {
            let tb = BigInt::from(t);
            let m = a.sub(&at.scale(&tb)).expect("same shape");
            (Rational::from_integer(tb), Rational::from_integer(m.det().expect("square")))
        })
        .collect();
    let p = interpolate(&points);
    LaurentPolynomial::from_poly(&p).normalize().expect("Alexander polynomial of a knot is non-zero")
}

/// Lagrange interpolation through distinct abscissae.
fn interpolate(points: &[(Rational, Rational)]) -> Poly {
    let mut acc = Poly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = Poly::one();
        let mut denom = Rational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i != j {
                basis = &basis * &Poly::from_coeffs(vec![-xj, Rational::one()]);
                denom *= xi - xj;
            }
        }
        acc = &acc + &basis.scale(&(yi / denom));
    }
    acc
}

/// Seifert matrix `[[m, 0], [−1, −m]]` of the genus-one knot `E^m`.
pub fn e_matrix(m: i64) -> Result<SeifertMatrix> {
    if m == 0 {
        return Err(Error::ZeroTwist);
    }
    SeifertMatrix::from_rows(&[vec![m, 0], vec![-1, -m]])
}

/// Block sum.
pub fn connected_sum(a: &SeifertMatrix, b: &SeifertMatrix) -> SeifertMatrix {
    SeifertMatrix { v: a.v.block_diag(&b.v) }
}

/// `−Vᵀ`.
pub fn mirror(v: &SeifertMatrix) -> SeifertMatrix {
    SeifertMatrix { v: v.v.transpose().neg() }
}

/// `Vᵀ`.
pub fn reverse(v: &SeifertMatrix) -> SeifertMatrix {
    SeifertMatrix { v: v.v.transpose() }
}

/// Arf invariant from the determinant: 0 iff `|Δ(−1)| ≡ ±1 (mod 8)`.
pub fn arf_from_alexander(delta: &LaurentPolynomial) -> u8 {
    let det = delta.eval(&-Rational::one()).expect("-1 is a unit").abs();
    let r = (det.to_integer() % BigInt::from(8)).to_i64().unwrap_or(0);
    if r == 1 || r == 7 {
        0
    } else {
        1
    }
}

pub fn arf(v: &SeifertMatrix) -> u8 {
    arf_from_alexander(&alexander(v))
}

/// `(V⁻¹)ᵀ·V`.
pub fn t_star(v: &SeifertMatrix) -> Result<RationalMatrix> {
    let r = v.matrix().to_rational();
    if r.det()?.is_zero() {
        return Err(Error::SingularSeifertMatrix);
    }
    r.inverse()?.transpose().mul(&r)
}
