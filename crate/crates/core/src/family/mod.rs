//! Symbolic knot expressions built from doubling operators, and the classical
//! and higher-order polynomial data of the recursive family `𝒦ⁿ`.

mod expr;
mod operator;

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use serde_json::{json, Value};

use crate::algebra::laurent::LaurentPolynomial;
use crate::algebra::rational::Rational;
use crate::certificate::{Certificate, CertificateKind, Verdict};
use crate::error::{Error, Result};
use crate::seifert::{
    self, alexander, arf_from_alexander, connected_sum, rho_zero, signature_profile, RhoZero,
    SeifertMatrix,
};

pub use expr::{BaseFlags, KnotExpr, Node};
pub use operator::{delta_poly, q_poly, OperatorDesc, OperatorKind};

/// `E^m` as a base knot, certified negative amphichiral.
pub fn e_knot(m: i64) -> Result<KnotExpr> {
    KnotExpr::base(seifert::e_matrix(m)?, BaseFlags { arf_known: None, negative_amphichiral: true })
}

pub fn trefoil() -> KnotExpr {
    KnotExpr::knot(SeifertMatrix::from_rows(&[vec![-1, 1], vec![0, -1]]).expect("valid"))
}

/// Connected sum of two trefoils.
pub fn granny() -> KnotExpr {
    let t = trefoil();
    KnotExpr::sum(&t, &t)
}

#[derive(Debug)]
struct Classical {
    alexander: LaurentPolynomial,
    rho: RhoZero,
}

fn memo() -> &'static RwLock<HashMap<KnotExpr, Arc<Classical>>> {
    static MEMO: OnceLock<RwLock<HashMap<KnotExpr, Arc<Classical>>>> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

fn classical(e: &KnotExpr) -> Result<Arc<Classical>> {
    if let Some(c) = memo().read().expect("memo lock").get(e) {
        return Ok(c.clone());
    }
    let c = match e.node() {
        Node::Base { seifert, .. } => Classical { alexander: alexander(seifert), rho: rho_zero(seifert) },
        Node::Infect { op, .. } => {
            if !op.curves_null_homologous {
                return Err(Error::InvalidOperator(format!("{}: infection curves are not null-homologous", op.name)));
            }
            Classical { alexander: op.alexander_poly.clone(), rho: rho_zero(&op.pattern_seifert) }
        }
        Node::Sum(a, b) => {
            let (a, b) = (classical(a)?, classical(b)?);
            Classical { alexander: (&a.alexander * &b.alexander).normalize()?, rho: a.rho.add(&b.rho) }
        }
        Node::Mirror(a) => {
            let a = classical(a)?;
            Classical { alexander: a.alexander.clone(), rho: a.rho.neg() }
        }
        Node::Reverse(a) => {
            let a = classical(a)?;
            Classical { alexander: a.alexander.clone(), rho: a.rho.clone() }
        }
    };
    let c = Arc::new(c);
    memo().write().expect("memo lock").entry(e.clone()).or_insert_with(|| c.clone());
    Ok(c)
}

/// Normalized Alexander polynomial; infection along null-homologous curves
/// keeps the pattern's.
pub fn classical_alexander(e: &KnotExpr) -> Result<LaurentPolynomial> {
    Ok(classical(e)?.alexander.clone())
}

pub fn rho_zero_expr(e: &KnotExpr) -> Result<RhoZero> {
    Ok(classical(e)?.rho.clone())
}

pub fn rho_zero_expr_with_tol(e: &KnotExpr, tol: &Rational) -> Result<RhoZero> {
    let r = rho_zero_expr(e)?;
    Ok(if tol < &r.tolerance { r.tightened(tol) } else { r })
}

/// A Seifert matrix carrying the classical invariants of `e`.
pub fn classical_seifert(e: &KnotExpr) -> Result<SeifertMatrix> {
    Ok(match e.node() {
        Node::Base { seifert, .. } => seifert.clone(),
        Node::Infect { op, .. } => {
            if !op.curves_null_homologous {
                return Err(Error::InvalidOperator(format!("{}: infection curves are not null-homologous", op.name)));
            }
            op.pattern_seifert.clone()
        }
        Node::Sum(a, b) => connected_sum(&classical_seifert(a)?, &classical_seifert(b)?),
        Node::Mirror(a) => seifert::mirror(&classical_seifert(a)?),
        Node::Reverse(a) => seifert::reverse(&classical_seifert(a)?),
    })
}

/// Arf invariant, from the classical Alexander polynomial.
pub fn arf_expr(e: &KnotExpr) -> Result<u8> {
    match classical_alexander(e) {
        Ok(d) => Ok(arf_from_alexander(&d)),
        Err(Error::InvalidOperator(_)) => Err(Error::ArfUnknown),
        Err(err) => Err(err),
    }
}

/// `𝒦ⁿ(m₁,…,mₙ, K0) = FrakR(mₙ)(J, Mirror(Reverse(J)))` with
/// `J = RibbonR(m_{n−1}) ∘ … ∘ RibbonR(m₁)(K0)`.
#[allow(non_snake_case)]
pub fn build_K(n: usize, twists: &[i64], k0: &KnotExpr) -> Result<KnotExpr> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    if twists.len() != n {
        return Err(Error::LengthMismatch { left: n, right: twists.len() });
    }
    if twists.contains(&0) {
        return Err(Error::ZeroTwist);
    }
    if arf_expr(k0)? != 0 {
        return Err(Error::ArfNonzero);
    }
    let mut j = k0.clone();
    for &m in &twists[..n - 1] {
        j = KnotExpr::infect(OperatorDesc::ribbon_r(m), vec![j])?;
    }
    let inv = KnotExpr::inverse(&j);
    KnotExpr::infect(OperatorDesc::frak_r(twists[n - 1]), vec![j, inv])
}

/// Structural certificate: `false` means "not certified".
pub fn is_negative_amphichiral(e: &KnotExpr) -> bool {
    match e.node() {
        Node::Base { flags, .. } => flags.negative_amphichiral,
        Node::Sum(a, b) => is_negative_amphichiral(a) && is_negative_amphichiral(b),
        Node::Mirror(a) | Node::Reverse(a) => is_negative_amphichiral(a),
        Node::Infect { op, inputs } => {
            matches!(op.kind, OperatorKind::FrakR(_)) && inputs.len() == 2 && inputs[1] == KnotExpr::inverse(&inputs[0])
        }
    }
}

pub fn order_two_certificate(e: &KnotExpr) -> Result<Certificate> {
    if !is_negative_amphichiral(e) {
        return Err(Error::NotCertifiedAmphichiral);
    }
    let double = KnotExpr::sum(e, e);
    let f = classical_alexander(e)?;
    let product = (&f * &f.conjugate()).normalize()?;
    let delta = classical_alexander(&double)?;
    let fox_milnor = delta.unit_equivalent(&product);
    let rho = rho_zero_expr(&double)?;
    let profile_zero = signature_profile(&classical_seifert(&double)?).is_identically_zero();
    let verdict = if fox_milnor && rho.is_zero() && profile_zero { Verdict::Pass } else { Verdict::Fail };
    let evidence = json!({
        "expression": e.to_json(),
        "identification": "Sum(e, e) = Sum(e, Mirror(Reverse(e)))",
        "fox_milnor": {
            "alexander_of_sum": delta.to_string(),
            "f": f.to_string(),
            "f_times_f_conjugate": product.to_string(),
            "holds": fox_milnor,
        },
        "rho_zero_of_sum": rho.to_json(),
        "signature_profile_of_sum_zero": profile_zero,
        "cited_conclusions": [
            "e # e is slice",
            "e # e is slice in a rational homology 4-ball",
        ],
    });
    Ok(Certificate::new(CertificateKind::OrderTwo, verdict, evidence, &["Prop-Knisorder2"]))
}

/// Decomposition of a `build_K` output.
#[derive(Clone, Debug)]
pub struct FamilyShape {
    pub outer: Arc<OperatorDesc>,
    /// Inner one-curve operators, outermost first.
    pub inner: Vec<Arc<OperatorDesc>>,
    pub k0: KnotExpr,
}

impl FamilyShape {
    pub fn n(&self) -> usize {
        self.inner.len() + 1
    }

    /// `(m₁, …, mₙ)` where every operator carries a twist parameter.
    pub fn twists(&self) -> Option<Vec<i64>> {
        let mut out: Vec<i64> = self.inner.iter().rev().map(|o| o.twist()).collect::<Option<_>>()?;
        out.push(self.outer.twist()?);
        Some(out)
    }

    /// All operators, outermost first.
    pub fn operators(&self) -> impl Iterator<Item = &Arc<OperatorDesc>> {
        std::iter::once(&self.outer).chain(self.inner.iter())
    }
}

/// Peels `FrakR(m)(J, Mirror(Reverse(J)))` and then one-curve infections down to `K0`.
pub fn family_shape(e: &KnotExpr) -> Result<FamilyShape> {
    let Node::Infect { op, inputs } = e.node() else {
        return Err(Error::NotAFamilyExpression("outermost node is not an infection".into()));
    };
    if !matches!(op.kind, OperatorKind::FrakR(_)) {
        return Err(Error::NotAFamilyExpression(format!("outermost operator {} is not FrakR", op.name)));
    }
    if inputs[1] != KnotExpr::inverse(&inputs[0]) {
        return Err(Error::NotAFamilyExpression("second FrakR input is not Mirror(Reverse(first))".into()));
    }
    let mut inner = Vec::new();
    let mut j = inputs[0].clone();
    loop {
        let next = match j.node() {
            Node::Infect { op, inputs } if op.curve_count == 1 && !matches!(op.kind, OperatorKind::FrakR(_)) => {
                inner.push(op.clone());
                inputs[0].clone()
            }
            _ => break,
        };
        j = next;
    }
    Ok(FamilyShape { outer: op.clone(), inner, k0: j })
}

/// `(Δ_{mₙ}, q_{m_{n−1}}, …, q_{m₁})`.
pub fn operator_polynomial_sequence(e: &KnotExpr) -> Result<Vec<LaurentPolynomial>> {
    Ok(family_shape(e)?.operators().map(|o| o.sequence_poly.clone()).collect())
}

/// The two cyclic summand orders at level `i`, `1 ≤ i ≤ n−1`, tagged `x1`, `x2`.
pub fn higher_order_summands(e: &KnotExpr, i: usize) -> Result<[(LaurentPolynomial, String); 2]> {
    let shape = family_shape(e)?;
    let max = shape.n() - 1;
    if i == 0 || i > max {
        return Err(Error::IndexOutOfRange { index: i, max });
    }
    let p = shape.inner[i - 1].sequence_poly.clone();
    Ok([(p.clone(), "x1".to_string()), (p, "x2".to_string())])
}

/// Derived data reported for a family member.
pub fn family_report(e: &KnotExpr, tol: &Rational) -> Result<Value> {
    let shape = family_shape(e)?;
    let seq = operator_polynomial_sequence(e)?;
    let summands: Vec<Value> = (1..shape.n())
        .map(|i| {
            higher_order_summands(e, i).map(|s| {
                json!({
                    "i": i,
                    "summands": s.iter().map(|(p, tag)| json!({"order": p.to_string(), "variable": tag})).collect::<Vec<_>>(),
                })
            })
        })
        .collect::<Result<_>>()?;
    Ok(json!({
        "expression": e.to_json(),
        "structural_hash": format!("{:016x}", e.structural_hash()),
        "classical_alexander": classical_alexander(e)?.to_string(),
        "rho_zero": rho_zero_expr_with_tol(e, tol)?.to_json(),
        "operator_sequence": seq.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "higher_order_summands": summands,
        "negative_amphichiral": is_negative_amphichiral(e),
    }))
}
