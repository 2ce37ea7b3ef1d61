//! Certificates for the checkable hypotheses of the independence results.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::algebra::laurent::{is_symmetric, LaurentPolynomial};
use crate::algebra::matrix::IntegerMatrix;
use crate::algebra::rational::{self, Rational};
use crate::certificate::{Certificate, CertificateKind, Verdict};
use crate::coprimality::{sequence_strongly_coprime, CoprimalityVerdict, Relation};
use crate::error::{Error, Result};
use crate::family::{
    build_K, family_shape, operator_polynomial_sequence, order_two_certificate, rho_zero_expr_with_tol, trefoil, FamilyShape,
    KnotExpr,
};
use crate::seifert::{default_tolerance, e_matrix, t_star};

const BOUND_DIGITS: usize = 12;
/// Smallest tolerance tried when resolving a strict inequality.
const TOLERANCE_CAP_BITS: u32 = 1024;

/// Upper bounds for Cheeger–Gromov constants keyed by operator name.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CGBoundTable {
    entries: BTreeMap<String, Rational>,
}

impl CGBoundTable {
    pub fn new() -> Self {
        CGBoundTable::default()
    }

    pub fn insert(&mut self, name: &str, bound: Rational) -> Result<()> {
        if !bound.is_positive() {
            return Err(Error::NonPositiveBound(name.to_string()));
        }
        self.entries.insert(name.to_string(), bound);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&Rational> {
        self.entries.get(name)
    }

    /// `{"FrakR(3)": "1.5", ...}`; numbers are accepted as well as strings.
    pub fn from_json(v: &Value) -> Result<Self> {
        let map = v.as_object().ok_or_else(|| Error::InvalidInput("bounds: expected a JSON object".into()))?;
        let mut t = CGBoundTable::new();
        for (k, x) in map {
            let text = match x {
                Value::String(s) => s.clone(),
                Value::Number(n) => n.to_string(),
                _ => return Err(Error::InvalidInput(format!("bounds: value for \"{k}\" is not a decimal"))),
            };
            let q = rational::parse(&text).map_err(|_| Error::InvalidInput(format!("bounds: value for \"{k}\" is not a decimal")))?;
            t.insert(k, q)?;
        }
        Ok(t)
    }

    pub fn to_json(&self) -> Value {
        let m: serde_json::Map<String, Value> =
            self.entries.iter().map(|(k, v)| (k.clone(), Value::String(rational::format(v)))).collect();
        Value::Object(m)
    }

    /// `Σ` bounds over the operators of a family member.
    fn total(&self, shape: &FamilyShape) -> Result<Rational> {
        shape.operators().try_fold(Rational::zero(), |acc, op| {
            self.get(&op.name).map(|b| acc + b).ok_or_else(|| Error::MissingBound(op.name.clone()))
        })
    }
}

/// Hypotheses for `e = build_K(n, …)`: `mₙ ≠ 0`, module-generating inner curves with
/// non-trivial polynomials, and `|ρ₀(K0)| > 2·Σ bounds`.
pub fn check_main_hypotheses(e: &KnotExpr, bounds: &CGBoundTable) -> Result<Certificate> {
    check_main_hypotheses_with_tol(e, bounds, &default_tolerance())
}

pub fn check_main_hypotheses_with_tol(e: &KnotExpr, bounds: &CGBoundTable, tol: &Rational) -> Result<Certificate> {
    let shape = family_shape(e)?;
    let m_n = shape.outer.twist().unwrap_or_default();
    let h1 = m_n != 0;
    let inner: Vec<Value> = shape
        .inner
        .iter()
        .map(|op| {
            json!({
                "name": op.name,
                "generates_module": op.curves_generate_module,
                "alexander_poly": op.alexander_poly.to_string(),
                "holds": op.curves_generate_module && !op.alexander_poly.is_unit_multiple(),
            })
        })
        .collect();
    let h2 = inner.iter().all(|v| v["holds"] == json!(true));

    let total = match bounds.total(&shape) {
        Ok(t) => Some(t),
        Err(err) if h1 && h2 => return Err(err),
        Err(_) => None,
    };
    let (h3, h3_evidence) = match total {
        Some(total) => {
            let threshold = Rational::from_integer(BigInt::from(2)) * total;
            let (holds, rho) = compare_rho(&shape.k0, &threshold, tol)?;
            let used: BTreeMap<String, String> =
                shape.operators().map(|op| (op.name.clone(), rational::format(bounds.get(&op.name).unwrap()))).collect();
            (
                holds,
                json!({
                    "holds": holds,
                    "rho_zero_k0": rho,
                    "threshold": rational::format(&threshold),
                    "threshold_decimal": rational::to_decimal(&threshold, BOUND_DIGITS, true),
                    "bounds": used,
                }),
            )
        }
        None => (false, json!({"holds": false, "evaluated": false, "reason": "missing bound"})),
    };

    let mut failed = Vec::new();
    for (id, ok) in [(1, h1), (2, h2), (3, h3)] {
        if !ok {
            failed.push(id);
        }
    }
    let verdict = if failed.is_empty() { Verdict::Pass } else { Verdict::Fail };
    let evidence = json!({
        "n": shape.n(),
        "twists": shape.twists(),
        "hypotheses": [
            {"id": 1, "holds": h1, "m_n": m_n},
            {"id": 2, "holds": h2, "operators": inner},
            {"id": 3, "check": h3_evidence},
        ],
        "failed": failed,
    });
    Ok(Certificate::new(CertificateKind::MainHypotheses, verdict, evidence, &["Thm-main"]))
}

/// Decides `|ρ₀(k0)| > threshold`, exactly when ρ₀ is rational and otherwise by
/// certified enclosures of shrinking width.
fn compare_rho(k0: &KnotExpr, threshold: &Rational, tol: &Rational) -> Result<(bool, Value)> {
    let rho = rho_zero_expr_with_tol(k0, tol)?;
    if let Some(q) = rho.exact_rational() {
        return Ok((&q.abs() > threshold, rho.to_json()));
    }
    let mut current = rho;
    let mut bits = 0u32;
    loop {
        let a = current.abs_interval();
        if &a.lo > threshold {
            return Ok((true, current.to_json()));
        }
        if &a.hi <= threshold {
            return Ok((false, current.to_json()));
        }
        bits += 32;
        if bits > TOLERANCE_CAP_BITS {
            return Err(Error::IntervalTooWide);
        }
        let next = tol / Rational::from_integer(BigInt::one() << bits);
        current = current.tightened(&next);
    }
}

/// Minimal even `N ≥ 2` with `4N/3 > threshold`.
pub fn trefoil_budget(threshold: &Rational) -> Result<u64> {
    if !threshold.is_positive() {
        return Err(Error::InvalidInput("threshold must be positive".into()));
    }
    // N > 3T/4
    let floor = (threshold * Rational::new(BigInt::from(3), BigInt::from(4))).floor().to_integer();
    let mut n: u64 = (floor + 1u32).try_into().map_err(|_| Error::InvalidInput("threshold too large".into()))?;
    if n % 2 == 1 {
        n += 1;
    }
    Ok(n.max(2))
}

/// Connected sum of `n` trefoils.
pub fn trefoil_sum(n: u64) -> KnotExpr {
    KnotExpr::sum_of_copies(&trefoil(), n as usize)
}

/// Twist tuple `(m₁,…,mₙ)` with an optional base knot; a missing base is
/// replaced by the trefoil sum from [`trefoil_budget`].
#[derive(Clone, Debug)]
pub struct TupleSpec {
    pub twists: Vec<i64>,
    pub k0: Option<KnotExpr>,
}

impl TupleSpec {
    pub fn new(twists: Vec<i64>) -> Self {
        TupleSpec { twists, k0: None }
    }

    /// `[[2,3], {"twists": [2,4], "k0": {...}}, ...]`
    pub fn list_from_json(v: &Value) -> Result<Vec<TupleSpec>> {
        let arr = v.as_array().ok_or_else(|| Error::InvalidInput("tuples: expected a JSON array".into()))?;
        arr.iter()
            .enumerate()
            .map(|(i, t)| {
                let bad = || Error::InvalidInput(format!("tuples[{i}]: expected an integer array or {{\"twists\", \"k0\"}}"));
                let ints = |a: &Value| -> Result<Vec<i64>> {
                    a.as_array().ok_or_else(bad)?.iter().map(|x| x.as_i64().ok_or_else(bad)).collect()
                };
                match t {
                    Value::Array(_) => Ok(TupleSpec::new(ints(t)?)),
                    Value::Object(o) => {
                        let twists = ints(o.get("twists").ok_or_else(bad)?)?;
                        let k0 = o.get("k0").map(KnotExpr::from_json).transpose()?;
                        Ok(TupleSpec { twists, k0 })
                    }
                    _ => Err(bad()),
                }
            })
            .collect()
    }
}

#[derive(Clone, Debug, Default)]
pub struct IndependenceOptions {
    /// Worker threads for the pairwise matrix; `None` uses the global pool.
    pub jobs: Option<usize>,
    pub tolerance: Option<Rational>,
}

/// Distinct tuples, pairwise strong coprimality of operator sequences, the main
/// hypotheses and order-two certificates for every family member.
pub fn independence_certificate(tuples: &[TupleSpec], bounds: &CGBoundTable) -> Result<Certificate> {
    independence_certificate_with(tuples, bounds, &IndependenceOptions::default())
}

pub fn independence_certificate_with(tuples: &[TupleSpec], bounds: &CGBoundTable, opts: &IndependenceOptions) -> Result<Certificate> {
    let tol = opts.tolerance.clone().unwrap_or_else(default_tolerance);
    let citations = ["Thm-independence", "Thm-main"];
    let Some(first) = tuples.first() else {
        return Err(Error::InvalidInput("at least one tuple is required".into()));
    };
    let n = first.twists.len();
    if n < 2 {
        return Err(Error::InvalidInput("tuples must have length at least 2".into()));
    }
    if let Some(t) = tuples.iter().find(|t| t.twists.len() != n) {
        return Err(Error::LengthMismatch { left: n, right: t.twists.len() });
    }
    for i in 0..tuples.len() {
        for j in i + 1..tuples.len() {
            if tuples[i].twists == tuples[j].twists {
                let evidence = json!({
                    "failure": "DuplicateTuple",
                    "duplicate_tuple": {"i": i, "j": j, "twists": tuples[i].twists},
                });
                return Ok(Certificate::new(CertificateKind::Independence, Verdict::Fail, evidence, &citations));
            }
        }
    }

    let mut members = Vec::with_capacity(tuples.len());
    for t in tuples {
        let (k0, trefoils) = match &t.k0 {
            Some(k) => (k.clone(), None),
            None => {
                let names: Vec<String> = std::iter::once(format!("FrakR({})", t.twists[n - 1]))
                    .chain(t.twists[..n - 1].iter().rev().map(|m| format!("RibbonR({m})")))
                    .collect();
                let total = names.iter().try_fold(Rational::zero(), |acc, name| {
                    bounds.get(name).map(|b| acc + b).ok_or_else(|| Error::MissingBound(name.clone()))
                })?;
                let budget = trefoil_budget(&(Rational::from_integer(BigInt::from(2)) * total))?;
                (trefoil_sum(budget), Some(budget))
            }
        };
        let e = build_K(n, &t.twists, &k0)?;
        let seq = operator_polynomial_sequence(&e)?;
        members.push((e, seq, trefoils));
    }

    let cells: Vec<(usize, usize)> =
        (0..members.len()).flat_map(|i| (0..members.len()).filter(move |&j| j != i).map(move |j| (i, j))).collect();
    let compute = || -> Result<Vec<CoprimalityVerdict>> {
        cells.par_iter().map(|&(i, j)| sequence_strongly_coprime(&members[i].1, &members[j].1)).collect()
    };
    let results = match opts.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map_err(|e| Error::InvalidInput(format!("thread pool: {e}")))?
            .install(compute)?,
        None => compute()?,
    };

    let size = members.len();
    let mut matrix = vec![vec![Value::Null; size]; size];
    let mut coprime_verdict = Verdict::Pass;
    let mut blocking = Vec::new();
    for (&(i, j), v) in cells.iter().zip(&results) {
        matrix[i][j] = json!(v.relation.as_str());
        let cell = match v.relation {
            Relation::StronglyCoprime => Verdict::Pass,
            Relation::Undecidable => Verdict::Undecidable,
            _ => Verdict::Fail,
        };
        if cell != Verdict::Pass {
            blocking.push(json!({"i": i, "j": j, "verdict": v.to_json()}));
        }
        coprime_verdict = coprime_verdict.and(cell);
    }

    let per_tuple: Vec<(Certificate, Certificate)> = members
        .iter()
        .map(|(e, _, _)| Ok((check_main_hypotheses_with_tol(e, bounds, &tol)?, order_two_certificate(e)?)))
        .collect::<Result<_>>()?;
    let mut verdict = coprime_verdict;
    let tuple_evidence: Vec<Value> = tuples
        .iter()
        .zip(&members)
        .zip(&per_tuple)
        .map(|((t, (_, seq, trefoils)), (main, two))| {
            verdict = verdict.and(main.verdict).and(two.verdict);
            json!({
                "twists": t.twists,
                "k0": match trefoils {
                    Some(k) => json!({"trefoils": k}),
                    None => t.k0.as_ref().map(KnotExpr::to_json).unwrap_or(Value::Null),
                },
                "operator_sequence": seq.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                "main_hypotheses": {"verdict": main.verdict.as_str(), "failed": main.evidence["failed"]},
                "order_two": {"verdict": two.verdict.as_str()},
            })
        })
        .collect();

    let evidence = json!({
        "distinct": true,
        "tuples": tuple_evidence,
        "pairwise_matrix": matrix,
        "blocking_cells": blocking,
        "cited_conclusions": [
            "the family members are linearly independent elements of order two in F_n / F_{n.5}",
        ],
    });
    Ok(Certificate::new(CertificateKind::Independence, verdict, evidence, &citations))
}

/// `P = (p₁,…,pₙ)` against the operator sequence of `e`.
pub fn membership_hint(e: &KnotExpr, ps: &[LaurentPolynomial]) -> Result<Certificate> {
    let seq = operator_polynomial_sequence(e)?;
    if ps.len() != seq.len() {
        return Err(Error::LengthMismatch { left: ps.len(), right: seq.len() });
    }
    if !is_symmetric(&ps[0])? {
        return Err(Error::AsymmetricP1(ps[0].to_string()));
    }
    let v = sequence_strongly_coprime(ps, &seq)?;
    let verdict = match v.relation {
        Relation::StronglyCoprime => Verdict::Pass,
        Relation::Undecidable => Verdict::Undecidable,
        _ => Verdict::Fail,
    };
    let n = seq.len();
    let evidence = json!({
        "P": ps.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "operator_sequence": seq.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "coprimality": v.to_json(),
        "cited_conclusion": format!("K in F_{}^P", n + 1),
    });
    Ok(Certificate::new(CertificateKind::MembershipHint, verdict, evidence, &["Thm-KnliesinQplusone"]))
}

fn int_rows(m: &IntegerMatrix) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect()
}

/// With `M = [[m²+1, m], [m, m²]] = m²·t*`: positive entries (after conjugation by
/// `diag(1, −1)` when `m < 0`) and non-zero diagonal entries of `Mᵏ` for `k ≤ k_max`.
pub fn tstar_check(m: i64, k_max: u32) -> Result<Certificate> {
    if m == 0 {
        return Err(Error::ZeroTwist);
    }
    if k_max == 0 {
        return Err(Error::InvalidInput("k_max must be at least 1".into()));
    }
    let mb = BigInt::from(m);
    let m2 = &mb * &mb;
    let big = |rows: Vec<Vec<BigInt>>| IntegerMatrix::from_rows(rows).expect("2x2");
    let mm = big(vec![vec![&m2 + 1, mb.clone()], vec![mb.clone(), m2.clone()]]);
    let t = t_star(&e_matrix(m)?)?;
    let t_matches = t.scale(&Rational::from_integer(m2.clone())) == mm.to_rational();
    let conjugated = m < 0;
    let cone = if conjugated {
        let d = IntegerMatrix::from_i64_rows(&[&[1, 0], &[0, -1]]).expect("2x2");
        d.mul(&mm)?.mul(&d)?
    } else {
        mm.clone()
    };
    let positive = cone.entries().iter().all(|x| x.is_positive());
    let mut powers = Vec::with_capacity(k_max as usize);
    let mut p = cone.clone();
    let mut diagonal_ok = true;
    let mut first_zero = None;
    for k in 1..=k_max {
        if k > 1 {
            p = p.mul(&cone)?;
        }
        let (a, d) = (p.get(0, 0), p.get(1, 1));
        if (a.is_zero() || d.is_zero()) && first_zero.is_none() {
            first_zero = Some(k);
            diagonal_ok = false;
        }
        powers.push(json!({"k": k, "m11": a.to_string(), "m22": d.to_string()}));
    }
    let verdict = if positive && diagonal_ok && t_matches { Verdict::Pass } else { Verdict::Fail };
    let evidence = json!({
        "m": m,
        "M": int_rows(&mm),
        "conjugated_by_diag_1_minus_1": conjugated,
        "cone_matrix": int_rows(&cone),
        "entries_positive": positive,
        "t_star_equals_M_over_m_squared": t_matches,
        "k_max": k_max,
        "powers": powers,
        "first_vanishing_diagonal": first_zero,
    });
    Ok(Certificate::new(CertificateKind::TStar, verdict, evidence, &["Lemma-t-star"]))
}

/// Largest pair bound for the sampled unit-equation check.
const SAMPLE_LIMIT: u64 = 60;

/// `4m² + 1` is not a square for `1 ≤ m ≤ m_max`, so every `Δ_m` is irreducible;
/// `m² = q·n²` and `2m²+1 = q(2n²+1)` force `q = 1` on sampled pairs.
pub fn irreducibility_scan(m_max: u64) -> Result<Certificate> {
    if m_max == 0 {
        return Err(Error::InvalidInput("m_max must be at least 1".into()));
    }
    if m_max > (u64::MAX >> 3).sqrt() {
        return Err(Error::InvalidInput("m_max too large".into()));
    }
    let squares: Vec<u64> = (1..=m_max)
        .into_par_iter()
        .filter(|&m| {
            let v = 4 * m * m + 1;
            let r = v.sqrt();
            r * r == v
        })
        .collect();
    let limit = m_max.min(SAMPLE_LIMIT);
    let mut unit_violations = Vec::new();
    let mut pairs = 0u64;
    for m in 1..=limit {
        for n in 1..=limit {
            if m == n {
                continue;
            }
            pairs += 1;
            let (mi, ni) = (BigInt::from(m), BigInt::from(n));
            let q = Rational::new(&mi * &mi, &ni * &ni);
            let lhs = Rational::from_integer(BigInt::from(2) * &mi * &mi + 1);
            let rhs = &q * Rational::from_integer(BigInt::from(2) * &ni * &ni + 1);
            if lhs == rhs {
                unit_violations.push(json!([m, n]));
            }
        }
    }
    let verdict = if squares.is_empty() && unit_violations.is_empty() { Verdict::Pass } else { Verdict::Fail };
    let evidence = json!({
        "m_max": m_max,
        "perfect_square_discriminants": squares,
        "sampled_pairs": pairs,
        "unit_equation_solutions_with_q_not_1": unit_violations,
    });
    Ok(Certificate::new(CertificateKind::Irreducibility, verdict, evidence, &["Prop-alexpolyscoprime"]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};
    use crate::family::{delta_poly, granny, q_poly, KnotExpr, OperatorDesc};

    fn unit_bounds(names: &[&str]) -> CGBoundTable {
        let mut t = CGBoundTable::new();
        for n in names {
            t.insert(n, int(1)).unwrap();
        }
        t
    }

    #[test]
    fn budget() {
        assert_eq!(trefoil_budget(&int(10)).unwrap(), 8);
        assert_eq!(trefoil_budget(&rat(4, 3)).unwrap(), 2);
        assert_eq!(trefoil_budget(&rat(1, 10)).unwrap(), 2);
        assert_eq!(trefoil_budget(&int(4)).unwrap(), 4);
        assert_eq!(trefoil_budget(&int(6)).unwrap(), 6);
        assert!(trefoil_budget(&int(0)).is_err());
    }

    #[test]
    fn main_hypotheses() {
        let bounds = unit_bounds(&["FrakR(3)", "RibbonR(2)"]);
        let e = build_K(2, &[2, 3], &trefoil_sum(4)).unwrap();
        let c = check_main_hypotheses(&e, &bounds).unwrap();
        assert_eq!(c.verdict, Verdict::Pass, "{}", c.to_json());
        let weak = build_K(2, &[2, 3], &granny()).unwrap();
        let c = check_main_hypotheses(&weak, &bounds).unwrap();
        assert_eq!(c.verdict, Verdict::Fail);
        assert_eq!(c.evidence["failed"], json!([3]));
        let missing = unit_bounds(&["FrakR(3)"]);
        assert_eq!(check_main_hypotheses(&e, &missing), Err(Error::MissingBound("RibbonR(2)".into())));
        let j = KnotExpr::infect(OperatorDesc::ribbon_r(2), vec![trefoil_sum(4)]).unwrap();
        let zero = KnotExpr::infect(OperatorDesc::frak_r(0), vec![j.clone(), KnotExpr::inverse(&j)]).unwrap();
        let c = check_main_hypotheses(&zero, &bounds).unwrap();
        assert_eq!(c.evidence["failed"], json!([1, 3]));
        let mut table = bounds.clone();
        assert_eq!(table.insert("x", int(0)), Err(Error::NonPositiveBound("x".into())));
    }

    #[test]
    fn irrational_rho_comparison() {
        use crate::seifert::SeifertMatrix;
        let v = SeifertMatrix::from_rows(&[vec![-1, 1], vec![0, -2]]).unwrap();
        // ρ₀ ≈ −1.5402 for this knot, Arf 0.
        let k = KnotExpr::knot(v);
        let (holds, _) = compare_rho(&k, &rat(3, 2), &default_tolerance()).unwrap();
        assert!(holds);
        let (holds, _) = compare_rho(&k, &rat(8, 5), &default_tolerance()).unwrap();
        assert!(!holds);
    }

    #[test]
    fn independence() {
        let bounds = unit_bounds(&["FrakR(3)", "FrakR(4)", "RibbonR(2)", "RibbonR(3)"]);
        let tuples: Vec<TupleSpec> = [[2, 3], [2, 4], [3, 3]].iter().map(|t| TupleSpec::new(t.to_vec())).collect();
        let c = independence_certificate(&tuples, &bounds).unwrap();
        assert_eq!(c.verdict, Verdict::Pass, "{}", c.to_json());
        let m = &c.evidence["pairwise_matrix"];
        for i in 0..3 {
            for j in 0..3 {
                let expected = if i == j { Value::Null } else { json!("StronglyCoprime") };
                assert_eq!(m[i][j], expected);
            }
        }
        let dup = [TupleSpec::new(vec![2, 3]), TupleSpec::new(vec![2, 3])];
        let c = independence_certificate(&dup, &bounds).unwrap();
        assert_eq!(c.verdict, Verdict::Fail);
        assert_eq!(c.evidence["failure"], json!("DuplicateTuple"));
        let rev: Vec<TupleSpec> = tuples.iter().rev().cloned().collect();
        assert_eq!(independence_certificate(&rev, &bounds).unwrap().verdict, Verdict::Pass);
    }

    #[test]
    fn membership() {
        let e = build_K(2, &[2, 3], &granny()).unwrap();
        let c = membership_hint(&e, &[delta_poly(5), q_poly(7)]).unwrap();
        assert_eq!(c.verdict, Verdict::Pass);
        assert_eq!(c.evidence["coprimality"]["witness"]["index"], json!(1));
        let own = operator_polynomial_sequence(&e).unwrap();
        assert_eq!(membership_hint(&e, &own).unwrap().verdict, Verdict::Fail);
        let t2 = LaurentPolynomial::from_i64s(&[-2, 1]);
        assert!(matches!(membership_hint(&e, &[t2, q_poly(7)]), Err(Error::AsymmetricP1(_))));
        assert_eq!(membership_hint(&e, &[delta_poly(5)]), Err(Error::LengthMismatch { left: 1, right: 2 }));
    }

    #[test]
    fn tstar() {
        let c = tstar_check(1, 20).unwrap();
        assert_eq!(c.verdict, Verdict::Pass);
        assert_eq!(c.evidence["powers"][1]["m22"], json!("2"));
        let c = tstar_check(-2, 10).unwrap();
        assert_eq!(c.verdict, Verdict::Pass);
        assert_eq!(c.evidence["M"], json!([["5", "-2"], ["-2", "4"]]));
        assert_eq!(c.evidence["cone_matrix"], json!([["5", "2"], ["2", "4"]]));
        assert_eq!(tstar_check(0, 5), Err(Error::ZeroTwist));
    }

    #[test]
    fn scan() {
        let c = irreducibility_scan(1000).unwrap();
        assert_eq!(c.verdict, Verdict::Pass);
        assert_eq!(c.evidence["perfect_square_discriminants"], json!([]));
    }
}
