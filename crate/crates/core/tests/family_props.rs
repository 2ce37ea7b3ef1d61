use proptest::prelude::*;

use concord_core::algebra::LaurentPolynomial;
use concord_core::certificate::Verdict;
use concord_core::coprimality::{strongly_coprime, Relation};
use concord_core::family::{
    arf_expr, build_K, classical_alexander, classical_seifert, delta_poly, e_knot, family_shape, granny,
    higher_order_summands, is_negative_amphichiral, operator_polynomial_sequence, order_two_certificate, q_poly,
    rho_zero_expr, trefoil, KnotExpr, OperatorDesc,
};
use concord_core::seifert::{signature_profile, SeifertMatrix};
use concord_core::Error;

fn base_knot() -> impl Strategy<Value = KnotExpr> {
    prop_oneof![
        Just(trefoil()),
        Just(KnotExpr::mirror(&trefoil())),
        (1i64..=4).prop_map(|m| e_knot(m).unwrap()),
        Just(KnotExpr::knot(SeifertMatrix::unknot())),
    ]
}

fn knot() -> impl Strategy<Value = KnotExpr> {
    base_knot().prop_recursive(3, 8, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| KnotExpr::sum(&a, &b)),
            inner.clone().prop_map(|a| KnotExpr::mirror(&a)),
            inner.prop_map(|a| KnotExpr::reverse(&a)),
        ]
    })
}

fn arf_zero_knot() -> impl Strategy<Value = KnotExpr> {
    knot().prop_filter("Arf zero", |k| arf_expr(k).unwrap() == 0)
}

fn twists(max_len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(prop_oneof![-10i64..=-1, 1i64..=10], 1..=max_len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn alexander_ignores_the_base(t in twists(4), a in arf_zero_knot(), b in arf_zero_knot()) {
        let ka = build_K(t.len(), &t, &a).unwrap();
        let kb = build_K(t.len(), &t, &b).unwrap();
        prop_assert_eq!(classical_alexander(&ka).unwrap(), classical_alexander(&kb).unwrap());
    }

    #[test]
    fn arf_gate(t in twists(3), k0 in knot()) {
        let arf = arf_expr(&k0).unwrap();
        match build_K(t.len(), &t, &k0) {
            Ok(_) => prop_assert_eq!(arf, 0),
            Err(Error::ArfNonzero) => prop_assert_eq!(arf, 1),
            Err(e) => prop_assert!(false, "unexpected error {}", e),
        }
    }

    #[test]
    fn rho_is_additive_and_odd(a in knot(), b in knot()) {
        let sum = rho_zero_expr(&KnotExpr::sum(&a, &b)).unwrap();
        prop_assert_eq!(sum, rho_zero_expr(&a).unwrap().add(&rho_zero_expr(&b).unwrap()));
        prop_assert_eq!(rho_zero_expr(&KnotExpr::mirror(&a)).unwrap(), rho_zero_expr(&a).unwrap().neg());
    }

    #[test]
    fn classical_data_agrees_with_seifert_form(k in knot()) {
        let v = classical_seifert(&k).unwrap();
        prop_assert_eq!(concord_core::seifert::alexander(&v), classical_alexander(&k).unwrap());
        prop_assert_eq!(concord_core::seifert::rho_zero(&v), rho_zero_expr(&k).unwrap());
    }

    #[test]
    fn amphichiral_sums_have_no_signature(ms in prop::collection::vec(1i64..=6, 1..=4)) {
        let e = ms.iter().map(|&m| e_knot(m).unwrap()).reduce(|a, b| KnotExpr::sum(&a, &b)).unwrap();
        prop_assert!(is_negative_amphichiral(&e));
        prop_assert!(signature_profile(&classical_seifert(&e).unwrap()).is_identically_zero());
        prop_assert!(rho_zero_expr(&e).unwrap().is_zero());
    }

    #[test]
    fn family_members_are_amphichiral(t in twists(4), k0 in arf_zero_knot()) {
        let e = build_K(t.len(), &t, &k0).unwrap();
        prop_assert!(is_negative_amphichiral(&e));
        prop_assert!(rho_zero_expr(&e).unwrap().is_zero());
        prop_assert_eq!(order_two_certificate(&e).unwrap().verdict, Verdict::Pass);
        let shape = family_shape(&e).unwrap();
        prop_assert_eq!(shape.twists(), Some(t.clone()));
        prop_assert_eq!(&shape.k0, &k0);
    }

    #[test]
    fn differing_slots_are_strongly_coprime(t in twists(4), slot in 0usize..3, other in 1i64..=10) {
        prop_assume!(slot + 1 < t.len() && t[slot] != other && t[slot] > 0);
        let mut u = t.clone();
        u[slot] = other;
        let a = operator_polynomial_sequence(&build_K(t.len(), &t, &granny()).unwrap()).unwrap();
        let b = operator_polynomial_sequence(&build_K(u.len(), &u, &granny()).unwrap()).unwrap();
        // entries run from m_n down to m_1
        let i = t.len() - 1 - slot;
        prop_assert_eq!(strongly_coprime(&a[i], &b[i]).unwrap().relation, Relation::StronglyCoprime);
    }

    #[test]
    fn json_round_trip(t in twists(3), k0 in arf_zero_knot()) {
        let e = build_K(t.len(), &t, &k0).unwrap();
        let back = KnotExpr::from_json(&e.to_json()).unwrap();
        prop_assert_eq!(back.structural_hash(), e.structural_hash());
        prop_assert_eq!(back, e);
    }
}

#[test]
fn operator_catalog() {
    for m in 1..=10 {
        let r = OperatorDesc::ribbon_r(m);
        assert_eq!(r.alexander_poly, q_poly(m).normalize().unwrap());
        assert_eq!(concord_core::seifert::alexander(&r.pattern_seifert), q_poly(m).normalize().unwrap());
        let f = OperatorDesc::frak_r(m);
        assert_eq!(f.alexander_poly, delta_poly(m).pow(2).normalize().unwrap());
        assert!(f.curves_null_homologous && r.curves_null_homologous);
    }
    assert_eq!(q_poly(2), LaurentPolynomial::from_i64s(&[6, -13, 6]));
}

#[test]
fn summands() {
    let e = build_K(2, &[2, 3], &granny()).unwrap();
    let s = higher_order_summands(&e, 1).unwrap();
    assert_eq!(s[0], (q_poly(2), "x1".to_string()));
    assert_eq!(s[1], (q_poly(2), "x2".to_string()));
    assert!(matches!(higher_order_summands(&e, 2), Err(Error::IndexOutOfRange { .. })));

    let e = build_K(3, &[1, 2, 4], &granny()).unwrap();
    let s = higher_order_summands(&e, 2).unwrap();
    assert_eq!(s[0].0, LaurentPolynomial::from_i64s(&[2, -5, 2]));
}

#[test]
fn build_errors() {
    assert!(matches!(build_K(2, &[2, 0], &granny()), Err(Error::ZeroTwist)));
    assert!(matches!(build_K(1, &[2], &trefoil()), Err(Error::ArfNonzero)));
    assert!(matches!(build_K(2, &[2], &granny()), Err(Error::LengthMismatch { .. })));
}

#[test]
fn sequence_of_the_standard_member() {
    let e = build_K(2, &[2, 3], &granny()).unwrap();
    assert_eq!(operator_polynomial_sequence(&e).unwrap(), vec![delta_poly(3), q_poly(2)]);
    assert_eq!(classical_alexander(&e).unwrap(), delta_poly(3).pow(2).normalize().unwrap());
}

#[test]
fn uncertified_expressions_are_refused() {
    assert!(matches!(order_two_certificate(&trefoil()), Err(Error::NotCertifiedAmphichiral)));
}
