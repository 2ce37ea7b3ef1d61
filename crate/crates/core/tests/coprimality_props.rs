use num_bigint::BigInt;
use proptest::prelude::*;

use concord_core::algebra::{classify_roots, LaurentPolynomial, RootDescriptor, RootKind};
use concord_core::coprimality::{
    coprime, multiplicatively_dependent, sequence_strongly_coprime, strongly_coprime, strongly_coprime_oracle,
    Dependence, Relation, Witness,
};

fn lp(c: &[i64]) -> LaurentPolynomial {
    LaurentPolynomial::from_i64s(c)
}

fn delta(m: i64) -> LaurentPolynomial {
    lp(&[m * m, -(2 * m * m + 1), m * m])
}

fn q(m: i64) -> LaurentPolynomial {
    lp(&[m * (m + 1), -(m * m + (m + 1) * (m + 1)), m * (m + 1)])
}

fn factor() -> impl Strategy<Value = LaurentPolynomial> {
    prop_oneof![
        (1i64..=9, -9i64..=9).prop_filter("b != 0", |(_, b)| *b != 0).prop_map(|(a, b)| lp(&[b, a])),
        (1i64..=9, -9i64..=9, -9i64..=9).prop_filter("c != 0", |(_, _, c)| *c != 0).prop_map(|(a, b, c)| lp(&[c, b, a])),
    ]
}

fn product() -> impl Strategy<Value = LaurentPolynomial> {
    prop::collection::vec(factor(), 1..=3).prop_map(|fs| fs.iter().fold(LaurentPolynomial::one(), |acc, f| &acc * f))
}

/// Independent check of `rᵏ = sⁿ` for rational and real quadratic roots.
fn holds(r: &RootDescriptor, s: &RootDescriptor, k: i64, n: i64) -> Option<bool> {
    let d = match (&r.kind, &s.kind) {
        (RootKind::QuadraticRoot { d, .. }, _) | (_, RootKind::QuadraticRoot { d, .. }) => d.clone(),
        _ => BigInt::from(2),
    };
    Some(r.as_surd(&d)?.pow(k) == s.as_surd(&d)?.pow(n))
}

fn same_status(a: &Dependence, b: &Dependence) -> bool {
    match (a, b) {
        (Dependence::Dependent { k, n }, Dependence::Dependent { k: k2, n: n2 }) => (k, n) == (n2, k2) || (k, n) == (&-n2, &-k2),
        (Dependence::Independent, Dependence::Independent) | (Dependence::Undecidable, Dependence::Undecidable) => true,
        _ => false,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn strong_coprimality_is_symmetric(p in product(), r in product()) {
        let a = strongly_coprime(&p, &r).unwrap().relation;
        let b = strongly_coprime(&r, &p).unwrap().relation;
        prop_assert_eq!(a, b);
    }

    #[test]
    fn strong_implies_plain_and_oracle(p in product(), r in product()) {
        if strongly_coprime(&p, &r).unwrap().relation == Relation::StronglyCoprime {
            prop_assert_eq!(coprime(&p, &r).unwrap().relation, Relation::Coprime);
            prop_assert!(strongly_coprime_oracle(&p, &r, 6).unwrap());
        }
    }

    #[test]
    fn oracle_refutation_is_never_contradicted(p in product(), r in product()) {
        if !strongly_coprime_oracle(&p, &r, 6).unwrap() {
            prop_assert_ne!(strongly_coprime(&p, &r).unwrap().relation, Relation::StronglyCoprime);
        }
    }

    #[test]
    fn witnesses_are_exact(p in product(), r in product()) {
        let v = strongly_coprime(&p, &r).unwrap();
        match (v.relation, v.witness) {
            (Relation::NotStronglyCoprime, Some(Witness::Dependence { root_p, root_q, k, n })) => {
                prop_assert!(k != 0 && n != 0);
                if let Some(ok) = holds(&root_p, &root_q, k, n) {
                    prop_assert!(ok, "{:?}^{} != {:?}^{}", root_p, k, root_q, n);
                }
            }
            (Relation::Undecidable, Some(Witness::Blocking(pairs))) => prop_assert!(!pairs.is_empty()),
            (Relation::Undecidable, w) => prop_assert!(false, "undecidable without blocking pairs: {:?}", w),
            _ => {}
        }
    }

    #[test]
    fn dependence_is_symmetric(p in product(), r in product()) {
        let rp = classify_roots(&p).unwrap();
        let rr = classify_roots(&r).unwrap();
        for a in &rp {
            for b in &rr {
                let ab = multiplicatively_dependent(a, b);
                let ba = multiplicatively_dependent(b, a);
                prop_assert!(same_status(&ab, &ba), "{:?} vs {:?}", ab, ba);
            }
        }
    }

    #[test]
    fn shifted_roots_are_dependent(a in 1i64..=9, b in -9i64..=9, e in 2u32..=3) {
        prop_assume!(b != 0 && a != b.abs());
        // roots b/a and (b/a)^e
        let p = lp(&[-b, a]);
        let r = lp(&[-b.pow(e), a.pow(e)]);
        prop_assert_eq!(strongly_coprime(&p, &r).unwrap().relation, Relation::NotStronglyCoprime);
        prop_assert!(!strongly_coprime_oracle(&p, &r, 3).unwrap());
    }
}

#[test]
fn q_family() {
    for m in 1..=20 {
        assert_eq!(strongly_coprime(&q(m), &q(m)).unwrap().relation, Relation::NotStronglyCoprime);
        for n in m + 1..=20 {
            assert_eq!(strongly_coprime(&q(m), &q(n)).unwrap().relation, Relation::StronglyCoprime, "q_{m}, q_{n}");
            assert_eq!(coprime(&delta(m), &delta(n)).unwrap().relation, Relation::Coprime);
        }
    }
}

#[test]
fn plain_coprimality() {
    let v = coprime(&q(2), &lp(&[-2, 3])).unwrap();
    assert_eq!(v.relation, Relation::NotCoprime);
    match v.witness {
        Some(Witness::CommonFactor(g)) => assert_eq!(g.normalize().unwrap(), lp(&[-2, 3])),
        w => panic!("unexpected witness {w:?}"),
    }
    assert_eq!(coprime(&lp(&[1, -1, 1]), &lp(&[1, 1, 1])).unwrap().relation, Relation::Coprime);
}

#[test]
fn cyclotomic_roots_block_strong_coprimality() {
    // t^2 - t + 1 and t + 1 have roots of unity, powers of which coincide.
    let v = strongly_coprime(&lp(&[1, -1, 1]), &lp(&[1, 1])).unwrap();
    assert_eq!(v.relation, Relation::NotStronglyCoprime);
}

#[test]
fn opposite_rationals_are_strongly_coprime() {
    // (−2)^k = 2^n has no solution with k, n coprime.
    assert_eq!(strongly_coprime(&lp(&[2, 1]), &lp(&[-2, 1])).unwrap().relation, Relation::StronglyCoprime);
    assert!(strongly_coprime_oracle(&lp(&[2, 1]), &lp(&[-2, 1]), 10).unwrap());
}

#[test]
fn cubic_factor_is_undecidable() {
    let v = strongly_coprime(&lp(&[-1, -1, 0, 1]), &lp(&[-2, 1])).unwrap();
    assert_eq!(v.relation, Relation::Undecidable);
}

#[test]
fn unit_quadratic_powers() {
    // golden ratio φ and φ²: t² − t − 1 against t² − 3t + 1
    let v = strongly_coprime(&lp(&[-1, -1, 1]), &lp(&[1, -3, 1])).unwrap();
    assert_eq!(v.relation, Relation::NotStronglyCoprime);
    // 2 + √3 against φ: different fields
    let v = strongly_coprime(&lp(&[1, -4, 1]), &lp(&[-1, -1, 1])).unwrap();
    assert_eq!(v.relation, Relation::StronglyCoprime);
}

#[test]
fn sequences() {
    let v = sequence_strongly_coprime(&[delta(2), q(5)], &[delta(3), q(5)]).unwrap();
    assert_eq!(v.relation, Relation::StronglyCoprime);
    assert!(matches!(v.witness, Some(Witness::Sequence { index: 1, .. })));
    let v = sequence_strongly_coprime(&[delta(2), q(5)], &[delta(2), q(7)]).unwrap();
    assert_eq!(v.relation, Relation::StronglyCoprime);
    assert!(matches!(v.witness, Some(Witness::Sequence { index: 2, .. })));
    let v = sequence_strongly_coprime(&[delta(2), q(5)], &[delta(2), q(5)]).unwrap();
    assert_eq!(v.relation, Relation::NotStronglyCoprime);
    assert!(sequence_strongly_coprime(&[delta(2)], &[delta(2), q(5)]).is_err());
}

#[test]
fn verdict_json() {
    let v = strongly_coprime(&q(2), &q(3)).unwrap();
    assert_eq!(v.to_json().to_string(), r#"{"relation":"StronglyCoprime"}"#);
    let v = strongly_coprime(&q(2), &q(2)).unwrap();
    let j = v.to_json();
    for key in ["k", "n", "root_p", "root_q"] {
        assert!(j["witness"].get(key).is_some(), "missing {key} in {j}");
    }
}
