use proptest::prelude::*;

use concord_core::algebra::rational::{int, rat};
use concord_core::algebra::{classify_roots, lp_gcd, matrix_power, IntegerMatrix, LaurentPolynomial, RootKind};

fn laurent() -> impl Strategy<Value = LaurentPolynomial> {
    (prop::collection::vec(-9i64..=9, 1..6), -3i64..=3).prop_map(|(c, shift)| {
        LaurentPolynomial::from_terms(c.iter().enumerate().map(|(i, &x)| (i as i64 + shift, int(x))))
    })
}

fn nonzero_laurent() -> impl Strategy<Value = LaurentPolynomial> {
    laurent().prop_filter("non-zero", |p| !p.is_zero())
}

/// Products of small linear and quadratic factors, so that roots stay in the supported classes often.
fn factored() -> impl Strategy<Value = LaurentPolynomial> {
    let lin = (1i64..=6, -6i64..=6).prop_map(|(a, b)| LaurentPolynomial::from_i64s(&[b, a]));
    let quad = (1i64..=4, -6i64..=6, -4i64..=4).prop_map(|(a, b, c)| LaurentPolynomial::from_i64s(&[c, b, a]));
    (prop::collection::vec(lin, 0..3), prop::collection::vec(quad, 0..2))
        .prop_map(|(l, q)| l.iter().chain(q.iter()).fold(LaurentPolynomial::one(), |acc, f| &acc * f))
        .prop_filter("non-zero", |p| !p.is_zero())
}

proptest! {
    #[test]
    fn normalize_is_idempotent(p in nonzero_laurent()) {
        let n = p.normalize().unwrap();
        prop_assert_eq!(n.normalize().unwrap(), n);
    }

    #[test]
    fn normalize_ignores_units(p in nonzero_laurent(), k in -5i64..=5, negate: bool) {
        let unit = LaurentPolynomial::monomial(if negate { int(-1) } else { int(1) }, k);
        prop_assert_eq!((&p * &unit).normalize().unwrap(), p.normalize().unwrap());
    }

    #[test]
    fn gcd_commutes_and_divides(a in factored(), b in factored(), c in factored()) {
        let p = &a * &c;
        let q = &b * &c;
        let g = lp_gcd(&p, &q).unwrap();
        prop_assert_eq!(g.normalize().unwrap(), lp_gcd(&q, &p).unwrap().normalize().unwrap());
        let gp = g.normal_poly().unwrap();
        prop_assert!(p.normal_poly().unwrap().div_exact(&gp).is_some());
        prop_assert!(q.normal_poly().unwrap().div_exact(&gp).is_some());
        prop_assert!(gp.div_exact(&c.normal_poly().unwrap()).is_some());
    }

    #[test]
    fn classified_roots_are_roots(p in factored()) {
        prop_assume!(!p.is_unit_multiple());
        let roots = classify_roots(&p).unwrap();
        let normal = p.normal_poly().unwrap();
        if roots.iter().all(|r| !r.is_unsupported()) {
            let count: usize = roots.iter().map(|r| r.multiplicity).sum();
            prop_assert_eq!(count, normal.degree().unwrap_or(0));
        }
        for r in &roots {
            match &r.kind {
                RootKind::RationalRoot(x) => prop_assert!(p.eval(x).unwrap() == int(0)),
                RootKind::QuadraticRoot { .. } | RootKind::RootOfUnity(_) => {
                    prop_assert!(normal.div_exact(&r.minimal_poly()).is_some())
                }
                RootKind::Unsupported { .. } => {}
            }
        }
    }

    #[test]
    fn matrix_power_is_a_homomorphism(
        e in prop::array::uniform4(-3i64..=3).prop_filter("invertible", |e| e[0] * e[3] - e[1] * e[2] != 0),
        j in -8i64..=8,
        k in -8i64..=8,
    ) {
        let m = IntegerMatrix::from_i64_rows(&[&e[..2], &e[2..]]).unwrap();
        let lhs = matrix_power(&m, j + k).unwrap();
        let rhs = matrix_power(&m, j).unwrap().mul(&matrix_power(&m, k).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn normalization_examples() {
    let p = LaurentPolynomial::parse_var("-t^-1 + 3 - t", 't').unwrap();
    assert_eq!(p.normalize().unwrap(), LaurentPolynomial::from_i64s(&[1, -3, 1]));
    let half = LaurentPolynomial::from_terms([(3, rat(1, 2)), (4, rat(-1, 2))]);
    assert_eq!(half.normalize().unwrap(), LaurentPolynomial::from_terms([(0, rat(-1, 2)), (1, rat(1, 2))]).normalize().unwrap());
}

#[test]
fn delta_m_roots_are_real_quadratic() {
    for m in 1..=30i64 {
        let d = LaurentPolynomial::from_i64s(&[m * m, -(2 * m * m + 1), m * m]);
        let roots = classify_roots(&d).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots.iter().all(|r| matches!(r.kind, RootKind::QuadraticRoot { .. })));
    }
}
