use nalgebra::{Complex, DMatrix};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use concord_core::algebra::rational::{self, int, rat};
use concord_core::algebra::{is_symmetric, LaurentPolynomial};
use concord_core::seifert::{
    alexander, arf, connected_sum, e_matrix, mirror, reverse, rho_zero, signature_profile, t_star, SeifertMatrix,
};

fn sample(seed: u64, n: usize) -> SeifertMatrix {
    let mut rng = StdRng::seed_from_u64(seed);
    loop {
        let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-3..=3)).collect()).collect();
        if let Ok(v) = SeifertMatrix::from_rows(&rows) {
            return v;
        }
    }
}

fn seifert() -> impl Strategy<Value = SeifertMatrix> {
    (any::<u64>(), prop_oneof![Just(2usize), Just(4usize)]).prop_map(|(s, n)| sample(s, n))
}

fn eigen_signature(v: &SeifertMatrix, theta: f64) -> Option<i64> {
    let n = v.size();
    let rows = v.matrix().to_rows();
    let w = Complex::new(theta.cos(), theta.sin());
    let one = Complex::new(1.0, 0.0);
    let f = |x: &num_bigint::BigInt| x.to_string().parse::<f64>().unwrap();
    let h = DMatrix::from_fn(n, n, |i, j| (one - w) * f(&rows[i][j]) + (one - w.conj()) * f(&rows[j][i]));
    let eig = h.symmetric_eigen().eigenvalues;
    if eig.iter().any(|l| l.abs() < 1e-8) {
        return None;
    }
    Some(eig.iter().map(|l| l.signum() as i64).sum())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn alexander_at_one_is_a_unit(v in seifert()) {
        let d = alexander(&v);
        let at_one = d.eval(&int(1)).unwrap();
        prop_assert!(at_one == int(1) || at_one == int(-1));
    }

    #[test]
    fn alexander_is_symmetric(v in seifert()) {
        prop_assert!(is_symmetric(&alexander(&v)).unwrap());
    }

    #[test]
    fn alexander_is_multiplicative(a in seifert(), b in seifert()) {
        let lhs = alexander(&connected_sum(&a, &b));
        prop_assert_eq!(lhs, (&alexander(&a) * &alexander(&b)).normalize().unwrap());
    }

    #[test]
    fn mirror_negates_the_profile(v in seifert()) {
        let p = signature_profile(&v);
        let q = signature_profile(&mirror(&v));
        prop_assert_eq!(p.jumps.len(), q.jumps.len());
        for (a, b) in p.jumps.iter().zip(&q.jumps) {
            prop_assert_eq!(a.theta_over_pi(40), b.theta_over_pi(40));
        }
        let neg: Vec<i64> = p.arc_values.iter().map(|s| -s).collect();
        prop_assert_eq!(q.arc_values, neg);
    }

    #[test]
    fn profile_shape(v in seifert()) {
        let p = signature_profile(&v);
        prop_assert_eq!(p.arc_values.len(), p.jumps.len() + 1);
        prop_assert_eq!(p.arc_values[0], 0);
        let bound = v.size() as i64;
        prop_assert!(p.arc_values.iter().all(|s| s.abs() <= bound));
    }

    #[test]
    fn rho_zero_is_additive(a in seifert(), b in seifert()) {
        prop_assert_eq!(rho_zero(&connected_sum(&a, &b)), rho_zero(&a).add(&rho_zero(&b)));
    }

    #[test]
    fn rho_zero_vanishes_on_slice_form(v in seifert()) {
        prop_assert!(rho_zero(&connected_sum(&v, &mirror(&reverse(&v)))).is_zero());
    }

    #[test]
    fn rho_zero_enclosure(v in seifert()) {
        let r = rho_zero(&v);
        prop_assert!(r.numeric.width() <= rat(1, 1_000_000_000));
        if let Some(q) = r.exact_rational() {
            prop_assert!(r.numeric.contains(q));
        }
    }

    #[test]
    fn profile_matches_eigenvalues(v in seifert()) {
        let p = signature_profile(&v);
        let edges: Vec<(f64, f64)> = p
            .jumps
            .iter()
            .map(|j| {
                let iv = j.theta_over_pi(64);
                (rational::to_f64(&iv.lo), rational::to_f64(&iv.hi))
            })
            .collect();
        for s in 0..100 {
            let t = (s as f64 + 0.5) / 100.0;
            if edges.iter().any(|(lo, hi)| t > lo - 1e-6 && t < hi + 1e-6) {
                continue;
            }
            let arc = edges.iter().filter(|(_, hi)| *hi < t).count();
            if let Some(sig) = eigen_signature(&v, t * std::f64::consts::PI) {
                prop_assert_eq!(sig, p.arc_values[arc], "theta/pi = {}", t);
            }
        }
    }
}

#[test]
fn e_matrix_alexander() {
    for m in 1..=12i64 {
        let d = alexander(&e_matrix(m).unwrap());
        assert_eq!(d, LaurentPolynomial::from_i64s(&[m * m, -(2 * m * m + 1), m * m]));
    }
}

#[test]
fn trefoil_data() {
    let t = SeifertMatrix::from_rows(&[vec![-1, 1], vec![0, -1]]).unwrap();
    assert_eq!(alexander(&t), LaurentPolynomial::from_i64s(&[1, -1, 1]));
    assert_eq!(arf(&t), 1);
    assert_eq!(rho_zero(&t).exact_rational(), Some(&rat(-4, 3)));
    let p = signature_profile(&t);
    assert_eq!(p.arc_values, vec![0, -2]);
    assert_eq!(arf(&connected_sum(&t, &t)), 0);
}

#[test]
fn e_matrices_have_vanishing_signature() {
    for m in 1..=8 {
        let v = e_matrix(m).unwrap();
        assert!(signature_profile(&v).is_identically_zero());
        assert_eq!(arf(&v), (m % 2) as u8);
    }
}

#[test]
fn t_star_has_unit_determinant() {
    for m in 1..=6i64 {
        let ts = t_star(&e_matrix(m).unwrap()).unwrap();
        assert_eq!(ts.det().unwrap(), int(1));
        let m2 = int(m * m);
        let want = [[int(m * m + 1) / &m2, int(m) / &m2], [int(m) / &m2, int(1)]];
        let rows = ts.to_rows();
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(rows[i][j], want[i][j]);
            }
        }
    }
}

#[test]
fn degenerate_matrices_are_rejected() {
    assert!(SeifertMatrix::from_rows(&[vec![1, 2], vec![2, 4]]).is_err());
    assert!(SeifertMatrix::from_rows(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).is_err());
}
