mod common;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use common::fano;
use pgpw_core::code::{analyze_code, minimal_codewords};
use pgpw_core::construction::build_line_pcw;
use pgpw_core::geometry::{circulant_labeling, pg_parity_check};
use pgpw_core::pseudoweight::{
    check_sum_bound, check_zero_component_lemma, pseudo_weight, two_value_lower_bound,
};
use pgpw_core::rays::enumerate_rays;
use pgpw_core::{build_plane, canonical_scale, ConeSystem, FieldTable, Rational};

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn pw(v: &[i64]) -> Rational {
    let w: Vec<Rational> = v.iter().map(|&x| rat(x, 1)).collect();
    pseudo_weight(&w).unwrap()
}

#[test]
fn codewords_lie_in_the_cone() {
    for s in [1, 2] {
        let h = pg_parity_check(s).unwrap();
        let cone = ConeSystem::build(&h).unwrap();
        let code = analyze_code(&h).unwrap();
        for c in code.codewords() {
            let w: Vec<i64> = c.iter().map(|&b| b as i64).collect();
            assert!(cone.is_pseudocodeword(&w).unwrap());
        }
    }
}

#[test]
fn minimal_codeword_weights_for_order_four() {
    let h = pg_parity_check(2).unwrap();
    let code = analyze_code(&h).unwrap();
    let cone = ConeSystem::build(&h).unwrap();
    let minimal = minimal_codewords(&code);
    let weights: BTreeSet<usize> = minimal.iter().map(|c| c.iter().filter(|&&b| b == 1).count()).collect();
    assert_eq!(weights, BTreeSet::from([6, 8, 10]));
    // A codeword spans an extreme ray exactly when it is minimal.
    for c in code.codewords().filter(|c| c.contains(&1)) {
        let w: Vec<i64> = c.iter().map(|&b| b as i64).collect();
        assert_eq!(cone.is_minimal_pseudocodeword(&w).unwrap(), minimal.contains(&c));
    }
}

fn nonneg_vec(n: usize) -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(0i64..6, n).prop_filter("nonzero", |v| v.iter().any(|&x| x > 0))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn field_axioms(s in 1u32..=5, a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let f = FieldTable::build(s).unwrap();
        let q = f.order();
        let (a, b, c) = (a % q, b % q, c % q);
        prop_assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.add(a, a), 0);
        prop_assert_eq!(f.mul(a, 1), a);
        if a != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            prop_assert_eq!(f.pow(a, (q - 1) as u64), 1);
        }
    }

    #[test]
    fn planes_satisfy_incidence_axioms(s in 1u32..=3) {
        let plane = build_plane(&FieldTable::build(s).unwrap());
        prop_assert!(plane.check_axioms().is_ok());
        let (cyclic, h) = circulant_labeling(&plane).unwrap();
        prop_assert!(cyclic.check_axioms().is_ok());
        let q = (1usize << s) as i64;
        let n = h.cols();
        // H Hᵀ = qI + J
        for i in 0..n {
            for j in 0..n {
                let a: BTreeSet<_> = h.row_support(i).iter().collect();
                let dot = h.row_support(j).iter().filter(|p| a.contains(p)).count() as i64;
                prop_assert_eq!(dot, if i == j { q + 1 } else { 1 });
            }
        }
    }

    #[test]
    fn pseudo_weight_is_scale_invariant(v in nonneg_vec(9), num in 1i64..50, den in 1i64..50) {
        let c = rat(num, den);
        let w: Vec<Rational> = v.iter().map(|&x| rat(x, 1)).collect();
        let scaled: Vec<Rational> = w.iter().map(|x| x * &c).collect();
        prop_assert_eq!(pseudo_weight(&w).unwrap(), pseudo_weight(&scaled).unwrap());
        let supp = v.iter().filter(|&&x| x > 0).count() as i64;
        prop_assert!(pw(&v) <= rat(supp, 1));
        prop_assert!(pw(&v) >= Rational::one());
    }

    #[test]
    fn two_value_bound_holds(v in proptest::collection::vec(1i64..8, 1..10)) {
        let m = *v.iter().min().unwrap();
        let big_m = *v.iter().max().unwrap();
        prop_assert!(pw(&v) >= two_value_lower_bound(v.len(), m, big_m).unwrap());
    }

    #[test]
    fn zeroing_a_minimum_entry_lowers_weight(v in proptest::collection::vec(1i64..20, 2..10)) {
        let w: Vec<Rational> = v.iter().map(|&x| rat(x, 3)).collect();
        prop_assert!(check_zero_component_lemma(&w).unwrap());
    }

    #[test]
    fn canonical_scaling_is_a_class_invariant(v in nonneg_vec(7), num in 1i64..30, den in 1i64..30) {
        let (h, _) = fano();
        let is_cw = |x: &[u8]| h.is_codeword(x).unwrap_or(false);
        let w: Vec<Rational> = v.iter().map(|&x| rat(x, 1)).collect();
        let scaled: Vec<Rational> = w.iter().map(|x| x * rat(num, den)).collect();
        let a = canonical_scale(&w, is_cw).unwrap();
        let b = canonical_scale(&scaled, is_cw).unwrap();
        prop_assert_eq!(a.canonical(), b.canonical());
        prop_assert!(h.is_codeword(&a.reduction_mod2()).unwrap());
        // Either primitive or twice a primitive vector with a non-codeword parity.
        let g = a.canonical().iter().fold(0i64, |g, &x| num_integer::gcd(g, x));
        prop_assert!(g == 1 || g == 2);
    }

    #[test]
    fn sum_bound_on_fano_cone_members(coeffs in proptest::collection::vec(0i64..4, 14)) {
        let (_, cone) = fano();
        let rays = enumerate_rays(&cone, true).unwrap();
        let mut w = vec![0i64; 7];
        for (r, &c) in rays.rays().iter().zip(&coeffs) {
            for (x, &y) in w.iter_mut().zip(r.canonical()) {
                *x += c * y;
            }
        }
        prop_assume!(w.iter().any(|&x| x > 0));
        prop_assert!(cone.is_pseudocodeword(&w).unwrap());
        prop_assert!(check_sum_bound(&cone, &w, 2).unwrap().passes());
        prop_assert!(pw(&w) >= rat(4, 1));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn sum_bound_on_order_four_cone_members(
        coeffs in proptest::collection::vec(0i64..3, 6),
        shifts in proptest::collection::vec(0usize..21, 6),
    ) {
        let plane = build_plane(&FieldTable::build(2).unwrap());
        let (cyclic, h) = circulant_labeling(&plane).unwrap();
        let cone = ConeSystem::build(&h).unwrap();
        let code = analyze_code(&h).unwrap();
        // Pool: line constructions and minimal codewords.
        let mut pool: Vec<Vec<i64>> = (0..3).map(|j| build_line_pcw(&cyclic, j).unwrap().omega).collect();
        pool.extend(minimal_codewords(&code).iter().take(3).map(|c| c.iter().map(|&b| b as i64).collect()));
        let mut w = vec![0i64; 21];
        for ((p, &c), &s) in pool.iter().zip(&coeffs).zip(&shifts) {
            for i in 0..21 {
                w[(i + s) % 21] += c * p[i];
            }
        }
        prop_assume!(!w.iter().all(Zero::is_zero));
        prop_assert!(cone.is_pseudocodeword(&w).unwrap());
        prop_assert!(check_sum_bound(&cone, &w, 4).unwrap().passes());
        prop_assert!(pw(&w) >= rat(6, 1));
    }
}
