mod common;

use std::time::Duration;

use num_bigint::BigInt;
use proptest::prelude::*;

use common::{fano, oracle_extreme_rays, primitive_set};
use pgpw_core::geometry::pg_parity_check;
use pgpw_core::rays::{
    cyclic_orbit, default_order, enumerate_rays, enumerate_rays_with, explore_rays, Budget,
    DoubleDescription, EnumerationOptions,
};
use pgpw_core::{BinaryMatrix, ConeSystem, Error};

#[test]
fn fano_rays_match_brute_force() {
    let (_, cone) = fano();
    let oracle = oracle_extreme_rays(cone.coefficient_rows(), 7);
    assert_eq!(oracle.len(), 14);
    for sym in [true, false] {
        let rays = enumerate_rays(&cone, sym).unwrap();
        assert_eq!(primitive_set(rays.rays().iter().map(|r| r.canonical())), oracle);
    }
}

#[test]
fn bigint_double_description_agrees() {
    let (_, cone) = fano();
    let mut dd = DoubleDescription::<BigInt>::new(cone.coefficient_rows().to_vec(), 7);
    let rest = dd.seed(&default_order(&cone)).unwrap();
    for k in rest {
        dd.insert(k).unwrap();
    }
    let got: std::collections::BTreeSet<Vec<i64>> = dd
        .rays()
        .iter()
        .map(|r| r.iter().map(|x| i64::try_from(x).unwrap()).collect())
        .collect();
    assert_eq!(got, oracle_extreme_rays(cone.coefficient_rows(), 7));
}

#[test]
fn fano_rays_are_sound() {
    let (h, cone) = fano();
    let rays = enumerate_rays(&cone, true).unwrap();
    assert_eq!(rays.group_order_used(), 7);
    let all: Vec<&[i64]> = rays.rays().iter().map(|r| r.canonical()).collect();
    for r in rays.rays() {
        assert!(cone.is_minimal_pseudocodeword(r.canonical()).unwrap());
        assert!(h.is_codeword(&r.reduction_mod2()).unwrap());
        for s in cyclic_orbit(r.canonical()) {
            assert!(all.contains(&s.as_slice()));
        }
    }
    let mut sorted = all.clone();
    sorted.sort();
    assert_eq!(sorted, all);
    assert_eq!(rays.orbit_sizes(), vec![7, 7]);
}

#[test]
fn budget_is_enforced() {
    let cone = ConeSystem::build(&pg_parity_check(2).unwrap()).unwrap();
    for sym in [true, false] {
        let opts = EnumerationOptions {
            use_symmetry: sym,
            budget: Budget {
                time_limit: Some(Duration::from_millis(300)),
                max_rays: None,
            },
            ..EnumerationOptions::default()
        };
        assert!(matches!(
            enumerate_rays_with(&cone, &opts),
            Err(Error::BudgetExceeded { .. })
        ));
    }
    let opts = EnumerationOptions {
        use_symmetry: false,
        budget: Budget {
            time_limit: None,
            max_rays: Some(30),
        },
        ..EnumerationOptions::default()
    };
    assert!(matches!(
        enumerate_rays_with(&cone, &opts),
        Err(Error::BudgetExceeded { .. })
    ));
}

#[test]
fn partial_exploration_emits_extreme_rays() {
    let h = pg_parity_check(2).unwrap();
    let cone = ConeSystem::build(&h).unwrap();
    let mut start = vec![1i64; 21];
    for &p in h.row_support(0) {
        start[p] = 4;
    }
    let opts = EnumerationOptions {
        start_ray: Some(start),
        budget: Budget {
            time_limit: Some(Duration::from_secs(2)),
            max_rays: None,
        },
        ..EnumerationOptions::default()
    };
    let e = explore_rays(&cone, &opts).unwrap();
    assert!(!e.complete);
    assert!(e.representatives.len() > 1);
    for r in &e.representatives {
        assert!(cone.is_minimal_pseudocodeword(r).unwrap(), "{r:?}");
    }
}

#[test]
fn start_ray_must_be_extreme() {
    let (_, cone) = fano();
    let opts = EnumerationOptions {
        start_ray: Some(vec![1; 7]),
        ..EnumerationOptions::default()
    };
    assert!(matches!(explore_rays(&cone, &opts), Err(Error::NotInCone(_))));
}

fn circulant_strategy() -> impl Strategy<Value = BinaryMatrix> {
    (4usize..=7)
        .prop_flat_map(|n| (Just(n), proptest::sample::subsequence((1..n).collect::<Vec<_>>(), 1..=2)))
        .prop_map(|(n, rest)| {
            let mut first = vec![0];
            first.extend(rest);
            BinaryMatrix::circulant(n, &first).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn insertion_order_does_not_matter(order in Just((0..28).collect::<Vec<usize>>()).prop_shuffle()) {
        let (_, cone) = fano();
        let opts = EnumerationOptions {
            use_symmetry: false,
            insertion_order: Some(order),
            ..EnumerationOptions::default()
        };
        let rays = enumerate_rays_with(&cone, &opts).unwrap();
        prop_assert_eq!(rays, enumerate_rays(&cone, false).unwrap());
    }

    #[test]
    fn random_circulants_match_oracle(h in circulant_strategy()) {
        let cone = ConeSystem::build(&h).unwrap();
        let n = h.cols();
        let oracle = oracle_extreme_rays(cone.coefficient_rows(), n);
        let plain = enumerate_rays(&cone, false).unwrap();
        let sym = enumerate_rays(&cone, true).unwrap();
        prop_assert_eq!(&primitive_set(plain.rays().iter().map(|r| r.canonical())), &oracle);
        prop_assert_eq!(plain.rays(), sym.rays());
        for r in sym.rays() {
            prop_assert!(cone.is_minimal_pseudocodeword(r.canonical()).unwrap());
        }
    }
}
