//! Property tests for the structural invariants: exact reversion round
//! trips, order-isomorphism invariance of avoidance, dual-route transform
//! agreement, bijection and serialization round trips.

use proptest::prelude::*;

use eigenperm::bijection::{perm_to_tree, tree_to_perm, CycleLabeledTree};
use eigenperm::coeff::{coeff_int, coeff_rat, Coeff};
use eigenperm::lagrange::{lagrange_revert_reciprocal, CountSequence};
use eigenperm::perm::{
    avoids_barred_direct, avoids_barred_recursive, condition_i_permutations, standardize,
    Permutation,
};
use eigenperm::series::{
    functional_sqrt, revert_reciprocal, self_composition, series_compose, series_revert,
    TruncatedSeries,
};

fn rational_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec((-9i64..=9, 1i64..=4), order)
        .prop_map(|entries| {
            TruncatedSeries::new(entries.into_iter().map(|(p, q)| coeff_rat(p, q)).collect())
        })
}

fn invertible_series() -> impl Strategy<Value = TruncatedSeries> {
    (1usize..=10, 1i64..=9, any::<bool>())
        .prop_flat_map(|(order, lead, neg)| {
            (Just(order), Just(if neg { -lead } else { lead }), rational_series(order))
        })
        .prop_map(|(_, lead, s)| {
            let mut coeffs = s.into_coeffs();
            coeffs[0] = coeff_int(lead);
            TruncatedSeries::new(coeffs)
        })
}

fn distinct_word() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::hash_set(1u32..=60, 0..=7).prop_flat_map(|set| {
        let values: Vec<u32> = set.into_iter().collect();
        Just(values).prop_shuffle()
    })
}

proptest! {
    // compose(f, revert(f)) and compose(revert(f), f) are exactly the
    // identity series, for any f with nonzero leading coefficient.
    #[test]
    fn reversion_round_trips_exactly(f in invertible_series()) {
        let n = f.order();
        let g = series_revert(&f, n).unwrap();
        let id = TruncatedSeries::identity(n);
        prop_assert_eq!(series_compose(&f, &g, n).unwrap(), id.clone());
        prop_assert_eq!(series_compose(&g, &f, n).unwrap(), id);
    }

    // avoidance only depends on relative order
    #[test]
    fn avoidance_is_order_isomorphism_invariant(word in distinct_word()) {
        let p = Permutation::new(word).unwrap();
        let s = standardize(&p);
        prop_assert_eq!(avoids_barred_direct(&p), avoids_barred_direct(&s));
        prop_assert_eq!(avoids_barred_recursive(&p), avoids_barred_recursive(&s));
        prop_assert_eq!(avoids_barred_direct(&p), avoids_barred_recursive(&p));
    }

    // the partition-sum and series routes agree on integer inputs
    #[test]
    fn transform_routes_agree(values in prop::collection::vec(-20i64..=20, 1..=9)) {
        let n = values.len();
        let by_partitions =
            lagrange_revert_reciprocal(&CountSequence::from_integers(&values), n).unwrap();
        let by_series = revert_reciprocal(&TruncatedSeries::from_integers(&values), n).unwrap();
        prop_assert!(by_series.is_unital());
        prop_assert_eq!(by_partitions.to_series(), by_series);
    }

    // functional square root inverts self-composition, including rational
    // leading terms (a_1 drawn from exact squares)
    #[test]
    fn functional_sqrt_round_trips(
        lead in prop::sample::select(vec![(1i64, 1i64), (4, 1), (9, 1), (1, 4), (9, 4)]),
        tail in prop::collection::vec((-6i64..=6, 1i64..=3), 0..=9),
    ) {
        let mut coeffs: Vec<Coeff> = vec![coeff_rat(lead.0, lead.1)];
        coeffs.extend(tail.into_iter().map(|(p, q)| coeff_rat(p, q)));
        let a = TruncatedSeries::new(coeffs);
        let n = a.order();
        let b = self_composition(&a, n).unwrap();
        prop_assert_eq!(functional_sqrt(&b, n).unwrap(), a);
    }

    // bijection + JSON round trip over block-increasing permutations
    #[test]
    fn bijection_and_json_round_trip((n, pick) in (0usize..=6, any::<prop::sample::Index>())) {
        let perms = condition_i_permutations(n);
        let p = &perms[pick.index(perms.len())];
        let t = perm_to_tree(p).unwrap();
        prop_assert_eq!(&tree_to_perm(&t).unwrap(), p);
        let json = serde_json::to_string(&t).unwrap();
        let back: CycleLabeledTree = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&back, &t);
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }

    // deleting the forced leading 1 shifts the transform output down
    #[test]
    fn modified_transform_is_a_shift(values in prop::collection::vec(-9i64..=9, 2..=8)) {
        let a = TruncatedSeries::from_integers(&values);
        let n = values.len();
        let full = revert_reciprocal(&a, n).unwrap();
        let modified = eigenperm::series::revert_reciprocal_modified(&a, n - 1).unwrap();
        prop_assert!(full.is_unital());
        for k in 1..n {
            prop_assert_eq!(modified.coeff(k), full.coeff(k + 1));
        }
    }
}
