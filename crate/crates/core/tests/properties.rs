//! Randomized property tests over partitions, triples and the matching.

use proptest::prelude::*;

use springer_core::census::{enumerate_orbits, Form};
use springer_core::matching::sigma_lambda;
use springer_core::partition::Partition;
use springer_core::sigma::Triple;

fn arb_partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..=9, 0..=7).prop_map(Partition::from_unsorted)
}

/// Distinct parts drawn from a bitmask over 1..=10.
fn arb_two_regular() -> impl Strategy<Value = Partition> {
    (0u32..(1 << 10)).prop_map(|mask| {
        Partition::from_unsorted((1..=10u32).filter(|i| (mask >> (i - 1)) & 1 == 1))
    })
}

proptest! {
    #[test]
    fn transpose_is_an_involution(p in arb_partition()) {
        prop_assert_eq!(p.transpose().transpose(), p);
    }

    #[test]
    fn transpose_preserves_distinct_size_count(p in arb_partition()) {
        prop_assert_eq!(p.stats().f, p.transpose().stats().f);
    }

    #[test]
    fn gap_two_count_matches_transpose_multiplicities(p in arb_partition()) {
        let mult_two = p
            .transpose()
            .size_multiplicities()
            .iter()
            .filter(|&&(_, m)| m == 2)
            .count() as u32;
        prop_assert_eq!(p.stats().g, mult_two);
    }

    #[test]
    fn transpose_swaps_length_and_largest_part(p in arb_partition()) {
        let t = p.transpose();
        prop_assert_eq!(t.weight(), p.weight());
        prop_assert_eq!(t.len() as u32, p.part(0));
        prop_assert_eq!(t.part(0) as usize, p.len());
    }

    #[test]
    fn partition_json_round_trips(p in arb_partition()) {
        let text = serde_json::to_string(&p).unwrap();
        let back: Partition = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn triple_json_round_trips(
        nu in arb_partition(),
        mu1 in arb_two_regular(),
        mu2 in arb_two_regular(),
    ) {
        let omega = (mu1 == mu2).then_some(Form::I);
        let triple = Triple::new(nu, mu1, mu2, omega).unwrap();
        let text = serde_json::to_string(&triple).unwrap();
        let back: Triple = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, triple);
    }

    #[test]
    fn dominance_respects_reverse_lexicographic_order(
        pair in (0u32..=14).prop_flat_map(|n| {
            let parts = springer_core::partition::partitions(n);
            let len = parts.len();
            (Just(parts), 0..len, 0..len)
        })
    ) {
        // Dominance refines revlex: a dominated partition never precedes
        // its dominator in enumeration order.
        let (parts, i, j) = pair;
        if parts[i].dominates(&parts[j]).unwrap() && i != j {
            prop_assert!(parts[i] > parts[j]);
        }
    }

    #[test]
    fn orbit_triples_are_well_formed(n in 1u32..=12) {
        for record in enumerate_orbits(n).unwrap() {
            let triples = sigma_lambda(&record.label);
            prop_assert_eq!(triples.len() as u64, record.local_system_count);
            for t in &triples {
                prop_assert_eq!(t.total_weight(), n);
                prop_assert!(t.mu1().is_two_regular());
                prop_assert!(t.mu2().is_two_regular());
                prop_assert_eq!(t.omega().is_some(), t.mu1() == t.mu2());
                prop_assert_eq!(t.omega().is_some(), record.label.form().is_some());
            }
        }
    }
}
