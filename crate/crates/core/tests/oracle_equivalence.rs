//! Search results against brute force on small random graphs.

mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use symbreak_core::determining::{determining_index, determining_index_by_search, determining_number};
use symbreak_core::distinguishing::{distinguishing_index, distinguishing_number};
use symbreak_core::oracle;
use symbreak_core::symmetry::automorphisms;
use symbreak_core::Error;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn group_matches_enumeration(g in common::graph(1, 7)) {
        let brute: BTreeSet<_> = oracle::all_automorphisms(&g).into_iter().collect();
        let gens = automorphisms(&g);
        prop_assert_eq!(gens.order.to_u128(), Some(brute.len() as u128));
        prop_assert!(gens.generators.iter().all(|p| p.is_automorphism_of(&g)));
        let generated: BTreeSet<_> = gens.elements(10_000).unwrap().into_iter().collect();
        prop_assert_eq!(generated, brute);
    }

    #[test]
    fn det_matches_brute_force(g in common::graph(1, 7)) {
        let r = determining_number(&g);
        prop_assert_eq!(r.value, oracle::det(&g));
        let auts = oracle::all_automorphisms(&g);
        prop_assert!(oracle::is_vertex_determining(&auts, r.vertex_witness().unwrap().members()));
    }

    #[test]
    fn det_prime_matches_brute_force(g in common::graph(1, 6)) {
        match oracle::det_prime(&g) {
            None => prop_assert!(matches!(determining_index(&g), Err(Error::UndefinedDeterminingIndex(_)))),
            Some(expected) => {
                let fast = determining_index(&g).unwrap();
                let full = determining_index_by_search(&g).unwrap();
                prop_assert_eq!(fast.value, expected);
                prop_assert_eq!(full.value, expected);
                let auts = oracle::all_automorphisms(&g);
                for r in [fast, full] {
                    prop_assert!(oracle::is_edge_determining(&auts, r.edge_witness().unwrap().members()));
                }
            }
        }
    }

    #[test]
    fn dist_matches_brute_force(g in common::graph(1, 6)) {
        prop_assert_eq!(distinguishing_number(&g).unwrap().value, oracle::dist(&g));
        match oracle::dist_prime(&g) {
            None => prop_assert!(distinguishing_index(&g).is_err()),
            Some(d) => prop_assert_eq!(distinguishing_index(&g).unwrap().value, d),
        }
    }
}
