//! Structural properties that must hold on every graph.

mod common;

use proptest::prelude::*;
use symbreak_core::determining::*;
use symbreak_core::graph::*;
use symbreak_core::symmetry::*;
use symbreak_core::{Budget, Edge, Graph};

fn choose(g: &Graph, picks: &[prop::sample::Index]) -> VertexSet {
    picks.iter().map(|p| p.index(g.n())).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn graph6_round_trip(g in common::graph(0, 12)) {
        let text = write_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn complement_is_an_involution(g in common::graph(1, 10)) {
        let c = complement(&g);
        prop_assert_eq!(g.edge_count() + c.edge_count(), g.n() * (g.n() - 1) / 2);
        prop_assert_eq!(complement(&c), g);
    }

    #[test]
    fn line_graph_degrees(g in common::graph(2, 9)) {
        prop_assume!(g.edge_count() > 0);
        let l = line_graph(&g).unwrap();
        for (i, e) in g.edges().iter().enumerate() {
            prop_assert_eq!(l.degree(i), g.degree(e.u) + g.degree(e.v) - 2);
        }
    }

    #[test]
    fn automorphisms_preserve_distance(g in common::graph(1, 9), u in any::<prop::sample::Index>(), v in any::<prop::sample::Index>()) {
        let (u, v) = (u.index(g.n()), v.index(g.n()));
        let du = g.distances_from(u);
        for p in &automorphisms(&g).generators {
            prop_assert_eq!(du[v], g.distances_from(p.apply(u))[p.apply(v)]);
        }
    }

    #[test]
    fn tree_center_is_invariant(t in common::tree(1, 12)) {
        let center = t.tree_center().unwrap();
        for p in &automorphisms(&t).generators {
            let mut image: Vec<usize> = center.iter().map(|&c| p.apply(c)).collect();
            image.sort_unstable();
            prop_assert_eq!(&image, &center);
        }
    }

    #[test]
    fn adjacent_fixed_edges_fix_endpoints(g in common::graph(3, 8)) {
        let mut budget = Budget::unlimited();
        for e in g.edges() {
            for f in g.edges() {
                if e >= f || !e.is_adjacent_to(&f) {
                    continue;
                }
                let c = FixConstraint::edges([e, f]);
                let gens = automorphisms_with(&g, &c, &mut budget).unwrap();
                for p in &gens.generators {
                    prop_assert!([e.u, e.v, f.u, f.v].iter().all(|&x| p.apply(x) == x));
                }
            }
        }
    }

    #[test]
    fn unequal_degrees_never_swap(g in common::graph(2, 8)) {
        let mut budget = Budget::unlimited();
        for e in g.edges() {
            if g.degree(e.u) != g.degree(e.v) {
                prop_assert!(find_swap(&g, e.u, e.v, &mut budget).unwrap().is_none());
            }
        }
    }

    #[test]
    fn neighbor_swapping_chain(g in common::connected_graph(2, 8)) {
        let efi = is_edge_flip_invariant(&g);
        let at: Vec<bool> = (0..g.n()).map(|v| has_neighbor_swapping(&g, v)).collect();
        prop_assert!(at.iter().all(|&b| b == efi));
        if efi {
            prop_assert!(is_vertex_transitive(&g));
        }
    }

    #[test]
    fn supersets_stay_determining(g in common::graph(1, 8), extra in proptest::collection::vec(any::<prop::sample::Index>(), 0..4)) {
        let s = determining_number(&g).vertex_witness().unwrap().clone();
        let bigger: VertexSet = s.members().iter().copied().chain(choose(&g, &extra).members().iter().copied()).collect();
        prop_assert!(is_vertex_determining(&g, &bigger).unwrap());
        if let Ok(r) = determining_index(&g) {
            let t = r.edge_witness().unwrap();
            prop_assert!(is_edge_determining(&g, t).unwrap());
            let edges = g.edges();
            if !edges.is_empty() {
                let more: EdgeSet = t.members().iter().copied().chain(extra.iter().map(|i| edges[i.index(edges.len())])).collect();
                prop_assert!(is_edge_determining(&g, &more).unwrap());
            }
        }
    }

    #[test]
    fn det_of_complement(g in common::graph(1, 8)) {
        prop_assert_eq!(determining_number(&g).value, determining_number(&complement(&g)).value);
    }

    #[test]
    fn zero_values_mean_asymmetry(g in common::graph(1, 8)) {
        let trivial = automorphisms(&g).is_trivial();
        prop_assert_eq!(determining_number(&g).value == 0, trivial);
        if let Ok(r) = determining_index(&g) {
            prop_assert_eq!(r.value == 0, trivial);
        }
    }

    #[test]
    fn conversions_keep_determining(g in common::connected_graph(3, 8)) {
        let s = determining_number(&g).vertex_witness().unwrap().clone();
        if s.len() >= 2 {
            let t = edge_set_from_vertex_set(&g, &s).unwrap();
            prop_assert_eq!(t.len(), s.len());
            prop_assert!(is_edge_determining(&g, &t).unwrap());
        }
        let t = determining_index(&g).unwrap().edge_witness().unwrap().clone();
        let ends = endvertex_set(&g, &t).unwrap();
        prop_assert!(ends.len() <= 2 * t.len());
        prop_assert!(is_vertex_determining(&g, &ends).unwrap());
    }

    #[test]
    fn non_minimal_vertex_sets_convert(g in common::connected_graph(3, 8), picks in proptest::collection::vec(any::<prop::sample::Index>(), 2..6)) {
        let s = choose(&g, &picks);
        prop_assume!(s.len() >= 2 && is_vertex_determining(&g, &s).unwrap());
        let t = edge_set_from_vertex_set(&g, &s).unwrap();
        prop_assert_eq!(t.len(), s.len().min(g.edge_count()));
        prop_assert!(is_edge_determining(&g, &t).unwrap());
    }

    #[test]
    fn bounds_hold(g in common::connected_graph(3, 8)) {
        prop_assert!(check_bounds(&g).unwrap().holds);
        prop_assert!(line_graph_transfer_check(&g).unwrap().holds);
    }

    #[test]
    fn trees_have_equal_values(t in common::tree(3, 10)) {
        let r = tree_det_check(&t).unwrap();
        prop_assert!(r.holds, "{:?}", r);
    }

    #[test]
    fn composition_matches_direct(g in common::disconnected_graph(10)) {
        prop_assert_eq!(compose_components_det(&g).unwrap(), determining_number(&g).value);
        if check_index_defined(&g).is_ok() {
            prop_assert_eq!(compose_components_det_index(&g).unwrap(), determining_index(&g).unwrap().value);
        }
    }
}

#[test]
fn hypercubes_are_regular_with_hamming_distance() {
    for n in 1..=6 {
        let q = hypercube(n).unwrap();
        assert!(q.degrees().iter().all(|&d| d == n));
        assert_eq!(q.edge_count(), n << (n - 1));
        for u in [0, 5 % (1 << n), (1 << n) - 1] {
            let d = q.distances_from(u);
            for (v, dv) in d.iter().enumerate() {
                assert_eq!(*dv, Some((u ^ v).count_ones() as usize));
            }
        }
    }
}

#[test]
fn g4_reflections() {
    let g4 = named_graph(NamedGraphId::G4);
    assert!(is_edge_flip_invariant(&g4));
    assert!(has_neighbor_swapping(&g4, 0));
    assert_eq!(determining_number(&g4).value, 1);
    assert_eq!(determining_index(&g4).unwrap().value, 2);
    let t = EdgeSet::new([Edge::new(0, 9), Edge::new(0, 15)]);
    assert!(is_edge_determining(&g4, &t).unwrap());
}
