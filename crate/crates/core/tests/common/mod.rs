#![allow(dead_code)]

use proptest::prelude::*;
use symbreak_core::graph::disjoint_union;
use symbreak_core::Graph;

/// Graph on `n` vertices whose edges are the set bits of `bits`, taken in
/// the order (0,1), (0,2), (1,2), (0,3), ...
pub fn from_bits(n: usize, bits: &[bool]) -> Graph {
    let pairs = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
    Graph::from_edges(n, pairs.zip(bits).filter(|(_, &b)| b).map(|(p, _)| p)).unwrap()
}

pub fn graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| from_bits(n, &bits))
    })
}

pub fn connected_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    graph(min_n, max_n).prop_filter("connected", Graph::is_connected)
}

/// Random tree from a parent choice per vertex.
pub fn tree(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<prop::sample::Index>(), n - 1)
            .prop_map(move |picks| Graph::from_edges(n, picks.iter().enumerate().map(|(i, p)| (p.index(i + 1), i + 1))).unwrap())
    })
}

/// Disjoint union of 2 to 4 small graphs, with a chance of repeated blocks.
pub fn disconnected_graph(max_total: usize) -> impl Strategy<Value = Graph> {
    proptest::collection::vec((graph(1, 4), any::<bool>()), 2..=4).prop_filter_map("too large", move |parts| {
        let mut blocks = Vec::new();
        for (g, twice) in parts {
            if twice {
                blocks.push(g.clone());
            }
            blocks.push(g);
        }
        let u = disjoint_union(&blocks).unwrap();
        (u.n() <= max_total && !u.is_connected()).then_some(u)
    })
}
