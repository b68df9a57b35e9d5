//! Brute-force reference implementations for tests. Everything here works
//! straight from the definitions by enumerating all `n!` permutations, all
//! subsets and all colorings, so it is only usable on tiny graphs.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Edge, Graph};
use crate::perm::Permutation;

/// Largest graph the oracle accepts.
pub const MAX_N: usize = 10;

fn next_permutation(a: &mut [usize]) -> bool {
    let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else { return false };
    let j = (i..a.len()).rev().find(|&j| a[j] > a[i - 1]).expect("a[i] qualifies");
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Every automorphism, found by testing all `n!` bijections.
pub fn all_automorphisms(g: &Graph) -> Vec<Permutation> {
    let n = g.n();
    assert!(n <= MAX_N, "oracle limited to {MAX_N} vertices");
    let edges = g.edges();
    let mut image: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    loop {
        if edges.iter().all(|e| g.has_edge(image[e.u], image[e.v])) {
            out.push(Permutation::from_images(image.clone()).expect("a permutation"));
        }
        if !next_permutation(&mut image) {
            break;
        }
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

pub fn fixes_vertices(p: &Permutation, s: &[usize]) -> bool {
    s.iter().all(|&v| p.apply(v) == v)
}

pub fn fixes_edges(p: &Permutation, t: &[Edge]) -> bool {
    t.iter().all(|e| {
        let (a, b) = (p.apply(e.u), p.apply(e.v));
        (a == e.u && b == e.v) || (a == e.v && b == e.u)
    })
}

pub fn is_vertex_determining(auts: &[Permutation], s: &[usize]) -> bool {
    auts.iter().all(|p| p.is_identity() || !fixes_vertices(p, s))
}

pub fn is_edge_determining(auts: &[Permutation], t: &[Edge]) -> bool {
    auts.iter().all(|p| p.is_identity() || !fixes_edges(p, t))
}

/// Smallest determining vertex set size.
pub fn det(g: &Graph) -> usize {
    let auts = all_automorphisms(g);
    (0..=g.n())
        .find(|&k| combinations(g.n(), k).iter().any(|s| is_vertex_determining(&auts, s)))
        .expect("V(G) is determining")
}

/// At most one isolated vertex and no component that is a single edge.
pub fn index_defined(g: &Graph) -> bool {
    let isolated = (0..g.n()).filter(|&v| g.degree(v) == 0).count();
    let k2 = g.edges().iter().any(|e| g.degree(e.u) == 1 && g.degree(e.v) == 1);
    isolated <= 1 && !k2
}

/// Smallest determining edge set size, or `None` when undefined.
pub fn det_prime(g: &Graph) -> Option<usize> {
    if !index_defined(g) {
        return None;
    }
    let auts = all_automorphisms(g);
    let edges = g.edges();
    (0..=edges.len()).find(|&k| {
        combinations(edges.len(), k).iter().any(|idx| {
            let t: Vec<Edge> = idx.iter().map(|&i| edges[i]).collect();
            is_edge_determining(&auts, &t)
        })
    })
}

/// Calls `f` on every map `0..len -> 0..c`; stops early when `f` is true.
fn any_coloring(len: usize, c: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    let mut a = vec![0usize; len];
    loop {
        if f(&a) {
            return true;
        }
        let Some(i) = (0..len).rev().find(|&i| a[i] + 1 < c) else { return false };
        a[i] += 1;
        a[i + 1..].iter_mut().for_each(|x| *x = 0);
    }
}

pub fn dist(g: &Graph) -> usize {
    let auts = all_automorphisms(g);
    let n = g.n();
    if n == 0 {
        return 0;
    }
    (1..=n)
        .find(|&c| {
            any_coloring(n, c, |col| {
                auts.iter().all(|p| p.is_identity() || (0..n).any(|v| col[p.apply(v)] != col[v]))
            })
        })
        .expect("distinct colors distinguish")
}

pub fn dist_prime(g: &Graph) -> Option<usize> {
    if !index_defined(g) {
        return None;
    }
    if g.n() <= 1 {
        return Some(0);
    }
    let auts = all_automorphisms(g);
    let edges = g.edges();
    let m = edges.len();
    let index = |e: Edge| edges.iter().position(|&f| f == e).expect("edge image");
    let images: Vec<Vec<usize>> = auts
        .iter()
        .filter(|p| !p.is_identity())
        .map(|p| edges.iter().map(|&e| index(Edge::new(p.apply(e.u), p.apply(e.v)))).collect())
        .collect();
    (1..=m).find(|&c| any_coloring(m, c, |col| images.iter().all(|img| (0..m).any(|i| col[img[i]] != col[i]))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    #[test]
    fn permutation_enumeration_is_complete() {
        let mut a = [0, 1, 2, 3];
        let mut count = 1;
        while next_permutation(&mut a) {
            count += 1;
        }
        assert_eq!(count, 24);
        assert_eq!(all_automorphisms(&complete(5).unwrap()).len(), 120);
        assert_eq!(all_automorphisms(&cycle(6).unwrap()).len(), 12);
    }

    #[test]
    fn reference_values() {
        assert_eq!(det(&cycle(5).unwrap()), 2);
        assert_eq!(det_prime(&complete(5).unwrap()), Some(3));
        assert_eq!(det_prime(&complete(2).unwrap()), None);
        assert_eq!(dist(&path(4).unwrap()), 2);
        assert_eq!(dist_prime(&cycle(5).unwrap()), Some(3));
        assert_eq!(dist_prime(&named_graph(NamedGraphId::G1)), Some(2));
        assert_eq!(dist_prime(&named_graph(NamedGraphId::G3)), Some(3));
    }
}
