//! Automorphism groups and symmetry predicates.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{complement, disjoint_union, Edge, Graph};
use crate::perm::Permutation;
use crate::search::{Constraint, Engine};

/// Requirements on an automorphism: listed vertices are fixed, listed
/// edges are mapped onto themselves as unordered pairs, and (when present)
/// every vertex keeps its color.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FixConstraint {
    pub fixed_vertices: Vec<usize>,
    pub fixed_edges: Vec<Edge>,
    pub vertex_colors: Option<Vec<u32>>,
}

impl FixConstraint {
    pub fn vertices(vs: impl IntoIterator<Item = usize>) -> Self {
        FixConstraint { fixed_vertices: vs.into_iter().collect(), ..Default::default() }
    }

    pub fn edges(es: impl IntoIterator<Item = Edge>) -> Self {
        FixConstraint { fixed_edges: es.into_iter().collect(), ..Default::default() }
    }

    pub fn colors(colors: Vec<u32>) -> Self {
        FixConstraint { vertex_colors: Some(colors), ..Default::default() }
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        for &v in &self.fixed_vertices {
            g.check_vertex(v)?;
        }
        for e in &self.fixed_edges {
            g.check_edge(e)?;
        }
        if let Some(colors) = &self.vertex_colors {
            if colors.len() != g.n() {
                return Err(Error::InvalidParameter(format!(
                    "{} colors for {} vertices",
                    colors.len(),
                    g.n()
                )));
            }
        }
        Ok(())
    }

    /// Does `p` respect every requirement?
    pub fn is_respected_by(&self, p: &Permutation) -> bool {
        self.fixed_vertices.iter().all(|&v| p.apply(v) == v)
            && self.fixed_edges.iter().all(|e| p.apply_edge(e) == *e)
            && self
                .vertex_colors
                .as_ref()
                .is_none_or(|c| (0..c.len()).all(|v| c[p.apply(v)] == c[v]))
    }

    fn as_search(&self) -> Constraint<'_> {
        Constraint {
            fixed_vertices: &self.fixed_vertices,
            fixed_edges: &self.fixed_edges,
            colors: self.vertex_colors.as_deref(),
        }
    }
}

/// Exact group order, kept as the product of the basic orbit sizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupOrder {
    factors: Vec<usize>,
}

impl GroupOrder {
    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.iter().all(|&f| f == 1)
    }

    /// The order as an integer, if it fits in `u128`.
    pub fn to_u128(&self) -> Option<u128> {
        self.factors.iter().try_fold(1u128, |acc, &f| acc.checked_mul(f as u128))
    }
}

impl fmt::Display for GroupOrder {
    /// Exact decimal expansion, however large.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const LIMB: u64 = 1_000_000_000;
        let mut limbs: Vec<u64> = vec![1];
        for &factor in &self.factors {
            let mut carry = 0u64;
            for limb in limbs.iter_mut() {
                let v = *limb * factor as u64 + carry;
                *limb = v % LIMB;
                carry = v / LIMB;
            }
            while carry > 0 {
                limbs.push(carry % LIMB);
                carry /= LIMB;
            }
        }
        let mut iter = limbs.iter().rev();
        write!(f, "{}", iter.next().unwrap_or(&0))?;
        for limb in iter {
            write!(f, "{limb:09}")?;
        }
        Ok(())
    }
}

/// Generators, base and exact order of an automorphism group.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    pub n: usize,
    pub generators: Vec<Permutation>,
    pub order: GroupOrder,
    /// Base points in branching order; stabilizing all of them is trivial.
    pub base: Vec<usize>,
}

impl GeneratorSet {
    /// Every group element, or `None` when there are more than `limit`.
    pub fn elements(&self, limit: usize) -> Option<Vec<Permutation>> {
        if self.order.to_u128().is_none_or(|o| o > limit as u128) {
            return None;
        }
        let id = Permutation::identity(self.n);
        let mut seen = BTreeSet::from([id.clone()]);
        let mut frontier = vec![id];
        while let Some(p) = frontier.pop() {
            for g in &self.generators {
                let q = g.compose(&p);
                if seen.insert(q.clone()) {
                    frontier.push(q);
                }
            }
        }
        Some(seen.into_iter().collect())
    }

    pub fn is_trivial(&self) -> bool {
        self.order.is_one()
    }
}

/// Full automorphism group of `g`.
pub fn automorphisms(g: &Graph) -> GeneratorSet {
    automorphisms_with(g, &FixConstraint::default(), &mut Budget::unlimited())
        .expect("unconstrained search with an unlimited budget cannot fail")
}

/// Subgroup of automorphisms respecting `c`.
pub fn automorphisms_with(g: &Graph, c: &FixConstraint, budget: &mut Budget) -> Result<GeneratorSet> {
    c.validate(g)?;
    let mut engine = Engine::new(g, budget);
    let initial = engine.initial_partition(&c.as_search());
    let data = engine.group(initial)?;
    Ok(GeneratorSet {
        n: g.n(),
        generators: data.generators,
        order: GroupOrder { factors: data.orbit_sizes },
        base: data.base,
    })
}

/// A non-identity automorphism respecting `c`, or `None` if the identity
/// is the only one. With `forbid_identity == false` the identity itself is
/// an acceptable answer and is returned.
pub fn find_constrained_automorphism(
    g: &Graph,
    c: &FixConstraint,
    forbid_identity: bool,
    budget: &mut Budget,
) -> Result<Option<Permutation>> {
    c.validate(g)?;
    if !forbid_identity {
        return Ok(Some(Permutation::identity(g.n())));
    }
    let mut engine = Engine::new(g, budget);
    let initial = engine.initial_partition(&c.as_search());
    let found = engine.find_nontrivial(initial)?;
    debug_assert!(found.as_ref().is_none_or(|p| c.is_respected_by(p) && !p.is_identity()));
    Ok(found)
}

/// An automorphism exchanging `u` and `v`.
pub fn find_swap(g: &Graph, u: usize, v: usize, budget: &mut Budget) -> Result<Option<Permutation>> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Ok(Some(Permutation::identity(g.n())));
    }
    let pair = [Edge::new(u, v)];
    let c = Constraint { fixed_edges: &pair, ..Default::default() };
    let mut engine = Engine::new(g, budget);
    let initial = engine.initial_partition(&c);
    engine.find_mapping(&initial, u, v)
}

fn union_find_classes(count: usize, gens: &[Permutation], act: impl Fn(&Permutation, usize) -> usize) -> Vec<Vec<usize>> {
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut parent: Vec<usize> = (0..count).collect();
    for g in gens {
        for i in 0..count {
            let (a, b) = (find(&mut parent, i), find(&mut parent, act(g, i)));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; count];
    for i in 0..count {
        let r = find(&mut parent, i);
        if slot[r] == usize::MAX {
            slot[r] = classes.len();
            classes.push(Vec::new());
        }
        classes[slot[r]].push(i);
    }
    classes
}

/// Vertex orbits, each sorted, ordered by smallest member.
pub fn vertex_orbits(gens: &GeneratorSet) -> Vec<Vec<usize>> {
    union_find_classes(gens.n, &gens.generators, |p, i| p.apply(i))
}

/// Edge orbits, each sorted, ordered by smallest member.
pub fn edge_orbits(g: &Graph, gens: &GeneratorSet) -> Vec<Vec<Edge>> {
    let edges = g.edges();
    let index = |e: &Edge| edges.binary_search(e).expect("automorphisms map edges to edges");
    union_find_classes(edges.len(), &gens.generators, |p, i| index(&p.apply_edge(&edges[i])))
        .into_iter()
        .map(|class| class.into_iter().map(|i| edges[i]).collect())
        .collect()
}

/// Orbits on arcs (ordered adjacent pairs).
pub fn arc_orbits(g: &Graph, gens: &GeneratorSet) -> Vec<Vec<(usize, usize)>> {
    let mut arcs: Vec<(usize, usize)> = g.edges().iter().flat_map(|e| [(e.u, e.v), (e.v, e.u)]).collect();
    arcs.sort_unstable();
    let index = |a: (usize, usize)| arcs.binary_search(&a).expect("arc image is an arc");
    union_find_classes(arcs.len(), &gens.generators, |p, i| index((p.apply(arcs[i].0), p.apply(arcs[i].1))))
        .into_iter()
        .map(|class| class.into_iter().map(|i| arcs[i]).collect())
        .collect()
}

pub fn is_vertex_transitive(g: &Graph) -> bool {
    vertex_orbits(&automorphisms(g)).len() <= 1
}

pub fn is_edge_transitive(g: &Graph) -> bool {
    edge_orbits(g, &automorphisms(g)).len() <= 1
}

pub fn is_arc_transitive(g: &Graph) -> bool {
    arc_orbits(g, &automorphisms(g)).len() <= 1
}

/// Every neighbor of `v` can be exchanged with `v` by an automorphism.
pub fn has_neighbor_swapping(g: &Graph, v: usize) -> bool {
    has_neighbor_swapping_with(g, v, &mut Budget::unlimited()).expect("unlimited budget")
}

pub fn has_neighbor_swapping_with(g: &Graph, v: usize, budget: &mut Budget) -> Result<bool> {
    g.check_vertex(v)?;
    for u in g.neighbors(v).iter() {
        if find_swap(g, u, v, budget)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every edge can be flipped by an automorphism. Connected graphs are
/// decided at a single vertex; disconnected ones edge by edge.
pub fn is_edge_flip_invariant(g: &Graph) -> bool {
    is_edge_flip_invariant_with(g, &mut Budget::unlimited()).expect("unlimited budget")
}

pub fn is_edge_flip_invariant_with(g: &Graph, budget: &mut Budget) -> Result<bool> {
    if g.n() == 0 {
        return Ok(true);
    }
    if g.is_connected() {
        return has_neighbor_swapping_with(g, 0, budget);
    }
    every_edge_flips(g, budget)
}

fn every_edge_flips(g: &Graph, budget: &mut Budget) -> Result<bool> {
    for e in g.edges() {
        if find_swap(g, e.u, e.v, budget)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of cross-checking the equivalent forms of edge-flip invariance
/// on a connected graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FlipReport {
    pub some_vertex_ns: bool,
    pub all_vertices_ns: bool,
    pub efi: bool,
    pub vertex_transitive: bool,
}

/// Evaluates "some vertex has neighbor swapping", "all vertices have it",
/// edge-flip invariance (edge by edge) and vertex transitivity
/// independently, and fails if the first three disagree or if edge-flip
/// invariance holds without vertex transitivity.
pub fn check_flip_equivalences(g: &Graph) -> Result<FlipReport> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut budget = Budget::unlimited();
    let mut per_vertex = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        per_vertex.push(has_neighbor_swapping_with(g, v, &mut budget)?);
    }
    let report = FlipReport {
        some_vertex_ns: per_vertex.iter().any(|&b| b),
        all_vertices_ns: per_vertex.iter().all(|&b| b),
        efi: every_edge_flips(g, &mut budget)?,
        vertex_transitive: is_vertex_transitive(g),
    };
    let consistent = report.some_vertex_ns == report.all_vertices_ns
        && report.all_vertices_ns == report.efi
        && (!report.efi || report.vertex_transitive);
    if consistent {
        Ok(report)
    } else {
        Err(Error::Invariant(format!("flip equivalences disagree: {report:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum TwinKind {
    Adjacent,
    Nonadjacent,
}

/// A pair `u < v` with `N(u) = N(v)` (nonadjacent) or `N[u] = N[v]` (adjacent).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Twins {
    pub u: usize,
    pub v: usize,
    pub kind: TwinKind,
}

/// All twin pairs, sorted. Each pair's transposition is checked to be an
/// automorphism.
pub fn find_twins(g: &Graph) -> Vec<Twins> {
    let n = g.n();
    let mut out = Vec::new();
    for kind in [TwinKind::Adjacent, TwinKind::Nonadjacent] {
        let hood = |v: usize| {
            let mut h = g.neighbors(v).clone();
            if kind == TwinKind::Adjacent {
                h.insert(v);
            }
            h
        };
        let mut keyed: Vec<_> = (0..n).map(|v| (hood(v), v)).collect();
        keyed.sort();
        for group in keyed.chunk_by(|a, b| a.0 == b.0) {
            for (i, (_, u)) in group.iter().enumerate() {
                for (_, v) in &group[i + 1..] {
                    out.push(Twins { u: *u, v: *v, kind });
                }
            }
        }
    }
    out.sort();
    for t in &out {
        assert!(
            Permutation::transposition(n, t.u, t.v).is_automorphism_of(g),
            "twin transposition must be an automorphism"
        );
    }
    out
}

/// Graph isomorphism, decided as "some automorphism of the disjoint union
/// moves a vertex of one block into the other". Disconnected inputs are
/// compared through their (connected) complements.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    is_isomorphic_with(g, h, &mut Budget::unlimited()).expect("unlimited budget")
}

pub fn is_isomorphic_with(g: &Graph, h: &Graph, budget: &mut Budget) -> Result<bool> {
    let n = g.n();
    if n != h.n() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let (mut dg, mut dh) = (g.degrees(), h.degrees());
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(false);
    }
    if n <= 1 {
        return Ok(true);
    }
    match (g.is_connected(), h.is_connected()) {
        (true, true) => {}
        (false, false) => return is_isomorphic_with(&complement(g), &complement(h), budget),
        _ => return Ok(false),
    }
    let union = disjoint_union(&[g.clone(), h.clone()])?;
    let mut engine = Engine::new(&union, budget);
    let initial = engine.initial_partition(&Constraint::default());
    let candidates: Vec<usize> = initial.cell(initial.cell_of(0)).iter().copied().filter(|&y| y >= n).collect();
    for y in candidates {
        if engine.find_mapping(&initial, 0, y)?.is_some() {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;
    use alloc::string::ToString;

    #[test]
    fn group_orders() {
        assert_eq!(automorphisms(&cycle(4).unwrap()).order.to_u128(), Some(8));
        assert_eq!(automorphisms(&complete(4).unwrap()).order.to_u128(), Some(24));
        assert_eq!(automorphisms(&empty(1).unwrap()).order.to_u128(), Some(1));
        assert!(automorphisms(&Graph::empty(0)).is_trivial());
        let big = automorphisms(&empty(30).unwrap()).order;
        assert_eq!(big.to_string(), "265252859812191058636308480000000");
    }

    #[test]
    fn g4_contains_reflections() {
        let g4 = named_graph(NamedGraphId::G4);
        let alpha = Permutation::from_cycles(
            18,
            &[&[0, 15], &[7, 17], &[16, 8], &[9, 6], &[1, 14], &[10, 5], &[2, 13], &[11, 4], &[3, 12]],
        )
        .unwrap();
        assert!(alpha.is_automorphism_of(&g4));
        let gens = automorphisms(&g4);
        assert_eq!(gens.order.to_u128().unwrap() % 2, 0);
        let elements = gens.elements(1000).unwrap();
        assert!(elements.contains(&alpha));
    }

    #[test]
    fn constrained_examples() {
        let mut b = Budget::unlimited();
        let c4 = cycle(4).unwrap();
        let flip = find_constrained_automorphism(&c4, &FixConstraint::edges([Edge::new(0, 1)]), true, &mut b)
            .unwrap()
            .unwrap();
        assert_eq!(flip.apply_edge(&Edge::new(0, 1)), Edge::new(0, 1));
        assert!(!flip.is_identity());

        let p4 = path(4).unwrap();
        assert!(find_constrained_automorphism(&p4, &FixConstraint::edges([Edge::new(2, 3)]), true, &mut b)
            .unwrap()
            .is_none());

        let k4e = named_graph(NamedGraphId::K4MinusE);
        assert!(find_constrained_automorphism(&k4e, &FixConstraint::vertices([0, 1]), true, &mut b)
            .unwrap()
            .is_none());
        assert!(find_constrained_automorphism(&k4e, &FixConstraint::vertices([9]), true, &mut b).is_err());
    }

    #[test]
    fn orbit_examples() {
        let c5 = cycle(5).unwrap();
        assert_eq!(vertex_orbits(&automorphisms(&c5)), vec![vec![0, 1, 2, 3, 4]]);
        let k13 = star(3).unwrap();
        assert_eq!(vertex_orbits(&automorphisms(&k13)), vec![vec![0], vec![1, 2, 3]]);
        let p4 = path(4).unwrap();
        let eo = edge_orbits(&p4, &automorphisms(&p4));
        assert_eq!(eo, vec![vec![Edge::new(0, 1), Edge::new(2, 3)], vec![Edge::new(1, 2)]]);
    }

    #[test]
    fn transitivity_examples() {
        let q3 = hypercube(3).unwrap();
        assert!(is_vertex_transitive(&q3) && is_edge_transitive(&q3) && is_arc_transitive(&q3));
        let k13 = star(3).unwrap();
        assert_eq!(
            (is_vertex_transitive(&k13), is_edge_transitive(&k13), is_arc_transitive(&k13)),
            (false, true, false)
        );
        // P_3 = K_{1,2}: the reversal swaps its two edges but no arc pair.
        let p3 = path(3).unwrap();
        assert_eq!(
            (is_vertex_transitive(&p3), is_edge_transitive(&p3), is_arc_transitive(&p3)),
            (false, true, false)
        );
        let p4 = path(4).unwrap();
        assert_eq!(
            (is_vertex_transitive(&p4), is_edge_transitive(&p4), is_arc_transitive(&p4)),
            (false, false, false)
        );
        assert!(is_edge_transitive(&empty(3).unwrap()));
    }

    #[test]
    fn flip_invariance_examples() {
        assert!(is_edge_flip_invariant(&named_graph(NamedGraphId::EnvelopeH)));
        assert!(is_edge_flip_invariant(&named_graph(NamedGraphId::G4)));
        assert!(!is_edge_flip_invariant(&path(4).unwrap()));
        assert!(has_neighbor_swapping(&named_graph(NamedGraphId::G4), 0));
        assert!((0..5).all(|v| has_neighbor_swapping(&complete(5).unwrap(), v)));
        assert!(!has_neighbor_swapping(&path(4).unwrap(), 1));
        let two_c4 = disjoint_union(&[cycle(4).unwrap(), cycle(4).unwrap()]).unwrap();
        assert!(is_edge_flip_invariant(&two_c4));
        let mixed = disjoint_union(&[cycle(4).unwrap(), path(3).unwrap()]).unwrap();
        assert!(!is_edge_flip_invariant(&mixed));
    }

    #[test]
    fn flip_equivalence_reports() {
        let all = FlipReport { some_vertex_ns: true, all_vertices_ns: true, efi: true, vertex_transitive: true };
        assert_eq!(check_flip_equivalences(&cycle(6).unwrap()).unwrap(), all);
        assert_eq!(check_flip_equivalences(&named_graph(NamedGraphId::G4)).unwrap(), all);
        let none = FlipReport { some_vertex_ns: false, all_vertices_ns: false, efi: false, vertex_transitive: false };
        assert_eq!(check_flip_equivalences(&path(5).unwrap()).unwrap(), none);
        assert_eq!(check_flip_equivalences(&empty(2).unwrap()), Err(Error::Disconnected));
    }

    #[test]
    fn twins_examples() {
        let k32 = complete_bipartite(3, 2).unwrap();
        let t = find_twins(&k32);
        assert_eq!(t.len(), 4);
        assert!(t.iter().all(|t| t.kind == TwinKind::Nonadjacent));
        let k4 = find_twins(&complete(4).unwrap());
        assert_eq!(k4.len(), 6);
        assert!(k4.iter().all(|t| t.kind == TwinKind::Adjacent));
        assert!(find_twins(&path(4).unwrap()).is_empty());
    }

    #[test]
    fn isomorphism_checks() {
        let c6 = cycle(6).unwrap();
        assert!(is_isomorphic(&line_graph(&c6).unwrap(), &c6));
        assert!(!is_isomorphic(&c6, &disjoint_union(&[cycle(3).unwrap(), cycle(3).unwrap()]).unwrap()));
        assert!(is_isomorphic(&named_graph(NamedGraphId::G2), &named_graph(NamedGraphId::K4MinusE)));
        let k2 = complete(2).unwrap();
        for k in 1..=4 {
            let prod = cartesian_product(&hypercube(k).unwrap(), &k2);
            assert!(is_isomorphic(&prod, &hypercube(k + 1).unwrap()));
        }
        let a = disjoint_union(&[path(3).unwrap(), cycle(3).unwrap()]).unwrap();
        let b = disjoint_union(&[cycle(3).unwrap(), path(3).unwrap()]).unwrap();
        assert!(is_isomorphic(&a, &b));
    }
}
