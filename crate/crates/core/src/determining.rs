//! Vertex and edge determining sets.
//!
//! A vertex set `S` is determining when the identity is the only
//! automorphism fixing every member of `S`. An edge set `T` is determining
//! when the identity is the only automorphism mapping every member of `T`
//! onto itself (the endpoints may be exchanged). `det` and `det'` are the
//! minimum sizes of such sets.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{line_graph, named_graph, Edge, Graph, NamedGraphId};
use crate::symmetry::{
    automorphisms_with, edge_orbits, find_constrained_automorphism, find_swap, is_edge_flip_invariant_with,
    is_isomorphic_with, vertex_orbits, FixConstraint,
};

/// Sorted, duplicate-free set of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Self {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        self.members.iter().try_for_each(|&v| g.check_vertex(v))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

/// Sorted, duplicate-free set of edges.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeSet {
    members: Vec<Edge>,
}

impl EdgeSet {
    pub fn new(members: impl IntoIterator<Item = Edge>) -> Self {
        let mut members: Vec<Edge> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        EdgeSet { members }
    }

    /// Convenience constructor from endpoint pairs. Panics on a loop.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        EdgeSet::new(pairs.into_iter().map(|(a, b)| Edge::new(a, b)))
    }

    pub fn members(&self) -> &[Edge] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.members.binary_search(e).is_ok()
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        self.members.iter().try_for_each(|e| g.check_edge(e))
    }
}

impl FromIterator<Edge> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> Self {
        EdgeSet::new(iter)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Vertices(VertexSet),
    Edges(EdgeSet),
}

/// Outcome of a `det` or `det'` computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeterminingResult {
    pub value: usize,
    pub witness: Witness,
    /// No smaller determining set exists (established by exhaustive search
    /// or by a verified structural argument).
    pub certified_minimal: bool,
}

impl DeterminingResult {
    pub fn vertex_witness(&self) -> Option<&VertexSet> {
        match &self.witness {
            Witness::Vertices(s) => Some(s),
            Witness::Edges(_) => None,
        }
    }

    pub fn edge_witness(&self) -> Option<&EdgeSet> {
        match &self.witness {
            Witness::Edges(t) => Some(t),
            Witness::Vertices(_) => None,
        }
    }
}

/// `det'` is only defined with at most one isolated vertex and no `K_2`
/// component; otherwise some transposition fixes every edge.
pub fn check_index_defined(g: &Graph) -> Result<()> {
    let mut isolated = Vec::new();
    for comp in g.connected_components() {
        match comp.len() {
            1 => isolated.push(comp[0]),
            2 => {
                return Err(Error::UndefinedDeterminingIndex(format!(
                    "K_2 component {{{}, {}}}",
                    comp[0], comp[1]
                )))
            }
            _ => {}
        }
    }
    if isolated.len() > 1 {
        return Err(Error::UndefinedDeterminingIndex(format!(
            "{} isolated vertices ({} and {})",
            isolated.len(),
            isolated[0],
            isolated[1]
        )));
    }
    Ok(())
}

pub fn is_vertex_determining(g: &Graph, s: &VertexSet) -> Result<bool> {
    is_vertex_determining_with(g, s, &mut Budget::unlimited())
}

pub fn is_vertex_determining_with(g: &Graph, s: &VertexSet, budget: &mut Budget) -> Result<bool> {
    s.validate(g)?;
    let c = FixConstraint::vertices(s.members().iter().copied());
    Ok(find_constrained_automorphism(g, &c, true, budget)?.is_none())
}

pub fn is_edge_determining(g: &Graph, t: &EdgeSet) -> Result<bool> {
    is_edge_determining_with(g, t, &mut Budget::unlimited())
}

pub fn is_edge_determining_with(g: &Graph, t: &EdgeSet, budget: &mut Budget) -> Result<bool> {
    check_index_defined(g)?;
    t.validate(g)?;
    let c = FixConstraint::edges(t.members().iter().copied());
    Ok(find_constrained_automorphism(g, &c, true, budget)?.is_none())
}

/// Smallest `k` and lexicographically least `k`-subset of `0..count` that
/// passes `test`, trying sizes in ascending order. Only subsets whose first
/// element satisfies `first_ok` are tried.
fn least_passing_subset(
    count: usize,
    first_ok: impl Fn(usize) -> bool,
    budget: &mut Budget,
    mut test: impl FnMut(&[usize], &mut Budget) -> Result<bool>,
) -> Result<Vec<usize>> {
    if test(&[], budget)? {
        return Ok(Vec::new());
    }
    for k in 1..=count {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            if first_ok(idx[0]) {
                budget.spend(1)?;
                if test(&idx, budget)? {
                    return Ok(idx);
                }
            }
            // Advance to the next combination in lexicographic order.
            let Some(i) = (0..k).rev().find(|&i| idx[i] < count - k + i) else { break };
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    Err(Error::Invariant("the full set is always determining".into()))
}

pub fn determining_number(g: &Graph) -> DeterminingResult {
    determining_number_with(g, &mut Budget::unlimited()).expect("unlimited budget")
}

/// Exact `det(g)`. The witness is the lexicographically least minimum
/// determining set: its first member is necessarily the smallest vertex of
/// its orbit, so only orbit minima are tried in first position.
pub fn determining_number_with(g: &Graph, budget: &mut Budget) -> Result<DeterminingResult> {
    let group = automorphisms_with(g, &FixConstraint::default(), budget)?;
    let mut is_rep = vec![false; g.n()];
    for orbit in vertex_orbits(&group) {
        is_rep[orbit[0]] = true;
    }
    let trivial = group.is_trivial();
    let subset = least_passing_subset(
        g.n(),
        |v| is_rep[v],
        budget,
        |idx, budget| {
            if idx.is_empty() {
                return Ok(trivial);
            }
            is_vertex_determining_with(g, &VertexSet::new(idx.iter().copied()), budget)
        },
    )?;
    Ok(DeterminingResult {
        value: subset.len(),
        witness: Witness::Vertices(VertexSet::new(subset)),
        certified_minimal: true,
    })
}

pub fn determining_index(g: &Graph) -> Result<DeterminingResult> {
    determining_index_with(g, &mut Budget::unlimited())
}

/// Exact `det'(g)`. Connected graphs on at least three vertices with a
/// determining singleton are settled directly: `det'` is 2 if every edge
/// can be flipped and 1 otherwise. Everything else goes to
/// [`determining_index_by_search_with`].
pub fn determining_index_with(g: &Graph, budget: &mut Budget) -> Result<DeterminingResult> {
    check_index_defined(g)?;
    if g.n() >= 3 && g.is_connected() {
        if let Some(r) = index_from_determining_vertex(g, budget)? {
            return Ok(r);
        }
    }
    determining_index_by_search_with(g, budget)
}

fn index_from_determining_vertex(g: &Graph, budget: &mut Budget) -> Result<Option<DeterminingResult>> {
    let group = automorphisms_with(g, &FixConstraint::default(), budget)?;
    if group.is_trivial() {
        return Ok(None);
    }
    let mut anchor = None;
    for orbit in vertex_orbits(&group) {
        if is_vertex_determining_with(g, &VertexSet::new([orbit[0]]), budget)? {
            anchor = Some(orbit[0]);
            break;
        }
    }
    let Some(v) = anchor else { return Ok(None) };
    let t = if is_edge_flip_invariant_with(g, budget)? {
        let a = g.neighbors(v).iter().next().expect("connected, n >= 3");
        let second = match g.neighbors(v).iter().nth(1) {
            Some(b) => Edge::new(v, b),
            None => Edge::new(a, g.neighbors(a).iter().find(|&c| c != v).expect("connected, n >= 3")),
        };
        EdgeSet::new([Edge::new(v, a), second])
    } else {
        let mut partner = None;
        for u in g.neighbors(v).iter() {
            if find_swap(g, u, v, budget)?.is_none() {
                partner = Some(u);
                break;
            }
        }
        let u = partner.ok_or_else(|| Error::Invariant("no unswappable neighbor in a non-flip-invariant graph".into()))?;
        EdgeSet::new([Edge::new(u, v)])
    };
    if !is_edge_determining_with(g, &t, budget)? {
        return Err(Error::Invariant(format!("fast-path witness {t:?} is not determining")));
    }
    Ok(Some(DeterminingResult { value: t.len(), witness: Witness::Edges(t), certified_minimal: true }))
}

pub fn determining_index_by_search(g: &Graph) -> Result<DeterminingResult> {
    determining_index_by_search_with(g, &mut Budget::unlimited())
}

/// Exact `det'(g)` by exhaustive search only, with the lexicographically
/// least minimum edge set (in sorted edge order) as witness.
pub fn determining_index_by_search_with(g: &Graph, budget: &mut Budget) -> Result<DeterminingResult> {
    check_index_defined(g)?;
    let edges = g.edges();
    let group = automorphisms_with(g, &FixConstraint::default(), budget)?;
    let mut is_rep = vec![false; edges.len()];
    for orbit in edge_orbits(g, &group) {
        is_rep[edges.binary_search(&orbit[0]).expect("orbit members are edges")] = true;
    }
    let trivial = group.is_trivial();
    let subset = least_passing_subset(
        edges.len(),
        |i| is_rep[i],
        budget,
        |idx, budget| {
            if idx.is_empty() {
                return Ok(trivial);
            }
            let c = FixConstraint::edges(idx.iter().map(|&i| edges[i]));
            Ok(find_constrained_automorphism(g, &c, true, budget)?.is_none())
        },
    )?;
    let t = EdgeSet::new(subset.iter().map(|&i| edges[i]));
    Ok(DeterminingResult { value: t.len(), witness: Witness::Edges(t), certified_minimal: true })
}

/// Converts a vertex determining set into an edge determining set of the
/// same size using edges toward a fixed root along shortest paths.
///
/// If the members of `s` are pairwise adjacent the edges of the path
/// `s_1 s_2 ... s_k` are used, completed by one more edge: the smallest
/// edge meeting `{s_1, s_2}` in one vertex when `k = 2`, the edge
/// `{s_1, s_k}` otherwise. If not, `s_1, s_2` is the first pair at distance
/// at least two and every `s_i` contributes the edge to its BFS parent
/// (smallest-id closer neighbor) from `s_1`, while `s_1` contributes the
/// first edge of the chosen `s_1`-`s_2` geodesic. When that first edge is
/// also the edge of some later `s_i`, the set is still determining and is
/// padded with the smallest unused edges. The result has `|s|` edges
/// unless the graph has fewer (only possible when `s` is not minimum).
pub fn edge_set_from_vertex_set(g: &Graph, s: &VertexSet) -> Result<EdgeSet> {
    edge_set_from_vertex_set_with(g, s, &mut Budget::unlimited())
}

pub fn edge_set_from_vertex_set_with(g: &Graph, s: &VertexSet, budget: &mut Budget) -> Result<EdgeSet> {
    s.validate(g)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() < 3 || s.len() < 2 {
        return Err(Error::Precondition("needs |V| >= 3 and |S| >= 2".into()));
    }
    if !is_vertex_determining_with(g, s, budget)? {
        return Err(Error::NotDetermining);
    }
    let m = s.members();
    let k = m.len();
    let pair = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).find(|&(i, j)| !g.has_edge(m[i], m[j]));
    let mut t: Vec<Edge> = Vec::with_capacity(k);
    match pair {
        None => {
            t.extend(m.windows(2).map(|w| Edge::new(w[0], w[1])));
            if k == 2 {
                let base = Edge::new(m[0], m[1]);
                let extra = g
                    .edges()
                    .into_iter()
                    .find(|e| *e != base && e.is_adjacent_to(&base))
                    .ok_or_else(|| Error::Invariant("connected graph on 3+ vertices lacks an adjacent edge".into()))?;
                t.push(extra);
            } else {
                t.push(Edge::new(m[0], m[k - 1]));
            }
        }
        Some((i, j)) => {
            let (s1, s2) = (m[i], m[j]);
            let order: Vec<usize> =
                [s1, s2].into_iter().chain(m.iter().copied().filter(|&x| x != s1 && x != s2)).collect();
            let (_, parent) = g.bfs_tree(s1);
            let up = |x: usize| parent[x].expect("connected graph");
            let mut u1 = s2;
            while up(u1) != s1 {
                u1 = up(u1);
            }
            t.push(Edge::new(s1, u1));
            for &x in &order[1..] {
                let e = Edge::new(x, up(x));
                if !t.contains(&e) {
                    t.push(e);
                }
            }
            let spare: Vec<Edge> = g.edges().into_iter().filter(|e| !t.contains(e)).collect();
            let missing = k.saturating_sub(t.len()).min(spare.len());
            t.extend_from_slice(&spare[..missing]);
        }
    }
    let t = EdgeSet::new(t);
    if t.len() != k.min(g.edge_count()) {
        return Err(Error::Invariant(format!("built {} edges for {k} vertices", t.len())));
    }
    if !is_edge_determining_with(g, &t, budget)? {
        return Err(Error::Invariant(format!("constructed edge set {t:?} is not determining")));
    }
    Ok(t)
}

/// Endpoints of the edges of a determining edge set; always a vertex
/// determining set of at most twice the size.
pub fn endvertex_set(g: &Graph, t: &EdgeSet) -> Result<VertexSet> {
    if !is_edge_determining(g, t)? {
        return Err(Error::NotDetermining);
    }
    let s: VertexSet = t.members().iter().flat_map(|e| [e.u, e.v]).collect();
    debug_assert!(is_vertex_determining(g, &s) == Ok(true));
    Ok(s)
}

/// Groups asymmetric components into isomorphism classes and combines the
/// per-component values: one member of each class but the last needs one
/// fixed element, every symmetric component needs its own value.
fn compose(
    g: &Graph,
    budget: &mut Budget,
    value: impl Fn(&Graph, &mut Budget) -> Result<usize>,
) -> Result<usize> {
    let mut total = 0;
    let mut classes: Vec<Graph> = Vec::new();
    let mut asymmetric = 0;
    for comp in g.connected_components() {
        let h = g.induced_subgraph(&comp);
        let v = value(&h, budget)?;
        if v > 0 {
            total += v;
            continue;
        }
        asymmetric += 1;
        let mut known = false;
        for c in &classes {
            if is_isomorphic_with(c, &h, budget)? {
                known = true;
                break;
            }
        }
        if !known {
            classes.push(h);
        }
    }
    Ok(asymmetric - classes.len() + total)
}

/// `det(g)` assembled from the connected components.
pub fn compose_components_det(g: &Graph) -> Result<usize> {
    compose_components_det_with(g, &mut Budget::unlimited())
}

pub fn compose_components_det_with(g: &Graph, budget: &mut Budget) -> Result<usize> {
    compose(g, budget, |h, b| Ok(determining_number_with(h, b)?.value))
}

/// `det'(g)` assembled from the connected components.
pub fn compose_components_det_index(g: &Graph) -> Result<usize> {
    compose_components_det_index_with(g, &mut Budget::unlimited())
}

pub fn compose_components_det_index_with(g: &Graph, budget: &mut Budget) -> Result<usize> {
    check_index_defined(g)?;
    compose(g, budget, |h, b| Ok(determining_index_with(h, b)?.value))
}

fn require_connected_3(g: &Graph) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() < 3 {
        return Err(Error::Precondition(format!("needs at least 3 vertices, got {}", g.n())));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    pub det: DeterminingResult,
    pub det_prime: DeterminingResult,
    /// Edge-flip invariance, evaluated only when `det = 1`.
    pub efi: Option<bool>,
    /// `det' <= det <= 2 det'` when `det != 1`; otherwise `det'` is 2 for
    /// flip-invariant graphs and 1 for the rest.
    pub holds: bool,
}

pub fn check_bounds(g: &Graph) -> Result<BoundsReport> {
    check_bounds_with(g, &mut Budget::unlimited())
}

/// Both values are computed by exhaustive search, independently of the
/// shortcut used by [`determining_index`].
pub fn check_bounds_with(g: &Graph, budget: &mut Budget) -> Result<BoundsReport> {
    require_connected_3(g)?;
    let det = determining_number_with(g, budget)?;
    let det_prime = determining_index_by_search_with(g, budget)?;
    let (d, dp) = (det.value, det_prime.value);
    let (efi, holds) = if d == 1 {
        let efi = is_edge_flip_invariant_with(g, budget)?;
        (Some(efi), dp == if efi { 2 } else { 1 })
    } else {
        (None, dp <= d && d <= 2 * dp)
    };
    Ok(BoundsReport { det, det_prime, efi, holds })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferReport {
    pub det_prime: usize,
    pub det_line: usize,
    /// The fixture among G1, G2, G3 that `g` is isomorphic to, if any.
    pub exception: Option<NamedGraphId>,
    /// Values are equal exactly when `g` is not an exception.
    pub holds: bool,
}

/// Compares `det'(g)` with `det(L(g))`; they agree except on three small
/// graphs.
pub fn line_graph_transfer_check(g: &Graph) -> Result<TransferReport> {
    line_graph_transfer_check_with(g, &mut Budget::unlimited())
}

pub fn line_graph_transfer_check_with(g: &Graph, budget: &mut Budget) -> Result<TransferReport> {
    require_connected_3(g)?;
    let det_prime = determining_index_with(g, budget)?.value;
    let det_line = determining_number_with(&line_graph(g)?, budget)?.value;
    let mut exception = None;
    for id in [NamedGraphId::G1, NamedGraphId::G2, NamedGraphId::G3] {
        if is_isomorphic_with(g, &named_graph(id), budget)? {
            exception = Some(id);
            break;
        }
    }
    let holds = (det_prime == det_line) == exception.is_none();
    Ok(TransferReport { det_prime, det_line, exception, holds })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeReport {
    pub det: usize,
    pub det_prime: usize,
    /// Center vertex used to orient the edges of the minimum edge set.
    pub root: usize,
    /// Farther endpoint (from `root`) of each witness edge.
    pub far_endpoints: VertexSet,
    pub far_endpoints_determining: bool,
    pub holds: bool,
}

pub fn tree_det_check(g: &Graph) -> Result<TreeReport> {
    tree_det_check_with(g, &mut Budget::unlimited())
}

/// Checks `det = det'` on a tree and that the farther endpoints of a
/// minimum edge determining set form a vertex determining set.
pub fn tree_det_check_with(g: &Graph, budget: &mut Budget) -> Result<TreeReport> {
    let center = g.tree_center()?;
    if g.n() < 3 {
        return Err(Error::Precondition(format!("needs at least 3 vertices, got {}", g.n())));
    }
    let det = determining_number_with(g, budget)?.value;
    let index = determining_index_by_search_with(g, budget)?;
    let root = center[0];
    let dist = g.distances_from(root);
    let far: VertexSet = index
        .edge_witness()
        .expect("edge search yields edges")
        .members()
        .iter()
        .map(|e| if dist[e.u] > dist[e.v] { e.u } else { e.v })
        .collect();
    let far_ok = is_vertex_determining_with(g, &far, budget)?;
    Ok(TreeReport {
        det,
        det_prime: index.value,
        root,
        holds: det == index.value && far_ok && far.len() == index.value,
        far_endpoints: far,
        far_endpoints_determining: far_ok,
    })
}

impl core::fmt::Display for VertexSet {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl core::fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}
