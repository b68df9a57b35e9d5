//! Distinguishing number and index by exhaustive search over colorings.
//!
//! Colorings are enumerated as restricted growth strings (the first use of
//! color `i` comes after the first use of `i - 1`), so each partition into
//! color classes is visited once.

use alloc::format;
use alloc::vec::Vec;

use crate::budget::Budget;
use crate::determining::check_index_defined;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::perm::Permutation;
use crate::symmetry::{automorphisms_with, find_constrained_automorphism, FixConstraint, GeneratorSet};

/// Guards for the exhaustive searches. They are equal so that `dist(L(G))`
/// can be compared with `dist'(G)` whenever the latter is in range.
pub const MAX_VERTICES: usize = 12;
pub const MAX_EDGES: usize = 12;
/// Groups up to this order are expanded and checked element by element.
pub const ELEMENT_LIMIT: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Vertices,
    Edges,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub target: Target,
    /// Color of vertex `i`, or of the `i`-th edge of `g.edges()`.
    pub assignment: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Distinguishing {
    pub value: usize,
    /// First distinguishing coloring found with `value` colors.
    pub coloring: Coloring,
}

/// Calls `f` on every restricted growth string of length `len` that uses
/// exactly `c` colors, in lexicographic order, until `f` returns true.
fn exact_rgs(len: usize, c: u32, f: &mut dyn FnMut(&[u32]) -> Result<bool>) -> Result<Option<Vec<u32>>> {
    fn go(a: &mut Vec<u32>, len: usize, c: u32, max: i64, f: &mut dyn FnMut(&[u32]) -> Result<bool>) -> Result<bool> {
        if a.len() == len {
            return f(a);
        }
        let remaining = (len - a.len()) as i64;
        let top = (max + 1).min(c as i64 - 1);
        for color in 0..=top {
            let new_max = max.max(color);
            // Every color above `new_max` still has to appear later.
            if c as i64 - 1 - new_max > remaining - 1 {
                continue;
            }
            a.push(color as u32);
            if go(a, len, c, new_max, f)? {
                return Ok(true);
            }
            a.pop();
        }
        Ok(false)
    }
    let mut a = Vec::with_capacity(len);
    Ok(go(&mut a, len, c, -1, f)?.then_some(a))
}

/// Least `c >= lower` admitting a coloring that passes `test`. Colorings
/// with fewer colors were already tried at smaller `c` (or are excluded by
/// the lower bound), so each level only visits exactly-`c` colorings.
fn search(
    items: usize,
    lower: usize,
    budget: &mut Budget,
    mut test: impl FnMut(&[u32], &mut Budget) -> Result<bool>,
) -> Result<(usize, Vec<u32>)> {
    if items == 0 {
        return Ok((0, Vec::new()));
    }
    for c in lower.max(1)..=items {
        let found = exact_rgs(items, c as u32, &mut |colors| {
            budget.spend(1)?;
            test(colors, budget)
        })?;
        if let Some(a) = found {
            return Ok((c, a));
        }
    }
    Err(Error::Invariant("all-distinct coloring must be distinguishing".into()))
}

/// Vertices with equal open, or equal closed, neighborhoods.
fn twin_classes(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for closed in [false, true] {
        let key = |v: usize| {
            let mut b = g.neighbors(v).clone();
            if closed {
                b.insert(v);
            }
            b
        };
        let mut vs: Vec<usize> = (0..g.n()).collect();
        vs.sort_by_key(|&v| key(v));
        out.extend(vs.chunk_by(|&a, &b| key(a) == key(b)).filter(|c| c.len() > 1).map(<[usize]>::to_vec));
    }
    out
}

/// Twins must get distinct colors.
fn vertex_lower_bound(g: &Graph) -> usize {
    twin_classes(g).iter().map(Vec::len).max().unwrap_or(1)
}

/// `k` nonadjacent twins of degree `d` are told apart only by the colors
/// of their `d` edges, so `c^d >= k`.
fn edge_lower_bound(g: &Graph) -> usize {
    let mut bound = 1;
    for class in twin_classes(g) {
        let (k, d) = (class.len(), g.degree(class[0]));
        if d == 0 || g.has_edge(class[0], class[1]) {
            continue;
        }
        let mut c = 1usize;
        while c.saturating_pow(d as u32) < k {
            c += 1;
        }
        bound = bound.max(c);
    }
    bound
}

fn elements(group: &GeneratorSet) -> Option<Vec<Permutation>> {
    group.elements(ELEMENT_LIMIT).map(|all| all.into_iter().filter(|p| !p.is_identity()).collect())
}

pub fn distinguishing_number(g: &Graph) -> Result<Distinguishing> {
    distinguishing_number_with(g, &mut Budget::default())
}

pub fn distinguishing_number_with(g: &Graph, budget: &mut Budget) -> Result<Distinguishing> {
    if g.n() > MAX_VERTICES {
        return Err(Error::Precondition(format!("at most {MAX_VERTICES} vertices, got {}", g.n())));
    }
    let group = automorphisms_with(g, &FixConstraint::default(), budget)?;
    let nontrivial = elements(&group);
    let (value, assignment) = search(g.n(), vertex_lower_bound(g), budget, |colors, budget| match &nontrivial {
        Some(list) => Ok(!list.iter().any(|p| (0..colors.len()).all(|v| colors[p.apply(v)] == colors[v]))),
        None => {
            let c = FixConstraint::colors(colors.to_vec());
            Ok(find_constrained_automorphism(g, &c, true, budget)?.is_none())
        }
    })?;
    Ok(Distinguishing { value, coloring: Coloring { target: Target::Vertices, assignment } })
}

/// Subdivision of `g` with original vertices colored 0 and the vertex on
/// edge `i` colored `1 + colors[i]`. Its color-preserving automorphisms are
/// exactly the automorphisms of `g` preserving the edge coloring.
fn colored_subdivision(g: &Graph, edges: &[Edge], colors: &[u32]) -> Result<(Graph, Vec<u32>)> {
    let n = g.n();
    let pairs = edges.iter().enumerate().flat_map(|(i, e)| [(e.u, n + i), (e.v, n + i)]);
    let s = Graph::from_edges(n + edges.len(), pairs)?;
    let vertex_colors = core::iter::repeat_n(0, n).chain(colors.iter().map(|c| c + 1)).collect();
    Ok((s, vertex_colors))
}

pub fn distinguishing_index(g: &Graph) -> Result<Distinguishing> {
    distinguishing_index_with(g, &mut Budget::default())
}

pub fn distinguishing_index_with(g: &Graph, budget: &mut Budget) -> Result<Distinguishing> {
    let edges = g.edges();
    if edges.len() > MAX_EDGES {
        return Err(Error::Precondition(format!("at most {MAX_EDGES} edges, got {}", edges.len())));
    }
    check_index_defined(g)?;
    let group = automorphisms_with(g, &FixConstraint::default(), budget)?;
    let nontrivial = elements(&group);
    // Edge permutations induced by the non-identity elements.
    let edge_images: Option<Vec<Vec<usize>>> = nontrivial.as_ref().map(|list| {
        list.iter()
            .map(|p| {
                edges.iter().map(|e| edges.binary_search(&p.apply_edge(e)).expect("edge image is an edge")).collect()
            })
            .collect()
    });
    if g.n() <= 1 {
        return Ok(Distinguishing { value: 0, coloring: Coloring { target: Target::Edges, assignment: Vec::new() } });
    }
    let (value, assignment) = search(edges.len(), edge_lower_bound(g), budget, |colors, budget| match &edge_images {
        Some(list) => Ok(!list.iter().any(|img| (0..colors.len()).all(|i| colors[img[i]] == colors[i]))),
        None => {
            let (s, vertex_colors) = colored_subdivision(g, &edges, colors)?;
            let c = FixConstraint::colors(vertex_colors);
            Ok(find_constrained_automorphism(&s, &c, true, budget)?.is_none())
        }
    })?;
    Ok(Distinguishing { value, coloring: Coloring { target: Target::Edges, assignment } })
}
