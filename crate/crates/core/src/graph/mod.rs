//! Simple undirected graphs on vertices `0..n`.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

mod build;
mod graph6;
mod named;
mod ops;

pub use build::{
    build_family, complete, complete_bipartite, cycle, empty, hypercube, path, star, FamilyKind,
    MAX_HYPERCUBE_DIMENSION,
};
pub use graph6::{parse_graph6, write_graph6, MAX_GRAPH6_ORDER};
pub use named::{named_graph, NamedGraphId};
pub use ops::{cartesian_product, complement, disjoint_union, join, line_graph};

/// An undirected edge `{u, v}` stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Canonical edge between two distinct vertices, in either order.
    ///
    /// # Panics
    /// If `a == b`.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "an edge needs two distinct endpoints");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint that is not `x`.
    pub fn other(&self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }

    pub fn is_adjacent_to(&self, other: &Edge) -> bool {
        self != other && (other.contains(self.u) || other.contains(self.v))
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Immutable simple graph with one adjacency bitset per vertex.
#[derive(Clone)]
pub struct Graph {
    adj: Vec<BitSet>,
    edge_count: usize,
    name: Option<String>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![BitSet::new(n); n], edge_count: 0, name: None }
    }

    /// Builds a graph from an edge list. Repeated edges collapse.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj = vec![BitSet::new(n); n];
        for (a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            adj[a].insert(b);
            adj[b].insert(a);
        }
        Ok(Graph::from_adjacency(adj))
    }

    pub(crate) fn from_adjacency(adj: Vec<BitSet>) -> Self {
        let degree_sum: usize = adj.iter().map(BitSet::count).sum();
        Graph { adj, edge_count: degree_sum / 2, name: None }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Name if set, otherwise `graph(n=.., m=..)`.
    pub fn label(&self) -> String {
        match &self.name {
            Some(name) => name.clone(),
            None => format!("graph(n={}, m={})", self.n(), self.edge_count()),
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    /// All edges, sorted lexicographically.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n() {
            out.extend(self.adj[u].iter().filter(|&v| v > u).map(|v| Edge { u, v }));
        }
        out
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    pub fn check_edge(&self, e: &Edge) -> Result<()> {
        self.check_vertex(e.v)?;
        if self.has_edge(e.u, e.v) {
            Ok(())
        } else {
            Err(Error::NotAnEdge(e.u, e.v))
        }
    }

    /// BFS distances from `v`; `None` marks unreachable vertices.
    pub fn distances_from(&self, v: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[v] = Some(0);
        let mut queue = VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap_or(0);
            for y in self.adj[x].iter() {
                if dist[y].is_none() {
                    dist[y] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// BFS from `root` returning `(distance, parent)` per vertex, where the
    /// parent of a vertex is its smallest-id neighbor one step closer to `root`.
    pub fn bfs_tree(&self, root: usize) -> (Vec<Option<usize>>, Vec<Option<usize>>) {
        let dist = self.distances_from(root);
        let parent = (0..self.n())
            .map(|x| match dist[x] {
                Some(d) if d > 0 => self.adj[x].iter().find(|&y| dist[y] == Some(d - 1)),
                _ => None,
            })
            .collect();
        (dist, parent)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut comps = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(x) = stack.pop() {
                comp.push(x);
                for y in self.adj[x].iter() {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// True for the empty graph and for every graph with one component.
    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    pub fn is_tree(&self) -> bool {
        self.n() > 0 && self.edge_count + 1 == self.n() && self.is_connected()
    }

    /// Subgraph induced by `vertices`, relabeled `0..k` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let k = vertices.len();
        let mut adj = vec![BitSet::new(k); k];
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate() {
                if self.has_edge(a, b) {
                    adj[i].insert(j);
                }
            }
        }
        Graph::from_adjacency(adj)
    }

    /// Center of a tree by repeated leaf stripping: one vertex or two
    /// adjacent vertices, sorted.
    pub fn tree_center(&self) -> Result<Vec<usize>> {
        if !self.is_tree() {
            return Err(Error::NotATree);
        }
        let n = self.n();
        if n <= 2 {
            return Ok((0..n).collect());
        }
        let mut degree = self.degrees();
        let mut removed = vec![false; n];
        let mut leaves: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        let mut remaining = n;
        while remaining > 2 {
            let mut next = Vec::new();
            for &leaf in &leaves {
                removed[leaf] = true;
                remaining -= 1;
                for y in self.adj[leaf].iter() {
                    if !removed[y] {
                        degree[y] -= 1;
                        if degree[y] == 1 {
                            next.push(y);
                        }
                    }
                }
            }
            leaves = next;
        }
        let mut center: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
        center.sort_unstable();
        Ok(center)
    }
}

impl PartialEq for Graph {
    /// Labeled equality; names are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("name", &self.name)
            .field("n", &self.n())
            .field("edges", &self.edges())
            .finish()
    }
}
