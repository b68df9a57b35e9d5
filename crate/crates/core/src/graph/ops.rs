use alloc::vec;
use alloc::vec::Vec;

use super::Graph;
use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Complement: `{u, v}` is an edge iff it is not an edge of `g`.
pub fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let adj = (0..n)
        .map(|u| BitSet::from_indices(n, (0..n).filter(|&v| v != u && !g.has_edge(u, v))))
        .collect();
    Graph::from_adjacency(adj)
}

/// Disjoint union; block `i` is shifted by the total size of blocks `0..i`.
pub fn disjoint_union(graphs: &[Graph]) -> Result<Graph> {
    if graphs.is_empty() {
        return Err(Error::InvalidParameter("disjoint union of an empty list".into()));
    }
    let total: usize = graphs.iter().map(Graph::n).sum();
    let mut adj = Vec::with_capacity(total);
    let mut offset = 0;
    for g in graphs {
        for v in 0..g.n() {
            adj.push(BitSet::from_indices(total, g.neighbors(v).iter().map(|x| x + offset)));
        }
        offset += g.n();
    }
    Ok(Graph::from_adjacency(adj))
}

/// Join `g + h`: `h` is shifted by `g.n()` and every cross pair is joined.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let (a, b) = (g.n(), h.n());
    let total = a + b;
    let mut adj = Vec::with_capacity(total);
    for v in 0..a {
        let mut row = BitSet::from_indices(total, g.neighbors(v).iter());
        (a..total).for_each(|x| row.insert(x));
        adj.push(row);
    }
    for v in 0..b {
        let mut row = BitSet::from_indices(total, h.neighbors(v).iter().map(|x| x + a));
        (0..a).for_each(|x| row.insert(x));
        adj.push(row);
    }
    Graph::from_adjacency(adj)
}

/// Cartesian product `g □ h`. The pair `(x, y)` gets id `x * h.n() + y`
/// (row-major, `g` index major).
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let (a, b) = (g.n(), h.n());
    let total = a * b;
    let mut adj = vec![BitSet::new(total); total];
    for x in 0..a {
        for y in 0..b {
            let id = x * b + y;
            for y2 in h.neighbors(y).iter() {
                adj[id].insert(x * b + y2);
            }
            for x2 in g.neighbors(x).iter() {
                adj[id].insert(x2 * b + y);
            }
        }
    }
    Graph::from_adjacency(adj)
}

/// Line graph. Vertex `i` is the `i`-th edge of `g.edges()`; two vertices
/// are adjacent iff the edges share an endpoint.
pub fn line_graph(g: &Graph) -> Result<Graph> {
    let edges = g.edges();
    if edges.is_empty() {
        return Err(Error::Edgeless);
    }
    let m = edges.len();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (i, e) in edges.iter().enumerate() {
        incident[e.u].push(i);
        incident[e.v].push(i);
    }
    let mut adj = vec![BitSet::new(m); m];
    for list in &incident {
        for &i in list {
            for &j in list {
                if i != j {
                    adj[i].insert(j);
                }
            }
        }
    }
    Ok(Graph::from_adjacency(adj))
}
