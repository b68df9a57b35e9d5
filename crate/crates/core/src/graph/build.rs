use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

/// Largest supported hypercube dimension (`Q_16` has 65536 vertices).
pub const MAX_HYPERCUBE_DIMENSION: usize = 16;

/// Standard families accepted by [`build_family`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Star,
    Empty,
}

impl FamilyKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            FamilyKind::Path => "path",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Complete => "complete",
            FamilyKind::CompleteBipartite => "complete_bipartite",
            FamilyKind::Star => "star",
            FamilyKind::Empty => "empty",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "path" => FamilyKind::Path,
            "cycle" => FamilyKind::Cycle,
            "complete" => FamilyKind::Complete,
            "complete_bipartite" | "complete-bipartite" | "bipartite" => {
                FamilyKind::CompleteBipartite
            }
            "star" => FamilyKind::Star,
            "empty" => FamilyKind::Empty,
            other => return Err(Error::InvalidParameter(format!("unknown family `{other}`"))),
        })
    }
}

/// Builds a member of a standard family. `complete_bipartite` takes two
/// parameters, every other kind takes one.
pub fn build_family(kind: FamilyKind, params: &[usize]) -> Result<Graph> {
    let expected = if kind == FamilyKind::CompleteBipartite { 2 } else { 1 };
    if params.len() != expected {
        return Err(Error::InvalidParameter(format!(
            "{kind} takes {expected} parameter(s), got {}",
            params.len()
        )));
    }
    match kind {
        FamilyKind::Path => path(params[0]),
        FamilyKind::Cycle => cycle(params[0]),
        FamilyKind::Complete => complete(params[0]),
        FamilyKind::CompleteBipartite => complete_bipartite(params[0], params[1]),
        FamilyKind::Star => star(params[0]),
        FamilyKind::Empty => empty(params[0]),
    }
}

fn at_least(what: &str, value: usize, min: usize) -> Result<()> {
    if value < min {
        Err(Error::InvalidParameter(format!("{what} needs n >= {min}, got {value}")))
    } else {
        Ok(())
    }
}

/// `P_n`: vertices `0..n` in path order.
pub fn path(n: usize) -> Result<Graph> {
    at_least("path", n, 1)?;
    Ok(Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))?.with_name(format!("P{n}")))
}

/// `C_n`: vertices `0..n` in cyclic order.
pub fn cycle(n: usize) -> Result<Graph> {
    at_least("cycle", n, 3)?;
    Ok(Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))?.with_name(format!("C{n}")))
}

/// `K_n`.
pub fn complete(n: usize) -> Result<Graph> {
    at_least("complete graph", n, 1)?;
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Ok(Graph::from_edges(n, edges)?.with_name(format!("K{n}")))
}

/// `N_n`, the edgeless graph.
pub fn empty(n: usize) -> Result<Graph> {
    at_least("empty graph", n, 1)?;
    Ok(Graph::empty(n).with_name(format!("N{n}")))
}

/// `K_{n,m}` with parts `0..n` and `n..n+m`.
pub fn complete_bipartite(n: usize, m: usize) -> Result<Graph> {
    at_least("complete bipartite graph", n.min(m), 1)?;
    let edges = (0..n).flat_map(|u| (n..n + m).map(move |v| (u, v)));
    Ok(Graph::from_edges(n + m, edges)?.with_name(format!("K{n},{m}")))
}

/// `K_{1,n}` with hub `0` and leaves `1..=n`.
pub fn star(n: usize) -> Result<Graph> {
    at_least("star", n, 1)?;
    Ok(Graph::from_edges(n + 1, (1..=n).map(|v| (0, v)))?.with_name(format!("K1,{n}")))
}

/// `Q_n`. Vertex ids are the integer values of the bit strings, bit `j`
/// being coordinate `j`; two vertices are adjacent iff they differ in one bit.
pub fn hypercube(n: usize) -> Result<Graph> {
    if !(1..=MAX_HYPERCUBE_DIMENSION).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "hypercube dimension must be in 1..={MAX_HYPERCUBE_DIMENSION}, got {n}"
        )));
    }
    let order = 1usize << n;
    let edges: Vec<(usize, usize)> = (0..order)
        .flat_map(|v| (0..n).map(move |j| (v, v ^ (1 << j))).filter(|&(a, b)| a < b))
        .collect();
    Ok(Graph::from_edges(order, edges)?.with_name(format!("Q{n}")))
}
