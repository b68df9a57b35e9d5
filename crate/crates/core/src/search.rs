//! Partition-backtracking search for automorphisms.
//!
//! A search starts from an ordered partition of the vertices that every
//! admissible automorphism must preserve cell by cell, refines it to an
//! equitable partition and then individualizes vertices of the smallest
//! non-singleton cell. The leftmost branch (always the lowest vertex id)
//! fixes the base; any other branch whose refined partitions keep the same
//! cell sizes is explored until a discrete partition is reached, and the
//! induced bijection is checked against the graph.
//!
//! Refinement only depends on the cell structure and the graph, never on
//! vertex labels, so it commutes with every admissible automorphism. That
//! makes the shape comparison a sound pruning rule and the search complete.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::budget::Budget;
use crate::error::Result;
use crate::graph::{Edge, Graph};
use crate::perm::Permutation;

/// Restrictions folded into the initial partition.
#[derive(Clone, Copy, Default)]
pub(crate) struct Constraint<'a> {
    pub fixed_vertices: &'a [usize],
    pub fixed_edges: &'a [Edge],
    pub colors: Option<&'a [u32]>,
}

#[derive(Clone, Debug)]
pub(crate) struct Partition {
    cells: Vec<Vec<usize>>,
    n: usize,
}

impl Partition {
    fn is_discrete(&self) -> bool {
        self.cells.len() == self.n
    }

    fn same_shape(&self, other: &Partition) -> bool {
        self.cells.len() == other.cells.len()
            && self.cells.iter().zip(&other.cells).all(|(a, b)| a.len() == b.len())
    }

    /// Smallest non-singleton cell, first by position on ties.
    fn target_cell(&self) -> Option<usize> {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|&(i, c)| (c.len(), i))
            .map(|(i, _)| i)
    }

    pub(crate) fn cell_of(&self, v: usize) -> usize {
        self.cells.iter().position(|c| c.contains(&v)).expect("vertex in partition")
    }

    pub(crate) fn cell(&self, i: usize) -> &[usize] {
        &self.cells[i]
    }
}

struct Level {
    partition: Partition,
    /// `(cell index, base vertex)` or `None` once the partition is discrete.
    branch: Option<(usize, usize)>,
}

/// Base, generators and basic orbit sizes of a (constrained) automorphism group.
pub(crate) struct GroupData {
    pub generators: Vec<Permutation>,
    pub base: Vec<usize>,
    pub orbit_sizes: Vec<usize>,
}

pub(crate) struct Engine<'a> {
    g: &'a Graph,
    budget: &'a mut Budget,
}

impl<'a> Engine<'a> {
    pub fn new(g: &'a Graph, budget: &'a mut Budget) -> Self {
        Engine { g, budget }
    }

    /// Equitable partition refining the constraint classes.
    ///
    /// Fixed vertices become singletons. A fixed edge confines each endpoint
    /// to the edge; a vertex confined twice (or next to a fixed vertex) is
    /// fixed, and the surviving edges become two-element cells.
    pub fn initial_partition(&mut self, c: &Constraint<'_>) -> Partition {
        let n = self.g.n();
        let mut fixed = vec![false; n];
        for &v in c.fixed_vertices {
            fixed[v] = true;
        }
        let mut partner: Vec<Option<usize>> = vec![None; n];
        let mut edges: Vec<Edge> = c.fixed_edges.to_vec();
        edges.sort_unstable();
        edges.dedup();
        for e in &edges {
            for (x, y) in [(e.u, e.v), (e.v, e.u)] {
                if partner[x].is_some() {
                    fixed[x] = true;
                }
                partner[x] = Some(y);
            }
        }
        let mut changed = true;
        while changed {
            changed = false;
            for x in 0..n {
                if let Some(y) = partner[x] {
                    if fixed[x] || fixed[y] {
                        fixed[x] = true;
                        partner[x] = None;
                        changed = true;
                    }
                }
            }
        }
        let key = |v: usize| -> (u8, usize, u32, usize) {
            if fixed[v] {
                (0, v, 0, 0)
            } else if let Some(y) = partner[v] {
                (1, v.min(y), 0, 0)
            } else {
                (2, 0, c.colors.map_or(0, |col| col[v]), self.g.degree(v))
            }
        };
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (key(v), v));
        let mut cells: Vec<Vec<usize>> = Vec::new();
        let mut last = None;
        for v in order {
            let k = key(v);
            if last == Some(k) {
                cells.last_mut().expect("open cell").push(v);
            } else {
                cells.push(vec![v]);
                last = Some(k);
            }
        }
        let queue = cells.iter().map(|c| BitSet::from_indices(n, c.iter().copied())).collect();
        let mut p = Partition { cells, n };
        self.refine(&mut p, queue);
        p
    }

    fn refine(&self, p: &mut Partition, mut queue: VecDeque<BitSet>) {
        let n = self.g.n();
        while let Some(splitter) = queue.pop_front() {
            if p.is_discrete() {
                return;
            }
            let mut next = Vec::with_capacity(p.cells.len());
            for cell in p.cells.drain(..) {
                if cell.len() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut keyed: Vec<(usize, usize)> = cell
                    .iter()
                    .map(|&v| (self.g.neighbors(v).intersection_count(&splitter), v))
                    .collect();
                if keyed.iter().all(|&(k, _)| k == keyed[0].0) {
                    next.push(cell);
                    continue;
                }
                keyed.sort_unstable();
                let mut start = 0;
                while start < keyed.len() {
                    let mut end = start;
                    while end < keyed.len() && keyed[end].0 == keyed[start].0 {
                        end += 1;
                    }
                    let piece: Vec<usize> = keyed[start..end].iter().map(|&(_, v)| v).collect();
                    queue.push_back(BitSet::from_indices(n, piece.iter().copied()));
                    next.push(piece);
                    start = end;
                }
            }
            p.cells = next;
        }
    }

    /// Splits `v` off cell `c` (as the first of the two pieces) and refines.
    fn descend(&mut self, p: &Partition, c: usize, v: usize) -> Result<Partition> {
        self.budget.spend(1)?;
        let mut cells = Vec::with_capacity(p.cells.len() + 1);
        cells.extend_from_slice(&p.cells[..c]);
        cells.push(vec![v]);
        cells.push(p.cells[c].iter().copied().filter(|&x| x != v).collect());
        cells.extend_from_slice(&p.cells[c + 1..]);
        let mut next = Partition { cells, n: p.n };
        let queue = VecDeque::from([BitSet::from_indices(p.n, [v])]);
        self.refine(&mut next, queue);
        Ok(next)
    }

    fn left_path(&mut self, start: Partition) -> Result<Vec<Level>> {
        let mut levels = Vec::new();
        let mut p = start;
        while let Some(c) = p.target_cell() {
            let b = p.cells[c][0];
            let next = self.descend(&p, c, b)?;
            levels.push(Level { partition: p, branch: Some((c, b)) });
            p = next;
        }
        levels.push(Level { partition: p, branch: None });
        Ok(levels)
    }

    /// Depth-first search for an automorphism in the subtree whose partition
    /// at `depth` is `right`.
    fn dfs(&mut self, path: &[Level], depth: usize, right: Partition) -> Result<Option<Permutation>> {
        let level = &path[depth];
        let Some((c, _)) = level.branch else {
            let mut image = vec![0; self.g.n()];
            for (l, r) in level.partition.cells.iter().zip(&right.cells) {
                image[l[0]] = r[0];
            }
            let perm = Permutation::from_images_unchecked(image);
            return Ok(perm.is_automorphism_of(self.g).then_some(perm));
        };
        for &y in &right.cells[c] {
            let next = self.descend(&right, c, y)?;
            if !next.same_shape(&path[depth + 1].partition) {
                continue;
            }
            if let Some(p) = self.dfs(path, depth + 1, next)? {
                return Ok(Some(p));
            }
        }
        Ok(None)
    }

    /// Generators of the group of automorphisms preserving `initial`
    /// cell-wise, with a base and the basic orbit sizes of its stabilizer chain.
    pub fn group(&mut self, initial: Partition) -> Result<GroupData> {
        let n = self.g.n();
        let path = self.left_path(initial)?;
        let depth = path.len() - 1;
        let mut generators: Vec<Permutation> = Vec::new();
        let mut orbit_sizes = vec![0; depth];
        for level in (0..depth).rev() {
            let (c, b) = path[level].branch.expect("non-leaf level");
            let mut orbit = orbit_of(n, b, &generators);
            for &w in &path[level].partition.cells[c] {
                if orbit.contains(w) {
                    continue;
                }
                let right = self.descend(&path[level].partition, c, w)?;
                if !right.same_shape(&path[level + 1].partition) {
                    continue;
                }
                if let Some(p) = self.dfs(&path, level + 1, right)? {
                    generators.push(p);
                    orbit = orbit_of(n, b, &generators);
                }
            }
            orbit_sizes[level] = orbit.count();
        }
        let base = path.iter().filter_map(|l| l.branch.map(|(_, b)| b)).collect();
        Ok(GroupData { generators, base, orbit_sizes })
    }

    /// Some non-identity automorphism preserving `initial`, searching the
    /// deepest base level first.
    pub fn find_nontrivial(&mut self, initial: Partition) -> Result<Option<Permutation>> {
        let path = self.left_path(initial)?;
        for level in (0..path.len() - 1).rev() {
            let (c, b) = path[level].branch.expect("non-leaf level");
            for &w in &path[level].partition.cells[c] {
                if w == b {
                    continue;
                }
                let right = self.descend(&path[level].partition, c, w)?;
                if !right.same_shape(&path[level + 1].partition) {
                    continue;
                }
                if let Some(p) = self.dfs(&path, level + 1, right)? {
                    return Ok(Some(p));
                }
            }
        }
        Ok(None)
    }

    /// Some automorphism preserving `initial` that maps `x` to `y`.
    pub fn find_mapping(
        &mut self,
        initial: &Partition,
        x: usize,
        y: usize,
    ) -> Result<Option<Permutation>> {
        let c = initial.cell_of(x);
        if !initial.cells[c].contains(&y) {
            return Ok(None);
        }
        let left = self.descend(initial, c, x)?;
        let right = self.descend(initial, c, y)?;
        if !left.same_shape(&right) {
            return Ok(None);
        }
        let path = self.left_path(left)?;
        self.dfs(&path, 0, right)
    }
}

/// Orbit of `x` under the group generated by `gens`.
pub(crate) fn orbit_of(n: usize, x: usize, gens: &[Permutation]) -> BitSet {
    let mut orbit = BitSet::new(n);
    orbit.insert(x);
    let mut stack = vec![x];
    while let Some(y) = stack.pop() {
        for g in gens {
            let z = g.apply(y);
            if !orbit.contains(z) {
                orbit.insert(z);
                stack.push(z);
            }
        }
    }
    orbit
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path};

    fn order(g: &Graph) -> usize {
        let mut budget = Budget::unlimited();
        let mut e = Engine::new(g, &mut budget);
        let p = e.initial_partition(&Constraint::default());
        e.group(p).unwrap().orbit_sizes.iter().product()
    }

    #[test]
    fn small_group_orders() {
        assert_eq!(order(&cycle(4).unwrap()), 8);
        assert_eq!(order(&complete(4).unwrap()), 24);
        assert_eq!(order(&path(5).unwrap()), 2);
        assert_eq!(order(&cycle(7).unwrap()), 14);
    }

    #[test]
    fn fixed_edge_pair_cells() {
        let g = path(4).unwrap();
        let mut budget = Budget::unlimited();
        let mut e = Engine::new(&g, &mut budget);
        let edges = [Edge::new(1, 2)];
        let p = e.initial_partition(&Constraint { fixed_edges: &edges, ..Default::default() });
        // The reversal swaps 1 and 2.
        let found = e.find_nontrivial(p).unwrap().unwrap();
        assert_eq!(found.images(), &[3, 2, 1, 0]);
    }

    #[test]
    fn adjacent_fixed_edges_fix_endpoints() {
        let g = complete(3).unwrap();
        let mut budget = Budget::unlimited();
        let mut e = Engine::new(&g, &mut budget);
        let edges = [Edge::new(0, 1), Edge::new(1, 2)];
        let p = e.initial_partition(&Constraint { fixed_edges: &edges, ..Default::default() });
        assert!(p.is_discrete());
        assert!(e.find_nontrivial(p).unwrap().is_none());
    }

    #[test]
    fn budget_is_enforced() {
        let g = complete(8).unwrap();
        let mut budget = Budget::new(3);
        let mut e = Engine::new(&g, &mut budget);
        let p = e.initial_partition(&Constraint::default());
        assert!(e.group(p).is_err());
    }
}
