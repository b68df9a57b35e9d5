//! Characteristic matrices of vertex tuples in `Q_n`, and minimum edge
//! determining sets for hypercubes.
//!
//! Vertex ids of `Q_n` are integers whose bit `j` is coordinate `j`, so row
//! `i` of a characteristic matrix is vertex `i` written with bit 0 first.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::determining::{
    determining_index_by_search, determining_number, is_edge_determining, is_vertex_determining, EdgeSet, VertexSet,
};
use crate::error::{Error, Result};
use crate::families::qn_det_index;
use crate::graph::{hypercube, Edge};

/// A 0-1 matrix stored row by row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacteristicMatrix {
    rows: usize,
    cols: usize,
    bits: Vec<bool>,
}

impl CharacteristicMatrix {
    pub fn from_rows(rows: &[Vec<bool>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidParameter("rows of unequal length".into()));
        }
        Ok(CharacteristicMatrix { rows: rows.len(), cols, bits: rows.concat() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[bool] {
        &self.bits[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<bool> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    /// The vertex of `Q_cols` whose coordinates are row `i`.
    pub fn row_vertex(&self, i: usize) -> usize {
        self.row(i).iter().enumerate().filter(|(_, &b)| b).map(|(j, _)| 1 << j).sum()
    }

    /// Row `i` as `0`/`1` characters.
    pub fn row_string(&self, i: usize) -> String {
        self.row(i).iter().map(|&b| if b { '1' } else { '0' }).collect()
    }

    pub fn row_strings(&self) -> Vec<String> {
        (0..self.rows).map(|i| self.row_string(i)).collect()
    }

    /// First pair `(j, k)`, `j < k`, of isomorphic columns.
    pub fn isomorphic_column_pair(&self) -> Option<(usize, usize)> {
        let cols: Vec<Vec<bool>> = (0..self.cols).map(|j| self.column(j)).collect();
        (0..self.cols)
            .flat_map(|j| (j + 1..self.cols).map(move |k| (j, k)))
            .find(|&(j, k)| iso(&cols[j], &cols[k]))
    }
}

impl fmt::Display for CharacteristicMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            writeln!(f, "{}", self.row_string(i))?;
        }
        Ok(())
    }
}

fn check_dimension(n: usize) -> Result<()> {
    if n == 0 || n >= usize::BITS as usize {
        return Err(Error::InvalidParameter(format!("hypercube dimension {n} out of range")));
    }
    Ok(())
}

/// `M(S)` for the ordered tuple `s` of vertices of `Q_n`.
pub fn characteristic_matrix(s: &[usize], n: usize) -> Result<CharacteristicMatrix> {
    check_dimension(n)?;
    let rows: Vec<Vec<bool>> = s
        .iter()
        .map(|&v| {
            if v >> n != 0 {
                return Err(Error::VertexOutOfRange { vertex: v, n: 1 << n });
            }
            Ok((0..n).map(|j| v >> j & 1 == 1).collect())
        })
        .collect::<Result<_>>()?;
    Ok(CharacteristicMatrix { rows: s.len(), cols: n, bits: rows.concat() })
}

fn iso(a: &[bool], b: &[bool]) -> bool {
    a == b || a.iter().zip(b).all(|(x, y)| x != y)
}

/// Equal or bitwise complementary.
pub fn columns_isomorphic(a: &[bool], b: &[bool]) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::InvalidParameter(format!("column lengths {} and {}", a.len(), b.len())));
    }
    Ok(iso(a, b))
}

/// A non-empty vertex tuple of `Q_n` is determining iff no two columns of
/// its characteristic matrix are isomorphic.
pub fn is_determining_by_matrix(s: &[usize], n: usize) -> Result<bool> {
    if s.is_empty() {
        return Err(Error::Precondition("empty vertex tuple".into()));
    }
    Ok(characteristic_matrix(s, n)?.isomorphic_column_pair().is_none())
}

/// How a constructed edge set was checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verification {
    /// Direct search for a non-identity automorphism fixing every edge.
    Stabilizer,
    /// Endpoint matrix has no isomorphic columns, and for every `i != j` the
    /// distance between the two `0`-ends differs from the other three
    /// end-to-end distances, so each edge is fixed pointwise.
    MatrixAndDistance,
}

/// Largest dimension verified by a direct stabilizer search.
pub const STABILIZER_CHECK_MAX: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QnEdgeConstruction {
    pub n: usize,
    /// `r x n` with `r = det'(Q_n)`: basis columns first, then pairwise
    /// non-isomorphic columns.
    pub y: CharacteristicMatrix,
    /// `2r x n`: each row of `Y` followed by a copy with its basis bit cleared.
    pub x: CharacteristicMatrix,
    /// `e_i` joins the vertices of rows `2i` and `2i + 1` of `X`.
    pub edges: EdgeSet,
    pub verification: Verification,
}

/// Builds an edge determining set of `Q_n` of size `det'(Q_n)`.
///
/// The free columns of `Y` are the smallest column values in order (row 0
/// as the most significant bit), skipping any column isomorphic to one
/// already taken.
pub fn construct_qn_edge_set(n: usize) -> Result<QnEdgeConstruction> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("needs n >= 3, got {n}")));
    }
    check_dimension(n)?;
    let r = qn_det_index(n as u64)? as usize;
    let mut free: Vec<Vec<bool>> = Vec::with_capacity(n - r);
    for value in 0u64..1 << r {
        if free.len() == n - r {
            break;
        }
        let col: Vec<bool> = (0..r).map(|i| value >> (r - 1 - i) & 1 == 1).collect();
        if !free.iter().any(|c| iso(c, &col)) {
            free.push(col);
        }
    }
    if free.len() != n - r {
        return Err(Error::Invariant(format!("only {} free columns of length {r}", free.len())));
    }
    let y_rows: Vec<Vec<bool>> =
        (0..r).map(|i| (0..r).map(|j| i == j).chain(free.iter().map(|c| c[i])).collect()).collect();
    let mut x_rows = Vec::with_capacity(2 * r);
    for (i, row) in y_rows.iter().enumerate() {
        x_rows.push(row.clone());
        let mut cleared = row.clone();
        cleared[i] = false;
        x_rows.push(cleared);
    }
    let y = CharacteristicMatrix::from_rows(&y_rows)?;
    let x = CharacteristicMatrix::from_rows(&x_rows)?;
    let edges = EdgeSet::new((0..r).map(|i| Edge::new(x.row_vertex(2 * i), x.row_vertex(2 * i + 1))));
    if edges.len() != r {
        return Err(Error::Invariant("constructed edges collide".into()));
    }
    let verification = if n <= STABILIZER_CHECK_MAX {
        if !is_edge_determining(&hypercube(n)?, &edges)? {
            return Err(Error::Invariant(format!("Q_{n} edge set {edges} is not determining")));
        }
        Verification::Stabilizer
    } else {
        if let Some((j, k)) = x.isomorphic_column_pair() {
            return Err(Error::Invariant(format!("columns {j} and {k} of X are isomorphic")));
        }
        let dist = |a: usize, b: usize| (x.row_vertex(a) ^ x.row_vertex(b)).count_ones();
        for i in 0..r {
            for j in 0..r {
                if i == j {
                    continue;
                }
                // Rows 2i + 1 and 2j + 1 are the ends with basis bit 0.
                let base = dist(2 * i + 1, 2 * j + 1);
                let others = [dist(2 * i, 2 * j + 1), dist(2 * i + 1, 2 * j), dist(2 * i, 2 * j)];
                if others.contains(&base) {
                    return Err(Error::Invariant(format!("edges {i} and {j} can be flipped together")));
                }
            }
        }
        Verification::MatrixAndDistance
    };
    Ok(QnEdgeConstruction { n, y, x, edges, verification })
}

/// A 3-row sub-matrix of the `Q_4` example and whether it has isomorphic
/// columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleCheck {
    pub vertices: Vec<usize>,
    pub matrix: CharacteristicMatrix,
    pub isomorphic_columns: Option<(usize, usize)>,
    pub determining: bool,
}

/// The `Q_4` edge set `{1000-0000, 0110-0010}`: a minimum edge determining
/// set whose four endpoints determine `Q_4` without containing any minimum
/// (3-vertex) determining set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Q4Report {
    pub edges: EdgeSet,
    pub endpoints: Vec<usize>,
    pub endpoint_matrix: CharacteristicMatrix,
    pub edges_determining: bool,
    pub det_prime: usize,
    pub det: usize,
    pub endpoints_determining: bool,
    pub triples: Vec<TripleCheck>,
}

impl Q4Report {
    /// The five checked statements, in order.
    pub fn assertions(&self) -> [(&'static str, bool); 5] {
        [
            ("edge set is determining", self.edges_determining),
            ("edge set size equals det'(Q_4) = 2", self.edges.len() == self.det_prime && self.det_prime == 2),
            ("endpoints form a vertex determining set", self.endpoints_determining),
            ("endpoint count 4 exceeds det(Q_4) = 3", self.endpoints.len() == 4 && self.det == 3),
            (
                "every 3 endpoints have isomorphic columns",
                self.triples.len() == 4 && self.triples.iter().all(|t| t.isomorphic_columns.is_some() && !t.determining),
            ),
        ]
    }

    pub fn passed(&self) -> bool {
        self.assertions().iter().all(|(_, ok)| *ok)
    }
}

pub fn q4_open_question_check() -> Result<Q4Report> {
    let q4 = hypercube(4)?;
    // Coordinates (1,0,0,0), (0,0,0,0), (0,1,1,0), (0,0,1,0) with bit j = coordinate j.
    let endpoints = vec![0b0001, 0b0000, 0b0110, 0b0100];
    let edges = EdgeSet::new([Edge::new(endpoints[0], endpoints[1]), Edge::new(endpoints[2], endpoints[3])]);
    let endpoint_matrix = characteristic_matrix(&endpoints, 4)?;
    let edges_determining = is_edge_determining(&q4, &edges)?;
    let det_prime = determining_index_by_search(&q4)?.value;
    let det = determining_number(&q4).value;
    let endpoints_determining = is_vertex_determining(&q4, &VertexSet::new(endpoints.iter().copied()))?;
    let mut triples = Vec::new();
    for skip in 0..4 {
        let vertices: Vec<usize> = (0..4).filter(|&i| i != skip).map(|i| endpoints[i]).collect();
        let matrix = characteristic_matrix(&vertices, 4)?;
        triples.push(TripleCheck {
            isomorphic_columns: matrix.isomorphic_column_pair(),
            determining: is_vertex_determining(&q4, &VertexSet::new(vertices.iter().copied()))?,
            vertices,
            matrix,
        });
    }
    Ok(Q4Report { edges, endpoints, endpoint_matrix, edges_determining, det_prime, det, endpoints_determining, triples })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn bits(s: &str) -> Vec<bool> {
        s.chars().map(|c| c == '1').collect()
    }

    #[test]
    fn matrix_rows_are_bit_strings() {
        let m = characteristic_matrix(&[0], 3).unwrap();
        assert_eq!(m.row_strings(), ["000"]);
        let m = characteristic_matrix(&[0, 1, 2, 3], 2).unwrap();
        assert_eq!(m.row_strings(), ["00", "10", "01", "11"]);
        assert!(characteristic_matrix(&[8], 3).is_err());
    }

    #[test]
    fn q4_endpoint_matrix() {
        let m = characteristic_matrix(&[0b0001, 0b0000, 0b0110, 0b0100], 4).unwrap();
        assert_eq!(m.to_string(), "1000\n0000\n0110\n0010\n");
    }

    #[test]
    fn column_isomorphism() {
        assert_eq!(columns_isomorphic(&bits("011"), &bits("100")), Ok(true));
        assert_eq!(columns_isomorphic(&bits("011"), &bits("011")), Ok(true));
        assert_eq!(columns_isomorphic(&bits("011"), &bits("010")), Ok(false));
        assert!(columns_isomorphic(&bits("01"), &bits("010")).is_err());
    }

    #[test]
    fn single_vertices_never_determine() {
        for n in 2..=6 {
            for v in [0, 1, (1 << n) - 1] {
                assert_eq!(is_determining_by_matrix(&[v], n), Ok(false));
            }
        }
        assert_eq!(is_determining_by_matrix(&[0], 1), Ok(true));
        assert!(is_determining_by_matrix(&[], 3).is_err());
    }

    #[test]
    fn seven_dimensional_construction() {
        let c = construct_qn_edge_set(7).unwrap();
        assert_eq!((c.y.rows(), c.x.rows(), c.edges.len()), (3, 6, 3));
        assert_eq!(c.y.row_strings(), ["1000000", "0100011", "0010101"]);
        assert_eq!(c.x.row_strings(), ["1000000", "0000000", "0100011", "0000011", "0010101", "0000101"]);
        assert_eq!(c.verification, Verification::MatrixAndDistance);
        for j in 3..7 {
            assert_eq!(c.x.column(j).iter().filter(|&&b| b).count() % 2, 0);
        }
    }

    #[test]
    fn small_constructions() {
        let c = construct_qn_edge_set(4).unwrap();
        assert_eq!(c.edges.len(), 2);
        let ends: Vec<usize> = (0..c.x.rows()).map(|i| c.x.row_vertex(i)).collect();
        assert_eq!(is_determining_by_matrix(&ends, 4), Ok(true));
        assert_eq!(construct_qn_edge_set(3).unwrap().edges.len(), 2);
        assert_eq!(construct_qn_edge_set(5).unwrap().edges.len(), 3);
        assert!(construct_qn_edge_set(2).is_err());
    }

    #[test]
    fn q4_report() {
        let r = q4_open_question_check().unwrap();
        assert!(r.passed(), "{:?}", r.assertions());
        assert_eq!(r.det, 3);
        assert_eq!(r.det_prime, 2);
    }
}
