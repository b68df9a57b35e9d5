//! JSON report types. Every report starts with `"schema": 1`.

use serde::Serialize;
use symbreak_core::determining::{EdgeSet, VertexSet};
use symbreak_core::graph::write_graph6;
use symbreak_core::{Edge, Graph};

pub const SCHEMA: u32 = 1;

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct GraphInfo {
    pub label: String,
    pub n: usize,
    pub m: usize,
    pub graph6: String,
}

impl GraphInfo {
    pub fn of(g: &Graph) -> Self {
        GraphInfo {
            label: g.label(),
            n: g.n(),
            m: g.edge_count(),
            graph6: write_graph6(g).unwrap_or_default(),
        }
    }
}

pub fn vertices(s: &VertexSet) -> Vec<usize> {
    s.members().to_vec()
}

pub fn edges(t: &EdgeSet) -> Vec<[usize; 2]> {
    t.members().iter().map(pair).collect()
}

pub fn pair(e: &Edge) -> [usize; 2] {
    [e.u, e.v]
}

#[derive(Serialize, Debug)]
pub struct AutReport {
    pub schema: u32,
    pub graph: GraphInfo,
    /// Exact decimal order.
    pub order: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<String>>,
    pub base: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex_orbits: Option<Vec<Vec<usize>>>,
    pub orbit_count: usize,
}

#[derive(Serialize, Debug)]
pub struct DetReport {
    pub schema: u32,
    pub graph: GraphInfo,
    pub det: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
}

#[derive(Serialize, Debug)]
pub struct DetIndexReport {
    pub schema: u32,
    pub graph: GraphInfo,
    pub det_prime: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<[usize; 2]>>,
}

#[derive(Serialize, Debug)]
pub struct CheckVertexSetReport {
    pub schema: u32,
    pub graph: GraphInfo,
    pub set: Vec<usize>,
    pub determining: bool,
}

#[derive(Serialize, Debug)]
pub struct CheckEdgeSetReport {
    pub schema: u32,
    pub graph: GraphInfo,
    pub set: Vec<[usize; 2]>,
    pub determining: bool,
}

#[derive(Serialize, Debug)]
pub struct TwinReport {
    pub u: usize,
    pub v: usize,
    pub adjacent: bool,
}

#[derive(Serialize, Debug)]
pub struct PropsReport {
    pub schema: u32,
    pub graph: GraphInfo,
    pub connected: bool,
    pub components: usize,
    pub vertex_transitive: bool,
    pub edge_transitive: bool,
    pub arc_transitive: bool,
    pub efi: bool,
    /// Vertices with the neighbor-swapping property.
    pub neighbor_swapping: Vec<usize>,
    pub twins: Vec<TwinReport>,
    pub tree_center: Option<Vec<usize>>,
    pub det_prime_defined: bool,
    pub dist: Option<usize>,
    pub dist_prime: Option<usize>,
    pub notes: Vec<String>,
}

#[derive(Serialize, Debug)]
pub struct Witnesses {
    pub det: Vec<usize>,
    pub det_prime: Vec<[usize; 2]>,
}

#[derive(Serialize, Debug)]
pub struct LineGraphReport {
    pub det_prime: usize,
    pub det_line: usize,
    pub exception: Option<String>,
    pub holds: bool,
}

#[derive(Serialize, Debug)]
pub struct TreeSection {
    pub root: usize,
    pub far_endpoints: Vec<usize>,
    pub far_endpoints_determining: bool,
    pub holds: bool,
}

#[derive(Serialize, Debug)]
pub struct BoundsJson {
    pub schema: u32,
    pub graph: GraphInfo,
    pub det: usize,
    pub det_prime: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Witnesses>,
    /// Only evaluated when `det = 1`.
    pub efi: Option<bool>,
    pub bounds_ok: bool,
    pub line_graph: LineGraphReport,
    pub tree: Option<TreeSection>,
    pub notes: Vec<String>,
}

#[derive(Serialize, Debug, PartialEq, Eq)]
pub struct Values {
    pub det: Option<usize>,
    pub det_prime: Option<usize>,
}

#[derive(Serialize, Debug)]
pub struct FamilyReport {
    pub schema: u32,
    pub family: String,
    pub graph: GraphInfo,
    pub formula: String,
    pub predicted: Values,
    pub computed: Values,
    pub agree: bool,
}

#[derive(Serialize, Debug)]
pub struct QnReport {
    pub schema: u32,
    pub n: usize,
    pub det_prime: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<Vec<String>>,
    pub edges: Vec<[usize; 2]>,
    pub verification: &'static str,
}

#[derive(Serialize, Debug)]
pub struct Assertion {
    pub name: &'static str,
    pub ok: bool,
}

#[derive(Serialize, Debug)]
pub struct TripleJson {
    pub vertices: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<String>>,
    pub isomorphic_columns: Option<[usize; 2]>,
}

#[derive(Serialize, Debug)]
pub struct Q4Json {
    pub schema: u32,
    pub edges: Vec<[usize; 2]>,
    pub endpoints: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub endpoint_matrix: Option<Vec<String>>,
    pub det: usize,
    pub det_prime: usize,
    pub triples: Vec<TripleJson>,
    pub assertions: Vec<Assertion>,
    pub passed: bool,
}

#[derive(Serialize, Debug)]
pub struct SeriesJson {
    pub schema: u32,
    pub rows: Vec<SeriesRowJson>,
}

#[derive(Serialize, Debug)]
pub struct SeriesRowJson {
    pub n: u64,
    pub excess: u64,
    pub threshold: u64,
    pub det_prime: u64,
}
