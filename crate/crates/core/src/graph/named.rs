use core::fmt;
use core::str::FromStr;

use alloc::format;

use super::Graph;
use crate::error::Error;

/// Small fixture graphs. Ids are 0-based; drawings labeled from 1 are
/// shifted down by one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NamedGraphId {
    /// Triangle `{1, 2, 3}` with pendant vertex `0` on `1` (the paw).
    G1,
    /// `K_4` minus the edge `{0, 3}`.
    G2,
    /// `K_4`.
    G3,
    /// Bipartite cubic graph on 18 vertices (parts `0..9` and `9..18`) with
    /// `det = 1` that is edge-flip-invariant.
    G4,
    /// The "envelope": a triangular prism on 6 vertices.
    EnvelopeH,
    /// `K_4 - e` drawn as `N_2 + K_2`; same edge set as [`NamedGraphId::G2`].
    K4MinusE,
}

impl NamedGraphId {
    pub const ALL: [NamedGraphId; 6] = [
        NamedGraphId::G1,
        NamedGraphId::G2,
        NamedGraphId::G3,
        NamedGraphId::G4,
        NamedGraphId::EnvelopeH,
        NamedGraphId::K4MinusE,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            NamedGraphId::G1 => "G1",
            NamedGraphId::G2 => "G2",
            NamedGraphId::G3 => "G3",
            NamedGraphId::G4 => "G4",
            NamedGraphId::EnvelopeH => "H",
            NamedGraphId::K4MinusE => "K4-e",
        }
    }

    fn edges(&self) -> (usize, &'static [(usize, usize)]) {
        match self {
            NamedGraphId::G1 => (4, &[(0, 1), (1, 2), (1, 3), (2, 3)]),
            NamedGraphId::G2 | NamedGraphId::K4MinusE => {
                (4, &[(0, 1), (1, 2), (2, 3), (0, 2), (1, 3)])
            }
            NamedGraphId::G3 => (4, &[(0, 1), (1, 2), (1, 3), (0, 3), (0, 2), (2, 3)]),
            NamedGraphId::EnvelopeH => (
                6,
                &[(0, 1), (1, 2), (2, 3), (0, 3), (4, 5), (2, 4), (3, 5), (0, 5), (1, 4)],
            ),
            NamedGraphId::G4 => (18, G4_EDGES),
        }
    }
}

const G4_EDGES: &[(usize, usize)] = &[
    (0, 9),
    (0, 17),
    (0, 15),
    (1, 9),
    (1, 10),
    (1, 16),
    (2, 10),
    (2, 17),
    (2, 11),
    (3, 9),
    (3, 11),
    (3, 12),
    (4, 10),
    (4, 12),
    (4, 13),
    (5, 13),
    (5, 14),
    (5, 11),
    (6, 14),
    (6, 15),
    (6, 12),
    (7, 13),
    (7, 15),
    (7, 16),
    (8, 14),
    (8, 16),
    (8, 17),
];

impl fmt::Display for NamedGraphId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for NamedGraphId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        NamedGraphId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .or(match s {
                "envelope" | "EnvelopeH" => Some(NamedGraphId::EnvelopeH),
                "K4MinusE" | "k4-e" | "k4minuse" => Some(NamedGraphId::K4MinusE),
                _ => None,
            })
            .ok_or_else(|| Error::InvalidParameter(format!("unknown named graph `{s}`")))
    }
}

/// The fixture graph for `id`.
pub fn named_graph(id: NamedGraphId) -> Graph {
    let (n, edges) = id.edges();
    Graph::from_edges(n, edges.iter().copied())
        .expect("fixture edge lists are valid")
        .with_name(id.as_str())
}
