//! Graph sources: inline graph6, a graph6 file, a family member or a fixture.

use std::fs;
use std::path::PathBuf;

use clap::Args;
use symbreak_core::families::FamilySpec;
use symbreak_core::graph::{empty, named_graph, parse_graph6};
use symbreak_core::{Graph, NamedGraphId};

use crate::error::{CliError, CliResult};

#[derive(Args, Debug, Clone, Default)]
#[group(required = true, multiple = false)]
pub struct InputArgs {
    /// Graph in graph6 format.
    #[arg(long, value_name = "G6")]
    pub graph6: Option<String>,
    /// File whose first non-empty line is a graph6 string.
    #[arg(long, value_name = "PATH")]
    pub file: Option<PathBuf>,
    /// Family member, e.g. `--family complete 6` or `--family complete-bipartite 3 2`.
    #[arg(long, num_args = 2..=3, value_names = ["KIND", "PARAMS"])]
    pub family: Option<Vec<String>>,
    /// Fixture graph: G1, G2, G3, G4, H or K4-e.
    #[arg(long, value_name = "NAME")]
    pub named: Option<String>,
}

impl InputArgs {
    pub fn load(&self) -> CliResult<Graph> {
        if let Some(text) = &self.graph6 {
            return Ok(parse_graph6(text)?);
        }
        if let Some(path) = &self.file {
            return read_graph6_file(path);
        }
        if let Some(words) = &self.family {
            return family_graph(&words.join(" "));
        }
        if let Some(name) = &self.named {
            return Ok(named_graph(name.parse::<NamedGraphId>()?));
        }
        Err(CliError::Usage("exactly one of --graph6, --file, --family, --named is required".into()))
    }
}

pub fn read_graph6_file(path: &PathBuf) -> CliResult<Graph> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Read { path: path.clone(), source })?;
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or_else(|| CliError::Parse(format!("{}: no graph6 line", path.display())))?;
    parse_graph6(line).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

/// A family member written as `KIND P1 [P2]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Formula(FamilySpec),
    /// `N_n`, which has no formula entry.
    Empty(usize),
}

impl Family {
    pub fn graph(&self) -> CliResult<Graph> {
        Ok(match self {
            Family::Formula(spec) => spec.graph()?.with_name(spec.to_string()),
            Family::Empty(n) => empty(*n)?.with_name(format!("empty {n}")),
        })
    }
}

pub const FAMILY_KINDS: &str = "path, cycle, star, complete, complete-bipartite, hypercube, join-nk, empty";

pub fn parse_family(text: &str) -> CliResult<Family> {
    let words: Vec<&str> = text.split_whitespace().collect();
    let Some((kind, rest)) = words.split_first() else {
        return Err(CliError::Usage("empty family spec".into()));
    };
    let params = rest
        .iter()
        .map(|w| w.parse::<usize>().map_err(|_| CliError::Usage(format!("family parameter `{w}` is not a number"))))
        .collect::<CliResult<Vec<usize>>>()?;
    let arity = if matches!(*kind, "complete-bipartite" | "complete_bipartite") { 2 } else { 1 };
    if params.len() != arity {
        return Err(CliError::Usage(format!("family `{kind}` takes {arity} parameter(s), got {}", params.len())));
    }
    let p = params[0];
    Ok(Family::Formula(match *kind {
        "path" => FamilySpec::Path(p),
        "cycle" => FamilySpec::Cycle(p),
        "star" => FamilySpec::Star(p),
        "complete" => FamilySpec::Complete(p),
        "complete-bipartite" | "complete_bipartite" => FamilySpec::CompleteBipartite(p, params[1]),
        "hypercube" => FamilySpec::Hypercube(p),
        "join-nk" | "join_nk" => FamilySpec::JoinNK(p),
        "empty" => return Ok(Family::Empty(p)),
        other => return Err(CliError::Usage(format!("unknown family `{other}` (expected one of {FAMILY_KINDS})"))),
    }))
}

pub fn family_graph(text: &str) -> CliResult<Graph> {
    parse_family(text)?.graph()
}

/// `0,2,5`, `{0, 2, 5}` or `0 2 5`.
pub fn parse_vertex_list(text: &str) -> CliResult<Vec<usize>> {
    tokens(text)
        .map(|t| t.parse::<usize>().map_err(|_| CliError::Usage(format!("`{t}` is not a vertex"))))
        .collect()
}

/// `0-1,2-3` or `{0-1, 2-3}`.
pub fn parse_edge_list(text: &str) -> CliResult<Vec<(usize, usize)>> {
    tokens(text)
        .map(|t| {
            let bad = || CliError::Usage(format!("`{t}` is not an edge (expected u-v)"));
            let (u, v) = t.split_once('-').ok_or_else(bad)?;
            Ok((u.trim().parse().map_err(|_| bad())?, v.trim().parse().map_err(|_| bad())?))
        })
        .collect()
}

fn tokens(text: &str) -> impl Iterator<Item = &str> {
    text.trim()
        .trim_start_matches('{')
        .trim_end_matches('}')
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families() {
        assert_eq!(family_graph("complete 6").unwrap().edge_count(), 15);
        assert_eq!(family_graph("complete-bipartite 3 2").unwrap().edge_count(), 6);
        assert_eq!(family_graph("join-nk 2").unwrap().edge_count(), 12);
        assert_eq!(family_graph("empty 3").unwrap().n(), 3);
        assert!(matches!(parse_family("cube 3"), Err(CliError::Usage(_))));
        assert!(matches!(parse_family("path"), Err(CliError::Usage(_))));
        assert!(matches!(parse_family("path x"), Err(CliError::Usage(_))));
        assert!(matches!(family_graph("cycle 2"), Err(CliError::Core(_))));
    }

    proptest::proptest! {
        #[test]
        fn printed_sets_parse_back(vs in proptest::collection::vec(0usize..50, 0..8), es in proptest::collection::vec((0usize..20, 0usize..20), 0..8)) {
            let s = symbreak_core::determining::VertexSet::new(vs);
            proptest::prop_assert_eq!(parse_vertex_list(&s.to_string()).unwrap(), s.members());
            let t = symbreak_core::determining::EdgeSet::from_pairs(es.into_iter().filter(|(u, v)| u != v));
            let pairs: Vec<(usize, usize)> = t.members().iter().map(|e| (e.u, e.v)).collect();
            proptest::prop_assert_eq!(parse_edge_list(&t.to_string()).unwrap(), pairs);
        }
    }

    #[test]
    fn sets() {
        assert_eq!(parse_vertex_list("{0, 2,5}").unwrap(), [0, 2, 5]);
        assert_eq!(parse_vertex_list("").unwrap(), Vec::<usize>::new());
        assert_eq!(parse_edge_list("0-1, 2-3").unwrap(), [(0, 1), (2, 3)]);
        assert!(parse_edge_list("0:1").is_err());
    }
}
