//! TOML manifests of graphs with expected values, and the corpus runner.
//!
//! ```toml
//! [[entry]]
//! name = "K6"
//! family = "complete 6"
//! det = 5
//! det_prime = 4
//! ```
//!
//! Each entry names its graph with exactly one of `family`, `graph6`,
//! `named` or `union` (a list of family specs). Expected values are optional;
//! `det_prime` and `dist_prime` may be `"undefined"`.

use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use symbreak_core::determining::{determining_index_with, determining_number_with};
use symbreak_core::distinguishing::{distinguishing_index_with, distinguishing_number_with};
use symbreak_core::graph::{disjoint_union, line_graph, named_graph, parse_graph6};
use symbreak_core::symmetry::{automorphisms_with, is_edge_flip_invariant_with, FixConstraint};
use symbreak_core::{Budget, Error as CoreError, Graph, NamedGraphId};

use crate::args::BudgetLimit;
use crate::error::{CliError, CliResult};
use crate::input::family_graph;
use crate::report::{GraphInfo, SCHEMA};

#[derive(Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(untagged)]
pub enum Count {
    Value(usize),
    Word(String),
}

impl Count {
    fn render(&self) -> String {
        match self {
            Count::Value(v) => v.to_string(),
            Count::Word(w) => w.clone(),
        }
    }
}

#[derive(Deserialize, Debug, Clone, Default)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub name: String,
    pub family: Option<String>,
    pub graph6: Option<String>,
    pub named: Option<String>,
    pub union: Option<Vec<String>>,
    pub det: Option<usize>,
    pub det_prime: Option<Count>,
    /// `det(L(G))`.
    pub det_line: Option<usize>,
    pub dist: Option<usize>,
    pub dist_prime: Option<Count>,
    pub efi: Option<bool>,
    /// Automorphism group order.
    pub order: Option<u64>,
    /// Free-form description of where the expected values come from.
    pub note: Option<String>,
}

#[derive(Deserialize, Debug, Clone, Default)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    #[serde(default)]
    pub entry: Vec<Entry>,
}

/// A manifest entry with its graph built.
#[derive(Debug, Clone)]
pub struct LoadedEntry {
    pub entry: Entry,
    pub graph: Graph,
}

impl Entry {
    fn graph(&self) -> Result<Graph, String> {
        let sources = [self.family.is_some(), self.graph6.is_some(), self.named.is_some(), self.union.is_some()];
        if sources.iter().filter(|&&s| s).count() != 1 {
            return Err("needs exactly one of family, graph6, named, union".into());
        }
        let g = if let Some(f) = &self.family {
            family_graph(f).map_err(|e| e.to_string())?
        } else if let Some(text) = &self.graph6 {
            parse_graph6(text).map_err(|e| e.to_string())?
        } else if let Some(name) = &self.named {
            named_graph(name.parse::<NamedGraphId>().map_err(|e| e.to_string())?)
        } else {
            let parts = self.union.as_deref().unwrap_or_default();
            let graphs = parts.iter().map(|p| family_graph(p).map_err(|e| e.to_string())).collect::<Result<Vec<_>, _>>()?;
            disjoint_union(&graphs).map_err(|e| e.to_string())?
        };
        for (field, value) in [("det_prime", &self.det_prime), ("dist_prime", &self.dist_prime)] {
            if let Some(Count::Word(w)) = value {
                if w != "undefined" {
                    return Err(format!("{field} must be a number or \"undefined\", got \"{w}\""));
                }
            }
        }
        Ok(g.with_name(self.name.clone()))
    }
}

impl Manifest {
    pub fn parse(text: &str, path: &Path) -> CliResult<Vec<LoadedEntry>> {
        let manifest: Manifest =
            toml::from_str(text).map_err(|e| CliError::Manifest { path: path.to_path_buf(), message: e.to_string() })?;
        manifest
            .entry
            .into_iter()
            .map(|entry| match entry.graph() {
                Ok(graph) => Ok(LoadedEntry { entry, graph }),
                Err(message) => Err(CliError::Manifest {
                    path: path.to_path_buf(),
                    message: format!("entry `{}`: {message}", entry.name),
                }),
            })
            .collect()
    }

    pub fn load(path: &PathBuf) -> CliResult<Vec<LoadedEntry>> {
        let text = fs::read_to_string(path).map_err(|source| CliError::Read { path: path.clone(), source })?;
        Manifest::parse(&text, path)
    }
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub quantity: &'static str,
    pub expected: String,
    pub actual: String,
    pub ok: bool,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct EntryOutcome {
    pub name: String,
    pub graph: GraphInfo,
    pub checks: Vec<Check>,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct CorpusReport {
    pub schema: u32,
    pub entries: Vec<EntryOutcome>,
    pub checked: usize,
    pub mismatches: usize,
}

impl CorpusReport {
    /// One line per failed check.
    pub fn diff_lines(&self) -> Vec<String> {
        self.entries
            .iter()
            .flat_map(|e| {
                e.checks.iter().filter(|c| !c.ok).map(move |c| {
                    format!("mismatch: {}: {} expected {}, got {}", e.name, c.quantity, c.expected, c.actual)
                })
            })
            .collect()
    }
}

fn render<T: ToString>(r: Result<T, CoreError>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(CoreError::UndefinedDeterminingIndex(_)) => "undefined".into(),
        Err(CoreError::BudgetExhausted { .. }) => "unknown".into(),
        Err(e) => format!("error ({e})"),
    }
}

fn run_entry(item: &LoadedEntry, limit: BudgetLimit) -> EntryOutcome {
    let (e, g) = (&item.entry, &item.graph);
    let mut checks = Vec::new();
    let mut check = |quantity, expected: String, compute: &dyn Fn(&mut Budget) -> String| {
        let actual = compute(&mut limit.budget());
        checks.push(Check { quantity, ok: actual == expected, expected, actual });
    };
    if let Some(v) = e.det {
        check("det", v.to_string(), &|b| render(determining_number_with(g, b).map(|r| r.value)));
    }
    if let Some(v) = &e.det_prime {
        check("det_prime", v.render(), &|b| render(determining_index_with(g, b).map(|r| r.value)));
    }
    if let Some(v) = e.det_line {
        check("det_line", v.to_string(), &|b| {
            render(line_graph(g).and_then(|l| determining_number_with(&l, b)).map(|r| r.value))
        });
    }
    if let Some(v) = e.dist {
        check("dist", v.to_string(), &|b| render(distinguishing_number_with(g, b).map(|r| r.value)));
    }
    if let Some(v) = &e.dist_prime {
        check("dist_prime", v.render(), &|b| render(distinguishing_index_with(g, b).map(|r| r.value)));
    }
    if let Some(v) = e.efi {
        check("efi", v.to_string(), &|b| render(is_edge_flip_invariant_with(g, b)));
    }
    if let Some(v) = e.order {
        check("order", v.to_string(), &|b| render(automorphisms_with(g, &FixConstraint::default(), b).map(|a| a.order)));
    }
    EntryOutcome { name: e.name.clone(), graph: GraphInfo::of(g), checks }
}

/// Evaluates every entry, in parallel when a pool is active; the report
/// keeps manifest order.
pub fn corpus_run(entries: &[LoadedEntry], limit: BudgetLimit) -> CorpusReport {
    let outcomes: Vec<EntryOutcome> = entries.par_iter().map(|item| run_entry(item, limit)).collect();
    let checked = outcomes.iter().map(|o| o.checks.len()).sum();
    let mismatches = outcomes.iter().flat_map(|o| &o.checks).filter(|c| !c.ok).count();
    CorpusReport { schema: SCHEMA, entries: outcomes, checked, mismatches }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn load(text: &str) -> CliResult<Vec<LoadedEntry>> {
        Manifest::parse(text, Path::new("test.toml"))
    }

    #[test]
    fn empty_manifest_passes() {
        let report = corpus_run(&load("").unwrap(), BudgetLimit::default());
        assert_eq!((report.checked, report.mismatches), (0, 0));
    }

    #[test]
    fn wrong_value_gives_one_diff_line() {
        let entries = load(
            r#"
            [[entry]]
            name = "K6"
            family = "complete 6"
            det = 5
            det_prime = 3
            "#,
        )
        .unwrap();
        let report = corpus_run(&entries, BudgetLimit::default());
        assert_eq!(report.mismatches, 1);
        assert_eq!(report.diff_lines(), ["mismatch: K6: det_prime expected 3, got 4"]);
    }

    #[test]
    fn undefined_and_unions() {
        let entries = load(
            r#"
            [[entry]]
            name = "2K2"
            union = ["complete 2", "complete 2"]
            det_prime = "undefined"
            dist_prime = "undefined"

            [[entry]]
            name = "K5+K1"
            union = ["complete 5", "empty 1"]
            det = 4
            det_prime = 3
            "#,
        )
        .unwrap();
        let report = corpus_run(&entries, BudgetLimit::default());
        assert_eq!(report.mismatches, 0, "{:?}", report.diff_lines());
        assert_eq!(report.checked, 4);
    }

    #[test]
    fn malformed_entries_are_rejected() {
        for text in [
            "[[entry]]\nname = \"x\"\n",
            "[[entry]]\nname = \"x\"\nfamily = \"path 3\"\nnamed = \"G1\"\n",
            "[[entry]]\nname = \"x\"\ngraph6 = \"A`\"\n",
            "[[entry]]\nname = \"x\"\nfamily = \"path 3\"\ndet_prime = \"many\"\n",
            "[[entry]]\nname = \"x\"\nfamily = \"path 3\"\ncolour = 2\n",
            "not toml [",
        ] {
            assert!(matches!(load(text), Err(CliError::Manifest { .. })), "{text}");
        }
    }

    #[test]
    fn budget_exhaustion_is_unknown() {
        let entries = load("[[entry]]\nname = \"Q4\"\nfamily = \"hypercube 4\"\ndet = 3\n").unwrap();
        let report = corpus_run(&entries, BudgetLimit::Nodes(3));
        assert_eq!(report.entries[0].checks[0].actual, "unknown");
    }
}
