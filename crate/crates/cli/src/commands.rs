use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;
use serde::Serialize;
use symbreak_core::determining::*;
use symbreak_core::distinguishing::{self, distinguishing_index_with, distinguishing_number_with};
use symbreak_core::families::{comparison_series, predict, qn_det_index, write_series_csv};
use symbreak_core::hypercube::{construct_qn_edge_set, q4_open_question_check, Verification};
use symbreak_core::symmetry::*;
use symbreak_core::{Budget, Error as CoreError, Graph};

use crate::args::{BudgetLimit, Cli, Command, SeriesFormat};
use crate::error::{CliError, CliResult, EXIT_OK, EXIT_USAGE};
use crate::input::{parse_edge_list, parse_family, parse_vertex_list, Family};
use crate::manifest::{corpus_run, Manifest};
use crate::report::*;

/// Settings shared by all subcommands.
#[derive(Clone, Copy, Debug, Default)]
pub struct Context {
    pub budget: BudgetLimit,
    pub quiet: bool,
    pub threads: Option<usize>,
}

impl Context {
    fn budget(&self) -> Budget {
        self.budget.budget()
    }

    fn keep<T>(&self, value: T) -> Option<T> {
        (!self.quiet).then_some(value)
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code. Reports go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    let ctx = Context { budget: cli.budget.unwrap_or_default(), quiet: cli.quiet, threads: cli.threads.map(usize::from) };
    match execute(&cli.command, &ctx, out, err) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "symbreak: {e}");
            e.exit_code()
        }
    }
}

fn emit<T: Serialize>(out: &mut dyn Write, value: &T) -> CliResult<()> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(std::io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

pub fn execute(cmd: &Command, ctx: &Context, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<()> {
    match cmd {
        Command::Aut(input) => emit(out, &aut(&input.load()?, ctx)?),
        Command::Det(input) => emit(out, &det(&input.load()?, ctx)?),
        Command::DetIndex(input) => emit(out, &det_index(&input.load()?, ctx)?),
        Command::CheckVertexSet { input, set } => {
            let g = input.load()?;
            let s = VertexSet::new(parse_vertex_list(set)?);
            let determining = is_vertex_determining_with(&g, &s, &mut ctx.budget())?;
            emit(out, &CheckVertexSetReport { schema: SCHEMA, graph: GraphInfo::of(&g), set: vertices(&s), determining })
        }
        Command::CheckEdgeSet { input, set } => {
            let g = input.load()?;
            let t = EdgeSet::from_pairs(parse_edge_list(set)?);
            let determining = is_edge_determining_with(&g, &t, &mut ctx.budget())?;
            emit(out, &CheckEdgeSetReport { schema: SCHEMA, graph: GraphInfo::of(&g), set: edges(&t), determining })
        }
        Command::Props(input) => emit(out, &props(&input.load()?, ctx)?),
        Command::Bounds(input) => {
            let report = bounds(&input.load()?, ctx)?;
            emit(out, &report)?;
            let tree_ok = report.tree.as_ref().is_none_or(|t| t.holds);
            if report.bounds_ok && report.line_graph.holds && tree_ok {
                Ok(())
            } else {
                Err(CliError::Mismatch("bound check failed".into()))
            }
        }
        Command::Family { kind, params } => {
            let report = family(&format!("{kind} {}", params.join(" ")), ctx)?;
            emit(out, &report)?;
            if report.agree {
                Ok(())
            } else {
                Err(CliError::Mismatch(format!("{}: formula and search disagree", report.family)))
            }
        }
        Command::QnConstruct { n } => emit(out, &qn_construct(*n, ctx)?),
        Command::Q4Check => {
            let report = q4_check(ctx)?;
            emit(out, &report)?;
            for a in report.assertions.iter().filter(|a| !a.ok) {
                writeln!(err, "failed: {}", a.name)?;
            }
            if report.passed {
                Ok(())
            } else {
                Err(CliError::Mismatch("Q_4 check failed".into()))
            }
        }
        Command::Series { max, format } => {
            let rows = comparison_series(*max)?;
            match format {
                SeriesFormat::Csv => {
                    let mut text = String::new();
                    write_series_csv(&rows, &mut text).expect("writing to a String");
                    out.write_all(text.as_bytes())?;
                    Ok(())
                }
                SeriesFormat::Json => {
                    let rows = rows
                        .iter()
                        .map(|r| {
                            Ok(SeriesRowJson {
                                n: r.n,
                                excess: r.excess,
                                threshold: r.threshold,
                                det_prime: qn_det_index(r.n)?,
                            })
                        })
                        .collect::<Result<_, CoreError>>()?;
                    emit(out, &SeriesJson { schema: SCHEMA, rows })
                }
            }
        }
        Command::Corpus { manifest } => {
            let entries = Manifest::load(manifest)?;
            let report = match ctx.threads {
                Some(t) => rayon::ThreadPoolBuilder::new()
                    .num_threads(t)
                    .build()
                    .map_err(|e| CliError::Usage(format!("cannot start {t} threads: {e}")))?
                    .install(|| corpus_run(&entries, ctx.budget)),
                None => corpus_run(&entries, ctx.budget),
            };
            emit(out, &report)?;
            for line in report.diff_lines() {
                writeln!(err, "{line}")?;
            }
            if report.mismatches == 0 {
                Ok(())
            } else {
                Err(CliError::Mismatch(format!("{} of {} checks failed", report.mismatches, report.checked)))
            }
        }
    }
}

pub fn aut(g: &Graph, ctx: &Context) -> CliResult<AutReport> {
    let group = automorphisms_with(g, &FixConstraint::default(), &mut ctx.budget())?;
    let orbits = vertex_orbits(&group);
    Ok(AutReport {
        schema: SCHEMA,
        graph: GraphInfo::of(g),
        order: group.order.to_string(),
        generators: ctx.keep(group.generators.iter().map(ToString::to_string).collect()),
        base: group.base.clone(),
        orbit_count: orbits.len(),
        vertex_orbits: ctx.keep(orbits),
    })
}

pub fn det(g: &Graph, ctx: &Context) -> CliResult<DetReport> {
    let r = determining_number_with(g, &mut ctx.budget())?;
    Ok(DetReport {
        schema: SCHEMA,
        graph: GraphInfo::of(g),
        det: r.value,
        witness: ctx.keep(r.vertex_witness().map(vertices).unwrap_or_default()),
    })
}

pub fn det_index(g: &Graph, ctx: &Context) -> CliResult<DetIndexReport> {
    let r = determining_index_with(g, &mut ctx.budget())?;
    Ok(DetIndexReport {
        schema: SCHEMA,
        graph: GraphInfo::of(g),
        det_prime: r.value,
        witness: ctx.keep(r.edge_witness().map(edges).unwrap_or_default()),
    })
}

pub fn props(g: &Graph, ctx: &Context) -> CliResult<PropsReport> {
    let mut budget = ctx.budget();
    let mut notes = Vec::new();
    let connected = g.is_connected();
    let mut neighbor_swapping = Vec::new();
    for v in 0..g.n() {
        if has_neighbor_swapping_with(g, v, &mut budget)? {
            neighbor_swapping.push(v);
        }
    }
    let defined = match check_index_defined(g) {
        Ok(()) => true,
        Err(e) => {
            notes.push(e.to_string());
            false
        }
    };
    let dist = if g.n() <= distinguishing::MAX_VERTICES {
        Some(distinguishing_number_with(g, &mut budget)?.value)
    } else {
        notes.push(format!("dist skipped: more than {} vertices", distinguishing::MAX_VERTICES));
        None
    };
    let dist_prime = if !defined {
        None
    } else if g.edge_count() <= distinguishing::MAX_EDGES {
        Some(distinguishing_index_with(g, &mut budget)?.value)
    } else {
        notes.push(format!("dist' skipped: more than {} edges", distinguishing::MAX_EDGES));
        None
    };
    Ok(PropsReport {
        schema: SCHEMA,
        graph: GraphInfo::of(g),
        connected,
        components: g.connected_components().len(),
        vertex_transitive: is_vertex_transitive(g),
        edge_transitive: is_edge_transitive(g),
        arc_transitive: is_arc_transitive(g),
        efi: is_edge_flip_invariant_with(g, &mut budget)?,
        neighbor_swapping,
        twins: find_twins(g)
            .into_iter()
            .map(|t| TwinReport { u: t.u, v: t.v, adjacent: t.kind == TwinKind::Adjacent })
            .collect(),
        tree_center: g.is_tree().then(|| g.tree_center()).transpose()?,
        det_prime_defined: defined,
        dist,
        dist_prime,
        notes,
    })
}

pub fn bounds(g: &Graph, ctx: &Context) -> CliResult<BoundsJson> {
    let mut budget = ctx.budget();
    let report = check_bounds_with(g, &mut budget)?;
    let line = line_graph_transfer_check_with(g, &mut budget)?;
    let tree = if g.is_tree() { Some(tree_det_check_with(g, &mut budget)?) } else { None };
    let mut notes = Vec::new();
    if report.det.value == 1 {
        notes.push("det = 1: det' is 2 exactly when the graph is edge-flip-invariant".to_string());
    }
    if let Some(id) = line.exception {
        notes.push(format!("isomorphic to {id}, where det' and det(L) differ"));
    }
    Ok(BoundsJson {
        schema: SCHEMA,
        graph: GraphInfo::of(g),
        det: report.det.value,
        det_prime: report.det_prime.value,
        witnesses: ctx.keep(Witnesses {
            det: report.det.vertex_witness().map(vertices).unwrap_or_default(),
            det_prime: report.det_prime.edge_witness().map(edges).unwrap_or_default(),
        }),
        efi: report.efi,
        bounds_ok: report.holds,
        line_graph: LineGraphReport {
            det_prime: line.det_prime,
            det_line: line.det_line,
            exception: line.exception.map(|id| id.to_string()),
            holds: line.holds,
        },
        tree: tree.map(|t| TreeSection {
            root: t.root,
            far_endpoints: vertices(&t.far_endpoints),
            far_endpoints_determining: t.far_endpoints_determining,
            holds: t.holds,
        }),
        notes,
    })
}

pub fn family(text: &str, ctx: &Context) -> CliResult<FamilyReport> {
    let spec = match parse_family(text)? {
        Family::Formula(spec) => spec,
        Family::Empty(_) => return Err(CliError::Usage("no formula for the empty family".into())),
    };
    let g = spec.graph()?.with_name(spec.to_string());
    let prediction = predict(&spec)?;
    let mut budget = ctx.budget();
    let det = determining_number_with(&g, &mut budget)?.value;
    let det_prime = match determining_index_by_search_with(&g, &mut budget) {
        Ok(r) => Some(r.value),
        Err(CoreError::UndefinedDeterminingIndex(_)) => None,
        Err(e) => return Err(e.into()),
    };
    let predicted = Values { det: prediction.det, det_prime: prediction.det_prime };
    let computed = Values { det: Some(det), det_prime };
    Ok(FamilyReport {
        schema: SCHEMA,
        family: spec.to_string(),
        graph: GraphInfo::of(&g),
        formula: prediction.source.to_string(),
        agree: predicted == computed,
        predicted,
        computed,
    })
}

pub fn qn_construct(n: usize, ctx: &Context) -> CliResult<QnReport> {
    let c = construct_qn_edge_set(n)?;
    Ok(QnReport {
        schema: SCHEMA,
        n,
        det_prime: c.edges.len(),
        y: ctx.keep(c.y.row_strings()),
        x: ctx.keep(c.x.row_strings()),
        edges: edges(&c.edges),
        verification: match c.verification {
            Verification::Stabilizer => "stabilizer",
            Verification::MatrixAndDistance => "matrix-and-distance",
        },
    })
}

pub fn q4_check(ctx: &Context) -> CliResult<Q4Json> {
    let r = q4_open_question_check()?;
    Ok(Q4Json {
        schema: SCHEMA,
        edges: r.edges.members().iter().map(pair).collect(),
        endpoints: r.endpoints.clone(),
        endpoint_matrix: ctx.keep(r.endpoint_matrix.row_strings()),
        det: r.det,
        det_prime: r.det_prime,
        triples: r
            .triples
            .iter()
            .map(|t| TripleJson {
                vertices: t.vertices.clone(),
                matrix: ctx.keep(t.matrix.row_strings()),
                isomorphic_columns: t.isomorphic_columns.map(|(a, b)| [a, b]),
            })
            .collect(),
        assertions: r.assertions().iter().map(|&(name, ok)| Assertion { name, ok }).collect(),
        passed: r.passed(),
    })
}

