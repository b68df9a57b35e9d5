//! Closed-form `det` and `det'` for graph families, and the integer
//! arithmetic behind the hypercube regimes.

use alloc::format;
use core::fmt;

use crate::error::{Error, Result};
use crate::graph::{complete, complete_bipartite, cycle, empty, hypercube, join, path, star, Graph};

/// `⌈log2 n⌉` for `n >= 1`, by bit length.
pub fn ceil_log2(n: u64) -> u32 {
    assert!(n >= 1, "ceil_log2 of 0");
    u64::BITS - (n - 1).leading_zeros()
}

fn at_least_three(n: u64) -> Result<()> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("needs n >= 3, got {n}")));
    }
    Ok(())
}

/// `det'(Q_n)` for `n >= 3`. With `k = ⌈log2 n⌉` the value is `k + 1` when
/// `n - k > 2^(k-1)` and `k` otherwise; the equivalent interval form
/// (`k` iff `2^(k-1) < n <= 2^(k-1) + k`) is evaluated as a cross-check.
pub fn qn_det_index(n: u64) -> Result<u64> {
    at_least_three(n)?;
    let k = ceil_log2(n) as u64;
    let half = 1u64 << (k - 1);
    let threshold_form = if n - k > half { k + 1 } else { k };
    let interval_form = if half < n && n <= half + k { k } else { k + 1 };
    if threshold_form != interval_form {
        return Err(Error::Invariant(format!(
            "regime forms disagree at n = {n}: {threshold_form} vs {interval_form}"
        )));
    }
    Ok(threshold_form)
}

/// `2^(k-1) < n` and `n <= 2 (n - k + 1)` with `k = ⌈log2 n⌉`, i.e. both
/// halves of `2^(k-2) < n/2 <= n - k + 1` cleared of fractions. False for
/// `n < 3`, where the statement is not claimed.
pub fn appendix_inequality_holds(n: u64) -> bool {
    if n < 3 {
        return false;
    }
    let k = ceil_log2(n) as u64;
    (1u64 << (k - 1)) < n && n <= 2 * (n - k + 1)
}

/// One row of the `n - ⌈log2 n⌉` versus `2^(⌈log2 n⌉-1)` comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeriesRow {
    pub n: u64,
    pub excess: u64,
    pub threshold: u64,
}

impl SeriesRow {
    pub fn new(n: u64) -> Self {
        let k = ceil_log2(n) as u64;
        SeriesRow { n, excess: n - k, threshold: 1 << (k - 1) }
    }

    /// The first series exceeds the second, so `det'(Q_n) = ⌈log2 n⌉ + 1`.
    pub fn upper_regime(&self) -> bool {
        self.excess > self.threshold
    }
}

/// Rows for `n = 3..=max_n`.
pub fn comparison_series(max_n: u64) -> Result<alloc::vec::Vec<SeriesRow>> {
    at_least_three(max_n)?;
    Ok((3..=max_n).map(SeriesRow::new).collect())
}

/// CSV with header `n,excess,threshold` and `\n` line endings.
pub fn write_series_csv(rows: &[SeriesRow], out: &mut impl fmt::Write) -> fmt::Result {
    out.write_str("n,excess,threshold\n")?;
    for r in rows {
        writeln!(out, "{},{},{}", r.n, r.excess, r.threshold)?;
    }
    Ok(())
}

/// A member of a family with a known formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    /// `K_{1,n}`.
    Star(usize),
    Complete(usize),
    /// `K_{n,m}`; the parameters may come in either order.
    CompleteBipartite(usize, usize),
    Hypercube(usize),
    /// `N_{n+1} + K_{n+1}`.
    JoinNK(usize),
    Tree(Graph),
}

impl FamilySpec {
    pub fn graph(&self) -> Result<Graph> {
        match self {
            FamilySpec::Path(n) => path(*n),
            FamilySpec::Cycle(n) => cycle(*n),
            FamilySpec::Star(n) => star(*n),
            FamilySpec::Complete(n) => complete(*n),
            FamilySpec::CompleteBipartite(n, m) => complete_bipartite(*n, *m),
            FamilySpec::Hypercube(n) => hypercube(*n),
            FamilySpec::JoinNK(n) => {
                if *n == 0 {
                    return Err(Error::InvalidParameter("join family needs n >= 1".into()));
                }
                Ok(join(&empty(n + 1)?, &complete(n + 1)?).with_name(format!("N{0}+K{0}", n + 1)))
            }
            FamilySpec::Tree(g) => {
                if !g.is_tree() {
                    return Err(Error::NotATree);
                }
                Ok(g.clone())
            }
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path {n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle {n}"),
            FamilySpec::Star(n) => write!(f, "star {n}"),
            FamilySpec::Complete(n) => write!(f, "complete {n}"),
            FamilySpec::CompleteBipartite(n, m) => write!(f, "complete-bipartite {n} {m}"),
            FamilySpec::Hypercube(n) => write!(f, "hypercube {n}"),
            FamilySpec::JoinNK(n) => write!(f, "join-nk {n}"),
            FamilySpec::Tree(g) => write!(f, "tree on {} vertices", g.n()),
        }
    }
}

/// Formula values; `None` where no formula applies (e.g. `det'` of `K_2`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prediction {
    pub det: Option<usize>,
    pub det_prime: Option<usize>,
    pub source: &'static str,
}

fn invalid(spec: &FamilySpec, why: &str) -> Error {
    Error::InvalidParameter(format!("{spec}: {why}"))
}

/// Closed-form values for `spec`. Trees are the exception: `det` is
/// computed by exhaustive search and `det'` is reported equal to it.
pub fn predict(spec: &FamilySpec) -> Result<Prediction> {
    let p = |det, det_prime, source| Ok(Prediction { det, det_prime, source });
    match *spec {
        FamilySpec::Path(n) => {
            if n < 2 {
                return Err(invalid(spec, "needs n >= 2"));
            }
            p(Some(1), (n > 2).then_some(1), "paths: det = 1; det' = 1 for n > 2")
        }
        FamilySpec::Cycle(n) => {
            if n < 3 {
                return Err(invalid(spec, "needs n >= 3"));
            }
            p(Some(2), Some(2), "cycles: det = det' = 2")
        }
        FamilySpec::Star(n) => {
            if n < 2 {
                return Err(invalid(spec, "needs n >= 2"));
            }
            p(Some(n - 1), Some(n - 1), "stars K_{1,n}: det = det' = n - 1")
        }
        FamilySpec::Complete(n) => {
            if n < 2 {
                return Err(invalid(spec, "needs n >= 2"));
            }
            p(Some(n - 1), (n > 2).then_some(2 * n / 3), "complete graphs: det = n - 1; det' = floor(2n/3) for n > 2")
        }
        FamilySpec::CompleteBipartite(a, b) => {
            let (n, m) = (a.max(b), a.min(b));
            if m < 2 {
                return Err(invalid(spec, "needs both parts of size >= 2"));
            }
            let det_prime = if n == m { n } else { n - 1 };
            p(Some(n + m - 2), Some(det_prime), "complete bipartite K_{n,m}, n >= m > 1: det = n + m - 2; det' = n - 1 (n != m) or n (n = m)")
        }
        FamilySpec::Hypercube(n) => {
            if n < 1 {
                return Err(invalid(spec, "needs n >= 1"));
            }
            let det = ceil_log2(n as u64) as usize + 1;
            let det_prime = match n {
                1 => None,
                2 => Some(2),
                _ => Some(qn_det_index(n as u64)? as usize),
            };
            p(Some(det), det_prime, "hypercubes: det = ceil(log2 n) + 1; det' from the regime of n - ceil(log2 n) against 2^(ceil(log2 n) - 1)")
        }
        FamilySpec::JoinNK(n) => {
            if n < 1 {
                return Err(invalid(spec, "needs n >= 1"));
            }
            p(Some(2 * n), Some(n), "joins N_{n+1} + K_{n+1}: det = 2n, det' = n")
        }
        FamilySpec::Tree(ref g) => {
            if !g.is_tree() {
                return Err(Error::NotATree);
            }
            if g.n() < 3 {
                return Err(invalid(spec, "needs at least 3 vertices"));
            }
            let det = crate::determining::determining_number(g).value;
            p(Some(det), Some(det), "trees on 3+ vertices: det' = det (det by search)")
        }
    }
}
