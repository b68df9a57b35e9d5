//! Closed-form family values against exhaustive search.

use symbreak_core::determining::{determining_index_by_search, determining_number};
use symbreak_core::families::*;
use symbreak_core::graph::path;
use symbreak_core::oracle;

fn check(spec: FamilySpec) {
    let g = spec.graph().unwrap();
    let p = predict(&spec).unwrap();
    assert_eq!(p.det, Some(determining_number(&g).value), "det of {spec}");
    let searched = determining_index_by_search(&g).ok().map(|r| r.value);
    assert_eq!(p.det_prime, searched, "det' of {spec}");
    if g.n() <= 7 {
        assert_eq!(p.det, Some(oracle::det(&g)), "oracle det of {spec}");
        assert_eq!(p.det_prime, oracle::det_prime(&g), "oracle det' of {spec}");
    }
}

#[test]
fn paths_cycles_and_stars() {
    for n in 3..=8 {
        check(FamilySpec::Path(n));
        check(FamilySpec::Cycle(n));
    }
    for n in 2..=6 {
        check(FamilySpec::Star(n));
    }
}

#[test]
fn complete_graphs() {
    let expected = [2, 2, 3, 4, 4, 5];
    for (n, want) in (3..=8).zip(expected) {
        assert_eq!(predict(&FamilySpec::Complete(n)).unwrap().det_prime, Some(want));
        check(FamilySpec::Complete(n));
    }
}

#[test]
fn complete_bipartite_graphs() {
    for n in 2..=5 {
        for m in 2..=n {
            check(FamilySpec::CompleteBipartite(n, m));
        }
    }
    assert_eq!(predict(&FamilySpec::CompleteBipartite(3, 3)).unwrap().det_prime, Some(3));
    assert_eq!(predict(&FamilySpec::CompleteBipartite(4, 2)).unwrap().det_prime, Some(3));
}

#[test]
fn joins_and_hypercubes() {
    for n in 1..=3 {
        check(FamilySpec::JoinNK(n));
    }
    for n in 3..=4 {
        check(FamilySpec::Hypercube(n));
    }
}

#[test]
fn trees_are_predicted_by_search() {
    let spider = symbreak_core::Graph::from_edges(7, [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6)]).unwrap();
    check(FamilySpec::Tree(spider));
    check(FamilySpec::Tree(path(6).unwrap()));
    assert!(predict(&FamilySpec::Tree(symbreak_core::graph::cycle(4).unwrap())).is_err());
}

#[test]
fn regime_forms_agree() {
    for n in 3..=1u64 << 16 {
        let v = qn_det_index(n).unwrap();
        let k = ceil_log2(n) as u64;
        assert!(v == k || v == k + 1);
        assert_eq!(v == k + 1, SeriesRow::new(n).upper_regime());
        assert!(appendix_inequality_holds(n));
    }
}
