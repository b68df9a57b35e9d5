//! Characteristic matrices of hypercube vertex sets.

use proptest::prelude::*;
use symbreak_core::determining::{is_vertex_determining, VertexSet};
use symbreak_core::families::qn_det_index;
use symbreak_core::graph::hypercube;
use symbreak_core::hypercube::*;

fn rows_strategy() -> impl Strategy<Value = Vec<Vec<bool>>> {
    (1usize..=4).prop_flat_map(|s| {
        let t_min = (1usize << (s - 1)) + 1;
        (t_min..=t_min + 4).prop_flat_map(move |t| proptest::collection::vec(proptest::collection::vec(any::<bool>(), t), s))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn too_many_columns_force_an_isomorphic_pair(rows in rows_strategy()) {
        let m = CharacteristicMatrix::from_rows(&rows).unwrap();
        let (j, k) = m.isomorphic_column_pair().expect("pigeonhole");
        prop_assert!(columns_isomorphic(&m.column(j), &m.column(k)).unwrap());
    }

    #[test]
    fn matrix_test_matches_stabilizer(n in 1usize..=4, picks in proptest::collection::vec(any::<prop::sample::Index>(), 1..6)) {
        let s: Vec<usize> = picks.iter().map(|p| p.index(1 << n)).collect();
        let by_matrix = is_determining_by_matrix(&s, n).unwrap();
        let direct = is_vertex_determining(&hypercube(n).unwrap(), &VertexSet::new(s.iter().copied())).unwrap();
        prop_assert_eq!(by_matrix, direct, "{:?} in Q_{}", s, n);
    }
}

#[test]
fn construction_sizes() {
    for n in 3..=10 {
        let c = construct_qn_edge_set(n).unwrap();
        assert_eq!(c.edges.len() as u64, qn_det_index(n as u64).unwrap(), "n = {n}");
        assert_eq!(c.y.rows(), c.edges.len());
        assert_eq!(c.x.rows(), 2 * c.edges.len());
        let expected = if n <= STABILIZER_CHECK_MAX { Verification::Stabilizer } else { Verification::MatrixAndDistance };
        assert_eq!(c.verification, expected);
    }
}

#[test]
fn free_columns_of_x_have_even_weight() {
    for n in 3..=10 {
        let c = construct_qn_edge_set(n).unwrap();
        let r = c.y.rows();
        for j in r..n {
            let ones = c.x.column(j).iter().filter(|&&b| b).count();
            assert_eq!(ones % 2, 0, "column {j} of X for n = {n}");
        }
        for j in 0..r {
            assert_eq!(c.x.column(j).iter().filter(|&&b| b).count(), 1);
        }
        assert!(c.x.isomorphic_column_pair().is_none());
    }
}
