mod common;

use branchcover::hurwitz::hurwitz_move;
use branchcover::pipeline::{belyi_pipeline, quad_pipeline};
use branchcover::surface::{
    barycentric_subdivide, dual_matching, edge_flip, icosahedron, is_flippable, merge_to_hexagons,
    octahedron, parse_map, torus_grid_checkerboard,
};
use branchcover::{Constellation, Direction, Permutation};
use proptest::prelude::*;

fn to_constellation(d: usize, tuple: &common::Tuple) -> Constellation {
    let perms = tuple
        .iter()
        .map(|&(a, b)| Permutation::transposition(d, a + 1, b + 1).unwrap())
        .collect();
    Constellation::new(d, perms).unwrap()
}

fn tuple_strategy() -> impl Strategy<Value = (usize, common::Tuple)> {
    (2usize..=6).prop_flat_map(|d| {
        let pair = (0..d, 0..d - 1).prop_map(|(a, b)| {
            let b = if b >= a { b + 1 } else { b };
            (a.min(b), a.max(b))
        });
        (Just(d), prop::collection::vec(pair, 2..8))
    })
}

#[test]
fn oracle_counts_are_frozen() {
    for d in 1..=4 {
        for k in 0..=6 {
            assert_eq!(
                common::accepted_count(d, k),
                common::ACCEPTED_COUNTS[d - 1][k],
                "d={d} k={k}"
            );
        }
    }
}

proptest! {
    #[test]
    fn engine_moves_match_oracle((d, t) in tuple_strategy(), k in 0usize..7) {
        let k = k % (t.len() - 1);
        let c = to_constellation(d, &t);
        let fwd = hurwitz_move(&c, k + 1, Direction::Forward).unwrap();
        let bwd = hurwitz_move(&c, k + 1, Direction::Backward).unwrap();
        prop_assert_eq!(fwd, to_constellation(d, &common::hurwitz_forward(&t, k)));
        prop_assert_eq!(bwd, to_constellation(d, &common::hurwitz_backward(&t, k)));
    }

    #[test]
    fn moves_keep_validity_and_branching((d, t) in tuple_strategy(), k in 0usize..7) {
        let k = k % (t.len() - 1);
        let c = to_constellation(d, &t);
        let m = hurwitz_move(&c, k + 1, Direction::Forward).unwrap();
        prop_assert_eq!(m.validate().is_valid(), c.validate().is_valid());
        prop_assert_eq!(m.branching_total(), c.branching_total());
        prop_assert_eq!(hurwitz_move(&m, k + 1, Direction::Backward).unwrap(), c);
    }

    #[test]
    fn canonical_form_is_conjugation_invariant((d, t) in tuple_strategy(), seed in any::<u64>()) {
        let c = to_constellation(d, &t);
        let gs = common::all_relabelings(d);
        let g = &gs[(seed % gs.len() as u64) as usize];
        let r = to_constellation(d, &common::relabel(&t, g));
        prop_assert_eq!(c.canonical_form().unwrap(), r.canonical_form().unwrap());
    }

    #[test]
    fn flip_walks_keep_belyi_ledger(steps in prop::collection::vec(any::<prop::sample::Index>(), 0..10)) {
        let mut m = icosahedron();
        for s in steps {
            let darts: Vec<usize> = (1..=m.dart_count()).filter(|&d| is_flippable(&m, d)).collect();
            m = edge_flip(&m, *s.get(&darts)).unwrap();
        }
        let out = belyi_pipeline(&m).unwrap();
        prop_assert!(out.ledger.all_passed, "{}", out.ledger);
        prop_assert_eq!(out.constellation.degree(), 6 * m.face_count() / 2);
    }

    #[test]
    fn grid_quads_merge_to_hexagons(a in 1usize..=4, b in 1usize..=4) {
        let lm = torus_grid_checkerboard(2 * a, 2 * b).unwrap();
        let out = quad_pipeline(&lm).unwrap();
        prop_assert!(out.ledger.all_passed, "{}", out.ledger);
        prop_assert_eq!(out.hexagons.map().face_count(), 2 * a * b);
        prop_assert_eq!(out.hexagons.map().vertex_count(), lm.map().vertex_count());
    }
}

/// Triangulated maps are subdivided into twice as many triangles per dart,
/// independently of the dessin: 6 darts per dart, all faces triangles.
#[test]
fn subdivision_counts() {
    for m in [octahedron(), icosahedron()] {
        let s = barycentric_subdivide(&m).unwrap();
        assert_eq!(s.map().dart_count(), 6 * m.dart_count());
        assert_eq!(s.map().face_count(), 2 * m.dart_count());
        assert_eq!(
            s.map().euler_characteristic().unwrap(),
            m.euler_characteristic().unwrap()
        );
        let [v0, v1, v2] = s.label_counts();
        assert_eq!(
            (v0, v1, v2),
            (m.vertex_count(), m.edge_count(), m.face_count())
        );
    }
}

#[test]
fn files_round_trip() {
    let lm = torus_grid_checkerboard(2, 4).unwrap();
    let parsed = parse_map(&lm.to_file_string()).unwrap();
    assert_eq!(parsed.labeled().unwrap(), &lm);
    let m = dual_matching(&lm).unwrap();
    let hex = merge_to_hexagons(&lm, &m).unwrap();
    assert_eq!(
        parse_map(&hex.to_file_string()).unwrap().labeled().unwrap(),
        &hex
    );
}
