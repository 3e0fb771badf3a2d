//! Bicolored quadrangulations, dual matchings and hexagon merging.

use std::collections::BTreeSet;
use std::fmt;

use super::matching::maximum_matching;
use super::subdivide::restrict;
use super::{cycle_index, cycles0, LabeledMap};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadReport {
    pub valid: bool,
    pub quadrilaterals: usize,
    pub vertices: usize,
    pub euler_characteristic: i64,
    /// `q = v - chi`.
    pub identity_holds: bool,
    pub messages: Vec<String>,
}

impl fmt::Display for QuadReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "quadrilaterals {}", self.quadrilaterals)?;
        writeln!(f, "vertices {}", self.vertices)?;
        writeln!(f, "euler characteristic {}", self.euler_characteristic)?;
        writeln!(
            f,
            "q = v - chi: {} = {} - {} [{}]",
            self.quadrilaterals,
            self.vertices,
            self.euler_characteristic,
            if self.identity_holds { "PASS" } else { "FAIL" }
        )?;
        for m in &self.messages {
            writeln!(f, "note: {m}")?;
        }
        writeln!(f, "valid: {}", if self.valid { "yes" } else { "no" })
    }
}

/// Checks that every face is a quadrilateral whose corners alternate
/// between labels 0 and 1. Never fails; findings go in the report.
pub fn validate_quadrangulation(lm: &LabeledMap) -> QuadReport {
    let map = lm.map();
    let base = map.validate();
    let mut messages = base.messages.clone();
    let faces = map.faces();
    let mut shapes_ok = true;
    for face in &faces {
        if face.len() != 4 {
            shapes_ok = false;
            messages.push(format!("face at dart {} has {} sides", face[0], face.len()));
            continue;
        }
        let labels: Vec<u8> = face.iter().map(|&d| lm.label(d)).collect();
        let alternating =
            labels.iter().all(|&l| l <= 1) && (0..4).all(|i| labels[i] != labels[(i + 1) % 4]);
        if !alternating {
            shapes_ok = false;
            messages.push(format!(
                "face at dart {} has labels {labels:?}, not alternating 0/1",
                face[0]
            ));
        }
    }
    let q = faces.len();
    let v = map.vertex_count();
    let chi = base.euler_characteristic;
    let identity_holds = q as i64 == v as i64 - chi;
    QuadReport {
        valid: base.is_valid() && shapes_ok,
        quadrilaterals: q,
        vertices: v,
        euler_characteristic: chi,
        identity_holds,
        messages,
    }
}

/// Pairs of adjacent faces. Faces are named by their least (1-based) dart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pub pairs: Vec<(usize, usize)>,
    pub covered: BTreeSet<usize>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "matching {}", self.pairs.len())?;
        for (a, b) in &self.pairs {
            writeln!(f, "pair {a} {b}")?;
        }
        Ok(())
    }
}

/// Perfect matching of the faces in the dual graph, computed with the
/// blossom algorithm. Fails with the maximum matching found as certificate.
pub fn dual_matching(lm: &LabeledMap) -> Result<Matching> {
    let report = validate_quadrangulation(lm);
    if !report.valid {
        return Err(Error::InvalidMap(report.messages.join("; ")));
    }
    let map = lm.map();
    let faces = cycles0(&map.phi());
    let (face_of, nf) = cycle_index(&map.phi());
    if nf % 2 != 0 {
        return Err(Error::OddFaceCount(nf));
    }
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); nf];
    for x in 0..map.dart_count() {
        let (f, g) = (face_of[x], face_of[map.alpha().at(x)]);
        if f != g {
            adj[f].insert(g);
        }
    }
    let adj: Vec<Vec<usize>> = adj.into_iter().map(|s| s.into_iter().collect()).collect();
    let mate = maximum_matching(&adj);
    let face_name = |f: usize| faces[f][0] + 1;
    let unmatched: Vec<usize> = (0..nf)
        .filter(|&f| mate[f].is_none())
        .map(face_name)
        .collect();
    if !unmatched.is_empty() {
        return Err(Error::NoPerfectMatching {
            matched: nf - unmatched.len(),
            faces: nf,
            unmatched,
        });
    }
    let mut pairs = Vec::with_capacity(nf / 2);
    for (f, m) in mate.iter().enumerate() {
        let g = m.expect("perfect");
        if f < g {
            pairs.push((face_name(f), face_name(g)));
        }
    }
    let covered = (0..nf).map(face_name).collect();
    Ok(Matching { pairs, covered })
}

/// Removes, for each matched pair, the shared edge containing the least
/// dart, fusing the two quadrilaterals into a hexagon.
pub fn merge_to_hexagons(lm: &LabeledMap, matching: &Matching) -> Result<LabeledMap> {
    let report = validate_quadrangulation(lm);
    if !report.valid {
        return Err(Error::InvalidMap(report.messages.join("; ")));
    }
    let map = lm.map();
    let (face_of, nf) = cycle_index(&map.phi());
    let faces = cycles0(&map.phi());
    let mut index_of_name = std::collections::HashMap::new();
    for (i, f) in faces.iter().enumerate() {
        index_of_name.insert(f[0] + 1, i);
    }
    let mut seen = vec![false; nf];
    for &(a, b) in &matching.pairs {
        for name in [a, b] {
            let Some(&i) = index_of_name.get(&name) else {
                return Err(Error::Precondition(format!("{name} does not name a face")));
            };
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::Precondition(format!("face {name} matched twice")));
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::Precondition("matching is not perfect".into()));
    }
    let mut keep = vec![true; map.dart_count()];
    for &(a, b) in &matching.pairs {
        let (fa, fb) = (index_of_name[&a], index_of_name[&b]);
        let shared = (0..map.dart_count())
            .find(|&x| {
                let y = map.alpha().at(x);
                (face_of[x] == fa && face_of[y] == fb) || (face_of[x] == fb && face_of[y] == fa)
            })
            .ok_or_else(|| Error::Precondition(format!("faces {a} and {b} are not adjacent")))?;
        keep[shared] = false;
        keep[map.alpha().at(shared)] = false;
    }
    let merged = restrict(lm, &keep)?;
    debug_assert!(merged.map().faces().iter().all(|f| f.len() == 6));
    Ok(merged)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::{
        cube_checkerboard, dessin_constellation, extract_dessin, single_quad_sphere,
        torus_grid_checkerboard,
    };

    #[test]
    fn torus_grid_report() {
        let r = validate_quadrangulation(&torus_grid_checkerboard(2, 2).unwrap());
        assert!(r.valid);
        assert_eq!(
            (r.quadrilaterals, r.vertices, r.euler_characteristic),
            (4, 4, 0)
        );
        assert!(r.identity_holds);
    }

    #[test]
    fn cube_report() {
        let r = validate_quadrangulation(&cube_checkerboard());
        assert!(r.valid);
        assert_eq!(
            (r.quadrilaterals, r.vertices, r.euler_characteristic),
            (6, 8, 2)
        );
        assert!(r.identity_holds);
    }

    #[test]
    fn non_alternating_labels() {
        // relabel the cube so one face reads 0,0,1,1
        let cube = cube_checkerboard();
        let map = cube.map().clone();
        let face = &map.faces()[0];
        let mut assignment: Vec<(usize, u8)> = cube.vertex_labels();
        let order = [0u8, 0, 1, 1];
        for (&d, &l) in face.iter().zip(order.iter()) {
            let v = map.vertices().iter().find(|v| v.contains(&d)).unwrap()[0];
            for entry in assignment.iter_mut() {
                if entry.0 == v {
                    entry.1 = l;
                }
            }
        }
        let bad = LabeledMap::from_vertex_labels(map, &assignment).unwrap();
        let r = validate_quadrangulation(&bad);
        assert!(!r.valid);
        assert!(r.messages.iter().any(|m| m.contains("alternating")));
    }

    #[test]
    fn triangles_are_not_quads() {
        let t = crate::surface::tetrahedron();
        let n = t.dart_count();
        let lm = LabeledMap::new(t, vec![0; n]).unwrap();
        assert!(!validate_quadrangulation(&lm).valid);
    }

    #[test]
    fn torus_matching() {
        let g = torus_grid_checkerboard(2, 2).unwrap();
        let m = dual_matching(&g).unwrap();
        assert_eq!(m.len(), 2);
        assert_eq!(m.covered.len(), 4);
    }

    #[test]
    fn cube_matching_pairs_adjacent_faces() {
        let cube = cube_checkerboard();
        let m = dual_matching(&cube).unwrap();
        assert_eq!(m.len(), 3);
        let faces = cube.map().faces();
        for &(a, b) in &m.pairs {
            let fa = faces.iter().find(|f| f[0] == a).unwrap();
            let fb = faces.iter().find(|f| f[0] == b).unwrap();
            let adjacent = fa
                .iter()
                .any(|&d| fb.contains(&cube.map().alpha().apply(d)));
            assert!(adjacent, "{a} {b}");
        }
    }

    #[test]
    fn single_quad_has_odd_count() {
        assert!(matches!(
            dual_matching(&single_quad_sphere()),
            Err(Error::OddFaceCount(1))
        ));
    }

    #[test]
    fn merge_torus() {
        let g = torus_grid_checkerboard(2, 2).unwrap();
        let hex = merge_to_hexagons(&g, &dual_matching(&g).unwrap()).unwrap();
        let map = hex.map();
        assert_eq!(map.face_count(), 2);
        assert!(map.faces().iter().all(|f| f.len() == 6));
        let (v, chi) = (
            map.vertex_count() as i64,
            map.euler_characteristic().unwrap(),
        );
        assert_eq!(2 * map.face_count() as i64, v - chi);
        let c = dessin_constellation(&extract_dessin(&hex).unwrap()).unwrap();
        assert_eq!(c.degree(), 6);
    }

    #[test]
    fn merge_cube() {
        let cube = cube_checkerboard();
        let hex = merge_to_hexagons(&cube, &dual_matching(&cube).unwrap()).unwrap();
        assert_eq!(hex.map().face_count(), 3);
        assert_eq!(hex.map().vertex_count(), 8);
        assert_eq!(hex.map().euler_characteristic().unwrap(), 2);
        for f in hex.map().faces() {
            assert_eq!(f.len(), 6);
            for i in 0..6 {
                assert_ne!(hex.label(f[i]), hex.label(f[(i + 1) % 6]));
            }
        }
    }

    #[test]
    fn merge_rejects_partial_matching() {
        let cube = cube_checkerboard();
        let mut m = dual_matching(&cube).unwrap();
        m.pairs.pop();
        assert!(matches!(
            merge_to_hexagons(&cube, &m),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn larger_grids_match() {
        for (a, b) in [(2, 4), (4, 4), (6, 2)] {
            let g = torus_grid_checkerboard(a, b).unwrap();
            let m = dual_matching(&g).unwrap();
            assert_eq!(m.len(), a * b / 2);
            let hex = merge_to_hexagons(&g, &m).unwrap();
            assert!(hex.map().faces().iter().all(|f| f.len() == 6));
        }
    }
}
