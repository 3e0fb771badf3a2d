//! The 2-2 move on triangulated maps.

use super::CombinatorialMap;
use crate::error::{Error, Result};

/// Checks the edge-flip preconditions for the edge containing the 1-based
/// `dart`: both sides are triangles and they are different faces.
fn check_flip(m: &CombinatorialMap, dart: usize) -> Result<()> {
    let n = m.dart_count();
    if dart == 0 || dart > n {
        return Err(Error::OutOfRange {
            what: "dart",
            value: dart as i64,
            max: n,
        });
    }
    let phi = m.phi();
    let x = dart - 1;
    let y = m.alpha().at(x);
    for (side, start) in [("left", x), ("right", y)] {
        let mut len = 1;
        let mut z = phi.at(start);
        while z != start {
            if z == if start == x { y } else { x } {
                return Err(Error::Precondition(format!(
                    "edge of dart {dart} borders one face on both sides"
                )));
            }
            len += 1;
            z = phi.at(z);
        }
        if len != 3 {
            return Err(Error::Precondition(format!(
                "{side} face of dart {dart} has {len} sides, not 3"
            )));
        }
    }
    Ok(())
}

pub fn is_flippable(m: &CombinatorialMap, dart: usize) -> bool {
    m.validate().is_valid() && check_flip(m, dart).is_ok()
}

/// Replaces the edge containing the 1-based `dart` by the other diagonal of
/// the square formed by its two triangles. The edge keeps its dart numbers;
/// loops and multi-edges may appear.
pub fn edge_flip(m: &CombinatorialMap, dart: usize) -> Result<CombinatorialMap> {
    m.ensure_valid()?;
    check_flip(m, dart)?;
    let n = m.dart_count();
    let alpha: Vec<usize> = (0..n).map(|i| m.alpha().at(i)).collect();
    let mut sigma: Vec<usize> = (0..n).map(|i| m.sigma().at(i)).collect();
    let phi = m.phi();

    let x = dart - 1;
    let y = alpha[x];
    // each new end goes into the corner at the apex of its triangle, just
    // after the dart that arrives there
    let anchor_x = alpha[phi.at(x)];
    let anchor_y = alpha[phi.at(y)];

    let mut sigma_inv = vec![0usize; n];
    for (i, &s) in sigma.iter().enumerate() {
        sigma_inv[s] = i;
    }
    for z in [x, y] {
        let (prev, next) = (sigma_inv[z], sigma[z]);
        sigma[prev] = next;
        sigma_inv[next] = prev;
    }
    for (z, anchor) in [(x, anchor_x), (y, anchor_y)] {
        let next = sigma[anchor];
        sigma[anchor] = z;
        sigma[z] = next;
        sigma_inv[next] = z;
        sigma_inv[z] = anchor;
    }
    Ok(CombinatorialMap::from_arrays(alpha, sigma))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::{octahedron, one_vertex_torus, tetrahedron, two_triangle_sphere};

    fn counts(m: &CombinatorialMap) -> (usize, usize, usize) {
        (m.vertex_count(), m.edge_count(), m.face_count())
    }

    fn all_triangles(m: &CombinatorialMap) -> bool {
        m.faces().iter().all(|f| f.len() == 3)
    }

    #[test]
    fn octahedron_flips_preserve_counts() {
        let o = octahedron();
        for d in 1..=o.dart_count() {
            let f = edge_flip(&o, d).unwrap();
            assert!(f.validate().is_valid());
            assert_eq!(counts(&f), (6, 12, 8));
            assert_eq!(f.euler_characteristic().unwrap(), 2);
            assert!(all_triangles(&f));
            assert!(!f.is_isomorphic(&o));
        }
    }

    #[test]
    fn flip_back_restores_the_map() {
        for m in [octahedron(), tetrahedron(), one_vertex_torus()] {
            for d in 1..=m.dart_count() {
                let f = edge_flip(&m, d).unwrap();
                let back = edge_flip(&f, d).unwrap();
                assert!(back.is_isomorphic(&m), "dart {d}");
            }
        }
    }

    #[test]
    fn torus_flip() {
        let t = one_vertex_torus();
        let f = edge_flip(&t, 1).unwrap();
        assert_eq!(counts(&f), (1, 3, 2));
        assert!(all_triangles(&f));
    }

    #[test]
    fn two_triangle_sphere_flip_makes_a_loop() {
        let s = two_triangle_sphere();
        let f = edge_flip(&s, 1).unwrap();
        assert_eq!(counts(&f), (3, 3, 2));
        assert!(all_triangles(&f));
        let has_loop = (0..f.dart_count()).any(|x| {
            let ax = f.alpha().at(x);
            f.vertices()
                .iter()
                .any(|v| v.contains(&(x + 1)) && v.contains(&(ax + 1)))
        });
        assert!(has_loop);
    }

    #[test]
    fn flip_errors() {
        // the path 0 - 1 - 2: one face on both sides of every edge
        let (path, _) =
            CombinatorialMap::from_polygons(&[vec![(0, 0), (1, 1), (2, 1), (1, 0)]]).unwrap();
        assert!(matches!(edge_flip(&path, 1), Err(Error::Precondition(_))));
        assert!(!is_flippable(&path, 1));
        assert!(edge_flip(&octahedron(), 0).is_err());
        assert!(edge_flip(&octahedron(), 25).is_err());
        let cube = crate::surface::cube();
        assert!(edge_flip(&cube, 1).is_err());
    }
}
