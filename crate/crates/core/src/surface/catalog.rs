//! Small closed surfaces used by the tests, the acceptance suite and the
//! sample data files.

use super::{CombinatorialMap, LabeledMap};
use crate::error::{Error, Result};

fn glue(faces: &[Vec<usize>]) -> CombinatorialMap {
    CombinatorialMap::from_vertex_faces(faces)
        .expect("catalog polygons are consistently oriented")
        .0
}

pub fn tetrahedron() -> CombinatorialMap {
    glue(&[vec![0, 1, 2], vec![0, 3, 1], vec![0, 2, 3], vec![1, 3, 2]])
}

/// Vertices `0,1` on the x axis, `2,3` on y, `4,5` on z (positive first).
pub fn octahedron() -> CombinatorialMap {
    let mut faces = Vec::new();
    for sx in 0..2 {
        for sy in 0..2 {
            for sz in 0..2 {
                let (x, y, z) = (sx, 2 + sy, 4 + sz);
                // an odd number of negative axes reverses the orientation
                if (sx + sy + sz) % 2 == 0 {
                    faces.push(vec![x, y, z]);
                } else {
                    faces.push(vec![x, z, y]);
                }
            }
        }
    }
    glue(&faces)
}

/// Twelve triangles around two poles of a pentagonal antiprism.
pub fn icosahedron() -> CombinatorialMap {
    let (top, bottom) = (0, 11);
    let upper = |i: usize| 1 + i % 5;
    let lower = |i: usize| 6 + i % 5;
    let mut faces = Vec::new();
    for i in 0..5 {
        faces.push(vec![top, upper(i), upper(i + 1)]);
        faces.push(vec![upper(i), lower(i), upper(i + 1)]);
        faces.push(vec![upper(i + 1), lower(i), lower(i + 1)]);
        faces.push(vec![bottom, lower(i + 1), lower(i)]);
    }
    glue(&faces)
}

/// Two triangles glued along their boundary: `V = 3, E = 3, F = 2`.
pub fn two_triangle_sphere() -> CombinatorialMap {
    glue(&[vec![0, 1, 2], vec![0, 2, 1]])
}

/// One vertex, three loops, two triangles.
pub fn one_vertex_torus() -> CombinatorialMap {
    // rotation a b c a' b' c' at the single vertex
    CombinatorialMap::from_arrays(vec![3, 4, 5, 0, 1, 2], vec![1, 2, 3, 4, 5, 0])
}

const CUBE_FACES: [[usize; 4]; 6] = [
    [0, 2, 3, 1],
    [4, 5, 7, 6],
    [0, 1, 5, 4],
    [2, 6, 7, 3],
    [0, 4, 6, 2],
    [1, 3, 7, 5],
];

/// Vertex `i` of the cube sits at `(i & 1, (i >> 1) & 1, (i >> 2) & 1)`.
pub fn cube() -> CombinatorialMap {
    glue(&CUBE_FACES.map(|f| f.to_vec()))
}

/// The cube with its vertices 2-colored by coordinate parity.
pub fn cube_checkerboard() -> LabeledMap {
    let (map, vertex) = CombinatorialMap::from_vertex_faces(&CUBE_FACES.map(|f| f.to_vec()))
        .expect("cube faces are consistently oriented");
    let labels = vertex.iter().map(|&v| (v.count_ones() % 2) as u8).collect();
    LabeledMap::new(map, labels).expect("labels are per vertex")
}

/// The `m x n` square grid on the torus, vertices 2-colored by parity.
/// Both sides must be even for the coloring to be proper.
pub fn torus_grid_checkerboard(m: usize, n: usize) -> Result<LabeledMap> {
    if m == 0 || n == 0 || !m.is_multiple_of(2) || !n.is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "checkerboard torus grid needs even positive sides, got {m} x {n}"
        )));
    }
    let vid = |i: usize, j: usize| (i % m) + m * (j % n);
    let h = |i: usize, j: usize| 2 * vid(i, j);
    let v = |i: usize, j: usize| 2 * vid(i, j) + 1;
    let mut faces = Vec::with_capacity(m * n);
    for j in 0..n {
        for i in 0..m {
            faces.push(vec![
                (vid(i, j), h(i, j)),
                (vid(i + 1, j), v(i + 1, j)),
                (vid(i + 1, j + 1), h(i, j + 1)),
                (vid(i, j + 1), v(i, j)),
            ]);
        }
    }
    let (map, vertex) = CombinatorialMap::from_polygons(&faces)?;
    let labels = vertex
        .iter()
        .map(|&id| (((id % m) + (id / m)) % 2) as u8)
        .collect();
    LabeledMap::new(map, labels)
}

/// A path `0 - 1 - 0` on the sphere: one quadrilateral face.
pub fn single_quad_sphere() -> LabeledMap {
    let (map, vertex) = CombinatorialMap::from_polygons(&[vec![(0, 0), (1, 1), (2, 1), (1, 0)]])
        .expect("the path is a valid gluing");
    let labels = vertex.iter().map(|&v| (v % 2) as u8).collect();
    LabeledMap::new(map, labels).expect("labels are per vertex")
}
