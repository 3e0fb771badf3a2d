//! Closed oriented surfaces as combinatorial maps.
//!
//! A map on `2E` darts is a pair of permutations: `alpha`, a fixed-point-free
//! involution whose cycles are the edges, and `sigma`, whose cycles are the
//! counterclockwise rotations at the vertices. Faces are the cycles of
//! `phi = alpha * sigma` (apply `alpha`, then `sigma`). A vertex is named by
//! the least dart in its rotation.

mod catalog;
mod flip;
mod matching;
mod quad;
mod subdivide;

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use crate::constellation::content;
use crate::error::{Error, Result};
use crate::perm::{parse_cycle_list, Permutation};

pub use catalog::*;
pub use flip::{edge_flip, is_flippable};
pub use matching::maximum_matching;
pub use quad::{dual_matching, merge_to_hexagons, validate_quadrangulation, Matching, QuadReport};
pub use subdivide::{barycentric_subdivide, dessin_constellation, extract_dessin};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CombinatorialMap {
    alpha: Permutation,
    sigma: Permutation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapReport {
    pub involution: bool,
    pub fixed_point_free: bool,
    pub connected: bool,
    pub darts: usize,
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler_characteristic: i64,
    pub messages: Vec<String>,
}

impl MapReport {
    pub fn is_valid(&self) -> bool {
        self.involution && self.fixed_point_free && self.connected
    }
}

impl fmt::Display for MapReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "darts {}", self.darts)?;
        writeln!(f, "vertices {}", self.vertices)?;
        writeln!(f, "edges {}", self.edges)?;
        writeln!(f, "faces {}", self.faces)?;
        writeln!(f, "euler characteristic {}", self.euler_characteristic)?;
        for m in &self.messages {
            writeln!(f, "note: {m}")?;
        }
        writeln!(f, "valid: {}", if self.is_valid() { "yes" } else { "no" })
    }
}

/// Cycles of a permutation as 0-based point lists, ordered by least element.
pub(crate) fn cycles0(p: &Permutation) -> Vec<Vec<usize>> {
    let n = p.degree();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut c = Vec::new();
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            c.push(x);
            x = p.at(x);
        }
        out.push(c);
    }
    out
}

/// For each point, the index of its cycle in [`cycles0`] order.
pub(crate) fn cycle_index(p: &Permutation) -> (Vec<usize>, usize) {
    let n = p.degree();
    let mut idx = vec![usize::MAX; n];
    let mut count = 0;
    for s in 0..n {
        if idx[s] != usize::MAX {
            continue;
        }
        let mut x = s;
        while idx[x] == usize::MAX {
            idx[x] = count;
            x = p.at(x);
        }
        count += 1;
    }
    (idx, count)
}

impl CombinatorialMap {
    /// Only checks that both permutations act on the same darts; see
    /// [`CombinatorialMap::validate`] for the structural checks.
    pub fn from_parts(alpha: Permutation, sigma: Permutation) -> Result<Self> {
        if alpha.degree() != sigma.degree() {
            return Err(Error::DegreeMismatch {
                left: alpha.degree(),
                right: sigma.degree(),
            });
        }
        Ok(CombinatorialMap { alpha, sigma })
    }

    pub(crate) fn from_arrays(alpha: Vec<usize>, sigma: Vec<usize>) -> Self {
        CombinatorialMap {
            alpha: Permutation::from_zero_based(alpha),
            sigma: Permutation::from_zero_based(sigma),
        }
    }

    pub fn alpha(&self) -> &Permutation {
        &self.alpha
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn phi(&self) -> Permutation {
        self.alpha.then(&self.sigma)
    }

    pub fn dart_count(&self) -> usize {
        self.alpha.degree()
    }

    pub fn vertex_count(&self) -> usize {
        self.sigma.cycle_count()
    }

    pub fn edge_count(&self) -> usize {
        self.alpha.cycle_count()
    }

    pub fn face_count(&self) -> usize {
        self.phi().cycle_count()
    }

    /// `V - E + F` from orbit counts, regardless of validity.
    fn orbit_chi(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    pub fn is_connected(&self) -> bool {
        let n = self.dart_count();
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![0];
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for y in [self.alpha.at(x), self.sigma.at(x)] {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == n
    }

    pub fn validate(&self) -> MapReport {
        let involution = self.alpha.is_involution();
        let fixed: Vec<usize> = self.alpha.fixed_points().collect();
        let fixed_point_free = fixed.is_empty();
        let connected = self.is_connected();
        let mut messages = Vec::new();
        if !involution {
            messages.push("alpha is not an involution".to_string());
        }
        if !fixed_point_free {
            messages.push(format!("alpha fixes darts {fixed:?}"));
        }
        if !connected {
            messages.push("sigma and alpha do not act transitively on darts".to_string());
        }
        let chi = self.orbit_chi();
        MapReport {
            involution,
            fixed_point_free,
            connected,
            darts: self.dart_count(),
            vertices: self.vertex_count(),
            edges: self.edge_count(),
            faces: self.face_count(),
            euler_characteristic: chi,
            messages,
        }
    }

    pub(crate) fn ensure_valid(&self) -> Result<()> {
        let r = self.validate();
        if r.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidMap(r.messages.join("; ")))
        }
    }

    pub fn euler_characteristic(&self) -> Result<i64> {
        self.ensure_valid()?;
        Ok(self.orbit_chi())
    }

    /// Vertex rotations as 1-based dart cycles, ordered by vertex identity.
    pub fn vertices(&self) -> Vec<Vec<usize>> {
        self.sigma.cycles()
    }

    /// Face boundaries as 1-based dart cycles, ordered by least dart.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        self.phi().cycles()
    }

    /// Glues oriented polygons. Each side is `(start vertex, edge id)`
    /// and runs to the start vertex of the next side; every edge id must
    /// occur on exactly two sides, in opposite directions. Darts are
    /// numbered side by side in input order. Returns the map and the
    /// caller's vertex id for each (0-based) dart.
    pub fn from_polygons(faces: &[Vec<(usize, usize)>]) -> Result<(Self, Vec<usize>)> {
        let n: usize = faces.iter().map(Vec::len).sum();
        if n == 0 {
            return Err(Error::InvalidMap("no sides".into()));
        }
        let mut phi = vec![0usize; n];
        let mut start = vec![0usize; n];
        let mut end = vec![0usize; n];
        let mut by_edge: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        let mut base = 0;
        for face in faces {
            let k = face.len();
            if k == 0 {
                return Err(Error::InvalidMap("empty polygon".into()));
            }
            for (i, &(v, e)) in face.iter().enumerate() {
                phi[base + i] = base + (i + 1) % k;
                start[base + i] = v;
                end[base + i] = face[(i + 1) % k].0;
                by_edge.entry(e).or_default().push(base + i);
            }
            base += k;
        }
        let mut alpha = vec![usize::MAX; n];
        for (e, sides) in &by_edge {
            let &[x, y] = sides.as_slice() else {
                return Err(Error::InvalidMap(format!(
                    "edge {e} occurs on {} sides",
                    sides.len()
                )));
            };
            if start[x] != end[y] || end[x] != start[y] {
                return Err(Error::InvalidMap(format!(
                    "edge {e} is traversed in the same direction twice"
                )));
            }
            alpha[x] = y;
            alpha[y] = x;
        }
        let sigma: Vec<usize> = (0..n).map(|y| phi[alpha[y]]).collect();
        Ok((Self::from_arrays(alpha, sigma), start))
    }

    /// Glues polygons given as vertex cycles; an edge is identified by its
    /// unordered vertex pair, so multi-edges and loops are not expressible.
    pub fn from_vertex_faces(faces: &[Vec<usize>]) -> Result<(Self, Vec<usize>)> {
        let mut ids: HashMap<(usize, usize), usize> = HashMap::new();
        let mut directed: HashMap<(usize, usize), ()> = HashMap::new();
        let mut polygons = Vec::with_capacity(faces.len());
        for face in faces {
            let k = face.len();
            let mut sides = Vec::with_capacity(k);
            for i in 0..k {
                let (a, b) = (face[i], face[(i + 1) % k]);
                if a == b {
                    return Err(Error::InvalidMap(format!("loop at vertex {a}")));
                }
                if directed.insert((a, b), ()).is_some() {
                    return Err(Error::InvalidMap(format!(
                        "directed edge {a}->{b} appears twice"
                    )));
                }
                let key = (a.min(b), a.max(b));
                let next = ids.len();
                let id = *ids.entry(key).or_insert(next);
                sides.push((a, id));
            }
            polygons.push(sides);
        }
        Self::from_polygons(&polygons)
    }

    /// Isomorphism invariant under dart relabeling: the least BFS
    /// relabeling code over all start darts. Assumes a connected map.
    pub fn canonical_code(&self) -> Vec<u32> {
        let n = self.dart_count();
        let mut best: Option<Vec<u32>> = None;
        for s in 0..n {
            let code = self.code_from(s);
            if best.as_ref().is_none_or(|b| code < *b) {
                best = Some(code);
            }
        }
        best.unwrap_or_default()
    }

    fn code_from(&self, s: usize) -> Vec<u32> {
        let n = self.dart_count();
        let mut label = vec![u32::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut queue = VecDeque::from([s]);
        label[s] = 0;
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for y in [self.sigma.at(x), self.alpha.at(x)] {
                if label[y] == u32::MAX {
                    label[y] = order.len() as u32 + queue.len() as u32;
                    queue.push_back(y);
                }
            }
        }
        let mut code = Vec::with_capacity(2 * n);
        for &x in &order {
            code.push(label[self.sigma.at(x)]);
            code.push(label[self.alpha.at(x)]);
        }
        code
    }

    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.dart_count() == other.dart_count()
            && self.vertex_count() == other.vertex_count()
            && self.face_count() == other.face_count()
            && self.canonical_code() == other.canonical_code()
    }

    pub fn to_file_string(&self) -> String {
        write_map(self, None)
    }
}

/// A map with one label per vertex: `{0,1,2}` for barycentric types or
/// `{0,1}` for two parallel copies of a transversal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledMap {
    map: CombinatorialMap,
    // label of the vertex containing each 0-based dart
    labels: Vec<u8>,
}

impl LabeledMap {
    /// `labels[x]` is the label of the vertex containing 0-based dart `x`.
    pub fn new(map: CombinatorialMap, labels: Vec<u8>) -> Result<Self> {
        if labels.len() != map.dart_count() {
            return Err(Error::InvalidMap(format!(
                "{} labels for {} darts",
                labels.len(),
                map.dart_count()
            )));
        }
        for x in 0..labels.len() {
            if labels[x] > 2 {
                return Err(Error::InvalidMap(format!(
                    "label {} out of range",
                    labels[x]
                )));
            }
            if labels[map.sigma.at(x)] != labels[x] {
                return Err(Error::InvalidMap(format!(
                    "vertex of dart {} carries two labels",
                    x + 1
                )));
            }
        }
        Ok(LabeledMap { map, labels })
    }

    /// Labels given per vertex, each vertex named by any 1-based dart of it.
    pub fn from_vertex_labels(map: CombinatorialMap, assignment: &[(usize, u8)]) -> Result<Self> {
        let (vertex, nv) = cycle_index(&map.sigma);
        let mut per_vertex: Vec<Option<u8>> = vec![None; nv];
        for &(dart, l) in assignment {
            if dart == 0 || dart > map.dart_count() {
                return Err(Error::OutOfRange {
                    what: "dart",
                    value: dart as i64,
                    max: map.dart_count(),
                });
            }
            if l > 2 {
                return Err(Error::InvalidMap(format!("label {l} out of range")));
            }
            let slot = &mut per_vertex[vertex[dart - 1]];
            if slot.is_some() {
                return Err(Error::InvalidMap(format!(
                    "vertex of dart {dart} labeled twice"
                )));
            }
            *slot = Some(l);
        }
        let mut labels = Vec::with_capacity(map.dart_count());
        for x in 0..map.dart_count() {
            match per_vertex[vertex[x]] {
                Some(l) => labels.push(l),
                None => {
                    return Err(Error::InvalidMap(format!(
                        "vertex of dart {} has no label",
                        x + 1
                    )))
                }
            }
        }
        Ok(LabeledMap { map, labels })
    }

    pub fn map(&self) -> &CombinatorialMap {
        &self.map
    }

    pub fn into_map(self) -> CombinatorialMap {
        self.map
    }

    /// Label of the vertex containing the 1-based dart.
    pub fn label(&self, dart: usize) -> u8 {
        self.labels[dart - 1]
    }

    pub(crate) fn label0(&self, x: usize) -> u8 {
        self.labels[x]
    }

    /// `(vertex identity, label)` pairs ordered by vertex identity.
    pub fn vertex_labels(&self) -> Vec<(usize, u8)> {
        cycles0(&self.map.sigma)
            .iter()
            .map(|c| (c[0] + 1, self.labels[c[0]]))
            .collect()
    }

    /// Number of vertices carrying each label 0, 1, 2.
    pub fn label_counts(&self) -> [usize; 3] {
        let mut counts = [0; 3];
        for (_, l) in self.vertex_labels() {
            counts[l as usize] += 1;
        }
        counts
    }

    pub fn to_file_string(&self) -> String {
        write_map(&self.map, Some(self))
    }
}

fn write_map(map: &CombinatorialMap, labeled: Option<&LabeledMap>) -> String {
    let mut s = String::from("map\n");
    s.push_str(&format!("darts {}\n", map.dart_count()));
    s.push_str(&format!("alpha {}\n", map.alpha));
    s.push_str(&format!("sigma {}\n", map.sigma));
    if let Some(lm) = labeled {
        for (v, l) in lm.vertex_labels() {
            s.push_str(&format!("label {v} {l}\n"));
        }
    }
    s.push_str("end\n");
    s
}

/// A parsed map file: labels are present only when the file had label lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MapFile {
    Plain(CombinatorialMap),
    Labeled(LabeledMap),
}

impl MapFile {
    pub fn map(&self) -> &CombinatorialMap {
        match self {
            MapFile::Plain(m) => m,
            MapFile::Labeled(lm) => lm.map(),
        }
    }

    pub fn labeled(&self) -> Option<&LabeledMap> {
        match self {
            MapFile::Plain(_) => None,
            MapFile::Labeled(lm) => Some(lm),
        }
    }

    pub fn to_file_string(&self) -> String {
        match self {
            MapFile::Plain(m) => m.to_file_string(),
            MapFile::Labeled(lm) => lm.to_file_string(),
        }
    }
}

/// Parses a `map ... end` block.
pub fn parse_map(text: &str) -> Result<MapFile> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, content(l)))
        .filter(|(_, l)| !l.is_empty());
    let Some((first, header)) = lines.next() else {
        return Err(Error::parse(0, "empty map file"));
    };
    if header != "map" {
        return Err(Error::parse(
            first,
            format!("expected 'map', found {header:?}"),
        ));
    }
    let mut darts: Option<usize> = None;
    let mut alpha: Option<(usize, Vec<Vec<usize>>)> = None;
    let mut sigma: Option<(usize, Vec<Vec<usize>>)> = None;
    let mut labels: Vec<(usize, usize, u8)> = Vec::new();
    let mut closed = false;
    for (lineno, line) in lines.by_ref() {
        let (key, rest) = line
            .split_once(char::is_whitespace)
            .map(|(k, r)| (k, r.trim()))
            .unwrap_or((line, ""));
        match key {
            "darts" => {
                let n: usize = rest
                    .parse()
                    .map_err(|_| Error::parse(lineno, format!("bad dart count {rest:?}")))?;
                if n == 0 || !n.is_multiple_of(2) {
                    return Err(Error::parse(lineno, "dart count must be even and positive"));
                }
                darts = Some(n);
            }
            "alpha" | "sigma" => {
                let cycles =
                    parse_cycle_list(rest).map_err(|e| Error::parse(lineno, e.to_string()))?;
                let slot = if key == "alpha" {
                    &mut alpha
                } else {
                    &mut sigma
                };
                if slot.is_some() {
                    return Err(Error::parse(lineno, format!("duplicate {key} line")));
                }
                *slot = Some((lineno, cycles));
            }
            "label" => {
                let mut parts = rest.split_whitespace();
                let (Some(d), Some(l), None) = (parts.next(), parts.next(), parts.next()) else {
                    return Err(Error::parse(lineno, "expected 'label <dart> <0|1|2>'"));
                };
                let d: usize = d
                    .parse()
                    .map_err(|_| Error::parse(lineno, format!("bad dart {d:?}")))?;
                let l: u8 = match l {
                    "0" => 0,
                    "1" => 1,
                    "2" => 2,
                    _ => return Err(Error::parse(lineno, format!("bad label {l:?}"))),
                };
                labels.push((lineno, d, l));
            }
            "end" => {
                closed = true;
                break;
            }
            other => return Err(Error::parse(lineno, format!("unknown keyword {other:?}"))),
        }
    }
    if let Some((lineno, _)) = lines.next() {
        return Err(Error::parse(lineno, "content after 'end'"));
    }
    if !closed {
        return Err(Error::parse(first, "missing 'end'"));
    }
    let n = darts.ok_or_else(|| Error::parse(first, "missing darts line"))?;
    let build = |slot: Option<(usize, Vec<Vec<usize>>)>, name: &str| -> Result<Permutation> {
        let (lineno, cycles) =
            slot.ok_or_else(|| Error::parse(first, format!("missing {name} line")))?;
        Permutation::from_cycles(n, &cycles).map_err(|e| Error::parse(lineno, e.to_string()))
    };
    let alpha = build(alpha, "alpha")?;
    let sigma = build(sigma, "sigma")?;
    let map = CombinatorialMap::from_parts(alpha, sigma)?;
    if labels.is_empty() {
        return Ok(MapFile::Plain(map));
    }
    let lineno = labels[0].0;
    let assignment: Vec<(usize, u8)> = labels.iter().map(|&(_, d, l)| (d, l)).collect();
    LabeledMap::from_vertex_labels(map, &assignment)
        .map(MapFile::Labeled)
        .map_err(|e| Error::parse(lineno, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tetrahedron_counts() {
        let t = tetrahedron();
        let r = t.validate();
        assert!(r.is_valid());
        assert_eq!(r.darts, 12);
        assert_eq!((r.vertices, r.edges, r.faces), (4, 6, 4));
        assert_eq!(t.euler_characteristic().unwrap(), 2);
    }

    #[test]
    fn fixed_dart_is_invalid() {
        let alpha = Permutation::parse_cycles("(1 2)", 3).unwrap();
        let sigma = Permutation::parse_cycles("(1 2 3)", 3).unwrap();
        let r = CombinatorialMap::from_parts(alpha, sigma)
            .unwrap()
            .validate();
        assert!(!r.fixed_point_free);
        assert!(!r.is_valid());
    }

    #[test]
    fn non_involution_is_invalid() {
        let alpha = Permutation::parse_cycles("(1 2 3 4)", 4).unwrap();
        let sigma = Permutation::identity(4);
        let r = CombinatorialMap::from_parts(alpha, sigma)
            .unwrap()
            .validate();
        assert!(!r.involution);
    }

    #[test]
    fn disjoint_triangles_are_disconnected() {
        let (m, _) = CombinatorialMap::from_vertex_faces(&[
            vec![0, 1, 2],
            vec![0, 2, 1],
            vec![3, 4, 5],
            vec![3, 5, 4],
        ])
        .unwrap();
        let r = m.validate();
        assert!(!r.connected);
        assert!(r.messages.iter().any(|s| s.contains("transitively")));
        assert!(m.euler_characteristic().is_err());
    }

    #[test]
    fn one_vertex_torus_counts() {
        let t = one_vertex_torus();
        assert_eq!(
            (t.vertex_count(), t.edge_count(), t.face_count()),
            (1, 3, 2)
        );
        assert_eq!(t.euler_characteristic().unwrap(), 0);
    }

    #[test]
    fn polygon_gluing_errors() {
        assert!(CombinatorialMap::from_polygons(&[vec![(0, 0), (1, 1)]]).is_err());
        assert!(
            CombinatorialMap::from_polygons(&[vec![(0, 0), (1, 0)], vec![(0, 0), (1, 0)]]).is_err()
        );
        assert!(CombinatorialMap::from_vertex_faces(&[vec![0, 1, 2], vec![0, 1, 2]]).is_err());
    }

    #[test]
    fn isomorphism_detects_relabeling() {
        let t = tetrahedron();
        let g = Permutation::parse_cycles("(1 5 9 2)(3 12)", 12).unwrap();
        let relabeled = CombinatorialMap::from_parts(
            t.alpha().conjugate(&g).unwrap(),
            t.sigma().conjugate(&g).unwrap(),
        )
        .unwrap();
        assert_ne!(relabeled, t);
        assert!(relabeled.is_isomorphic(&t));
        assert!(!octahedron().is_isomorphic(&t));
    }

    #[test]
    fn map_file_round_trip() {
        let lm = cube_checkerboard();
        let text = lm.to_file_string();
        assert!(text.starts_with("map\ndarts 24\nalpha "));
        assert_eq!(parse_map(&text).unwrap(), MapFile::Labeled(lm));
        let plain = one_vertex_torus();
        assert_eq!(
            parse_map(&plain.to_file_string()).unwrap(),
            MapFile::Plain(plain)
        );
    }

    #[test]
    fn map_file_errors() {
        let ok = "map\ndarts 6\nalpha (1 4)(2 5)(3 6)\nsigma (1 2 3 4 5 6)\nend\n";
        assert!(parse_map(ok).is_ok());
        let bad_alpha = "map\ndarts 6\nalpha (1 4)(2 5\nsigma (1 2 3 4 5 6)\nend\n";
        assert!(matches!(
            parse_map(bad_alpha),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(parse_map("map\ndarts 5\nalpha ()\nsigma ()\nend\n").is_err());
        assert!(parse_map("map\ndarts 6\nsigma (1 2)\nend\n").is_err());
        assert!(
            parse_map("map\ndarts 6\nalpha (1 4)(2 5)(3 6)\nsigma ()\nlabel 1 3\nend\n").is_err()
        );
        // every vertex needs exactly one label
        let partial = "map\ndarts 6\nalpha (1 2)(3 4)(5 6)\nsigma (1 3 5)\nlabel 1 0\nend\n";
        assert!(parse_map(partial).is_err());
        let twice = "map\ndarts 2\nalpha (1 2)\nsigma ()\nlabel 1 0\nlabel 1 0\nlabel 2 1\nend\n";
        assert!(parse_map(twice).is_err());
        assert!(parse_map("constellation\n").is_err());
    }
}
