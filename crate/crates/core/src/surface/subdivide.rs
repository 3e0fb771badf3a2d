//! Barycentric subdivision and the Belyi monodromy of a bipartite map.

use super::{CombinatorialMap, LabeledMap};
use crate::constellation::Constellation;
use crate::error::{Error, Result};
use crate::perm::Permutation;

// Six new darts per original dart x:
//   A: at vertex(x), toward the midpoint of edge(x)
//   M: at that midpoint, toward vertex(x)
//   CS: at the center of face(x), toward the midpoint of edge(x)
//   DS: at the midpoint, toward the center of face(x)
//   CC: at the center of face(x), toward the corner of x at vertex(x)
//   DC: at vertex(x), toward the center of face(x)
const A: usize = 0;
const M: usize = 1;
const CS: usize = 2;
const DS: usize = 3;
const CC: usize = 4;
const DC: usize = 5;

/// First barycentric subdivision. Original vertices get label 0, edge
/// midpoints 1 and face centers 2; every triangle of the result has one
/// vertex of each label.
pub fn barycentric_subdivide(m: &CombinatorialMap) -> Result<LabeledMap> {
    m.ensure_valid()?;
    let n = m.dart_count();
    let alpha = m.alpha();
    let sigma = m.sigma();
    let phi_inv = m.phi().inverse();
    let dart = |x: usize, kind: usize| 6 * x + kind;

    let mut new_alpha = vec![0usize; 6 * n];
    let mut new_sigma = vec![0usize; 6 * n];
    let mut labels = vec![0u8; 6 * n];
    for x in 0..n {
        for (p, q) in [(A, M), (CS, DS), (CC, DC)] {
            new_alpha[dart(x, p)] = dart(x, q);
            new_alpha[dart(x, q)] = dart(x, p);
        }
        // around an original vertex: half-edge, then the corner sector
        // that follows it counterclockwise
        new_sigma[dart(x, A)] = dart(sigma.at(x), DC);
        new_sigma[dart(x, DC)] = dart(x, A);
        // around a midpoint: the face of x lies to the left of M(x)
        new_sigma[dart(x, M)] = dart(x, DS);
        new_sigma[dart(x, DS)] = dart(alpha.at(x), M);
        // around a face center the boundary is traversed clockwise
        new_sigma[dart(x, CC)] = dart(phi_inv.at(x), CS);
        new_sigma[dart(x, CS)] = dart(x, CC);

        labels[dart(x, A)] = 0;
        labels[dart(x, DC)] = 0;
        labels[dart(x, M)] = 1;
        labels[dart(x, DS)] = 1;
        labels[dart(x, CS)] = 2;
        labels[dart(x, CC)] = 2;
    }
    LabeledMap::new(CombinatorialMap::from_arrays(new_alpha, new_sigma), labels)
}

/// Keeps the edges joining a 0-vertex to a 1-vertex with the induced
/// rotations. Darts keep their relative order.
pub fn extract_dessin(lm: &LabeledMap) -> Result<LabeledMap> {
    let map = lm.map();
    map.ensure_valid()?;
    let n = map.dart_count();
    let keep: Vec<bool> = (0..n)
        .map(|x| {
            let (a, b) = (lm.label0(x), lm.label0(map.alpha().at(x)));
            (a == 0 && b == 1) || (a == 1 && b == 0)
        })
        .collect();
    if !keep.iter().any(|&k| k) {
        return Err(Error::Precondition(
            "labels give no edge joining a 0-vertex to a 1-vertex".into(),
        ));
    }
    restrict(lm, &keep)
}

/// The submap on the darts flagged in `keep` (closed under alpha), with
/// rotations induced from sigma and darts renumbered in order.
pub(crate) fn restrict(lm: &LabeledMap, keep: &[bool]) -> Result<LabeledMap> {
    let map = lm.map();
    let n = map.dart_count();
    let mut new_index = vec![usize::MAX; n];
    let mut old = Vec::new();
    for x in (0..n).filter(|&x| keep[x]) {
        new_index[x] = old.len();
        old.push(x);
    }
    let mut alpha = Vec::with_capacity(old.len());
    let mut sigma = Vec::with_capacity(old.len());
    let mut labels = Vec::with_capacity(old.len());
    for &x in &old {
        let ax = map.alpha().at(x);
        debug_assert!(keep[ax]);
        alpha.push(new_index[ax]);
        let mut y = map.sigma().at(x);
        while !keep[y] {
            y = map.sigma().at(y);
        }
        sigma.push(new_index[y]);
        labels.push(lm.label0(x));
    }
    LabeledMap::new(CombinatorialMap::from_arrays(alpha, sigma), labels)
}

/// Monodromy `(s0, s1, s_inf)` of the Belyi map of a bipartite map.
///
/// Sheets are the edges, numbered by the order of their 0-end darts.
/// `s0` and `s1` rotate the edges around the 0- and 1-vertices, and
/// `s_inf = (s0 s1)^-1`.
pub fn dessin_constellation(dessin: &LabeledMap) -> Result<Constellation> {
    let map = dessin.map();
    map.ensure_valid()?;
    let n = map.dart_count();
    let alpha = map.alpha();
    let sigma = map.sigma();
    for x in 0..n {
        let (a, b) = (dessin.label0(x), dessin.label0(alpha.at(x)));
        if !((a == 0 && b == 1) || (a == 1 && b == 0)) {
            return Err(Error::Precondition(format!(
                "edge at dart {} joins labels {a} and {b}; a dessin needs 0-1 edges",
                x + 1
            )));
        }
    }
    // sheet of an edge, indexed by either of its darts
    let mut sheet = vec![usize::MAX; n];
    let mut zero_end = Vec::with_capacity(n / 2);
    for x in (0..n).filter(|&x| dessin.label0(x) == 0) {
        sheet[x] = zero_end.len();
        sheet[alpha.at(x)] = zero_end.len();
        zero_end.push(x);
    }
    let d = zero_end.len();
    let s0: Vec<usize> = zero_end.iter().map(|&x| sheet[sigma.at(x)]).collect();
    let s1: Vec<usize> = zero_end
        .iter()
        .map(|&x| sheet[sigma.at(alpha.at(x))])
        .collect();
    let s0 = Permutation::from_zero_based(s0);
    let s1 = Permutation::from_zero_based(s1);
    let s_inf = s0.then(&s1).inverse();
    Constellation::new(d, vec![s0, s1, s_inf])
}
