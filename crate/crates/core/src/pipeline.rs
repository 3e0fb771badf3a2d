//! End-to-end constructions on a single closed surface, each producing
//! its constellations together with the ledger lines that audit them.

use crate::constellation::Constellation;
use crate::error::{Error, Result};
use crate::ledger::{
    belyi_constants_check, hex_constants_check, leaf_euler_check, quad_constants_check, LedgerLine,
    LedgerReport,
};
use crate::surface::{
    barycentric_subdivide, dessin_constellation, dual_matching, extract_dessin, merge_to_hexagons,
    validate_quadrangulation, CombinatorialMap, LabeledMap, Matching,
};

#[derive(Debug, Clone)]
pub struct BelyiOutcome {
    pub constellation: Constellation,
    pub ledger: LedgerReport,
}

/// Subdivide, extract the dessin, read off its monodromy and audit it
/// against the triangulation constants.
pub fn belyi_pipeline(map: &CombinatorialMap) -> Result<BelyiOutcome> {
    let chi = map.euler_characteristic()?;
    let v = map.vertex_count() as i64;
    let subdivided = barycentric_subdivide(map)?;
    let dessin = extract_dessin(&subdivided)?;
    let constellation = dessin_constellation(&dessin)?;
    let mut ledger = LedgerReport::default();
    ledger.push(leaf_euler_check(&constellation)?);
    ledger.push(LedgerLine::new(
        "surface euler: chi(cover) = chi(map)",
        constellation.euler_characteristic()?,
        chi,
        format!(
            "V = {v}, E = {}, F = {}",
            map.edge_count(),
            map.face_count()
        ),
    ));
    ledger.extend(belyi_constants_check(&constellation, v, chi)?);
    ledger.push(constellation.parity_check()?);
    Ok(BelyiOutcome {
        constellation,
        ledger,
    })
}

#[derive(Debug, Clone)]
pub struct QuadOutcome {
    pub quad_constellation: Constellation,
    pub matching: Matching,
    pub hexagons: LabeledMap,
    pub hex_constellation: Constellation,
    pub ledger: LedgerReport,
}

/// Audits a {0,1}-labeled quadrangulation and the hexagon map obtained
/// from a dual perfect matching. The transversal count `y` is the number
/// of 0-labeled vertices.
pub fn quad_pipeline(lm: &LabeledMap) -> Result<QuadOutcome> {
    let report = validate_quadrangulation(lm);
    if !report.valid {
        return Err(Error::InvalidMap(report.messages.join("; ")));
    }
    let chi = report.euler_characteristic;
    let v = report.vertices as i64;
    let [y0, y1, _] = lm.label_counts();
    let y = y0 as i64;
    let mut ledger = LedgerReport::default();
    ledger.push(LedgerLine::new(
        "transversal copies: |Y0| = |Y1|",
        y0 as i64,
        y1 as i64,
        format!("v = {v}"),
    ));
    ledger.push(LedgerLine::new(
        "quad count: q = v - chi",
        report.quadrilaterals as i64,
        v - chi,
        format!("v = {v}, chi = {chi}"),
    ));
    let quad_constellation = dessin_constellation(&extract_dessin(lm)?)?;
    ledger.push(leaf_euler_check(&quad_constellation)?);
    ledger.extend(quad_constants_check(&quad_constellation, y, chi)?);
    ledger.push(quad_constellation.parity_check()?);

    let matching = dual_matching(lm)?;
    let hexagons = merge_to_hexagons(lm, &matching)?;
    let h = hexagons.map().face_count() as i64;
    ledger.push(LedgerLine::new(
        "hex count: 2h = v - chi",
        2 * h,
        v - chi,
        format!("h = {h}, v = {v}, chi = {chi}"),
    ));
    let hex_constellation = dessin_constellation(&extract_dessin(&hexagons)?)?;
    ledger.push(leaf_euler_check(&hex_constellation)?);
    ledger.extend(hex_constants_check(&hex_constellation, y, chi)?);
    ledger.push(hex_constellation.parity_check()?);
    Ok(QuadOutcome {
        quad_constellation,
        matching,
        hexagons,
        hex_constellation,
        ledger,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::{
        cube_checkerboard, one_vertex_torus, tetrahedron, torus_grid_checkerboard,
    };

    #[test]
    fn belyi_tetrahedron() {
        let out = belyi_pipeline(&tetrahedron()).unwrap();
        assert_eq!(out.constellation.degree(), 12);
        assert!(out.ledger.all_passed, "{}", out.ledger);
        assert_eq!(out.ledger.lines.len(), 5);
    }

    #[test]
    fn belyi_torus() {
        let out = belyi_pipeline(&one_vertex_torus()).unwrap();
        assert_eq!(out.constellation.degree(), 6);
        assert!(out.ledger.all_passed);
    }

    #[test]
    fn belyi_constants_fail_off_triangulations() {
        // the cube's faces are squares, so t/2 = v - chi does not apply
        let out = belyi_pipeline(&crate::surface::cube()).unwrap();
        assert!(!out.ledger.all_passed);
        assert!(out.ledger.lines[0].passed);
    }

    #[test]
    fn quad_cube_and_torus() {
        for lm in [cube_checkerboard(), torus_grid_checkerboard(2, 2).unwrap()] {
            let out = quad_pipeline(&lm).unwrap();
            assert!(out.ledger.all_passed, "{}", out.ledger);
        }
        let out = quad_pipeline(&cube_checkerboard()).unwrap();
        assert_eq!(out.quad_constellation.degree(), 12);
        assert_eq!(out.quad_constellation.branching_total(), 22);
        assert_eq!(out.hex_constellation.degree(), 9);
        assert_eq!(out.hex_constellation.branching_total(), 16);
    }
}
