//! Exact integer bookkeeping identities evaluated on a single closed leaf.
//!
//! On a leaf `S` of Euler characteristic `chi` covered with degree `d`, the
//! Euler class pairs to `chi`, the pulled-back sphere class to `2d`, the
//! branch locus to the total branching `b`, and a transversal to its
//! intersection count `y` (or `v` vertices).

use std::fmt;

use crate::constellation::Constellation;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LedgerLine {
    pub identity_name: String,
    pub left_value: i64,
    pub right_value: i64,
    pub passed: bool,
    pub context: String,
}

impl LedgerLine {
    pub fn new(name: impl Into<String>, left: i64, right: i64, context: impl Into<String>) -> Self {
        LedgerLine {
            identity_name: name.into(),
            left_value: left,
            right_value: right,
            passed: left == right,
            context: context.into(),
        }
    }

    fn verdict(&self) -> &'static str {
        if self.passed {
            "PASS"
        } else {
            "FAIL"
        }
    }

    /// Tab-separated: name, left, right, verdict, context.
    pub fn to_tsv(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}",
            self.identity_name,
            self.left_value,
            self.right_value,
            self.verdict(),
            self.context
        )
    }
}

impl fmt::Display for LedgerLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} = {} [{}] ({})",
            self.identity_name,
            self.left_value,
            self.right_value,
            self.verdict(),
            self.context
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LedgerReport {
    pub lines: Vec<LedgerLine>,
    pub all_passed: bool,
}

impl Default for LedgerReport {
    fn default() -> Self {
        LedgerReport {
            lines: Vec::new(),
            all_passed: true,
        }
    }
}

impl LedgerReport {
    pub fn new(lines: Vec<LedgerLine>) -> Self {
        let all_passed = lines.iter().all(|l| l.passed);
        LedgerReport { lines, all_passed }
    }

    pub fn push(&mut self, line: LedgerLine) {
        self.all_passed &= line.passed;
        self.lines.push(line);
    }

    pub fn extend(&mut self, lines: impl IntoIterator<Item = LedgerLine>) {
        for l in lines {
            self.push(l);
        }
    }

    pub fn to_tsv(&self) -> String {
        self.lines.iter().map(|l| l.to_tsv() + "\n").collect()
    }
}

impl fmt::Display for LedgerReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            writeln!(f, "{l}")?;
        }
        Ok(())
    }
}

struct Counts {
    d: i64,
    b: i64,
    chi: i64,
}

fn counts(c: &Constellation) -> Result<Counts> {
    let chi = c.euler_characteristic()?;
    Ok(Counts {
        d: c.degree() as i64,
        b: c.branching_total() as i64,
        chi,
    })
}

/// `chi + b = 2d`: the Euler class formula on a closed leaf.
pub fn leaf_euler_check(c: &Constellation) -> Result<LedgerLine> {
    let Counts { d, b, chi } = counts(c)?;
    Ok(LedgerLine::new(
        "leaf euler: chi + b = 2d",
        chi + b,
        2 * d,
        format!("d = {d}, b = {b}, chi = {chi}"),
    ))
}

/// Barycentric Belyi constants on a triangulated leaf with `v` vertices:
/// `b = 12v - 13chi` and `2d = 12v - 12chi`.
pub fn belyi_constants_check(c: &Constellation, v: i64, chi: i64) -> Result<[LedgerLine; 2]> {
    let Counts { d, b, .. } = counts(c)?;
    let ctx = format!("d = {d}, b = {b}, v = {v}, chi = {chi}");
    Ok([
        LedgerLine::new(
            "belyi branch: b = 12v - 13chi",
            b,
            12 * v - 13 * chi,
            ctx.clone(),
        ),
        LedgerLine::new(
            "belyi degree: 2d = 12v - 12chi",
            2 * d,
            12 * v - 12 * chi,
            ctx,
        ),
    ])
}

fn check_transversal(y: i64) -> Result<()> {
    if y <= 0 {
        return Err(Error::Precondition(format!(
            "transversal count must be positive, got {y}"
        )));
    }
    Ok(())
}

/// Quadrilateral constants with `v = 2y` vertices:
/// `2d = 8y - 4chi` and `b = 8y - 5chi`.
pub fn quad_constants_check(c: &Constellation, y: i64, chi: i64) -> Result<[LedgerLine; 2]> {
    check_transversal(y)?;
    let Counts { d, b, .. } = counts(c)?;
    let ctx = format!("d = {d}, b = {b}, y = {y}, chi = {chi}");
    Ok([
        LedgerLine::new(
            "quad degree: 2d = 8y - 4chi",
            2 * d,
            8 * y - 4 * chi,
            ctx.clone(),
        ),
        LedgerLine::new("quad branch: b = 8y - 5chi", b, 8 * y - 5 * chi, ctx),
    ])
}

/// Hexagon constants with `v = 2y` vertices: `2d = 6y - 3chi`, and the
/// branch form `b = 6y - 4chi` obtained by combining it with `chi + b = 2d`.
pub fn hex_constants_check(c: &Constellation, y: i64, chi: i64) -> Result<[LedgerLine; 2]> {
    check_transversal(y)?;
    let Counts { d, b, .. } = counts(c)?;
    let ctx = format!("d = {d}, b = {b}, y = {y}, chi = {chi}");
    Ok([
        LedgerLine::new(
            "hex degree: 2d = 6y - 3chi",
            2 * d,
            6 * y - 3 * chi,
            ctx.clone(),
        ),
        LedgerLine::new(
            "hex branch (derived): b = 6y - 4chi",
            b,
            6 * y - 4 * chi,
            ctx,
        ),
    ])
}
