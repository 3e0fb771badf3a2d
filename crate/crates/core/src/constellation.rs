//! Branched covers of the sphere as permutation tuples.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::ledger::LedgerLine;
use crate::perm::{orbit_zero_based, parse_cycle_list, Permutation};

/// Largest degree for which [`Constellation::canonical_form`] enumerates
/// all relabelings.
pub const DEFAULT_CANONICAL_CAP: usize = 8;

/// Degree `d` together with an ordered tuple of permutations of `{1..d}`.
///
/// Construction only checks that every entry has degree `d`; product and
/// transitivity are diagnosed by [`Constellation::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Constellation {
    degree: usize,
    tuple: Vec<Permutation>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub product_is_identity: bool,
    pub transitive: bool,
    pub simple: bool,
    pub degree: usize,
    pub branch_count: usize,
    /// `2d - b`; the Euler characteristic when the tuple is valid.
    pub euler_characteristic: i64,
    /// Present only for transitive tuples with even Euler characteristic.
    pub genus: Option<i64>,
    pub messages: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.product_is_identity && self.transitive
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "degree {}", self.degree)?;
        writeln!(f, "branch points {}", self.branch_count)?;
        writeln!(f, "product identity: {}", yes_no(self.product_is_identity))?;
        writeln!(f, "transitive: {}", yes_no(self.transitive))?;
        writeln!(f, "simple: {}", yes_no(self.simple))?;
        writeln!(f, "euler characteristic {}", self.euler_characteristic)?;
        if let Some(g) = self.genus {
            writeln!(f, "genus {g}")?;
        }
        for m in &self.messages {
            writeln!(f, "note: {m}")?;
        }
        writeln!(f, "valid: {}", yes_no(self.is_valid()))
    }
}

impl Constellation {
    pub fn new(degree: usize, tuple: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidConstellation(
                "degree must be positive".into(),
            ));
        }
        for p in &tuple {
            if p.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: p.degree(),
                });
            }
        }
        Ok(Constellation { degree, tuple })
    }

    /// Convenience constructor from cycle-notation strings.
    pub fn from_cycles(degree: usize, entries: &[&str]) -> Result<Self> {
        let tuple = entries
            .iter()
            .map(|e| Permutation::parse_cycles(e, degree))
            .collect::<Result<Vec<_>>>()?;
        Self::new(degree, tuple)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn tuple(&self) -> &[Permutation] {
        &self.tuple
    }

    pub fn len(&self) -> usize {
        self.tuple.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuple.is_empty()
    }

    /// Left-to-right product of the tuple; the identity for an empty tuple.
    pub fn product(&self) -> Permutation {
        self.tuple
            .iter()
            .fold(Permutation::identity(self.degree), |acc, p| acc.then(p))
    }

    pub fn is_transitive(&self) -> bool {
        orbit_zero_based(&self.tuple, self.degree, 0).len() == self.degree
    }

    pub fn is_simple(&self) -> bool {
        self.tuple.iter().all(Permutation::is_transposition)
    }

    /// Never fails; findings are recorded in the report.
    pub fn validate(&self) -> ValidationReport {
        let product_is_identity = self.product().is_identity();
        let transitive = self.is_transitive();
        let simple = self.is_simple();
        let chi = self.riemann_hurwitz_chi();
        let mut messages = Vec::new();
        if !product_is_identity {
            messages.push(format!(
                "tuple product is {} instead of the identity",
                self.product()
            ));
        }
        if !transitive {
            let orbit = orbit_zero_based(&self.tuple, self.degree, 0);
            messages.push(format!(
                "not transitive: orbit of 1 has {} of {} sheets",
                orbit.len(),
                self.degree
            ));
        }
        if !simple {
            let bad = self
                .tuple
                .iter()
                .positions(|p| !p.is_transposition())
                .map(|i| (i + 1).to_string())
                .join(", ");
            messages.push(format!("entries that are not transpositions: {bad}"));
        }
        if chi.rem_euclid(2) != 0 {
            messages.push(format!("odd euler characteristic {chi}"));
        }
        if self.degree == 1 {
            messages.push(
                "degree 1 cover is a sphere; a closed leaf of other genus needs degree >= 2".into(),
            );
        }
        let genus = (transitive && chi.rem_euclid(2) == 0).then(|| (2 - chi) / 2);
        ValidationReport {
            product_is_identity,
            transitive,
            simple,
            degree: self.degree,
            branch_count: self.tuple.len(),
            euler_characteristic: chi,
            genus,
            messages,
        }
    }

    fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidConstellation(report.messages.join("; ")))
        }
    }

    fn riemann_hurwitz_chi(&self) -> i64 {
        2 * self.degree as i64 - self.branching_total() as i64
    }

    /// `sum_i (d - cycle_count(s_i))`.
    pub fn branching_total(&self) -> u64 {
        self.tuple
            .iter()
            .map(|p| (self.degree - p.cycle_count()) as u64)
            .sum()
    }

    /// Euler characteristic of the covering surface, `2d - b`.
    pub fn euler_characteristic(&self) -> Result<i64> {
        self.ensure_valid()?;
        Ok(self.riemann_hurwitz_chi())
    }

    pub fn genus(&self) -> Result<i64> {
        let chi = self.euler_characteristic()?;
        if chi.rem_euclid(2) != 0 {
            return Err(Error::InvalidConstellation(format!(
                "odd euler characteristic {chi}"
            )));
        }
        Ok((2 - chi) / 2)
    }

    /// Adds `n` sheets, each attached to `anchor` by two copies of the
    /// transposition `(anchor, s)` appended to the tuple.
    pub fn plumb(&self, n: usize, anchor: usize) -> Result<Constellation> {
        self.ensure_valid()?;
        if anchor == 0 || anchor > self.degree {
            return Err(Error::OutOfRange {
                what: "anchor",
                value: anchor as i64,
                max: self.degree,
            });
        }
        if n == 0 {
            return Ok(self.clone());
        }
        let degree = self.degree + n;
        let mut tuple: Vec<Permutation> = self.tuple.iter().map(|p| extend(p, degree)).collect();
        for s in self.degree + 1..=degree {
            let t = Permutation::transposition(degree, anchor, s)?;
            tuple.push(t.clone());
            tuple.push(t);
        }
        Ok(Constellation { degree, tuple })
    }

    pub fn canonical_form(&self) -> Result<Constellation> {
        self.canonical_form_with_cap(DEFAULT_CANONICAL_CAP)
    }

    /// Least tuple, comparing concatenated image sequences, over all
    /// simultaneous conjugates `(g^-1 s_1 g, ..., g^-1 s_n g)`.
    pub fn canonical_form_with_cap(&self, cap: usize) -> Result<Constellation> {
        if self.degree > cap {
            return Err(Error::DegreeAboveCap {
                degree: self.degree,
                cap,
            });
        }
        Ok(self.canonical_unchecked())
    }

    pub(crate) fn canonical_unchecked(&self) -> Constellation {
        if self.tuple.is_empty() {
            return self.clone();
        }
        let d = self.degree;
        let mut best: Vec<Permutation> = self.tuple.clone();
        for relabel in (0..d).permutations(d) {
            let g = Permutation::from_zero_based(relabel);
            // lexicographic comparison entry by entry with early exit
            let mut candidate = Vec::with_capacity(self.tuple.len());
            let mut ordering = std::cmp::Ordering::Equal;
            for (i, p) in self.tuple.iter().enumerate() {
                let c = p.conjugate_unchecked(&g);
                if ordering == std::cmp::Ordering::Equal {
                    ordering = c.cmp(&best[i]);
                    if ordering == std::cmp::Ordering::Greater {
                        break;
                    }
                }
                candidate.push(c);
            }
            if ordering == std::cmp::Ordering::Less {
                best = candidate;
            }
        }
        Constellation {
            degree: d,
            tuple: best,
        }
    }

    /// `b` is even for every valid constellation.
    pub fn parity_check(&self) -> Result<LedgerLine> {
        self.ensure_valid()?;
        let b = self.branching_total() as i64;
        Ok(LedgerLine::new(
            "parity: b mod 2 = 0",
            b.rem_euclid(2),
            0,
            format!("d = {}, b = {b}", self.degree),
        ))
    }

    /// Serializes in the `constellation ... end` block format.
    pub fn to_file_string(&self) -> String {
        let mut s = String::new();
        s.push_str("constellation\n");
        s.push_str(&format!("degree {}\n", self.degree));
        for p in &self.tuple {
            s.push_str(&format!("perm {p}\n"));
        }
        s.push_str("end\n");
        s
    }
}

impl fmt::Display for Constellation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_file_string())
    }
}

fn extend(p: &Permutation, degree: usize) -> Permutation {
    let mut images: Vec<usize> = (0..p.degree()).map(|i| p.at(i)).collect();
    images.extend(p.degree()..degree);
    Permutation::from_zero_based(images)
}

/// Strips a trailing `#` comment and surrounding whitespace.
pub(crate) fn content(line: &str) -> &str {
    match line.find('#') {
        Some(i) => line[..i].trim(),
        None => line.trim(),
    }
}

/// Parses every `constellation ... end` block in `text`.
pub fn parse_constellations(text: &str) -> Result<Vec<Constellation>> {
    let mut out = Vec::new();
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, content(l)))
        .filter(|(_, l)| !l.is_empty());
    while let Some((lineno, header)) = lines.next() {
        if header != "constellation" {
            return Err(Error::parse(
                lineno,
                format!("expected 'constellation', found {header:?}"),
            ));
        }
        let mut degree: Option<usize> = None;
        let mut tuple = Vec::new();
        let mut closed = false;
        for (lineno, line) in lines.by_ref() {
            let (key, rest) = line
                .split_once(char::is_whitespace)
                .map(|(k, r)| (k, r.trim()))
                .unwrap_or((line, ""));
            match key {
                "degree" => {
                    if degree.is_some() {
                        return Err(Error::parse(lineno, "duplicate degree line"));
                    }
                    let d: usize = rest
                        .parse()
                        .map_err(|_| Error::parse(lineno, format!("bad degree {rest:?}")))?;
                    if d == 0 {
                        return Err(Error::parse(lineno, "degree must be positive"));
                    }
                    degree = Some(d);
                }
                "perm" => {
                    let d = degree
                        .ok_or_else(|| Error::parse(lineno, "perm line before degree line"))?;
                    let cycles =
                        parse_cycle_list(rest).map_err(|e| Error::parse(lineno, e.to_string()))?;
                    let p = Permutation::from_cycles(d, &cycles)
                        .map_err(|e| Error::parse(lineno, e.to_string()))?;
                    tuple.push(p);
                }
                "end" => {
                    closed = true;
                    break;
                }
                other => {
                    return Err(Error::parse(lineno, format!("unknown keyword {other:?}")));
                }
            }
        }
        if !closed {
            return Err(Error::parse(lineno, "missing 'end'"));
        }
        let degree = degree.ok_or_else(|| Error::parse(lineno, "missing degree line"))?;
        out.push(Constellation { degree, tuple });
    }
    Ok(out)
}

/// Parses exactly one constellation block.
pub fn parse_constellation(text: &str) -> Result<Constellation> {
    let mut all = parse_constellations(text)?;
    match all.len() {
        1 => Ok(all.pop().unwrap()),
        n => Err(Error::parse(
            0,
            format!("expected one constellation, found {n}"),
        )),
    }
}
