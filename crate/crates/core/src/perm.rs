//! Permutations of `{1..d}`.
//!
//! Products are read left to right: `p.compose(&q)` is the permutation
//! `x -> q(p(x))`, so a tuple `(s1, s2, ..., sn)` multiplies out in writing
//! order. Every other module inherits this convention.
//!
//! Points are 1-based in the public API and in cycle notation. Storage is
//! 0-based.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// `true`: `(p * q)(x) = q(p(x))`.
pub const LEFT_TO_RIGHT: bool = true;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // images[i] is the 0-based image of the 0-based point i
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(degree >= 1, "permutation degree must be positive");
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 1-based images: `images[i - 1]` is the image of `i`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let d = images.len();
        if d == 0 {
            return Err(Error::CycleNotation("degree must be positive".into()));
        }
        let mut seen = vec![false; d];
        let mut out = Vec::with_capacity(d);
        for &y in images {
            if y == 0 || y > d {
                return Err(Error::OutOfRange {
                    what: "image",
                    value: y as i64,
                    max: d,
                });
            }
            if std::mem::replace(&mut seen[y - 1], true) {
                return Err(Error::CycleNotation(format!("image {y} repeated")));
            }
            out.push((y - 1) as u32);
        }
        Ok(Permutation { images: out })
    }

    pub(crate) fn from_zero_based(images: Vec<usize>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &x)| i == x)
        });
        Permutation {
            images: images.into_iter().map(|x| x as u32).collect(),
        }
    }

    /// The transposition swapping the 1-based points `a` and `b`.
    pub fn transposition(degree: usize, a: usize, b: usize) -> Result<Self> {
        for p in [a, b] {
            if p == 0 || p > degree {
                return Err(Error::OutOfRange {
                    what: "point",
                    value: p as i64,
                    max: degree,
                });
            }
        }
        if a == b {
            return Err(Error::CycleNotation(format!("repeated point {a}")));
        }
        let mut p = Self::identity(degree);
        p.images.swap(a - 1, b - 1);
        Ok(p)
    }

    /// Builds a permutation from cycles of 1-based points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        if degree == 0 {
            return Err(Error::CycleNotation("degree must be positive".into()));
        }
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for &x in cycle {
                if x == 0 || x > degree {
                    return Err(Error::OutOfRange {
                        what: "point",
                        value: x as i64,
                        max: degree,
                    });
                }
                if std::mem::replace(&mut used[x - 1], true) {
                    return Err(Error::CycleNotation(format!("repeated point {x}")));
                }
            }
            for (i, &x) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                images[x - 1] = (next - 1) as u32;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation such as `(1 2)(3 4)` or `()`.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        let cycles = parse_cycle_list(text)?;
        Self::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `x`. Panics when `x` is out of range.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] as usize + 1
    }

    #[inline]
    pub(crate) fn at(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    /// 1-based images in point order.
    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&y| y as usize + 1)
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }

    /// `x -> other(self(x))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        Ok(self.then(other))
    }

    #[inline]
    pub(crate) fn then(&self, other: &Self) -> Self {
        Permutation {
            images: self
                .images
                .iter()
                .map(|&y| other.images[y as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &y) in self.images.iter().enumerate() {
            inv[y as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `g^-1 * self * g`: the cycles of `self` relabeled by `g`.
    pub fn conjugate(&self, g: &Self) -> Result<Self> {
        self.check_degree(g)?;
        Ok(self.conjugate_unchecked(g))
    }

    pub(crate) fn conjugate_unchecked(&self, g: &Self) -> Self {
        // (g^-1 p g)(g(x)) = g(p(x))
        let mut images = vec![0u32; self.images.len()];
        for (x, &px) in self.images.iter().enumerate() {
            images[g.images[x] as usize] = g.images[px as usize];
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &y)| i as u32 == y)
    }

    pub fn is_transposition(&self) -> bool {
        let moved = self
            .images
            .iter()
            .enumerate()
            .filter(|&(i, &y)| i as u32 != y)
            .count();
        moved == 2
    }

    pub fn is_involution(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &y)| self.images[y as usize] == i as u32)
    }

    pub fn fixed_points(&self) -> impl Iterator<Item = usize> + '_ {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &y)| i as u32 == y)
            .map(|(i, _)| i + 1)
    }

    /// All cycles, fixed points included, each starting at its least
    /// element and sorted by it. Points are 1-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut out = Vec::new();
        for start in 0..d {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Number of orbits on `{1..d}`, fixed points included.
    pub fn cycle_count(&self) -> usize {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut count = 0;
        for start in 0..d {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
            }
        }
        count
    }

    /// Cycle lengths in non-increasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    /// Cycle notation without fixed points, cycles sorted by least element.
    pub fn to_cycle_string(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            f.write_str("(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

/// Splits cycle notation into its cycles without checking a degree.
pub(crate) fn parse_cycle_list(text: &str) -> Result<Vec<Vec<usize>>> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::CycleNotation("empty cycle notation".into()));
    }
    let mut cycles = Vec::new();
    let mut rest = text;
    while !rest.is_empty() {
        let Some(after_open) = rest.strip_prefix('(') else {
            return Err(Error::CycleNotation(format!(
                "expected '(' at {:?}",
                truncate(rest)
            )));
        };
        let Some(close) = after_open.find(')') else {
            return Err(Error::CycleNotation("unclosed '('".into()));
        };
        let body = &after_open[..close];
        if body.contains('(') {
            return Err(Error::CycleNotation("nested '('".into()));
        }
        let mut cycle = Vec::new();
        for tok in body.split_whitespace() {
            let x: usize = tok
                .parse()
                .map_err(|_| Error::CycleNotation(format!("bad point {tok:?}")))?;
            if x == 0 {
                return Err(Error::CycleNotation("points are 1-based".into()));
            }
            cycle.push(x);
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        rest = after_open[close + 1..].trim_start();
    }
    Ok(cycles)
}

fn truncate(s: &str) -> &str {
    match s.char_indices().nth(12) {
        Some((i, _)) => &s[..i],
        None => s,
    }
}

/// Orbit of the 1-based point `start` under the group generated by `gens`.
pub fn orbit_closure(gens: &[Permutation], start: usize) -> Result<BTreeSet<usize>> {
    let degree = match gens.first() {
        Some(g) => g.degree(),
        None => {
            if start == 0 {
                return Err(Error::OutOfRange {
                    what: "start point",
                    value: 0,
                    max: 0,
                });
            }
            return Ok(BTreeSet::from([start]));
        }
    };
    for g in gens {
        gens[0].check_degree(g)?;
    }
    if start == 0 || start > degree {
        return Err(Error::OutOfRange {
            what: "start point",
            value: start as i64,
            max: degree,
        });
    }
    Ok(orbit_zero_based(gens, degree, start - 1)
        .into_iter()
        .map(|x| x + 1)
        .collect())
}

/// Orbits are closed under inverses automatically for finite permutations.
pub(crate) fn orbit_zero_based(gens: &[Permutation], degree: usize, start: usize) -> Vec<usize> {
    let mut seen = vec![false; degree];
    seen[start] = true;
    let mut stack = vec![start];
    let mut out = vec![start];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g.at(x);
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
                out.push(y);
            }
        }
    }
    out
}

/// Product of a tuple read left to right. `None` for an empty tuple.
pub fn product(tuple: &[Permutation]) -> Result<Option<Permutation>> {
    let mut iter = tuple.iter();
    let Some(first) = iter.next() else {
        return Ok(None);
    };
    let mut acc = first.clone();
    for p in iter {
        acc = acc.compose(p)?;
    }
    Ok(Some(acc))
}
