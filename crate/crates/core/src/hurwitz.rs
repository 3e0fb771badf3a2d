//! Braid group action on constellations.
//!
//! The generator `b_k` acts on adjacent entries by
//! `(s_k, s_k+1) -> (s_k s_k+1 s_k^-1, s_k)`; its inverse by
//! `(s_k, s_k+1) -> (s_k+1, s_k+1^-1 s_k s_k+1)`. Both preserve the tuple
//! product.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::constellation::{Constellation, DEFAULT_CANONICAL_CAP};
use crate::error::{Error, Result};
use crate::perm::Permutation;

pub const DEFAULT_ORBIT_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Backward,
}

/// Signed generator indices: `k` is `b_k`, `-k` its inverse.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BraidWord(Vec<i64>);

impl BraidWord {
    pub fn new(letters: Vec<i64>) -> Result<Self> {
        if let Some(pos) = letters.iter().position(|&l| l == 0) {
            return Err(Error::Precondition(format!(
                "braid letter {} is zero",
                pos + 1
            )));
        }
        Ok(BraidWord(letters))
    }

    pub fn letters(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord(self.0.iter().rev().map(|l| -l).collect())
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i64>()
                    .map_err(|_| Error::parse(1, format!("bad braid letter {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        BraidWord::new(letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Monodromy of the degree-`d` surface-bundle fiber cover: `4(d-1)` simple
/// branch points in groups of four, the `i`-th group carrying `(i i+1)`.
pub fn bundle_tuple(d: usize) -> Result<Constellation> {
    if d < 2 {
        return Err(Error::Precondition(format!(
            "bundle degree must be at least 2, got {d}"
        )));
    }
    let mut tuple = Vec::with_capacity(4 * (d - 1));
    for i in 1..d {
        let t = Permutation::transposition(d, i, i + 1)?;
        tuple.extend(std::iter::repeat_n(t, 4));
    }
    Constellation::new(d, tuple)
}

fn move_in_place(tuple: &mut [Permutation], k: usize, direction: Direction) {
    let (a, b) = (&tuple[k - 1], &tuple[k]);
    let (left, right) = match direction {
        Direction::Forward => (a.then(b).then(&a.inverse()), a.clone()),
        Direction::Backward => (b.clone(), b.inverse().then(a).then(b)),
    };
    tuple[k - 1] = left;
    tuple[k] = right;
}

fn check_index(k: usize, n: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::OutOfRange {
            what: "hurwitz move index",
            value: k as i64,
            max: n.saturating_sub(1),
        });
    }
    Ok(())
}

/// Acts on entries `k`, `k+1` (1-based).
pub fn hurwitz_move(c: &Constellation, k: usize, direction: Direction) -> Result<Constellation> {
    check_index(k, c.len())?;
    let mut tuple = c.tuple().to_vec();
    move_in_place(&mut tuple, k, direction);
    Constellation::new(c.degree(), tuple)
}

/// Applies the letters left to right.
pub fn apply_braid_word(c: &Constellation, word: &BraidWord) -> Result<Constellation> {
    for &l in word.letters() {
        check_index(l.unsigned_abs() as usize, c.len())?;
    }
    let mut tuple = c.tuple().to_vec();
    for &l in word.letters() {
        let dir = if l > 0 {
            Direction::Forward
        } else {
            Direction::Backward
        };
        move_in_place(&mut tuple, l.unsigned_abs() as usize, dir);
    }
    Constellation::new(c.degree(), tuple)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitSummary {
    pub size: usize,
    pub representatives: Vec<Constellation>,
    pub truncated: bool,
}

/// Breadth-first closure of the canonical form of `c` under all Hurwitz
/// moves, each result canonicalized. Representatives are sorted.
pub fn hurwitz_orbit(c: &Constellation, cap: usize) -> Result<OrbitSummary> {
    c.euler_characteristic()?;
    let start = c.canonical_form_with_cap(DEFAULT_CANONICAL_CAP)?;
    let n = start.len();
    let mut seen: HashSet<Constellation> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    let mut truncated = false;
    'search: while let Some(cur) = queue.pop_front() {
        for k in 1..n {
            for dir in [Direction::Forward, Direction::Backward] {
                let mut tuple = cur.tuple().to_vec();
                move_in_place(&mut tuple, k, dir);
                let next = Constellation::new(cur.degree(), tuple)?.canonical_unchecked();
                if seen.insert(next.clone()) {
                    if seen.len() > cap {
                        truncated = true;
                        break 'search;
                    }
                    queue.push_back(next);
                }
            }
        }
    }
    let mut representatives: Vec<Constellation> = seen.into_iter().collect();
    representatives.sort();
    Ok(OrbitSummary {
        size: representatives.len(),
        representatives,
        truncated,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Movie {
    pub frames: Vec<Constellation>,
    pub initial_canonical: Constellation,
    pub final_canonical: Constellation,
    pub closes_up: bool,
}

/// Frames of the leafwise cover as the bundle tuple of degree `d` is
/// braided by `word`, one frame per letter after the initial one.
pub fn monodromy_movie(d: usize, word: &BraidWord) -> Result<Movie> {
    let start = bundle_tuple(d)?;
    for &l in word.letters() {
        check_index(l.unsigned_abs() as usize, start.len())?;
    }
    let mut frames = Vec::with_capacity(word.len() + 1);
    frames.push(start.clone());
    let mut current = start.clone();
    for &l in word.letters() {
        let dir = if l > 0 {
            Direction::Forward
        } else {
            Direction::Backward
        };
        current = hurwitz_move(&current, l.unsigned_abs() as usize, dir)?;
        frames.push(current.clone());
    }
    let initial_canonical = start.canonical_form()?;
    let final_canonical = current.canonical_form()?;
    let closes_up = initial_canonical == final_canonical;
    Ok(Movie {
        frames,
        initial_canonical,
        final_canonical,
        closes_up,
    })
}
