//! Test-only oracles. Nothing here calls into the crate's permutation or
//! constellation code paths.

#![allow(dead_code)]

/// One transposition tuple as pairs of 0-based points.
pub type Tuple = Vec<(usize, usize)>;

pub fn transpositions(d: usize) -> Vec<(usize, usize)> {
    let mut ts = Vec::new();
    for a in 0..d {
        for b in a + 1..d {
            ts.push((a, b));
        }
    }
    ts
}

/// Every tuple of `k` transpositions of degree `d`, in odometer order.
pub fn all_tuples(d: usize, k: usize) -> Vec<Tuple> {
    let ts = transpositions(d);
    if k == 0 {
        return vec![Vec::new()];
    }
    if ts.is_empty() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut idx = vec![0usize; k];
    loop {
        out.push(idx.iter().map(|&i| ts[i]).collect());
        let mut pos = k;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < ts.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// Product is the identity: track where every point goes, applying the
/// swaps in writing order.
pub fn product_is_identity(d: usize, tuple: &Tuple) -> bool {
    let mut pos: Vec<usize> = (0..d).collect();
    for &(a, b) in tuple {
        for p in pos.iter_mut() {
            if *p == a {
                *p = b;
            } else if *p == b {
                *p = a;
            }
        }
    }
    pos.iter().enumerate().all(|(i, &p)| i == p)
}

/// Transitive iff the graph whose edges are the transpositions is
/// connected (union-find).
pub fn connected(d: usize, tuple: &Tuple) -> bool {
    let mut parent: Vec<usize> = (0..d).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(a, b) in tuple {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    }
    let root = find(&mut parent, 0);
    (0..d).all(|x| find(&mut parent, x) == root)
}

pub fn accepted_count(d: usize, k: usize) -> usize {
    all_tuples(d, k)
        .iter()
        .filter(|t| product_is_identity(d, t) && connected(d, t))
        .count()
}

/// Frozen output of the enumerator above (and of a separate script),
/// indexed `[d - 1][k]` for `d` in 1..=4 and `k` in 0..=6.
pub const ACCEPTED_COUNTS: [[usize; 7]; 4] = [
    [1, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 1, 0, 1],
    [0, 0, 0, 0, 24, 0, 240],
    [0, 0, 0, 0, 0, 0, 2880],
];

/// Connected genus-0 covers with `2d - 2` simple branch points, counted as
/// labeled tuples: `d^(d-3) (2d-2)!` (Hurwitz's formula times `d!`).
pub fn genus_zero_tuple_count(d: u64) -> u64 {
    let fact: u64 = (1..=2 * d - 2).product();
    if d >= 3 {
        d.pow((d - 3) as u32) * fact
    } else {
        // d = 2: 2^-1 * 2! = 1
        fact / d
    }
}

/// Components of a set of states under a list of generator maps, by
/// union-find over explicit indices.
pub fn component_count<T: Clone + Eq + std::hash::Hash>(
    states: &[T],
    moves: impl Fn(&T) -> Vec<T>,
) -> usize {
    use std::collections::HashMap;
    let index: HashMap<T, usize> = states
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, s)| (s, i))
        .collect();
    let mut parent: Vec<usize> = (0..states.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (i, s) in states.iter().enumerate() {
        for t in moves(s) {
            let j = *index.get(&t).expect("moves stay inside the state set");
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            parent[ri] = rj;
        }
    }
    (0..states.len())
        .filter(|&i| find(&mut parent, i) == i)
        .count()
}

/// Conjugating a transposition tuple by a relabeling `g` of the points.
pub fn relabel(tuple: &Tuple, g: &[usize]) -> Tuple {
    tuple
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (g[a], g[b]);
            (x.min(y), x.max(y))
        })
        .collect()
}

/// The Hurwitz move on transpositions: `(a, b) -> (a b a^-1, a)`, and
/// conjugating the transposition `b` by `a` swaps the points of `a` in it.
pub fn hurwitz_forward(tuple: &Tuple, k: usize) -> Tuple {
    let mut out = tuple.clone();
    let (a, b) = (tuple[k], tuple[k + 1]);
    let swap = |p: usize| {
        if p == a.0 {
            a.1
        } else if p == a.1 {
            a.0
        } else {
            p
        }
    };
    let (x, y) = (swap(b.0), swap(b.1));
    out[k] = (x.min(y), x.max(y));
    out[k + 1] = a;
    out
}

pub fn hurwitz_backward(tuple: &Tuple, k: usize) -> Tuple {
    let mut out = tuple.clone();
    let (a, b) = (tuple[k], tuple[k + 1]);
    let swap = |p: usize| {
        if p == b.0 {
            b.1
        } else if p == b.1 {
            b.0
        } else {
            p
        }
    };
    let (x, y) = (swap(a.0), swap(a.1));
    out[k] = b;
    out[k + 1] = (x.min(y), x.max(y));
    out
}

pub fn all_relabelings(d: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; d], &mut out);
    out
}
