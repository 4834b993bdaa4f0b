//! Permutations of `1..=m` in one-line notation.
//!
//! A [`Permutation`] doubles as a re-traversal order: the second pass over
//! the data visits `image[0], image[1], ...`. Composition follows
//! `(f ∘ g)(i) = f(g(i))`. Multiplying on the right by a transposition swaps
//! positions of the one-line form; multiplying on the left swaps values.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

/// A transposition `(a b)` with `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transposition {
    a: usize,
    b: usize,
}

/// Which side a transposition multiplies from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `t ∘ σ`: swap the values `a` and `b`.
    Left,
    /// `σ ∘ t`: swap the entries at positions `a` and `b`.
    Right,
}

impl Transposition {
    /// Builds `(a b)`, normalizing the order of the pair.
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == b || a == 0 || b == 0 {
            return Err(Error::DegenerateTransposition(a, b));
        }
        Ok(Transposition {
            a: a.min(b),
            b: a.max(b),
        })
    }

    /// The adjacent transposition `s_i = (i i+1)`.
    pub fn adjacent(i: usize) -> Result<Self> {
        Self::new(i, i + 1)
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn is_adjacent(&self) -> bool {
        self.b == self.a + 1
    }

    pub fn to_permutation(&self, m: usize) -> Result<Permutation> {
        Permutation::identity(m)?.apply_transposition(*self, Side::Left)
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {})", self.a, self.b)
    }
}

impl Permutation {
    /// Validates a one-line image over `1..=m`.
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let m = image.len();
        if m == 0 {
            return Err(Error::InvalidSize(0));
        }
        let mut seen = vec![false; m];
        for &v in &image {
            if v == 0 || v > m {
                return Err(Error::NotBijection {
                    m,
                    detail: format!("value {v} outside 1..={m}"),
                });
            }
            if std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::NotBijection {
                    m,
                    detail: format!("value {v} appears twice"),
                });
            }
        }
        Ok(Permutation { image })
    }

    pub fn identity(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidSize(0));
        }
        Ok(Permutation {
            image: (1..=m).collect(),
        })
    }

    /// The reversal `(m, m-1, ..., 1)`, i.e. the sawtooth re-traversal.
    pub fn reverse(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidSize(0));
        }
        Ok(Permutation {
            image: (1..=m).rev().collect(),
        })
    }

    /// All of `S_m` in lexicographic order of the one-line form.
    pub fn all(m: usize) -> Result<Vec<Self>> {
        if m == 0 {
            return Err(Error::InvalidSize(0));
        }
        Ok((1..=m)
            .permutations(m)
            .map(|image| Permutation { image })
            .collect())
    }

    /// The permutation of `1..=m` given by a single cycle `(c1 c2 ... ck)`,
    /// mapping `c1 -> c2 -> ... -> ck -> c1`.
    pub fn from_cycle(m: usize, cycle: &[usize]) -> Result<Self> {
        check_cycle(m, cycle)?;
        let mut image: Vec<usize> = (1..=m).collect();
        for (k, &v) in cycle.iter().enumerate() {
            image[v - 1] = cycle[(k + 1) % cycle.len()];
        }
        Ok(Permutation { image })
    }

    pub fn m(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// `σ(i)` for 1-based `i`.
    pub fn at(&self, i: usize) -> usize {
        self.image[i - 1]
    }

    /// 1-based position of value `v`, i.e. `σ⁻¹(v)`.
    pub fn position_of(&self, v: usize) -> usize {
        self.image.iter().position(|&x| x == v).map(|p| p + 1).unwrap_or(0)
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn is_reverse(&self) -> bool {
        let m = self.m();
        self.image.iter().enumerate().all(|(i, &v)| v == m - i)
    }

    /// `(self ∘ g)(i) = self(g(i))`.
    pub fn compose(&self, g: &Permutation) -> Result<Permutation> {
        if self.m() != g.m() {
            return Err(Error::SizeMismatch {
                left: self.m(),
                right: g.m(),
            });
        }
        Ok(Permutation {
            image: g.image.iter().map(|&x| self.image[x - 1]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.m()];
        for (i, &v) in self.image.iter().enumerate() {
            image[v - 1] = i + 1;
        }
        Permutation { image }
    }

    /// Number of pairs `i < j` with `σ(i) > σ(j)`.
    ///
    /// Counted by merge sort, so this stays usable for long traces.
    pub fn inversion_number(&self) -> usize {
        fn sort_count(v: &mut [usize], buf: &mut Vec<usize>) -> usize {
            let n = v.len();
            if n < 2 {
                return 0;
            }
            let mid = n / 2;
            let mut count = sort_count(&mut v[..mid], buf) + sort_count(&mut v[mid..], buf);
            buf.clear();
            let (mut i, mut j) = (0, mid);
            while i < mid && j < n {
                if v[i] <= v[j] {
                    buf.push(v[i]);
                    i += 1;
                } else {
                    count += mid - i;
                    buf.push(v[j]);
                    j += 1;
                }
            }
            buf.extend_from_slice(&v[i..mid]);
            buf.extend_from_slice(&v[j..n]);
            v.copy_from_slice(buf);
            count
        }
        let mut v = self.image.clone();
        let mut buf = Vec::with_capacity(v.len());
        sort_count(&mut v, &mut buf)
    }

    /// Coxeter length with respect to the adjacent transpositions.
    ///
    /// This is the length of [`Permutation::reduced_word`], which equals the
    /// inversion number.
    pub fn length(&self) -> usize {
        self.reduced_word().len()
    }

    /// A reduced word `[i1, ..., ik]` with `σ = s_i1 ∘ s_i2 ∘ ... ∘ s_ik`.
    ///
    /// Built by bubble sorting, always swapping the leftmost descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut v = self.image.clone();
        let mut sorting_swaps = Vec::new();
        // Each swap removes exactly one inversion; the leftmost descent can
        // only move one step left after a swap, so restart from there.
        let mut i = 0;
        while i + 1 < v.len() {
            if v[i] > v[i + 1] {
                v.swap(i, i + 1);
                sorting_swaps.push(i + 1);
                i = i.saturating_sub(1);
            } else {
                i += 1;
            }
        }
        // σ · s_j1 · ... · s_jk = e, so σ = s_jk · ... · s_j1.
        sorting_swaps.reverse();
        sorting_swaps
    }

    /// Composes `s_i1 ∘ ... ∘ s_ik` in `S_m`.
    pub fn from_word(m: usize, word: &[usize]) -> Result<Permutation> {
        let mut p = Permutation::identity(m)?;
        for &i in word {
            let t = Transposition::adjacent(i)?;
            p = p.apply_transposition(t, Side::Right)?;
        }
        Ok(p)
    }

    /// Multiplies by `t` on the given side.
    pub fn apply_transposition(&self, t: Transposition, side: Side) -> Result<Permutation> {
        let m = self.m();
        if t.b > m {
            return Err(Error::OutOfRange { value: t.b, m });
        }
        let mut image = self.image.clone();
        match side {
            Side::Right => image.swap(t.a - 1, t.b - 1),
            Side::Left => {
                for v in image.iter_mut() {
                    if *v == t.a {
                        *v = t.b;
                    } else if *v == t.b {
                        *v = t.a;
                    }
                }
            }
        }
        Ok(Permutation { image })
    }

    /// Returns `t` when `other = t ∘ self` for a single transposition `t`.
    pub fn transposition_to(&self, other: &Permutation) -> Option<Transposition> {
        if self.m() != other.m() {
            return None;
        }
        let diffs: Vec<usize> = (0..self.m())
            .filter(|&i| self.image[i] != other.image[i])
            .collect();
        match diffs[..] {
            [i, j] if self.image[i] == other.image[j] && self.image[j] == other.image[i] => {
                Transposition::new(self.image[i], self.image[j]).ok()
            }
            _ => None,
        }
    }
}

fn check_cycle(m: usize, cycle: &[usize]) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidSize(0));
    }
    let mut seen = vec![false; m];
    for &v in cycle {
        if v == 0 || v > m {
            return Err(Error::OutOfRange { value: v, m });
        }
        if std::mem::replace(&mut seen[v - 1], true) {
            return Err(Error::RepeatedValue(v));
        }
    }
    Ok(())
}

/// Splits a cycle `(a1 ... ak)` into `(a1 ak)(a1 a(k-1))...(a1 a2)`.
///
/// Composing the returned list left to right with [`Permutation::compose`]
/// reproduces the cycle. A cycle of length 0 or 1 yields an empty list.
pub fn cycle_to_transpositions(m: usize, cycle: &[usize]) -> Result<Vec<Transposition>> {
    check_cycle(m, cycle)?;
    let Some((&first, rest)) = cycle.split_first() else {
        return Ok(Vec::new());
    };
    rest.iter()
        .rev()
        .map(|&v| Transposition::new(first, v))
        .collect()
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.image.iter().join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses comma-separated one-line notation, e.g. `"2,1,3"`.
    fn from_str(s: &str) -> Result<Self> {
        let image = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad permutation entry {tok:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(image)
    }
}
