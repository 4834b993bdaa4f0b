//! LRU stack distances and hit counts for the two-pass trace `A B`.
//!
//! `A` visits `1..=m` in order, `B` visits `σ(1), ..., σ(m)`. Distances
//! count the reused element itself, so an immediate re-access has distance 1
//! and hits in a cache of one line.

use std::collections::VecDeque;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// The trace `A B` with `B[i] = σ(i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceSpec {
    sigma: Permutation,
}

impl TraceSpec {
    pub fn new(sigma: Permutation) -> Self {
        TraceSpec { sigma }
    }

    pub fn m(&self) -> usize {
        self.sigma.m()
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    /// The raw `2m` accesses: `A` followed by `B`.
    pub fn accesses(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.m()).chain(self.sigma.image().iter().copied())
    }

    fn check_cache_size(&self, c: usize) -> Result<()> {
        if c == 0 || c > self.m() {
            return Err(Error::CacheSize { c, m: self.m() });
        }
        Ok(())
    }
}

impl From<Permutation> for TraceSpec {
    fn from(sigma: Permutation) -> Self {
        TraceSpec::new(sigma)
    }
}

/// Stack distance of each access in `B`, in access order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceVector(pub Vec<usize>);

/// `hits[c - 1]` is the number of hits in `B` with a fully associative LRU
/// cache of `c` lines.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HitVector(pub Vec<usize>);

impl HitVector {
    /// Hits at cache size `c` (1-based).
    pub fn at(&self, c: usize) -> usize {
        self.0[c - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// True when every entry is at least the corresponding entry of `other`.
    pub fn dominates(&self, other: &HitVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }
}

/// Which accesses a miss ratio is taken over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    /// Only the re-traversal `B` (`m` accesses).
    ReTraversal,
    /// The whole trace `A B` (`2m` accesses, `A` all cold misses).
    FullTrace,
}

pub fn stack_distances(spec: &TraceSpec) -> DistanceVector {
    // Most recently used first; after A the stack reads m, m-1, ..., 1.
    let mut stack: Vec<usize> = (1..=spec.m()).rev().collect();
    let d = spec
        .sigma
        .image()
        .iter()
        .map(|&x| {
            let depth = stack.iter().position(|&y| y == x).expect("element on stack");
            stack[..=depth].rotate_right(1);
            depth + 1
        })
        .collect();
    DistanceVector(d)
}

pub fn hit_vector(spec: &TraceSpec) -> HitVector {
    let m = spec.m();
    let mut counts = vec![0usize; m + 1];
    for d in stack_distances(spec).0 {
        counts[d] += 1;
    }
    let mut running = 0;
    HitVector(
        counts[1..]
            .iter()
            .map(|n| {
                running += n;
                running
            })
            .collect(),
    )
}

pub fn hits_at(spec: &TraceSpec, c: usize) -> Result<usize> {
    spec.check_cache_size(c)?;
    Ok(stack_distances(spec).0.iter().filter(|&&d| d <= c).count())
}

pub fn miss_ratio(spec: &TraceSpec, c: usize, scope: Scope) -> Result<Ratio<usize>> {
    let hits = hits_at(spec, c)?;
    let accesses = match scope {
        Scope::ReTraversal => spec.m(),
        Scope::FullTrace => 2 * spec.m(),
    };
    Ok(Ratio::new(accesses - hits, accesses))
}

/// Hit count in `B` from a literal simulation of a `c`-line LRU cache over
/// the raw trace. Shares nothing with [`stack_distances`].
pub fn lru_oracle(spec: &TraceSpec, c: usize) -> Result<usize> {
    spec.check_cache_size(c)?;
    // front = least recently used
    let mut resident: VecDeque<usize> = VecDeque::with_capacity(c);
    let mut hits = 0;
    for (t, x) in spec.accesses().enumerate() {
        if let Some(pos) = resident.iter().position(|&y| y == x) {
            resident.remove(pos);
            if t >= spec.m() {
                hits += 1;
            }
        } else if resident.len() == c {
            resident.pop_front();
        }
        resident.push_back(x);
    }
    Ok(hits)
}

/// Re-traversal order of a matrix pass.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TraversalOrder {
    Cyclic,
    Sawtooth,
}

/// Total reuse distance of re-traversing an `n x m` matrix: every distance is
/// `nm` for the cyclic order and `1, 2, ..., nm` for sawtooth.
pub fn matrix_reuse_total(n: u64, m: u64, order: TraversalOrder) -> u128 {
    let nm = n as u128 * m as u128;
    match order {
        TraversalOrder::Cyclic => nm * nm,
        TraversalOrder::Sawtooth => nm * (nm + 1) / 2,
    }
}
