//! Covering relations of `S_m` under the weak and Bruhat orders.
//!
//! Both modes are graded by [`Permutation::length`]. A weak cover swaps an
//! ascent at adjacent positions; a Bruhat cover swaps any two values whose
//! exchange raises the length by exactly one.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::perm::{Permutation, Side, Transposition};

/// Default ceiling for [`build_graph`]; `7! = 5040` nodes.
pub const DEFAULT_GRAPH_CAP: usize = 7;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum CoverMode {
    #[default]
    Weak,
    Bruhat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoveringEdge {
    pub src: Permutation,
    pub dst: Permutation,
    /// Value pair exchanged: `dst = swap ∘ src`.
    pub swap: Transposition,
    /// `i` with `dst = src ∘ s_i`, when the two swapped values sit at
    /// adjacent positions.
    pub position: Option<usize>,
}

impl CoveringEdge {
    /// Builds the edge that swaps positions `i < j` of `src`.
    fn swapping_positions(src: &Permutation, i: usize, j: usize) -> CoveringEdge {
        let pos = Transposition::new(i, j).expect("distinct positions");
        let dst = src.apply_transposition(pos, Side::Right).expect("in range");
        CoveringEdge {
            swap: Transposition::new(src.at(i), src.at(j)).expect("distinct values"),
            position: (j == i + 1).then_some(i),
            dst,
            src: src.clone(),
        }
    }
}

/// Out-edges of `sigma`, ordered by the positions swapped.
pub fn successors(sigma: &Permutation, mode: CoverMode) -> Vec<CoveringEdge> {
    let v = sigma.image();
    let m = v.len();
    let mut out = Vec::new();
    match mode {
        CoverMode::Weak => {
            for i in 1..m {
                if v[i - 1] < v[i] {
                    out.push(CoveringEdge::swapping_positions(sigma, i, i + 1));
                }
            }
        }
        CoverMode::Bruhat => {
            // Swapping positions i < j raises the length by exactly one iff
            // σ(i) < σ(j) and no value strictly between them sits between
            // the two positions.
            for i in 1..=m {
                let lo = v[i - 1];
                let mut ceiling = usize::MAX;
                for j in i + 1..=m {
                    let x = v[j - 1];
                    if x > lo && x < ceiling {
                        out.push(CoveringEdge::swapping_positions(sigma, i, j));
                        ceiling = x;
                    }
                }
            }
        }
    }
    out
}

pub fn covers(sigma: &Permutation, tau: &Permutation, mode: CoverMode) -> Result<bool> {
    if sigma.m() != tau.m() {
        return Err(Error::SizeMismatch {
            left: sigma.m(),
            right: tau.m(),
        });
    }
    let Some(t) = sigma.transposition_to(tau) else {
        return Ok(false);
    };
    if tau.length() != sigma.length() + 1 {
        return Ok(false);
    }
    Ok(match mode {
        CoverMode::Bruhat => true,
        CoverMode::Weak => sigma.position_of(t.a()).abs_diff(sigma.position_of(t.b())) == 1,
    })
}

/// Bruhat comparison `u ≤ w` by the prefix criterion: for every `k` the
/// sorted values of `u(1..=k)` are entrywise at most those of `w(1..=k)`.
pub fn bruhat_leq(u: &Permutation, w: &Permutation) -> Result<bool> {
    if u.m() != w.m() {
        return Err(Error::SizeMismatch {
            left: u.m(),
            right: w.m(),
        });
    }
    let mut up: Vec<usize> = Vec::with_capacity(u.m());
    let mut wp: Vec<usize> = Vec::with_capacity(w.m());
    for k in 0..u.m() {
        insert_sorted(&mut up, u.image()[k]);
        insert_sorted(&mut wp, w.image()[k]);
        if up.iter().zip(&wp).any(|(a, b)| a > b) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn insert_sorted(v: &mut Vec<usize>, x: usize) {
    let at = v.partition_point(|&y| y < x);
    v.insert(at, x);
}

pub fn rank_of(sigma: &Permutation) -> usize {
    sigma.length()
}

/// The full covering DAG of `S_m`.
#[derive(Clone, Debug)]
pub struct CoveringGraph {
    m: usize,
    mode: CoverMode,
    /// All of `S_m` in lexicographic order.
    nodes: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    /// Node indices grouped by rank, lexicographic within a rank.
    ranks: Vec<Vec<usize>>,
    /// Out-edges per node, sorted by destination.
    out: Vec<Vec<CoveringEdge>>,
}

pub fn build_graph(m: usize, mode: CoverMode) -> Result<CoveringGraph> {
    build_graph_with_cap(m, mode, DEFAULT_GRAPH_CAP)
}

pub fn build_graph_with_cap(m: usize, mode: CoverMode, cap: usize) -> Result<CoveringGraph> {
    if m > cap {
        return Err(Error::CapExceeded { m, cap });
    }
    let nodes = Permutation::all(m)?;
    let index: HashMap<Permutation, usize> =
        nodes.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let mut ranks = vec![Vec::new(); m * (m - 1) / 2 + 1];
    let mut out = Vec::with_capacity(nodes.len());
    for (i, p) in nodes.iter().enumerate() {
        ranks[p.length()].push(i);
        let mut edges = successors(p, mode);
        edges.sort_by(|a, b| a.dst.cmp(&b.dst));
        out.push(edges);
    }
    Ok(CoveringGraph {
        m,
        mode,
        nodes,
        index,
        ranks,
        out,
    })
}

impl CoveringGraph {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn mode(&self) -> CoverMode {
        self.mode
    }

    /// Nodes in lexicographic order.
    pub fn nodes(&self) -> &[Permutation] {
        &self.nodes
    }

    pub fn ranks(&self) -> impl Iterator<Item = impl Iterator<Item = &Permutation>> {
        self.ranks.iter().map(|r| r.iter().map(|&i| &self.nodes[i]))
    }

    pub fn rank_sizes(&self) -> Vec<usize> {
        self.ranks.iter().map(Vec::len).collect()
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn out_edges(&self, p: &Permutation) -> &[CoveringEdge] {
        self.index_of(p).map(|i| self.out[i].as_slice()).unwrap_or(&[])
    }

    /// Every edge, ordered by source then destination.
    pub fn edges(&self) -> impl Iterator<Item = &CoveringEdge> {
        self.out.iter().flatten()
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    /// Indices of every node reachable from `p` along covering edges,
    /// including `p` itself.
    pub fn reachable_from(&self, p: &Permutation) -> Vec<bool> {
        let mut seen = vec![false; self.nodes.len()];
        let Some(start) = self.index_of(p) else {
            return seen;
        };
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(i) = queue.pop_front() {
            for e in &self.out[i] {
                let j = self.index[&e.dst];
                if !std::mem::replace(&mut seen[j], true) {
                    queue.push_back(j);
                }
            }
        }
        seen
    }

    pub fn reachable(&self, u: &Permutation, w: &Permutation) -> bool {
        self.index_of(w)
            .map(|j| self.reachable_from(u)[j])
            .unwrap_or(false)
    }
}
