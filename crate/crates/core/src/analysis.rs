//! Whole-group surveys and reuse comparisons.

use std::io::Write;

use itertools::Itertools;
use num_rational::Ratio;

use crate::bruhat::CoverMode;
use crate::chainfind::{chain_find, Chain};
use crate::error::{Error, Result};
use crate::labeling::{FeasibilitySpec, LabelScheme};
use crate::perm::Permutation;
use crate::trace_cache::{
    hit_vector, matrix_reuse_total, stack_distances, DistanceVector, HitVector, TraceSpec,
    TraversalOrder,
};

pub const HIT_TABLE_CAP: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HitRow {
    pub perm: Permutation,
    pub distances: DistanceVector,
    pub hits: HitVector,
}

/// One row per element of `S_m`, in lexicographic order.
pub fn hit_table(m: usize) -> Result<Vec<HitRow>> {
    if m > HIT_TABLE_CAP {
        return Err(Error::CapExceeded {
            m,
            cap: HIT_TABLE_CAP,
        });
    }
    Ok(Permutation::all(m)?
        .into_iter()
        .map(|perm| {
            let spec = TraceSpec::new(perm.clone());
            HitRow {
                distances: stack_distances(&spec),
                hits: hit_vector(&spec),
                perm,
            }
        })
        .collect())
}

/// Writes `perm,distances,hits` CSV, entries within a field joined by `;`.
pub fn write_hit_table_csv<W: Write>(rows: &[HitRow], out: W) -> Result<()> {
    let io_err = |e: csv::Error| Error::Invalid(format!("csv: {e}"));
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["perm", "distances", "hits"]).map_err(io_err)?;
    for row in rows {
        w.write_record([
            row.perm.image().iter().join(";"),
            row.distances.0.iter().join(";"),
            row.hits.0.iter().join(";"),
        ])
        .map_err(io_err)?;
    }
    w.flush().map_err(|e| Error::Invalid(format!("csv: {e}")))?;
    Ok(())
}

#[derive(Clone, Debug)]
pub struct DivergenceReport {
    pub first: Chain,
    pub second: Chain,
    /// Rank of the first node where the chains differ; `None` if identical.
    pub first_divergence_rank: Option<usize>,
}

/// Greedy hit-feasible chains from the identity at two cache sizes, every
/// re-traversal feasible.
pub fn chain_divergence(m: usize, c1: usize, c2: usize) -> Result<DivergenceReport> {
    if m > HIT_TABLE_CAP {
        return Err(Error::CapExceeded {
            m,
            cap: HIT_TABLE_CAP,
        });
    }
    if c1 == c2 {
        return Err(Error::Invalid(format!("cache sizes must differ, got {c1} twice")));
    }
    let start = Permutation::identity(m)?;
    let run = |c| {
        let scheme = LabelScheme::HitFeasible {
            c,
            feasibility: FeasibilitySpec::unconstrained(m),
        };
        chain_find(&start, &scheme, CoverMode::Weak, None)
    };
    let first = run(c1)?;
    let second = run(c2)?;
    let first_divergence_rank = first
        .steps
        .iter()
        .zip(&second.steps)
        .position(|(a, b)| a != b)
        .or_else(|| (first.steps.len() != second.steps.len()).then(|| first.steps.len().min(second.steps.len())))
        .map(|k| k + first.start().length());
    Ok(DivergenceReport {
        first,
        second,
        first_divergence_rank,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReuseReport {
    pub cyclic: u128,
    pub sawtooth: u128,
    /// `sawtooth / cyclic`.
    pub ratio: Ratio<u128>,
}

impl ReuseReport {
    pub fn ratio_f64(&self) -> f64 {
        *self.ratio.numer() as f64 / *self.ratio.denom() as f64
    }
}

pub fn reuse_report(n: u64, m: u64) -> Result<ReuseReport> {
    if n == 0 || m == 0 {
        return Err(Error::Invalid(format!("matrix dimensions must be positive, got {n}x{m}")));
    }
    if n.checked_mul(m).is_none() {
        return Err(Error::Invalid(format!("matrix of {n}x{m} elements is too large")));
    }
    let cyclic = matrix_reuse_total(n, m, TraversalOrder::Cyclic);
    let sawtooth = matrix_reuse_total(n, m, TraversalOrder::Sawtooth);
    Ok(ReuseReport {
        cyclic,
        sawtooth,
        ratio: Ratio::new(sawtooth, cyclic),
    })
}
