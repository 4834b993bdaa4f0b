//! Cache locality of permuted data re-traversals.
//!
//! A trace `A B` visits `1..=m` in order and then re-visits the same data in
//! the order of a permutation `σ`. This crate measures the LRU locality of
//! such traces, builds the covering graphs of the symmetric group under the
//! weak and Bruhat orders, labels their edges, and greedily searches for
//! chains of re-traversals that improve locality under ordering constraints.

pub mod analysis;
pub mod bruhat;
pub mod chainfind;
mod error;
pub mod labeling;
pub mod perm;
pub mod trace_cache;

pub use bruhat::{CoverMode, CoveringEdge, CoveringGraph};
pub use chainfind::{Chain, Termination};
pub use error::{Error, Result};
pub use labeling::{EdgeLabel, FeasibilitySpec, LabelScheme};
pub use perm::{Permutation, Side, Transposition};
pub use trace_cache::{DistanceVector, HitVector, Scope, TraceSpec};
