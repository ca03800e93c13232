//! Optimal integer `{k}`-domination functions on circulant graphs
//! `G(n; {1, …, t})`.
//!
//! [`construction::build_labeling`] produces a labeling of weight
//! `⌈kn/(2t+1)⌉`, which matches the counting lower bound
//! [`graph::CirculantGraph::lower_bound`]. [`oracle`] recomputes `γ_k`
//! exhaustively on small instances.
//!
//! Labels, weights and the floor/ceiling identities are generic over
//! [`Scalar`]; the aliases below fix the common choice `u64`.

pub mod cli;
pub mod construction;
pub mod error;
pub mod graph;
pub mod numtheory;
pub mod oracle;
pub mod scalar;
pub mod sequences;

pub use construction::{
    build_distribution, build_labeling, code_c1, code_c2, trace_construction, CodePair,
    ConstructionTrace, Distribution,
};
pub use error::{Error, Result};
pub use graph::{CirculantGraph, DominationFunction};
pub use oracle::{exact_gamma_k, OracleResult};
pub use scalar::Scalar;
pub use sequences::Permutation;

/// Labeling with `u64` labels and weight.
pub type Labeling = DominationFunction<u64>;
/// Offsets of `⌈ak/b⌉ = Σ ⌊(k + s_i)/b⌋` over `u64`.
pub type Decomposition = numtheory::FloorSumDecomposition<u64>;
/// Balanced partition of `[b]` over `u64`.
pub type Partition = numtheory::IntervalPartition<u64>;
