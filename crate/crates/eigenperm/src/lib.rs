//! Exact combinatorics of the left-shift eigensequence for
//! self-composition.
//!
//! The unique unital integer sequence whose self-composition (as ordinary
//! generating functions) equals its left shift begins
//! 1, 1, 2, 6, 23, 104, 531, ... This crate computes it several independent
//! ways and implements the structures connecting them:
//!
//! - [`series`] — exact truncated power series: composition, reversion, the
//!   revert-reciprocal transform A -> (x/(1+A))^<-1> and its invertible
//!   variant, the eigensequence itself, a functional square root of
//!   self-composition, and the unique-agreement solver.
//! - [`lagrange`] — the same transform in closed form as a sum over integer
//!   partitions, and the fixed-point recurrence it induces.
//! - [`perm`] — permutations as words, left-to-right-maximum decomposition,
//!   and the barred-pattern avoidance test ("every 3241 occurrence extends
//!   to 35241") checked by two independent routes; the avoider counts
//!   reproduce the sequence.
//! - [`tree`] — ordered trees, exact counting by outdegree census, and
//!   weighted counts over internal outdegrees.
//! - [`bijection`] — the bijection between permutations with set-increasing
//!   blocks and cycle-labeled ordered trees, in both directions.
//! - [`verify`] — cross-verification suites wiring all of the above
//!   together, also exposed by the `eigenperm verify` CLI subcommand.
//!
//! Every runnable example under `examples/` demonstrates one capability;
//! `cargo run --example eigensequence` is a good starting point. All
//! arithmetic is exact rational arithmetic; nothing is ever rounded.

pub mod bijection;
pub mod cli;
pub mod coeff;
pub mod error;
pub mod lagrange;
pub mod partitions;
pub mod perm;
pub mod report;
mod rmq;
pub mod seqfile;
pub mod series;
pub mod tree;
pub mod verify;

pub use bijection::{
    enumerate_cycle_trees, is_valid_cycle_tree, perm_to_tree, tree_to_perm, validate_cycle_tree,
    CycleLabeledTree,
};
pub use coeff::Coeff;
pub use error::{Error, Result};
pub use lagrange::{fixed_point_sequence, lagrange_revert_reciprocal, CountSequence};
pub use partitions::{multinomial, partitions_freq, PartitionFreq};
pub use perm::{
    avoids_barred_direct, avoids_barred_recursive, count_avoiders, lrmax_decompose,
    occurrences_3241, standardize, CheckMethod, LRMaxDecomposition, Permutation,
};
pub use report::VerificationReport;
pub use series::{
    agreement_unique_solution, eigensequence, functional_sqrt, left_shift, revert_reciprocal,
    revert_reciprocal_modified, self_composition, series_compose, series_revert, TruncatedSeries,
};
pub use tree::{
    enumerate_trees, tree_count_by_outdegree, weighted_tree_count, OrderedTree, OutdegreeSequence,
    WeightedMode,
};
pub use verify::Suite;
