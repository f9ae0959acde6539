//! Second-order co-following analytics.
//!
//! Two accounts are considered similar when their followers follow similar
//! accounts, even if the two never share a single follower. This crate holds
//! the algorithmic half of that pipeline: the bipartite follow graph,
//! IDF-weighted sparse audience vectors, centroid and k-NN rival
//! classification, discriminative-feature ranking, ROC/PR evaluation,
//! spherical-triangle analysis of dual-follower "center" crowds, classical
//! MDS maps, and a planted-structure synthetic graph generator used as
//! ground truth by the test suites.
//!
//! The crate is `no_std` (with `alloc`); file formats, reports, and the CLI
//! live in the companion `cofollow` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod account;
pub mod classify;
pub mod error;
pub mod eval;
pub mod geometry;
pub mod graph;
pub mod linalg;
pub mod mds;
pub mod rank;
pub mod sparse;
pub mod synth;
pub mod vectorize;

pub use account::{AccountId, FeatureId};
pub use error::Error;
pub use sparse::SparseVec;
pub use vectorize::{Centroid, IdfTable};

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
