//! Signed graphs, exact adjacency ranks and the girth-extremal families.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the
//! verification sweep and the command-line front end live in the `sigrank`
//! crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod classify;
pub mod families;
pub mod graph;
pub mod invariants;
pub mod matrix;
pub mod rank;

pub use classify::{
    classify, classify_equals_g, classify_gminus2, is_extremal_canonical_unicyclic, is_rank3_tripartite, Certificate,
    Classification, ClassifyError, EqualsGirthCase, GirthMinusTwoCase, TripartiteCertificate, UnderlyingShape,
    UnicyclicCertificate, Verdict,
};
pub use families::{expected_rank, generate, FamilyError, FamilySpec, Signing};
pub use graph::{GraphError, MultiplePair, Sign, SignedEdge, SignedGraph};
pub use invariants::{CycleError, CycleRecord, InvariantProfile};
pub use matrix::IntMatrix;
pub use rank::{determinant, rank, rank_oracle, RankReport};
