//! Berge distances and Wiener indices of k-uniform hypergraphs, the
//! extremal tight-path families, closed-form bounds, and an exhaustive
//! verifier for the maximum Wiener index at small orders.

pub mod cli;
pub mod enumerate;
pub mod families;
pub mod formulas;
pub mod hypergraph;

pub use enumerate::{
    canonical_form, enumerate_connected, verify_claim, verify_lemma, verify_theorem, CanonicalForm,
    SearchSpace, VerificationReport, Verifier,
};
pub use hypergraph::{parse, Distance, DistanceProfile, Edge, Hypergraph, HypergraphError};
