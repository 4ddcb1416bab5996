//! Molecular-graph descriptors and their sharp bounds.
//!
//! A molecular graph is a simple graph with maximum degree 4. This crate
//! evaluates the degree-based descriptor families (general
//! sum-connectivity, general Platt, ordinary generalized
//! geometric-arithmetic) and the classical indices they specialize to,
//! reduces each one to a closed form in `(n, m)` plus a seven-term census
//! residual, evaluates the residue-refined sharp bounds with their
//! equality characterizations, and verifies all of it by isomorph-free
//! exhaustive enumeration at small `n`.
//!
//! The `parallel` feature (on by default) runs enumeration and
//! verification sweeps on a rayon pool; disabling it yields identical
//! sequential results.

pub mod bounds;
pub mod canon;
pub mod exec;
pub mod formats;
pub mod graph;
pub mod indices;
pub mod lemmas;
pub mod reduction;
pub mod search;

#[cfg(test)]
pub(crate) mod testutil;
