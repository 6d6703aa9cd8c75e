//! Divisible design Cayley graphs: construction, verification, classification.
//!
//! A *divisible design graph* (DDG) is a k-regular graph whose vertex set
//! splits into m classes of size n such that two distinct vertices have λ₁
//! common neighbours when they share a class and λ₂ otherwise.  A *DDCG* is a
//! DDG that is also a Cayley graph of some finite group.
//!
//! The crate provides:
//!
//! * [`group`] — finite groups of order ≤ 32 as multiplication tables, built
//!   from permutation generators, with subgroups, cosets, automorphisms and
//!   isomorphism testing; [`catalog`] ships every group of order ≤ 27.
//! * [`graph`] — simple graphs as bitset adjacency matrices, Cayley graph
//!   construction, regular-action verification; [`graph6`] I/O and [`canon`]
//!   canonical certificates for isomorph rejection.
//! * [`ddg`] — DDG verification by canonical-partition discovery and the
//!   connection-set profile test (the SS⁻¹ = aA + bB + k·e characterization)
//!   that drives the search.
//! * [`constructions`] — the explicit DDCG families: Kronecker products with
//!   identity / symmetric permutation / all-ones blocks, strong products with
//!   K₂, Paley graphs, and Hadamard entry replacement.  Every construction
//!   re-verifies its own output before returning.
//! * [`classifier`] — isomorph-free exhaustive classification of all DDCGs on
//!   v ≤ 27 vertices, including nonexistence certification, with a rayon-based
//!   parallel core (`parallel` feature, on by default) and a sequential
//!   fallback.

// Indices here are group elements, vertices and matrix rows; indexed loops
// keep that arithmetic readable, so the enumerate() rewrite is a loss.
#![allow(clippy::needless_range_loop)]

pub mod canon;
pub mod catalog;
pub mod classifier;
pub mod constructions;
pub mod ddg;
pub mod field;
pub mod graph;
pub mod graph6;
pub mod group;
pub mod hadamard;
pub mod params;
pub mod perm;

pub use canon::{canonical_certificate, Certificate};
pub use catalog::GroupCatalog;
pub use classifier::{
    certify_nonexistence, classify_order, emit_tables, ClassificationRecord,
    ClassificationReport, SearchOptions,
};
pub use ddg::{ddg_check, dual_property_check, ss_profile, theorem3_test};
pub use graph::{cayley_graph, is_regular_action, ConnectionSet, Graph};
pub use group::FiniteGroup;
pub use params::DdgParams;
