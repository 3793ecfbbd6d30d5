//! Girth-cycle structure, symmetry and classification of cubic
//! vertex-transitive graphs of girth 7.
//!
//! The crate is organised bottom-up: [`graph`] holds exact graph types and
//! file formats, [`cycles`] enumerates girth cycles and the counting data
//! built on them, [`symmetry`] computes automorphism groups and canonical
//! forms, [`families`], [`schemes`] and [`maps`] construct the named graphs,
//! and [`classify`] decides which of the five cases a graph belongs to.

pub mod classify;
pub mod cli;
pub mod cycles;
pub mod families;
pub mod graph;
pub mod maps;
pub mod schemes;
pub mod symmetry;
