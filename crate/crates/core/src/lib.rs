//! Spectral extremal graph theory for star-forest-free graphs.
//!
//! The crate builds the extremal constructions, computes adjacency and
//! signless-Laplacian spectra, decides star-forest containment exactly, and
//! checks the associated bounds exhaustively on small graphs.

pub mod canon;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod flow;
pub mod forest;
pub mod graph;
pub mod graph6;
pub mod search;
pub mod spectra;

pub use error::{Error, Result};
pub use forest::StarForest;
pub use graph::{Bipartition, Graph, MAX_ORDER};
