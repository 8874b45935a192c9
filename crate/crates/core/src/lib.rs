//! Uniform sampling of edge `k`-colorings of bipartite graphs.
//!
//! The crate is `no_std` (it needs `alloc`). It contains the graph and
//! coloring model, the proposal kernels (general bipartite graphs and the
//! `k`-regular special case), exact proposal probabilities, the
//! Metropolis-Hastings driver, a constructive transformation between any two
//! colorings, the Latin rectangle correspondence and an exhaustive
//! enumeration oracle.
//!
//! Everything that touches files, threads or the command line lives in the
//! companion `kempe` crate.

#![no_std]

extern crate alloc;

pub mod coloring;
pub mod diameter;
pub mod error;
pub mod graph;
pub mod initial;
pub mod kernel;
pub mod latin;
pub mod metropolis;
pub mod oracle;
pub mod prob;
pub mod regular;
pub mod two_color;
pub mod walk;

pub use coloring::{validate, Color, Coloring, ColoringStatus, Deficiency};
pub use error::{Error, Result};
pub use graph::{BipartiteGraph, EdgeId, VertexId};
pub use initial::initial_coloring;
pub use kernel::{KernelKind, MoveColors, Proposal, Way};
pub use metropolis::{mh_step, run_chain, ChainStats, MhStep};
pub use prob::Prob;
