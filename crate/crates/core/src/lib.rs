//! Finite groups and the nine graphs obtained by pairing a graph type
//! (power, enhanced power, commuting) with an equivalence relation
//! (equality, conjugacy, same order).
//!
//! The crate is `no_std` with `alloc`. File formats, the command line and
//! parallel sweeps live in the `supergraph` companion crate.
//!
//! ```
//! use supergraph_core::{catalog, supergraph::{build_graph, GraphKind, RelKind}};
//!
//! let s3 = catalog::symmetric(3).unwrap();
//! let pow = build_graph(&s3, GraphKind::Power, RelKind::Equality).unwrap();
//! let cspow = build_graph(&s3, GraphKind::Power, RelKind::Conjugacy).unwrap();
//! assert_eq!(pow.graph().edge_count(), 6);
//! assert_eq!(cspow.graph().edge_count(), 9);
//! ```
#![cfg_attr(not(test), no_std)]
#![warn(missing_debug_implementations)]

extern crate alloc;

pub mod analysis;
pub mod arith;
pub mod catalog;
pub mod classes;
mod error;
pub mod graph;
pub mod group;
pub mod harness;
pub mod supergraph;

pub use error::{Axiom, Error, Result};
pub use graph::Graph;
pub use group::{Elem, Group};
