//! Sensitivity of graph properties.
//!
//! The crate is organized bottom-up:
//!
//! - [`hypercube`]: boolean functions on `{0,1}^m`, exact sensitivity and
//!   block sensitivity, truth-table files.
//! - [`graph`]: the edge-slot encoding of labeled graphs, the vertex
//!   relabeling action, canonical forms and isomorphism classes.
//! - [`minimal`]: component structure, degree and tree truncations, minimal
//!   graphs of a property and tree construction sequences.
//! - [`witness`]: constructive extraction of high-sensitivity points, with
//!   replayable traces.

pub mod error;
pub mod graph;
pub mod hypercube;
pub mod minimal;
pub mod witness;

pub use error::{Error, Result};
