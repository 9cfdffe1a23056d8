//! Structural apparatus over labeled graphs: components, positive minimum
//! degree and tree size, their truncations, minimal graphs of a property and
//! tree construction sequences.

mod components;
mod extended;
mod minimal_set;
mod tree_seq;

pub use components::{
    classify_components, degree_truncation, isolated_vertices, positive_min_degree,
    positive_min_tree_size, tree_truncation, Component, ComponentKind, ComponentReport,
};
pub use extended::Extended;
pub use minimal_set::{is_minimal_for, minimal_below, minimal_graphs, MinimalGraphSet};
pub use tree_seq::{tree_construction_sequence, TreeConstructionSequence};
