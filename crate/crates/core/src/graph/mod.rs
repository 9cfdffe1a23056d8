//! Labeled graphs as hypercube points, the relabeling action, and
//! isomorphism classes.

mod canon;
mod classes;
mod edges;
mod labeled;
mod predicates;

pub use canon::{
    are_isomorphic, canonical_form, canonical_labeling, CanonicalSignature, MAX_CANON_VERTICES,
};
pub use classes::{
    class_table, enumerate_iso_classes, property_from_class_set, ClassSetFile, ClassTable,
    IsoClass, MAX_CLASS_VERTICES,
};
pub use edges::{edge_index, edge_slots, edge_unindex, EdgeIndexer, MAX_VERTICES};
pub use labeled::{apply_permutation, EdgePermuter, LabeledGraph, Permutation};
pub use predicates::{is_graph_property, is_monotone};
