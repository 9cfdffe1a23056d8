//! Constructive extraction of high-sensitivity points.
//!
//! The lower-bound argument for graph properties runs by contradiction from a
//! small sensitivity. Each of its procedures here is instrumented instead: at
//! every point where the argument counts sensitive edges, the run harvests
//! that point, claims the counted edges after checking the isomorphisms the
//! count relies on, and recomputes the sensitivity directly.

mod case1;
mod case2;
mod case3;
mod extract;
mod inequalities;
mod pendant;
mod recorder;
mod trace;

pub use case1::run_case1;
pub use case2::run_case2;
pub use case3::{case3_span, run_case3};
pub use extract::{extract_witness, Extraction};
pub use inequalities::{check_structural_inequalities, InequalityCheck, StructuralValues};
pub use pendant::pendant_edge_lemma;
pub use trace::{Action, CaseId, Outcome, Trace, TraceStep, WitnessJson, WitnessReport};

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::hypercube::PropertyFunction;
use crate::minimal::is_minimal_for;

/// `f(empty) = 0` and `g` is a minimal graph of `f`.
fn require_minimal(f: &PropertyFunction, g: &LabeledGraph) -> Result<()> {
    f.check_arity(&g.point())?;
    if f.value(0) {
        return Err(Error::NotNormalized);
    }
    if !is_minimal_for(f, g) {
        return Err(Error::NotMinimal);
    }
    Ok(())
}
