use super::recorder::{slot, Recorder};
use super::trace::{CaseId, Outcome, Trace};
use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::hypercube::PropertyFunction;
use crate::minimal::isolated_vertices;

/// Removes the edge `e = {v, u}` at the degree-one vertex `v`. Either
/// `f(G) = f(G∖e)`, or `G∖e` is sensitive at `e` and at every `{u, w}` with
/// `w` isolated in `G`, since each such graph is isomorphic to `G`.
pub fn pendant_edge_lemma(f: &PropertyFunction, g: &LabeledGraph, v: usize) -> Result<Trace> {
    f.check_arity(&g.point())?;
    if v >= g.n() || g.degree(v) != 1 {
        return Err(Error::Precondition(format!("vertex {} does not have degree 1", v + 1)));
    }
    let u = g.adjacency()[v].trailing_zeros() as usize;
    let mut rec = Recorder::new(f, CaseId::PendantEdge, g.n());
    run(&mut rec, g, v, u)?;
    let outcome = if rec.trace.harvested.is_empty() {
        (Outcome::Inapplicable, "equal-value branch: f(G) = f(G∖e)".to_string())
    } else {
        (Outcome::WitnessFound, String::new())
    };
    Ok(rec.done(outcome.0, outcome.1))
}

/// The lemma body, shared with the case runs that need it.
pub(crate) fn run(rec: &mut Recorder<'_>, g: &LabeledGraph, v: usize, u: usize) -> Result<()> {
    let mut h = *g;
    let before = rec.init(h, "G");
    let after = rec.remove(&mut h, (v, u), "remove the pendant edge")?;
    if before == after {
        return Ok(());
    }
    let family: Vec<u32> = isolated_vertices(g).into_iter().map(|w| slot(g, u, w)).collect();
    rec.harvest(h, &[slot(g, v, u)], &family, g, "pendant edge and edges from its anchor to isolated vertices")
}
