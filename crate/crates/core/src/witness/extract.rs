use super::case1::run_case1;
use super::case2::run_case2;
use super::case3::run_case3;
use super::pendant::pendant_edge_lemma;
use super::recorder::Recorder;
use super::trace::{best_of, CaseId, Outcome, Trace, WitnessReport};
use crate::error::{Error, Result};
use crate::graph::{is_graph_property, LabeledGraph};
use crate::hypercube::PropertyFunction;
use crate::minimal::{minimal_graphs, positive_min_degree, positive_min_tree_size, Extended, MinimalGraphSet};

/// Everything [`extract_witness`] produced.
#[derive(Debug, Clone)]
pub struct Extraction {
    /// The best verified witness over all traces.
    pub report: WitnessReport,
    pub traces: Vec<Trace>,
    /// True if `f(empty) = 1` and the complement was analyzed instead.
    pub complemented: bool,
    pub minimal: MinimalGraphSet,
    /// The minimal graph the case dispatch ran on.
    pub selected: LabeledGraph,
    /// Set when a minimal graph already has `⌊n/2⌋` edges, so the direct
    /// harvest alone meets the bound.
    pub met_directly: bool,
}

impl Extraction {
    pub fn case_traces(&self) -> impl Iterator<Item = &Trace> {
        self.traces
            .iter()
            .filter(|t| matches!(t.case, CaseId::Case1 | CaseId::Case2 | CaseId::Case3))
    }

    pub fn has_inconsistency(&self) -> bool {
        self.traces.iter().any(|t| t.outcome == Outcome::Inconsistency)
    }
}

/// Harvests high-sensitivity points of a non-trivial graph property.
///
/// Every minimal graph is sensitive at each of its edges. The case procedure
/// matching `δ′(f)` and `c(f)` then runs on the minimal graph chosen by that
/// case's rule (smallest bitmask among the eligible ones), even when a
/// minimal graph already has `⌊n/2⌋` edges.
pub fn extract_witness(f: &PropertyFunction) -> Result<Extraction> {
    if !f.is_table() {
        return Err(Error::RequiresTable);
    }
    let n = f.vertices().ok_or(Error::NotAGraphFunction)?;
    if !f.is_nontrivial()? {
        return Err(Error::TrivialFunction);
    }
    if !is_graph_property(f)? {
        return Err(Error::NotAGraphProperty);
    }
    let complemented = f.value(0);
    let g_fn = if complemented { f.complement() } else { f.clone() };
    let minimal = minimal_graphs(&g_fn)?;

    let mut direct = Recorder::new(&g_fn, CaseId::MinimalDirect, n);
    for g in &minimal.graphs {
        let edges: Vec<u32> = g.slots().collect();
        direct.harvest(*g, &edges, &[], g, "edges of a minimal graph")?;
    }
    let mut traces = vec![direct.done(Outcome::WitnessFound, "")];

    let met_directly = minimal.max_edges() as usize >= n / 2;
    let eligible = |want_delta: Extended, want_c: Option<Extended>| {
        minimal.graphs.iter().copied().find(|g| {
            positive_min_degree(g) == want_delta && want_c.is_none_or(|c| positive_min_tree_size(g) == c)
        })
    };
    let delta = minimal.min_positive_degree;
    let c = minimal.min_tree_size;
    let selected = if delta.is_finite_and(|d| d >= 2) {
        let g = eligible(delta, None).expect("δ′(f) is attained");
        traces.push(run_case1(&g_fn, &g)?);
        g
    } else {
        // a graph attaining a finite c(f) has a leaf, so this always finds one
        let g = eligible(Extended::Finite(1), Some(c))
            .expect("a minimal graph with δ′ = 1 and c(G) = c(f) exists");
        let v = (0..n).find(|&x| g.degree(x) == 1).expect("δ′(G) = 1");
        traces.push(pendant_edge_lemma(&g_fn, &g, v)?);
        traces.push(if c == Extended::Finite(1) {
            run_case3(&g_fn, &g)?
        } else {
            run_case2(&g_fn, &g)?
        });
        g
    };

    let report = best_of(traces.iter().flat_map(|t| t.harvested.iter().filter(|r| r.is_sound())))
        .or_else(|| best_of(traces.iter().flat_map(|t| t.harvested.iter())))
        .expect("a non-trivial property has a minimal graph")
        .clone();
    Ok(Extraction {
        report,
        traces,
        complemented,
        minimal,
        selected,
        met_directly,
    })
}
