use super::trace::{Action, CaseId, Outcome, Trace, TraceStep, WitnessReport};
use crate::error::Result;
use crate::graph::{are_isomorphic, LabeledGraph};
use crate::hypercube::{sensitive_coordinates, PropertyFunction};
use crate::minimal::minimal_below;

/// Builds a trace step by step, evaluating `f` at every recorded graph.
pub(crate) struct Recorder<'f> {
    pub f: &'f PropertyFunction,
    pub trace: Trace,
}

impl<'f> Recorder<'f> {
    pub fn new(f: &'f PropertyFunction, case: CaseId, n: usize) -> Self {
        Self {
            f,
            trace: Trace::new(case, n),
        }
    }

    pub fn value(&self, g: &LabeledGraph) -> bool {
        self.f.value(g.bits())
    }

    fn push(&mut self, action: Action, edge: Option<(usize, usize)>, graph: LabeledGraph, note: &str) -> bool {
        let value = self.value(&graph);
        self.trace.steps.push(TraceStep {
            action,
            edge,
            graph,
            value,
            note: note.to_string(),
        });
        value
    }

    pub fn init(&mut self, g: LabeledGraph, note: &str) -> bool {
        self.push(Action::Init, None, g, note)
    }

    pub fn add(&mut self, g: &mut LabeledGraph, (i, j): (usize, usize), note: &str) -> Result<bool> {
        *g = g.with_edge(i, j)?;
        Ok(self.push(Action::AddEdge, Some(ordered(i, j)), *g, note))
    }

    pub fn remove(&mut self, g: &mut LabeledGraph, (i, j): (usize, usize), note: &str) -> Result<bool> {
        *g = g.without_edge(i, j)?;
        Ok(self.push(Action::RemoveEdge, Some(ordered(i, j)), *g, note))
    }

    pub fn check(&mut self, g: LabeledGraph, note: &str) -> bool {
        self.push(Action::LemmaCheck, None, g, note)
    }

    /// Harvests at `point`. `direct` slots are already known sensitive from
    /// evaluations made by the procedure; each `family` slot is claimed only if
    /// toggling it turns `point` into a graph isomorphic to `target`, where
    /// `f(target) ≠ f(point)` is recorded.
    pub fn harvest(
        &mut self,
        point: LabeledGraph,
        direct: &[u32],
        family: &[u32],
        target: &LabeledGraph,
        note: &str,
    ) -> Result<()> {
        let mut derived = Vec::new();
        for &c in family {
            let moved = point.with_bits(point.bits() ^ (1u64 << c));
            if !direct.contains(&c) && are_isomorphic(&moved, target)? {
                derived.push(c);
            }
        }
        derived.sort_unstable();
        derived.dedup();
        let mut claimed: Vec<u32> = direct.iter().chain(&derived).copied().collect();
        claimed.sort_unstable();
        claimed.dedup();
        let sensitive = sensitive_coordinates(self.f, &point.point())?;
        let refuted: Vec<u32> = claimed
            .iter()
            .copied()
            .filter(|c| sensitive.binary_search(c).is_err())
            .collect();
        self.push(Action::Harvest, None, point, note);
        self.trace.harvested.push(WitnessReport {
            point,
            claimed,
            derived,
            refuted,
            verified_sensitivity: sensitive.len() as u32,
            sensitive,
            method: self.trace.case,
            note: note.to_string(),
        });
        Ok(())
    }

    /// First slot of `E(g) ∩ E(h)` whose removal leaves `f(h)` unchanged.
    pub fn removable_edge(&self, g: &LabeledGraph, h: &LabeledGraph) -> Option<u32> {
        let here = self.value(h);
        g.with_bits(g.bits() & h.bits())
            .slots()
            .find(|&c| self.f.value(h.bits() & !(1u64 << c)) == here)
    }

    /// Ends the run with a minimal graph `G′ ⊆ h` where one should not exist.
    pub fn inconsistent(mut self, h: &LabeledGraph, g: &LabeledGraph, what: &str) -> Trace {
        let reason = match minimal_below(self.f, h) {
            Some(gp) => {
                self.check(gp, "minimal graph below H");
                format!("{what}; minimal graph {gp} below H with f = 1, original minimal graph {g}")
            }
            None => format!("{what}; f vanishes below H"),
        };
        self.trace.finish(Outcome::Inconsistency, reason)
    }

    pub fn done(self, outcome: Outcome, reason: impl Into<String>) -> Trace {
        self.trace.finish(outcome, reason)
    }
}

pub(crate) fn ordered(i: usize, j: usize) -> (usize, usize) {
    if i < j {
        (i, j)
    } else {
        (j, i)
    }
}

/// Edge slot of `{i, j}` in `g`'s vertex count.
pub(crate) fn slot(g: &LabeledGraph, i: usize, j: usize) -> u32 {
    let (a, b) = ordered(i, j);
    g.indexer().slot(a, b)
}
