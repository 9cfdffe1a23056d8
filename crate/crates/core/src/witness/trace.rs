use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::hypercube::PropertyFunction;

/// Which procedure produced a trace or a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseId {
    /// Every edge of a minimal graph is sensitive.
    MinimalDirect,
    /// Removing the edge at a degree-one vertex.
    PendantEdge,
    /// Minimal graphs with positive minimum degree at least two.
    Case1,
    /// Positive minimum degree one and no single-edge tree components.
    Case2,
    /// A minimal graph with a single-edge component.
    Case3,
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseId::MinimalDirect => "minimal-direct",
            CaseId::PendantEdge => "pendant-edge",
            CaseId::Case1 => "case1",
            CaseId::Case2 => "case2",
            CaseId::Case3 => "case3",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    WitnessFound,
    Inconsistency,
    Inapplicable,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::WitnessFound => "witness-found",
            Outcome::Inconsistency => "inconsistency",
            Outcome::Inapplicable => "inapplicable",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Action {
    /// Sets the current graph.
    Init,
    AddEdge,
    RemoveEdge,
    /// Evaluates a side graph; the current graph is unchanged.
    LemmaCheck,
    /// Marks a harvest at a side graph; the current graph is unchanged.
    Harvest,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub action: Action,
    pub edge: Option<(usize, usize)>,
    pub graph: LabeledGraph,
    pub value: bool,
    pub note: String,
}

/// A point with a claimed and a directly verified set of sensitive edge slots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessReport {
    pub point: LabeledGraph,
    /// Slots asserted sensitive by the argument that found the point.
    pub claimed: Vec<u32>,
    /// The part of `claimed` that rests on an isomorphism check.
    pub derived: Vec<u32>,
    /// Claimed slots that direct evaluation shows are not sensitive.
    pub refuted: Vec<u32>,
    /// All sensitive slots at `point`.
    pub sensitive: Vec<u32>,
    pub verified_sensitivity: u32,
    pub method: CaseId,
    pub note: String,
}

impl WitnessReport {
    pub fn is_sound(&self) -> bool {
        self.refuted.is_empty() && self.verified_sensitivity as usize == self.sensitive.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace {
    pub case: CaseId,
    pub n: usize,
    pub steps: Vec<TraceStep>,
    pub harvested: Vec<WitnessReport>,
    pub outcome: Outcome,
    pub reason: String,
}

impl Trace {
    pub(crate) fn new(case: CaseId, n: usize) -> Self {
        Self {
            case,
            n,
            steps: Vec::new(),
            harvested: Vec::new(),
            outcome: Outcome::Inapplicable,
            reason: String::new(),
        }
    }

    pub(crate) fn finish(mut self, outcome: Outcome, reason: impl Into<String>) -> Self {
        self.outcome = outcome;
        self.reason = reason.into();
        self
    }

    pub fn best(&self) -> Option<&WitnessReport> {
        best_of(self.harvested.iter())
    }

    /// Re-runs every step against `f`: edge actions must change the current
    /// graph by exactly the recorded edge and every recorded value must match.
    pub fn replay(&self, f: &PropertyFunction) -> Result<()> {
        let mut current: Option<LabeledGraph> = None;
        for (k, step) in self.steps.iter().enumerate() {
            let fail = |what: &str| Err(Error::Malformed(format!("trace step {k}: {what}")));
            match step.action {
                Action::Init => current = Some(step.graph),
                Action::AddEdge | Action::RemoveEdge => {
                    let Some(before) = current else {
                        return fail("edge action before init");
                    };
                    let Some((i, j)) = step.edge else {
                        return fail("edge action without an edge");
                    };
                    let expected = if step.action == Action::AddEdge {
                        if before.has_edge(i, j) {
                            return fail("added edge already present");
                        }
                        before.with_edge(i, j)?
                    } else {
                        if !before.has_edge(i, j) {
                            return fail("removed edge not present");
                        }
                        before.without_edge(i, j)?
                    };
                    if expected != step.graph {
                        return fail("graph does not match the action");
                    }
                    current = Some(expected);
                }
                Action::LemmaCheck | Action::Harvest => {}
            }
            if f.value(step.graph.bits()) != step.value {
                return fail("recorded value differs from evaluation");
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&TraceJson::from(self)).expect("plain data")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&TraceJson::from(self)).expect("plain data")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: TraceJson =
            serde_json::from_str(s).map_err(|e| Error::Malformed(format!("trace JSON: {e}")))?;
        raw.into_trace()
    }
}

/// Highest verified sensitivity; the earliest wins ties.
pub(crate) fn best_of<'a>(reports: impl Iterator<Item = &'a WitnessReport>) -> Option<&'a WitnessReport> {
    reports.fold(None, |best: Option<&WitnessReport>, r| match best {
        Some(b) if b.verified_sensitivity >= r.verified_sensitivity => Some(b),
        _ => Some(r),
    })
}

#[derive(Debug, Serialize, Deserialize)]
pub(crate) struct StepJson {
    action: Action,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    edge: Option<[usize; 2]>,
    graph: String,
    f: u8,
    #[serde(skip_serializing_if = "String::is_empty", default)]
    note: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct WitnessJson {
    pub point: String,
    pub claimed: Vec<u32>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub derived: Vec<u32>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub refuted: Vec<u32>,
    pub sensitive: Vec<u32>,
    pub verified_sensitivity: u32,
    pub method: CaseId,
    #[serde(skip_serializing_if = "String::is_empty", default)]
    pub note: String,
}

impl From<&WitnessReport> for WitnessJson {
    fn from(r: &WitnessReport) -> Self {
        Self {
            point: r.point.hex(),
            claimed: r.claimed.clone(),
            derived: r.derived.clone(),
            refuted: r.refuted.clone(),
            sensitive: r.sensitive.clone(),
            verified_sensitivity: r.verified_sensitivity,
            method: r.method,
            note: r.note.clone(),
        }
    }
}

impl WitnessJson {
    pub fn into_report(self, n: usize) -> Result<WitnessReport> {
        Ok(WitnessReport {
            point: LabeledGraph::from_hex(n, &self.point)?,
            claimed: self.claimed,
            derived: self.derived,
            refuted: self.refuted,
            sensitive: self.sensitive,
            verified_sensitivity: self.verified_sensitivity,
            method: self.method,
            note: self.note,
        })
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub(crate) struct TraceJson {
    case: CaseId,
    n: usize,
    outcome: Outcome,
    #[serde(skip_serializing_if = "String::is_empty", default)]
    reason: String,
    steps: Vec<StepJson>,
    harvested: Vec<WitnessJson>,
}

impl From<&Trace> for TraceJson {
    fn from(t: &Trace) -> Self {
        Self {
            case: t.case,
            n: t.n,
            outcome: t.outcome,
            reason: t.reason.clone(),
            steps: t
                .steps
                .iter()
                .map(|s| StepJson {
                    action: s.action,
                    edge: s.edge.map(|(i, j)| [i, j]),
                    graph: s.graph.hex(),
                    f: u8::from(s.value),
                    note: s.note.clone(),
                })
                .collect(),
            harvested: t.harvested.iter().map(WitnessJson::from).collect(),
        }
    }
}

impl TraceJson {
    fn into_trace(self) -> Result<Trace> {
        let n = self.n;
        let steps = self
            .steps
            .into_iter()
            .map(|s| {
                if s.f > 1 {
                    return Err(Error::Malformed(format!("f bit {} is not 0 or 1", s.f)));
                }
                Ok(TraceStep {
                    action: s.action,
                    edge: s.edge.map(|[i, j]| (i, j)),
                    graph: LabeledGraph::from_hex(n, &s.graph)?,
                    value: s.f == 1,
                    note: s.note,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let harvested = self
            .harvested
            .into_iter()
            .map(|h| h.into_report(n))
            .collect::<Result<Vec<_>>>()?;
        Ok(Trace {
            case: self.case,
            n,
            steps,
            harvested,
            outcome: self.outcome,
            reason: self.reason,
        })
    }
}
