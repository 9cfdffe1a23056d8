use serde::Serialize;
use sensitivity_core::graph::{class_table, is_graph_property, is_monotone, LabeledGraph};
use sensitivity_core::hypercube::{
    max_block_sensitivity, max_block_sensitivity_over, max_sensitivity, max_sensitivity_over, BooleanPoint,
    PropertyFunction, SensitivityResult, MAX_GLOBAL_BLOCK_ARITY,
};
use sensitivity_core::minimal::{minimal_graphs, Extended};

use crate::error::Result;
use crate::input::LoadedProperty;
use crate::SCHEMA;

#[derive(Debug, Clone, Serialize)]
pub struct PointSummary {
    pub value: u32,
    /// Bit string, most significant coordinate first.
    pub witness: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_graph: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_edges: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub sensitive_coordinates: Vec<u32>,
}

impl PointSummary {
    fn new(value: u32, witness: BooleanPoint, n: Option<usize>, coords: Vec<u32>) -> Self {
        let graph = n.and_then(|n| LabeledGraph::from_point(n, &witness).ok());
        Self {
            value,
            witness: witness.to_string(),
            witness_graph: graph.map(|g| g.hex()),
            witness_edges: graph.map(|g| g.to_string()),
            sensitive_coordinates: coords,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MinimalSummary {
    /// True when `f(empty) = 1` and the figures describe the complement.
    pub complemented: bool,
    pub count: usize,
    pub max_edges: u32,
    pub min_positive_degree: Extended,
    pub min_tree_size: Extended,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub property: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub arity: u32,
    pub backing: &'static str,
    pub sensitivity: PointSummary,
    /// False when `sensitivity` is a maximum over sample graphs only.
    pub sensitivity_exact: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_sensitivity: Option<u32>,
    pub block_sensitivity: Option<PointSummary>,
    pub graph_property: Option<bool>,
    pub monotone: Option<bool>,
    pub nontrivial: Option<bool>,
    pub minimal: Option<MinimalSummary>,
}

/// Sample graphs for oracle-backed properties: one of each common shape.
fn sample_graphs(n: usize) -> Result<Vec<BooleanPoint>> {
    let mut out = Vec::new();
    let ring: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).filter(|(a, b)| a != b).collect();
    let star: Vec<(usize, usize)> = (1..n).map(|i| (0, i)).collect();
    let matching: Vec<(usize, usize)> = (0..n / 2).map(|i| (2 * i, 2 * i + 1)).collect();
    let complete = LabeledGraph::complete(n)?;
    let mut shapes = vec![
        LabeledGraph::empty(n)?,
        complete,
        LabeledGraph::from_edges(n, &star)?,
        LabeledGraph::from_edges(n, &ring[..n.saturating_sub(1)])?,
        LabeledGraph::from_edges(n, &matching)?,
    ];
    if n >= 3 {
        shapes.push(LabeledGraph::from_edges(n, &ring)?);
        shapes.push(LabeledGraph::from_edges(n, &[(0, 1), (1, 2), (0, 2)])?);
    }
    if n >= 2 {
        shapes.push(LabeledGraph::from_edges(n, &[(0, 1)])?);
        shapes.push(complete.without_edge(0, 1)?);
    }
    for g in shapes {
        if !out.contains(&g.point()) {
            out.push(g.point());
        }
    }
    Ok(out)
}

pub fn analyze(p: &LoadedProperty) -> Result<AnalysisReport> {
    let f = &p.function;
    let n = p.n;
    let table_backed = f.is_table();

    let (s, exact): (SensitivityResult, bool) = if table_backed {
        (max_sensitivity(f)?, true)
    } else {
        let pts = sample_graphs(n.expect("oracle builtins are graph functions"))?;
        (max_sensitivity_over(f, &pts)?, false)
    };

    let graph_property = match (table_backed, n, p.builtin) {
        (true, Some(_), _) => Some(is_graph_property(f)?),
        // builtins are defined on adjacency and so invariant by construction
        (false, Some(_), Some(_)) => Some(true),
        _ => None,
    };
    let block = if table_backed && f.arity() <= MAX_GLOBAL_BLOCK_ARITY {
        let r = match (graph_property, n) {
            (Some(true), Some(n)) => {
                // one representative per isomorphism class suffices
                let reps: Vec<BooleanPoint> =
                    class_table(n)?.classes().iter().map(|c| c.representative().point()).collect();
                max_block_sensitivity_over(f, &reps)?
            }
            _ => max_block_sensitivity(f)?,
        };
        Some(PointSummary::new(r.value, r.witness, n, Vec::new()))
    } else {
        None
    };

    let nontrivial = if table_backed { Some(f.is_nontrivial()?) } else { None };
    let minimal = match (nontrivial, n) {
        (Some(true), Some(_)) => {
            let complemented = f.value(0);
            let g: PropertyFunction = if complemented { f.complement() } else { f.clone() };
            let set = minimal_graphs(&g)?;
            Some(MinimalSummary {
                complemented,
                count: set.graphs.len(),
                max_edges: set.max_edges(),
                min_positive_degree: set.min_positive_degree,
                min_tree_size: set.min_tree_size,
            })
        }
        _ => None,
    };

    Ok(AnalysisReport {
        schema: SCHEMA,
        property: p.label.clone(),
        n,
        arity: f.arity(),
        backing: if table_backed { "table" } else { "oracle" },
        sensitivity: PointSummary::new(s.value, s.witness, n, s.sensitive_coordinates),
        sensitivity_exact: exact,
        expected_sensitivity: p.builtin.zip(n).and_then(|(b, n)| b.expected_sensitivity(n)),
        block_sensitivity: block,
        graph_property,
        monotone: if table_backed { Some(is_monotone(f)?) } else { p.builtin.map(|b| b.monotone) },
        nontrivial,
        minimal,
    })
}

fn yes_no(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "yes",
        Some(false) => "no",
        None => "unknown",
    }
}

impl AnalysisReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: String| out.push_str(&format!("{k:<22}{v}\n"));
        line("property", self.property.clone());
        if let Some(n) = self.n {
            line("vertices", n.to_string());
        }
        line("arity", format!("{} ({})", self.arity, self.backing));
        let at = self.sensitivity.witness_edges.clone().unwrap_or_else(|| self.sensitivity.witness.clone());
        let s_label = if self.sensitivity_exact { "s(f)" } else { "s(f) over samples" };
        line(s_label, format!("{} at {at}", self.sensitivity.value));
        if let Some(e) = self.expected_sensitivity {
            line("expected s(f)", e.to_string());
        }
        match &self.block_sensitivity {
            Some(b) => {
                let at = b.witness_edges.clone().unwrap_or_else(|| b.witness.clone());
                line("bs(f)", format!("{} at {at}", b.value));
            }
            None if self.backing == "oracle" => line("bs(f)", "not computed (oracle backing)".into()),
            None => line("bs(f)", "not computed (arity above 16)".into()),
        }
        line("graph property", yes_no(self.graph_property).into());
        line("monotone", yes_no(self.monotone).into());
        line("non-trivial", yes_no(self.nontrivial).into());
        if let Some(m) = &self.minimal {
            let of = if m.complemented { " (of the complement)" } else { "" };
            line("minimal graphs", format!("{}{of}, largest has {} edges", m.count, m.max_edges));
            line("δ′(f)", m.min_positive_degree.to_string());
            line("c(f)", m.min_tree_size.to_string());
        }
        out
    }
}
