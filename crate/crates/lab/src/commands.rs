use serde::Serialize;
use serde_json::Value;
use sensitivity_core::graph::{class_table, MAX_CLASS_VERTICES};
use sensitivity_core::hypercube::max_sensitivity;
use sensitivity_core::witness::{extract_witness, Extraction, WitnessJson};

use crate::builtins::{registry, TABLE_VERTEX_LIMIT};
use crate::error::{LabError, Result};
use crate::input::LoadedProperty;
use crate::SCHEMA;

#[derive(Debug, Serialize)]
pub struct WitnessOutput {
    pub schema: u32,
    pub property: String,
    pub n: usize,
    pub complemented: bool,
    /// A minimal graph already has `⌊n/2⌋` edges.
    pub met_directly: bool,
    /// `s(f)` by a full scan, for comparison.
    pub sensitivity: u32,
    pub attains_sensitivity: bool,
    pub witness: WitnessJson,
    pub selected_graph: String,
    pub traces: Vec<Value>,
    #[serde(skip)]
    pub extraction: Option<Extraction>,
}

pub fn witness(p: &LoadedProperty) -> Result<WitnessOutput> {
    let n = p
        .n
        .ok_or_else(|| LabError::Usage("witness extraction needs a graph property".into()))?;
    if !p.function.is_table() {
        return Err(LabError::Usage(format!("witness extraction needs n ≤ {TABLE_VERTEX_LIMIT}")));
    }
    let e = extract_witness(&p.function)?;
    let s = max_sensitivity(&p.function)?.value;
    Ok(WitnessOutput {
        schema: SCHEMA,
        property: p.label.clone(),
        n,
        complemented: e.complemented,
        met_directly: e.met_directly,
        sensitivity: s,
        attains_sensitivity: e.report.verified_sensitivity == s,
        witness: WitnessJson::from(&e.report),
        selected_graph: e.selected.hex(),
        traces: e
            .traces
            .iter()
            .map(|t| serde_json::from_str(&t.to_json()).expect("trace JSON"))
            .collect(),
        extraction: Some(e),
    })
}

impl WitnessOutput {
    pub fn to_text(&self) -> String {
        let e = self.extraction.as_ref().expect("built by witness()");
        let r = &e.report;
        let mut out = format!("property {} on n = {}\n", self.property, self.n);
        if self.complemented {
            out.push_str("f(empty) = 1, working with the complement\n");
        }
        out.push_str(&format!(
            "witness: {} via {}\nverified sensitivity {} (full scan s(f) = {}{})\n",
            r.point,
            r.method,
            r.verified_sensitivity,
            self.sensitivity,
            if self.attains_sensitivity { ", attained" } else { "" }
        ));
        out.push_str(&format!(
            "minimal graphs: {}, δ′(f) = {}, c(f) = {}\n",
            e.minimal.graphs.len(),
            e.minimal.min_positive_degree,
            e.minimal.min_tree_size
        ));
        if self.met_directly {
            out.push_str("a minimal graph already has ⌊n/2⌋ edges\n");
        }
        out.push_str(&format!("case procedures ran on {}\n", e.selected));
        for t in &e.traces {
            let best = t.best().map_or(0, |b| b.verified_sensitivity);
            out.push_str(&format!(
                "  {:<15} {:<14} {:>3} steps {:>4} harvests  best {best:>3}  {}\n",
                t.case.to_string(),
                t.outcome.to_string(),
                t.steps.len(),
                t.harvested.len(),
                t.reason
            ));
        }
        out
    }
}

#[derive(Debug, Serialize)]
pub struct ClassEntry {
    pub signature: String,
    pub size: u64,
    pub edges: String,
}

#[derive(Debug, Serialize)]
pub struct ClassListing {
    pub schema: u32,
    pub n: usize,
    pub count: usize,
    pub classes: Vec<ClassEntry>,
}

pub fn classes(n: usize) -> Result<ClassListing> {
    if n == 0 || n > MAX_CLASS_VERTICES {
        return Err(LabError::Usage(format!("classes needs n in 1..={MAX_CLASS_VERTICES}")));
    }
    let table = class_table(n)?;
    let classes: Vec<ClassEntry> = table
        .classes()
        .iter()
        .map(|c| ClassEntry {
            signature: c.signature.hex(),
            size: c.size,
            edges: c.representative().to_string(),
        })
        .collect();
    Ok(ClassListing {
        schema: SCHEMA,
        n,
        count: classes.len(),
        classes,
    })
}

impl ClassListing {
    pub fn to_text(&self) -> String {
        let mut out = format!("{} isomorphism classes on {} vertices\n", self.count, self.n);
        out.push_str(&format!("  {:<10} {:>6}  representative\n", "signature", "graphs"));
        for c in &self.classes {
            out.push_str(&format!("  {:<10} {:>6}  {}\n", c.signature, c.size, c.edges));
        }
        out
    }
}

#[derive(Debug, Serialize)]
pub struct MonotoneEntry {
    pub property: &'static str,
    pub monotone: bool,
    pub nontrivial: bool,
    /// Present for the builtins the bound applies to.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sensitivity: Option<u32>,
    pub checked: bool,
    pub holds: bool,
}

#[derive(Debug, Serialize)]
pub struct MonotoneReport {
    pub schema: u32,
    pub n: usize,
    pub bound: u32,
    pub entries: Vec<MonotoneEntry>,
}

impl MonotoneReport {
    pub fn violations(&self) -> impl Iterator<Item = &MonotoneEntry> {
        self.entries.iter().filter(|e| e.checked && !e.holds)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("monotone builtins on n = {}: asserting s(f) ≥ {}\n", self.n, self.bound);
        for e in &self.entries {
            let status = match (e.checked, e.holds) {
                (false, _) if !e.monotone => "skipped (not monotone)".to_string(),
                (false, _) => "skipped (trivial)".to_string(),
                (true, true) => format!("s = {} holds", e.sensitivity.unwrap_or(0)),
                (true, false) => format!("s = {} VIOLATED", e.sensitivity.unwrap_or(0)),
            };
            out.push_str(&format!("  {:<24} {status}\n", e.property));
        }
        out
    }
}

/// Checks `s(f) ≥ n − 1` for every builtin that is monotone and non-trivial at `n`.
pub fn monotone_check(n: usize) -> Result<MonotoneReport> {
    if n == 0 || n > TABLE_VERTEX_LIMIT {
        return Err(LabError::Usage(format!("monotone-check needs n in 1..={TABLE_VERTEX_LIMIT}")));
    }
    let bound = (n - 1) as u32;
    let mut entries = Vec::new();
    for b in registry() {
        let f = b.table(n)?;
        let nontrivial = f.is_nontrivial()?;
        let checked = b.monotone && nontrivial;
        let sensitivity = if checked { Some(max_sensitivity(&f)?.value) } else { None };
        entries.push(MonotoneEntry {
            property: b.name,
            monotone: b.monotone,
            nontrivial,
            sensitivity,
            checked,
            holds: sensitivity.is_none_or(|s| s >= bound),
        });
    }
    Ok(MonotoneReport {
        schema: SCHEMA,
        n,
        bound,
        entries,
    })
}
