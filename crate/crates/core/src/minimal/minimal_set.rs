use serde::{Deserialize, Serialize};

use super::components::{positive_min_degree, positive_min_tree_size};
use super::extended::Extended;
use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::hypercube::PropertyFunction;

/// `m(f)` with its summary values `δ′(f)` and `c(f)`. Graphs are sorted by
/// edge bitmask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalGraphSet {
    pub n: usize,
    pub graphs: Vec<LabeledGraph>,
    pub min_positive_degree: Extended,
    pub min_tree_size: Extended,
}

impl MinimalGraphSet {
    pub fn contains(&self, g: &LabeledGraph) -> bool {
        self.graphs.binary_search(g).is_ok()
    }

    pub fn max_edges(&self) -> u32 {
        self.graphs.iter().map(|g| g.edge_count()).max().unwrap_or(0)
    }

    /// Members contained in `h`, smallest bitmask first.
    pub fn below<'a>(&'a self, h: &'a LabeledGraph) -> impl Iterator<Item = &'a LabeledGraph> + 'a {
        self.graphs.iter().filter(move |g| g.is_subgraph_of(h))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&MinimalSetJson::from(self)).expect("plain data")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: MinimalSetJson =
            serde_json::from_str(s).map_err(|e| Error::Malformed(format!("minimal-set JSON: {e}")))?;
        let mut graphs = raw
            .graphs
            .iter()
            .map(|h| LabeledGraph::from_hex(raw.n, h))
            .collect::<Result<Vec<_>>>()?;
        graphs.sort();
        Ok(Self {
            n: raw.n,
            graphs,
            min_positive_degree: raw.min_positive_degree,
            min_tree_size: raw.min_tree_size,
        })
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct MinimalSetJson {
    n: usize,
    graphs: Vec<String>,
    min_positive_degree: Extended,
    min_tree_size: Extended,
}

impl From<&MinimalGraphSet> for MinimalSetJson {
    fn from(set: &MinimalGraphSet) -> Self {
        Self {
            n: set.n,
            graphs: set.graphs.iter().map(|g| g.hex()).collect(),
            min_positive_degree: set.min_positive_degree,
            min_tree_size: set.min_tree_size,
        }
    }
}

/// Exact `m(f)` by one downward sweep over the truth table: a point is marked
/// when some 1 lies weakly below it, and a 1 is minimal iff none of its
/// one-edge-deleted children is marked.
pub fn minimal_graphs(f: &PropertyFunction) -> Result<MinimalGraphSet> {
    let table = f.table().ok_or(Error::RequiresTable)?;
    let n = f.vertices().ok_or(Error::NotAGraphFunction)?;
    if !f.is_nontrivial()? {
        return Err(Error::TrivialFunction);
    }
    if table.get(0) {
        return Err(Error::NotNormalized);
    }
    let graphs = table
        .minimal_ones()
        .ones()
        .map(|bits| LabeledGraph::new(n, bits))
        .collect::<Result<Vec<_>>>()?;
    let min_positive_degree = graphs
        .iter()
        .map(positive_min_degree)
        .min()
        .unwrap_or(Extended::Infinite);
    let min_tree_size = graphs
        .iter()
        .map(positive_min_tree_size)
        .min()
        .unwrap_or(Extended::Infinite);
    Ok(MinimalGraphSet {
        n,
        graphs,
        min_positive_degree,
        min_tree_size,
    })
}

/// True iff `f(g) = 1` and every proper subgraph of `g` is 0, checked by
/// enumerating subgraphs. Works for any backing.
pub fn is_minimal_for(f: &PropertyFunction, g: &LabeledGraph) -> bool {
    if !f.value(g.bits()) {
        return false;
    }
    let full = g.bits();
    let mut sub = full;
    while sub != 0 {
        sub = (sub - 1) & full;
        if f.value(sub) {
            return false;
        }
    }
    true
}

/// A minimal graph of `f` inside `h`: fewest edges, then smallest bitmask.
pub fn minimal_below(f: &PropertyFunction, h: &LabeledGraph) -> Option<LabeledGraph> {
    let full = h.bits();
    let mut best: Option<u64> = None;
    let mut sub = full;
    loop {
        if f.value(sub) {
            let better = match best {
                None => true,
                Some(b) => (sub.count_ones(), sub) < (b.count_ones(), b),
            };
            if better {
                best = Some(sub);
            }
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & full;
    }
    best.map(|b| h.with_bits(b))
}
