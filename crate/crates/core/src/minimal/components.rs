use serde::Serialize;

use super::extended::Extended;
use crate::error::{Error, Result};
use crate::graph::LabeledGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ComponentKind {
    IsolatedVertex,
    Tree,
    Cyclic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub edge_count: u32,
    pub kind: ComponentKind,
    /// Edge slots of the component.
    #[serde(skip)]
    pub edges: u64,
}

/// Connected components ordered by smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    pub components: Vec<Component>,
}

impl ComponentReport {
    pub fn of_kind(&self, kind: ComponentKind) -> impl Iterator<Item = &Component> {
        self.components.iter().filter(move |c| c.kind == kind)
    }

    pub fn trees(&self) -> impl Iterator<Item = &Component> {
        self.of_kind(ComponentKind::Tree)
    }

    /// Number of tree components with at least one edge.
    pub fn tree_count(&self) -> usize {
        self.trees().count()
    }
}

pub fn isolated_vertices(g: &LabeledGraph) -> Vec<usize> {
    g.adjacency()
        .iter()
        .enumerate()
        .filter(|(_, &a)| a == 0)
        .map(|(v, _)| v)
        .collect()
}

pub fn classify_components(g: &LabeledGraph) -> ComponentReport {
    let adj = g.adjacency();
    let n = g.n();
    let mut seen = 0u16;
    let mut components = Vec::new();
    for start in 0..n {
        if (seen >> start) & 1 == 1 {
            continue;
        }
        let mut members = 1u16 << start;
        let mut frontier = members;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & !members;
            members |= fresh;
            frontier |= fresh;
        }
        seen |= members;
        let vertices: Vec<usize> = (0..n).filter(|&v| (members >> v) & 1 == 1).collect();
        let mut edges = 0u64;
        for c in g.slots() {
            let (i, _) = g.indexer().pair(c).expect("slot in range");
            if (members >> i) & 1 == 1 {
                edges |= 1u64 << c;
            }
        }
        let edge_count = edges.count_ones();
        let kind = if edge_count == 0 {
            ComponentKind::IsolatedVertex
        } else if edge_count as usize + 1 == vertices.len() {
            ComponentKind::Tree
        } else {
            ComponentKind::Cyclic
        };
        components.push(Component {
            vertices,
            edge_count,
            kind,
            edges,
        });
    }
    ComponentReport { components }
}

/// `δ′(G)`: least degree over non-isolated vertices; `∞` for the empty graph.
pub fn positive_min_degree(g: &LabeledGraph) -> Extended {
    g.degrees()
        .into_iter()
        .filter(|&d| d > 0)
        .min()
        .map_or(Extended::Infinite, Extended::Finite)
}

/// `c(G)`: fewest edges of a tree component with at least one edge; `∞` if none.
pub fn positive_min_tree_size(g: &LabeledGraph) -> Extended {
    classify_components(g)
        .trees()
        .map(|c| c.edge_count)
        .min()
        .map_or(Extended::Infinite, Extended::Finite)
}

/// `G_[k]`: the largest subgraph whose positive minimum degree is at least `k`,
/// by peeling edges at low-degree vertices until nothing changes.
pub fn degree_truncation(g: &LabeledGraph, k: u32) -> Result<LabeledGraph> {
    if k == 0 {
        return Err(Error::ZeroTruncation);
    }
    let mut adj = g.adjacency();
    loop {
        let weak: Vec<usize> = (0..adj.len())
            .filter(|&v| adj[v] != 0 && adj[v].count_ones() < k)
            .collect();
        if weak.is_empty() {
            break;
        }
        for v in weak {
            let nbrs = adj[v];
            for (u, a) in adj.iter_mut().enumerate() {
                if (nbrs >> u) & 1 == 1 {
                    *a &= !(1 << v);
                }
            }
            adj[v] = 0;
        }
    }
    let ix = g.indexer();
    let mut bits = 0u64;
    for (i, row) in adj.iter().enumerate() {
        for j in i + 1..adj.len() {
            if (row >> j) & 1 == 1 {
                bits |= 1u64 << ix.slot(i, j);
            }
        }
    }
    LabeledGraph::new(g.n(), bits)
}

/// `G_(k)`: `G` without the edges of tree components having fewer than `k` edges.
pub fn tree_truncation(g: &LabeledGraph, k: u32) -> Result<LabeledGraph> {
    if k == 0 {
        return Err(Error::ZeroTruncation);
    }
    let mut bits = g.bits();
    for c in classify_components(g).trees() {
        if c.edge_count < k {
            bits &= !c.edges;
        }
    }
    LabeledGraph::new(g.n(), bits)
}
