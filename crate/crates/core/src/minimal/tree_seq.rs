use super::components::{classify_components, ComponentKind};
use crate::error::{Error, Result};
use crate::graph::{are_isomorphic, LabeledGraph};

/// Trees `T⁽¹⁾ … T⁽ᵏ⁾` on the shared vertex set, each adding one leaf.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeConstructionSequence {
    pub trees: Vec<LabeledGraph>,
}

impl TreeConstructionSequence {
    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    /// Checks the three defining conditions against `target`.
    pub fn is_valid_for(&self, target: &LabeledGraph) -> bool {
        let k = self.trees.len();
        if k == 0 || k as u32 != target.edge_count() {
            return false;
        }
        for (i, t) in self.trees.iter().enumerate() {
            let report = classify_components(t);
            let non_trivial: Vec<_> = report
                .components
                .iter()
                .filter(|c| c.kind != ComponentKind::IsolatedVertex)
                .collect();
            if t.edge_count() as usize != i + 1
                || non_trivial.len() != 1
                || non_trivial[0].kind != ComponentKind::Tree
            {
                return false;
            }
        }
        for pair in self.trees.windows(2) {
            let (small, big) = (pair[0], pair[1]);
            if !small.is_subgraph_of(&big) {
                return false;
            }
            let added = big.difference(&small).edges();
            if added.len() != 1 {
                return false;
            }
            let (a, b) = added[0];
            let deg = small.degrees();
            // exactly one endpoint is new
            if (deg[a] == 0) == (deg[b] == 0) {
                return false;
            }
        }
        matches!(are_isomorphic(&self.trees[k - 1], target), Ok(true))
    }
}

/// A construction sequence for a tree (plus isolated vertices), obtained by
/// removing the smallest leaf repeatedly and replaying the removals backwards.
pub fn tree_construction_sequence(t: &LabeledGraph) -> Result<TreeConstructionSequence> {
    if t.is_empty() {
        return Err(Error::NotATree("graph has no edges".into()));
    }
    let report = classify_components(t);
    let mut non_trivial = report
        .components
        .iter()
        .filter(|c| c.kind != ComponentKind::IsolatedVertex);
    let component = non_trivial.next().expect("graph has an edge");
    if non_trivial.next().is_some() {
        return Err(Error::NotATree("more than one component with edges".into()));
    }
    if component.kind != ComponentKind::Tree {
        return Err(Error::NotATree("component contains a cycle".into()));
    }
    let mut adj = t.adjacency();
    let mut removed = Vec::new();
    while removed.len() + 1 < t.edge_count() as usize {
        let leaf = (0..adj.len())
            .find(|&v| adj[v].count_ones() == 1)
            .expect("a tree with two or more edges has a leaf");
        let parent = adj[leaf].trailing_zeros() as usize;
        adj[leaf] = 0;
        adj[parent] &= !(1 << leaf);
        removed.push((leaf, parent));
    }
    let mut current = t.with_bits(0);
    for (i, row) in adj.iter().enumerate() {
        for j in i + 1..adj.len() {
            if (row >> j) & 1 == 1 {
                current = current.with_edge(i, j)?;
            }
        }
    }
    let mut trees = vec![current];
    for &(leaf, parent) in removed.iter().rev() {
        current = current.with_edge(leaf, parent)?;
        trees.push(current);
    }
    Ok(TreeConstructionSequence { trees })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{edge_slots, enumerate_iso_classes};

    #[test]
    fn star_sequence() {
        let star = LabeledGraph::from_edges(5, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let seq = tree_construction_sequence(&star).unwrap();
        let counts: Vec<u32> = seq.trees.iter().map(|t| t.edge_count()).collect();
        assert_eq!(counts, vec![1, 2, 3]);
        assert!(seq.is_valid_for(&star));
    }

    #[test]
    fn single_edge_sequence() {
        let e = LabeledGraph::from_edges(4, &[(1, 3)]).unwrap();
        let seq = tree_construction_sequence(&e).unwrap();
        assert_eq!(seq.trees, vec![e]);
    }

    #[test]
    fn rejects_non_trees() {
        let tri = LabeledGraph::from_edges(4, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(matches!(tree_construction_sequence(&tri), Err(Error::NotATree(_))));
        let forest = LabeledGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(tree_construction_sequence(&forest).is_err());
        assert!(tree_construction_sequence(&LabeledGraph::empty(3).unwrap()).is_err());
    }

    #[test]
    fn every_small_tree_has_a_valid_sequence() {
        let mut trees = 0;
        for n in 2..=6 {
            for class in enumerate_iso_classes(n).unwrap() {
                let g = class.representative();
                let report = classify_components(&g);
                let is_tree = report.components.len() == 1 && report.components[0].kind == ComponentKind::Tree;
                if !is_tree {
                    continue;
                }
                trees += 1;
                let seq = tree_construction_sequence(&g).unwrap();
                assert!(seq.is_valid_for(&g), "n={n} tree {g}");
                assert!(g.edge_count() <= edge_slots(n));
            }
        }
        // spanning trees up to isomorphism on 2..=6 vertices: 1+1+2+3+6
        assert_eq!(trees, 13);
    }
}
