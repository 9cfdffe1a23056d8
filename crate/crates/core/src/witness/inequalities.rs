use serde::Serialize;

use super::require_minimal;
use crate::error::Result;
use crate::graph::LabeledGraph;
use crate::hypercube::{sensitivity_at, PropertyFunction};
use crate::minimal::{classify_components, isolated_vertices, positive_min_degree, positive_min_tree_size, Extended};

/// One inequality from the case analysis, as `lhs <op> rhs` in exact integers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InequalityCheck {
    pub id: &'static str,
    pub statement: &'static str,
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
}

/// The quantities the inequalities are built from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructuralValues {
    pub n: usize,
    pub edges: u32,
    pub isolated: usize,
    /// Tree components with at least one edge.
    pub trees: usize,
    pub min_positive_degree: Extended,
    pub min_tree_size: Extended,
    /// `s(f, G)`.
    pub sensitivity: u32,
}

fn check(id: &'static str, statement: &'static str, lhs: i64, rhs: i64, holds: bool) -> InequalityCheck {
    InequalityCheck {
        id,
        statement,
        lhs,
        rhs,
        holds,
    }
}

/// Evaluates the structural inequalities of the case analysis at a minimal
/// graph `G`. Inequalities that only apply to some shapes of `G` are omitted
/// for the others. A failing inequality whose derivation assumed
/// `s(f) < ⌊n/2⌋` shows where that assumption breaks.
pub fn check_structural_inequalities(
    f: &PropertyFunction,
    g: &LabeledGraph,
) -> Result<(StructuralValues, Vec<InequalityCheck>)> {
    require_minimal(f, g)?;
    let n = g.n() as i64;
    let edges = i64::from(g.edge_count());
    let iso = isolated_vertices(g).len() as i64;
    let trees = classify_components(g).tree_count() as i64;
    let delta = positive_min_degree(g);
    let c = positive_min_tree_size(g);
    let s_g = i64::from(sensitivity_at(f, &g.point())?.value);
    let values = StructuralValues {
        n: g.n(),
        edges: g.edge_count(),
        isolated: iso as usize,
        trees: trees as usize,
        min_positive_degree: delta,
        min_tree_size: c,
        sensitivity: s_g as u32,
    };

    let mut out = vec![
        check("minimal-edges-sensitive", "|G| ≤ s(f,G)", edges, s_g, edges <= s_g),
        check("below-half", "s(f,G) < ⌊n/2⌋", s_g, n / 2, s_g < n / 2),
        check(
            "isolated-plus-edges-trees",
            "|I(G)| + |G| ≥ n − r",
            iso + edges,
            n - trees,
            iso + edges >= n - trees,
        ),
    ];
    if delta.is_finite_and(|d| d >= 2) {
        out.push(check(
            "isolated-plus-edges",
            "|G| + |I(G)| ≥ n",
            edges + iso,
            n,
            edges + iso >= n,
        ));
    }
    if delta == Extended::Finite(1) {
        let v = (0..g.n()).find(|&x| g.degree(x) == 1).expect("δ′(G) = 1");
        let u = g.adjacency()[v].trailing_zeros() as usize;
        let s_minus = i64::from(sensitivity_at(f, &g.without_edge(v, u)?.point())?.value);
        out.push(check(
            "pendant-edge",
            "|I(G)| + 1 ≤ s(f, G∖e)",
            iso + 1,
            s_minus,
            iso < s_minus,
        ));
    }
    if let Extended::Finite(cv) = c {
        let cv = i64::from(cv);
        out.push(check("tree-pigeonhole", "c(G)·r ≤ |G|", cv * trees, edges, cv * trees <= edges));
        if cv >= 2 {
            let rhs = 2 * (n - trees - cv + 2);
            out.push(check("copy-growth", "2(n − r − c(G) + 2) ≤ n", rhs, n, rhs <= n));
            // n/4 > n − r − (n/2 − 1)(1 + 1/r) + 1, scaled by 4r
            let lhs = n * trees;
            let rhs = 4 * trees * (n - trees + 1) - (2 * n - 4) * (trees + 1);
            out.push(check(
                "leaf-removal",
                "n/4 > n − r − (n/2 − 1)(1 + 1/r) + 1",
                lhs,
                rhs,
                lhs > rhs,
            ));
        }
        if cv == 1 {
            out.push(check("two-isolated", "|I(G)| ≥ 2", iso, 2, iso >= 2));
            let comp = classify_components(g)
                .trees()
                .find(|t| t.edge_count == 1)
                .map(|t| (t.vertices[0], t.vertices[1]))
                .expect("c(G) = 1");
            let s_minus = i64::from(sensitivity_at(f, &g.without_edge(comp.0, comp.1)?.point())?.value);
            let pairs = (iso + 2) * (iso + 1) / 2;
            out.push(check(
                "isolated-pairs",
                "C(|I(G)|+2, 2) ≤ s(f, G∖E_1)",
                pairs,
                s_minus,
                pairs <= s_minus,
            ));
        }
    }
    Ok((values, out))
}
