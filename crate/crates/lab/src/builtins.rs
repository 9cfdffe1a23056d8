use sensitivity_core::graph::{edge_slots, EdgeIndexer, MAX_VERTICES};
use sensitivity_core::hypercube::{PropertyFunction, DEFAULT_MEMO_CAPACITY};

use crate::error::{LabError, Result};

/// Largest vertex count with a truth-table backing; larger `n` use a memoized oracle.
pub const TABLE_VERTEX_LIMIT: usize = 7;

/// A named graph property given as a predicate on adjacency rows.
#[derive(Clone, Copy)]
pub struct BuiltinProperty {
    pub name: &'static str,
    pub description: &'static str,
    /// Monotone under edge addition, for every `n`.
    pub monotone: bool,
    rule: fn(&[u16]) -> bool,
    expected: Option<fn(usize) -> u32>,
}

impl std::fmt::Debug for BuiltinProperty {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BuiltinProperty").field("name", &self.name).finish()
    }
}

impl BuiltinProperty {
    pub fn holds(&self, adjacency: &[u16]) -> bool {
        (self.rule)(adjacency)
    }

    /// The exact sensitivity, where it is known in closed form.
    pub fn expected_sensitivity(&self, n: usize) -> Option<u32> {
        self.expected.map(|e| e(n))
    }

    /// Truth table for `n ≤ 7`, memoized oracle above.
    pub fn function(&self, n: usize) -> Result<PropertyFunction> {
        if n == 0 || n > MAX_VERTICES {
            return Err(LabError::Usage(format!("n must be in 1..={MAX_VERTICES}, got {n}")));
        }
        let f = if n <= TABLE_VERTEX_LIMIT {
            self.table(n)?
        } else {
            self.oracle(n)?.with_memo(DEFAULT_MEMO_CAPACITY)
        };
        Ok(f)
    }

    pub fn table(&self, n: usize) -> Result<PropertyFunction> {
        let pairs: Vec<(usize, usize)> = EdgeIndexer::get(n)?.pairs().collect();
        let rule = self.rule;
        let f = PropertyFunction::tabulate(edge_slots(n), |x| rule(&adjacency(n, &pairs, x)))?;
        Ok(f.with_vertices(n)?)
    }

    pub fn oracle(&self, n: usize) -> Result<PropertyFunction> {
        let pairs: Vec<(usize, usize)> = EdgeIndexer::get(n)?.pairs().collect();
        let rule = self.rule;
        let f = PropertyFunction::oracle(edge_slots(n), move |x| rule(&adjacency(n, &pairs, x)))?;
        Ok(f.with_vertices(n)?)
    }
}

fn adjacency(n: usize, pairs: &[(usize, usize)], bits: u64) -> Vec<u16> {
    let mut adj = vec![0u16; n];
    let mut rest = bits;
    while rest != 0 {
        let c = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let (i, j) = pairs[c];
        adj[i] |= 1 << j;
        adj[j] |= 1 << i;
    }
    adj
}

fn dominating_vertex(adj: &[u16]) -> bool {
    let n = adj.len() as u32;
    adj.iter().any(|a| a.count_ones() + 1 == n)
}

fn has_edge(adj: &[u16]) -> bool {
    adj.iter().any(|&a| a != 0)
}

fn edge_parity(adj: &[u16]) -> bool {
    adj.iter().map(|a| a.count_ones()).sum::<u32>() / 2 % 2 == 1
}

fn connected(adj: &[u16]) -> bool {
    let all = if adj.len() == 16 { u16::MAX } else { (1u16 << adj.len()) - 1 };
    let mut seen = 1u16;
    let mut frontier = 1u16;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[v] & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen == all
}

fn contains_triangle(adj: &[u16]) -> bool {
    (0..adj.len()).any(|a| {
        let mut higher = adj[a] & !((2u16 << a) - 1);
        while higher != 0 {
            let b = higher.trailing_zeros() as usize;
            higher &= higher - 1;
            if adj[a] & adj[b] != 0 {
                return true;
            }
        }
        false
    })
}

fn no_isolated_vertex(adj: &[u16]) -> bool {
    adj.iter().all(|&a| a != 0)
}

fn perfect_matching(adj: &[u16]) -> bool {
    fn matchable(adj: &[u16], free: u16) -> bool {
        if free == 0 {
            return true;
        }
        let a = free.trailing_zeros() as usize;
        let rest = free & !(1 << a);
        let mut options = adj[a] & rest;
        while options != 0 {
            let b = options.trailing_zeros();
            options &= options - 1;
            if matchable(adj, rest & !(1 << b)) {
                return true;
            }
        }
        false
    }
    adj.len().is_multiple_of(2) && matchable(adj, ((1u32 << adj.len()) - 1) as u16)
}

fn has_isolated_vertex(adj: &[u16]) -> bool {
    adj.contains(&0)
}

fn all_pairs(n: usize) -> u32 {
    edge_slots(n)
}

fn n_minus_one(n: usize) -> u32 {
    n.saturating_sub(1) as u32
}

const REGISTRY: [BuiltinProperty; 8] = [
    BuiltinProperty {
        name: "degree-n-minus-1",
        description: "some vertex is adjacent to all others",
        monotone: true,
        rule: dominating_vertex,
        expected: Some(n_minus_one),
    },
    BuiltinProperty {
        name: "has-edge",
        description: "at least one edge",
        monotone: true,
        rule: has_edge,
        expected: Some(all_pairs),
    },
    BuiltinProperty {
        name: "edge-parity",
        description: "odd number of edges",
        monotone: false,
        rule: edge_parity,
        expected: Some(all_pairs),
    },
    BuiltinProperty {
        name: "connected",
        description: "connected",
        monotone: true,
        rule: connected,
        expected: None,
    },
    BuiltinProperty {
        name: "contains-triangle",
        description: "contains a triangle",
        monotone: true,
        rule: contains_triangle,
        expected: None,
    },
    BuiltinProperty {
        name: "min-degree-at-least-1",
        description: "no isolated vertex",
        monotone: true,
        rule: no_isolated_vertex,
        expected: None,
    },
    BuiltinProperty {
        name: "perfect-matching",
        description: "has a perfect matching",
        monotone: true,
        rule: perfect_matching,
        expected: None,
    },
    BuiltinProperty {
        name: "has-isolated-vertex",
        description: "some vertex has no edge",
        monotone: false,
        rule: has_isolated_vertex,
        expected: None,
    },
];

pub fn registry() -> &'static [BuiltinProperty] {
    &REGISTRY
}

pub fn lookup(name: &str) -> Result<&'static BuiltinProperty> {
    REGISTRY.iter().find(|b| b.name == name).ok_or_else(|| {
        let names: Vec<&str> = REGISTRY.iter().map(|b| b.name).collect();
        LabError::Usage(format!("unknown property {name:?}; known: {}", names.join(", ")))
    })
}

pub fn builtin(name: &str, n: usize) -> Result<PropertyFunction> {
    lookup(name)?.function(n)
}
