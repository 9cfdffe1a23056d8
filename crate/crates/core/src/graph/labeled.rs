use std::fmt;

use super::edges::{edge_slots, EdgeIndexer, MAX_VERTICES};
use crate::error::{Error, Result};
use crate::hypercube::{BitIter, BooleanPoint};

/// A graph on vertices `0..n`, stored as its edge-slot bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledGraph {
    n: u8,
    edges: u64,
}

fn slot_mask(n: usize) -> u64 {
    let m = edge_slots(n);
    if m >= 64 {
        u64::MAX
    } else {
        (1u64 << m) - 1
    }
}

impl LabeledGraph {
    pub fn new(n: usize, edges: u64) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCountOutOfRange {
                n,
                limit: MAX_VERTICES,
            });
        }
        if edges & !slot_mask(n) != 0 {
            return Err(Error::BitsOutOfRange {
                arity: edge_slots(n),
                bits: edges,
            });
        }
        Ok(Self { n: n as u8, edges })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, 0)
    }

    pub fn complete(n: usize) -> Result<Self> {
        Self::new(n, slot_mask(n))
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let ix = EdgeIndexer::get(n)?;
        let mut bits = 0u64;
        for &(i, j) in edges {
            bits |= 1u64 << ix.index(i, j)?;
        }
        Ok(Self { n: n as u8, edges: bits })
    }

    pub fn from_point(n: usize, x: &BooleanPoint) -> Result<Self> {
        if x.arity() != edge_slots(n) {
            return Err(Error::ArityMismatch {
                expected: edge_slots(n),
                actual: x.arity(),
            });
        }
        Self::new(n, x.bits())
    }

    pub fn n(&self) -> usize {
        usize::from(self.n)
    }

    pub fn bits(&self) -> u64 {
        self.edges
    }

    pub fn point(&self) -> BooleanPoint {
        BooleanPoint::new(edge_slots(self.n()), self.edges).expect("edges within slots")
    }

    pub fn indexer(&self) -> &'static EdgeIndexer {
        EdgeIndexer::get(self.n()).expect("validated n")
    }

    /// `|G|`, the number of edges.
    pub fn edge_count(&self) -> u32 {
        self.edges.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.edges == 0
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && i < self.n() && j < self.n() && (self.edges >> self.indexer().slot(i, j)) & 1 == 1
    }

    pub fn has_slot(&self, coordinate: u32) -> bool {
        coordinate < 64 && (self.edges >> coordinate) & 1 == 1
    }

    pub fn with_edge(&self, i: usize, j: usize) -> Result<Self> {
        let c = self.indexer().index(i, j)?;
        Ok(Self {
            n: self.n,
            edges: self.edges | (1u64 << c),
        })
    }

    pub fn without_edge(&self, i: usize, j: usize) -> Result<Self> {
        let c = self.indexer().index(i, j)?;
        Ok(Self {
            n: self.n,
            edges: self.edges & !(1u64 << c),
        })
    }

    pub(crate) fn with_bits(&self, edges: u64) -> Self {
        Self { n: self.n, edges }
    }

    /// Edge slots present, ascending.
    pub fn slots(&self) -> impl Iterator<Item = u32> {
        BitIter(self.edges)
    }

    /// Edges as vertex pairs, in slot order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let ix = self.indexer();
        self.slots().map(|c| ix.pair(c).expect("slot in range")).collect()
    }

    /// Neighbor bitmasks indexed by vertex.
    pub fn adjacency(&self) -> Vec<u16> {
        let mut adj = vec![0u16; self.n()];
        for (i, j) in self.edges() {
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
        adj
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.adjacency().iter().map(|a| a.count_ones()).collect()
    }

    pub fn degree(&self, v: usize) -> u32 {
        (0..self.n()).filter(|&u| self.has_edge(u, v)).count() as u32
    }

    pub fn is_subgraph_of(&self, other: &LabeledGraph) -> bool {
        self.n == other.n && self.edges & !other.edges == 0
    }

    pub fn union(&self, other: &LabeledGraph) -> Self {
        debug_assert_eq!(self.n, other.n);
        Self {
            n: self.n,
            edges: self.edges | other.edges,
        }
    }

    pub fn difference(&self, other: &LabeledGraph) -> Self {
        debug_assert_eq!(self.n, other.n);
        Self {
            n: self.n,
            edges: self.edges & !other.edges,
        }
    }

    /// Lowercase hexadecimal edge bitmask.
    pub fn hex(&self) -> String {
        format!("{:x}", self.edges)
    }

    pub fn from_hex(n: usize, s: &str) -> Result<Self> {
        let digits = s.trim().trim_start_matches("0x");
        let edges = u64::from_str_radix(digits, 16)
            .map_err(|e| Error::Malformed(format!("bad hex graph {s:?}: {e}")))?;
        Self::new(n, edges)
    }
}

/// Edge list with 1-based vertex labels, e.g. `{1,2} {2,3}`.
impl fmt::Display for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges = self.edges();
        if edges.is_empty() {
            return write!(f, "(no edges, n={})", self.n);
        }
        for (k, (i, j)) in edges.into_iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{{{},{}}}", i + 1, j + 1)?;
        }
        Ok(())
    }
}

/// A bijection on `0..n`; `images[i]` is the image of vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(Error::InvalidPermutation { n, images });
            }
            seen[v] = true;
        }
        Ok(Self {
            images: images.into_iter().map(|v| v as u8).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n as u8).collect(),
        }
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        if a >= n || b >= n {
            return Err(Error::InvalidPermutation { n, images });
        }
        images.swap(a, b);
        Self::new(images)
    }

    /// The cycle `0 → 1 → … → n-1 → 0`.
    pub fn cycle(n: usize) -> Self {
        Self {
            images: (0..n).map(|i| ((i + 1) % n) as u8).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, v: usize) -> usize {
        usize::from(self.images[v])
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&v| usize::from(v)).collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::VertexCountMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(Self {
            images: other.images.iter().map(|&v| self.images[usize::from(v)]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0u8; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            images[usize::from(v)] = i as u8;
        }
        Self { images }
    }
}

/// `πG`: the edge `{i, j}` of `G` becomes `{π(i), π(j)}`.
pub fn apply_permutation(g: &LabeledGraph, pi: &Permutation) -> Result<LabeledGraph> {
    if g.n() != pi.n() {
        return Err(Error::VertexCountMismatch {
            left: g.n(),
            right: pi.n(),
        });
    }
    let ix = g.indexer();
    let mut bits = 0u64;
    for (i, j) in g.edges() {
        bits |= 1u64 << ix.slot(pi.image(i), pi.image(j));
    }
    Ok(g.with_bits(bits))
}

/// Precomputed action of one permutation on edge bitmasks, one lookup table
/// per byte of the mask.
#[derive(Debug, Clone)]
pub struct EdgePermuter {
    tables: Vec<[u64; 256]>,
}

impl EdgePermuter {
    pub fn new(pi: &Permutation) -> Result<Self> {
        let n = pi.n();
        let ix = EdgeIndexer::get(n)?;
        let targets: Vec<u32> = ix.pairs().map(|(i, j)| ix.slot(pi.image(i), pi.image(j))).collect();
        let chunks = targets.len().div_ceil(8);
        let mut tables = vec![[0u64; 256]; chunks];
        for (c, table) in tables.iter_mut().enumerate() {
            for (byte, entry) in table.iter_mut().enumerate() {
                let mut out = 0u64;
                for b in 0..8 {
                    let slot = c * 8 + b;
                    if (byte >> b) & 1 == 1 && slot < targets.len() {
                        out |= 1u64 << targets[slot];
                    }
                }
                *entry = out;
            }
        }
        Ok(Self { tables })
    }

    #[inline]
    pub fn apply(&self, bits: u64) -> u64 {
        let mut out = 0u64;
        for (c, table) in self.tables.iter().enumerate() {
            out |= table[((bits >> (8 * c)) & 0xFF) as usize];
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_perm(n: usize, rng: &mut ChaCha8Rng) -> Permutation {
        let mut v: Vec<usize> = (0..n).collect();
        v.shuffle(rng);
        Permutation::new(v).unwrap()
    }

    #[test]
    fn transposition_moves_triangle() {
        let tri = LabeledGraph::from_edges(4, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let t = Permutation::transposition(4, 2, 3).unwrap();
        let moved = apply_permutation(&tri, &t).unwrap();
        let expected = LabeledGraph::from_edges(4, &[(0, 1), (0, 3), (1, 3)]).unwrap();
        assert_eq!(moved, expected);
        assert_eq!(moved.to_string(), "{1,2} {1,4} {2,4}");
    }

    #[test]
    fn identity_fixes_graph() {
        let g = LabeledGraph::new(5, 0b10_1101_1001).unwrap();
        assert_eq!(apply_permutation(&g, &Permutation::identity(5)).unwrap(), g);
    }

    #[test]
    fn action_composes() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let g = LabeledGraph::new(5, rng.gen_range(0..1024)).unwrap();
            let sigma = random_perm(5, &mut rng);
            let pi = random_perm(5, &mut rng);
            let stepwise = apply_permutation(&apply_permutation(&g, &sigma).unwrap(), &pi).unwrap();
            // elementwise: each edge {i,j} lands on {pi(sigma(i)), pi(sigma(j))}
            let mut expected = LabeledGraph::empty(5).unwrap();
            for (i, j) in g.edges() {
                expected = expected
                    .with_edge(pi.image(sigma.image(i)), pi.image(sigma.image(j)))
                    .unwrap();
            }
            assert_eq!(stepwise, expected);
            let composed = apply_permutation(&g, &pi.compose(&sigma).unwrap()).unwrap();
            assert_eq!(stepwise, composed);
        }
    }

    #[test]
    fn permuter_matches_apply() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for n in [2, 4, 7, 9, 11] {
            let pi = random_perm(n, &mut rng);
            let fast = EdgePermuter::new(&pi).unwrap();
            for _ in 0..50 {
                let g = LabeledGraph::new(n, rng.gen::<u64>() & slot_mask(n)).unwrap();
                assert_eq!(fast.apply(g.bits()), apply_permutation(&g, &pi).unwrap().bits());
            }
        }
    }

    #[test]
    fn rejects_bad_permutations() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![0, 3, 1]).is_err());
        let g = LabeledGraph::empty(4).unwrap();
        assert!(apply_permutation(&g, &Permutation::identity(5)).is_err());
    }

    #[test]
    fn inverse_undoes() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let pi = random_perm(8, &mut rng);
        assert_eq!(pi.compose(&pi.inverse()).unwrap(), Permutation::identity(8));
    }
}
