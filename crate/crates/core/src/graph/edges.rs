use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Largest vertex count whose edge slots fit one `u64` point.
pub const MAX_VERTICES: usize = 11;

pub const fn edge_slots(n: usize) -> u32 {
    (n * n.saturating_sub(1) / 2) as u32
}

/// Bijection between unordered vertex pairs `{i, j}` (0-based, `i < j`) and
/// coordinates `0..n(n-1)/2`, in lexicographic pair order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeIndexer {
    n: usize,
    pairs: Vec<(u8, u8)>,
    slots: Vec<u8>,
}

impl EdgeIndexer {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCountOutOfRange {
                n,
                limit: MAX_VERTICES,
            });
        }
        let mut pairs = Vec::with_capacity(edge_slots(n) as usize);
        let mut slots = vec![u8::MAX; n * n];
        for i in 0..n {
            for j in i + 1..n {
                let idx = pairs.len() as u8;
                slots[i * n + j] = idx;
                slots[j * n + i] = idx;
                pairs.push((i as u8, j as u8));
            }
        }
        Ok(Self { n, pairs, slots })
    }

    /// Shared indexer for `n` vertices.
    pub fn get(n: usize) -> Result<&'static EdgeIndexer> {
        static CACHE: [OnceLock<EdgeIndexer>; MAX_VERTICES + 1] =
            [const { OnceLock::new() }; MAX_VERTICES + 1];
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCountOutOfRange {
                n,
                limit: MAX_VERTICES,
            });
        }
        Ok(CACHE[n].get_or_init(|| EdgeIndexer::new(n).expect("n checked")))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn slots(&self) -> u32 {
        self.pairs.len() as u32
    }

    pub fn index(&self, i: usize, j: usize) -> Result<u32> {
        if i == j || i >= self.n || j >= self.n {
            return Err(Error::InvalidEdge { n: self.n, i, j });
        }
        Ok(u32::from(self.slots[i * self.n + j]))
    }

    /// Unchecked slot lookup for in-range distinct vertices.
    #[inline]
    pub(crate) fn slot(&self, i: usize, j: usize) -> u32 {
        u32::from(self.slots[i * self.n + j])
    }

    pub fn pair(&self, coordinate: u32) -> Result<(usize, usize)> {
        self.pairs
            .get(coordinate as usize)
            .map(|&(i, j)| (usize::from(i), usize::from(j)))
            .ok_or(Error::CoordinateOutOfRange {
                index: coordinate,
                arity: self.slots(),
            })
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().map(|&(i, j)| (usize::from(i), usize::from(j)))
    }
}

/// Coordinate of the pair `{i, j}` among `n` vertices.
pub fn edge_index(n: usize, i: usize, j: usize) -> Result<u32> {
    EdgeIndexer::get(n)?.index(i, j)
}

/// The pair at `coordinate`, smaller vertex first.
pub fn edge_unindex(n: usize, coordinate: u32) -> Result<(usize, usize)> {
    EdgeIndexer::get(n)?.pair(coordinate)
}
