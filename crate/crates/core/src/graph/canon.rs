//! Canonical forms: the smallest edge bitmask over all relabelings.
//!
//! Slots of pairs inside the top positions `{p..n-1}` are exactly the slots
//! at or above `index(p, p+1)`, so the bitmask compares like the sequence of
//! adjacency words of positions `n-1, n-2, …, 0`, where the word of position
//! `p` lists adjacency to positions `n-1` down to `p+1`. The search fills
//! positions from the top, keeps only vertices with the least word, and
//! branches once per class of interchangeable twins.

use std::fmt;

use serde::Serialize;

use super::labeled::LabeledGraph;
use crate::error::{Error, Result};

/// Largest vertex count accepted by [`canonical_form`].
pub const MAX_CANON_VERTICES: usize = 9;

/// Identifier of an isomorphism class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalSignature {
    n: u8,
    bits: u64,
}

impl CanonicalSignature {
    pub(crate) fn from_parts(n: usize, bits: u64) -> Self {
        Self { n: n as u8, bits }
    }

    pub fn n(&self) -> usize {
        usize::from(self.n)
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// The canonical representative itself.
    pub fn graph(&self) -> LabeledGraph {
        LabeledGraph::new(self.n(), self.bits).expect("signature within slots")
    }

    pub fn hex(&self) -> String {
        format!("{:x}", self.bits)
    }

    pub fn from_hex(n: usize, s: &str) -> Result<Self> {
        let g = LabeledGraph::from_hex(n, s)?;
        Ok(Self::from_parts(n, g.bits()))
    }
}

impl fmt::Display for CanonicalSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.hex())
    }
}

impl Serialize for CanonicalSignature {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.hex())
    }
}

struct Search {
    n: usize,
    adj: [u16; MAX_CANON_VERTICES],
    order: [u8; MAX_CANON_VERTICES],
    words: [u16; MAX_CANON_VERTICES],
    best_words: [u16; MAX_CANON_VERTICES],
    best_order: [u8; MAX_CANON_VERTICES],
    have_best: bool,
}

impl Search {
    /// Adjacency word of `v` against the vertices already placed above `p`.
    fn word(&self, v: usize, p: usize) -> u16 {
        let mut w = 0u16;
        for q in (p + 1..self.n).rev() {
            w = (w << 1) | ((self.adj[v] >> self.order[q]) & 1);
        }
        w
    }

    /// Compares the filled positions `p..n` with the best leaf's.
    fn cmp_prefix(&self, p: usize) -> std::cmp::Ordering {
        for q in (p..self.n).rev() {
            match self.words[q].cmp(&self.best_words[q]) {
                std::cmp::Ordering::Equal => continue,
                other => return other,
            }
        }
        std::cmp::Ordering::Equal
    }

    fn run(&mut self, filled: usize, remaining: u16) {
        if filled == self.n {
            if !self.have_best || self.cmp_prefix(0) == std::cmp::Ordering::Less {
                self.best_words = self.words;
                self.best_order = self.order;
                self.have_best = true;
            }
            return;
        }
        let p = self.n - 1 - filled;
        let mut least = u16::MAX;
        let mut candidates = 0u16;
        for v in 0..self.n {
            if (remaining >> v) & 1 == 0 {
                continue;
            }
            let w = self.word(v, p);
            if w < least {
                least = w;
                candidates = 1 << v;
            } else if w == least {
                candidates |= 1 << v;
            }
        }
        self.words[p] = least;
        if self.have_best && self.cmp_prefix(p) == std::cmp::Ordering::Greater {
            return;
        }
        let mut tried = 0u16;
        for v in 0..self.n {
            if (candidates >> v) & 1 == 0 {
                continue;
            }
            // swapping twins is an automorphism fixing every placed vertex
            let twin = (0..self.n).any(|u| {
                (tried >> u) & 1 == 1 && self.adj[u] & !(1 << v) == self.adj[v] & !(1 << u)
            });
            if twin {
                continue;
            }
            tried |= 1 << v;
            self.order[p] = v as u8;
            self.words[p] = least;
            self.run(filled + 1, remaining & !(1 << v));
            if self.have_best && self.cmp_prefix(p) == std::cmp::Ordering::Greater {
                return;
            }
        }
    }
}

/// The relabeling that realizes the canonical form: `result[v]` is the new label of `v`.
pub fn canonical_labeling(g: &LabeledGraph) -> Result<Vec<usize>> {
    let n = g.n();
    if n > MAX_CANON_VERTICES {
        return Err(Error::VertexCountOutOfRange {
            n,
            limit: MAX_CANON_VERTICES,
        });
    }
    let mut adj = [0u16; MAX_CANON_VERTICES];
    adj[..n].copy_from_slice(&g.adjacency());
    let mut search = Search {
        n,
        adj,
        order: [0; MAX_CANON_VERTICES],
        words: [0; MAX_CANON_VERTICES],
        best_words: [0; MAX_CANON_VERTICES],
        best_order: [0; MAX_CANON_VERTICES],
        have_best: false,
    };
    search.run(0, ((1u32 << n) - 1) as u16);
    let mut labels = vec![0usize; n];
    for (pos, &v) in search.best_order[..n].iter().enumerate() {
        labels[usize::from(v)] = pos;
    }
    Ok(labels)
}

pub fn canonical_form(g: &LabeledGraph) -> Result<CanonicalSignature> {
    let labels = canonical_labeling(g)?;
    let ix = g.indexer();
    let mut bits = 0u64;
    for (i, j) in g.edges() {
        bits |= 1u64 << ix.slot(labels[i], labels[j]);
    }
    Ok(CanonicalSignature::from_parts(g.n(), bits))
}

pub fn are_isomorphic(g: &LabeledGraph, h: &LabeledGraph) -> Result<bool> {
    if g.n() != h.n() {
        return Err(Error::VertexCountMismatch {
            left: g.n(),
            right: h.n(),
        });
    }
    if g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}
