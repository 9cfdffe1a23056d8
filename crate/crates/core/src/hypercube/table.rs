//! Packed truth tables and the word-parallel kernels that scan them.
//!
//! Point `x` lives at bit `x % 64` of word `x / 64`. Coordinates below 6 move
//! a point inside its word; coordinates 6 and up move it to another word.
//! Tables for arity below 6 occupy the low `2^m` bits of a single word.

use crate::error::{Error, Result};

/// Largest arity a truth table may have (2^28 bits = 32 MiB).
pub const MAX_TABLE_ARITY: u32 = 28;

/// `LOW[i]` selects the in-word positions whose coordinate `i` is 0.
pub(crate) const LOW: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0F0F_0F0F_0F0F_0F0F,
    0x00FF_00FF_00FF_00FF,
    0x0000_FFFF_0000_FFFF,
    0x0000_0000_FFFF_FFFF,
];

/// Exchanges each point with its neighbor across in-word coordinate `i`.
#[inline]
pub(crate) fn swap_in_word(word: u64, i: u32) -> u64 {
    let shift = 1u32 << i;
    ((word >> shift) & LOW[i as usize]) | ((word & LOW[i as usize]) << shift)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    arity: u32,
    words: Vec<u64>,
}

impl TruthTable {
    pub fn zeros(arity: u32) -> Result<Self> {
        if arity > MAX_TABLE_ARITY {
            return Err(Error::ArityTooLarge {
                arity,
                limit: MAX_TABLE_ARITY,
            });
        }
        Ok(Self {
            arity,
            words: vec![0; word_count(arity)],
        })
    }

    pub fn from_fn(arity: u32, mut f: impl FnMut(u64) -> bool) -> Result<Self> {
        let mut table = Self::zeros(arity)?;
        let points = 1u64 << arity;
        for (w, word) in table.words.iter_mut().enumerate() {
            let base = (w as u64) << 6;
            let upper = points.min(base + 64);
            let mut acc = 0u64;
            for x in base..upper {
                if f(x) {
                    acc |= 1u64 << (x - base);
                }
            }
            *word = acc;
        }
        Ok(table)
    }

    /// Builds a table from raw words; bits outside the valid range are cleared.
    pub fn from_words(arity: u32, mut words: Vec<u64>) -> Result<Self> {
        if arity > MAX_TABLE_ARITY {
            return Err(Error::ArityTooLarge {
                arity,
                limit: MAX_TABLE_ARITY,
            });
        }
        if words.len() != word_count(arity) {
            return Err(Error::Malformed(format!(
                "expected {} words for arity {arity}, got {}",
                word_count(arity),
                words.len()
            )));
        }
        let mask = valid_mask(arity);
        for w in &mut words {
            *w &= mask;
        }
        Ok(Self { arity, words })
    }

    pub fn arity(&self) -> u32 {
        self.arity
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn len(&self) -> u64 {
        1u64 << self.arity
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn get(&self, x: u64) -> bool {
        (self.words[(x >> 6) as usize] >> (x & 63)) & 1 == 1
    }

    pub fn set(&mut self, x: u64, value: bool) {
        let word = &mut self.words[(x >> 6) as usize];
        if value {
            *word |= 1u64 << (x & 63);
        } else {
            *word &= !(1u64 << (x & 63));
        }
    }

    pub fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    pub fn complement(&self) -> Self {
        let mask = valid_mask(self.arity);
        Self {
            arity: self.arity,
            words: self.words.iter().map(|w| !w & mask).collect(),
        }
    }

    /// Indices of all points where the table is 1, ascending.
    pub fn ones(&self) -> impl Iterator<Item = u64> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let base = (w as u64) << 6;
            BitIter(word).map(move |b| base + u64::from(b))
        })
    }

    /// Mask of in-word points whose value differs from the neighbor across `coord`.
    #[inline]
    pub(crate) fn neighbor_diff(&self, w: usize, coord: u32) -> u64 {
        let word = self.words[w];
        if coord < 6 {
            word ^ swap_in_word(word, coord)
        } else {
            word ^ self.words[w ^ (1usize << (coord - 6))]
        }
    }

    /// The table of `B -> f(B xor x)`.
    pub(crate) fn xor_translate(&self, x: u64) -> Self {
        let high = (x >> 6) as usize;
        let low = x & 63;
        let words = (0..self.words.len())
            .map(|w| {
                let mut word = self.words[w ^ high];
                for i in 0..6u32 {
                    if (low >> i) & 1 == 1 {
                        word = swap_in_word(word, i);
                    }
                }
                word
            })
            .collect();
        Self {
            arity: self.arity,
            words,
        }
    }

    /// Upward closure: bit `x` is set iff some `y` with `y ⊆ x` is set.
    pub(crate) fn upward_closure(&self) -> Self {
        let mut words = self.words.clone();
        for i in 0..self.arity {
            if i < 6 {
                let shift = 1u32 << i;
                for word in &mut words {
                    *word |= (*word & LOW[i as usize]) << shift;
                }
            } else {
                let stride = 1usize << (i - 6);
                for w in 0..words.len() {
                    if w & stride != 0 {
                        words[w] |= words[w ^ stride];
                    }
                }
            }
        }
        Self {
            arity: self.arity,
            words,
        }
    }

    /// Inclusion-minimal ones: bit `x` set iff `x` is set and no proper subset is.
    pub(crate) fn minimal_ones(&self) -> Self {
        let reach = self.upward_closure();
        // below[x] = OR over i in x of reach[x - e_i]
        let mut below = vec![0u64; self.words.len()];
        for i in 0..self.arity {
            if i < 6 {
                let shift = 1u32 << i;
                for (b, r) in below.iter_mut().zip(&reach.words) {
                    *b |= (r & LOW[i as usize]) << shift;
                }
            } else {
                let stride = 1usize << (i - 6);
                for (w, b) in below.iter_mut().enumerate() {
                    if w & stride != 0 {
                        *b |= reach.words[w ^ stride];
                    }
                }
            }
        }
        Self {
            arity: self.arity,
            words: self
                .words
                .iter()
                .zip(&below)
                .map(|(t, b)| t & !b)
                .collect(),
        }
    }

    /// Mask of in-word points `x` with coordinate `coord` clear where `f(x) = 1`
    /// but `f(x + e_coord) = 0`.
    pub(crate) fn monotonicity_violations(&self, w: usize, coord: u32) -> u64 {
        let word = self.words[w];
        if coord < 6 {
            let shift = 1u32 << coord;
            let up = (word >> shift) & LOW[coord as usize];
            word & LOW[coord as usize] & !up & valid_mask(self.arity)
        } else {
            let stride = 1usize << (coord - 6);
            if w & stride != 0 {
                0
            } else {
                word & !self.words[w | stride]
            }
        }
    }
}

pub(crate) fn word_count(arity: u32) -> usize {
    if arity <= 6 {
        1
    } else {
        1usize << (arity - 6)
    }
}

pub(crate) fn valid_mask(arity: u32) -> u64 {
    if arity >= 6 {
        u64::MAX
    } else {
        (1u64 << (1u32 << arity)) - 1
    }
}

/// Iterates the set bit positions of a word, lowest first.
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = u32;

    #[inline]
    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_closure(t: &TruthTable) -> Vec<bool> {
        (0..t.len())
            .map(|x| {
                let mut sub = x;
                loop {
                    if t.get(sub) {
                        return true;
                    }
                    if sub == 0 {
                        return false;
                    }
                    sub = (sub - 1) & x;
                }
            })
            .collect()
    }

    fn pseudo_table(arity: u32, seed: u64) -> TruthTable {
        let mut state = seed | 1;
        TruthTable::from_fn(arity, |_| {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state.is_multiple_of(7)
        })
        .unwrap()
    }

    #[test]
    fn closure_matches_subset_scan() {
        for arity in [0, 1, 3, 5, 6, 7, 9] {
            let t = pseudo_table(arity, 0x9e37 + u64::from(arity));
            let c = t.upward_closure();
            let naive = naive_closure(&t);
            for x in 0..t.len() {
                assert_eq!(c.get(x), naive[x as usize], "arity {arity} x {x}");
            }
        }
    }

    #[test]
    fn minimal_ones_have_no_set_subsets() {
        for arity in [2, 4, 6, 8] {
            let t = pseudo_table(arity, 77 + u64::from(arity));
            let min = t.minimal_ones();
            for x in 0..t.len() {
                let mut proper_set = false;
                let mut sub = x;
                while sub != 0 {
                    sub = (sub - 1) & x;
                    if t.get(sub) {
                        proper_set = true;
                        break;
                    }
                }
                assert_eq!(min.get(x), t.get(x) && !proper_set);
            }
        }
    }

    #[test]
    fn xor_translate_reindexes() {
        for arity in [3, 6, 8] {
            let t = pseudo_table(arity, 5);
            for x in [0u64, 1, 5, (1 << arity) - 1] {
                let moved = t.xor_translate(x);
                for b in 0..t.len() {
                    assert_eq!(moved.get(b), t.get(b ^ x));
                }
            }
        }
    }

    #[test]
    fn neighbor_diff_matches_direct() {
        for arity in [2, 6, 8] {
            let t = pseudo_table(arity, 11);
            for coord in 0..arity {
                for x in 0..t.len() {
                    let d = t.neighbor_diff((x >> 6) as usize, coord);
                    let direct = t.get(x) != t.get(x ^ (1 << coord));
                    assert_eq!((d >> (x & 63)) & 1 == 1, direct);
                }
            }
        }
    }

    #[test]
    fn small_tables_stay_masked() {
        let t = TruthTable::from_fn(2, |_| true).unwrap();
        assert_eq!(t.words(), &[0b1111]);
        assert_eq!(t.complement().words(), &[0]);
        assert!(TruthTable::zeros(29).is_err());
    }
}
