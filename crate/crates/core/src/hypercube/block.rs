//! Exact block sensitivity.
//!
//! Every sensitive block contains an inclusion-minimal sensitive block, and
//! swapping a block for a minimal one keeps a family disjoint. So `bs(f,x)` is
//! the size of a largest disjoint packing of minimal sensitive blocks, found by
//! a memoized search over the set of still-available coordinates.

use super::function::PropertyFunction;
use super::point::BooleanPoint;
use super::table::TruthTable;
use crate::error::{Error, Result};

/// Largest arity for a single-point block sensitivity query.
pub const MAX_POINT_BLOCK_ARITY: u32 = 20;
/// Largest arity for the global maximum over all points.
pub const MAX_GLOBAL_BLOCK_ARITY: u32 = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockSensitivityResult {
    pub value: u32,
    pub witness: BooleanPoint,
}

/// Table of `B -> [f(x ⊕ B) ≠ f(x)]`.
fn flip_indicator(f: &PropertyFunction, x: &BooleanPoint) -> Result<TruthTable> {
    let here = f.value(x.bits());
    match f.table() {
        Some(t) => {
            let moved = t.xor_translate(x.bits());
            Ok(if here { moved.complement() } else { moved })
        }
        None => TruthTable::from_fn(f.arity(), |b| f.value(x.bits() ^ b) != here),
    }
}

/// All inclusion-minimal blocks `B` with `f(x ⊕ B) ≠ f(x)`, ascending by mask.
pub fn minimal_sensitive_blocks(f: &PropertyFunction, x: &BooleanPoint) -> Result<Vec<u64>> {
    f.check_arity(x)?;
    if f.arity() > MAX_POINT_BLOCK_ARITY {
        return Err(Error::ArityTooLarge {
            arity: f.arity(),
            limit: MAX_POINT_BLOCK_ARITY,
        });
    }
    Ok(flip_indicator(f, x)?.minimal_ones().ones().collect())
}

pub fn block_sensitivity_at(f: &PropertyFunction, x: &BooleanPoint) -> Result<u32> {
    let blocks = minimal_sensitive_blocks(f, x)?;
    Ok(Packer::new(f.arity()).pack(&blocks))
}

/// Exact `bs(f)` over every point. Requires a table and arity at most 16.
pub fn max_block_sensitivity(f: &PropertyFunction) -> Result<BlockSensitivityResult> {
    if !f.is_table() {
        return Err(Error::RequiresTable);
    }
    if f.arity() > MAX_GLOBAL_BLOCK_ARITY {
        return Err(Error::ArityTooLarge {
            arity: f.arity(),
            limit: MAX_GLOBAL_BLOCK_ARITY,
        });
    }
    let points: Vec<BooleanPoint> = (0..1u64 << f.arity())
        .map(|x| BooleanPoint::new(f.arity(), x))
        .collect::<Result<_>>()?;
    max_block_sensitivity_over(f, &points)
}

/// Maximum of `bs(f,x)` over the given points; the first maximizer wins ties.
/// Useful when a symmetry group makes one representative per orbit enough.
pub fn max_block_sensitivity_over(
    f: &PropertyFunction,
    points: &[BooleanPoint],
) -> Result<BlockSensitivityResult> {
    let first = points.first().ok_or(Error::CandidatesRequired)?;
    for x in points {
        f.check_arity(x)?;
    }
    if f.arity() > MAX_POINT_BLOCK_ARITY {
        return Err(Error::ArityTooLarge {
            arity: f.arity(),
            limit: MAX_POINT_BLOCK_ARITY,
        });
    }
    let values = block_values(f, points)?;
    let mut best = BlockSensitivityResult {
        value: values[0],
        witness: *first,
    };
    for (x, &v) in points.iter().zip(&values).skip(1) {
        if v > best.value {
            best = BlockSensitivityResult { value: v, witness: *x };
        }
    }
    Ok(best)
}

#[cfg(feature = "parallel")]
fn block_values(f: &PropertyFunction, points: &[BooleanPoint]) -> Result<Vec<u32>> {
    use rayon::prelude::*;
    points
        .par_iter()
        .map_init(
            || Packer::new(f.arity()),
            |packer, x| {
                let blocks = flip_indicator(f, x)?.minimal_ones().ones().collect::<Vec<_>>();
                Ok(packer.pack(&blocks))
            },
        )
        .collect()
}

#[cfg(not(feature = "parallel"))]
fn block_values(f: &PropertyFunction, points: &[BooleanPoint]) -> Result<Vec<u32>> {
    let mut packer = Packer::new(f.arity());
    points
        .iter()
        .map(|x| {
            let blocks = flip_indicator(f, x)?.minimal_ones().ones().collect::<Vec<_>>();
            Ok(packer.pack(&blocks))
        })
        .collect()
}

/// Maximum disjoint packing of blocks, memoized on the available-coordinate mask.
struct Packer {
    memo: Vec<u8>,
    by_low: Vec<Vec<u64>>,
}

const UNKNOWN: u8 = u8::MAX;

impl Packer {
    fn new(arity: u32) -> Self {
        Self {
            memo: vec![UNKNOWN; 1usize << arity],
            by_low: vec![Vec::new(); arity.max(1) as usize],
        }
    }

    fn pack(&mut self, blocks: &[u64]) -> u32 {
        if blocks.is_empty() {
            return 0;
        }
        self.memo.fill(UNKNOWN);
        for list in &mut self.by_low {
            list.clear();
        }
        let mut support = 0u64;
        for &b in blocks {
            self.by_low[b.trailing_zeros() as usize].push(b);
            support |= b;
        }
        u32::from(self.solve(support))
    }

    fn solve(&mut self, avail: u64) -> u8 {
        if avail == 0 {
            return 0;
        }
        let cached = self.memo[avail as usize];
        if cached != UNKNOWN {
            return cached;
        }
        // the lowest available coordinate is either unused or covered by a
        // block whose lowest coordinate it is
        let low = avail.trailing_zeros() as usize;
        let mut best = self.solve(avail & (avail - 1));
        for k in 0..self.by_low[low].len() {
            let b = self.by_low[low][k];
            if b & !avail == 0 {
                best = best.max(1 + self.solve(avail & !b));
            }
        }
        self.memo[avail as usize] = best;
        best
    }
}
