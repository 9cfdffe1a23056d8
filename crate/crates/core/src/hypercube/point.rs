use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest arity a point can carry; coordinates live in one `u64`.
pub const MAX_ARITY: u32 = 64;

/// A point of the hypercube `{0,1}^m`. Coordinate `i` is bit `i` of `bits`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BooleanPoint {
    arity: u32,
    bits: u64,
}

pub(crate) fn arity_mask(arity: u32) -> u64 {
    if arity >= 64 {
        u64::MAX
    } else {
        (1u64 << arity) - 1
    }
}

impl BooleanPoint {
    pub fn new(arity: u32, bits: u64) -> Result<Self> {
        if arity > MAX_ARITY {
            return Err(Error::ArityTooLarge {
                arity,
                limit: MAX_ARITY,
            });
        }
        if bits & !arity_mask(arity) != 0 {
            return Err(Error::BitsOutOfRange { arity, bits });
        }
        Ok(Self { arity, bits })
    }

    pub fn zero(arity: u32) -> Self {
        assert!(arity <= MAX_ARITY);
        Self { arity, bits: 0 }
    }

    pub fn ones(arity: u32) -> Self {
        assert!(arity <= MAX_ARITY);
        Self {
            arity,
            bits: arity_mask(arity),
        }
    }

    pub fn arity(&self) -> u32 {
        self.arity
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn get(&self, i: u32) -> bool {
        i < self.arity && (self.bits >> i) & 1 == 1
    }

    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    /// The neighbor across coordinate `i`.
    pub fn flip(self, i: u32) -> Result<Self> {
        if i >= self.arity {
            return Err(Error::CoordinateOutOfRange {
                index: i,
                arity: self.arity,
            });
        }
        Ok(Self {
            arity: self.arity,
            bits: self.bits ^ (1u64 << i),
        })
    }

    /// Flips every coordinate in `block` at once.
    pub fn flip_block(self, block: u64) -> Result<Self> {
        if block & !arity_mask(self.arity) != 0 {
            return Err(Error::BitsOutOfRange {
                arity: self.arity,
                bits: block,
            });
        }
        Ok(Self {
            arity: self.arity,
            bits: self.bits ^ block,
        })
    }
}

/// Most significant coordinate first, so `flip(000, 1)` prints as `010`.
impl fmt::Display for BooleanPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in (0..self.arity).rev() {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BooleanPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let arity = s.len() as u32;
        if arity > MAX_ARITY {
            return Err(Error::ArityTooLarge {
                arity,
                limit: MAX_ARITY,
            });
        }
        let mut bits = 0u64;
        for (pos, c) in s.chars().rev().enumerate() {
            match c {
                '0' => {}
                '1' => bits |= 1u64 << pos,
                other => return Err(Error::Malformed(format!("unexpected character {other:?} in point"))),
            }
        }
        Ok(Self { arity, bits })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BooleanPoint {
        s.parse().unwrap()
    }

    #[test]
    fn flip_examples() {
        assert_eq!(p("000").flip(1).unwrap(), p("010"));
        assert_eq!(p("111111").flip(0).unwrap(), p("111110"));
        assert_eq!(p("000").flip(1).unwrap().to_string(), "010");
    }

    #[test]
    fn flip_out_of_range() {
        assert!(matches!(
            p("000").flip(3),
            Err(Error::CoordinateOutOfRange { index: 3, arity: 3 })
        ));
    }

    #[test]
    fn rejects_high_bits() {
        assert!(BooleanPoint::new(3, 0b1000).is_err());
        assert!(BooleanPoint::new(64, u64::MAX).is_ok());
        assert!(BooleanPoint::new(65, 0).is_err());
    }

    proptest::proptest! {
        #[test]
        fn flip_is_involution(arity in 1u32..=64, raw in proptest::prelude::any::<u64>(), i in 0u32..64) {
            let x = BooleanPoint::new(arity, raw & arity_mask(arity)).unwrap();
            let i = i % arity;
            proptest::prop_assert_eq!(x.flip(i).unwrap().flip(i).unwrap(), x);
        }
    }
}
