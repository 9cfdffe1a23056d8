use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A natural number or `∞`, ordered with `∞` above every natural.
///
/// There is no arithmetic on this type; [`Extended::finite`] is the only way
/// to get a number out, and it fails on `∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extended {
    Finite(u32),
    Infinite,
}

impl Extended {
    pub fn finite(self) -> Result<u32> {
        match self {
            Extended::Finite(v) => Ok(v),
            Extended::Infinite => Err(Error::InfiniteArithmetic),
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Extended::Infinite
    }

    pub fn is_finite_and(self, pred: impl FnOnce(u32) -> bool) -> bool {
        matches!(self, Extended::Finite(v) if pred(v))
    }
}

impl From<u32> for Extended {
    fn from(v: u32) -> Self {
        Extended::Finite(v)
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(v) => write!(f, "{v}"),
            Extended::Infinite => f.write_str("inf"),
        }
    }
}

/// Serialized as a JSON number, or the string `"inf"`.
impl Serialize for Extended {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Extended::Finite(v) => s.serialize_u32(*v),
            Extended::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Extended {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u32),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(v) => Ok(Extended::Finite(v)),
            Raw::Text(t) if t == "inf" => Ok(Extended::Infinite),
            Raw::Text(t) => Err(serde::de::Error::custom(format!("expected number or \"inf\", got {t:?}"))),
        }
    }
}
