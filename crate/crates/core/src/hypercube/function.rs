use std::fmt;
use std::num::NonZeroUsize;
use std::sync::{Arc, Mutex};

use lru::LruCache;

use super::point::BooleanPoint;
use super::table::{TruthTable, MAX_TABLE_ARITY};
use crate::error::{Error, Result};

/// Default number of memoized oracle answers.
pub const DEFAULT_MEMO_CAPACITY: usize = 1 << 22;

type Evaluator = dyn Fn(u64) -> bool + Send + Sync;

#[derive(Clone)]
struct Oracle {
    eval: Arc<Evaluator>,
    memo: Option<Arc<Mutex<LruCache<u64, bool>>>>,
}

#[derive(Clone)]
enum Backing {
    Table(TruthTable),
    Oracle(Oracle),
}

/// A boolean function on `{0,1}^m`, optionally tagged with the vertex count
/// `n` when `m = n(n-1)/2` and the coordinates are edge slots.
#[derive(Clone)]
pub struct PropertyFunction {
    arity: u32,
    vertices: Option<usize>,
    backing: Backing,
}

impl fmt::Debug for PropertyFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let backing = match &self.backing {
            Backing::Table(_) => "table",
            Backing::Oracle(o) if o.memo.is_some() => "oracle+memo",
            Backing::Oracle(_) => "oracle",
        };
        f.debug_struct("PropertyFunction")
            .field("arity", &self.arity)
            .field("vertices", &self.vertices)
            .field("backing", &backing)
            .finish()
    }
}

impl PropertyFunction {
    pub fn from_table(table: TruthTable) -> Self {
        Self {
            arity: table.arity(),
            vertices: None,
            backing: Backing::Table(table),
        }
    }

    /// Tabulates `f` over all `2^arity` points.
    pub fn tabulate(arity: u32, f: impl FnMut(u64) -> bool) -> Result<Self> {
        Ok(Self::from_table(TruthTable::from_fn(arity, f)?))
    }

    /// Wraps a pure evaluation rule without tabulating it.
    pub fn oracle(arity: u32, f: impl Fn(u64) -> bool + Send + Sync + 'static) -> Result<Self> {
        if arity > super::point::MAX_ARITY {
            return Err(Error::ArityTooLarge {
                arity,
                limit: super::point::MAX_ARITY,
            });
        }
        Ok(Self {
            arity,
            vertices: None,
            backing: Backing::Oracle(Oracle {
                eval: Arc::new(f),
                memo: None,
            }),
        })
    }

    /// Attaches a bounded least-recently-used memo to an oracle. No effect on tables.
    pub fn with_memo(mut self, capacity: usize) -> Self {
        if let Backing::Oracle(oracle) = &mut self.backing {
            let cap = NonZeroUsize::new(capacity.max(1)).expect("nonzero");
            oracle.memo = Some(Arc::new(Mutex::new(LruCache::new(cap))));
        }
        self
    }

    pub fn with_vertices(mut self, n: usize) -> Result<Self> {
        let expected = (n * n.saturating_sub(1) / 2) as u32;
        if expected != self.arity {
            return Err(Error::ArityMismatch {
                expected,
                actual: self.arity,
            });
        }
        self.vertices = Some(n);
        Ok(self)
    }

    pub fn arity(&self) -> u32 {
        self.arity
    }

    pub fn vertices(&self) -> Option<usize> {
        self.vertices
    }

    pub fn table(&self) -> Option<&TruthTable> {
        match &self.backing {
            Backing::Table(t) => Some(t),
            Backing::Oracle(_) => None,
        }
    }

    pub fn is_table(&self) -> bool {
        self.table().is_some()
    }

    pub fn has_memo(&self) -> bool {
        matches!(&self.backing, Backing::Oracle(o) if o.memo.is_some())
    }

    pub fn memo_len(&self) -> usize {
        match &self.backing {
            Backing::Oracle(Oracle { memo: Some(m), .. }) => m.lock().expect("memo poisoned").len(),
            _ => 0,
        }
    }

    /// Value at the point with raw coordinates `bits`; the caller guarantees
    /// `bits < 2^arity`.
    #[inline]
    pub fn value(&self, bits: u64) -> bool {
        match &self.backing {
            Backing::Table(t) => t.get(bits),
            Backing::Oracle(oracle) => match &oracle.memo {
                None => (oracle.eval)(bits),
                Some(memo) => {
                    if let Some(&v) = memo.lock().expect("memo poisoned").get(&bits) {
                        return v;
                    }
                    let v = (oracle.eval)(bits);
                    memo.lock().expect("memo poisoned").put(bits, v);
                    v
                }
            },
        }
    }

    pub fn evaluate(&self, x: &BooleanPoint) -> Result<bool> {
        self.check_arity(x)?;
        Ok(self.value(x.bits()))
    }

    pub(crate) fn check_arity(&self, x: &BooleanPoint) -> Result<()> {
        if x.arity() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                actual: x.arity(),
            });
        }
        Ok(())
    }

    /// Pointwise negation; sensitivity and block sensitivity are unchanged.
    pub fn complement(&self) -> Self {
        let backing = match &self.backing {
            Backing::Table(t) => Backing::Table(t.complement()),
            Backing::Oracle(o) => {
                let inner = Arc::clone(&o.eval);
                Backing::Oracle(Oracle {
                    eval: Arc::new(move |x| !inner(x)),
                    memo: o.memo.as_ref().map(|m| {
                        let cap = m.lock().expect("memo poisoned").cap();
                        Arc::new(Mutex::new(LruCache::new(cap)))
                    }),
                })
            }
        };
        Self {
            arity: self.arity,
            vertices: self.vertices,
            backing,
        }
    }

    /// True iff the function takes both values.
    pub fn is_nontrivial(&self) -> Result<bool> {
        let t = self.table().ok_or(Error::RequiresTable)?;
        let ones = t.count_ones();
        Ok(ones != 0 && ones != t.len())
    }

    /// Tabulates an oracle-backed function (arity at most 28).
    pub fn to_table(&self) -> Result<Self> {
        if self.is_table() {
            return Ok(self.clone());
        }
        if self.arity > MAX_TABLE_ARITY {
            return Err(Error::ArityTooLarge {
                arity: self.arity,
                limit: MAX_TABLE_ARITY,
            });
        }
        let mut out = Self::tabulate(self.arity, |x| self.value(x))?;
        out.vertices = self.vertices;
        Ok(out)
    }
}
