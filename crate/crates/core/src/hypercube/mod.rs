//! Boolean functions on `{0,1}^m` and their sensitivity measures.

mod block;
mod format;
mod function;
mod point;
mod sensitivity;
mod table;

pub use block::{
    block_sensitivity_at, max_block_sensitivity, max_block_sensitivity_over,
    minimal_sensitive_blocks, BlockSensitivityResult, MAX_GLOBAL_BLOCK_ARITY,
    MAX_POINT_BLOCK_ARITY,
};
pub use format::{read_truth_table, write_truth_table, MAGIC};
pub use function::{PropertyFunction, DEFAULT_MEMO_CAPACITY};
pub use point::{BooleanPoint, MAX_ARITY};
pub use sensitivity::{
    max_sensitivity, max_sensitivity_over, sensitive_coordinates, sensitivity_at,
    sensitivity_profile, SensitivityResult,
};
pub use table::{TruthTable, MAX_TABLE_ARITY};

pub(crate) use table::BitIter;

/// `x ↦ f(x)` flipped pointwise. Sensitivity measures are unchanged.
pub fn complement(f: &PropertyFunction) -> PropertyFunction {
    f.complement()
}

pub fn evaluate(f: &PropertyFunction, x: &BooleanPoint) -> crate::Result<bool> {
    f.evaluate(x)
}

pub fn flip(x: BooleanPoint, i: u32) -> crate::Result<BooleanPoint> {
    x.flip(i)
}
