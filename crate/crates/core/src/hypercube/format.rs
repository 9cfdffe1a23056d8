//! Binary truth-table files.
//!
//! Layout: magic `GPTT`, little-endian `u32` vertex count `n`, little-endian
//! `u32` arity `m`, then `ceil(2^m / 8)` bytes where bit `j` of byte `k` is the
//! value at point `8k + j`. A vertex count of 0 marks a function that is not
//! over edge slots.

use std::io::{Read, Write};

use super::function::PropertyFunction;
use super::table::{TruthTable, MAX_TABLE_ARITY};
use crate::error::{Error, Result};

pub const MAGIC: &[u8; 4] = b"GPTT";

pub fn write_truth_table(f: &PropertyFunction, mut out: impl Write) -> Result<()> {
    let table = f.table().ok_or(Error::RequiresTable)?;
    out.write_all(MAGIC)?;
    out.write_all(&(f.vertices().unwrap_or(0) as u32).to_le_bytes())?;
    out.write_all(&table.arity().to_le_bytes())?;
    let bytes = payload_len(table.arity());
    let mut written = 0;
    for word in table.words() {
        let chunk = word.to_le_bytes();
        let take = (bytes - written).min(8);
        out.write_all(&chunk[..take])?;
        written += take;
    }
    Ok(())
}

pub fn read_truth_table(mut input: impl Read) -> Result<PropertyFunction> {
    let mut header = [0u8; 12];
    input
        .read_exact(&mut header)
        .map_err(|_| Error::Malformed("truncated header".into()))?;
    if &header[..4] != MAGIC {
        return Err(Error::Malformed("bad magic, expected GPTT".into()));
    }
    let n = u32::from_le_bytes(header[4..8].try_into().expect("4 bytes")) as usize;
    let m = u32::from_le_bytes(header[8..12].try_into().expect("4 bytes"));
    if m > MAX_TABLE_ARITY {
        return Err(Error::Malformed(format!("arity {m} exceeds {MAX_TABLE_ARITY}")));
    }
    if n != 0 && n * (n - 1) / 2 != m as usize {
        return Err(Error::Malformed(format!("arity {m} does not match n = {n}")));
    }
    let len = payload_len(m);
    let mut payload = vec![0u8; len];
    input
        .read_exact(&mut payload)
        .map_err(|_| Error::Malformed(format!("expected {len} payload bytes")))?;
    let mut trailing = [0u8; 1];
    if input.read(&mut trailing)? != 0 {
        return Err(Error::Malformed("trailing bytes after payload".into()));
    }
    let words = payload
        .chunks(8)
        .map(|chunk| {
            let mut buf = [0u8; 8];
            buf[..chunk.len()].copy_from_slice(chunk);
            u64::from_le_bytes(buf)
        })
        .collect();
    let f = PropertyFunction::from_table(TruthTable::from_words(m, words)?);
    if n == 0 {
        Ok(f)
    } else {
        f.with_vertices(n)
    }
}

fn payload_len(arity: u32) -> usize {
    (1u64 << arity).div_ceil(8) as usize
}
