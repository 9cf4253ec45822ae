//! Persistent binary storage for computed character columns.
//!
//! A cache file is a concatenation of column batches.  Each batch:
//!
//! ```text
//! magic "SNCB" | version: u32 | n: u64 | gamma: u32 count + u64 parts
//! | entry count: u64 | entries
//! ```
//!
//! with one entry per `λ ⊢ n` in reverse-lexicographic (descending) order:
//! `u32 count + u64 parts` for `λ`, then the value as a length-prefixed
//! little-endian two's-complement integer.  All integers are little-endian.
//!
//! The loader is strict: version mismatch, bad magic, unsorted entries or
//! any truncation is an error.  Callers treat every read failure as a cache
//! miss and recompute; a version bump therefore invalidates old files
//! silently rather than breaking them loudly.

use crate::partition::Partition;
use num_bigint::BigInt;
use std::io::{self, Read, Write};

pub const MAGIC: [u8; 4] = *b"SNCB";
pub const VERSION: u32 = 1;

/// Sanity cap on a single serialized integer (far above any desk-scale
/// character value); guards allocation against corrupt length fields.
const MAX_VALUE_BYTES: u32 = 1 << 20;

/// One stored table column: every `χ^λ_γ` for a fixed `γ ⊢ n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnBatch {
    pub n: u64,
    pub gamma: Partition,
    /// `(λ, χ^λ_γ)`, with `λ` in reverse-lexicographic (descending) order.
    pub entries: Vec<(Partition, BigInt)>,
}

pub fn write_batch<W: Write>(w: &mut W, batch: &ColumnBatch) -> io::Result<()> {
    w.write_all(&MAGIC)?;
    w.write_all(&VERSION.to_le_bytes())?;
    w.write_all(&batch.n.to_le_bytes())?;
    write_partition(w, &batch.gamma)?;
    w.write_all(&(batch.entries.len() as u64).to_le_bytes())?;
    for (lambda, value) in &batch.entries {
        write_partition(w, lambda)?;
        let bytes = value.to_signed_bytes_le();
        w.write_all(&(bytes.len() as u32).to_le_bytes())?;
        w.write_all(&bytes)?;
    }
    Ok(())
}

/// Reads the next batch, or `Ok(None)` at a clean end of stream.
pub fn read_batch<R: Read>(r: &mut R) -> io::Result<Option<ColumnBatch>> {
    let mut magic = [0u8; 4];
    match read_exact_or_eof(r, &mut magic)? {
        ReadOutcome::Eof => return Ok(None),
        ReadOutcome::Full => {}
    }
    if magic != MAGIC {
        return Err(bad("wrong magic bytes"));
    }
    let version = read_u32(r)?;
    if version != VERSION {
        return Err(bad(&format!("unsupported cache version {}", version)));
    }
    let n = read_u64(r)?;
    let gamma = read_partition(r)?;
    if gamma.n() != n {
        return Err(bad("gamma does not sum to n"));
    }
    let count = read_u64(r)?;
    let mut entries = Vec::new();
    for _ in 0..count {
        let lambda = read_partition(r)?;
        if lambda.n() != n {
            return Err(bad("lambda does not sum to n"));
        }
        if let Some((prev, _)) = entries.last() {
            if prev <= &lambda {
                return Err(bad("entries out of order"));
            }
        }
        let len = read_u32(r)?;
        if len > MAX_VALUE_BYTES {
            return Err(bad("value length out of range"));
        }
        let mut bytes = vec![0u8; len as usize];
        r.read_exact(&mut bytes)?;
        entries.push((lambda, BigInt::from_signed_bytes_le(&bytes)));
    }
    Ok(Some(ColumnBatch { n, gamma, entries }))
}

/// Reads batches until the stream ends.
pub fn read_all<R: Read>(r: &mut R) -> io::Result<Vec<ColumnBatch>> {
    let mut out = Vec::new();
    while let Some(batch) = read_batch(r)? {
        out.push(batch);
    }
    Ok(out)
}

fn write_partition<W: Write>(w: &mut W, p: &Partition) -> io::Result<()> {
    w.write_all(&(p.len() as u32).to_le_bytes())?;
    for &part in p.parts() {
        w.write_all(&part.to_le_bytes())?;
    }
    Ok(())
}

fn read_partition<R: Read>(r: &mut R) -> io::Result<Partition> {
    let count = read_u32(r)?;
    if count > 1 << 24 {
        return Err(bad("partition length out of range"));
    }
    let mut parts = Vec::with_capacity(count as usize);
    let mut prev = u64::MAX;
    for _ in 0..count {
        let part = read_u64(r)?;
        if part == 0 || part > prev {
            return Err(bad("partition parts not weakly decreasing and positive"));
        }
        prev = part;
        parts.push(part);
    }
    Partition::new(parts).map_err(|e| bad(&e.to_string()))
}

enum ReadOutcome {
    Full,
    Eof,
}

fn read_exact_or_eof<R: Read>(r: &mut R, buf: &mut [u8]) -> io::Result<ReadOutcome> {
    let mut filled = 0;
    while filled < buf.len() {
        match r.read(&mut buf[filled..])? {
            0 if filled == 0 => return Ok(ReadOutcome::Eof),
            0 => return Err(bad("truncated batch header")),
            k => filled += k,
        }
    }
    Ok(ReadOutcome::Full)
}

fn read_u32<R: Read>(r: &mut R) -> io::Result<u32> {
    let mut buf = [0u8; 4];
    r.read_exact(&mut buf)?;
    Ok(u32::from_le_bytes(buf))
}

fn read_u64<R: Read>(r: &mut R) -> io::Result<u64> {
    let mut buf = [0u8; 8];
    r.read_exact(&mut buf)?;
    Ok(u64::from_le_bytes(buf))
}

fn bad(msg: &str) -> io::Error {
    io::Error::new(io::ErrorKind::InvalidData, format!("cache: {}", msg))
}
