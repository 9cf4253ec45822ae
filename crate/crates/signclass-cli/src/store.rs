//! Best-effort persistent column store for the `table` subcommand.
//!
//! One file per (group, n) holds the integer `S_n` character columns the
//! table is built from; for `an` only the even cycle types are kept, and
//! the surd cells are re-derived from the closed formula on load, so the
//! stored integers determine the whole table.  Loading is strict: any
//! read error, version change, or inconsistency falls back to a fresh
//! computation (and a rewrite), so the cache can change timing but never
//! a printed byte.

use num_bigint::BigInt;
use num_traits::Zero;
use signclass::cache::{read_all, write_batch, ColumnBatch};
use signclass::{
    an_character_table_limited, an_classes, an_irreducibles, epsilon, partitions_of,
    sn_character_table_limited, AnError, AnIrreducible, AnTable, CharError, ClassLabel, MemoStats,
    Partition, QuadraticValue, SnTable,
};
use std::collections::HashMap;
use std::env;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

/// Cache directory: `SIGNCLASS_CACHE_DIR`, else the platform cache
/// location; `None` disables persistence.
pub fn cache_dir() -> Option<PathBuf> {
    if let Some(dir) = env::var_os("SIGNCLASS_CACHE_DIR") {
        if !dir.is_empty() {
            return Some(PathBuf::from(dir));
        }
    }
    if let Some(dir) = env::var_os("XDG_CACHE_HOME") {
        if !dir.is_empty() {
            return Some(PathBuf::from(dir).join("signclass"));
        }
    }
    env::var_os("HOME").map(|home| PathBuf::from(home).join(".cache").join("signclass"))
}

fn column_file(dir: &Path, group: &str, n: u64) -> PathBuf {
    dir.join(format!("{group}-{n}.cols"))
}

fn load_batches(
    dir: &Path,
    group: &str,
    n: u64,
    expected_gammas: &[Partition],
) -> Option<Vec<ColumnBatch>> {
    let bytes = fs::read(column_file(dir, group, n)).ok()?;
    let batches = read_all(&mut bytes.as_slice()).ok()?;
    if batches.len() != expected_gammas.len() {
        return None;
    }
    let lambdas: Vec<Partition> = partitions_of(n).collect();
    for (batch, gamma) in batches.iter().zip(expected_gammas) {
        if batch.n != n || &batch.gamma != gamma || batch.entries.len() != lambdas.len() {
            return None;
        }
        if !batch.entries.iter().zip(&lambdas).all(|((l, _), expected)| l == expected) {
            return None;
        }
    }
    Some(batches)
}

fn store_batches(dir: &Path, group: &str, n: u64, batches: &[ColumnBatch]) {
    // the cache is an optimization; a failed write must not fail the command
    let _ = try_store(dir, group, n, batches);
}

fn try_store(dir: &Path, group: &str, n: u64, batches: &[ColumnBatch]) -> io::Result<()> {
    fs::create_dir_all(dir)?;
    let mut buf = Vec::new();
    for batch in batches {
        write_batch(&mut buf, batch)?;
    }
    let target = column_file(dir, group, n);
    let tmp = target.with_extension(format!("tmp{}", std::process::id()));
    fs::write(&tmp, &buf)?;
    fs::rename(&tmp, &target)
}

/// The `S_n` table for `n`, from the store when a valid file exists,
/// recomputed (and stored back) otherwise.
pub fn sn_table_cached(dir: Option<&Path>, n: u64, limit: u64) -> Result<SnTable, CharError> {
    if let Some(dir) = dir {
        let mut cols: Vec<Partition> = partitions_of(n).collect();
        cols.reverse();
        if let Some(batches) = load_batches(dir, "sn", n, &cols) {
            return Ok(assemble_sn(n, batches));
        }
    }
    let table = sn_character_table_limited(n, limit)?;
    if let Some(dir) = dir {
        store_batches(dir, "sn", n, &sn_batches(&table));
    }
    Ok(table)
}

fn assemble_sn(n: u64, batches: Vec<ColumnBatch>) -> SnTable {
    let rows: Vec<Partition> = partitions_of(n).collect();
    let cols: Vec<Partition> = batches.iter().map(|b| b.gamma.clone()).collect();
    let values = (0..rows.len())
        .map(|i| batches.iter().map(|b| b.entries[i].1.clone()).collect())
        .collect();
    SnTable { n, rows, cols, values, stats: MemoStats::default() }
}

fn sn_batches(table: &SnTable) -> Vec<ColumnBatch> {
    table
        .cols
        .iter()
        .enumerate()
        .map(|(j, gamma)| ColumnBatch {
            n: table.n,
            gamma: gamma.clone(),
            entries: table
                .rows
                .iter()
                .enumerate()
                .map(|(i, lambda)| (lambda.clone(), table.values[i][j].clone()))
                .collect(),
        })
        .collect()
}

/// The `A_n` table for `n`, from the store when a valid file exists,
/// recomputed (and stored back) otherwise.
pub fn an_table_cached(dir: Option<&Path>, n: u64, limit: u64) -> Result<AnTable, AnError> {
    if let Some(dir) = dir {
        let mut gammas: Vec<Partition> = partitions_of(n).filter(Partition::is_even).collect();
        gammas.reverse();
        if let Some(batches) = load_batches(dir, "an", n, &gammas) {
            if let Some(table) = assemble_an(n, &batches) {
                return Ok(table);
            }
        }
    }
    let table = an_character_table_limited(n, limit)?;
    if let Some(dir) = dir {
        store_batches(dir, "an", n, &an_batches(&table));
    }
    Ok(table)
}

fn assemble_an(n: u64, batches: &[ColumnBatch]) -> Option<AnTable> {
    let rows = an_irreducibles(n).ok()?;
    let cols = an_classes(n).ok()?;
    let index: HashMap<&Partition, usize> = batches
        .first()?
        .entries
        .iter()
        .enumerate()
        .map(|(i, (lambda, _))| (lambda, i))
        .collect();
    // map each label column to its cycle-type batch (split pairs share one)
    let mut batch_of = Vec::with_capacity(cols.len());
    let mut b = 0usize;
    for cls in &cols {
        while b < batches.len() && &batches[b].gamma != cls.gamma() {
            b += 1;
        }
        if b == batches.len() {
            return None;
        }
        batch_of.push(b);
    }
    let mut values: Vec<Vec<QuadraticValue>> = vec![Vec::with_capacity(cols.len()); rows.len()];
    for (i, chi) in rows.iter().enumerate() {
        for (j, cls) in cols.iter().enumerate() {
            let whole = |lambda: &Partition| -> Option<&BigInt> {
                Some(&batches[batch_of[j]].entries[*index.get(lambda)?].1)
            };
            let value = match chi {
                AnIrreducible::Pair { repr, .. } => {
                    QuadraticValue::from_integer(whole(repr)?.clone())
                }
                AnIrreducible::Split { lambda, label } => {
                    if cls.gamma().parts() == lambda.diagonal_hooks().as_slice() {
                        split_diagonal_value(lambda, *label, cls.label()?)?
                    } else {
                        let v = whole(lambda)?;
                        if !(v % 2i32).is_zero() {
                            // an odd value where halving is due means the
                            // file does not hold real character columns
                            return None;
                        }
                        QuadraticValue::from_integer(v / 2)
                    }
                }
            };
            values[i].push(value);
        }
    }
    Some(AnTable { n, rows, cols, values, stats: MemoStats::default() })
}

fn split_diagonal_value(
    lambda: &Partition,
    label: ClassLabel,
    class_label: ClassLabel,
) -> Option<QuadraticValue> {
    let eps = epsilon(lambda).ok()?;
    let mut product: i64 = 1;
    for &part in lambda.diagonal_hooks().iter() {
        product = product.checked_mul(i64::try_from(part).ok()?)?;
    }
    let radicand = i64::from(eps).checked_mul(product)?;
    let branch = if label == class_label { 1 } else { -1 };
    Some(QuadraticValue::new(BigInt::from(eps), BigInt::from(branch), radicand))
}

fn an_batches(table: &AnTable) -> Vec<ColumnBatch> {
    let lambdas: Vec<Partition> = partitions_of(table.n).collect();
    let mut pair_row: HashMap<&Partition, usize> = HashMap::new();
    let mut split_rows: HashMap<&Partition, [usize; 2]> = HashMap::new();
    for (i, chi) in table.rows.iter().enumerate() {
        match chi {
            AnIrreducible::Pair { repr, partner } => {
                pair_row.insert(repr, i);
                pair_row.insert(partner, i);
            }
            AnIrreducible::Split { lambda, label } => {
                let slot = split_rows.entry(lambda).or_insert([usize::MAX; 2]);
                slot[usize::from(*label == ClassLabel::Minus)] = i;
            }
        }
    }
    let mut out: Vec<ColumnBatch> = Vec::new();
    for (j, cls) in table.cols.iter().enumerate() {
        if out.last().is_some_and(|b| &b.gamma == cls.gamma()) {
            continue; // second label column of a split pair
        }
        let entries = lambdas
            .iter()
            .map(|lambda| {
                // recover chi^lambda_gamma: a pair row carries it directly
                // (conjugates agree on even classes); a split pair sums to it
                let v = if let Some(&i) = pair_row.get(lambda) {
                    table.values[i][j].as_integer().expect("pair values are rational")
                } else {
                    let [plus, minus] = split_rows[lambda];
                    table.values[plus][j]
                        .checked_add(&table.values[minus][j])
                        .expect("conjugate surds share one radicand")
                        .as_integer()
                        .expect("split values sum to the S_n value")
                };
                (lambda.clone(), v)
            })
            .collect();
        out.push(ColumnBatch { n: table.n, gamma: cls.gamma().clone(), entries });
    }
    out
}
