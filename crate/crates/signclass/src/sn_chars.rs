//! Exact irreducible character values of `S_n`.
//!
//! The central recursion is the rim-hook (Murnaghan-Nakayama) expansion:
//! expanding on the largest remaining cycle part `q` of `γ`,
//!
//! ```text
//! χ^λ_γ = Σ over rim q-hooks R of λ of (-1)^leg(R) · χ^{λ∖R}_{(γ₂,…)}
//! ```
//!
//! with base case `χ^{()}_{()} = 1`.  [`ColumnEvaluator`] fixes one `γ` and
//! memoizes on `(λ, suffix index)`, so a whole table column shares work; the
//! key never leaves its column, which makes cross-`γ` pollution impossible.
//! All values are unbounded integers (degrees grow super-exponentially).

use crate::partition::{partitions_of, Partition};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::HashMap;
use std::fmt::Write as _;
use thiserror::Error;

/// Largest `n` for which full p(n) x p(n) tables are built by default
/// (p(22)² is about a million entries).
pub const TABLE_LIMIT: u64 = 22;

/// Errors from character evaluation and table construction.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharError {
    #[error("size mismatch: |lambda| = {lambda_n} but |gamma| = {gamma_n}")]
    SizeMismatch { lambda_n: u64, gamma_n: u64 },
    #[error("full table for n = {n} exceeds the limit {limit}")]
    TableTooLarge { n: u64, limit: u64 },
}

/// Memoization counters: `hits` found in the map, `misses` computed fresh.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct MemoStats {
    pub hits: u64,
    pub misses: u64,
}

impl MemoStats {
    pub fn absorb(&mut self, other: MemoStats) {
        self.hits += other.hits;
        self.misses += other.misses;
    }
}

/// Evaluates `χ^λ_γ` for a fixed `γ` and many `λ`, sharing a memo across
/// the whole column.  Build one evaluator per `γ`.
pub struct ColumnEvaluator {
    gamma: Partition,
    memo: Option<HashMap<(Partition, usize), BigInt>>,
    stats: MemoStats,
}

impl ColumnEvaluator {
    /// Evaluator with memoization (the default; strictly a speed matter).
    pub fn new(gamma: Partition) -> Self {
        ColumnEvaluator { gamma, memo: Some(HashMap::new()), stats: MemoStats::default() }
    }

    /// Evaluator that recomputes every node; values are identical to the
    /// memoized evaluator's, only slower.
    pub fn without_memo(gamma: Partition) -> Self {
        ColumnEvaluator { gamma, memo: None, stats: MemoStats::default() }
    }

    pub fn gamma(&self) -> &Partition {
        &self.gamma
    }

    pub fn stats(&self) -> MemoStats {
        self.stats
    }

    /// `χ^λ_γ`, exactly.  Errors when `|λ| ≠ |γ|`.
    pub fn value(&mut self, lambda: &Partition) -> Result<BigInt, CharError> {
        if lambda.n() != self.gamma.n() {
            return Err(CharError::SizeMismatch {
                lambda_n: lambda.n(),
                gamma_n: self.gamma.n(),
            });
        }
        Ok(self.eval(lambda, 0))
    }

    fn eval(&mut self, lambda: &Partition, k: usize) -> BigInt {
        if lambda.is_empty() {
            debug_assert_eq!(k, self.gamma.len());
            return BigInt::one();
        }
        let key = (lambda.clone(), k);
        if let Some(memo) = &self.memo {
            if let Some(v) = memo.get(&key) {
                self.stats.hits += 1;
                return v.clone();
            }
        }
        self.stats.misses += 1;
        let q = self.gamma.parts()[k];
        let mut acc = BigInt::zero();
        for removal in lambda.rim_hooks_of_length(q) {
            let sub = self.eval(&removal.result, k + 1);
            if removal.sign > 0 {
                acc += sub;
            } else {
                acc -= sub;
            }
        }
        if let Some(memo) = &mut self.memo {
            memo.insert(key, acc.clone());
        }
        acc
    }
}

/// One-shot `χ^λ_γ`.  For many `λ` at the same `γ`, prefer a shared
/// [`ColumnEvaluator`].
pub fn mn_value(lambda: &Partition, gamma: &Partition) -> Result<BigInt, CharError> {
    ColumnEvaluator::new(gamma.clone()).value(lambda)
}

/// Full character table of `S_n`: rows are the irreducibles `χ^λ` in
/// reverse-lexicographic order of `λ` ((n) first), columns the classes `γ`
/// in ascending order (identity `(1^n)` first).
#[derive(Debug, Clone)]
pub struct SnTable {
    pub n: u64,
    pub rows: Vec<Partition>,
    pub cols: Vec<Partition>,
    /// `values[i][j] = χ^{rows[i]}_{cols[j]}`.
    pub values: Vec<Vec<BigInt>>,
    /// Memo counters summed over all columns.
    pub stats: MemoStats,
}

impl SnTable {
    /// Looks a value up by partitions rather than indices.
    pub fn value(&self, lambda: &Partition, gamma: &Partition) -> Option<&BigInt> {
        let i = self.rows.iter().position(|r| r == lambda)?;
        let j = self.cols.iter().position(|c| c == gamma)?;
        Some(&self.values[i][j])
    }

    /// Tab-separated table: header row of class strings, then one line per
    /// irreducible (`lambda\gamma` names the corner cell).
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("lambda\\gamma");
        for c in &self.cols {
            let _ = write!(out, "\t{}", c);
        }
        out.push('\n');
        for (r, row) in self.rows.iter().zip(&self.values) {
            let _ = write!(out, "{}", r);
            for v in row {
                let _ = write!(out, "\t{}", v);
            }
            out.push('\n');
        }
        out
    }

    /// Nested JSON object; values are exact decimal strings.  Key order
    /// follows the canonical row/column order.
    pub fn to_json(&self) -> serde_json::Value {
        let mut values = serde_json::Map::new();
        for (r, row) in self.rows.iter().zip(&self.values) {
            let mut by_class = serde_json::Map::new();
            for (c, v) in self.cols.iter().zip(row) {
                by_class.insert(c.to_string(), serde_json::Value::String(v.to_string()));
            }
            values.insert(r.to_string(), serde_json::Value::Object(by_class));
        }
        serde_json::json!({
            "group": "sn",
            "n": self.n,
            "rows": self.rows.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "cols": self.cols.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "values": values,
        })
    }
}

/// Builds the full `S_n` table, refusing `n` above [`TABLE_LIMIT`].
pub fn sn_character_table(n: u64) -> Result<SnTable, CharError> {
    sn_character_table_limited(n, TABLE_LIMIT)
}

/// Builds the full `S_n` table under a caller-chosen limit.  Columns are
/// computed in parallel; the result is independent of the worker count.
pub fn sn_character_table_limited(n: u64, limit: u64) -> Result<SnTable, CharError> {
    if n > limit {
        return Err(CharError::TableTooLarge { n, limit });
    }
    let rows: Vec<Partition> = partitions_of(n).collect();
    let cols: Vec<Partition> = rows.iter().rev().cloned().collect();
    let columns: Vec<(Vec<BigInt>, MemoStats)> = cols
        .par_iter()
        .map(|gamma| {
            let mut ev = ColumnEvaluator::new(gamma.clone());
            let vals = rows
                .iter()
                .map(|lambda| ev.value(lambda).expect("row and column sizes agree"))
                .collect();
            (vals, ev.stats())
        })
        .collect();
    let mut stats = MemoStats::default();
    for (_, s) in &columns {
        stats.absorb(*s);
    }
    let values = (0..rows.len())
        .map(|i| columns.iter().map(|(col, _)| col[i].clone()).collect())
        .collect();
    Ok(SnTable { n, rows, cols, values, stats })
}

/// Checks the conjugate-twist identity `χ^{λ'}_γ = (-1)^{n-r(γ)} · χ^λ_γ`
/// over the full table of `S_n`.  True iff no violation.
pub fn conjugate_twist_check(n: u64) -> Result<bool, CharError> {
    let table = sn_character_table(n)?;
    let index: HashMap<Partition, usize> =
        table.rows.iter().cloned().zip(0..).collect();
    for (i, lambda) in table.rows.iter().enumerate() {
        let ci = index[&lambda.conjugate()];
        for (j, gamma) in table.cols.iter().enumerate() {
            let twisted = if gamma.is_even() {
                table.values[i][j].clone()
            } else {
                -table.values[i][j].clone()
            };
            if table.values[ci][j] != twisted {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
