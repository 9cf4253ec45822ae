//! Integer partitions and the diagram combinatorics built on them.
//!
//! A [`Partition`] is a weakly decreasing sequence of positive 64-bit parts.
//! Everything downstream works through this module:
//!
//! - conjugation and self-conjugacy,
//! - hook lengths and rim-hook (border-strip) removal,
//! - beta-sets (first-column hook lengths) and the abacus view,
//! - q-cores and q-quotients, with exact reconstruction,
//! - diagonal hooks and the bijection with self-conjugate partitions,
//! - enumeration of all partitions of `n` in reverse-lexicographic order,
//! - centralizer orders in `S_n` (exact, unbounded).
//!
//! Partitions are immutable value objects: every operation returns a new
//! partition and never mutates its input.

use num_bigint::BigUint;
use num_traits::One;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Errors from partition construction and diagram operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("partition parts must be positive")]
    ZeroPart,
    #[error("partition sum overflows 64 bits")]
    Overflow,
    #[error("cell ({row}, {col}) lies outside the diagram")]
    CellOutOfDiagram { row: usize, col: usize },
    #[error("hook length modulus must be at least 1")]
    ZeroModulus,
    #[error("diagonal hook lengths must be strictly decreasing odd numbers")]
    BadDiagonalHooks,
    #[error("core argument still contains a {q}-hook")]
    CoreNotReduced { q: u64 },
    #[error("quotient must have exactly {expected} components, got {got}")]
    QuotientLength { expected: usize, got: usize },
    #[error("cannot parse partition from {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// Parity of the permutations in the conjugacy class indexed by a partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// An integer partition: weakly decreasing positive parts.
///
/// The derived ordering compares part vectors lexicographically, so sorting
/// partitions of equal sum in *descending* derived order yields the canonical
/// reverse-lexicographic order used throughout ((n) first, (1^n) last).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u64>,
    n: u64,
}

impl Partition {
    /// Builds a partition from arbitrary positive entries, sorting them into
    /// weakly decreasing order.  Rejects zero entries and sums that do not
    /// fit in 64 bits.
    pub fn new(parts: impl Into<Vec<u64>>) -> Result<Self, PartitionError> {
        let mut parts = parts.into();
        if parts.contains(&0) {
            return Err(PartitionError::ZeroPart);
        }
        let sum: u128 = parts.iter().map(|&p| p as u128).sum();
        let n = u64::try_from(sum).map_err(|_| PartitionError::Overflow)?;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts, n })
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new(), n: 0 }
    }

    /// Internal constructor for parts already known to be valid and sorted.
    pub(crate) fn from_sorted(parts: Vec<u64>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.last().is_none_or(|&p| p > 0));
        let n = parts.iter().sum();
        Partition { parts, n }
    }

    /// The parts, weakly decreasing.
    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// The sum of the parts.
    pub fn n(&self) -> u64 {
        self.n
    }

    /// The number of parts (rows of the diagram).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The conjugate (transposed) partition: column lengths of the diagram.
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let mut out = Vec::with_capacity(cols);
        for j in 0..cols as u64 {
            // rows with p_i >= j+1; parts are sorted, so count a prefix
            let cnt = self.parts.iter().take_while(|&&p| p > j).count() as u64;
            out.push(cnt);
        }
        Partition::from_sorted(out)
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Hook length of cell `(row, col)`, both 1-based.
    pub fn hook_length(&self, row: usize, col: usize) -> Result<u64, PartitionError> {
        if row == 0 || col == 0 || row > self.parts.len() || (col as u64) > self.parts[row - 1] {
            return Err(PartitionError::CellOutOfDiagram { row, col });
        }
        let arm = self.parts[row - 1] - col as u64;
        let col_len = self.parts.iter().take_while(|&&p| p >= col as u64).count();
        let leg = (col_len - row) as u64;
        Ok(arm + leg + 1)
    }

    /// All rim `q`-hook removals, ordered by ascending corner row.
    ///
    /// Each removal names the corner cell `(row, col)` whose hook has length
    /// exactly `q`, the leg length of the rim hook, its sign `(-1)^leg`, and
    /// the partition left after removal.  Returns an empty vector when the
    /// diagram has no `q`-hook.  `q = 0` yields no removals.
    pub fn rim_hooks_of_length(&self, q: u64) -> Vec<RimHookRemoval> {
        if q == 0 {
            return Vec::new();
        }
        let beta = BetaSet::from_partition(self);
        let els = beta.elements();
        let mut out = Vec::new();
        for (idx, &x) in els.iter().enumerate() {
            if x < q || beta.contains(x - q) {
                continue;
            }
            let target = x - q;
            // elements strictly between target and x
            let leg = els.iter().filter(|&&b| b > target && b < x).count();
            // cells left of the removed one in its row have larger hooks:
            // they correspond to absent beads below x, above or at target
            let smaller_present = els.iter().filter(|&&b| b < target).count() as u64;
            let col = target - smaller_present + 1;
            let mut nb: Vec<u64> = els
                .iter()
                .copied()
                .filter(|&b| b != x)
                .chain(std::iter::once(target))
                .collect();
            nb.sort_unstable_by(|a, b| b.cmp(a));
            let result = BetaSet::from_elements(nb).to_partition();
            out.push(RimHookRemoval {
                row: idx + 1,
                col: col as usize,
                leg,
                sign: if leg % 2 == 0 { 1 } else { -1 },
                result,
            });
        }
        out
    }

    /// The q-core: what remains after removing rim q-hooks until none exist.
    pub fn q_core(&self, q: u64) -> Result<Partition, PartitionError> {
        Ok(self.core_quotient(q)?.core)
    }

    /// The q-quotient: one partition per abacus runner, indexed by residue.
    pub fn q_quotient(&self, q: u64) -> Result<Vec<Partition>, PartitionError> {
        Ok(self.core_quotient(q)?.quotient)
    }

    /// Core, quotient and weight in one pass over the abacus.
    pub fn core_quotient(&self, q: u64) -> Result<CoreQuotient, PartitionError> {
        if q == 0 {
            return Err(PartitionError::ZeroModulus);
        }
        let qs = q as usize;
        let rows = self.parts.len().max(1).div_ceil(qs) * qs;
        let beta = BetaSet::padded(self, rows);
        // distribute beads onto runners: runner t holds levels (x - t)/q
        let mut runners: Vec<Vec<u64>> = vec![Vec::new(); qs];
        for &x in beta.elements() {
            runners[(x % q) as usize].push(x / q);
        }
        let mut core_beta = Vec::with_capacity(rows);
        let mut quotient = Vec::with_capacity(qs);
        let mut weight = 0u64;
        for (t, levels) in runners.iter().enumerate() {
            let c = levels.len() as u64;
            for lvl in 0..c {
                core_beta.push(lvl * q + t as u64);
            }
            // levels arrive descending (beta elements are descending);
            // they form a beta-set of size c for the quotient component
            let comp = BetaSet::from_elements(levels.clone()).to_partition();
            weight += comp.n();
            quotient.push(comp);
        }
        core_beta.sort_unstable_by(|a, b| b.cmp(a));
        let core = BetaSet::from_elements(core_beta).to_partition();
        debug_assert_eq!(core.n() + q * weight, self.n);
        Ok(CoreQuotient { core, quotient, weight })
    }

    /// Rebuilds the unique partition with the given q-core and q-quotient.
    ///
    /// Inverse to [`Partition::core_quotient`]: the `core` must itself be a
    /// q-core (no q-hook), and `quotient` must have exactly `q` components.
    pub fn from_core_and_quotient(
        core: &Partition,
        quotient: &[Partition],
        q: u64,
    ) -> Result<Partition, PartitionError> {
        if q == 0 {
            return Err(PartitionError::ZeroModulus);
        }
        let qs = q as usize;
        if quotient.len() != qs {
            return Err(PartitionError::QuotientLength { expected: qs, got: quotient.len() });
        }
        if !core.rim_hooks_of_length(q).is_empty() {
            return Err(PartitionError::CoreNotReduced { q });
        }
        // Pick a bead count: enough rows that every runner has at least as
        // many beads as its quotient component has parts.  Growing by q adds
        // exactly one bead to every runner.
        let mut rows = core.parts.len().max(1).div_ceil(qs) * qs;
        let mut counts = runner_counts(core, rows, q);
        let deficit = (0..qs)
            .map(|t| quotient[t].len().saturating_sub(counts[t]))
            .max()
            .unwrap_or(0);
        if deficit > 0 {
            rows += deficit * qs;
            counts = runner_counts(core, rows, q);
        }
        let mut beta = Vec::with_capacity(rows);
        for (t, comp) in quotient.iter().enumerate() {
            let c = counts[t];
            debug_assert!(c >= comp.len());
            // beta-set of the component, padded to c beads
            for &lvl in BetaSet::padded(comp, c).elements() {
                beta.push(lvl * q + t as u64);
            }
        }
        beta.sort_unstable_by(|a, b| b.cmp(a));
        Ok(BetaSet::from_elements(beta).to_partition())
    }

    /// The diagonal hook lengths `h(1,1), h(2,2), ...` down the main
    /// diagonal (as many as the Durfee square is wide).
    pub fn diagonal_hooks(&self) -> Vec<u64> {
        let conj = self.conjugate();
        let mut out = Vec::new();
        for i in 0.. {
            if i >= self.parts.len() || self.parts[i] < (i + 1) as u64 {
                break;
            }
            let arm = self.parts[i] - (i + 1) as u64;
            let leg = conj.parts[i] - (i + 1) as u64;
            out.push(arm + leg + 1);
        }
        out
    }

    /// The unique self-conjugate partition whose diagonal hooks are `hooks`.
    ///
    /// `hooks` must be strictly decreasing and all odd.  Inverse to
    /// [`Partition::diagonal_hooks`] on self-conjugate partitions.
    pub fn from_diagonal_hooks(hooks: &[u64]) -> Result<Partition, PartitionError> {
        if hooks.iter().any(|&h| h % 2 == 0 || h == 0)
            || hooks.windows(2).any(|w| w[0] <= w[1])
        {
            return Err(PartitionError::BadDiagonalHooks);
        }
        let d = hooks.len();
        if d == 0 {
            return Ok(Partition::empty());
        }
        let arms: Vec<u64> = hooks.iter().map(|&h| (h - 1) / 2).collect();
        let max_row = 1 + arms[0];
        let mut parts = Vec::with_capacity(max_row as usize);
        for i in 0..d as u64 {
            parts.push(i + 1 + arms[i as usize]);
        }
        for row in (d as u64 + 1)..=max_row {
            let cnt = (0..d as u64).filter(|&k| k + 1 + arms[k as usize] >= row).count() as u64;
            if cnt == 0 {
                break;
            }
            parts.push(cnt);
        }
        let p = Partition::from_sorted(parts);
        debug_assert!(p.is_self_conjugate());
        debug_assert_eq!(p.n(), hooks.iter().sum::<u64>());
        Ok(p)
    }

    /// Parity of the permutations of cycle type `self`: even iff `n - r` is.
    pub fn parity(&self) -> Parity {
        if (self.n - self.parts.len() as u64).is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// True iff permutations of this cycle type are even (lie in `A_n`).
    pub fn is_even(&self) -> bool {
        self.parity() == Parity::Even
    }

    /// True iff all parts are odd and pairwise distinct (the split-class
    /// criterion in `A_n`).  Vacuously true for the empty partition.
    pub fn has_distinct_odd_parts(&self) -> bool {
        self.parts.iter().all(|&p| p % 2 == 1)
            && self.parts.windows(2).all(|w| w[0] != w[1])
    }

    /// Order of the `S_n` centralizer of a permutation of this cycle type:
    /// the product over part values v of multiplicity m of `v^m * m!`.
    pub fn centralizer_order(&self) -> BigUint {
        let mut acc = BigUint::one();
        let mut i = 0;
        while i < self.parts.len() {
            let v = self.parts[i];
            let mut m = 0u64;
            while i < self.parts.len() && self.parts[i] == v {
                m += 1;
                i += 1;
            }
            acc *= BigUint::from(v).pow(m as u32);
            acc *= factorial(m);
        }
        acc
    }

    /// Canonical text form with surrounding parentheses, e.g. `(5,4,3,2,1)`;
    /// the empty partition renders as `()`.
    pub fn bracketed(&self) -> String {
        if self.parts.is_empty() {
            "()".to_string()
        } else {
            format!("({})", self)
        }
    }

    /// Parses the canonical comma form (`5,4,3,2,1`), accepting the
    /// exponent shorthand for repeated parts (`3,2^4,1`), optional
    /// surrounding parentheses, and `()`/empty for the empty partition.
    pub fn parse(input: &str) -> Result<Partition, PartitionError> {
        let err = |reason: &str| PartitionError::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let mut s = input.trim();
        if let Some(stripped) = s.strip_prefix('(') {
            s = stripped.strip_suffix(')').ok_or_else(|| err("unbalanced parenthesis"))?;
            s = s.trim();
        }
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            let (base, count) = match tok.split_once('^') {
                Some((b, e)) => {
                    let count: u64 = e
                        .trim()
                        .parse()
                        .map_err(|_| err("exponent is not a non-negative integer"))?;
                    if count == 0 {
                        return Err(err("exponent must be at least 1"));
                    }
                    (b.trim(), count)
                }
                None => (tok, 1),
            };
            let v: u64 = base.parse().map_err(|_| err("part is not a positive integer"))?;
            if v == 0 {
                return Err(PartitionError::ZeroPart);
            }
            for _ in 0..count {
                parts.push(v);
            }
        }
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    /// Bare canonical comma form: `5,4,3,2,1`.  Empty renders as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = PartitionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Partition::parse(s)
    }
}

impl Serialize for Partition {
    /// Canonical JSON form: an array of the parts.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.parts.len()))?;
        for p in &self.parts {
            seq.serialize_element(p)?;
        }
        seq.end()
    }
}

/// One rim-hook removal: corner cell, leg length, sign, and what remains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RimHookRemoval {
    /// 1-based row of the corner cell whose hook was removed.
    pub row: usize,
    /// 1-based column of the corner cell.
    pub col: usize,
    /// Leg length of the rim hook (rows spanned minus one).
    pub leg: usize,
    /// `(-1)^leg`.
    pub sign: i8,
    /// The partition left after removing the rim hook.
    pub result: Partition,
}

/// First-column hook lengths of a partition, possibly padded with virtual
/// zero-length rows: the abacus encoding `{ p_i + rows - i }`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaSet {
    /// Strictly decreasing, non-negative.
    elements: Vec<u64>,
    /// Number of zero-rows absorbed beyond the partition's own length.
    padding: usize,
}

impl BetaSet {
    /// The beta-set with exactly as many beads as the partition has rows.
    pub fn from_partition(p: &Partition) -> BetaSet {
        BetaSet::padded(p, p.len())
    }

    /// The beta-set padded to `rows` beads (`rows >= p.len()`).
    pub fn padded(p: &Partition, rows: usize) -> BetaSet {
        assert!(
            rows >= p.len(),
            "beta-set size {} is smaller than the partition's {} rows",
            rows,
            p.len()
        );
        let r = rows as u64;
        let mut elements = Vec::with_capacity(rows);
        for (i, &part) in p.parts().iter().enumerate() {
            elements.push(part + r - 1 - i as u64);
        }
        for i in p.len()..rows {
            elements.push(r - 1 - i as u64);
        }
        BetaSet { elements, padding: rows - p.len() }
    }

    /// Wraps a strictly decreasing element vector produced internally.
    pub(crate) fn from_elements(elements: Vec<u64>) -> BetaSet {
        debug_assert!(elements.windows(2).all(|w| w[0] > w[1]));
        let mut padding = 0;
        for (i, &x) in elements.iter().rev().enumerate() {
            if x == i as u64 {
                padding += 1;
            } else {
                break;
            }
        }
        // padding counts trailing beads encoding zero-length rows
        let padding = padding.min(elements.len());
        BetaSet { elements, padding }
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn padding(&self) -> usize {
        self.padding
    }

    pub fn contains(&self, x: u64) -> bool {
        self.elements.binary_search_by(|probe| x.cmp(probe)).is_ok()
    }

    /// Recovers the partition: `p_i = beta_i - (rows - i)`, zero rows dropped.
    pub fn to_partition(&self) -> Partition {
        let rows = self.elements.len() as u64;
        let mut parts = Vec::with_capacity(self.elements.len());
        for (i, &x) in self.elements.iter().enumerate() {
            let slack = rows - 1 - i as u64;
            debug_assert!(x >= slack, "beta elements must encode non-negative parts");
            let part = x - slack;
            if part > 0 {
                parts.push(part);
            }
        }
        Partition::from_sorted(parts)
    }
}

/// A q-core together with the q-quotient and its weight:
/// `|original| = |core| + q * weight`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreQuotient {
    pub core: Partition,
    /// Exactly q components, indexed by abacus runner (residue mod q).
    pub quotient: Vec<Partition>,
    /// Total size of the quotient components.
    pub weight: u64,
}

/// Iterator over all partitions of `n` in reverse-lexicographic order:
/// `(n)` first, `(1^n)` last.
pub fn partitions_of(n: u64) -> Partitions {
    Partitions { next: Some(vec![n; if n == 0 { 0 } else { 1 }]) }
}

/// See [`partitions_of`].
pub struct Partitions {
    next: Option<Vec<u64>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        let out = Partition::from_sorted(current.clone());
        // successor: strip trailing 1s, split one cell off the last part > 1,
        // refill greedily with the lowered cap
        let mut parts = current;
        let mut budget = 0u64;
        while parts.last() == Some(&1) {
            parts.pop();
            budget += 1;
        }
        if let Some(last) = parts.last_mut() {
            *last -= 1;
            budget += 1;
            let cap = *last;
            parts.extend(std::iter::repeat_n(cap, (budget / cap) as usize));
            if !budget.is_multiple_of(cap) {
                parts.push(budget % cap);
            }
            self.next = Some(parts);
        }
        Some(out)
    }
}

/// Beads per abacus runner when `p` is laid out on `rows` beads.
fn runner_counts(p: &Partition, rows: usize, q: u64) -> Vec<usize> {
    let mut counts = vec![0usize; q as usize];
    for &x in BetaSet::padded(p, rows).elements() {
        counts[(x % q) as usize] += 1;
    }
    counts
}

/// Exact factorial.
pub(crate) fn factorial(n: u64) -> BigUint {
    let mut acc = BigUint::one();
    for k in 2..=n {
        acc *= BigUint::from(k);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    // ===== construction =====

    #[test]
    fn new_sorts_into_weakly_decreasing_order() {
        assert_eq!(p(&[1, 3, 2]).parts(), &[3, 2, 1]);
        assert_eq!(p(&[2, 2]).parts(), &[2, 2]);
        assert_eq!(Partition::new(vec![]).unwrap(), Partition::empty());
    }

    #[test]
    fn new_rejects_zero_parts() {
        assert_eq!(Partition::new(vec![3, 0, 1]), Err(PartitionError::ZeroPart));
    }

    #[test]
    fn cached_sum_and_length() {
        let q = p(&[5, 4, 3, 2, 1]);
        assert_eq!(q.n(), 15);
        assert_eq!(q.len(), 5);
    }

    // ===== conjugation =====

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[4, 2, 1]).conjugate(), p(&[3, 2, 1, 1]));
        assert_eq!(p(&[1, 1, 1]).conjugate(), p(&[3]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn self_conjugate_detection() {
        assert!(p(&[2, 2]).is_self_conjugate());
        assert!(p(&[3, 1, 1]).is_self_conjugate());
        assert!(p(&[4, 2, 1, 1]).is_self_conjugate());
        assert!(!p(&[3, 1]).is_self_conjugate());
    }

    #[test]
    fn hook_shaped_self_conjugates() {
        // (a, 1^(a-1)) and (a, 2, 1^(a-2)) are the self-conjugate partitions
        // with at most two columns beyond the first row
        for a in 2..12u64 {
            let mut hook = vec![a];
            hook.extend(std::iter::repeat_n(1, (a - 1) as usize));
            assert!(p(&hook).is_self_conjugate(), "({},1^{}) self-conjugate", a, a - 1);
            if a >= 2 {
                let mut two = vec![a, 2];
                two.extend(std::iter::repeat_n(1, (a - 2) as usize));
                assert!(p(&two).is_self_conjugate(), "({},2,1^{}) self-conjugate", a, a - 2);
            }
            let mut off = vec![a];
            off.extend(std::iter::repeat_n(1, a as usize));
            assert!(!p(&off).is_self_conjugate());
        }
    }

    // ===== hooks =====

    #[test]
    fn hook_lengths_of_2_2() {
        let q = p(&[2, 2]);
        assert_eq!(q.hook_length(1, 1).unwrap(), 3);
        assert_eq!(q.hook_length(1, 2).unwrap(), 2);
        assert_eq!(q.hook_length(2, 1).unwrap(), 2);
        assert_eq!(q.hook_length(2, 2).unwrap(), 1);
        assert!(matches!(
            q.hook_length(3, 1),
            Err(PartitionError::CellOutOfDiagram { row: 3, col: 1 })
        ));
        assert!(q.hook_length(1, 3).is_err());
        assert!(q.hook_length(0, 1).is_err());
    }

    #[test]
    fn hook_length_of_tall_column_shape() {
        // first-column hook of the second row of (17,3,1^13) is 16
        let mut parts = vec![17, 3];
        parts.extend(std::iter::repeat_n(1, 13));
        assert_eq!(p(&parts).hook_length(2, 1).unwrap(), 16);
    }

    // ===== rim hooks =====

    #[test]
    fn rim_hooks_of_2_2() {
        let q = p(&[2, 2]);
        let hooks = q.rim_hooks_of_length(2);
        assert_eq!(hooks.len(), 2);
        // ascending corner row
        assert_eq!(hooks[0].row, 1);
        assert_eq!(hooks[0].result, p(&[1, 1]));
        assert_eq!(hooks[0].sign, -1);
        assert_eq!(hooks[1].row, 2);
        assert_eq!(hooks[1].result, p(&[2]));
        assert_eq!(hooks[1].sign, 1);
        // the single 3-hook
        let three = q.rim_hooks_of_length(3);
        assert_eq!(three.len(), 1);
        assert_eq!(three[0].result, p(&[1]));
        assert_eq!(three[0].sign, -1);
        assert_eq!((three[0].row, three[0].col), (1, 1));
    }

    #[test]
    fn rim_hooks_of_11_6_1() {
        let q = p(&[11, 6, 1]);
        let hooks = q.rim_hooks_of_length(7);
        assert_eq!(hooks.len(), 2);
        assert_eq!(hooks[0].result, p(&[5, 5, 1]));
        assert_eq!(hooks[0].sign, -1);
        assert_eq!(hooks[1].result, p(&[11]));
        assert_eq!(hooks[1].sign, -1);
        // both results reduce further to the same 7-core
        for h in &hooks {
            assert_eq!(h.result.q_core(7).unwrap(), p(&[4]));
        }
    }

    #[test]
    fn rim_hook_count_matches_hook_length_census() {
        // number of rim q-hooks = number of cells of hook length q
        for n in 1..=12u64 {
            for part in partitions_of(n) {
                for q in 1..=n {
                    let removals = part.rim_hooks_of_length(q).len();
                    let mut cells = 0;
                    for i in 1..=part.len() {
                        for j in 1..=part.parts()[i - 1] as usize {
                            if part.hook_length(i, j).unwrap() == q {
                                cells += 1;
                            }
                        }
                    }
                    assert_eq!(removals, cells, "p={} q={}", part, q);
                }
            }
        }
    }

    #[test]
    fn rim_hook_removal_agrees_with_diagram_walk() {
        // independent oracle: remove the border strip row by row
        fn walk_removal(parts: &[u64], row: usize, col: usize) -> (usize, Vec<u64>) {
            let conj_col = parts.iter().take_while(|&&p| p >= col as u64).count();
            let leg = conj_col - row;
            let mut out: Vec<u64> = parts.to_vec();
            for k in row - 1..row - 1 + leg {
                out[k] = parts[k + 1] - 1;
            }
            out[row - 1 + leg] = col as u64 - 1;
            (leg, out.into_iter().filter(|&x| x > 0).collect())
        }
        for n in 1..=14u64 {
            for part in partitions_of(n) {
                for q in 1..=n {
                    for rem in part.rim_hooks_of_length(q) {
                        let (leg, rest) = walk_removal(part.parts(), rem.row, rem.col);
                        assert_eq!(rem.leg, leg, "p={} q={} corner=({},{})", part, q, rem.row, rem.col);
                        assert_eq!(rem.result.parts(), &rest[..]);
                        assert_eq!(part.hook_length(rem.row, rem.col).unwrap(), q);
                        assert_eq!(rem.result.n(), part.n() - q);
                    }
                }
            }
        }
    }

    // ===== beta-sets =====

    #[test]
    fn beta_set_round_trip() {
        for n in 0..=15u64 {
            for part in partitions_of(n) {
                let b = BetaSet::from_partition(&part);
                assert_eq!(b.padding(), 0);
                assert_eq!(b.to_partition(), part);
                let padded = BetaSet::padded(&part, part.len() + 3);
                assert_eq!(padded.padding(), 3);
                assert_eq!(padded.to_partition(), part);
            }
        }
    }

    #[test]
    fn beta_set_elements_are_first_column_hooks() {
        let part = p(&[4, 2, 1]);
        let hooks: Vec<u64> =
            (1..=3).map(|i| part.hook_length(i, 1).unwrap()).collect();
        assert_eq!(BetaSet::from_partition(&part).elements(), &hooks[..]);
    }

    // ===== cores and quotients =====

    #[test]
    fn seven_core_of_11_6_1() {
        let part = p(&[11, 6, 1]);
        let cq = part.core_quotient(7).unwrap();
        assert_eq!(cq.core, p(&[4]));
        assert_eq!(cq.weight, 2);
        assert_eq!(Partition::from_core_and_quotient(&cq.core, &cq.quotient, 7).unwrap(), part);
    }

    #[test]
    fn eight_core_of_9_6_1_1() {
        assert_eq!(p(&[9, 6, 1, 1]).q_core(8).unwrap(), p(&[1]));
    }

    #[test]
    fn core_quotient_round_trip_and_weight() {
        for n in 0..=12u64 {
            for part in partitions_of(n) {
                for q in 2..=7u64 {
                    let cq = part.core_quotient(q).unwrap();
                    assert_eq!(cq.core.n() + q * cq.weight, n);
                    assert!(cq.core.rim_hooks_of_length(q).is_empty(), "core has no q-hook");
                    let back =
                        Partition::from_core_and_quotient(&cq.core, &cq.quotient, q).unwrap();
                    assert_eq!(back, part, "round trip p={} q={}", part, q);
                }
            }
        }
    }

    #[test]
    fn core_commutes_with_conjugation() {
        for n in 0..=12u64 {
            for part in partitions_of(n) {
                for q in 2..=7u64 {
                    assert_eq!(
                        part.conjugate().q_core(q).unwrap(),
                        part.q_core(q).unwrap().conjugate()
                    );
                }
            }
        }
    }

    #[test]
    fn greedy_removal_reaches_the_same_core() {
        // independent oracle: strip q-hooks one at a time until stuck
        for n in 0..=12u64 {
            for part in partitions_of(n) {
                for q in 2..=5u64 {
                    let mut cur = part.clone();
                    loop {
                        let hooks = cur.rim_hooks_of_length(q);
                        match hooks.into_iter().next() {
                            Some(h) => cur = h.result,
                            None => break,
                        }
                    }
                    assert_eq!(cur, part.q_core(q).unwrap(), "p={} q={}", part, q);
                }
            }
        }
    }

    #[test]
    fn reconstruction_rejects_non_core() {
        // (2) contains a 2-hook, so it is not a 2-core
        let err = Partition::from_core_and_quotient(
            &p(&[2]),
            &[Partition::empty(), Partition::empty()],
            2,
        );
        assert_eq!(err, Err(PartitionError::CoreNotReduced { q: 2 }));
        let err = Partition::from_core_and_quotient(&p(&[1]), &[Partition::empty()], 2);
        assert_eq!(err, Err(PartitionError::QuotientLength { expected: 2, got: 1 }));
    }

    // ===== diagonal hooks =====

    #[test]
    fn diagonal_hooks_examples() {
        assert_eq!(p(&[2, 2]).diagonal_hooks(), vec![3, 1]);
        assert_eq!(p(&[3, 1, 1]).diagonal_hooks(), vec![5]);
        assert_eq!(p(&[4, 3, 1]).diagonal_hooks(), vec![6, 2]);
        assert!(Partition::empty().diagonal_hooks().is_empty());
    }

    #[test]
    fn from_diagonal_hooks_examples() {
        assert_eq!(Partition::from_diagonal_hooks(&[3, 1]).unwrap(), p(&[2, 2]));
        assert_eq!(Partition::from_diagonal_hooks(&[5]).unwrap(), p(&[3, 1, 1]));
        assert_eq!(Partition::from_diagonal_hooks(&[]).unwrap(), Partition::empty());
        assert_eq!(
            Partition::from_diagonal_hooks(&[4, 2]),
            Err(PartitionError::BadDiagonalHooks)
        );
        assert_eq!(
            Partition::from_diagonal_hooks(&[3, 3]),
            Err(PartitionError::BadDiagonalHooks)
        );
        assert_eq!(
            Partition::from_diagonal_hooks(&[1, 3]),
            Err(PartitionError::BadDiagonalHooks)
        );
    }

    #[test]
    fn diagonal_hooks_bijection_on_self_conjugates() {
        // both directions, for every strictly decreasing odd sequence
        // with sum <= 40 (depth-first enumeration)
        fn walk(prefix: &mut Vec<u64>, next_max: u64, sum: u64, checked: &mut u64) {
            if !prefix.is_empty() {
                let part = Partition::from_diagonal_hooks(prefix).unwrap();
                assert!(part.is_self_conjugate());
                assert_eq!(part.diagonal_hooks(), *prefix);
                *checked += 1;
            }
            if next_max == 0 {
                return;
            }
            let mut h = if next_max.is_multiple_of(2) { next_max - 1 } else { next_max };
            while h >= 1 {
                if sum + h <= 40 {
                    prefix.push(h);
                    walk(prefix, h.saturating_sub(2), sum + h, checked);
                    prefix.pop();
                }
                if h < 2 {
                    break;
                }
                h -= 2;
            }
        }
        let mut checked = 0;
        walk(&mut Vec::new(), 39, 0, &mut checked);
        assert!(checked > 100, "enumerated {} sequences", checked);
        // and the reverse direction over all self-conjugate partitions
        for n in 1..=20u64 {
            for part in partitions_of(n).filter(Partition::is_self_conjugate) {
                let hooks = part.diagonal_hooks();
                assert!(hooks.iter().all(|h| h % 2 == 1));
                assert!(hooks.windows(2).all(|w| w[0] > w[1]));
                assert_eq!(Partition::from_diagonal_hooks(&hooks).unwrap(), part);
            }
        }
    }

    // ===== enumeration =====

    #[test]
    fn partitions_of_4_in_reverse_lex_order() {
        let all: Vec<Partition> = partitions_of(4).collect();
        let expect = [
            p(&[4]),
            p(&[3, 1]),
            p(&[2, 2]),
            p(&[2, 1, 1]),
            p(&[1, 1, 1, 1]),
        ];
        assert_eq!(all, expect);
        // derived ordering agrees: strictly descending along the stream
        assert!(all.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn partition_counts_match_pentagonal_recurrence() {
        // Euler: p(n) = sum_k (-1)^(k-1) [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)]
        let top = 60usize;
        let mut counts = vec![0i64; top + 1];
        counts[0] = 1;
        for n in 1..=top {
            let mut acc = 0i64;
            let mut k = 1i64;
            loop {
                let g1 = k * (3 * k - 1) / 2;
                let g2 = k * (3 * k + 1) / 2;
                if g1 as usize > n {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                acc += sign * counts[n - g1 as usize];
                if g2 as usize <= n {
                    acc += sign * counts[n - g2 as usize];
                }
                k += 1;
            }
            counts[n] = acc;
        }
        assert_eq!(counts[10], 42);
        assert_eq!(counts[60], 966467);
        for (n, &count) in counts.iter().enumerate() {
            assert_eq!(
                partitions_of(n as u64).count() as i64,
                count,
                "count mismatch at n={}",
                n
            );
        }
    }

    #[test]
    fn partitions_of_zero_and_one() {
        assert_eq!(partitions_of(0).collect::<Vec<_>>(), vec![Partition::empty()]);
        assert_eq!(partitions_of(1).collect::<Vec<_>>(), vec![p(&[1])]);
    }

    // ===== parity, distinct-odd, centralizers =====

    #[test]
    fn parity_examples() {
        assert_eq!(p(&[2, 2]).parity(), Parity::Even);
        assert_eq!(p(&[3]).parity(), Parity::Even);
        assert_eq!(p(&[2]).parity(), Parity::Odd);
        assert_eq!(p(&[4, 1]).parity(), Parity::Odd);
        assert!(Partition::empty().is_even());
    }

    #[test]
    fn distinct_odd_examples() {
        assert!(p(&[5, 3, 1]).has_distinct_odd_parts());
        assert!(p(&[3, 1]).has_distinct_odd_parts());
        assert!(!p(&[3, 3, 1]).has_distinct_odd_parts());
        assert!(!p(&[4, 3, 1]).has_distinct_odd_parts());
        assert!(Partition::empty().has_distinct_odd_parts());
    }

    #[test]
    fn centralizer_orders() {
        assert_eq!(p(&[3, 1]).centralizer_order(), BigUint::from(3u32));
        assert_eq!(p(&[2, 2]).centralizer_order(), BigUint::from(8u32));
        assert_eq!(p(&[1, 1, 1]).centralizer_order(), BigUint::from(6u32));
        assert_eq!(p(&[2, 1, 1]).centralizer_order(), BigUint::from(4u32));
        // class sizes sum to n!: sum over gamma of n!/z_gamma = n!
        for n in 1..=10u64 {
            let nf = factorial(n);
            let total: BigUint = partitions_of(n).map(|g| &nf / g.centralizer_order()).sum();
            assert_eq!(total, nf);
        }
    }

    // ===== text forms =====

    #[test]
    fn display_and_parse_round_trip() {
        for n in 0..=12u64 {
            for part in partitions_of(n) {
                assert_eq!(Partition::parse(&part.to_string()).unwrap(), part);
                assert_eq!(Partition::parse(&part.bracketed()).unwrap(), part);
            }
        }
        assert_eq!(p(&[5, 4, 3, 2, 1]).to_string(), "5,4,3,2,1");
        assert_eq!(Partition::empty().to_string(), "()");
        assert_eq!(Partition::empty().bracketed(), "()");
    }

    #[test]
    fn parse_exponent_shorthand() {
        assert_eq!(Partition::parse("3,2^4,1").unwrap(), p(&[3, 2, 2, 2, 2, 1]));
        assert_eq!(Partition::parse("2^3").unwrap(), p(&[2, 2, 2]));
        assert_eq!(Partition::parse("1,3,2").unwrap(), p(&[3, 2, 1]));
        assert_eq!(Partition::parse("").unwrap(), Partition::empty());
        assert_eq!(Partition::parse("()").unwrap(), Partition::empty());
        assert!(Partition::parse("3,0,1").is_err());
        assert!(Partition::parse("2^0").is_err());
        assert!(Partition::parse("x").is_err());
        assert!(Partition::parse("-3").is_err());
        assert!(Partition::parse("(3,1").is_err());
    }

    #[test]
    fn json_form_is_an_integer_array() {
        assert_eq!(serde_json::to_string(&p(&[3, 1])).unwrap(), "[3,1]");
        assert_eq!(serde_json::to_string(&Partition::empty()).unwrap(), "[]");
    }
}
