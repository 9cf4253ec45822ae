//! Conjugacy classes and exact irreducible character values of `A_n`.
//!
//! Classes of `A_n` are the even classes of `S_n`, except that a class whose
//! cycle type has pairwise distinct odd parts *splits* into two classes,
//! labeled `+` and `-`.  Irreducibles mirror this: a conjugate pair
//! `{λ, λ'}` with `λ ≠ λ'` restricts to one irreducible, while a
//! self-conjugate `λ` splits into two, again labeled `±`.
//!
//! Values are rational integers except in one place: a split character
//! `χ^{λ,±}` on the split class of `γ = diagonal_hooks(λ)` takes the value
//!
//! ```text
//! (ε ± √(ε·γ₁⋯γ_r)) / 2,    ε = (-1)^((n-d)/2)
//! ```
//!
//! captured exactly by [`QuadraticValue`].  Everywhere else the value is
//! `χ^λ_γ` (pairs) or `χ^λ_γ / 2` (split characters off the diagonal-hook
//! class), and the halving is guaranteed integral; a violation would
//! falsify the formula, so it is asserted, not returned.
//!
//! The `±` labeling on both sides is conventional; only the `{+,-}`
//! multisets of values are canonical, and everything downstream (oracles,
//! classification) depends only on those multisets.

use crate::partition::{factorial, partitions_of, Partition};
use crate::sn_chars::{ColumnEvaluator, MemoStats};
use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use std::fmt;
use std::fmt::Write as _;
use thiserror::Error;

/// Errors from `A_n` class and character construction.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnError {
    #[error("the alternating group needs n >= 2, got {n}")]
    DegreeTooSmall { n: u64 },
    #[error("size mismatch: the character has n = {chi_n} but the class has n = {class_n}")]
    SizeMismatch { chi_n: u64, class_n: u64 },
    #[error("({gamma}) is an odd cycle type, so it is not an A_n class")]
    OddClass { gamma: Partition },
    #[error("({gamma}) splits in A_n; a +/- class label is required")]
    SplitLabelRequired { gamma: Partition },
    #[error("({gamma}) does not split in A_n; no class label applies")]
    LabelOnNonSplit { gamma: Partition },
    #[error("({lambda}) is not self-conjugate")]
    NotSelfConjugate { lambda: Partition },
    #[error("({lambda}) is self-conjugate; pick a +/- character label")]
    CharLabelRequired { lambda: Partition },
    #[error("({lambda}) is not self-conjugate; no character label applies")]
    LabelOnPair { lambda: Partition },
    #[error("radicand overflows 64 bits; the split value is out of desk scale")]
    RadicandOverflow,
    #[error("full table for n = {n} exceeds the limit {limit}")]
    TableTooLarge { n: u64, limit: u64 },
}

/// The `+`/`-` tag on split classes and split characters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassLabel {
    Plus,
    Minus,
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassLabel::Plus => "+",
            ClassLabel::Minus => "-",
        })
    }
}

/// An exact value `(a + b·√R)/2` with unbounded `a`, `b` and a signed
/// 64-bit radicand (negative `R` means an imaginary surd).
///
/// Normalization: `b = 0` forces `R = 0`, and a non-negative perfect-square
/// radicand is folded into `a` at construction.  The radicand is otherwise
/// kept unreduced (it is `ε·γ₁⋯γ_r` verbatim); our sums never mix two
/// different non-zero radicands, and cross-radicand equality is out of
/// scope.  Rational character values of `A_n` are rational integers, so
/// `b = 0` implies `a` even.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticValue {
    a: BigInt,
    b: BigInt,
    radicand: i64,
}

impl QuadraticValue {
    /// The rational integer `v` (stored as `(2v + 0·√0)/2`).
    pub fn from_integer(v: impl Into<BigInt>) -> Self {
        QuadraticValue { a: v.into() * 2, b: BigInt::zero(), radicand: 0 }
    }

    /// `(a + b·√radicand)/2`, normalized.
    pub fn new(a: BigInt, b: BigInt, radicand: i64) -> Self {
        let mut v = QuadraticValue { a, b, radicand };
        if v.b.is_zero() {
            v.radicand = 0;
        } else if v.radicand >= 0 {
            let root = (v.radicand as u64).isqrt();
            if root * root == v.radicand as u64 {
                v.a += &v.b * BigInt::from(root);
                v.b = BigInt::zero();
                v.radicand = 0;
            }
        }
        debug_assert!(
            !v.b.is_zero() || (&v.a % 2i32).is_zero(),
            "rational A_n values are integers"
        );
        v
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn radicand(&self) -> i64 {
        self.radicand
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The value as a rational integer, when it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.b.is_zero() {
            Some(&self.a / 2)
        } else {
            None
        }
    }

    /// True iff the value lies in `{0, 1, -1}` (the sign-class test).
    pub fn is_zero_or_unit(&self) -> bool {
        self.b.is_zero() && self.a.magnitude() <= &BigUint::from(2u32)
    }

    /// Complex conjugate: flips `b` exactly when the surd is imaginary
    /// (`R < 0`).  This is the conjugation of character theory's first
    /// orthogonality relation.
    pub fn complex_conjugate(&self) -> Self {
        if self.radicand < 0 {
            QuadraticValue { a: self.a.clone(), b: -self.b.clone(), radicand: self.radicand }
        } else {
            self.clone()
        }
    }

    /// Algebraic (field) conjugate `√R → -√R`: always flips `b`.
    pub fn algebraic_conjugate(&self) -> Self {
        QuadraticValue { a: self.a.clone(), b: -self.b.clone(), radicand: self.radicand }
    }

    /// The additive inverse.
    pub fn negate(&self) -> Self {
        QuadraticValue { a: -self.a.clone(), b: -self.b.clone(), radicand: self.radicand }
    }

    /// Exact sum, when the radicands are compatible (equal, or either side
    /// rational).
    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        let radicand = merge_radicands(self.radicand, other.radicand)?;
        Some(QuadraticValue::new(
            &self.a + &other.a,
            &self.b + &other.b,
            radicand,
        ))
    }
}

fn merge_radicands(r1: i64, r2: i64) -> Option<i64> {
    match (r1, r2) {
        (0, r) | (r, 0) => Some(r),
        (a, b) if a == b => Some(a),
        _ => None,
    }
}

impl fmt::Display for QuadraticValue {
    /// Rational values render as plain integers; surds as
    /// `(a+b*sqrt(R))/2` with the sign of `b` explicit, e.g.
    /// `(1-1*sqrt(5))/2` or `(-1+1*sqrt(-3))/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_integer() {
            Some(v) => write!(f, "{}", v),
            None => {
                let sign = if self.b.is_negative() { '-' } else { '+' };
                write!(
                    f,
                    "({}{}{}*sqrt({}))/2",
                    self.a,
                    sign,
                    self.b.magnitude(),
                    self.radicand
                )
            }
        }
    }
}

impl Serialize for QuadraticValue {
    /// JSON form is the rendered exact string.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// Exact accumulator for orthogonality sums `Σ weight · v · w̄`
/// (`w̄` = complex conjugate).  Tracks four times the sum as integers, so
/// no half-integer intermediates arise.
#[derive(Debug, Clone, Default)]
pub struct QuadAccum {
    quad_a: BigInt,
    quad_b: BigInt,
    radicand: i64,
}

impl QuadAccum {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `weight · v · complex_conjugate(w)`.
    ///
    /// Panics on incompatible radicands: our sums stay inside one quadratic
    /// extension by construction, so a clash is a logic error.
    pub fn add_product(&mut self, weight: &BigInt, v: &QuadraticValue, w: &QuadraticValue) {
        let radicand = merge_radicands(v.radicand, w.radicand)
            .expect("orthogonality sums never mix radicands");
        // complex conjugation flips w.b for an imaginary surd
        let c = if radicand < 0 { -1 } else { 1 };
        let wb = &w.b * c;
        // 4·v·w̄ = (a₁a₂ + b₁b₂'R) + (a₁b₂' + a₂b₁)·√R
        let rational = &v.a * &w.a + &v.b * &wb * radicand;
        let surd = &v.a * &wb + &w.a * &v.b;
        self.quad_a += weight * rational;
        self.quad_b += weight * surd;
        if !self.quad_b.is_zero() {
            self.radicand = merge_radicands(self.radicand, radicand)
                .expect("orthogonality sums never mix radicands");
        }
    }

    /// True iff the accumulated sum equals the rational integer `expected`.
    pub fn equals_integer(&self, expected: &BigInt) -> bool {
        self.quad_b.is_zero() && self.quad_a == expected * 4
    }

    /// True iff the surd part of the sum has cancelled exactly.
    pub fn surd_part_vanishes(&self) -> bool {
        self.quad_b.is_zero()
    }
}

/// A conjugacy class of `A_n`: an even cycle type, with a label exactly
/// when the class splits (pairwise distinct odd parts).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnClass {
    gamma: Partition,
    label: Option<ClassLabel>,
}

impl AnClass {
    /// Validates the evenness/split/label rules and builds the class.
    pub fn new(gamma: Partition, label: Option<ClassLabel>) -> Result<Self, AnError> {
        if !gamma.is_even() {
            return Err(AnError::OddClass { gamma });
        }
        match (gamma.has_distinct_odd_parts(), label) {
            (true, None) => Err(AnError::SplitLabelRequired { gamma }),
            (false, Some(_)) => Err(AnError::LabelOnNonSplit { gamma }),
            (_, label) => Ok(AnClass { gamma, label }),
        }
    }

    pub fn gamma(&self) -> &Partition {
        &self.gamma
    }

    pub fn label(&self) -> Option<ClassLabel> {
        self.label
    }

    pub fn is_split(&self) -> bool {
        self.label.is_some()
    }

    /// Order of the centralizer in `A_n`: `z_γ` when the class splits,
    /// `z_γ / 2` otherwise.
    pub fn centralizer_order(&self) -> BigUint {
        let z = self.gamma.centralizer_order();
        if self.is_split() {
            z
        } else {
            z / 2u32
        }
    }

    /// Number of elements: `|A_n| / |centralizer|`.
    pub fn size(&self) -> BigUint {
        factorial(self.gamma.n()) / 2u32 / self.centralizer_order()
    }

    /// Text form: `(2,2)`, `(3,1)+`.
    pub fn name(&self) -> String {
        match self.label {
            Some(l) => format!("{}{}", self.gamma.bracketed(), l),
            None => self.gamma.bracketed(),
        }
    }
}

/// An irreducible character of `A_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnIrreducible {
    /// Restriction of the conjugate pair `{λ, λ'}`, `λ ≠ λ'`; `repr` is the
    /// lexicographically larger member.
    Pair { repr: Partition, partner: Partition },
    /// One of the two constituents of a self-conjugate `χ^λ`.
    Split { lambda: Partition, label: ClassLabel },
}

impl AnIrreducible {
    pub fn n(&self) -> u64 {
        match self {
            AnIrreducible::Pair { repr, .. } => repr.n(),
            AnIrreducible::Split { lambda, .. } => lambda.n(),
        }
    }

    /// Text form: `(4,1)` for a pair, `(2,2)+` for a split character.
    pub fn name(&self) -> String {
        match self {
            AnIrreducible::Pair { repr, .. } => repr.bracketed(),
            AnIrreducible::Split { lambda, label } => {
                format!("{}{}", lambda.bracketed(), label)
            }
        }
    }
}

/// All classes of `A_n` in canonical order: cycle types ascending
/// (identity first), split classes contributing `+` then `-`.
pub fn an_classes(n: u64) -> Result<Vec<AnClass>, AnError> {
    if n < 2 {
        return Err(AnError::DegreeTooSmall { n });
    }
    // partitions_of yields descending; classes are presented ascending
    let mut even: Vec<Partition> = partitions_of(n).filter(Partition::is_even).collect();
    even.reverse();
    let mut out = Vec::new();
    for gamma in even {
        if gamma.has_distinct_odd_parts() {
            out.push(AnClass { gamma: gamma.clone(), label: Some(ClassLabel::Plus) });
            out.push(AnClass { gamma, label: Some(ClassLabel::Minus) });
        } else {
            out.push(AnClass { gamma, label: None });
        }
    }
    Ok(out)
}

/// All irreducibles of `A_n`, representatives in reverse-lexicographic
/// order, split characters contributing `+` then `-`.
pub fn an_irreducibles(n: u64) -> Result<Vec<AnIrreducible>, AnError> {
    if n < 2 {
        return Err(AnError::DegreeTooSmall { n });
    }
    let mut out = Vec::new();
    for lambda in partitions_of(n) {
        let conj = lambda.conjugate();
        if lambda == conj {
            out.push(AnIrreducible::Split { lambda: lambda.clone(), label: ClassLabel::Plus });
            out.push(AnIrreducible::Split { lambda, label: ClassLabel::Minus });
        } else if lambda > conj {
            out.push(AnIrreducible::Pair { repr: lambda, partner: conj });
        }
    }
    Ok(out)
}

/// The sign `ε = (-1)^((n-d)/2)` attached to a self-conjugate `λ` with `d`
/// diagonal hooks.  (`n ≡ d (mod 2)` because the diagonal hooks are odd and
/// partition the diagram.)
pub fn epsilon(lambda: &Partition) -> Result<i8, AnError> {
    if !lambda.is_self_conjugate() {
        return Err(AnError::NotSelfConjugate { lambda: lambda.clone() });
    }
    let d = lambda.diagonal_hooks().len() as u64;
    debug_assert_eq!((lambda.n() - d) % 2, 0);
    Ok(if ((lambda.n() - d) / 2).is_multiple_of(2) { 1 } else { -1 })
}

/// `χ(cls)` for an `A_n` irreducible, exactly.
pub fn an_char_value(chi: &AnIrreducible, cls: &AnClass) -> Result<QuadraticValue, AnError> {
    let mut ev = ColumnEvaluator::new(cls.gamma().clone());
    an_char_value_with(chi, cls, &mut ev)
}

/// As [`an_char_value`], reusing a caller-owned evaluator for the class's
/// cycle type.  Use this to scan many characters on one class (or on both
/// labels of a split class) without re-deriving `S_n` values.
pub fn an_char_value_with(
    chi: &AnIrreducible,
    cls: &AnClass,
    ev: &mut ColumnEvaluator,
) -> Result<QuadraticValue, AnError> {
    debug_assert_eq!(ev.gamma(), cls.gamma(), "evaluator bound to a different class");
    if chi.n() != cls.gamma().n() {
        return Err(AnError::SizeMismatch { chi_n: chi.n(), class_n: cls.gamma().n() });
    }
    match chi {
        AnIrreducible::Pair { repr, .. } => {
            let v = ev.value(repr).expect("sizes checked above");
            Ok(QuadraticValue::from_integer(v))
        }
        AnIrreducible::Split { lambda, label } => {
            let hooks = lambda.diagonal_hooks();
            let on_diagonal_class = cls.gamma().parts() == hooks.as_slice();
            if on_diagonal_class {
                let eps = epsilon(lambda).expect("split characters are self-conjugate");
                let mut product: i64 = 1;
                for &part in cls.gamma().parts() {
                    product = i64::try_from(part)
                        .ok()
                        .and_then(|p| product.checked_mul(p))
                        .ok_or(AnError::RadicandOverflow)?;
                }
                let radicand = (eps as i64).checked_mul(product).ok_or(AnError::RadicandOverflow)?;
                let branch = if Some(*label) == cls.label() { 1 } else { -1 };
                Ok(QuadraticValue::new(BigInt::from(eps), BigInt::from(branch), radicand))
            } else {
                let v = ev.value(lambda).expect("sizes checked above");
                assert!(
                    (&v % 2i32).is_zero(),
                    "chi^{}({}) = {} is odd off the diagonal-hook class; \
                     this falsifies the halving rule",
                    lambda,
                    cls.name(),
                    v
                );
                Ok(QuadraticValue::from_integer(v / 2))
            }
        }
    }
}

/// Full character table of `A_n`.
#[derive(Debug, Clone)]
pub struct AnTable {
    pub n: u64,
    pub rows: Vec<AnIrreducible>,
    pub cols: Vec<AnClass>,
    /// `values[i][j] = rows[i](cols[j])`.
    pub values: Vec<Vec<QuadraticValue>>,
    /// Memo counters summed over all cycle-type columns.
    pub stats: MemoStats,
}

impl AnTable {
    /// Tab-separated table with the same layout as the `S_n` export.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("chi\\class");
        for c in &self.cols {
            let _ = write!(out, "\t{}", c.name());
        }
        out.push('\n');
        for (r, row) in self.rows.iter().zip(&self.values) {
            let _ = write!(out, "{}", r.name());
            for v in row {
                let _ = write!(out, "\t{}", v);
            }
            out.push('\n');
        }
        out
    }

    /// Nested JSON object; values are exact rendered strings.
    pub fn to_json(&self) -> serde_json::Value {
        let mut values = serde_json::Map::new();
        for (r, row) in self.rows.iter().zip(&self.values) {
            let mut by_class = serde_json::Map::new();
            for (c, v) in self.cols.iter().zip(row) {
                by_class.insert(c.name(), serde_json::Value::String(v.to_string()));
            }
            values.insert(r.name(), serde_json::Value::Object(by_class));
        }
        serde_json::json!({
            "group": "an",
            "n": self.n,
            "rows": self.rows.iter().map(AnIrreducible::name).collect::<Vec<_>>(),
            "cols": self.cols.iter().map(AnClass::name).collect::<Vec<_>>(),
            "values": values,
        })
    }
}

/// Builds the full `A_n` table, refusing `n` above the default limit.
pub fn an_character_table(n: u64) -> Result<AnTable, AnError> {
    an_character_table_limited(n, crate::sn_chars::TABLE_LIMIT)
}

/// Builds the full `A_n` table under a caller-chosen limit.  Cycle-type
/// columns are computed in parallel (the two label columns of a split class
/// share one evaluator); the result is independent of the worker count.
pub fn an_character_table_limited(n: u64, limit: u64) -> Result<AnTable, AnError> {
    if n > limit {
        return Err(AnError::TableTooLarge { n, limit });
    }
    let rows = an_irreducibles(n)?;
    let cols = an_classes(n)?;
    // group adjacent columns with the same cycle type (split pairs)
    let mut groups: Vec<(usize, usize)> = Vec::new();
    let mut start = 0;
    while start < cols.len() {
        let mut end = start + 1;
        while end < cols.len() && cols[end].gamma() == cols[start].gamma() {
            end += 1;
        }
        groups.push((start, end));
        start = end;
    }
    let computed: Vec<(Vec<Vec<QuadraticValue>>, MemoStats)> = groups
        .par_iter()
        .map(|&(s, e)| {
            let mut ev = ColumnEvaluator::new(cols[s].gamma().clone());
            let group_cols = (s..e)
                .map(|j| {
                    rows.iter()
                        .map(|chi| {
                            an_char_value_with(chi, &cols[j], &mut ev)
                                .expect("table rows and columns have equal n")
                        })
                        .collect()
                })
                .collect();
            (group_cols, ev.stats())
        })
        .collect();
    let mut stats = MemoStats::default();
    let mut columns: Vec<Vec<QuadraticValue>> = Vec::with_capacity(cols.len());
    for (group_cols, s) in computed {
        stats.absorb(s);
        columns.extend(group_cols);
    }
    let values = (0..rows.len())
        .map(|i| columns.iter().map(|col| col[i].clone()).collect())
        .collect();
    Ok(AnTable { n, rows, cols, values, stats })
}
