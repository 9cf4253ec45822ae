//! Brute-force sign-class oracles and the checkers that compare them
//! against the closed forms in `classification`.
//!
//! The oracles know nothing about `Sign` or `Sign̄`: they scan full
//! character columns and report the first value outside `{0, 1, -1}`.
//! [`check_equivalence`] runs both routes over a range of cycle types and
//! collects disagreements (the expected count is zero), which is the
//! machine-checkable content of the classification theorems.  The module
//! also carries a fixture suite of pinned character values and a
//! sign-class column identity, each checked exactly.

use crate::an_chars::{
    an_char_value_with, an_character_table, an_irreducibles, AnClass, AnError, ClassLabel,
    QuadraticValue,
};
use crate::classification::{is_an_sign_partition_closed_form, is_sn_sign_partition_closed_form};
use crate::partition::{partitions_of, Partition};
use crate::sn_chars::{mn_value, sn_character_table, CharError, ColumnEvaluator, MemoStats};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Full equivalence scans stay at desk scale.
pub const SCAN_LIMIT: u64 = 20;
/// Single-cycle-type oracle calls may go further.
pub const SINGLE_GAMMA_LIMIT: u64 = 40;

/// Errors from oracle runs and equivalence scans.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error(transparent)]
    An(#[from] AnError),
    #[error(transparent)]
    Char(#[from] CharError),
    #[error("bad range: {lo} > {hi}")]
    RangeOrder { lo: u64, hi: u64 },
    #[error("equivalence scans are stated for n >= 2, got {lo}")]
    RangeStartsTooLow { lo: u64 },
    #[error("full scans are capped at n = {limit}; pass a single cycle type to go up to {single}")]
    RangeTooLarge { limit: u64, single: u64 },
    #[error("single-cycle-type oracle calls are capped at n = {limit}, got {n}")]
    GammaTooLarge { n: u64, limit: u64 },
    #[error("cycle-type filter ({gamma}) has size {n}, outside the range {lo}..={hi}")]
    FilterOutsideRange { gamma: Partition, n: u64, lo: u64, hi: u64 },
    #[error("cycle-type filter ({gamma}) is odd, so it names no A_n class")]
    OddGammaFilter { gamma: Partition },
    #[error("worker pool: {reason}")]
    Pool { reason: String },
    #[error("regression suite refused to run: no fixtures loaded")]
    EmptyFixtureList,
    #[error("sign-class column identity failed: {message}")]
    PropertyViolation { message: String },
}

/// Which group a verdict or scan talks about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Group {
    Sn,
    An,
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Group::Sn => "sn",
            Group::An => "an",
        })
    }
}

impl FromStr for Group {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sn" => Ok(Group::Sn),
            "an" => Ok(Group::An),
            other => Err(format!("unknown group {other:?}, expected \"sn\" or \"an\"")),
        }
    }
}

/// A character value outside `{0, 1, -1}`: the proof that a class is not
/// a sign class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Name of the violating character, e.g. `(2,2)` or `(2,1)+`.
    pub character: String,
    /// Name of the class the value was taken on, e.g. `(3,1)+`.
    pub class: String,
    pub value: QuadraticValue,
}

/// What a brute-force scan concluded about one cycle type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleVerdict {
    pub partition: Partition,
    pub group: Group,
    pub is_sign: bool,
    /// Present exactly when `is_sign` is false; the first violation in
    /// canonical scan order, so reports are stable across runs.
    pub witness: Option<Witness>,
}

/// One disagreement between the closed form and the oracle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub partition: Partition,
    pub closed_form: bool,
    pub oracle: OracleVerdict,
}

/// Outcome of [`check_equivalence`].  Serialized field order is part of
/// the CLI contract; `elapsed_ms` is omitted unless timing was requested,
/// keeping untimed reports byte-identical across runs and worker counts.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub range: [u64; 2],
    pub group: Group,
    pub scanned: u64,
    pub mismatches: Vec<Mismatch>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
    pub cache: MemoStats,
}

/// Knobs for [`check_equivalence`].
#[derive(Debug, Clone, Default)]
pub struct ScanOptions {
    /// Worker threads; 0 lets the pool pick.
    pub workers: usize,
    /// Restrict the scan to one cycle type (raises the size cap to
    /// [`SINGLE_GAMMA_LIMIT`]).
    pub gamma: Option<Partition>,
    /// Scan every character even after a witness is found.
    pub exhaustive: bool,
    /// Fill in `elapsed_ms`.
    pub record_timing: bool,
}

fn sn_verdict(
    gamma: &Partition,
    exhaustive: bool,
) -> Result<(OracleVerdict, MemoStats), CharError> {
    let mut ev = ColumnEvaluator::new(gamma.clone());
    let mut witness = None;
    for beta in partitions_of(gamma.n()) {
        let v = ev.value(&beta)?;
        if !value_is_zero_or_unit(&v) && witness.is_none() {
            witness = Some(Witness {
                character: beta.bracketed(),
                class: gamma.bracketed(),
                value: QuadraticValue::from_integer(v),
            });
            if !exhaustive {
                break;
            }
        }
    }
    let verdict = OracleVerdict {
        partition: gamma.clone(),
        group: Group::Sn,
        is_sign: witness.is_none(),
        witness,
    };
    Ok((verdict, ev.stats()))
}

fn value_is_zero_or_unit(v: &BigInt) -> bool {
    v.abs() <= BigInt::from(1)
}

fn an_verdict(
    gamma: &Partition,
    exhaustive: bool,
) -> Result<(OracleVerdict, MemoStats), VerifyError> {
    if !gamma.is_even() {
        return Err(AnError::OddClass { gamma: gamma.clone() }.into());
    }
    let classes: Vec<AnClass> = if gamma.has_distinct_odd_parts() {
        vec![
            AnClass::new(gamma.clone(), Some(ClassLabel::Plus))?,
            AnClass::new(gamma.clone(), Some(ClassLabel::Minus))?,
        ]
    } else {
        vec![AnClass::new(gamma.clone(), None)?]
    };
    let rows = an_irreducibles(gamma.n())?;
    let mut ev = ColumnEvaluator::new(gamma.clone());
    let mut witness = None;
    'scan: for chi in &rows {
        for cls in &classes {
            let v = an_char_value_with(chi, cls, &mut ev)?;
            if !v.is_zero_or_unit() && witness.is_none() {
                witness = Some(Witness {
                    character: chi.name(),
                    class: cls.name(),
                    value: v,
                });
                if !exhaustive {
                    break 'scan;
                }
            }
        }
    }
    let verdict = OracleVerdict {
        partition: gamma.clone(),
        group: Group::An,
        is_sign: witness.is_none(),
        witness,
    };
    Ok((verdict, ev.stats()))
}

/// Brute-force sign-partition test for `S_n`: scans `χ^β_γ` over all
/// `β ⊢ n` in reverse-lexicographic order.
pub fn oracle_sn_sign(gamma: &Partition) -> Result<OracleVerdict, VerifyError> {
    oracle_sn_sign_scan(gamma, false)
}

/// As [`oracle_sn_sign`] but never stops early; the verdict and witness
/// are identical, the full column is just evaluated for completeness.
pub fn oracle_sn_sign_exhaustive(gamma: &Partition) -> Result<OracleVerdict, VerifyError> {
    oracle_sn_sign_scan(gamma, true)
}

fn oracle_sn_sign_scan(gamma: &Partition, exhaustive: bool) -> Result<OracleVerdict, VerifyError> {
    if gamma.n() > SINGLE_GAMMA_LIMIT {
        return Err(VerifyError::GammaTooLarge { n: gamma.n(), limit: SINGLE_GAMMA_LIMIT });
    }
    Ok(sn_verdict(gamma, exhaustive)?.0)
}

/// Brute-force `A_n`-sign-partition test: scans every irreducible of
/// `A_n` on the class(es) with cycle type γ, both labels when γ splits.
pub fn oracle_an_sign(gamma: &Partition) -> Result<OracleVerdict, VerifyError> {
    oracle_an_sign_scan(gamma, false)
}

/// As [`oracle_an_sign`] without early termination.
pub fn oracle_an_sign_exhaustive(gamma: &Partition) -> Result<OracleVerdict, VerifyError> {
    oracle_an_sign_scan(gamma, true)
}

fn oracle_an_sign_scan(gamma: &Partition, exhaustive: bool) -> Result<OracleVerdict, VerifyError> {
    if gamma.n() > SINGLE_GAMMA_LIMIT {
        return Err(VerifyError::GammaTooLarge { n: gamma.n(), limit: SINGLE_GAMMA_LIMIT });
    }
    Ok(an_verdict(gamma, exhaustive)?.0)
}

/// Compares the closed-form predicate against the brute-force oracle for
/// every cycle type in `n_lo..=n_hi` (for `An`, every even cycle type;
/// odd types name no `A_n` class).  Zero mismatches is the theorem.
///
/// Work is split by cycle type; each worker owns its evaluator, results
/// are merged in enumeration order, and counters are summed, so the
/// report does not depend on the worker count.
pub fn check_equivalence(
    n_lo: u64,
    n_hi: u64,
    group: Group,
    options: ScanOptions,
) -> Result<VerificationReport, VerifyError> {
    if n_lo < 2 {
        return Err(VerifyError::RangeStartsTooLow { lo: n_lo });
    }
    if n_lo > n_hi {
        return Err(VerifyError::RangeOrder { lo: n_lo, hi: n_hi });
    }
    let cap = if options.gamma.is_some() { SINGLE_GAMMA_LIMIT } else { SCAN_LIMIT };
    if n_hi > cap {
        return Err(VerifyError::RangeTooLarge { limit: SCAN_LIMIT, single: SINGLE_GAMMA_LIMIT });
    }
    if let Some(filter) = &options.gamma {
        if filter.n() < n_lo || filter.n() > n_hi {
            return Err(VerifyError::FilterOutsideRange {
                gamma: filter.clone(),
                n: filter.n(),
                lo: n_lo,
                hi: n_hi,
            });
        }
        if group == Group::An && !filter.is_even() {
            return Err(VerifyError::OddGammaFilter { gamma: filter.clone() });
        }
    }

    let started = std::time::Instant::now();
    let mut targets: Vec<Partition> = Vec::new();
    for n in n_lo..=n_hi {
        for gamma in partitions_of(n) {
            if group == Group::An && !gamma.is_even() {
                continue;
            }
            if let Some(filter) = &options.gamma {
                if &gamma != filter {
                    continue;
                }
            }
            targets.push(gamma);
        }
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.workers)
        .build()
        .map_err(|e| VerifyError::Pool { reason: e.to_string() })?;
    let exhaustive = options.exhaustive;
    let results: Vec<Result<(bool, OracleVerdict, MemoStats), VerifyError>> =
        pool.install(|| {
            targets
                .par_iter()
                .map(|gamma| match group {
                    Group::Sn => {
                        let closed = is_sn_sign_partition_closed_form(gamma);
                        let (verdict, stats) = sn_verdict(gamma, exhaustive)?;
                        Ok((closed, verdict, stats))
                    }
                    Group::An => {
                        let closed = is_an_sign_partition_closed_form(gamma)
                            .expect("scan range starts at n = 2");
                        let (verdict, stats) = an_verdict(gamma, exhaustive)?;
                        Ok((closed, verdict, stats))
                    }
                })
                .collect()
        });

    let mut cache = MemoStats::default();
    let mut mismatches = Vec::new();
    let scanned = results.len() as u64;
    for item in results {
        let (closed, verdict, stats) = item?;
        cache.absorb(stats);
        if closed != verdict.is_sign {
            mismatches.push(Mismatch {
                partition: verdict.partition.clone(),
                closed_form: closed,
                oracle: verdict,
            });
        }
    }
    Ok(VerificationReport {
        range: [n_lo, n_hi],
        group,
        scanned,
        mismatches,
        elapsed_ms: options
            .record_timing
            .then(|| u64::try_from(started.elapsed().as_millis()).unwrap_or(u64::MAX)),
        cache,
    })
}

/// One pinned character value.
#[derive(Debug, Clone)]
pub struct Fixture {
    pub id: String,
    pub lambda: Partition,
    pub gamma: Partition,
    pub expected: BigInt,
}

/// Outcome of re-deriving one fixture through the evaluator.
#[derive(Debug, Clone)]
pub struct FixtureOutcome {
    pub id: String,
    pub lambda: Partition,
    pub gamma: Partition,
    pub expected: BigInt,
    pub actual: BigInt,
    pub pass: bool,
}

fn fixture(id: String, lambda: &str, gamma: &str, expected: i64) -> Fixture {
    Fixture {
        id,
        lambda: lambda.parse().expect("fixture partition literal"),
        gamma: gamma.parse().expect("fixture partition literal"),
        expected: BigInt::from(expected),
    }
}

/// The pinned character values this library treats as ground truth:
/// two large spot values, the hook-column family, the escape case
/// of the self-adjoint analysis, and the zero identities behind each
/// parametrized `Sign̄` family, all at several parameter choices.
pub fn regression_fixtures() -> Vec<Fixture> {
    let mut out = Vec::new();
    out.push(fixture(
        "4443 on 54321".into(),
        "4,4,4,3",
        "5,4,3,2,1",
        -2,
    ));
    out.push(fixture(
        "15-2-1111 on 654321".into(),
        "15,2,1,1,1,1",
        "6,5,4,3,2,1",
        2,
    ));
    for m in 2..=6u64 {
        out.push(fixture(
            format!("hook column m={m}"),
            &format!("{},1,1", 2 * m - 1),
            &format!("2^{m},1"),
            -(m as i64),
        ));
    }
    // chi^{(s+2a, 3, 1^{s+2a-4})} on (s+2a-1, s, a, a-1, 1) = (-1)^s * 2
    for (a, s) in [(4u64, 9u64), (4, 10), (5, 11)] {
        let top = s + 2 * a;
        out.push(fixture(
            format!("escape case (a={a},s={s})"),
            &format!("{top},3,1^{}", top - 4),
            &format!("{},{s},{a},{},1", top - 1, a - 1),
            if s % 2 == 0 { 2 } else { -2 },
        ));
    }
    // zeros behind (a,a-1,4,1)
    for a in 7..=9u64 {
        let gamma = format!("{a},{},4,1", a - 1);
        for (i, lambda) in [
            format!("{},6,1^{}", a + 4, a - 6),
            format!("{a},4,3,1^{}", a - 3),
            format!("{},{},3", a + 2, a - 1),
            format!("{},4,3,1^{}", a + 2, a - 5),
        ]
        .into_iter()
        .enumerate()
        {
            out.push(fixture(
                format!("(a,a-1,4,1) zero {} at a={a}", i + 1),
                &lambda,
                &gamma,
                0,
            ));
        }
    }
    // zeros behind (a,a-3,2,1,1)
    for a in 8..=10u64 {
        let gamma = format!("{a},{},2,1,1", a - 3);
        for (i, lambda) in [
            format!("{},{},1,1", a + 1, a - 2),
            format!("{},5,1^{}", a + 1, a - 5),
        ]
        .into_iter()
        .enumerate()
        {
            out.push(fixture(
                format!("(a,a-3,2,1,1) zero {} at a={a}", i + 1),
                &lambda,
                &gamma,
                0,
            ));
        }
    }
    // zeros behind (a,a-5,3,2,1)
    for a in 12..=13u64 {
        let gamma = format!("{a},{},3,2,1", a - 5);
        for (i, lambda) in [
            format!("{},{},1^4", a + 1, a - 4),
            format!("{},7,1^{}", a + 1, a - 7),
        ]
        .into_iter()
        .enumerate()
        {
            out.push(fixture(
                format!("(a,a-5,3,2,1) zero {} at a={a}", i + 1),
                &lambda,
                &gamma,
                0,
            ));
        }
    }
    // zeros behind (a,b,a-b+1) at (a,b) = (6,4)
    out.push(fixture("(a,b,a-b+1) zero 1 at (6,4)".into(), "7,5,1", "6,4,3", 0));
    out.push(fixture("(a,b,a-b+1) zero 2 at (6,4)".into(), "7,4,1,1", "6,4,3", 0));
    // zeros behind (a,b,a-b-1,1) at (a,b) = (7,5)
    out.push(fixture("(a,b,a-b-1,1) zero 1 at (7,5)".into(), "7,7", "7,5,1,1", 0));
    out.push(fixture(
        "(a,b,a-b-1,1) zero 2 at (7,5)".into(),
        "7,3,1,1,1,1",
        "7,5,1,1",
        0,
    ));
    out
}

/// Re-derives every fixture and reports each comparison.  Refuses to pass
/// on an empty fixture list.
pub fn regression_suite() -> Result<Vec<FixtureOutcome>, VerifyError> {
    let fixtures = regression_fixtures();
    if fixtures.is_empty() {
        return Err(VerifyError::EmptyFixtureList);
    }
    let mut out = Vec::with_capacity(fixtures.len());
    for f in fixtures {
        let actual = mn_value(&f.lambda, &f.gamma)?;
        let pass = actual == f.expected;
        out.push(FixtureOutcome {
            id: f.id,
            lambda: f.lambda,
            gamma: f.gamma,
            expected: f.expected,
            actual,
            pass,
        });
    }
    Ok(out)
}

/// The sign-class column identity: on a sign class `C`, the rows split by their
/// value at `C` into a `+1` set and a `-1` set, and for every other class
/// `g` the two sets have equal column sums.  Verifies this exactly for
/// every sign class of `S_n` or `A_n`, `2 ≤ n ≤ n_max`; returns the
/// number of `(C, g)` pairs checked.
pub fn check_theorem2_property(n_max: u64, group: Group) -> Result<u64, VerifyError> {
    let mut checks = 0u64;
    for n in 2..=n_max {
        match group {
            Group::Sn => {
                let table = sn_character_table(n)?;
                let class_count = table.cols.len();
                for c in 0..class_count {
                    if !(0..table.rows.len())
                        .all(|i| value_is_zero_or_unit(&table.values[i][c]))
                    {
                        continue;
                    }
                    for g in 0..class_count {
                        if g == c {
                            continue;
                        }
                        let mut sum = BigInt::zero();
                        for i in 0..table.rows.len() {
                            sum += &table.values[i][c] * &table.values[i][g];
                        }
                        if !sum.is_zero() {
                            return Err(VerifyError::PropertyViolation {
                                message: format!(
                                    "S_{n}: sign class {} vs class {}: net sum {sum}",
                                    table.cols[c], table.cols[g]
                                ),
                            });
                        }
                        checks += 1;
                    }
                }
            }
            Group::An => {
                let table = an_character_table(n)?;
                let class_count = table.cols.len();
                for c in 0..class_count {
                    if !(0..table.rows.len()).all(|i| table.values[i][c].is_zero_or_unit()) {
                        continue;
                    }
                    for g in 0..class_count {
                        if g == c {
                            continue;
                        }
                        let mut sum = QuadraticValue::from_integer(0);
                        for i in 0..table.rows.len() {
                            let sign = table.values[i][c]
                                .as_integer()
                                .expect("sign-class values are rational");
                            let term = if sign.is_positive() {
                                table.values[i][g].clone()
                            } else if sign.is_negative() {
                                table.values[i][g].negate()
                            } else {
                                continue;
                            };
                            sum = sum
                                .checked_add(&term)
                                .expect("one radicand per A_n column");
                        }
                        if sum != QuadraticValue::from_integer(0) {
                            return Err(VerifyError::PropertyViolation {
                                message: format!(
                                    "A_{n}: sign class {} vs class {}: net sum {sum}",
                                    table.cols[c].name(),
                                    table.cols[g].name()
                                ),
                            });
                        }
                        checks += 1;
                    }
                }
            }
        }
    }
    Ok(checks)
}
