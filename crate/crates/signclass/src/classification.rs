//! Closed-form membership tests for the two partition families `Sign` and
//! `Sign̄`, and the resulting sign-partition decisions for `S_n` and `A_n`.
//!
//! A cycle type γ is a *sign partition* of `S_n` when every irreducible
//! character of `S_n` takes a value in `{0, 1, -1}` on it, and an
//! *`A_n`-sign partition* when the analogous statement holds for `A_n`
//! (over all classes with cycle type γ, both halves if γ splits).  The
//! closed forms are:
//!
//! * `S_n`: γ is a sign partition iff γ ∈ Sign.
//! * `A_n` (n ≥ 2): γ is an `A_n`-sign partition iff
//!   γ ∈ Sign ∪ Sign̄, γ is even, and γ does not consist of pairwise
//!   distinct odd parts.
//!
//! Everything here is O(r) in the number of parts and entirely
//! independent of the character computations in the sibling modules; the
//! `verification` module checks the two routes against each other.

use crate::partition::Partition;
use serde::Serialize;
use thiserror::Error;

/// Errors from the closed-form `A_n` decision.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("the A_n decision is stated for n >= 2, got n = {n}")]
    DegreeTooSmall { n: u64 },
}

/// Membership of γ in `Sign`: true iff some `s`, `0 ≤ s ≤ r`, has
/// `γ_i > γ_{i+1} + … + γ_r` for all `i ≤ s` and a tail
/// `(γ_{s+1}, …, γ_r)` among
///
/// ```text
/// (), (1,1), (3,2,1,1), (5,3,2,1),
/// (a,a-1,1) a≥2,  (a,a-1,2,1) a≥4,  (a,a-1,3,1) a≥5.
/// ```
///
/// Returns the smallest valid `s` as witness.
pub fn in_sign_set(gamma: &Partition) -> (bool, Option<usize>) {
    let parts = gamma.parts();
    let r = parts.len();
    // suffix[i] = parts[i] + ... + parts[r-1]
    let mut suffix = vec![0u128; r + 1];
    for i in (0..r).rev() {
        suffix[i] = suffix[i + 1] + parts[i] as u128;
    }
    for s in 0..=r {
        // dominance must hold at the newly exposed index before the tail
        // at s is even considered; once it fails it fails for larger s too
        if s > 0 && parts[s - 1] as u128 <= suffix[s] {
            return (false, None);
        }
        if is_sign_tail(&parts[s..]) {
            return (true, Some(s));
        }
    }
    (false, None)
}

fn is_sign_tail(tail: &[u64]) -> bool {
    match tail {
        [] | [1, 1] | [3, 2, 1, 1] | [5, 3, 2, 1] => true,
        [a, b, 1] => *a >= 2 && *b + 1 == *a,
        [a, b, 2, 1] => *a >= 4 && *b + 1 == *a,
        [a, b, 3, 1] => *a >= 5 && *b + 1 == *a,
        _ => false,
    }
}

/// A branch of `Sign̄`: the verbatim branch name (so reports can say which
/// case fired) and its membership predicate on the sorted parts.
type SignBarFamily = (&'static str, fn(&[u64]) -> bool);

/// The branches of `Sign̄`, in definition order.
const SIGN_BAR_FAMILIES: [SignBarFamily; 9] = [
    ("1,1,1", |p| p == [1, 1, 1]),
    ("2,2", |p| p == [2, 2]),
    ("2,2,1", |p| p == [2, 2, 1]),
    ("5,4,3,2,1", |p| p == [5, 4, 3, 2, 1]),
    ("a,a-1,4,1", |p| matches!(p, [a, b, 4, 1] if *b + 1 == *a && *a >= 6)),
    ("a,a-3,2,1,1", |p| {
        matches!(p, [a, b, 2, 1, 1] if *b + 3 == *a && (*a == 6 || *a >= 8))
    }),
    // a=11 is deliberately excluded from this family (9<=a<=10 or a>=12);
    // the brute-force oracle confirms the exclusion at n=23
    ("a,a-5,3,2,1", |p| {
        matches!(p, [a, b, 3, 2, 1] if *b + 5 == *a && ((9..=10).contains(a) || *a >= 12))
    }),
    ("a,b,a-b+1", |p| {
        matches!(p, [a, b, c] if *a > *b && *a + 2 <= 2 * *b && *a - *b + 1 == *c)
    }),
    ("a,b,a-b-1,1", |p| {
        matches!(p, [a, b, c, 1] if *a >= *b + 2 && *a <= 2 * *b && *a - *b == *c + 1)
    }),
];

/// Membership of γ in `Sign̄`, with the name of the first matching branch.
pub fn in_sign_bar_set(gamma: &Partition) -> (bool, Option<&'static str>) {
    let parts = gamma.parts();
    for (tag, matches_branch) in SIGN_BAR_FAMILIES {
        if matches_branch(parts) {
            return (true, Some(tag));
        }
    }
    (false, None)
}

/// Closed form for `S_n`: γ is a sign partition iff γ ∈ Sign.
pub fn is_sn_sign_partition_closed_form(gamma: &Partition) -> bool {
    in_sign_set(gamma).0
}

/// Closed form for `A_n` (n ≥ 2): γ ∈ Sign ∪ Sign̄, γ even, and γ not
/// consisting of pairwise distinct odd parts.
pub fn is_an_sign_partition_closed_form(gamma: &Partition) -> Result<bool, ClassifyError> {
    if gamma.n() < 2 {
        return Err(ClassifyError::DegreeTooSmall { n: gamma.n() });
    }
    Ok(an_sign_formula(gamma))
}

fn an_sign_formula(gamma: &Partition) -> bool {
    (in_sign_set(gamma).0 || in_sign_bar_set(gamma).0)
        && gamma.is_even()
        && !gamma.has_distinct_odd_parts()
}

/// Everything the closed forms can say about one cycle type.
///
/// Serialized field order is fixed; it is part of the CLI contract.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationResult {
    pub partition: Partition,
    pub in_sign: bool,
    pub sign_split_index: Option<usize>,
    pub in_sign_bar: bool,
    pub sign_bar_family: Option<&'static str>,
    pub is_even: bool,
    pub distinct_odd: bool,
    pub sn_sign_partition: bool,
    pub an_sign_partition: bool,
}

/// Runs every predicate on γ.  Defined for all γ, including n < 2 where
/// the `A_n` field reports the raw formula (the theorem itself is stated
/// for n ≥ 2; [`is_an_sign_partition_closed_form`] enforces that scope).
pub fn classify(gamma: &Partition) -> ClassificationResult {
    let (in_sign, sign_split_index) = in_sign_set(gamma);
    let (in_sign_bar, sign_bar_family) = in_sign_bar_set(gamma);
    ClassificationResult {
        partition: gamma.clone(),
        in_sign,
        sign_split_index,
        in_sign_bar,
        sign_bar_family,
        is_even: gamma.is_even(),
        distinct_odd: gamma.has_distinct_odd_parts(),
        sn_sign_partition: in_sign,
        an_sign_partition: an_sign_formula(gamma),
    }
}
