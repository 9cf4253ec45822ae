//! Exact character computations for the symmetric and alternating groups,
//! organised around one question: which conjugacy classes are *sign classes*,
//! taking only the values 0, 1 and -1 across the irreducible characters?
//!
//! The crate answers that question twice, by independent routes:
//!
//! - a closed-form classification of sign conjugacy classes
//!   ([`classification`]), decided directly from the indexing partition, and
//! - a brute-force oracle ([`verification`]) that evaluates full character
//!   columns with the Murnaghan-Nakayama rule ([`sn_chars`], [`an_chars`])
//!   and inspects every value.
//!
//! [`verification::check_equivalence`] runs both routes over a range of
//! degrees and reports any disagreement.  All arithmetic is exact: integer
//! character values use arbitrary precision, and the irrational values on
//! split classes of `A_n` are represented as quadratic surds.
//!
//! Modules:
//!
//! - [`partition`]: partitions, hooks, beta-sets, cores and quotients
//! - [`sn_chars`]: Murnaghan-Nakayama evaluation and `S_n` tables
//! - [`an_chars`]: `A_n` classes, irreducibles, and surd-valued characters
//! - [`classification`]: the closed-form sign-class predicates
//! - [`verification`]: oracles, equivalence scans, regression fixtures
//! - [`cache`]: persistent storage for computed character columns

pub mod an_chars;
pub mod cache;
pub mod classification;
pub mod partition;
pub mod sn_chars;
pub mod verification;

pub use an_chars::{
    an_char_value, an_char_value_with, an_character_table, an_character_table_limited,
    an_classes, an_irreducibles, epsilon, AnClass, AnError, AnIrreducible, AnTable, ClassLabel,
    QuadAccum, QuadraticValue,
};
pub use classification::{
    classify, in_sign_bar_set, in_sign_set, is_an_sign_partition_closed_form,
    is_sn_sign_partition_closed_form, ClassificationResult, ClassifyError,
};
pub use sn_chars::{
    conjugate_twist_check, mn_value, sn_character_table, sn_character_table_limited, CharError,
    ColumnEvaluator, MemoStats, SnTable, TABLE_LIMIT,
};
pub use partition::{
    partitions_of, BetaSet, CoreQuotient, Parity, Partition, PartitionError, RimHookRemoval,
};
pub use verification::{
    check_equivalence, check_theorem2_property, oracle_an_sign, oracle_an_sign_exhaustive,
    oracle_sn_sign, oracle_sn_sign_exhaustive, regression_fixtures, regression_suite, Fixture,
    FixtureOutcome, Group, Mismatch, OracleVerdict, ScanOptions, VerificationReport, VerifyError,
    Witness, SCAN_LIMIT, SINGLE_GAMMA_LIMIT,
};
