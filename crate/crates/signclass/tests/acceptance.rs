//! Acceptance suite: one test per shipping criterion, each printing a
//! single summary line (visible under `--nocapture`; the per-test ok/FAIL
//! line carries the same verdict either way).

use num_bigint::BigInt;
use num_traits::Zero;
use signclass::{
    an_char_value, an_character_table, check_equivalence, check_theorem2_property, classify,
    epsilon, in_sign_bar_set, in_sign_set, is_an_sign_partition_closed_form,
    is_sn_sign_partition_closed_form, oracle_an_sign, oracle_sn_sign, partitions_of,
    regression_suite, sn_character_table, AnClass, AnIrreducible, ClassLabel, ColumnEvaluator,
    Group, Partition, QuadAccum, QuadraticValue, ScanOptions,
};
use std::time::Instant;

fn p(parts: &[u64]) -> Partition {
    Partition::new(parts).unwrap()
}

#[test]
fn equivalence_scan_an_2_to_18_has_zero_mismatches() {
    let report = check_equivalence(2, 18, Group::An, ScanOptions::default()).unwrap();
    assert!(report.mismatches.is_empty(), "mismatches: {:?}", report.mismatches);
    assert!(report.scanned > 800, "scanned only {} cycle types", report.scanned);
    println!(
        "PASS  A_n equivalence 2..18: {} even cycle types, 0 mismatches",
        report.scanned
    );
}

#[test]
fn equivalence_scan_sn_2_to_18_has_zero_mismatches() {
    let report = check_equivalence(2, 18, Group::Sn, ScanOptions::default()).unwrap();
    assert!(report.mismatches.is_empty(), "mismatches: {:?}", report.mismatches);
    assert!(report.scanned > 1500, "scanned only {} cycle types", report.scanned);
    println!("PASS  S_n equivalence 2..18: {} cycle types, 0 mismatches", report.scanned);
}

#[test]
fn headline_examples_reproduce() {
    // (3) is a sign partition but not an A_n-sign partition; (2,2) is the
    // reverse; the closed form and the oracle agree on all four verdicts
    let three = p(&[3]);
    let two_two = p(&[2, 2]);

    assert!(is_sn_sign_partition_closed_form(&three));
    assert!(!is_an_sign_partition_closed_form(&three).unwrap());
    assert!(!is_sn_sign_partition_closed_form(&two_two));
    assert!(is_an_sign_partition_closed_form(&two_two).unwrap());

    assert!(oracle_sn_sign(&three).unwrap().is_sign);
    assert!(!oracle_an_sign(&three).unwrap().is_sign);
    assert!(!oracle_sn_sign(&two_two).unwrap().is_sign);
    assert!(oracle_an_sign(&two_two).unwrap().is_sign);

    let bundle = classify(&two_two);
    assert!(bundle.an_sign_partition && !bundle.sn_sign_partition);
    println!("PASS  headline examples: (3) and (2,2) verdicts agree on both routes");
}

#[test]
fn regression_fixtures_all_reproduce() {
    let outcomes = regression_suite().unwrap();
    assert!(outcomes.len() >= 20, "only {} fixtures", outcomes.len());
    let failures: Vec<_> = outcomes.iter().filter(|o| !o.pass).collect();
    assert!(failures.is_empty(), "failing fixtures: {failures:?}");
    println!("PASS  regression fixtures: {}/{} reproduce exactly", outcomes.len(), outcomes.len());
}

#[test]
fn split_values_match_orthogonality_roots_up_to_n12() {
    let mut pairs = 0u64;
    for n in 2..=12 {
        let table = an_character_table(n).unwrap();
        let sizes: Vec<BigInt> = table.cols.iter().map(|c| BigInt::from(c.size())).collect();
        let order: BigInt = {
            let mut f = BigInt::from(1);
            for k in 2..=n {
                f *= k;
            }
            f / 2
        };
        for lambda in partitions_of(n).filter(Partition::is_self_conjugate) {
            let row = |label| {
                table
                    .rows
                    .iter()
                    .position(|r| {
                        matches!(r, AnIrreducible::Split { lambda: l, label: b } if *l == lambda && *b == label)
                    })
                    .unwrap()
            };
            let (plus, minus) = (row(ClassLabel::Plus), row(ClassLabel::Minus));

            // the row pair is exactly orthonormal (scaled by |A_n|) ...
            for (i, k, expected) in [
                (plus, plus, order.clone()),
                (minus, minus, order.clone()),
                (plus, minus, BigInt::zero()),
            ] {
                let mut accum = QuadAccum::new();
                for ((size, v), w) in sizes.iter().zip(&table.values[i]).zip(&table.values[k]) {
                    accum.add_product(size, v, w);
                }
                assert!(accum.equals_integer(&expected), "orthogonality fails for {lambda}");
            }

            // ... which pins the diagonal-class cells to the two surd roots
            let eps = epsilon(&lambda).unwrap();
            let hooks = lambda.diagonal_hooks();
            let radicand =
                i64::from(eps) * hooks.iter().map(|&h| i64::try_from(h).unwrap()).product::<i64>();
            let root = |branch: i64| {
                QuadraticValue::new(BigInt::from(eps), BigInt::from(branch), radicand)
            };
            for (chi_label, class_label, branch) in [
                (ClassLabel::Plus, ClassLabel::Plus, 1),
                (ClassLabel::Plus, ClassLabel::Minus, -1),
                (ClassLabel::Minus, ClassLabel::Plus, -1),
                (ClassLabel::Minus, ClassLabel::Minus, 1),
            ] {
                let chi = AnIrreducible::Split { lambda: lambda.clone(), label: chi_label };
                let cls = AnClass::new(p(hooks.as_slice()), Some(class_label)).unwrap();
                assert_eq!(an_char_value(&chi, &cls).unwrap(), root(branch), "lambda = {lambda}");
            }
            pairs += 1;
        }
    }

    // the two classical instances, written out
    let omega = an_char_value(
        &AnIrreducible::Split { lambda: p(&[2, 2]), label: ClassLabel::Plus },
        &AnClass::new(p(&[3, 1]), Some(ClassLabel::Plus)).unwrap(),
    )
    .unwrap();
    assert_eq!(omega, QuadraticValue::new(BigInt::from(-1), BigInt::from(1), -3));
    let golden = an_char_value(
        &AnIrreducible::Split { lambda: p(&[3, 1, 1]), label: ClassLabel::Plus },
        &AnClass::new(p(&[5]), Some(ClassLabel::Plus)).unwrap(),
    )
    .unwrap();
    assert_eq!(golden, QuadraticValue::new(BigInt::from(1), BigInt::from(1), 5));
    println!("PASS  split-value roots: {pairs} self-conjugate characters up to n = 12");
}

#[test]
fn family_boundary_a11_is_rejected_at_n23() {
    let started = Instant::now();
    let gamma = p(&[11, 6, 3, 2, 1]);

    // the a,a-5,3,2,1 family skips a = 11 even though a = 9, 10, 12 are in
    let (in_bar, family) = in_sign_bar_set(&gamma);
    assert!(!in_bar && family.is_none());
    let (in_sign, _) = in_sign_set(&gamma);
    assert!(!in_sign);
    assert!(!is_an_sign_partition_closed_form(&gamma).unwrap());
    assert!((9..=10).chain(12..=14).all(|a| {
        in_sign_bar_set(&p(&[a, a - 5, 3, 2, 1])).1 == Some("a,a-5,3,2,1")
    }));

    let verdict = oracle_an_sign(&gamma).unwrap();
    assert!(!verdict.is_sign, "oracle must reject (11,6,3,2,1)");
    let witness = verdict.witness.unwrap();
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs() < 120, "took {elapsed:?}, budget is two minutes");
    println!(
        "PASS  a=11 boundary at n=23: rejected in {:?} (witness {} on {})",
        elapsed, witness.character, witness.class
    );
}

#[test]
fn property_suites_hold() {
    // column orthogonality, exact, n <= 12
    for n in 1..=12 {
        let table = sn_character_table(n).unwrap();
        for (j, gamma) in table.cols.iter().enumerate() {
            for k in j..table.cols.len() {
                let mut sum = BigInt::zero();
                for row in &table.values {
                    sum += &row[j] * &row[k];
                }
                let expected = if j == k {
                    BigInt::from(gamma.centralizer_order())
                } else {
                    BigInt::zero()
                };
                assert_eq!(sum, expected, "column orthogonality fails at n = {n}");
            }
        }
    }

    // conjugate twist, n <= 12
    for n in 1..=12 {
        let table = sn_character_table(n).unwrap();
        for (i, lambda) in table.rows.iter().enumerate() {
            let conj = lambda.conjugate();
            let i_conj = table.rows.iter().position(|r| *r == conj).unwrap();
            for (j, gamma) in table.cols.iter().enumerate() {
                let twisted = if gamma.is_even() {
                    table.values[i][j].clone()
                } else {
                    -&table.values[i][j]
                };
                assert_eq!(table.values[i_conj][j], twisted, "twist fails at n = {n}");
            }
        }
    }

    // halving integrality, n <= 14
    for n in 2..=14 {
        let self_conjugate: Vec<Partition> =
            partitions_of(n).filter(Partition::is_self_conjugate).collect();
        for gamma in partitions_of(n).filter(Partition::is_even) {
            let mut ev = ColumnEvaluator::new(gamma.clone());
            for lambda in &self_conjugate {
                let value = ev.value(lambda).unwrap();
                if gamma.parts() == lambda.diagonal_hooks().as_slice() {
                    assert_eq!(value, BigInt::from(epsilon(lambda).unwrap()));
                } else {
                    assert!((&value % 2i32).is_zero(), "halving fails at n = {n}");
                }
            }
        }
    }

    // difference-character column identity on every sign class, n <= 10
    let sn_checks = check_theorem2_property(10, Group::Sn).unwrap();
    let an_checks = check_theorem2_property(10, Group::An).unwrap();
    assert!(sn_checks > 0 && an_checks > 0);
    println!(
        "PASS  property suites: orthogonality/twist (n<=12), halving (n<=14), \
         column identity ({sn_checks} S_n + {an_checks} A_n pairs, n<=10)"
    );
}

#[test]
fn verify_reports_are_identical_across_worker_counts() {
    for group in [Group::Sn, Group::An] {
        let mut rendered: Vec<String> = Vec::new();
        for workers in [1usize, 4, 8] {
            let options = ScanOptions { workers, ..ScanOptions::default() };
            let report = check_equivalence(2, 18, group, options).unwrap();
            rendered.push(serde_json::to_string(&report).unwrap());
        }
        assert_eq!(rendered[0], rendered[1], "{group}: 1 vs 4 workers");
        assert_eq!(rendered[0], rendered[2], "{group}: 1 vs 8 workers");
    }
    println!("PASS  determinism: reports byte-identical across 1/4/8 workers, both groups");
}
