//! Cross-checks between independently computed quantities: orthogonality
//! relations, the conjugate twist, halving integrality, the restriction
//! sum rule, the sign-class column identity, the split-class direction of
//! the classification, and memoization transparency.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use signclass::{
    an_char_value, an_character_table, check_theorem2_property, epsilon, mn_value, oracle_an_sign,
    partitions_of, sn_character_table, AnClass, AnIrreducible, ClassLabel, ColumnEvaluator, Group,
    Partition, QuadAccum,
};

fn group_order_halved(n: u64) -> BigInt {
    let mut f = BigInt::from(1);
    for k in 2..=n {
        f *= k;
    }
    f / 2
}

#[test]
fn sn_columns_are_orthogonal_up_to_n12() {
    for n in 1..=12 {
        let table = sn_character_table(n).unwrap();
        for (j, gamma) in table.cols.iter().enumerate() {
            for (k, delta) in table.cols.iter().enumerate().skip(j) {
                let mut sum = BigInt::zero();
                for row in &table.values {
                    sum += &row[j] * &row[k];
                }
                let expected = if j == k {
                    BigInt::from(gamma.centralizer_order())
                } else {
                    BigInt::zero()
                };
                assert_eq!(sum, expected, "n = {n}, gamma = {gamma}, delta = {delta}");
            }
        }
    }
}

#[test]
fn conjugation_twists_rows_by_the_class_sign_up_to_n12() {
    for n in 1..=12 {
        let table = sn_character_table(n).unwrap();
        let row_index = |lambda: &Partition| {
            table.rows.iter().position(|r| r == lambda).expect("conjugate row present")
        };
        for (i, lambda) in table.rows.iter().enumerate() {
            let i_conj = row_index(&lambda.conjugate());
            for (j, gamma) in table.cols.iter().enumerate() {
                let twisted = if gamma.is_even() {
                    table.values[i][j].clone()
                } else {
                    -&table.values[i][j]
                };
                assert_eq!(table.values[i_conj][j], twisted, "lambda = {lambda}, gamma = {gamma}");
            }
        }
    }
}

#[test]
fn self_conjugate_values_on_even_classes_halve_up_to_n14() {
    for n in 2..=14 {
        let self_conjugate: Vec<Partition> =
            partitions_of(n).filter(Partition::is_self_conjugate).collect();
        for gamma in partitions_of(n).filter(Partition::is_even) {
            let mut ev = ColumnEvaluator::new(gamma.clone());
            for lambda in &self_conjugate {
                let value = ev.value(lambda).unwrap();
                if gamma.parts() == lambda.diagonal_hooks().as_slice() {
                    // on the diagonal-hook class the whole value is the
                    // sign epsilon itself, the one odd value in the row
                    assert_eq!(value, BigInt::from(epsilon(lambda).unwrap()));
                } else {
                    assert!(
                        (&value % 2i32).is_zero(),
                        "chi^{lambda} on {gamma} = {value} is odd"
                    );
                }
            }
        }
    }
}

#[test]
fn an_rows_are_orthogonal_up_to_n10() {
    for n in 2..=10 {
        let table = an_character_table(n).unwrap();
        let sizes: Vec<BigInt> = table.cols.iter().map(|c| BigInt::from(c.size())).collect();
        let order = group_order_halved(n);
        for i in 0..table.rows.len() {
            for k in i..table.rows.len() {
                let mut accum = QuadAccum::new();
                for ((size, v), w) in sizes.iter().zip(&table.values[i]).zip(&table.values[k]) {
                    accum.add_product(size, v, w);
                }
                let expected = if i == k { order.clone() } else { BigInt::zero() };
                assert!(
                    accum.equals_integer(&expected),
                    "rows {} and {} of A_{n}",
                    table.rows[i].name(),
                    table.rows[k].name()
                );
            }
        }
    }
}

#[test]
fn split_pairs_sum_to_the_restricted_character_up_to_n12() {
    for n in 2..=12 {
        let table = an_character_table(n).unwrap();
        for lambda in partitions_of(n).filter(Partition::is_self_conjugate) {
            let row = |label| {
                table
                    .rows
                    .iter()
                    .position(|r| {
                        matches!(r, AnIrreducible::Split { lambda: l, label: b } if *l == lambda && *b == label)
                    })
                    .expect("both split rows present")
            };
            let (plus, minus) = (row(ClassLabel::Plus), row(ClassLabel::Minus));
            for (j, cls) in table.cols.iter().enumerate() {
                let sum = table.values[plus][j]
                    .checked_add(&table.values[minus][j])
                    .expect("conjugate surds share one radicand")
                    .as_integer()
                    .expect("restriction sums are rational");
                assert_eq!(sum, mn_value(&lambda, cls.gamma()).unwrap(), "lambda = {lambda}");
            }
        }
    }
}

#[test]
fn sign_class_column_identity_holds_up_to_n10() {
    let sn_checks = check_theorem2_property(10, Group::Sn).unwrap();
    let an_checks = check_theorem2_property(10, Group::An).unwrap();
    assert!(sn_checks > 1000, "S_n identity exercised {sn_checks} pairs");
    assert!(an_checks > 100, "A_n identity exercised {an_checks} pairs");
}

#[test]
fn split_classes_always_carry_a_violation_up_to_n13() {
    // one direction of the A_n classification: a class that splits is
    // never a sign class, and the split character built on its own parts
    // already witnesses that
    for n in 2..=13 {
        for gamma in partitions_of(n).filter(Partition::has_distinct_odd_parts) {
            let verdict = oracle_an_sign(&gamma).unwrap();
            assert!(!verdict.is_sign, "split class {gamma} cannot be sign");
            assert!(verdict.witness.is_some());

            let lambda = Partition::from_diagonal_hooks(gamma.parts()).unwrap();
            let mut violated = false;
            for chi_label in [ClassLabel::Plus, ClassLabel::Minus] {
                let chi = AnIrreducible::Split { lambda: lambda.clone(), label: chi_label };
                for class_label in [ClassLabel::Plus, ClassLabel::Minus] {
                    let cls = AnClass::new(gamma.clone(), Some(class_label)).unwrap();
                    if !an_char_value(&chi, &cls).unwrap().is_zero_or_unit() {
                        violated = true;
                    }
                }
            }
            assert!(violated, "split character on {gamma} stays in zero/unit values");
        }
    }
}

#[test]
fn memoization_never_changes_a_value() {
    let mut rng = StdRng::seed_from_u64(0x5eed_c0de);
    for _ in 0..150 {
        let n = rng.gen_range(5..=12);
        let all: Vec<Partition> = partitions_of(n).collect();
        let lambda = &all[rng.gen_range(0..all.len())];
        let gamma = &all[rng.gen_range(0..all.len())];
        let memoized = ColumnEvaluator::new(gamma.clone()).value(lambda).unwrap();
        let plain = ColumnEvaluator::without_memo(gamma.clone()).value(lambda).unwrap();
        assert_eq!(memoized, plain, "lambda = {lambda}, gamma = {gamma}");
    }
}
