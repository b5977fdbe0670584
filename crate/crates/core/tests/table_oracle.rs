mod common;

use num_bigint::{BigInt, BigUint, Sign};
use ree_core::ree_data::{character_degree_set, group_order, ReeInstance, ROW_COUNT};

fn to_int(x: &BigUint) -> BigInt {
    BigInt::from_biguint(Sign::Plus, x.clone())
}

#[test]
fn rows_match_integer_oracle() {
    for m in 1..=8 {
        let inst = ReeInstance::new(m).unwrap();
        let oracle = common::table(m);
        assert_eq!(oracle.len(), ROW_COUNT);
        assert_eq!(inst.rows().len(), ROW_COUNT);
        for (i, (r, (d, k))) in inst.rows().iter().zip(&oracle).enumerate() {
            assert_eq!(to_int(&r.degree), *d, "m={m} row {} degree", i + 1);
            assert_eq!(to_int(&r.multiplicity), *k, "m={m} row {} multiplicity", i + 1);
        }
    }
}

#[test]
fn oracle_square_sum_is_order() {
    for m in 1..=8 {
        let v = common::Vals::new(m);
        let sum: BigInt = common::table(m).iter().map(|(d, k)| k * d * d).sum();
        assert_eq!(sum, v.order(), "m={m}");
        assert_eq!(to_int(&group_order(m)), v.order());
    }
}

#[test]
fn multiplicities_nonnegative() {
    for m in 1..=8 {
        assert!(common::table(m).iter().all(|(_, k)| *k >= BigInt::from(0)));
    }
}

#[test]
fn degree_set_matches() {
    for m in 1..=8 {
        let ours: Vec<BigInt> = character_degree_set(m).unwrap().iter().map(to_int).collect();
        assert_eq!(ours, common::degree_set(m), "m={m}");
    }
}

#[test]
fn zero_rows_at_m1() {
    let zero: Vec<usize> =
        common::table(1).iter().enumerate().filter(|(_, (_, k))| *k == BigInt::from(0)).map(|(i, _)| i + 1).collect();
    assert_eq!(zero, vec![30, 39, 43]);
    assert_eq!(common::degree_set(1).len(), 40);
}

#[test]
fn zero_multiplicity_only_at_m1() {
    for m in 2..=8 {
        assert!(common::table(m).iter().all(|(_, k)| *k > BigInt::from(0)), "m={m}");
    }
}
