use std::collections::BTreeSet;

use ree_core::elimination::{
    check_step1_bounds, check_step2, check_step3, check_step5, check_sz8_diophantine, eliminate_alternating,
    eliminate_lie_type, revalidate,
};
use ree_core::ree_data::{LieFamily, Parameters, ReeInstance, CD_SZ8, SZ8_ORDER};

/// Every `(n, b)` with `order2exp = 12(2m+1)`, by a plain double loop.
fn naive_solutions(family: LieFamily, m: u64) -> BTreeSet<(u64, u64)> {
    let target = 12 * (2 * m + 1);
    let Parameters::RankAndField { min_n } = family.parameters() else { unreachable!() };
    let mut out = BTreeSet::new();
    for n in min_n..=target {
        for b in 1..=target {
            if family.order2exp(n, b) == target {
                out.insert((n, b));
            }
        }
    }
    out
}

#[test]
fn rank_solutions_match_double_loop() {
    for m in 1..=6u32 {
        let inst = ReeInstance::new(m).unwrap();
        let cands = eliminate_lie_type(&inst).unwrap();
        for family in LieFamily::ALL {
            if !matches!(family.parameters(), Parameters::RankAndField { .. }) {
                continue;
            }
            let swept: BTreeSet<(u64, u64)> =
                cands.iter().filter(|c| c.family == family).filter_map(|c| Some((c.n?, c.b?))).collect();
            assert_eq!(swept, naive_solutions(family, u64::from(m)), "m={m} {family:?}");
        }
    }
}

#[test]
fn single_survivor_everywhere() {
    for m in 1..=8u32 {
        let inst = ReeInstance::new(m).unwrap();
        let cands = eliminate_lie_type(&inst).unwrap();
        let surv: Vec<_> = cands.iter().filter(|c| c.survives()).collect();
        assert_eq!(surv.len(), 1);
        assert_eq!(surv[0].family, LieFamily::ReeF4);
        assert_eq!(surv[0].n, Some(u64::from(m)));
        assert!(cands.iter().all(|c| revalidate(&inst, c)), "m={m}");
    }
}

#[test]
fn sz8_by_hand() {
    assert_eq!(SZ8_ORDER, 64 * 65 * 7);
    let sols: Vec<(u64, u64)> = (0..=SZ8_ORDER / 196)
        .flat_map(|a| (0..=SZ8_ORDER / 4096).map(move |b| (a, b)))
        .filter(|&(a, b)| 196 * a + 4096 * b == SZ8_ORDER)
        .collect();
    assert!(sols.is_empty());
    let reduced = (0..=65u64).flat_map(|a| (1..=1u64).map(move |b| (a, b))).any(|(a, b)| 7 * a + 64 * b == 65);
    assert!(!reduced);
    assert!(CD_SZ8.contains(&14) && CD_SZ8.contains(&64));
    assert!(check_sz8_diophantine().is_pass());
}

#[test]
fn steps_one_and_five() {
    for m in 1..=16 {
        let inst = ReeInstance::new(m).unwrap();
        assert!(check_step1_bounds(&inst).is_pass(), "m={m}");
        assert!(check_step5(m).is_pass(), "m={m}");
    }
}

#[test]
fn step1_m1_values() {
    // (q^4 - 1)(q^6 + 1) against q^10 with q^2 = 8.
    assert_eq!(63 * 513, 32319);
    let r = check_step1_bounds(&ReeInstance::new(1).unwrap());
    let leaf = r.find("step1.odd-part-below-q10").unwrap();
    assert_eq!(leaf.witness["lhs"], "32319");
    assert_eq!(leaf.witness["rhs"], "32768");
}

#[test]
fn alternating_small_range() {
    assert!(eliminate_alternating(200).is_pass());
}

#[test]
fn steps_two_and_three() {
    for m in 1..=3 {
        let inst = ReeInstance::new(m).unwrap();
        assert!(check_step2(&inst, 500).is_pass(), "m={m}");
        assert!(check_step3(&inst).is_pass(), "m={m}");
    }
}
