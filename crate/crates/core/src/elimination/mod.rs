//! Arithmetic eliminations: solvable quotients, other simple chief factors,
//! the Sz(8) count and the field-automorphism bound.

mod lie;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

pub use lie::{eliminate_lie_type, lie_type_report, revalidate, Candidate, Reason, Verdict};

use crate::exact_ring::{divisors_u64, gcd, is_power_of_two, prime_power, two_adic_valuation};
use crate::lemma_engine::{isolated_degree_expr, smallest_degree_expr};
use crate::qpoly::{FactoredExpr, NamedFactor::*};
use crate::ree_data::{pow2, ReeInstance, CD_SZ8, SZ8_ORDER};
use crate::report::{join, VerificationReport as R};
use crate::witness;

/// Inequalities behind the Frobenius-quotient case.
pub fn check_step1_bounds(inst: &ReeInstance) -> R {
    let id = "step1";
    let m = inst.m();
    let eval = |e: FactoredExpr| e.evaluate_natural(m);
    let (smallest, iso, odd, iso_odd) = match (
        eval(smallest_degree_expr()),
        eval(isolated_degree_expr()),
        eval(FactoredExpr::one().times(Phi1).times(Phi2).with(Phi4, 2).times(Phi12)),
        eval(
            FactoredExpr::new(crate::exact_ring::Zs2::rational(1, 3), 0)
                .with(Phi1, 2)
                .with(Phi2, 2)
                .with(Phi4, 2)
                .with(Phi8, 2),
        ),
    ) {
        (Ok(a), Ok(b), Ok(c), Ok(d)) => (a, b, c, d),
        _ => return R::group(id, vec![R::fail(format!("{id}.setup"), witness!("m" => m))]),
    };
    let q = |e: u64| inst.q_even_pow(e);
    let prod = (q(4) - 1u32) * (q(6) + 1u32);

    let smallest_odd = {
        let (_, o) = crate::exact_ring::p_part(&smallest, &BigUint::from(2u32));
        o
    };
    let iso_two = two_adic_valuation(&iso);
    let children = vec![
        R::check(
            format!("{id}.odd-part-below-q10"),
            prod == odd && prod < q(10),
            witness!("lhs" => &prod, "rhs" => q(10)),
        ),
        R::check(
            format!("{id}.steinberg-quotient"),
            smallest_odd == odd && &odd * &odd < q(20) && q(20) < q(24),
            witness!("odd_part_squared" => &odd * &odd, "q20" => q(20), "q24" => q(24)),
        ),
        R::check(
            format!("{id}.even-kernel"),
            q(8) - 1u32 < q(10) && q(10) <= smallest,
            witness!("q8_minus_1" => q(8) - 1u32, "q10" => q(10), "smallest" => &smallest),
        ),
        R::check(
            format!("{id}.isolated-two-part"),
            iso_two == 4 * u64::from(m) + 2 && iso == pow2(iso_two) * &iso_odd && (q(8) % pow2(2 * iso_two)).is_zero(),
            witness!("two_part_exponent" => iso_two, "odd_part" => &iso_odd),
        ),
    ];
    R::group(id, children)
}

/// For `7 <= n <= n_max`: `n(n-3)/2` and `(n-1)(n-2)/2` are consecutive,
/// coprime and not powers of 2.
pub fn eliminate_alternating(n_max: u64) -> R {
    let id = "step2.alternating";
    for n in 7..=n_max {
        let a = BigUint::from(n * (n - 3) / 2);
        let b = BigUint::from((n - 1) * (n - 2) / 2);
        let ok = b == &a + 1u32 && gcd(&a, &b).is_one() && !is_power_of_two(&a) && !is_power_of_two(&b);
        if !ok {
            return R::fail(id, witness!("n" => n, "theta1" => a, "theta2" => b));
        }
    }
    R::pass(id).with("n_min", 7).with("n_max", n_max)
}

/// `q^24` is the only nontrivial prime-power degree.
pub fn check_unique_prime_power(inst: &ReeInstance) -> R {
    let id = "step2.unique-prime-power-degree";
    let powers: Vec<&BigUint> = inst.degrees().nontrivial().filter(|d| prime_power(d).is_some()).collect();
    let ok = powers.len() == 1 && *powers[0] == inst.steinberg();
    R::check(id, ok, witness!("prime_power_degrees" => join(&powers)))
}

/// `S^k` with `k >= 2`: only `k = 2` keeps a non-Steinberg 2-part within
/// the bound, and `2 q^12` is not a degree.
pub fn check_wreath(inst: &ReeInstance) -> R {
    let id = "step2.wreath";
    let total = 12 * inst.field_exponent();
    let bound = inst.two_part_bound_exponent();
    let admissible: Vec<u64> =
        divisors_u64(total).into_iter().filter(|&k| k >= 2 && total * (k - 1) / k <= bound).collect();
    let two_q12 = inst.q_even_pow(12) * 2u32;
    R::group(
        id,
        vec![
            R::check(format!("{id}.k-at-most-2"), admissible == [2], witness!("admissible_k" => join(&admissible))),
            R::check(format!("{id}.two-q12-absent"), !inst.degrees().contains(&two_q12), witness!("value" => &two_q12)),
        ],
    )
}

/// `|Sz(8)| = 14^2 a + 64^2 b` has no solution in nonnegative integers.
pub fn check_sz8_diophantine() -> R {
    let id = "step3.sz8-diophantine";
    let n = SZ8_ORDER;
    let brute: Vec<(u64, u64)> = (0..=n / 4096)
        .flat_map(|b| (0..=n / 196).map(move |a| (a, b)))
        .filter(|&(a, b)| 196 * a + 4096 * b == n)
        .collect();
    // Residues: 196 a = n (mod 4096) for a < 4096 / gcd(196, 4096).
    let period = 4096 / 196u64.gcd(&4096);
    let modular: Vec<u64> = (0..period).filter(|a| (196 * a) % 4096 == n % 4096).collect();
    let modular_hits: Vec<u64> =
        modular.iter().copied().filter(|&a| 196 * a <= n && (n - 196 * a).is_multiple_of(4096)).collect();
    // Reduced form 65 = 7 a1 + 64 b1 with a1, b1 >= 1.
    let reduced: Vec<(u64, u64)> = (1..=65 / 64u64)
        .flat_map(|b1| (1..=65 / 7u64).map(move |a1| (a1, b1)))
        .filter(|&(a1, b1)| 7 * a1 + 64 * b1 == 65)
        .collect();
    let forced = (1..=65 / 64u64).all(|b1| (65 - 64 * b1) % 7 != 0);
    let order_ok = n == 64 * 65 * 7 && CD_SZ8.contains(&14) && CD_SZ8.contains(&64);
    R::group(
        id,
        vec![
            R::check(format!("{id}.exhaustive"), brute.is_empty(), witness!("solutions" => format!("{brute:?}"))),
            R::check(
                format!("{id}.modular"),
                modular_hits.is_empty(),
                witness!("residue_solutions" => join(&modular), "nonnegative" => join(&modular_hits)),
            ),
            R::check(
                format!("{id}.reduced"),
                reduced.is_empty() && forced,
                witness!("solutions" => format!("{reduced:?}")),
            ),
            R::check(format!("{id}.order"), order_ok, witness!("order" => n)),
        ],
    )
}

/// Field automorphisms: no divisor `z > 1` of `2m+1` reaches `2^(2m+1) - 1`.
pub fn check_step5(m: u32) -> R {
    let id = "step5";
    let k = 2 * u64::from(m) + 1;
    let limit = pow2(k) - 1u32;
    let divisors: Vec<u64> = divisors_u64(k).into_iter().filter(|&z| z > 1).collect();
    let bad = divisors.iter().find(|&&z| BigUint::from(z) >= limit);
    match bad {
        Some(z) => R::fail(id, witness!("z" => z, "limit" => &limit)),
        None => R::pass(id).with("divisors", join(&divisors)).with("limit", &limit),
    }
}

/// `q^24 - 1` and `q^24 + 1` are not degrees.
pub fn check_consecutive_aux(inst: &ReeInstance) -> R {
    let id = "lemma8.vii-steinberg-neighbours";
    let st = inst.steinberg();
    let hit = [&st - 1u32, &st + 1u32].into_iter().find(|x| inst.degrees().contains(x));
    match hit {
        Some(x) => R::fail(id, witness!("degree" => x)),
        None => R::check(id, inst.degrees().contains(&st), witness!("steinberg" => &st)),
    }
}

pub fn check_step2(inst: &ReeInstance, n_max: u64) -> R {
    R::group(
        "step2",
        vec![eliminate_alternating(n_max), lie_type_report(inst), check_unique_prime_power(inst), check_wreath(inst)],
    )
}

pub fn check_step3(inst: &ReeInstance) -> R {
    R::group("step3", vec![check_sz8_diophantine(), crate::lemma_engine::check_b_set_facts(inst.m())])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn step1_small_m() {
        for m in 1..=16 {
            let inst = ReeInstance::new(m).unwrap();
            assert!(check_step1_bounds(&inst).is_pass(), "m = {m}");
            assert!(check_step5(m).is_pass());
        }
    }

    #[test]
    fn step1_values_at_m1() {
        let r = check_step1_bounds(&ReeInstance::new(1).unwrap());
        let w = &r.find("step1.odd-part-below-q10").unwrap().witness;
        assert_eq!(w["lhs"], "32319");
        assert_eq!(w["rhs"], "32768");
        assert_eq!(r.find("step1.isolated-two-part").unwrap().witness["two_part_exponent"], "6");
    }

    #[test]
    fn alternating_small() {
        assert!(eliminate_alternating(2000).is_pass());
    }

    #[test]
    fn sz8_has_no_solution() {
        assert!(check_sz8_diophantine().is_pass());
    }

    #[test]
    fn step5_divisors() {
        assert_eq!(check_step5(4).witness["divisors"], "3,9");
    }

    #[test]
    fn step2_and_3_pass() {
        for m in 1..=3 {
            let inst = ReeInstance::new(m).unwrap();
            assert!(check_step2(&inst, 100).is_pass());
            assert!(check_step3(&inst).is_pass());
            assert!(check_consecutive_aux(&inst).is_pass());
        }
    }
}
