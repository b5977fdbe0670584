use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{
    find_ell_primes, is_isolated, isolated_degree_expr, nat, qualifying_primes, smallest_degree_expr, sqrt2_over,
};
use crate::error::{EllSlot, Result};
use crate::exact_ring::{gcd, two_adic_valuation, Zs2};
use crate::qpoly::{FactoredExpr, NamedFactor::*};
use crate::ree_data::ReeInstance;
use crate::report::{join, VerificationReport as R};
use crate::witness;

#[derive(Clone, Copy, Debug, Default)]
pub struct Lemma8Options {
    /// Re-run the prime-dependent items over every admissible prime, not just the smallest.
    pub exhaustive: bool,
}

fn set_i() -> Vec<FactoredExpr> {
    vec![
        smallest_degree_expr(),
        isolated_degree_expr(),
        FactoredExpr::new(sqrt2_over(2), 13).times(Phi1).times(Phi2).with(Phi4, 2).times(Phi12),
    ]
}

fn set_ii() -> Vec<FactoredExpr> {
    let one = FactoredExpr::one;
    vec![
        one().times(Phi1).times(Phi2).with(Phi8, 2).times(Phi24),
        FactoredExpr::new(Zs2::rational(1, 6), 4).with(Phi1, 2).with(Phi2, 2).with(Phi4, 2).times(Phi24),
        FactoredExpr::new(Zs2::rational(1, 2), 4).with(Phi8, 2).times(Phi24),
        FactoredExpr::q_pow(2).with(Phi1, 2).with(Phi2, 2).with(Phi8, 2).times(Phi24),
        FactoredExpr::q_pow(6).times(Phi1).times(Phi2).with(Phi8, 2).times(Phi24),
        one().with(Phi1, 2).with(Phi2, 2).with(Phi4, 2).with(Phi8, 2).times(Phi24),
        isolated_degree_expr(),
    ]
}

fn eval_all(v: &[FactoredExpr], m: u32) -> Result<Vec<BigUint>> {
    v.iter().map(|e| nat(e, m)).collect()
}

/// First nontrivial, non-Steinberg degree coprime to `modulus` outside `allowed`.
fn coprime_outsider<'a>(inst: &'a ReeInstance, modulus: &BigUint, allowed: &[BigUint]) -> Option<&'a BigUint> {
    let st = inst.steinberg();
    inst.degrees().nontrivial().filter(|a| **a != st).find(|a| gcd(a, modulus).is_one() && !allowed.contains(a))
}

fn prime_lists(m: u32, exhaustive: bool) -> Result<[Vec<BigUint>; 3]> {
    if exhaustive {
        Ok([
            qualifying_primes(EllSlot::W1, m)?,
            qualifying_primes(EllSlot::W2, m)?,
            qualifying_primes(EllSlot::Phi12, m)?,
        ])
    } else {
        let e = find_ell_primes(m)?;
        Ok([vec![e.ell1], vec![e.ell2], vec![e.ell3]])
    }
}

fn membership_item(id: &str, inst: &ReeInstance, choices: Vec<Vec<BigUint>>, allowed: &[BigUint]) -> R {
    for primes in &choices {
        let modulus: BigUint = primes.iter().product();
        if let Some(a) = coprime_outsider(inst, &modulus, allowed) {
            return R::fail(id, witness!("degree" => a, "primes" => join(primes)));
        }
    }
    R::pass(id).with("prime_choices", choices.len())
}

fn cartesian(lists: &[&Vec<BigUint>]) -> Vec<Vec<BigUint>> {
    lists.iter().fold(vec![vec![]], |acc, list| {
        acc.iter()
            .flat_map(|prefix| {
                list.iter().map(move |p| {
                    let mut v = prefix.clone();
                    v.push(p.clone());
                    v
                })
            })
            .collect()
    })
}

pub fn check_lemma8(inst: &ReeInstance, opts: Lemma8Options) -> R {
    let m = inst.m();
    match lemma8_items(inst, opts) {
        Ok(children) => R::group("lemma8", children),
        Err(e) => R::group("lemma8", vec![R::fail("lemma8.setup", witness!("m" => m, "error" => e))]),
    }
}

fn lemma8_items(inst: &ReeInstance, opts: Lemma8Options) -> Result<Vec<R>> {
    let m = inst.m();
    let cd = inst.degrees();
    let st = inst.steinberg();
    let iso = nat(&isolated_degree_expr(), m)?;
    let q2 = inst.q_even_pow(2);
    let mut out = Vec::new();

    match prime_lists(m, opts.exhaustive) {
        Ok([l1, l2, l3]) => {
            out.push(membership_item("lemma8.i", inst, cartesian(&[&l1, &l2]), &eval_all(&set_i(), m)?));
            out.push(membership_item("lemma8.ii", inst, cartesian(&[&l3]), &eval_all(&set_ii(), m)?));
            out.push(membership_item("lemma8.iv", inst, cartesian(&[&l1, &l2, &l3]), &[st.clone(), iso.clone()]));
        }
        Err(e) => {
            for id in ["lemma8.i", "lemma8.ii", "lemma8.iv"] {
                out.push(R::fail(id, witness!("error" => &e)));
            }
        }
    }

    let g = nat(&FactoredExpr::new(Zs2::from(2), 0).times(Phi1).times(Phi2).times(Phi4), m)?;
    out.push(match cd.nontrivial().find(|a| gcd(a, &g).is_one()) {
        Some(a) => R::fail("lemma8.iii", witness!("degree" => a, "modulus" => &g)),
        None => R::pass("lemma8.iii").with("modulus", &g),
    });

    out.push(R::check("lemma8.v", cd.contains(&iso) && is_isolated(&iso, cd), witness!("degree" => &iso)));
    out.push(R::check("lemma8.v-steinberg", cd.contains(&st) && is_isolated(&st, cd), witness!("degree" => &st)));

    let rest: Vec<&BigUint> = cd.nontrivial().filter(|a| **a != st).collect();
    let coprime_pair = rest
        .iter()
        .enumerate()
        .flat_map(|(i, x)| rest[i + 1..].iter().map(move |y| (*x, *y)))
        .find(|(x, y)| gcd(x, y).is_one());
    out.push(match coprime_pair {
        Some((x, y)) => R::fail("lemma8.vi", witness!("x" => x, "y" => y)),
        None => R::pass("lemma8.vi").with("pairs", rest.len() * rest.len().saturating_sub(1) / 2),
    });

    let two = BigUint::from(2u32);
    let nontrivial: Vec<&BigUint> = cd.nontrivial().collect();
    let consecutive = nontrivial.windows(2).find(|w| *w[1] == w[0] + 1u32);
    out.push(match (cd.contains(&two), consecutive) {
        (true, _) => R::fail("lemma8.vii", witness!("degree" => 2)),
        (false, Some(w)) => R::fail("lemma8.vii", witness!("y" => w[0], "x" => w[1])),
        (false, None) => R::pass("lemma8.vii"),
    });
    out.push(crate::elimination::check_consecutive_aux(inst));

    let bound = inst.two_part_bound_exponent();
    let worst = cd.nontrivial().filter(|a| **a != st).max_by_key(|a| two_adic_valuation(a));
    let max_e = worst.map_or(0, two_adic_valuation);
    out.push(
        R::check("lemma8.viii", max_e == bound, witness!("max_exponent" => max_e, "bound" => bound))
            .with("attained_by", worst.map_or(String::new(), |a| a.to_string())),
    );

    let q2m1 = &q2 - 1u32;
    let mut min_z: Option<BigUint> = None;
    let mut bad = None;
    for a in cd.iter() {
        for b in cd.iter().filter(|b| *b > a) {
            let (z, r) = b.div_rem(a);
            if r.is_zero() && z.is_odd() {
                if z < q2m1 && bad.is_none() {
                    bad = Some((a.clone(), b.clone(), z.clone()));
                }
                if min_z.as_ref().is_none_or(|mz| z < *mz) {
                    min_z = Some(z);
                }
            }
        }
    }
    out.push(match bad {
        Some((a, b, z)) => R::fail("lemma8.ix", witness!("a" => a, "b" => b, "z" => z, "bound" => &q2m1)),
        None => R::pass("lemma8.ix")
            .with("bound", &q2m1)
            .with("min_odd_ratio", min_z.map_or("none".to_string(), |z| z.to_string())),
    });

    let smallest = nat(&smallest_degree_expr(), m)?;
    let actual = cd.min_nontrivial().cloned().unwrap_or_else(BigUint::zero);
    out.push(R::check("lemma8.x", actual == smallest, witness!("minimum" => &actual, "expected" => &smallest)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_items_pass_small_m() {
        for m in 1..=3 {
            let inst = ReeInstance::new(m).unwrap();
            let r = check_lemma8(&inst, Lemma8Options::default());
            assert!(r.is_pass(), "{r:#?}");
        }
    }

    #[test]
    fn exhaustive_mode_at_m2() {
        let inst = ReeInstance::new(2).unwrap();
        let r = check_lemma8(&inst, Lemma8Options { exhaustive: true });
        assert!(r.is_pass(), "{r:#?}");
        // w1 = 793 = 13 * 61 gives two choices for l1.
        let choices: usize = r.find("lemma8.i").unwrap().witness["prime_choices"].parse().unwrap();
        assert!(choices >= 2);
    }

    #[test]
    fn smallest_degree_at_m1() {
        let inst = ReeInstance::new(1).unwrap();
        let r = check_lemma8(&inst, Lemma8Options::default());
        assert_eq!(r.find("lemma8.x").unwrap().witness["minimum"], "64638");
        assert_eq!(r.find("lemma8.viii").unwrap().witness["max_exponent"], "19");
    }
}
