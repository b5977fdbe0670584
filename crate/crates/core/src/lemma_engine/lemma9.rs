use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::Result;
use crate::exact_ring::two_adic_valuation;
use crate::ree_data::{b_set, cd_l2, cd_sz, ReeInstance, SubgroupName};
use crate::report::{join, VerificationReport as R};
use crate::witness;

/// Index of `2F4(q0^2)` in `2F4(q^2)`: its 2-exponent is `12(2m+1)(alpha-1)/alpha`.
fn subfield_two_exponent(m: u32, alpha: u32) -> u64 {
    let k = 2 * u64::from(m) + 1;
    12 * (k / u64::from(alpha)) * (u64::from(alpha) - 1)
}

pub fn check_lemma9(inst: &ReeInstance) -> R {
    match lemma9_items(inst) {
        Ok(children) => R::group("lemma9", children),
        Err(e) => R::group("lemma9", vec![R::fail("lemma9.setup", witness!("m" => inst.m(), "error" => e))]),
    }
}

fn lemma9_items(inst: &ReeInstance) -> Result<Vec<R>> {
    let m = inst.m();
    let bound = inst.two_part_bound_exponent();
    let pa_allowed = cd_l2(&inst.q_even_pow(2));
    // The listed Pb quotients omit 1, yet Phi4^2 Phi8 Phi12 Phi24 is itself a
    // degree. 1 is accepted and the report flags it.
    let mut pb_allowed = b_set(m)?;
    pb_allowed.push(BigUint::from(1u32));
    let mut out = Vec::new();
    for (name, index) in inst.maximal_subgroup_indices()? {
        let id = format!("lemma9.{name}");
        let quotients: Vec<BigUint> = inst
            .degrees()
            .iter()
            .filter_map(|d| {
                let (q, r) = d.div_rem(&index);
                r.is_zero().then_some(q)
            })
            .collect();
        let v2 = two_adic_valuation(&index);
        let report = match name {
            SubgroupName::Pa | SubgroupName::Pb => {
                let allowed = if name == SubgroupName::Pa { &pa_allowed } else { &pb_allowed };
                let outside = quotients.iter().find(|x| !allowed.contains(x));
                match outside {
                    _ if quotients.is_empty() => R::fail(&id, witness!("index" => &index, "divides" => "none")),
                    Some(x) => R::fail(&id, witness!("index" => &index, "quotient" => x)),
                    None => {
                        let r = R::pass(&id).with("index", &index).with("quotients", join(&quotients));
                        if name == SubgroupName::Pb && quotients.iter().any(|x| *x == BigUint::from(1u32)) {
                            r.with_note("quotient 1 occurs: the index itself is a degree")
                        } else {
                            r
                        }
                    }
                }
            }
            SubgroupName::Subfield(alpha) => {
                let e = subfield_two_exponent(m, alpha);
                let w =
                    witness!("index" => &index, "two_part_exponent" => v2, "predicted_exponent" => e, "bound" => bound);
                let ok = quotients.is_empty() && v2 == e && e > bound;
                R::check(&id, ok, w)
            }
            _ => {
                let w = witness!("index" => &index, "two_part_exponent" => v2, "bound" => bound);
                R::check(&id, quotients.is_empty() && v2 > bound, w)
            }
        };
        out.push(report);
    }
    Ok(out)
}

/// Facts about the admissible `Pb` quotients and `cd(Sz(q^2))`.
pub fn check_b_set_facts(m: u32) -> R {
    let id = "step3.b-set";
    let (b, sz) = match (b_set(m), cd_sz(m)) {
        (Ok(b), Ok(sz)) => (b, sz),
        (Err(e), _) | (_, Err(e)) => return R::fail(id, witness!("m" => m, "error" => e)),
    };
    let phi8 = &b[1];
    let q2m1_sq = &b[5];
    let divides_other = b.iter().find(|x| *x != phi8 && (*x % phi8).is_zero());
    let mut sorted = sz.clone();
    sorted.sort();
    sorted.dedup();
    let children = vec![
        match divides_other {
            Some(x) => R::fail(format!("{id}.q4p1-divides-none"), witness!("member" => x)),
            None => R::pass(format!("{id}.q4p1-divides-none")).with("set", join(&b)),
        },
        R::check(format!("{id}.square-below-q4p1"), q2m1_sq < phi8, witness!("lhs" => q2m1_sq, "rhs" => phi8)),
        R::check(
            format!("{id}.sz-degrees-distinct"),
            sorted.len() == sz.len() && sz.iter().all(|x| !x.is_zero()),
            witness!("degrees" => join(&sz)),
        ),
    ];
    R::group(id, children)
}
