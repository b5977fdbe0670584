//! Sweep over simple groups of Lie type `S` with `|S|_2 = q^24 = 2^(12(2m+1))`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ree_data::{pow2, LieFamily, Parameters, ReeInstance};
use crate::report::{VerificationReport as R, Witness};
use crate::witness;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reason {
    /// `coefficient * b = target` has no integer solution.
    OrderEquationUnsolvable {
        coefficient: u64,
        target: u64,
    },
    UnipotentBoundExceeded {
        exponent: u64,
        bound: u64,
    },
    /// No degree of `2F4(q^2)` has 2-part `2^exponent`.
    TwoPartNotRealized {
        exponent: u64,
    },
    DegreeNotInCd {
        value: BigUint,
    },
    DoesNotDivideOrder {
        value: BigUint,
    },
    /// The order equation forces an odd number to be even.
    Parity {
        required: u64,
    },
    WrongCharacteristic,
}

impl Reason {
    pub fn kind(&self) -> &'static str {
        match self {
            Reason::OrderEquationUnsolvable { .. } => "OrderEquationUnsolvable",
            Reason::UnipotentBoundExceeded { .. } => "UnipotentBoundExceeded",
            Reason::TwoPartNotRealized { .. } => "TwoPartNotRealized",
            Reason::DegreeNotInCd { .. } => "DegreeNotInCd",
            Reason::DoesNotDivideOrder { .. } => "DoesNotDivideOrder",
            Reason::Parity { .. } => "Parity",
            Reason::WrongCharacteristic => "WrongCharacteristic",
        }
    }

    fn witness(&self) -> Witness {
        match self {
            Reason::OrderEquationUnsolvable { coefficient, target } => {
                witness!("coefficient" => coefficient, "target" => target)
            }
            Reason::UnipotentBoundExceeded { exponent, bound } => witness!("exponent" => exponent, "bound" => bound),
            Reason::TwoPartNotRealized { exponent } => witness!("exponent" => exponent),
            Reason::DegreeNotInCd { value } | Reason::DoesNotDivideOrder { value } => witness!("value" => value),
            Reason::Parity { required } => witness!("required_odd" => required),
            Reason::WrongCharacteristic => witness!("characteristic" => 3),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Survives,
    Eliminated(Reason),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub family: LieFamily,
    /// Rank parameter, or `n` in `2^(2n+1)` for the twisted odd-field families.
    pub n: Option<u64>,
    /// Field exponent `b` in `2^b`.
    pub b: Option<u64>,
    pub verdict: Verdict,
}

impl Candidate {
    pub fn label(&self) -> String {
        self.family.label(self.n, self.b)
    }

    pub fn survives(&self) -> bool {
        self.verdict == Verdict::Survives
    }
}

impl fmt::Display for Candidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.verdict {
            Verdict::Survives => write!(f, "{}: survives", self.label()),
            Verdict::Eliminated(r) => write!(f, "{}: {}", self.label(), r.kind()),
        }
    }
}

/// `2^(e(2m+1))`, i.e. `q^(2e)`.
fn qq(inst: &ReeInstance, e: u64) -> BigUint {
    inst.q_even_pow(2 * e)
}

/// Small-rank checks, each naming a specific degree of `S` absent from `cd(H)`.
fn special_case(inst: &ReeInstance, family: LieFamily, n: u64, b: u64) -> Option<Reason> {
    use LieFamily::*;
    let k = inst.field_exponent();
    let not_in_cd = |value: BigUint| (!inst.degrees().contains(&value)).then_some(Reason::DegreeNotInCd { value });
    let not_dividing =
        |value: BigUint| (!(inst.order() % &value).is_zero()).then_some(Reason::DoesNotDivideOrder { value });
    let not_realized = |exponent: u64| {
        (!inst.two_part_exponent_set().contains(&exponent)).then_some(Reason::TwoPartNotRealized { exponent })
    };
    match (family, n) {
        // L2(q^24) has a degree q^24 + 1.
        (Linear, 2) => not_dividing(pow2(b) + 1u32),
        // L3(q^8), U3(q^8): q^8(q^8 + eps).
        (Linear, 3) => not_in_cd(qq(inst, 4) * (qq(inst, 4) + 1u32)),
        (Unitary, 3) => not_in_cd(qq(inst, 4) * (qq(inst, 4) - 1u32)),
        // L4(q^4), U4(q^4): q^8(q^8 + 1) from the partition (2,2).
        (Linear | Unitary, 4) => not_in_cd(qq(inst, 4) * (qq(inst, 4) + 1u32)),
        // S4(q^6): q^6(q^6 - 1)^2 / 2.
        (Symplectic, 2) => {
            let q1 = pow2(b);
            let one = &q1 - 1u32;
            not_in_cd(&q1 * &one * &one / 2u32)
        }
        // S6(q1), q1^3 = q^8: a degree with 2-part q^8.
        (Symplectic, 3) => not_realized(3 * b),
        // O8-(q^2): a degree with 2-part q^12.
        (OrthogonalMinus, 4) => not_realized(6 * k),
        _ => None,
    }
    .or_else(|| match family {
        // G2(q^4) has a degree q^24 - 1.
        G2 => not_dividing(pow2(6 * b) - 1u32),
        _ => None,
    })
}

fn verdict_for(inst: &ReeInstance, family: LieFamily, n: u64, b: u64) -> Verdict {
    if let Some(r) = special_case(inst, family, n, b) {
        return Verdict::Eliminated(r);
    }
    let bound = inst.two_part_bound_exponent();
    match family.unip2exp(n, b) {
        Some(exponent) if family != LieFamily::ReeF4 && exponent > bound => {
            Verdict::Eliminated(Reason::UnipotentBoundExceeded { exponent, bound })
        }
        _ => Verdict::Survives,
    }
}

/// All candidates admitted by `|S|_2 = |H|_2`, each with a verdict.
///
/// Errors if anything other than `2F4(q^2)` itself survives.
pub fn eliminate_lie_type(inst: &ReeInstance) -> Result<Vec<Candidate>> {
    let m = u64::from(inst.m());
    let target = 12 * (2 * m + 1);
    let mut out = Vec::new();
    for family in LieFamily::ALL {
        match family.parameters() {
            Parameters::RankAndField { min_n } => {
                let mut n = min_n;
                while family.order2_coefficient(n) <= target {
                    let c = family.order2_coefficient(n);
                    let (b, verdict) = if target % c == 0 {
                        let b = target / c;
                        (Some(b), verdict_for(inst, family, n, b))
                    } else {
                        (None, Verdict::Eliminated(Reason::OrderEquationUnsolvable { coefficient: c, target }))
                    };
                    out.push(Candidate { family, n: Some(n), b, verdict });
                    n += 1;
                }
            }
            Parameters::Field => {
                let c = family.order2_coefficient(0);
                let cand = if target % c == 0 {
                    let b = target / c;
                    Candidate { family, n: None, b: Some(b), verdict: verdict_for(inst, family, 0, b) }
                } else {
                    let r = Reason::OrderEquationUnsolvable { coefficient: c, target };
                    Candidate { family, n: None, b: None, verdict: Verdict::Eliminated(r) }
                };
                out.push(cand);
            }
            Parameters::OddField => {
                let cand = match family {
                    LieFamily::ReeG2 => Candidate {
                        family,
                        n: None,
                        b: None,
                        verdict: Verdict::Eliminated(Reason::WrongCharacteristic),
                    },
                    _ => {
                        // order2exp = c (2n+1) with c = order2_coefficient(0).
                        let c = family.order2_coefficient(0);
                        if target % c != 0 {
                            let r = Reason::OrderEquationUnsolvable { coefficient: c, target };
                            Candidate { family, n: None, b: None, verdict: Verdict::Eliminated(r) }
                        } else if (target / c) % 2 == 0 {
                            let r = Reason::Parity { required: target / c };
                            Candidate { family, n: None, b: None, verdict: Verdict::Eliminated(r) }
                        } else {
                            let n = (target / c - 1) / 2;
                            Candidate { family, n: Some(n), b: None, verdict: verdict_for(inst, family, n, 0) }
                        }
                    }
                };
                out.push(cand);
            }
        }
    }
    let survivors: Vec<&Candidate> = out.iter().filter(|c| c.survives()).collect();
    let expected = |c: &Candidate| c.family == LieFamily::ReeF4 && c.n == Some(m);
    if survivors.len() != 1 || !expected(survivors[0]) {
        return Err(Error::InternalInconsistency(format!(
            "unexpected survivors: {}",
            survivors.iter().map(|c| c.label()).collect::<Vec<_>>().join(", ")
        )));
    }
    Ok(out)
}

/// Recomputes a verdict's claim from scratch, without the sweep's shortcuts.
pub fn revalidate(inst: &ReeInstance, c: &Candidate) -> bool {
    let m = u64::from(inst.m());
    let target = 12 * (2 * m + 1);
    let reason = match &c.verdict {
        Verdict::Survives => return c.family == LieFamily::ReeF4 && c.n == Some(m),
        Verdict::Eliminated(r) => r,
    };
    match reason {
        Reason::OrderEquationUnsolvable { coefficient, target: t } => {
            *t == target && (1..=target).all(|b| coefficient * b != target)
        }
        Reason::UnipotentBoundExceeded { exponent, bound } => {
            let (n, b) = (c.n.unwrap_or(0), c.b.unwrap_or(0));
            c.family.order2exp(n, b) == target
                && c.family.unip2exp(n, b) == Some(*exponent)
                && *bound == 13 * m + 6
                && exponent > bound
        }
        Reason::TwoPartNotRealized { exponent } => inst
            .rows()
            .iter()
            .filter(|r| !r.multiplicity.is_zero())
            .all(|r| crate::exact_ring::two_adic_valuation(&r.degree) != *exponent),
        Reason::DegreeNotInCd { value } => inst.rows().iter().all(|r| r.multiplicity.is_zero() || r.degree != *value),
        Reason::DoesNotDivideOrder { value } => !(inst.order() % value).is_zero(),
        Reason::Parity { required } => required % 2 == 0 && c.family.order2_coefficient(0) * required == target,
        Reason::WrongCharacteristic => !c.family.has_characteristic_two(),
    }
}

pub fn lie_type_report(inst: &ReeInstance) -> R {
    let id = "step2.lie-type";
    match eliminate_lie_type(inst) {
        Ok(cands) => {
            let children = cands
                .iter()
                .map(|c| {
                    let cid = format!("{id}.{}", c.label());
                    let ok = revalidate(inst, c);
                    let mut r = match &c.verdict {
                        Verdict::Survives => R::check(cid, ok, witness!("verdict" => "Survives")),
                        Verdict::Eliminated(reason) => {
                            let mut w = reason.witness();
                            w.insert("verdict".into(), reason.kind().into());
                            R::check(cid, ok, w)
                        }
                    };
                    if c.family == LieFamily::Symplectic && c.n == Some(4) {
                        r = r.with_note("no integer solution of 4b = 3(2m+1); excluded at the order equation");
                    }
                    r
                })
                .collect();
            let survivor = cands.iter().find(|c| c.survives()).map(|c| c.label()).unwrap_or_default();
            let mut g = R::group(id, children);
            g.witness.insert("survivor".into(), format!("2F4, n={} ({survivor})", inst.m()));
            g
        }
        Err(e) => R::group(id, vec![R::fail(format!("{id}.survivors"), witness!("error" => e))]),
    }
}
