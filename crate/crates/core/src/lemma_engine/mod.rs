//! Per-`m` checks of the arithmetic facts about `cd(2F4(q^2))`.

mod lemma8;
mod lemma9;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use lemma8::{check_lemma8, Lemma8Options};
pub use lemma9::{check_b_set_facts, check_lemma9};

use crate::error::{EllSlot, Error, Result};
use crate::exact_ring::{distinct_prime_factors, Zs2};
use crate::qpoly::{FactoredExpr, NamedFactor};
use crate::ree_data::DegreeSet;

use NamedFactor::*;

/// Primes `l1 | w1`, `l2 | w2`, `l3 | Phi12`, all different from 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EllPrimes {
    pub ell1: BigUint,
    pub ell2: BigUint,
    pub ell3: BigUint,
}

impl EllSlot {
    pub fn factor(self) -> NamedFactor {
        match self {
            EllSlot::W1 => W1,
            EllSlot::W2 => W2,
            EllSlot::Phi12 => Phi12,
        }
    }
}

/// All primes other than 3 dividing the value of the slot's polynomial, ascending.
pub fn qualifying_primes(slot: EllSlot, m: u32) -> Result<Vec<BigUint>> {
    let value = FactoredExpr::one().times(slot.factor()).evaluate_natural(m)?;
    let three = BigUint::from(3u32);
    Ok(distinct_prime_factors(&value).into_iter().filter(|p| *p != three).collect())
}

fn smallest(slot: EllSlot, m: u32) -> Result<BigUint> {
    qualifying_primes(slot, m)?.into_iter().next().ok_or(Error::NoSuchPrime(slot))
}

pub fn find_ell_primes(m: u32) -> Result<EllPrimes> {
    if m == 0 {
        return Err(Error::InvalidParameter(m));
    }
    Ok(EllPrimes {
        ell1: smallest(EllSlot::W1, m)?,
        ell2: smallest(EllSlot::W2, m)?,
        ell3: smallest(EllSlot::Phi12, m)?,
    })
}

/// No proper nontrivial degree divides `d`, and `d` divides no larger degree.
pub fn is_isolated(d: &BigUint, cd: &DegreeSet) -> bool {
    cd.iter().all(|e| {
        if e.is_one() || e == d {
            true
        } else if e < d {
            !(d % e).is_zero()
        } else {
            !(e % d).is_zero()
        }
    })
}

pub(crate) fn sqrt2_over(den: i64) -> Zs2 {
    Zs2::new(BigRational::zero(), BigRational::new(1.into(), den.into()))
}

/// `q sqrt2 Phi1 Phi2 Phi4^2 Phi12 / 2`, the smallest nontrivial degree.
pub fn smallest_degree_expr() -> FactoredExpr {
    FactoredExpr::new(sqrt2_over(2), 1).times(Phi1).times(Phi2).with(Phi4, 2).times(Phi12)
}

/// `q^4 Phi1^2 Phi2^2 Phi4^2 Phi8^2 / 3`, the odd-index isolated degree.
pub fn isolated_degree_expr() -> FactoredExpr {
    FactoredExpr::new(Zs2::rational(1, 3), 4).with(Phi1, 2).with(Phi2, 2).with(Phi4, 2).with(Phi8, 2)
}

pub(crate) fn nat(e: &FactoredExpr, m: u32) -> Result<BigUint> {
    e.evaluate_natural(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ree_data::ReeInstance;

    fn n(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn ell_primes_small_m() {
        let e = find_ell_primes(1).unwrap();
        assert_eq!((e.ell1, e.ell2, e.ell3), (n(37), n(109), n(19)));
        assert_eq!(find_ell_primes(2).unwrap().ell1, n(13));
    }

    #[test]
    fn ell_primes_exist_up_to_16() {
        for m in 1..=16 {
            let e = find_ell_primes(m).unwrap();
            for (p, f) in [(&e.ell1, W1), (&e.ell2, W2), (&e.ell3, Phi12)] {
                let v = FactoredExpr::one().times(f).evaluate_natural(m).unwrap();
                assert!((v % p).is_zero() && *p != n(3));
            }
        }
    }

    #[test]
    fn isolation_at_m1() {
        let inst = ReeInstance::new(1).unwrap();
        let cd = inst.degrees();
        assert!(is_isolated(&inst.steinberg(), cd));
        let iso = nat(&isolated_degree_expr(), 1).unwrap();
        assert_eq!(iso, n(64 * 49 * 27 * 4225));
        assert!(is_isolated(&iso, cd));
        let pa = nat(&FactoredExpr::one().times(Phi4).with(Phi8, 2).times(Phi12).times(Phi24), 1).unwrap();
        assert!(cd.contains(&pa));
        assert!(!is_isolated(&pa, cd));
    }

    #[test]
    fn isolation_matches_double_loop() {
        for m in 1..=3 {
            let inst = ReeInstance::new(m).unwrap();
            let cd = inst.degrees();
            for d in cd.nontrivial() {
                let divisors_free = cd.nontrivial().filter(|e| *e < d).all(|e| !(d % e).is_zero());
                let multiples_free = cd.iter().filter(|e| *e > d).all(|e| !(e % d).is_zero());
                assert_eq!(is_isolated(d, cd), divisors_free && multiples_free);
            }
        }
    }
}
