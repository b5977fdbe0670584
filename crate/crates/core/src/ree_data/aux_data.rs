//! Degree sets of the Levi factors L2(q^2) and Sz(q^2), the set of admissible
//! Pb quotients, and the Sz(8) constants.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::Result;
use crate::exact_ring::Zs2;
use crate::qpoly::{FactoredExpr, NamedFactor};

use NamedFactor::*;

pub const SZ8_ORDER: u64 = 29120;
pub const CD_SZ8: [u64; 6] = [1, 14, 35, 64, 65, 91];
pub const SZ8_PROJECTIVE_ONLY: [u64; 4] = [40, 56, 64, 104];

/// `cd(L2(x)) = {1, x-1, x, x+1}` for an even prime power `x`.
pub fn cd_l2(x: &BigUint) -> Vec<BigUint> {
    vec![BigUint::one(), x - 1u32, x.clone(), x + 1u32]
}

fn sqrt2_half() -> Zs2 {
    Zs2::sqrt2().scale(&num_rational::BigRational::new(1.into(), 2.into()))
}

/// `{q^4, q^4+1, (q^2-1)u1, (q^2-1)u2, q*sqrt2*(q^2-1)/2, (q^2-1)^2}` symbolically.
pub fn b_set_exprs() -> Vec<FactoredExpr> {
    let q2m1 = || FactoredExpr::one().times(Phi1).times(Phi2);
    vec![
        FactoredExpr::q_pow(4),
        FactoredExpr::one().times(Phi8),
        q2m1().times(U1),
        q2m1().times(U2),
        FactoredExpr::new(sqrt2_half(), 1).times(Phi1).times(Phi2),
        FactoredExpr::one().with(Phi1, 2).with(Phi2, 2),
    ]
}

/// Nontrivial degrees of `Sz(q^2)` at the same `q`, symbolically.
pub fn cd_sz_exprs() -> Vec<FactoredExpr> {
    let q2m1 = || FactoredExpr::one().times(Phi1).times(Phi2);
    vec![
        FactoredExpr::one(),
        FactoredExpr::q_pow(4),
        FactoredExpr::one().times(Phi8),
        q2m1().times(U1),
        q2m1().times(U2),
        FactoredExpr::new(sqrt2_half(), 1).times(Phi1).times(Phi2),
    ]
}

pub fn b_set(m: u32) -> Result<Vec<BigUint>> {
    b_set_exprs().iter().map(|e| e.evaluate_natural(m)).collect()
}

pub fn cd_sz(m: u32) -> Result<Vec<BigUint>> {
    cd_sz_exprs().iter().map(|e| e.evaluate_natural(m)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn b_set_at_m1() {
        assert_eq!(b_set(1).unwrap(), nat(&[64, 65, 35, 91, 14, 49]));
    }

    #[test]
    fn suzuki_formula_reproduces_sz8() {
        let mut got = cd_sz(1).unwrap();
        got.sort();
        assert_eq!(got, nat(&CD_SZ8));
        // |Sz(q^2)| = q^4 (q^4+1)(q^2-1) at q^2 = 8.
        assert_eq!(64 * 65 * 7, SZ8_ORDER);
    }

    #[test]
    fn l2_degrees() {
        assert_eq!(cd_l2(&BigUint::from(8u32)), nat(&[1, 7, 8, 9]));
    }
}
