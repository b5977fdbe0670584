//! Tabulated data for 2F4(q^2), `q^2 = 2^(2m+1)`: the group order, the
//! character degree table, the maximal subgroups, the unipotent 2-part table
//! and the auxiliary Levi-factor degree sets.

mod aux_data;
mod lie;
mod table1;
mod table2;

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

pub use aux_data::{b_set, b_set_exprs, cd_l2, cd_sz, cd_sz_exprs, CD_SZ8, SZ8_ORDER, SZ8_PROJECTIVE_ONLY};
pub use lie::{unipotent_table, LieFamily, Parameters, UnipotentRow};
pub use table1::{
    fixed_maximal_subgroups, maximal_subgroups, subfield_primes, IndexFormula, MaximalSubgroupEntry, SubgroupName,
};
pub use table2::{character_table, CharTableEntry, ROW_COUNT, STEINBERG_ROW};

use crate::error::{Error, Result};
use crate::exact_ring::two_adic_valuation;

pub fn pow2(e: u64) -> BigUint {
    BigUint::one() << e
}

/// `|2F4(Q)|` for `Q = q^2 = 2^k`:
/// `Q^12 (Q^6+1)(Q^4-1)(Q^3+1)(Q-1)`.
pub fn order_for_field_exponent(k: u64) -> BigUint {
    let q2 = pow2(k);
    let p = |e: u32| q2.pow(e);
    p(12) * (p(6) + 1u32) * (p(4) - 1u32) * (p(3) + 1u32) * (&q2 - 1u32)
}

pub fn group_order(m: u32) -> BigUint {
    order_for_field_exponent(2 * u64::from(m) + 1)
}

/// Sorted set of distinct positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DegreeSet(Vec<BigUint>);

impl DegreeSet {
    pub fn from_values(values: impl IntoIterator<Item = BigUint>) -> Self {
        let mut v: Vec<BigUint> = values.into_iter().collect();
        v.sort();
        v.dedup();
        Self(v)
    }

    pub fn contains(&self, x: &BigUint) -> bool {
        self.0.binary_search(x).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, BigUint> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[BigUint] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Elements greater than 1.
    pub fn nontrivial(&self) -> impl Iterator<Item = &BigUint> {
        self.0.iter().filter(|x| !x.is_one())
    }

    pub fn min_nontrivial(&self) -> Option<&BigUint> {
        self.nontrivial().next()
    }
}

/// A degree-table row evaluated at a fixed `m`.
#[derive(Clone, Debug)]
pub struct EvaluatedRow {
    pub row: usize,
    pub degree: BigUint,
    pub multiplicity: BigUint,
}

/// All per-`m` data derived from the tables, computed once.
#[derive(Clone, Debug)]
pub struct ReeInstance {
    m: u32,
    rows: Vec<EvaluatedRow>,
    degrees: DegreeSet,
    order: BigUint,
}

fn row_value(row: usize, v: crate::exact_ring::Zs2) -> Result<BigInt> {
    v.to_integer().map_err(|_| Error::RowNotInteger { row, value: v.to_string() })
}

impl ReeInstance {
    pub fn new(m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParameter(m));
        }
        let mut rows = Vec::with_capacity(ROW_COUNT);
        for entry in character_table() {
            let degree = row_value(entry.row, entry.degree.evaluate(m))?;
            let mult = row_value(entry.row, entry.multiplicity.evaluate(m))?;
            if !degree.is_positive() {
                return Err(Error::RowNotInteger { row: entry.row, value: degree.to_string() });
            }
            if mult.is_negative() {
                return Err(Error::NegativeMultiplicity { row: entry.row, value: mult.to_string() });
            }
            rows.push(EvaluatedRow {
                row: entry.row,
                degree: degree.magnitude().clone(),
                multiplicity: mult.magnitude().clone(),
            });
        }
        let degrees =
            DegreeSet::from_values(rows.iter().filter(|r| !r.multiplicity.is_zero()).map(|r| r.degree.clone()));
        Ok(Self { m, rows, degrees, order: group_order(m) })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn rows(&self) -> &[EvaluatedRow] {
        &self.rows
    }

    pub fn degrees(&self) -> &DegreeSet {
        &self.degrees
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    /// Exponent `k` in `q^2 = 2^k`.
    pub fn field_exponent(&self) -> u64 {
        2 * u64::from(self.m) + 1
    }

    /// `q^(2j) = 2^(j(2m+1))`.
    pub fn q_even_pow(&self, two_j: u64) -> BigUint {
        assert!(two_j.is_multiple_of(2), "odd powers of q are irrational");
        pow2(two_j / 2 * self.field_exponent())
    }

    /// `q^24`, the Steinberg degree.
    pub fn steinberg(&self) -> BigUint {
        self.q_even_pow(24)
    }

    /// The bound `q^13 sqrt2 / 2 = 2^(13m+6)` on 2-parts of non-Steinberg degrees.
    pub fn two_part_bound_exponent(&self) -> u64 {
        13 * u64::from(self.m) + 6
    }

    pub fn multiplicity_weighted_square_sum(&self) -> BigUint {
        self.rows.iter().map(|r| &r.multiplicity * &r.degree * &r.degree).sum()
    }

    pub fn two_part_exponent_set(&self) -> BTreeSet<u64> {
        self.degrees.iter().map(two_adic_valuation).collect()
    }

    /// Evaluated index of every maximal subgroup present at this `m`.
    pub fn maximal_subgroup_indices(&self) -> Result<Vec<(SubgroupName, BigUint)>> {
        maximal_subgroups(self.m)
            .into_iter()
            .map(|entry| {
                let value = match &entry.index {
                    IndexFormula::Expr(e) => e.evaluate_natural(self.m)?,
                    IndexFormula::Subfield { alpha } => {
                        let sub = order_for_field_exponent(self.field_exponent() / u64::from(*alpha));
                        let (quo, rem) = num_integer::Integer::div_rem(&self.order, &sub);
                        if !rem.is_zero() {
                            return Err(Error::InternalInconsistency(format!(
                                "subfield order does not divide the group order for alpha = {alpha}"
                            )));
                        }
                        quo
                    }
                };
                Ok((entry.name, value))
            })
            .collect()
    }
}

pub fn character_degree_set(m: u32) -> Result<DegreeSet> {
    Ok(ReeInstance::new(m)?.degrees().clone())
}

pub fn multiplicity_weighted_square_sum(m: u32) -> Result<BigUint> {
    Ok(ReeInstance::new(m)?.multiplicity_weighted_square_sum())
}

pub fn maximal_subgroup_indices(m: u32) -> Result<Vec<(SubgroupName, BigUint)>> {
    ReeInstance::new(m)?.maximal_subgroup_indices()
}

pub fn two_part_exponent_set(m: u32) -> Result<BTreeSet<u64>> {
    Ok(ReeInstance::new(m)?.two_part_exponent_set())
}

/// `|S|` as a polynomial identity: `q^24 (q^12+1)(q^8-1)(q^6+1)(q^2-1)`.
pub fn group_order_poly() -> crate::qpoly::QPoly {
    use crate::qpoly::QPoly;
    let qk = |k: usize, c: i64| QPoly::monomial(crate::exact_ring::Zs2::one(), k) + QPoly::from_ints(&[c]);
    QPoly::monomial(crate::exact_ring::Zs2::one(), 24) * qk(12, 1) * qk(8, -1) * qk(6, 1) * qk(2, -1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::{FactoredExpr, NamedFactor::*, QPoly};

    #[test]
    fn order_at_m1() {
        let expected = pow2(36) * 262_145u32 * 4095u32 * 513u32 * 7u32;
        assert_eq!(group_order(1), expected);
        let (two, _) = crate::exact_ring::p_part(&group_order(1), &BigUint::from(2u32));
        assert_eq!(two, pow2(36));
    }

    #[test]
    fn order_at_m2() {
        let odd = (pow2(30) + 1u32) * (pow2(20) - 1u32) * (pow2(15) + 1u32) * 31u32;
        assert_eq!(group_order(2), pow2(60) * odd);
    }

    #[test]
    fn square_sum_identity_symbolically() {
        let sum = character_table().iter().fold(QPoly::zero(), |acc, e| {
            let d = e.degree.expand();
            acc + &(&e.multiplicity * &(&d * &d))
        });
        assert_eq!(sum, group_order_poly());
    }

    #[test]
    fn degree_set_at_m1() {
        let inst = ReeInstance::new(1).unwrap();
        let cd = inst.degrees();
        assert_eq!(cd.min_nontrivial(), Some(&BigUint::from(64638u32)));
        assert!(cd.contains(&BigUint::from(68_719_476_736u64)));
        // Row 30 has multiplicity (q^2-8)(q^2-2)/48 = 0 here.
        let row30 = &inst.rows()[29];
        assert!(row30.multiplicity.is_zero());
        let unique_elsewhere = inst.rows().iter().filter(|r| r.degree == row30.degree).count() == 1;
        assert!(unique_elsewhere && !cd.contains(&row30.degree));
        let vanishing: Vec<usize> = inst.rows().iter().filter(|r| r.multiplicity.is_zero()).map(|r| r.row).collect();
        assert_eq!(vanishing, vec![30, 39, 43]);
        assert_eq!(cd.len(), 40);
    }

    #[test]
    fn square_sum_equals_order() {
        for m in 1..=8 {
            let inst = ReeInstance::new(m).unwrap();
            assert_eq!(inst.multiplicity_weighted_square_sum(), *inst.order(), "m = {m}");
        }
    }

    #[test]
    fn two_part_exponents_at_m1() {
        let got: Vec<u64> = two_part_exponent_set(1).unwrap().into_iter().collect();
        assert_eq!(got, vec![0, 1, 3, 4, 5, 6, 9, 15, 19, 36]);
    }

    #[test]
    fn parabolic_indices_match_factored_forms() {
        let fixed = fixed_maximal_subgroups();
        let expr = |i: usize| match &fixed[i].index {
            IndexFormula::Expr(e) => e.expand(),
            IndexFormula::Subfield { .. } => unreachable!(),
        };
        let pa = FactoredExpr::one().times(Phi4).with(Phi8, 2).times(Phi12).times(Phi24);
        let pb = FactoredExpr::one().with(Phi4, 2).times(Phi8).times(Phi12).times(Phi24);
        assert_eq!(expr(0), pa.expand());
        assert_eq!(expr(1), pb.expand());
    }

    #[test]
    fn indices_divide_order() {
        for m in [1, 2, 4, 7] {
            let inst = ReeInstance::new(m).unwrap();
            for (name, idx) in inst.maximal_subgroup_indices().unwrap() {
                assert!((inst.order() % &idx).is_zero(), "{name} at m = {m}");
            }
        }
    }

    #[test]
    fn pa_index_at_m1() {
        let idx = maximal_subgroup_indices(1).unwrap();
        assert_eq!(idx[0], (SubgroupName::Pa, BigUint::from(262_145u64 * 513 * 65)));
        assert_eq!(idx.len(), 11);
    }

    #[test]
    fn rejects_m_zero() {
        assert_eq!(ReeInstance::new(0).unwrap_err(), Error::InvalidParameter(0));
    }
}
