//! Maximal subgroups of 2F4(q^2) and their indices.

use std::fmt;
use std::sync::LazyLock;

use serde::{Deserialize, Serialize};

use crate::exact_ring::{divisors_u64, is_prime_u64, Zs2};
use crate::qpoly::{FactoredExpr, NamedFactor, QPoly};

use NamedFactor::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SubgroupName {
    Pa,
    Pb,
    U3,
    TorusQ4p1,
    TorusU1,
    TorusU2,
    CyclicW1,
    CyclicW2,
    PGU3,
    SzWr2,
    Sz2,
    /// `2F4(q0^2)` with `q^2 = q0^(2*alpha)`.
    Subfield(u32),
}

impl SubgroupName {
    pub fn is_parabolic(self) -> bool {
        matches!(self, SubgroupName::Pa | SubgroupName::Pb)
    }
}

impl fmt::Display for SubgroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubgroupName::Pa => f.write_str("Pa"),
            SubgroupName::Pb => f.write_str("Pb"),
            SubgroupName::U3 => f.write_str("3U3"),
            SubgroupName::TorusQ4p1 => f.write_str("TorusQ4p1"),
            SubgroupName::TorusU1 => f.write_str("TorusU1"),
            SubgroupName::TorusU2 => f.write_str("TorusU2"),
            SubgroupName::CyclicW1 => f.write_str("CyclicW1"),
            SubgroupName::CyclicW2 => f.write_str("CyclicW2"),
            SubgroupName::PGU3 => f.write_str("PGU3"),
            SubgroupName::SzWr2 => f.write_str("SzWr2"),
            SubgroupName::Sz2 => f.write_str("Sz2"),
            SubgroupName::Subfield(a) => write!(f, "Subfield({a})"),
        }
    }
}

#[derive(Clone, Debug)]
pub enum IndexFormula {
    Expr(FactoredExpr),
    /// `|2F4(q^2)| / |2F4(q0^2)|`; depends on `m` through `q0`.
    Subfield {
        alpha: u32,
    },
}

#[derive(Clone, Debug)]
pub struct MaximalSubgroupEntry {
    pub name: SubgroupName,
    pub structure: &'static str,
    pub index: IndexFormula,
}

/// `q^k + c`.
fn qk_plus(k: usize, c: i64) -> QPoly {
    QPoly::monomial(Zs2::one(), k) + QPoly::constant(Zs2::from(c))
}

fn build() -> Vec<MaximalSubgroupEntry> {
    let entry =
        |name, structure, e: FactoredExpr| MaximalSubgroupEntry { name, structure, index: IndexFormula::Expr(e) };
    let coeff = |den| Zs2::rational(1, den);
    vec![
        entry(
            SubgroupName::Pa,
            "[q^22]:(L2(q^2) x (q^2-1))",
            FactoredExpr::one().times(qk_plus(12, 1)).times(qk_plus(6, 1)).times(qk_plus(4, 1)),
        ),
        entry(
            SubgroupName::Pb,
            "[q^20]:(Sz(q^2) x (q^2-1))",
            FactoredExpr::one().times(qk_plus(12, 1)).times(qk_plus(6, 1)).times(qk_plus(2, 1)),
        ),
        entry(
            SubgroupName::U3,
            "3.U3(q^2):2",
            FactoredExpr::new(coeff(2), 18).times(qk_plus(12, 1)).times(qk_plus(4, 1)).times(qk_plus(2, -1)),
        ),
        entry(
            SubgroupName::TorusQ4p1,
            "(Z_{q^2+1} x Z_{q^2+1}):GL2(3)",
            FactoredExpr::new(coeff(48), 24).with(qk_plus(4, 1), 2).with(qk_plus(2, -1), 2).times(Phi12).times(Phi24),
        ),
        entry(
            SubgroupName::TorusU1,
            "(Z_{u1} x Z_{u1}):[96]",
            FactoredExpr::new(coeff(96), 24).with(qk_plus(4, -1), 2).with(U2, 2).times(Phi12).times(Phi24),
        ),
        entry(
            SubgroupName::TorusU2,
            "(Z_{u2} x Z_{u2}):[96]",
            FactoredExpr::new(coeff(96), 24).with(qk_plus(4, -1), 2).with(U1, 2).times(Phi12).times(Phi24),
        ),
        entry(
            SubgroupName::CyclicW1,
            "Z_{w1}:12",
            FactoredExpr::new(coeff(12), 24).with(qk_plus(8, -1), 2).times(W2).times(Phi12),
        ),
        entry(
            SubgroupName::CyclicW2,
            "Z_{w2}:12",
            FactoredExpr::new(coeff(12), 24).with(qk_plus(8, -1), 2).times(W1).times(Phi12),
        ),
        entry(
            SubgroupName::PGU3,
            "PGU3(q^2):2",
            FactoredExpr::new(coeff(2), 18).times(qk_plus(4, 1)).times(qk_plus(2, -1)).times(Phi24),
        ),
        entry(
            SubgroupName::SzWr2,
            "Sz(q^2) wr 2",
            FactoredExpr::new(coeff(2), 16).times(qk_plus(6, 1)).times(qk_plus(2, 1)).times(Phi24),
        ),
        entry(
            SubgroupName::Sz2,
            "Sz(q^2):2",
            FactoredExpr::new(coeff(2), 20).times(qk_plus(8, -1)).times(qk_plus(6, 1)).times(Phi24),
        ),
    ]
}

static FIXED: LazyLock<Vec<MaximalSubgroupEntry>> = LazyLock::new(build);

/// The eleven rows whose index is a fixed expression in `q`.
pub fn fixed_maximal_subgroups() -> &'static [MaximalSubgroupEntry] {
    &FIXED
}

/// Primes `alpha` giving a simple subfield subgroup `2F4(2^((2m+1)/alpha))`.
///
/// `2F4(2)` is not simple, so `alpha = 2m+1` itself is excluded.
pub fn subfield_primes(m: u32) -> Vec<u32> {
    let k = 2 * u64::from(m) + 1;
    divisors_u64(k).into_iter().filter(|&a| a > 2 && is_prime_u64(a) && k / a >= 3).map(|a| a as u32).collect()
}

/// Fixed rows followed by one subfield row per admissible prime.
pub fn maximal_subgroups(m: u32) -> Vec<MaximalSubgroupEntry> {
    let mut rows = fixed_maximal_subgroups().to_vec();
    rows.extend(subfield_primes(m).into_iter().map(|alpha| MaximalSubgroupEntry {
        name: SubgroupName::Subfield(alpha),
        structure: "2F4(q0^2), q^2 = q0^(2 alpha), alpha prime",
        index: IndexFormula::Subfield { alpha },
    }));
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subfield_enumeration() {
        assert!(subfield_primes(1).is_empty());
        assert!(subfield_primes(2).is_empty());
        assert_eq!(subfield_primes(4), vec![3]);
        assert_eq!(subfield_primes(7), vec![3, 5]);
        // 2m+1 = 13 is prime, so only 2F4(2) would arise.
        assert!(subfield_primes(6).is_empty());
    }

    #[test]
    fn eleven_fixed_rows() {
        assert_eq!(fixed_maximal_subgroups().len(), 11);
        assert_eq!(maximal_subgroups(4).len(), 12);
    }
}
