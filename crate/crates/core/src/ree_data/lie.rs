//! 2-parts of group orders and of selected unipotent character degrees for
//! the simple groups of Lie type in characteristic 2.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LieFamily {
    /// `L_n(2^b)`
    Linear,
    /// `U_n(2^b)`
    Unitary,
    /// `S_2n(2^b)`, isomorphic to `O_2n+1(2^b)`
    Symplectic,
    /// `O+_2n(2^b)`
    OrthogonalPlus,
    /// `O-_2n(2^b)`
    OrthogonalMinus,
    G2,
    TrialityD4,
    F4,
    E6,
    TwistedE6,
    E7,
    E8,
    /// `2B2(2^(2n+1))`
    Suzuki,
    /// `2G2(3^(2n+1))`
    ReeG2,
    /// `2F4(2^(2n+1))`
    ReeF4,
}

/// How the family is parameterised.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parameters {
    /// Rank-like `n >= min_n` together with the field exponent `b >= 1`.
    RankAndField { min_n: u64 },
    /// Field exponent `b >= 1` only.
    Field,
    /// Odd field exponent `2n+1` with `n >= 1`.
    OddField,
}

impl LieFamily {
    pub const ALL: [LieFamily; 15] = [
        LieFamily::Linear,
        LieFamily::Unitary,
        LieFamily::Symplectic,
        LieFamily::OrthogonalPlus,
        LieFamily::OrthogonalMinus,
        LieFamily::G2,
        LieFamily::TrialityD4,
        LieFamily::F4,
        LieFamily::E6,
        LieFamily::TwistedE6,
        LieFamily::E7,
        LieFamily::E8,
        LieFamily::Suzuki,
        LieFamily::ReeG2,
        LieFamily::ReeF4,
    ];

    pub fn parameters(self) -> Parameters {
        use LieFamily::*;
        match self {
            // U_2 coincides with L_2, so unitary groups start at n = 3.
            Linear => Parameters::RankAndField { min_n: 2 },
            Unitary => Parameters::RankAndField { min_n: 3 },
            Symplectic => Parameters::RankAndField { min_n: 2 },
            OrthogonalPlus | OrthogonalMinus => Parameters::RankAndField { min_n: 4 },
            G2 | TrialityD4 | F4 | E6 | TwistedE6 | E7 | E8 => Parameters::Field,
            Suzuki | ReeG2 | ReeF4 => Parameters::OddField,
        }
    }

    /// Whether the family has members in characteristic 2.
    pub fn has_characteristic_two(self) -> bool {
        self != LieFamily::ReeG2
    }

    /// Exponent of 2 in `|S|` divided by `b` (or the whole exponent for the
    /// odd-field families, where `n` is the parameter).
    ///
    /// For `L_n`: `n(n-1)/2`; `S_2n`: `n^2`; `O_2n`: `n(n-1)`.
    pub fn order2_coefficient(self, n: u64) -> u64 {
        use LieFamily::*;
        match self {
            Linear | Unitary => n * (n - 1) / 2,
            Symplectic => n * n,
            OrthogonalPlus | OrthogonalMinus => n * (n - 1),
            G2 => 6,
            TrialityD4 => 12,
            F4 => 24,
            E6 | TwistedE6 => 36,
            E7 => 63,
            E8 => 120,
            Suzuki => 2 * (2 * n + 1),
            ReeG2 => 3 * (2 * n + 1),
            ReeF4 => 12 * (2 * n + 1),
        }
    }

    /// Exponent of 2 in `|S|_2`.
    pub fn order2exp(self, n: u64, b: u64) -> u64 {
        match self.parameters() {
            Parameters::OddField => self.order2_coefficient(n),
            _ => self.order2_coefficient(n) * b,
        }
    }

    /// Exponent of the 2-part of the chosen unipotent character degree, when
    /// the family has a row in the unipotent table for this `n`.
    pub fn unip2exp(self, n: u64, b: u64) -> Option<u64> {
        use LieFamily::*;
        let n_i = n as i64;
        let b_i = b as i64;
        let e = match self {
            Linear | Unitary if n >= 3 => b_i * (n_i - 1) * (n_i - 2) / 2,
            Symplectic if n >= 2 => b_i * (n_i - 1) * (n_i - 1) - 1,
            OrthogonalPlus if n >= 4 => b_i * (n_i * n_i - 3 * n_i + 3),
            OrthogonalMinus if n >= 4 => b_i * (n_i * n_i - 3 * n_i + 2),
            TrialityD4 => 7 * b_i,
            F4 => 10 * b_i,
            E6 | TwistedE6 => 25 * b_i,
            E7 => 46 * b_i,
            E8 => 91 * b_i,
            // q^13 / sqrt2 with q^2 = 2^(2n+1).
            ReeF4 => 13 * n_i + 6,
            _ => return None,
        };
        (e >= 0).then_some(e as u64)
    }

    pub fn label(self, n: Option<u64>, b: Option<u64>) -> String {
        use LieFamily::*;
        let q1 = |b: Option<u64>| b.map_or("2^b".to_string(), |b| format!("2^{b}"));
        let n_s = n.map_or("n".to_string(), |n| n.to_string());
        match self {
            Linear => format!("L{n_s}({})", q1(b)),
            Unitary => format!("U{n_s}({})", q1(b)),
            Symplectic => format!("S{}({})", n.map_or("2n".to_string(), |n| (2 * n).to_string()), q1(b)),
            OrthogonalPlus => format!("O+{}({})", n.map_or("2n".to_string(), |n| (2 * n).to_string()), q1(b)),
            OrthogonalMinus => format!("O-{}({})", n.map_or("2n".to_string(), |n| (2 * n).to_string()), q1(b)),
            G2 => format!("G2({})", q1(b)),
            TrialityD4 => format!("3D4({})", q1(b)),
            F4 => format!("F4({})", q1(b)),
            E6 => format!("E6({})", q1(b)),
            TwistedE6 => format!("2E6({})", q1(b)),
            E7 => format!("E7({})", q1(b)),
            E8 => format!("E8({})", q1(b)),
            Suzuki => format!("2B2(2^{})", n.map_or("(2n+1)".to_string(), |n| (2 * n + 1).to_string())),
            ReeG2 => format!("2G2(3^{})", n.map_or("(2n+1)".to_string(), |n| (2 * n + 1).to_string())),
            ReeF4 => format!("2F4(2^{})", n.map_or("(2n+1)".to_string(), |n| (2 * n + 1).to_string())),
        }
    }
}

impl fmt::Display for LieFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use LieFamily::*;
        f.write_str(match self {
            Linear => "L",
            Unitary => "U",
            Symplectic => "S",
            OrthogonalPlus => "O+",
            OrthogonalMinus => "O-",
            G2 => "G2",
            TrialityD4 => "3D4",
            F4 => "F4",
            E6 => "E6",
            TwistedE6 => "2E6",
            E7 => "E7",
            E8 => "E8",
            Suzuki => "2B2",
            ReeG2 => "2G2",
            ReeF4 => "2F4",
        })
    }
}

/// A row of the unipotent-character table.
#[derive(Clone, Debug, Serialize)]
pub struct UnipotentRow {
    pub group: &'static str,
    pub symbol: &'static str,
    pub p_part: &'static str,
    /// Recorded but not used to eliminate candidates.
    pub excluded_from_bounds: bool,
}

pub fn unipotent_table() -> Vec<UnipotentRow> {
    let row = |group, symbol, p_part| UnipotentRow { group, symbol, p_part, excluded_from_bounds: false };
    vec![
        row("L_n^eps(p^b), n>=3", "(1^(n-2),2)", "p^(b(n-1)(n-2)/2)"),
        row("S_2n(p^b), p=2", "(0 1 2 ... n-2 n-1 n ; 1 2 ... n-2)", "2^(b(n-1)^2-1)"),
        row("S_2n(p^b), p>2", "", "p^(b(n-1)^2)"),
        row("O_2n+1(p^b), p>2", "(0 1 2 ... n-2 n-1 n ; 1 2 ... n-2)", "p^(b(n-1)^2)"),
        row("O+_2n(p^b)", "(0 1 2 ... n-3 n-1 ; 1 2 3 ... n-2 n-1)", "p^(b(n^2-3n+3))"),
        row("O-_2n(p^b)", "(0 1 2 ... n-2 n-1 ; 1 2 ... n-2)", "p^(b(n^2-3n+2))"),
        row("3D4(p^b)", "phi''_{1,3}", "p^(7b)"),
        row("F4(p^b)", "phi_{9,10}", "p^(10b)"),
        UnipotentRow { group: "2F4(q^2)", symbol: "2B2[a],eps", p_part: "q^13/sqrt2", excluded_from_bounds: true },
        row("E6(p^b)", "phi_{6,25}", "p^(25b)"),
        row("2E6(p^b)", "phi''_{2,16}", "p^(25b)"),
        row("E7(p^b)", "phi_{7,46}", "p^(46b)"),
        row("E8(p^b)", "phi_{8,91}", "p^(91b)"),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_exponents_match_known_groups() {
        // |L_3(4)|_2 = 2^6, |S_4(4)|_2 = 2^8, |G_2(4)|_2 = 2^12, |Sz(8)|_2 = 2^6.
        assert_eq!(LieFamily::Linear.order2exp(3, 2), 6);
        assert_eq!(LieFamily::Symplectic.order2exp(2, 2), 8);
        assert_eq!(LieFamily::G2.order2exp(0, 2), 12);
        assert_eq!(LieFamily::Suzuki.order2exp(1, 0), 6);
        assert_eq!(LieFamily::ReeF4.order2exp(1, 0), 36);
    }

    #[test]
    fn unipotent_exponents() {
        assert_eq!(LieFamily::Linear.unip2exp(9, 1), Some(28));
        assert_eq!(LieFamily::Symplectic.unip2exp(4, 1), Some(8));
        assert_eq!(LieFamily::OrthogonalPlus.unip2exp(4, 3), Some(21));
        assert_eq!(LieFamily::OrthogonalMinus.unip2exp(4, 3), Some(18));
        assert_eq!(LieFamily::ReeF4.unip2exp(1, 0), Some(19));
        assert_eq!(LieFamily::G2.unip2exp(0, 2), None);
        assert_eq!(LieFamily::Linear.unip2exp(2, 5), None);
    }

    #[test]
    fn unipotent_table_rows() {
        let rows = unipotent_table();
        assert_eq!(rows.len(), 13);
        assert_eq!(rows.iter().filter(|r| r.excluded_from_bounds).count(), 1);
    }
}
