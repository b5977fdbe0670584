//! Irreducible character degrees of 2F4(q^2) with their multiplicities.

use std::sync::LazyLock;

use num_rational::BigRational;

use crate::exact_ring::Zs2;
use crate::qpoly::{FactoredExpr, NamedFactor, QPoly};

use NamedFactor::*;

/// One row of the degree table: a degree shared by `multiplicity` irreducibles.
#[derive(Clone, Debug)]
pub struct CharTableEntry {
    /// 1-based position in the table.
    pub row: usize,
    pub degree: FactoredExpr,
    /// Stored expanded.
    pub multiplicity: QPoly,
    /// The multiplicity as originally written.
    pub multiplicity_printed: &'static str,
}

pub const ROW_COUNT: usize = 43;

/// Row index (1-based) of the Steinberg degree `q^24`.
pub const STEINBERG_ROW: usize = 36;

fn frac(c: Zs2, den: i64) -> Zs2 {
    c.scale(&BigRational::new(1.into(), den.into()))
}

/// `c/den` as a degree coefficient.
fn rat(den: i64) -> Zs2 {
    Zs2::rational(1, den)
}

/// `sqrt2/den`.
fn s2(den: i64) -> Zs2 {
    frac(Zs2::sqrt2(), den)
}

fn deg(coeff: Zs2, q_exp: u32, factors: &[(NamedFactor, u32)]) -> FactoredExpr {
    factors.iter().fold(FactoredExpr::new(coeff, q_exp), |e, &(f, k)| e.with(f, k))
}

fn q() -> QPoly {
    QPoly::q()
}

/// `q + c*sqrt2`.
fn q_plus_sqrt2(c: i64) -> QPoly {
    QPoly::from_coeffs(vec![Zs2::from_ints(0, c), Zs2::one()])
}

/// `q^2 + c`.
fn q2_plus(c: i64) -> QPoly {
    QPoly::from_ints(&[c, 0, 1])
}

fn over(p: QPoly, den: i64) -> QPoly {
    p.scale(&rat(den))
}

fn constant(c: i64) -> QPoly {
    QPoly::constant(Zs2::from(c))
}

fn build() -> Vec<CharTableEntry> {
    let one = Zs2::one;
    let rows: Vec<(FactoredExpr, QPoly, &'static str)> = vec![
        (deg(one(), 0, &[]), constant(1), "1"),
        (deg(s2(2), 1, &[(Phi1, 1), (Phi2, 1), (Phi4, 2), (Phi12, 1)]), constant(2), "2"),
        (deg(one(), 2, &[(Phi12, 1), (Phi24, 1)]), constant(1), "1"),
        (deg(one(), 0, &[(Phi1, 1), (Phi2, 1), (Phi8, 2), (Phi24, 1)]), constant(1), "1"),
        (deg(rat(12), 4, &[(U1, 2), (W1, 1), (Phi1, 2), (Phi2, 2), (Phi12, 1)]), constant(1), "1"),
        (deg(rat(12), 4, &[(U2, 2), (W2, 1), (Phi1, 2), (Phi2, 2), (Phi12, 1)]), constant(1), "1"),
        (deg(rat(6), 4, &[(Phi1, 2), (Phi2, 2), (Phi4, 2), (Phi24, 1)]), constant(1), "1"),
        (deg(rat(4), 4, &[(W1, 1), (Phi1, 2), (Phi2, 2), (Phi4, 2), (Phi12, 1)]), constant(2), "2"),
        (deg(rat(4), 4, &[(U1, 2), (W2, 1), (Phi4, 2), (Phi12, 1)]), constant(1), "1"),
        (deg(rat(4), 4, &[(W2, 1), (Phi1, 2), (Phi2, 2), (Phi4, 2), (Phi12, 1)]), constant(2), "2"),
        (deg(rat(4), 4, &[(U2, 2), (W1, 1), (Phi4, 2), (Phi12, 1)]), constant(1), "1"),
        (deg(rat(3), 4, &[(Phi1, 2), (Phi2, 2), (Phi12, 1), (Phi24, 1)]), constant(1), "1"),
        (deg(rat(3), 4, &[(Phi1, 2), (Phi2, 2), (Phi4, 2), (Phi8, 2)]), constant(2), "2"),
        (deg(rat(2), 4, &[(Phi8, 2), (Phi24, 1)]), constant(1), "1"),
        (
            deg(one(), 0, &[(U1, 1), (Phi1, 1), (Phi2, 1), (Phi4, 2), (Phi12, 1), (Phi24, 1)]),
            over(q() * q_plus_sqrt2(1), 4),
            "q(q+sqrt2)/4",
        ),
        (deg(one(), 0, &[(Phi4, 2), (Phi8, 1), (Phi12, 1), (Phi24, 1)]), over(q2_plus(-2), 2), "(q^2-2)/2"),
        (
            deg(one(), 0, &[(U2, 1), (Phi1, 1), (Phi2, 1), (Phi4, 2), (Phi12, 1), (Phi24, 1)]),
            over(q_plus_sqrt2(-1) * q(), 4),
            "(q-sqrt2)q/4",
        ),
        (deg(one(), 2, &[(Phi1, 2), (Phi2, 2), (Phi8, 2), (Phi24, 1)]), constant(1), "1"),
        (deg(one(), 0, &[(Phi1, 1), (Phi2, 1), (Phi8, 2), (Phi12, 1), (Phi24, 1)]), over(q2_plus(-2), 2), "(q^2-2)/2"),
        (deg(one(), 10, &[(Phi12, 1), (Phi24, 1)]), constant(1), "1"),
        (deg(one(), 0, &[(Phi4, 1), (Phi8, 2), (Phi12, 1), (Phi24, 1)]), over(q2_plus(-2), 2), "(q^2-2)/2"),
        (
            deg(s2(2), 1, &[(U1, 1), (Phi1, 2), (Phi2, 2), (Phi4, 2), (Phi12, 1), (Phi24, 1)]),
            over(q_plus_sqrt2(1) * q(), 2),
            "(q+sqrt2)q/2",
        ),
        (deg(s2(2), 13, &[(Phi1, 1), (Phi2, 1), (Phi4, 2), (Phi12, 1)]), constant(2), "2"),
        (deg(s2(2), 1, &[(Phi1, 1), (Phi2, 1), (Phi4, 2), (Phi8, 1), (Phi12, 1), (Phi24, 1)]), q2_plus(-2), "q^2-2"),
        (
            deg(s2(2), 1, &[(U2, 1), (Phi1, 2), (Phi2, 2), (Phi4, 2), (Phi12, 1), (Phi24, 1)]),
            over(q_plus_sqrt2(-1) * q(), 2),
            "(q-sqrt2)q/2",
        ),
        (
            deg(one(), 0, &[(U1, 2), (Phi1, 2), (Phi2, 2), (Phi4, 2), (Phi12, 1), (Phi24, 1)]),
            over(q_plus_sqrt2(2) * q2_plus(-2) * q(), 96),
            "(q+2sqrt2)(q^2-2)q/96",
        ),
        (
            deg(one(), 0, &[(W1, 1), (Phi1, 2), (Phi2, 2), (Phi4, 2), (Phi8, 2), (Phi12, 1)]),
            over(q_plus_sqrt2(1) * q2_plus(1) * q(), 12),
            "(q+sqrt2)(q^2+1)q/12",
        ),
        (
            deg(one(), 4, &[(U1, 1), (Phi1, 1), (Phi2, 1), (Phi4, 2), (Phi12, 1), (Phi24, 1)]),
            over(q_plus_sqrt2(1) * q(), 4),
            "(q+sqrt2)q/4",
        ),
        (
            deg(one(), 0, &[(U1, 1), (Phi1, 1), (Phi2, 1), (Phi4, 2), (Phi8, 1), (Phi12, 1), (Phi24, 1)]),
            over(q_plus_sqrt2(-1) * q() * q_plus_sqrt2(1).pow(2), 8),
            "(q-sqrt2)q(q+sqrt2)^2/8",
        ),
        (
            deg(one(), 0, &[(Phi1, 2), (Phi2, 2), (Phi8, 2), (Phi12, 1), (Phi24, 1)]),
            over(q2_plus(-8) * q2_plus(-2), 48),
            "(q^2-8)(q^2-2)/48",
        ),
        (deg(one(), 2, &[(Phi1, 1), (Phi2, 1), (Phi8, 2), (Phi12, 1), (Phi24, 1)]), over(q2_plus(-2), 2), "(q^2-2)/2"),
        (
            deg(one(), 0, &[(Phi1, 2), (Phi2, 2), (Phi4, 2), (Phi8, 1), (Phi12, 1), (Phi24, 1)]),
            over(q2_plus(-2) * q().pow(2), 16),
            "(q^2-2)q^2/16",
        ),
        (deg(one(), 6, &[(Phi1, 1), (Phi2, 1), (Phi8, 2), (Phi24, 1)]), constant(1), "1"),
        (
            deg(one(), 0, &[(Phi1, 1), (Phi2, 1), (Phi4, 1), (Phi8, 2), (Phi12, 1), (Phi24, 1)]),
            over(q2_plus(-2) * q().pow(2), 4),
            "(q^2-2)q^2/4",
        ),
        (
            deg(one(), 0, &[(Phi1, 2), (Phi2, 2), (Phi4, 2), (Phi8, 2), (Phi24, 1)]),
            over(q2_plus(-2) * q2_plus(1), 6),
            "(q^2-2)(q^2+1)/6",
        ),
        (deg(one(), 24, &[]), constant(1), "1"),
        (deg(one(), 2, &[(Phi4, 1), (Phi8, 2), (Phi12, 1), (Phi24, 1)]), over(q2_plus(-2), 2), "(q^2-2)/2"),
        (deg(one(), 4, &[(Phi4, 2), (Phi8, 1), (Phi12, 1), (Phi24, 1)]), over(q2_plus(-2), 2), "(q^2-2)/2"),
        (
            deg(one(), 0, &[(Phi4, 2), (Phi8, 2), (Phi12, 1), (Phi24, 1)]),
            over(q2_plus(-8) * q2_plus(-2), 16),
            "(q^2-8)(q^2-2)/16",
        ),
        (
            deg(one(), 0, &[(W2, 1), (Phi1, 2), (Phi2, 2), (Phi4, 2), (Phi8, 2), (Phi12, 1)]),
            over(q_plus_sqrt2(-1) * q2_plus(1) * q(), 12),
            "(q-sqrt2)(q^2+1)q/12",
        ),
        (
            deg(one(), 4, &[(U2, 1), (Phi1, 1), (Phi2, 1), (Phi4, 2), (Phi12, 1), (Phi24, 1)]),
            over(q_plus_sqrt2(-1) * q(), 4),
            "(q-sqrt2)q/4",
        ),
        // Unbalanced as written; read as the mirror of row 29.
        (
            deg(one(), 0, &[(U2, 1), (Phi1, 1), (Phi2, 1), (Phi4, 2), (Phi8, 1), (Phi12, 1), (Phi24, 1)]),
            over(q_plus_sqrt2(1) * q() * q_plus_sqrt2(-1).pow(2), 8),
            "(q+sqrt2)q(q-sqrt2)^2/8",
        ),
        (
            deg(one(), 0, &[(U2, 2), (Phi1, 2), (Phi2, 2), (Phi4, 2), (Phi12, 1), (Phi24, 1)]),
            over(q_plus_sqrt2(-2) * q2_plus(-2) * q(), 96),
            "(q-2sqrt2)(q^2-2)q/96",
        ),
    ];
    rows.into_iter()
        .enumerate()
        .map(|(i, (degree, multiplicity, multiplicity_printed))| CharTableEntry {
            row: i + 1,
            degree,
            multiplicity,
            multiplicity_printed,
        })
        .collect()
}

static TABLE: LazyLock<Vec<CharTableEntry>> = LazyLock::new(build);

/// All rows, in table order.
pub fn character_table() -> &'static [CharTableEntry] {
    &TABLE
}
