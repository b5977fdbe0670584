use std::fmt;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::poly::{q_power, QPoly};
use crate::error::{Error, Result};
use crate::exact_ring::Zs2;

/// The cyclotomic and sqrt2-twisted factors that appear in the Ree group tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum NamedFactor {
    Phi1,
    Phi2,
    Phi4,
    Phi8,
    Phi12,
    Phi24,
    U1,
    U2,
    W1,
    W2,
}

impl NamedFactor {
    pub const ALL: [NamedFactor; 10] = [
        NamedFactor::Phi1,
        NamedFactor::Phi2,
        NamedFactor::Phi4,
        NamedFactor::Phi8,
        NamedFactor::Phi12,
        NamedFactor::Phi24,
        NamedFactor::U1,
        NamedFactor::U2,
        NamedFactor::W1,
        NamedFactor::W2,
    ];

    /// Defining polynomial in `q`.
    pub fn poly(self) -> QPoly {
        let s = Zs2::sqrt2;
        let one = Zs2::one;
        match self {
            NamedFactor::Phi1 => QPoly::from_ints(&[-1, 1]),
            NamedFactor::Phi2 => QPoly::from_ints(&[1, 1]),
            NamedFactor::Phi4 => QPoly::from_ints(&[1, 0, 1]),
            NamedFactor::Phi8 => QPoly::from_ints(&[1, 0, 0, 0, 1]),
            NamedFactor::Phi12 => QPoly::from_ints(&[1, 0, -1, 0, 1]),
            NamedFactor::Phi24 => QPoly::from_ints(&[1, 0, 0, 0, -1, 0, 0, 0, 1]),
            NamedFactor::U1 => QPoly::from_coeffs(vec![one(), -s(), one()]),
            NamedFactor::U2 => QPoly::from_coeffs(vec![one(), s(), one()]),
            NamedFactor::W1 => QPoly::from_coeffs(vec![one(), -s(), one(), -s(), one()]),
            NamedFactor::W2 => QPoly::from_coeffs(vec![one(), s(), one(), s(), one()]),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            NamedFactor::Phi1 => "Phi1",
            NamedFactor::Phi2 => "Phi2",
            NamedFactor::Phi4 => "Phi4",
            NamedFactor::Phi8 => "Phi8",
            NamedFactor::Phi12 => "Phi12",
            NamedFactor::Phi24 => "Phi24",
            NamedFactor::U1 => "u1",
            NamedFactor::U2 => "u2",
            NamedFactor::W1 => "w1",
            NamedFactor::W2 => "w2",
        }
    }

    pub fn evaluate(self, m: u32) -> Zs2 {
        self.cached_poly().evaluate(m)
    }

    fn cached_poly(self) -> &'static QPoly {
        static POLYS: OnceLock<Vec<QPoly>> = OnceLock::new();
        &POLYS.get_or_init(|| NamedFactor::ALL.iter().map(|f| f.poly()).collect())[self as usize]
    }
}

impl fmt::Display for NamedFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// `(a + b sqrt2) / d` over the integers; products skip normalisation.
struct Scaled {
    a: BigInt,
    b: BigInt,
    d: BigInt,
}

impl Scaled {
    fn one() -> Self {
        Scaled { a: BigInt::one(), b: BigInt::zero(), d: BigInt::one() }
    }

    fn mul(&self, o: &Scaled) -> Scaled {
        Scaled { a: &self.a * &o.a + ((&self.b * &o.b) << 1u32), b: &self.a * &o.b + &self.b * &o.a, d: &self.d * &o.d }
    }

    fn pow(&self, e: u32) -> Scaled {
        (0..e).fold(Scaled::one(), |acc, _| acc.mul(self))
    }
}

/// One factor of a [`FactoredExpr`]: a named symbol or a literal polynomial
/// such as `q^12 + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Factor {
    Named(NamedFactor),
    Inline(QPoly),
}

impl Factor {
    pub fn poly(&self) -> QPoly {
        match self {
            Factor::Named(n) => n.poly(),
            Factor::Inline(p) => p.clone(),
        }
    }
}

impl From<NamedFactor> for Factor {
    fn from(n: NamedFactor) -> Self {
        Factor::Named(n)
    }
}

impl From<QPoly> for Factor {
    fn from(p: QPoly) -> Self {
        Factor::Inline(p)
    }
}

/// `coeff * q^q_exp * prod(factor_i ^ exp_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FactoredExpr {
    coeff: Zs2,
    q_exp: u32,
    factors: Vec<(Factor, u32)>,
}

impl FactoredExpr {
    pub fn new(coeff: Zs2, q_exp: u32) -> Self {
        Self { coeff, q_exp, factors: Vec::new() }
    }

    /// `q^k` with unit coefficient.
    pub fn q_pow(k: u32) -> Self {
        Self::new(Zs2::one(), k)
    }

    pub fn one() -> Self {
        Self::q_pow(0)
    }

    /// Multiplies by `factor^exp`; a zero exponent is ignored.
    pub fn with(mut self, factor: impl Into<Factor>, exp: u32) -> Self {
        if exp > 0 {
            self.factors.push((factor.into(), exp));
        }
        self
    }

    pub fn times(self, factor: impl Into<Factor>) -> Self {
        self.with(factor, 1)
    }

    /// Concatenates two products.
    pub fn mul(&self, other: &FactoredExpr) -> Self {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        Self { coeff: &self.coeff * &other.coeff, q_exp: self.q_exp + other.q_exp, factors }
    }

    pub fn coeff(&self) -> &Zs2 {
        &self.coeff
    }

    pub fn q_exp(&self) -> u32 {
        self.q_exp
    }

    pub fn factors(&self) -> &[(Factor, u32)] {
        &self.factors
    }

    pub fn expand(&self) -> QPoly {
        self.factors
            .iter()
            .fold(QPoly::monomial(self.coeff.clone(), self.q_exp as usize), |acc, (f, e)| &acc * &f.poly().pow(*e))
    }

    /// Sum of factor degrees times exponents, plus the `q` power.
    pub fn formal_degree(&self) -> usize {
        self.q_exp as usize
            + self.factors.iter().map(|(f, e)| f.poly().degree().unwrap_or(0) * *e as usize).sum::<usize>()
    }

    /// Exact value at `q = 2^m * sqrt2`, evaluated factor by factor.
    pub fn evaluate(&self, m: u32) -> Zs2 {
        let c = &self.coeff * &q_power(m, self.q_exp);
        let den = c.rational_part().denom().lcm(c.sqrt2_part().denom());
        let start =
            Scaled { a: (c.rational_part() * &den).to_integer(), b: (c.sqrt2_part() * &den).to_integer(), d: den };
        let v = self.factors.iter().fold(start, |acc, (f, e)| {
            let (a, b, d) = match f {
                Factor::Named(n) => n.cached_poly().evaluate_scaled(m),
                Factor::Inline(p) => p.evaluate_scaled(m),
            };
            acc.mul(&Scaled { a, b, d }.pow(*e))
        });
        Zs2::new(BigRational::new(v.a, v.d.clone()), BigRational::new(v.b, v.d))
    }

    pub fn evaluate_integer(&self, m: u32) -> Result<BigInt> {
        self.evaluate(m).to_integer()
    }

    /// The value as a positive natural number.
    pub fn evaluate_natural(&self, m: u32) -> Result<BigUint> {
        let v = self.evaluate_integer(m)?;
        if v.is_positive() {
            Ok(v.to_biguint().expect("positive"))
        } else {
            Err(Error::NotRationalInteger(format!("{v} is not positive")))
        }
    }
}

impl fmt::Display for FactoredExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        let a = self.coeff.rational_part();
        let b = self.coeff.sqrt2_part();
        let (magnitude, with_sqrt2, simple) = if b.is_zero() {
            (a.clone(), false, true)
        } else if a.is_zero() {
            (b.clone(), true, true)
        } else {
            (a.clone(), false, false)
        };
        if !simple {
            parts.push(format!("({})", self.coeff));
        } else if !magnitude.numer().is_one() {
            parts.push(magnitude.numer().to_string());
        }
        match self.q_exp {
            0 => {}
            1 => parts.push("q".into()),
            k => parts.push(format!("q^{k}")),
        }
        if with_sqrt2 {
            parts.push("sqrt2".into());
        }
        for (fac, e) in &self.factors {
            let base = match fac {
                Factor::Named(n) => n.symbol().to_string(),
                Factor::Inline(p) => format!("({p})"),
            };
            parts.push(if *e == 1 { base } else { format!("{base}^{e}") });
        }
        if parts.is_empty() {
            parts.push("1".into());
        }
        write!(f, "{}", parts.join("*"))?;
        if simple && !magnitude.denom().is_one() {
            write!(f, "/{}", magnitude.denom())?;
        }
        Ok(())
    }
}

/// Expands the product of the given named factors.
pub fn expand_product(factors: &[NamedFactor]) -> QPoly {
    factors.iter().fold(FactoredExpr::one(), |e, &f| e.times(f)).expand()
}
