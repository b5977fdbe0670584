use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exact_ring::Zs2;

/// The evaluation point `q = 2^m * sqrt2`, so that `q^2 = 2^(2m+1)`.
pub fn q_value(m: u32) -> Zs2 {
    Zs2::new(BigRational::zero(), BigRational::from_integer(BigInt::one() << m))
}

fn q_shift(m: u32, k: u64) -> u64 {
    u64::from(m) * k + k / 2
}

/// `q^k` at `q = 2^m * sqrt2`: a power of two, times sqrt2 when `k` is odd.
pub fn q_power(m: u32, k: u32) -> Zs2 {
    let v = BigRational::from_integer(BigInt::one() << q_shift(m, u64::from(k)));
    if k.is_multiple_of(2) {
        Zs2::new(v, BigRational::zero())
    } else {
        Zs2::new(BigRational::zero(), v)
    }
}

/// Dense univariate polynomial in `q` with coefficients in Q(sqrt2).
///
/// Coefficient `i` multiplies `q^i`; trailing zeros are always trimmed, so the
/// zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<Zs2>,
}

impl QPoly {
    pub fn from_coeffs(mut coeffs: Vec<Zs2>) -> Self {
        while coeffs.last().is_some_and(Zs2::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Zs2::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Zs2) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(Zs2::one())
    }

    /// `c * q^k`.
    pub fn monomial(c: Zs2, k: usize) -> Self {
        let mut coeffs = vec![Zs2::zero(); k];
        coeffs.push(c);
        Self::from_coeffs(coeffs)
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(Zs2::one(), 1)
    }

    pub fn coeffs(&self) -> &[Zs2] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Zs2 {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &Zs2) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(QPoly::one(), |acc, _| &acc * self)
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Zs2::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Horner evaluation at an arbitrary point of Q(sqrt2).
    pub fn eval_at(&self, x: &Zs2) -> Zs2 {
        self.coeffs.iter().rev().fold(Zs2::zero(), |acc, c| &(&acc * x) + c)
    }

    /// Value at `q = 2^m * sqrt2`, summed over a common denominator with
    /// the powers of `q` taken in closed form.
    pub fn evaluate(&self, m: u32) -> Zs2 {
        let (ra, rb, den) = self.evaluate_scaled(m);
        Zs2::new(BigRational::new(ra, den.clone()), BigRational::new(rb, den))
    }

    /// `(a, b, d)` with value `(a + b sqrt2) / d`, unreduced.
    pub(crate) fn evaluate_scaled(&self, m: u32) -> (BigInt, BigInt, BigInt) {
        let den =
            self.coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(c.rational_part().denom()).lcm(c.sqrt2_part().denom()));
        let (mut ra, mut rb) = (BigInt::zero(), BigInt::zero());
        for (i, c) in self.coeffs.iter().enumerate() {
            let na = (c.rational_part() * &den).to_integer();
            let nb = (c.sqrt2_part() * &den).to_integer();
            let e = q_shift(m, i as u64);
            if i % 2 == 0 {
                ra += na << e;
                rb += nb << e;
            } else {
                ra += nb << (e + 1);
                rb += na << e;
            }
        }
        (ra, rb, den)
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_rational() && c.rational_part().is_integer())
    }
}

fn add_polys(x: &QPoly, y: &QPoly) -> QPoly {
    let n = x.coeffs.len().max(y.coeffs.len());
    QPoly::from_coeffs((0..n).map(|i| x.coeff(i) + y.coeff(i)).collect())
}

fn sub_polys(x: &QPoly, y: &QPoly) -> QPoly {
    let n = x.coeffs.len().max(y.coeffs.len());
    QPoly::from_coeffs((0..n).map(|i| x.coeff(i) - y.coeff(i)).collect())
}

fn mul_polys(x: &QPoly, y: &QPoly) -> QPoly {
    if x.is_zero() || y.is_zero() {
        return QPoly::zero();
    }
    let mut out = vec![Zs2::zero(); x.coeffs.len() + y.coeffs.len() - 1];
    for (i, a) in x.coeffs.iter().enumerate() {
        for (j, b) in y.coeffs.iter().enumerate() {
            out[i + j] = &out[i + j] + &(a * b);
        }
    }
    QPoly::from_coeffs(out)
}

macro_rules! poly_binop {
    ($Trait:ident, $method:ident, $f:ident) => {
        impl $Trait<&QPoly> for &QPoly {
            type Output = QPoly;
            fn $method(self, rhs: &QPoly) -> QPoly {
                $f(self, rhs)
            }
        }
        impl $Trait<QPoly> for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: QPoly) -> QPoly {
                $f(&self, &rhs)
            }
        }
        impl $Trait<&QPoly> for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: &QPoly) -> QPoly {
                $f(&self, rhs)
            }
        }
    };
}

poly_binop!(Add, add, add_polys);
poly_binop!(Sub, sub, sub_polys);
poly_binop!(Mul, mul, mul_polys);

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly::from_coeffs(self.coeffs.into_iter().map(Neg::neg).collect())
    }
}

/// Identity of canonical coefficient lists.
pub fn poly_equal(p: &QPoly, r: &QPoly) -> bool {
    p == r
}

/// Sign and magnitude of a coefficient, ready for printing as a term prefix.
fn split_sign(c: &Zs2) -> (bool, String) {
    let a = c.rational_part();
    let b = c.sqrt2_part();
    if b.is_zero() {
        (a.is_negative(), a.abs().to_string())
    } else if a.is_zero() {
        let mag = b.abs();
        let body = if mag.is_one() { "sqrt2".to_string() } else { format!("{mag}*sqrt2") };
        (b.is_negative(), body)
    } else {
        (false, format!("({c})"))
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = split_sign(c);
            let var = match k {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{k}"),
            };
            let body = match (mag.as_str(), var.is_empty()) {
                (m, true) => m.to_string(),
                ("1", false) => var,
                (m, false) => format!("{m}*{var}"),
            };
            match (first, neg) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}
