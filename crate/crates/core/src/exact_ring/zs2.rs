//! The field Q(sqrt2), stored as `a + b*sqrt2` with exact rational parts.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An element `a + b*sqrt2` of Q(sqrt2).
///
/// `BigRational` keeps both parts in lowest terms with a positive
/// denominator, so derived equality is equality of field elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Zs2 {
    a: BigRational,
    b: BigRational,
}

impl Zs2 {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Self { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        Self::new(BigRational::from_integer(a.into()), BigRational::from_integer(b.into()))
    }

    /// `num/den + 0*sqrt2`.
    pub fn rational(num: i64, den: i64) -> Self {
        Self::new(BigRational::new(num.into(), den.into()), BigRational::zero())
    }

    pub fn integer(n: BigInt) -> Self {
        Self::new(BigRational::from_integer(n), BigRational::zero())
    }

    pub fn sqrt2() -> Self {
        Self::from_ints(0, 1)
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn sqrt2_part(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// `a - b*sqrt2`.
    pub fn conjugate(&self) -> Self {
        Self::new(self.a.clone(), -self.b.clone())
    }

    /// The field norm `a^2 - 2b^2`, which is zero only for the zero element.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from_integer(2.into()) * &self.b * &self.b
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self::new(&self.a * r, &self.b * r)
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let inv = n.recip();
        Ok(self.conjugate().scale(&inv))
    }

    pub fn checked_div(&self, rhs: &Zs2) -> Result<Self> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Zs2::one();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Returns `n` when `self == n + 0*sqrt2` for a rational integer `n`.
    pub fn to_integer(&self) -> Result<BigInt> {
        if self.b.is_zero() && self.a.is_integer() {
            Ok(self.a.to_integer())
        } else {
            Err(Error::NotRationalInteger(self.to_string()))
        }
    }
}

impl From<i64> for Zs2 {
    fn from(n: i64) -> Self {
        Zs2::from_ints(n, 0)
    }
}

impl fmt::Display for Zs2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}*sqrt2", self.b),
            (false, false) => {
                let sign = if self.b.is_negative() { '-' } else { '+' };
                write!(f, "{} {} {}*sqrt2", self.a, sign, self.b.abs())
            }
        }
    }
}

fn add_ref(x: &Zs2, y: &Zs2) -> Zs2 {
    Zs2::new(&x.a + &y.a, &x.b + &y.b)
}

fn sub_ref(x: &Zs2, y: &Zs2) -> Zs2 {
    Zs2::new(&x.a - &y.a, &x.b - &y.b)
}

fn mul_ref(x: &Zs2, y: &Zs2) -> Zs2 {
    let two = BigRational::from_integer(2.into());
    Zs2::new(&x.a * &y.a + two * &x.b * &y.b, &x.a * &y.b + &x.b * &y.a)
}

macro_rules! forward_binop {
    ($Trait:ident, $method:ident, $f:ident) => {
        impl $Trait<&Zs2> for &Zs2 {
            type Output = Zs2;
            fn $method(self, rhs: &Zs2) -> Zs2 {
                $f(self, rhs)
            }
        }
        impl $Trait<Zs2> for Zs2 {
            type Output = Zs2;
            fn $method(self, rhs: Zs2) -> Zs2 {
                $f(&self, &rhs)
            }
        }
        impl $Trait<&Zs2> for Zs2 {
            type Output = Zs2;
            fn $method(self, rhs: &Zs2) -> Zs2 {
                $f(&self, rhs)
            }
        }
        impl $Trait<Zs2> for &Zs2 {
            type Output = Zs2;
            fn $method(self, rhs: Zs2) -> Zs2 {
                $f(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for Zs2 {
    type Output = Zs2;
    fn neg(self) -> Zs2 {
        Zs2::new(-self.a, -self.b)
    }
}

impl Neg for &Zs2 {
    type Output = Zs2;
    fn neg(self) -> Zs2 {
        Zs2::new(-self.a.clone(), -self.b.clone())
    }
}

impl Zero for Zs2 {
    fn zero() -> Self {
        Zs2::default()
    }
    fn is_zero(&self) -> bool {
        Zs2::is_zero(self)
    }
}

impl One for Zs2 {
    fn one() -> Self {
        Zs2::from_ints(1, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn zs2(a: (i64, i64), b: (i64, i64)) -> Zs2 {
        Zs2::new(BigRational::new(a.0.into(), a.1.into()), BigRational::new(b.0.into(), b.1.into()))
    }

    #[test]
    fn sqrt2_squares_to_two() {
        assert_eq!(Zs2::sqrt2() * Zs2::sqrt2(), Zs2::from(2));
    }

    #[test]
    fn conjugate_product() {
        let x = Zs2::from_ints(1, 1);
        assert_eq!(&x * &x.conjugate(), Zs2::from(-1));
    }

    #[test]
    fn q_at_m1_squares_to_eight() {
        let q = Zs2::from_ints(0, 2);
        assert_eq!(&q * &q, Zs2::from(8));
    }

    #[test]
    fn to_integer_cases() {
        assert_eq!(Zs2::from(7).to_integer().unwrap(), BigInt::from(7));
        // u1 at m = 1: q^2 - sqrt2*q + 1 with q = 2*sqrt2.
        let q = Zs2::from_ints(0, 2);
        let u1 = &q * &q - Zs2::sqrt2() * &q + Zs2::one();
        assert_eq!(u1.to_integer().unwrap(), BigInt::from(5));
        assert!(matches!(Zs2::sqrt2().to_integer(), Err(Error::NotRationalInteger(_))));
        assert!(Zs2::rational(1, 2).to_integer().is_err());
    }

    #[test]
    fn canonical_form() {
        assert_eq!(zs2((2, 4), (-3, -6)), zs2((1, 2), (1, 2)));
        assert_eq!(zs2((2, -4), (0, 5)).rational_part(), &BigRational::new((-1).into(), 2.into()));
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(Zs2::one().checked_div(&Zs2::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn display() {
        assert_eq!(Zs2::from_ints(3, -2).to_string(), "3 - 2*sqrt2");
        assert_eq!(zs2((0, 1), (1, 2)).to_string(), "1/2*sqrt2");
    }

    fn arb_zs2() -> impl Strategy<Value = Zs2> {
        (-50i64..50, 1i64..20, -50i64..50, 1i64..20).prop_map(|(an, ad, bn, bd)| zs2((an, ad), (bn, bd)))
    }

    proptest! {
        #[test]
        fn ring_axioms(x in arb_zs2(), y in arb_zs2(), z in arb_zs2()) {
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&x - &x, Zs2::zero());
        }

        #[test]
        fn division_inverts_multiplication(x in arb_zs2(), y in arb_zs2()) {
            prop_assume!(!x.is_zero());
            let quotient = y.checked_div(&x).unwrap();
            prop_assert_eq!(&x * &quotient, y);
        }

        #[test]
        fn pow_matches_repeated_product(x in arb_zs2(), e in 0u32..8) {
            let mut acc = Zs2::one();
            for _ in 0..e { acc = &acc * &x; }
            prop_assert_eq!(x.pow(e), acc);
        }
    }
}
