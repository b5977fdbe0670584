//! Integer-only evaluator for the degree table, written without the
//! polynomial layer: with `Q = q^2 = 2^(2m+1)` and `s = sqrt2*q = 2^(m+1)`
//! every entry is a polynomial in `Q` and `s` over the rationals.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;

pub struct Vals {
    pub m: u32,
    pub q2: BigInt,
    pub s: BigInt,
}

impl Vals {
    pub fn new(m: u32) -> Self {
        Self { m, q2: BigInt::from(1) << (2 * m + 1), s: BigInt::from(1) << (m + 1) }
    }

    pub fn qp(&self, k: u32) -> BigInt {
        self.q2.pow(k)
    }
    /// q^2 - 1
    pub fn p12(&self) -> BigInt {
        &self.q2 - 1
    }
    pub fn p4(&self) -> BigInt {
        &self.q2 + 1
    }
    pub fn p8(&self) -> BigInt {
        self.qp(2) + 1
    }
    pub fn phi12(&self) -> BigInt {
        self.qp(2) - &self.q2 + 1
    }
    pub fn p24(&self) -> BigInt {
        self.qp(4) - self.qp(2) + 1
    }
    pub fn u1(&self) -> BigInt {
        &self.q2 - &self.s + 1
    }
    pub fn u2(&self) -> BigInt {
        &self.q2 + &self.s + 1
    }
    /// q^4 - sqrt2 q^3 + q^2 - sqrt2 q + 1, using sqrt2 q^3 = q^2 * s.
    pub fn w1(&self) -> BigInt {
        self.qp(2) - &self.q2 * &self.s + &self.q2 - &self.s + 1
    }
    pub fn w2(&self) -> BigInt {
        self.qp(2) + &self.q2 * &self.s + &self.q2 + &self.s + 1
    }
    /// sqrt2 q / 2
    pub fn h(&self) -> BigInt {
        &self.s / 2
    }

    pub fn order(&self) -> BigInt {
        let q = &self.q2;
        q.pow(12) * (q.pow(6) + 1) * (q.pow(4) - 1) * (q.pow(3) + 1) * (q - 1)
    }
}

fn exact(num: BigInt, den: i64) -> BigInt {
    let (quo, rem) = num.div_rem(&BigInt::from(den));
    assert_eq!(rem, BigInt::from(0), "non-integral table entry");
    quo
}

/// `(degree, multiplicity)` in table row order.
pub fn table(m: u32) -> Vec<(BigInt, BigInt)> {
    let v = Vals::new(m);
    let q = &v.q2;
    let s = &v.s;
    let one = || BigInt::from(1);
    let two = || BigInt::from(2);
    let p12 = v.p12();
    let p4 = v.p4();
    let p8 = v.p8();
    let c12 = v.phi12();
    let p24 = v.p24();
    let (u1, u2, w1, w2, h) = (v.u1(), v.u2(), v.w1(), v.w2(), v.h());
    let sq = |x: &BigInt| x * x;
    let half = |x: BigInt| exact(x, 2);
    let qm2: BigInt = q - 2;
    vec![
        (one(), one()),
        (&h * &p12 * sq(&p4) * &c12, two()),
        (q * &c12 * &p24, one()),
        (&p12 * sq(&p8) * &p24, one()),
        (exact(v.qp(2) * sq(&u1) * &w1 * sq(&p12) * &c12, 12), one()),
        (exact(v.qp(2) * sq(&u2) * &w2 * sq(&p12) * &c12, 12), one()),
        (exact(v.qp(2) * sq(&p12) * sq(&p4) * &p24, 6), one()),
        (exact(v.qp(2) * &w1 * sq(&p12) * sq(&p4) * &c12, 4), two()),
        (exact(v.qp(2) * sq(&u1) * &w2 * sq(&p4) * &c12, 4), one()),
        (exact(v.qp(2) * &w2 * sq(&p12) * sq(&p4) * &c12, 4), two()),
        (exact(v.qp(2) * sq(&u2) * &w1 * sq(&p4) * &c12, 4), one()),
        (exact(v.qp(2) * sq(&p12) * &c12 * &p24, 3), one()),
        (exact(v.qp(2) * sq(&p12) * sq(&p4) * sq(&p8), 3), two()),
        (half(v.qp(2) * sq(&p8) * &p24), one()),
        (&u1 * &p12 * sq(&p4) * &c12 * &p24, exact(q + s, 4)),
        (sq(&p4) * &p8 * &c12 * &p24, half(qm2.clone())),
        (&u2 * &p12 * sq(&p4) * &c12 * &p24, exact(q - s, 4)),
        (q * sq(&p12) * sq(&p8) * &p24, one()),
        (&p12 * sq(&p8) * &c12 * &p24, half(qm2.clone())),
        (v.qp(5) * &c12 * &p24, one()),
        (&p4 * sq(&p8) * &c12 * &p24, half(qm2.clone())),
        (&h * &u1 * sq(&p12) * sq(&p4) * &c12 * &p24, half(q + s)),
        (v.qp(6) * &h * &p12 * sq(&p4) * &c12, two()),
        (&h * &p12 * sq(&p4) * &p8 * &c12 * &p24, qm2.clone()),
        (&h * &u2 * sq(&p12) * sq(&p4) * &c12 * &p24, half(q - s)),
        (sq(&u1) * sq(&p12) * sq(&p4) * &c12 * &p24, exact((q + 2 * s) * &qm2, 96)),
        (&w1 * sq(&p12) * sq(&p4) * sq(&p8) * &c12, exact((q + s) * &p4, 12)),
        (v.qp(2) * &u1 * &p12 * sq(&p4) * &c12 * &p24, exact(q + s, 4)),
        (&u1 * &p12 * sq(&p4) * &p8 * &c12 * &p24, exact(&qm2 * (q + s), 8)),
        (sq(&p12) * sq(&p8) * &c12 * &p24, exact((q - 8) * &qm2, 48)),
        (q * &p12 * sq(&p8) * &c12 * &p24, half(qm2.clone())),
        (sq(&p12) * sq(&p4) * &p8 * &c12 * &p24, exact(&qm2 * q, 16)),
        (v.qp(3) * &p12 * sq(&p8) * &p24, one()),
        (&p12 * &p4 * sq(&p8) * &c12 * &p24, exact(&qm2 * q, 4)),
        (sq(&p12) * sq(&p4) * sq(&p8) * &p24, exact(&qm2 * &p4, 6)),
        (v.qp(12), one()),
        (q * &p4 * sq(&p8) * &c12 * &p24, half(qm2.clone())),
        (v.qp(2) * sq(&p4) * &p8 * &c12 * &p24, half(qm2.clone())),
        (sq(&p4) * sq(&p8) * &c12 * &p24, exact((q - 8) * &qm2, 16)),
        (&w2 * sq(&p12) * sq(&p4) * sq(&p8) * &c12, exact((q - s) * &p4, 12)),
        (v.qp(2) * &u2 * &p12 * sq(&p4) * &c12 * &p24, exact(q - s, 4)),
        (&u2 * &p12 * sq(&p4) * &p8 * &c12 * &p24, exact(&qm2 * (q - s), 8)),
        (sq(&u2) * sq(&p12) * sq(&p4) * &c12 * &p24, exact((q - 2 * s) * &qm2, 96)),
    ]
}

/// Distinct degrees with positive multiplicity, ascending.
pub fn degree_set(m: u32) -> Vec<BigInt> {
    let mut v: Vec<BigInt> = table(m).into_iter().filter(|(_, k)| *k > BigInt::from(0)).map(|(d, _)| d).collect();
    v.sort();
    v.dedup();
    v
}

/// Smallest prime factor other than 3, by trial division.
pub fn smallest_prime_not_3(mut n: BigInt) -> Option<BigInt> {
    let zero = BigInt::from(0);
    while (&n % 3) == zero {
        n /= 3;
    }
    let mut d = BigInt::from(2);
    while &d * &d <= n {
        if (&n % &d) == zero {
            return Some(d);
        }
        d += 1;
    }
    (n > BigInt::from(1)).then_some(n)
}
