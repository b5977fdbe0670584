//! Prime parts, primality and factorization of arbitrary-precision naturals.
//!
//! Primality is deterministic below 2^64 (Miller-Rabin with the first twelve
//! prime bases) and Baillie-PSW above. Factorization strips small primes by
//! trial division and splits the remainder with Brent's variant of Pollard rho.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

const TRIAL_BOUND: u32 = 10_000;
const MR_BASES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Splits `n` into `(p^k, n / p^k)` with `p^k` the largest power of `p` dividing `n`.
///
/// Panics if `n` is zero or `p < 2`.
pub fn p_part(n: &BigUint, p: &BigUint) -> (BigUint, BigUint) {
    assert!(!n.is_zero(), "p_part of zero");
    assert!(*p >= BigUint::from(2u32), "p_part needs p >= 2");
    if *p == BigUint::from(2u32) {
        let k = n.trailing_zeros().unwrap_or(0);
        return (BigUint::one() << k, n >> k);
    }
    let mut power = BigUint::one();
    let mut rest = n.clone();
    loop {
        let (quo, rem) = rest.div_rem(p);
        if !rem.is_zero() {
            break;
        }
        rest = quo;
        power *= p;
    }
    (power, rest)
}

/// Exponent of the 2-part of a positive integer.
pub fn two_adic_valuation(n: &BigUint) -> u64 {
    assert!(!n.is_zero(), "valuation of zero");
    n.trailing_zeros().unwrap_or(0)
}

pub fn gcd(a: &BigUint, b: &BigUint) -> BigUint {
    a.gcd(b)
}

pub fn is_power_of_two(n: &BigUint) -> bool {
    !n.is_zero() && n.count_ones() == 1
}

fn strong_probable_prime(n: &BigUint, base: &BigUint) -> bool {
    let one = BigUint::one();
    let n_minus_one = n - &one;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;
    let mut x = base.modpow(&d, n);
    if x == one || x == n_minus_one {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n_minus_one {
            return true;
        }
        if x == one {
            return false;
        }
    }
    false
}

fn jacobi(a: &BigInt, n: &BigInt) -> i32 {
    let mut a = a.mod_floor(n);
    let mut n = n.clone();
    let mut result = 1;
    let three = BigInt::from(3);
    let five = BigInt::from(5);
    let eight = BigInt::from(8);
    while !a.is_zero() {
        while a.is_even() {
            a >>= 1;
            let r = n.mod_floor(&eight);
            if r == three || r == five {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a.mod_floor(&BigInt::from(4)) == three && n.mod_floor(&BigInt::from(4)) == three {
            result = -result;
        }
        a = a.mod_floor(&n);
    }
    if n.is_one() {
        result
    } else {
        0
    }
}

fn half_mod(x: BigInt, n: &BigInt) -> BigInt {
    let x = if x.is_odd() { x + n } else { x };
    let half: BigInt = x >> 1;
    half.mod_floor(n)
}

/// Strong Lucas probable-prime test with Selfridge's parameter choice.
fn strong_lucas_probable_prime(n: &BigUint) -> bool {
    let root = n.sqrt();
    if &root * &root == *n {
        return false;
    }
    let nn = BigInt::from(n.clone());
    let mut d = 5i64;
    loop {
        let j = jacobi(&BigInt::from(d), &nn);
        if j == -1 {
            break;
        }
        if j == 0 && BigInt::from(d.abs()) != nn {
            return false;
        }
        d = if d > 0 { -(d + 2) } else { -d + 2 };
    }
    let big_d = BigInt::from(d);
    let q = BigInt::from((1 - d) / 4);

    let n_plus_one = n + 1u32;
    let s = n_plus_one.trailing_zeros().unwrap_or(0);
    let k = &n_plus_one >> s;

    let mut u = BigInt::one();
    let mut v = BigInt::one();
    let mut qk = q.mod_floor(&nn);
    let bits = k.bits();
    for i in (0..bits - 1).rev() {
        u = (&u * &v).mod_floor(&nn);
        v = (&v * &v - BigInt::from(2) * &qk).mod_floor(&nn);
        qk = (&qk * &qk).mod_floor(&nn);
        if k.bit(i) {
            let u_next = half_mod(&u + &v, &nn);
            let v_next = half_mod(&big_d * &u + &v, &nn);
            u = u_next;
            v = v_next;
            qk = (&qk * &q).mod_floor(&nn);
        }
    }
    if u.is_zero() || v.is_zero() {
        return true;
    }
    for _ in 1..s {
        v = (&v * &v - BigInt::from(2) * &qk).mod_floor(&nn);
        if v.is_zero() {
            return true;
        }
        qk = (&qk * &qk).mod_floor(&nn);
    }
    false
}

/// Deterministic below 2^64; Baillie-PSW above.
pub fn is_prime(n: &BigUint) -> bool {
    if *n < BigUint::from(2u32) {
        return false;
    }
    for p in MR_BASES {
        let p = BigUint::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    if n.bits() <= 64 {
        MR_BASES.iter().all(|&b| strong_probable_prime(n, &BigUint::from(b)))
    } else {
        strong_probable_prime(n, &BigUint::from(2u32)) && strong_lucas_probable_prime(n)
    }
}

pub fn is_prime_u64(n: u64) -> bool {
    is_prime(&BigUint::from(n))
}

/// Returns `(p, k)` when `n = p^k` for a prime `p` and `k >= 1`.
pub fn prime_power(n: &BigUint) -> Option<(BigUint, u32)> {
    if *n < BigUint::from(2u32) {
        return None;
    }
    let max_k = n.bits() as u32;
    for k in 1..=max_k {
        let r = n.nth_root(k);
        if r < BigUint::from(2u32) {
            break;
        }
        if r.pow(k) == *n && is_prime(&r) {
            return Some((r, k));
        }
    }
    None
}

/// Brent's cycle-finding variant of Pollard rho, polynomial `x^2 + c`.
fn pollard_brent(n: &BigUint, c: u32) -> Option<BigUint> {
    let c = BigUint::from(c);
    let f = |x: &BigUint| (x * x + &c) % n;
    let one = BigUint::one();
    let batch = 128u64;
    let mut y = BigUint::from(2u32);
    let mut r = 1u64;
    let mut q = one.clone();
    let mut g = one.clone();
    let mut x = y.clone();
    let mut ys = y.clone();
    while g == one {
        x.clone_from(&y);
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0u64;
        while k < r && g == one {
            ys = y.clone();
            for _ in 0..batch.min(r - k) {
                y = f(&y);
                let diff = if x > y { &x - &y } else { &y - &x };
                q = (q * diff) % n;
            }
            g = q.gcd(n);
            k += batch;
        }
        r *= 2;
        if r > 1 << 26 {
            return None;
        }
    }
    if g == *n {
        // The batch overshot; replay one step at a time from the saved point.
        loop {
            ys = f(&ys);
            let diff = if x > ys { &x - &ys } else { &ys - &x };
            g = diff.gcd(n);
            if g != one {
                break;
            }
        }
    }
    if g == *n {
        None
    } else {
        Some(g)
    }
}

fn split_composite(n: &BigUint) -> BigUint {
    let root = n.sqrt();
    if &root * &root == *n {
        return root;
    }
    (1u32..).find_map(|c| pollard_brent(n, c)).expect("Pollard rho exhausted its polynomial family")
}

fn factor_into(n: BigUint, out: &mut Vec<BigUint>) {
    if n.is_one() {
        return;
    }
    if is_prime(&n) {
        out.push(n);
        return;
    }
    let d = split_composite(&n);
    let other = &n / &d;
    factor_into(d, out);
    factor_into(other, out);
}

/// Prime factors of `n >= 2` with multiplicity, in ascending order.
pub fn factorize(n: &BigUint) -> Vec<BigUint> {
    assert!(*n >= BigUint::from(2u32), "factorize needs n >= 2");
    let mut out = Vec::new();
    let mut rest = n.clone();
    let tz = rest.trailing_zeros().unwrap_or(0);
    out.extend(std::iter::repeat_n(BigUint::from(2u32), tz as usize));
    rest >>= tz;
    let mut p = 3u32;
    while p < TRIAL_BOUND && !rest.is_one() {
        let bp = BigUint::from(p);
        if &bp * &bp > rest {
            break;
        }
        loop {
            let (quo, rem) = rest.div_rem(&bp);
            if !rem.is_zero() {
                break;
            }
            out.push(bp.clone());
            rest = quo;
        }
        p += 2;
    }
    factor_into(rest, &mut out);
    out.sort();
    out
}

/// Distinct prime divisors in ascending order.
pub fn distinct_prime_factors(n: &BigUint) -> Vec<BigUint> {
    let mut f = factorize(n);
    f.dedup();
    f
}

/// All positive divisors of a machine-sized integer, ascending.
pub fn divisors_u64(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn to_u64(n: &BigUint) -> Option<u64> {
    n.to_u64()
}
