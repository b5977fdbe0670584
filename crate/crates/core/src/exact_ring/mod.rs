//! Exact arithmetic: the field Q(sqrt2) and arbitrary-precision number theory.

mod primes;
mod zs2;

pub use primes::{
    distinct_prime_factors, divisors_u64, factorize, gcd, is_power_of_two, is_prime, is_prime_u64, p_part, prime_power,
    to_u64, two_adic_valuation,
};
pub use zs2::Zs2;
