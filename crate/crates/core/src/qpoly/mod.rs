//! Polynomials in the formal variable `q` over Q(sqrt2), the named factors of
//! the Ree group order, and exact evaluation at `q = 2^m * sqrt2`.

mod factored;
mod poly;

pub use factored::{expand_product, Factor, FactoredExpr, NamedFactor};
pub use poly::{poly_equal, q_power, q_value, QPoly};
