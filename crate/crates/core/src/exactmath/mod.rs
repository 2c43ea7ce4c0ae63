//! Exact arithmetic kernels: rationals, integer polynomials, Bernoulli
//! numbers, divisor sums, exact linear algebra and truncated q-expansions.

mod linalg;
mod numbers;
mod poly;
mod qexp;
mod rational;

pub use linalg::{poly_charpoly, rank_exact, RatMatrix};
pub use numbers::{bernoulli, binomial, sigma};
pub use poly::IntPolynomial;
pub use qexp::QExpansion;
pub use rational::{
    common_denominator, format_rational, from_int, parse_rational, rat, ratio, Rational,
};
