//! Exact arithmetic: rationals, sparse polynomials and rational functions
//! in the even coordinates.

pub mod gcd;
mod poly;
mod rat;
mod ratfunc;

pub use gcd::gcd;
pub use poly::{Mono, Poly};
pub use rat::Rat;
pub use ratfunc::RatFunc;
