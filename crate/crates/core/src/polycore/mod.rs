//! Exact arithmetic kernels: rationals, dense univariate polynomials,
//! sparse bivariate polynomials, and reduced rational functions.
//!
//! Everything here is immutable after construction and every operation is a
//! pure function, so values may be shared freely across threads.

mod bipoly;
mod poly;
mod rat;
mod ratfunc;

pub use bipoly::BiPoly;
pub use poly::Poly;
pub use rat::{is_negative, rat, rat_from_str, rat_int, rat_pow, rat_to_f64, rat_to_json, Rat};
pub use ratfunc::RatFunc;
