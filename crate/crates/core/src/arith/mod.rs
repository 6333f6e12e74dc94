//! Exact arithmetic over a prime field: scalars, dense matrices, univariate
//! polynomials, reduced rational functions and polynomial matrices.

pub mod field;
pub mod matrix;
pub mod poly;
pub mod polymat;
pub mod ratfunc;

pub use field::{choose_prime, is_prime, PrimeModulus, Scalar};
pub use matrix::Mat;
pub use poly::{poly_gcd, Poly};
pub use polymat::PolyMat;
pub use ratfunc::{limit_at_one, series_prefix, RatFunc};
