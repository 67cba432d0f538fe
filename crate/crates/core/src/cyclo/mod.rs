//! Exact cyclotomic arithmetic.

pub mod poly;

pub use poly::{cyclotomic_polynomial, euler_phi, ZetaInt, ZetaRing};
