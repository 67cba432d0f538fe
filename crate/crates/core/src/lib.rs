//! Exact computational algebra for twisted group algebras of finite groups.
//!
//! The crate provides, end to end and in exact arithmetic:
//!
//! * finite groups as multiplication tables, with a small named catalog;
//! * second cohomology of a finite group with coefficients in `Z/m` or in
//!   the units of a field, by direct linear algebra over `Z/p^e`;
//! * complex character tables (a Dixon-style modular lifting) and from them
//!   Wedderburn degree multisets of twisted group algebras over `C`;
//! * cyclotomic arithmetic, prime splitting, tame symbols, and a
//!   three-valued triviality test for symbol algebras;
//! * Wedderburn decompositions over cyclotomic fields for the group families
//!   the crate knows closed forms for;
//! * comparison drivers that decide twisted-group-ring equivalence questions
//!   for specific pairs of groups and produce evidence-carrying reports.
//!
//! Everything is deterministic: randomized internals are seeded from fixed
//! constants, outputs are canonically sorted, and reports serialize with a
//! stable field order.

pub mod chars;
pub mod cohomology;
pub mod cyclo;
pub mod error;
pub mod group;
pub mod token;
pub mod zmod;

pub use error::{Error, Result};
