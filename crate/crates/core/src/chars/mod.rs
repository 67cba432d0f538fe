//! Exact complex representation theory: character tables, Wedderburn degree
//! multisets, twisted variants graded by central characters, and the
//! coprime-power isomorphism check.

mod table;
mod twisted;

pub use table::{character_degrees, character_table, dixon_prime, CharacterTable, CHAR_TABLE_CAP};
pub use twisted::{
    c_gcd, complex_block_sizes, complex_class_order, power_theorem_check, twisted_wedderburn_c,
    wedderburn_c, PowerCheckEntry, PowerTheoremReport, WedderburnC,
};
