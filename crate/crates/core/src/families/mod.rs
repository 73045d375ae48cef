//! Parametric families of regular polyhedra.

mod catalog;
mod flat_predicate;
mod lambda;
mod toroidal;
mod universal;

pub use catalog::{flat_family_catalog, CatalogEntry, VertexShape};
pub use flat_predicate::{core_free_condition, flat_orientable_predicate, FlatVerdict};
pub use lambda::{lambda_group, lambda_oracle, LambdaParams};
pub use toroidal::{toroidal_44, TorusVector};
pub use universal::{universal_check, universal_order, UniversalRow};

use crate::fp::Word;

/// Letters of `σ1^k = (r0 r1)^k`.
pub(crate) fn s1(k: i64) -> Vec<u8> {
    if k >= 0 { [0u8, 1].repeat(k as usize) } else { [1u8, 0].repeat(k.unsigned_abs() as usize) }
}

/// Letters of `σ2^k = (r1 r2)^k`.
pub(crate) fn s2(k: i64) -> Vec<u8> {
    if k >= 0 { [1u8, 2].repeat(k as usize) } else { [2u8, 1].repeat(k.unsigned_abs() as usize) }
}

/// The relator `lhs⁻¹ rhs` encoding the relation `lhs = rhs`.
pub(crate) fn relation(lhs: &[u8], rhs: &[u8]) -> Word {
    let mut letters: Vec<u8> = lhs.iter().rev().copied().collect();
    letters.extend_from_slice(rhs);
    Word::from_letters(&letters)
}

pub(crate) fn cat(parts: &[&[u8]]) -> Vec<u8> {
    parts.concat()
}

/// Representative of `x mod m` in `(-m/2, m/2]`.
pub(crate) fn signed_mod(x: i64, m: i64) -> i64 {
    let r = x.rem_euclid(m);
    if 2 * r > m { r - m } else { r }
}
