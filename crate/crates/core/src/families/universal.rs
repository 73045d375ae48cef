use serde::{Deserialize, Serialize};

use crate::fp::{enumerate_cosets, group_order, FpError, Presentation, Word};

/// The data a census row needs for the universality test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniversalRow {
    pub p: u64,
    pub q: u64,
    pub order: u64,
    pub z1: u64,
    pub h: u64,
    pub z2: u64,
}

impl UniversalRow {
    /// `[p,q]` with the Petrie, 2-hole and 2-zigzag lengths imposed.
    pub fn presentation(&self) -> Presentation {
        Presentation::new(self.p as u32, self.q as u32)
            .with_relator(Word::power(Word::from_letters(&[0, 1, 2]), self.z1 as i64))
            .with_relator(Word::power(Word::from_letters(&[0, 1, 2, 1]), self.h as i64))
            .with_relator(Word::power(Word::from_letters(&[0, 1, 2, 1, 2]), self.z2 as i64))
    }
}

/// Order of the universal group for the row's type and lengths.
pub fn universal_order(row: &UniversalRow, limit: usize) -> Result<u64, FpError> {
    Ok(group_order(&row.presentation(), limit)? as u64)
}

/// True iff the row's group is the universal one for its lengths.
///
/// The row is assumed to describe a polyhedron, so the universal group `U`
/// maps onto it and `⟨g1, g2⟩` has order exactly `2q` in `U`. Then `U` is
/// the row's group iff that subgroup has index `order / 2q`, which needs a
/// coset table `2q` times smaller than the group itself.
pub fn universal_check(row: &UniversalRow, limit: usize) -> Result<bool, FpError> {
    let vertex_group = [Word::from_letters(&[1]), Word::from_letters(&[2])];
    let index = enumerate_cosets(&row.presentation(), &vertex_group, limit)?.index() as u64;
    Ok(2 * row.q * index == row.order)
}
