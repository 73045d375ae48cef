//! Finitely presented quotients of string Coxeter groups and their
//! realization as permutation groups.

mod coset;
mod presentation;
mod word;

pub use coset::{enumerate_cosets, CosetTable};
pub use presentation::Presentation;
pub use word::{Item, Word};

use thiserror::Error;

use crate::perm::{PermError, PermGroup, Permutation};

/// Environment variable overriding [`DEFAULT_COSET_LIMIT`].
pub const COSET_LIMIT_ENV: &str = "VFPOLY_COSET_LIMIT";
pub const DEFAULT_COSET_LIMIT: usize = 200_000;

/// Groups at most this large are realized by their regular representation.
const REGULAR_ORDER_MAX: usize = 2048;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum FpError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("coset enumeration exceeded {limit} live cosets")]
    CosetLimitExceeded { limit: usize },
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// Coset limit from the environment, falling back to the default.
pub fn default_coset_limit() -> usize {
    std::env::var(COSET_LIMIT_ENV).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_COSET_LIMIT)
}

/// Order of the presented group.
pub fn group_order(pres: &Presentation, limit: usize) -> Result<usize, FpError> {
    Ok(enumerate_cosets(pres, &[], limit)?.index())
}

/// A faithful permutation representation with generators `g0, g1, g2` in
/// that order.
///
/// Small groups use the regular representation. Larger ones use the first
/// faithful action among: vertices, vertices plus faces, vertices plus edges
/// plus faces, falling back to the regular action.
pub fn realize(pres: &Presentation, limit: usize) -> Result<PermGroup, FpError> {
    let regular = enumerate_cosets(pres, &[], limit)?;
    let n = regular.index();
    if n > REGULAR_ORDER_MAX {
        let stabilizers: [&[u8]; 3] = [&[1, 2], &[0, 2], &[0, 1]];
        let tables: Vec<CosetTable> = stabilizers
            .iter()
            .map(|gens| {
                let words: Vec<Word> = gens.iter().map(|&g| Word::from_letters(&[g])).collect();
                enumerate_cosets(pres, &words, limit)
            })
            .collect::<Result<_, _>>()?;
        for choice in [&[0usize][..], &[0, 2], &[0, 1, 2]] {
            let parts: Vec<&CosetTable> = choice.iter().map(|&k| &tables[k]).collect();
            let gens = direct_sum_action(&parts);
            if let Ok(g) = PermGroup::generate_with_cap(&gens, Some(n)) {
                if g.order() == n {
                    return Ok(g);
                }
            }
        }
    }
    let gens = direct_sum_action(&[&regular]);
    Ok(PermGroup::generate(&gens)?)
}

fn direct_sum_action(tables: &[&CosetTable]) -> Vec<Permutation> {
    (0..3)
        .map(|g| {
            let mut images = Vec::new();
            for t in tables {
                let shift = images.len() as u32;
                images.extend(t.generator_images(g).into_iter().map(|x| x + shift));
            }
            Permutation::from_images_unchecked(images)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn realize_small_groups() {
        let g = realize(&Presentation::new(3, 3), DEFAULT_COSET_LIMIT).unwrap();
        assert_eq!((g.order(), g.degree()), (24, 24));
        let g = realize(&Presentation::new(2, 3), DEFAULT_COSET_LIMIT).unwrap();
        assert_eq!(g.order(), 12);
        let g = realize(&Presentation::parse("p=9 q=4 rel=(0121)^2 2").unwrap(), DEFAULT_COSET_LIMIT).unwrap();
        assert_eq!(g.order(), 72);
        for x in g.generators() {
            assert!(x.is_involution());
        }
    }

    #[test]
    fn large_groups_use_a_compact_faithful_action() {
        // {4,4}_(20,0): order 3200, 400 vertices
        let pres = Presentation::parse("p=4 q=4 rel=(0121)^20").unwrap();
        let g = realize(&pres, DEFAULT_COSET_LIMIT).unwrap();
        assert_eq!(g.order(), 3200);
        assert_eq!(g.degree(), 400);
    }

    #[test]
    fn ten_by_five_flat_group() {
        // sigma2^-1 sigma1 = sigma1^-1 sigma2^-3 with b = 5
        let pres = Presentation::parse("p=5 q=10 rel=1012 10(21)^3").unwrap();
        assert_eq!(group_order(&pres, DEFAULT_COSET_LIMIT).unwrap(), 100);
    }
}
