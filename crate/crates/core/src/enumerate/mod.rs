//! Isomorphism-free enumeration of vertex-faithful regular polyhedra by
//! number of vertices, and classification drivers built on it.
//!
//! A vertex-faithful polyhedron with `v` vertices is the same thing as three
//! involutions on `v` points (its vertex CPR graph) such that `r0` and `r2`
//! commute, the group they generate is transitive, the stabilizer of a base
//! point is exactly `⟨r1, r2⟩`, and the intersection condition holds.

mod census;
mod cosets;
mod drivers;
mod pairs;

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::perm::{canonical_form, Permutation};
use crate::polyhedron::{PolyError, Polyhedron};

pub use census::{read_census, write_census, CensusRecord};
pub use drivers::{
    classify_prime, classify_twice_prime, smallest_b_squared, BSquaredCandidate, BSquaredReport, FlatSummary, PrimeReport,
    TwicePrimeReport,
};

/// Smallest vertex count accepted by [`enumerate_vertex_faithful`].
pub const MIN_VERTICES: usize = 3;
/// Largest vertex count accepted by [`enumerate_vertex_faithful`].
pub const MAX_VERTICES: usize = 15;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("vertex count {v} is outside {min}..={max}")]
    VertexCountOutOfRange { v: usize, min: usize, max: usize },
    #[error("{0} is outside the supported range for this driver")]
    ParameterOutOfRange(u64),
    #[error("could not start a worker pool: {0}")]
    ThreadPool(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("census line {line}: {msg}")]
    Census { line: usize, msg: String },
}

/// How candidate triples are generated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    /// Backtracking over partial coset tables of `[p, q]` acting on `v`
    /// points, one search per admissible type.
    #[default]
    CosetSearch,
    /// Class representatives of `(r0, r2)` times every involution `r1`
    /// fixing the base point.
    PairReps,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumerateOptions {
    pub strategy: Strategy,
    /// Worker threads; 0 uses the global pool.
    pub jobs: usize,
}

/// One record per isomorphism class of vertex-faithful regular polyhedra
/// with `v` vertices, sorted by type, order and canonical triple.
pub fn enumerate_vertex_faithful(v: usize, options: &EnumerateOptions) -> Result<Vec<CensusRecord>, EnumerateError> {
    if !(MIN_VERTICES..=MAX_VERTICES).contains(&v) {
        return Err(EnumerateError::VertexCountOutOfRange { v, min: MIN_VERTICES, max: MAX_VERTICES });
    }
    enumerate_unchecked(v, options)
}

/// As [`enumerate_vertex_faithful`] without the upper bound on `v`. The
/// coset search stays practical somewhat beyond it; the pair strategy does
/// not.
pub(crate) fn enumerate_unchecked(v: usize, options: &EnumerateOptions) -> Result<Vec<CensusRecord>, EnumerateError> {
    let run = || match options.strategy {
        Strategy::CosetSearch => cosets::search(v),
        Strategy::PairReps => pairs::search(v),
    };
    let found = if options.jobs == 0 {
        run()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(options.jobs)
            .build()
            .map_err(|e| EnumerateError::ThreadPool(e.to_string()))?
            .install(run)
    };
    Ok(finish(v, found))
}

/// Polyhedra of the census as validated objects, in census order.
pub fn enumerate_polyhedra(v: usize, options: &EnumerateOptions) -> Result<Vec<Polyhedron>, EnumerateError> {
    enumerate_vertex_faithful(v, options)?.iter().map(|r| r.polyhedron().map_err(Into::into)).collect()
}

/// Dedupes by canonical triple and sorts.
fn finish(v: usize, found: Vec<Found>) -> Vec<CensusRecord> {
    let mut by_key: HashMap<Vec<Permutation>, Polyhedron> = HashMap::new();
    for f in found {
        by_key.entry(f.canonical).or_insert(f.polyhedron);
    }
    let mut records: Vec<CensusRecord> =
        by_key.into_par_iter().map(|(key, poly)| CensusRecord::new(v, &poly, &key)).collect();
    records.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    records
}

struct Found {
    canonical: Vec<Permutation>,
    polyhedron: Polyhedron,
}

/// Final filter shared by every strategy: exact stabilizer, `q ≤ v`, and
/// the string C-group axioms.
fn accept(r0: Permutation, r1: Permutation, r2: Permutation) -> Option<Found> {
    let v = r0.degree();
    if !r0.commutes_with(&r2) || !base_stabilizer_is_vertex_group(&r0, &r1, &r2) {
        return None;
    }
    if r1.mul(&r2).order() > v as u64 {
        return None;
    }
    let polyhedron = Polyhedron::try_new(r0, r1, r2).ok()?;
    debug_assert!(polyhedron.invariants().vertex_faithful);
    debug_assert_eq!(polyhedron.invariants().v, v as u64);
    let canonical = canonical_form(polyhedron.group().generators());
    Some(Found { canonical, polyhedron })
}

/// Whether the stabilizer of point 0 in `⟨r0, r1, r2⟩` is exactly
/// `⟨r1, r2⟩`, decided from Schreier generators without building the group.
///
/// Returns false when the group is intransitive or `r1`, `r2` move point 0.
pub(crate) fn base_stabilizer_is_vertex_group(r0: &Permutation, r1: &Permutation, r2: &Permutation) -> bool {
    let n = r0.degree();
    if r1.image(0) != 0 || r2.image(0) != 0 {
        return false;
    }
    let gens = [r0.images(), r1.images(), r2.images()];
    let vertex_group = dihedral_elements(r1.images(), r2.images());
    // transversal[x] maps 0 to x
    let mut transversal: Vec<Option<Vec<u32>>> = vec![None; n];
    transversal[0] = Some((0..n as u32).collect());
    let mut queue = vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for g in gens {
            let y = g[x] as usize;
            if transversal[y].is_none() {
                let u = transversal[x].as_ref().expect("queued points have a transversal");
                transversal[y] = Some(u.iter().map(|&i| g[i as usize]).collect());
                queue.push(y);
            }
        }
    }
    if queue.len() != n {
        return false;
    }
    let inverses: Vec<Vec<u32>> = transversal
        .iter()
        .map(|u| {
            let u = u.as_ref().expect("transitive");
            let mut inv = vec![0u32; n];
            for (i, &x) in u.iter().enumerate() {
                inv[x as usize] = i as u32;
            }
            inv
        })
        .collect();
    let mut schreier = vec![0u32; n];
    for &x in &queue {
        let u = transversal[x].as_ref().expect("transitive");
        for g in gens {
            let w_inv = &inverses[g[x] as usize];
            // u g w⁻¹, composed left to right
            for (s, &ui) in schreier.iter_mut().zip(u) {
                *s = w_inv[g[ui as usize] as usize];
            }
            if !vertex_group.iter().any(|d| d.as_slice() == schreier.as_slice()) {
                return false;
            }
        }
    }
    true
}

fn dihedral_elements(a: &[u32], b: &[u32]) -> Vec<Vec<u32>> {
    let n = a.len();
    let id: Vec<u32> = (0..n as u32).collect();
    let ab: Vec<u32> = (0..n).map(|i| b[a[i] as usize]).collect();
    let mut rotations = vec![id.clone()];
    loop {
        let last = rotations.last().expect("nonempty");
        let next: Vec<u32> = last.iter().map(|&i| ab[i as usize]).collect();
        if next == id {
            break;
        }
        rotations.push(next);
    }
    let reflections: Vec<Vec<u32>> = rotations.iter().map(|r| r.iter().map(|&i| a[i as usize]).collect()).collect();
    rotations.into_iter().chain(reflections).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, Some(n)).unwrap()
    }

    #[test]
    fn tetrahedron_passes_the_stabilizer_test() {
        // vertex action of the tetrahedron with base vertex 1
        let (r0, r1, r2) = (perm("(1 2)", 4), perm("(2 3)", 4), perm("(3 4)", 4));
        assert!(base_stabilizer_is_vertex_group(&r0, &r1, &r2));
        // the stabilizer of 1 in Sym(5) is much larger than ⟨r1, r2⟩
        let (r0, r1, r2) = (perm("(1 2)", 5), perm("(2 3)(4 5)", 5), perm("(3 4)", 5));
        assert!(!base_stabilizer_is_vertex_group(&r0, &r1, &r2));
    }

    #[test]
    fn small_counts() {
        for strategy in [Strategy::CosetSearch, Strategy::PairReps] {
            let opts = EnumerateOptions { strategy, jobs: 0 };
            let counts: Vec<usize> = (3..=7).map(|v| enumerate_vertex_faithful(v, &opts).unwrap().len()).collect();
            assert_eq!(counts, vec![0, 2, 0, 6, 0], "{strategy:?}");
        }
    }

    #[test]
    fn range_is_enforced() {
        let opts = EnumerateOptions::default();
        assert!(matches!(enumerate_vertex_faithful(16, &opts), Err(EnumerateError::VertexCountOutOfRange { .. })));
        assert!(enumerate_vertex_faithful(2, &opts).is_err());
    }
}
