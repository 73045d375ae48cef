//! Direct search over vertex CPR graphs: `(r0, r2)` runs over class
//! representatives of commuting pairs, `r1` over every involution fixing the
//! base point.
//!
//! The base point must be fixed by `r1` and `r2` and moved by `r0`, so it
//! lies in a component where only `r0` acts. The centralizer of the pair
//! permutes those components transitively and `r0` swaps the two points of
//! each, so point 0 (always in such a component) loses no generality.

use rayon::prelude::*;

use super::{accept, Found};
use crate::perm::{commuting_involution_pair_reps, PairComponent, Permutation};

pub(super) fn search(v: usize) -> Vec<Found> {
    let cells: Vec<(Permutation, Permutation, Option<usize>)> = commuting_involution_pair_reps(v)
        .into_iter()
        .filter(|(_, _, shapes)| shapes.first() == Some(&PairComponent::Edge0))
        .flat_map(|(r0, r2, _)| {
            // split on the fate of point 1 under r1
            (1..v).map(move |partner| (r0.clone(), r2.clone(), (partner != 1).then_some(partner)))
        })
        .collect();
    cells
        .into_par_iter()
        .flat_map_iter(|(r0, r2, partner)| {
            let mut out = Vec::new();
            let mut images: Vec<u32> = (0..v as u32).collect();
            if let Some(y) = partner {
                images.swap(1, y);
            }
            let mut done = vec![false; v];
            done[0] = true;
            if v > 1 {
                done[1] = true;
                if let Some(y) = partner {
                    done[y] = true;
                }
            }
            for_each_involution(&mut images, &mut done, &mut |r1| {
                let r1 = Permutation::from_images_unchecked(r1.to_vec());
                if let Some(found) = accept(r0.clone(), r1, r2.clone()) {
                    out.push(found);
                }
            });
            out
        })
        .collect()
}

/// Calls `visit` once for every involution (or the identity) extending the
/// points already marked `done`.
fn for_each_involution(images: &mut [u32], done: &mut [bool], visit: &mut dyn FnMut(&[u32])) {
    let Some(x) = done.iter().position(|&d| !d) else {
        visit(images);
        return;
    };
    done[x] = true;
    for_each_involution(images, done, visit);
    for y in x + 1..images.len() {
        if !done[y] {
            done[y] = true;
            images.swap(x, y);
            for_each_involution(images, done, visit);
            images.swap(x, y);
            done[y] = false;
        }
    }
    done[x] = false;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn involution_count() {
        // involutions on 6 points, counting the identity
        let mut images: Vec<u32> = (0..6).collect();
        let mut done = vec![false; 6];
        let mut n = 0;
        for_each_involution(&mut images, &mut done, &mut |_| n += 1);
        assert_eq!(n, 76);
    }
}
