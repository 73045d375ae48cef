use std::cmp::Ordering;

use super::{group::orbits_of, Permutation};

/// Relabelling `old -> new` that sends a tuple of permutations to its
/// canonical representative under simultaneous conjugation.
///
/// Each connected component is relabelled by breadth-first search from every
/// possible start point (generators taken in order) and the lexicographically
/// least encoding is kept. Components are then sorted by size and encoding.
pub fn canonical_relabeling(gens: &[Permutation]) -> Vec<u32> {
    let n = gens.first().map_or(0, |g| g.degree());
    let mut parts: Vec<(Vec<u32>, Vec<usize>)> = orbits_of(n, gens)
        .into_iter()
        .map(|orbit| {
            let mut best: Option<(Vec<u32>, Vec<usize>)> = None;
            for &start in &orbit {
                let order = bfs_order(gens, start, orbit.len(), n);
                let code = encode(gens, &order, n);
                let better = match &best {
                    None => true,
                    Some((b, _)) => code.cmp(b) == Ordering::Less,
                };
                if better {
                    best = Some((code, order));
                }
            }
            best.expect("orbits are nonempty")
        })
        .collect();
    parts.sort_by(|a, b| a.1.len().cmp(&b.1.len()).then_with(|| a.0.cmp(&b.0)));
    let mut relabel = vec![0u32; n];
    let mut next = 0u32;
    for (_, order) in parts {
        for x in order {
            relabel[x] = next;
            next += 1;
        }
    }
    relabel
}

pub fn canonical_form(gens: &[Permutation]) -> Vec<Permutation> {
    let relabel = canonical_relabeling(gens);
    gens.iter().map(|g| g.relabeled(&relabel)).collect()
}

fn bfs_order(gens: &[Permutation], start: usize, size: usize, n: usize) -> Vec<usize> {
    let mut label = vec![u32::MAX; n];
    let mut order = Vec::with_capacity(size);
    label[start] = 0;
    order.push(start);
    let mut i = 0;
    while i < order.len() {
        for g in gens {
            let y = g.image(order[i]);
            if label[y] == u32::MAX {
                label[y] = order.len() as u32;
                order.push(y);
            }
        }
        i += 1;
    }
    order
}

fn encode(gens: &[Permutation], order: &[usize], n: usize) -> Vec<u32> {
    let mut label = vec![0u32; n];
    for (k, &x) in order.iter().enumerate() {
        label[x] = k as u32;
    }
    let mut code = Vec::with_capacity(gens.len() * order.len());
    for g in gens {
        code.extend(order.iter().map(|&x| label[g.image(x)]));
    }
    code
}
