//! Backtracking over standardized partial coset tables.
//!
//! For each admissible type `{p, q}` the search builds transitive actions of
//! `[p, q]` on `v` points in which point 0 is fixed by `r1` and `r2`. Rows
//! are filled in order and new points are only created at the first empty
//! entry, so every subgroup of index `v` containing `⟨r1, r2⟩` is met once.
//! Relators are scanned after each choice to deduce forced entries and to
//! cut dead branches early.

use rayon::prelude::*;

use super::{accept, Found};
use crate::perm::Permutation;

const UNDEF: u32 = u32::MAX;

/// All candidate triples, one search per type `{p, q}` with `2 ≤ p, q ≤ v`.
/// The group has order `2qv`, so `⟨r0, r1⟩` of order `2p` forces `p | qv`,
/// and the `qv / 2` edges force `qv` even.
pub(super) fn search(v: usize) -> Vec<Found> {
    let types: Vec<(usize, usize)> = (2..=v)
        .flat_map(|p| (2..=v).map(move |q| (p, q)))
        .filter(|&(p, q)| (q * v) % p == 0 && (q * v) % 2 == 0)
        .collect();
    types.into_par_iter().flat_map_iter(|(p, q)| search_type(v, p, q)).collect()
}

fn search_type(v: usize, p: usize, q: usize) -> Vec<Found> {
    let relators = vec![alternating(0, 2, 2), alternating(0, 1, p), alternating(1, 2, q)];
    let mut table = Table { v, rows: vec![[UNDEF; 3]; v], live: 1, trail: Vec::new(), relators };
    table.set(0, 1, 0);
    table.set(0, 2, 0);
    let mut out = Vec::new();
    if table.propagate(0) {
        table.descend(p as u64, q as u64, &mut out);
    }
    out
}

fn alternating(a: u8, b: u8, k: usize) -> Vec<u8> {
    (0..k).flat_map(|_| [a, b]).collect()
}

struct Table {
    v: usize,
    rows: Vec<[u32; 3]>,
    /// Points in use: `0..live`.
    live: usize,
    /// Entries set since the start, for undoing.
    trail: Vec<(u32, u8)>,
    relators: Vec<Vec<u8>>,
}

impl Table {
    fn set(&mut self, c: u32, g: u8, d: u32) {
        self.rows[c as usize][g as usize] = d;
        self.trail.push((c, g));
        if c != d {
            self.rows[d as usize][g as usize] = c;
            self.trail.push((d, g));
        }
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (c, g) = self.trail.pop().expect("trail longer than mark");
            self.rows[c as usize][g as usize] = UNDEF;
        }
    }

    fn first_gap(&self) -> Option<(u32, u8)> {
        (0..self.live).find_map(|c| (0..3u8).find(|&g| self.rows[c][g as usize] == UNDEF).map(|g| (c as u32, g)))
    }

    fn descend(&mut self, p: u64, q: u64, out: &mut Vec<Found>) {
        let Some((c, g)) = self.first_gap() else {
            if self.live == self.v && self.consistent() {
                if let Some(found) = self.candidate(p, q) {
                    out.push(found);
                }
            }
            return;
        };
        // an earlier row d < c is complete, so it cannot pair with c
        for d in c..self.live as u32 {
            if self.rows[d as usize][g as usize] != UNDEF {
                continue;
            }
            let mark = self.trail.len();
            self.set(c, g, d);
            if self.propagate(mark) {
                self.descend(p, q, out);
            }
            self.undo_to(mark);
        }
        if self.live < self.v {
            let d = self.live as u32;
            let mark = self.trail.len();
            self.live += 1;
            self.set(c, g, d);
            if self.propagate(mark) {
                self.descend(p, q, out);
            }
            self.undo_to(mark);
            self.live -= 1;
        }
    }

    /// Rescans the relators through every entry set since `mark`, including
    /// entries deduced along the way. Returns false on a contradiction.
    ///
    /// A relator `(ab)^k` scanned at a point traces its alternating path in
    /// both directions, so scanning at the endpoints of each new entry sees
    /// every relator occurrence through it.
    fn propagate(&mut self, mark: usize) -> bool {
        let mut next = mark;
        while next < self.trail.len() {
            let (x, g) = self.trail[next];
            next += 1;
            for k in 0..self.relators.len() {
                if !self.relators[k][..2].contains(&g) {
                    continue;
                }
                if let Scan::Contradiction = self.scan(k, x) {
                    return false;
                }
            }
        }
        true
    }

    /// Full check of a complete table.
    fn consistent(&mut self) -> bool {
        (0..self.relators.len()).all(|k| (0..self.live as u32).all(|x| matches!(self.scan(k, x), Scan::Nothing)))
    }

    fn scan(&mut self, k: usize, x: u32) -> Scan {
        let word = &self.relators[k];
        let len = word.len();
        let mut f = x;
        let mut i = 0;
        while i < len {
            let next = self.rows[f as usize][word[i] as usize];
            if next == UNDEF {
                break;
            }
            f = next;
            i += 1;
        }
        if i == len {
            return if f == x { Scan::Nothing } else { Scan::Contradiction };
        }
        let mut b = x;
        let mut j = len;
        while j > i {
            let next = self.rows[b as usize][word[j - 1] as usize];
            if next == UNDEF {
                break;
            }
            b = next;
            j -= 1;
        }
        if j == i {
            return if f == b { Scan::Nothing } else { Scan::Contradiction };
        }
        if j == i + 1 {
            // both ends of the single gap are free, since the traces stopped there
            let g = word[i];
            self.set(f, g, b);
            return Scan::Deduced;
        }
        Scan::Nothing
    }

    fn candidate(&self, p: u64, q: u64) -> Option<Found> {
        let perm = |g: usize| Permutation::from_images_unchecked(self.rows.iter().map(|row| row[g]).collect());
        let (r0, r1, r2) = (perm(0), perm(1), perm(2));
        if r0.mul(&r1).order() != p || r1.mul(&r2).order() != q {
            return None;
        }
        accept(r0, r1, r2)
    }
}

enum Scan {
    Nothing,
    Deduced,
    Contradiction,
}
