//! HLT coset enumeration specialised to three involutory generators.

use super::{FpError, Presentation, Word};

const NONE: u32 = u32::MAX;

/// A complete, standardized coset table: `rows[c][g]` is the coset reached
/// from coset `c` by generator `g`. Coset 0 is the subgroup itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    pub rows: Vec<[u32; 3]>,
}

impl CosetTable {
    pub fn index(&self) -> usize {
        self.rows.len()
    }

    /// Image array of generator `g` acting on cosets.
    pub fn generator_images(&self, g: usize) -> Vec<u32> {
        self.rows.iter().map(|r| r[g]).collect()
    }

    /// Coset reached from `c` by reading `word` left to right.
    pub fn trace(&self, c: usize, word: &[u8]) -> usize {
        word.iter().fold(c, |x, &g| self.rows[x][g as usize] as usize)
    }

    /// Every relator returns every coset to itself.
    pub fn satisfies(&self, relators: &[Vec<u8>]) -> bool {
        (0..self.index()).all(|c| relators.iter().all(|r| self.trace(c, r) == c))
    }
}

struct Enumerator {
    table: Vec<[u32; 3]>,
    parent: Vec<u32>,
    live: usize,
    limit: usize,
    queue: Vec<u32>,
}

impl Enumerator {
    fn new(limit: usize) -> Self {
        Enumerator { table: vec![[NONE; 3]], parent: vec![0], live: 1, limit, queue: Vec::new() }
    }

    fn is_live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut x = c;
        while self.parent[x as usize] != r {
            let next = self.parent[x as usize];
            self.parent[x as usize] = r;
            x = next;
        }
        r
    }

    fn define(&mut self, c: u32, g: usize) -> Result<u32, FpError> {
        if self.live >= self.limit {
            return Err(FpError::CosetLimitExceeded { limit: self.limit });
        }
        let n = self.table.len() as u32;
        self.table.push([NONE; 3]);
        self.parent.push(n);
        self.live += 1;
        self.table[c as usize][g] = n;
        self.table[n as usize][g] = c;
        Ok(n)
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.rep(a), self.rep(b));
        if ra == rb {
            return;
        }
        let (keep, drop) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[drop as usize] = keep;
        self.live -= 1;
        self.queue.push(drop);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let e = self.queue[i];
            i += 1;
            for g in 0..3 {
                let f = self.table[e as usize][g];
                if f == NONE {
                    continue;
                }
                self.table[f as usize][g] = NONE;
                self.table[e as usize][g] = NONE;
                let e1 = self.rep(e);
                let f1 = self.rep(f);
                let te = self.table[e1 as usize][g];
                let tf = self.table[f1 as usize][g];
                if te != NONE {
                    self.merge(f1, te);
                } else if tf != NONE {
                    self.merge(e1, tf);
                } else {
                    self.table[e1 as usize][g] = f1;
                    self.table[f1 as usize][g] = e1;
                }
            }
        }
        self.queue.clear();
    }

    /// Scans `word` at coset `c`, defining new cosets until it closes.
    fn scan_and_fill(&mut self, c: u32, word: &[u8]) -> Result<(), FpError> {
        if word.is_empty() {
            return Ok(());
        }
        let mut f = c;
        let mut b = c;
        let mut i = 0isize;
        let mut j = word.len() as isize - 1;
        let at = |k: isize| word[k as usize] as usize;
        loop {
            while i <= j && self.table[f as usize][at(i)] != NONE {
                f = self.table[f as usize][at(i)];
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i && self.table[b as usize][at(j)] != NONE {
                b = self.table[b as usize][at(j)];
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                self.table[f as usize][at(i)] = b;
                self.table[b as usize][at(i)] = f;
                return Ok(());
            }
            self.define(f, at(i))?;
        }
    }

    /// Renumbers live cosets contiguously, preserving their order.
    fn compact(&mut self, cursor: u32) -> u32 {
        let mut new_index = vec![NONE; self.table.len()];
        let mut next = 0u32;
        for c in 0..self.table.len() {
            if self.parent[c] == c as u32 {
                new_index[c] = next;
                next += 1;
            }
        }
        let mut table = Vec::with_capacity(next as usize);
        for c in 0..self.table.len() {
            if self.parent[c] == c as u32 {
                let row = self.table[c];
                table.push(row.map(|x| if x == NONE { NONE } else { new_index[x as usize] }));
            }
        }
        self.table = table;
        self.parent = (0..next).collect();
        // the cursor may itself have died; continue from the next live coset
        let mut c = cursor as usize;
        while c < new_index.len() && new_index[c] == NONE {
            c += 1;
        }
        if c < new_index.len() {
            new_index[c]
        } else {
            next
        }
    }

    fn run(&mut self, relators: &[Vec<u8>], subgroup: &[Vec<u8>]) -> Result<(), FpError> {
        for w in subgroup {
            self.scan_and_fill(0, w)?;
        }
        let mut c: u32 = 0;
        while (c as usize) < self.table.len() {
            if self.table.len() > 4096 && self.table.len() > 2 * self.live {
                c = self.compact(c);
                continue;
            }
            for r in relators {
                if !self.is_live(c) {
                    break;
                }
                self.scan_and_fill(c, r)?;
            }
            for g in 0..3 {
                if self.is_live(c) && self.table[c as usize][g] == NONE {
                    self.define(c, g)?;
                }
            }
            c += 1;
        }
        Ok(())
    }

    /// Relabels live cosets in breadth-first order from coset 0.
    fn standardize(&mut self) -> CosetTable {
        let mut label = vec![NONE; self.table.len()];
        let mut order = vec![0u32];
        label[0] = 0;
        let mut i = 0;
        while i < order.len() {
            let c = order[i] as usize;
            for g in 0..3 {
                let d = self.table[c][g];
                debug_assert!(d != NONE && self.is_live(d));
                if label[d as usize] == NONE {
                    label[d as usize] = order.len() as u32;
                    order.push(d);
                }
            }
            i += 1;
        }
        let rows = order.iter().map(|&c| self.table[c as usize].map(|x| label[x as usize])).collect();
        CosetTable { rows }
    }
}

/// Enumerates cosets of `⟨subgroup⟩` in the group presented by `pres`.
///
/// `limit` bounds the number of live cosets at any moment; exceeding it is
/// reported as an error and says nothing about the true index.
pub fn enumerate_cosets(pres: &Presentation, subgroup: &[Word], limit: usize) -> Result<CosetTable, FpError> {
    if limit == 0 {
        return Err(FpError::CosetLimitExceeded { limit });
    }
    let relators = pres.relator_letters();
    let subgroup: Vec<Vec<u8>> = subgroup.iter().map(|w| w.expand()).collect();
    let mut e = Enumerator::new(limit);
    e.run(&relators, &subgroup)?;
    let table = e.standardize();
    debug_assert!(table.satisfies(&relators));
    Ok(table)
}
