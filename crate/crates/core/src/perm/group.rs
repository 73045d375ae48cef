use indexmap::IndexSet;

use super::{is_prime, PermError, Permutation};

/// A permutation group with its full element set materialized.
///
/// Every group in scope is small (at most a few times 10^4 elements), so the
/// closure is stored outright and subgroup questions are answered by
/// filtering element sets.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: IndexSet<Permutation>,
}

/// A nontrivial block system of a transitive action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSystem {
    pub block_of: Vec<usize>,
    pub blocks: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlockOutcome {
    System(BlockSystem),
    /// The smallest block containing the seed is the whole point set.
    Whole,
}

impl BlockSystem {
    pub fn block_size(&self) -> usize {
        self.blocks[0].len()
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Every generator maps each block onto a block.
    pub fn is_invariant_under(&self, gens: &[Permutation]) -> bool {
        gens.iter().all(|g| {
            self.blocks.iter().all(|b| {
                let target = self.block_of[g.image(b[0])];
                b.iter().all(|&x| self.block_of[g.image(x)] == target)
            })
        })
    }
}

impl PermGroup {
    pub fn generate(gens: &[Permutation]) -> Result<Self, PermError> {
        Self::generate_with_cap(gens, None)
    }

    /// Closure of `gens`; fails as soon as more than `cap` elements are found.
    pub fn generate_with_cap(gens: &[Permutation], cap: Option<usize>) -> Result<Self, PermError> {
        let first = gens.first().ok_or(PermError::NoGenerators)?;
        let degree = first.degree();
        for g in gens {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch { left: degree, right: g.degree() });
            }
        }
        let generators: Vec<Permutation> = gens.to_vec();
        let mut elements = IndexSet::new();
        elements.insert(Permutation::identity(degree));
        let mut i = 0;
        while i < elements.len() {
            for g in &generators {
                let x = elements[i].mul(g);
                if elements.insert(x) {
                    if let Some(cap) = cap {
                        if elements.len() > cap {
                            return Err(PermError::OrderCapExceeded { cap });
                        }
                    }
                }
            }
            i += 1;
        }
        Ok(PermGroup { degree, generators, elements })
    }

    /// Builds a group from an element set already known to be closed, choosing
    /// a small generating set greedily.
    pub(crate) fn from_closed_set(degree: usize, set: Vec<Permutation>) -> Self {
        let mut gens: Vec<Permutation> = Vec::new();
        let mut current = PermGroup::trivial(degree);
        for x in &set {
            if !current.contains(x) {
                gens.push(x.clone());
                current = PermGroup::generate(&gens).expect("nonempty generator list");
            }
        }
        debug_assert_eq!(current.order(), set.len());
        current
    }

    pub fn trivial(degree: usize) -> Self {
        let mut elements = IndexSet::new();
        elements.insert(Permutation::identity(degree));
        PermGroup { degree, generators: vec![Permutation::identity(degree)], elements }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> impl Iterator<Item = &Permutation> {
        self.elements.iter()
    }

    pub fn contains(&self, x: &Permutation) -> bool {
        self.elements.contains(x)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.generators.iter().all(|g| other.contains(g))
    }

    pub fn is_normal_in(&self, other: &PermGroup) -> bool {
        self.is_subgroup_of(other)
            && other
                .generators
                .iter()
                .all(|g| self.generators.iter().all(|h| self.contains(&h.conjugate_by(g))))
    }

    /// Elements common to both groups.
    pub fn intersection(&self, other: &PermGroup) -> PermGroup {
        let (small, large) = if self.order() <= other.order() { (self, other) } else { (other, self) };
        let common: Vec<Permutation> = small.elements().filter(|x| large.contains(x)).cloned().collect();
        PermGroup::from_closed_set(self.degree, common)
    }

    /// Orbits sorted by smallest point, each sorted ascending.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        orbits_of(self.degree, &self.generators)
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() == 1
    }

    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut out = vec![point];
        let mut i = 0;
        while i < out.len() {
            for g in &self.generators {
                let y = g.image(out[i]);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
            i += 1;
        }
        out.sort_unstable();
        out
    }

    pub fn stabilizer(&self, point: usize) -> PermGroup {
        let fixing: Vec<Permutation> = self.elements().filter(|x| x.image(point) == point).cloned().collect();
        PermGroup::from_closed_set(self.degree, fixing)
    }

    /// The finest block system whose block through `seed[0]` contains all of
    /// `seed`.
    pub fn minimal_block_system_containing(&self, seed: &[usize]) -> Result<BlockOutcome, PermError> {
        if !self.is_transitive() {
            return Err(PermError::NotTransitive);
        }
        for &s in seed {
            if s >= self.degree {
                return Err(PermError::PointOutOfRange { point: s, degree: self.degree });
            }
        }
        let n = self.degree;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut queue = Vec::new();
        if let Some(&a) = seed.first() {
            for &b in &seed[1..] {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[rb] = ra;
                    queue.push((a, b));
                }
            }
        }
        while let Some((a, b)) = queue.pop() {
            for g in &self.generators {
                let (x, y) = (g.image(a), g.image(b));
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                if rx != ry {
                    parent[ry] = rx;
                    queue.push((x, y));
                }
            }
        }
        let mut block_id = vec![usize::MAX; n];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut block_of = vec![0; n];
        for x in 0..n {
            let r = find(&mut parent, x);
            if block_id[r] == usize::MAX {
                block_id[r] = blocks.len();
                blocks.push(Vec::new());
            }
            block_of[x] = block_id[r];
            blocks[block_id[r]].push(x);
        }
        if blocks.len() == 1 {
            return Ok(BlockOutcome::Whole);
        }
        let system = BlockSystem { block_of, blocks };
        debug_assert!(system.is_invariant_under(&self.generators));
        Ok(BlockOutcome::System(system))
    }

    /// Largest normal subgroup of `self` contained in `⟨h_gens⟩`.
    pub fn normal_core(&self, h_gens: &[Permutation]) -> Result<PermGroup, PermError> {
        if h_gens.iter().any(|h| !self.contains(h)) {
            return Err(PermError::NotSubgroup);
        }
        let h = if h_gens.is_empty() { PermGroup::trivial(self.degree) } else { PermGroup::generate(h_gens)? };
        let mut current: IndexSet<Permutation> = h.elements.clone();
        loop {
            let next: IndexSet<Permutation> = current
                .iter()
                .filter(|x| self.generators.iter().all(|g| current.contains(&x.conjugate_by(g))))
                .cloned()
                .collect();
            if next.len() == current.len() {
                break;
            }
            current = next;
        }
        Ok(PermGroup::from_closed_set(self.degree, current.into_iter().collect()))
    }

    /// True iff the Sylow `b`-subgroup is unique (hence normal).
    pub fn has_normal_sylow(&self, b: u64) -> Result<bool, PermError> {
        if !is_prime(b) {
            return Err(PermError::NotPrime(b));
        }
        let mut n = self.order() as u64;
        if n % b != 0 {
            return Err(PermError::PrimeDoesNotDivide { prime: b, order: self.order() });
        }
        let mut b_part = 1u64;
        while n % b == 0 {
            n /= b;
            b_part *= b;
        }
        let b_elements = self
            .elements()
            .filter(|x| {
                let mut o = x.order();
                while o % b == 0 {
                    o /= b;
                }
                o == 1
            })
            .count() as u64;
        Ok(b_elements == b_part)
    }

    pub fn is_doubly_transitive(&self) -> bool {
        if !self.is_transitive() {
            return false;
        }
        if self.degree <= 1 {
            return true;
        }
        let mut reached = vec![false; self.degree];
        let mut count = 0;
        for x in self.elements().filter(|x| x.image(0) == 0) {
            let y = x.image(1);
            if !reached[y] {
                reached[y] = true;
                count += 1;
            }
        }
        count == self.degree - 1
    }

    /// For a transitive group of prime degree `b`: doubly transitive or a
    /// normal Sylow `b`-subgroup. `None` when the hypotheses do not apply.
    pub fn burnside_dichotomy_holds(&self) -> Option<bool> {
        let b = self.degree as u64;
        if !is_prime(b) || !self.is_transitive() {
            return None;
        }
        let sylow = self.has_normal_sylow(b).expect("transitive group of prime degree b has order divisible by b");
        Some(self.is_doubly_transitive() || sylow)
    }
}

pub(crate) fn orbits_of(degree: usize, gens: &[Permutation]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; degree];
    let mut out = Vec::new();
    for start in 0..degree {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut orbit = vec![start];
        let mut i = 0;
        while i < orbit.len() {
            for g in gens {
                let y = g.image(orbit[i]);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, Some(n)).unwrap()
    }

    fn sym4() -> PermGroup {
        PermGroup::generate(&[p("(1 2)", 4), p("(2 3)", 4), p("(3 4)", 4)]).unwrap()
    }

    #[test]
    fn closure_orders() {
        assert_eq!(sym4().order(), 24);
        assert_eq!(PermGroup::generate(&[Permutation::identity(5)]).unwrap().order(), 1);
        let capped = PermGroup::generate_with_cap(&[p("(1 2)", 4), p("(2 3)", 4), p("(3 4)", 4)], Some(20));
        assert_eq!(capped.unwrap_err(), PermError::OrderCapExceeded { cap: 20 });
        assert!(PermGroup::generate(&[]).is_err());
    }

    #[test]
    fn orbits_and_transitivity() {
        assert_eq!(sym4().orbits(), vec![vec![0, 1, 2, 3]]);
        let g = PermGroup::generate(&[p("(1 2)", 4)]).unwrap();
        assert_eq!(g.orbits(), vec![vec![0, 1], vec![2], vec![3]]);
        assert!(!g.is_transitive());
    }

    #[test]
    fn blocks_of_sym4_are_trivial() {
        let g = sym4();
        for a in 0..4 {
            for b in a + 1..4 {
                assert_eq!(g.minimal_block_system_containing(&[a, b]).unwrap(), BlockOutcome::Whole);
            }
        }
        let intransitive = PermGroup::generate(&[p("(1 2)", 4)]).unwrap();
        assert_eq!(intransitive.minimal_block_system_containing(&[0, 1]), Err(PermError::NotTransitive));
    }

    #[test]
    fn blocks_of_dihedral_square() {
        // D4 on the square 1-2-3-4: diagonals form blocks
        let g = PermGroup::generate(&[p("(1 2 3 4)", 4), p("(2 4)", 4)]).unwrap();
        match g.minimal_block_system_containing(&[0, 2]).unwrap() {
            BlockOutcome::System(s) => {
                assert_eq!(s.blocks, vec![vec![0, 2], vec![1, 3]]);
                assert!(s.is_invariant_under(g.generators()));
            }
            BlockOutcome::Whole => panic!("expected diagonal blocks"),
        }
        assert_eq!(g.minimal_block_system_containing(&[0, 1]).unwrap(), BlockOutcome::Whole);
    }

    #[test]
    fn core_and_sylow() {
        let g = sym4();
        let core = g.normal_core(&[p("(1 2)", 4), p("(2 3)", 4)]).unwrap();
        assert!(core.is_trivial());
        let whole = g.normal_core(g.generators()).unwrap();
        assert_eq!(whole.order(), 24);
        let v4 = g.normal_core(&[p("(1 2 3 4)", 4), p("(1 3)", 4)]).unwrap();
        assert_eq!(v4.order(), 4);
        assert!(v4.is_normal_in(&g));
        assert!(!g.has_normal_sylow(2).unwrap());
        assert!(g.has_normal_sylow(5).is_err());
        let c5 = PermGroup::generate(&[p("(1 2 3 4 5)", 5)]).unwrap();
        assert!(c5.has_normal_sylow(5).unwrap());
        assert_eq!(c5.burnside_dichotomy_holds(), Some(true));
        assert!(g.normal_core(&[p("(1 2)", 5)]).is_err());
    }

    #[test]
    fn double_transitivity() {
        assert!(sym4().is_doubly_transitive());
        let c5 = PermGroup::generate(&[p("(1 2 3 4 5)", 5)]).unwrap();
        assert!(!c5.is_doubly_transitive());
        let stab = sym4().stabilizer(0);
        assert_eq!(stab.order(), 6);
    }
}
