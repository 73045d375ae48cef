//! Permutations on `0..n` and finitely generated permutation groups.
//!
//! Points are 0-indexed internally. Text I/O uses 1-indexed cycle notation,
//! e.g. `(1 2)(3 4)`, with the identity printed as `()`.

mod canonical;
mod group;
mod involutions;

pub use canonical::{canonical_form, canonical_relabeling};
pub use group::{BlockOutcome, BlockSystem, PermGroup};
pub use involutions::{commuting_involution_pair_reps, involution_class_reps, PairComponent};

use std::fmt;

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("image array is not a bijection on 0..{degree}")]
    NotABijection { degree: usize },
    #[error("cycle syntax error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("group order exceeds cap {cap}")]
    OrderCapExceeded { cap: usize },
    #[error("at least one generator is required")]
    NoGenerators,
    #[error("group is not transitive")]
    NotTransitive,
    #[error("given subgroup is not contained in the group")]
    NotSubgroup,
    #[error("{prime} does not divide the group order {order}")]
    PrimeDoesNotDivide { prime: u64, order: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
}

/// A permutation of `0..degree`, acting on the right: `(i)(a*b) = ((i)a)b`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree as u32).collect() }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(PermError::NotABijection { degree: n });
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Caller guarantees `images` is a bijection.
    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation from 0-indexed cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self, PermError> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a >= degree {
                    return Err(PermError::PointOutOfRange { point: a, degree });
                }
                if touched[a] {
                    return Err(PermError::NotABijection { degree });
                }
                touched[a] = true;
                images[a] = cycle[(k + 1) % cycle.len()] as u32;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses 1-indexed cycle notation. When `degree` is `None` the degree is
    /// the largest point mentioned.
    pub fn parse_cycles(text: &str, degree: Option<usize>) -> Result<Self, PermError> {
        let cycles = parse_cycle_list(text)?;
        let max_point = cycles.iter().flatten().copied().max().unwrap_or(0);
        let degree = match degree {
            Some(d) if d < max_point => {
                return Err(PermError::PointOutOfRange { point: max_point - 1, degree: d })
            }
            Some(d) => d,
            None => max_point,
        };
        let zero: Vec<Vec<usize>> =
            cycles.iter().map(|c| c.iter().map(|&x| x - 1).collect()).collect();
        let refs: Vec<&[usize]> = zero.iter().map(|c| c.as_slice()).collect();
        Self::from_cycles(degree, &refs)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn is_involution(&self) -> bool {
        !self.is_identity() && self.squares_to_identity()
    }

    /// True for the identity and for involutions.
    pub fn squares_to_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| self.images[x as usize] as usize == i)
    }

    /// `self * other`: first `self`, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch { left: self.degree(), right: other.degree() });
        }
        Ok(self.mul(other))
    }

    /// Composition without the degree check; panics on mismatch.
    pub fn mul(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "permutation degree mismatch");
        Permutation { images: self.images.iter().map(|&x| other.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, exp: i64) -> Permutation {
        let base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            sq = sq.mul(&sq);
            e >>= 1;
        }
        acc
    }

    /// `other^-1 * self * other`.
    pub fn conjugate_by(&self, other: &Permutation) -> Permutation {
        other.inverse().mul(self).mul(other)
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.mul(other) == other.mul(self)
    }

    /// Disjoint cycles (length ≥ 2), each starting at its smallest point,
    /// ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.image(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.image(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    pub fn order(&self) -> u64 {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut acc = 1u64;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.image(x);
                len += 1;
            }
            acc = lcm(acc, len);
        }
        acc
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&i| self.image(i) == i).collect()
    }

    /// Relabels points: the result maps `relabel[i]` to `relabel[self(i)]`.
    pub fn relabeled(&self, relabel: &[u32]) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[relabel[i] as usize] = relabel[x as usize];
        }
        Permutation { images }
    }

    /// Direct sum on `0..self.degree()+other.degree()`.
    pub fn disjoint_union(&self, other: &Permutation) -> Permutation {
        let shift = self.degree() as u32;
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|&x| x + shift));
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (k, x) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

/// Parses `(1 2)(3 4 5)`, also accepting commas inside cycles. Points are
/// returned 1-indexed as written.
fn parse_cycle_list(text: &str) -> Result<Vec<Vec<usize>>, PermError> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut cycles = Vec::new();
    let err = |pos: usize, msg: &str| PermError::Parse { pos, msg: msg.to_string() };
    loop {
        while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
            pos += 1;
        }
        if pos == bytes.len() {
            break;
        }
        if bytes[pos] != b'(' {
            return Err(err(pos, "expected '('"));
        }
        pos += 1;
        let mut cycle = Vec::new();
        loop {
            while pos < bytes.len() && (bytes[pos].is_ascii_whitespace() || bytes[pos] == b',') {
                pos += 1;
            }
            if pos == bytes.len() {
                return Err(err(pos, "unclosed cycle"));
            }
            if bytes[pos] == b')' {
                pos += 1;
                break;
            }
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if start == pos {
                return Err(err(pos, "expected a point number"));
            }
            let n: usize = text[start..pos].parse().map_err(|_| err(start, "bad number"))?;
            if n == 0 {
                return Err(err(start, "points are 1-indexed"));
            }
            if cycle.contains(&n) {
                return Err(err(start, "repeated point in cycle"));
            }
            cycle.push(n);
        }
        if cycle.len() > 1 {
            cycles.push(cycle);
        }
    }
    Ok(cycles)
}

/// Splits a list like `(1 2),(2 3),(3 4)` at top-level commas.
pub fn split_generator_list(text: &str) -> Vec<&str> {
    let mut depth = 0i32;
    let mut out = Vec::new();
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' | ';' if depth == 0 => {
                out.push(text[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(text[start..].trim());
    out.retain(|s| !s.is_empty());
    out
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
