use super::Permutation;

/// Shape of a connected component of the graph on points with edges
/// labelled by a commuting involution pair `(r0, r2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PairComponent {
    /// An edge moved by `r0` only.
    Edge0,
    /// An edge moved by `r2` only.
    Edge2,
    /// Two points swapped by both.
    DoubleEdge,
    /// Four points with `r0 = (a b)(c d)`, `r2 = (a d)(b c)`.
    Square,
    /// A point fixed by both.
    Fixed,
}

impl PairComponent {
    pub fn size(self) -> usize {
        match self {
            PairComponent::Fixed => 1,
            PairComponent::Square => 4,
            _ => 2,
        }
    }
}

/// One involution per conjugacy class of `Sym(n)`: `(0 1)(2 3)...` with
/// `k` transpositions for each admissible `k`.
pub fn involution_class_reps(n: usize, include_identity: bool) -> Vec<Permutation> {
    let start = if include_identity { 0 } else { 1 };
    (start..=n / 2)
        .map(|k| {
            let cycles: Vec<[usize; 2]> = (0..k).map(|t| [2 * t, 2 * t + 1]).collect();
            let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
            Permutation::from_cycles(n, &refs).expect("disjoint transpositions")
        })
        .collect()
}

/// Representatives of the ordered pairs `(r0, r2)` of commuting elements of
/// order at most 2, one per simultaneous conjugacy class.
///
/// Each class is a multiset of component shapes. Components are laid out in
/// the order `Edge0, Edge2, DoubleEdge, Square, Fixed`, so whenever the
/// pair has an `Edge0` component, point 0 lies in one.
pub fn commuting_involution_pair_reps(n: usize) -> Vec<(Permutation, Permutation, Vec<PairComponent>)> {
    let mut out = Vec::new();
    for a in 0..=n / 2 {
        for c in 0..=(n - 2 * a) / 2 {
            for d in 0..=(n - 2 * a - 2 * c) / 2 {
                for s in 0..=(n - 2 * a - 2 * c - 2 * d) / 4 {
                    let f = n - 2 * a - 2 * c - 2 * d - 4 * s;
                    let mut shapes = Vec::new();
                    shapes.extend(std::iter::repeat(PairComponent::Edge0).take(a));
                    shapes.extend(std::iter::repeat(PairComponent::Edge2).take(c));
                    shapes.extend(std::iter::repeat(PairComponent::DoubleEdge).take(d));
                    shapes.extend(std::iter::repeat(PairComponent::Square).take(s));
                    shapes.extend(std::iter::repeat(PairComponent::Fixed).take(f));
                    let (r0, r2) = lay_out(n, &shapes);
                    out.push((r0, r2, shapes));
                }
            }
        }
    }
    out
}

fn lay_out(n: usize, shapes: &[PairComponent]) -> (Permutation, Permutation) {
    let mut r0: Vec<u32> = (0..n as u32).collect();
    let mut r2 = r0.clone();
    let mut x = 0u32;
    for shape in shapes {
        let i = x as usize;
        match shape {
            PairComponent::Edge0 => r0.swap(i, i + 1),
            PairComponent::Edge2 => r2.swap(i, i + 1),
            PairComponent::DoubleEdge => {
                r0.swap(i, i + 1);
                r2.swap(i, i + 1);
            }
            PairComponent::Square => {
                r0.swap(i, i + 1);
                r0.swap(i + 2, i + 3);
                r2.swap(i, i + 3);
                r2.swap(i + 1, i + 2);
            }
            PairComponent::Fixed => {}
        }
        x += shape.size() as u32;
    }
    (Permutation::from_images_unchecked(r0), Permutation::from_images_unchecked(r2))
}
