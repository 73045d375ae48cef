//! Regular polyhedra as rank-3 string C-groups.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fp::FpError;
use crate::perm::{PermError, PermGroup, Permutation};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("generator r{index} is not an involution")]
    NotInvolution { index: usize },
    #[error("r0 and r2 do not commute")]
    OuterPairNotCommuting,
    #[error("intersection condition fails: <r0,r1> and <r1,r2> meet in {order} elements")]
    IntersectionConditionFailed { order: usize },
    #[error("degenerate type {{{p},{q}}}")]
    DegenerateType { p: u64, q: u64 },
    #[error("the triple is not polyhedral: {0}")]
    NotPolyhedral(Box<PolyError>),
    #[error("input polyhedron is flat")]
    InputFlat,
    #[error("core of <r1,r2> is not generated by a power of r1r2")]
    CoreNotRotational,
    #[error("q = {q} is odd")]
    OddQ { q: u64 },
    #[error("{qp} does not divide q = {q}")]
    QPrimeOutOfRange { qp: u64, q: u64 },
    #[error("cover precondition failed: {0}")]
    CoverPrecondition(String),
    #[error("cover relation violated: {0}")]
    CoverRelationViolated(String),
    #[error("family member does not match its description: {0}")]
    FamilyMismatch(String),
    #[error("no flat family catalog for {0} vertices")]
    UnsupportedVertexCount(u64),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Fp(#[from] FpError),
}

/// Every classification invariant of a regular polyhedron.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InvariantRecord {
    pub p: u64,
    pub q: u64,
    pub v: u64,
    pub e: u64,
    pub f: u64,
    /// Number of flags, equal to the group order.
    pub order: u64,
    pub z1: u64,
    pub h: u64,
    pub z2: u64,
    pub orientable: bool,
    pub flat: bool,
    pub vertex_faithful: bool,
}

/// A validated string C-group `⟨r0, r1, r2⟩` with cached invariants.
#[derive(Clone, Debug)]
pub struct Polyhedron {
    group: PermGroup,
    invariants: InvariantRecord,
}

/// JSON record of a polyhedron with a fixed field order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyhedronRecord {
    #[serde(rename = "type")]
    pub schlafli: [u64; 2],
    pub order: u64,
    pub v: u64,
    pub e: u64,
    pub f: u64,
    pub z1: u64,
    pub h: u64,
    pub z2: u64,
    pub orientable: bool,
    pub flat: bool,
    pub vertex_faithful: bool,
    pub generators: [String; 3],
    pub degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverAnalysis {
    pub covered: bool,
    /// `q / q'` where `q'` is the Schläfli `q` of the quotient.
    pub q_ratio: u64,
    /// Exponent with `r0 σ2^{q'} r0 = σ2^{a q'}`, reduced mod `q / q'`.
    pub a: Option<u64>,
}

fn validate(r: &[Permutation; 3]) -> Result<(u64, u64), PolyError> {
    let n = r[0].degree();
    for x in &r[1..] {
        if x.degree() != n {
            return Err(PermError::DegreeMismatch { left: n, right: x.degree() }.into());
        }
    }
    for (index, x) in r.iter().enumerate() {
        if !x.is_involution() {
            return Err(PolyError::NotInvolution { index });
        }
    }
    if !r[0].commutes_with(&r[2]) {
        return Err(PolyError::OuterPairNotCommuting);
    }
    let p = r[0].mul(&r[1]).order();
    let q = r[1].mul(&r[2]).order();
    if p == 1 || q == 1 {
        return Err(PolyError::DegenerateType { p, q });
    }
    Ok((p, q))
}

fn dihedral(a: &Permutation, b: &Permutation) -> PermGroup {
    PermGroup::generate(&[a.clone(), b.clone()]).expect("nonempty generators of equal degree")
}

impl Polyhedron {
    /// Validates the string C-group axioms and computes the invariants.
    pub fn try_new(r0: Permutation, r1: Permutation, r2: Permutation) -> Result<Self, PolyError> {
        let r = [r0, r1, r2];
        let (p, q) = validate(&r)?;
        let g01 = dihedral(&r[0], &r[1]);
        let g12 = dihedral(&r[1], &r[2]);
        let meet = g01.elements().filter(|x| g12.contains(x)).count();
        if meet != 2 {
            return Err(PolyError::IntersectionConditionFailed { order: meet });
        }
        if cfg!(debug_assertions) {
            let g02 = dihedral(&r[0], &r[2]);
            debug_assert_eq!(g01.elements().filter(|x| g02.contains(x)).count(), 2);
            debug_assert_eq!(g12.elements().filter(|x| g02.contains(x)).count(), 2);
        }
        let group = PermGroup::generate(&r)?;
        let invariants = compute_invariants(&group, p, q, g01.order() as u64, g12.order() as u64);
        Ok(Polyhedron { group, invariants })
    }

    pub fn from_group(group: &PermGroup) -> Result<Self, PolyError> {
        let g = group.generators();
        if g.len() != 3 {
            return Err(PolyError::CoverPrecondition(format!("expected 3 generators, found {}", g.len())));
        }
        Self::try_new(g[0].clone(), g[1].clone(), g[2].clone())
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn invariants(&self) -> &InvariantRecord {
        &self.invariants
    }

    pub fn r(&self, i: usize) -> &Permutation {
        &self.group.generators()[i]
    }

    pub fn triple(&self) -> [Permutation; 3] {
        [self.r(0).clone(), self.r(1).clone(), self.r(2).clone()]
    }

    pub fn degree(&self) -> usize {
        self.group.degree()
    }

    pub fn order(&self) -> u64 {
        self.invariants.order
    }

    /// `σ1 = r0 r1`.
    pub fn sigma1(&self) -> Permutation {
        self.r(0).mul(self.r(1))
    }

    /// `σ2 = r1 r2`.
    pub fn sigma2(&self) -> Permutation {
        self.r(1).mul(self.r(2))
    }

    pub fn record(&self) -> PolyhedronRecord {
        let i = &self.invariants;
        PolyhedronRecord {
            schlafli: [i.p, i.q],
            order: i.order,
            v: i.v,
            e: i.e,
            f: i.f,
            z1: i.z1,
            h: i.h,
            z2: i.z2,
            orientable: i.orientable,
            flat: i.flat,
            vertex_faithful: i.vertex_faithful,
            generators: [self.r(0).to_string(), self.r(1).to_string(), self.r(2).to_string()],
            degree: self.degree(),
        }
    }

    /// The action on the right cosets of `⟨r1, r2⟩`, with coset 0 the base
    /// vertex. Faithfulness is decided by comparing group orders.
    pub fn vertex_action(&self) -> (PermGroup, bool) {
        let gens = self.coset_action(&[self.r(1).clone(), self.r(2).clone()]);
        let image = PermGroup::generate(&gens).expect("three generators");
        let faithful = image.order() as u64 == self.order();
        (image, faithful)
    }

    /// Generator images for the action on right cosets of `⟨sub⟩`.
    pub(crate) fn coset_action(&self, sub: &[Permutation]) -> Vec<Permutation> {
        let h = PermGroup::generate(sub).expect("nonempty subgroup generators");
        let mut coset_of: HashMap<Permutation, u32> = HashMap::with_capacity(self.order() as usize);
        let mut reps = vec![Permutation::identity(self.degree())];
        for y in h.elements() {
            coset_of.insert(y.clone(), 0);
        }
        let mut images: Vec<Vec<u32>> = vec![Vec::new(); 3];
        let mut i = 0;
        while i < reps.len() {
            for (g, img) in images.iter_mut().enumerate() {
                let y = reps[i].mul(self.r(g));
                let target = match coset_of.get(&y) {
                    Some(&c) => c,
                    None => {
                        let c = reps.len() as u32;
                        for x in h.elements() {
                            coset_of.insert(x.mul(&y), c);
                        }
                        reps.push(y);
                        c
                    }
                };
                img.push(target);
            }
            i += 1;
        }
        images.into_iter().map(Permutation::from_images_unchecked).collect()
    }

    /// Number of vertices fixed by `σ2^{qp}`. Any divisor of `q` is accepted;
    /// the count divides `v` when `qp < q/2`.
    pub fn fixed_vertices_of_power(&self, qp: u64) -> Result<u64, PolyError> {
        let q = self.invariants.q;
        if qp == 0 || q % qp != 0 {
            return Err(PolyError::QPrimeOutOfRange { qp, q });
        }
        let (action, _) = self.vertex_action();
        let g = action.generators();
        let w = g[1].mul(&g[2]).pow(qp as i64);
        Ok(w.fixed_points().len() as u64)
    }

    /// Evaluates `r0 σ2^{q/2} r0 = r2 σ2^{q/2}`.
    pub fn satisfies_relation1(&self) -> Result<bool, PolyError> {
        let q = self.invariants.q;
        if q % 2 == 1 {
            return Err(PolyError::OddQ { q });
        }
        let s = self.sigma2().pow((q / 2) as i64);
        Ok(self.r(0).mul(&s).mul(self.r(0)) == self.r(2).mul(&s))
    }

    /// Generator-respecting epimorphism onto `other` exists.
    pub fn covers(&self, other: &Polyhedron) -> bool {
        self.diagonal(other).is_some()
    }

    /// The diagonal subgroup of `Γ(self) × Γ(other)` when it has order
    /// `|Γ(self)|`.
    fn diagonal(&self, other: &Polyhedron) -> Option<PermGroup> {
        if self.order() % other.order() != 0 {
            return None;
        }
        let gens: Vec<Permutation> = (0..3).map(|i| self.r(i).disjoint_union(other.r(i))).collect();
        let cap = self.order() as usize;
        PermGroup::generate_with_cap(&gens, Some(cap)).ok().filter(|d| d.order() == cap)
    }

    pub fn iso_as_polyhedra(&self, other: &Polyhedron) -> bool {
        self.order() == other.order() && self.covers(other)
    }

    /// Checks the relations forced when `self` covers a vertex-faithful
    /// `quotient` with the same number of vertices.
    pub fn verify_vf_cover_relations(&self, quotient: &Polyhedron) -> Result<CoverAnalysis, PolyError> {
        let (pi, qi) = (&self.invariants, &quotient.invariants);
        if pi.v != qi.v {
            return Err(PolyError::CoverPrecondition(format!("vertex counts differ: {} vs {}", pi.v, qi.v)));
        }
        if !qi.vertex_faithful {
            return Err(PolyError::CoverPrecondition("quotient is not vertex-faithful".into()));
        }
        let diag = self
            .diagonal(quotient)
            .ok_or_else(|| PolyError::CoverPrecondition("no covering map".into()))?;
        let n = self.degree();
        let kernel: Vec<Permutation> = diag
            .elements()
            .filter(|x| x.images()[n..].iter().enumerate().all(|(k, &y)| y as usize == n + k))
            .map(|x| Permutation::from_images_unchecked(x.images()[..n].to_vec()))
            .collect();
        let qp = qi.q;
        if pi.q % qp != 0 {
            return Err(PolyError::CoverRelationViolated(format!("q' = {qp} does not divide q = {}", pi.q)));
        }
        let ratio = pi.q / qp;
        let s = self.sigma2().pow(qp as i64);
        if kernel.len() as u64 != ratio || !kernel.contains(&s) {
            return Err(PolyError::CoverRelationViolated("kernel is not generated by σ2^q'".into()));
        }
        let conj = self.r(0).mul(&s).mul(self.r(0));
        let a = (0..ratio)
            .find(|&a| s.pow(a as i64) == conj)
            .ok_or_else(|| PolyError::CoverRelationViolated("r0 does not normalize <σ2^q'>".into()))?;
        if (a * a) % ratio != 1 % ratio {
            return Err(PolyError::CoverRelationViolated(format!("a = {a} has a² ≢ 1 mod {ratio}")));
        }
        if ratio > 1 {
            if !qi.orientable && pi.orientable {
                return Err(PolyError::CoverRelationViolated("orientable cover of a non-orientable quotient".into()));
            }
            let odd_hole = qi.p % 2 == 1 || qi.h % 2 == 1;
            let odd_zigzag = qi.z1 % 2 == 1 || qi.z2 % 2 == 1;
            if odd_hole && odd_zigzag && pi.q != 2 * qp {
                return Err(PolyError::CoverRelationViolated(format!("odd holes and zigzags force q = 2q', got q = {}", pi.q)));
            }
        }
        Ok(CoverAnalysis { covered: true, q_ratio: ratio, a: Some(a) })
    }
}

fn compute_invariants(group: &PermGroup, p: u64, q: u64, order01: u64, order12: u64) -> InvariantRecord {
    let r = group.generators();
    let order = group.order() as u64;
    let s1 = r[0].mul(&r[1]);
    let s2 = r[1].mul(&r[2]);
    let z1 = s1.mul(&r[2]);
    let h = z1.mul(&r[1]);
    let z2 = h.mul(&r[2]);
    let rotations = PermGroup::generate(&[s1, s2]).expect("two generators").order() as u64;
    let core = group.normal_core(&[r[1].clone(), r[2].clone()]).expect("generators lie in the group");
    let record = InvariantRecord {
        p,
        q,
        v: order / order12,
        e: order / 4,
        f: order / order01,
        order,
        z1: z1.order(),
        h: h.order(),
        z2: z2.order(),
        orientable: order / rotations == 2,
        flat: order == 2 * p * q,
        vertex_faithful: core.is_trivial(),
    };
    debug_assert_eq!(order, 4 * record.e);
    debug_assert_eq!(order, 2 * record.v * q);
    debug_assert_eq!(order, 2 * record.f * p);
    record
}

/// `Polyhedron::try_new` under its conventional name.
pub fn try_polyhedron(r0: Permutation, r1: Permutation, r2: Permutation) -> Result<Polyhedron, PolyError> {
    Polyhedron::try_new(r0, r1, r2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp::{realize, Presentation, DEFAULT_COSET_LIMIT};

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, Some(n)).unwrap()
    }

    fn from_text(text: &str) -> Polyhedron {
        let g = realize(&Presentation::parse(text).unwrap(), DEFAULT_COSET_LIMIT).unwrap();
        Polyhedron::from_group(&g).unwrap()
    }

    fn tetrahedron() -> Polyhedron {
        try_polyhedron(p("(1 2)", 4), p("(2 3)", 4), p("(3 4)", 4)).unwrap()
    }

    #[test]
    fn tetrahedron_record() {
        let t = tetrahedron();
        let i = t.invariants();
        assert_eq!((i.p, i.q, i.v, i.e, i.f), (3, 3, 4, 6, 4));
        assert_eq!((i.z1, i.h, i.z2), (4, 3, 4));
        assert!(i.orientable && i.vertex_faithful && !i.flat);
    }

    #[test]
    fn axiom_failures_are_named() {
        let e = try_polyhedron(p("(1 2)", 4), p("(2 3)", 4), p("(1 2)", 4)).unwrap_err();
        assert!(matches!(e, PolyError::IntersectionConditionFailed { .. }));
        let e = try_polyhedron(p("(1 2)", 4), Permutation::identity(4), p("(3 4)", 4)).unwrap_err();
        assert_eq!(e, PolyError::NotInvolution { index: 1 });
        let e = try_polyhedron(p("(1 2)", 4), p("(3 4)", 4), p("(2 3)", 4)).unwrap_err();
        assert_eq!(e, PolyError::OuterPairNotCommuting);
        let e = try_polyhedron(p("(1 2)", 4), p("(1 2)", 4), p("(3 4)", 4)).unwrap_err();
        assert!(matches!(e, PolyError::DegenerateType { p: 1, .. }));
    }

    #[test]
    fn octahedron_and_hemi_icosahedron() {
        let o = from_text("p=3 q=4");
        let i = o.invariants();
        assert_eq!((i.p, i.q, i.v, i.e, i.f), (3, 4, 6, 12, 8));
        assert!(i.orientable && i.vertex_faithful && !i.flat);
        let hemi = from_text("p=3 q=5 rel=(012)^5");
        let i = hemi.invariants();
        assert_eq!((i.order, i.z1), (60, 5));
        assert!(!i.orientable);
        let flat = from_text("p=2 q=3");
        assert!(flat.invariants().flat && !flat.invariants().vertex_faithful);
    }

    #[test]
    fn covers_and_isomorphism() {
        let t = tetrahedron();
        let t2 = from_text("p=3 q=3");
        assert!(t.iso_as_polyhedra(&t2) && t2.iso_as_polyhedra(&t));
        let big = from_text("p=3 q=6 rel=(012)^4");
        assert_eq!(big.order(), 48);
        assert!(big.covers(&t));
        assert!(!t.covers(&big));
        assert!(big.covers(&big));
        let hemicube = from_text("p=4 q=3 rel=(012)^3");
        assert_eq!(hemicube.order(), 24);
        assert!(!t.iso_as_polyhedra(&hemicube));
    }

    #[test]
    fn vertex_actions() {
        let (g, faithful) = tetrahedron().vertex_action();
        assert_eq!(g.degree(), 4);
        assert!(faithful);
        let (g, faithful) = from_text("p=3 q=6 rel=(012)^4").vertex_action();
        assert_eq!(g.degree(), 4);
        assert!(!faithful);
        let (g, faithful) = from_text("p=5 q=2").vertex_action();
        assert_eq!(g.degree(), 5);
        assert!(!faithful);
        assert!(g.generators()[2].is_identity());
    }

    #[test]
    fn fixed_vertex_counts() {
        let o = from_text("p=3 q=4");
        assert_eq!(o.fixed_vertices_of_power(1).unwrap(), 2);
        assert_eq!(o.fixed_vertices_of_power(4).unwrap(), 6);
        assert!(o.fixed_vertices_of_power(3).is_err());
        let torus = from_text("p=4 q=4 rel=(0121)^3");
        assert_eq!(torus.invariants().v, 9);
        assert_eq!(torus.fixed_vertices_of_power(1).unwrap(), 1);
    }

    #[test]
    fn relation1_on_octahedron_is_false() {
        assert!(!from_text("p=3 q=4").satisfies_relation1().unwrap());
        assert!(tetrahedron().satisfies_relation1().is_err());
    }

    #[test]
    fn json_field_order() {
        let json = serde_json::to_string(&tetrahedron().record()).unwrap();
        assert!(json.starts_with(r#"{"type":[3,3],"order":24,"v":4,"e":6,"f":4,"z1":4,"h":3,"z2":4,"orientable":true"#));
        assert!(json.ends_with(r#""generators":["(1 2)","(2 3)","(3 4)"],"degree":4}"#));
    }
}
