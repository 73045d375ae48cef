//! Duality, Petriality and the vertex-faithful quotient.

use crate::families::toroidal_44;
use crate::families::TorusVector;
use crate::perm::Permutation;
use crate::polyhedron::{PolyError, Polyhedron};

/// The dual polyhedron, with generators `(r2, r1, r0)`.
pub fn dual(p: &Polyhedron) -> Polyhedron {
    let [r0, r1, r2] = p.triple();
    Polyhedron::try_new(r2, r1, r0).expect("the dual of a string C-group is a string C-group")
}

/// The Petrie dual's generator triple `(r0 r2, r1, r2)`, unvalidated.
pub fn petrial_triple(p: &Polyhedron) -> [Permutation; 3] {
    let [r0, r1, r2] = p.triple();
    [r0.mul(&r2), r1, r2]
}

/// The Petrie dual, or `NotPolyhedral` naming the failed axiom.
pub fn petrial(p: &Polyhedron) -> Result<Polyhedron, PolyError> {
    let [a, b, c] = petrial_triple(p);
    Polyhedron::try_new(a, b, c).map_err(|e| PolyError::NotPolyhedral(Box::new(e)))
}

/// The quotient by the core of `⟨r1, r2⟩`, returned with its `q`.
///
/// The core of a non-flat polyhedron is `⟨(r1 r2)^{q'}⟩` for some `q' ≥ 3`,
/// and the quotient is a vertex-faithful polyhedron of type `{p, q'}` with
/// the same vertices.
pub fn vertex_faithful_quotient(p: &Polyhedron) -> Result<(Polyhedron, u64), PolyError> {
    let inv = p.invariants();
    if inv.flat {
        return Err(PolyError::InputFlat);
    }
    let core = p.group().normal_core(&[p.r(1).clone(), p.r(2).clone()])?;
    if core.is_trivial() {
        return Ok((p.clone(), inv.q));
    }
    let m = core.order() as u64;
    if inv.q % m != 0 {
        return Err(PolyError::CoreNotRotational);
    }
    let qp = inv.q / m;
    if qp < 3 || !core.contains(&p.sigma2().pow(qp as i64)) {
        return Err(PolyError::CoreNotRotational);
    }
    let (action, faithful) = p.vertex_action();
    debug_assert!(!faithful);
    let g = action.generators();
    let quotient = Polyhedron::try_new(g[0].clone(), g[1].clone(), g[2].clone())?;
    let qi = quotient.invariants();
    if qi.v != inv.v || qi.p != inv.p || qi.q != qp || !qi.vertex_faithful || qi.flat {
        return Err(PolyError::CoreNotRotational);
    }
    Ok((quotient, qp))
}

/// The dual of the Petrial of `{4,4}_(s,0)`: type `{4, 2s}` on `2s`
/// vertices with `8 s²` flags.
pub fn petrial_dual_torus(s: u64) -> Result<Polyhedron, PolyError> {
    if s < 3 {
        return Err(PolyError::CoverPrecondition(format!("s = {s} must be at least 3")));
    }
    let torus = toroidal_44(s, TorusVector::Axis)?;
    Ok(dual(&petrial(&torus)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp::{realize, Presentation, DEFAULT_COSET_LIMIT};

    fn from_text(text: &str) -> Polyhedron {
        let g = realize(&Presentation::parse(text).unwrap(), DEFAULT_COSET_LIMIT).unwrap();
        Polyhedron::from_group(&g).unwrap()
    }

    #[test]
    fn cube_and_octahedron_are_dual() {
        let cube = from_text("p=4 q=3");
        let oct = from_text("p=3 q=4");
        let d = dual(&cube);
        assert!(d.iso_as_polyhedra(&oct));
        assert_eq!((d.invariants().v, d.invariants().f), (cube.invariants().f, cube.invariants().v));
        assert!(dual(&d).iso_as_polyhedra(&cube));
    }

    #[test]
    fn petrial_of_tetrahedron_is_hemicube() {
        let t = from_text("p=3 q=3");
        let pt = petrial(&t).unwrap();
        assert!(pt.iso_as_polyhedra(&from_text("p=4 q=3 rel=(012)^3")));
        assert!(petrial(&pt).unwrap().iso_as_polyhedra(&t));
    }

    #[test]
    fn petrial_can_fail() {
        let dihedron = from_text("p=2 q=3");
        assert!(matches!(petrial(&dihedron), Err(PolyError::NotPolyhedral(_))));
        assert_eq!(petrial_triple(&dihedron)[0], dihedron.r(0).mul(dihedron.r(2)));
    }

    #[test]
    fn quotient_of_small_torus() {
        let big = from_text("p=3 q=6 rel=(012)^4");
        let (q, qp) = vertex_faithful_quotient(&big).unwrap();
        assert_eq!(qp, 3);
        assert!(q.iso_as_polyhedra(&from_text("p=3 q=3")));
        let t = from_text("p=3 q=3");
        let (same, q3) = vertex_faithful_quotient(&t).unwrap();
        assert_eq!(q3, 3);
        assert!(same.iso_as_polyhedra(&t));
        assert_eq!(vertex_faithful_quotient(&from_text("p=2 q=3")).unwrap_err(), PolyError::InputFlat);
    }

    #[test]
    fn petrial_dual_tori() {
        for (s, order) in [(3u64, 72u64), (5, 200), (7, 392)] {
            let p = petrial_dual_torus(s).unwrap();
            let i = p.invariants();
            assert_eq!((i.p, i.q, i.v, i.order), (4, 2 * s, 2 * s, order));
            assert!(p.satisfies_relation1().unwrap());
            assert!(!i.orientable);
        }
        let i = petrial_dual_torus(3).unwrap().invariants().clone();
        assert_eq!((i.z1, i.h, i.z2), (4, 6, 6));
        assert!(petrial_dual_torus(2).is_err());
    }
}
