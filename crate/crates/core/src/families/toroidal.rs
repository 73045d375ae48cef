use super::{cat, s1, s2};
use crate::fp::{realize, Presentation, Word};
use crate::polyhedron::{PolyError, Polyhedron};

/// Translation vector of a toroidal map `{4,4}_(s,0)` or `{4,4}_(s,s)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TorusVector {
    /// `(s, 0)`: `s²` vertices, `8s²` flags.
    Axis,
    /// `(s, s)`: `2s²` vertices, `16s²` flags.
    Diagonal,
}

/// The regular toroidal map `{4,4}_(s,0)` or `{4,4}_(s,s)`.
///
/// `(s,0)` is `[4,4]` with `(σ1 σ2⁻¹)^s = 1`; the element `σ1 σ2⁻¹ = r0 r1 r2 r1`
/// is a unit translation. `(s,s)` is `[4,4]` with `(r0 r1 r2)^{2s} = 1`.
pub fn toroidal_44(s: u64, vector: TorusVector) -> Result<Polyhedron, PolyError> {
    if s < 2 {
        return Err(PolyError::CoverPrecondition(format!("s = {s} must be at least 2")));
    }
    let rel = match vector {
        TorusVector::Axis => Word::power(Word::from_letters(&cat(&[&s1(1), &s2(-1)])), s as i64),
        TorusVector::Diagonal => Word::power(Word::from_letters(&[0, 1, 2]), 2 * s as i64),
    };
    let pres = Presentation::new(4, 4).with_relator(rel);
    let g = realize(&pres, crate::fp::default_coset_limit())?;
    let poly = Polyhedron::from_group(&g)?;
    let (v, order) = match vector {
        TorusVector::Axis => (s * s, 8 * s * s),
        TorusVector::Diagonal => (2 * s * s, 16 * s * s),
    };
    let inv = poly.invariants();
    assert_eq!((inv.p, inv.q, inv.v, inv.order), (4, 4, v, order), "toroidal map {{4,4}} with s = {s}");
    Ok(poly)
}
