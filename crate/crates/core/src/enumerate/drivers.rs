//! Finite instances of the classification theorems, checked end to end.

use serde::{Deserialize, Serialize};

use super::{enumerate_unchecked, CensusRecord, EnumerateError, EnumerateOptions, Strategy};
use crate::families::{flat_family_catalog, lambda_oracle, toroidal_44, LambdaParams, TorusVector};
use crate::fp::default_coset_limit;
use crate::operators::{petrial, petrial_dual_torus};
use crate::perm::is_prime;
use crate::polyhedron::{PolyError, Polyhedron};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlatSummary {
    pub family: String,
    #[serde(rename = "type")]
    pub schlafli: [u64; 2],
    pub order: u64,
    pub flat: bool,
    pub orientable: bool,
    pub vertex_faithful: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeReport {
    pub b: u64,
    pub vertex_faithful: Vec<CensusRecord>,
    /// Non-flat polyhedra with `b` vertices. Each has a vertex-faithful
    /// quotient on the same vertices, so this is zero exactly when the
    /// census above is empty.
    pub non_flat: usize,
    pub flat: Vec<FlatSummary>,
    /// Empty census, and the flat members are exactly `{b,2}` of order `4b`
    /// and `{b,2b}` of order `4b²`, neither vertex-faithful.
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwicePrimeReport {
    pub b: u64,
    pub vertex_faithful: Vec<CensusRecord>,
    /// Some census member is isomorphic to the flat `{2b, b}` polyhedron
    /// with group `Λ(2b,b)_{3,1}`.
    pub has_flat_member: bool,
    /// Some census member is isomorphic to the dual of the Petrial of
    /// `{4,4}_(b,0)`.
    pub has_petrial_dual_torus: bool,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BSquaredCandidate {
    pub name: String,
    #[serde(rename = "type")]
    pub schlafli: [u64; 2],
    pub v: u64,
    pub order: u64,
    pub flat: bool,
    pub normal_sylow: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BSquaredReport {
    pub b: u64,
    pub candidates: Vec<BSquaredCandidate>,
    /// Both candidates have `b²` vertices, `q = 4`, `8b²` flags, are not
    /// flat, have a normal Sylow `b`-subgroup, and have `p ≠ b`.
    pub holds: bool,
}

fn prime_in(b: u64, lo: u64, hi: u64) -> Result<(), EnumerateError> {
    if (lo..=hi).contains(&b) && is_prime(b) {
        Ok(())
    } else {
        Err(EnumerateError::ParameterOutOfRange(b))
    }
}

/// Polyhedra with a prime number `b` of vertices, `5 ≤ b ≤ 13`.
pub fn classify_prime(b: u64, q_cap: u64, options: &EnumerateOptions) -> Result<PrimeReport, EnumerateError> {
    prime_in(b, 5, 13)?;
    let vertex_faithful = enumerate_unchecked(b as usize, options)?;
    let flat: Vec<FlatSummary> = flat_family_catalog(b, q_cap, default_coset_limit())?
        .into_iter()
        .map(|e| {
            let i = e.polyhedron.invariants();
            FlatSummary {
                family: e.family.to_string(),
                schlafli: [i.p, i.q],
                order: i.order,
                flat: i.flat,
                orientable: i.orientable,
                vertex_faithful: i.vertex_faithful,
            }
        })
        .collect();
    let shape: Vec<([u64; 2], u64, bool, bool)> =
        flat.iter().map(|f| (f.schlafli, f.order, f.flat, f.vertex_faithful)).collect();
    let mut expected = vec![([b, 2], 4 * b, true, false)];
    if 2 * b <= q_cap {
        expected.push(([b, 2 * b], 4 * b * b, true, false));
    }
    let holds = vertex_faithful.is_empty() && shape == expected;
    Ok(PrimeReport { b, non_flat: vertex_faithful.len(), vertex_faithful, flat, holds })
}

/// Vertex-faithful polyhedra with `2b` vertices, `7 ≤ b ≤ 11`. The census
/// runs past the public vertex bound, so only the coset search is used.
pub fn classify_twice_prime(b: u64, options: &EnumerateOptions) -> Result<TwicePrimeReport, EnumerateError> {
    prime_in(b, 7, 11)?;
    let options = EnumerateOptions { strategy: Strategy::CosetSearch, ..*options };
    let vertex_faithful = enumerate_unchecked(2 * b as usize, &options)?;
    let polys: Vec<Polyhedron> = vertex_faithful.iter().map(|r| r.polyhedron()).collect::<Result<_, _>>()?;
    let flat = lambda_oracle(LambdaParams::new(2 * b, b, 3, 1), default_coset_limit())
        .map_err(PolyError::from)?
        .ok_or_else(|| PolyError::FamilyMismatch(format!("Λ({},{b})_{{3,1}} is not a flat polyhedron", 2 * b)))?;
    let torus = petrial_dual_torus(b)?;
    let has_flat_member = polys.iter().any(|p| p.iso_as_polyhedra(&flat));
    let has_petrial_dual_torus = polys.iter().any(|p| p.iso_as_polyhedra(&torus));
    let holds = polys.len() == 2 && has_flat_member && has_petrial_dual_torus;
    Ok(TwicePrimeReport { b, vertex_faithful, has_flat_member, has_petrial_dual_torus, holds })
}

/// The two smallest regular polyhedra with `b²` vertices, `3 ≤ b ≤ 7`:
/// `{4,4}_(b,0)` and its Petrial.
pub fn smallest_b_squared(b: u64) -> Result<BSquaredReport, EnumerateError> {
    prime_in(b, 3, 7)?;
    let torus = toroidal_44(b, TorusVector::Axis)?;
    let pet = petrial(&torus)?;
    let mut candidates = Vec::new();
    for (name, poly) in [(format!("{{4,4}}_({b},0)"), &torus), (format!("Petrial of {{4,4}}_({b},0)"), &pet)] {
        let i = poly.invariants();
        candidates.push(BSquaredCandidate {
            name,
            schlafli: [i.p, i.q],
            v: i.v,
            order: i.order,
            flat: i.flat,
            normal_sylow: poly.group().has_normal_sylow(b).map_err(PolyError::from)?,
        });
    }
    let holds = candidates.iter().all(|c| {
        c.v == b * b && c.schlafli[1] == 4 && c.order == 8 * b * b && !c.flat && c.normal_sylow && c.schlafli[0] != b
    });
    Ok(BSquaredReport { b, candidates, holds })
}
