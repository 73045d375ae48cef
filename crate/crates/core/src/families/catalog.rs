//! Flat regular polyhedra with `b`, `2b`, `4` or `b²` vertices, one entry
//! per family member with `q` up to a cap.

use super::{cat, relation, s1, s2, LambdaParams};
use crate::fp::{realize, FpError, Presentation, Word};
use crate::perm::is_prime;
use crate::polyhedron::{PolyError, Polyhedron};

/// How a vertex count decomposes for the catalog.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexShape {
    Prime(u64),
    Four,
    TwicePrime(u64),
    PrimeSquared(u64),
}

impl VertexShape {
    pub fn of(v: u64) -> Option<Self> {
        if v == 4 {
            Some(VertexShape::Four)
        } else if is_prime(v) {
            Some(VertexShape::Prime(v))
        } else if v % 2 == 0 && is_prime(v / 2) {
            Some(VertexShape::TwicePrime(v / 2))
        } else {
            let b = (1..=v).find(|b| b * b >= v)?;
            (b * b == v && is_prime(b)).then_some(VertexShape::PrimeSquared(b))
        }
    }
}

/// One validated member of a flat family.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    /// Family label, e.g. `{2b,q} Λ(p,q)_{3,1}`.
    pub family: &'static str,
    pub presentation: Presentation,
    pub polyhedron: Polyhedron,
    pub orientable: bool,
    pub vertex_faithful: bool,
}

struct Row {
    family: &'static str,
    presentation: Presentation,
    orientable: bool,
    vertex_faithful: bool,
}

fn lambda_row(family: &'static str, p: u64, q: u64, i: i64, j: i64, vf: bool) -> Row {
    Row { family, presentation: LambdaParams::new(p, q, i, j).presentation(), orientable: true, vertex_faithful: vf }
}

fn rel_row(family: &'static str, p: u64, q: u64, rels: Vec<Word>, orientable: bool, vf: bool) -> Row {
    let mut presentation = Presentation::new(p as u32, q as u32);
    presentation.relators = rels;
    Row { family, presentation, orientable, vertex_faithful: vf }
}

/// `σ2⁻¹ σ1 = rhs`.
fn lambda_like(rhs: &[u8]) -> Word {
    relation(&cat(&[&s2(-1), &s1(1)]), rhs)
}

/// Smallest `j` in `1..q` with `(j+1)/2 ≡ r_k (mod k)` for each `(r_k, k)`.
fn solve_j(q: u64, conditions: &[(i64, u64)]) -> Option<u64> {
    (1..q).find(|&j| {
        j % 2 == 1 && conditions.iter().all(|&(r, m)| ((j as i64 + 1) / 2 - r).rem_euclid(m as i64) == 0)
    })
}

fn rows_for(shape: VertexShape, q_cap: u64) -> Vec<Row> {
    let mut rows = Vec::new();
    match shape {
        VertexShape::Prime(2) => {
            for q in 2..=q_cap {
                rows.push(rel_row("{2,q}", 2, q, vec![], true, false));
            }
        }
        VertexShape::Prime(b) => {
            if q_cap >= 2 {
                rows.push(rel_row("{b,2}", b, 2, vec![], true, false));
            }
            if b == 3 && q_cap >= 4 {
                rows.push(rel_row("{3,4} (r0 r1 r2)^3", 3, 4, vec![Word::power(Word::from_letters(&[0, 1, 2]), 3)], false, false));
            }
            if 2 * b <= q_cap {
                rows.push(lambda_row("{b,2b} Λ(b,2b)_{-1,-3}", b, 2 * b, -1, -3, false));
            }
        }
        VertexShape::Four => {
            for q in (2..=q_cap).step_by(2) {
                rows.push(lambda_row("{4,q} Λ(4,q)_{-1,1}", 4, q, -1, 1, false));
            }
            for q in (8..=q_cap).step_by(8) {
                let alpha = q.trailing_zeros() as u64;
                let k = q >> alpha;
                let t = 1i64 << (alpha - 2);
                let j = solve_j(q, &[(1, k), (t + 1, 1 << (alpha - 1))]).expect("the congruences are solvable");
                rows.push(lambda_row("{4,2^a k} Λ(4,q)_{-1,j}", 4, q, -1, j as i64, false));
            }
            for k in 1..=q_cap / 3 {
                let rhs = cat(&[&s1(2), &[1], &s2(1)]);
                rows.push(rel_row("{4,3k} σ2⁻¹σ1 = σ1²ρ1σ2", 4, 3 * k, vec![lambda_like(&rhs)], false, k == 1));
            }
            for k in 1..=q_cap / 6 {
                let rhs = cat(&[&s1(2), &[1], &s2(1 + 3 * k as i64)]);
                rows.push(rel_row("{4,6k} σ2⁻¹σ1 = σ1²ρ1σ2^(1+3k)", 4, 6 * k, vec![lambda_like(&rhs)], false, false));
            }
        }
        VertexShape::TwicePrime(b) => {
            let p = 2 * b;
            if b == 3 {
                for r in (1..=q_cap / 4).filter(|r| r % 2 == 1) {
                    let q = 4 * r;
                    let second = relation(&cat(&[&s2(-1), &s1(2)]), &cat(&[&s1(-2), &s2(2 * r as i64 - 1)]));
                    if r == 1 {
                        let rhs = cat(&[&s1(-1), &[1], &s2(2)]);
                        rows.push(rel_row("{6,4} σ2⁻¹σ1 = σ1⁻¹ρ1σ2²", 6, 4, vec![lambda_like(&rhs)], false, false));
                    }
                    let (family, e) = if r % 4 == 1 {
                        ("{6,4r} σ2⁻¹σ1 = σ1²ρ1σ2^(r+1)", r as i64 + 1)
                    } else {
                        ("{6,4r} σ2⁻¹σ1 = σ1²ρ1σ2^(1-r)", 1 - r as i64)
                    };
                    let rhs = cat(&[&s1(2), &[1], &s2(e)]);
                    rows.push(rel_row(family, 6, q, vec![lambda_like(&rhs), second], false, r == 1));
                }
            }
            for q in (2..=q_cap).step_by(2) {
                rows.push(lambda_row("{2b,q} Λ(2b,q)_{-1,1}", p, q, -1, 1, false));
            }
            for q in (b..=q_cap).step_by(b as usize) {
                rows.push(lambda_row("{2b,q} Λ(2b,q)_{3,1}", p, q, 3, 1, q == b));
            }
            if p <= q_cap {
                rows.push(lambda_row("{2b,2b} Λ(2b,2b)_{-1,-3}", p, p, -1, -3, false));
            }
            for q in (p..=q_cap).step_by(p as usize).filter(|q| q % (2 * b * b) != 0) {
                let j = solve_j(q, &[(-1, b), (1, q / p)]).expect("the congruences are solvable");
                let j_signed = if q == p { -3 } else { j as i64 };
                if q == p {
                    // coincides with the {2b,2b} row
                    debug_assert_eq!(j as i64, (q as i64 - 3).rem_euclid(q as i64));
                    continue;
                }
                rows.push(lambda_row("{2b,q} Λ(2b,q)_{-1,j}", p, q, -1, j_signed, false));
            }
        }
        VertexShape::PrimeSquared(b) => {
            let p = b * b;
            if b == 3 && q_cap >= 4 {
                let w = Word::parse("(0121)^2 2").expect("valid word");
                rows.push(rel_row("{9,4} (r0 r1 r2 r1)^2 r2", 9, 4, vec![w], false, false));
            }
            if q_cap >= 2 {
                rows.push(lambda_row("{b²,2} Λ(b²,2)_{-1,1}", p, 2, -1, 1, false));
            }
            if 2 * b <= q_cap {
                rows.push(lambda_row("{b²,2b} Λ(b²,2b)_{-1,-3}", p, 2 * b, -1, -3, false));
            }
            if 2 * p <= q_cap {
                rows.push(lambda_row("{b²,2b²} Λ(b²,2b²)_{-1,-3}", p, 2 * p, -1, -3, false));
            }
        }
    }
    rows
}

/// Every flat family member with `v` vertices and `q ≤ q_cap`, each checked
/// to be a flat polyhedron of its stated type, vertex count, orientability
/// and vertex-faithfulness.
pub fn flat_family_catalog(v: u64, q_cap: u64, limit: usize) -> Result<Vec<CatalogEntry>, PolyError> {
    let shape = VertexShape::of(v).ok_or(PolyError::UnsupportedVertexCount(v))?;
    let mut out: Vec<CatalogEntry> = Vec::new();
    for row in rows_for(shape, q_cap) {
        let entry = build(row, v, limit)?;
        out.push(entry);
    }
    Ok(out)
}

fn build(row: Row, v: u64, limit: usize) -> Result<CatalogEntry, PolyError> {
    let g = realize(&row.presentation, limit).map_err(|e: FpError| PolyError::Fp(e))?;
    let poly = Polyhedron::from_group(&g)?;
    let inv = poly.invariants();
    let expected = (row.presentation.p as u64, row.presentation.q as u64, v, true, row.orientable, row.vertex_faithful);
    let actual = (inv.p, inv.q, inv.v, inv.flat, inv.orientable, inv.vertex_faithful);
    if expected != actual {
        return Err(PolyError::FamilyMismatch(format!(
            "{} at {}: expected (p,q,v,flat,orientable,vf) = {expected:?}, got {actual:?}",
            row.family, row.presentation
        )));
    }
    Ok(CatalogEntry {
        family: row.family,
        presentation: row.presentation,
        polyhedron: poly,
        orientable: row.orientable,
        vertex_faithful: row.vertex_faithful,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp::DEFAULT_COSET_LIMIT;

    fn types(v: u64, cap: u64) -> Vec<(u64, u64)> {
        flat_family_catalog(v, cap, DEFAULT_COSET_LIMIT)
            .unwrap()
            .iter()
            .map(|e| (e.polyhedron.invariants().p, e.polyhedron.invariants().q))
            .collect()
    }

    #[test]
    fn shapes() {
        assert_eq!(VertexShape::of(5), Some(VertexShape::Prime(5)));
        assert_eq!(VertexShape::of(4), Some(VertexShape::Four));
        assert_eq!(VertexShape::of(14), Some(VertexShape::TwicePrime(7)));
        assert_eq!(VertexShape::of(25), Some(VertexShape::PrimeSquared(5)));
        assert_eq!(VertexShape::of(12), None);
    }

    #[test]
    fn prime_vertex_catalog() {
        assert_eq!(types(5, 12), vec![(5, 2), (5, 10)]);
        assert_eq!(types(3, 6), vec![(3, 2), (3, 4), (3, 6)]);
    }

    #[test]
    fn four_vertex_catalog_contains_the_hemicube() {
        let entries = flat_family_catalog(4, 8, DEFAULT_COSET_LIMIT).unwrap();
        let hemicube = entries.iter().find(|e| e.polyhedron.invariants().q == 3).unwrap();
        assert_eq!(hemicube.polyhedron.order(), 24);
        assert!(hemicube.vertex_faithful);
    }

    #[test]
    fn prime_squared_catalog() {
        assert_eq!(types(9, 18), vec![(9, 4), (9, 2), (9, 6), (9, 18)]);
    }

    #[test]
    fn unsupported_shape() {
        assert!(matches!(flat_family_catalog(12, 6, DEFAULT_COSET_LIMIT), Err(PolyError::UnsupportedVertexCount(12))));
    }
}
