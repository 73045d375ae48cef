use serde::{Deserialize, Serialize};

use super::{cat, relation, s1, s2, signed_mod};
use crate::fp::{realize, FpError, Presentation};
use crate::perm::PermGroup;
use crate::polyhedron::Polyhedron;

/// Parameters of `Λ(p,q)_{i,j} = [p,q] / (σ2⁻¹σ1 = σ1^i σ2^j)`, with the
/// exponents reduced mod `p` and `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LambdaParams {
    pub p: u64,
    pub q: u64,
    pub i: u64,
    pub j: u64,
}

impl LambdaParams {
    pub fn new(p: u64, q: u64, i: i64, j: i64) -> Self {
        assert!(p >= 2 && q >= 2, "p and q must be at least 2");
        LambdaParams { p, q, i: i.rem_euclid(p as i64) as u64, j: j.rem_euclid(q as i64) as u64 }
    }

    pub fn presentation(&self) -> Presentation {
        let i = signed_mod(self.i as i64, self.p as i64);
        let j = signed_mod(self.j as i64, self.q as i64);
        let lhs = cat(&[&s2(-1), &s1(1)]);
        let rhs = cat(&[&s1(i), &s2(j)]);
        Presentation::new(self.p as u32, self.q as u32).with_relator(relation(&lhs, &rhs))
    }
}

/// The group `Λ(p,q)_{i,j}` as permutations of `g0, g1, g2`. Polyhedrality
/// is not checked.
pub fn lambda_group(params: LambdaParams, limit: usize) -> Result<PermGroup, FpError> {
    realize(&params.presentation(), limit)
}

/// Builds `Λ(p,q)_{i,j}` and reports whether it is a polyhedron of type
/// exactly `{p, q}` with `2pq` flags.
pub fn lambda_oracle(params: LambdaParams, limit: usize) -> Result<Option<Polyhedron>, FpError> {
    let pres = params.presentation();
    let order = crate::fp::group_order(&pres, limit)? as u64;
    if order != 2 * params.p * params.q {
        return Ok(None);
    }
    let g = realize(&pres, limit)?;
    Ok(Polyhedron::from_group(&g).ok().filter(|poly| {
        let inv = poly.invariants();
        inv.p == params.p && inv.q == params.q
    }))
}
