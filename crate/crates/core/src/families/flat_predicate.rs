//! Arithmetic test for when `Λ(p,q)_{i,j}` is the group of a flat
//! orientably regular polyhedron of type `{p, q}`.

use serde::{Deserialize, Serialize};

use super::LambdaParams;
use crate::perm::{gcd, is_prime};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlatVerdict {
    pub is_flat_polyhedron: bool,
    /// `(p', q')` with `p' | gcd(p, i+1)` and `q' | gcd(q, j-1)`.
    pub witness: Option<(u64, u64)>,
}

fn divisors(n: u64) -> impl Iterator<Item = u64> {
    (1..=n).filter(move |d| n % d == 0)
}

fn two_adic(mut n: u64) -> u32 {
    let mut k = 0;
    while n % 2 == 0 {
        n /= 2;
        k += 1;
    }
    k
}

/// Decides the predicate without building any group.
pub fn flat_orientable_predicate(params: LambdaParams) -> FlatVerdict {
    let LambdaParams { p, q, i, j } = params;
    let gp = gcd(p, (i + 1) % p);
    let gq = gcd(q, (j + q - 1) % q);
    for pp in divisors(gp).filter(|&d| d >= 2) {
        for qq in divisors(gq).filter(|&d| d >= 2) {
            let neg_j = (q - j) % q;
            if core_free_condition(p, qq, i) && core_free_condition(q, pp, neg_j) {
                return FlatVerdict { is_flat_polyhedron: true, witness: Some((pp, qq)) };
            }
        }
    }
    FlatVerdict { is_flat_polyhedron: false, witness: None }
}

/// `Λ(p,q')_{i,1}` is a flat orientably regular polyhedron of type `{p,q'}`
/// with `⟨σ2⟩` core-free. `i` is taken mod `p`.
pub fn core_free_condition(p: u64, qp: u64, i: u64) -> bool {
    let i = i % p;
    if qp == 2 && i == p - 1 {
        return true;
    }
    if qp % 2 == 1 && p == 2 * qp && i == 3 % p {
        return true;
    }
    // q' = p would leave ⟨σ2^{p/2}⟩ as a nontrivial core
    if qp % 2 != 0 || p % qp != 0 || qp == p || i % 2 == 0 {
        return false;
    }
    let g = gcd(p / qp, qp);
    if !g.is_power_of_two() {
        return false;
    }
    let alpha = two_adic(p);
    let beta = two_adic(qp);
    if !(beta == 1 || (beta == 2 && alpha >= 3) || beta + 1 == alpha) {
        return false;
    }
    // p = 2^alpha p1 p2 with p2 built from the primes shared with q'
    let odd = p >> alpha;
    let mut p1 = 1;
    let mut p2 = 1;
    let mut rest = odd;
    let mut r = 3;
    while rest > 1 {
        if rest % r == 0 && is_prime(r) {
            let mut power = 1;
            while rest % r == 0 {
                rest /= r;
                power *= r;
            }
            if qp % r == 0 {
                p2 *= power;
            } else {
                p1 *= power;
            }
        }
        r += 2;
    }
    // x = (1 - i)/2 is defined mod p/2
    let half = p / 2;
    let x = ((1 + 2 * half - i) / 2) % half;
    let congruent = |m: u64, target: i64| m <= 1 || (x as i64 - target).rem_euclid(m as i64) == 0;
    if !congruent(p2, -1) || !congruent(p1, 1) {
        return false;
    }
    let m = 1u64 << (alpha - 1);
    let t = if alpha >= 2 { 1i64 << (alpha - 2) } else { 0 };
    // every bullet whose hypothesis on beta holds must be satisfied
    (beta != 1 || congruent(m, 1))
        && (beta != 2 || congruent(m, t + 1))
        && (beta + 1 != alpha || congruent(m, t - 1) || congruent(m, -1))
}
