//! Shared helpers for the integration tests: an unpruned brute-force census
//! and the property checks run over every constructed polyhedron.

#![allow(dead_code)]

use std::collections::BTreeSet;

use vfpoly::enumerate::{enumerate_vertex_faithful, EnumerateOptions};
use vfpoly::families::{flat_family_catalog, lambda_oracle, toroidal_44, LambdaParams, TorusVector};
use vfpoly::fp::{realize, Presentation, DEFAULT_COSET_LIMIT};
use vfpoly::operators::{dual, petrial, petrial_dual_torus};
use vfpoly::perm::{is_prime, Permutation};
use vfpoly::Polyhedron;

/// Lexicographically least `(r0, r1, r2)` image arrays over all `v!`
/// relabelings of the points.
pub type TripleKey = Vec<u32>;

fn next_permutation(a: &mut [u32]) -> bool {
    let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else {
        return false;
    };
    let j = (i..a.len()).rev().find(|&j| a[j] > a[i - 1]).expect("a[i] exceeds a[i-1]");
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

fn all_permutations(n: usize) -> Vec<Vec<u32>> {
    let mut a: Vec<u32> = (0..n as u32).collect();
    let mut out = vec![a.clone()];
    while next_permutation(&mut a) {
        out.push(a.clone());
    }
    out
}

fn key_under_all_relabelings(triple: &[Vec<u32>; 3], relabelings: &[Vec<u32>]) -> TripleKey {
    let n = triple[0].len();
    let mut best: Option<TripleKey> = None;
    let mut key = vec![0u32; 3 * n];
    for pi in relabelings {
        for (g, r) in triple.iter().enumerate() {
            for x in 0..n {
                key[g * n + pi[x] as usize] = pi[r[x] as usize];
            }
        }
        if best.as_ref().map_or(true, |b| key < *b) {
            best = Some(key.clone());
        }
    }
    best.expect("at least one relabeling")
}

fn transitive(n: usize, gens: &[&Vec<u32>]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for g in gens {
        for x in 0..n {
            let (a, b) = (find(&mut parent, x), find(&mut parent, g[x] as usize));
            parent[a] = b;
        }
    }
    let root = find(&mut parent, 0);
    (0..n).all(|x| find(&mut parent, x) == root)
}

fn commute(a: &[u32], b: &[u32]) -> bool {
    (0..a.len()).all(|x| b[a[x] as usize] == a[b[x] as usize])
}

/// Every triple of self-inverse permutations of `0..v` (identity included)
/// that generates a vertex-faithful regular polyhedron acting on its own
/// vertices, one key per isomorphism class.
pub fn brute_force_census(v: usize) -> BTreeSet<TripleKey> {
    let perms = all_permutations(v);
    let square_free: Vec<Vec<u32>> =
        perms.iter().filter(|p| (0..v).all(|x| p[p[x] as usize] as usize == x)).cloned().collect();
    let mut classes = BTreeSet::new();
    for r0 in &square_free {
        for r2 in square_free.iter().filter(|r2| commute(r0, r2)) {
            for r1 in &square_free {
                if !transitive(v, &[r0, r1, r2]) {
                    continue;
                }
                // the vertex stabilizer contains ⟨r1, r2⟩
                if !(0..v).any(|x| r1[x] as usize == x && r2[x] as usize == x) {
                    continue;
                }
                let make = |r: &Vec<u32>| Permutation::from_images(r.clone()).expect("bijection");
                let Ok(poly) = Polyhedron::try_new(make(r0), make(r1), make(r2)) else {
                    continue;
                };
                let inv = poly.invariants();
                // a stabilizer of order 2q equals ⟨r1, r2⟩, so the action is the vertex action
                if !inv.vertex_faithful || inv.v != v as u64 {
                    continue;
                }
                classes.insert(key_under_all_relabelings(&[r0.clone(), r1.clone(), r2.clone()], &perms));
            }
        }
    }
    classes
}

/// Keys of the production census, computed the same way.
pub fn production_census(v: usize, options: &EnumerateOptions) -> BTreeSet<TripleKey> {
    let perms = all_permutations(v);
    enumerate_vertex_faithful(v, options)
        .expect("census")
        .iter()
        .map(|r| {
            let [a, b, c] = r.triple().expect("stored generators parse");
            key_under_all_relabelings(&[a.images().to_vec(), b.images().to_vec(), c.images().to_vec()], &perms)
        })
        .collect()
}

pub fn from_text(text: &str) -> Polyhedron {
    let pres = Presentation::parse(text).expect("presentation parses");
    Polyhedron::from_group(&realize(&pres, DEFAULT_COSET_LIMIT).expect("finite group")).expect("polyhedron")
}

pub fn tetrahedron() -> Polyhedron {
    from_text("p=3 q=3")
}

pub fn hemicube() -> Polyhedron {
    from_text("p=4 q=3 rel=(012)^3")
}

pub fn torus_36_20() -> Polyhedron {
    from_text("p=3 q=6 rel=(012)^4")
}

/// A labelled collection of polyhedra built by every constructor in the
/// crate, together with their duals and Petrials where these exist.
pub fn constructed_polyhedra() -> Vec<(String, Polyhedron)> {
    let mut base: Vec<(String, Polyhedron)> = Vec::new();
    let options = EnumerateOptions::default();
    for v in 3..=15 {
        for r in enumerate_vertex_faithful(v, &options).expect("census") {
            base.push((format!("census v={v} {{{},{}}}*{}", r.schlafli[0], r.schlafli[1], r.order), r.polyhedron().expect("valid record")));
        }
    }
    for v in [4, 5, 7, 9, 10, 11, 13, 14, 25] {
        let b = if v == 4 { 2 } else if is_prime(v) { v } else if v % 2 == 0 { v / 2 } else { (v as f64).sqrt() as u64 };
        for e in flat_family_catalog(v, 2 * b, DEFAULT_COSET_LIMIT).expect("catalog") {
            base.push((format!("catalog v={v} {}", e.family), e.polyhedron));
        }
    }
    for s in 2..=5 {
        base.push((format!("{{4,4}}_({s},0)"), toroidal_44(s, TorusVector::Axis).expect("torus")));
        base.push((format!("{{4,4}}_({s},{s})"), toroidal_44(s, TorusVector::Diagonal).expect("torus")));
    }
    for s in [3, 5, 7] {
        base.push((format!("petrial dual torus s={s}"), petrial_dual_torus(s).expect("petrial dual torus")));
    }
    for p in 3..=8 {
        for q in 3..=8 {
            for i in 0..p {
                for j in 0..q {
                    let params = LambdaParams::new(p, q, i as i64, j as i64);
                    if let Some(poly) = lambda_oracle(params, DEFAULT_COSET_LIMIT).expect("finite") {
                        base.push((format!("Λ({p},{q})_{{{i},{j}}}"), poly));
                    }
                }
            }
        }
    }
    base.push(("tetrahedron".into(), tetrahedron()));
    base.push(("hemicube".into(), hemicube()));
    base.push(("{3,6}_(2,0)".into(), torus_36_20()));
    let mut all = Vec::new();
    for (name, poly) in base {
        all.push((format!("dual of {name}"), dual(&poly)));
        if let Ok(pet) = petrial(&poly) {
            all.push((format!("petrial of {name}"), pet));
        }
        all.push((name, poly));
    }
    all
}

/// Property violations of one polyhedron; empty when all hold.
pub fn property_violations(name: &str, poly: &Polyhedron) -> Vec<String> {
    let mut out = Vec::new();
    let i = poly.invariants();
    if !(4 * i.e == 2 * i.v * i.q && 2 * i.v * i.q == 2 * i.f * i.p && i.order == 4 * i.e) {
        out.push(format!("{name}: counting identity fails"));
    }
    // the divisibility is claimed for divisors q' < q/2
    for qp in (1..=i.q).filter(|d| i.q % d == 0 && 2 * d < i.q) {
        match poly.fixed_vertices_of_power(qp) {
            Ok(fixed) if i.v % fixed == 0 => {}
            other => out.push(format!("{name}: vertices fixed by σ2^{qp} = {other:?} do not divide v = {}", i.v)),
        }
    }
    if i.vertex_faithful {
        if i.q > i.v || (i.orientable && i.q == i.v) {
            out.push(format!("{name}: q = {} against v = {} (orientable {})", i.q, i.v, i.orientable));
        }
        if i.order > 2 * i.v * i.v {
            out.push(format!("{name}: {} flags exceed 2v² = {}", i.order, 2 * i.v * i.v));
        }
    }
    if !dual(&dual(poly)).iso_as_polyhedra(poly) {
        out.push(format!("{name}: dual is not an involution"));
    }
    if let Ok(pet) = petrial(poly) {
        match petrial(&pet) {
            Ok(back) if back.iso_as_polyhedra(poly) => {}
            _ => out.push(format!("{name}: Petrial is not an involution")),
        }
    }
    let (vertex_group, faithful) = poly.vertex_action();
    if faithful != i.vertex_faithful {
        out.push(format!("{name}: vertex action faithful {faithful}, core test {}", i.vertex_faithful));
    }
    for g in [poly.group(), &vertex_group] {
        if g.burnside_dichotomy_holds() == Some(false) {
            out.push(format!("{name}: transitive group of prime degree {} is neither 2-transitive nor has normal Sylow", g.degree()));
        }
    }
    out
}
