use proptest::prelude::*;
use vfpoly::perm::{canonical_form, Permutation};

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n as u32).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(images).unwrap())
}

fn pair(max: usize) -> impl Strategy<Value = (Permutation, Permutation)> {
    (1..=max).prop_flat_map(|n| (permutation(n), permutation(n)))
}

proptest! {
    #[test]
    fn cycle_notation_round_trips(p in (1usize..=12).prop_flat_map(permutation)) {
        let text = p.to_string();
        prop_assert_eq!(Permutation::parse_cycles(&text, Some(p.degree())).unwrap(), p);
    }

    #[test]
    fn group_laws((a, b) in pair(10), c_seed in any::<u64>()) {
        let n = a.degree();
        let c = a.pow((c_seed % 7) as i64).mul(&b);
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.mul(&a.inverse()).is_identity());
        prop_assert_eq!(a.mul(&b).inverse(), b.inverse().mul(&a.inverse()));
        prop_assert_eq!(a.pow(a.order() as i64), Permutation::identity(n));
        // right action: (i)(ab) = ((i)a)b
        for i in 0..n {
            prop_assert_eq!(a.mul(&b).image(i), b.image(a.image(i)));
        }
    }

    #[test]
    fn canonical_form_ignores_relabeling(
        (a, b, pi) in (1usize..=9).prop_flat_map(|n| (permutation(n), permutation(n), permutation(n)))
    ) {
        let gens = [a.clone(), b.clone()];
        let moved = [a.conjugate_by(&pi), b.conjugate_by(&pi)];
        prop_assert_eq!(canonical_form(&gens), canonical_form(&moved));
    }
}
