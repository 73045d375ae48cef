mod support;

use vfpoly::enumerate::{EnumerateOptions, Strategy};

#[test]
fn brute_force_matches_both_strategies() {
    for v in 3..=6 {
        let brute = support::brute_force_census(v);
        for strategy in [Strategy::CosetSearch, Strategy::PairReps] {
            let options = EnumerateOptions { strategy, jobs: 0 };
            assert_eq!(support::production_census(v, &options), brute, "v={v} {strategy:?}");
        }
    }
}

#[test]
fn brute_force_class_counts() {
    let counts: Vec<usize> = (3..=6).map(|v| support::brute_force_census(v).len()).collect();
    assert_eq!(counts, vec![0, 2, 0, 6]);
}
