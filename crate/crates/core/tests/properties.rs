//! Property tests for the partition formula, the counting engine and the
//! complete-partition predicates, each checked against an independent
//! brute-force computation.

use dedekind::partition::{
    count_via_partition, count_via_partition_with, decompose_power_of_two,
    definitional_completeness_oracle, e2_condition_check, is_complete_partition, minimality_check,
    partition_terms, EngineConfig, MemoTable, Minimality, Parity, PivotStrategy,
};
use dedekind::poset::{cover_preserving_isomorphic, find_v3};
use dedekind::{count_monotone_oracle, BigCount, CoverMode, Point, Subposet};
use proptest::prelude::*;

fn from_mask(n: usize, mask: u64) -> Subposet {
    Subposet::filter_cube(n, |p| mask >> p.bits() & 1 == 1).unwrap()
}

fn all_subsets(n: usize) -> impl Iterator<Item = Subposet> {
    (0u64..1 << (1 << n)).map(move |m| from_mask(n, m))
}

fn set(n: usize, pts: &[&str]) -> Subposet {
    Subposet::parse_points(n, pts).unwrap()
}

/// Count monotone maps by trying every assignment.
fn brute_count(s: &Subposet) -> u64 {
    let pts = s.points();
    let k = pts.len();
    (0u64..1 << k)
        .filter(|f| {
            (0..k).all(|i| {
                (0..k).all(|j| !(pts[i].leq(pts[j]).unwrap() && f >> i & 1 == 1 && f >> j & 1 == 0))
            })
        })
        .count() as u64
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn term_sum_equals_direct_count(s in any::<u16>(), a in any::<u16>()) {
        let s = from_mask(4, s as u64);
        let a = from_mask(4, a as u64).intersection(&s).unwrap();
        let sum: BigCount = partition_terms(&s, &a)
            .unwrap()
            .iter()
            .map(|t| count_monotone_oracle(&t.residual).unwrap())
            .sum();
        prop_assert_eq!(sum, count_monotone_oracle(&s).unwrap());
    }

    #[test]
    fn strategies_and_caching_agree(mask in any::<u32>()) {
        let s = from_mask(5, mask as u64);
        let expected = count_monotone_oracle(&s).unwrap();
        let strategies = [
            PivotStrategy::MedianDegree,
            PivotStrategy::MaxComparability,
            PivotStrategy::Layer(Parity::Even),
            PivotStrategy::Layer(Parity::Odd),
            PivotStrategy::Fixed(s.iter().take(3).collect::<Vec<_>>().into_iter().fold(
                Subposet::empty(5).unwrap(),
                |mut acc, p| { acc.insert(p); acc },
            )),
        ];
        for strategy in &strategies {
            prop_assert_eq!(&count_via_partition(&s, strategy, None).unwrap(), &expected);
            let table = MemoTable::new();
            prop_assert_eq!(&count_via_partition(&s, strategy, Some(&table)).unwrap(), &expected);
            let tiny = MemoTable::bounded(2);
            prop_assert_eq!(&count_via_partition(&s, strategy, Some(&tiny)).unwrap(), &expected);
        }
        let config = EngineConfig { threads: 4, duality: false, ..EngineConfig::default() };
        prop_assert_eq!(
            count_via_partition_with(&s, &PivotStrategy::default(), Some(&MemoTable::new()), &config).unwrap(),
            expected
        );
    }

    #[test]
    fn oracle_matches_brute_force(mask in any::<u16>()) {
        let s = from_mask(4, mask as u64);
        prop_assert_eq!(count_monotone_oracle(&s).unwrap().to_u64(), Some(brute_count(&s)));
    }

    #[test]
    fn counts_are_invariant_under_duality_and_permutation(mask in any::<u32>(), rot in 0usize..5) {
        let s = from_mask(5, mask as u64);
        let d = count_monotone_oracle(&s).unwrap();
        prop_assert_eq!(&count_monotone_oracle(&s.dual()).unwrap(), &d);
        let perm: Vec<usize> = (0..5).map(|i| (i + rot) % 5).collect();
        prop_assert_eq!(&count_monotone_oracle(&s.permute_coords(&perm).unwrap()).unwrap(), &d);
    }

    #[test]
    fn incomparable_union_multiplies(left in any::<u8>(), right in any::<u8>()) {
        // Points with a^1 = 1, a^2 = 0 are incomparable with points with
        // a^1 = 0, a^2 = 1.
        let place = |mask: u8, tag: u32| -> Subposet {
            Subposet::from_points(5, (0..8u32).filter(|k| mask >> k & 1 == 1)
                .map(|k| Point::new(5, tag | k << 2).unwrap())).unwrap()
        };
        let a = place(left, 0b01);
        let b = place(right, 0b10);
        let union = a.union(&b).unwrap();
        prop_assert_eq!(
            count_via_partition(&union, &PivotStrategy::default(), None).unwrap(),
            &count_monotone_oracle(&a).unwrap() * &count_monotone_oracle(&b).unwrap()
        );
    }
}

#[test]
fn antichains_count_as_powers_of_two() {
    for n in 1..=6 {
        for k in 0..=n {
            let layer = Subposet::filter_cube(n, |p| p.weight() == k).unwrap();
            assert!(layer.is_antichain());
            let got = count_via_partition(&layer, &PivotStrategy::default(), None).unwrap();
            assert_eq!(got, BigCount::pow2(layer.len()));
        }
    }
}

#[test]
fn corollary_holds_up_to_five() {
    for n in 1..=5 {
        let d = count_monotone_oracle(&Subposet::cube(n).unwrap()).unwrap();
        for a in Subposet::cube(n).unwrap().iter() {
            let (above, below) = dedekind::partition::corollary_split(a).unwrap();
            assert_eq!(above + &below, d, "a = {a}");
        }
    }
}

#[test]
fn predicate_is_sound_on_e3_in_both_modes() {
    let e3 = Subposet::cube(3).unwrap();
    for mode in [CoverMode::Induced, CoverMode::Ambient] {
        for a in all_subsets(3) {
            if is_complete_partition(&a, &e3, mode).unwrap() {
                assert!(definitional_completeness_oracle(&a, &e3).unwrap(), "{mode} {a:?}");
            }
        }
    }
}

#[test]
fn square_faces_match_v3_on_e3() {
    let e3 = Subposet::cube(3).unwrap();
    for mode in [CoverMode::Induced, CoverMode::Ambient] {
        for a in all_subsets(3) {
            assert_eq!(
                is_complete_partition(&a, &e3, mode).unwrap(),
                e2_condition_check(&a, 3, mode).unwrap(),
                "{mode} {a:?}"
            );
        }
    }
}

#[test]
fn size_law_holds_on_e4() {
    for mode in [CoverMode::Induced, CoverMode::Ambient] {
        for a in all_subsets(4) {
            let r = minimality_check(&a, 4, mode).unwrap();
            assert!(r.size_law_holds, "{mode} {a:?}: {r:?}");
        }
    }
}

#[test]
fn size_law_fails_for_small_cubes() {
    let r = minimality_check(&set(2, &["01"]), 2, CoverMode::Ambient).unwrap();
    assert_eq!((r.class, r.size, r.bound), (Minimality::Minimal, 1, 2));
    assert!(!r.size_law_holds);

    let a = set(3, &["100", "010", "110", "101"]);
    let r = minimality_check(&a, 3, CoverMode::Ambient).unwrap();
    assert_eq!((r.class, r.size, r.bound), (Minimality::CompleteButNotMinimal, 4, 4));
    assert!(!r.size_law_holds);
}

#[test]
fn decomposition_evaluates_to_the_cube_count() {
    for n in 2..=6 {
        let d = count_monotone_oracle(&Subposet::cube(n).unwrap()).unwrap();
        for parity in [Parity::Even, Parity::Odd] {
            assert_eq!(decompose_power_of_two(n, parity).unwrap().value(), d);
        }
    }
}

#[test]
fn decomposition_residuals_are_antichains() {
    for n in 2..=4 {
        let cube = Subposet::cube(n).unwrap();
        for parity in [Parity::Even, Parity::Odd] {
            let pivots = dedekind::partition::construct_layer_subset(n, parity).unwrap();
            let terms = partition_terms(&cube, &pivots).unwrap();
            assert!(terms.iter().all(|t| t.residual.is_antichain()));
            let poly = decompose_power_of_two(n, parity).unwrap();
            assert_eq!(poly.term_count(), BigCount::from(terms.len() as u64));
        }
    }
}

/// V3 search by definition: three points, apex covered by (or covering)
/// two incomparable arms.
fn brute_v3(s: &Subposet, mode: CoverMode) -> bool {
    let pts = s.points();
    let covers = |lo: Point, hi: Point| match mode {
        CoverMode::Ambient => hi.covers(lo).unwrap(),
        CoverMode::Induced => {
            lo != hi
                && lo.leq(hi).unwrap()
                && !pts.iter().any(|&z| z != lo && z != hi && lo.leq(z).unwrap() && z.leq(hi).unwrap())
        }
    };
    pts.iter().any(|&apex| {
        pts.iter().any(|&b| {
            pts.iter().any(|&c| {
                b < c
                    && !b.comparable(c).unwrap()
                    && ((covers(apex, b) && covers(apex, c)) || (covers(b, apex) && covers(c, apex)))
            })
        })
    })
}

#[test]
fn find_v3_matches_definition_and_witnesses_are_vees() {
    let up = set(2, &["00", "10", "01"]);
    let down = set(2, &["11", "10", "01"]);
    for mode in [CoverMode::Induced, CoverMode::Ambient] {
        for s in all_subsets(3) {
            let found = find_v3(&s, mode);
            assert_eq!(found.is_some(), brute_v3(&s, mode), "{mode} {s:?}");
            if let Some(w) = found {
                let tri = Subposet::from_points(3, w.points()).unwrap();
                assert!(
                    cover_preserving_isomorphic(&tri, &up).unwrap()
                        || cover_preserving_isomorphic(&tri, &down).unwrap()
                );
            }
        }
    }
}

#[test]
fn cover_isomorphism_spot_checks() {
    let e3 = Subposet::cube(3).unwrap();
    let face = Subposet::subcube(3, 2, true).unwrap();
    assert!(cover_preserving_isomorphic(&face, &Subposet::cube(2).unwrap()).unwrap());
    assert!(cover_preserving_isomorphic(&e3, &e3.dual()).unwrap());
    assert!(!cover_preserving_isomorphic(&e3, &face).unwrap());
    let chain = set(3, &["000", "100", "110", "111"]);
    let other = set(3, &["000", "001", "011", "111"]);
    assert!(cover_preserving_isomorphic(&chain, &other).unwrap());
    assert!(!cover_preserving_isomorphic(&chain, &Subposet::filter_cube(3, |p| p.weight() == 1).unwrap()).unwrap());
}
