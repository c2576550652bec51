use std::collections::BTreeMap;

use gqs_core::cli::parse_marks;
use gqs_core::d21a::{self, D21Params, Q};
use gqs_core::equivalence::{canonicalize_marks, lie_class_key};
use gqs_core::golden::label_key;
use gqs_core::grading::{analyze, GradingSpec};
use gqs_core::rootdata::{Algebra, RootSystem};
use proptest::prelude::*;
use proptest::sample::select;

fn algebra() -> impl Strategy<Value = Algebra> {
    select(Algebra::ALL.to_vec())
}

fn lie_algebra() -> impl Strategy<Value = Algebra> {
    select(Algebra::LIE.to_vec())
}

fn with_marks(range: std::ops::RangeInclusive<i32>, s: impl Strategy<Value = Algebra>) -> impl Strategy<Value = (Algebra, Vec<i32>)> {
    s.prop_flat_map(move |a| {
        let rank = RootSystem::shared(a).rank();
        (Just(a), prop::collection::vec(range.clone(), rank))
    })
}

/// Multiset of root grades for an arbitrary functional.
fn histogram(sys: &RootSystem, marks: &[i32]) -> BTreeMap<i64, usize> {
    let mut h = BTreeMap::new();
    for i in 0..sys.len() {
        let g: i64 = sys.expansion(i).iter().zip(marks).map(|(&c, &m)| c as i64 * m as i64).sum();
        *h.entry(g).or_default() += 1;
    }
    h
}

proptest! {
    #[test]
    fn grades_are_additive_and_odd_under_negation((a, marks) in with_marks(-2..=2, algebra())) {
        let sys = RootSystem::shared(a);
        let g = analyze(&GradingSpec::new(a, marks).unwrap());
        for i in 0..sys.len() {
            prop_assert_eq!(g.grade(sys.negation(i)), -g.grade(i));
            for j in 0..sys.len() {
                if let Some(k) = sys.sum(i, j) {
                    prop_assert_eq!(g.grade(k), g.grade(i) + g.grade(j));
                }
            }
        }
    }

    #[test]
    fn admissible_levels_partition_roots((a, marks) in with_marks(-2..=2, algebra())) {
        let sys = RootSystem::shared(a);
        let g = analyze(&GradingSpec::new(a, marks).unwrap());
        if g.admissible() {
            let total: usize = (-2..=2).map(|k| g.level(k).len()).sum();
            prop_assert_eq!(total, sys.len());
            prop_assert_eq!(g.length() == 5, !g.level(2).is_empty());
            for k in -2..=2 {
                prop_assert_eq!(g.level(k).len(), g.level(-k).len());
            }
        }
    }

    #[test]
    fn negated_marks_swap_levels((a, marks) in with_marks(-2..=2, algebra())) {
        let spec = GradingSpec::new(a, marks).unwrap();
        let g = analyze(&spec);
        let h = analyze(&spec.negated());
        prop_assert_eq!(g.admissible(), h.admissible());
        prop_assert_eq!(g.consistent, h.consistent);
        for k in -2..=2 {
            prop_assert_eq!(g.dims(k), h.dims(-k));
        }
    }

    #[test]
    fn consistency_matches_parities((a, marks) in with_marks(-2..=2, algebra())) {
        let sys = RootSystem::shared(a);
        let g = analyze(&GradingSpec::new(a, marks).unwrap());
        let expected = (0..sys.len()).all(|i| sys.parity(i).is_odd() == (g.grade(i).rem_euclid(2) == 1));
        prop_assert_eq!(g.consistent, expected);
    }

    #[test]
    fn dominant_representative_preserves_grade_multiset((a, marks) in with_marks(-2..=2, lie_algebra())) {
        let sys = RootSystem::shared(a);
        let d = canonicalize_marks(sys, &marks).unwrap();
        prop_assert!(d.iter().all(|&m| m >= 0));
        prop_assert_eq!(histogram(sys, &d), histogram(sys, &marks));
        prop_assert_eq!(canonicalize_marks(sys, &d).unwrap(), d);
    }

    #[test]
    fn class_key_is_a_class_invariant((a, marks) in with_marks(-2..=2, lie_algebra())) {
        let sys = RootSystem::shared(a);
        let key = lie_class_key(sys, &marks).unwrap();
        let neg: Vec<i32> = marks.iter().map(|m| -m).collect();
        prop_assert_eq!(lie_class_key(sys, &neg).unwrap(), key.clone());
        let d = canonicalize_marks(sys, &marks).unwrap();
        prop_assert_eq!(lie_class_key(sys, &d).unwrap(), key.clone());
        prop_assert_eq!(histogram(sys, &key), histogram(sys, &marks));
    }

    #[test]
    fn marks_text_roundtrip(marks in prop::collection::vec(-50i32..50, 1..9)) {
        let text = marks.iter().map(i32::to_string).collect::<Vec<_>>().join(",");
        prop_assert_eq!(parse_marks(&text).unwrap(), marks);
    }

    #[test]
    fn label_key_ignores_summand_order(parts in prop::collection::vec("[a-z]{1,4}\\([0-9]\\)", 1..5), rot in 0usize..5) {
        let mut shuffled = parts.clone();
        let n = shuffled.len();
        shuffled.rotate_left(rot % n);
        prop_assert_eq!(label_key(&parts.join(" + ")), label_key(&shuffled.join("+")));
    }

    #[test]
    fn alpha_text_roundtrip(n in -500i64..500, d in 1i64..200) {
        let q = Q::new(n.into(), d.into());
        match D21Params::new(q.clone()) {
            Ok(p) => {
                let back: D21Params = p.to_string().parse().unwrap();
                prop_assert_eq!(back, p);
            }
            Err(_) => prop_assert!(q == Q::from_integer(0.into()) || q == Q::from_integer((-1).into())),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn random_alpha_tables_satisfy_all_identities(n in -60i64..60, d in 1i64..30) {
        let q = Q::new(n.into(), d.into());
        prop_assume!(D21Params::new(q.clone()).is_ok());
        let t = d21a::build(&D21Params::new(q).unwrap()).unwrap();
        prop_assert!(d21a::check_super_jacobi(&t).is_empty());
        prop_assert!(d21a::verify_relations(&t).iter().all(|c| c.holds));
        prop_assert!(d21a::cross_check(&t, &[0, 1, 0]).unwrap().passed());
    }
}
