use proptest::prelude::*;

use super::*;

fn spec(a: Algebra, marks: &[i32]) -> GradingSpec {
    GradingSpec::new(a, marks.to_vec()).unwrap()
}

fn sizes(g: &GradedDecomposition) -> Vec<usize> {
    (-2..=2).map(|k| g.level(k).len()).collect()
}

#[test]
fn g2_long_node() {
    let g = analyze(&spec(Algebra::G2, &[1, 0]));
    assert_eq!(sizes(&g), vec![1, 4, 2, 4, 1]);
    assert!(g.admissible());
    assert_eq!(g.length(), 5);
    assert!(!g.consistent);
}

#[test]
fn zero_marks_are_rejected() {
    for a in Algebra::ALL {
        let rank = RootSystem::shared(a).rank();
        let g = analyze(&spec(a, &vec![0; rank]));
        assert_eq!(g.level(0).len(), RootSystem::shared(a).len());
        assert_eq!(g.rejections, vec![Rejection::EmptyLevelOne]);
        assert_eq!(g.rejections[0].to_string(), "empty G_{+-1}");
    }
}

#[test]
fn f4s_first_node() {
    let g = analyze(&spec(Algebra::F4S, &[1, 0, 0, 0]));
    assert!(g.admissible() && g.consistent);
    assert_eq!(g.dims(1), (0, 8));
    assert_eq!(g.dims(2), (1, 0));
    assert_eq!(g.dims(-1), (0, 8));
    let sys = g.system();
    assert_eq!(sys.format_root(g.level(2)[0]), "d");
}

#[test]
fn e6_doubled_marks_empty_level_one() {
    let g = analyze(&spec(Algebra::E6, &[2, 0, 0, 0, 0, 0]));
    assert!(g.level(1).is_empty());
    assert!(!g.admissible());
    assert!(g.rejections.contains(&Rejection::EmptyLevelOne));
}

#[test]
fn overflow_is_recorded_once() {
    let g = analyze(&spec(Algebra::E8, &[2, 2, 2, 2, 2, 2, 2, 2]));
    assert_eq!(g.rejections.first(), Some(&Rejection::GradeOverflow));
    assert_eq!(g.rejections.iter().filter(|r| **r == Rejection::GradeOverflow).count(), 1);
}

#[test]
fn spec_validation() {
    assert!(matches!(
        GradingSpec::new(Algebra::G2, vec![1]),
        Err(Error::MarksLength { expected: 2, got: 1 })
    ));
    assert!(matches!(GradingSpec::new(Algebra::G2, vec![3, 0]), Err(Error::MarkRange(3))));
}

#[test]
fn generation_report_for_g2_and_e8() {
    let mut g = grade_decomposition(&spec(Algebra::G2, &[1, 0]));
    let r = check_generation(&mut g);
    assert!(r.passed() && r.level_two_generated && r.level_zero_generated && r.level_one_spans);

    let mut g = grade_decomposition(&spec(Algebra::E8, &[1, 0, 0, 0, 0, 0, 0, 0]));
    assert_eq!(g.level(-1).len(), 56);
    assert_eq!(g.level(0).len(), 126);
    assert!(check_generation(&mut g).passed());
}

#[test]
fn generation_detects_missing_level_one_roots() {
    // drop all but one root from level +1 by hand
    let mut g = grade_decomposition(&spec(Algebra::G2, &[1, 0]));
    g.levels[3].truncate(1);
    let r = check_generation(&mut g);
    assert!(!r.level_two_generated);
    assert!(!r.level_zero_generated);
    assert!(!r.level_one_spans);
    assert!(!g.admissible());
}

#[test]
fn module_counts() {
    let count = |a, m: &[i32]| all_modules(&analyze(&spec(a, m))).len();
    assert_eq!(count(Algebra::F4, &[1, 0, 0, 0]), 4);
    assert_eq!(count(Algebra::E6, &[1, 0, 0, 0, 1, 0]), 6);
    assert_eq!(count(Algebra::D21A, &[0, 1, 0]), 2);
    assert_eq!(count(Algebra::D21A, &[-2, 1, 1]), 6);
    assert_eq!(count(Algebra::G3, &[1, 0, 0]), 4);
    let g = analyze(&spec(Algebra::G2, &[1, 0]));
    assert_eq!(decompose_modules(&g, -2).len(), 1);
}

#[test]
fn raw_admissible_counts() {
    let expected = [
        (Algebra::G2, 1),
        (Algebra::F4, 2),
        (Algebra::E6, 6),
        (Algebra::E7, 4),
        (Algebra::E8, 2),
        (Algebra::D21A, 42),
        (Algebra::G3, 20),
        (Algebra::F4S, 72),
    ];
    for (a, n) in expected {
        let (found, stats) = enumerate_with_stats(a);
        assert_eq!(found.len(), n, "{a}");
        assert_eq!(stats.admissible, n);
        // generation never rejects an in-range grading with nonempty level 1
        assert_eq!(stats.generation_rejected, 0, "{a}");
        assert_eq!(
            stats.candidates,
            stats.admissible + stats.grade_overflow + stats.empty_level_one + stats.generation_rejected
        );
        assert!(found.iter().all(|g| g.grades.iter().all(|x| x.abs() <= 2)));
    }
}

#[test]
fn enumeration_order_is_by_marks() {
    let found = enumerate_gradings(Algebra::D21A);
    assert!(found.windows(2).all(|w| w[0].spec.marks < w[1].spec.marks));
}

#[test]
fn skeleton_of_length_three_grading() {
    let g = analyze(&spec(Algebra::D21A, &[0, 1, 0]));
    let sys = g.system();
    let r = |s: &str| sys.index_of(&sys.parse(s).unwrap()).unwrap();
    let sk = relation_skeleton(&g);

    let has_pair = |a: usize, b: usize| {
        sk.pairs
            .iter()
            .any(|p| (p.left, p.right) == (a.min(b), a.max(b)) && p.target.is_none())
    };
    assert!(has_pair(r("2e1"), r("-2e2")));
    for &a in g.level(1) {
        for &b in g.level(1) {
            if a != b || sys.parity(a).is_odd() {
                assert!(has_pair(a, b));
            }
        }
    }
    let t = sk
        .triples
        .iter()
        .find(|t| t.left == r("2e1") && t.right == r("-2e1") && t.operand == r("2e1"))
        .unwrap();
    assert_eq!(t.inner, Intermediate::Cartan);
    assert_eq!(t.target, Some(r("2e1")));
}

#[test]
fn self_conjugate_modules_do_not_occur() {
    for a in Algebra::ALL {
        for g in enumerate_gradings(a) {
            let sys = g.system();
            for m in all_modules(&g) {
                let neg: Vec<usize> = m.roots.iter().map(|&i| sys.negation(i)).collect();
                assert!(!neg.iter().any(|i| m.roots.contains(i)));
            }
        }
    }
}

fn marks_strategy() -> impl Strategy<Value = (Algebra, Vec<i32>)> {
    prop::sample::select(Algebra::ALL.to_vec()).prop_flat_map(|a| {
        let rank = RootSystem::shared(a).rank();
        (Just(a), prop::collection::vec(-2i32..=2, rank))
    })
}

proptest! {
    #[test]
    fn grading_axioms((a, marks) in marks_strategy()) {
        let g = analyze(&GradingSpec { system: a, marks });
        let sys = g.system();
        // additivity on all root pairs
        for i in 0..sys.len() {
            for j in 0..sys.len() {
                if let Some(k) = sys.sum(i, j) {
                    prop_assert_eq!(g.grade(k), g.grade(i) + g.grade(j));
                }
            }
            prop_assert_eq!(g.grade(sys.negation(i)), -g.grade(i));
        }
        if g.admissible() {
            for k in -2..=2 {
                let mut neg: Vec<usize> = g.level(k).iter().map(|&i| sys.negation(i)).collect();
                neg.sort_unstable();
                prop_assert_eq!(neg.as_slice(), g.level(-k));
            }
            let total: usize = (-2..=2).map(|k| g.level(k).len()).sum();
            prop_assert_eq!(total + sys.rank(), a.dimension());
            let odd_ok = (0..sys.len()).all(|i| sys.parity(i).is_odd() == (g.grade(i).rem_euclid(2) == 1));
            prop_assert_eq!(g.consistent, odd_ok);
        }
    }

    #[test]
    fn negated_marks_mirror_levels((a, marks) in marks_strategy()) {
        let s = GradingSpec { system: a, marks };
        let g = analyze(&s);
        let h = analyze(&s.negated());
        prop_assert_eq!(g.admissible(), h.admissible());
        for k in -2..=2 {
            prop_assert_eq!(g.level(k).len(), h.level(-k).len());
        }
    }
}
