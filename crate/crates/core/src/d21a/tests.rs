use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::*;

fn params(s: &str) -> D21Params {
    s.parse().unwrap()
}

fn q(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

const ALPHAS: [&str; 3] = ["1", "-1/3", "2/3"];

#[test]
fn alpha_parsing() {
    assert_eq!(params("-1/3").alpha, q(-1, 3));
    assert_eq!(params(" 4/6 ").alpha, q(2, 3));
    assert_eq!(params("2/3").sigma, [q(5, 3), q(-1, 1), q(-2, 3)]);
    for bad in ["0", "-1", "2/-2", "1/0", "x", ""] {
        assert!(matches!(bad.parse::<D21Params>(), Err(Error::InvalidAlpha(_))), "{bad}");
    }
    assert_eq!(params("-1/3").to_string(), "-1/3");
}

#[test]
fn basis_shape() {
    let t = model(&params("1"));
    assert_eq!(t.dim(), 17);
    assert_eq!(t.basis.iter().filter(|b| b.parity.is_odd()).count(), 8);
    let grade = |k: i32| t.basis.iter().filter(|b| b.grade == k).count();
    assert_eq!((grade(-1), grade(0), grade(1)), (4, 9, 4));
    assert_eq!(t.basis[e_index(0)].label, "x(2e1)");
    assert_eq!(t.basis[odd_index([1, -1, 1])].label, "x(e1-e2+e3)");
    for c in Cao::ALL {
        assert_eq!(t.basis[c.index()].grade, c.grade(), "{c}");
    }
}

#[test]
fn model_satisfies_super_jacobi() {
    for a in ALPHAS {
        assert_eq!(check_super_jacobi(&model(&params(a))), vec![], "alpha = {a}");
    }
}

#[test]
fn normalized_tables_satisfy_everything() {
    for a in ALPHAS {
        let t = build(&params(a)).unwrap();
        assert!(check_super_jacobi(&t).is_empty(), "alpha = {a}");
        let checks = verify_relations(&t);
        assert_eq!(checks.len(), 55);
        for c in &checks {
            assert!(c.holds, "alpha = {a}: {} residual {:?}", c.name, c.residual);
        }
    }
}

#[test]
fn relation_families() {
    let rels = relation_instances(&params("2/3"));
    let count = |f: &str| rels.iter().filter(|r| r.family == f).count();
    assert_eq!(count("quadratic:a-commute"), 2);
    assert_eq!(count("quadratic:mixed"), 4);
    assert_eq!(count("quadratic:cartan"), 1);
    assert_eq!(count("triple:aa-a"), 8);
    assert_eq!(count("triple:aa-b"), 8);
    assert_eq!(count("triple:bb-a"), 16);
    assert_eq!(count("triple:bb-b"), 16);
    assert!(rels.iter().any(|r| r.name == "[a1+, b-1-] = [a2-, b-1+]"));
}

#[test]
fn normalization_scales() {
    let t = build(&params("-1/3")).unwrap();
    let scale = |c: Cao| t.normalization[c.index()].clone();
    let one = q(1, 1);
    assert_eq!(scale(Cao::A { i: 1, plus: true }), one);
    assert_eq!(scale(Cao::A { i: 1, plus: false }), one);
    assert_eq!(scale(Cao::A { i: 2, plus: false }), one);
    assert_eq!(scale(Cao::B { k: 1, xi: 1 }), one);
    assert_eq!(scale(Cao::B { k: -1, xi: 1 }), -one.clone());
    assert_eq!(scale(Cao::B { k: 1, xi: -1 }), one);
    assert_eq!(scale(Cao::B { k: -1, xi: -1 }), -one);
    assert_eq!(t.basis[Cao::B { k: -1, xi: 1 }.index()].cao.as_deref(), Some("b-1+"));
}

#[test]
fn random_alphas() {
    let mut rng = StdRng::seed_from_u64(0x0d21);
    let mut done = 0;
    while done < 5 {
        let n: i64 = rng.gen_range(-12..=12);
        let d: i64 = rng.gen_range(1..=9);
        let Ok(p) = D21Params::new(q(n, d)) else { continue };
        let t = build(&p).unwrap();
        assert!(check_super_jacobi(&t).is_empty(), "alpha = {p}");
        assert!(verify_relations(&t).iter().all(|c| c.holds), "alpha = {p}");
        done += 1;
    }
}

#[test]
fn unnormalized_model_breaks_relations() {
    let t = model(&params("2/3"));
    assert!(verify_relations(&t).iter().any(|c| !c.holds));
}

#[test]
fn perturbed_table_is_rejected() {
    let mut t = build(&params("2/3")).unwrap();
    let (a1p, a2p) = (Cao::A { i: 1, plus: true }.index(), Cao::A { i: 2, plus: true }.index());
    t.perturb(a1p, a2p, CARTAN[2], q(1, 7));
    let v = check_super_jacobi(&t);
    assert!(v.contains(&JacobiViolation::Symmetry { i: a1p, j: a2p }));
    assert!(v.iter().any(|x| matches!(x, JacobiViolation::Jacobi { .. })));

    let mut t = build(&params("2/3")).unwrap();
    let (b, c) = (Cao::B { k: 1, xi: 1 }.index(), Cao::B { k: -1, xi: -1 }.index());
    t.perturb(b, c, CARTAN[0], q(1, 1));
    t.perturb(c, b, CARTAN[0], q(1, 1));
    assert!(check_super_jacobi(&t).iter().all(|x| matches!(x, JacobiViolation::Jacobi { .. })));
    assert!(!check_super_jacobi(&t).is_empty());
    assert!(verify_relations(&t).iter().any(|c| !c.holds));
}

#[test]
fn level_one_supercommutes() {
    let t = build(&params("-1/3")).unwrap();
    for s in [1, -1] {
        let level: Vec<Cao> = Cao::ALL.into_iter().filter(|c| c.grade() == s).collect();
        assert_eq!(level.len(), 4);
        for x in &level {
            for y in &level {
                assert!(t.structure(x.index(), y.index()).is_empty(), "[{x}, {y}]");
            }
        }
    }
}

#[test]
fn oracle_agrees_with_exact_table() {
    for a in ALPHAS {
        let t = build(&params(a)).unwrap();
        let r = cross_check(&t, &[0, 1, 0]).unwrap();
        assert!(r.passed(), "{:?}", r.mismatches);
        assert!(r.pairs_checked > 0 && r.triples_checked > 0);
        // [[a1+, a1-], a2+] vanishes although 2e2 is a root
        assert!(r.cartan_vanishing > 0);
    }
}

#[test]
fn oracle_detects_spurious_bracket() {
    let mut t = build(&params("1")).unwrap();
    let (a1p, a2p) = (Cao::A { i: 1, plus: true }.index(), Cao::A { i: 2, plus: true }.index());
    t.perturb(a1p, a2p, CARTAN[0], q(1, 1));
    t.perturb(a2p, a1p, CARTAN[0], q(-1, 1));
    let r = cross_check(&t, &[0, 1, 0]).unwrap();
    assert!(!r.passed());
    let spurious = |m: &OracleMismatch| m.roots.contains(&"2e1".into()) && m.roots.contains(&"2e2".into());
    assert!(r.mismatches.iter().any(|m| spurious(m) && m.exact_nonzero && !m.predicted_nonzero));
}

#[test]
fn json_dump() {
    let t = build(&params("-1/3")).unwrap();
    let v = to_json(&t);
    assert_eq!(v["alpha"], "-1/3");
    assert_eq!(v["basis"].as_array().unwrap().len(), 17);
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["alpha", "basis", "brackets"]);
    let n = v["brackets"].as_array().unwrap().len();
    let expected = (0..17)
        .flat_map(|i| (0..17).map(move |j| (i, j)))
        .filter(|&(i, j)| !t.structure(i, j).is_empty())
        .count();
    assert_eq!(n, expected);
}
