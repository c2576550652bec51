//! Defining relations of the creation/annihilation operators, each expanded
//! into its individual instances and written as `sum of terms = 0`.

use num_traits::Zero;
use serde::Serialize;

use super::table::StructureTable;
use super::{format_q, Cao, D21Params, Q};

#[derive(Clone, Debug, PartialEq)]
pub enum Term {
    /// c * x
    Single(Q, Cao),
    /// c * [x, y]
    Pair(Q, Cao, Cao),
    /// c * [[x, y], z]
    Triple(Q, Cao, Cao, Cao),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Relation {
    /// Relation family, e.g. `quadratic:mixed`.
    pub family: &'static str,
    pub name: String,
    pub terms: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub family: &'static str,
    pub name: String,
    pub holds: bool,
    /// Nonzero coefficients of the residual (basis index, value).
    pub residual: Vec<(usize, String)>,
}

fn q(x: i64) -> Q {
    Q::from_integer(x.into())
}

fn a(i: u8, plus: bool) -> Cao {
    Cao::A { i, plus }
}

fn b(k: i8, xi: i8) -> Cao {
    Cao::B { k, xi }
}

const SIGNS: [i8; 2] = [1, -1];

fn sign_char(s: i8) -> char {
    if s > 0 {
        '+'
    } else {
        '-'
    }
}

/// All 55 relation instances for the given parameter.
pub fn relation_instances(p: &D21Params) -> Vec<Relation> {
    let mut out = Vec::new();
    let mut add = |family, name: String, terms| out.push(Relation { family, name, terms });

    // [a_i+, a_j-] = 0 for i != j
    for (i, j) in [(1, 2), (2, 1)] {
        add(
            "quadratic:a-commute",
            format!("[a{i}+, a{j}-] = 0"),
            vec![Term::Pair(q(1), a(i, true), a(j, false))],
        );
    }

    // [a_1^s, b_k^-s] = [a_2^-s, b_k^s]
    for k in SIGNS {
        for s in SIGNS {
            let name = format!(
                "[a1{s}, b{k}1{t}] = [a2{t}, b{k}1{s}]",
                s = sign_char(s),
                t = sign_char(-s),
                k = sign_char(k)
            );
            add(
                "quadratic:mixed",
                name,
                vec![
                    Term::Pair(q(1), a(1, s > 0), b(k, -s)),
                    Term::Pair(q(-1), a(2, s < 0), b(k, s)),
                ],
            );
        }
    }

    // 2 s1 [a1-, a1+] + 2 s2 [a2-, a2+] + {b-1-, b+1+} - {b+1-, b-1+} = 0
    add(
        "quadratic:cartan",
        "2s1[a1-, a1+] + 2s2[a2-, a2+] + {b-1-, b+1+} - {b+1-, b-1+} = 0".to_string(),
        vec![
            Term::Pair(q(2) * &p.sigma[0], a(1, false), a(1, true)),
            Term::Pair(q(2) * &p.sigma[1], a(2, false), a(2, true)),
            Term::Pair(q(1), b(-1, -1), b(1, 1)),
            Term::Pair(q(-1), b(1, -1), b(-1, 1)),
        ],
    );

    // [[a_i+, a_i-], a_j^s] = 2 s delta_ij a_j^s
    for i in [1, 2] {
        for j in [1, 2] {
            for s in SIGNS {
                let c = if i == j { q(2 * s as i64) } else { Q::zero() };
                add(
                    "triple:aa-a",
                    format!("[[a{i}+, a{i}-], a{j}{}] = {} a{j}{}", sign_char(s), format_q(&c), sign_char(s)),
                    vec![
                        Term::Triple(q(1), a(i, true), a(i, false), a(j, s > 0)),
                        Term::Single(-c, a(j, s > 0)),
                    ],
                );
            }
        }
    }

    // [[a_i+, a_i-], b_k^s] = s b_k^s
    for i in [1, 2] {
        for k in SIGNS {
            for s in SIGNS {
                let bk = b(k, s);
                add(
                    "triple:aa-b",
                    format!("[[a{i}+, a{i}-], {bk}] = {}{bk}", sign_char(s)),
                    vec![
                        Term::Triple(q(1), a(i, true), a(i, false), bk),
                        Term::Single(q(-(s as i64)), bk),
                    ],
                );
            }
        }
    }

    // [{b_i+, b_j-}, a_k^s] = -s (j - i) sigma_k a_k^s
    for i in SIGNS {
        for j in SIGNS {
            for k in [1u8, 2] {
                for s in SIGNS {
                    let c = q(-(s as i64) * (j as i64 - i as i64)) * &p.sigma[k as usize - 1];
                    let ak = a(k, s > 0);
                    add(
                        "triple:bb-a",
                        format!("[{{{}, {}}}, {ak}] = {} {ak}", b(i, 1), b(j, -1), format_q(&c)),
                        vec![Term::Triple(q(1), b(i, 1), b(j, -1), ak), Term::Single(-c, ak)],
                    );
                }
            }
        }
    }

    // [{b_i+, b_j-}, b_k^xi]
    //   = -alpha delta_{xi,+} (k - i) b+_{i+j+k} - alpha delta_{xi,-} (k - j) b-_{i+j+k}
    for i in SIGNS {
        for j in SIGNS {
            for k in SIGNS {
                for xi in SIGNS {
                    let m = i + j + k;
                    let mut terms = vec![Term::Triple(q(1), b(i, 1), b(j, -1), b(k, xi))];
                    let mut rhs = "0".to_string();
                    if m.abs() == 1 {
                        let diff = if xi > 0 { k - i } else { k - j };
                        let c = -&p.alpha * q(diff as i64);
                        if !c.is_zero() {
                            terms.push(Term::Single(-c.clone(), b(m, xi)));
                            rhs = format!("{} {}", format_q(&c), b(m, xi));
                        }
                    }
                    add(
                        "triple:bb-b",
                        format!("[{{{}, {}}}, {}] = {rhs}", b(i, 1), b(j, -1), b(k, xi)),
                        terms,
                    );
                }
            }
        }
    }
    out
}

/// Evaluates `sum of terms` in the table.
pub fn residual(t: &StructureTable, terms: &[Term]) -> Vec<Q> {
    let u = |c: Cao| t.unit(c.index());
    let mut out = vec![Q::zero(); t.dim()];
    for term in terms {
        let (c, v) = match term {
            Term::Single(c, x) => (c, u(*x)),
            Term::Pair(c, x, y) => (c, t.bracket(&u(*x), &u(*y))),
            Term::Triple(c, x, y, z) => (c, t.bracket(&t.bracket(&u(*x), &u(*y)), &u(*z))),
        };
        for (o, x) in out.iter_mut().zip(v) {
            *o += c * x;
        }
    }
    out
}

/// Checks every relation instance exactly.
pub fn verify_relations(t: &StructureTable) -> Vec<RelationCheck> {
    relation_instances(&t.params)
        .into_iter()
        .map(|r| {
            let res = residual(t, &r.terms);
            let residual: Vec<(usize, String)> = res
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(k, x)| (k, format_q(x)))
                .collect();
            RelationCheck {
                family: r.family,
                name: r.name,
                holds: residual.is_empty(),
                residual,
            }
        })
        .collect()
}
