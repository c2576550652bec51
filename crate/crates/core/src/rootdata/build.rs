//! Fixed root tables, written in "doubled symbol units": every entry is twice
//! the coefficient of the corresponding e_i (or delta) in the usual textbook
//! coordinates, so half-integers become integers.

use super::{Algebra, Constraint, Parity, Root, RootSystem, WeightVector};
use crate::linalg::Q;

type Doubled = Vec<i64>;

pub(super) fn symbols(algebra: Algebra) -> &'static [&'static str] {
    match algebra {
        Algebra::G2 | Algebra::D21A => &["e1", "e2", "e3"],
        Algebra::F4 => &["e1", "e2", "e3", "e4"],
        Algebra::E6 | Algebra::E7 | Algebra::E8 => &["e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8"],
        Algebra::G3 => &["e1", "e2", "e3", "d"],
        Algebra::F4S => &["d", "e1", "e2", "e3"],
    }
}

/// Number of leading coordinates that live on the plane e1+e2+e3 = 0.
pub(super) fn projected_block(algebra: Algebra) -> usize {
    match algebra {
        Algebra::G2 | Algebra::G3 => 3,
        _ => 0,
    }
}

pub(super) fn scale(algebra: Algebra) -> i32 {
    match algebra {
        Algebra::G3 => 3,
        _ => 2,
    }
}

/// `2 * e_i` in a space of dimension `n` (1-based index).
fn e(n: usize, i: usize) -> Doubled {
    let mut v = vec![0; n];
    v[i - 1] = 2;
    v
}

fn lin(terms: &[(i64, &Doubled)]) -> Doubled {
    let n = terms[0].1.len();
    let mut out = vec![0; n];
    for (c, v) in terms {
        for (o, x) in out.iter_mut().zip(v.iter()) {
            *o += c * x;
        }
    }
    out
}

fn neg(v: &Doubled) -> Doubled {
    v.iter().map(|x| -x).collect()
}

/// All vectors `(s_1, ..., s_n)` with `s_i = +-1` (half of a doubled unit).
fn sign_patterns(n: usize) -> impl Iterator<Item = Doubled> {
    (0..(1u32 << n)).map(move |mask| {
        (0..n)
            .map(|i| if mask & (1 << i) != 0 { -1 } else { 1 })
            .collect()
    })
}

fn minus_count(v: &Doubled) -> usize {
    v.iter().filter(|&&x| x < 0).count()
}

struct Table {
    roots: Vec<(Doubled, Parity)>,
    simple: Vec<Doubled>,
    constraints: Vec<Vec<i32>>,
}

fn with_negatives(roots: Vec<(Doubled, Parity)>) -> Vec<(Doubled, Parity)> {
    let mut out = Vec::with_capacity(2 * roots.len());
    for (v, p) in roots {
        out.push((neg(&v), p));
        out.push((v, p));
    }
    out
}

fn even(vs: impl IntoIterator<Item = Doubled>) -> Vec<(Doubled, Parity)> {
    vs.into_iter().map(|v| (v, Parity::Even)).collect()
}

fn odd(vs: impl IntoIterator<Item = Doubled>) -> Vec<(Doubled, Parity)> {
    vs.into_iter().map(|v| (v, Parity::Odd)).collect()
}

fn g2() -> Table {
    let n = 3;
    let mut roots = Vec::new();
    for i in 1..=3 {
        for j in 1..=3 {
            if i == j {
                continue;
            }
            roots.push(lin(&[(1, &e(n, i)), (-1, &e(n, j))]));
            let k = 6 - i - j;
            roots.push(lin(&[(1, &e(n, i)), (1, &e(n, j)), (-2, &e(n, k))]));
        }
    }
    Table {
        roots: with_negatives(even(roots)),
        simple: vec![
            lin(&[(1, &e(n, 2)), (1, &e(n, 3)), (-2, &e(n, 1))]),
            lin(&[(1, &e(n, 1)), (-1, &e(n, 2))]),
        ],
        constraints: vec![vec![1, 1, 1]],
    }
}

fn f4() -> Table {
    let n = 4;
    let mut roots = Vec::new();
    for i in 1..=n {
        roots.push(e(n, i));
        for j in (i + 1)..=n {
            roots.push(lin(&[(1, &e(n, i)), (1, &e(n, j))]));
            roots.push(lin(&[(1, &e(n, i)), (-1, &e(n, j))]));
        }
    }
    let mut all = with_negatives(even(roots));
    all.extend(even(sign_patterns(4)));
    Table {
        roots: all,
        simple: vec![
            lin(&[(1, &e(n, 2)), (-1, &e(n, 3))]),
            lin(&[(1, &e(n, 3)), (-1, &e(n, 4))]),
            e(n, 4),
            vec![1, -1, -1, -1],
        ],
        constraints: vec![],
    }
}

/// Simple roots of E6, E7, E8 in the shared 8-dimensional space. E7 and E8
/// prepend one extra root each.
fn e_series_simple(rank: usize) -> Vec<Doubled> {
    let n = 8;
    let mut simple: Vec<Doubled> = (1..=5)
        .map(|i| lin(&[(1, &e(n, i + 2)), (-1, &e(n, i + 3))]))
        .collect();
    simple.push(vec![1, -1, -1, -1, -1, 1, 1, 1]);
    if rank >= 7 {
        simple.insert(0, lin(&[(1, &e(n, 2)), (-1, &e(n, 3))]));
    }
    if rank == 8 {
        simple.insert(0, lin(&[(-1, &e(n, 1)), (-1, &e(n, 2))]));
    }
    simple
}

fn e8() -> Table {
    let n = 8;
    let mut roots = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            roots.push(lin(&[(1, &e(n, i)), (1, &e(n, j))]));
            roots.push(lin(&[(1, &e(n, i)), (-1, &e(n, j))]));
        }
    }
    let mut all = with_negatives(even(roots));
    // number of +1 entries even <=> number of -1 entries even
    all.extend(even(sign_patterns(8).filter(|v| minus_count(v).is_multiple_of(2))));
    Table {
        roots: all,
        simple: e_series_simple(8),
        constraints: vec![],
    }
}

fn e7() -> Table {
    let n = 8;
    let mut roots = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            roots.push(lin(&[(1, &e(n, i)), (-1, &e(n, j))]));
        }
    }
    let mut all = with_negatives(even(roots));
    all.extend(even(sign_patterns(8).filter(|v| minus_count(v) == 4)));
    Table {
        roots: all,
        simple: e_series_simple(7),
        constraints: vec![vec![1; 8]],
    }
}

fn e6() -> Table {
    let n = 8;
    let mut roots = vec![lin(&[(1, &e(n, 1)), (-1, &e(n, 2))])];
    for i in 3..=n {
        for j in (i + 1)..=n {
            roots.push(lin(&[(1, &e(n, i)), (-1, &e(n, j))]));
        }
    }
    let mut all = with_negatives(even(roots));
    all.extend(even(
        sign_patterns(8).filter(|v| minus_count(&v[..2].to_vec()) == 1 && minus_count(&v[2..].to_vec()) == 3),
    ));
    Table {
        roots: all,
        simple: e_series_simple(6),
        constraints: vec![vec![1, 1, 0, 0, 0, 0, 0, 0], vec![0, 0, 1, 1, 1, 1, 1, 1]],
    }
}

fn d21a() -> Table {
    let n = 3;
    let mut all = with_negatives(even((1..=3).map(|i| lin(&[(2, &e(n, i))]))));
    all.extend(odd(sign_patterns(3).map(|v| lin(&[(2, &v)]))));
    Table {
        roots: all,
        simple: vec![vec![2, -2, -2], lin(&[(2, &e(n, 2))]), lin(&[(2, &e(n, 3))])],
        constraints: vec![],
    }
}

/// Coordinates (e1, e2, e3, d); e1+e2+e3 = 0 is imposed by projection.
fn g3() -> Table {
    let n = 4;
    let d = e(n, 4);
    let mut ev = Vec::new();
    for j in 1..=3 {
        ev.push(e(n, j));
        for k in 1..=3 {
            if j != k {
                ev.push(lin(&[(1, &e(n, j)), (-1, &e(n, k))]));
            }
        }
    }
    ev.push(lin(&[(2, &d)]));
    let mut od = vec![d.clone()];
    for j in 1..=3 {
        od.push(lin(&[(1, &e(n, j)), (1, &d)]));
        od.push(lin(&[(1, &e(n, j)), (-1, &d)]));
    }
    let mut all = with_negatives(even(ev));
    all.extend(with_negatives(odd(od)));
    Table {
        roots: all,
        simple: vec![
            lin(&[(1, &d), (1, &e(n, 1))]),
            e(n, 2),
            lin(&[(1, &e(n, 3)), (-1, &e(n, 2))]),
        ],
        constraints: vec![vec![1, 1, 1, 0]],
    }
}

/// Coordinates (d, e1, e2, e3).
fn f4s() -> Table {
    let n = 4;
    let mut ev = vec![e(n, 1)];
    for i in 2..=4 {
        ev.push(e(n, i));
        for j in (i + 1)..=4 {
            ev.push(lin(&[(1, &e(n, i)), (1, &e(n, j))]));
            ev.push(lin(&[(1, &e(n, i)), (-1, &e(n, j))]));
        }
    }
    let mut all = with_negatives(even(ev));
    all.extend(odd(sign_patterns(4)));
    Table {
        roots: all,
        simple: vec![
            vec![1, -1, -1, -1],
            e(n, 4),
            lin(&[(1, &e(n, 3)), (-1, &e(n, 4))]),
            lin(&[(1, &e(n, 2)), (-1, &e(n, 3))]),
        ],
        constraints: vec![],
    }
}

fn table(algebra: Algebra) -> Table {
    match algebra {
        Algebra::G2 => g2(),
        Algebra::F4 => f4(),
        Algebra::E6 => e6(),
        Algebra::E7 => e7(),
        Algebra::E8 => e8(),
        Algebra::D21A => d21a(),
        Algebra::G3 => g3(),
        Algebra::F4S => f4s(),
    }
}

/// Maps doubled symbol coordinates to stored coordinates.
pub(super) fn store(algebra: Algebra, doubled: &[i64]) -> Option<WeightVector> {
    let coeffs: Vec<Q> = doubled.iter().map(|&x| Q::new(x, 2)).collect();
    store_rational(algebra, &coeffs)
}

pub(super) fn store_rational(algebra: Algebra, coeffs: &[Q]) -> Option<WeightVector> {
    let block = projected_block(algebra);
    let scale = Q::from_integer(scale(algebra) as i64);
    let mean = if block > 0 {
        coeffs[..block].iter().copied().sum::<Q>() / Q::from_integer(block as i64)
    } else {
        Q::from_integer(0)
    };
    coeffs
        .iter()
        .enumerate()
        .map(|(i, &c)| {
            let x = if i < block { (c - mean) * scale } else { c * scale };
            x.is_integer().then(|| x.to_integer() as i32)
        })
        .collect::<Option<Vec<i32>>>()
        .map(WeightVector::new)
}

pub(super) fn construct(algebra: Algebra) -> RootSystem {
    let t = table(algebra);
    let dim = symbols(algebra).len();
    let st = |v: &Doubled| store(algebra, v).expect("table entries are representable");
    let roots = t
        .roots
        .iter()
        .map(|(v, p)| Root {
            vector: st(v),
            parity: *p,
        })
        .collect();
    let simple = t.simple.iter().map(st).collect();
    let constraints = t.constraints.into_iter().map(|coeffs| Constraint { coeffs }).collect();
    RootSystem::assemble(algebra, dim, scale(algebra), roots, simple, constraints)
}
