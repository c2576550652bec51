//! Exact super skew-symmetry and super Jacobi checks over all basis pairs
//! and triples.

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use super::table::StructureTable;
use super::Q;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum JacobiViolation {
    /// `[x, y] != -(-1)^{|x||y|} [y, x]`.
    Symmetry { i: usize, j: usize },
    /// `[x, [y, z]] != [[x, y], z] + (-1)^{|x||y|} [y, [x, z]]`.
    Jacobi { i: usize, j: usize, k: usize },
}

fn sign(t: &StructureTable, i: usize, j: usize) -> Q {
    let s: i64 = if t.parity(i).is_odd() && t.parity(j).is_odd() { -1 } else { 1 };
    Q::from_integer(s.into())
}

/// Every violation, in index order; empty for a Lie superalgebra.
pub fn check_super_jacobi(t: &StructureTable) -> Vec<JacobiViolation> {
    let n = t.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            let s = sign(t, i, j);
            let ok = (0..n).all(|k| {
                let c = |a, b| {
                    t.structure(a, b)
                        .iter()
                        .find(|(x, _)| *x == k)
                        .map_or_else(Q::zero, |(_, v)| v.clone())
                };
                c(i, j) + &s * c(j, i) == Q::zero()
            });
            if !ok {
                out.push(JacobiViolation::Symmetry { i, j });
            }
        }
    }
    let triples: Vec<JacobiViolation> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            let mut found = Vec::new();
            let x = t.unit(i);
            for j in 0..n {
                let y = t.unit(j);
                let xy = t.bracket(&x, &y);
                let s = sign(t, i, j);
                for k in 0..n {
                    let z = t.unit(k);
                    let lhs = t.bracket(&x, &t.bracket(&y, &z));
                    let a = t.bracket(&xy, &z);
                    let b = t.bracket(&y, &t.bracket(&x, &z));
                    let ok = lhs.iter().zip(a.iter().zip(&b)).all(|(l, (a, b))| *l == a + &s * b);
                    if !ok {
                        found.push(JacobiViolation::Jacobi { i, j, k });
                    }
                }
            }
            found
        })
        .collect();
    out.extend(triples);
    out
}
