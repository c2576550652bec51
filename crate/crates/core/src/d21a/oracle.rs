//! Cross-check of the exact bracket table against the combinatorial
//! prediction from root addition alone.
//!
//! For a bracket through a root intermediate the prediction is exact: the
//! result is nonzero precisely when the target weight is a root. When the
//! intermediate lies in the Cartan subalgebra the prediction is only an
//! upper bound, because `[h, x_c] = c(h) x_c` vanishes whenever `c` is
//! orthogonal to `h`; there only "nonzero implies along x_c" is checked.

use num_traits::Zero;
use serde::Serialize;

use super::table::{format_weight, StructureTable};
use super::Q;
use crate::error::Result;
use crate::grading::{analyze, relation_skeleton, GradingSpec, Intermediate};
use crate::rootdata::{Algebra, RootSystem};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleMismatch {
    /// Roots of the operands, outermost last.
    pub roots: Vec<String>,
    pub predicted_nonzero: bool,
    pub exact_nonzero: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub pairs_checked: usize,
    pub triples_checked: usize,
    /// Triples through the Cartan subalgebra whose exact value vanishes
    /// although the root prediction allows a nonzero value.
    pub cartan_vanishing: usize,
    pub mismatches: Vec<OracleMismatch>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Basis index of each root of D(2,1;alpha), matched by weight.
fn root_to_basis(t: &StructureTable, sys: &RootSystem) -> Result<Vec<usize>> {
    let mut map = vec![usize::MAX; sys.len()];
    for (i, b) in t.basis.iter().enumerate().skip(3) {
        let r = sys.parse(&format_weight(b.weight))?;
        if let Some(k) = sys.index_of(&r) {
            map[k] = i;
        }
    }
    Ok(map)
}

/// True when `v` is nonzero; `Err(())` when it has support outside `allowed`.
fn support(v: &[Q], allowed: Option<usize>) -> std::result::Result<bool, ()> {
    for (k, x) in v.iter().enumerate() {
        if !x.is_zero() && Some(k) != allowed {
            return Err(());
        }
    }
    Ok(v.iter().any(|x| !x.is_zero()))
}

/// Compares the table with the relation skeleton of the grading `marks`.
pub fn cross_check(t: &StructureTable, marks: &[i32]) -> Result<OracleReport> {
    let g = analyze(&GradingSpec::new(Algebra::D21A, marks.to_vec())?);
    let sys = g.system();
    let map = root_to_basis(t, sys)?;
    let sk = relation_skeleton(&g);
    let mut report = OracleReport::default();
    let name = |r: usize| sys.format_root(r);

    let mut ops: Vec<usize> = g.level(-1).iter().chain(g.level(1)).copied().collect();
    ops.sort_unstable();
    for (x, &a) in ops.iter().enumerate() {
        for &b in &ops[x..] {
            if (a == b && !sys.parity(a).is_odd()) || sys.negation(a) == b {
                continue;
            }
            let listed = sk.pairs.iter().find(|p| (p.left, p.right) == (a, b));
            let predicted_zero = matches!(listed, Some(p) if p.target.is_none());
            let target = sys.sum(a, b).map(|s| map[s]);
            let v = t.bracket(&t.unit(map[a]), &t.unit(map[b]));
            report.pairs_checked += 1;
            if support(&v, target) != Ok(!predicted_zero) {
                report.mismatches.push(OracleMismatch {
                    roots: vec![name(a), name(b)],
                    predicted_nonzero: !predicted_zero,
                    exact_nonzero: is_nonzero(&v),
                });
            }
        }
    }

    for tr in &sk.triples {
        let inner = t.bracket(&t.unit(map[tr.left]), &t.unit(map[tr.right]));
        let v = t.bracket(&inner, &t.unit(map[tr.operand]));
        report.triples_checked += 1;
        let target = tr.target.map(|s| map[s]);
        let exact = support(&v, target);
        let ok = match (tr.inner, exact) {
            (_, Err(())) => false,
            (Intermediate::Root(_), Ok(nz)) => nz == tr.target.is_some(),
            (Intermediate::Cartan, Ok(nz)) => {
                if !nz {
                    report.cartan_vanishing += 1;
                }
                true
            }
        };
        if !ok {
            report.mismatches.push(OracleMismatch {
                roots: vec![name(tr.left), name(tr.right), name(tr.operand)],
                predicted_nonzero: tr.target.is_some(),
                exact_nonzero: is_nonzero(&v),
            });
        }
    }
    Ok(report)
}

fn is_nonzero(v: &[Q]) -> bool {
    v.iter().any(|x| !x.is_zero())
}
