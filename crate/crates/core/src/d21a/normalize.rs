//! Rescaling of the model basis so that the creation/annihilation operators
//! satisfy the defining relations with unit normalizations.
//!
//! Gauge: a1+, a2+ and b+1+ keep their model scale. The remaining five
//! scales are fixed one at a time, each from a relation in which the unknown
//! element occurs exactly once, so every step is a proportionality solve.

use num_traits::{One, Zero};

use super::table::StructureTable;
use super::{Cao, Q};
use crate::error::{Error, Result};

const A1P: Cao = Cao::A { i: 1, plus: true };
const A1M: Cao = Cao::A { i: 1, plus: false };
const A2P: Cao = Cao::A { i: 2, plus: true };
const A2M: Cao = Cao::A { i: 2, plus: false };
const BPP: Cao = Cao::B { k: 1, xi: 1 };
const BPM: Cao = Cao::B { k: 1, xi: -1 };
const BMP: Cao = Cao::B { k: -1, xi: 1 };
const BMM: Cao = Cao::B { k: -1, xi: -1 };

/// The scalar `l` with `target = l * v`, if `v` is nonzero and parallel.
fn ratio(target: &[Q], v: &[Q]) -> Option<Q> {
    let k = v.iter().position(|x| !x.is_zero())?;
    let l = &target[k] / &v[k];
    target.iter().zip(v).all(|(t, x)| *t == &l * x).then_some(l)
}

fn scaled(v: &[Q], c: &Q) -> Vec<Q> {
    v.iter().map(|x| x * c).collect()
}

fn solve(what: &str, target: &[Q], v: &[Q]) -> Result<Q> {
    match ratio(target, v) {
        Some(l) if !l.is_zero() => Ok(l),
        _ => Err(Error::Normalization(format!("no scale for {what}"))),
    }
}

/// Normalizes `t` in place and attaches creation/annihilation labels.
pub(super) fn normalize(t: &mut StructureTable) -> Result<()> {
    let model = t.clone();
    let mut lambda = vec![Q::one(); t.dim()];
    let u = |c: Cao| model.unit(c.index());
    let br = |x: &[Q], y: &[Q]| model.bracket(x, y);
    // current scaled element
    let el = |lambda: &[Q], c: Cao| scaled(&u(c), &lambda[c.index()]);

    // [[a_i+, a_i-], a_i+] = 2 a_i+
    for (p, m) in [(A1P, A1M), (A2P, A2M)] {
        let v = br(&br(&el(&lambda, p), &u(m)), &el(&lambda, p));
        let target = scaled(&el(&lambda, p), &Q::from_integer(2.into()));
        lambda[m.index()] = solve("a-", &target, &v)?;
    }

    // [{b+1+, b-1-}, a1+] = 2 sigma_1 a1+
    let v = br(&br(&el(&lambda, BPP), &u(BMM)), &el(&lambda, A1P));
    let target = scaled(&el(&lambda, A1P), &(Q::from_integer(2.into()) * &t.params.sigma[0]));
    lambda[BMM.index()] = solve("b-1-", &target, &v)?;

    // [a1+, b-1-] = [a2-, b-1+]
    let lhs = br(&el(&lambda, A1P), &el(&lambda, BMM));
    let v = br(&el(&lambda, A2M), &u(BMP));
    lambda[BMP.index()] = solve("b-1+", &lhs, &v)?;

    // [a1+, b+1-] = [a2-, b+1+], solved for b+1- on the left
    let rhs = br(&el(&lambda, A2M), &el(&lambda, BPP));
    let v = br(&el(&lambda, A1P), &u(BPM));
    lambda[BPM.index()] = solve("b+1-", &rhs, &v)?;

    t.rescale(&lambda);
    for c in Cao::ALL {
        t.basis[c.index()].cao = Some(c.to_string());
    }
    Ok(())
}
