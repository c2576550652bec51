//! The superalgebra D(2,1;alpha) as an explicit 17-dimensional structure
//! table, normalized in the creation/annihilation basis of its length-3
//! grading, with exact checks of the super Jacobi identity and the defining
//! quadratic and triple relations.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

mod jacobi;
mod normalize;
mod oracle;
mod relations;
mod table;

pub use jacobi::{check_super_jacobi, JacobiViolation};
pub use oracle::{cross_check, OracleMismatch, OracleReport};
pub use relations::{relation_instances, residual, verify_relations, Relation, RelationCheck, Term};
pub use table::{e_index, f_index, odd_index, BasisElement, StructureTable, CARTAN, DIM};

pub type Q = BigRational;

/// Parameter data: alpha and the odd-bracket weights
/// sigma = (1 + alpha, -1, -alpha).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct D21Params {
    pub alpha: Q,
    pub sigma: [Q; 3],
}

impl D21Params {
    pub fn new(alpha: Q) -> Result<D21Params> {
        if alpha.is_zero() || alpha == -Q::one() {
            return Err(Error::InvalidAlpha(format_q(&alpha)));
        }
        let sigma = [Q::one() + &alpha, -Q::one(), -alpha.clone()];
        Ok(D21Params { alpha, sigma })
    }
}

impl FromStr for D21Params {
    type Err = Error;

    fn from_str(s: &str) -> Result<D21Params> {
        D21Params::new(parse_q(s)?)
    }
}

impl fmt::Display for D21Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_q(&self.alpha))
    }
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_q(s: &str) -> Result<Q> {
    let bad = || Error::InvalidAlpha(s.to_string());
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Q::new(num, den))
}

pub fn format_q(q: &Q) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Creation/annihilation operators: `A { i, plus }` is a_i^(+/-) (i = 1, 2)
/// and `B { k, xi }` is b_k^xi (k, xi in {+1, -1}).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Cao {
    A { i: u8, plus: bool },
    B { k: i8, xi: i8 },
}

impl Cao {
    pub const ALL: [Cao; 8] = [
        Cao::A { i: 1, plus: true },
        Cao::A { i: 1, plus: false },
        Cao::A { i: 2, plus: true },
        Cao::A { i: 2, plus: false },
        Cao::B { k: 1, xi: 1 },
        Cao::B { k: 1, xi: -1 },
        Cao::B { k: -1, xi: 1 },
        Cao::B { k: -1, xi: -1 },
    ];

    /// Index in the structure table. a_i^+ spans the root 2e_i and
    /// b_k^xi the root xi(e1 + e2) + k e3.
    pub fn index(self) -> usize {
        match self {
            Cao::A { i, plus: true } => e_index(i as usize - 1),
            Cao::A { i, plus: false } => f_index(i as usize - 1),
            Cao::B { k, xi } => odd_index([xi as i32, xi as i32, k as i32]),
        }
    }

    pub fn grade(self) -> i32 {
        match self {
            Cao::A { plus, .. } => if plus { 1 } else { -1 },
            Cao::B { xi, .. } => xi as i32,
        }
    }
}

impl fmt::Display for Cao {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = |b: bool| if b { '+' } else { '-' };
        match *self {
            Cao::A { i, plus } => write!(f, "a{i}{}", sign(plus)),
            Cao::B { k, xi } => write!(f, "b{}1{}", sign(k > 0), sign(xi > 0)),
        }
    }
}

/// Builds the model for `params`, rescales it to the normalized
/// creation/annihilation basis and checks every defining relation.
pub fn build(params: &D21Params) -> Result<StructureTable> {
    let mut t = StructureTable::model(params);
    normalize::normalize(&mut t)?;
    let failed: Vec<String> = verify_relations(&t)
        .into_iter()
        .filter(|c| !c.holds)
        .map(|c| c.name)
        .collect();
    if !failed.is_empty() {
        return Err(Error::Normalization(format!("relations fail: {}", failed.join(", "))));
    }
    Ok(t)
}

/// The unnormalized three-sl(2) model, before any rescaling.
pub fn model(params: &D21Params) -> StructureTable {
    StructureTable::model(params)
}

#[derive(Serialize)]
struct JsonBasis<'a> {
    label: &'a str,
    cao: Option<&'a str>,
    parity: &'static str,
    grade: i32,
    weight: [i32; 3],
    scale: String,
}

#[derive(Serialize)]
struct JsonBracket {
    i: usize,
    j: usize,
    coeffs: Vec<(usize, String)>,
}

/// JSON with keys `alpha`, `basis` and `brackets` (nonzero entries only,
/// coefficients as `p/q` strings).
pub fn to_json(t: &StructureTable) -> serde_json::Value {
    let basis: Vec<JsonBasis> = t
        .basis
        .iter()
        .zip(&t.normalization)
        .map(|(b, s)| JsonBasis {
            label: &b.label,
            cao: b.cao.as_deref(),
            parity: if b.parity.is_odd() { "odd" } else { "even" },
            grade: b.grade,
            weight: b.weight,
            scale: format_q(s),
        })
        .collect();
    let mut brackets = Vec::new();
    for i in 0..t.dim() {
        for j in 0..t.dim() {
            let s = t.structure(i, j);
            if !s.is_empty() {
                brackets.push(JsonBracket {
                    i,
                    j,
                    coeffs: s.iter().map(|(k, c)| (*k, format_q(c))).collect(),
                });
            }
        }
    }
    serde_json::json!({
        "alpha": format_q(&t.params.alpha),
        "basis": basis,
        "brackets": brackets,
    })
}

#[cfg(test)]
mod tests;
