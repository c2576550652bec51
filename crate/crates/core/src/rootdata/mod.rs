//! Root systems of the eight exceptional (super)algebras.
//!
//! Weights are stored as integer vectors scaled by a per-system factor
//! (`scale`), so half-integer roots of F4, E6-E8 and F(4) compare and hash
//! exactly. The scale is 2 everywhere except G(3), whose epsilon part lives
//! on the plane e1+e2+e3 = 0 and needs thirds (scale 3).

mod build;
mod diagram;
mod notation;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, Q};

pub use diagram::{diagram, Bond, DiagramData, DiagramEdge, DiagramNode, NodeKind};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Algebra {
    G2,
    F4,
    E6,
    E7,
    E8,
    D21A,
    G3,
    F4S,
}

impl Algebra {
    pub const ALL: [Algebra; 8] = [
        Algebra::G2,
        Algebra::F4,
        Algebra::E6,
        Algebra::E7,
        Algebra::E8,
        Algebra::D21A,
        Algebra::G3,
        Algebra::F4S,
    ];
    pub const LIE: [Algebra; 5] = [Algebra::G2, Algebra::F4, Algebra::E6, Algebra::E7, Algebra::E8];
    pub const SUPER: [Algebra; 3] = [Algebra::D21A, Algebra::G3, Algebra::F4S];

    /// Identifier used on the command line and in serialized output.
    pub fn id(self) -> &'static str {
        match self {
            Algebra::G2 => "G2",
            Algebra::F4 => "F4",
            Algebra::E6 => "E6",
            Algebra::E7 => "E7",
            Algebra::E8 => "E8",
            Algebra::D21A => "D21A",
            Algebra::G3 => "G3",
            Algebra::F4S => "F4S",
        }
    }

    /// Conventional mathematical name.
    pub fn display_name(self) -> &'static str {
        match self {
            Algebra::D21A => "D(2,1;alpha)",
            Algebra::G3 => "G(3)",
            Algebra::F4S => "F(4)",
            other => other.id(),
        }
    }

    pub fn is_super(self) -> bool {
        matches!(self, Algebra::D21A | Algebra::G3 | Algebra::F4S)
    }

    /// Total dimension of the algebra.
    pub fn dimension(self) -> usize {
        match self {
            Algebra::G2 => 14,
            Algebra::F4 => 52,
            Algebra::E6 => 78,
            Algebra::E7 => 133,
            Algebra::E8 => 248,
            Algebra::D21A => 17,
            Algebra::G3 => 31,
            Algebra::F4S => 40,
        }
    }

    /// (even, odd) dimensions.
    pub fn dimension_split(self) -> (usize, usize) {
        match self {
            Algebra::D21A => (9, 8),
            Algebra::G3 => (17, 14),
            Algebra::F4S => (24, 16),
            lie => (lie.dimension(), 0),
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Algebra {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect::<String>()
            .to_ascii_uppercase();
        match key.as_str() {
            "G2" => Ok(Algebra::G2),
            "F4" => Ok(Algebra::F4),
            "E6" => Ok(Algebra::E6),
            "E7" => Ok(Algebra::E7),
            "E8" => Ok(Algebra::E8),
            "D21A" | "D(2,1;ALPHA)" | "D(2,1;A)" => Ok(Algebra::D21A),
            "G3" | "G(3)" => Ok(Algebra::G3),
            "F4S" | "F(4)" => Ok(Algebra::F4S),
            _ => Err(Error::UnknownAlgebra(s.to_string())),
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }
}

impl std::ops::Add for Parity {
    type Output = Parity;

    fn add(self, other: Parity) -> Parity {
        if self.is_odd() != other.is_odd() {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
}

/// A weight in scaled integer coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVector(Vec<i32>);

impl WeightVector {
    pub fn new(coords: Vec<i32>) -> Self {
        WeightVector(coords)
    }

    pub fn zero(dim: usize) -> Self {
        WeightVector(vec![0; dim])
    }

    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &WeightVector) -> WeightVector {
        WeightVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &WeightVector) -> WeightVector {
        WeightVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> WeightVector {
        WeightVector(self.0.iter().map(|a| -a).collect())
    }

    pub fn scaled(&self, k: i32) -> WeightVector {
        WeightVector(self.0.iter().map(|a| a * k).collect())
    }

    /// Euclidean product of the stored coordinates.
    pub fn dot(&self, other: &WeightVector) -> i64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a as i64 * b as i64)
            .sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Root {
    pub vector: WeightVector,
    pub parity: Parity,
}

/// Linear condition `sum coeffs[i] * c[i] == 0` on the stored coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constraint {
    pub coeffs: Vec<i32>,
}

impl Constraint {
    pub fn holds(&self, v: &WeightVector) -> bool {
        self.coeffs
            .iter()
            .zip(v.coords())
            .map(|(&a, &b)| a as i64 * b as i64)
            .sum::<i64>()
            == 0
    }
}

const NO_SUM: u16 = u16::MAX;

/// The nonzero roots of one algebra with its distinguished simple roots and
/// the integer expansion of every root over them.
///
/// Roots are kept in canonical (lexicographic) order; everything else in the
/// crate refers to roots by their index in that order.
#[derive(Clone, Debug)]
pub struct RootSystem {
    algebra: Algebra,
    rank: usize,
    ambient_dim: usize,
    scale: i32,
    roots: Vec<Root>,
    simple: Vec<usize>,
    constraints: Vec<Constraint>,
    expansions: Vec<Vec<i32>>,
    index: HashMap<WeightVector, usize>,
    negation: Vec<usize>,
    sums: Vec<u16>,
}

impl RootSystem {
    pub fn new(algebra: Algebra) -> RootSystem {
        build::construct(algebra)
    }

    /// Process-wide cached instance.
    pub fn shared(algebra: Algebra) -> &'static RootSystem {
        static CACHE: [OnceLock<RootSystem>; 8] = [
            OnceLock::new(),
            OnceLock::new(),
            OnceLock::new(),
            OnceLock::new(),
            OnceLock::new(),
            OnceLock::new(),
            OnceLock::new(),
            OnceLock::new(),
        ];
        let slot = Algebra::ALL.iter().position(|&a| a == algebra).unwrap();
        CACHE[slot].get_or_init(|| RootSystem::new(algebra))
    }

    /// Assembles a system from raw parts, sorting the roots canonically and
    /// computing expansions and lookup tables. Panics if the data is not a
    /// valid root system; constructors only feed it fixed tables.
    fn assemble(
        algebra: Algebra,
        ambient_dim: usize,
        scale: i32,
        mut roots: Vec<Root>,
        simple_vectors: Vec<WeightVector>,
        constraints: Vec<Constraint>,
    ) -> RootSystem {
        roots.sort_by(|a, b| a.vector.cmp(&b.vector));
        roots.dedup_by(|a, b| a.vector == b.vector);
        let index: HashMap<WeightVector, usize> = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.vector.clone(), i))
            .collect();
        let simple: Vec<usize> = simple_vectors
            .iter()
            .map(|v| *index.get(v).expect("simple root must be a root"))
            .collect();
        let n = roots.len();
        let negation: Vec<usize> = roots
            .iter()
            .map(|r| *index.get(&r.vector.neg()).expect("roots closed under negation"))
            .collect();
        let mut sums = vec![NO_SUM; n * n];
        for i in 0..n {
            for j in 0..n {
                if let Some(&k) = index.get(&roots[i].vector.add(&roots[j].vector)) {
                    sums[i * n + j] = k as u16;
                }
            }
        }
        let mut sys = RootSystem {
            algebra,
            rank: simple.len(),
            ambient_dim,
            scale,
            roots,
            simple,
            constraints,
            expansions: Vec::new(),
            index,
            negation,
            sums,
        };
        sys.expansions = (0..n)
            .map(|i| {
                sys.expand_in_simple(&sys.roots[i].vector)
                    .expect("every root expands integrally")
            })
            .collect();
        sys
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Stored coordinate = scale * rational coordinate.
    pub fn scale(&self) -> i32 {
        self.scale
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &Root {
        &self.roots[i]
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.roots[i].parity
    }

    pub fn even_count(&self) -> usize {
        self.roots.iter().filter(|r| r.parity == Parity::Even).count()
    }

    pub fn odd_count(&self) -> usize {
        self.len() - self.even_count()
    }

    /// Indices of the distinguished simple roots, in labeling order.
    pub fn simple_indices(&self) -> &[usize] {
        &self.simple
    }

    pub fn simple_roots(&self) -> Vec<&Root> {
        self.simple.iter().map(|&i| &self.roots[i]).collect()
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    /// Integer coefficients of root `i` over the simple roots.
    pub fn expansion(&self, i: usize) -> &[i32] {
        &self.expansions[i]
    }

    pub fn index_of(&self, v: &WeightVector) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn negation(&self, i: usize) -> usize {
        self.negation[i]
    }

    /// Index of root `i` + root `j`, if that sum is a root.
    #[inline]
    pub fn sum(&self, i: usize, j: usize) -> Option<usize> {
        let k = self.sums[i * self.roots.len() + j];
        (k != NO_SUM).then_some(k as usize)
    }

    /// Index of root `i` - root `j`, if that difference is a root.
    #[inline]
    pub fn difference(&self, i: usize, j: usize) -> Option<usize> {
        self.sum(i, self.negation[j])
    }

    /// Dimension of the whole algebra: roots plus Cartan.
    pub fn dimension(&self) -> usize {
        self.roots.len() + self.rank
    }

    /// Exact expansion of an arbitrary weight over the simple roots.
    pub fn expand_in_simple(&self, v: &WeightVector) -> Result<Vec<i32>> {
        let columns: Vec<Vec<i64>> = self
            .simple
            .iter()
            .map(|&s| self.roots[s].vector.coords().iter().map(|&c| c as i64).collect())
            .collect();
        let rhs: Vec<i64> = v.coords().iter().map(|&c| c as i64).collect();
        let bad = || Error::Expansion {
            system: self.algebra.id().to_string(),
            root: self.format_vector(v),
        };
        let solution = linalg::solve_columns(&columns, &rhs).ok_or_else(bad)?;
        solution
            .iter()
            .map(|q| linalg::as_integer(q).map(|x| x as i32).ok_or_else(bad))
            .collect()
    }

    /// Expansion of the root at `root` (which must belong to the system).
    pub fn expand_root(&self, root: &Root) -> Result<Vec<i32>> {
        let i = self
            .index_of(&root.vector)
            .ok_or_else(|| Error::NotARoot(self.format_vector(&root.vector)))?;
        Ok(self.expansions[i].clone())
    }

    /// Weight with the given simple-root coefficients.
    pub fn combine(&self, coeffs: &[i32]) -> WeightVector {
        let mut out = vec![0; self.ambient_dim];
        for (&c, &s) in coeffs.iter().zip(&self.simple) {
            for (o, &x) in out.iter_mut().zip(self.roots[s].vector.coords()) {
                *o += c * x;
            }
        }
        WeightVector(out)
    }

    pub fn is_positive(&self, i: usize) -> bool {
        self.expansions[i].iter().all(|&c| c >= 0)
    }

    /// The highest root: positive, and no simple root can be added to it.
    pub fn highest_root(&self) -> Result<usize> {
        if self.algebra.is_super() {
            return Err(Error::LieOnly("highest_root"));
        }
        let found: Vec<usize> = (0..self.len())
            .filter(|&i| self.is_positive(i))
            .filter(|&i| self.simple.iter().all(|&s| self.sum(i, s).is_none()))
            .collect();
        assert_eq!(found.len(), 1, "highest root is unique");
        Ok(found[0])
    }

    /// Inner product of two roots (stored coordinates); Lie algebras only.
    pub fn inner(&self, i: usize, j: usize) -> Result<i64> {
        if self.algebra.is_super() {
            return Err(Error::LieOnly("inner product"));
        }
        Ok(self.roots[i].vector.dot(&self.roots[j].vector))
    }

    /// Cartan integer `<alpha_j, alpha_i^vee>` for simple roots `i`, `j`
    /// (positions in the simple-root list). Lie algebras only.
    pub fn cartan_entry(&self, i: usize, j: usize) -> Result<i32> {
        let (a, b) = (self.simple[i], self.simple[j]);
        let num = 2 * self.inner(a, b)?;
        let den = self.inner(a, a)?;
        Ok((num / den) as i32)
    }

    pub fn cartan_matrix(&self) -> Result<Vec<Vec<i32>>> {
        (0..self.rank)
            .map(|i| (0..self.rank).map(|j| self.cartan_entry(i, j)).collect())
            .collect()
    }

    // --- symbolic notation ----------------------------------------------

    /// Coordinate symbols in storage order (`e1`..`e8`, `d` for delta).
    pub fn symbols(&self) -> &'static [&'static str] {
        build::symbols(self.algebra)
    }

    /// Converts rational coefficients over [`symbols`](Self::symbols) to a
    /// stored weight.
    pub fn from_coefficients(&self, coeffs: &[Q]) -> Result<WeightVector> {
        notation::from_coefficients(self, coeffs)
    }

    /// Parses an expression like `e1-e3`, `1/2(d+e1-e2+e3)` or `-2e1`.
    pub fn parse(&self, expr: &str) -> Result<WeightVector> {
        notation::parse(self, expr)
    }

    pub fn format_vector(&self, v: &WeightVector) -> String {
        notation::format(self, v)
    }

    pub fn format_root(&self, i: usize) -> String {
        self.format_vector(&self.roots[i].vector)
    }
}

/// Builds the root system for an identifier such as `"E6"` or `"F4S"`.
pub fn build_root_system(name: &str) -> Result<RootSystem> {
    Ok(RootSystem::new(name.parse()?))
}
