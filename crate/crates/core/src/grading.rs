//! Z-gradings induced by integer marks on the simple roots.
//!
//! A marks vector `m` assigns to each root the grade `m . expansion(root)`.
//! A grading is admissible when every grade lies in [-2, 2], level 1 is
//! nonempty and levels +-1 generate the rest of the algebra.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::rootdata::{Algebra, Parity, RootSystem};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GradingSpec {
    pub system: Algebra,
    pub marks: Vec<i32>,
}

impl GradingSpec {
    pub fn new(system: Algebra, marks: Vec<i32>) -> Result<GradingSpec> {
        let rank = RootSystem::shared(system).rank();
        if marks.len() != rank {
            return Err(Error::MarksLength {
                expected: rank,
                got: marks.len(),
            });
        }
        if let Some(&m) = marks.iter().find(|m| m.abs() > 2) {
            return Err(Error::MarkRange(m));
        }
        Ok(GradingSpec { system, marks })
    }

    pub fn negated(&self) -> GradingSpec {
        GradingSpec {
            system: self.system,
            marks: self.marks.iter().map(|m| -m).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum Rejection {
    /// Some root has |grade| > 2.
    GradeOverflow,
    /// Levels +-1 are empty.
    EmptyLevelOne,
    /// A level +-2 root is not a sum of two level +-1 roots.
    LevelTwoNotGenerated { root: usize },
    /// A level-0 root is not a difference of two level-1 roots.
    LevelZeroNotGenerated { root: usize },
    /// The level-1 roots do not span the weight space.
    LevelOneDoesNotSpan,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::GradeOverflow => f.write_str("grade overflow"),
            Rejection::EmptyLevelOne => f.write_str("empty G_{+-1}"),
            Rejection::LevelTwoNotGenerated { root } => {
                write!(f, "level-2 root #{root} is not a sum of level-1 roots")
            }
            Rejection::LevelZeroNotGenerated { root } => {
                write!(f, "level-0 root #{root} is not a difference of level-1 roots")
            }
            Rejection::LevelOneDoesNotSpan => f.write_str("level-1 roots do not span"),
        }
    }
}

/// The grading induced by a [`GradingSpec`]: grade of every root and the
/// level sets for grades -2..=2, as root indices in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDecomposition {
    pub spec: GradingSpec,
    pub grades: Vec<i32>,
    levels: [Vec<usize>; 5],
    pub consistent: bool,
    pub rejections: Vec<Rejection>,
}

impl GradedDecomposition {
    pub fn system(&self) -> &'static RootSystem {
        RootSystem::shared(self.spec.system)
    }

    /// Roots at grade `k` (empty outside -2..=2).
    pub fn level(&self, k: i32) -> &[usize] {
        if (-2..=2).contains(&k) {
            &self.levels[(k + 2) as usize]
        } else {
            &[]
        }
    }

    pub fn levels(&self) -> BTreeMap<i32, &[usize]> {
        (-2..=2).map(|k| (k, self.level(k))).collect()
    }

    /// 3 or 5.
    pub fn length(&self) -> u8 {
        if self.level(2).is_empty() {
            3
        } else {
            5
        }
    }

    pub fn admissible(&self) -> bool {
        self.rejections.is_empty()
    }

    /// (even, odd) dimension of level `k`; level 0 includes the Cartan.
    pub fn dims(&self, k: i32) -> (usize, usize) {
        let sys = self.system();
        let odd = self.level(k).iter().filter(|&&i| sys.parity(i).is_odd()).count();
        let even = self.level(k).len() - odd;
        if k == 0 {
            (even + sys.rank(), odd)
        } else {
            (even, odd)
        }
    }

    pub fn grade(&self, root: usize) -> i32 {
        self.grades[root]
    }
}

/// Evaluates the marks on every root. Overflow and empty level one are
/// recorded as rejections; generation is checked separately.
pub fn grade_decomposition(spec: &GradingSpec) -> GradedDecomposition {
    let sys = RootSystem::shared(spec.system);
    let grades: Vec<i32> = (0..sys.len())
        .map(|i| sys.expansion(i).iter().zip(&spec.marks).map(|(c, m)| c * m).sum())
        .collect();
    let mut levels: [Vec<usize>; 5] = Default::default();
    let mut rejections = Vec::new();
    for (i, &g) in grades.iter().enumerate() {
        if g.abs() > 2 {
            if rejections.is_empty() {
                rejections.push(Rejection::GradeOverflow);
            }
        } else {
            levels[(g + 2) as usize].push(i);
        }
    }
    if levels[3].is_empty() {
        rejections.push(Rejection::EmptyLevelOne);
    }
    let consistent = grades
        .iter()
        .enumerate()
        .all(|(i, g)| sys.parity(i).is_odd() == (g.rem_euclid(2) == 1));
    GradedDecomposition {
        spec: spec.clone(),
        grades,
        levels,
        consistent,
        rejections,
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenerationReport {
    pub level_two_generated: bool,
    pub level_zero_generated: bool,
    pub level_one_spans: bool,
    pub failures: Vec<Rejection>,
}

impl GenerationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that levels +-1 generate the algebra, at root level:
/// (a) each level +-2 root is a sum of two level +-1 roots (a root may be
/// doubled only if it is odd), (b) each level-0 root is a difference of two
/// level-1 roots, (c) level-1 roots span the weight space. Failures are
/// appended to `g.rejections`.
pub fn check_generation(g: &mut GradedDecomposition) -> GenerationReport {
    let sys = g.system();
    let in_level = |i: usize, k: i32| g.level(k).binary_search(&i).is_ok();
    let mut failures = Vec::new();

    for sign in [1, -1] {
        let one = g.level(sign);
        for &r in g.level(2 * sign) {
            let found = one.iter().any(|&a| {
                sys.difference(r, a)
                    .is_some_and(|b| in_level(b, sign) && (a != b || sys.parity(a).is_odd()))
            });
            if !found {
                failures.push(Rejection::LevelTwoNotGenerated { root: r });
            }
        }
    }
    let a_ok = failures.is_empty();

    let one = g.level(1);
    let before = failures.len();
    for &r in g.level(0) {
        // r = a - b with a, b at level 1, i.e. r - a = -b at level -1
        let found = one
            .iter()
            .any(|&a| sys.difference(r, a).is_some_and(|nb| in_level(sys.negation(nb), 1)));
        if !found {
            failures.push(Rejection::LevelZeroNotGenerated { root: r });
        }
    }
    let b_ok = failures.len() == before;

    let rows: Vec<Vec<i64>> = one
        .iter()
        .map(|&i| sys.root(i).vector.coords().iter().map(|&c| c as i64).collect())
        .collect();
    let c_ok = linalg::rank(&rows) == sys.rank();
    if !c_ok {
        failures.push(Rejection::LevelOneDoesNotSpan);
    }

    g.rejections.extend(failures.iter().cloned());
    GenerationReport {
        level_two_generated: a_ok,
        level_zero_generated: b_ok,
        level_one_spans: c_ok,
        failures,
    }
}

/// Grade evaluation followed by the generation check (when the grading is
/// otherwise admissible).
pub fn analyze(spec: &GradingSpec) -> GradedDecomposition {
    let mut g = grade_decomposition(spec);
    if g.admissible() {
        check_generation(&mut g);
    }
    g
}

/// A set of same-level roots connected under addition of level-0 roots: the
/// weight support of one simple G0-module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleComponent {
    pub level: i32,
    pub roots: Vec<usize>,
    pub even: usize,
    pub odd: usize,
}

pub fn decompose_modules(g: &GradedDecomposition, level: i32) -> Vec<ModuleComponent> {
    let sys = g.system();
    let members = g.level(level);
    let zero = g.level(0);
    let mut parent: Vec<usize> = (0..members.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    let pos: BTreeMap<usize, usize> = members.iter().enumerate().map(|(k, &i)| (i, k)).collect();
    for (k, &b) in members.iter().enumerate() {
        for &z in zero {
            if let Some(t) = sys.sum(b, z).and_then(|t| pos.get(&t)) {
                let (x, y) = (find(&mut parent, k), find(&mut parent, *t));
                if x != y {
                    parent[x] = y;
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (k, &i) in members.iter().enumerate() {
        groups.entry(find(&mut parent, k)).or_default().push(i);
    }
    let mut out: Vec<ModuleComponent> = groups
        .into_values()
        .map(|roots| {
            let odd = roots.iter().filter(|&&i| sys.parity(i) == Parity::Odd).count();
            ModuleComponent {
                level,
                even: roots.len() - odd,
                odd,
                roots,
            }
        })
        .collect();
    // members are in canonical order, so roots[0] is the least root
    out.sort_by(|a, b| (a.roots.len(), a.roots[0]).cmp(&(b.roots.len(), b.roots[0])));
    out
}

/// Components on every nonzero level, ordered by level.
pub fn all_modules(g: &GradedDecomposition) -> Vec<ModuleComponent> {
    [-2, -1, 1, 2].iter().flat_map(|&k| decompose_modules(g, k)).collect()
}

/// Counts gathered while sweeping all marks vectors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationStats {
    pub candidates: usize,
    pub grade_overflow: usize,
    pub empty_level_one: usize,
    pub generation_rejected: usize,
    pub admissible: usize,
}

/// Marks vectors swept for `system`: {0,1,2}^rank for Lie algebras (every
/// grading is Weyl-conjugate to a dominant one), {-2..2}^rank otherwise.
/// Lexicographic order.
pub fn candidate_marks(system: Algebra) -> Vec<Vec<i32>> {
    let rank = RootSystem::shared(system).rank();
    let values: Vec<i32> = if system.is_super() { (-2..=2).collect() } else { (0..=2).collect() };
    let mut out = vec![Vec::new()];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                values.iter().map(move |&v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    out
}

/// Every admissible grading of `system` (before deduplication), sorted by
/// marks, plus sweep statistics.
pub fn enumerate_with_stats(system: Algebra) -> (Vec<GradedDecomposition>, EnumerationStats) {
    let all: Vec<GradedDecomposition> = candidate_marks(system)
        .into_par_iter()
        .map(|marks| analyze(&GradingSpec { system, marks }))
        .collect();
    let mut stats = EnumerationStats {
        candidates: all.len(),
        ..Default::default()
    };
    for g in &all {
        match g.rejections.first() {
            None => stats.admissible += 1,
            Some(Rejection::GradeOverflow) => stats.grade_overflow += 1,
            Some(Rejection::EmptyLevelOne) => stats.empty_level_one += 1,
            Some(_) => stats.generation_rejected += 1,
        }
    }
    (all.into_iter().filter(GradedDecomposition::admissible).collect(), stats)
}

pub fn enumerate_gradings(system: Algebra) -> Vec<GradedDecomposition> {
    enumerate_with_stats(system).0
}

/// Root-level intermediate of a triple relation.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Intermediate {
    Root(usize),
    /// `a + b = 0`: the bracket lands in the Cartan subalgebra.
    Cartan,
}

/// `[x_a, x_b]` has weight `target` (`None`: not a root, so the bracket is 0).
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRelation {
    pub left: usize,
    pub right: usize,
    pub target: Option<usize>,
}

/// `[[x_a, x_b], x_c]` with `a` at level +1 and `b` at level -1.
///
/// With a root intermediate, `target` is the root `a+b+c` or `None`. With a
/// Cartan intermediate the result is a multiple of `x_c`, which root data
/// alone cannot decide to be nonzero; `target` is then `Some(c)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleRelation {
    pub left: usize,
    pub right: usize,
    pub inner: Intermediate,
    pub operand: usize,
    pub target: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationSkeleton {
    /// Pairs within levels +-1 whose bracket vanishes or lands at level +-2.
    pub pairs: Vec<PairRelation>,
    pub triples: Vec<TripleRelation>,
}

pub fn relation_skeleton(g: &GradedDecomposition) -> RelationSkeleton {
    let sys = g.system();
    let ops: Vec<usize> = {
        let mut v: Vec<usize> = g.level(-1).iter().chain(g.level(1)).copied().collect();
        v.sort_unstable();
        v
    };
    let mut pairs = Vec::new();
    for (x, &a) in ops.iter().enumerate() {
        for &b in &ops[x..] {
            if a == b && !sys.parity(a).is_odd() {
                continue;
            }
            if sys.negation(a) == b {
                continue;
            }
            match sys.sum(a, b) {
                None => pairs.push(PairRelation { left: a, right: b, target: None }),
                Some(t) if g.grades[t].abs() == 2 => pairs.push(PairRelation {
                    left: a,
                    right: b,
                    target: Some(t),
                }),
                Some(_) => {}
            }
        }
    }
    let mut triples = Vec::new();
    for &a in g.level(1) {
        for &b in g.level(-1) {
            let inner = if sys.negation(a) == b {
                Intermediate::Cartan
            } else if let Some(t) = sys.sum(a, b) {
                Intermediate::Root(t)
            } else {
                continue;
            };
            for &c in &ops {
                let target = match inner {
                    Intermediate::Cartan => Some(c),
                    Intermediate::Root(t) => sys.sum(t, c),
                };
                triples.push(TripleRelation {
                    left: a,
                    right: b,
                    inner,
                    operand: c,
                    target,
                });
            }
        }
    }
    RelationSkeleton { pairs, triples }
}

#[cfg(test)]
mod tests;
