//! Deduplication of gradings and the final classification.
//!
//! Lie algebras: every grading functional is moved to the dominant chamber
//! by simple reflections, then compared up to diagram automorphisms and
//! overall sign. Superalgebras: two gradings are identified when a linear
//! automorphism of the root system (parity preserving) carries one grade
//! function to the other or to its negative; the automorphism is searched
//! for explicitly over images of the simple roots.

use std::cmp::Reverse;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grading::{all_modules, enumerate_gradings, GradedDecomposition};
use crate::recognize::{identify_type, SubalgebraType};
use crate::rootdata::{Algebra, RootSystem};

const MAX_REFLECTIONS: usize = 100_000;

/// Moves a functional (marks on the simple roots) into the dominant chamber:
/// while some mark `m_i` is negative, reflect in `alpha_i`, which sends
/// `m_j` to `m_j - A_ij m_i`.
pub fn canonicalize_marks(sys: &RootSystem, marks: &[i32]) -> Result<Vec<i32>> {
    if sys.algebra().is_super() {
        return Err(Error::LieOnly("canonicalize_marks"));
    }
    if marks.len() != sys.rank() {
        return Err(Error::MarksLength {
            expected: sys.rank(),
            got: marks.len(),
        });
    }
    let a = sys.cartan_matrix()?;
    let mut m = marks.to_vec();
    for _ in 0..MAX_REFLECTIONS {
        let Some(i) = m.iter().position(|&x| x < 0) else {
            return Ok(m);
        };
        let mi = m[i];
        for j in 0..m.len() {
            m[j] -= a[i][j] * mi;
        }
    }
    Err(Error::NonTermination(MAX_REFLECTIONS))
}

/// Permutations `p` of the simple roots with `A[p(i)][p(j)] = A[i][j]`.
pub fn diagram_automorphisms(sys: &RootSystem) -> Result<Vec<Vec<usize>>> {
    let a = sys.cartan_matrix()?;
    let n = a.len();
    let mut out = Vec::new();
    let mut perm = Vec::with_capacity(n);
    fn extend(a: &[Vec<i32>], perm: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let n = a.len();
        let k = perm.len();
        if k == n {
            out.push(perm.clone());
            return;
        }
        for c in 0..n {
            if perm.contains(&c) || a[c][c] != a[k][k] {
                continue;
            }
            if (0..k).all(|i| a[perm[i]][c] == a[i][k] && a[c][perm[i]] == a[k][i]) {
                perm.push(c);
                extend(a, perm, out);
                perm.pop();
            }
        }
    }
    extend(&a, &mut perm, &mut out);
    Ok(out)
}

/// Canonical representative of the class of `marks` under the Weyl group,
/// diagram automorphisms and overall sign.
pub fn lie_class_key(sys: &RootSystem, marks: &[i32]) -> Result<Vec<i32>> {
    let neg: Vec<i32> = marks.iter().map(|m| -m).collect();
    let candidates = [canonicalize_marks(sys, marks)?, canonicalize_marks(sys, &neg)?];
    let autos = diagram_automorphisms(sys)?;
    let mut best: Option<Vec<i32>> = None;
    for d in &candidates {
        for p in &autos {
            let mut v = vec![0; d.len()];
            for (i, &x) in d.iter().enumerate() {
                v[p[i]] = x;
            }
            if best.as_ref().is_none_or(|b| v < *b) {
                best = Some(v);
            }
        }
    }
    Ok(best.expect("identity automorphism"))
}

/// Per-root data preserved by any root-system automorphism.
fn fingerprints(sys: &RootSystem) -> Vec<(bool, usize, bool)> {
    (0..sys.len())
        .map(|i| {
            let neighbours = (0..sys.len()).filter(|&j| sys.sum(i, j).is_some()).count();
            let doubles = sys.index_of(&sys.root(i).vector.scaled(2)).is_some();
            (sys.parity(i).is_odd(), neighbours, doubles)
        })
        .collect()
}

struct Search<'a> {
    sys: &'a RootSystem,
    prints: Vec<(bool, usize, bool)>,
    /// Allowed images for each simple root.
    allowed: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn compatible(&self, images: &[usize], cand: usize) -> bool {
        let sys = self.sys;
        let simple = sys.simple_indices();
        let k = images.len();
        images.iter().enumerate().all(|(i, &b)| {
            b != cand
                && sys.sum(simple[i], simple[k]).is_some() == sys.sum(b, cand).is_some()
                && sys.difference(simple[i], simple[k]).is_some() == sys.difference(b, cand).is_some()
        })
    }

    /// Maps every root through the linear map fixed by `images`; returns the
    /// permutation of root indices if it is a parity-preserving bijection.
    fn extend_to_roots(&self, images: &[usize]) -> Option<Vec<usize>> {
        let sys = self.sys;
        let dim = sys.ambient_dim();
        let mut perm = Vec::with_capacity(sys.len());
        let mut hit = vec![false; sys.len()];
        for i in 0..sys.len() {
            let mut v = vec![0i32; dim];
            for (&c, &b) in sys.expansion(i).iter().zip(images) {
                for (o, &x) in v.iter_mut().zip(sys.root(b).vector.coords()) {
                    *o += c * x;
                }
            }
            let j = sys.index_of(&crate::rootdata::WeightVector::new(v))?;
            if hit[j] || sys.parity(j) != sys.parity(i) || self.prints[j] != self.prints[i] {
                return None;
            }
            hit[j] = true;
            perm.push(j);
        }
        Some(perm)
    }

    fn run(&self, images: &mut Vec<usize>, found: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if images.len() == self.allowed.len() {
            return match self.extend_to_roots(images) {
                Some(perm) => found(&perm),
                None => false,
            };
        }
        for &cand in &self.allowed[images.len()] {
            if self.compatible(images, cand) {
                images.push(cand);
                let stop = self.run(images, found);
                images.pop();
                if stop {
                    return true;
                }
            }
        }
        false
    }
}

fn search<'a>(sys: &'a RootSystem, allowed_by_grade: Option<(&[i32], &[i32])>) -> Search<'a> {
    let prints = fingerprints(sys);
    let allowed = sys
        .simple_indices()
        .iter()
        .map(|&s| {
            (0..sys.len())
                .filter(|&c| prints[c] == prints[s])
                .filter(|&c| allowed_by_grade.is_none_or(|(g1, g2)| g2[c] == g1[s] || g2[c] == -g1[s]))
                .collect()
        })
        .collect();
    Search { sys, prints, allowed }
}

/// All linear automorphisms of the root system preserving parity, each
/// given as the induced permutation of root indices.
pub fn root_automorphisms(sys: &RootSystem) -> Vec<Vec<usize>> {
    let s = search(sys, None);
    let mut out = Vec::new();
    s.run(&mut Vec::new(), &mut |perm| {
        out.push(perm.to_vec());
        false
    });
    out
}

/// Root permutation realizing an isomorphism from `g1` to `g2` or to the
/// negative of `g2`, if one exists.
pub fn find_super_isomorphism(g1: &GradedDecomposition, g2: &GradedDecomposition) -> Option<Vec<usize>> {
    if g1.spec.system != g2.spec.system {
        return None;
    }
    let sys = g1.system();
    let sig = |g: &GradedDecomposition| -> Vec<(usize, usize)> { (-2..=2).map(|k| g.dims(k)).collect() };
    let mut flipped = sig(g2);
    flipped.reverse();
    if sig(g1) != sig(g2) && sig(g1) != flipped {
        return None;
    }
    let s = search(sys, Some((&g1.grades, &g2.grades)));
    let mut result = None;
    s.run(&mut Vec::new(), &mut |perm| {
        let ok = [1, -1]
            .iter()
            .any(|&sign| (0..perm.len()).all(|i| g2.grades[perm[i]] == sign * g1.grades[i]));
        if ok {
            result = Some(perm.to_vec());
        }
        ok
    });
    result
}

/// True when the two gradings of the same superalgebra are related by a
/// root-system automorphism, possibly composed with negation.
pub fn equivalent_super(g1: &GradedDecomposition, g2: &GradedDecomposition) -> bool {
    find_super_isomorphism(g1, g2).is_some()
}

/// Even/odd dimensions of a level as a pair.
pub type Dims = (usize, usize);

/// One row of the classification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationEntry {
    pub system: Algebra,
    pub g0_type: SubalgebraType,
    pub g0_label: String,
    pub length: u8,
    pub dim_g0: Dims,
    pub dim_g1: Dims,
    pub dim_g2: Dims,
    pub consistent: bool,
    pub representative_marks: Vec<i32>,
    pub module_count: usize,
    /// Number of enumerated gradings identified with this one.
    pub class_size: usize,
}

impl ClassificationEntry {
    fn from_grading(g: &GradedDecomposition, class_size: usize) -> Result<ClassificationEntry> {
        let g0_type = identify_type(g.system(), g.level(0))?;
        Ok(ClassificationEntry {
            system: g.spec.system,
            g0_label: g0_type.to_string(),
            g0_type,
            length: g.length(),
            dim_g0: g.dims(0),
            dim_g1: g.dims(1),
            dim_g2: g.dims(2),
            consistent: g.consistent,
            representative_marks: g.spec.marks.clone(),
            module_count: all_modules(g).len(),
            class_size,
        })
    }

    fn total(d: Dims) -> usize {
        d.0 + d.1
    }

    fn sort_key(&self) -> (Reverse<usize>, Reverse<usize>, u8, Vec<i32>) {
        (
            Reverse(Self::total(self.dim_g0)),
            Reverse(Self::total(self.dim_g1)),
            self.length,
            self.representative_marks.clone(),
        )
    }
}

/// Groups admissible gradings into classes; each class is a list of indices
/// into `gradings`, in enumeration order.
pub fn group_classes(system: Algebra, gradings: &[GradedDecomposition]) -> Result<Vec<Vec<usize>>> {
    let sys = RootSystem::shared(system);
    let mut classes: Vec<Vec<usize>> = Vec::new();
    if system.is_super() {
        for (i, g) in gradings.iter().enumerate() {
            match classes.iter_mut().find(|c| equivalent_super(&gradings[c[0]], g)) {
                Some(c) => c.push(i),
                None => classes.push(vec![i]),
            }
        }
    } else {
        let mut keys: Vec<Vec<i32>> = Vec::new();
        for (i, g) in gradings.iter().enumerate() {
            let key = lie_class_key(sys, &g.spec.marks)?;
            match keys.iter().position(|k| *k == key) {
                Some(p) => classes[p].push(i),
                None => {
                    keys.push(key);
                    classes.push(vec![i]);
                }
            }
        }
    }
    Ok(classes)
}

/// Full pipeline for one algebra: enumerate, deduplicate, recognize.
///
/// Entries are sorted by total dim G0 descending, then total dim G1
/// descending, then length, then representative marks.
pub fn classify(system: Algebra) -> Result<Vec<ClassificationEntry>> {
    let gradings = enumerate_gradings(system);
    let classes = group_classes(system, &gradings)?;
    let mut entries = classes
        .iter()
        .map(|c| ClassificationEntry::from_grading(&gradings[c[0]], c.len()))
        .collect::<Result<Vec<_>>>()?;
    entries.sort_by_key(ClassificationEntry::sort_key);
    Ok(entries)
}

#[cfg(test)]
mod tests;
