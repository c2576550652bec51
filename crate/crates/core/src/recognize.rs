//! Identification of the level-0 subalgebra from its roots.
//!
//! A closed, negation-stable root subset splits into components under the
//! relation "a + b is in the set or a + b = 0". Purely even components are
//! identified by their Cartan matrix, obtained from root strings, so no
//! bilinear form is needed. Components with odd roots are looked up in a
//! small catalog keyed by rank, root counts and the types of the even part.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::rootdata::{RootSystem, WeightVector};

/// Weight used to break ties when choosing positive roots inside a subset:
/// coordinates read as digits in base 64 (stored coordinates are < 32 in
/// absolute value, so this is nonzero on every nonzero vector).
pub fn positivity(v: &WeightVector) -> i64 {
    v.coords().iter().fold(0i64, |acc, &c| acc * 64 + c as i64)
}

/// One simple summand of the level-0 subalgebra.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ComponentType {
    pub label: String,
    pub rank: usize,
    pub even_roots: usize,
    pub odd_roots: usize,
    /// The label is taken on trust from root counts alone (the odd
    /// D(2,1;alpha) parameter cannot be read off root data).
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub asserted: bool,
}

impl ComponentType {
    pub fn is_super(&self) -> bool {
        self.odd_roots > 0
    }

    /// (even, odd) dimension: roots plus the component's Cartan part.
    pub fn dims(&self) -> (usize, usize) {
        (self.even_roots + self.rank, self.odd_roots)
    }

    pub fn dim(&self) -> usize {
        self.even_roots + self.odd_roots + self.rank
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubalgebraType {
    /// Simple summands; central factors are counted by `central_rank`.
    pub components: Vec<ComponentType>,
    pub central_rank: usize,
}

impl SubalgebraType {
    pub fn labels(&self) -> Vec<String> {
        let mut out = vec!["C".to_string(); self.central_rank];
        out.extend(self.components.iter().map(|c| c.label.clone()));
        out
    }

    /// Multiset of labels (including `C`), sorted.
    pub fn label_multiset(&self) -> Vec<String> {
        let mut v = self.labels();
        v.sort();
        v
    }

    pub fn dims(&self) -> (usize, usize) {
        self.components.iter().fold((self.central_rank, 0), |(e, o), c| {
            let (ce, co) = c.dims();
            (e + ce, o + co)
        })
    }

    pub fn rank(&self) -> usize {
        self.central_rank + self.components.iter().map(|c| c.rank).sum::<usize>()
    }

    pub fn asserted(&self) -> bool {
        self.components.iter().any(|c| c.asserted)
    }
}

impl fmt::Display for SubalgebraType {
    /// ASCII rendering: `C` for a one-dimensional center, ` + ` for a direct
    /// sum, e.g. `C + sl(2) + sl(5)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels = self.labels();
        if labels.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&labels.join(" + "))
    }
}

/// Parses a label such as `C + sl(2) + sl(5)` into its sorted multiset.
pub fn parse_label(label: &str) -> Vec<String> {
    let mut v: Vec<String> = label.split(" + ").map(|s| s.trim().to_string()).collect();
    v.sort();
    v
}

fn check_closed(sys: &RootSystem, set: &BTreeSet<usize>) -> Result<()> {
    if set.iter().all(|&i| set.contains(&sys.negation(i))) {
        Ok(())
    } else {
        Err(Error::NotNegationClosed)
    }
}

/// Positive roots of the subset that are not a sum of two positive roots of
/// the subset, in canonical order.
pub fn subsystem_simple_roots(sys: &RootSystem, roots: &[usize]) -> Result<Vec<usize>> {
    let set: BTreeSet<usize> = roots.iter().copied().collect();
    check_closed(sys, &set)?;
    let positive: Vec<usize> = set
        .iter()
        .copied()
        .filter(|&i| positivity(&sys.root(i).vector) > 0)
        .collect();
    let decomposable = |r: usize| {
        positive
            .iter()
            .any(|&a| sys.difference(r, a).is_some_and(|b| positive.contains(&b)))
    };
    Ok(positive.iter().copied().filter(|&r| !decomposable(r)).collect())
}

fn components(sys: &RootSystem, set: &BTreeSet<usize>) -> Vec<Vec<usize>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &start in set {
        if seen.contains(&start) {
            continue;
        }
        let mut comp = vec![start];
        seen.insert(start);
        let mut k = 0;
        while k < comp.len() {
            let a = comp[k];
            for &b in set {
                if seen.contains(&b) {
                    continue;
                }
                let linked = sys.negation(a) == b || sys.sum(a, b).is_some_and(|s| set.contains(&s));
                if linked {
                    seen.insert(b);
                    comp.push(b);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

fn span_rank(sys: &RootSystem, roots: &[usize]) -> usize {
    let rows: Vec<Vec<i64>> = roots
        .iter()
        .map(|&i| sys.root(i).vector.coords().iter().map(|&c| c as i64).collect())
        .collect();
    linalg::rank(&rows)
}

/// Cartan matrix `A[i][j] = -max{k : a_j + k a_i in set}` of a simple
/// system inside `set`.
fn string_cartan(sys: &RootSystem, simple: &[usize], set: &BTreeSet<usize>) -> Vec<Vec<i32>> {
    simple
        .iter()
        .map(|&ai| {
            simple
                .iter()
                .map(|&aj| {
                    if ai == aj {
                        return 2;
                    }
                    let mut k = 0;
                    let mut cur = aj;
                    while let Some(next) = sys.sum(cur, ai).filter(|n| set.contains(n)) {
                        k += 1;
                        cur = next;
                    }
                    -k
                })
                .collect()
        })
        .collect()
}

/// Names a connected Cartan matrix of rank `n` with `roots` roots.
fn name_cartan(a: &[Vec<i32>], roots: usize) -> Option<String> {
    let n = a.len();
    let degree = |i: usize| (0..n).filter(|&j| j != i && a[i][j] != 0).count();
    let multiple = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find(|&(i, j)| i != j && a[i][j] * a[j][i] >= 2);
    let label = match (n, roots) {
        (_, r) if r == n * (n + 1) && multiple.is_none() => format!("sl({})", n + 1),
        (2, 8) => "so(5)".into(),
        (2, 12) => "G2".into(),
        (4, 48) => "F4".into(),
        (6, 72) if multiple.is_none() => "E6".into(),
        (7, 126) if multiple.is_none() => "E7".into(),
        (8, 240) if multiple.is_none() => "E8".into(),
        (_, r) if n >= 4 && r == 2 * n * (n - 1) && multiple.is_none() => format!("so({})", 2 * n),
        (_, r) if n >= 3 && r == 2 * n * n => {
            // the short end of the double bond has the -2 in its row
            let (i, j) = multiple?;
            let short = if a[i][j] == -2 { i } else { j };
            if degree(short) == 1 {
                format!("so({})", 2 * n + 1)
            } else {
                format!("sp({})", 2 * n)
            }
        }
        _ => return None,
    };
    Some(label)
}

fn identify_even(sys: &RootSystem, comp: &[usize]) -> Result<ComponentType> {
    let set: BTreeSet<usize> = comp.iter().copied().collect();
    let simple = subsystem_simple_roots(sys, comp)?;
    let cartan = string_cartan(sys, &simple, &set);
    let label = name_cartan(&cartan, comp.len()).ok_or_else(|| {
        Error::UnknownFingerprint(format!("even rank {} with {} roots, cartan {:?}", simple.len(), comp.len(), cartan))
    })?;
    Ok(ComponentType {
        label,
        rank: simple.len(),
        even_roots: comp.len(),
        odd_roots: 0,
        asserted: false,
    })
}

/// (rank, even roots, odd roots, even-part labels) -> label, asserted.
type SuperCatalogEntry = (usize, usize, usize, &'static [&'static str], &'static str, bool);

const SUPER_CATALOG: &[SuperCatalogEntry] = &[
    (1, 0, 2, &[], "sl(1|1)", false),
    (1, 2, 2, &["sl(2)"], "osp(1|2)", false),
    (2, 2, 4, &["sl(2)"], "sl(1|2)", false),
    (2, 4, 6, &["sl(2)", "sl(2)"], "osp(3|2)", false),
    (3, 6, 6, &["sl(3)"], "sl(3|1)", false),
    (3, 8, 8, &["so(5)"], "osp(2|4)", false),
    (3, 6, 8, &["sl(2)", "sl(2)", "sl(2)"], "D(2,1;-1/3)", true),
];

fn identify_super(sys: &RootSystem, comp: &[usize]) -> Result<ComponentType> {
    let even: Vec<usize> = comp.iter().copied().filter(|&i| !sys.parity(i).is_odd()).collect();
    let odd_roots = comp.len() - even.len();
    let rank = span_rank(sys, comp);
    let mut even_labels: Vec<String> = identify_type(sys, &even)?
        .components
        .into_iter()
        .map(|c| c.label)
        .collect();
    even_labels.sort();
    let hit = SUPER_CATALOG.iter().find(|(r, e, o, labels, _, _)| {
        *r == rank && *e == even.len() && *o == odd_roots && labels.iter().copied().eq(even_labels.iter().map(String::as_str))
    });
    let &(_, _, _, _, label, asserted) = hit.ok_or_else(|| {
        Error::UnknownFingerprint(format!(
            "super rank {rank} with {} even + {odd_roots} odd roots, even part {even_labels:?}",
            even.len()
        ))
    })?;
    Ok(ComponentType {
        label: label.to_string(),
        rank,
        even_roots: even.len(),
        odd_roots,
        asserted,
    })
}

/// Identifies the subalgebra spanned by the Cartan subalgebra of `sys` and
/// the root vectors of `roots`.
pub fn identify_type(sys: &RootSystem, roots: &[usize]) -> Result<SubalgebraType> {
    let set: BTreeSet<usize> = roots.iter().copied().collect();
    check_closed(sys, &set)?;
    let mut comps = Vec::new();
    for comp in components(sys, &set) {
        let has_odd = comp.iter().any(|&i| sys.parity(i).is_odd());
        comps.push(if has_odd {
            identify_super(sys, &comp)?
        } else {
            identify_even(sys, &comp)?
        });
    }
    comps.sort_by(|a, b| (!a.is_super(), a.dim(), &a.label).cmp(&(!b.is_super(), b.dim(), &b.label)));
    let used: usize = comps.iter().map(|c| c.rank).sum();
    Ok(SubalgebraType {
        components: comps,
        central_rank: sys.rank() - used,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::{analyze, GradingSpec};
    use crate::rootdata::Algebra;

    fn level0(a: Algebra, marks: &[i32]) -> (&'static RootSystem, Vec<usize>) {
        let g = analyze(&GradingSpec::new(a, marks.to_vec()).unwrap());
        (g.system(), g.level(0).to_vec())
    }

    #[test]
    fn positivity_is_nonzero_on_roots() {
        for a in Algebra::ALL {
            let s = RootSystem::shared(a);
            for r in s.roots() {
                assert_ne!(positivity(&r.vector), 0);
                assert_eq!(positivity(&r.vector), -positivity(&r.vector.neg()));
            }
        }
    }

    #[test]
    fn simple_roots_of_small_subsets() {
        let (s, l0) = level0(Algebra::G2, &[1, 0]);
        let simple = subsystem_simple_roots(s, &l0).unwrap();
        assert_eq!(simple.len(), 1);
        assert_eq!(s.format_root(simple[0]), "e1-e2");
        assert!(subsystem_simple_roots(s, &[]).unwrap().is_empty());
        assert!(matches!(subsystem_simple_roots(s, &[simple[0]]), Err(Error::NotNegationClosed)));

        let (s, l0) = level0(Algebra::F4, &[1, 0, 0, 0]);
        let simple = subsystem_simple_roots(s, &l0).unwrap();
        let set: BTreeSet<usize> = l0.iter().copied().collect();
        let a = string_cartan(s, &simple, &set);
        assert_eq!(name_cartan(&a, l0.len()).as_deref(), Some("sp(6)"));
    }

    #[test]
    fn whole_systems_are_recognized() {
        for (a, label) in [
            (Algebra::G2, "G2"),
            (Algebra::F4, "F4"),
            (Algebra::E6, "E6"),
            (Algebra::E7, "E7"),
            (Algebra::E8, "E8"),
        ] {
            let s = RootSystem::shared(a);
            let all: Vec<usize> = (0..s.len()).collect();
            let t = identify_type(s, &all).unwrap();
            assert_eq!(t.to_string(), label);
        }
    }

    #[test]
    fn level_zero_examples() {
        let id = |a, m: &[i32]| {
            let (s, l0) = level0(a, m);
            identify_type(s, &l0).unwrap()
        };
        let t = id(Algebra::F4, &[1, 0, 0, 0]);
        assert_eq!(t.to_string(), "C + sp(6)");
        assert_eq!(t.dims(), (22, 0));
        assert_eq!(id(Algebra::F4, &[0, 0, 0, 1]).to_string(), "C + so(7)");
        assert_eq!(id(Algebra::E6, &[0, 1, 0, 0, 0, 0]).to_string(), "C + sl(2) + sl(5)");
        assert_eq!(id(Algebra::E6, &[1, 0, 0, 0, 1, 0]).to_string(), "C + C + so(8)");
        assert_eq!(id(Algebra::E7, &[1, 0, 0, 0, 0, 0, 0]).to_string(), "C + E6");
        assert_eq!(id(Algebra::E8, &[0, 0, 0, 0, 0, 0, 1, 0]).to_string(), "C + so(14)");
        assert_eq!(id(Algebra::G3, &[1, 0, 0]).to_string(), "C + G2");
        assert_eq!(id(Algebra::D21A, &[0, 1, 0]).to_string(), "C + sl(1|2)");
        assert_eq!(id(Algebra::D21A, &[-2, 1, 1]).to_string(), "C + C + sl(1|1)");
        let t = id(Algebra::F4S, &[-1, 0, 1, 0]);
        assert_eq!(t.to_string(), "C + D(2,1;-1/3)");
        assert_eq!(t.dims(), (10, 8));
    }

    #[test]
    fn single_pair_is_sl2() {
        let s = RootSystem::shared(Algebra::E7);
        let i = s.simple_indices()[3];
        let t = identify_type(s, &[i, s.negation(i)]).unwrap();
        assert_eq!(t.to_string(), "C + C + C + C + C + C + sl(2)");
        assert_eq!(t.central_rank, 6);
    }

    #[test]
    fn unknown_fingerprint_is_an_error() {
        let s = RootSystem::shared(Algebra::F4S);
        let all: Vec<usize> = (0..s.len()).collect();
        assert!(matches!(identify_type(s, &all), Err(Error::UnknownFingerprint(_))));
        let even: Vec<usize> = (0..s.len()).filter(|&i| !s.parity(i).is_odd()).collect();
        assert_eq!(identify_type(s, &even).unwrap().to_string(), "sl(2) + so(7)");
        // a lone odd pair is sl(1|1)
        let odd = s.simple_indices()[0];
        assert_eq!(identify_type(s, &[odd, s.negation(odd)]).unwrap().components[0].label, "sl(1|1)");
    }

    #[test]
    fn label_parsing() {
        assert_eq!(parse_label("C + sl(2) + sl(5)"), vec!["C", "sl(2)", "sl(5)"]);
    }
}
