//! End-to-end verification against the embedded reference data.

use rayon::prelude::*;
use serde::Serialize;

use crate::d21a::{self, D21Params};
use crate::equivalence::{classify, ClassificationEntry};
use crate::error::Result;
use crate::golden::{self, compare_rows, GoldenRow};
use crate::grading::{check_generation, enumerate_gradings, grade_decomposition};
use crate::rootdata::{Algebra, RootSystem};

/// Parameters at which the D(2,1;alpha) suite is run by default.
pub const ALPHAS: [&str; 3] = ["1", "-1/3", "2/3"];

/// Published root counts (total, even, odd).
pub fn expected_root_counts(a: Algebra) -> (usize, usize, usize) {
    match a {
        Algebra::G2 => (12, 12, 0),
        Algebra::F4 => (48, 48, 0),
        Algebra::E6 => (72, 72, 0),
        Algebra::E7 => (126, 126, 0),
        Algebra::E8 => (240, 240, 0),
        Algebra::D21A => (14, 6, 8),
        Algebra::G3 => (28, 14, 14),
        Algebra::F4S => (36, 20, 16),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub group: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(group: &'static str, name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
        Check {
            group,
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
    /// Number of classification entries per system, in the order of
    /// [`Algebra::ALL`].
    pub row_counts: Vec<(Algebra, usize)>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// 0 when every check passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }
}

fn describe(e: &ClassificationEntry) -> String {
    format!(
        "{} l={} {}+{}/{}+{}/{}+{}",
        e.g0_label, e.length, e.dim_g0.0, e.dim_g0.1, e.dim_g1.0, e.dim_g1.1, e.dim_g2.0, e.dim_g2.1
    )
}

fn describe_row(r: &GoldenRow) -> String {
    format!(
        "{} l={} {}+{}/{}+{}/{}+{}",
        r.g0, r.length, r.dim_g0.0, r.dim_g0.1, r.dim_g1.0, r.dim_g1.1, r.dim_g2.0, r.dim_g2.1
    )
}

/// Root counts and dimension identity.
pub fn root_checks(a: Algebra) -> Check {
    let sys = RootSystem::shared(a);
    let (n, even, odd) = expected_root_counts(a);
    let got = (sys.len(), sys.even_count(), sys.odd_count());
    let ok = got == (n, even, odd) && sys.len() + sys.rank() == a.dimension();
    Check::new(
        "roots",
        format!("{a} root counts"),
        ok,
        format!("{} roots ({} even, {} odd), rank {}", got.0, got.1, got.2, sys.rank()),
    )
}

/// Classification rows against the golden rows for one system.
pub fn classification_checks(a: Algebra, golden: &[GoldenRow]) -> Result<(Vec<Check>, usize)> {
    let entries = classify(a)?;
    let rows: Vec<GoldenRow> = golden.iter().filter(|r| r.system == a).cloned().collect();
    let cmp = compare_rows(&entries, &rows);
    let mut detail = Vec::new();
    for r in &cmp.missing {
        detail.push(format!("missing {}", describe_row(r)));
    }
    for e in &cmp.unexpected {
        detail.push(format!("unexpected {}", describe(e)));
    }
    let mut checks = vec![Check::new(
        "classification",
        format!("{a} rows ({} computed, {} published)", entries.len(), rows.len()),
        cmp.passed() && entries.len() == rows.len(),
        detail.join("; "),
    )];
    // consistency flags: computed consistent entries must be exactly the
    // published consistent rows
    if a.is_super() {
        let flagged: Vec<String> = entries.iter().filter(|e| e.consistent).map(describe).collect();
        let published: Vec<String> = rows
            .iter()
            .filter(|r| r.consistent == Some(true))
            .map(describe_row)
            .collect();
        let mut f = flagged.clone();
        let mut p = published.clone();
        f.sort();
        p.sort();
        checks.push(Check::new(
            "consistency",
            format!("{a} consistent gradings"),
            f == p,
            format!("computed [{}], published [{}]", flagged.join(", "), published.join(", ")),
        ));
    }
    Ok((checks, entries.len()))
}

/// Grading axioms on every admissible grading of `a`.
pub fn axiom_check(a: Algebra) -> Check {
    let sys = RootSystem::shared(a);
    let mut failures = Vec::new();
    for g in enumerate_gradings(a) {
        let mut fresh = grade_decomposition(&g.spec);
        let generation = check_generation(&mut fresh).passed();
        let additive = (0..sys.len()).all(|i| {
            g.grade(sys.negation(i)) == -g.grade(i)
                && (0..sys.len()).all(|j| sys.sum(i, j).is_none_or(|k| g.grade(k) == g.grade(i) + g.grade(j)))
        });
        let mirrored = (-2..=2).all(|k| {
            let mut neg: Vec<usize> = g.level(k).iter().map(|&i| sys.negation(i)).collect();
            neg.sort_unstable();
            neg == g.level(-k)
        });
        let total: usize = (-2..=2).map(|k| g.level(k).len()).sum();
        let dimension = total + sys.rank() == a.dimension();
        let self_conjugate = crate::grading::all_modules(&g)
            .iter()
            .any(|m| m.roots.iter().any(|&r| m.roots.contains(&sys.negation(r))));
        if !(generation && additive && mirrored && dimension && !self_conjugate) {
            failures.push(format!("{:?}", g.spec.marks));
        }
    }
    Check::new("axioms", format!("{a} grading axioms"), failures.is_empty(), failures.join(" "))
}

/// Structure suite for one value of alpha.
pub fn d21a_checks(alpha: &str) -> Vec<Check> {
    let name = |what: &str| format!("D(2,1;{alpha}) {what}");
    let params: D21Params = match alpha.parse() {
        Ok(p) => p,
        Err(e) => return vec![Check::new("d21a", name("build"), false, e.to_string())],
    };
    let t = match d21a::build(&params) {
        Ok(t) => t,
        Err(e) => return vec![Check::new("d21a", name("build"), false, e.to_string())],
    };
    let odd = t.basis.iter().filter(|b| b.parity.is_odd()).count();
    let jac = d21a::check_super_jacobi(&t);
    let rel = d21a::verify_relations(&t);
    let failed: Vec<String> = rel.iter().filter(|c| !c.holds).map(|c| c.name.clone()).collect();
    let mut out = vec![
        Check::new(
            "d21a",
            name("dimension"),
            t.dim() == 17 && odd == 8,
            format!("{} even + {odd} odd", t.dim() - odd),
        ),
        Check::new(
            "d21a",
            name("super Jacobi"),
            jac.is_empty(),
            format!("{} violations", jac.len()),
        ),
        Check::new(
            "d21a",
            name("relations"),
            failed.is_empty() && rel.len() == 55,
            if failed.is_empty() {
                format!("{} instances hold", rel.len())
            } else {
                failed.join("; ")
            },
        ),
    ];
    match d21a::cross_check(&t, &[0, 1, 0]) {
        Ok(r) => out.push(Check::new(
            "d21a",
            name("root skeleton oracle"),
            r.passed(),
            format!(
                "{} pairs, {} triples, {} mismatches",
                r.pairs_checked,
                r.triples_checked,
                r.mismatches.len()
            ),
        )),
        Err(e) => out.push(Check::new("d21a", name("root skeleton oracle"), false, e.to_string())),
    }
    out
}

/// Runs everything against caller-supplied golden rows.
pub fn verify_with(golden: &[GoldenRow]) -> VerifyReport {
    let per_system: Vec<(Algebra, Vec<Check>, usize)> = Algebra::ALL
        .par_iter()
        .map(|&a| {
            let mut checks = vec![root_checks(a)];
            let count = match classification_checks(a, golden) {
                Ok((c, n)) => {
                    checks.extend(c);
                    n
                }
                Err(e) => {
                    checks.push(Check::new("classification", format!("{a} rows"), false, e.to_string()));
                    0
                }
            };
            checks.push(axiom_check(a));
            (a, checks, count)
        })
        .collect();

    let mut report = VerifyReport::default();
    for (a, checks, n) in per_system {
        report.checks.extend(checks);
        report.row_counts.push((a, n));
    }
    for c in golden::listing_checks() {
        report.checks.push(match golden::run_listing_check(&c) {
            Ok(o) => Check::new("listings", c.name, o.passed, o.detail),
            Err(e) => Check::new("listings", c.name, false, e.to_string()),
        });
    }
    for (name, a, marks, n) in golden::module_count_checks() {
        let got = golden::module_count(a, &marks);
        let ok = got.as_ref().is_ok_and(|&g| g == n);
        let detail = match got {
            Ok(g) => format!("{g} components, published {n}"),
            Err(e) => e.to_string(),
        };
        report.checks.push(Check::new("modules", format!("{name} module count"), ok, detail));
    }
    let d21: Vec<Vec<Check>> = ALPHAS.par_iter().map(|a| d21a_checks(a)).collect();
    report.checks.extend(d21.into_iter().flatten());
    report
}

/// Runs everything against the embedded tables.
pub fn verify_all() -> VerifyReport {
    let golden: Vec<GoldenRow> = golden::table2().into_iter().chain(golden::table4()).collect();
    verify_with(&golden)
}
