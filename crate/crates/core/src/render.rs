//! Serialization and text rendering: JSON (sorted keys), TSV, aligned text
//! tables and Graphviz DOT.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::d21a::{self, StructureTable};
use crate::equivalence::{ClassificationEntry, Dims};
use crate::error::{Error, Result};
use crate::grading::{all_modules, relation_skeleton, GradedDecomposition, GradingSpec, Intermediate, Rejection};
use crate::recognize::identify_type;
use crate::rootdata::{DiagramData, NodeKind};
use crate::rootdata::{Algebra, Parity, RootSystem};
use crate::verify::VerifyReport;

/// Pretty JSON text. `serde_json::Value` keeps object keys sorted.
pub fn json_text<T: Serialize>(value: &T) -> Result<String> {
    let v: Value = serde_json::to_value(value).map_err(|e| Error::Io(e.to_string()))?;
    let mut s = serde_json::to_string_pretty(&v).map_err(|e| Error::Io(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

/// Left-aligned columns separated by two spaces; `right` marks columns
/// that are right-aligned.
pub fn align(rows: &[Vec<String>], right: &[bool]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let width: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for r in rows {
        let mut line = String::new();
        for (c, cell) in r.iter().enumerate() {
            if c > 0 {
                line.push_str("  ");
            }
            let pad = width[c] - cell.chars().count();
            if right.get(c).copied().unwrap_or(false) {
                line.push_str(&" ".repeat(pad));
                line.push_str(cell);
            } else {
                line.push_str(cell);
                line.push_str(&" ".repeat(pad));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn tsv(rows: &[Vec<String>]) -> String {
    rows.iter().map(|r| r.join("\t") + "\n").collect()
}

fn dims(d: Dims, is_super: bool) -> String {
    if is_super {
        format!("{}+{}", d.0, d.1)
    } else {
        d.0.to_string()
    }
}

fn marks_text(m: &[i32]) -> String {
    m.iter().map(i32::to_string).collect::<Vec<_>>().join(",")
}

fn parity_text(p: Parity) -> &'static str {
    if p.is_odd() {
        "odd"
    } else {
        "even"
    }
}

// --- classification -----------------------------------------------------

pub fn classification_json(entries: &[ClassificationEntry]) -> Result<String> {
    json_text(&entries)
}

pub fn classification_tsv(entries: &[ClassificationEntry]) -> String {
    let mut rows = vec![[
        "system", "g0", "length", "dim_g0", "dim_g1", "dim_g2", "consistent", "marks", "modules", "class_size",
    ]
    .map(String::from)
    .to_vec()];
    for e in entries {
        rows.push(vec![
            e.system.id().to_string(),
            e.g0_label.clone(),
            e.length.to_string(),
            dims(e.dim_g0, true),
            dims(e.dim_g1, true),
            dims(e.dim_g2, true),
            if e.consistent { "yes" } else { "no" }.to_string(),
            marks_text(&e.representative_marks),
            e.module_count.to_string(),
            e.class_size.to_string(),
        ]);
    }
    tsv(&rows)
}

/// Table with columns `algebra | G0 | l | dim G0 | dim G1 | dim G2`; the
/// algebra name appears on the first row of its block only.
pub fn classification_text(entries: &[ClassificationEntry]) -> String {
    let mut rows = vec![["algebra", "G0", "l", "dim G0", "dim G1", "dim G2"].map(String::from).to_vec()];
    let mut last = None;
    for e in entries {
        let s = e.system.is_super();
        rows.push(vec![
            if last == Some(e.system) { String::new() } else { e.system.display_name().to_string() },
            e.g0_label.clone(),
            e.length.to_string(),
            dims(e.dim_g0, s),
            dims(e.dim_g1, s),
            dims(e.dim_g2, s),
        ]);
        last = Some(e.system);
    }
    align(&rows, &[false, false, true, true, true, true])
}

// --- root systems -------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootJson {
    pub label: String,
    pub coords: Vec<i32>,
    pub parity: Parity,
    pub expansion: Vec<i32>,
}

/// Serialized root system. `coords` are integer coordinates equal to
/// `scale` times the coefficients over `symbols` (up to the sum-zero
/// projection used for G2 and G(3)).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystemJson {
    pub name: Algebra,
    pub rank: usize,
    pub ambient_dim: usize,
    pub scale: i32,
    pub symbols: Vec<String>,
    pub simple_roots: Vec<Vec<i32>>,
    pub roots: Vec<RootJson>,
}

impl RootSystemJson {
    pub fn from_system(sys: &RootSystem) -> RootSystemJson {
        RootSystemJson {
            name: sys.algebra(),
            rank: sys.rank(),
            ambient_dim: sys.ambient_dim(),
            scale: sys.scale(),
            symbols: sys.symbols().iter().map(|s| s.to_string()).collect(),
            simple_roots: sys.simple_roots().iter().map(|r| r.vector.coords().to_vec()).collect(),
            roots: (0..sys.len())
                .map(|i| RootJson {
                    label: sys.format_root(i),
                    coords: sys.root(i).vector.coords().to_vec(),
                    parity: sys.parity(i),
                    expansion: sys.expansion(i).to_vec(),
                })
                .collect(),
        }
    }

    /// Rebuilds the named system and checks that it serializes to `self`.
    pub fn to_system(&self) -> Result<&'static RootSystem> {
        let sys = RootSystem::shared(self.name);
        if RootSystemJson::from_system(sys) != *self {
            return Err(Error::Notation {
                input: self.name.id().to_string(),
                reason: "serialized root data differs from the built system".into(),
            });
        }
        Ok(sys)
    }
}

pub fn roots_json(sys: &RootSystem) -> Result<String> {
    json_text(&RootSystemJson::from_system(sys))
}

pub fn roots_tsv(sys: &RootSystem) -> String {
    let mut rows = vec![["system", "index", "root", "parity", "coords", "expansion"].map(String::from).to_vec()];
    for i in 0..sys.len() {
        rows.push(vec![
            sys.algebra().id().to_string(),
            i.to_string(),
            sys.format_root(i),
            parity_text(sys.parity(i)).to_string(),
            marks_text(sys.root(i).vector.coords()),
            marks_text(sys.expansion(i)),
        ]);
    }
    tsv(&rows)
}

pub fn roots_text(sys: &RootSystem) -> String {
    let a = sys.algebra();
    let mut out = format!(
        "{}: rank {}, {} roots ({} even, {} odd), dimension {}\n",
        a.display_name(),
        sys.rank(),
        sys.len(),
        sys.even_count(),
        sys.odd_count(),
        a.dimension()
    );
    out.push_str("simple roots:\n");
    let mut rows = Vec::new();
    for (k, &i) in sys.simple_indices().iter().enumerate() {
        rows.push(vec![
            format!("  alpha{}", k + 1),
            sys.format_root(i),
            parity_text(sys.parity(i)).to_string(),
        ]);
    }
    out.push_str(&align(&rows, &[]));
    out.push_str("roots:\n");
    let mut rows = Vec::new();
    for i in 0..sys.len() {
        rows.push(vec![
            format!("  {}", sys.format_root(i)),
            parity_text(sys.parity(i)).to_string(),
            format!("({})", marks_text(sys.expansion(i))),
        ]);
    }
    out.push_str(&align(&rows, &[]));
    out
}

// --- gradings -----------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelJson {
    pub grade: i32,
    pub even: usize,
    pub odd: usize,
    pub roots: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleJson {
    pub level: i32,
    pub even: usize,
    pub odd: usize,
    pub roots: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradingJson {
    pub system: Algebra,
    pub marks: Vec<i32>,
    pub admissible: bool,
    pub length: u8,
    pub consistent: bool,
    pub g0: Option<String>,
    pub rejections: Vec<Rejection>,
    pub levels: Vec<LevelJson>,
    pub modules: Vec<ModuleJson>,
}

impl GradingJson {
    pub fn from_grading(g: &GradedDecomposition) -> GradingJson {
        let sys = g.system();
        let names = |v: &[usize]| v.iter().map(|&i| sys.format_root(i)).collect::<Vec<_>>();
        GradingJson {
            system: g.spec.system,
            marks: g.spec.marks.clone(),
            admissible: g.admissible(),
            length: g.length(),
            consistent: g.consistent,
            g0: identify_type(sys, g.level(0)).ok().map(|t| t.to_string()),
            rejections: g.rejections.clone(),
            levels: (-2..=2)
                .map(|k| {
                    let (even, odd) = g.dims(k);
                    LevelJson {
                        grade: k,
                        even,
                        odd,
                        roots: names(g.level(k)),
                    }
                })
                .collect(),
            modules: all_modules(g)
                .into_iter()
                .map(|m| ModuleJson {
                    level: m.level,
                    even: m.even,
                    odd: m.odd,
                    roots: names(&m.roots),
                })
                .collect(),
        }
    }

    /// Recomputes the grading from `system` and `marks` and checks that it
    /// serializes to `self`.
    pub fn to_grading(&self) -> Result<GradedDecomposition> {
        let g = crate::grading::analyze(&GradingSpec::new(self.system, self.marks.clone())?);
        if GradingJson::from_grading(&g) != *self {
            return Err(Error::Notation {
                input: marks_text(&self.marks),
                reason: "serialized grading differs from the recomputed one".into(),
            });
        }
        Ok(g)
    }
}

pub fn grading_json(g: &GradedDecomposition) -> Result<String> {
    json_text(&GradingJson::from_grading(g))
}

pub fn grading_tsv(g: &GradedDecomposition) -> String {
    let sys = g.system();
    let mut rows = vec![["grade", "root", "parity"].map(String::from).to_vec()];
    for k in -2..=2 {
        for &i in g.level(k) {
            rows.push(vec![k.to_string(), sys.format_root(i), parity_text(sys.parity(i)).to_string()]);
        }
    }
    tsv(&rows)
}

pub fn grading_text(g: &GradedDecomposition) -> String {
    let j = GradingJson::from_grading(g);
    let s = g.spec.system.is_super();
    let mut out = String::new();
    let _ = writeln!(out, "{} marks ({})", g.spec.system.display_name(), marks_text(&g.spec.marks));
    let _ = writeln!(out, "admissible: {}", if j.admissible { "yes" } else { "no" });
    for r in &j.rejections {
        let _ = writeln!(out, "  rejected: {r}");
    }
    let _ = writeln!(out, "length: {}", j.length);
    let _ = writeln!(out, "consistent: {}", if j.consistent { "yes" } else { "no" });
    if let Some(t) = &j.g0 {
        let _ = writeln!(out, "G0: {t}");
    }
    let dims_line: Vec<String> = [0, 1, 2].iter().map(|&k| dims(g.dims(k), s)).collect();
    let _ = writeln!(out, "dims G0 / G1 / G2: {}", dims_line.join(" / "));
    for l in &j.levels {
        if l.grade == 0 {
            continue;
        }
        let _ = writeln!(out, "G{:+} ({}): {}", l.grade, dims((l.even, l.odd), s), l.roots.join(", "));
    }
    out
}

pub fn modules_text(g: &GradedDecomposition) -> String {
    let j = GradingJson::from_grading(g);
    let s = g.spec.system.is_super();
    let mut rows = vec![["level", "dim", "roots"].map(String::from).to_vec()];
    for m in &j.modules {
        rows.push(vec![format!("{:+}", m.level), dims((m.even, m.odd), s), m.roots.join(", ")]);
    }
    format!("{} G0-module components\n{}", j.modules.len(), align(&rows, &[true, true, false]))
}

pub fn modules_tsv(g: &GradedDecomposition) -> String {
    let j = GradingJson::from_grading(g);
    let mut rows = vec![["level", "even", "odd", "roots"].map(String::from).to_vec()];
    for m in &j.modules {
        rows.push(vec![m.level.to_string(), m.even.to_string(), m.odd.to_string(), m.roots.join(",")]);
    }
    tsv(&rows)
}

pub fn modules_json(g: &GradedDecomposition) -> Result<String> {
    json_text(&GradingJson::from_grading(g).modules)
}

#[derive(Serialize)]
struct SkeletonJson {
    pairs: Vec<PairJson>,
    triples: Vec<TripleJson>,
}

#[derive(Serialize)]
struct PairJson {
    left: String,
    right: String,
    target: Option<String>,
}

#[derive(Serialize)]
struct TripleJson {
    left: String,
    right: String,
    inner: String,
    operand: String,
    target: Option<String>,
}

fn skeleton(g: &GradedDecomposition) -> SkeletonJson {
    let sys = g.system();
    let n = |i: usize| sys.format_root(i);
    let sk = relation_skeleton(g);
    SkeletonJson {
        pairs: sk
            .pairs
            .iter()
            .map(|p| PairJson {
                left: n(p.left),
                right: n(p.right),
                target: p.target.map(n),
            })
            .collect(),
        triples: sk
            .triples
            .iter()
            .map(|t| TripleJson {
                left: n(t.left),
                right: n(t.right),
                inner: match t.inner {
                    Intermediate::Cartan => "h".to_string(),
                    Intermediate::Root(r) => n(r),
                },
                operand: n(t.operand),
                target: t.target.map(n),
            })
            .collect(),
    }
}

pub fn relations_json(g: &GradedDecomposition) -> Result<String> {
    json_text(&skeleton(g))
}

pub fn relations_tsv(g: &GradedDecomposition) -> String {
    let sk = skeleton(g);
    let mut rows = vec![["kind", "left", "right", "inner", "operand", "target"].map(String::from).to_vec()];
    let t = |x: &Option<String>| x.clone().unwrap_or_else(|| "0".into());
    for p in &sk.pairs {
        rows.push(vec!["pair".into(), p.left.clone(), p.right.clone(), String::new(), String::new(), t(&p.target)]);
    }
    for x in &sk.triples {
        rows.push(vec![
            "triple".into(),
            x.left.clone(),
            x.right.clone(),
            x.inner.clone(),
            x.operand.clone(),
            t(&x.target),
        ]);
    }
    tsv(&rows)
}

/// Pairs as `[x, y] -> target` and triples as `[[x, y], z] -> target`,
/// where `0` means the bracket is forced to vanish by root addition.
pub fn relations_text(g: &GradedDecomposition) -> String {
    let sk = skeleton(g);
    let t = |x: &Option<String>| x.clone().unwrap_or_else(|| "0".into());
    let mut out = format!("{} quadratic, {} triple\n", sk.pairs.len(), sk.triples.len());
    for p in &sk.pairs {
        let _ = writeln!(out, "[{}, {}] -> {}", p.left, p.right, t(&p.target));
    }
    for x in &sk.triples {
        let _ = writeln!(out, "[[{}, {}], {}] -> {}", x.left, x.right, x.operand, t(&x.target));
    }
    out
}

// --- diagrams -----------------------------------------------------------

/// Graphviz DOT. Nodes are labeled 1..rank (0 for the extension node);
/// isotropic odd nodes are gray, non-isotropic odd nodes black.
pub fn diagram_dot(d: &DiagramData) -> String {
    let mut out = String::new();
    let name = format!("{}{}", d.system.id(), if d.extended { "_extended" } else { "" });
    let _ = writeln!(out, "graph \"{name}\" {{");
    let _ = writeln!(out, "  node [shape=circle];");
    for n in &d.nodes {
        let style = match n.kind {
            NodeKind::Even => String::new(),
            NodeKind::Isotropic => ", style=filled, fillcolor=gray, kind=isotropic".into(),
            NodeKind::Odd => ", style=filled, fillcolor=black, fontcolor=white, kind=odd".into(),
        };
        let _ = writeln!(out, "  n{} [label=\"{}\"{style}];", n.label, n.label);
    }
    for e in &d.edges {
        let mut attrs = format!("multiplicity={}", e.bond.multiplicity);
        if e.bond.multiplicity > 1 {
            let _ = write!(attrs, ", label=\"{}\"", e.bond.multiplicity);
        }
        if let Some(t) = e.bond.arrow_to {
            let _ = write!(attrs, ", arrow_to=\"n{t}\"");
        }
        let _ = writeln!(out, "  n{} -- n{} [{attrs}];", e.a, e.b);
    }
    out.push_str("}\n");
    out
}

pub fn diagram_text(d: &DiagramData, sys: &RootSystem) -> String {
    let mut rows = vec![["node", "kind", "root"].map(String::from).to_vec()];
    for n in &d.nodes {
        let kind = match n.kind {
            NodeKind::Even => "even",
            NodeKind::Odd => "odd",
            NodeKind::Isotropic => "isotropic",
        };
        rows.push(vec![n.label.to_string(), kind.into(), sys.format_vector(&n.root)]);
    }
    let mut out = align(&rows, &[true, false, false]);
    for e in &d.edges {
        let arrow = e.bond.arrow_to.map(|t| format!(" (arrow to {t})")).unwrap_or_default();
        let _ = writeln!(out, "{} -- {}: {}{arrow}", e.a, e.b, e.bond.multiplicity);
    }
    out
}

// --- D(2,1;alpha) -------------------------------------------------------

pub fn d21a_json(t: &StructureTable) -> Result<String> {
    json_text(&d21a::to_json(t))
}

pub fn d21a_tsv(t: &StructureTable) -> String {
    let mut rows = vec![["i", "j", "k", "coeff"].map(String::from).to_vec()];
    for i in 0..t.dim() {
        for j in 0..t.dim() {
            for (k, c) in t.structure(i, j) {
                rows.push(vec![i.to_string(), j.to_string(), k.to_string(), d21a::format_q(c)]);
            }
        }
    }
    tsv(&rows)
}

pub fn d21a_text(t: &StructureTable) -> String {
    let mut out = format!("D(2,1;{}): dimension {}\n", d21a::format_q(&t.params.alpha), t.dim());
    let mut rows = vec![["index", "label", "cao", "parity", "grade", "scale"].map(String::from).to_vec()];
    for (i, b) in t.basis.iter().enumerate() {
        rows.push(vec![
            i.to_string(),
            b.label.clone(),
            b.cao.clone().unwrap_or_default(),
            parity_text(b.parity).into(),
            b.grade.to_string(),
            d21a::format_q(&t.normalization[i]),
        ]);
    }
    out.push_str(&align(&rows, &[true, false, false, false, true, true]));
    let checks = d21a::verify_relations(t);
    let held = checks.iter().filter(|c| c.holds).count();
    let _ = writeln!(out, "relations: {held}/{} hold", checks.len());
    for c in checks.iter().filter(|c| !c.holds) {
        let _ = writeln!(out, "  FAIL {}", c.name);
    }
    let _ = writeln!(out, "super Jacobi violations: {}", d21a::check_super_jacobi(t).len());
    out
}

// --- verification -------------------------------------------------------

pub fn verify_text(r: &VerifyReport) -> String {
    let mut rows = Vec::new();
    for c in &r.checks {
        rows.push(vec![
            if c.passed { "ok" } else { "FAIL" }.to_string(),
            c.group.to_string(),
            c.name.clone(),
            c.detail.clone(),
        ]);
    }
    let mut out = align(&rows, &[]);
    let counts: Vec<String> = r.row_counts.iter().map(|(a, n)| format!("{a} {n}")).collect();
    let _ = writeln!(out, "rows: {}", counts.join(", "));
    let failed = r.checks.iter().filter(|c| !c.passed).count();
    let _ = writeln!(out, "{} checks, {failed} failed", r.checks.len());
    out
}

pub fn verify_tsv(r: &VerifyReport) -> String {
    let mut rows = vec![["status", "group", "check", "detail"].map(String::from).to_vec()];
    for c in &r.checks {
        rows.push(vec![
            if c.passed { "ok" } else { "fail" }.into(),
            c.group.into(),
            c.name.clone(),
            c.detail.clone(),
        ]);
    }
    tsv(&rows)
}
