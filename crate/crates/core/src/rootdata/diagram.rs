//! Dynkin diagrams and their extensions.
//!
//! Lie diagrams are computed from inner products of the simple roots (and of
//! the lowest root for node 0). Superalgebra diagrams come from a small fixed
//! catalog; the catalog's adjacency is checked against root addition in tests.

use serde::{Deserialize, Serialize};

use super::{Algebra, RootSystem, WeightVector};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NodeKind {
    Even,
    /// Odd root whose double is a root.
    Odd,
    /// Odd root whose double is not a root.
    Isotropic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramNode {
    pub label: usize,
    pub kind: NodeKind,
    pub root: WeightVector,
}

/// Bond between two nodes. `arrow_to` names the node the arrow points at
/// (the shorter root) when the bond is multiple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bond {
    pub multiplicity: u8,
    pub arrow_to: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramEdge {
    pub a: usize,
    pub b: usize,
    pub bond: Bond,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramData {
    pub system: Algebra,
    pub extended: bool,
    pub nodes: Vec<DiagramNode>,
    pub edges: Vec<DiagramEdge>,
}

impl DiagramData {
    pub fn node(&self, label: usize) -> Option<&DiagramNode> {
        self.nodes.iter().find(|n| n.label == label)
    }

    /// Number of edges at `label`.
    pub fn degree(&self, label: usize) -> usize {
        self.edges.iter().filter(|e| e.a == label || e.b == label).count()
    }

    /// The diagram with the given nodes (and their edges) removed.
    pub fn delete_nodes(&self, labels: &[usize]) -> DiagramData {
        DiagramData {
            system: self.system,
            extended: self.extended,
            nodes: self.nodes.iter().filter(|n| !labels.contains(&n.label)).cloned().collect(),
            edges: self
                .edges
                .iter()
                .filter(|e| !labels.contains(&e.a) && !labels.contains(&e.b))
                .cloned()
                .collect(),
        }
    }

    /// Connected components as sorted label lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen: Vec<usize> = Vec::new();
        let mut out = Vec::new();
        for n in &self.nodes {
            if seen.contains(&n.label) {
                continue;
            }
            let mut comp = vec![n.label];
            let mut i = 0;
            while i < comp.len() {
                let cur = comp[i];
                for e in &self.edges {
                    let other = if e.a == cur {
                        e.b
                    } else if e.b == cur {
                        e.a
                    } else {
                        continue;
                    };
                    if !comp.contains(&other) {
                        comp.push(other);
                    }
                }
                i += 1;
            }
            seen.extend(&comp);
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

fn node_kind(sys: &RootSystem, v: &WeightVector) -> NodeKind {
    let i = sys.index_of(v).expect("diagram node is a root");
    if !sys.parity(i).is_odd() {
        NodeKind::Even
    } else if sys.index_of(&v.scaled(2)).is_some() {
        NodeKind::Odd
    } else {
        NodeKind::Isotropic
    }
}

fn lie_edges(nodes: &[DiagramNode]) -> Vec<DiagramEdge> {
    let mut edges = Vec::new();
    for (x, p) in nodes.iter().enumerate() {
        for q in &nodes[x + 1..] {
            let ab = p.root.dot(&q.root);
            if ab == 0 {
                continue;
            }
            let aa = p.root.dot(&p.root);
            let bb = q.root.dot(&q.root);
            let multiplicity = (4 * ab * ab / (aa * bb)) as u8;
            let arrow_to = match aa.cmp(&bb) {
                std::cmp::Ordering::Less => Some(p.label),
                std::cmp::Ordering::Greater => Some(q.label),
                std::cmp::Ordering::Equal => None,
            };
            edges.push(DiagramEdge {
                a: p.label,
                b: q.label,
                bond: Bond { multiplicity, arrow_to },
            });
        }
    }
    edges
}

/// (a, b, multiplicity, arrow target) for each superalgebra diagram,
/// extension edges included. Edges touching an isotropic node are drawn
/// single.
type CatalogEdge = (usize, usize, u8, Option<usize>);

fn super_catalog(algebra: Algebra) -> (&'static [i64], &'static [CatalogEdge]) {
    // lowest root in doubled symbol units, then the edge list
    match algebra {
        Algebra::D21A => (&[-4, 0, 0], &[(1, 2, 1, None), (1, 3, 1, None), (0, 1, 1, None)]),
        Algebra::G3 => (&[0, 0, 0, -4], &[(1, 2, 1, None), (2, 3, 3, Some(2)), (0, 1, 1, None)]),
        Algebra::F4S => (
            &[-2, 0, 0, 0],
            &[(1, 2, 1, None), (2, 3, 2, Some(2)), (3, 4, 1, None), (0, 1, 1, None)],
        ),
        _ => unreachable!("catalog covers superalgebras only"),
    }
}

pub fn diagram(sys: &RootSystem, extended: bool) -> DiagramData {
    let mut nodes: Vec<DiagramNode> = sys
        .simple_roots()
        .iter()
        .enumerate()
        .map(|(i, r)| DiagramNode {
            label: i + 1,
            kind: node_kind(sys, &r.vector),
            root: r.vector.clone(),
        })
        .collect();
    let edges = if sys.algebra().is_super() {
        let (lowest, catalog) = super_catalog(sys.algebra());
        if extended {
            let root = super::build::store(sys.algebra(), lowest).expect("catalog root is representable");
            nodes.insert(
                0,
                DiagramNode {
                    label: 0,
                    kind: node_kind(sys, &root),
                    root,
                },
            );
        }
        catalog
            .iter()
            .filter(|(a, b, _, _)| extended || (*a != 0 && *b != 0))
            .map(|&(a, b, multiplicity, arrow_to)| DiagramEdge {
                a,
                b,
                bond: Bond { multiplicity, arrow_to },
            })
            .collect()
    } else {
        if extended {
            let theta = sys.highest_root().expect("Lie algebra");
            nodes.insert(
                0,
                DiagramNode {
                    label: 0,
                    kind: NodeKind::Even,
                    root: sys.root(theta).vector.neg(),
                },
            );
        }
        lie_edges(&nodes)
    };
    DiagramData {
        system: sys.algebra(),
        extended,
        nodes,
        edges,
    }
}
