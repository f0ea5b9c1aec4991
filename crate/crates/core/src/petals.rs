//! Graphs with petals (pendant double edges on a simple base) and their
//! line graphs. Petal edges share both endpoints, so the two edges of a
//! petal are never adjacent in the line graph; that single exception is
//! what makes these line graphs "generalized".

use crate::{Error, Graph};

/// Simple graph plus a multiset of petals, each recorded by its attachment
/// vertex. The pendant leaf of each petal is implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphWithPetals {
    base: Graph,
    petals: Vec<usize>,
}

/// Which edge of the original graph a line-graph vertex stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum EdgeLabel {
    /// Edge of the simple base, endpoints in increasing order.
    Simple(usize, usize),
    /// One of the two parallel edges of petal `petal`, attached at `attach`.
    Petal {
        petal: usize,
        attach: usize,
        half: u8,
    },
}

impl EdgeLabel {
    /// True when the edge has an endpoint of degree 1 in its host.
    pub fn is_pendant_in(&self, f: &GraphWithPetals) -> bool {
        match *self {
            EdgeLabel::Simple(u, v) => f.total_degree(u) == 1 || f.total_degree(v) == 1,
            EdgeLabel::Petal { .. } => false,
        }
    }
}

impl GraphWithPetals {
    pub fn new(base: Graph, mut petals: Vec<usize>) -> Result<Self, Error> {
        if let Some(&v) = petals.iter().find(|&&v| v >= base.n()) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: base.n(),
            });
        }
        petals.sort_unstable();
        Ok(GraphWithPetals { base, petals })
    }

    pub fn simple(base: Graph) -> Self {
        GraphWithPetals {
            base,
            petals: Vec::new(),
        }
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    /// Attachment vertices, one entry per petal, ascending.
    pub fn petals(&self) -> &[usize] {
        &self.petals
    }

    /// Degree of a base vertex counting petal edges (each petal adds 2).
    pub fn total_degree(&self, v: usize) -> usize {
        self.base.degree(v) + 2 * self.petals.iter().filter(|&&p| p == v).count()
    }

    /// Labels of all edges: base edges in sorted order, then the two halves
    /// of each petal.
    pub fn edge_labels(&self) -> Vec<EdgeLabel> {
        let mut labels: Vec<EdgeLabel> = self
            .base
            .edges()
            .into_iter()
            .map(|(u, v)| EdgeLabel::Simple(u, v))
            .collect();
        for (pi, &attach) in self.petals.iter().enumerate() {
            for half in 0..2 {
                labels.push(EdgeLabel::Petal {
                    petal: pi,
                    attach,
                    half,
                });
            }
        }
        labels
    }

    /// Expand to an explicit multigraph (petal leaves appended after the
    /// base vertices, in petal order).
    pub fn to_multigraph(&self) -> crate::Multigraph {
        let n = self.base.n() + self.petals.len();
        let mut m = crate::Multigraph::new(n);
        for (u, v) in self.base.edges() {
            m.set_multiplicity(u, v, 1);
        }
        for (pi, &attach) in self.petals.iter().enumerate() {
            m.set_multiplicity(attach, self.base.n() + pi, 2);
        }
        m
    }
}

fn endpoints_shared(a: &EdgeLabel, b: &EdgeLabel) -> usize {
    match (a, b) {
        (EdgeLabel::Simple(u1, v1), EdgeLabel::Simple(u2, v2)) => {
            usize::from(u1 == u2) + usize::from(u1 == v2) + usize::from(v1 == u2) + usize::from(v1 == v2)
        }
        (EdgeLabel::Simple(u, v), EdgeLabel::Petal { attach, .. })
        | (EdgeLabel::Petal { attach, .. }, EdgeLabel::Simple(u, v)) => {
            usize::from(u == attach) + usize::from(v == attach)
        }
        (
            EdgeLabel::Petal {
                petal: p1,
                attach: a1,
                ..
            },
            EdgeLabel::Petal {
                petal: p2,
                attach: a2,
                ..
            },
        ) => {
            if p1 == p2 {
                2 // same petal: both the attachment and the leaf
            } else {
                usize::from(a1 == a2)
            }
        }
    }
}

/// Line graph of a graph with petals: one vertex per edge, adjacency
/// exactly when the edges share a single vertex.
pub fn line_graph(f: &GraphWithPetals) -> (Graph, Vec<EdgeLabel>) {
    let labels = f.edge_labels();
    let mut g = Graph::new(labels.len());
    for i in 0..labels.len() {
        for j in i + 1..labels.len() {
            if endpoints_shared(&labels[i], &labels[j]) == 1 {
                g.add_edge(i, j).unwrap();
            }
        }
    }
    (g, labels)
}
