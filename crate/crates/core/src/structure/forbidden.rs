//! Forbidden-pattern scanners.
//!
//! `scan_forbidden_rooted` looks for any of the seven small rooted
//! multigraphs whose associated matrices have negative determinants. The
//! multi-edge patterns match as sub-multigraphs (multiplicity lower bounds)
//! except on the one displayed non-edge each of them relies on; the simple
//! path/cycle patterns match as exact induced shapes. Root constraints:
//! solid positions must be roots, hollow positions must not be, half-filled
//! positions are free. Under these rules every reported embedding has a
//! non-PSD associated submatrix.
//!
//! `is_line_graph` searches for the nine minimal forbidden induced
//! subgraphs of Beineke's characterization.

use serde::Serialize;

use crate::multigraph::RootedMultigraph;
use crate::Graph;

/// The seven rooted patterns, named by shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RootedPattern {
    /// Double edge with a rooted endpoint.
    DoubleEdgeRooted,
    /// Triple edge between two non-roots.
    TripleEdge,
    /// Induced path on three roots.
    RootPathThree,
    /// Double edge plus a pendant single edge at a non-root middle.
    DoubleEdgePendant,
    /// Two double edges sharing a vertex, closed by a single edge.
    TriangleTwoDoubles,
    /// Induced path on four vertices, second vertex rooted, third not.
    PathFourInnerRoot,
    /// Induced four-cycle with one rooted vertex and two forced non-roots.
    CycleFourRooted,
}

/// Which forbidden catalog a witness refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PatternId {
    Rooted(RootedPattern),
    /// One of the nine Beineke graphs, numbered 1..=9.
    Beineke(usize),
}

/// A located forbidden pattern: `embedding[i]` is the host vertex playing
/// pattern vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForbiddenWitness {
    pub pattern: PatternId,
    pub embedding: Vec<usize>,
}

const ALL_ROOTED_PATTERNS: [RootedPattern; 7] = [
    RootedPattern::DoubleEdgeRooted,
    RootedPattern::TripleEdge,
    RootedPattern::RootPathThree,
    RootedPattern::DoubleEdgePendant,
    RootedPattern::TriangleTwoDoubles,
    RootedPattern::PathFourInnerRoot,
    RootedPattern::CycleFourRooted,
];

/// First embedding of any of the seven rooted patterns, in pattern order
/// then lexicographic vertex order; `None` if the rooted multigraph is
/// clean.
pub fn scan_forbidden_rooted(gr: &RootedMultigraph) -> Option<ForbiddenWitness> {
    for pattern in ALL_ROOTED_PATTERNS {
        if let Some(embedding) = scan_one(gr, pattern) {
            return Some(ForbiddenWitness {
                pattern: PatternId::Rooted(pattern),
                embedding,
            });
        }
    }
    None
}

fn scan_one(gr: &RootedMultigraph, pattern: RootedPattern) -> Option<Vec<usize>> {
    let n = gr.base().n();
    let mult = |u: usize, v: usize| gr.base().multiplicity(u, v);
    let root = |v: usize| gr.is_root(v);
    match pattern {
        RootedPattern::DoubleEdgeRooted => {
            for u in 0..n {
                if !root(u) {
                    continue;
                }
                for v in 0..n {
                    if v != u && mult(u, v) >= 2 {
                        return Some(vec![u, v]);
                    }
                }
            }
            None
        }
        RootedPattern::TripleEdge => {
            for u in 0..n {
                for v in u + 1..n {
                    if mult(u, v) >= 3 && !root(u) && !root(v) {
                        return Some(vec![u, v]);
                    }
                }
            }
            None
        }
        RootedPattern::RootPathThree => {
            // Exact induced path u - m - w with all three rooted.
            for m in 0..n {
                if !root(m) {
                    continue;
                }
                for u in 0..n {
                    if u == m || !root(u) || mult(m, u) != 1 {
                        continue;
                    }
                    for w in u + 1..n {
                        if w != m && root(w) && mult(m, w) == 1 && mult(u, w) == 0 {
                            return Some(vec![u, m, w]);
                        }
                    }
                }
            }
            None
        }
        RootedPattern::DoubleEdgePendant => {
            // a = b (double), b - c single, a and c non-adjacent, b non-root.
            for b in 0..n {
                if root(b) {
                    continue;
                }
                for a in 0..n {
                    if a == b || mult(a, b) < 2 {
                        continue;
                    }
                    for c in 0..n {
                        if c != a && c != b && mult(b, c) >= 1 && mult(a, c) == 0 {
                            return Some(vec![a, b, c]);
                        }
                    }
                }
            }
            None
        }
        RootedPattern::TriangleTwoDoubles => {
            // a = b = c doubles, a - c exactly single. A heavier a-c edge can
            // make the submatrix PSD, so the single multiplicity is exact.
            for b in 0..n {
                for a in 0..n {
                    if a == b || mult(a, b) < 2 {
                        continue;
                    }
                    for c in a + 1..n {
                        if c != b && mult(b, c) >= 2 && mult(a, c) == 1 {
                            return Some(vec![a, b, c]);
                        }
                    }
                }
            }
            None
        }
        RootedPattern::PathFourInnerRoot => {
            // Exact induced path a - b - c - d, b rooted, c not.
            for b in 0..n {
                if !root(b) {
                    continue;
                }
                for c in 0..n {
                    if c == b || root(c) || mult(b, c) != 1 {
                        continue;
                    }
                    for a in 0..n {
                        if a == b || a == c || mult(a, b) != 1 || mult(a, c) != 0 {
                            continue;
                        }
                        for d in 0..n {
                            if d != a
                                && d != b
                                && d != c
                                && mult(c, d) == 1
                                && mult(b, d) == 0
                                && mult(a, d) == 0
                            {
                                return Some(vec![a, b, c, d]);
                            }
                        }
                    }
                }
            }
            None
        }
        RootedPattern::CycleFourRooted => {
            // Exact induced 4-cycle a - b - c - d - a, b rooted, c and d not.
            for b in 0..n {
                if !root(b) {
                    continue;
                }
                for a in 0..n {
                    if a == b || mult(a, b) != 1 {
                        continue;
                    }
                    for c in 0..n {
                        if c == a || c == b || root(c) || mult(b, c) != 1 || mult(a, c) != 0 {
                            continue;
                        }
                        for d in 0..n {
                            if d != a
                                && d != b
                                && d != c
                                && !root(d)
                                && mult(c, d) == 1
                                && mult(a, d) == 1
                                && mult(b, d) == 0
                            {
                                return Some(vec![a, b, c, d]);
                            }
                        }
                    }
                }
            }
            None
        }
    }
}

/// Edge lists of the nine minimal forbidden induced subgraphs for line
/// graphs, in the usual order (the claw first).
pub fn beineke_graphs() -> Vec<Graph> {
    let data: [(usize, &[(usize, usize)]); 9] = [
        (4, &[(0, 1), (0, 2), (0, 3)]),
        (5, &[(1, 2), (0, 2), (0, 3), (1, 3), (0, 4), (2, 4), (3, 4)]),
        (
            5,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (0, 3),
                (0, 4),
                (1, 3),
                (2, 3),
                (2, 4),
                (3, 4),
            ],
        ),
        (6, &[(0, 2), (1, 2), (0, 3), (0, 4), (4, 5), (2, 3), (3, 4)]),
        (
            6,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (2, 3),
                (2, 4),
                (3, 4),
                (2, 5),
                (3, 5),
                (4, 5),
            ],
        ),
        (
            6,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (0, 3),
                (1, 3),
                (2, 3),
                (2, 4),
                (3, 4),
                (2, 5),
                (3, 5),
                (4, 5),
            ],
        ),
        (
            6,
            &[
                (0, 2),
                (1, 2),
                (0, 3),
                (0, 4),
                (4, 5),
                (2, 3),
                (3, 4),
                (1, 5),
            ],
        ),
        (
            6,
            &[
                (0, 2),
                (1, 2),
                (0, 3),
                (0, 4),
                (4, 5),
                (2, 3),
                (3, 4),
                (0, 1),
                (3, 5),
            ],
        ),
        (
            6,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 1),
            ],
        ),
    ];
    data.iter()
        .map(|&(n, edges)| Graph::from_edges(n, edges).unwrap())
        .collect()
}

/// Induced-subgraph embedding search: assigns pattern vertices in order,
/// host candidates ascending, preserving adjacency and non-adjacency.
pub fn induced_subgraph_embedding(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    let k = pattern.n();
    if k > host.n() {
        return None;
    }
    let mut assign: Vec<usize> = Vec::with_capacity(k);
    fn go(host: &Graph, pattern: &Graph, assign: &mut Vec<usize>) -> bool {
        let i = assign.len();
        if i == pattern.n() {
            return true;
        }
        'cand: for h in 0..host.n() {
            if assign.contains(&h) {
                continue;
            }
            if host.degree(h) < pattern.degree(i) {
                continue;
            }
            for j in 0..i {
                if pattern.has_edge(j, i) != host.has_edge(assign[j], h) {
                    continue 'cand;
                }
            }
            assign.push(h);
            if go(host, pattern, assign) {
                return true;
            }
            assign.pop();
        }
        false
    }
    if go(host, pattern, &mut assign) {
        Some(assign)
    } else {
        None
    }
}

/// Beineke recognition: `None` iff the graph is a line graph of a simple
/// graph; otherwise an induced embedding of one of the nine obstructions.
pub fn is_line_graph(g: &Graph) -> Option<ForbiddenWitness> {
    for (idx, pattern) in beineke_graphs().iter().enumerate() {
        if let Some(embedding) = induced_subgraph_embedding(g, pattern) {
            return Some(ForbiddenWitness {
                pattern: PatternId::Beineke(idx + 1),
                embedding,
            });
        }
    }
    None
}
