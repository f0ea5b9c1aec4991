//! Triangle-edge decompositions of rooted graphs, their intersection and
//! incidence graphs, and the double-counting identities behind them.
//!
//! A decomposition partitions the edges of a simple rooted graph into
//! triangles and single edges. It is *valid* when every non-root vertex
//! lies in exactly 3 parts and every root in exactly 2.

use crate::multigraph::RootedMultigraph;
use crate::{Error, Graph};

/// Triangle-edge decomposition of a simple rooted host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    host: RootedMultigraph,
    parts: Vec<Vec<usize>>,
}

impl Decomposition {
    /// Build and validate a triangle-edge decomposition: each part must be
    /// an edge or a triangle of the host, and every host edge must lie in
    /// exactly one part. (Root-count validity is checked separately.)
    pub fn new(host: RootedMultigraph, parts: Vec<Vec<usize>>) -> Result<Self, Error> {
        if !host.base().is_simple() {
            return Err(Error::NotSimple);
        }
        let g = host.base().skeleton();
        let mut covered = std::collections::HashSet::new();
        let mut normalized = Vec::with_capacity(parts.len());
        for part in parts {
            let mut p = part.clone();
            p.sort_unstable();
            p.dedup();
            if p.len() != part.len() {
                return Err(Error::InvalidDecomposition("part has repeated vertices"));
            }
            if !(2..=3).contains(&p.len()) {
                return Err(Error::InvalidDecomposition("part is not an edge or a triangle"));
            }
            if let Some(&v) = p.iter().find(|&&v| v >= g.n()) {
                let _ = v;
                return Err(Error::InvalidDecomposition("part mentions an unknown vertex"));
            }
            for i in 0..p.len() {
                for j in i + 1..p.len() {
                    if !g.has_edge(p[i], p[j]) {
                        return Err(Error::InvalidDecomposition("part is not a clique of the host"));
                    }
                    if !covered.insert((p[i], p[j])) {
                        return Err(Error::InvalidDecomposition("edge covered twice"));
                    }
                }
            }
            normalized.push(p);
        }
        if covered.len() != g.edge_count() {
            return Err(Error::InvalidDecomposition("some edge is not covered"));
        }
        Ok(Decomposition {
            host,
            parts: normalized,
        })
    }

    pub fn host(&self) -> &RootedMultigraph {
        &self.host
    }

    /// Parts as sorted vertex lists, in construction order.
    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    /// Indices of the edge parts.
    pub fn edge_part_indices(&self) -> Vec<usize> {
        (0..self.parts.len()).filter(|&i| self.parts[i].len() == 2).collect()
    }

    /// Per-vertex part counts.
    pub fn incidence_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.host.base().n()];
        for part in &self.parts {
            for &v in part {
                counts[v] += 1;
            }
        }
        counts
    }

    /// Validity: non-roots in exactly 3 parts, roots in exactly 2.
    pub fn is_valid(&self) -> bool {
        self.incidence_counts()
            .iter()
            .enumerate()
            .all(|(v, &c)| c == if self.host.is_root(v) { 2 } else { 3 })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "parts": self.parts,
            "roots": self.host.roots(),
        })
    }
}

/// Incidence graph of an arbitrary set system: ground elements `0..ground`
/// first, then one vertex per part (in listed order), with membership edges.
pub fn incidence_from_parts(ground: usize, parts: &[Vec<usize>]) -> Graph {
    let mut g = Graph::new(ground + parts.len());
    for (pi, part) in parts.iter().enumerate() {
        for &v in part {
            g.add_edge(v, ground + pi).unwrap();
        }
    }
    g
}

/// All valid decompositions of a simple rooted graph, by backtracking over
/// the lowest uncovered edge. Deterministic order; may be empty.
pub fn valid_decompositions(gr: &RootedMultigraph) -> Result<Vec<Decomposition>, Error> {
    if !gr.base().is_simple() {
        return Err(Error::NotSimple);
    }
    let g = gr.base().skeleton();
    let n = g.n();
    let cap: Vec<usize> = (0..n).map(|v| if gr.is_root(v) { 2 } else { 3 }).collect();
    // Quick infeasibility: a vertex of degree d sits in d - cap triangle
    // parts and 2·cap - d edge parts, both of which must be non-negative.
    for v in 0..n {
        let d = g.degree(v);
        if d < cap[v] || d > 2 * cap[v] {
            return Ok(Vec::new());
        }
    }
    let edges = g.edges();
    let mut covered = vec![false; edges.len()];
    let edge_index: std::collections::HashMap<(usize, usize), usize> = edges
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| ((u, v), i))
        .collect();
    let eidx = |a: usize, b: usize| edge_index[&(a.min(b), a.max(b))];
    let mut counts = vec![0usize; n];
    let mut parts: Vec<Vec<usize>> = Vec::new();
    let mut out = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn recurse(
        g: &Graph,
        gr: &RootedMultigraph,
        edges: &[(usize, usize)],
        covered: &mut Vec<bool>,
        counts: &mut Vec<usize>,
        cap: &[usize],
        parts: &mut Vec<Vec<usize>>,
        eidx: &dyn Fn(usize, usize) -> usize,
        out: &mut Vec<Decomposition>,
    ) {
        let Some(next) = covered.iter().position(|&c| !c) else {
            if (0..g.n()).all(|v| counts[v] == cap[v]) {
                out.push(Decomposition {
                    host: gr.clone(),
                    parts: parts.clone(),
                });
            }
            return;
        };
        let (u, v) = edges[next];
        // Edge part.
        if counts[u] < cap[u] && counts[v] < cap[v] {
            covered[next] = true;
            counts[u] += 1;
            counts[v] += 1;
            parts.push(vec![u, v]);
            recurse(g, gr, edges, covered, counts, cap, parts, eidx, out);
            parts.pop();
            counts[u] -= 1;
            counts[v] -= 1;
            covered[next] = false;
        }
        // Triangle parts through a common neighbor.
        for w in 0..g.n() {
            if w == u || w == v || !g.has_edge(u, w) || !g.has_edge(v, w) {
                continue;
            }
            let (e1, e2) = (eidx(u, w), eidx(v, w));
            if covered[e1] || covered[e2] {
                continue;
            }
            if counts[u] >= cap[u] || counts[v] >= cap[v] || counts[w] >= cap[w] {
                continue;
            }
            covered[next] = true;
            covered[e1] = true;
            covered[e2] = true;
            counts[u] += 1;
            counts[v] += 1;
            counts[w] += 1;
            let mut tri = vec![u, v, w];
            tri.sort_unstable();
            parts.push(tri);
            recurse(g, gr, edges, covered, counts, cap, parts, eidx, out);
            parts.pop();
            counts[u] -= 1;
            counts[v] -= 1;
            counts[w] -= 1;
            covered[next] = false;
            covered[e1] = false;
            covered[e2] = false;
        }
    }

    recurse(
        &g, gr, &edges, &mut covered, &mut counts, &cap, &mut parts, &eidx, &mut out,
    );
    Ok(out)
}

/// Intersection graph of a valid decomposition: one vertex per part,
/// adjacent when the parts meet; the returned root set is the edge parts.
pub fn intersection_graph(d: &Decomposition) -> Result<(Graph, Vec<usize>), Error> {
    if !d.is_valid() {
        return Err(Error::InvalidDecomposition("root incidence counts violated"));
    }
    let k = d.parts().len();
    let mut g = Graph::new(k);
    for i in 0..k {
        for j in i + 1..k {
            if d.parts()[i].iter().any(|v| d.parts()[j].contains(v)) {
                g.add_edge(i, j).unwrap();
            }
        }
    }
    Ok((g, d.edge_part_indices()))
}

/// Incidence graph of a valid decomposition: bipartite on ground ∪ parts.
pub fn incidence_graph(d: &Decomposition) -> Result<Graph, Error> {
    if !d.is_valid() {
        return Err(Error::InvalidDecomposition("root incidence counts violated"));
    }
    Ok(incidence_from_parts(d.host().base().n(), d.parts()))
}

/// Double-counting identities: returns (triangle parts, edge parts, holds)
/// where `holds` checks both `sum |part| = 3·(non-roots) + 2·(roots)` and
/// `|E| = 3·alpha + beta`.
pub fn check_decomposition_counts(d: &Decomposition) -> (usize, usize, bool) {
    let alpha = d.parts().iter().filter(|p| p.len() == 3).count();
    let beta = d.parts().len() - alpha;
    let n = d.host().base().n();
    let roots = d.host().roots().len();
    let incidence_total: usize = d.parts().iter().map(|p| p.len()).sum();
    let edge_total = d.host().base().edges().len();
    let holds =
        incidence_total == 3 * (n - roots) + 2 * roots && edge_total == 3 * alpha + beta;
    (alpha, beta, holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::{are_isomorphic, are_rooted_isomorphic};
    use crate::graph::{complete, cycle};
    use crate::multigraph::RootedMultigraph;

    fn k4_rooted_abc() -> RootedMultigraph {
        RootedMultigraph::from_simple(&complete(4), &[0, 1, 2]).unwrap()
    }

    #[test]
    fn k4_with_three_roots_has_a_unique_valid_decomposition() {
        let ds = valid_decompositions(&k4_rooted_abc()).unwrap();
        assert_eq!(ds.len(), 1);
        let mut parts = ds[0].parts().to_vec();
        parts.sort();
        assert_eq!(parts, vec![vec![0, 1, 2], vec![0, 3], vec![1, 3], vec![2, 3]]);
        assert!(ds[0].is_valid());
    }

    #[test]
    fn all_root_triangle_decomposes_into_edges_only() {
        let gr = RootedMultigraph::from_simple(&complete(3), &[0, 1, 2]).unwrap();
        let ds = valid_decompositions(&gr).unwrap();
        assert_eq!(ds.len(), 1);
        assert_eq!(ds[0].parts().len(), 3);
        assert!(ds[0].parts().iter().all(|p| p.len() == 2));

        // The triangle as a single part leaves every vertex in one part.
        let single = Decomposition::new(gr.clone(), vec![vec![0, 1, 2]]).unwrap();
        assert!(!single.is_valid());
        assert!(intersection_graph(&single).is_err());
    }

    #[test]
    fn single_rootless_edge_has_no_valid_decomposition() {
        let gr = RootedMultigraph::from_simple(&complete(2), &[]).unwrap();
        assert!(valid_decompositions(&gr).unwrap().is_empty());
    }

    #[test]
    fn intersection_graph_of_k4_decomposition() {
        let ds = valid_decompositions(&k4_rooted_abc()).unwrap();
        let (ig, roots) = intersection_graph(&ds[0]).unwrap();
        assert!(are_isomorphic(&ig, &complete(4)).unwrap());
        assert_eq!(roots.len(), 3);
        // As a rooted graph, the intersection graph mirrors the host.
        let rooted = RootedMultigraph::from_simple(&ig, &roots).unwrap();
        assert!(are_rooted_isomorphic(&rooted, &k4_rooted_abc()).unwrap());
    }

    #[test]
    fn incidence_graphs_of_catalog_decompositions() {
        // {ab, bc, ca} over K3 gives the hexagon.
        let gr = RootedMultigraph::from_simple(&complete(3), &[0, 1, 2]).unwrap();
        let d = Decomposition::new(gr, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert!(are_isomorphic(&incidence_graph(&d).unwrap(), &cycle(6)).unwrap());

        // {abc, ad, bd, cd} over K4 gives the 8-vertex girth-6 sporadic.
        let d = Decomposition::new(
            k4_rooted_abc(),
            vec![vec![0, 1, 2], vec![0, 3], vec![1, 3], vec![2, 3]],
        )
        .unwrap();
        let inc = incidence_graph(&d).unwrap();
        assert!(are_isomorphic(&inc, &crate::families::sporadic_g6('b').unwrap()).unwrap());
    }

    #[test]
    fn count_identities() {
        let gr = RootedMultigraph::from_simple(&complete(3), &[0, 1, 2]).unwrap();
        let d = Decomposition::new(gr, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let (alpha, beta, holds) = check_decomposition_counts(&d);
        assert_eq!((alpha, beta), (0, 3));
        assert!(holds);

        for d in valid_decompositions(&k4_rooted_abc()).unwrap() {
            let (_, _, holds) = check_decomposition_counts(&d);
            assert!(holds);
        }

        // Hand-built decomposition with wrong counts: P3's two edges leave
        // the middle vertex in 2 parts and the rootless ends in 1.
        let p3 = RootedMultigraph::from_simple(&crate::graph::path(3), &[]).unwrap();
        let d = Decomposition::new(p3, vec![vec![0, 1], vec![1, 2]]).unwrap();
        let (_, _, holds) = check_decomposition_counts(&d);
        assert!(!holds);
        assert!(!d.is_valid());
    }

    #[test]
    fn decomposition_structural_rejections() {
        let gr = k4_rooted_abc();
        assert!(Decomposition::new(gr.clone(), vec![vec![0, 1]]).is_err()); // uncovered edges
        assert!(Decomposition::new(
            gr.clone(),
            vec![vec![0, 1, 2], vec![0, 1], vec![0, 3], vec![1, 3], vec![2, 3]]
        )
        .is_err()); // double cover
        assert!(Decomposition::new(gr, vec![vec![0, 1, 2, 3]]).is_err()); // not edge/triangle
    }
}
