//! Krausz-style searches: edge-clique partitions witnessing line graphs,
//! Whitney root graphs, and the petal-aware generalization in which each
//! cell is a clique minus a matching and matched vertices become petals.

use std::collections::HashMap;

use crate::multigraph::RootedMultigraph;
use crate::petals::{line_graph, EdgeLabel, GraphWithPetals};
use crate::{Error, Graph};

/// Witness that a rooted graph is the line graph of a graph with petals,
/// with every root represented by a pendant edge.
#[derive(Clone, Debug)]
pub struct RootGraphWitness {
    pub f: GraphWithPetals,
    /// `edge_map[x]` is the edge of `f` represented by vertex `x`.
    pub edge_map: Vec<EdgeLabel>,
    /// Each root together with its pendant edge.
    pub pendant_roots: Vec<(usize, EdgeLabel)>,
}

impl RootGraphWitness {
    /// Full re-verification: the map must be an isomorphism from the host
    /// onto the line graph of `f`, sending roots to pendant edges.
    pub fn verify(&self, gr: &RootedMultigraph) -> bool {
        if !gr.base().is_simple() {
            return false;
        }
        let g = gr.base().skeleton();
        let (lg, labels) = line_graph(&self.f);
        if self.edge_map.len() != g.n() || labels.len() != g.n() {
            return false;
        }
        let index_of: HashMap<EdgeLabel, usize> =
            labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let mut seen = vec![false; labels.len()];
        let mut mapped = Vec::with_capacity(g.n());
        for label in &self.edge_map {
            let Some(&i) = index_of.get(label) else {
                return false;
            };
            if seen[i] {
                return false;
            }
            seen[i] = true;
            mapped.push(i);
        }
        for x in 0..g.n() {
            for y in x + 1..g.n() {
                if g.has_edge(x, y) != lg.has_edge(mapped[x], mapped[y]) {
                    return false;
                }
            }
        }
        for &r in gr.roots() {
            let found = self
                .pendant_roots
                .iter()
                .any(|&(v, lab)| v == r && lab == self.edge_map[r]);
            if !found || !self.edge_map[r].is_pendant_in(&self.f) {
                return false;
            }
        }
        true
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "base_n": self.f.base().n(),
            "base_edges": self.f.base().edges(),
            "petal_attachments": self.f.petals(),
            "edge_map": self.edge_map,
            "pendant_roots": self.pendant_roots,
        })
    }
}

type EdgeIndex = HashMap<(usize, usize), usize>;

fn edge_indexer(g: &Graph) -> (Vec<(usize, usize)>, EdgeIndex) {
    let edges = g.edges();
    let map = edges
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i))
        .collect::<HashMap<_, _>>();
    (edges, map)
}

fn key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// All cliques of `g` containing both endpoints of an uncovered edge, with
/// every internal edge uncovered and every member below its cell budget.
fn clique_candidates(
    g: &Graph,
    u: usize,
    v: usize,
    covered: &[bool],
    eidx: &EdgeIndex,
    cellcount: &[usize],
    budget: &[usize],
) -> Vec<Vec<usize>> {
    let pool: Vec<usize> = (0..g.n())
        .filter(|&w| {
            w != u
                && w != v
                && g.has_edge(w, u)
                && g.has_edge(w, v)
                && cellcount[w] < budget[w]
                && !covered[eidx[&key(w, u)]]
                && !covered[eidx[&key(w, v)]]
        })
        .collect();
    let mut out = Vec::new();
    let mut current = vec![u, v];
    fn extend(
        g: &Graph,
        pool: &[usize],
        from: usize,
        covered: &[bool],
        eidx: &EdgeIndex,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let mut sorted = current.clone();
        sorted.sort_unstable();
        out.push(sorted);
        for (pi, &w) in pool.iter().enumerate().skip(from) {
            let ok = current.iter().all(|&m| {
                g.has_edge(w, m) && !covered[eidx[&key(w, m)]]
            });
            if ok {
                current.push(w);
                extend(g, pool, pi + 1, covered, eidx, current, out);
                current.pop();
            }
        }
    }
    extend(g, &pool, 0, covered, eidx, &mut current, &mut out);
    // Larger cells first, then lexicographic.
    out.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    out
}

/// Backtracking over Krausz partitions (edge partitions into cliques with
/// every vertex in at most 2 cliques). Calls `found` on each complete
/// partition; stops when it returns false.
fn krausz_search(g: &Graph, found: &mut dyn FnMut(&[Vec<usize>]) -> bool) {
    let (edges, eidx) = edge_indexer(g);
    let mut covered = vec![false; edges.len()];
    let mut cellcount = vec![0usize; g.n()];
    let budget = vec![2usize; g.n()];
    let mut cells: Vec<Vec<usize>> = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn recurse(
        g: &Graph,
        edges: &[(usize, usize)],
        eidx: &EdgeIndex,
        covered: &mut Vec<bool>,
        cellcount: &mut Vec<usize>,
        budget: &[usize],
        cells: &mut Vec<Vec<usize>>,
        found: &mut dyn FnMut(&[Vec<usize>]) -> bool,
    ) -> bool {
        let Some(next) = covered.iter().position(|&c| !c) else {
            return found(cells);
        };
        let (u, v) = edges[next];
        if cellcount[u] >= budget[u] || cellcount[v] >= budget[v] {
            return true;
        }
        for cand in clique_candidates(g, u, v, covered, eidx, cellcount, budget) {
            let mut touched = Vec::new();
            for i in 0..cand.len() {
                for j in i + 1..cand.len() {
                    let e = eidx[&key(cand[i], cand[j])];
                    covered[e] = true;
                    touched.push(e);
                }
            }
            for &m in &cand {
                cellcount[m] += 1;
            }
            cells.push(cand.clone());
            let keep_going = recurse(g, edges, eidx, covered, cellcount, budget, cells, found);
            cells.pop();
            for &m in &cand {
                cellcount[m] -= 1;
            }
            for e in touched {
                covered[e] = false;
            }
            if !keep_going {
                return false;
            }
        }
        true
    }

    recurse(
        g,
        &edges,
        &eidx,
        &mut covered,
        &mut cellcount,
        &budget,
        &mut cells,
        found,
    );
}

/// Build the root graph and edge bijection encoded by a Krausz partition.
/// Vertices in a single cell receive a fresh leaf; isolated host vertices
/// become standalone edges.
fn root_graph_from_cells(g: &Graph, cells: &[Vec<usize>]) -> (Graph, Vec<(usize, usize)>) {
    let k = cells.len();
    let mut cells_of: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (ci, cell) in cells.iter().enumerate() {
        for &x in cell {
            cells_of[x].push(ci);
        }
    }
    let mut extra = k;
    let mut edge_map = Vec::with_capacity(g.n());
    for x in 0..g.n() {
        match cells_of[x].as_slice() {
            [c1, c2] => edge_map.push((*c1.min(c2), *c1.max(c2))),
            [c] => {
                edge_map.push((*c, extra));
                extra += 1;
            }
            [] => {
                edge_map.push((extra, extra + 1));
                extra += 2;
            }
            _ => unreachable!("vertex in more than two cells"),
        }
    }
    let mut f = Graph::new(extra);
    for &(a, b) in &edge_map {
        f.add_edge(a, b).unwrap();
    }
    (f, edge_map)
}

/// Whitney root graph: a simple graph whose line graph is `g`, together
/// with the vertex-to-edge bijection, or `None` when `g` is not a line
/// graph. The triangle is returned for `g = K3` (the star alternative is
/// the one other root; see `all_root_graphs`).
pub fn root_graph(g: &Graph) -> Option<(Graph, Vec<(usize, usize)>)> {
    if g.n() == 3 && g.edge_count() == 3 {
        let f = crate::graph::complete(3);
        return Some((f, vec![(0, 1), (0, 2), (1, 2)]));
    }
    let mut result = None;
    krausz_search(g, &mut |cells| {
        result = Some(root_graph_from_cells(g, cells));
        false
    });
    result
}

/// Every root graph produced by the Krausz backtracking, deduplicated by
/// canonical form. Used to confirm Whitney uniqueness away from K3.
pub fn all_root_graphs(g: &Graph) -> Vec<Graph> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    krausz_search(g, &mut |cells| {
        let (f, _) = root_graph_from_cells(g, cells);
        if let Ok(form) = crate::canon::canonical_form(&f) {
            if seen.insert(form) {
                out.push(f);
            }
        }
        true
    });
    out
}

/// One generalized cell: members inducing a clique minus the listed
/// matching; matched vertices turn into petals.
#[derive(Clone, Debug)]
struct Cell {
    members: Vec<usize>,
    matching: Vec<(usize, usize)>,
}

#[allow(clippy::too_many_arguments)]
fn generalized_candidates(
    g: &Graph,
    u: usize,
    v: usize,
    covered: &[bool],
    eidx: &EdgeIndex,
    cellcount: &[usize],
    matched: &[bool],
    budget: &[usize],
) -> Vec<Cell> {
    let pool: Vec<usize> = (0..g.n())
        .filter(|&w| w != u && w != v && (g.has_edge(w, u) || g.has_edge(w, v)))
        .collect();
    let mut out: Vec<Cell> = Vec::new();
    let mut members = vec![u, v];
    let mut pairs: Vec<(usize, usize)> = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn extend(
        g: &Graph,
        pool: &[usize],
        from: usize,
        covered: &[bool],
        eidx: &EdgeIndex,
        cellcount: &[usize],
        matched: &[bool],
        budget: &[usize],
        members: &mut Vec<usize>,
        pairs: &mut Vec<(usize, usize)>,
        out: &mut Vec<Cell>,
    ) {
        // Emit the current cell if all matched members keep their entire
        // neighborhood inside it (they will never join another cell).
        let closed = pairs.iter().all(|&(a, b)| {
            [a, b].iter().all(|&x| g.neighbors(x).all(|y| members.contains(&y)))
        });
        if closed {
            let mut ms = members.clone();
            ms.sort_unstable();
            let mut ps: Vec<(usize, usize)> =
                pairs.iter().map(|&(a, b)| key(a, b)).collect();
            ps.sort_unstable();
            out.push(Cell {
                members: ms,
                matching: ps,
            });
        }
        'cand: for (pi, &w) in pool.iter().enumerate().skip(from) {
            let mut non_adj: Option<usize> = None;
            for &m in members.iter() {
                if g.has_edge(w, m) {
                    if covered[eidx[&key(w, m)]] {
                        continue 'cand;
                    }
                } else {
                    if non_adj.is_some() {
                        continue 'cand;
                    }
                    non_adj = Some(m);
                }
            }
            match non_adj {
                None => {
                    if cellcount[w] >= budget[w] || matched[w] {
                        continue 'cand;
                    }
                }
                Some(x) => {
                    // w and x become a petal pair: both must be fresh,
                    // unrooted, and not already matched here.
                    let fresh = |y: usize| cellcount[y] == 0 && !matched[y] && budget[y] == 2;
                    if !fresh(w) || !fresh(x) {
                        continue 'cand;
                    }
                    if pairs.iter().any(|&(a, b)| a == x || b == x) {
                        continue 'cand;
                    }
                }
            }
            members.push(w);
            if let Some(x) = non_adj {
                pairs.push((x, w));
            }
            extend(
                g, pool, pi + 1, covered, eidx, cellcount, matched, budget, members, pairs, out,
            );
            if non_adj.is_some() {
                pairs.pop();
            }
            members.pop();
        }
    }

    extend(
        g, &pool, 0, covered, eidx, cellcount, matched, budget, &mut members, &mut pairs, &mut out,
    );
    out.sort_by(|a, b| {
        b.members
            .len()
            .cmp(&a.members.len())
            .then_with(|| a.members.cmp(&b.members))
            .then_with(|| a.matching.cmp(&b.matching))
    });
    out.dedup_by(|a, b| a.members == b.members && a.matching == b.matching);
    out
}

fn witness_from_cells(g: &Graph, roots: &[usize], cells: &[Cell]) -> RootGraphWitness {
    let k = cells.len();
    let mut cells_of: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    let mut match_of: HashMap<usize, (usize, usize)> = HashMap::new(); // vertex -> (cell, partner)
    for (ci, cell) in cells.iter().enumerate() {
        for &x in &cell.members {
            cells_of[x].push(ci);
        }
        for &(a, b) in &cell.matching {
            match_of.insert(a, (ci, b));
            match_of.insert(b, (ci, a));
        }
    }
    // Petals sorted by (attachment cell, smaller member).
    let mut petal_pairs: Vec<(usize, usize, usize)> = cells
        .iter()
        .enumerate()
        .flat_map(|(ci, cell)| cell.matching.iter().map(move |&(a, b)| (ci, a, b)))
        .collect();
    petal_pairs.sort_unstable();
    let petal_index: HashMap<(usize, usize), usize> = petal_pairs
        .iter()
        .enumerate()
        .map(|(i, &(_, a, b))| ((a, b), i))
        .collect();

    let mut extra = k;
    let mut edge_map: Vec<EdgeLabel> = Vec::with_capacity(g.n());
    let mut base_edges: Vec<(usize, usize)> = Vec::new();
    for x in 0..g.n() {
        if let Some(&(ci, partner)) = match_of.get(&x) {
            let pair = key(x, partner);
            let idx = petal_index[&pair];
            edge_map.push(EdgeLabel::Petal {
                petal: idx,
                attach: ci,
                half: u8::from(x != pair.0),
            });
            continue;
        }
        match cells_of[x].as_slice() {
            [c1, c2] => {
                let e = (*c1.min(c2), *c1.max(c2));
                base_edges.push(e);
                edge_map.push(EdgeLabel::Simple(e.0, e.1));
            }
            [c] => {
                base_edges.push((*c, extra));
                edge_map.push(EdgeLabel::Simple(*c, extra));
                extra += 1;
            }
            _ => unreachable!("unmatched vertex must sit in 1 or 2 cells"),
        }
    }
    let mut base = Graph::new(extra);
    for &(a, b) in &base_edges {
        base.add_edge(a, b).unwrap();
    }
    let petals: Vec<usize> = petal_pairs.iter().map(|&(ci, _, _)| ci).collect();
    let f = GraphWithPetals::new(base, petals).unwrap();
    let pendant_roots = roots.iter().map(|&r| (r, edge_map[r])).collect();
    RootGraphWitness {
        f,
        edge_map,
        pendant_roots,
    }
}

/// Search for a graph with petals `F` with `G = L(F)` in which every root
/// is a pendant edge. Requires a simple, connected base and a non-empty
/// root set. Existence is equivalent to the associated matrix being PSD.
pub fn generalized_line_graph_witness(
    gr: &RootedMultigraph,
) -> Result<Option<RootGraphWitness>, Error> {
    if !gr.base().is_simple() {
        return Err(Error::NotSimple);
    }
    if gr.roots().is_empty() {
        return Err(Error::NoRoots);
    }
    let g = gr.base().skeleton();
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() == 1 {
        // A lone root is the pendant edge of K2.
        let f = GraphWithPetals::simple(crate::graph::complete(2));
        let edge_map = vec![EdgeLabel::Simple(0, 1)];
        return Ok(Some(RootGraphWitness {
            f,
            edge_map,
            pendant_roots: vec![(0, EdgeLabel::Simple(0, 1))],
        }));
    }

    let budget: Vec<usize> = (0..g.n())
        .map(|v| if gr.is_root(v) { 1 } else { 2 })
        .collect();
    let (edges, eidx) = edge_indexer(&g);
    let mut covered = vec![false; edges.len()];
    let mut cellcount = vec![0usize; g.n()];
    let mut matched = vec![false; g.n()];
    let mut cells: Vec<Cell> = Vec::new();
    let mut solution: Option<Vec<Cell>> = None;

    #[allow(clippy::too_many_arguments)]
    fn recurse(
        g: &Graph,
        edges: &[(usize, usize)],
        eidx: &EdgeIndex,
        covered: &mut Vec<bool>,
        cellcount: &mut Vec<usize>,
        matched: &mut Vec<bool>,
        budget: &[usize],
        cells: &mut Vec<Cell>,
        solution: &mut Option<Vec<Cell>>,
    ) -> bool {
        let Some(next) = covered.iter().position(|&c| !c) else {
            *solution = Some(cells.clone());
            return false;
        };
        let (u, v) = edges[next];
        // Neither endpoint may have exhausted its cell budget.
        if matched[u] || matched[v] || cellcount[u] >= budget[u] || cellcount[v] >= budget[v] {
            return true;
        }
        for cand in generalized_candidates(g, u, v, covered, eidx, cellcount, matched, budget) {
            let mut touched = Vec::new();
            let matching_has = |x: usize, cand: &Cell| {
                cand.matching.iter().any(|&(a, b)| a == x || b == x)
            };
            for i in 0..cand.members.len() {
                for j in i + 1..cand.members.len() {
                    let (a, b) = (cand.members[i], cand.members[j]);
                    if g.has_edge(a, b) {
                        let e = eidx[&key(a, b)];
                        covered[e] = true;
                        touched.push(e);
                    }
                }
            }
            for &m in &cand.members {
                cellcount[m] += 1;
                if matching_has(m, &cand) {
                    matched[m] = true;
                }
            }
            cells.push(cand.clone());
            let keep_going = recurse(
                g, edges, eidx, covered, cellcount, matched, budget, cells, solution,
            );
            cells.pop();
            for &m in &cand.members {
                cellcount[m] -= 1;
                if matching_has(m, &cand) {
                    matched[m] = false;
                }
            }
            for e in touched {
                covered[e] = false;
            }
            if !keep_going {
                return false;
            }
        }
        true
    }

    recurse(
        &g,
        &edges,
        &eidx,
        &mut covered,
        &mut cellcount,
        &mut matched,
        &budget,
        &mut cells,
        &mut solution,
    );
    Ok(solution.map(|cells| witness_from_cells(&g, gr.roots(), &cells)))
}
