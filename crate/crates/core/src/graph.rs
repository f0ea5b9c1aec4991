//! Simple undirected graphs on a fixed vertex set `0..n` with bitset
//! adjacency rows, plus the structural predicates the rest of the crate
//! leans on (connectivity, girth, bipartitions, bipartite doubles).

use crate::Error;

/// Simple undirected graph. No loops, no multi-edges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, Error> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check_vertex(&self, v: usize) -> Result<(), Error> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(())
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), Error> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::NotSimple);
        }
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n && v < self.n {
            self.bits[u * self.words + v / 64] &= !(1 << (v % 64));
            self.bits[v * self.words + u / 64] &= !(1 << (u % 64));
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        let row = &self.bits[v * self.words..(v + 1) * self.words];
        row.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    pub fn is_subcubic(&self) -> bool {
        self.max_degree() <= 3
    }

    pub fn is_cubic(&self) -> bool {
        self.n > 0 && self.degrees().iter().all(|&d| d == 3)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.bits[v * self.words..(v + 1) * self.words];
        row.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// True iff the graph has exactly one connected component.
    /// The empty graph is not connected; a single vertex is.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    /// Length of a shortest cycle, or `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for start in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            let mut queue = std::collections::VecDeque::new();
            dist[start] = 0;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    // No cycle through `start` shorter than `b` can still appear.
                    if 2 * dist[u] + 1 >= b {
                        break;
                    }
                }
                for v in self.neighbors(u) {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let c = dist[u] + dist[v] + 1;
                        if best.is_none_or(|b| c < b) {
                            best = Some(c);
                        }
                    }
                }
            }
        }
        best
    }

    /// Two-coloring of a connected graph. Returns `None` when an odd cycle
    /// exists; the part containing vertex 0 comes first.
    #[allow(clippy::type_complexity)]
    pub fn bipartition(&self) -> Result<Option<(Vec<usize>, Vec<usize>)>, Error> {
        if self.n == 0 || !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut color = vec![u8::MAX; self.n];
        color[0] = 0;
        let mut queue = std::collections::VecDeque::from([0]);
        while let Some(u) = queue.pop_front() {
            for v in self.neighbors(u) {
                if color[v] == u8::MAX {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if color[v] == color[u] {
                    return Ok(None);
                }
            }
        }
        let a = (0..self.n).filter(|&v| color[v] == 0).collect();
        let b = (0..self.n).filter(|&v| color[v] == 1).collect();
        Ok(Some((a, b)))
    }

    pub fn is_bipartite(&self) -> Result<bool, Error> {
        Ok(self.bipartition()?.is_some())
    }

    /// Bipartite double cover: vertices `0..2n`, with `(u, v + n)` and
    /// `(v, u + n)` for every edge `(u, v)`.
    pub fn bipartite_double(&self) -> Graph {
        let mut d = Graph::new(2 * self.n);
        for (u, v) in self.edges() {
            d.add_edge(u, v + self.n).unwrap();
            d.add_edge(v, u + self.n).unwrap();
        }
        d
    }

    /// Induced subgraph on the given vertices, relabeled `0..k` in ascending
    /// vertex order. Duplicates are ignored.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph, Error> {
        let mut vs: Vec<usize> = vertices.to_vec();
        vs.sort_unstable();
        vs.dedup();
        if let Some(&v) = vs.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        let mut g = Graph::new(vs.len());
        for (i, &u) in vs.iter().enumerate() {
            for (j, &v) in vs.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j).unwrap();
                }
            }
        }
        Ok(g)
    }

    /// Graph with the listed vertices removed, survivors relabeled in
    /// ascending order.
    pub fn delete_vertices(&self, deleted: &[usize]) -> Result<Graph, Error> {
        if let Some(&v) = deleted.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        let keep: Vec<usize> = (0..self.n).filter(|v| !deleted.contains(v)).collect();
        self.induced_subgraph(&keep)
    }

    /// Relabeled copy: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::new(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]).unwrap();
        }
        g
    }

    /// Adjacency matrix as dense rows of 0/1 integers.
    pub fn adjacency_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|u| (0..self.n).map(|v| i64::from(self.has_edge(u, v))).collect())
            .collect()
    }

    /// Connected components as sorted vertex lists, ordered by minimum vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

/// Path graph on `n` vertices.
pub fn path(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        g.add_edge(v - 1, v).unwrap();
    }
    g
}

/// Cycle graph on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    let mut g = path(n);
    if n >= 3 {
        g.add_edge(n - 1, 0).unwrap();
    }
    g
}

/// Complete graph on `n` vertices.
pub fn complete(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// Complete bipartite graph `K_{a,b}`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::new(a + b);
    for u in 0..a {
        for v in 0..b {
            g.add_edge(u, a + v).unwrap();
        }
    }
    g
}
