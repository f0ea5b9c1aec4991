//! Multigraphs with integer edge multiplicities, rooted multigraphs, and the
//! distance-two machinery: the multigraph whose multiplicities count paths of
//! length 2, its rooted induced subgraphs and components, and clique
//! attachment at roots.

use crate::{Error, Graph};

/// Undirected multigraph: symmetric multiplicity matrix with zero diagonal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    mult: Vec<u32>,
}

impl std::fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Multigraph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Multigraph {
    pub fn new(n: usize) -> Self {
        Multigraph {
            n,
            mult: vec![0; n * n],
        }
    }

    /// Multigraph with every edge of a simple graph at multiplicity 1.
    pub fn from_graph(g: &Graph) -> Self {
        let mut m = Multigraph::new(g.n());
        for (u, v) in g.edges() {
            m.set_multiplicity(u, v, 1);
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u32 {
        if u == v || u >= self.n || v >= self.n {
            0
        } else {
            self.mult[u * self.n + v]
        }
    }

    pub fn set_multiplicity(&mut self, u: usize, v: usize, m: u32) {
        assert!(u != v && u < self.n && v < self.n, "bad edge ({u},{v})");
        self.mult[u * self.n + v] = m;
        self.mult[v * self.n + u] = m;
    }

    /// Edges as `(u, v, multiplicity)` with `u < v` and multiplicity > 0.
    pub fn edges(&self) -> Vec<(usize, usize, u32)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                let m = self.multiplicity(u, v);
                if m > 0 {
                    out.push((u, v, m));
                }
            }
        }
        out
    }

    /// True when every multiplicity is at most 1.
    pub fn is_simple(&self) -> bool {
        self.mult.iter().all(|&m| m <= 1)
    }

    /// The underlying simple graph (positive multiplicities become edges).
    pub fn skeleton(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for (u, v, _) in self.edges() {
            g.add_edge(u, v).unwrap();
        }
        g
    }

    /// Connected components (ignoring multiplicities beyond adjacency),
    /// as sorted vertex lists ordered by minimum vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.skeleton().components()
    }

    /// Induced sub-multigraph on the given vertices, relabeled ascending.
    pub fn induced(&self, vertices: &[usize]) -> Result<Multigraph, Error> {
        let mut vs: Vec<usize> = vertices.to_vec();
        vs.sort_unstable();
        vs.dedup();
        if let Some(&v) = vs.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        let mut m = Multigraph::new(vs.len());
        for (i, &u) in vs.iter().enumerate() {
            for (j, &v) in vs.iter().enumerate().skip(i + 1) {
                let w = self.multiplicity(u, v);
                if w > 0 {
                    m.set_multiplicity(i, j, w);
                }
            }
        }
        Ok(m)
    }
}

/// Multigraph with a distinguished set of root vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootedMultigraph {
    base: Multigraph,
    roots: Vec<usize>,
}

impl RootedMultigraph {
    pub fn new(base: Multigraph, roots: &[usize]) -> Result<Self, Error> {
        let mut rs: Vec<usize> = roots.to_vec();
        rs.sort_unstable();
        rs.dedup();
        if let Some(&v) = rs.iter().find(|&&v| v >= base.n()) {
            return Err(Error::VertexOutOfRange { vertex: v, n: base.n() });
        }
        Ok(RootedMultigraph { base, roots: rs })
    }

    /// Rooted multigraph over a simple graph.
    pub fn from_simple(g: &Graph, roots: &[usize]) -> Result<Self, Error> {
        RootedMultigraph::new(Multigraph::from_graph(g), roots)
    }

    pub fn base(&self) -> &Multigraph {
        &self.base
    }

    /// Sorted root list.
    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    pub fn is_root(&self, v: usize) -> bool {
        self.roots.binary_search(&v).is_ok()
    }
}

/// Distance-two multigraph: the multiplicity of `uv` is the number of
/// distinct paths of length 2 between `u` and `v`, i.e. their number of
/// common neighbors. Diagonal forced to zero.
pub fn distance_two_multigraph(g: &Graph) -> Multigraph {
    let n = g.n();
    let mut m = Multigraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            let common = g.neighbors(u).filter(|&w| g.has_edge(w, v)).count() as u32;
            if common > 0 {
                m.set_multiplicity(u, v, common);
            }
        }
    }
    m
}

fn check_degrees_2_3(g: &Graph) -> Result<(), Error> {
    for v in 0..g.n() {
        let d = g.degree(v);
        if !(2..=3).contains(&d) {
            return Err(Error::DegreeOutOfRange {
                vertex: v,
                degree: d,
                min: 2,
                max: 3,
            });
        }
    }
    Ok(())
}

/// Rooted distance-two subgraph induced by `u_set`: the distance-two
/// multigraph restricted to `u_set`, rooted at the vertices of degree 2 in
/// the host. Requires minimum degree 2 and maximum degree 3.
pub fn rooted_distance_two_subgraph(g: &Graph, u_set: &[usize]) -> Result<RootedMultigraph, Error> {
    check_degrees_2_3(g)?;
    let mut vs: Vec<usize> = u_set.to_vec();
    vs.sort_unstable();
    vs.dedup();
    if let Some(&v) = vs.iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let d2 = distance_two_multigraph(g);
    let base = d2.induced(&vs)?;
    let roots: Vec<usize> = vs
        .iter()
        .enumerate()
        .filter(|&(_, &v)| g.degree(v) == 2)
        .map(|(i, _)| i)
        .collect();
    RootedMultigraph::new(base, &roots)
}

/// Rooted distance-two components: one rooted multigraph per connected
/// component of the distance-two multigraph, ordered by minimum vertex.
/// Requires a connected host with minimum degree 2 and maximum degree 3.
pub fn rooted_distance_two_components(g: &Graph) -> Result<Vec<RootedMultigraph>, Error> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    check_degrees_2_3(g)?;
    let d2 = distance_two_multigraph(g);
    d2.components()
        .into_iter()
        .map(|comp| rooted_distance_two_subgraph(g, &comp))
        .collect()
}

/// Attach a `k`-clique to every root: each root gains `k` fresh pairwise
/// adjacent neighbors. The base must be simple and `k` positive.
pub fn attach_cliques(gr: &RootedMultigraph, k: usize) -> Result<Graph, Error> {
    if !gr.base().is_simple() {
        return Err(Error::NotSimple);
    }
    if k == 0 {
        return Err(Error::ParameterRange {
            name: "k",
            value: 0,
            allowed: "k >= 1",
        });
    }
    let n = gr.base().n();
    let mut g = Graph::new(n + gr.roots().len() * k);
    for (u, v, _) in gr.base().edges() {
        g.add_edge(u, v).unwrap();
    }
    for (ri, &r) in gr.roots().iter().enumerate() {
        let first = n + ri * k;
        for i in 0..k {
            g.add_edge(r, first + i).unwrap();
            for j in i + 1..k {
                g.add_edge(first + i, first + j).unwrap();
            }
        }
    }
    Ok(g)
}
