//! Free part-swapping involutions of connected bipartite graphs and the
//! quotient construction that undoes a bipartite double.

use crate::{Error, Graph};

/// A fixed-point-free involutive automorphism used for quotients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Involution {
    perm: Vec<usize>,
}

impl Involution {
    /// Validate that `perm` is an involution of `g` suitable for quotients:
    /// an automorphism with no fixed point and `v perm(v)` never an edge.
    pub fn new(g: &Graph, perm: Vec<usize>) -> Result<Self, Error> {
        let n = g.n();
        if perm.len() != n {
            return Err(Error::NotFreeInvolution);
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::NotFreeInvolution);
            }
            seen[p] = true;
        }
        for v in 0..n {
            if perm[perm[v]] != v || perm[v] == v || g.has_edge(v, perm[v]) {
                return Err(Error::NotFreeInvolution);
            }
        }
        for (u, v) in g.edges() {
            if !g.has_edge(perm[u], perm[v]) {
                return Err(Error::NotFreeInvolution);
            }
        }
        Ok(Involution { perm })
    }

    pub fn map(&self, v: usize) -> usize {
        self.perm[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.perm
    }
}

/// All automorphisms `s` of a connected bipartite graph with `s * s = id`,
/// `s` exchanging the two parts, and `v s(v)` never an edge. Deterministic
/// order (lexicographic in the image of the first part).
pub fn free_involutions(g: &Graph) -> Result<Vec<Involution>, Error> {
    let Some((part_a, part_b)) = g.bipartition()? else {
        return Err(Error::NotBipartite);
    };
    if part_a.len() != part_b.len() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut image: Vec<Option<usize>> = vec![None; part_a.len()];
    let mut used = vec![false; part_b.len()];
    search(g, &part_a, &part_b, 0, &mut image, &mut used, &mut out);
    Ok(out)
}

fn search(
    g: &Graph,
    part_a: &[usize],
    part_b: &[usize],
    idx: usize,
    image: &mut Vec<Option<usize>>,
    used: &mut Vec<bool>,
    out: &mut Vec<Involution>,
) {
    if idx == part_a.len() {
        let mut perm = vec![0usize; g.n()];
        for (i, &a) in part_a.iter().enumerate() {
            let b = part_b[image[i].unwrap()];
            perm[a] = b;
            perm[b] = a;
        }
        out.push(Involution { perm });
        return;
    }
    let a = part_a[idx];
    for bi in 0..part_b.len() {
        if used[bi] {
            continue;
        }
        let b = part_b[bi];
        if g.degree(a) != g.degree(b) || g.has_edge(a, b) {
            continue;
        }
        // The map a' -> f(a') extends to an automorphism exactly when
        // a ~ f(a') iff a' ~ f(a) for all assigned pairs.
        let ok = (0..idx).all(|j| {
            let fj = part_b[image[j].unwrap()];
            g.has_edge(a, fj) == g.has_edge(part_a[j], b)
        });
        if !ok {
            continue;
        }
        image[idx] = Some(bi);
        used[bi] = true;
        search(g, part_a, part_b, idx + 1, image, used, out);
        image[idx] = None;
        used[bi] = false;
    }
}

/// Quotient by a free involution: vertices are the orbits `{v, s(v)}`,
/// ordered by minimum element; orbits are adjacent when any representatives
/// are. Freeness rules out loops.
pub fn quotient(g: &Graph, s: &Involution) -> Result<Graph, Error> {
    // Re-validate against this graph; `s` may have been built elsewhere.
    let s = Involution::new(g, s.perm.clone())?;
    let n = g.n();
    let mut orbit_of = vec![usize::MAX; n];
    let mut orbits = Vec::new();
    for v in 0..n {
        if orbit_of[v] == usize::MAX {
            let idx = orbits.len();
            orbit_of[v] = idx;
            orbit_of[s.map(v)] = idx;
            orbits.push(v);
        }
    }
    let mut q = Graph::new(orbits.len());
    for (u, v) in g.edges() {
        let (ou, ov) = (orbit_of[u], orbit_of[v]);
        if ou != ov {
            q.add_edge(ou, ov).unwrap();
        }
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::graph::{complete, cycle};

    #[test]
    fn hexagon_has_only_the_antipodal_involution() {
        let invs = free_involutions(&cycle(6)).unwrap();
        assert_eq!(invs.len(), 1);
        let anti = &invs[0];
        for v in 0..6 {
            assert_eq!(anti.map(v), (v + 3) % 6);
        }
        let q = quotient(&cycle(6), anti).unwrap();
        assert!(are_isomorphic(&q, &complete(3)).unwrap());
    }

    #[test]
    fn doubling_involution_inverts_the_double() {
        for g in [
            complete(3),
            crate::families::hj_prime(1).unwrap(),
            cycle(5),
        ] {
            let d = g.bipartite_double();
            let perm: Vec<usize> = (0..2 * g.n())
                .map(|v| if v < g.n() { v + g.n() } else { v - g.n() })
                .collect();
            let s = Involution::new(&d, perm).unwrap();
            let q = quotient(&d, &s).unwrap();
            assert!(are_isomorphic(&q, &g).unwrap());
        }
    }

    #[test]
    fn rejects_non_involutions() {
        let g = cycle(6);
        assert!(Involution::new(&g, vec![1, 2, 3, 4, 5, 0]).is_err()); // rotation
        assert!(Involution::new(&g, (0..6).collect()).is_err()); // identity fixes points
        assert!(Involution::new(&g, vec![1, 0, 3, 2, 5, 4]).is_err()); // v s(v) edges
    }

    #[test]
    fn non_bipartite_input_is_an_error() {
        assert!(matches!(
            free_involutions(&complete(3)),
            Err(Error::NotBipartite)
        ));
    }
}
