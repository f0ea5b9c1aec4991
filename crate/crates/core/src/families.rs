//! Deterministic constructors for every named graph in the catalog.
//!
//! Vertex labeling schemes are frozen so emitted graph6 strings stay stable:
//!
//! * `twisted_ladder(n)`: rung `i` (0-based) uses vertices `4i..4i+4` as
//!   `(a, b, c, d)`; each rung is the 4-cycle `a-c-b-d-a` and consecutive
//!   rungs are chained by `c_i a_{i+1}` and `d_i b_{i+1}`. The four corner
//!   vertices are `b = 0`, `a = 1`, `z = 4n-2`, `y = 4n-1`.
//! * `ks(n)` adds the edges `ab = (0,1)` and `yz = (4n-2, 4n-1)`.
//! * `gm(n)` adds `ay = (1, 4n-1)` and `bz = (0, 4n-2)` instead.
//! * `hj(n)` keeps the ladder and attaches a path `1, 4n, 4n+1, 4n+2, 0` on
//!   the left and `4n-2, 4n+3, 4n+4, 4n+5, 4n-1` on the right.
//! * `hj_plus(n)` joins the two path midpoints `4n+1` and `4n+4`.
//! * `hj_prime(n)` keeps the left path and adds `yz = (4n-2, 4n-1)`.
//! * `sporadic_g6(tag)` builds incidence graphs of fixed triangle-edge
//!   decompositions: ground elements first, then parts in listed order.
//! * `classic_cubic(tag)`: generalized Petersen graphs `GP(5,2)`, `GP(8,3)`,
//!   `GP(10,3)` (outer cycle `0..n`, spokes to `n..2n`), and the Heawood
//!   graph as a 14-cycle with chords `i, i+5` for even `i`.

use crate::structure::decomp::incidence_from_parts;
use crate::{canon, Error, Graph};

/// Named family plus parameter, as accepted on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    TwistedLadder(usize),
    Ks(usize),
    Gm(usize),
    Hj(usize),
    HjPrime(usize),
    HjPlus(usize),
    SporadicG6(char),
    K2,
    K3,
    ClassicCubic(String),
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph, Error> {
        match self {
            FamilySpec::TwistedLadder(n) => twisted_ladder(*n),
            FamilySpec::Ks(n) => ks(*n),
            FamilySpec::Gm(n) => gm(*n),
            FamilySpec::Hj(n) => hj(*n),
            FamilySpec::HjPrime(n) => hj_prime(*n),
            FamilySpec::HjPlus(n) => hj_plus(*n),
            FamilySpec::SporadicG6(tag) => sporadic_g6(*tag),
            FamilySpec::K2 => Ok(crate::graph::complete(2)),
            FamilySpec::K3 => Ok(crate::graph::complete(3)),
            FamilySpec::ClassicCubic(tag) => classic_cubic(tag),
        }
    }

    pub fn name(&self) -> String {
        match self {
            FamilySpec::TwistedLadder(n) => format!("twisted_ladder({n})"),
            FamilySpec::Ks(n) => format!("ks({n})"),
            FamilySpec::Gm(n) => format!("gm({n})"),
            FamilySpec::Hj(n) => format!("hj({n})"),
            FamilySpec::HjPrime(n) => format!("hj_prime({n})"),
            FamilySpec::HjPlus(n) => format!("hj_plus({n})"),
            FamilySpec::SporadicG6(tag) => format!("g6-{tag}"),
            FamilySpec::K2 => "k2".into(),
            FamilySpec::K3 => "k3".into(),
            FamilySpec::ClassicCubic(tag) => tag.clone(),
        }
    }
}

fn require(cond: bool, name: &'static str, value: i64, allowed: &'static str) -> Result<(), Error> {
    if cond {
        Ok(())
    } else {
        Err(Error::ParameterRange {
            name,
            value,
            allowed,
        })
    }
}

/// Twisted ladder on `n >= 1` rungs: `4n` vertices, `6n - 2` edges.
pub fn twisted_ladder(n: usize) -> Result<Graph, Error> {
    require(n >= 1, "n", n as i64, "n >= 1")?;
    let mut g = Graph::new(4 * n);
    for i in 0..n {
        let (a, b, c, d) = (4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3);
        g.add_edge(a, c)?;
        g.add_edge(c, b)?;
        g.add_edge(b, d)?;
        g.add_edge(d, a)?;
        if i + 1 < n {
            g.add_edge(c, 4 * (i + 1))?;
            g.add_edge(d, 4 * (i + 1) + 1)?;
        }
    }
    Ok(g)
}

/// Kollár–Sarnak graph: the twisted ladder plus `ab` and `yz`. Cubic.
pub fn ks(n: usize) -> Result<Graph, Error> {
    let mut g = twisted_ladder(n)?;
    g.add_edge(0, 1)?;
    g.add_edge(4 * n - 2, 4 * n - 1)?;
    Ok(g)
}

/// Guo–Mohar graph (`n >= 2`): the twisted ladder plus `ay` and `bz`. Cubic.
pub fn gm(n: usize) -> Result<Graph, Error> {
    require(n >= 2, "n", n as i64, "n >= 2")?;
    let mut g = twisted_ladder(n)?;
    g.add_edge(1, 4 * n - 1)?;
    g.add_edge(0, 4 * n - 2)?;
    Ok(g)
}

/// Bipartite catalog family on `4n + 6` vertices, girth 4.
pub fn hj(n: usize) -> Result<Graph, Error> {
    require(n >= 1, "n", n as i64, "n >= 1")?;
    let mut g = twisted_ladder(n)?;
    let mut h = Graph::new(4 * n + 6);
    for (u, v) in g.edges() {
        h.add_edge(u, v)?;
    }
    g = h;
    // Left attachment: path from a = 1 to b = 0 through three new vertices.
    g.add_edge(1, 4 * n)?;
    g.add_edge(4 * n, 4 * n + 1)?;
    g.add_edge(4 * n + 1, 4 * n + 2)?;
    g.add_edge(4 * n + 2, 0)?;
    // Right attachment, mirrored on z = 4n-2 and y = 4n-1.
    g.add_edge(4 * n - 2, 4 * n + 3)?;
    g.add_edge(4 * n + 3, 4 * n + 4)?;
    g.add_edge(4 * n + 4, 4 * n + 5)?;
    g.add_edge(4 * n + 5, 4 * n - 1)?;
    Ok(g)
}

/// The two midpoints of the attachment paths of `hj(n)`: the only vertices
/// all of whose neighbors have degree 2.
pub fn hj_deep_degree_two(n: usize) -> (usize, usize) {
    (4 * n + 1, 4 * n + 4)
}

/// Sporadic bipartite graphs: `hj(n)` plus the edge joining the two
/// attachment midpoints, defined for `n` in `{1, 2}`.
pub fn hj_plus(n: usize) -> Result<Graph, Error> {
    require(n == 1 || n == 2, "n", n as i64, "n in {1, 2}")?;
    let mut g = hj(n)?;
    let (e, v) = hj_deep_degree_two(n);
    g.add_edge(e, v)?;
    Ok(g)
}

/// Non-bipartite catalog family on `4n + 3` vertices.
pub fn hj_prime(n: usize) -> Result<Graph, Error> {
    require(n >= 1, "n", n as i64, "n >= 1")?;
    let mut g = twisted_ladder(n)?;
    let mut h = Graph::new(4 * n + 3);
    for (u, v) in g.edges() {
        h.add_edge(u, v)?;
    }
    g = h;
    g.add_edge(1, 4 * n)?;
    g.add_edge(4 * n, 4 * n + 1)?;
    g.add_edge(4 * n + 1, 4 * n + 2)?;
    g.add_edge(4 * n + 2, 0)?;
    g.add_edge(4 * n - 2, 4 * n - 1)?;
    Ok(g)
}

/// The four sporadic bipartite graphs of girth 6, built as incidence graphs
/// of their defining triangle-edge decompositions.
pub fn sporadic_g6(tag: char) -> Result<Graph, Error> {
    let (ground, parts): (usize, Vec<Vec<usize>>) = match tag {
        // {ab, bc, ca} over K3.
        'a' => (3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]),
        // {abc, ad, bd, cd} over K4.
        'b' => (4, vec![vec![0, 1, 2], vec![0, 3], vec![1, 3], vec![2, 3]]),
        // {abc, adg, aef, be, bf, cd, cg}.
        'c' => (
            7,
            vec![
                vec![0, 1, 2],
                vec![0, 3, 6],
                vec![0, 4, 5],
                vec![1, 4],
                vec![1, 5],
                vec![2, 3],
                vec![2, 6],
            ],
        ),
        // {abf, ace, def, bcg, cdh, bdi, ag, eh, fi}.
        'd' => (
            9,
            vec![
                vec![0, 1, 5],
                vec![0, 2, 4],
                vec![3, 4, 5],
                vec![1, 2, 6],
                vec![2, 3, 7],
                vec![1, 3, 8],
                vec![0, 6],
                vec![4, 7],
                vec![5, 8],
            ],
        ),
        other => return Err(Error::UnknownTag(other.to_string())),
    };
    Ok(incidence_from_parts(ground, &parts))
}

fn generalized_petersen(n: usize, k: usize) -> Graph {
    let mut g = Graph::new(2 * n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n).unwrap();
        g.add_edge(i, n + i).unwrap();
        g.add_edge(n + i, n + (i + k) % n).unwrap();
    }
    g
}

/// The four classical cubic examples shown alongside the catalog.
pub fn classic_cubic(tag: &str) -> Result<Graph, Error> {
    match tag {
        "petersen" => Ok(generalized_petersen(5, 2)),
        "mobius_kantor" => Ok(generalized_petersen(8, 3)),
        "desargues" => Ok(generalized_petersen(10, 3)),
        "heawood" => {
            let mut g = crate::graph::cycle(14);
            for i in (0..14).step_by(2) {
                g.add_edge(i, (i + 5) % 14)?;
            }
            Ok(g)
        }
        other => Err(Error::UnknownTag(other.to_string())),
    }
}

/// Every non-cubic catalog member on at most `max_n` vertices, deduplicated
/// by canonical form and ordered by (order, name).
pub fn catalog(max_n: usize) -> Result<Vec<(Graph, String)>, Error> {
    require(
        max_n <= crate::MAX_CANON_VERTICES,
        "max_n",
        max_n as i64,
        "max_n <= 64",
    )?;
    let mut specs: Vec<FamilySpec> = vec![
        FamilySpec::K2,
        FamilySpec::K3,
        FamilySpec::SporadicG6('a'),
        FamilySpec::SporadicG6('b'),
        FamilySpec::SporadicG6('c'),
        FamilySpec::SporadicG6('d'),
        FamilySpec::HjPlus(1),
        FamilySpec::HjPlus(2),
    ];
    let mut n = 1;
    while 4 * n + 6 <= max_n {
        specs.push(FamilySpec::Hj(n));
        n += 1;
    }
    n = 1;
    while 4 * n + 3 <= max_n {
        specs.push(FamilySpec::HjPrime(n));
        n += 1;
    }
    let mut out: Vec<(Graph, String)> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for spec in specs {
        let name = if spec == FamilySpec::SporadicG6('a') {
            // Fig-labeled alias: the girth-6 tag `a` is the hexagon.
            "c6".to_string()
        } else {
            spec.name()
        };
        let g = spec.build()?;
        if g.n() > max_n {
            continue;
        }
        if seen.insert(canon::canonical_form(&g)?) {
            out.push((g, name));
        }
    }
    out.sort_by(|(g1, n1), (g2, n2)| g1.n().cmp(&g2.n()).then_with(|| n1.cmp(n2)));
    Ok(out)
}
