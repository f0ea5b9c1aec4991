//! Orderly generation of connected subcubic graphs and the desk-scale
//! census that verifies the catalog.
//!
//! Generation is canonical augmentation: a graph on `k+1` vertices is
//! produced from its parent on `k` vertices by attaching a fresh vertex to
//! a degree-open set, and the child is accepted only when the added vertex
//! lies in the automorphism orbit of the canonical deletion vertex (the
//! non-cut vertex of maximal canonical position). Exactly one labeled
//! candidate per isomorphism class survives.

use serde::Serialize;

use crate::spectral::gap_avoids_unit_interval;
use crate::{canon, families, Error, Graph};

/// Which enumerated graphs the census actually gap-checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum EnumFilter {
    #[default]
    All,
    NonCubic,
    MinDegTwo,
}

impl EnumFilter {
    fn keep(&self, g: &Graph) -> bool {
        match self {
            EnumFilter::All => true,
            EnumFilter::NonCubic => !g.is_cubic(),
            EnumFilter::MinDegTwo => g.min_degree() >= 2,
        }
    }
}

/// Census configuration. Exhaustive mode is capped at 14 vertices.
#[derive(Clone, Debug)]
pub struct EnumConfig {
    pub max_n: usize,
    pub workers: usize,
    pub filter: EnumFilter,
}

impl EnumConfig {
    pub fn new(max_n: usize) -> Self {
        EnumConfig {
            max_n,
            workers: 1,
            filter: EnumFilter::All,
        }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }
}

const MAX_EXHAUSTIVE_N: usize = 14;

fn check_range(n: usize) -> Result<(), Error> {
    if !(1..=MAX_EXHAUSTIVE_N).contains(&n) {
        return Err(Error::ParameterRange {
            name: "n",
            value: n as i64,
            allowed: "1 <= n <= 14",
        });
    }
    Ok(())
}

/// Subsets of `items` of size 1..=3, lexicographic.
fn attachment_sets(items: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for i in 0..items.len() {
        out.push(vec![items[i]]);
        for j in i + 1..items.len() {
            out.push(vec![items[i], items[j]]);
            for k in j + 1..items.len() {
                out.push(vec![items[i], items[j], items[k]]);
            }
        }
    }
    out
}

fn is_non_cut(g: &Graph, v: usize) -> bool {
    let mut seen = vec![false; g.n()];
    seen[v] = true;
    let Some(start) = (0..g.n()).find(|&u| u != v) else {
        return true;
    };
    let mut stack = vec![start];
    seen[start] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == g.n() - 1
}

fn local_invariant(g: &Graph, v: usize) -> (usize, Vec<usize>) {
    let mut nd: Vec<usize> = g.neighbors(v).map(|u| g.degree(u)).collect();
    nd.sort_unstable();
    (g.degree(v), nd)
}

/// Canonical-parent acceptance: the freshly added last vertex must be
/// interchangeable with the canonical deletion vertex.
fn accept(child: &Graph) -> bool {
    let added = child.n() - 1;
    let labeling = canon::canonical_labeling(child).expect("within canon bound");
    let deletion = (0..child.n())
        .filter(|&v| is_non_cut(child, v))
        .max_by_key(|&v| labeling[v])
        .expect("a connected graph has a non-cut vertex");
    if deletion == added {
        return true;
    }
    if local_invariant(child, added) != local_invariant(child, deletion) {
        return false;
    }
    let mark = |v: usize| {
        let mut colors = vec![0u8; child.n()];
        colors[v] = 1;
        canon::canonical_form_colored(child, &colors).expect("within canon bound")
    };
    mark(added) == mark(deletion)
}

fn expand_parent(g: &Graph) -> Vec<(Vec<u8>, Graph)> {
    let open: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) < 3).collect();
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for set in attachment_sets(&open) {
        let mut child = Graph::new(g.n() + 1);
        for (u, v) in g.edges() {
            child.add_edge(u, v).unwrap();
        }
        for &s in &set {
            child.add_edge(s, g.n()).unwrap();
        }
        if !accept(&child) {
            continue;
        }
        let form = canon::canonical_form(&child).expect("within canon bound");
        if seen.insert(form.clone()) {
            out.push((form, child));
        }
    }
    out
}

fn next_level(parents: &[Graph], workers: usize) -> Vec<Graph> {
    let workers = workers.max(1).min(parents.len().max(1));
    let chunk = parents.len().div_ceil(workers);
    let mut tagged: Vec<(Vec<u8>, Graph)> = if workers <= 1 || parents.len() < 32 {
        parents.iter().flat_map(expand_parent).collect()
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = parents
                .chunks(chunk)
                .map(|part| scope.spawn(move || part.iter().flat_map(expand_parent).collect::<Vec<_>>()))
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("worker panicked"))
                .collect()
        })
    };
    tagged.sort_by(|a, b| a.0.cmp(&b.0));
    debug_assert!(tagged.windows(2).all(|w| w[0].0 != w[1].0));
    tagged.into_iter().map(|(_, g)| g).collect()
}

/// All connected graphs with maximum degree 3, grouped by order from 1 to
/// `max_n`, one representative per isomorphism class, canonically ordered.
pub fn connected_subcubic_levels(max_n: usize, workers: usize) -> Result<Vec<Vec<Graph>>, Error> {
    check_range(max_n)?;
    let mut levels: Vec<Vec<Graph>> = vec![vec![Graph::new(1)]];
    for _ in 1..max_n {
        let next = next_level(levels.last().unwrap(), workers);
        levels.push(next);
    }
    Ok(levels)
}

/// Connected subcubic graphs on exactly `n` vertices, one per isomorphism
/// class, in canonical order.
pub fn enumerate_connected_subcubic(n: usize) -> Result<Vec<Graph>, Error> {
    Ok(connected_subcubic_levels(n, 1)?.pop().unwrap())
}

/// One survivor line of the census report.
#[derive(Clone, Debug, Serialize)]
pub struct SurvivorEntry {
    pub graph6: String,
    pub name: String,
    pub certificate_ref: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CensusMismatches {
    pub unmatched_survivors: Vec<String>,
    pub missing_catalog: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusRow {
    pub n: usize,
    pub generated: usize,
    pub survivors: Vec<SurvivorEntry>,
    pub mismatches: CensusMismatches,
}

/// Census outcome: per-order rows plus the flattened verdict.
#[derive(Clone, Debug, Serialize)]
pub struct CensusReport {
    pub max_n: usize,
    pub rows: Vec<CensusRow>,
}

impl CensusReport {
    pub fn total_generated(&self) -> usize {
        self.rows.iter().map(|r| r.generated).sum()
    }

    pub fn has_mismatches(&self) -> bool {
        self.rows.iter().any(|r| {
            !r.mismatches.unmatched_survivors.is_empty() || !r.mismatches.missing_catalog.is_empty()
        })
    }

    /// Names of non-cubic survivors across all orders.
    pub fn non_cubic_survivor_names(&self) -> Vec<String> {
        self.rows
            .iter()
            .flat_map(|r| r.survivors.iter())
            .filter(|s| s.name != "cubic")
            .map(|s| s.name.clone())
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).unwrap()
    }
}

/// Exhaustively verify the catalog: enumerate, gap-check exactly, and match
/// non-cubic survivors against the catalog by canonical form.
pub fn census(cfg: &EnumConfig) -> Result<CensusReport, Error> {
    check_range(cfg.max_n)?;
    let levels = connected_subcubic_levels(cfg.max_n, cfg.workers)?;
    let catalog = families::catalog(cfg.max_n)?;
    let mut catalog_by_form: std::collections::HashMap<Vec<u8>, String> = Default::default();
    for (g, name) in &catalog {
        catalog_by_form.insert(canon::canonical_form(g)?, name.clone());
    }

    let mut rows = Vec::new();
    for (idx, graphs) in levels.iter().enumerate() {
        let n = idx + 1;
        let kept: Vec<&Graph> = graphs.iter().filter(|g| cfg.filter.keep(g)).collect();
        let workers = cfg.workers.max(1).min(kept.len().max(1));
        let chunk = kept.len().div_ceil(workers);
        let survivors_raw: Vec<(Vec<u8>, bool, String)> = if workers <= 1 || kept.len() < 32 {
            kept.iter().filter_map(|g| survivor_entry(g)).collect()
        } else {
            std::thread::scope(|scope| {
                let handles: Vec<_> = kept
                    .chunks(chunk)
                    .map(|part| {
                        scope.spawn(move || {
                            part.iter().filter_map(|g| survivor_entry(g)).collect::<Vec<_>>()
                        })
                    })
                    .collect();
                handles
                    .into_iter()
                    .flat_map(|h| h.join().expect("worker panicked"))
                    .collect()
            })
        };

        let mut survivors = Vec::new();
        let mut mismatches = CensusMismatches::default();
        let mut survivor_forms = std::collections::HashSet::new();
        for (form, cubic, cert_ref) in survivors_raw {
            let graph6 = String::from_utf8(form.clone()).unwrap();
            survivor_forms.insert(form.clone());
            let name = if cubic {
                "cubic".to_string()
            } else if let Some(name) = catalog_by_form.get(&form) {
                name.clone()
            } else {
                mismatches.unmatched_survivors.push(graph6.clone());
                "unmatched".to_string()
            };
            survivors.push(SurvivorEntry {
                graph6,
                name,
                certificate_ref: cert_ref,
            });
        }
        for (g, name) in &catalog {
            // Catalog members the filter excludes cannot be expected.
            if g.n() == n && cfg.filter.keep(g) {
                let form = canon::canonical_form(g)?;
                if !survivor_forms.contains(&form) {
                    mismatches.missing_catalog.push(name.clone());
                }
            }
        }
        rows.push(CensusRow {
            n,
            generated: kept.len(),
            survivors,
            mismatches,
        });
    }
    Ok(CensusReport {
        max_n: cfg.max_n,
        rows,
    })
}

fn survivor_entry(g: &Graph) -> Option<(Vec<u8>, bool, String)> {
    let (ok, cert) = gap_avoids_unit_interval(g);
    if !ok {
        return None;
    }
    let form = canon::canonical_form(g).expect("within canon bound");
    let cert_json = serde_json::to_vec(&cert).unwrap();
    Some((form, g.is_cubic(), crate::content_hash(&cert_json)))
}

/// Families probed for eigenvalues inside an interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProbeFamily {
    Gm,
    Ks,
    Hj,
    HjPrime,
}

impl ProbeFamily {
    pub const ALL: [ProbeFamily; 4] = [
        ProbeFamily::Gm,
        ProbeFamily::Ks,
        ProbeFamily::Hj,
        ProbeFamily::HjPrime,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ProbeFamily::Gm => "gm",
            ProbeFamily::Ks => "ks",
            ProbeFamily::Hj => "hj",
            ProbeFamily::HjPrime => "hj_prime",
        }
    }

    pub fn parse(s: &str) -> Result<Self, Error> {
        match s {
            "gm" => Ok(ProbeFamily::Gm),
            "ks" => Ok(ProbeFamily::Ks),
            "hj" => Ok(ProbeFamily::Hj),
            "hj_prime" => Ok(ProbeFamily::HjPrime),
            other => Err(Error::UnknownTag(other.to_string())),
        }
    }

    fn build(&self, n: usize) -> Option<Graph> {
        match self {
            ProbeFamily::Gm => families::gm(n).ok(),
            ProbeFamily::Ks => families::ks(n).ok(),
            ProbeFamily::Hj => families::hj(n).ok(),
            ProbeFamily::HjPrime => families::hj_prime(n).ok(),
        }
    }
}

/// Eigenvalues of one family member inside the probed interval.
#[derive(Clone, Debug, Serialize)]
pub struct ProbeRow {
    pub family: &'static str,
    pub n: usize,
    pub order: usize,
    pub inside: Vec<f64>,
}

/// Report the eigenvalues of each family member falling strictly inside
/// `(lo, hi)`, with a tolerance guard at both ends.
pub fn gap_probe(
    families: &[ProbeFamily],
    n_min: usize,
    n_max: usize,
    lo: f64,
    hi: f64,
    tol: f64,
) -> Result<Vec<ProbeRow>, Error> {
    if lo >= hi {
        return Err(Error::ParameterRange {
            name: "interval",
            value: 0,
            allowed: "lo < hi",
        });
    }
    let mut rows = Vec::new();
    for fam in families {
        for n in n_min..=n_max {
            let Some(g) = fam.build(n) else { continue };
            let spectrum = crate::spectral::eigenvalues(&g)?;
            rows.push(ProbeRow {
                family: fam.name(),
                n,
                order: g.n(),
                inside: spectrum.inside_open_interval(lo, hi, tol),
            });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;

    #[test]
    fn tiny_levels() {
        assert_eq!(enumerate_connected_subcubic(1).unwrap().len(), 1);
        let two = enumerate_connected_subcubic(2).unwrap();
        assert_eq!(two.len(), 1);
        assert_eq!(two[0].edge_count(), 1);
        let three = enumerate_connected_subcubic(3).unwrap();
        assert_eq!(three.len(), 2); // P3 and K3
        let four = enumerate_connected_subcubic(4).unwrap();
        assert_eq!(four.len(), 6); // P4, claw, C4, paw, diamond, K4
    }

    // Brute-force oracle: all connected subcubic graphs on n vertices by
    // edge-mask enumeration, deduplicated by canonical form.
    fn brute_force(n: usize) -> std::collections::HashSet<Vec<u8>> {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        let mut out = std::collections::HashSet::new();
        for mask in 0u32..(1 << pairs.len()) {
            let mut g = Graph::new(n);
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    g.add_edge(u, v).unwrap();
                }
            }
            if g.is_connected() && g.is_subcubic() {
                out.insert(canonical_form(&g).unwrap());
            }
        }
        out
    }

    #[test]
    fn generator_matches_brute_force_up_to_six() {
        for n in 1..=6 {
            let generated: std::collections::HashSet<Vec<u8>> = enumerate_connected_subcubic(n)
                .unwrap()
                .iter()
                .map(|g| canonical_form(g).unwrap())
                .collect();
            assert_eq!(generated, brute_force(n), "mismatch at n = {n}");
        }
    }

    #[test]
    fn no_duplicates_and_correct_shape() {
        for n in 1..=7 {
            let graphs = enumerate_connected_subcubic(n).unwrap();
            let forms: std::collections::HashSet<Vec<u8>> = graphs
                .iter()
                .map(|g| canonical_form(g).unwrap())
                .collect();
            assert_eq!(forms.len(), graphs.len());
            for g in &graphs {
                assert_eq!(g.n(), n);
                assert!(g.is_connected());
                assert!(g.is_subcubic());
            }
        }
    }

    #[test]
    fn parallel_generation_agrees() {
        let serial = connected_subcubic_levels(7, 1).unwrap();
        let parallel = connected_subcubic_levels(7, 4).unwrap();
        for (a, b) in serial.iter().zip(&parallel) {
            let fa: Vec<Vec<u8>> = a.iter().map(|g| canonical_form(g).unwrap()).collect();
            let fb: Vec<Vec<u8>> = b.iter().map(|g| canonical_form(g).unwrap()).collect();
            assert_eq!(fa, fb);
        }
    }

    #[test]
    fn census_at_three_keeps_only_k2_and_k3() {
        let report = census(&EnumConfig::new(3)).unwrap();
        let names = report.non_cubic_survivor_names();
        assert_eq!(names, vec!["k2", "k3"]);
        assert!(!report.has_mismatches());
    }

    #[test]
    fn census_at_eight_matches_catalog() {
        let report = census(&EnumConfig::new(8).with_workers(2)).unwrap();
        assert!(!report.has_mismatches());
        let names = report.non_cubic_survivor_names();
        assert_eq!(names.len(), 5);
        for expect in ["k2", "k3", "c6", "hj_prime(1)", "g6-b"] {
            assert!(names.contains(&expect.to_string()), "missing {expect}");
        }
        // Cubic survivors are reported but never matched against the
        // catalog: K4 at order 4, and at order 8 at least gm(2) and ks(2).
        let cubic_at = |n: usize| {
            report.rows[n - 1]
                .survivors
                .iter()
                .filter(|s| s.name == "cubic")
                .count()
        };
        assert_eq!(cubic_at(4), 1);
        assert!(cubic_at(8) >= 2);
    }

    #[test]
    fn probe_reports_gap_families_clean_inside_unit_interval() {
        let rows = gap_probe(&[ProbeFamily::Hj], 1, 6, -1.0, 1.0, 1e-8).unwrap();
        assert!(rows.iter().all(|r| r.inside.is_empty()));
    }

    #[test]
    fn filtered_census_does_not_expect_excluded_catalog_members() {
        // K2 has minimum degree 1, so the min-degree-2 universe neither
        // generates it nor reports it missing.
        let mut cfg = EnumConfig::new(4);
        cfg.filter = EnumFilter::MinDegTwo;
        let report = census(&cfg).unwrap();
        assert!(!report.has_mismatches());
        let names = report.non_cubic_survivor_names();
        assert_eq!(names, vec!["k3"]);
    }
}
