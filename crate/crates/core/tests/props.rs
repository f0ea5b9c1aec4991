//! Property tests across modules: canonical-form invariance, graph6
//! round-trips on enumerated corpora, double/quotient inversion, and the
//! spectral mirror property of doubles.

use gapset::canon::{are_isomorphic, canonical_form};
use gapset::enumerate::enumerate_connected_subcubic;
use gapset::involution::{quotient, Involution};
use gapset::spectral::eigenvalues;
use gapset::{graph6, Graph};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn arb_perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::vec(any::<u64>(), n).prop_map(move |keys| {
        let mut idx: Vec<usize> = (0..n).collect();
        idx.sort_by_key(|&i| keys[i]);
        let mut perm = vec![0; n];
        for (pos, &v) in idx.iter().enumerate() {
            perm[v] = pos;
        }
        perm
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form_is_relabeling_invariant(g in arb_graph(9), seed in any::<u64>()) {
        let perm = {
            let mut idx: Vec<usize> = (0..g.n()).collect();
            // Cheap deterministic shuffle from the seed.
            let mut s = seed | 1;
            for i in (1..idx.len()).rev() {
                s ^= s << 13;
                s ^= s >> 7;
                s ^= s << 17;
                idx.swap(i, (s as usize) % (i + 1));
            }
            idx
        };
        let relabeled = g.relabel(&perm);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&relabeled).unwrap());
    }

    #[test]
    fn graph6_roundtrip_on_random_graphs(g in arb_graph(12)) {
        let s = graph6::encode(&g).unwrap();
        prop_assert_eq!(graph6::decode(&s).unwrap(), g);
    }

    #[test]
    fn colored_canonical_form_respects_permuted_colors(g in arb_graph(7), perm in arb_perm(7)) {
        prop_assume!(g.n() == 7);
        let colors: Vec<u8> = (0..7).map(|v| u8::from(v % 3 == 0)).collect();
        let relabeled = g.relabel(&perm);
        let relabeled_colors: Vec<u8> = {
            let mut c = vec![0u8; 7];
            for v in 0..7 {
                c[perm[v]] = colors[v];
            }
            c
        };
        prop_assert_eq!(
            gapset::canon::canonical_form_colored(&g, &colors).unwrap(),
            gapset::canon::canonical_form_colored(&relabeled, &relabeled_colors).unwrap()
        );
    }
}

#[test]
fn graph6_roundtrip_on_enumerated_corpus() {
    for n in 1..=7 {
        for g in enumerate_connected_subcubic(n).unwrap() {
            let s = graph6::encode(&g).unwrap();
            assert_eq!(graph6::decode(&s).unwrap(), g);
        }
    }
}

#[test]
fn double_then_quotient_recovers_nonbipartite_graphs() {
    // Connected non-bipartite subcubic graphs up to 7 vertices.
    for n in 3..=7 {
        for g in enumerate_connected_subcubic(n).unwrap() {
            if g.bipartition().unwrap().is_some() {
                continue;
            }
            let d = g.bipartite_double();
            let perm: Vec<usize> = (0..2 * n).map(|v| (v + n) % (2 * n)).collect();
            let s = Involution::new(&d, perm).unwrap();
            let q = quotient(&d, &s).unwrap();
            assert!(are_isomorphic(&q, &g).unwrap(), "quotient failed on {g:?}");
        }
    }
}

#[test]
fn double_spectra_mirror_on_enumerated_corpus() {
    for g in enumerate_connected_subcubic(7).unwrap() {
        let base = eigenvalues(&g).unwrap();
        let double = eigenvalues(&g.bipartite_double()).unwrap();
        let mut expect: Vec<f64> = base.values().iter().flat_map(|&l| [l, -l]).collect();
        expect.sort_by(|a, b| b.partial_cmp(a).unwrap());
        for (a, b) in double.values().iter().zip(&expect) {
            assert!((a - b).abs() < 1e-9);
        }
    }
}
