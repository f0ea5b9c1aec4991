//! Frozen graph6 strings for the family constructors. The vertex labeling
//! schemes are part of the public contract, so these bytes must never
//! drift.

use gapset::families::*;
use gapset::graph6::encode;
use gapset::Graph;

fn build(name: &str) -> Graph {
    if let Some(rest) = name.strip_prefix("twisted_ladder(") {
        return twisted_ladder(rest.trim_end_matches(')').parse().unwrap()).unwrap();
    }
    if let Some(rest) = name.strip_prefix("ks(") {
        return ks(rest.trim_end_matches(')').parse().unwrap()).unwrap();
    }
    if let Some(rest) = name.strip_prefix("gm(") {
        return gm(rest.trim_end_matches(')').parse().unwrap()).unwrap();
    }
    if let Some(rest) = name.strip_prefix("hj_prime(") {
        return hj_prime(rest.trim_end_matches(')').parse().unwrap()).unwrap();
    }
    if let Some(rest) = name.strip_prefix("hj_plus(") {
        return hj_plus(rest.trim_end_matches(')').parse().unwrap()).unwrap();
    }
    if let Some(rest) = name.strip_prefix("hj(") {
        return hj(rest.trim_end_matches(')').parse().unwrap()).unwrap();
    }
    if let Some(rest) = name.strip_prefix("g6-") {
        return sporadic_g6(rest.chars().next().unwrap()).unwrap();
    }
    match name {
        "k2" => gapset::graph::complete(2),
        "k3" => gapset::graph::complete(3),
        other => classic_cubic(other).unwrap(),
    }
}

#[test]
fn family_graph6_strings_are_stable() {
    let golden = include_str!("golden/families.g6");
    let mut checked = 0;
    for line in golden.lines() {
        let (name, expect) = line.split_once(' ').unwrap();
        let g = build(name);
        assert_eq!(encode(&g).unwrap(), expect, "graph6 drift for {name}");
        checked += 1;
    }
    assert_eq!(checked, 29);
}
