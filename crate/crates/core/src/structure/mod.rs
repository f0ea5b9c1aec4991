//! Line-graph and decomposition machinery: forbidden-pattern scanners,
//! Krausz partitions and root graphs, generalized-line-graph witnesses,
//! and triangle-edge decompositions with their intersection and incidence
//! graphs.

pub mod decomp;
pub mod forbidden;
pub mod krausz;

pub use decomp::{
    check_decomposition_counts, incidence_from_parts, incidence_graph, intersection_graph,
    valid_decompositions, Decomposition,
};
pub use forbidden::{is_line_graph, scan_forbidden_rooted, ForbiddenWitness, PatternId, RootedPattern};
pub use krausz::{
    all_root_graphs, generalized_line_graph_witness, root_graph, RootGraphWitness,
};
