//! Exact spectral-gap machinery for subcubic graphs.
//!
//! The crate decides, in exact rational arithmetic, whether a graph has any
//! adjacency eigenvalue in the open interval `(-1, 1)`, produces re-verifiable
//! certificates for either outcome, constructs the graph families relevant to
//! that question (twisted ladders, the KS/GM cubic families, the HJ catalog and
//! the girth-6 sporadics), and verifies the catalog against exhaustive
//! enumeration of connected subcubic graphs at small orders.
//!
//! Module map:
//!
//! * [`graph`] — simple graphs, structural predicates, bipartite doubles.
//! * [`multigraph`] — multigraphs, rooted distance-two machinery, clique attachment.
//! * [`petals`] — graphs with petals and their (generalized) line graphs.
//! * [`canon`] — canonical forms and isomorphism for graphs and rooted multigraphs.
//! * [`involution`] — free part-swapping involutions and quotients.
//! * [`spectral`] — floating eigensolver, exact PSD certificates, gap decisions.
//! * [`structure`] — forbidden-pattern scanners, Krausz partitions, decompositions.
//! * [`families`] — deterministic constructors for every catalog graph.
//! * [`enumerate`] — orderly generation and the desk-scale census.
//!
//! ```
//! use gapset::{families, spectral};
//!
//! let g = families::hj(1).unwrap();
//! let (gap_free, certificate) = spectral::gap_avoids_unit_interval(&g);
//! assert!(gap_free);
//! assert!(certificate.verify(&spectral::gap::walk_matrix_minus_identity(&g)));
//! ```

// Matrix kernels and symmetric index juggling read better with explicit
// indices than with iterator chains.
#![allow(clippy::needless_range_loop)]

pub mod canon;
pub mod dot;
mod error;
pub mod enumerate;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod involution;
pub mod multigraph;
pub mod petals;
pub mod spectral;
pub mod structure;

pub use error::Error;
pub use graph::Graph;
pub use multigraph::{Multigraph, RootedMultigraph};
pub use petals::GraphWithPetals;

/// Largest vertex count supported by canonical forms and enumeration.
pub const MAX_CANON_VERTICES: usize = 64;

/// FNV-1a content hash, used to reference certificate artifacts.
pub fn content_hash(bytes: &[u8]) -> String {
    let mut h: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x100000001b3);
    }
    format!("fnv1a:{h:016x}")
}
