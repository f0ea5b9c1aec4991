//! DOT export for figures.

use crate::Graph;

/// Render a graph in DOT format. `name` becomes the graph id.
pub fn to_dot(g: &Graph, name: &str) -> String {
    let mut out = format!("graph {name} {{\n");
    for v in 0..g.n() {
        out.push_str(&format!("  {v};\n"));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_dot() {
        let dot = to_dot(&crate::graph::complete(3), "k3");
        assert!(dot.starts_with("graph k3 {"));
        assert!(dot.contains("  0 -- 1;"));
        assert!(dot.contains("  1 -- 2;"));
        assert!(dot.ends_with("}\n"));
    }
}
