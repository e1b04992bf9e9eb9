//! Graph exports.

use serde_json::{json, Value};
use sfactor_core::Graph;

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Undirected DOT with element labels.
pub fn to_dot(g: &Graph, name: &str) -> String {
    let mut out = format!("graph \"{}\" {{\n", dot_escape(name));
    for (i, label) in g.labels().iter().enumerate() {
        out.push_str(&format!("  {i} [label=\"{}\"];\n", dot_escape(label)));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

/// `{"n", "labels", "edges"}` with `u < v` and edges sorted.
pub fn graph_json(g: &Graph) -> Value {
    let edges: Vec<[usize; 2]> = g.edges().into_iter().map(|(u, v)| [u, v]).collect();
    json!({ "n": g.n(), "labels": g.labels(), "edges": edges })
}
