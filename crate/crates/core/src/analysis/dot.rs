use alloc::string::String;
use core::fmt::Write;

use crate::graph::{CitationGraph, NodeId};

fn quote(text: &str) -> String {
    let mut out = String::with_capacity(text.len() + 2);
    out.push('"');
    for c in text.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            _ => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Graphviz rendering of a (sub)graph. Authors are ellipses, papers boxes;
/// wrote edges are undirected and dashed, citations directed.
///
/// `scores`, when given, is indexed by the graph's global node order.
pub fn export_dot(graph: &CitationGraph, scores: Option<&[f64]>) -> String {
    let mut out = String::from("digraph citations {\n");
    let node_line = |out: &mut String, id: NodeId| {
        let shape = if id.is_author() { "ellipse" } else { "box" };
        let mut label = String::new();
        let _ = write!(label, "{}\n{}", graph.key(id), graph.label(id));
        if let Some(s) = scores.and_then(|s| s.get(graph.global_index(id))) {
            let _ = write!(label, "\n{s:.6}");
        }
        let _ = writeln!(
            out,
            "  {} [shape={shape}, label={}];",
            quote(graph.key(id)),
            quote(&label)
        );
    };
    for id in graph.nodes() {
        node_line(&mut out, id);
    }
    for (a, p) in graph.wrote_edges() {
        let _ = writeln!(
            out,
            "  {} -> {} [dir=none, style=dashed];",
            quote(graph.key(NodeId::author(a))),
            quote(graph.key(NodeId::paper(p)))
        );
    }
    for (p, q) in graph.cite_edges() {
        let _ = writeln!(
            out,
            "  {} -> {};",
            quote(graph.key(NodeId::paper(p))),
            quote(graph.key(NodeId::paper(q)))
        );
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, Author, Paper};
    use alloc::vec;

    #[test]
    fn empty_graph() {
        assert_eq!(export_dot(&CitationGraph::default(), None), "digraph citations {\n}\n");
    }

    #[test]
    fn author_and_paper() {
        let (g, _) = build_graph(
            vec![Author::new("a0", "Ann \"Q\" Lee", true)],
            vec![Paper::new("p0", "On Things", true)],
            &[(0, 0)],
            &[],
        )
        .unwrap();
        let dot = export_dot(&g, Some(&[0.5, 1.5]));
        assert_eq!(
            dot,
            "digraph citations {\n  \"a0\" [shape=ellipse, label=\"a0\\nAnn \\\"Q\\\" Lee\\n0.500000\"];\n  \"p0\" [shape=box, label=\"p0\\nOn Things\\n1.500000\"];\n  \"a0\" -> \"p0\" [dir=none, style=dashed];\n}\n"
        );
    }

    #[test]
    fn mutual_citations_are_two_directed_edges() {
        let (g, _) = build_graph(
            vec![],
            vec![Paper::new("x", "X", true), Paper::new("y", "Y", true)],
            &[],
            &[(0, 1), (1, 0)],
        )
        .unwrap();
        let dot = export_dot(&g, None);
        assert!(dot.contains("  \"x\" -> \"y\";\n"));
        assert!(dot.contains("  \"y\" -> \"x\";\n"));
        assert_eq!(dot.matches("->").count(), 2);
        assert_eq!(dot, export_dot(&g, None));
    }
}
