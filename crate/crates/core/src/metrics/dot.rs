use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use crate::rdf::{local_name, Node, NodeId, NodeKind, RdfGraph, TripleId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DotOptions {
    /// Labels longer than this many characters are cut and end in `…`.
    pub max_label_length: usize,
}

impl Default for DotOptions {
    fn default() -> Self {
        Self { max_label_length: 40 }
    }
}

/// Stable DOT identifier derived from the term's kind and lexical form.
pub fn dot_node_id(node: &Node) -> String {
    let mut hasher = Sha256::new();
    let kind = match node.kind() {
        NodeKind::Iri => "I",
        NodeKind::BlankNode => "B",
        NodeKind::Literal => "L",
    };
    hasher.update(kind.as_bytes());
    hasher.update([0]);
    hasher.update(node.lexical().as_bytes());
    if let Some(tag) = node.tag() {
        hasher.update([0]);
        hasher.update(format!("{tag:?}").as_bytes());
    }
    let digest = hasher.finalize();
    let mut id = String::from("n");
    for b in &digest[..8] {
        let _ = write!(id, "{b:02x}");
    }
    id
}

/// Renders the snippet's triples as one DOT digraph.
pub fn to_dot(graph: &RdfGraph, triples: &[TripleId], options: &DotOptions) -> String {
    snippet_to_dot(graph, triples, &[], options)
}

/// Like [`to_dot`], also drawing `extra_nodes` (used for zero-triple trees).
pub fn snippet_to_dot(graph: &RdfGraph, triples: &[TripleId], extra_nodes: &[NodeId], options: &DotOptions) -> String {
    let mut nodes = graph.nodes_of(triples);
    nodes.extend_from_slice(extra_nodes);
    nodes.sort_unstable();
    nodes.dedup();
    if nodes.is_empty() {
        return "digraph snippet { }\n".to_string();
    }
    let mut sorted = triples.to_vec();
    sorted.sort_unstable();

    let mut out = String::from("digraph snippet {\n");
    for &n in &nodes {
        let node = graph.node(n);
        let shape = if node.is_literal() { "box" } else { "ellipse" };
        let _ = writeln!(
            out,
            "  {} [label=\"{}\", shape={shape}];",
            dot_node_id(node),
            escape(&truncate(&node.display_label(), options.max_label_length))
        );
    }
    for t in sorted {
        let r = graph.triple(t);
        let predicate = graph.node(r.predicate).lexical();
        let _ = writeln!(
            out,
            "  {} -> {} [label=\"{}\"];",
            dot_node_id(graph.node(r.subject)),
            dot_node_id(graph.node(r.object)),
            escape(&truncate(local_name(predicate), options.max_label_length))
        );
    }
    out.push_str("}\n");
    out
}

fn truncate(label: &str, max: usize) -> String {
    if label.chars().count() <= max {
        return label.to_string();
    }
    let mut cut: String = label.chars().take(max.saturating_sub(1)).collect();
    cut.push('…');
    cut
}

fn escape(label: &str) -> String {
    let mut out = String::with_capacity(label.len());
    for c in label.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => {}
            c => out.push(c),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rdf::{parse_str, ParseMode};

    #[test]
    fn empty_snippet() {
        let g = RdfGraph::from_triples(Vec::new());
        assert_eq!(to_dot(&g, &[], &DotOptions::default()).trim(), "digraph snippet { }");
    }

    #[test]
    fn single_triple() {
        let (g, _) = parse_str(
            "<http://ex.org/a> <http://ex.org/v#knows> \"Bob \\\"B\\\"\" .\n",
            ParseMode::Strict,
        )
        .unwrap();
        let dot = to_dot(&g, &[TripleId(0)], &DotOptions::default());
        let lines: Vec<&str> = dot.lines().collect();
        assert_eq!(lines.len(), 5);
        assert!(lines[1].contains(r#"[label="Bob \"B\"", shape=box]"#), "{dot}");
        assert!(lines[2].contains(r#"[label="a", shape=ellipse]"#), "{dot}");
        assert!(lines[3].ends_with(r#"[label="knows"];"#));
    }

    #[test]
    fn labels_truncate_with_ellipsis() {
        assert_eq!(truncate("abcdef", 4), "abc…");
        assert_eq!(truncate("abcd", 4), "abcd");
        assert_eq!(truncate("ééééé", 3), "éé…");
    }

    #[test]
    fn ids_are_stable_and_kind_sensitive() {
        let a = dot_node_id(&Node::iri("x").unwrap());
        assert_eq!(a, dot_node_id(&Node::iri("x").unwrap()));
        assert_ne!(a, dot_node_id(&Node::literal("x")));
        assert_eq!(a.len(), 17);
    }
}
