use std::collections::BTreeSet;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::tokenize::Query;
use crate::rdf::{Node, NodeId, RdfGraph, RDFS_LABEL};

/// Text fields consulted when matching a keyword against a node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum MatchField {
    /// IRI text after the last `/` or `#`.
    LocalName,
    /// Lexical form of a literal node.
    LiteralText,
    /// Lexical form of any literal attached through `rdfs:label`.
    LabelText,
}

impl MatchField {
    pub const ALL: [MatchField; 3] = [Self::LocalName, Self::LiteralText, Self::LabelText];
}

impl FromStr for MatchField {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "localName" | "local-name" => Ok(Self::LocalName),
            "literalText" | "literal-text" => Ok(Self::LiteralText),
            "labelText" | "label-text" => Ok(Self::LabelText),
            other => Err(format!("unknown match field '{other}'")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeywordGroup {
    pub keyword: String,
    /// Matching nodes in lexical order; never empty.
    pub nodes: Vec<NodeId>,
}

/// Keyword → matching nodes, in query keyword order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct KeywordGroups {
    pub groups: Vec<KeywordGroup>,
    pub unmatched: Vec<String>,
}

impl KeywordGroups {
    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn get(&self, keyword: &str) -> Option<&[NodeId]> {
        self.groups
            .iter()
            .find(|g| g.keyword == keyword)
            .map(|g| g.nodes.as_slice())
    }

    pub fn keywords(&self) -> impl Iterator<Item = &str> {
        self.groups.iter().map(|g| g.keyword.as_str())
    }

    /// Builds groups directly from node ids, e.g. for tests or callers that
    /// bypass keyword matching. Empty groups are recorded as unmatched.
    pub fn from_node_sets<K: Into<String>>(sets: impl IntoIterator<Item = (K, Vec<NodeId>)>) -> Self {
        let mut out = Self::default();
        for (keyword, mut nodes) in sets {
            nodes.sort_unstable();
            nodes.dedup();
            let keyword = keyword.into();
            if nodes.is_empty() {
                out.unmatched.push(keyword);
            } else {
                out.groups.push(KeywordGroup { keyword, nodes });
            }
        }
        out
    }

    /// Drops unmatched keywords from consideration, returning them.
    pub fn take_unmatched(&mut self) -> Vec<String> {
        std::mem::take(&mut self.unmatched)
    }
}

/// Maps each keyword to the graph nodes whose enabled fields contain it as a
/// case-insensitive substring. Only nodes occurring as subject or object are
/// candidates.
pub fn map_keywords(graph: &RdfGraph, query: &Query, fields: &BTreeSet<MatchField>) -> KeywordGroups {
    let label = Node::iri(RDFS_LABEL).ok().and_then(|n| graph.node_id(&n));
    let searchable: Vec<(NodeId, Vec<String>)> = graph
        .graph_nodes()
        .map(|n| (n, search_texts(graph, n, fields, label)))
        .filter(|(_, texts)| !texts.is_empty())
        .collect();

    let mut out = KeywordGroups::default();
    for keyword in &query.keywords {
        let needle = keyword.to_lowercase();
        let nodes: Vec<NodeId> = searchable
            .iter()
            .filter(|(_, texts)| texts.iter().any(|t| t.contains(&needle)))
            .map(|(n, _)| *n)
            .collect();
        if nodes.is_empty() {
            out.unmatched.push(keyword.clone());
        } else {
            out.groups.push(KeywordGroup {
                keyword: keyword.clone(),
                nodes,
            });
        }
    }
    out
}

fn search_texts(graph: &RdfGraph, n: NodeId, fields: &BTreeSet<MatchField>, label: Option<NodeId>) -> Vec<String> {
    let node = graph.node(n);
    let mut texts = Vec::new();
    if fields.contains(&MatchField::LocalName) {
        if let Some(local) = node.local_name() {
            texts.push(local.to_lowercase());
        }
    }
    if fields.contains(&MatchField::LiteralText) && node.is_literal() {
        texts.push(node.lexical().to_lowercase());
    }
    if let (true, Some(label)) = (fields.contains(&MatchField::LabelText), label) {
        for &t in graph.incident(n) {
            let t = graph.triple(t);
            if t.subject == n && t.predicate == label && graph.node(t.object).is_literal() {
                texts.push(graph.node(t.object).lexical().to_lowercase());
            }
        }
    }
    texts
}
