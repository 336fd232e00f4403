//! Query-biased snippets as group Steiner trees.
//!
//! Each query keyword becomes a group of matching nodes; the snippet is the
//! minimum-weight tree touching every group. Connectivity ignores edge
//! direction.

mod brute;
mod pipeline;
mod solver;

use std::collections::{BTreeSet, HashMap};

pub use brute::{bf_gst, bf_gst_with_weights, BF_GST_MAX_TRIPLES};
pub use pipeline::{
    query_biased_snippet, query_biased_snippet_traced, QueryBiasedConfig, QueryBiasedSnippet, SnippetError, Stage,
};
pub use solver::{GstSolver, PopEvent};

use crate::query::{KeywordGroups, DEFAULT_MAX_KEYWORDS};
use crate::rdf::{NodeId, RdfGraph, TripleId, WeightScheme};

/// Upper bound on keyword groups; the state space grows as `2^groups`.
pub const MAX_GROUPS: usize = DEFAULT_MAX_KEYWORDS;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GstError {
    #[error("no keyword groups to connect")]
    NoGroups,
    #[error("keyword '{0}' matches no node")]
    EmptyGroup(String),
    #[error("{count} keyword groups exceed the limit of {max}")]
    TooManyGroups { count: usize, max: usize },
    #[error("no connected cover: keywords {separated:?} are not reachable from the others")]
    NoConnectedCover { separated: Vec<String> },
    #[error("graph has {triples} triples; exhaustive search is limited to {max}")]
    TooLarge { triples: usize, max: usize },
}

/// A tree of triples touching every keyword group.
#[derive(Debug, Clone, PartialEq)]
pub struct SnippetTree {
    /// Sorted by id.
    pub triples: Vec<TripleId>,
    /// Nodes of the tree, sorted; one node when there are no triples.
    pub nodes: Vec<NodeId>,
    pub total_weight: f64,
    /// Keyword → a tree node from its group, in group order.
    pub witnesses: Vec<(String, NodeId)>,
}

impl SnippetTree {
    /// Checks the structural invariants against the groups it was built for
    /// and returns a description of the first violation.
    pub fn check(&self, graph: &RdfGraph, groups: &KeywordGroups, scheme: WeightScheme) -> Result<(), String> {
        let expected_nodes = if self.triples.is_empty() {
            self.nodes.clone()
        } else {
            graph.nodes_of(&self.triples)
        };
        if self.nodes != expected_nodes || self.nodes.is_empty() {
            return Err("node list does not match the triples".into());
        }
        if self.triples.is_empty() && self.nodes.len() != 1 {
            return Err("a zero-triple tree must have exactly one node".into());
        }
        if self.nodes.len() != self.triples.len() + 1 {
            return Err(format!(
                "{} nodes for {} triples: not a tree",
                self.nodes.len(),
                self.triples.len()
            ));
        }
        if !is_connected(graph, &self.triples) {
            return Err("triples are not connected".into());
        }
        let node_set: BTreeSet<NodeId> = self.nodes.iter().copied().collect();
        let witnesses: HashMap<&str, NodeId> = self.witnesses.iter().map(|(k, v)| (k.as_str(), *v)).collect();
        for g in &groups.groups {
            let w = witnesses
                .get(g.keyword.as_str())
                .ok_or_else(|| format!("keyword '{}' has no witness", g.keyword))?;
            if !node_set.contains(w) || g.nodes.binary_search(w).is_err() {
                return Err(format!("witness for '{}' is not a tree node in its group", g.keyword));
            }
        }
        let weight: f64 = self.triples.iter().map(|&t| scheme.weight(graph, t)).sum();
        if (weight - self.total_weight).abs() > 1e-9 * weight.max(1.0) {
            return Err(format!(
                "total weight {} differs from edge sum {weight}",
                self.total_weight
            ));
        }
        Ok(())
    }
}

/// Whether the undirected graph formed by `triples` is a single component.
pub fn is_connected(graph: &RdfGraph, triples: &[TripleId]) -> bool {
    let nodes = graph.nodes_of(triples);
    if nodes.len() <= 1 {
        return true;
    }
    let index = |v: NodeId| nodes.binary_search(&v).expect("node of triples");
    let mut parent: Vec<usize> = (0..nodes.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = nodes.len();
    for &t in triples {
        let r = graph.triple(t);
        let (a, b) = (find(&mut parent, index(r.subject)), find(&mut parent, index(r.object)));
        if a != b {
            parent[a] = b;
            components -= 1;
        }
    }
    components == 1
}

/// Solves with the default solver configuration.
pub fn solve_gst(graph: &RdfGraph, groups: &KeywordGroups, scheme: WeightScheme) -> Result<SnippetTree, GstError> {
    GstSolver::new(graph, scheme).solve(groups)
}
