use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::graph::{NodeId, RdfGraph};
use super::term::RDF_TYPE;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", default)]
pub struct PageRankConfig {
    pub damping: f64,
    pub tolerance: f64,
    pub max_iterations: usize,
}

impl Default for PageRankConfig {
    fn default() -> Self {
        Self {
            damping: 0.85,
            tolerance: 1e-8,
            max_iterations: 100,
        }
    }
}

impl PageRankConfig {
    pub fn validate(&self) -> Result<(), String> {
        if !(self.damping > 0.0 && self.damping < 1.0) {
            return Err(format!("damping must lie in (0, 1), got {}", self.damping));
        }
        if self.tolerance.is_nan() || self.tolerance <= 0.0 {
            return Err(format!("tolerance must be positive, got {}", self.tolerance));
        }
        if self.max_iterations == 0 {
            return Err("maxIterations must be at least 1".into());
        }
        Ok(())
    }
}

/// Counts and centrality scores derived from a graph.
#[derive(Debug, Clone)]
pub struct GraphStats {
    degree: Vec<usize>,
    class_freq: BTreeMap<NodeId, usize>,
    prop_freq: BTreeMap<NodeId, usize>,
    /// Indexed by node id; zero for literals and predicate-only terms.
    pagerank: Vec<f64>,
    entities: Vec<NodeId>,
    /// PageRank scores sorted in decreasing order.
    ranked_scores: Vec<f64>,
    total_class_freq: usize,
    iterations: usize,
}

impl GraphStats {
    pub fn compute(graph: &RdfGraph, config: &PageRankConfig) -> Self {
        let n = graph.term_count();
        let degree: Vec<usize> = (0..n as u32).map(|i| graph.degree(NodeId(i))).collect();

        let rdf_type = graph.node_id(&super::Node::iri(RDF_TYPE).expect("valid IRI"));
        let mut prop_freq = BTreeMap::new();
        let mut typed: Vec<(NodeId, NodeId)> = Vec::new();
        for id in graph.triple_ids() {
            let t = graph.triple(id);
            *prop_freq.entry(t.predicate).or_insert(0) += 1;
            if Some(t.predicate) == rdf_type && !graph.node(t.object).is_literal() {
                typed.push((t.object, t.subject));
            }
        }
        // Triples are unique, so (class, subject) pairs are already distinct.
        let mut class_freq = BTreeMap::new();
        for (class, _) in &typed {
            *class_freq.entry(*class).or_insert(0) += 1;
        }
        let total_class_freq = class_freq.values().sum();

        let entities: Vec<NodeId> = graph.graph_nodes().filter(|&v| !graph.node(v).is_literal()).collect();
        let (pagerank, iterations) = power_iteration(graph, &entities, config);
        let mut ranked_scores: Vec<f64> = entities.iter().map(|v| pagerank[v.index()]).collect();
        ranked_scores.sort_by(|a, b| b.total_cmp(a));

        Self {
            degree,
            class_freq,
            prop_freq,
            pagerank,
            entities,
            ranked_scores,
            total_class_freq,
            iterations,
        }
    }

    pub fn degree(&self, n: NodeId) -> usize {
        self.degree[n.index()]
    }

    /// Class id → number of distinct typed subjects.
    pub fn class_freq(&self) -> &BTreeMap<NodeId, usize> {
        &self.class_freq
    }

    /// Predicate id → number of triples using it.
    pub fn prop_freq(&self) -> &BTreeMap<NodeId, usize> {
        &self.prop_freq
    }

    pub fn total_class_freq(&self) -> usize {
        self.total_class_freq
    }

    pub fn total_prop_freq(&self) -> usize {
        self.prop_freq.values().sum()
    }

    /// Score of an entity; `None` for literals and predicate-only terms.
    pub fn pagerank(&self, n: NodeId) -> Option<f64> {
        self.entities.binary_search(&n).ok().map(|_| self.pagerank[n.index()])
    }

    /// Score lookup that treats non-entities as zero.
    pub(crate) fn pagerank_or_zero(&self, n: NodeId) -> f64 {
        self.pagerank.get(n.index()).copied().unwrap_or(0.0)
    }

    pub fn entities(&self) -> &[NodeId] {
        &self.entities
    }

    /// Sum of the `count` largest PageRank scores.
    pub fn top_pagerank_mass(&self, count: usize) -> f64 {
        self.ranked_scores.iter().take(count).sum()
    }

    pub fn pagerank_iterations(&self) -> usize {
        self.iterations
    }
}

/// PageRank over the undirected entity graph: every triple between two
/// distinct non-literal nodes contributes one edge in each direction.
/// Dangling entities spread their mass uniformly; teleport is uniform.
fn power_iteration(graph: &RdfGraph, entities: &[NodeId], config: &PageRankConfig) -> (Vec<f64>, usize) {
    let mut scores = vec![0.0; graph.term_count()];
    let count = entities.len();
    if count == 0 {
        return (scores, 0);
    }
    let mut position = vec![usize::MAX; graph.term_count()];
    for (i, v) in entities.iter().enumerate() {
        position[v.index()] = i;
    }
    let neighbours: Vec<Vec<usize>> = entities
        .iter()
        .map(|&v| {
            graph
                .incident(v)
                .iter()
                .map(|&t| graph.triple(t))
                .filter(|t| !t.is_self_loop())
                .map(|t| t.other_end(v))
                .filter(|u| !graph.node(*u).is_literal())
                .map(|u| position[u.index()])
                .collect()
        })
        .collect();

    let d = config.damping;
    let uniform = 1.0 / count as f64;
    let mut current = vec![uniform; count];
    let mut next = vec![0.0; count];
    let mut iterations = 0;
    while iterations < config.max_iterations {
        iterations += 1;
        let dangling: f64 = (0..count)
            .filter(|&i| neighbours[i].is_empty())
            .map(|i| current[i])
            .sum();
        let base = (1.0 - d) * uniform + d * dangling * uniform;
        for (i, slot) in next.iter_mut().enumerate() {
            let inflow: f64 = neighbours[i]
                .iter()
                .map(|&j| current[j] / neighbours[j].len() as f64)
                .sum();
            *slot = base + d * inflow;
        }
        let change: f64 = current.iter().zip(&next).map(|(a, b)| (a - b).abs()).sum();
        std::mem::swap(&mut current, &mut next);
        if change < config.tolerance {
            break;
        }
    }
    for (i, v) in entities.iter().enumerate() {
        scores[v.index()] = current[i];
    }
    (scores, iterations)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rdf::{parse_str, Node, ParseMode};

    fn graph(src: &str) -> RdfGraph {
        parse_str(src, ParseMode::Strict).unwrap().0
    }

    #[test]
    fn two_entities_split_evenly() {
        let g = graph("<x> <p> <y> .\n");
        let s = g.stats();
        let x = g.node_id(&Node::iri("x").unwrap()).unwrap();
        let y = g.node_id(&Node::iri("y").unwrap()).unwrap();
        assert!((s.pagerank(x).unwrap() - 0.5).abs() < 1e-12);
        assert!((s.pagerank(y).unwrap() - 0.5).abs() < 1e-12);
        let p = g.node_id(&Node::iri("p").unwrap()).unwrap();
        assert_eq!(s.pagerank(p), None);
    }

    #[test]
    fn class_frequency_counts_typed_subjects() {
        let ty = RDF_TYPE;
        let g = graph(&format!(
            "<x> <{ty}> <C> .\n<y> <{ty}> <C> .\n<y> <{ty}> <D> .\n<x> <{ty}> \"C\" .\n"
        ));
        let s = g.stats();
        let c = g.node_id(&Node::iri("C").unwrap()).unwrap();
        let d = g.node_id(&Node::iri("D").unwrap()).unwrap();
        assert_eq!(s.class_freq().get(&c), Some(&2));
        assert_eq!(s.class_freq().get(&d), Some(&1));
        assert_eq!(s.class_freq().len(), 2);
        assert_eq!(s.total_prop_freq(), 4);
    }

    #[test]
    fn literals_excluded_from_pagerank() {
        let g = graph("<x> <p> \"lit\" .\n<x> <p> <y> .\n<y> <q> <z> .\n");
        let s = g.stats();
        assert_eq!(s.entities().len(), 3);
        let lit = g.node_id(&Node::literal("lit")).unwrap();
        assert_eq!(s.pagerank(lit), None);
        let total: f64 = s.entities().iter().map(|&v| s.pagerank(v).unwrap()).sum();
        assert!((total - 1.0).abs() < 1e-9);
    }

    #[test]
    fn empty_entity_set_is_valid() {
        let g = RdfGraph::from_triples(Vec::new());
        let s = g.stats();
        assert!(s.entities().is_empty());
        assert!(s.class_freq().is_empty());
        assert_eq!(s.top_pagerank_mass(4), 0.0);
    }

    #[test]
    fn config_validation() {
        assert!(PageRankConfig::default().validate().is_ok());
        let bad = PageRankConfig {
            damping: 1.0,
            ..Default::default()
        };
        assert!(bad.validate().is_err());
    }
}
