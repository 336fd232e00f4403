use std::collections::HashSet;

use serde::Serialize;

use super::{IllusnipConfig, IllusnipError};
use crate::metrics::{check_triples, covered_schema};
use crate::rdf::{Node, NodeId, RdfGraph, TripleId, RDF_TYPE};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ScoreBreakdown {
    #[serde(serialize_with = "crate::util::ser_4dp")]
    pub class_coverage: f64,
    #[serde(serialize_with = "crate::util::ser_4dp")]
    pub property_coverage: f64,
    #[serde(serialize_with = "crate::util::ser_4dp")]
    pub centrality: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SnippetScore {
    #[serde(serialize_with = "crate::util::ser_4dp")]
    pub score: f64,
    pub breakdown: ScoreBreakdown,
}

/// Scores a triple set: weighted sum of frequency-weighted class coverage,
/// frequency-weighted property coverage, and PageRank mass of the touched
/// entities relative to the top `2k` scores in the dataset.
pub fn score_snippet(
    graph: &RdfGraph,
    triples: &[TripleId],
    config: &IllusnipConfig,
) -> Result<SnippetScore, IllusnipError> {
    check_triples(graph, triples).map_err(|_| IllusnipError::UnknownTriple)?;
    Ok(Objective::new(graph, config).score(triples))
}

/// Precomputed normalizers and per-triple contributions.
pub(crate) struct Objective<'g> {
    graph: &'g RdfGraph,
    weights: [f64; 3],
    class_total: f64,
    prop_total: f64,
    centrality_norm: f64,
    rdf_type: Option<NodeId>,
}

/// Covered elements and raw sums of a growing snippet.
#[derive(Clone, Default)]
pub(crate) struct Coverage {
    classes: HashSet<NodeId>,
    predicates: HashSet<NodeId>,
    nodes: HashSet<NodeId>,
    class_mass: f64,
    prop_mass: f64,
    rank_mass: f64,
}

impl<'g> Objective<'g> {
    pub(crate) fn new(graph: &'g RdfGraph, config: &IllusnipConfig) -> Self {
        let stats = graph.stats();
        Self {
            graph,
            weights: [config.alpha, config.beta, config.gamma],
            class_total: stats.total_class_freq() as f64,
            prop_total: graph.triple_count() as f64,
            centrality_norm: stats.top_pagerank_mass(2 * config.k),
            rdf_type: Node::iri(RDF_TYPE).ok().and_then(|n| graph.node_id(&n)),
        }
    }

    pub(crate) fn score(&self, triples: &[TripleId]) -> SnippetScore {
        let stats = self.graph.stats();
        let (classes, predicates) = covered_schema(self.graph, triples);
        let class_mass: usize = classes.iter().map(|c| stats.class_freq()[c]).sum();
        let prop_mass: usize = predicates.iter().map(|p| stats.prop_freq()[p]).sum();
        let rank_mass: f64 = self
            .graph
            .nodes_of(triples)
            .into_iter()
            .map(|v| stats.pagerank_or_zero(v))
            .sum();
        self.evaluate(class_mass as f64, prop_mass as f64, rank_mass)
    }

    fn evaluate(&self, class_mass: f64, prop_mass: f64, rank_mass: f64) -> SnippetScore {
        let ratio = |hit: f64, total: f64| if total > 0.0 { hit / total } else { 0.0 };
        let breakdown = ScoreBreakdown {
            class_coverage: ratio(class_mass, self.class_total),
            property_coverage: ratio(prop_mass, self.prop_total),
            centrality: ratio(rank_mass, self.centrality_norm).min(1.0),
        };
        let [a, b, c] = self.weights;
        SnippetScore {
            score: a * breakdown.class_coverage + b * breakdown.property_coverage + c * breakdown.centrality,
            breakdown,
        }
    }

    /// Score of `coverage` extended by triple `t`, without mutating it.
    pub(crate) fn score_with(&self, coverage: &Coverage, t: TripleId) -> f64 {
        let (dc, dp, dr) = self.delta(coverage, t);
        self.evaluate(
            coverage.class_mass + dc,
            coverage.prop_mass + dp,
            coverage.rank_mass + dr,
        )
        .score
    }

    pub(crate) fn add(&self, coverage: &mut Coverage, t: TripleId) {
        let (dc, dp, dr) = self.delta(coverage, t);
        coverage.class_mass += dc;
        coverage.prop_mass += dp;
        coverage.rank_mass += dr;
        let r = self.graph.triple(t);
        coverage.predicates.insert(r.predicate);
        if let Some(c) = self.class_of(t) {
            coverage.classes.insert(c);
        }
        coverage.nodes.insert(r.subject);
        coverage.nodes.insert(r.object);
    }

    fn class_of(&self, t: TripleId) -> Option<NodeId> {
        let r = self.graph.triple(t);
        (Some(r.predicate) == self.rdf_type && !self.graph.node(r.object).is_literal()).then_some(r.object)
    }

    fn delta(&self, coverage: &Coverage, t: TripleId) -> (f64, f64, f64) {
        let stats = self.graph.stats();
        let r = self.graph.triple(t);
        let dc = match self.class_of(t) {
            Some(c) if !coverage.classes.contains(&c) => stats.class_freq()[&c] as f64,
            _ => 0.0,
        };
        let dp = if coverage.predicates.contains(&r.predicate) {
            0.0
        } else {
            stats.prop_freq()[&r.predicate] as f64
        };
        let mut dr = 0.0;
        if !coverage.nodes.contains(&r.subject) {
            dr += stats.pagerank_or_zero(r.subject);
        }
        if !r.is_self_loop() && !coverage.nodes.contains(&r.object) {
            dr += stats.pagerank_or_zero(r.object);
        }
        (dc, dp, dr)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rdf::{parse_str, ParseMode};

    const TY: &str = RDF_TYPE;

    fn fixture() -> RdfGraph {
        let src = format!(
            "<alice> <{TY}> <Person> .\n<bob> <{TY}> <Person> .\n<paris> <{TY}> <City> .\n\
             <alice> <name> \"Alice\" .\n<bob> <name> \"Bob\" .\n\
             <alice> <livesIn> <paris> .\n<bob> <livesIn> <paris> .\n<alice> <knows> <bob> .\n"
        );
        parse_str(&src, ParseMode::Strict).unwrap().0
    }

    #[test]
    fn empty_set_scores_zero() {
        let g = fixture();
        let s = score_snippet(&g, &[], &IllusnipConfig::default()).unwrap();
        assert_eq!(s.score, 0.0);
        assert_eq!(
            s.breakdown,
            ScoreBreakdown {
                class_coverage: 0.0,
                property_coverage: 0.0,
                centrality: 0.0
            }
        );
    }

    #[test]
    fn all_predicates_saturate_property_coverage() {
        let g = fixture();
        let all: Vec<_> = g.triple_ids().collect();
        let s = score_snippet(&g, &all, &IllusnipConfig::default()).unwrap();
        assert_eq!(s.breakdown.property_coverage, 1.0);
        assert_eq!(s.breakdown.class_coverage, 1.0);
        assert_eq!(s.breakdown.centrality, 1.0);
    }

    #[test]
    fn incremental_matches_full_recount() {
        let g = fixture();
        let config = IllusnipConfig {
            k: 2,
            ..Default::default()
        };
        let obj = Objective::new(&g, &config);
        let mut cov = Coverage::default();
        let mut chosen = Vec::new();
        for t in g.triple_ids() {
            let predicted = obj.score_with(&cov, t);
            obj.add(&mut cov, t);
            chosen.push(t);
            assert!((predicted - obj.score(&chosen).score).abs() < 1e-12);
        }
    }

    #[test]
    fn unknown_triple() {
        let g = fixture();
        assert_eq!(
            score_snippet(&g, &[TripleId(100)], &IllusnipConfig::default()),
            Err(IllusnipError::UnknownTriple)
        );
    }
}
