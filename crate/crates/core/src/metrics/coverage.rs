use std::collections::BTreeSet;

use serde::Serialize;

use crate::rdf::{Node, NodeId, RdfGraph, TripleId, RDF_TYPE};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MetricsError {
    #[error("schema coverage is undefined for a dataset without classes or triples")]
    EmptyDataset,
    #[error("triple id {0} is not part of the graph")]
    UnknownTriple(u32),
}

/// Frequency-weighted share of the schema touched by a snippet, overall and
/// per kind.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SchemaCoverage {
    #[serde(serialize_with = "crate::util::ser_4dp")]
    pub weighted: f64,
    /// Covered class frequency over total class frequency (0 without classes).
    #[serde(serialize_with = "crate::util::ser_4dp")]
    pub classes: f64,
    /// Covered predicate frequency over the triple count.
    #[serde(serialize_with = "crate::util::ser_4dp")]
    pub properties: f64,
}

/// Classes `c` with some `(·, rdf:type, c)` among `triples`, and the distinct
/// predicates of `triples`.
pub(crate) fn covered_schema(graph: &RdfGraph, triples: &[TripleId]) -> (BTreeSet<NodeId>, BTreeSet<NodeId>) {
    let rdf_type = Node::iri(RDF_TYPE).ok().and_then(|n| graph.node_id(&n));
    let mut classes = BTreeSet::new();
    let mut predicates = BTreeSet::new();
    for &t in triples {
        let r = graph.triple(t);
        predicates.insert(r.predicate);
        if Some(r.predicate) == rdf_type && !graph.node(r.object).is_literal() {
            classes.insert(r.object);
        }
    }
    (classes, predicates)
}

pub(crate) fn check_triples(graph: &RdfGraph, triples: &[TripleId]) -> Result<(), MetricsError> {
    match triples.iter().find(|t| !graph.contains(**t)) {
        Some(t) => Err(MetricsError::UnknownTriple(t.0)),
        None => Ok(()),
    }
}

pub fn schema_coverage(graph: &RdfGraph, triples: &[TripleId]) -> Result<SchemaCoverage, MetricsError> {
    check_triples(graph, triples)?;
    let stats = graph.stats();
    let class_total = stats.total_class_freq();
    let prop_total = stats.total_prop_freq();
    if class_total + prop_total == 0 {
        return Err(MetricsError::EmptyDataset);
    }
    let (classes, predicates) = covered_schema(graph, triples);
    let class_hit: usize = classes.iter().map(|c| stats.class_freq()[c]).sum();
    let prop_hit: usize = predicates.iter().map(|p| stats.prop_freq()[p]).sum();
    let ratio = |hit: usize, total: usize| if total == 0 { 0.0 } else { hit as f64 / total as f64 };
    Ok(SchemaCoverage {
        weighted: ratio(class_hit + prop_hit, class_total + prop_total),
        classes: ratio(class_hit, class_total),
        properties: ratio(prop_hit, prop_total),
    })
}

/// `(Σ freq of covered classes + Σ freq of covered predicates)` over the
/// same sums taken across the whole dataset.
pub fn weighted_schema_coverage(graph: &RdfGraph, triples: &[TripleId]) -> Result<f64, MetricsError> {
    schema_coverage(graph, triples).map(|c| c.weighted)
}

/// Per-snippet measurements, serialized with four-decimal reals.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CoverageReport {
    #[serde(serialize_with = "crate::util::ser_4dp")]
    pub weighted_schema_coverage: f64,
    /// Absent for illustrative snippets.
    #[serde(serialize_with = "crate::util::ser_opt_4dp", skip_serializing_if = "Option::is_none")]
    pub keyword_coverage: Option<f64>,
    pub triple_count: usize,
    pub node_count: usize,
    pub dropped_keywords: Vec<String>,
}

impl CoverageReport {
    /// Report for an illustrative snippet.
    pub fn illustrative(graph: &RdfGraph, triples: &[TripleId]) -> Result<Self, MetricsError> {
        Ok(Self {
            weighted_schema_coverage: weighted_schema_coverage(graph, triples)?,
            keyword_coverage: None,
            triple_count: triples.len(),
            node_count: graph.nodes_of(triples).len(),
            dropped_keywords: Vec::new(),
        })
    }

    /// Report for a query-biased snippet. `nodes` are the tree's nodes (a
    /// zero-triple tree still has one). `witnessed` keywords were covered,
    /// `dropped` ones were removed before solving.
    pub fn query_biased(
        graph: &RdfGraph,
        triples: &[TripleId],
        nodes: &[NodeId],
        witnessed: usize,
        dropped: Vec<String>,
    ) -> Result<Self, MetricsError> {
        let total = witnessed + dropped.len();
        Ok(Self {
            weighted_schema_coverage: weighted_schema_coverage(graph, triples)?,
            keyword_coverage: Some(if total == 0 {
                0.0
            } else {
                witnessed as f64 / total as f64
            }),
            triple_count: triples.len(),
            node_count: nodes.len(),
            dropped_keywords: dropped,
        })
    }

    pub fn keyword_coverage(&self) -> f64 {
        self.keyword_coverage.unwrap_or(1.0)
    }
}
