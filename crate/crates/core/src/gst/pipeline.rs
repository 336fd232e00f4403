use std::collections::BTreeSet;
use std::fmt;

use super::{GstError, GstSolver, PopEvent, SnippetTree};
use crate::metrics::{CoverageReport, MetricsError};
use crate::query::{map_keywords, KeywordGroups, MatchField, Query, QueryError, Tokenizer};
use crate::rdf::{RdfGraph, WeightScheme};

#[derive(Debug, Clone)]
pub struct QueryBiasedConfig {
    pub tokenizer: Tokenizer,
    pub match_fields: BTreeSet<MatchField>,
    pub scheme: WeightScheme,
    /// Solve for the matched keywords only instead of failing.
    pub drop_unmatched: bool,
}

impl Default for QueryBiasedConfig {
    fn default() -> Self {
        Self {
            tokenizer: Tokenizer::default(),
            match_fields: MatchField::ALL.into_iter().collect(),
            scheme: WeightScheme::default(),
            drop_unmatched: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    Tokenize,
    MapKeywords,
    Solve,
    Measure,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stage::Tokenize => "tokenize",
            Stage::MapKeywords => "map-keywords",
            Stage::Solve => "solve",
            Stage::Measure => "measure",
        })
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SnippetError {
    #[error("tokenize: {0}")]
    Query(#[from] QueryError),
    #[error("map-keywords: keywords {0:?} match no node (use --drop-unmatched to continue without them)")]
    Unmatched(Vec<String>),
    #[error("solve: {0}")]
    Solve(#[from] GstError),
    #[error("measure: {0}")]
    Metrics(#[from] MetricsError),
}

impl SnippetError {
    pub fn stage(&self) -> Stage {
        match self {
            SnippetError::Query(_) => Stage::Tokenize,
            SnippetError::Unmatched(_) => Stage::MapKeywords,
            SnippetError::Solve(_) => Stage::Solve,
            SnippetError::Metrics(_) => Stage::Measure,
        }
    }
}

#[derive(Debug, Clone)]
pub struct QueryBiasedSnippet {
    pub query: Query,
    pub groups: KeywordGroups,
    pub tree: SnippetTree,
    pub report: CoverageReport,
}

/// Runs the whole query-biased pipeline over one dataset.
pub fn query_biased_snippet(
    graph: &RdfGraph,
    query_text: &str,
    config: &QueryBiasedConfig,
) -> Result<QueryBiasedSnippet, SnippetError> {
    query_biased_snippet_traced(graph, query_text, config, |_| {})
}

pub fn query_biased_snippet_traced(
    graph: &RdfGraph,
    query_text: &str,
    config: &QueryBiasedConfig,
    trace: impl FnMut(PopEvent),
) -> Result<QueryBiasedSnippet, SnippetError> {
    let query = config.tokenizer.tokenize(query_text)?;
    let mut groups = map_keywords(graph, &query, &config.match_fields);
    let dropped = if groups.unmatched.is_empty() {
        Vec::new()
    } else if config.drop_unmatched && !groups.is_empty() {
        groups.take_unmatched()
    } else {
        return Err(SnippetError::Unmatched(groups.unmatched));
    };
    let tree = GstSolver::new(graph, config.scheme).solve_traced(&groups, trace)?;
    let report = CoverageReport::query_biased(graph, &tree.triples, &tree.nodes, tree.witnesses.len(), dropped)?;
    Ok(QueryBiasedSnippet {
        query,
        groups,
        tree,
        report,
    })
}
