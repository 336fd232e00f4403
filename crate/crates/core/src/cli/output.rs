use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::gst::QueryBiasedSnippet;
use crate::illusnip::{ScoreBreakdown, Snippet};
use crate::metrics::{schema_coverage, CoverageReport, MetricsError, SchemaCoverage};
use crate::rdf::{RdfGraph, TripleId};

/// The JSON document written next to each snippet's DOT file.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SnippetOutput {
    pub mode: &'static str,
    pub dataset: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub query: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub keywords: Option<Vec<String>>,
    /// Keyword → lexical form of the covering node.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<Witness>>,
    #[serde(serialize_with = "crate::util::ser_opt_4dp", skip_serializing_if = "Option::is_none")]
    pub total_weight: Option<f64>,
    #[serde(serialize_with = "crate::util::ser_opt_4dp", skip_serializing_if = "Option::is_none")]
    pub score: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub breakdown: Option<ScoreBreakdown>,
    /// N-Triples lines, in canonical order.
    pub triples: Vec<String>,
    pub coverage: CoverageReport,
    pub schema_coverage: SchemaCoverage,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    pub keyword: String,
    pub node: String,
}

fn triple_lines(graph: &RdfGraph, triples: &[TripleId]) -> Vec<String> {
    let mut sorted = triples.to_vec();
    sorted.sort_unstable();
    sorted.iter().map(|&t| graph.to_triple(t).to_string()).collect()
}

impl SnippetOutput {
    pub fn query_biased(graph: &RdfGraph, dataset: &Path, s: &QueryBiasedSnippet) -> Result<Self, MetricsError> {
        Ok(Self {
            mode: "query-biased",
            dataset: dataset.display().to_string(),
            query: Some(s.query.text.clone()),
            keywords: Some(s.query.keywords.clone()),
            witnesses: Some(
                s.tree
                    .witnesses
                    .iter()
                    .map(|(k, n)| Witness {
                        keyword: k.clone(),
                        node: graph.node(*n).to_string(),
                    })
                    .collect(),
            ),
            total_weight: Some(s.tree.total_weight),
            score: None,
            breakdown: None,
            triples: triple_lines(graph, &s.tree.triples),
            coverage: s.report.clone(),
            schema_coverage: schema_coverage(graph, &s.tree.triples)?,
        })
    }

    pub fn illustrative(graph: &RdfGraph, dataset: &Path, s: &Snippet) -> Result<Self, MetricsError> {
        Ok(Self {
            mode: "illustrative",
            dataset: dataset.display().to_string(),
            query: None,
            keywords: None,
            witnesses: None,
            total_weight: None,
            score: Some(s.score()),
            breakdown: Some(s.score.breakdown),
            triples: triple_lines(graph, &s.triples),
            coverage: CoverageReport::illustrative(graph, &s.triples)?,
            schema_coverage: schema_coverage(graph, &s.triples)?,
        })
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("serializable");
        text.push('\n');
        text
    }
}

/// `<prefix>.json` and `<prefix>.dot`.
pub fn output_paths(prefix: &Path) -> (PathBuf, PathBuf) {
    let with = |ext: &str| {
        let mut s = prefix.as_os_str().to_owned();
        s.push(ext);
        PathBuf::from(s)
    };
    (with(".json"), with(".dot"))
}
