use std::io::Write;
use std::path::Path;

use super::config::RunConfig;
use super::output::{output_paths, SnippetOutput};
use super::CliError;
use crate::gst::{query_biased_snippet_traced, PopEvent};
use crate::illusnip::illustrative_snippet;
use crate::metrics::snippet_to_dot;
use crate::rdf::{load_ntriples, RdfGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SnippetMode {
    QueryBiased(String),
    Illustrative,
}

/// Loads `dataset` and prepares its statistics with the configured PageRank.
pub(crate) fn load_dataset(dataset: &Path, config: &RunConfig) -> Result<RdfGraph, CliError> {
    let (graph, _) = load_ntriples(dataset, config.parse_mode).map_err(|source| CliError::Parse {
        path: dataset.to_path_buf(),
        source,
    })?;
    graph.init_stats(&config.pagerank);
    Ok(graph)
}

/// Builds one snippet and returns its JSON document and DOT rendering.
pub(crate) fn build_snippet(
    graph: &RdfGraph,
    dataset: &Path,
    mode: &SnippetMode,
    config: &RunConfig,
) -> Result<(SnippetOutput, String), CliError> {
    match mode {
        SnippetMode::QueryBiased(text) => {
            let stderr = std::io::stderr();
            let trace = |e: PopEvent| {
                if config.trace {
                    let line = serde_json::json!({
                        "root": graph.node(e.root).to_string(),
                        "groups": e.groups,
                        "weight": e.weight,
                    });
                    let _ = writeln!(stderr.lock(), "{line}");
                }
            };
            let s = query_biased_snippet_traced(graph, text, &config.query, trace)?;
            let dot = snippet_to_dot(graph, &s.tree.triples, &s.tree.nodes, &config.dot);
            Ok((SnippetOutput::query_biased(graph, dataset, &s)?, dot))
        }
        SnippetMode::Illustrative => {
            let s = illustrative_snippet(graph, &config.illusnip)?;
            let dot = snippet_to_dot(graph, &s.triples, &[], &config.dot);
            Ok((SnippetOutput::illustrative(graph, dataset, &s)?, dot))
        }
    }
}

pub(crate) fn write_snippet(prefix: &Path, output: &SnippetOutput, dot: &str) -> Result<(), CliError> {
    let (json_path, dot_path) = output_paths(prefix);
    std::fs::write(&json_path, output.to_json()).map_err(|e| CliError::io(&json_path, e))?;
    std::fs::write(&dot_path, dot).map_err(|e| CliError::io(&dot_path, e))
}

/// `dsnip snippet`: writes `<prefix>.json` and `<prefix>.dot`.
pub fn cmd_snippet(dataset: &Path, mode: &SnippetMode, config: &RunConfig, prefix: &Path) -> Result<(), CliError> {
    let graph = load_dataset(dataset, config)?;
    let (output, dot) = build_snippet(&graph, dataset, mode, config)?;
    write_snippet(prefix, &output, &dot)
}
