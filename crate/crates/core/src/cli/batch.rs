use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;

use super::config::RunConfig;
use super::output::SnippetOutput;
use super::snippet::{build_snippet, load_dataset, write_snippet, SnippetMode};
use super::CliError;
use crate::rdf::RdfGraph;

/// Outcome of one snippet in a batch row.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ModeResult {
    #[serde(serialize_with = "crate::util::ser_opt_4dp", skip_serializing_if = "Option::is_none")]
    pub weighted_schema_coverage: Option<f64>,
    #[serde(serialize_with = "crate::util::ser_opt_4dp", skip_serializing_if = "Option::is_none")]
    pub keyword_coverage: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl ModeResult {
    fn ok(out: &SnippetOutput) -> Self {
        Self {
            weighted_schema_coverage: Some(out.coverage.weighted_schema_coverage),
            keyword_coverage: out.coverage.keyword_coverage,
            error: None,
        }
    }

    fn failed(error: String) -> Self {
        Self {
            weighted_schema_coverage: None,
            keyword_coverage: None,
            error: Some(error),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BatchRow {
    /// 1-based line number in the queries file.
    pub line: usize,
    pub dataset: String,
    pub query: String,
    pub query_biased: ModeResult,
    pub illustrative: ModeResult,
}

impl BatchRow {
    pub fn failed(&self) -> bool {
        self.query_biased.error.is_some() || self.illustrative.error.is_some()
    }
}

/// Mean and population standard deviation of weighted schema coverage over
/// the successful snippets of one mode.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ModeSummary {
    pub count: usize,
    #[serde(serialize_with = "crate::util::ser_4dp")]
    pub mean: f64,
    #[serde(serialize_with = "crate::util::ser_4dp")]
    pub stddev: f64,
}

impl ModeSummary {
    fn of(values: &[f64]) -> Self {
        if values.is_empty() {
            return Self {
                count: 0,
                mean: 0.0,
                stddev: 0.0,
            };
        }
        let n = values.len() as f64;
        let mean = values.iter().sum::<f64>() / n;
        let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n;
        Self {
            count: values.len(),
            mean,
            stddev: var.sqrt(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BatchReport {
    pub rows: Vec<BatchRow>,
    pub failed_pairs: usize,
    pub query_biased: ModeSummary,
    pub illustrative: ModeSummary,
}

struct Pair {
    line: usize,
    dataset: String,
    query: String,
}

fn read_pairs(path: &Path) -> Result<Vec<Pair>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let mut pairs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim_end_matches('\r');
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((dataset, query)) = line.split_once('\t') else {
            return Err(CliError::Usage(format!(
                "{}:{}: expected `<dataset id><TAB><query>`",
                path.display(),
                i + 1
            )));
        };
        pairs.push(Pair {
            line: i + 1,
            dataset: dataset.trim().to_string(),
            query: query.to_string(),
        });
    }
    if pairs.is_empty() {
        return Err(CliError::Usage(format!("{}: no queries", path.display())));
    }
    Ok(pairs)
}

/// Dataset id (file stem) → path, for every `.nt` file in `dir`.
fn list_datasets(dir: &Path) -> Result<BTreeMap<String, PathBuf>, CliError> {
    let mut out = BTreeMap::new();
    for entry in std::fs::read_dir(dir).map_err(|e| CliError::io(dir, e))? {
        let path = entry.map_err(|e| CliError::io(dir, e))?.path();
        if path.extension().is_some_and(|e| e == "nt") {
            if let Some(stem) = path.file_stem().and_then(|s| s.to_str()) {
                out.insert(stem.to_string(), path);
            }
        }
    }
    if out.is_empty() {
        return Err(CliError::Usage(format!("{}: no .nt datasets", dir.display())));
    }
    Ok(out)
}

/// Builds and writes one snippet, returning its measurements.
fn run_mode(
    graph: &RdfGraph,
    path: &Path,
    mode: &SnippetMode,
    config: &RunConfig,
    prefix: &Path,
) -> Result<SnippetOutput, CliError> {
    let (output, dot) = build_snippet(graph, path, mode, config)?;
    write_snippet(prefix, &output, &dot)?;
    Ok(output)
}

/// `dsnip batch-eval`: both snippet kinds for every dataset/query pair, in
/// parallel. Per-pair files go to `out_dir` as `<line>-<dataset>.<mode>.{json,dot}`
/// and the report to `out_dir/report.json`. Fails only if every pair fails.
pub fn cmd_batch_eval(
    corpus: &Path,
    queries: &Path,
    config: &RunConfig,
    out_dir: &Path,
) -> Result<BatchReport, CliError> {
    let pairs = read_pairs(queries)?;
    let datasets = list_datasets(corpus)?;
    std::fs::create_dir_all(out_dir).map_err(|e| CliError::io(out_dir, e))?;

    let mut wanted: Vec<&String> = pairs
        .iter()
        .map(|p| &p.dataset)
        .filter(|d| datasets.contains_key(*d))
        .collect();
    wanted.sort();
    wanted.dedup();
    let graphs: BTreeMap<&str, Result<RdfGraph, String>> = wanted
        .par_iter()
        .map(|id| {
            (
                id.as_str(),
                load_dataset(&datasets[*id], config).map_err(|e| e.to_string()),
            )
        })
        .collect();

    // Suppress per-state tracing; concurrent jobs would interleave it.
    let config = RunConfig {
        trace: false,
        ..config.clone()
    };
    let rows: Vec<BatchRow> = pairs
        .par_iter()
        .map(|pair| {
            let base = format!("{:04}-{}", pair.line, pair.dataset);
            let prefix = |mode: &str| out_dir.join(format!("{base}.{mode}"));
            let (qb, il) = match (graphs.get(pair.dataset.as_str()), datasets.get(&pair.dataset)) {
                (Some(Ok(graph)), Some(path)) => {
                    let measure =
                        |mode: &SnippetMode, name: &str| match run_mode(graph, path, mode, &config, &prefix(name)) {
                            Ok(out) => ModeResult::ok(&out),
                            Err(e) => ModeResult::failed(e.to_string()),
                        };
                    (
                        measure(&SnippetMode::QueryBiased(pair.query.clone()), "query-biased"),
                        measure(&SnippetMode::Illustrative, "illustrative"),
                    )
                }
                (Some(Err(e)), _) => (ModeResult::failed(e.clone()), ModeResult::failed(e.clone())),
                _ => {
                    let e = format!("unknown dataset '{}'", pair.dataset);
                    (ModeResult::failed(e.clone()), ModeResult::failed(e))
                }
            };
            BatchRow {
                line: pair.line,
                dataset: pair.dataset.clone(),
                query: pair.query.clone(),
                query_biased: qb,
                illustrative: il,
            }
        })
        .collect();

    for row in rows.iter().filter(|r| r.failed()) {
        for e in [&row.query_biased.error, &row.illustrative.error].into_iter().flatten() {
            eprintln!("dsnip: line {} ({}): {e}", row.line, row.dataset);
        }
    }
    let failed_pairs = rows.iter().filter(|r| r.failed()).count();
    let collect = |f: fn(&BatchRow) -> &ModeResult| -> Vec<f64> {
        rows.iter().filter_map(|r| f(r).weighted_schema_coverage).collect()
    };
    let report = BatchReport {
        query_biased: ModeSummary::of(&collect(|r| &r.query_biased)),
        illustrative: ModeSummary::of(&collect(|r| &r.illustrative)),
        failed_pairs,
        rows,
    };
    let report_path = out_dir.join("report.json");
    let mut text = serde_json::to_string_pretty(&report).expect("serializable");
    text.push('\n');
    std::fs::write(&report_path, text).map_err(|e| CliError::io(&report_path, e))?;
    if failed_pairs == report.rows.len() {
        return Err(CliError::AllPairsFailed(failed_pairs));
    }
    Ok(report)
}
