//! The `dsnip` command line.
//!
//! Exit codes: 0 success, 1 usage/IO error, 2 input parse error, 3 empty
//! query or unmatched keywords, 4 no connected cover.

mod batch;
mod config;
mod output;
mod snippet;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

pub use batch::{cmd_batch_eval, BatchReport, BatchRow, ModeSummary};
pub use config::{FileConfig, RunConfig, SnippetFlags, STOPWORDS_ENV};
pub use output::SnippetOutput;
pub use snippet::{cmd_snippet, SnippetMode};

use crate::gst::{GstError, SnippetError};
use crate::query::{category_distribution, load_annotations, AnnotationError, CorpusStats};
use crate::rdf::{load_ntriples, ParseError, ParseMode, ParseReport};

#[derive(Debug, Parser)]
#[command(
    name = "dsnip",
    version,
    about = "Query-biased and illustrative snippets for RDF datasets"
)]
pub struct Cli {
    /// TOML file with default settings
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Accepted for reproducibility scripts; every algorithm is deterministic
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Write settled search states to stderr as JSON lines
    #[arg(long, global = true)]
    pub trace: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate one snippet for a dataset
    Snippet {
        /// N-Triples file
        dataset: PathBuf,
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// Keyword query (query-biased mode only)
        #[arg(long)]
        query: Option<String>,
        /// Output prefix; writes <out>.json and <out>.dot [default: dataset path with extension .snippet]
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        flags: SnippetFlags,
    },
    /// Generate both snippet kinds for dataset/query pairs and summarize coverage
    BatchEval {
        /// Directory of <id>.nt files
        corpus: PathBuf,
        /// Lines of `<dataset id><TAB><query>`
        queries: PathBuf,
        /// Directory for per-pair outputs and report.json
        #[arg(long, default_value = "batch-out")]
        out_dir: PathBuf,
        #[command(flatten)]
        flags: SnippetFlags,
    },
    /// Label distribution and length statistics of an annotated query TSV
    QueryStats { annotations: PathBuf },
    /// Parse an N-Triples file and print a report
    ParseCheck {
        dataset: PathBuf,
        /// Skip malformed lines instead of failing
        #[arg(long)]
        lenient: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    QueryBiased,
    Illustrative,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("parse {path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("annotations {path}: {source}")]
    Annotations { path: PathBuf, source: AnnotationError },
    #[error("{0}")]
    Snippet(#[from] SnippetError),
    #[error("illustrative: {0}")]
    Illusnip(#[from] crate::illusnip::IllusnipError),
    #[error("measure: {0}")]
    Metrics(#[from] crate::metrics::MetricsError),
    #[error("all {0} dataset/query pairs failed")]
    AllPairsFailed(usize),
}

impl CliError {
    pub fn io(path: &Path, source: std::io::Error) -> Self {
        Self::Io {
            path: path.to_path_buf(),
            source,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } | CliError::AllPairsFailed(_) => 1,
            CliError::Parse {
                source: ParseError::Io(_),
                ..
            } => 1,
            CliError::Parse { .. } | CliError::Annotations { .. } => 2,
            CliError::Snippet(e) => snippet_exit_code(e),
            CliError::Illusnip(_) | CliError::Metrics(_) => 1,
        }
    }
}

pub(crate) fn snippet_exit_code(e: &SnippetError) -> i32 {
    match e {
        SnippetError::Query(_) | SnippetError::Unmatched(_) => 3,
        SnippetError::Solve(GstError::NoConnectedCover { .. }) => 4,
        SnippetError::Solve(GstError::TooManyGroups { .. }) => 3,
        SnippetError::Solve(_) | SnippetError::Metrics(_) => 1,
    }
}

/// Parses arguments, runs the command, and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("dsnip: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(cli: &Cli) -> Result<(), CliError> {
    let file = match &cli.config {
        Some(p) => FileConfig::load(p)?,
        None => FileConfig::default(),
    };
    match &cli.command {
        Command::Snippet {
            dataset,
            mode,
            query,
            out,
            flags,
        } => {
            let config = RunConfig::resolve(&file, flags, cli.trace)?;
            let mode = match (mode, query) {
                (ModeArg::QueryBiased, Some(q)) => SnippetMode::QueryBiased(q.clone()),
                (ModeArg::QueryBiased, None) => {
                    return Err(CliError::Usage("--query is required in query-biased mode".into()))
                }
                (ModeArg::Illustrative, None) => SnippetMode::Illustrative,
                (ModeArg::Illustrative, Some(_)) => {
                    return Err(CliError::Usage("--query is only valid in query-biased mode".into()))
                }
            };
            let prefix = out.clone().unwrap_or_else(|| dataset.with_extension("snippet"));
            cmd_snippet(dataset, &mode, &config, &prefix)
        }
        Command::BatchEval {
            corpus,
            queries,
            out_dir,
            flags,
        } => {
            let config = RunConfig::resolve(&file, flags, cli.trace)?;
            let report = cmd_batch_eval(corpus, queries, &config, out_dir)?;
            print_json(&report)
        }
        Command::QueryStats { annotations } => print_json(&cmd_query_stats(annotations)?),
        Command::ParseCheck { dataset, lenient } => {
            let mode = if *lenient || file.lenient.unwrap_or(false) {
                ParseMode::Lenient
            } else {
                ParseMode::Strict
            };
            print_json(&cmd_parse_check(dataset, mode)?)
        }
    }
}

pub fn cmd_query_stats(path: &Path) -> Result<CorpusStats, CliError> {
    let wrap = |source| CliError::Annotations {
        path: path.to_path_buf(),
        source,
    };
    let file = std::fs::File::open(path).map_err(|e| CliError::io(path, e))?;
    let records = load_annotations(std::io::BufReader::new(file)).map_err(wrap)?;
    category_distribution(&records).map_err(wrap)
}

pub fn cmd_parse_check(path: &Path, mode: ParseMode) -> Result<ParseReport, CliError> {
    load_ntriples(path, mode)
        .map(|(_, report)| report)
        .map_err(|source| CliError::Parse {
            path: path.to_path_buf(),
            source,
        })
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<(), CliError> {
    let mut stdout = std::io::stdout().lock();
    let text = serde_json::to_string_pretty(value).expect("serializable");
    writeln!(stdout, "{text}").map_err(|e| CliError::io(Path::new("<stdout>"), e))
}
