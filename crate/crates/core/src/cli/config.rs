use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use serde::Deserialize;

use super::CliError;
use crate::gst::QueryBiasedConfig;
use crate::illusnip::IllusnipConfig;
use crate::metrics::DotOptions;
use crate::query::{MatchField, StopWords, Tokenizer, DEFAULT_MAX_KEYWORDS};
use crate::rdf::{PageRankConfig, ParseMode, WeightScheme};

pub const STOPWORDS_ENV: &str = "DSNIP_STOPWORDS";

/// Settings read from `--config`. Every key is optional; command-line flags
/// take precedence.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "snake_case")]
pub struct FileConfig {
    pub k: Option<usize>,
    pub seeds: Option<usize>,
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
    pub gamma: Option<f64>,
    pub weights: Option<WeightScheme>,
    pub drop_unmatched: Option<bool>,
    pub max_keywords: Option<usize>,
    pub match_fields: Option<Vec<MatchField>>,
    pub stopwords: Option<PathBuf>,
    pub max_label_length: Option<usize>,
    pub lenient: Option<bool>,
    pub pagerank: Option<PageRankConfig>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        toml::from_str(&text).map_err(|e| CliError::Usage(format!("config {}: {e}", path.display())))
    }
}

/// Flags shared by `snippet` and `batch-eval`, before merging with the file.
#[derive(Debug, Clone, Default, clap::Args)]
pub struct SnippetFlags {
    /// Maximum triples in an illustrative snippet [default: 20]
    #[arg(long)]
    pub k: Option<usize>,
    /// Greedy restarts for illustrative snippets [default: 10]
    #[arg(long)]
    pub seeds: Option<usize>,
    /// Weight of class coverage [default: 1/3]
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Weight of property coverage [default: 1/3]
    #[arg(long)]
    pub beta: Option<f64>,
    /// Weight of entity centrality [default: 1/3]
    #[arg(long)]
    pub gamma: Option<f64>,
    /// Edge weights for the Steiner tree: uniform or degree-penalized
    #[arg(long)]
    pub weights: Option<WeightScheme>,
    /// Continue without keywords that match no node
    #[arg(long)]
    pub drop_unmatched: bool,
    /// Maximum number of query keywords [default: 10]
    #[arg(long)]
    pub max_keywords: Option<usize>,
    /// Node fields consulted for keyword matching (comma-separated)
    #[arg(long, value_delimiter = ',')]
    pub match_fields: Option<Vec<MatchField>>,
    /// Skip malformed N-Triples lines instead of failing
    #[arg(long)]
    pub lenient: bool,
    /// Truncate DOT labels to this many characters [default: 40]
    #[arg(long)]
    pub max_label_length: Option<usize>,
}

/// Fully resolved settings, validated before any work starts.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub query: QueryBiasedConfig,
    pub illusnip: IllusnipConfig,
    pub pagerank: PageRankConfig,
    pub dot: DotOptions,
    pub parse_mode: ParseMode,
    pub trace: bool,
}

impl RunConfig {
    pub fn resolve(file: &FileConfig, flags: &SnippetFlags, trace: bool) -> Result<Self, CliError> {
        let defaults = IllusnipConfig::default();
        let illusnip = IllusnipConfig {
            k: flags.k.or(file.k).unwrap_or(defaults.k),
            seeds: flags.seeds.or(file.seeds).unwrap_or(defaults.seeds),
            alpha: flags.alpha.or(file.alpha).unwrap_or(defaults.alpha),
            beta: flags.beta.or(file.beta).unwrap_or(defaults.beta),
            gamma: flags.gamma.or(file.gamma).unwrap_or(defaults.gamma),
        };
        illusnip.validate().map_err(|e| CliError::Usage(e.to_string()))?;

        let pagerank = file.pagerank.unwrap_or_default();
        pagerank.validate().map_err(CliError::Usage)?;

        let max_keywords = flags.max_keywords.or(file.max_keywords).unwrap_or(DEFAULT_MAX_KEYWORDS);
        if max_keywords == 0 || max_keywords > crate::gst::MAX_GROUPS {
            return Err(CliError::Usage(format!(
                "max keywords must be between 1 and {}",
                crate::gst::MAX_GROUPS
            )));
        }
        let match_fields: BTreeSet<MatchField> = flags
            .match_fields
            .clone()
            .or_else(|| file.match_fields.clone())
            .map(|v| v.into_iter().collect())
            .unwrap_or_else(|| MatchField::ALL.into_iter().collect());
        if match_fields.is_empty() {
            return Err(CliError::Usage("at least one match field is required".into()));
        }

        let max_label_length = flags
            .max_label_length
            .or(file.max_label_length)
            .unwrap_or(DotOptions::default().max_label_length);
        if max_label_length == 0 {
            return Err(CliError::Usage("max label length must be at least 1".into()));
        }

        Ok(Self {
            query: QueryBiasedConfig {
                tokenizer: Tokenizer::new(load_stopwords(file)?, max_keywords),
                match_fields,
                scheme: flags.weights.or(file.weights).unwrap_or_default(),
                drop_unmatched: flags.drop_unmatched || file.drop_unmatched.unwrap_or(false),
            },
            illusnip,
            pagerank,
            dot: DotOptions { max_label_length },
            parse_mode: if flags.lenient || file.lenient.unwrap_or(false) {
                ParseMode::Lenient
            } else {
                ParseMode::Strict
            },
            trace,
        })
    }
}

/// `DSNIP_STOPWORDS` wins over the config file; otherwise the bundled list.
fn load_stopwords(file: &FileConfig) -> Result<StopWords, CliError> {
    let path = std::env::var_os(STOPWORDS_ENV)
        .filter(|v| !v.is_empty())
        .map(PathBuf::from)
        .or_else(|| file.stopwords.clone());
    match path {
        Some(p) => StopWords::from_file(&p).map_err(|e| CliError::io(&p, e)),
        None => Ok(StopWords::default()),
    }
}
