//! Annotated dataset-search queries and their label distribution.
//!
//! Labels form a fixed two-level vocabulary: seven metadata categories and
//! five data-content categories. Records are loaded from TSV; labels and
//! query types are taken as given, never inferred.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::io::{self, BufRead};
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::util::round_to;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Label {
    Name,
    DomainTopic,
    DataFormat,
    Language,
    Accessibility,
    Provenance,
    Statistics,
    Concept,
    Geospatial,
    OtherEntities,
    Temporal,
    OtherNumbers,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Category {
    Metadata,
    Content,
}

impl Label {
    pub const ALL: [Label; 12] = [
        Label::Name,
        Label::DomainTopic,
        Label::DataFormat,
        Label::Language,
        Label::Accessibility,
        Label::Provenance,
        Label::Statistics,
        Label::Concept,
        Label::Geospatial,
        Label::OtherEntities,
        Label::Temporal,
        Label::OtherNumbers,
    ];

    pub fn category(self) -> Category {
        match self {
            Label::Name
            | Label::DomainTopic
            | Label::DataFormat
            | Label::Language
            | Label::Accessibility
            | Label::Provenance
            | Label::Statistics => Category::Metadata,
            Label::Concept | Label::Geospatial | Label::OtherEntities | Label::Temporal | Label::OtherNumbers => {
                Category::Content
            }
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Label::Name => "Name",
            Label::DomainTopic => "DomainTopic",
            Label::DataFormat => "DataFormat",
            Label::Language => "Language",
            Label::Accessibility => "Accessibility",
            Label::Provenance => "Provenance",
            Label::Statistics => "Statistics",
            Label::Concept => "Concept",
            Label::Geospatial => "Geospatial",
            Label::OtherEntities => "OtherEntities",
            Label::Temporal => "Temporal",
            Label::OtherNumbers => "OtherNumbers",
        }
    }
}

impl FromStr for Label {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Label::ALL.into_iter().find(|l| l.as_str() == s).ok_or(())
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum QueryType {
    Phrase,
    Keyword,
    Sentence,
}

impl FromStr for QueryType {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "phrase" => Ok(Self::Phrase),
            "keyword" => Ok(Self::Keyword),
            "sentence" => Ok(Self::Sentence),
            _ => Err(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnotationRecord {
    pub query_id: String,
    pub query_text: String,
    pub labels: BTreeSet<Label>,
    pub query_type: Option<QueryType>,
}

impl AnnotationRecord {
    pub fn has_category(&self, category: Category) -> bool {
        self.labels.iter().any(|l| l.category() == category)
    }

    pub fn word_count(&self) -> usize {
        self.query_text.split_whitespace().count()
    }
}

#[derive(Debug, thiserror::Error)]
pub enum AnnotationError {
    #[error("missing header row (expected queryId, queryText, labels[, queryType])")]
    MissingHeader,
    #[error("invalid header {0:?} (expected queryId, queryText, labels[, queryType])")]
    BadHeader(String),
    #[error("missing column '{column}' at row {row}")]
    MissingColumn { column: &'static str, row: usize },
    #[error("unexpected extra column at row {row}")]
    ExtraColumn { row: usize },
    #[error("unknown label '{label}' at row {row}")]
    UnknownLabel { label: String, row: usize },
    #[error("unknown query type '{value}' at row {row}")]
    UnknownQueryType { value: String, row: usize },
    #[error("duplicate queryId '{id}' at row {row}")]
    DuplicateId { id: String, row: usize },
    #[error("empty queryId at row {row}")]
    EmptyId { row: usize },
    #[error("annotation corpus is empty")]
    EmptyCorpus,
    #[error(transparent)]
    Io(#[from] io::Error),
}

const COLUMNS: [&str; 4] = ["queryId", "queryText", "labels", "queryType"];

/// Reads an annotation TSV. Rows are reported by physical line number.
pub fn load_annotations<R: BufRead>(reader: R) -> Result<Vec<AnnotationRecord>, AnnotationError> {
    let mut lines = reader
        .lines()
        .enumerate()
        .map(|(i, l)| l.map(|l| (i + 1, l)))
        .filter(|r| match r {
            Ok((_, l)) => !l.starts_with('#') && !l.trim().is_empty(),
            Err(_) => true,
        });

    let (_, header) = lines.next().ok_or(AnnotationError::MissingHeader)??;
    let header_cols: Vec<&str> = header.trim_end_matches('\r').split('\t').collect();
    let width = header_cols.len();
    if !(width == 3 || width == 4) || header_cols[..] != COLUMNS[..width] {
        return Err(AnnotationError::BadHeader(header));
    }

    let mut records = Vec::new();
    let mut ids = HashSet::new();
    for line in lines {
        let (row, line) = line?;
        let cols: Vec<&str> = line.trim_end_matches('\r').split('\t').collect();
        if cols.len() > width {
            return Err(AnnotationError::ExtraColumn { row });
        }
        if cols.len() < 3 {
            return Err(AnnotationError::MissingColumn {
                column: COLUMNS[cols.len()],
                row,
            });
        }
        let query_id = cols[0].trim().to_string();
        if query_id.is_empty() {
            return Err(AnnotationError::EmptyId { row });
        }
        if !ids.insert(query_id.clone()) {
            return Err(AnnotationError::DuplicateId { id: query_id, row });
        }
        let mut labels = BTreeSet::new();
        for raw in cols[2].split(';').map(str::trim).filter(|s| !s.is_empty()) {
            let label = raw.parse().map_err(|_| AnnotationError::UnknownLabel {
                label: raw.to_string(),
                row,
            })?;
            labels.insert(label);
        }
        let query_type = match cols.get(3).map(|s| s.trim()) {
            None | Some("") => None,
            Some(v) => Some(v.parse().map_err(|_| AnnotationError::UnknownQueryType {
                value: v.to_string(),
                row,
            })?),
        };
        records.push(AnnotationRecord {
            query_id,
            query_text: cols[1].to_string(),
            labels,
            query_type,
        });
    }
    Ok(records)
}

/// A percentage that serializes with two decimals.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Percent(pub f64);

impl Serialize for Percent {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(round_to(self.0, 2))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CorpusStats {
    pub record_count: usize,
    pub per_label_percent: BTreeMap<Label, Percent>,
    pub metadata_overall_percent: Percent,
    pub content_overall_percent: Percent,
    pub both_percent: Percent,
    #[serde(serialize_with = "crate::util::ser_2dp")]
    pub mean_words: f64,
    pub percent_within5to11_words: Percent,
    /// Share of each query type among records that carry one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub type_distribution: Option<BTreeMap<QueryType, Percent>>,
}

pub fn category_distribution(records: &[AnnotationRecord]) -> Result<CorpusStats, AnnotationError> {
    if records.is_empty() {
        return Err(AnnotationError::EmptyCorpus);
    }
    let total = records.len() as f64;
    let pct = |count: usize| Percent(100.0 * count as f64 / total);

    let per_label_percent = Label::ALL
        .into_iter()
        .map(|l| (l, pct(records.iter().filter(|r| r.labels.contains(&l)).count())))
        .collect();
    let metadata = records.iter().filter(|r| r.has_category(Category::Metadata)).count();
    let content = records.iter().filter(|r| r.has_category(Category::Content)).count();
    let both = records
        .iter()
        .filter(|r| r.has_category(Category::Metadata) && r.has_category(Category::Content))
        .count();
    let words: Vec<usize> = records.iter().map(AnnotationRecord::word_count).collect();
    let mean_words = words.iter().sum::<usize>() as f64 / total;
    let within = words.iter().filter(|&&w| (5..=11).contains(&w)).count();

    let typed: Vec<QueryType> = records.iter().filter_map(|r| r.query_type).collect();
    let type_distribution = (!typed.is_empty()).then(|| {
        [QueryType::Phrase, QueryType::Keyword, QueryType::Sentence]
            .into_iter()
            .map(|t| {
                let n = typed.iter().filter(|&&x| x == t).count();
                (t, Percent(100.0 * n as f64 / typed.len() as f64))
            })
            .collect()
    });

    Ok(CorpusStats {
        record_count: records.len(),
        per_label_percent,
        metadata_overall_percent: pct(metadata),
        content_overall_percent: pct(content),
        both_percent: pct(both),
        mean_words,
        percent_within5to11_words: pct(within),
        type_distribution,
    })
}
