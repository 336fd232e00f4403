//! Query tokenization, keyword-to-node mapping, and annotated query corpora.

mod annotation;
mod mapping;
mod tokenize;

pub use annotation::{
    category_distribution, load_annotations, AnnotationError, AnnotationRecord, Category, CorpusStats, Label, Percent,
    QueryType,
};
pub use mapping::{map_keywords, KeywordGroup, KeywordGroups, MatchField};
pub use tokenize::{tokenize_query, Query, QueryError, StopWords, Tokenizer, DEFAULT_MAX_KEYWORDS};
