use std::collections::HashSet;
use std::fs;
use std::io;
use std::path::Path;

use serde::Serialize;

pub const DEFAULT_MAX_KEYWORDS: usize = 10;

const BUNDLED_STOPWORDS: &str = include_str!("../../data/stopwords.txt");

/// Lower-cased words dropped from queries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StopWords(HashSet<String>);

impl Default for StopWords {
    /// The bundled English list.
    fn default() -> Self {
        Self::parse(BUNDLED_STOPWORDS)
    }
}

impl StopWords {
    /// One word per line; blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Self {
        Self::from_words(
            text.lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#')),
        )
    }

    pub fn from_words<I, S>(words: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        Self(words.into_iter().map(|w| w.as_ref().to_lowercase()).collect())
    }

    pub fn from_file(path: &Path) -> io::Result<Self> {
        Ok(Self::parse(&fs::read_to_string(path)?))
    }

    pub fn empty() -> Self {
        Self(HashSet::new())
    }

    pub fn contains(&self, word: &str) -> bool {
        self.0.contains(word)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Query {
    pub text: String,
    pub keywords: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QueryError {
    #[error("empty query: no keywords remain after stop-word removal")]
    Empty,
    #[error("query has {count} keywords but at most {max} are supported; shorten the query")]
    TooManyKeywords { count: usize, max: usize },
}

#[derive(Debug, Clone)]
pub struct Tokenizer {
    pub stopwords: StopWords,
    pub max_keywords: usize,
}

impl Default for Tokenizer {
    fn default() -> Self {
        Self {
            stopwords: StopWords::default(),
            max_keywords: DEFAULT_MAX_KEYWORDS,
        }
    }
}

impl Tokenizer {
    pub fn new(stopwords: StopWords, max_keywords: usize) -> Self {
        Self {
            stopwords,
            max_keywords,
        }
    }

    /// Splits on non-alphanumeric characters, lowercases, drops stop words and
    /// repeats (first occurrence wins).
    pub fn tokenize(&self, text: &str) -> Result<Query, QueryError> {
        let mut seen = HashSet::new();
        let keywords: Vec<String> = text
            .split(|c: char| !c.is_alphanumeric())
            .filter(|t| !t.is_empty())
            .map(str::to_lowercase)
            .filter(|t| !self.stopwords.contains(t))
            .filter(|t| seen.insert(t.clone()))
            .collect();
        if keywords.is_empty() {
            return Err(QueryError::Empty);
        }
        if keywords.len() > self.max_keywords {
            return Err(QueryError::TooManyKeywords {
                count: keywords.len(),
                max: self.max_keywords,
            });
        }
        Ok(Query {
            text: text.to_string(),
            keywords,
        })
    }
}

pub fn tokenize_query(text: &str, stopwords: &StopWords) -> Result<Query, QueryError> {
    Tokenizer::new(stopwords.clone(), DEFAULT_MAX_KEYWORDS).tokenize(text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn genre_query() {
        let q = tokenize_query("blues rock reggae", &StopWords::default()).unwrap();
        assert_eq!(q.keywords, ["blues", "rock", "reggae"]);
    }

    #[test]
    fn all_stop_words() {
        assert_eq!(
            tokenize_query("the of a", &StopWords::default()),
            Err(QueryError::Empty)
        );
        assert_eq!(tokenize_query("   ", &StopWords::default()), Err(QueryError::Empty));
    }

    #[test]
    fn lowercase_dedup_and_custom_stop_words() {
        let sw = StopWords::from_words(["data"]);
        let q = tokenize_query("Weather weather DATA", &sw).unwrap();
        assert_eq!(q.keywords, ["weather"]);
    }

    #[test]
    fn punctuation_splits_tokens() {
        let q = tokenize_query("jpg-images, for unicode/characters!", &StopWords::default()).unwrap();
        assert_eq!(q.keywords, ["jpg", "images", "unicode", "characters"]);
    }

    #[test]
    fn keyword_cap() {
        let t = Tokenizer::new(StopWords::empty(), 3);
        assert_eq!(
            t.tokenize("w x y z"),
            Err(QueryError::TooManyKeywords { count: 4, max: 3 })
        );
        assert!(t.tokenize("w x y w").is_ok());
    }

    #[test]
    fn bundled_list_size() {
        let sw = StopWords::default();
        assert!(sw.len() >= 100 && sw.len() <= 140, "{}", sw.len());
        for w in ["the", "of", "a", "and"] {
            assert!(sw.contains(w));
        }
        for w in ["blues", "rock", "reggae", "weather", "data"] {
            assert!(!sw.contains(w));
        }
    }

    proptest! {
        #[test]
        fn tokenizing_keywords_again_is_identity(text in "[a-zA-Z0-9 ,.;-]{1,60}") {
            let sw = StopWords::default();
            if let Ok(q) = Tokenizer::new(sw.clone(), usize::MAX).tokenize(&text) {
                let again = Tokenizer::new(sw, usize::MAX).tokenize(&q.keywords.join(" ")).unwrap();
                prop_assert_eq!(again.keywords, q.keywords);
            }
        }
    }
}
