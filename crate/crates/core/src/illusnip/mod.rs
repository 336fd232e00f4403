//! Illustrative snippets: connected, size-bounded triple sets that cover the
//! frequent classes and properties of a dataset together with its most
//! central entities.

mod brute;
mod greedy;
mod score;

pub use brute::{bf_illusnip, BF_ILLUSNIP_MAX_K, BF_ILLUSNIP_MAX_TRIPLES};
pub use greedy::illustrative_snippet;
pub use score::{score_snippet, ScoreBreakdown, SnippetScore};

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::rdf::{RdfGraph, TripleId};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum IllusnipError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("graph has no triples")]
    EmptyGraph,
    #[error("triple is not part of the graph")]
    UnknownTriple,
    #[error("exhaustive search limited to {max_triples} triples and k ≤ {max_k} (got {triples} triples, k = {k})")]
    TooLarge {
        triples: usize,
        k: usize,
        max_triples: usize,
        max_k: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", default)]
pub struct IllusnipConfig {
    /// Maximum number of triples.
    pub k: usize,
    /// Weight of class coverage.
    pub alpha: f64,
    /// Weight of property coverage.
    pub beta: f64,
    /// Weight of centrality.
    pub gamma: f64,
    /// Number of greedy restarts.
    pub seeds: usize,
}

impl Default for IllusnipConfig {
    fn default() -> Self {
        Self {
            k: 20,
            alpha: 1.0 / 3.0,
            beta: 1.0 / 3.0,
            gamma: 1.0 / 3.0,
            seeds: 10,
        }
    }
}

impl IllusnipConfig {
    pub fn validate(&self) -> Result<(), IllusnipError> {
        let bad = |m: String| Err(IllusnipError::InvalidConfig(m));
        if self.k == 0 {
            return bad("k must be at least 1".into());
        }
        if self.seeds == 0 {
            return bad("seed count must be at least 1".into());
        }
        let w = [self.alpha, self.beta, self.gamma];
        if w.iter().any(|x| !(x.is_finite() && *x >= 0.0)) {
            return bad(format!("weights must be non-negative, got {w:?}"));
        }
        let sum: f64 = w.iter().sum();
        if (sum - 1.0).abs() > 1e-9 {
            return bad(format!("weights must sum to 1, got {sum}"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Snippet {
    /// Sorted by id.
    #[serde(skip)]
    pub triples: Vec<TripleId>,
    #[serde(flatten)]
    pub score: SnippetScore,
}

impl Snippet {
    pub fn score(&self) -> f64 {
        self.score.score
    }

    pub fn is_connected(&self, graph: &RdfGraph) -> bool {
        crate::gst::is_connected(graph, &self.triples)
    }
}

/// Higher score first; equal scores prefer the lexicographically smaller
/// triple list.
pub(crate) fn better(a: &Snippet, b: &Snippet) -> bool {
    match a.score().total_cmp(&b.score()) {
        Ordering::Greater => true,
        Ordering::Less => false,
        Ordering::Equal => a.triples < b.triples,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_validation() {
        assert!(IllusnipConfig::default().validate().is_ok());
        for bad in [
            IllusnipConfig {
                k: 0,
                ..Default::default()
            },
            IllusnipConfig {
                seeds: 0,
                ..Default::default()
            },
            IllusnipConfig {
                alpha: 0.5,
                ..Default::default()
            },
            IllusnipConfig {
                alpha: -0.1,
                beta: 0.6,
                gamma: 0.5,
                ..Default::default()
            },
        ] {
            assert!(bad.validate().is_err(), "{bad:?}");
        }
    }
}
