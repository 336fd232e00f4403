use super::score::Objective;
use super::{better, IllusnipConfig, IllusnipError, Snippet};
use crate::gst::is_connected;
use crate::rdf::{RdfGraph, TripleId};

pub const BF_ILLUSNIP_MAX_TRIPLES: usize = 16;
pub const BF_ILLUSNIP_MAX_K: usize = 5;

/// Exhaustive maximization over every connected triple set of size `1..=k`.
/// Ties go to the lexicographically smallest set. Intended as a test oracle.
pub fn bf_illusnip(graph: &RdfGraph, config: &IllusnipConfig) -> Result<Snippet, IllusnipError> {
    config.validate()?;
    let m = graph.triple_count();
    if m > BF_ILLUSNIP_MAX_TRIPLES || config.k > BF_ILLUSNIP_MAX_K {
        return Err(IllusnipError::TooLarge {
            triples: m,
            k: config.k,
            max_triples: BF_ILLUSNIP_MAX_TRIPLES,
            max_k: BF_ILLUSNIP_MAX_K,
        });
    }
    if m == 0 {
        return Err(IllusnipError::EmptyGraph);
    }
    let objective = Objective::new(graph, config);
    let mut best: Option<Snippet> = None;
    for subset in 1u32..(1u32 << m) {
        if subset.count_ones() as usize > config.k {
            continue;
        }
        let triples: Vec<TripleId> = (0..m as u32).filter(|i| subset & (1 << i) != 0).map(TripleId).collect();
        if !is_connected(graph, &triples) {
            continue;
        }
        let candidate = Snippet {
            score: objective.score(&triples),
            triples,
        };
        if best.as_ref().is_none_or(|b| better(&candidate, b)) {
            best = Some(candidate);
        }
    }
    Ok(best.expect("singletons are always connected"))
}
