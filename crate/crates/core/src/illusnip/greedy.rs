use std::collections::BTreeSet;

use rayon::prelude::*;

use super::score::{Coverage, Objective};
use super::{better, IllusnipConfig, IllusnipError, Snippet};
use crate::rdf::{RdfGraph, TripleId};

/// Greedy growth from the best-scoring single triples.
///
/// The top `seeds` triples by singleton score each start a snippet that
/// repeatedly absorbs the adjacent triple with the highest resulting score
/// (ties to the smaller triple id) until it holds `k` triples or nothing
/// adjacent is left. The best grown snippet wins.
pub fn illustrative_snippet(graph: &RdfGraph, config: &IllusnipConfig) -> Result<Snippet, IllusnipError> {
    config.validate()?;
    if graph.is_empty() {
        return Err(IllusnipError::EmptyGraph);
    }
    let objective = Objective::new(graph, config);

    let mut ranked: Vec<(f64, TripleId)> = graph
        .triple_ids()
        .map(|t| (objective.score_with(&Coverage::default(), t), t))
        .collect();
    ranked.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)));
    let seeds: Vec<TripleId> = ranked.iter().take(config.seeds).map(|(_, t)| *t).collect();

    seeds
        .par_iter()
        .map(|&seed| grow(graph, &objective, seed, config.k))
        .collect::<Vec<_>>()
        .into_iter()
        .reduce(|best, s| if better(&s, &best) { s } else { best })
        .ok_or(IllusnipError::EmptyGraph)
}

fn grow(graph: &RdfGraph, objective: &Objective<'_>, seed: TripleId, k: usize) -> Snippet {
    let mut coverage = Coverage::default();
    let mut chosen = vec![seed];
    let mut frontier = BTreeSet::new();
    objective.add(&mut coverage, seed);
    extend_frontier(graph, seed, &chosen, &mut frontier);

    while chosen.len() < k {
        let mut pick: Option<(f64, TripleId)> = None;
        for &t in &frontier {
            let s = objective.score_with(&coverage, t);
            // Frontier iterates in id order, so strict > keeps the smaller id on ties.
            if pick.is_none_or(|(best, _)| s > best) {
                pick = Some((s, t));
            }
        }
        let Some((_, t)) = pick else { break };
        frontier.remove(&t);
        objective.add(&mut coverage, t);
        chosen.push(t);
        extend_frontier(graph, t, &chosen, &mut frontier);
    }

    chosen.sort_unstable();
    let score = objective.score(&chosen);
    Snippet { triples: chosen, score }
}

fn extend_frontier(graph: &RdfGraph, added: TripleId, chosen: &[TripleId], frontier: &mut BTreeSet<TripleId>) {
    let r = graph.triple(added);
    for v in [r.subject, r.object] {
        for &t in graph.incident(v) {
            if !chosen.contains(&t) {
                frontier.insert(t);
            }
        }
    }
}
