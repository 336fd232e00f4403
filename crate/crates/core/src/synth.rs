//! Seeded generators for synthetic RDF data.
//!
//! Used by the benchmarks, the acceptance suite, and the examples. Output is
//! a pure function of the seed.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::rdf::{Node, RdfGraph, Triple, RDFS_LABEL, RDF_TYPE};

const BASE: &str = "http://example.org/";

/// Words used for entity labels; none is a stop word.
pub const VOCABULARY: &[&str] = &[
    "amber", "basalt", "cedar", "delta", "ember", "fjord", "glacier", "harbor", "iris", "juniper", "kelp", "lagoon",
    "meadow", "nectar", "orchid", "prairie", "quartz", "river", "sierra", "tundra", "umber", "valley", "willow",
    "xenon", "yarrow", "zephyr", "acacia", "bramble", "canyon", "dune", "estuary", "fern", "granite", "heath", "inlet",
    "jasper", "knoll", "lichen", "marsh", "nimbus", "oasis", "pebble", "quarry", "reef", "savanna", "thicket",
    "upland", "vortex", "wetland", "yucca",
];

fn entity(i: usize) -> Node {
    Node::iri(format!("{BASE}resource/e{i}")).expect("valid IRI")
}

fn predicate(i: usize) -> Node {
    Node::iri(format!("{BASE}vocab/p{i}")).expect("valid IRI")
}

fn class(i: usize) -> Node {
    Node::iri(format!("{BASE}vocab/C{i}")).expect("valid IRI")
}

/// A connected random graph over `nodes` entities with `triples` distinct
/// edges (capped by what `predicates` labels allow). A random spanning tree is
/// laid down first, then extra edges are added between random pairs.
pub fn random_connected_graph(seed: u64, nodes: usize, triples: usize, predicates: usize) -> RdfGraph {
    assert!(nodes >= 2 && predicates >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut push = |s: usize, p: usize, o: usize, out: &mut Vec<Triple>| {
        if seen.insert((s, p, o)) {
            out.push(Triple::new(entity(s), predicate(p), entity(o)).unwrap());
        }
    };
    let mut order: Vec<usize> = (0..nodes).collect();
    order.shuffle(&mut rng);
    for i in 1..nodes {
        let j = rng.gen_range(0..i);
        let (s, o) = if rng.gen_bool(0.5) {
            (order[i], order[j])
        } else {
            (order[j], order[i])
        };
        push(s, rng.gen_range(0..predicates), o, &mut out);
    }
    let capacity = nodes * (nodes - 1) * predicates;
    let target = triples.max(nodes - 1).min(capacity);
    while out.len() < target {
        let s = rng.gen_range(0..nodes);
        let o = rng.gen_range(0..nodes);
        if s != o {
            push(s, rng.gen_range(0..predicates), o, &mut out);
        }
    }
    RdfGraph::from_triples(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DatasetSpec {
    /// Approximate number of triples.
    pub triples: usize,
    pub classes: usize,
    pub properties: usize,
    pub seed: u64,
}

impl Default for DatasetSpec {
    fn default() -> Self {
        Self {
            triples: 1_000,
            classes: 12,
            properties: 15,
            seed: 0,
        }
    }
}

pub struct SyntheticDataset {
    pub graph: RdfGraph,
    /// Label words that occur in the dataset, in vocabulary order.
    pub words: Vec<String>,
}

/// Index in `0..n` with probability proportional to `1 / (rank + 1)`.
fn zipf(rng: &mut impl Rng, n: usize) -> usize {
    let total: f64 = (1..=n).map(|r| 1.0 / r as f64).sum();
    let mut x = rng.gen::<f64>() * total;
    for r in 0..n {
        x -= 1.0 / (r + 1) as f64;
        if x <= 0.0 {
            return r;
        }
    }
    n - 1
}

/// A typed, labelled, connected dataset with skewed class and property
/// frequencies. Each entity has one `rdf:type`, one two-word `rdfs:label`,
/// and a link to an earlier entity; the remaining budget goes to extra links
/// and literal-valued attributes.
pub fn synthetic_dataset(spec: &DatasetSpec) -> SyntheticDataset {
    assert!(spec.classes >= 1 && spec.properties >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let entities = (spec.triples / 5).max(2);
    let rdf_type = Node::iri(RDF_TYPE).unwrap();
    let label = Node::iri(RDFS_LABEL).unwrap();
    let mut out = Vec::with_capacity(spec.triples);
    let mut used = vec![false; VOCABULARY.len()];

    for e in 0..entities {
        let c = zipf(&mut rng, spec.classes);
        out.push(Triple::new(entity(e), rdf_type.clone(), class(c)).unwrap());
        let a = rng.gen_range(0..VOCABULARY.len());
        let b = rng.gen_range(0..VOCABULARY.len());
        used[a] = true;
        used[b] = true;
        let text = format!("{} {}", VOCABULARY[a], VOCABULARY[b]);
        out.push(Triple::new(entity(e), label.clone(), Node::lang_literal(text, "en")).unwrap());
        if e > 0 {
            let target = rng.gen_range(0..e);
            let p = zipf(&mut rng, spec.properties);
            out.push(Triple::new(entity(e), predicate(p), entity(target)).unwrap());
        }
    }
    while out.len() < spec.triples {
        let s = rng.gen_range(0..entities);
        let p = zipf(&mut rng, spec.properties);
        let object = if rng.gen_bool(0.7) {
            entity(rng.gen_range(0..entities))
        } else {
            Node::typed_literal(
                rng.gen_range(0..1000).to_string(),
                "http://www.w3.org/2001/XMLSchema#integer",
            )
        };
        out.push(Triple::new(entity(s), predicate(p), object).unwrap());
    }

    SyntheticDataset {
        graph: RdfGraph::from_triples(out),
        words: VOCABULARY
            .iter()
            .zip(used)
            .filter(|(_, u)| *u)
            .map(|(w, _)| w.to_string())
            .collect(),
    }
}

/// Picks `count` distinct words for a keyword query.
pub fn random_query(seed: u64, words: &[String], count: usize) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    words
        .choose_multiple(&mut rng, count.min(words.len()))
        .cloned()
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gst::is_connected;

    #[test]
    fn random_graph_is_connected_and_sized() {
        for seed in 0..20 {
            let g = random_connected_graph(seed, 10, 15, 3);
            assert_eq!(g.triple_count(), 15);
            assert_eq!(g.graph_node_count(), 10);
            let all: Vec<_> = g.triple_ids().collect();
            assert!(is_connected(&g, &all));
        }
    }

    #[test]
    fn dataset_is_deterministic_and_shaped() {
        let spec = DatasetSpec {
            triples: 800,
            ..Default::default()
        };
        let a = synthetic_dataset(&spec);
        let b = synthetic_dataset(&spec);
        assert!(a.graph == b.graph);
        let n = a.graph.triple_count();
        assert!((750..=800).contains(&n), "{n}");
        assert!(a.graph.stats().class_freq().len() >= 10);
        let all: Vec<_> = a.graph.triple_ids().collect();
        assert!(is_connected(&a.graph, &all));
    }
}
