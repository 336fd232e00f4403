mod common;

use std::collections::BTreeSet;

use dsnip::metrics::{
    dot_node_id, schema_coverage, snippet_to_dot, to_dot, weighted_schema_coverage, CoverageReport, DotOptions,
    MetricsError,
};
use dsnip::rdf::{local_name, Node, RdfGraph, TripleId, RDF_TYPE};
use dsnip::synth::{synthetic_dataset, DatasetSpec};
use proptest::prelude::*;

const TY: &str = RDF_TYPE;

fn people() -> RdfGraph {
    common::graph(&format!(
        "<http://x/alice> <{TY}> <http://x/Person> .\n\
         <http://x/bob> <{TY}> <http://x/Person> .\n\
         <http://x/paris> <{TY}> <http://x/City> .\n\
         <http://x/alice> <http://x/name> \"Alice \\\"Al\\\" Smith\\nJr\" .\n\
         <http://x/bob> <http://x/name> \"Bob\" .\n\
         <http://x/alice> <http://x/livesIn> <http://x/paris> .\n\
         <http://x/bob> <http://x/livesIn> <http://x/paris> .\n\
         <http://x/alice> <http://x/knows> <http://x/bob> .\n"
    ))
}

#[test]
fn weighted_coverage_by_hand() {
    let g = people();
    let n = |s: &str| Node::iri(s).unwrap();
    let t = |s, p, o| {
        g.triple_id(&dsnip::rdf::Triple::new(n(s), n(p), n(o)).unwrap())
            .unwrap()
    };
    let chosen = [
        t("http://x/alice", TY, "http://x/Person"),
        t("http://x/alice", "http://x/livesIn", "http://x/paris"),
    ];
    // Person (2) + type (3) + livesIn (2) over 3 class + 8 predicate uses.
    assert_eq!(weighted_schema_coverage(&g, &chosen).unwrap(), 7.0 / 11.0);
    let c = schema_coverage(&g, &chosen).unwrap();
    assert_eq!(c.classes, 2.0 / 3.0);
    assert_eq!(c.properties, 5.0 / 8.0);

    let all: Vec<_> = g.triple_ids().collect();
    assert_eq!(weighted_schema_coverage(&g, &all).unwrap(), 1.0);
    assert_eq!(weighted_schema_coverage(&g, &[]).unwrap(), 0.0);
}

#[test]
fn unknown_triple_and_empty_dataset_are_errors() {
    let g = people();
    assert_eq!(
        weighted_schema_coverage(&g, &[TripleId(99)]),
        Err(MetricsError::UnknownTriple(99))
    );
    let empty = RdfGraph::from_triples(Vec::new());
    assert_eq!(weighted_schema_coverage(&empty, &[]), Err(MetricsError::EmptyDataset));
}

#[test]
fn report_serializes_with_four_decimals() {
    let g = people();
    let chosen: Vec<_> = g.triple_ids().take(2).collect();
    let r = CoverageReport::illustrative(&g, &chosen).unwrap();
    let json = serde_json::to_value(&r).unwrap();
    let w = json["weightedSchemaCoverage"].as_f64().unwrap();
    assert_eq!(w, (r.weighted_schema_coverage * 1e4).round() / 1e4);
    assert!(json.get("keywordCoverage").is_none());
}

#[test]
fn dot_round_trips_through_independent_reader() {
    let g = people();
    let all: Vec<_> = g.triple_ids().collect();
    let options = DotOptions { max_label_length: 12 };
    let dot = to_dot(&g, &all, &options);
    let parsed = common::parse_dot(&dot).unwrap();

    let nodes = g.nodes_of(&all);
    assert_eq!(parsed.nodes.len(), nodes.len());
    for v in nodes {
        let node = g.node(v);
        let (label, shape) = &parsed.nodes[&dot_node_id(node)];
        let full = match node.lexical() {
            l if node.is_literal() => l.to_string(),
            l => local_name(l).to_string(),
        };
        let expected = if full.chars().count() > 12 {
            full.chars().take(11).collect::<String>() + "…"
        } else {
            full
        };
        assert_eq!(label, &expected);
        assert_eq!(shape, if node.is_literal() { "box" } else { "ellipse" });
    }

    let mut expected_edges: Vec<(String, String, String)> = all
        .iter()
        .map(|&t| {
            let r = g.triple(t);
            (
                dot_node_id(g.node(r.subject)),
                dot_node_id(g.node(r.object)),
                local_name(g.node(r.predicate).lexical()).to_string(),
            )
        })
        .collect();
    let mut got = parsed.edges.clone();
    expected_edges.sort();
    got.sort();
    assert_eq!(got, expected_edges);
}

#[test]
fn dot_ids_are_distinct_and_stable() {
    let g = synthetic_dataset(&DatasetSpec::default()).graph;
    let ids: BTreeSet<String> = g.graph_nodes().map(|v| dot_node_id(g.node(v))).collect();
    assert_eq!(ids.len(), g.graph_node_count());
    // Same lexical form, different kinds.
    assert_ne!(dot_node_id(&Node::iri("x").unwrap()), dot_node_id(&Node::literal("x")));
    assert_ne!(
        dot_node_id(&Node::literal("1")),
        dot_node_id(&Node::lang_literal("1", "en"))
    );
}

#[test]
fn empty_snippet_and_single_node_tree() {
    let g = people();
    assert_eq!(to_dot(&g, &[], &DotOptions::default()), "digraph snippet { }\n");
    let alice = g.node_id(&Node::iri("http://x/alice").unwrap()).unwrap();
    let parsed = common::parse_dot(&snippet_to_dot(&g, &[], &[alice], &DotOptions::default())).unwrap();
    assert_eq!(parsed.nodes.len(), 1);
    assert!(parsed.edges.is_empty());
}

proptest! {
    #[test]
    fn coverage_is_monotone_and_bounded(seed in 0u64..50, a in prop::collection::vec(0u32..200, 0..20), b in prop::collection::vec(0u32..200, 0..20)) {
        let g = synthetic_dataset(&DatasetSpec { triples: 200, seed, ..Default::default() }).graph;
        let m = g.triple_count() as u32;
        let small: BTreeSet<TripleId> = a.iter().map(|&i| TripleId(i % m)).collect();
        let mut large = small.clone();
        large.extend(b.iter().map(|&i| TripleId(i % m)));
        let small: Vec<_> = small.into_iter().collect();
        let large: Vec<_> = large.into_iter().collect();
        let cs = weighted_schema_coverage(&g, &small).unwrap();
        let cl = weighted_schema_coverage(&g, &large).unwrap();
        prop_assert!((0.0..=1.0).contains(&cs));
        prop_assert!(cl >= cs);
    }
}
