mod common;

use std::path::Path;

use dsnip::gst::{
    bf_gst, bf_gst_with_weights, query_biased_snippet, solve_gst, GstError, GstSolver, QueryBiasedConfig,
};
use dsnip::query::KeywordGroups;
use dsnip::rdf::{load_ntriples, to_ntriples_string, Node, ParseMode, RdfGraph, WeightScheme};
use dsnip::synth::random_connected_graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn genres() -> RdfGraph {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/genres.nt");
    load_ntriples(&path, ParseMode::Strict).unwrap().0
}

fn random_instance(seed: u64) -> (RdfGraph, KeywordGroups) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nodes = rng.gen_range(4..=12);
    let triples = rng.gen_range(nodes - 1..=18);
    let g = random_connected_graph(seed, nodes, triples, 3);
    let groups = common::random_groups(&g, seed ^ 0x5eed, rng.gen_range(1..=3), 3);
    (g, groups)
}

#[test]
fn dp_matches_brute_force_on_random_instances() {
    for seed in 0..100 {
        let (g, groups) = random_instance(seed);
        for scheme in [WeightScheme::DegreePenalized, WeightScheme::Uniform] {
            let dp = solve_gst(&g, &groups, scheme).unwrap();
            let bf = bf_gst(&g, &groups, scheme).unwrap();
            dp.check(&g, &groups, scheme).unwrap();
            bf.check(&g, &groups, scheme).unwrap();
            assert!(
                (dp.total_weight - bf.total_weight).abs() < 1e-9,
                "seed {seed}: {} vs {}",
                dp.total_weight,
                bf.total_weight
            );
        }
    }
}

#[test]
fn triangle_picks_the_two_cheap_edges() {
    // a–b weight 1, a–c weight 5, b–c weight 1: connecting a and c costs 2.
    let g = common::graph(
        "<http://x/a> <http://x/p> <http://x/b> .\n\
         <http://x/a> <http://x/q> <http://x/c> .\n\
         <http://x/b> <http://x/p> <http://x/c> .\n",
    );
    let id = |s: &str| g.node_id(&Node::iri(s).unwrap()).unwrap();
    let groups = KeywordGroups::from_node_sets([("a", vec![id("http://x/a")]), ("c", vec![id("http://x/c")])]);
    let weights = vec![1.0, 5.0, 1.0];
    let tree = GstSolver::with_weights(&g, weights.clone()).solve(&groups).unwrap();
    assert_eq!(tree.total_weight, 2.0);
    assert_eq!(tree.triples.len(), 2);
    assert_eq!(
        bf_gst_with_weights(&g, &groups, &weights).unwrap().triples,
        tree.triples
    );
}

#[test]
fn scaling_weights_scales_cost_and_keeps_tree() {
    for seed in 0..30 {
        let (g, groups) = random_instance(seed);
        let base = GstSolver::new(&g, WeightScheme::DegreePenalized);
        let scaled = base.clone().with_scaled_weights(3.5);
        let a = base.solve(&groups).unwrap();
        let b = scaled.solve(&groups).unwrap();
        assert!((b.total_weight - 3.5 * a.total_weight).abs() < 1e-9);
        assert_eq!(a.triples, b.triples);
    }
}

#[test]
fn solving_is_deterministic_and_independent_of_input_order() {
    for seed in 0..30 {
        let (g, groups) = random_instance(seed);
        let a = solve_gst(&g, &groups, WeightScheme::DegreePenalized).unwrap();
        let b = solve_gst(&g, &groups, WeightScheme::DegreePenalized).unwrap();
        assert_eq!(a, b);

        let mut lines: Vec<&str> = Vec::new();
        let text = to_ntriples_string(&g);
        lines.extend(text.lines());
        lines.reverse();
        let h = common::graph(&(lines.join("\n") + "\n"));
        let c = solve_gst(&h, &groups, WeightScheme::DegreePenalized).unwrap();
        assert_eq!(a, c);
    }
}

#[test]
fn genre_query_needs_three_edges() {
    let g = genres();
    let s = query_biased_snippet(&g, "blues rock reggae", &QueryBiasedConfig::default()).unwrap();
    s.tree.check(&g, &s.groups, WeightScheme::DegreePenalized).unwrap();
    assert_eq!(s.tree.witnesses.len(), 3);
    assert_eq!(s.report.keyword_coverage, Some(1.0));
    // No Blues node is adjacent to a Reggae node, so any tree needs at
    // least three edges; several three-edge trees exist.
    let uniform = query_biased_snippet(
        &g,
        "blues rock reggae",
        &QueryBiasedConfig {
            scheme: WeightScheme::Uniform,
            ..Default::default()
        },
    )
    .unwrap();
    assert_eq!(uniform.tree.total_weight, 3.0);
}

#[test]
fn separated_keywords_report_no_connected_cover() {
    let g = common::graph(
        "<http://x/alpha> <http://x/p> <http://x/beta> .\n\
         <http://x/gamma> <http://x/p> <http://x/delta> .\n",
    );
    let err = query_biased_snippet(&g, "alpha delta", &QueryBiasedConfig::default()).unwrap_err();
    match err {
        dsnip::gst::SnippetError::Solve(GstError::NoConnectedCover { separated }) => {
            assert_eq!(separated, ["delta"]);
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn traced_pops_have_nondecreasing_weight() {
    let (g, groups) = random_instance(11);
    let mut weights = Vec::new();
    GstSolver::new(&g, WeightScheme::DegreePenalized)
        .solve_traced(&groups, |e| weights.push(e.weight))
        .unwrap();
    assert!(!weights.is_empty());
    assert!(weights.windows(2).all(|w| w[0] <= w[1] + 1e-12));
}
