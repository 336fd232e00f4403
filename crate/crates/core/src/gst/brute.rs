use super::solver::validate_groups;
use super::{GstError, SnippetTree};
use crate::query::KeywordGroups;
use crate::rdf::{NodeId, RdfGraph, TripleId, WeightScheme};

/// Largest graph the exhaustive search accepts.
pub const BF_GST_MAX_TRIPLES: usize = 18;

/// Exhaustive group Steiner tree: tries every triple subset, keeps connected
/// acyclic covers, and returns the cheapest. Ties go to the lexicographically
/// smallest triple set. Intended as a test oracle.
pub fn bf_gst(graph: &RdfGraph, groups: &KeywordGroups, scheme: WeightScheme) -> Result<SnippetTree, GstError> {
    let weights: Vec<f64> = graph.triple_ids().map(|t| scheme.weight(graph, t)).collect();
    bf_gst_with_weights(graph, groups, &weights)
}

/// Exhaustive search with explicit per-triple weights, indexed by triple id.
pub fn bf_gst_with_weights(graph: &RdfGraph, groups: &KeywordGroups, weights: &[f64]) -> Result<SnippetTree, GstError> {
    let m = graph.triple_count();
    assert_eq!(weights.len(), m, "one weight per triple");
    if m > BF_GST_MAX_TRIPLES {
        return Err(GstError::TooLarge {
            triples: m,
            max: BF_GST_MAX_TRIPLES,
        });
    }
    validate_groups(groups)?;

    let nodes: Vec<NodeId> = graph.graph_nodes().collect();
    let local = |v: NodeId| nodes.binary_search(&v).ok();
    let ends: Vec<(usize, usize)> = graph
        .triple_ids()
        .map(|t| {
            let r = graph.triple(t);
            (local(r.subject).unwrap(), local(r.object).unwrap())
        })
        .collect();
    let group_masks: Vec<u64> = groups
        .groups
        .iter()
        .map(|g| {
            g.nodes
                .iter()
                .filter_map(|&v| local(v))
                .fold(0u64, |acc, i| acc | 1 << i)
        })
        .collect();

    // Zero-triple covers: a single node in every group.
    let common = group_masks.iter().fold(u64::MAX, |acc, g| acc & g);
    if common != 0 {
        let v = nodes[common.trailing_zeros() as usize];
        return Ok(tree(groups, Vec::new(), vec![v], 0.0, |_| v));
    }

    let mut best: Option<(f64, Vec<usize>)> = None;
    for subset in 1u32..(1u32 << m) {
        let edges: Vec<usize> = (0..m).filter(|i| subset & (1 << i) != 0).collect();
        let touched = edges.iter().fold(0u64, |acc, &e| acc | 1 << ends[e].0 | 1 << ends[e].1);
        if touched.count_ones() as usize != edges.len() + 1 {
            continue;
        }
        if group_masks.iter().any(|g| g & touched == 0) {
            continue;
        }
        if !connected(&edges, &ends, touched) {
            continue;
        }
        let weight: f64 = edges.iter().map(|&e| weights[e]).sum();
        let better = match &best {
            None => true,
            Some((w, set)) => weight < *w - 1e-12 || (weight <= *w + 1e-12 && edges < *set),
        };
        if better {
            best = Some((weight, edges));
        }
    }

    let (weight, edges) = best.ok_or_else(|| GstError::NoConnectedCover {
        separated: groups.keywords().map(str::to_string).collect(),
    })?;
    let triples: Vec<TripleId> = edges.iter().map(|&e| TripleId(e as u32)).collect();
    let tree_nodes = graph.nodes_of(&triples);
    let witness = |k: usize| {
        *tree_nodes
            .iter()
            .find(|v| groups.groups[k].nodes.binary_search(v).is_ok())
            .expect("cover checked")
    };
    Ok(tree(groups, triples, tree_nodes.clone(), weight, witness))
}

fn tree(
    groups: &KeywordGroups,
    triples: Vec<TripleId>,
    nodes: Vec<NodeId>,
    total_weight: f64,
    witness: impl Fn(usize) -> NodeId,
) -> SnippetTree {
    SnippetTree {
        triples,
        nodes,
        total_weight,
        witnesses: groups
            .groups
            .iter()
            .enumerate()
            .map(|(k, g)| (g.keyword.clone(), witness(k)))
            .collect(),
    }
}

fn connected(edges: &[usize], ends: &[(usize, usize)], touched: u64) -> bool {
    let mut reached = 1u64 << touched.trailing_zeros();
    loop {
        let before = reached;
        for &e in edges {
            let (a, b) = ends[e];
            if reached & (1 << a | 1 << b) != 0 {
                reached |= 1 << a | 1 << b;
            }
        }
        if reached == before {
            return reached == touched;
        }
    }
}
