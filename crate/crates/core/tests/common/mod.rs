//! Test-only oracles and fixtures shared by the integration tests.
//!
//! Everything here is written against the public API only and uses methods
//! different from the library's (dense linear algebra instead of sparse power
//! iteration, a regex-free line parser for DOT), so agreement means something.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use dsnip::query::KeywordGroups;
use dsnip::rdf::{parse_str, NodeId, ParseMode, RdfGraph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn graph(src: &str) -> RdfGraph {
    parse_str(src, ParseMode::Strict).expect("fixture parses").0
}

/// Exact PageRank on the undirected entity graph, by solving
/// `(I - d·M) p = (1 - d)/n · 1` with Gaussian elimination.
///
/// Entities are non-literal subject/object terms. Each triple between two
/// distinct entities adds one unit of edge weight in both directions; a
/// dangling column is uniform.
pub fn dense_pagerank(graph: &RdfGraph, damping: f64) -> BTreeMap<NodeId, f64> {
    let mut entities = BTreeSet::new();
    for t in graph.triple_ids() {
        let r = graph.triple(t);
        for v in [r.subject, r.object] {
            if !graph.node(v).is_literal() {
                entities.insert(v);
            }
        }
    }
    let entities: Vec<NodeId> = entities.into_iter().collect();
    let n = entities.len();
    let idx = |v: NodeId| entities.binary_search(&v).ok();
    let mut adj = vec![vec![0.0f64; n]; n];
    for t in graph.triple_ids() {
        let r = graph.triple(t);
        if r.subject == r.object {
            continue;
        }
        if let (Some(a), Some(b)) = (idx(r.subject), idx(r.object)) {
            adj[a][b] += 1.0;
            adj[b][a] += 1.0;
        }
    }
    // Column-stochastic transition matrix.
    let mut m = vec![vec![0.0f64; n]; n];
    for j in 0..n {
        let out: f64 = adj[j].iter().sum();
        for i in 0..n {
            m[i][j] = if out == 0.0 { 1.0 / n as f64 } else { adj[j][i] / out };
        }
    }
    let mut a = vec![vec![0.0f64; n + 1]; n];
    for i in 0..n {
        for j in 0..n {
            a[i][j] = if i == j { 1.0 } else { 0.0 } - damping * m[i][j];
        }
        a[i][n] = (1.0 - damping) / n as f64;
    }
    let p = gauss_solve(a);
    entities.into_iter().zip(p).collect()
}

/// Solves an augmented `n × (n+1)` system with partial pivoting.
pub fn gauss_solve(mut a: Vec<Vec<f64>>) -> Vec<f64> {
    let n = a.len();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&x, &y| a[x][col].abs().total_cmp(&a[y][col].abs()))
            .unwrap();
        a.swap(col, pivot);
        let pivot_row = a[col].clone();
        for (row, r) in a.iter_mut().enumerate() {
            let f = r[col] / pivot_row[col];
            if row != col && f != 0.0 {
                for (x, p) in r.iter_mut().zip(&pivot_row).skip(col) {
                    *x -= f * p;
                }
            }
        }
    }
    (0..n).map(|i| a[i][n] / a[i][i]).collect()
}

/// `count` keyword groups, each with 1..=`max_size` random graph nodes.
pub fn random_groups(graph: &RdfGraph, seed: u64, count: usize, max_size: usize) -> KeywordGroups {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nodes: Vec<NodeId> = graph.graph_nodes().collect();
    KeywordGroups::from_node_sets((0..count).map(|i| {
        let size = rng.gen_range(1..=max_size.min(nodes.len()));
        (
            format!("k{i}"),
            nodes.choose_multiple(&mut rng, size).copied().collect(),
        )
    }))
}

/// The statements of a DOT digraph as written by the library.
#[derive(Debug, Default, PartialEq)]
pub struct ParsedDot {
    /// Node id → (label, shape).
    pub nodes: BTreeMap<String, (String, String)>,
    /// (from, to, label).
    pub edges: Vec<(String, String, String)>,
}

/// A deliberately small DOT reader: one statement per line, `id [attrs];` or
/// `a -> b [attrs];`, with quoted attribute values using `\"` and `\\`.
pub fn parse_dot(text: &str) -> Result<ParsedDot, String> {
    let mut lines = text.lines();
    let head = lines.next().ok_or("empty")?;
    let mut out = ParsedDot::default();
    if head.trim() == "digraph snippet { }" {
        return Ok(out);
    }
    if head.trim() != "digraph snippet {" {
        return Err(format!("bad header {head:?}"));
    }
    let mut closed = false;
    for line in lines {
        let line = line.trim();
        if line == "}" {
            closed = true;
            continue;
        }
        if closed {
            return Err("content after closing brace".into());
        }
        let body = line
            .strip_suffix(';')
            .ok_or_else(|| format!("missing ';' in {line:?}"))?;
        let open = body.find(" [").ok_or("missing attributes")?;
        let (target, attrs) = (&body[..open], &body[open + 2..]);
        let attrs = parse_attrs(attrs.strip_suffix(']').ok_or("missing ']'")?)?;
        if let Some((a, b)) = target.split_once(" -> ") {
            out.edges.push((a.to_string(), b.to_string(), attrs["label"].clone()));
        } else {
            let prev = out
                .nodes
                .insert(target.to_string(), (attrs["label"].clone(), attrs["shape"].clone()));
            if prev.is_some() {
                return Err(format!("node {target} declared twice"));
            }
        }
    }
    if !closed {
        return Err("missing closing brace".into());
    }
    Ok(out)
}

fn parse_attrs(s: &str) -> Result<BTreeMap<String, String>, String> {
    let mut out = BTreeMap::new();
    let mut chars = s.chars().peekable();
    loop {
        let key: String = chars.by_ref().take_while(|&c| c != '=').collect();
        if key.is_empty() {
            break;
        }
        let value = if chars.peek() == Some(&'"') {
            chars.next();
            let mut v = String::new();
            loop {
                match chars.next().ok_or("unterminated string")? {
                    '\\' => match chars.next().ok_or("dangling escape")? {
                        'n' => v.push('\n'),
                        c => v.push(c),
                    },
                    '"' => break,
                    c => v.push(c),
                }
            }
            v
        } else {
            chars.by_ref().take_while(|&c| c != ',').collect::<String>()
        };
        out.insert(key.trim().to_string(), value);
        // Skip the separator after a quoted value.
        while matches!(chars.peek(), Some(',') | Some(' ')) {
            chars.next();
        }
    }
    Ok(out)
}

/// Population mean and standard deviation.
pub fn mean_std(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n;
    (mean, var.sqrt())
}
