// Load an N-Triples file and print degree, schema, and PageRank statistics.
//
// cargo run --example parse_and_stats -- [path/to/data.nt]

use std::path::PathBuf;

use dsnip::rdf::{load_ntriples, ParseMode};

pub fn run(path: Option<PathBuf>) -> Result<(), Box<dyn std::error::Error>> {
    let path = path.unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/data/genres.nt")));
    let (graph, report) = load_ntriples(&path, ParseMode::Lenient)?;
    println!("{}: {}", path.display(), serde_json::to_string(&report)?);
    println!("{} terms, {} graph nodes", graph.term_count(), graph.graph_node_count());

    let stats = graph.stats();
    println!("classes (typed subjects):");
    for (class, count) in stats.class_freq() {
        println!("  {:>4}  {}", count, graph.node(*class));
    }
    println!("predicates (triples):");
    for (p, count) in stats.prop_freq() {
        println!("  {:>4}  {}", count, graph.node(*p));
    }

    let mut ranked: Vec<_> = stats
        .entities()
        .iter()
        .map(|&v| (stats.pagerank(v).unwrap(), v))
        .collect();
    ranked.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)));
    println!("top entities by PageRank ({} iterations):", stats.pagerank_iterations());
    for (score, v) in ranked.iter().take(5) {
        println!("  {score:.4}  degree {:>2}  {}", graph.degree(*v), graph.node(*v));
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run(std::env::args_os().nth(1).map(PathBuf::from))
}
