// Connect the matches of a keyword query with a minimum-weight tree.
//
// cargo run --example query_biased_snippet -- "blues rock reggae"

use dsnip::gst::{query_biased_snippet, QueryBiasedConfig};
use dsnip::rdf::{load_ntriples, ParseMode, WeightScheme};

pub fn run(query: &str) -> Result<(), Box<dyn std::error::Error>> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/genres.nt");
    let (graph, _) = load_ntriples(path.as_ref(), ParseMode::Strict)?;

    for scheme in [WeightScheme::DegreePenalized, WeightScheme::Uniform] {
        let config = QueryBiasedConfig {
            scheme,
            ..Default::default()
        };
        let s = query_biased_snippet(&graph, query, &config)?;
        println!(
            "{scheme:?}: keywords {:?}, total weight {:.4}",
            s.query.keywords, s.tree.total_weight
        );
        for (keyword, node) in &s.tree.witnesses {
            println!("  {keyword:>10} -> {}", graph.node(*node));
        }
        for &t in &s.tree.triples {
            println!("  {}", graph.to_triple(t));
        }
        println!("  coverage: {}", serde_json::to_string(&s.report)?);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let query = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "blues rock reggae".to_string());
    run(&query)
}
