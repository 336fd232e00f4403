// Pick a small connected set of triples that shows off a dataset's schema
// and its central entities.
//
// cargo run --example illustrative_snippet -- [k]

use dsnip::illusnip::{illustrative_snippet, IllusnipConfig};
use dsnip::rdf::{load_ntriples, ParseMode};

pub fn run(k: usize) -> Result<(), Box<dyn std::error::Error>> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/genres.nt");
    let (graph, _) = load_ntriples(path.as_ref(), ParseMode::Strict)?;
    let config = IllusnipConfig {
        k,
        ..Default::default()
    };
    let snippet = illustrative_snippet(&graph, &config)?;
    println!(
        "k = {k}: {} triples, score {:.4} {}",
        snippet.triples.len(),
        snippet.score(),
        serde_json::to_string(&snippet.score.breakdown)?
    );
    for &t in &snippet.triples {
        println!("  {}", graph.to_triple(t));
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(8);
    run(k)
}
