// Compare schema coverage of both snippet kinds and render them as DOT.
//
// cargo run --example coverage_and_dot > snippets.dot

use dsnip::gst::{query_biased_snippet, QueryBiasedConfig};
use dsnip::illusnip::{illustrative_snippet, IllusnipConfig};
use dsnip::metrics::{schema_coverage, snippet_to_dot, to_dot, DotOptions};
use dsnip::rdf::{load_ntriples, ParseMode};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/genres.nt");
    let (graph, _) = load_ntriples(path.as_ref(), ParseMode::Strict)?;
    let options = DotOptions { max_label_length: 20 };

    let qb = query_biased_snippet(&graph, "blues reggae", &QueryBiasedConfig::default())?;
    let il = illustrative_snippet(
        &graph,
        &IllusnipConfig {
            k: 10,
            ..Default::default()
        },
    )?;

    for (name, triples) in [("query-biased", &qb.tree.triples), ("illustrative", &il.triples)] {
        let c = schema_coverage(&graph, triples)?;
        eprintln!(
            "{name:>12}: {:>2} triples, weighted {:.4} (classes {:.4}, properties {:.4})",
            triples.len(),
            c.weighted,
            c.classes,
            c.properties
        );
    }
    print!("{}", snippet_to_dot(&graph, &qb.tree.triples, &qb.tree.nodes, &options));
    print!("{}", to_dot(&graph, &il.triples, &options));
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
