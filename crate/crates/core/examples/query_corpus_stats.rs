// Label distribution and query lengths of an annotated query log.
//
// cargo run --example query_corpus_stats -- [annotations.tsv]

use std::io::BufReader;
use std::path::PathBuf;

use dsnip::query::{category_distribution, load_annotations};

pub fn run(path: Option<PathBuf>) -> Result<(), Box<dyn std::error::Error>> {
    let path =
        path.unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/data/sample_annotations.tsv")));
    let records = load_annotations(BufReader::new(std::fs::File::open(&path)?))?;
    let stats = category_distribution(&records)?;
    println!("{}", serde_json::to_string_pretty(&stats)?);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run(std::env::args_os().nth(1).map(PathBuf::from))
}
