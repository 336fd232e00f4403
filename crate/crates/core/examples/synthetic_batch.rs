// Average schema coverage of both snippet kinds over generated datasets,
// the library-level counterpart of `dsnip batch-eval`.
//
// cargo run --release --example synthetic_batch -- [datasets]

use dsnip::gst::{query_biased_snippet, QueryBiasedConfig};
use dsnip::illusnip::{illustrative_snippet, IllusnipConfig};
use dsnip::metrics::weighted_schema_coverage;
use dsnip::synth::{random_query, synthetic_dataset, DatasetSpec};

fn mean(values: &[f64]) -> f64 {
    values.iter().sum::<f64>() / values.len() as f64
}

pub fn run(datasets: u64) -> Result<(), Box<dyn std::error::Error>> {
    let (mut qb, mut il) = (Vec::new(), Vec::new());
    for seed in 0..datasets {
        let ds = synthetic_dataset(&DatasetSpec {
            triples: 1_000,
            seed,
            ..Default::default()
        });
        let query = random_query(seed, &ds.words, 2);
        let s = query_biased_snippet(&ds.graph, &query, &QueryBiasedConfig::default())?;
        let snippet = illustrative_snippet(&ds.graph, &IllusnipConfig::default())?;
        let cov = weighted_schema_coverage(&ds.graph, &snippet.triples)?;
        println!(
            "dataset {seed}: query {query:?} -> {:.4} | illustrative -> {cov:.4}",
            s.report.weighted_schema_coverage
        );
        qb.push(s.report.weighted_schema_coverage);
        il.push(cov);
    }
    println!("mean: query-biased {:.4}, illustrative {:.4}", mean(&qb), mean(&il));
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(5);
    run(n)
}
