//! Runs every crate example with its default inputs.
#![allow(dead_code)]

mod parse_and_stats {
    include!("../examples/parse_and_stats.rs");
}
mod query_biased_snippet {
    include!("../examples/query_biased_snippet.rs");
}
mod illustrative_snippet {
    include!("../examples/illustrative_snippet.rs");
}
mod coverage_and_dot {
    include!("../examples/coverage_and_dot.rs");
}
mod query_corpus_stats {
    include!("../examples/query_corpus_stats.rs");
}
mod synthetic_batch {
    include!("../examples/synthetic_batch.rs");
}

#[test]
fn parse_and_stats_runs() {
    parse_and_stats::run(None).unwrap();
}

#[test]
fn query_biased_snippet_runs() {
    query_biased_snippet::run("blues rock reggae").unwrap();
}

#[test]
fn illustrative_snippet_runs() {
    illustrative_snippet::run(8).unwrap();
}

#[test]
fn coverage_and_dot_runs() {
    coverage_and_dot::run().unwrap();
}

#[test]
fn query_corpus_stats_runs() {
    query_corpus_stats::run(None).unwrap();
}

#[test]
fn synthetic_batch_runs() {
    synthetic_batch::run(2).unwrap();
}
