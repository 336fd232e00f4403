//! Snippet measurements and Graphviz export.

mod coverage;
mod dot;

pub(crate) use coverage::{check_triples, covered_schema};
pub use coverage::{schema_coverage, weighted_schema_coverage, CoverageReport, MetricsError, SchemaCoverage};
pub use dot::{dot_node_id, snippet_to_dot, to_dot, DotOptions};
