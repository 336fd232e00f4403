//! Dataset snippets for RDF content.
//!
//! Two generators share one graph model:
//!
//! * [`gst`] builds a query-biased snippet: the minimum-weight tree that
//!   touches at least one node matching every query keyword.
//! * [`illusnip`] builds a query-independent illustrative snippet: a
//!   connected set of at most `k` triples that covers frequent classes and
//!   properties and central entities.
//!
//! [`metrics`] measures frequency-weighted schema coverage and renders
//! snippets as Graphviz DOT. [`query`] tokenizes queries, maps keywords onto
//! graph nodes, and aggregates annotated query corpora.

pub mod cli;
pub mod gst;
pub mod illusnip;
pub mod metrics;
pub mod query;
pub mod rdf;
pub mod synth;

pub(crate) mod util;
