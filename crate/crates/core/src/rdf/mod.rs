//! RDF ingestion and the dataset statistics shared by both snippet generators.

mod graph;
mod ntriples;
mod stats;
mod term;
mod weight;

pub use graph::{NodeId, RdfGraph, TripleId, TripleRef};
pub use ntriples::{
    parse_line, parse_ntriples, parse_str, to_ntriples_string, write_ntriples, ParseError, ParseMode, ParseReport,
};
pub use stats::{GraphStats, PageRankConfig};
pub use term::{local_name, LiteralTag, Node, NodeKind, TermError, Triple, TripleError, RDFS_LABEL, RDF_TYPE};
pub use weight::{edge_weight, NotInGraph, WeightScheme};

use std::fs::File;
use std::io::BufReader;
use std::path::Path;

/// Opens and parses an `.nt` file.
pub fn load_ntriples(path: &Path, mode: ParseMode) -> Result<(RdfGraph, ParseReport), ParseError> {
    let file = File::open(path)?;
    parse_ntriples(BufReader::new(file), mode)
}
