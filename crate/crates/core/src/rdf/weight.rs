use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::graph::{RdfGraph, TripleId};
use super::term::Triple;

/// Edge cost used by the Steiner tree search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WeightScheme {
    Uniform,
    /// Mean of `log2(1 + degree)` over both endpoints; paths through hubs cost more.
    #[default]
    DegreePenalized,
}

impl FromStr for WeightScheme {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "uniform" => Ok(Self::Uniform),
            "degree-penalized" | "degreePenalized" => Ok(Self::DegreePenalized),
            other => Err(format!(
                "unknown weight scheme '{other}' (expected uniform or degree-penalized)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("triple is not part of the graph: {0}")]
pub struct NotInGraph(pub String);

impl WeightScheme {
    /// Weight of a stored triple. Always ≥ 1 since endpoint degrees are ≥ 1.
    pub fn weight(self, graph: &RdfGraph, id: TripleId) -> f64 {
        match self {
            Self::Uniform => 1.0,
            Self::DegreePenalized => {
                let t = graph.triple(id);
                let ds = graph.degree(t.subject) as f64;
                let d_o = graph.degree(t.object) as f64;
                ((1.0 + ds).log2() + (1.0 + d_o).log2()) / 2.0
            }
        }
    }
}

pub fn edge_weight(graph: &RdfGraph, triple: &Triple, scheme: WeightScheme) -> Result<f64, NotInGraph> {
    let id = graph.triple_id(triple).ok_or_else(|| NotInGraph(triple.to_string()))?;
    Ok(scheme.weight(graph, id))
}
