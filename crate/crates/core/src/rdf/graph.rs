use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::OnceLock;

use super::stats::{GraphStats, PageRankConfig};
use super::term::{Node, Triple};

/// Index of a node. Ids follow the total order of [`Node`], so comparing ids
/// compares lexical forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct NodeId(pub u32);

/// Index of a triple. Ids follow `(subject, predicate, object)` lexical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct TripleId(pub u32);

impl NodeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl TripleId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TripleRef {
    pub subject: NodeId,
    pub predicate: NodeId,
    pub object: NodeId,
}

impl TripleRef {
    /// The endpoint opposite `n`; `n` itself for a self-loop.
    pub fn other_end(&self, n: NodeId) -> NodeId {
        if self.subject == n {
            self.object
        } else {
            self.subject
        }
    }

    pub fn is_self_loop(&self) -> bool {
        self.subject == self.object
    }
}

/// Immutable RDF graph with interned terms.
///
/// Triples are deduplicated. [`RdfGraph::triples`] yields them in first-seen
/// order; ids are canonical (lexically sorted) so that every derived result
/// is independent of the input order.
#[derive(Debug)]
pub struct RdfGraph {
    nodes: Vec<Node>,
    lookup: HashMap<Node, NodeId>,
    triples: Vec<TripleRef>,
    insertion: Vec<TripleId>,
    incident: Vec<Vec<TripleId>>,
    stats: OnceLock<GraphStats>,
}

impl RdfGraph {
    pub fn from_triples<I: IntoIterator<Item = Triple>>(input: I) -> Self {
        let mut seen = HashSet::new();
        let mut ordered = Vec::new();
        for t in input {
            if seen.insert(t.clone()) {
                ordered.push(t);
            }
        }

        let mut terms: BTreeSet<&Node> = BTreeSet::new();
        for t in &ordered {
            terms.insert(t.subject());
            terms.insert(t.predicate());
            terms.insert(t.object());
        }
        let nodes: Vec<Node> = terms.into_iter().cloned().collect();
        let lookup: HashMap<Node, NodeId> = nodes
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), NodeId(i as u32)))
            .collect();

        let refs: Vec<TripleRef> = ordered
            .iter()
            .map(|t| TripleRef {
                subject: lookup[t.subject()],
                predicate: lookup[t.predicate()],
                object: lookup[t.object()],
            })
            .collect();
        let mut sorted: Vec<usize> = (0..refs.len()).collect();
        sorted.sort_by_key(|&i| (refs[i].subject, refs[i].predicate, refs[i].object));
        let mut insertion = vec![TripleId(0); refs.len()];
        let triples: Vec<TripleRef> = sorted
            .iter()
            .enumerate()
            .map(|(rank, &i)| {
                insertion[i] = TripleId(rank as u32);
                refs[i]
            })
            .collect();

        let mut incident = vec![Vec::new(); nodes.len()];
        for (i, t) in triples.iter().enumerate() {
            let id = TripleId(i as u32);
            incident[t.subject.index()].push(id);
            if !t.is_self_loop() {
                incident[t.object.index()].push(id);
            }
        }

        Self {
            nodes,
            lookup,
            triples,
            insertion,
            incident,
            stats: OnceLock::new(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn triple_count(&self) -> usize {
        self.triples.len()
    }

    /// Number of interned terms, including terms used only as predicates.
    pub fn term_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn node(&self, id: NodeId) -> &Node {
        &self.nodes[id.index()]
    }

    pub fn node_id(&self, node: &Node) -> Option<NodeId> {
        self.lookup.get(node).copied()
    }

    pub fn triple(&self, id: TripleId) -> TripleRef {
        self.triples[id.index()]
    }

    pub fn triple_id(&self, triple: &Triple) -> Option<TripleId> {
        let key = TripleRef {
            subject: self.node_id(triple.subject())?,
            predicate: self.node_id(triple.predicate())?,
            object: self.node_id(triple.object())?,
        };
        self.triples
            .binary_search_by_key(&(key.subject, key.predicate, key.object), |t| {
                (t.subject, t.predicate, t.object)
            })
            .ok()
            .map(|i| TripleId(i as u32))
    }

    pub fn contains(&self, id: TripleId) -> bool {
        id.index() < self.triples.len()
    }

    pub fn to_triple(&self, id: TripleId) -> Triple {
        let t = self.triple(id);
        Triple::new(
            self.node(t.subject).clone(),
            self.node(t.predicate).clone(),
            self.node(t.object).clone(),
        )
        .expect("stored triples are well-formed")
    }

    /// Triple ids in first-seen order.
    pub fn triples(&self) -> impl Iterator<Item = TripleId> + '_ {
        self.insertion.iter().copied()
    }

    /// Triple ids in canonical order.
    pub fn triple_ids(&self) -> impl Iterator<Item = TripleId> {
        (0..self.triples.len() as u32).map(TripleId)
    }

    /// Triples where `n` is subject or object, in canonical order.
    pub fn incident(&self, n: NodeId) -> &[TripleId] {
        &self.incident[n.index()]
    }

    /// Terms that occur as subject or object of some triple, in id order.
    pub fn graph_nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        (0..self.nodes.len() as u32)
            .map(NodeId)
            .filter(|n| !self.incident[n.index()].is_empty())
    }

    pub fn graph_node_count(&self) -> usize {
        self.incident.iter().filter(|v| !v.is_empty()).count()
    }

    /// Number of triples incident to `n` (self-loops count once).
    pub fn degree(&self, n: NodeId) -> usize {
        self.incident[n.index()].len()
    }

    /// Statistics with default PageRank settings, computed on first use.
    pub fn stats(&self) -> &GraphStats {
        self.stats
            .get_or_init(|| GraphStats::compute(self, &PageRankConfig::default()))
    }

    /// Computes statistics with explicit PageRank settings and caches them.
    /// Returns the cached value if statistics were already computed.
    pub fn init_stats(&self, config: &PageRankConfig) -> &GraphStats {
        self.stats.get_or_init(|| GraphStats::compute(self, config))
    }

    /// Unique subject/object nodes touched by a set of triples, sorted.
    pub fn nodes_of(&self, triples: &[TripleId]) -> Vec<NodeId> {
        let mut out: Vec<NodeId> = triples
            .iter()
            .flat_map(|&t| {
                let r = self.triple(t);
                [r.subject, r.object]
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

impl PartialEq for RdfGraph {
    /// Graphs are equal when they hold the same set of triples.
    fn eq(&self, other: &Self) -> bool {
        self.nodes == other.nodes && self.triples == other.triples
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iri(s: &str) -> Node {
        Node::iri(s).unwrap()
    }

    fn t(s: &str, p: &str, o: &str) -> Triple {
        Triple::new(iri(s), iri(p), iri(o)).unwrap()
    }

    #[test]
    fn dedup_and_insertion_order() {
        let g = RdfGraph::from_triples(vec![t("z", "p", "a"), t("a", "p", "b"), t("z", "p", "a")]);
        assert_eq!(g.triple_count(), 2);
        let order: Vec<_> = g.triples().map(|id| g.to_triple(id)).collect();
        assert_eq!(order, vec![t("z", "p", "a"), t("a", "p", "b")]);
    }

    #[test]
    fn ids_follow_lexical_order() {
        let g = RdfGraph::from_triples(vec![t("c", "p", "b"), t("b", "p", "a")]);
        let labels: Vec<_> = (0..g.term_count() as u32)
            .map(|i| g.node(NodeId(i)).lexical().to_string())
            .collect();
        assert_eq!(labels, ["a", "b", "c", "p"]);
        assert_eq!(g.triple_id(&t("b", "p", "a")), Some(TripleId(0)));
        assert_eq!(g.triple_id(&t("a", "p", "b")), None);
    }

    #[test]
    fn degree_counts_incident_triples() {
        let g = RdfGraph::from_triples(vec![t("a", "p", "b"), t("a", "q", "b"), t("a", "p", "a")]);
        let a = g.node_id(&iri("a")).unwrap();
        let b = g.node_id(&iri("b")).unwrap();
        let p = g.node_id(&iri("p")).unwrap();
        assert_eq!(g.degree(a), 3);
        assert_eq!(g.degree(b), 2);
        assert_eq!(g.degree(p), 0);
        assert_eq!(g.graph_nodes().collect::<Vec<_>>(), vec![a, b]);
    }
}
