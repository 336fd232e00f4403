use std::cmp::{Ordering, Reverse};
use std::collections::{BTreeSet, BinaryHeap, HashMap};

use serde::Serialize;

use super::{GstError, SnippetTree, MAX_GROUPS};
use crate::query::KeywordGroups;
use crate::rdf::{NodeId, RdfGraph, TripleId, WeightScheme};

/// One state taken off the priority queue.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PopEvent {
    pub root: NodeId,
    pub groups: u32,
    pub weight: f64,
}

#[derive(Debug, Clone, Copy)]
enum Transition {
    Base { group: usize },
    Grow { from: NodeId, triple: TripleId },
    Merge { left: u32, right: u32 },
}

#[derive(Debug, Clone, Copy)]
struct Entry {
    weight: f64,
    parent: Transition,
    settled: bool,
}

/// Queue key: weight, then root lexical order, then group bitset.
#[derive(Debug, Clone, Copy, PartialEq)]
struct Key {
    weight: f64,
    root: NodeId,
    groups: u32,
}

impl Eq for Key {}

impl Ord for Key {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight
            .total_cmp(&other.weight)
            .then(self.root.cmp(&other.root))
            .then(self.groups.cmp(&other.groups))
    }
}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Exact group Steiner tree search by best-first dynamic programming.
///
/// States are `(root, covered groups)`. A state grows along an incident
/// triple or merges with another settled state at the same root whose group
/// set is disjoint. The first settled state covering every group is optimal
/// because weights are non-negative and states settle in key order.
#[derive(Debug, Clone)]
pub struct GstSolver<'g> {
    graph: &'g RdfGraph,
    weights: Vec<f64>,
}

impl<'g> GstSolver<'g> {
    pub fn new(graph: &'g RdfGraph, scheme: WeightScheme) -> Self {
        let weights = graph.triple_ids().map(|t| scheme.weight(graph, t)).collect();
        Self { graph, weights }
    }

    /// Uses explicit per-triple weights, indexed by triple id. Weights must be
    /// non-negative.
    pub fn with_weights(graph: &'g RdfGraph, weights: Vec<f64>) -> Self {
        assert_eq!(weights.len(), graph.triple_count(), "one weight per triple");
        assert!(weights.iter().all(|w| *w >= 0.0), "weights must be non-negative");
        Self { graph, weights }
    }

    /// Scales every edge weight by `factor` (must be positive).
    pub fn with_scaled_weights(mut self, factor: f64) -> Self {
        assert!(factor > 0.0, "scale factor must be positive");
        for w in &mut self.weights {
            *w *= factor;
        }
        self
    }

    pub fn weight(&self, t: TripleId) -> f64 {
        self.weights[t.index()]
    }

    pub fn solve(&self, groups: &KeywordGroups) -> Result<SnippetTree, GstError> {
        self.solve_traced(groups, |_| {})
    }

    /// Like [`solve`](Self::solve), reporting every settled state to `trace`.
    pub fn solve_traced(
        &self,
        groups: &KeywordGroups,
        mut trace: impl FnMut(PopEvent),
    ) -> Result<SnippetTree, GstError> {
        validate_groups(groups)?;
        ensure_connected_cover(self.graph, groups)?;

        let full: u32 = (1u32 << groups.len()) - 1;
        let mut table: HashMap<(NodeId, u32), Entry> = HashMap::new();
        let mut settled_masks: HashMap<NodeId, Vec<u32>> = HashMap::new();
        let mut heap = BinaryHeap::new();

        for (k, group) in groups.groups.iter().enumerate() {
            for &v in &group.nodes {
                let key = (v, 1u32 << k);
                table.entry(key).or_insert_with(|| {
                    heap.push(Reverse(Key {
                        weight: 0.0,
                        root: v,
                        groups: key.1,
                    }));
                    Entry {
                        weight: 0.0,
                        parent: Transition::Base { group: k },
                        settled: false,
                    }
                });
            }
        }

        while let Some(Reverse(key)) = heap.pop() {
            let entry = table.get_mut(&(key.root, key.groups)).expect("queued state exists");
            if entry.settled || key.weight > entry.weight {
                continue;
            }
            entry.settled = true;
            trace(PopEvent {
                root: key.root,
                groups: key.groups,
                weight: key.weight,
            });
            if key.groups == full {
                return Ok(self.reconstruct(groups, &table, key.root, full));
            }

            let v = key.root;
            for &t in self.graph.incident(v) {
                let triple = self.graph.triple(t);
                if triple.is_self_loop() {
                    continue;
                }
                let u = triple.other_end(v);
                relax(
                    &mut table,
                    &mut heap,
                    u,
                    key.groups,
                    key.weight + self.weights[t.index()],
                    Transition::Grow { from: v, triple: t },
                );
            }

            // Each disjoint pair at a root is combined once, when its second
            // member settles.
            let partners = settled_masks.entry(v).or_default();
            let merges: Vec<(u32, f64)> = partners
                .iter()
                .filter(|&&m| m & key.groups == 0)
                .map(|&m| (m, table[&(v, m)].weight))
                .collect();
            partners.push(key.groups);
            for (other, w) in merges {
                let (left, right) = if other < key.groups {
                    (other, key.groups)
                } else {
                    (key.groups, other)
                };
                relax(
                    &mut table,
                    &mut heap,
                    v,
                    left | right,
                    key.weight + w,
                    Transition::Merge { left, right },
                );
            }
        }
        unreachable!("a connected cover exists, so the full state must settle")
    }

    fn reconstruct(
        &self,
        groups: &KeywordGroups,
        table: &HashMap<(NodeId, u32), Entry>,
        root: NodeId,
        full: u32,
    ) -> SnippetTree {
        let mut triples = BTreeSet::new();
        let mut witness: Vec<Option<NodeId>> = vec![None; groups.len()];
        let mut stack = vec![(root, full)];
        while let Some((v, mask)) = stack.pop() {
            match table[&(v, mask)].parent {
                Transition::Base { group } => witness[group] = Some(v),
                Transition::Grow { from, triple } => {
                    triples.insert(triple);
                    stack.push((from, mask));
                }
                Transition::Merge { left, right } => {
                    stack.push((v, left));
                    stack.push((v, right));
                }
            }
        }
        let triples: Vec<TripleId> = triples.into_iter().collect();
        let mut nodes = self.graph.nodes_of(&triples);
        if nodes.is_empty() {
            nodes.push(root);
        }
        let total_weight = triples.iter().map(|t| self.weights[t.index()]).sum();
        SnippetTree {
            triples,
            nodes,
            total_weight,
            witnesses: groups
                .groups
                .iter()
                .zip(witness)
                .map(|(g, w)| (g.keyword.clone(), w.expect("every group has a base state")))
                .collect(),
        }
    }
}

fn relax(
    table: &mut HashMap<(NodeId, u32), Entry>,
    heap: &mut BinaryHeap<Reverse<Key>>,
    root: NodeId,
    groups: u32,
    weight: f64,
    parent: Transition,
) {
    let improved = match table.get(&(root, groups)) {
        Some(e) => !e.settled && weight < e.weight,
        None => true,
    };
    if improved {
        table.insert(
            (root, groups),
            Entry {
                weight,
                parent,
                settled: false,
            },
        );
        heap.push(Reverse(Key { weight, root, groups }));
    }
}

pub(crate) fn validate_groups(groups: &KeywordGroups) -> Result<(), GstError> {
    if groups.is_empty() {
        return Err(GstError::NoGroups);
    }
    if groups.len() > MAX_GROUPS {
        return Err(GstError::TooManyGroups {
            count: groups.len(),
            max: MAX_GROUPS,
        });
    }
    if let Some(g) = groups.groups.iter().find(|g| g.nodes.is_empty()) {
        return Err(GstError::EmptyGroup(g.keyword.clone()));
    }
    Ok(())
}

/// Fails unless one connected component meets every group. The error lists
/// the keywords missing from the component that meets the most groups.
pub(crate) fn ensure_connected_cover(graph: &RdfGraph, groups: &KeywordGroups) -> Result<(), GstError> {
    let mut component = vec![usize::MAX; graph.term_count()];
    let mut count = 0;
    for start in graph.graph_nodes() {
        if component[start.index()] != usize::MAX {
            continue;
        }
        component[start.index()] = count;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &t in graph.incident(v) {
                let u = graph.triple(t).other_end(v);
                if component[u.index()] == usize::MAX {
                    component[u.index()] = count;
                    stack.push(u);
                }
            }
        }
        count += 1;
    }

    let mut reached = vec![0u32; count];
    for (k, g) in groups.groups.iter().enumerate() {
        for &v in &g.nodes {
            if let Some(&c) = component.get(v.index()).filter(|&&c| c != usize::MAX) {
                reached[c] |= 1 << k;
            }
        }
    }
    let full = (1u32 << groups.len()) - 1;
    if reached.contains(&full) {
        return Ok(());
    }
    let best = reached
        .iter()
        .copied()
        .max_by(|a, b| a.count_ones().cmp(&b.count_ones()).then(b.cmp(a)))
        .unwrap_or(0);
    let separated = groups
        .groups
        .iter()
        .enumerate()
        .filter(|(k, _)| best & (1 << k) == 0)
        .map(|(_, g)| g.keyword.clone())
        .collect();
    Err(GstError::NoConnectedCover { separated })
}
