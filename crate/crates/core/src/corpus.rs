//! Exhaustive enumeration of small connected multigraphs up to isomorphism.
//!
//! Graphs are grown one edge at a time: every connected multigraph with m
//! edges arises from one with m-1 edges by doubling an existing edge, adding
//! an edge between existing nodes, or attaching a fresh leaf. Levels are
//! deduplicated through a refinement-invariant bucket key plus exact
//! isomorphism within buckets.

use std::collections::BTreeMap;

use crate::multigraph::{are_isomorphic_with_limit, Multigraph};

#[derive(Debug, Clone, Copy)]
pub struct CorpusOptions {
    pub max_edges: usize,
    /// No new leaves beyond this node count; `None` leaves it to the edge
    /// budget (a connected graph with m edges has at most m+1 nodes).
    pub max_nodes: Option<usize>,
    /// Per-pair multiplicity cap.
    pub max_multiplicity: usize,
}

impl CorpusOptions {
    pub fn simple(max_edges: usize) -> Self {
        CorpusOptions {
            max_edges,
            max_nodes: None,
            max_multiplicity: 1,
        }
    }

    pub fn multigraphs(max_edges: usize) -> Self {
        CorpusOptions {
            max_edges,
            max_nodes: None,
            max_multiplicity: 2,
        }
    }

    pub fn with_max_nodes(mut self, max_nodes: usize) -> Self {
        self.max_nodes = Some(max_nodes);
        self
    }
}

/// All connected multigraphs with up to `max_edges` edges (and the single
/// node), one representative per isomorphism class, grouped no further.
/// Ordering is deterministic: by edge count, then by generation order.
pub fn connected_multigraphs(options: CorpusOptions) -> Vec<Multigraph> {
    let mut all: Vec<Multigraph> = Vec::new();
    let mut level: Vec<Multigraph> = vec![Multigraph::new(1)];
    all.push(Multigraph::new(1));

    for _ in 1..=options.max_edges {
        let mut next = Level::default();
        for g in &level {
            let n = g.node_count();
            // New edge (or parallel copy) between existing nodes.
            for u in 0..n {
                for v in (u + 1)..n {
                    if g.multiplicity(u, v) < options.max_multiplicity {
                        let mut candidate = g.clone();
                        candidate.add_edge(u, v).expect("valid nodes");
                        next.push(candidate);
                    }
                }
            }
            // Fresh leaf.
            if options.max_nodes.is_none_or(|cap| n < cap) {
                for u in 0..n {
                    let mut candidate = g.clone();
                    let leaf = candidate.add_node();
                    candidate.add_edge(u, leaf).expect("valid nodes");
                    next.push(candidate);
                }
            }
        }
        all.extend(next.graphs.iter().cloned());
        level = next.graphs;
    }
    all
}

/// One generation level with isomorphism-deduplicated members.
#[derive(Default)]
struct Level {
    graphs: Vec<Multigraph>,
    buckets: BTreeMap<Vec<u64>, Vec<usize>>,
}

impl Level {
    fn push(&mut self, candidate: Multigraph) {
        let key = invariant_key(&candidate);
        let bucket = self.buckets.entry(key).or_default();
        for &idx in bucket.iter() {
            if are_isomorphic_with_limit(&candidate, &self.graphs[idx], 64)
                .expect("corpus graphs stay far below the node limit")
            {
                return;
            }
        }
        bucket.push(self.graphs.len());
        self.graphs.push(candidate);
    }
}

/// Isomorphism-invariant bucket key: node and edge counts, degree sequences
/// (with and without multiplicity), multiplicity multiset, and the sorted
/// histogram of two rounds of neighborhood refinement.
fn invariant_key(g: &Multigraph) -> Vec<u64> {
    let n = g.node_count();
    let mut key: Vec<u64> = vec![n as u64, g.edge_count() as u64];

    let mut degrees: Vec<u64> = (0..n).map(|v| g.degree(v) as u64).collect();
    degrees.sort_unstable();
    key.extend(&degrees);

    let mut simple_degrees: Vec<u64> = (0..n).map(|v| g.neighbors(v).len() as u64).collect();
    simple_degrees.sort_unstable();
    key.extend(&simple_degrees);

    let mut mults: Vec<u64> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for e in g.edges() {
        if seen.insert(e.pair()) {
            mults.push(g.multiplicity(e.u, e.v) as u64);
        }
    }
    mults.sort_unstable();
    key.extend(&mults);

    // Two refinement rounds, recorded as a sorted color histogram. Color
    // ids are ranks in signature order, so the histogram is label-invariant.
    type Signature = (u64, Vec<(u64, u64)>);
    let mut colors: Vec<u64> = (0..n).map(|v| g.degree(v) as u64).collect();
    for _ in 0..2 {
        let sigs: Vec<Signature> = (0..n)
            .map(|v| {
                let mut nb: Vec<(u64, u64)> = g
                    .neighbors(v)
                    .into_iter()
                    .map(|w| (colors[w], g.multiplicity(v, w) as u64))
                    .collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort_unstable();
        sorted.dedup();
        let rank: BTreeMap<&Signature, u64> = sorted
            .iter()
            .enumerate()
            .map(|(i, s)| (s, i as u64))
            .collect();
        colors = sigs.iter().map(|s| rank[s]).collect();
    }
    let mut histogram = colors;
    histogram.sort_unstable();
    key.extend(&histogram);
    key
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_graph_counts_match_known_values() {
        // Connected simple graphs by edge count: 1 (K1), then
        // 1, 1, 3, 5, 12, 30 for m = 1..=6.
        let counts = |max_edges: usize| -> Vec<usize> {
            let corpus = connected_multigraphs(CorpusOptions::simple(max_edges));
            let mut by_edges = vec![0usize; max_edges + 1];
            for g in &corpus {
                by_edges[g.edge_count()] += 1;
            }
            by_edges
        };
        assert_eq!(counts(6), vec![1, 1, 1, 3, 5, 12, 30]);
    }

    #[test]
    fn multigraph_level_counts_are_plausible() {
        let corpus = connected_multigraphs(CorpusOptions::multigraphs(3));
        let mut by_edges = vec![0usize; 4];
        for g in &corpus {
            by_edges[g.edge_count()] += 1;
        }
        // m=1: K2. m=2: path, doubled edge. m=3: triangle, star, P4, and
        // doubled edge with a pendant (the two attachment choices are
        // isomorphic); a tripled edge is banned by the multiplicity cap.
        assert_eq!(by_edges, vec![1, 1, 2, 4]);
    }

    #[test]
    fn corpus_members_are_connected_and_within_caps() {
        let corpus =
            connected_multigraphs(CorpusOptions::multigraphs(5).with_max_nodes(4));
        for g in &corpus {
            assert!(g.is_connected());
            assert!(g.node_count() <= 4);
            assert!(g.edge_count() <= 5);
            for e in g.edges() {
                assert!(g.multiplicity(e.u, e.v) <= 2);
            }
        }
    }

    #[test]
    fn corpus_has_no_isomorphic_duplicates() {
        let corpus = connected_multigraphs(CorpusOptions::multigraphs(4));
        for (i, g) in corpus.iter().enumerate() {
            for h in &corpus[i + 1..] {
                if g.node_count() == h.node_count() && g.edge_count() == h.edge_count() {
                    assert!(!crate::multigraph::are_isomorphic(g, h).unwrap());
                }
            }
        }
    }
}
