//! Multigraph with dense node ids and stable edge ids.
//!
//! Nodes are the integers `0..n`. Edges carry an id that survives subgraph
//! operations, so a certificate computed on an induced subgraph can always be
//! reported in the host graph's coordinates. Parallel edges are allowed,
//! loops are not.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

mod format;
mod iso;

pub use iso::{are_isomorphic, are_isomorphic_with_limit, DEFAULT_ISO_NODE_LIMIT};

pub type NodeId = usize;
pub type EdgeId = usize;

/// An undirected edge with a stable identifier. Endpoints are always distinct.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub id: EdgeId,
    pub u: NodeId,
    pub v: NodeId,
}

impl Edge {
    /// Unordered endpoint pair, smaller node first.
    pub fn pair(&self) -> (NodeId, NodeId) {
        if self.u <= self.v {
            (self.u, self.v)
        } else {
            (self.v, self.u)
        }
    }

    pub fn touches(&self, w: NodeId) -> bool {
        self.u == w || self.v == w
    }

    /// The endpoint different from `w`, if `w` is an endpoint at all.
    pub fn other(&self, w: NodeId) -> Option<NodeId> {
        if self.u == w {
            Some(self.v)
        } else if self.v == w {
            Some(self.u)
        } else {
            None
        }
    }
}

/// A subset of the nodes of some host graph.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NodeSubset(BTreeSet<NodeId>);

impl NodeSubset {
    pub fn new<I: IntoIterator<Item = NodeId>>(nodes: I) -> Self {
        NodeSubset(nodes.into_iter().collect())
    }

    pub fn contains(&self, v: NodeId) -> bool {
        self.0.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.0.iter().copied()
    }
}

impl FromIterator<NodeId> for NodeSubset {
    fn from_iter<I: IntoIterator<Item = NodeId>>(iter: I) -> Self {
        NodeSubset::new(iter)
    }
}

/// Result of taking a subgraph: a dense graph plus the map back to host ids.
///
/// `node_map[i]` is the host node represented by node `i` of `graph`.
/// Edge ids are the host edge ids, unchanged.
#[derive(Debug, Clone)]
pub struct Subgraph {
    pub graph: Multigraph,
    pub node_map: Vec<NodeId>,
}

/// Undirected multigraph. Immutable in spirit: all analysis functions take
/// `&self` and mutation is limited to the construction phase.
#[derive(Debug, Clone, Default)]
pub struct Multigraph {
    node_count: usize,
    edges: Vec<Edge>,
    next_edge_id: EdgeId,
}

impl Multigraph {
    pub fn new(node_count: usize) -> Self {
        Multigraph {
            node_count,
            edges: Vec::new(),
            next_edge_id: 0,
        }
    }

    /// Builds a graph from endpoint pairs; edge ids are `0..pairs.len()`.
    pub fn from_edges(node_count: usize, pairs: &[(NodeId, NodeId)]) -> Result<Self> {
        let mut g = Multigraph::new(node_count);
        for &(u, v) in pairs {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Cycle on `len` nodes in natural order `0-1-...-len-1-0`.
    pub fn cycle(len: usize) -> Self {
        let mut g = Multigraph::new(len);
        for i in 0..len {
            g.add_edge(i, (i + 1) % len).expect("cycle edges are valid");
        }
        g
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn nodes(&self) -> std::ops::Range<NodeId> {
        0..self.node_count
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> Option<&Edge> {
        self.edges.iter().find(|e| e.id == id)
    }

    pub fn add_node(&mut self) -> NodeId {
        self.node_count += 1;
        self.node_count - 1
    }

    pub fn add_edge(&mut self, u: NodeId, v: NodeId) -> Result<EdgeId> {
        self.check_node(u)?;
        self.check_node(v)?;
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        let id = self.next_edge_id;
        self.next_edge_id += 1;
        self.edges.push(Edge { id, u, v });
        Ok(id)
    }

    /// Removes one edge by id, keeping all nodes.
    pub fn remove_edge(&mut self, id: EdgeId) -> Result<()> {
        match self.edges.iter().position(|e| e.id == id) {
            Some(pos) => {
                self.edges.remove(pos);
                Ok(())
            }
            None => Err(Error::UnknownEdge(id)),
        }
    }

    fn check_node(&self, v: NodeId) -> Result<()> {
        if v < self.node_count {
            Ok(())
        } else {
            Err(Error::UnknownNode {
                node: v,
                node_count: self.node_count,
            })
        }
    }

    /// Degree counting parallel edges.
    pub fn degree(&self, v: NodeId) -> usize {
        self.edges.iter().filter(|e| e.touches(v)).count()
    }

    /// Distinct neighbors of `v`.
    pub fn neighbors(&self, v: NodeId) -> BTreeSet<NodeId> {
        self.edges.iter().filter_map(|e| e.other(v)).collect()
    }

    /// Number of parallel copies between `u` and `v`.
    pub fn multiplicity(&self, u: NodeId, v: NodeId) -> usize {
        self.edges
            .iter()
            .filter(|e| e.touches(u) && e.touches(v))
            .count()
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        self.multiplicity(u, v) > 0
    }

    /// Edge ids between `u` and `v`, ascending.
    pub fn edge_ids_between(&self, u: NodeId, v: NodeId) -> Vec<EdgeId> {
        let mut ids: Vec<EdgeId> = self
            .edges
            .iter()
            .filter(|e| e.touches(u) && e.touches(v))
            .map(|e| e.id)
            .collect();
        ids.sort_unstable();
        ids
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges.iter().all(|e| seen.insert(e.pair()))
    }

    /// Number of edges in excess of one copy per endpoint pair.
    pub fn parallel_edge_count(&self) -> usize {
        let mut counts: BTreeMap<(NodeId, NodeId), usize> = BTreeMap::new();
        for e in &self.edges {
            *counts.entry(e.pair()).or_insert(0) += 1;
        }
        counts.values().map(|c| c.saturating_sub(1)).sum()
    }

    /// The underlying simple graph: one copy per adjacent pair, fresh ids.
    pub fn underlying_simple(&self) -> Multigraph {
        let pairs: BTreeSet<(NodeId, NodeId)> = self.edges.iter().map(|e| e.pair()).collect();
        let mut g = Multigraph::new(self.node_count);
        for (u, v) in pairs {
            g.add_edge(u, v).expect("pair endpoints are valid");
        }
        g
    }

    /// Simple complement: `uv` is an edge iff the pair is non-adjacent here.
    pub fn complement(&self) -> Multigraph {
        let mut g = Multigraph::new(self.node_count);
        for u in 0..self.node_count {
            for v in (u + 1)..self.node_count {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v).expect("complement edge is valid");
                }
            }
        }
        g
    }

    /// Induced subgraph on `s`: keeps every edge (including all parallel
    /// copies) with both endpoints in `s`; edge ids are preserved.
    pub fn induced_subgraph(&self, s: &NodeSubset) -> Result<Subgraph> {
        for v in s.iter() {
            self.check_node(v)?;
        }
        let node_map: Vec<NodeId> = s.iter().collect();
        let to_sub: BTreeMap<NodeId, NodeId> = node_map
            .iter()
            .enumerate()
            .map(|(i, &host)| (host, i))
            .collect();
        let mut graph = Multigraph::new(node_map.len());
        for e in &self.edges {
            if let (Some(&u), Some(&v)) = (to_sub.get(&e.u), to_sub.get(&e.v)) {
                graph.edges.push(Edge { id: e.id, u, v });
            }
        }
        graph.next_edge_id = self.next_edge_id;
        Ok(Subgraph { graph, node_map })
    }

    /// Subgraph given explicitly by a node list and a list of edge ids; the
    /// edges must have both endpoints among `nodes`. Used to materialize
    /// certificate subgraphs (which are not induced in general).
    pub fn partial_subgraph(&self, nodes: &[NodeId], edge_ids: &[EdgeId]) -> Result<Subgraph> {
        let mut node_map: Vec<NodeId> = nodes.to_vec();
        node_map.sort_unstable();
        node_map.dedup();
        for &v in &node_map {
            self.check_node(v)?;
        }
        let to_sub: BTreeMap<NodeId, NodeId> = node_map
            .iter()
            .enumerate()
            .map(|(i, &host)| (host, i))
            .collect();
        let mut graph = Multigraph::new(node_map.len());
        for &id in edge_ids {
            let e = *self.edge(id).ok_or(Error::UnknownEdge(id))?;
            let (u, v) = match (to_sub.get(&e.u), to_sub.get(&e.v)) {
                (Some(&u), Some(&v)) => (u, v),
                _ => {
                    return Err(Error::InvalidInput(format!(
                        "edge {id} has an endpoint outside the given node set"
                    )))
                }
            };
            graph.edges.push(Edge { id, u, v });
        }
        graph.next_edge_id = self.next_edge_id;
        Ok(Subgraph { graph, node_map })
    }

    /// Deletes node `v`; nodes after `v` shift down by one. Edge ids of the
    /// surviving edges are preserved.
    pub fn remove_node(&self, v: NodeId) -> Result<Multigraph> {
        self.check_node(v)?;
        let relabel = |w: NodeId| if w > v { w - 1 } else { w };
        let mut g = Multigraph::new(self.node_count - 1);
        for e in &self.edges {
            if !e.touches(v) {
                g.edges.push(Edge {
                    id: e.id,
                    u: relabel(e.u),
                    v: relabel(e.v),
                });
            }
        }
        g.next_edge_id = self.next_edge_id;
        Ok(g)
    }

    /// True iff the graph has at most one connected component. The empty
    /// graph counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.node_count == 0 {
            return true;
        }
        let mut seen = vec![false; self.node_count];
        let mut queue = VecDeque::new();
        seen[0] = true;
        queue.push_back(0);
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == self.node_count
    }

    /// True iff `|V| >= 2`, the graph is connected, and it stays connected
    /// after deleting any single node. Two nodes joined by at least one edge
    /// are 2-connected under this removal-based definition.
    pub fn is_two_connected(&self) -> bool {
        self.find_two_connectivity_violation().is_none()
    }

    /// `None` if 2-connected, otherwise a cut node when one exists (`None`
    /// inside the `Some` is impossible; disconnected or too-small graphs
    /// report node 0 as a placeholder witness).
    pub(crate) fn find_two_connectivity_violation(&self) -> Option<Option<NodeId>> {
        if self.node_count < 2 {
            return Some(None);
        }
        if !self.is_connected() {
            return Some(None);
        }
        for v in 0..self.node_count {
            let g = self.remove_node(v).expect("node is valid");
            if !g.is_connected() {
                return Some(Some(v));
            }
        }
        None
    }

    /// True iff the graph has no odd cycle. Parallel edges only form even
    /// closed walks, so they never affect the answer.
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.node_count];
        for start in 0..self.node_count {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = VecDeque::new();
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        queue.push_back(w);
                    } else if color[w] == color[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// True iff the graph is a single chordless odd cycle spanning all nodes:
    /// simple, connected, every degree exactly 2, odd node count >= 3.
    pub fn is_odd_simple_cycle(&self) -> bool {
        self.node_count >= 3
            && self.node_count % 2 == 1
            && self.edge_count() == self.node_count
            && self.is_simple()
            && (0..self.node_count).all(|v| self.degree(v) == 2)
            && self.is_connected()
    }
}

impl fmt::Display for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_edge_list())
    }
}
