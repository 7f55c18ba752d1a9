//! Ear decompositions of hypomatchable multigraphs.
//!
//! A decomposition is an initial chordless odd cycle plus an ordered list of
//! odd ears. Producers work by peeling ears off the back: at every step the
//! candidate last ears are the single edges and the maximal chains of
//! degree-2 nodes, and a candidate is accepted when the remainder keeps the
//! stage invariant (hypomatchable, plus 2-connected for the stage-wise
//! 2-connected variant). The cited existence theorems guarantee that some
//! candidate always passes, so the peeling never backtracks.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matching::{hypomatchability_violation, is_hypomatchable};
use crate::multigraph::{EdgeId, Multigraph, NodeId};

/// An odd path attached by its endpoints to the previous stage. A short ear
/// has one edge (possibly parallel to an existing edge); endpoints may
/// coincide only in decompositions without the 2-connected stage guarantee.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Ear {
    pub path: Vec<NodeId>,
}

impl Ear {
    pub fn new(path: Vec<NodeId>) -> Self {
        Ear { path }
    }

    /// Number of edges.
    pub fn length(&self) -> usize {
        self.path.len().saturating_sub(1)
    }

    pub fn is_long(&self) -> bool {
        self.length() >= 3
    }

    pub fn endpoints(&self) -> (NodeId, NodeId) {
        (self.path[0], *self.path.last().expect("nonempty path"))
    }

    pub fn is_closed(&self) -> bool {
        let (a, b) = self.endpoints();
        a == b
    }

    pub fn internal_nodes(&self) -> &[NodeId] {
        &self.path[1..self.path.len() - 1]
    }
}

/// Initial odd cycle plus ordered ears; the stages are implied.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EarDecomposition {
    pub h0: Vec<NodeId>,
    pub ears: Vec<Ear>,
}

impl EarDecomposition {
    /// All nodes of the final stage.
    pub fn node_set(&self) -> BTreeSet<NodeId> {
        let mut nodes: BTreeSet<NodeId> = self.h0.iter().copied().collect();
        for ear in &self.ears {
            nodes.extend(ear.internal_nodes().iter().copied());
        }
        nodes
    }
}

/// Why a decomposition fails validation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "issue", rename_all = "snake_case")]
pub enum DecompositionIssue {
    InitialCycleNotOdd { len: usize },
    InitialCycleRepeatsNode { node: NodeId },
    UnknownNode { node: NodeId },
    EvenEar { index: usize, length: usize },
    EmptyEar { index: usize },
    EndpointOutsidePreviousStage { index: usize, node: NodeId },
    InternalNodeAlreadyPresent { index: usize, node: NodeId },
    InternalNodeRepeated { index: usize, node: NodeId },
    MissingEdge { u: NodeId, v: NodeId },
    UncoveredEdges { count: usize },
    NodeNotCovered { node: NodeId },
    StageNotTwoConnected { stage: usize },
}

impl fmt::Display for DecompositionIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use DecompositionIssue::*;
        match self {
            InitialCycleNotOdd { len } => write!(f, "initial cycle length {len} is not odd >= 3"),
            InitialCycleRepeatsNode { node } => write!(f, "initial cycle repeats node {node}"),
            UnknownNode { node } => write!(f, "node {node} does not exist in the host graph"),
            EvenEar { index, length } => write!(f, "even ear: ear {index} has length {length}"),
            EmptyEar { index } => write!(f, "ear {index} has fewer than two path nodes"),
            EndpointOutsidePreviousStage { index, node } => {
                write!(f, "ear {index} endpoint {node} not in the previous stage")
            }
            InternalNodeAlreadyPresent { index, node } => {
                write!(f, "ear {index} internal node {node} already in previous stage")
            }
            InternalNodeRepeated { index, node } => {
                write!(f, "ear {index} repeats internal node {node}")
            }
            MissingEdge { u, v } => write!(f, "edge coverage: needs edge {u}-{v} more often than present"),
            UncoveredEdges { count } => write!(f, "edge coverage: {count} host edges not covered"),
            NodeNotCovered { node } => write!(f, "node {node} of the host graph not covered"),
            StageNotTwoConnected { stage } => write!(f, "stage {stage} is not 2-connected"),
        }
    }
}

/// Validation outcome with machine-readable reasons.
#[derive(Debug, Clone, Serialize)]
pub struct DecompositionReport {
    pub issues: Vec<DecompositionIssue>,
}

impl DecompositionReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }
}

/// Checks all structural invariants of `d` against `h`: odd initial cycle,
/// odd ears with endpoints in the previous stage, fresh internal nodes, and
/// exact coverage of the edge multiset and node set of `h`. When
/// `require_two_connected` holds, every stage graph must be 2-connected.
pub fn validate_decomposition(
    h: &Multigraph,
    d: &EarDecomposition,
    require_two_connected: bool,
) -> DecompositionReport {
    let mut issues = Vec::new();
    let n = h.node_count();

    // Multiset of host edges by unordered endpoint pair.
    let mut remaining: BTreeMap<(NodeId, NodeId), usize> = BTreeMap::new();
    for e in h.edges() {
        *remaining.entry(e.pair()).or_insert(0) += 1;
    }
    let mut consume = |u: NodeId, v: NodeId, issues: &mut Vec<DecompositionIssue>| {
        let key = if u <= v { (u, v) } else { (v, u) };
        match remaining.get_mut(&key) {
            Some(c) if *c > 0 => *c -= 1,
            _ => issues.push(DecompositionIssue::MissingEdge { u: key.0, v: key.1 }),
        }
    };

    if d.h0.len() < 3 || d.h0.len() % 2 == 0 {
        issues.push(DecompositionIssue::InitialCycleNotOdd { len: d.h0.len() });
    }
    let mut stage_nodes: BTreeSet<NodeId> = BTreeSet::new();
    for &v in &d.h0 {
        if v >= n {
            issues.push(DecompositionIssue::UnknownNode { node: v });
        } else if !stage_nodes.insert(v) {
            issues.push(DecompositionIssue::InitialCycleRepeatsNode { node: v });
        }
    }
    let mut stage_pairs: Vec<(NodeId, NodeId)> = Vec::new();
    if d.h0.len() >= 2 {
        for i in 0..d.h0.len() {
            let (u, v) = (d.h0[i], d.h0[(i + 1) % d.h0.len()]);
            consume(u, v, &mut issues);
            stage_pairs.push((u, v));
        }
    }

    let stage_two_connected = |pairs: &[(NodeId, NodeId)], nodes: &BTreeSet<NodeId>| -> bool {
        let order: Vec<NodeId> = nodes.iter().copied().collect();
        let index: BTreeMap<NodeId, usize> = order
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i))
            .collect();
        let mut g = Multigraph::new(order.len());
        for &(u, v) in pairs {
            if let (Some(&a), Some(&b)) = (index.get(&u), index.get(&v)) {
                if a != b {
                    let _ = g.add_edge(a, b);
                }
            }
        }
        g.is_two_connected()
    };

    if require_two_connected && !stage_two_connected(&stage_pairs, &stage_nodes) {
        issues.push(DecompositionIssue::StageNotTwoConnected { stage: 0 });
    }

    for (index, ear) in d.ears.iter().enumerate() {
        if ear.path.len() < 2 {
            issues.push(DecompositionIssue::EmptyEar { index });
            continue;
        }
        if ear.length() % 2 == 0 {
            issues.push(DecompositionIssue::EvenEar {
                index,
                length: ear.length(),
            });
        }
        let (a, b) = ear.endpoints();
        for endpoint in [a, b] {
            if endpoint >= n {
                issues.push(DecompositionIssue::UnknownNode { node: endpoint });
            } else if !stage_nodes.contains(&endpoint) {
                issues.push(DecompositionIssue::EndpointOutsidePreviousStage {
                    index,
                    node: endpoint,
                });
            }
        }
        let mut fresh: BTreeSet<NodeId> = BTreeSet::new();
        for &x in ear.internal_nodes() {
            if x >= n {
                issues.push(DecompositionIssue::UnknownNode { node: x });
            } else if stage_nodes.contains(&x) {
                issues.push(DecompositionIssue::InternalNodeAlreadyPresent { index, node: x });
            } else if !fresh.insert(x) {
                issues.push(DecompositionIssue::InternalNodeRepeated { index, node: x });
            }
        }
        for w in ear.path.windows(2) {
            consume(w[0], w[1], &mut issues);
            stage_pairs.push((w[0], w[1]));
        }
        stage_nodes.extend(fresh);
        if require_two_connected && !stage_two_connected(&stage_pairs, &stage_nodes) {
            issues.push(DecompositionIssue::StageNotTwoConnected { stage: index + 1 });
        }
    }

    let uncovered: usize = remaining.values().sum();
    if uncovered > 0 {
        issues.push(DecompositionIssue::UncoveredEdges { count: uncovered });
    }
    for v in 0..n {
        if !stage_nodes.contains(&v) {
            issues.push(DecompositionIssue::NodeNotCovered { node: v });
        }
    }

    DecompositionReport { issues }
}

/// An ear decomposition of a hypomatchable graph (at least 3 nodes). Ears
/// may attach to a single node.
pub fn ear_decomposition(h: &Multigraph) -> Result<EarDecomposition> {
    if let Err(v) = hypomatchability_violation(h) {
        return Err(Error::ContractViolation {
            predicate: "is_hypomatchable",
            violating_node: Some(v),
        });
    }
    if h.node_count() < 3 {
        return Err(Error::InvalidInput(
            "ear decompositions need an odd cycle, so at least 3 nodes".into(),
        ));
    }
    peel(h, false)
}

/// An ear decomposition with every stage 2-connected; in particular every
/// ear has two distinct endpoints.
pub fn two_connected_ear_decomposition(h: &Multigraph) -> Result<EarDecomposition> {
    if let Some(witness) = h.find_two_connectivity_violation() {
        return Err(Error::ContractViolation {
            predicate: "is_two_connected",
            violating_node: witness,
        });
    }
    if let Err(v) = hypomatchability_violation(h) {
        return Err(Error::ContractViolation {
            predicate: "is_hypomatchable",
            violating_node: Some(v),
        });
    }
    peel(h, true)
}

/// Rewrites a stage-wise 2-connected decomposition so the initial cycle has
/// length at least five, leaving the graph and the ear count unchanged.
///
/// When `h0` is a triangle: take the first long ear `E_i` (its endpoints
/// `v, v'` are distinct nodes of the triangle), open the triangle edge `vv'`
/// into the new initial cycle `(h0 - vv') ∪ E_i`, then re-add `vv'` as a
/// short ear followed by the previously earlier ears and the untouched tail.
pub fn normalize_initial_cycle(d: &EarDecomposition) -> Result<EarDecomposition> {
    let total_nodes = d.node_set().len();
    if total_nodes < 5 {
        return Err(Error::InvalidInput(format!(
            "initial-cycle normalization needs at least 5 nodes, got {total_nodes}"
        )));
    }
    if d.h0.len() >= 5 {
        return Ok(d.clone());
    }
    if d.h0.len() != 3 {
        return Err(Error::InvalidInput(format!(
            "initial cycle has length {}, expected an odd cycle",
            d.h0.len()
        )));
    }

    let i = d
        .ears
        .iter()
        .position(|e| e.is_long())
        .ok_or(Error::ContractViolation {
            predicate: "a long ear exists when the graph has more than 3 nodes",
            violating_node: None,
        })?;

    // All ears before the first long one are short, so the stage before the
    // long ear still has exactly the triangle's nodes.
    let h0_nodes: BTreeSet<NodeId> = d.h0.iter().copied().collect();
    for earlier in &d.ears[..i] {
        if !earlier.internal_nodes().is_empty() {
            return Err(Error::ContractViolation {
                predicate: "ears before the first long ear are short",
                violating_node: Some(earlier.internal_nodes()[0]),
            });
        }
    }
    let long = &d.ears[i];
    let (v, vp) = long.endpoints();
    if v == vp || !h0_nodes.contains(&v) || !h0_nodes.contains(&vp) {
        return Err(Error::ContractViolation {
            predicate: "long ear has two distinct endpoints on the initial cycle",
            violating_node: Some(v),
        });
    }
    let &third = d
        .h0
        .iter()
        .find(|&&x| x != v && x != vp)
        .expect("triangle has a third node");

    // New cycle: v - third - v' - (long ear internals, walked from v' to v).
    let mut cycle = vec![v, third, vp];
    if long.path[0] == vp {
        cycle.extend(long.internal_nodes().iter().copied());
    } else {
        cycle.extend(long.internal_nodes().iter().rev().copied());
    }

    let mut ears = Vec::with_capacity(d.ears.len());
    ears.push(Ear::new(vec![v.min(vp), v.max(vp)]));
    ears.extend(d.ears[..i].iter().cloned());
    ears.extend(d.ears[i + 1..].iter().cloned());

    Ok(EarDecomposition { h0: cycle, ears })
}

// --- peeling search -------------------------------------------------------

struct Scratch<'a> {
    host: &'a Multigraph,
    alive_nodes: BTreeSet<NodeId>,
    alive_edges: BTreeSet<EdgeId>,
}

impl<'a> Scratch<'a> {
    fn new(host: &'a Multigraph) -> Self {
        Scratch {
            host,
            alive_nodes: host.nodes().collect(),
            alive_edges: host.edges().iter().map(|e| e.id).collect(),
        }
    }

    fn degree(&self, v: NodeId) -> usize {
        self.host
            .edges()
            .iter()
            .filter(|e| self.alive_edges.contains(&e.id) && e.touches(v))
            .count()
    }

    fn distinct_neighbors(&self, v: NodeId) -> Vec<NodeId> {
        let mut nb: Vec<NodeId> = self
            .host
            .edges()
            .iter()
            .filter(|e| self.alive_edges.contains(&e.id))
            .filter_map(|e| e.other(v))
            .collect();
        nb.sort_unstable();
        nb.dedup();
        nb
    }

    /// Materializes the alive part as a dense graph (host-order labels).
    fn to_multigraph(&self) -> Multigraph {
        let order: Vec<NodeId> = self.alive_nodes.iter().copied().collect();
        let index: BTreeMap<NodeId, usize> = order
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i))
            .collect();
        let mut g = Multigraph::new(order.len());
        for e in self.host.edges() {
            if self.alive_edges.contains(&e.id) {
                g.add_edge(index[&e.u], index[&e.v])
                    .expect("alive endpoints are alive nodes");
            }
        }
        g
    }

    fn is_odd_simple_cycle(&self) -> bool {
        self.to_multigraph().is_odd_simple_cycle()
    }

    /// Initial cycle in canonical rotation: starts at the smallest alive
    /// node and walks toward its smaller neighbor.
    fn cycle_nodes(&self) -> Vec<NodeId> {
        let start = *self.alive_nodes.iter().next().expect("cycle is nonempty");
        let mut cycle = vec![start];
        let nb = self.distinct_neighbors(start);
        let mut prev = start;
        let mut cur = nb[0];
        while cur != start {
            cycle.push(cur);
            let next = self
                .distinct_neighbors(cur)
                .into_iter()
                .find(|&w| w != prev)
                .expect("cycle node has two neighbors");
            prev = cur;
            cur = next;
        }
        cycle
    }
}

#[derive(Debug, Clone)]
struct Candidate {
    path: Vec<NodeId>,
    edge_ids: Vec<EdgeId>,
}

impl Candidate {
    fn sort_key(&self) -> (NodeId, NodeId, usize, Vec<NodeId>) {
        let a = self.path[0];
        let b = *self.path.last().unwrap();
        (a.min(b), a.max(b), self.path.len() - 1, self.path.clone())
    }
}

/// Candidate last ears of the current stage: every alive edge as a short
/// ear, and every maximal chain of degree-2 nodes (with distinct neighbors)
/// as a long ear. Closed ears are produced only when `allow_closed`.
fn candidates(s: &Scratch, allow_closed: bool) -> Vec<Candidate> {
    let mut out = Vec::new();

    for e in s.host.edges() {
        if s.alive_edges.contains(&e.id) {
            let (u, v) = e.pair();
            // For a parallel pair only the largest id is offered; the copies
            // are interchangeable.
            let ids: Vec<EdgeId> = s
                .host
                .edges()
                .iter()
                .filter(|f| s.alive_edges.contains(&f.id) && f.pair() == (u, v))
                .map(|f| f.id)
                .collect();
            if e.id == *ids.iter().max().unwrap() {
                out.push(Candidate {
                    path: vec![u, v],
                    edge_ids: vec![e.id],
                });
            }
        }
    }

    let is_chain_node = |v: NodeId| s.degree(v) == 2 && s.distinct_neighbors(v).len() == 2;
    let mut visited: BTreeSet<NodeId> = BTreeSet::new();
    for &c in &s.alive_nodes {
        if visited.contains(&c) || !is_chain_node(c) {
            continue;
        }
        // Walk the chain through c in both directions up to the anchors.
        let mut run = vec![c];
        visited.insert(c);
        let nb = s.distinct_neighbors(c);
        let mut wrapped = false;
        for (slot, &start) in nb.iter().enumerate() {
            let mut prev = c;
            let mut cur = start;
            while is_chain_node(cur) && !visited.contains(&cur) {
                visited.insert(cur);
                if slot == 0 {
                    run.insert(0, cur);
                } else {
                    run.push(cur);
                }
                let next = s
                    .distinct_neighbors(cur)
                    .into_iter()
                    .find(|&w| w != prev)
                    .expect("chain node has two neighbors");
                prev = cur;
                cur = next;
            }
            if visited.contains(&cur) && is_chain_node(cur) {
                wrapped = true; // pure cycle of chain nodes; base case territory
                break;
            }
            if slot == 0 {
                run.insert(0, cur);
            } else {
                run.push(cur);
            }
        }
        if wrapped || run.len() < 3 {
            continue;
        }
        let (a, b) = (run[0], *run.last().unwrap());
        if a == b && !allow_closed {
            continue;
        }
        let path = if a <= b {
            run.clone()
        } else {
            run.iter().rev().copied().collect()
        };
        let mut edge_ids = Vec::new();
        let mut ok = true;
        for w in path.windows(2) {
            match s
                .host
                .edges()
                .iter()
                .find(|e| s.alive_edges.contains(&e.id) && e.pair() == (w[0].min(w[1]), w[0].max(w[1])))
            {
                Some(e) => edge_ids.push(e.id),
                None => ok = false,
            }
        }
        if ok {
            out.push(Candidate { path, edge_ids });
        }
    }

    out.sort_by_key(|c| c.sort_key());
    out
}

fn peel(h: &Multigraph, two_connected_stages: bool) -> Result<EarDecomposition> {
    let mut scratch = Scratch::new(h);
    let mut reversed_ears: Vec<Ear> = Vec::new();

    loop {
        if scratch.is_odd_simple_cycle() {
            reversed_ears.reverse();
            return Ok(EarDecomposition {
                h0: scratch.cycle_nodes(),
                ears: reversed_ears,
            });
        }

        let mut chosen = None;
        for cand in candidates(&scratch, !two_connected_stages) {
            if (cand.path.len() - 1) % 2 == 0 {
                continue;
            }
            let internals: BTreeSet<NodeId> =
                cand.path[1..cand.path.len() - 1].iter().copied().collect();
            if scratch.alive_nodes.len() - internals.len() < 3 {
                continue;
            }
            // Tentatively remove the ear and check the stage invariant.
            for &id in &cand.edge_ids {
                scratch.alive_edges.remove(&id);
            }
            for &x in &internals {
                scratch.alive_nodes.remove(&x);
            }
            let rest = scratch.to_multigraph();
            let ok = is_hypomatchable(&rest)
                && (!two_connected_stages || rest.is_two_connected());
            if ok {
                chosen = Some(cand);
                break;
            }
            for &id in &cand.edge_ids {
                scratch.alive_edges.insert(id);
            }
            for &x in &internals {
                scratch.alive_nodes.insert(x);
            }
        }

        match chosen {
            Some(cand) => reversed_ears.push(Ear::new(cand.path)),
            None => {
                return Err(Error::Internal(
                    "no removable ear found although the stage invariant holds".into(),
                ))
            }
        }
    }
}
