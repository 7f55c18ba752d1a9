//! Trichotomy of 2-connected hypomatchable graphs and the induced-subgraph
//! decision for line graphs, with minimal witness extraction.
//!
//! A 2-connected hypomatchable graph is a 3-node graph, a chordless odd
//! cycle, or it contains an odd hole with one double edge, one chord, or one
//! long ear on non-adjacent hole nodes. The line graph of a root `H` needs
//! exactly the clique and odd-hole inequalities iff no induced subgraph of
//! `H` falls into the third bucket, and in the negative case the first stage
//! of a normalized ear decomposition is a minimal witness.

use serde::{Deserialize, Serialize};

use crate::eardecomp::{normalize_initial_cycle, two_connected_ear_decomposition};
use crate::error::{Error, Result};
use crate::linegraph::line_graph;
use crate::matching::{hypomatchability_violation, is_hypomatchable};
use crate::multigraph::{EdgeId, Multigraph, NodeId, NodeSubset};

pub const DEFAULT_DECISION_NODE_LIMIT: usize = 18;

/// The three shapes a forbidden first stage can take.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum HypomatchKind {
    /// Odd hole plus a parallel copy of a hole edge.
    DoubleEdge,
    /// Odd hole plus a chord.
    Chord,
    /// Odd hole plus a long ear on non-adjacent hole nodes.
    LongEarNonAdjacent,
}

/// A concrete forbidden configuration inside some host graph: the odd hole
/// (in cycle order), the attached structure, and the sub-multigraph they
/// span (node set plus edge ids of the host).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForbiddenWitness {
    pub kind: HypomatchKind,
    pub hole: Vec<NodeId>,
    /// For a double edge or chord: the two attachment nodes. For a long
    /// ear: the full ear path.
    pub ear_path: Vec<NodeId>,
    pub nodes: Vec<NodeId>,
    pub edge_ids: Vec<EdgeId>,
}

impl ForbiddenWitness {
    pub fn hole_length(&self) -> usize {
        self.hole.len()
    }

    pub fn ear_length(&self) -> usize {
        self.ear_path.len() - 1
    }
}

/// Classification of a 2-connected hypomatchable graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum HypomatchClass {
    ThreeNodes,
    OddHole,
    Forbidden(ForbiddenWitness),
}

/// Exactly one of: three nodes, chordless odd cycle, or a forbidden
/// configuration extracted from a normalized stage-wise 2-connected ear
/// decomposition.
pub fn classify_hypomatchable(h: &Multigraph) -> Result<HypomatchClass> {
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
    if h.node_count() == 3 {
        return Ok(HypomatchClass::ThreeNodes);
    }
    if h.is_odd_simple_cycle() {
        return Ok(HypomatchClass::OddHole);
    }

    let decomposition = normalize_initial_cycle(&two_connected_ear_decomposition(h)?)?;
    let hole = decomposition.h0.clone();
    let ear = decomposition.ears.first().ok_or_else(|| {
        Error::Internal("a non-cycle graph must have at least one ear".into())
    })?;
    let (a, b) = ear.endpoints();
    let adjacent_on_hole = {
        let pos_a = hole.iter().position(|&v| v == a);
        let pos_b = hole.iter().position(|&v| v == b);
        match (pos_a, pos_b) {
            (Some(i), Some(j)) => {
                let d = i.abs_diff(j);
                d == 1 || d == hole.len() - 1
            }
            _ => {
                return Err(Error::Internal(
                    "first ear endpoints must lie on the initial cycle".into(),
                ))
            }
        }
    };

    let witness = if !ear.is_long() {
        let kind = if adjacent_on_hole {
            HypomatchKind::DoubleEdge
        } else {
            HypomatchKind::Chord
        };
        build_witness(h, kind, hole, vec![a.min(b), a.max(b)])?
    } else if adjacent_on_hole {
        // Long ear on adjacent hole nodes: re-express as the longer odd hole
        // (hole minus the edge ab, plus the ear) with chord ab.
        let long_hole = open_hole_through_ear(&hole, &ear.path, a, b);
        build_witness(h, HypomatchKind::Chord, long_hole, vec![a.min(b), a.max(b)])?
    } else {
        build_witness(h, HypomatchKind::LongEarNonAdjacent, hole, ear.path.clone())?
    };
    Ok(HypomatchClass::Forbidden(witness))
}

/// Cycle order of `(hole - ab) ∪ ear`: walk the hole from `a` to `b` the
/// long way round, then return along the ear.
fn open_hole_through_ear(
    hole: &[NodeId],
    ear_path: &[NodeId],
    a: NodeId,
    b: NodeId,
) -> Vec<NodeId> {
    let len = hole.len();
    let i = hole.iter().position(|&v| v == a).expect("a on hole");
    let j = hole.iter().position(|&v| v == b).expect("b on hole");
    // Walk from a away from b (b is the cyclic neighbor in one direction).
    let step: isize = if (i + 1) % len == j { -1 } else { 1 };
    let mut order = Vec::with_capacity(len + ear_path.len() - 2);
    let mut pos = i as isize;
    for _ in 0..len {
        order.push(hole[pos.rem_euclid(len as isize) as usize]);
        pos += step;
    }
    debug_assert_eq!(*order.last().expect("nonempty"), b);
    let internals: Vec<NodeId> = if ear_path[0] == b {
        ear_path[1..ear_path.len() - 1].to_vec()
    } else {
        ear_path[1..ear_path.len() - 1].iter().rev().copied().collect()
    };
    order.extend(internals);
    order
}

/// Resolves the witness pair multiset (hole edges plus attachment) to edge
/// ids of the host, smallest ids first.
fn build_witness(
    h: &Multigraph,
    kind: HypomatchKind,
    hole: Vec<NodeId>,
    ear_path: Vec<NodeId>,
) -> Result<ForbiddenWitness> {
    let mut pairs: Vec<(NodeId, NodeId)> = Vec::new();
    for i in 0..hole.len() {
        let (u, v) = (hole[i], hole[(i + 1) % hole.len()]);
        pairs.push((u.min(v), u.max(v)));
    }
    for w in ear_path.windows(2) {
        let (u, v) = (w[0], w[1]);
        pairs.push((u.min(v), u.max(v)));
    }

    let mut used: Vec<EdgeId> = Vec::new();
    for &(u, v) in &pairs {
        let id = h
            .edge_ids_between(u, v)
            .into_iter()
            .find(|id| !used.contains(id))
            .ok_or_else(|| {
                Error::Internal(format!(
                    "witness needs more copies of edge {u}-{v} than the host has"
                ))
            })?;
        used.push(id);
    }
    used.sort_unstable();

    let mut nodes: Vec<NodeId> = hole.iter().chain(ear_path.iter()).copied().collect();
    nodes.sort_unstable();
    nodes.dedup();

    Ok(ForbiddenWitness {
        kind,
        hole,
        ear_path,
        nodes,
        edge_ids: used,
    })
}

/// Family tag of a minimal witness; `kind` follows the hole-plus-structure
/// naming, `ear_length` is 1 for double edges and chords.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyTag {
    pub kind: FamilyKind,
    pub hole_length: usize,
    pub ear_length: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilyKind {
    #[serde(rename = "C+d")]
    HolePlusDouble,
    #[serde(rename = "C+c")]
    HolePlusChord,
    #[serde(rename = "C+E")]
    HolePlusEar,
}

impl From<HypomatchKind> for FamilyKind {
    fn from(kind: HypomatchKind) -> Self {
        match kind {
            HypomatchKind::DoubleEdge => FamilyKind::HolePlusDouble,
            HypomatchKind::Chord => FamilyKind::HolePlusChord,
            HypomatchKind::LongEarNonAdjacent => FamilyKind::HolePlusEar,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Perfect,
    Imperfect,
}

/// Decision for the line graph of a root, with a minimal witness when
/// imperfect: witness_root is an odd hole plus exactly one ear attached at
/// two distinct hole nodes, and its line graph loses the property while
/// every proper induced subgraph keeps it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NPlusCertificate {
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_root_nodes: Option<Vec<NodeId>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_root_edges: Option<Vec<EdgeId>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilyTag>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line_nodes: Option<Vec<NodeId>>,
}

impl NPlusCertificate {
    pub fn perfect() -> Self {
        NPlusCertificate {
            verdict: Verdict::Perfect,
            witness_root_nodes: None,
            witness_root_edges: None,
            family: None,
            line_nodes: None,
        }
    }
}

/// Scans the induced subgraphs of `h` (odd size, at least five nodes,
/// connected, 2-connected, hypomatchable) for one that is not an odd hole;
/// smallest node count first, then lexicographic node set, so certificates
/// are deterministic.
pub fn decide_line_nplus_perfect(h: &Multigraph) -> Result<NPlusCertificate> {
    decide_line_nplus_perfect_with_limit(h, DEFAULT_DECISION_NODE_LIMIT)
}

pub fn decide_line_nplus_perfect_with_limit(
    h: &Multigraph,
    max_nodes: usize,
) -> Result<NPlusCertificate> {
    if h.edge_count() == 0 {
        return Err(Error::InvalidInput(
            "the decision needs a root graph with at least one edge".into(),
        ));
    }
    if h.node_count() > max_nodes {
        return Err(Error::ResourceLimit {
            what: "induced-subgraph scan node count",
            value: h.node_count(),
            limit: max_nodes,
        });
    }

    let n = h.node_count();
    let mut size = 5;
    while size <= n {
        let mut subset = first_combination(size);
        loop {
            if subset_connected(h, &subset) {
                let sub = h.induced_subgraph(&subset.iter().copied().collect::<NodeSubset>())?;
                if sub.graph.is_two_connected()
                    && is_hypomatchable(&sub.graph)
                    && !sub.graph.is_odd_simple_cycle()
                {
                    let class = classify_hypomatchable(&sub.graph)?;
                    let witness = match class {
                        HypomatchClass::Forbidden(w) => relabel_witness(w, &sub.node_map),
                        other => {
                            return Err(Error::Internal(format!(
                                "scan hit a non-forbidden class {other:?}"
                            )))
                        }
                    };
                    return minimal_witness(h, &HypomatchClass::Forbidden(witness));
                }
            }
            if !next_combination(&mut subset, n) {
                break;
            }
        }
        size += 2;
    }
    Ok(NPlusCertificate::perfect())
}

fn first_combination(size: usize) -> Vec<usize> {
    (0..size).collect()
}

fn next_combination(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] < n - (k - i) {
            subset[i] += 1;
            for j in (i + 1)..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn subset_connected(h: &Multigraph, subset: &[NodeId]) -> bool {
    if subset.is_empty() {
        return true;
    }
    let inside = |v: NodeId| subset.binary_search(&v).is_ok();
    let mut seen = vec![subset[0]];
    let mut stack = vec![subset[0]];
    while let Some(v) = stack.pop() {
        for w in h.neighbors(v) {
            if inside(w) && !seen.contains(&w) {
                seen.push(w);
                stack.push(w);
            }
        }
    }
    seen.len() == subset.len()
}

fn relabel_witness(w: ForbiddenWitness, node_map: &[NodeId]) -> ForbiddenWitness {
    let map = |v: NodeId| node_map[v];
    let mut nodes: Vec<NodeId> = w.nodes.iter().map(|&v| map(v)).collect();
    nodes.sort_unstable();
    ForbiddenWitness {
        kind: w.kind,
        hole: w.hole.iter().map(|&v| map(v)).collect(),
        ear_path: w.ear_path.iter().map(|&v| map(v)).collect(),
        nodes,
        // Edge ids of an induced subgraph are host ids already.
        edge_ids: w.edge_ids,
    }
}

/// Assembles the certificate for a forbidden configuration found in `h`:
/// witness coordinates in `h`'s labels and the matching line-graph nodes.
pub fn minimal_witness(h: &Multigraph, forbidden: &HypomatchClass) -> Result<NPlusCertificate> {
    let witness = match forbidden {
        HypomatchClass::Forbidden(w) => w,
        other => {
            return Err(Error::InvalidInput(format!(
                "minimal witnesses exist only for forbidden classifications, got {other:?}"
            )))
        }
    };
    debug_assert!(witness.hole_length() >= 5 && witness.hole_length() % 2 == 1);
    debug_assert!(witness.ear_length() % 2 == 1);

    let lg = line_graph(h)?;
    let line_nodes: Result<Vec<NodeId>> = witness
        .edge_ids
        .iter()
        .map(|id| {
            lg.edge_to_node
                .get(id)
                .copied()
                .ok_or(Error::UnknownEdge(*id))
        })
        .collect();
    let mut line_nodes = line_nodes?;
    line_nodes.sort_unstable();

    Ok(NPlusCertificate {
        verdict: Verdict::Imperfect,
        witness_root_nodes: Some(witness.nodes.clone()),
        witness_root_edges: Some(witness.edge_ids.clone()),
        family: Some(FamilyTag {
            kind: witness.kind.into(),
            hole_length: witness.hole_length(),
            ear_length: witness.ear_length(),
        }),
        line_nodes: Some(line_nodes),
    })
}

/// The line graph of `h` needs only clique and odd-hole inequalities iff the
/// decision comes back perfect.
pub fn is_h_perfect_line(h: &Multigraph) -> Result<bool> {
    Ok(decide_line_nplus_perfect(h)?.verdict == Verdict::Perfect)
}

/// Materializes a certificate witness as a standalone multigraph (host
/// labels preserved through the returned map).
pub fn witness_subgraph(h: &Multigraph, cert: &NPlusCertificate) -> Result<crate::multigraph::Subgraph> {
    let nodes = cert
        .witness_root_nodes
        .as_ref()
        .ok_or_else(|| Error::InvalidInput("certificate carries no witness".into()))?;
    let edges = cert
        .witness_root_edges
        .as_ref()
        .ok_or_else(|| Error::InvalidInput("certificate carries no witness".into()))?;
    h.partial_subgraph(nodes, edges)
}
