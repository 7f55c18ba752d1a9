//! Exact maximum matching (blossom search) and hypomatchability testing.
//!
//! Matchings are computed on the underlying simple graph and lifted back to
//! edge ids; a parallel copy never helps a matching. A subset-DP matcher is
//! kept as an independent reference for small graphs.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::multigraph::{EdgeId, Multigraph, NodeId};

/// A set of pairwise non-incident edges, stored by edge id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    edge_ids: Vec<EdgeId>,
}

impl Matching {
    pub fn edge_ids(&self) -> &[EdgeId] {
        &self.edge_ids
    }

    pub fn len(&self) -> usize {
        self.edge_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_ids.is_empty()
    }
}

/// Maximum-cardinality matching via blossom-shrinking augmenting-path search.
pub fn maximum_matching(g: &Multigraph) -> Matching {
    let mate = blossom_mate(g);
    let mut edge_ids = Vec::new();
    for v in 0..g.node_count() {
        if let Some(w) = mate[v] {
            if v < w {
                let ids = g.edge_ids_between(v, w);
                edge_ids.push(ids[0]);
            }
        }
    }
    edge_ids.sort_unstable();
    debug_assert!(is_matching(g, &edge_ids));
    Matching { edge_ids }
}

/// True iff some matching meets every node. The empty graph qualifies.
pub fn has_perfect_matching(g: &Multigraph) -> bool {
    2 * maximum_matching(g).len() == g.node_count()
}

/// True iff `|V|` is odd and `g - v` has a perfect matching for every node
/// `v`. A single node qualifies vacuously.
pub fn is_hypomatchable(g: &Multigraph) -> bool {
    hypomatchability_violation(g).is_ok()
}

/// `Ok(())` when hypomatchable, otherwise a node whose removal leaves no
/// perfect matching (for even order every node works; node 0 is reported).
pub(crate) fn hypomatchability_violation(g: &Multigraph) -> std::result::Result<(), NodeId> {
    if g.node_count() == 0 {
        return Err(0);
    }
    if g.node_count() % 2 == 0 {
        return Err(0);
    }
    for v in 0..g.node_count() {
        let rest = g.remove_node(v).expect("node is valid");
        if !has_perfect_matching(&rest) {
            return Err(v);
        }
    }
    Ok(())
}

/// Maximum matching size by DP over node subsets. Independent of the blossom
/// path; exact for graphs with at most `MAX_EXHAUSTIVE_NODES` nodes.
pub fn exhaustive_maximum_matching_size(g: &Multigraph) -> Result<usize> {
    const MAX_EXHAUSTIVE_NODES: usize = 20;
    let n = g.node_count();
    if n > MAX_EXHAUSTIVE_NODES {
        return Err(Error::ResourceLimit {
            what: "exhaustive matching node count",
            value: n,
            limit: MAX_EXHAUSTIVE_NODES,
        });
    }
    let mut adj = vec![0u32; n];
    for e in g.edges() {
        adj[e.u] |= 1 << e.v;
        adj[e.v] |= 1 << e.u;
    }
    let mut best = vec![u8::MAX; 1usize << n];
    Ok(usize::from(subset_matching(
        ((1usize << n) - 1) as u32,
        &adj,
        &mut best,
    )))
}

fn subset_matching(mask: u32, adj: &[u32], best: &mut [u8]) -> u8 {
    if mask == 0 {
        return 0;
    }
    let idx = mask as usize;
    if best[idx] != u8::MAX {
        return best[idx];
    }
    let v = mask.trailing_zeros() as usize;
    let without = subset_matching(mask & !(1 << v), adj, best);
    let mut result = without;
    let mut candidates = adj[v] & mask;
    while candidates != 0 {
        let u = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        let taken = 1 + subset_matching(mask & !(1 << v) & !(1 << u), adj, best);
        result = result.max(taken);
    }
    best[idx] = result;
    result
}

fn is_matching(g: &Multigraph, edge_ids: &[EdgeId]) -> bool {
    let mut hit = vec![false; g.node_count()];
    for &id in edge_ids {
        let e = match g.edge(id) {
            Some(e) => e,
            None => return false,
        };
        if hit[e.u] || hit[e.v] {
            return false;
        }
        hit[e.u] = true;
        hit[e.v] = true;
    }
    true
}

/// Edmonds' blossom search on the underlying simple adjacency. Returns the
/// mate of each node.
fn blossom_mate(g: &Multigraph) -> Vec<Option<NodeId>> {
    let n = g.node_count();
    let mut adj = vec![Vec::new(); n];
    for e in g.underlying_simple().edges() {
        adj[e.u].push(e.v);
        adj[e.v].push(e.u);
    }
    for nb in &mut adj {
        nb.sort_unstable();
    }

    const NONE: usize = usize::MAX;
    let mut mate = vec![NONE; n];
    let mut parent = vec![NONE; n];
    let mut base: Vec<usize> = (0..n).collect();

    fn lca(
        mut v: usize,
        mut w: usize,
        parent: &[usize],
        base: &[usize],
        mate: &[usize],
    ) -> usize {
        const NONE: usize = usize::MAX;
        let mut on_path = vec![false; parent.len()];
        loop {
            v = base[v];
            on_path[v] = true;
            if mate[v] == NONE {
                break;
            }
            v = parent[mate[v]];
        }
        loop {
            w = base[w];
            if on_path[w] {
                return w;
            }
            w = parent[mate[w]];
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn mark_path(
        mut v: usize,
        b: usize,
        mut child: usize,
        parent: &mut [usize],
        base: &[usize],
        mate: &[usize],
        in_blossom: &mut [bool],
    ) {
        while base[v] != b {
            in_blossom[base[v]] = true;
            in_blossom[base[mate[v]]] = true;
            parent[v] = child;
            child = mate[v];
            v = parent[mate[v]];
        }
    }

    fn find_augmenting_path(
        start: usize,
        adj: &[Vec<usize>],
        mate: &[usize],
        parent: &mut [usize],
        base: &mut [usize],
    ) -> Option<usize> {
        const NONE: usize = usize::MAX;
        let n = adj.len();
        for i in 0..n {
            parent[i] = NONE;
            base[i] = i;
        }
        let mut used = vec![false; n];
        used[start] = true;
        let mut queue = VecDeque::new();
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            for &to in &adj[v] {
                if base[v] == base[to] || mate[v] == to {
                    continue;
                }
                if to == start || (mate[to] != NONE && parent[mate[to]] != NONE) {
                    // Found a blossom; shrink it to its base.
                    let b = lca(v, to, parent, base, mate);
                    let mut in_blossom = vec![false; n];
                    mark_path(v, b, to, parent, base, mate, &mut in_blossom);
                    mark_path(to, b, v, parent, base, mate, &mut in_blossom);
                    for i in 0..n {
                        if in_blossom[base[i]] {
                            base[i] = b;
                            if !used[i] {
                                used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if parent[to] == NONE {
                    parent[to] = v;
                    if mate[to] == NONE {
                        return Some(to);
                    }
                    used[mate[to]] = true;
                    queue.push_back(mate[to]);
                }
            }
        }
        None
    }

    for v in 0..n {
        if mate[v] == NONE {
            if let Some(finish) = find_augmenting_path(v, &adj, &mate, &mut parent, &mut base) {
                // Alternate matched/unmatched edges back along the path.
                let mut cur = finish;
                while cur != NONE {
                    let prev = parent[cur];
                    let next = mate[prev];
                    mate[cur] = prev;
                    mate[prev] = cur;
                    cur = next;
                }
            }
        }
    }

    mate.into_iter()
        .map(|m| if m == NONE { None } else { Some(m) })
        .collect()
}
