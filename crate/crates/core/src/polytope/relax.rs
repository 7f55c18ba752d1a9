//! Constraint generators for the linear relaxations of the stable set
//! polytope: edge constraints, maximal clique constraints, and rank
//! constraints over all induced subgraphs.

use std::collections::BTreeSet;

use crate::error::Result;
use crate::multigraph::{Multigraph, NodeId};

use super::{
    bit_adjacency, check_limit, max_stable, Inequality, DEFAULT_ALPHA_NODE_LIMIT,
    DEFAULT_RSTAB_NODE_LIMIT,
};

fn unit_inequality(n: usize, support: &[NodeId], rhs: i64) -> Inequality {
    let mut coeffs = vec![0i64; n];
    for &v in support {
        coeffs[v] = 1;
    }
    Inequality::from_i64(&coeffs, rhs)
}

fn nonnegativity(n: usize, v: NodeId) -> Inequality {
    let mut coeffs = vec![0i64; n];
    coeffs[v] = -1;
    Inequality::from_i64(&coeffs, 0)
}

/// Nonnegativity plus one constraint `x_u + x_v <= 1` per adjacent pair
/// (parallel copies give the same constraint once).
pub fn estab_constraints(g: &Multigraph) -> Vec<Inequality> {
    let n = g.node_count();
    let mut out: BTreeSet<Inequality> = (0..n).map(|v| nonnegativity(n, v)).collect();
    for e in g.edges() {
        let (u, v) = e.pair();
        out.insert(unit_inequality(n, &[u, v], 1));
    }
    out.into_iter().collect()
}

/// One constraint `x(Q) <= 1` per maximal clique; dominated cliques never
/// appear.
pub fn qstab_constraints(g: &Multigraph) -> Result<Vec<Inequality>> {
    check_limit(
        "maximal-clique enumeration node count",
        g.node_count(),
        DEFAULT_ALPHA_NODE_LIMIT,
    )?;
    let n = g.node_count();
    let adj = bit_adjacency(g);
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut cliques = Vec::new();
    bron_kerbosch(0, full, 0, &adj, &mut cliques);
    let mut out = BTreeSet::new();
    for mask in cliques {
        let support: Vec<NodeId> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        out.insert(unit_inequality(n, &support, 1));
    }
    Ok(out.into_iter().collect())
}

fn bron_kerbosch(r: u64, mut p: u64, mut x: u64, adj: &[u64], out: &mut Vec<u64>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    // Pivot on a node covering the most of p.
    let pivot = {
        let mut best = usize::MAX;
        let mut best_cover = u32::MAX;
        let mut mask = p | x;
        while mask != 0 {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            let cover = (p & !adj[v]).count_ones();
            if cover < best_cover {
                best_cover = cover;
                best = v;
            }
        }
        best
    };
    let mut candidates = p & !adj[pivot];
    while candidates != 0 {
        let v = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        bron_kerbosch(r | (1 << v), p & adj[v], x & adj[v], adj, out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

/// One rank constraint `x(S) <= alpha(S)` per nonempty induced subgraph,
/// duplicates removed by canonical normalization.
pub fn rstab_constraints(g: &Multigraph) -> Result<Vec<Inequality>> {
    rstab_constraints_with_limit(g, DEFAULT_RSTAB_NODE_LIMIT)
}

pub fn rstab_constraints_with_limit(
    g: &Multigraph,
    max_nodes: usize,
) -> Result<Vec<Inequality>> {
    check_limit("rank-constraint node count", g.node_count(), max_nodes)?;
    let n = g.node_count();
    let adj = bit_adjacency(g);
    let mut out = BTreeSet::new();
    for mask in 1u64..(1u64 << n) {
        let support: Vec<NodeId> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        let a = max_stable(mask, &adj) as i64;
        out.insert(unit_inequality(n, &support, a));
    }
    Ok(out.into_iter().collect())
}
