//! Multigraph isomorphism by iterated neighborhood refinement plus
//! backtracking. Exact at desk scale; multiplicities are part of the match.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

use super::{Multigraph, NodeId};

pub const DEFAULT_ISO_NODE_LIMIT: usize = 64;

/// True iff there is a node bijection preserving edge multiplicities.
pub fn are_isomorphic(g1: &Multigraph, g2: &Multigraph) -> Result<bool> {
    are_isomorphic_with_limit(g1, g2, DEFAULT_ISO_NODE_LIMIT)
}

pub fn are_isomorphic_with_limit(
    g1: &Multigraph,
    g2: &Multigraph,
    max_nodes: usize,
) -> Result<bool> {
    let n = g1.node_count().max(g2.node_count());
    if n > max_nodes {
        return Err(Error::ResourceLimit {
            what: "isomorphism node count",
            value: n,
            limit: max_nodes,
        });
    }
    if g1.node_count() != g2.node_count() || g1.edge_count() != g2.edge_count() {
        return Ok(false);
    }
    let n = g1.node_count();
    if n == 0 {
        return Ok(true);
    }

    let m1 = multiplicity_matrix(g1);
    let m2 = multiplicity_matrix(g2);
    let (c1, c2) = match refine(&m1, &m2, n) {
        Some(colors) => colors,
        None => return Ok(false),
    };

    // Map g1 nodes in order of ascending color-class size; candidates in g2
    // are the unused nodes of the same color that agree on multiplicities
    // with everything mapped so far.
    let mut class_size: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in &c1 {
        *class_size.entry(c).or_insert(0) += 1;
    }
    let mut order: Vec<NodeId> = (0..n).collect();
    order.sort_by_key(|&v| (class_size[&c1[v]], c1[v], v));

    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(extend(&order, 0, &m1, &m2, &c1, &c2, &mut image, &mut used))
}

fn multiplicity_matrix(g: &Multigraph) -> Vec<Vec<usize>> {
    let n = g.node_count();
    let mut m = vec![vec![0usize; n]; n];
    for e in g.edges() {
        m[e.u][e.v] += 1;
        m[e.v][e.u] += 1;
    }
    m
}

/// Iterated refinement with one signature table covering both graphs, so
/// colors are exact invariants (no hashing). Returns `None` when the color
/// histograms of the two graphs disagree.
fn refine(m1: &[Vec<usize>], m2: &[Vec<usize>], n: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut c1 = vec![0usize; n];
    let mut c2 = vec![0usize; n];
    let mut colors = 1usize;
    loop {
        let sig = |m: &[Vec<usize>], c: &[usize], v: usize| -> (usize, Vec<(usize, usize)>) {
            let mut nb: Vec<(usize, usize)> = (0..n)
                .filter(|&w| m[v][w] > 0)
                .map(|w| (c[w], m[v][w]))
                .collect();
            nb.sort_unstable();
            (c[v], nb)
        };
        let mut table: BTreeMap<(usize, Vec<(usize, usize)>), usize> = BTreeMap::new();
        let sigs1: Vec<_> = (0..n).map(|v| sig(m1, &c1, v)).collect();
        let sigs2: Vec<_> = (0..n).map(|v| sig(m2, &c2, v)).collect();
        for s in sigs1.iter().chain(sigs2.iter()) {
            let next = table.len();
            table.entry(s.clone()).or_insert(next);
        }
        let new1: Vec<usize> = sigs1.iter().map(|s| table[s]).collect();
        let new2: Vec<usize> = sigs2.iter().map(|s| table[s]).collect();

        let mut h1 = vec![0usize; table.len()];
        let mut h2 = vec![0usize; table.len()];
        for &c in &new1 {
            h1[c] += 1;
        }
        for &c in &new2 {
            h2[c] += 1;
        }
        if h1 != h2 {
            return None;
        }
        if table.len() == colors {
            return Some((new1, new2));
        }
        colors = table.len();
        c1 = new1;
        c2 = new2;
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    order: &[NodeId],
    depth: usize,
    m1: &[Vec<usize>],
    m2: &[Vec<usize>],
    c1: &[usize],
    c2: &[usize],
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    let n = used.len();
    'cand: for w in 0..n {
        if used[w] || c2[w] != c1[v] {
            continue;
        }
        for &p in &order[..depth] {
            if m1[v][p] != m2[w][image[p]] {
                continue 'cand;
            }
        }
        image[v] = w;
        used[w] = true;
        if extend(order, depth + 1, m1, m2, c1, c2, image, used) {
            return true;
        }
        used[w] = false;
        image[v] = usize::MAX;
    }
    false
}
