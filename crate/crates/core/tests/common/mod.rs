//! Shared helpers for the integration suites: independent oracles (exact
//! affine rank, brute-force bipartiteness), seeded graph generators, and the
//! structural witness checker.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use linestab::classify::{ForbiddenWitness, HypomatchKind};
use linestab::matching::is_hypomatchable;
use linestab::multigraph::Multigraph;
use linestab::polytope::Inequality;

pub fn complete_graph(n: usize) -> Multigraph {
    let mut g = Multigraph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// Seeded Erdos–Renyi-style simple graph with at least one edge.
pub fn random_simple_graph(rng: &mut StdRng, max_nodes: usize) -> Multigraph {
    loop {
        let n = rng.gen_range(2..=max_nodes);
        let p = rng.gen_range(0.2..0.8);
        let mut g = Multigraph::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        if g.edge_count() > 0 {
            return g;
        }
    }
}

/// Seeded multigraph with multiplicity at most 2.
pub fn random_multigraph(rng: &mut StdRng, max_nodes: usize, max_edges: usize) -> Multigraph {
    let n = rng.gen_range(1..=max_nodes);
    let mut g = Multigraph::new(n);
    if n < 2 {
        return g;
    }
    let m = rng.gen_range(0..=max_edges);
    for _ in 0..m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && g.multiplicity(u, v) < 2 {
            let _ = g.add_edge(u, v);
        }
    }
    g
}

pub fn seeded_rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

// --- exact affine rank, independent of the library's elimination ---------

fn rational_rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        for r in 0..rows.len() {
            if r == rank || rows[r][col].is_zero() {
                continue;
            }
            let a = rows[r][col].clone();
            let b = rows[rank][col].clone();
            for c in 0..cols {
                let val = &rows[r][c] * &b - &rows[rank][c] * &a;
                rows[r][c] = val;
            }
            let mut g = BigInt::zero();
            for c in 0..cols {
                g = g.gcd(&rows[r][c]);
            }
            if !g.is_zero() && !g.is_one() {
                for c in 0..cols {
                    rows[r][c] = &rows[r][c] / &g;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Number of affinely independent vectors among the 0/1 incidence vectors of
/// `sets` in dimension `dim`: rank of the homogenized system.
pub fn affine_rank_of_sets(sets: &[Vec<usize>], dim: usize) -> usize {
    let rows: Vec<Vec<BigInt>> = sets
        .iter()
        .map(|s| {
            let mut row = vec![BigInt::zero(); dim + 1];
            row[0] = BigInt::one();
            for &i in s {
                row[i + 1] = BigInt::one();
            }
            row
        })
        .collect();
    rational_rank(rows)
}

/// Facet-oracle round trip: `f` is valid for every stable set and tight at
/// `dim` affinely independent stable-set vectors.
pub fn facet_is_valid_and_tight(f: &Inequality, stable_sets: &[Vec<usize>], dim: usize) -> bool {
    let mut tight = Vec::new();
    for s in stable_sets {
        if !f.satisfied_by_set(s) {
            return false;
        }
        if f.tight_for_set(s) {
            tight.push(s.clone());
        }
    }
    affine_rank_of_sets(&tight, dim) == dim
}

/// Brute-force bipartiteness: tries all 2-colorings.
pub fn bipartite_by_brute_force(g: &Multigraph) -> bool {
    let n = g.node_count();
    assert!(n <= 16);
    (0..(1u32 << n)).any(|mask| {
        g.edges()
            .iter()
            .all(|e| (mask >> e.u) & 1 != (mask >> e.v) & 1)
    })
}

/// Structural soundness of a forbidden witness inside `h`: a literal odd
/// hole of length at least five plus exactly one double edge / chord / long
/// ear on non-adjacent hole nodes, minimal in the sense that removing any
/// single edge leaves an odd hole or kills hypomatchability.
pub fn check_forbidden_witness(h: &Multigraph, w: &ForbiddenWitness) -> Result<(), String> {
    let sub = h
        .partial_subgraph(&w.nodes, &w.edge_ids)
        .map_err(|e| format!("witness subgraph: {e}"))?;
    let to_sub = |host: usize| -> Result<usize, String> {
        sub.node_map
            .iter()
            .position(|&x| x == host)
            .ok_or_else(|| format!("node {host} missing from witness node set"))
    };

    let hole = &w.hole;
    if hole.len() < 5 || hole.len() % 2 == 0 {
        return Err(format!("hole length {} is not odd >= 5", hole.len()));
    }
    let mut sorted = hole.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != hole.len() {
        return Err("hole repeats a node".into());
    }
    for i in 0..hole.len() {
        let (u, v) = (to_sub(hole[i])?, to_sub(hole[(i + 1) % hole.len()])?);
        if !sub.graph.has_edge(u, v) {
            return Err(format!("hole pair {}-{} is not an edge", hole[i], hole[(i + 1) % hole.len()]));
        }
    }
    let hole_adjacent = |a: usize, b: usize| -> bool {
        let i = hole.iter().position(|&x| x == a).unwrap();
        let j = hole.iter().position(|&x| x == b).unwrap();
        let d = i.abs_diff(j);
        d == 1 || d == hole.len() - 1
    };

    let (a, b) = (w.ear_path[0], *w.ear_path.last().unwrap());
    if a == b {
        return Err("ear endpoints coincide".into());
    }
    if !hole.contains(&a) || !hole.contains(&b) {
        return Err("ear endpoints are not hole nodes".into());
    }
    if w.ear_length() % 2 == 0 {
        return Err(format!("ear length {} is even", w.ear_length()));
    }
    match w.kind {
        HypomatchKind::DoubleEdge => {
            if w.ear_length() != 1 || !hole_adjacent(a, b) {
                return Err("double-edge witness must attach one edge at adjacent hole nodes".into());
            }
            if sub.graph.multiplicity(to_sub(a)?, to_sub(b)?) != 2 {
                return Err("double-edge witness lacks the parallel pair".into());
            }
            if w.nodes.len() != hole.len() {
                return Err("double-edge witness has extra nodes".into());
            }
        }
        HypomatchKind::Chord => {
            if w.ear_length() != 1 || hole_adjacent(a, b) {
                return Err("chord witness must attach one edge at non-adjacent hole nodes".into());
            }
            if !sub.graph.has_edge(to_sub(a)?, to_sub(b)?) {
                return Err("chord witness lacks the chord".into());
            }
            if w.nodes.len() != hole.len() {
                return Err("chord witness has extra nodes".into());
            }
        }
        HypomatchKind::LongEarNonAdjacent => {
            if w.ear_length() < 3 || hole_adjacent(a, b) {
                return Err("long-ear witness needs length >= 3 at non-adjacent hole nodes".into());
            }
            for x in &w.ear_path[1..w.ear_path.len() - 1] {
                if hole.contains(x) {
                    return Err("long-ear internal node lies on the hole".into());
                }
            }
            if w.nodes.len() != hole.len() + w.ear_length() - 1 {
                return Err("long-ear witness node count is off".into());
            }
        }
    }
    if w.edge_ids.len() != hole.len() + w.ear_length() {
        return Err("witness edge count is off".into());
    }

    // Minimality: deleting any single edge leaves an odd hole or a
    // non-hypomatchable graph.
    for e in sub.graph.edges().iter().map(|e| e.id).collect::<Vec<_>>() {
        let mut reduced = sub.graph.clone();
        reduced.remove_edge(e).unwrap();
        if !(reduced.is_odd_simple_cycle() || !is_hypomatchable(&reduced)) {
            return Err(format!("witness stays non-hole hypomatchable after deleting edge {e}"));
        }
    }
    Ok(())
}
