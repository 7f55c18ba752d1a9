//! Exact desk-scale oracle for stable set polytopes.
//!
//! Stable sets are enumerated outright, the facets of their convex hull are
//! computed by double description over arbitrary-precision integers, and each
//! facet is classified against the known constraint catalogue (nonnegativity,
//! cliques, odd-hole ranks, hypomatchable line-graph ranks, full-support
//! ranks, joined antiweb constraints). No floating point anywhere.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::multigraph::{Multigraph, NodeId};

mod classes;
mod hull;
mod linalg;
mod relax;

pub use classes::{
    classify_facet, is_h_perfect, is_h_perfect_with_limit, is_joined_a_perfect,
    is_joined_a_perfect_with_limit, verify_edmonds_description,
    verify_edmonds_description_with_limit, AntiwebPart, EdmondsEntry, EdmondsReport, FacetClass,
    FacetReportRow, RootedLineGraph,
};
pub use relax::{estab_constraints, qstab_constraints, rstab_constraints};

pub const DEFAULT_ALPHA_NODE_LIMIT: usize = 24;
pub const DEFAULT_HULL_NODE_LIMIT: usize = 14;
pub const DEFAULT_RSTAB_NODE_LIMIT: usize = 16;

/// An integer inequality `a · x <= b`, normalized so the gcd of all entries
/// (coefficients and right-hand side) is one. The normalized vector is a
/// canonical representative: two inequalities describe the same halfspace
/// iff they compare equal componentwise.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Inequality {
    coeffs: Vec<BigInt>,
    rhs: BigInt,
}

impl Inequality {
    pub fn new(coeffs: Vec<BigInt>, rhs: BigInt) -> Self {
        let mut ineq = Inequality { coeffs, rhs };
        ineq.normalize();
        ineq
    }

    pub fn from_i64(coeffs: &[i64], rhs: i64) -> Self {
        Inequality::new(
            coeffs.iter().map(|&c| BigInt::from(c)).collect(),
            BigInt::from(rhs),
        )
    }

    fn normalize(&mut self) {
        let mut g = self.rhs.abs();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        if !g.is_zero() && !g.is_one() {
            for c in &mut self.coeffs {
                *c /= &g;
            }
            self.rhs /= &g;
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn rhs(&self) -> &BigInt {
        &self.rhs
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    /// Nodes with a nonzero coefficient, ascending.
    pub fn support(&self) -> Vec<NodeId> {
        (0..self.coeffs.len())
            .filter(|&i| !self.coeffs[i].is_zero())
            .collect()
    }

    /// `Some(i)` iff this is `-x_i <= 0`.
    pub fn as_nonnegativity(&self) -> Option<NodeId> {
        if !self.rhs.is_zero() {
            return None;
        }
        let minus_one = BigInt::from(-1);
        let mut found = None;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if *c == minus_one && found.is_none() {
                found = Some(i);
            } else {
                return None;
            }
        }
        found
    }

    /// True iff every nonzero coefficient equals one.
    pub fn has_unit_coefficients(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero() || c.is_one())
    }

    pub fn value_for_set(&self, set: &[NodeId]) -> BigInt {
        set.iter().map(|&i| self.coeffs[i].clone()).sum()
    }

    pub fn satisfied_by_set(&self, set: &[NodeId]) -> bool {
        self.value_for_set(set) <= self.rhs
    }

    pub fn tight_for_set(&self, set: &[NodeId]) -> bool {
        self.value_for_set(set) == self.rhs
    }
}

impl fmt::Display for Inequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let minus_one = BigInt::from(-1);
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_one() {
                    write!(f, "x{i}")?;
                } else if *c == minus_one {
                    write!(f, "-x{i}")?;
                } else {
                    write!(f, "{c} x{i}")?;
                }
                first = false;
            } else if c.is_positive() {
                if c.is_one() {
                    write!(f, " + x{i}")?;
                } else {
                    write!(f, " + {c} x{i}")?;
                }
            } else if *c == minus_one {
                write!(f, " - x{i}")?;
            } else {
                write!(f, " - {} x{i}", c.abs())?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " <= {}", self.rhs)
    }
}

/// All stable sets of a host graph, each exactly once (the empty set
/// included), in ascending lexicographic node order.
#[derive(Debug, Clone)]
pub struct StableSetFamily {
    pub sets: Vec<Vec<NodeId>>,
}

impl StableSetFamily {
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }
}

/// Distinct-neighbor adjacency as bitmasks; multiplicities are irrelevant to
/// stable sets.
pub(crate) fn bit_adjacency(g: &Multigraph) -> Vec<u64> {
    assert!(g.node_count() <= 64);
    let mut adj = vec![0u64; g.node_count()];
    for e in g.edges() {
        adj[e.u] |= 1 << e.v;
        adj[e.v] |= 1 << e.u;
    }
    adj
}

fn check_limit(what: &'static str, value: usize, limit: usize) -> Result<()> {
    if value > limit {
        Err(Error::ResourceLimit { what, value, limit })
    } else {
        Ok(())
    }
}

/// Exact stability number.
pub fn alpha(g: &Multigraph) -> Result<usize> {
    alpha_with_limit(g, DEFAULT_ALPHA_NODE_LIMIT)
}

pub fn alpha_with_limit(g: &Multigraph, max_nodes: usize) -> Result<usize> {
    check_limit("stability-number node count", g.node_count(), max_nodes)?;
    let adj = bit_adjacency(g);
    let full = if g.node_count() == 64 {
        u64::MAX
    } else {
        (1u64 << g.node_count()) - 1
    };
    Ok(max_stable(full, &adj))
}

/// Max stable set over the candidate mask, branching on a max-degree node.
pub(crate) fn max_stable(candidates: u64, adj: &[u64]) -> usize {
    if candidates == 0 {
        return 0;
    }
    // Nodes of candidate-degree <= 1 can be taken greedily.
    let mut pick = usize::MAX;
    let mut pick_degree = 0;
    let mut mask = candidates;
    while mask != 0 {
        let v = mask.trailing_zeros() as usize;
        mask &= mask - 1;
        let d = (adj[v] & candidates).count_ones() as usize;
        if d <= 1 {
            return 1 + max_stable(candidates & !adj[v] & !(1 << v), adj);
        }
        if pick == usize::MAX || d > pick_degree {
            pick = v;
            pick_degree = d;
        }
    }
    let with = 1 + max_stable(candidates & !adj[pick] & !(1 << pick), adj);
    let without = max_stable(candidates & !(1 << pick), adj);
    with.max(without)
}

/// Enumerates every stable set exactly once.
pub fn enumerate_stable_sets(g: &Multigraph) -> Result<StableSetFamily> {
    enumerate_stable_sets_with_limit(g, DEFAULT_ALPHA_NODE_LIMIT)
}

pub fn enumerate_stable_sets_with_limit(
    g: &Multigraph,
    max_nodes: usize,
) -> Result<StableSetFamily> {
    check_limit(
        "stable-set enumeration node count",
        g.node_count(),
        max_nodes,
    )?;
    let adj = bit_adjacency(g);
    let n = g.node_count();
    let mut sets = Vec::new();
    let mut current: Vec<NodeId> = Vec::new();
    extend_stable(0, 0u64, n, &adj, &mut current, &mut sets);
    Ok(StableSetFamily { sets })
}

fn extend_stable(
    start: usize,
    blocked: u64,
    n: usize,
    adj: &[u64],
    current: &mut Vec<NodeId>,
    sets: &mut Vec<Vec<NodeId>>,
) {
    sets.push(current.clone());
    for v in start..n {
        if blocked & (1 << v) == 0 {
            current.push(v);
            extend_stable(v + 1, blocked | adj[v] | (1 << v), n, adj, current, sets);
            current.pop();
        }
    }
}

/// The complete irredundant facet list of the stable set polytope, in
/// canonical order. The polytope is full-dimensional (it contains the origin
/// and all unit vectors), which is asserted on the enumerated family.
pub fn stab_facets(g: &Multigraph) -> Result<Vec<Inequality>> {
    stab_facets_with_limit(g, DEFAULT_HULL_NODE_LIMIT)
}

pub fn stab_facets_with_limit(g: &Multigraph, max_nodes: usize) -> Result<Vec<Inequality>> {
    check_limit("facet-enumeration node count", g.node_count(), max_nodes)?;
    if g.node_count() == 0 {
        return Err(Error::InvalidInput(
            "facet enumeration needs at least one node".into(),
        ));
    }
    let family = enumerate_stable_sets_with_limit(g, max_nodes)?;
    let n = g.node_count();

    // Full dimension: the empty set and every singleton must be present.
    assert!(family.sets.iter().any(|s| s.is_empty()));
    for v in 0..n {
        assert!(
            family.sets.iter().any(|s| s.as_slice() == [v]),
            "singleton {v} missing from the stable set family"
        );
    }

    let mut facets = hull::facets_of_stable_sets(n, &family.sets);

    for facet in &facets {
        for set in &family.sets {
            debug_assert!(facet.satisfied_by_set(set), "facet {facet} cuts off {set:?}");
        }
    }

    facets.sort_by(|a, b| match a.coeffs.cmp(&b.coeffs) {
        Ordering::Equal => a.rhs.cmp(&b.rhs),
        other => other,
    });
    Ok(facets)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Multigraph {
        let mut g = Multigraph::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    #[test]
    fn alpha_basics() {
        assert_eq!(alpha(&Multigraph::cycle(9)).unwrap(), 4);
        assert_eq!(alpha(&k(5)).unwrap(), 1);
        assert_eq!(alpha(&Multigraph::new(6)).unwrap(), 6);
    }

    #[test]
    fn alpha_of_line_graph_is_matching_number() {
        let mut c5c = Multigraph::cycle(5);
        c5c.add_edge(0, 2).unwrap();
        let lg = crate::linegraph::line_graph(&c5c).unwrap();
        assert_eq!(alpha(&lg.graph).unwrap(), 2);
    }

    #[test]
    fn stable_set_counts() {
        assert_eq!(enumerate_stable_sets(&k(3)).unwrap().len(), 4);
        assert_eq!(enumerate_stable_sets(&Multigraph::new(2)).unwrap().len(), 4);
        assert_eq!(
            enumerate_stable_sets(&Multigraph::cycle(5)).unwrap().len(),
            11
        );
    }

    #[test]
    fn stable_sets_are_stable_and_unique() {
        let mut g = Multigraph::cycle(6);
        g.add_edge(0, 3).unwrap();
        let family = enumerate_stable_sets(&g).unwrap();
        for set in &family.sets {
            for (i, &u) in set.iter().enumerate() {
                for &v in &set[i + 1..] {
                    assert!(!g.has_edge(u, v));
                }
            }
        }
        let mut dedup = family.sets.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), family.sets.len());
    }

    #[test]
    fn inequality_normalization_is_canonical() {
        let a = Inequality::from_i64(&[2, 2, 0], 2);
        let b = Inequality::from_i64(&[1, 1, 0], 1);
        assert_eq!(a, b);
        let nonneg = Inequality::from_i64(&[0, -3, 0], 0);
        assert_eq!(nonneg.as_nonnegativity(), Some(1));
        assert_eq!(
            format!("{}", Inequality::from_i64(&[1, 0, 2], 2)),
            "x0 + 2 x2 <= 2"
        );
        assert_eq!(format!("{}", Inequality::from_i64(&[0, -1, 0], 0)), "-x1 <= 0");
    }

    #[test]
    fn facets_of_triangle() {
        let facets = stab_facets(&k(3)).unwrap();
        assert_eq!(facets.len(), 4);
        assert!(facets.contains(&Inequality::from_i64(&[1, 1, 1], 1)));
        assert_eq!(
            facets
                .iter()
                .filter(|f| f.as_nonnegativity().is_some())
                .count(),
            3
        );
    }

    #[test]
    fn facets_of_c5() {
        let facets = stab_facets(&Multigraph::cycle(5)).unwrap();
        assert_eq!(facets.len(), 11);
        assert!(facets.contains(&Inequality::from_i64(&[1, 1, 1, 1, 1], 2)));
        assert!(facets.contains(&Inequality::from_i64(&[1, 1, 0, 0, 0], 1)));
        assert_eq!(
            facets
                .iter()
                .filter(|f| f.as_nonnegativity().is_some())
                .count(),
            5
        );
    }

    #[test]
    fn facets_of_single_node() {
        let facets = stab_facets(&Multigraph::new(1)).unwrap();
        assert_eq!(facets.len(), 2);
        assert!(facets.contains(&Inequality::from_i64(&[-1], 0)));
        assert!(facets.contains(&Inequality::from_i64(&[1], 1)));
    }

    #[test]
    fn hull_limit_is_enforced() {
        let g = Multigraph::new(15);
        assert!(matches!(stab_facets(&g), Err(Error::ResourceLimit { .. })));
    }
}
