//! Generators for the named graph families and related predicates.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linegraph::line_graph;
use crate::multigraph::Multigraph;

/// Extra structure attached to an odd hole.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HoleExtra {
    /// One parallel copy of a hole edge.
    Double,
    /// One chord; `span` is the hole distance between its endpoints along
    /// the node numbering (2..=2k-1 keeps the endpoints non-adjacent).
    Chord { span: usize },
    /// One odd path of `length >= 3` edges attached at hole distance `span`.
    Path { length: usize, span: usize },
}

/// Everything the `generate` front end can build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilySpec {
    OddHole { k: usize },
    OddHolePlus { extra: HoleExtra, k: usize },
    Antiweb { n: usize, k: usize },
    Web { n: usize, k: usize },
    OddWheel { k: usize },
    Glt,
    Gemn,
    Claw,
}

/// A generated graph plus a degeneracy warning where applicable (antiwebs
/// with an empty edge set).
#[derive(Debug, Clone)]
pub struct FamilyGraph {
    pub graph: Multigraph,
    pub warning: Option<String>,
}

pub fn build_family(spec: &FamilySpec) -> Result<FamilyGraph> {
    let plain = |graph: Multigraph| FamilyGraph {
        graph,
        warning: None,
    };
    match *spec {
        FamilySpec::OddHole { k } => Ok(plain(odd_hole(k)?)),
        FamilySpec::OddHolePlus { extra, k } => Ok(plain(odd_hole_plus(extra, k)?)),
        FamilySpec::Antiweb { n, k } => antiweb(n, k),
        FamilySpec::Web { n, k } => web(n, k),
        FamilySpec::OddWheel { k } => Ok(plain(odd_wheel(k)?)),
        FamilySpec::Glt => Ok(plain(glt())),
        FamilySpec::Gemn => Ok(plain(gemn())),
        FamilySpec::Claw => Ok(plain(claw())),
    }
}

/// Chordless odd cycle on `2k+1` nodes in natural order, `k >= 2`.
pub fn odd_hole(k: usize) -> Result<Multigraph> {
    if k < 2 {
        return Err(Error::InvalidInput(format!(
            "odd holes need k >= 2 (length at least five), got k = {k}"
        )));
    }
    Ok(Multigraph::cycle(2 * k + 1))
}

/// Odd hole plus one double edge, one chord, or one attached odd path.
pub fn odd_hole_plus(extra: HoleExtra, k: usize) -> Result<Multigraph> {
    let mut g = odd_hole(k)?;
    let len = 2 * k + 1;
    match extra {
        HoleExtra::Double => {
            g.add_edge(0, 1)?;
        }
        HoleExtra::Chord { span } => {
            check_span(span, k)?;
            g.add_edge(0, span)?;
        }
        HoleExtra::Path { length, span } => {
            check_span(span, k)?;
            if length < 3 || length % 2 == 0 {
                return Err(Error::InvalidInput(format!(
                    "the attached path must be one odd path of length >= 3, got {length}"
                )));
            }
            let mut prev = 0;
            for _ in 0..length - 1 {
                let next = g.add_node();
                g.add_edge(prev, next)?;
                prev = next;
            }
            g.add_edge(prev, span)?;
            debug_assert_eq!(g.node_count(), len + length - 1);
        }
    }
    Ok(g)
}

fn check_span(span: usize, k: usize) -> Result<()> {
    if span < 2 || span > 2 * k - 1 {
        return Err(Error::InvalidInput(format!(
            "attachment span {span} out of range 2..={} (endpoints must be non-adjacent hole nodes)",
            2 * k - 1
        )));
    }
    Ok(())
}

/// Graph on nodes `0..n` with edges `ij` iff `k <= |i-j| <= n-k`. Parameters
/// with `2k > n` give an empty edge set; the result is flagged, not refused.
pub fn antiweb(n: usize, k: usize) -> Result<FamilyGraph> {
    if n < 2 || k < 1 {
        return Err(Error::InvalidInput(format!(
            "antiwebs need n >= 2 and k >= 1, got n = {n}, k = {k}"
        )));
    }
    let mut g = Multigraph::new(n);
    for i in 0..n {
        for j in (i + 1)..n {
            let d = j - i;
            if d >= k && d <= n - k {
                g.add_edge(i, j)?;
            }
        }
    }
    let warning = (2 * k > n).then(|| {
        format!("antiweb parameters n = {n}, k = {k} are degenerate (2k > n): empty edge set")
    });
    Ok(FamilyGraph { graph: g, warning })
}

/// Complement of the antiweb with the same parameters.
pub fn web(n: usize, k: usize) -> Result<FamilyGraph> {
    let aw = antiweb(n, k)?;
    Ok(FamilyGraph {
        graph: aw.graph.complement(),
        warning: aw.warning,
    })
}

/// True iff `k+1` and `n` are relatively prime.
pub fn is_prime_antiweb(n: usize, k: usize) -> bool {
    (k + 1).gcd(&n) == 1
}

/// True iff removing any closed neighborhood leaves a bipartite graph.
pub fn is_near_bipartite(g: &Multigraph) -> bool {
    (0..g.node_count()).all(|v| {
        let mut closed: Vec<usize> = g.neighbors(v).into_iter().collect();
        closed.push(v);
        closed.sort_unstable();
        let mut rest = g.clone();
        for &w in closed.iter().rev() {
            rest = rest.remove_node(w).expect("node is valid");
        }
        rest.is_bipartite()
    })
}

/// Hub node `2k+1` joined to every node of the odd hole `0..2k+1`.
pub fn odd_wheel(k: usize) -> Result<Multigraph> {
    let mut g = odd_hole(k)?;
    let hub = g.add_node();
    for v in 0..2 * k + 1 {
        g.add_edge(hub, v)?;
    }
    Ok(g)
}

/// Line graph of the 5-hole with one doubled edge; 6 nodes.
pub fn glt() -> Multigraph {
    line_graph(&odd_hole_plus(HoleExtra::Double, 2).expect("valid parameters"))
        .expect("has edges")
        .graph
}

/// Line graph of the 5-hole with one chord; 6 nodes.
pub fn gemn() -> Multigraph {
    line_graph(&odd_hole_plus(HoleExtra::Chord { span: 2 }, 2).expect("valid parameters"))
        .expect("has edges")
        .graph
}

/// Star with three leaves.
pub fn claw() -> Multigraph {
    Multigraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).expect("valid edges")
}
