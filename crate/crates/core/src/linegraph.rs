//! Line-graph construction and node stretching / edge subdivision.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::multigraph::{EdgeId, Multigraph, NodeId};

/// The line graph of a root multigraph plus the edge-to-node bijection.
///
/// Line-graph node `i` represents the `i`-th edge of the root. Two line-graph
/// nodes are adjacent iff their root edges share an endpoint; parallel root
/// edges share both endpoints and still give exactly one line-graph edge, so
/// the line graph is always simple.
#[derive(Debug, Clone)]
pub struct LineGraphResult {
    pub graph: Multigraph,
    pub edge_to_node: BTreeMap<EdgeId, NodeId>,
}

/// A node together with a partition of its neighborhood into two nonempty
/// disjoint sides.
#[derive(Debug, Clone)]
pub struct StretchSpec {
    pub node: NodeId,
    pub side_a: Vec<NodeId>,
    pub side_b: Vec<NodeId>,
}

pub fn line_graph(h: &Multigraph) -> Result<LineGraphResult> {
    if h.edge_count() == 0 {
        return Err(Error::InvalidInput(
            "line graph of a graph with no edges is undefined".into(),
        ));
    }
    let edges = h.edges();
    let mut graph = Multigraph::new(edges.len());
    let mut edge_to_node = BTreeMap::new();
    for (i, e) in edges.iter().enumerate() {
        edge_to_node.insert(e.id, i);
    }
    for i in 0..edges.len() {
        for j in (i + 1)..edges.len() {
            let (a, b) = (&edges[i], &edges[j]);
            if a.touches(b.u) || a.touches(b.v) {
                graph.add_edge(i, j)?;
            }
        }
    }
    Ok(LineGraphResult { graph, edge_to_node })
}

/// Replaces `v` by the path `v1 - w - v2`, joining `v1` to all of `side_a`
/// and `v2` to all of `side_b`. `v1` reuses the id of `v`; `v2` and `w` are
/// the two new nodes, in that order. The node count grows by 2.
pub fn stretch_node(g: &Multigraph, spec: &StretchSpec) -> Result<Multigraph> {
    if !g.is_simple() {
        return Err(Error::InvalidInput(
            "stretching is defined on simple graphs".into(),
        ));
    }
    if spec.node >= g.node_count() {
        return Err(Error::UnknownNode {
            node: spec.node,
            node_count: g.node_count(),
        });
    }
    let neighborhood = g.neighbors(spec.node);
    let a: std::collections::BTreeSet<NodeId> = spec.side_a.iter().copied().collect();
    let b: std::collections::BTreeSet<NodeId> = spec.side_b.iter().copied().collect();
    if a.is_empty() || b.is_empty() {
        return Err(Error::InvalidInput(
            "both sides of a stretch partition must be nonempty".into(),
        ));
    }
    if !a.is_disjoint(&b) {
        return Err(Error::InvalidInput(
            "stretch partition sides must be disjoint".into(),
        ));
    }
    let union: std::collections::BTreeSet<NodeId> = a.union(&b).copied().collect();
    if union != neighborhood {
        return Err(Error::InvalidInput(
            "stretch partition must cover the neighborhood exactly".into(),
        ));
    }
    stretch_node_unchecked(g, spec.node, &spec.side_a, &spec.side_b)
}

/// The stretch construction itself, with possibly empty sides. Pendant edges
/// of a root graph give one empty incidence clique, and the subdivision
/// identity still holds there, so the canonical stretch goes through this.
fn stretch_node_unchecked(
    g: &Multigraph,
    v: NodeId,
    side_a: &[NodeId],
    side_b: &[NodeId],
) -> Result<Multigraph> {
    let n = g.node_count();
    let mut out = Multigraph::new(n + 2);
    let v1 = v;
    let v2 = n;
    let w = n + 1;
    for e in g.edges() {
        if !e.touches(v) {
            out.add_edge(e.u, e.v)?;
        }
    }
    out.add_edge(v1, w)?;
    out.add_edge(w, v2)?;
    for &x in side_a {
        out.add_edge(v1, x)?;
    }
    for &x in side_b {
        out.add_edge(v2, x)?;
    }
    Ok(out)
}

/// Stretches the line-graph node of `e` along the two incidence cliques of
/// `e`'s endpoints. Requires `e` to be a simple edge of `h` (no parallel
/// copy), since otherwise the two cliques do not partition the neighborhood.
///
/// Equals `line_graph(three_subdivision(h, e))` up to isomorphism.
pub fn canonical_stretch(h: &Multigraph, e: EdgeId) -> Result<Multigraph> {
    let edge = *h.edge(e).ok_or(Error::UnknownEdge(e))?;
    if h.multiplicity(edge.u, edge.v) > 1 {
        return Err(Error::InvalidInput(format!(
            "canonical partition undefined: edge {e} has a parallel copy"
        )));
    }
    let lg = line_graph(h)?;
    let v = lg.edge_to_node[&e];
    let mut side_a = Vec::new();
    let mut side_b = Vec::new();
    for other in h.edges() {
        if other.id == e {
            continue;
        }
        if other.touches(edge.u) {
            side_a.push(lg.edge_to_node[&other.id]);
        } else if other.touches(edge.v) {
            side_b.push(lg.edge_to_node[&other.id]);
        }
    }
    stretch_node_unchecked(&lg.graph, v, &side_a, &side_b)
}

/// Replaces edge `e = uv` by the path `u - a - b - v` with two new nodes.
pub fn three_subdivision(h: &Multigraph, e: EdgeId) -> Result<Multigraph> {
    let edge = *h.edge(e).ok_or(Error::UnknownEdge(e))?;
    let mut out = h.clone();
    out.remove_edge(e)?;
    let a = out.add_node();
    let b = out.add_node();
    out.add_edge(edge.u, a)?;
    out.add_edge(a, b)?;
    out.add_edge(b, edge.v)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::are_isomorphic;

    fn c5_plus_chord() -> Multigraph {
        let mut g = Multigraph::cycle(5);
        g.add_edge(0, 2).unwrap();
        g
    }

    fn c5_plus_double() -> Multigraph {
        let mut g = Multigraph::cycle(5);
        g.add_edge(0, 1).unwrap();
        g
    }

    /// 5-hole plus one node adjacent to four of the hole nodes; worked out
    /// by hand from the incidence structure of a 5-hole with a chord.
    fn gemn_by_hand() -> Multigraph {
        let mut g = Multigraph::cycle(5);
        let apex = g.add_node();
        for v in [0, 1, 2, 4] {
            g.add_edge(apex, v).unwrap();
        }
        g
    }

    /// 5-hole plus one node adjacent to three consecutive hole nodes.
    fn glt_by_hand() -> Multigraph {
        let mut g = Multigraph::cycle(5);
        let apex = g.add_node();
        for v in [4, 0, 1] {
            g.add_edge(apex, v).unwrap();
        }
        g
    }

    #[test]
    fn line_graph_of_cycle_is_cycle() {
        let lg = line_graph(&Multigraph::cycle(7)).unwrap();
        assert!(are_isomorphic(&lg.graph, &Multigraph::cycle(7)).unwrap());
    }

    #[test]
    fn line_graph_of_claw_is_triangle() {
        let claw = Multigraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let lg = line_graph(&claw).unwrap();
        assert!(are_isomorphic(&lg.graph, &Multigraph::cycle(3)).unwrap());
    }

    #[test]
    fn line_graph_of_hole_with_chord() {
        let lg = line_graph(&c5_plus_chord()).unwrap();
        assert!(are_isomorphic(&lg.graph, &gemn_by_hand()).unwrap());
    }

    #[test]
    fn line_graph_of_hole_with_double_edge() {
        let lg = line_graph(&c5_plus_double()).unwrap();
        assert!(lg.graph.is_simple());
        assert!(are_isomorphic(&lg.graph, &glt_by_hand()).unwrap());
    }

    #[test]
    fn line_graph_requires_an_edge() {
        assert!(line_graph(&Multigraph::new(3)).is_err());
    }

    #[test]
    fn stretch_triangle_node_gives_c5() {
        let k3 = Multigraph::cycle(3);
        let spec = StretchSpec {
            node: 0,
            side_a: vec![1],
            side_b: vec![2],
        };
        let stretched = stretch_node(&k3, &spec).unwrap();
        assert!(are_isomorphic(&stretched, &Multigraph::cycle(5)).unwrap());
    }

    #[test]
    fn stretch_path_center_gives_p5() {
        let p3 = Multigraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let spec = StretchSpec {
            node: 1,
            side_a: vec![0],
            side_b: vec![2],
        };
        let stretched = stretch_node(&p3, &spec).unwrap();
        let p5 = Multigraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(are_isomorphic(&stretched, &p5).unwrap());
    }

    #[test]
    fn stretch_rejects_bad_partition() {
        let k3 = Multigraph::cycle(3);
        let empty_side = StretchSpec {
            node: 0,
            side_a: vec![1, 2],
            side_b: vec![],
        };
        assert!(stretch_node(&k3, &empty_side).is_err());
        let overlapping = StretchSpec {
            node: 0,
            side_a: vec![1, 2],
            side_b: vec![2],
        };
        assert!(stretch_node(&k3, &overlapping).is_err());
    }

    #[test]
    fn canonical_stretch_of_chord_matches_subdivision() {
        let h = c5_plus_chord();
        let stretched = canonical_stretch(&h, 5).unwrap(); // edge 5 is the chord
        let subdivided = line_graph(&three_subdivision(&h, 5).unwrap()).unwrap();
        assert!(are_isomorphic(&stretched, &subdivided.graph).unwrap());
    }

    #[test]
    fn canonical_stretch_of_hole_edge_gives_c7() {
        let stretched = canonical_stretch(&Multigraph::cycle(5), 0).unwrap();
        assert!(are_isomorphic(&stretched, &Multigraph::cycle(7)).unwrap());
    }

    #[test]
    fn canonical_stretch_rejects_parallel_edges() {
        let h = c5_plus_double(); // edge 0 and edge 5 are parallel copies
        assert!(canonical_stretch(&h, 0).is_err());
        // A simple edge of the same graph is fine.
        assert!(canonical_stretch(&h, 2).is_ok());
    }

    #[test]
    fn three_subdivision_of_cycle_edge() {
        let out = three_subdivision(&Multigraph::cycle(5), 1).unwrap();
        assert!(are_isomorphic(&out, &Multigraph::cycle(7)).unwrap());
    }

    #[test]
    fn three_subdivision_of_chord_gives_hole_with_path() {
        let out = three_subdivision(&c5_plus_chord(), 5).unwrap();
        // 5-hole plus a path 0-5-6-2 of length 3.
        let expected = Multigraph::from_edges(
            7,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (5, 6), (6, 2)],
        )
        .unwrap();
        assert!(are_isomorphic(&out, &expected).unwrap());
    }
}
