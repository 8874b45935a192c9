//! Facts specific to `k`-regular bipartite graphs colored with `k` colors.
//!
//! In an almost coloring of such a graph the deficiencies come in pairs at
//! the two ends of one alternating path, which is what the regular kernel
//! relies on.

use alloc::format;
use alloc::vec::Vec;

use crate::coloring::{status, Color, Coloring, ColoringStatus};
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, VertexId};
use crate::walk::{maximal_from, maximal_through, Walk};

/// Succeeds iff both classes have the same size and every vertex has
/// degree `k`.
pub fn assert_regular(graph: &BipartiteGraph, k: usize) -> Result<()> {
    if let Some(v) = (0..graph.vertex_count()).find(|&v| graph.degree(v) != k) {
        return Err(Error::NotRegular { vertex: v, degree: graph.degree(v), k });
    }
    if graph.left_count() != graph.right_count() {
        return Err(Error::UnbalancedClasses { left: graph.left_count(), right: graph.right_count() });
    }
    Ok(())
}

/// The two deficient vertices of an almost coloring and an alternating
/// path joining them; of the candidate paths leaving the first vertex the
/// longest is returned.
pub fn deficiency_pair(graph: &BipartiteGraph, coloring: &Coloring) -> Result<(VertexId, VertexId, Walk)> {
    let ds = match status(graph, coloring) {
        ColoringStatus::Almost(ds) => ds,
        ColoringStatus::Proper => return Err(Error::NotAlmost),
        ColoringStatus::Invalid(vs) => return Err(Error::Contract(format!("invalid coloring at {vs:?}"))),
    };
    if ds.len() != 2 {
        return Err(Error::Contract(format!("expected two deficient vertices, found {}", ds.len())));
    }
    let (d1, v2) = (&ds[0], ds[1].vertex);
    let c = d1.repeated_color;
    let mut best: Option<Walk> = None;
    for &e in &d1.repeated_edges {
        for &partner in &d1.missing_colors {
            let w = maximal_from(graph, coloring, d1.vertex, e, (c, partner));
            if w.closed || end_vertex(graph, d1.vertex, &w.edges) != v2 {
                continue;
            }
            if best.as_ref().is_none_or(|b| w.edges.len() > b.edges.len()) {
                best = Some(w);
            }
        }
    }
    best.map(|w| (d1.vertex, v2, w))
        .ok_or_else(|| Error::Contract(format!("no alternating path joins vertices {} and {v2}", d1.vertex)))
}

/// Last vertex of a walk given as an edge list from `start`.
pub fn end_vertex(graph: &BipartiteGraph, start: VertexId, edges: &[usize]) -> VertexId {
    edges.iter().fold(start, |v, &e| graph.other_end(e, v))
}

/// The maximal `(c', c'')` walk from `v2` starting with its `c''` edge,
/// where `v2` has a `(+c' -c)` deficiency and the other deficient vertex,
/// in the same class, has `(+c -c')`. On a regular graph this walk closes
/// into a cycle.
pub fn closing_cycle(graph: &BipartiteGraph, coloring: &Coloring, v2: VertexId, c1: Color, c2: Color) -> Result<Walk> {
    let ds = match status(graph, coloring) {
        ColoringStatus::Almost(ds) if ds.len() == 2 => ds,
        _ => return Err(Error::Contract("expected an almost coloring with two deficient vertices".into())),
    };
    let (mine, other): (Vec<_>, Vec<_>) = ds.into_iter().partition(|d| d.vertex == v2);
    let (Some(mine), Some(other)) = (mine.first(), other.first()) else {
        return Err(Error::Contract(format!("vertex {v2} is not deficient")));
    };
    let c = other.repeated_color;
    if mine.repeated_color != c1 || !mine.missing_colors.contains(&c) {
        return Err(Error::Contract(format!("vertex {v2} does not have a (+{c1} -{c}) deficiency")));
    }
    if !other.missing_colors.contains(&c1) {
        return Err(Error::Contract(format!("vertex {} does not miss color {c1}", other.vertex)));
    }
    if graph.is_left(v2) != graph.is_left(other.vertex) {
        return Err(Error::Contract("the deficient vertices are in different classes".into()));
    }
    if c2 == c || c2 == c1 || c2 as usize >= coloring.k() {
        return Err(Error::Contract(format!("{c2} is not a third color")));
    }
    let first = coloring
        .edge_of_color(graph, v2, c2)
        .ok_or_else(|| Error::Contract(format!("vertex {v2} has no edge of color {c2}")))?;
    let w = maximal_from(graph, coloring, v2, first, (c2, c1));
    if !w.closed {
        return Err(Error::Contract("the walk does not close".into()));
    }
    Ok(w)
}

/// Every two-color subgraph of a proper coloring of a regular graph is a
/// union of cycles: the maximal walk through any edge closes.
pub fn two_color_is_cycles(graph: &BipartiteGraph, coloring: &Coloring, a: Color, b: Color) -> bool {
    (0..graph.edge_count())
        .filter(|&e| coloring.color(e) == a || coloring.color(e) == b)
        .all(|e| maximal_through(graph, coloring, e, (a, b), None).closed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::initial::initial_coloring;
    use alloc::vec;

    fn hexagon() -> (BipartiteGraph, Coloring) {
        // left i to right i and right i+1 (mod 3): edges alternate colors
        let g = BipartiteGraph::new(3, 3, &[(0, 0), (0, 1), (1, 1), (1, 2), (2, 2), (2, 0)]).unwrap();
        let c = Coloring::new(vec![0, 1, 0, 1, 0, 1], 2).unwrap();
        (g, c)
    }

    #[test]
    fn regular_checks() {
        assert!(assert_regular(&BipartiteGraph::complete(3, 3), 3).is_ok());
        let (g, _) = hexagon();
        assert!(assert_regular(&g, 2).is_ok());
        let pairs: Vec<_> = BipartiteGraph::complete(3, 3).pairs().skip(1).collect();
        let g = BipartiteGraph::new(3, 3, &pairs).unwrap();
        match assert_regular(&g, 3) {
            Err(Error::NotRegular { vertex, degree: 2, k: 3 }) => assert_eq!(vertex, 0),
            other => panic!("{other:?}"),
        }
        assert!(matches!(assert_regular(&BipartiteGraph::complete(2, 3), 3), Err(Error::NotRegular { .. })));
    }

    #[test]
    fn hexagon_pair() {
        let (g, mut c) = hexagon();
        c.set(0, 1);
        let (v1, v2, w) = deficiency_pair(&g, &c).unwrap();
        assert_eq!((v1, v2), (0, 3));
        assert_eq!(w.edges.len(), 5);
        assert_eq!(end_vertex(&g, v1, &w.edges), v2);
        w.flip(&mut c);
        assert!(status(&g, &c).is_proper());
    }

    #[test]
    fn proper_is_not_almost() {
        let (g, c) = hexagon();
        assert!(matches!(deficiency_pair(&g, &c), Err(Error::NotAlmost)));
    }

    #[test]
    fn k33_recolored_edge() {
        let g = BipartiteGraph::complete(3, 3);
        let mut c = initial_coloring(&g, 3).unwrap();
        let old = c.color(0);
        c.set(0, (old + 1) % 3);
        let (v1, v2, w) = deficiency_pair(&g, &c).unwrap();
        assert_ne!(g.is_left(v1), g.is_left(v2));
        w.flip(&mut c);
        assert!(status(&g, &c).is_proper());
    }

    #[test]
    fn k33_cycles() {
        let g = BipartiteGraph::complete(3, 3);
        let c = initial_coloring(&g, 3).unwrap();
        for (a, b) in [(0, 1), (0, 2), (1, 2)] {
            assert!(two_color_is_cycles(&g, &c, a, b));
        }
    }

    #[test]
    fn closing_cycle_needs_third_color() {
        let (g, mut c) = hexagon();
        c.set(0, 1);
        assert!(matches!(closing_cycle(&g, &c, 3, 1, 0), Err(Error::Contract(_))));
    }

    #[test]
    fn closing_cycles_on_k44() {
        let g = BipartiteGraph::complete(4, 4);
        let base = initial_coloring(&g, 4).unwrap();
        let mut checked = 0;
        for e in 0..16 {
            for f in e + 1..16 {
                for x in 0..4u8 {
                    for y in 0..4u8 {
                        let mut c = base.clone();
                        c.set(e, x);
                        c.set(f, y);
                        let ColoringStatus::Almost(ds) = status(&g, &c) else { continue };
                        if ds.len() != 2 || g.is_left(ds[0].vertex) != g.is_left(ds[1].vertex) {
                            continue;
                        }
                        let (a, b) = (&ds[0], &ds[1]);
                        if a.missing_colors != vec![b.repeated_color] || b.missing_colors != vec![a.repeated_color] {
                            continue;
                        }
                        for c2 in (0..4u8).filter(|&z| z != a.repeated_color && z != b.repeated_color) {
                            let w = closing_cycle(&g, &c, b.vertex, b.repeated_color, c2).unwrap();
                            assert_eq!(end_vertex(&g, b.vertex, &w.edges), b.vertex);
                            checked += 1;
                        }
                    }
                }
            }
        }
        assert!(checked > 0);
    }
}
