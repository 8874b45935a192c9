use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, VertexId};
use crate::walk::maximal_from;

fn free_color(graph: &BipartiteGraph, coloring: &[Option<Color>], v: VertexId, k: usize) -> Option<Color> {
    (0..k).map(|c| c as Color).find(|&c| graph.incident(v).iter().all(|&e| coloring[e] != Some(c)))
}

/// A proper edge `k`-coloring built by inserting edges in input order.
///
/// Each edge `(u, w)` takes the lowest color free at both ends. Otherwise,
/// with `a` free at `u` and `b` free at `w`, the `(a, b)` alternating path
/// leaving `w` along its `a` edge is flipped, which frees `a` at `w`.
pub fn initial_coloring(graph: &BipartiteGraph, k: usize) -> Result<Coloring> {
    if k < graph.max_degree() {
        return Err(Error::InfeasibleColorCount { k, max_degree: graph.max_degree() });
    }
    let m = graph.edge_count();
    let mut partial: alloc::vec::Vec<Option<Color>> = alloc::vec![None; m];
    for e in 0..m {
        let (u, w) = graph.endpoints(e);
        let common = (0..k)
            .map(|c| c as Color)
            .find(|&c| graph.incident(u).iter().chain(graph.incident(w)).all(|&f| partial[f] != Some(c)));
        let c = match common {
            Some(c) => c,
            None => {
                let a = free_color(graph, &partial, u, k).expect("degree below k");
                let b = free_color(graph, &partial, w, k).expect("degree below k");
                // work on a full coloring view; uncolored edges get a sentinel
                let sentinel = k as Color;
                let view: alloc::vec::Vec<Color> = partial.iter().map(|c| c.unwrap_or(sentinel)).collect();
                let view = Coloring::new(view, k + 1)?;
                let start = graph.incident(w).iter().copied().find(|&f| partial[f] == Some(a)).expect("a is used at w");
                let walk = maximal_from(graph, &view, w, start, (a, b));
                for f in walk.edges {
                    partial[f] = Some(if partial[f] == Some(a) { b } else { a });
                }
                a
            }
        };
        partial[e] = Some(c);
    }
    Coloring::new(partial.into_iter().map(|c| c.unwrap()).collect(), k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{validate, ColoringStatus};

    #[test]
    fn single_edge() {
        let g = BipartiteGraph::new(1, 1, &[(0, 0)]).unwrap();
        assert_eq!(initial_coloring(&g, 1).unwrap().colors(), &[0]);
    }

    #[test]
    fn complete_graphs_are_proper() {
        let g = BipartiteGraph::complete(2, 2);
        assert_eq!(validate(&g, &initial_coloring(&g, 2).unwrap()).unwrap(), ColoringStatus::Proper);
        let g = BipartiteGraph::complete(3, 3);
        let c = initial_coloring(&g, 3).unwrap();
        assert_eq!(validate(&g, &c).unwrap(), ColoringStatus::Proper);
        for color in 0..3 {
            assert_eq!(c.colors().iter().filter(|&&x| x == color).count(), 3);
        }
    }

    #[test]
    fn too_few_colors() {
        let g = BipartiteGraph::complete(2, 3);
        assert_eq!(initial_coloring(&g, 2), Err(Error::InfeasibleColorCount { k: 2, max_degree: 3 }));
    }
}
