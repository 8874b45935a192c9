use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Vertex index. Left vertices are `0..left_count`, right vertices follow.
pub type VertexId = usize;
/// Edge index, in input order.
pub type EdgeId = usize;

/// An immutable simple bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    left: usize,
    right: usize,
    edges: Vec<(VertexId, VertexId)>,
    adjacency: Vec<Vec<EdgeId>>,
}

impl BipartiteGraph {
    /// Builds a graph from `(left index, right index)` pairs, both 0-based
    /// within their own class.
    pub fn new(left: usize, right: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut edges = Vec::with_capacity(pairs.len());
        let mut adjacency = vec![Vec::new(); left + right];
        let mut seen = alloc::collections::BTreeSet::new();
        for (id, &(l, r)) in pairs.iter().enumerate() {
            if l >= left || r >= right {
                return Err(Error::BadEdge { left: l, right: r });
            }
            if !seen.insert((l, r)) {
                return Err(Error::DuplicateEdge { left: l, right: r });
            }
            let (u, w) = (l, left + r);
            edges.push((u, w));
            adjacency[u].push(id);
            adjacency[w].push(id);
        }
        Ok(Self { left, right, edges, adjacency })
    }

    pub fn complete(left: usize, right: usize) -> Self {
        let pairs: Vec<_> = (0..left).flat_map(|l| (0..right).map(move |r| (l, r))).collect();
        Self::new(left, right, &pairs).expect("complete graph is simple")
    }

    pub fn left_count(&self) -> usize {
        self.left
    }

    pub fn right_count(&self) -> usize {
        self.right
    }

    pub fn vertex_count(&self) -> usize {
        self.left + self.right
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_left(&self, v: VertexId) -> bool {
        v < self.left
    }

    /// Endpoints `(left vertex, right vertex)` of an edge.
    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    /// The endpoint of `e` that is not `v`.
    pub fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edge_between(&self, u: VertexId, w: VertexId) -> Option<EdgeId> {
        self.adjacency[u].iter().copied().find(|&e| self.other_end(e, u) == w)
    }

    /// Edges as `(left index, right index)` pairs, both 0-based in their class.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().map(move |&(u, w)| (u, w - self.left))
    }
}
