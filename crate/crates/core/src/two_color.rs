//! The subgraph spanned by two colors and the selection menus built on it.

use alloc::vec;
use alloc::vec::Vec;

use crate::coloring::{Color, Coloring};
use crate::graph::{BipartiteGraph, EdgeId, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentKind {
    Path,
    Cycle,
}

/// A non-trivial component. For a path `vertices.len() == edges.len() + 1`;
/// for a cycle the lengths agree and `edges[i]` joins `vertices[i]` with
/// `vertices[(i + 1) % m]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub kind: ComponentKind,
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl Component {
    pub fn is_cycle(&self) -> bool {
        self.kind == ComponentKind::Cycle
    }
}

/// A contiguous piece of one component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SubPath {
    /// Between vertex positions `from < to`. On a cycle `wrap` selects the
    /// arc through position 0; on a path it is always false.
    Segment { component: usize, from: usize, to: usize, wrap: bool },
    FullCycle { component: usize },
}

/// A sub-path of a path component running from one end of the component to
/// an internal vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Anchored {
    pub component: usize,
    /// Anchored at position 0 (true) or at the last position (false).
    pub from_start: bool,
    /// Position of the internal end.
    pub internal: usize,
}

/// Which sub-paths a menu offers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubPathFilter {
    /// Every sub-path and every whole cycle.
    All,
    /// Sub-paths with at least one end that is not an end of the component's
    /// path; whole cycles included.
    NotBothEnds,
    /// Cycle arcs with an even number of edges; whole cycles excluded.
    EvenArcs,
}

/// Subgraph of the edges colored `a` or `b`, split into canonical
/// components: ordered by smallest vertex id, paths starting at their
/// smaller end, cycles starting at their smallest vertex toward its
/// smaller-id neighbor.
#[derive(Debug, Clone)]
pub struct TwoColorSubgraph {
    pub colors: (Color, Color),
    pub components: Vec<Component>,
    location: Vec<Option<(u32, u32)>>,
}

fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl TwoColorSubgraph {
    pub fn build(graph: &BipartiteGraph, coloring: &Coloring, a: Color, b: Color) -> Self {
        let n = graph.vertex_count();
        let in_h = |e: EdgeId| {
            let c = coloring.color(e);
            c == a || c == b
        };
        let mut nbrs: Vec<[Option<EdgeId>; 2]> = vec![[None, None]; n];
        for (v, slot) in nbrs.iter_mut().enumerate() {
            let mut i = 0;
            for &e in graph.incident(v) {
                if in_h(e) {
                    assert!(i < 2, "vertex {v} has degree > 2 in the two-color subgraph");
                    slot[i] = Some(e);
                    i += 1;
                }
            }
        }
        let deg = |v: VertexId| nbrs[v].iter().flatten().count();
        let mut location = vec![None; graph.edge_count()];
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        for v in 0..n {
            if seen[v] || deg(v) == 0 {
                continue;
            }
            // collect the component to classify it
            let mut members = vec![v];
            seen[v] = true;
            let mut i = 0;
            while i < members.len() {
                let x = members[i];
                for e in nbrs[x].iter().flatten() {
                    let y = graph.other_end(*e, x);
                    if !seen[y] {
                        seen[y] = true;
                        members.push(y);
                    }
                }
                i += 1;
            }
            let ends: Vec<VertexId> = members.iter().copied().filter(|&x| deg(x) == 1).collect();
            let (kind, start, first) = if ends.is_empty() {
                let [e0, e1] = nbrs[v];
                let (e0, e1) = (e0.unwrap(), e1.unwrap());
                let first = if graph.other_end(e0, v) <= graph.other_end(e1, v) { e0 } else { e1 };
                (ComponentKind::Cycle, v, first)
            } else {
                let s = *ends.iter().min().unwrap();
                (ComponentKind::Path, s, nbrs[s][0].unwrap())
            };
            let mut vertices = vec![start];
            let mut edges = Vec::new();
            let mut cur = start;
            let mut e = first;
            loop {
                edges.push(e);
                let next = graph.other_end(e, cur);
                if next == start {
                    break;
                }
                vertices.push(next);
                let cont = nbrs[next].iter().flatten().copied().find(|&f| f != e);
                match cont {
                    Some(f) => {
                        cur = next;
                        e = f;
                    }
                    None => break,
                }
            }
            let ci = components.len() as u32;
            for (p, &e) in edges.iter().enumerate() {
                location[e] = Some((ci, p as u32));
            }
            components.push(Component { kind, vertices, edges });
        }
        Self { colors: (a, b), components, location }
    }

    pub fn edge_count(&self) -> usize {
        self.components.iter().map(|c| c.edges.len()).sum()
    }

    /// `(component, position)` of an edge of the subgraph.
    pub fn locate(&self, e: EdgeId) -> Option<(usize, usize)> {
        self.location[e].map(|(c, p)| (c as usize, p as usize))
    }

    pub fn edges_of(&self, s: &SubPath) -> Vec<EdgeId> {
        match *s {
            SubPath::FullCycle { component } => self.components[component].edges.clone(),
            SubPath::Segment { component, from, to, wrap } => {
                let edges = &self.components[component].edges;
                if wrap {
                    edges[to..].iter().chain(&edges[..from]).copied().collect()
                } else {
                    edges[from..to].to_vec()
                }
            }
        }
    }

    pub fn anchored_edges(&self, a: &Anchored) -> &[EdgeId] {
        let edges = &self.components[a.component].edges;
        if a.from_start {
            &edges[..a.internal]
        } else {
            &edges[a.internal..]
        }
    }

    fn component_subpath_count(&self, c: &Component, filter: SubPathFilter) -> usize {
        let m = c.vertices.len();
        match (c.kind, filter) {
            (ComponentKind::Path, SubPathFilter::All) => choose2(m),
            (ComponentKind::Path, SubPathFilter::NotBothEnds) => choose2(m) - 1,
            (ComponentKind::Path, SubPathFilter::EvenArcs) => 0,
            (ComponentKind::Cycle, SubPathFilter::All) => 2 * choose2(m) + 1,
            (ComponentKind::Cycle, SubPathFilter::NotBothEnds) => 2 * choose2(m) + 1,
            (ComponentKind::Cycle, SubPathFilter::EvenArcs) => 4 * choose2(m / 2),
        }
    }

    /// Number of entries of the sub-path menu.
    pub fn subpath_count(&self, filter: SubPathFilter) -> usize {
        self.components.iter().map(|c| self.component_subpath_count(c, filter)).sum()
    }

    fn admits(&self, s: &SubPath, filter: SubPathFilter) -> bool {
        match (*s, filter) {
            (_, SubPathFilter::All) | (SubPath::FullCycle { .. }, SubPathFilter::NotBothEnds) => true,
            (SubPath::FullCycle { .. }, _) => false,
            (SubPath::Segment { component, from, to, .. }, SubPathFilter::NotBothEnds) => {
                let c = &self.components[component];
                c.is_cycle() || from != 0 || to != c.vertices.len() - 1
            }
            (SubPath::Segment { component, from, to, .. }, SubPathFilter::EvenArcs) => {
                self.components[component].is_cycle() && (to - from) % 2 == 0
            }
        }
    }

    /// Entries of the sub-path menu in canonical order.
    pub fn subpaths(&self, filter: SubPathFilter) -> impl Iterator<Item = SubPath> + '_ {
        self.components.iter().enumerate().flat_map(move |(ci, c)| {
            let m = c.vertices.len();
            let cyc = c.is_cycle();
            let pairs = (0..m).flat_map(move |i| {
                (i + 1..m).flat_map(move |j| {
                    let first = SubPath::Segment { component: ci, from: i, to: j, wrap: false };
                    let second = cyc.then_some(SubPath::Segment { component: ci, from: i, to: j, wrap: true });
                    core::iter::once(first).chain(second)
                })
            });
            pairs.chain(cyc.then_some(SubPath::FullCycle { component: ci }))
        })
        .filter(move |s| self.admits(s, filter))
    }

    pub fn subpath_at(&self, filter: SubPathFilter, index: usize) -> Option<SubPath> {
        let mut index = index;
        for (ci, c) in self.components.iter().enumerate() {
            let n = self.component_subpath_count(c, filter);
            if index < n {
                return self.subpaths(filter).filter(|s| component_of(s) == ci).nth(index);
            }
            index -= n;
        }
        None
    }

    /// Index of a menu entry.
    pub fn subpath_index(&self, filter: SubPathFilter, s: &SubPath) -> Option<usize> {
        let ci = component_of(s);
        let before: usize = self.components[..ci].iter().map(|c| self.component_subpath_count(c, filter)).sum();
        self.subpaths(filter).filter(|t| component_of(t) == ci).position(|t| t == *s).map(|p| before + p)
    }

    /// The sub-path whose edge set is exactly `edges`, if there is one
    /// (whether or not a given filter admits it).
    pub fn subpath_for_edges(&self, edges: &[EdgeId]) -> Option<SubPath> {
        let &first = edges.first()?;
        let (ci, _) = self.locate(first)?;
        let c = &self.components[ci];
        let m = c.edges.len();
        let mut present = vec![false; m];
        for &e in edges {
            match self.locate(e) {
                Some((cj, p)) if cj == ci => present[p] = true,
                _ => return None,
            }
        }
        let len = edges.len();
        if c.is_cycle() {
            if len == m {
                return Some(SubPath::FullCycle { component: ci });
            }
            let s = (0..m).find(|&p| present[p] && !present[(p + m - 1) % m])?;
            if (0..len).any(|d| !present[(s + d) % m]) {
                return None;
            }
            if s + len < m {
                Some(SubPath::Segment { component: ci, from: s, to: s + len, wrap: false })
            } else {
                Some(SubPath::Segment { component: ci, from: s + len - m, to: s, wrap: true })
            }
        } else {
            let s = present.iter().position(|&x| x)?;
            if (s..s + len).any(|p| p >= m || !present[p]) {
                return None;
            }
            Some(SubPath::Segment { component: ci, from: s, to: s + len, wrap: false })
        }
    }

    /// Number of sub-path menu entries that flip exactly `edges` (0 or 1).
    pub fn subpath_matches(&self, filter: SubPathFilter, edges: &[EdgeId]) -> usize {
        match self.subpath_for_edges(edges) {
            Some(s) if self.admits(&s, filter) => 1,
            _ => 0,
        }
    }

    /// Anchored sub-paths in canonical order: per path component with at
    /// least three vertices, the prefixes by internal end, then the
    /// suffixes by internal end.
    pub fn anchored(&self) -> Vec<Anchored> {
        let mut out = Vec::new();
        for (ci, c) in self.components.iter().enumerate() {
            if c.is_cycle() || c.vertices.len() < 3 {
                continue;
            }
            let m = c.vertices.len();
            out.extend((1..m - 1).map(|j| Anchored { component: ci, from_start: true, internal: j }));
            out.extend((1..m - 1).map(|i| Anchored { component: ci, from_start: false, internal: i }));
        }
        out
    }

    fn disjoint(p: &Anchored, q: &Anchored) -> bool {
        if p.component != q.component {
            return true;
        }
        match (p.from_start, q.from_start) {
            (true, false) => p.internal <= q.internal,
            (false, true) => q.internal <= p.internal,
            _ => false,
        }
    }

    /// Number of unordered pairs of edge-disjoint anchored sub-paths.
    pub fn anchored_pair_count(&self) -> usize {
        let mut total = 0;
        let mut within = 0;
        for c in &self.components {
            if c.is_cycle() || c.vertices.len() < 3 {
                continue;
            }
            let inner = c.vertices.len() - 2;
            total += 2 * inner;
            within += choose2(2 * inner) - inner * (inner + 1) / 2;
        }
        choose2(total) - within
    }

    /// Edge-disjoint anchored pairs in canonical order.
    pub fn anchored_pairs(&self) -> Vec<(Anchored, Anchored)> {
        let list = self.anchored();
        let mut out = Vec::new();
        for (i, p) in list.iter().enumerate() {
            for q in &list[i + 1..] {
                if Self::disjoint(p, q) {
                    out.push((*p, *q));
                }
            }
        }
        out
    }

    pub fn anchored_pair_at(&self, index: usize) -> Option<(Anchored, Anchored)> {
        self.anchored_pairs().get(index).copied()
    }

    /// Indices of the anchored pairs whose union is exactly `edges`.
    pub fn anchored_pair_matches(&self, edges: &[EdgeId]) -> Vec<usize> {
        if edges.is_empty() {
            return Vec::new();
        }
        let mut out = Vec::new();
        let inside = |s: &[EdgeId]| s.iter().all(|e| edges.binary_search(e).is_ok());
        for (idx, (p, q)) in self.anchored_pairs().into_iter().enumerate() {
            let (ep, eq) = (self.anchored_edges(&p), self.anchored_edges(&q));
            if ep.len() + eq.len() == edges.len() && inside(ep) && inside(eq) {
                out.push(idx);
            }
        }
        out
    }

    /// True when `v` has degree 1 in the subgraph.
    pub fn is_endpoint(&self, graph: &BipartiteGraph, coloring: &Coloring, v: VertexId) -> bool {
        let (a, b) = self.colors;
        graph.incident(v).iter().filter(|&&e| coloring.color(e) == a || coloring.color(e) == b).count() == 1
    }
}

fn component_of(s: &SubPath) -> usize {
    match *s {
        SubPath::Segment { component, .. } | SubPath::FullCycle { component } => component,
    }
}
