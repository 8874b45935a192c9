use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, EdgeId, VertexId};

/// Color index in `0..k`.
pub type Color = u8;

/// A total map from edges to colors. It may or may not be proper.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coloring {
    colors: Vec<Color>,
    k: usize,
}

impl Coloring {
    pub fn new(colors: Vec<Color>, k: usize) -> Result<Self> {
        if k > Color::MAX as usize + 1 {
            return Err(Error::Parse(alloc::format!("k = {k} exceeds the supported 256 colors")));
        }
        if let Some((edge, &color)) = colors.iter().enumerate().find(|(_, &c)| c as usize >= k) {
            return Err(Error::ColorOutOfRange { edge, color: color as usize, k });
        }
        Ok(Self { colors, k })
    }

    /// Checks that the coloring fits `graph` and that `k` is at least the
    /// maximum degree.
    pub fn check_against(&self, graph: &BipartiteGraph) -> Result<()> {
        if self.colors.len() != graph.edge_count() {
            return Err(Error::ColoringLength { expected: graph.edge_count(), found: self.colors.len() });
        }
        if self.k < graph.max_degree() {
            return Err(Error::InfeasibleColorCount { k: self.k, max_degree: graph.max_degree() });
        }
        Ok(())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    #[inline]
    pub fn color(&self, e: EdgeId) -> Color {
        self.colors[e]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn set(&mut self, e: EdgeId, c: Color) {
        self.colors[e] = c;
    }

    /// Swaps colors `a` and `b` on the given edges.
    pub fn flip(&mut self, edges: &[EdgeId], a: Color, b: Color) {
        for &e in edges {
            let c = self.colors[e];
            self.colors[e] = if c == a {
                b
            } else {
                debug_assert_eq!(c, b, "flip touches an edge outside the two colors");
                a
            };
        }
    }

    /// Edges on which the two colorings disagree, ascending.
    pub fn diff(&self, other: &Coloring) -> Vec<EdgeId> {
        self.colors.iter().zip(&other.colors).enumerate().filter(|(_, (a, b))| a != b).map(|(e, _)| e).collect()
    }

    /// Applies a bijection on colors.
    pub fn relabel(&self, perm: &[Color]) -> Coloring {
        Coloring { colors: self.colors.iter().map(|&c| perm[c as usize]).collect(), k: self.k }
    }

    /// Space-separated color indices in edge order.
    pub fn color_string(&self) -> String {
        let mut s = String::with_capacity(self.colors.len() * 2);
        for (i, c) in self.colors.iter().enumerate() {
            if i > 0 {
                s.push(' ');
            }
            let _ = write!(s, "{c}");
        }
        s
    }

    /// Edge of color `c` at `v`, if any (the first one in adjacency order).
    pub fn edge_of_color(&self, graph: &BipartiteGraph, v: VertexId, c: Color) -> Option<EdgeId> {
        graph.incident(v).iter().copied().find(|&e| self.colors[e] == c)
    }

    pub fn has_color_at(&self, graph: &BipartiteGraph, v: VertexId, c: Color) -> bool {
        self.edge_of_color(graph, v, c).is_some()
    }
}

/// A vertex with exactly two edges of one color, all other incident colors
/// distinct, and at least one color absent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Deficiency {
    pub vertex: VertexId,
    pub repeated_color: Color,
    /// The two edges carrying `repeated_color`, ascending.
    pub repeated_edges: [EdgeId; 2],
    /// Colors in `0..k` on no incident edge, ascending.
    pub missing_colors: Vec<Color>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringStatus {
    Proper,
    /// One or two deficient vertices, ascending by vertex id.
    Almost(Vec<Deficiency>),
    /// Vertices that break the almost-coloring conditions.
    Invalid(Vec<VertexId>),
}

impl ColoringStatus {
    pub fn is_proper(&self) -> bool {
        matches!(self, ColoringStatus::Proper)
    }

    pub fn deficiencies(&self) -> &[Deficiency] {
        match self {
            ColoringStatus::Almost(d) => d,
            _ => &[],
        }
    }
}

enum VertexState {
    Clean,
    Deficient(Deficiency),
    Broken,
}

fn vertex_state(graph: &BipartiteGraph, coloring: &Coloring, v: VertexId) -> VertexState {
    let inc = graph.incident(v);
    let mut repeat: Option<(Color, EdgeId, EdgeId)> = None;
    for (i, &e) in inc.iter().enumerate() {
        let c = coloring.color(e);
        for &f in &inc[i + 1..] {
            if coloring.color(f) == c {
                match repeat {
                    None => repeat = Some((c, e, f)),
                    Some(_) => return VertexState::Broken,
                }
            }
        }
    }
    let Some((c, e, f)) = repeat else { return VertexState::Clean };
    let missing: Vec<Color> = (0..coloring.k())
        .map(|x| x as Color)
        .filter(|&x| !inc.iter().any(|&g| coloring.color(g) == x))
        .collect();
    if missing.is_empty() {
        return VertexState::Broken;
    }
    let (a, b) = if e < f { (e, f) } else { (f, e) };
    VertexState::Deficient(Deficiency { vertex: v, repeated_color: c, repeated_edges: [a, b], missing_colors: missing })
}

/// Classifies a coloring as proper, almost (one or two deficient vertices)
/// or invalid.
pub fn validate(graph: &BipartiteGraph, coloring: &Coloring) -> Result<ColoringStatus> {
    if coloring.len() != graph.edge_count() {
        return Err(Error::ColoringLength { expected: graph.edge_count(), found: coloring.len() });
    }
    Ok(status(graph, coloring))
}

/// [`validate`] without the length check.
pub fn status(graph: &BipartiteGraph, coloring: &Coloring) -> ColoringStatus {
    let mut deficient = Vec::new();
    let mut broken = Vec::new();
    for v in 0..graph.vertex_count() {
        match vertex_state(graph, coloring, v) {
            VertexState::Clean => {}
            VertexState::Deficient(d) => deficient.push(d),
            VertexState::Broken => broken.push(v),
        }
    }
    if !broken.is_empty() {
        return ColoringStatus::Invalid(broken);
    }
    match deficient.len() {
        0 => ColoringStatus::Proper,
        1 | 2 => ColoringStatus::Almost(deficient),
        _ => ColoringStatus::Invalid(deficient.into_iter().map(|d| d.vertex).collect()),
    }
}

pub fn is_proper(graph: &BipartiteGraph, coloring: &Coloring) -> bool {
    (0..graph.vertex_count()).all(|v| {
        let inc = graph.incident(v);
        inc.iter().enumerate().all(|(i, &e)| inc[i + 1..].iter().all(|&f| coloring.color(e) != coloring.color(f)))
    })
}
