//! Alternating walks and the repair of almost colorings.

use alloc::format;
use alloc::vec::Vec;

use crate::coloring::{status, Color, Coloring, ColoringStatus, Deficiency};
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, EdgeId, VertexId};

/// Edges of an alternating walk in traversal order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Walk {
    pub edges: Vec<EdgeId>,
    pub colors: (Color, Color),
    /// The walk closed up into a cycle.
    pub closed: bool,
}

impl Walk {
    pub fn flip(&self, coloring: &mut Coloring) {
        coloring.flip(&self.edges, self.colors.0, self.colors.1);
    }
}

fn other(c: Color, pair: (Color, Color)) -> Color {
    if c == pair.0 {
        pair.1
    } else {
        pair.0
    }
}

enum Step {
    Next(EdgeId),
    Closed,
    Stop,
}

fn step(
    graph: &BipartiteGraph,
    coloring: &Coloring,
    at: VertexId,
    via: EdgeId,
    pair: (Color, Color),
    walk: &[EdgeId],
    excluded: Option<EdgeId>,
) -> Step {
    let want = other(coloring.color(via), pair);
    let mut best: Option<EdgeId> = None;
    for &e in graph.incident(at) {
        if e == via || Some(e) == excluded || coloring.color(e) != want {
            continue;
        }
        if walk.contains(&e) {
            return Step::Closed;
        }
        // two candidates only occur at a deficient vertex; take the lower id
        if best.is_none_or(|b| e < b) {
            best = Some(e);
        }
    }
    best.map_or(Step::Stop, Step::Next)
}

/// Extends from vertex `at`, reached via `via`, appending to `edges`.
/// Returns true if the walk closed.
fn extend(
    graph: &BipartiteGraph,
    coloring: &Coloring,
    mut at: VertexId,
    mut via: EdgeId,
    pair: (Color, Color),
    edges: &mut Vec<EdgeId>,
    excluded: Option<EdgeId>,
) -> bool {
    loop {
        match step(graph, coloring, at, via, pair, edges, excluded) {
            Step::Next(e) => {
                edges.push(e);
                at = graph.other_end(e, at);
                via = e;
            }
            Step::Closed => return true,
            Step::Stop => return false,
        }
    }
}

/// The maximal alternating walk in colors `pair` that contains `start`,
/// never using `excluded`.
pub fn maximal_through(
    graph: &BipartiteGraph,
    coloring: &Coloring,
    start: EdgeId,
    pair: (Color, Color),
    excluded: Option<EdgeId>,
) -> Walk {
    let (u, w) = graph.endpoints(start);
    let mut forward = alloc::vec![start];
    if extend(graph, coloring, w, start, pair, &mut forward, excluded) {
        return Walk { edges: forward, colors: pair, closed: true };
    }
    let mut backward = Vec::new();
    let mut all = forward.clone();
    // extend the u side while checking against both halves
    let mut at = u;
    let mut via = start;
    let closed = loop {
        match step(graph, coloring, at, via, pair, &all, excluded) {
            Step::Next(e) => {
                backward.push(e);
                all.push(e);
                at = graph.other_end(e, at);
                via = e;
            }
            Step::Closed => break true,
            Step::Stop => break false,
        }
    };
    backward.reverse();
    backward.extend(forward);
    Walk { edges: backward, colors: pair, closed }
}

/// The maximal alternating walk in colors `pair` leaving `v` through `first`.
pub fn maximal_from(
    graph: &BipartiteGraph,
    coloring: &Coloring,
    v: VertexId,
    first: EdgeId,
    pair: (Color, Color),
) -> Walk {
    let mut edges = alloc::vec![first];
    let closed = extend(graph, coloring, graph.other_end(first, v), first, pair, &mut edges, None);
    Walk { edges, colors: pair, closed }
}

/// The colors a move works with. Repairs pick their partner color from it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColorContext {
    Pair(Color, Color),
    /// Two subgraph colors and a distinguished third.
    Triple(Color, Color, Color),
}

impl ColorContext {
    /// Partner color for repairing `d`: the other subgraph color when it is
    /// absent at the vertex, else the lowest context color absent there.
    pub fn partner(&self, d: &Deficiency) -> Option<Color> {
        let r = d.repeated_color;
        let missing = |c: Color| d.missing_colors.binary_search(&c).is_ok();
        let (a, b, rest) = match *self {
            ColorContext::Pair(a, b) => (a, b, None),
            ColorContext::Triple(a, b, c) => (a, b, Some(c)),
        };
        if r == a || r == b {
            let o = if r == a { b } else { a };
            if missing(o) {
                return Some(o);
            }
        }
        let mut options: Vec<Color> = [Some(a), Some(b), rest].into_iter().flatten().filter(|&c| c != r && missing(c)).collect();
        options.sort_unstable();
        options.first().copied()
    }
}

/// One repair choice: which of the two repeated edges at `vertex` starts the
/// walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RepairPick {
    pub vertex: VertexId,
    pub edge: EdgeId,
}

/// At most this many walks are flipped while repairing one coloring.
pub const MAX_REPAIR_WALKS: usize = 4;

/// The deficiency repaired next (lowest vertex id) and its walk partner
/// color, or `None` for a proper coloring.
pub fn next_repair(graph: &BipartiteGraph, coloring: &Coloring, ctx: ColorContext) -> Result<Option<(Deficiency, Color)>> {
    match status(graph, coloring) {
        ColoringStatus::Proper => Ok(None),
        ColoringStatus::Almost(mut ds) => {
            let d = ds.swap_remove(0);
            let p = ctx
                .partner(&d)
                .ok_or_else(|| Error::Contract(format!("no partner color for the deficiency at vertex {}", d.vertex)))?;
            Ok(Some((d, p)))
        }
        ColoringStatus::Invalid(vs) => Err(Error::Contract(format!("coloring is neither proper nor almost at {vs:?}"))),
    }
}

/// Turns an almost coloring into a proper one by flipping maximal
/// alternating walks, one per pick, processing deficient vertices in
/// ascending order.
pub fn repair_deficiencies(
    graph: &BipartiteGraph,
    coloring: &Coloring,
    ctx: ColorContext,
    picks: &[RepairPick],
) -> Result<(Coloring, Vec<Walk>)> {
    let mut cur = coloring.clone();
    let mut walks = Vec::new();
    let mut picks = picks.iter();
    while let Some((d, partner)) = next_repair(graph, &cur, ctx)? {
        if walks.len() == MAX_REPAIR_WALKS {
            return Err(Error::Contract(format!("repair did not finish within {MAX_REPAIR_WALKS} walks")));
        }
        let pick = picks.next().ok_or_else(|| Error::WayDoesNotApply(format!("missing repair pick for vertex {}", d.vertex)))?;
        if pick.vertex != d.vertex || !d.repeated_edges.contains(&pick.edge) {
            return Err(Error::WayDoesNotApply(format!(
                "repair pick ({}, {}) does not match deficient vertex {}",
                pick.vertex, pick.edge, d.vertex
            )));
        }
        let walk = maximal_from(graph, &cur, d.vertex, pick.edge, (d.repeated_color, partner));
        walk.flip(&mut cur);
        walks.push(walk);
    }
    if picks.next().is_some() {
        return Err(Error::WayDoesNotApply("unused repair picks".into()));
    }
    Ok((cur, walks))
}
