//! The three stages of a proposal as explicit option lists.
//!
//! Each stage maps a coloring to a finite list of choices with conditional
//! probabilities. Sampling, replay, path probabilities and way search are
//! all built on these lists, so they agree by construction.

use alloc::vec;
use alloc::vec::Vec;

use super::{Action, Branch, KernelKind, MoveColors, Pivot, Selection, Way};
use crate::coloring::{status, Color, Coloring, ColoringStatus};
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, EdgeId, VertexId};
use crate::prob::{choose, one, ratio, zero, Prob};
use crate::two_color::{SubPathFilter, TwoColorSubgraph};
use crate::walk::{maximal_from, maximal_through, next_repair, ColorContext, RepairPick, MAX_REPAIR_WALKS};

/// Probability of one color choice, or of the lazy branch for `None`.
pub fn color_probability(k: usize, colors: Option<MoveColors>) -> Prob {
    let pairs = choose(k, 2);
    let triples = choose(k, 3);
    match colors {
        None => {
            let mut p = ratio(1, 2);
            if pairs == 0 {
                p += ratio(1, 4);
            }
            if triples == 0 {
                p += ratio(1, 4);
            }
            p
        }
        Some(MoveColors::Two(..)) if pairs > 0 => ratio(1, 4 * pairs),
        Some(MoveColors::Three { .. }) if triples > 0 => ratio(1, 12 * triples),
        Some(_) => zero(),
    }
}

pub(crate) fn check_colors(k: usize, colors: MoveColors) -> Result<()> {
    let ok = match colors {
        MoveColors::Two(a, b) => a < b && (b as usize) < k,
        MoveColors::Three { pair: (a, b), distinguished: d } => {
            a < b && (b as usize) < k && (d as usize) < k && d != a && d != b
        }
    };
    if ok {
        Ok(())
    } else {
        Err(Error::WayDoesNotApply(alloc::format!("colors {colors:?} are not valid for k = {k}")))
    }
}

fn menu_filter(kind: KernelKind, colors: MoveColors) -> SubPathFilter {
    match (kind, colors) {
        (_, MoveColors::Two(..)) => SubPathFilter::All,
        (KernelKind::General, MoveColors::Three { .. }) => SubPathFilter::NotBothEnds,
        (KernelKind::Regular, MoveColors::Three { .. }) => SubPathFilter::EvenArcs,
    }
}

fn branch_probability(kind: KernelKind) -> Prob {
    match kind {
        KernelKind::General => ratio(1, 3),
        KernelKind::Regular => ratio(1, 2),
    }
}

/// Selection menus for one coloring and color choice.
pub(crate) struct Menus {
    pub h: TwoColorSubgraph,
    filter: SubPathFilter,
    kind: KernelKind,
    subpaths: usize,
    pairs: usize,
}

impl Menus {
    pub fn new(graph: &BipartiteGraph, kind: KernelKind, x: &Coloring, colors: MoveColors) -> Self {
        let (a, b) = colors.pair();
        let h = TwoColorSubgraph::build(graph, x, a, b);
        let filter = menu_filter(kind, colors);
        let subpaths = h.subpath_count(filter);
        let pairs = match kind {
            KernelKind::General => h.anchored_pair_count(),
            KernelKind::Regular => 0,
        };
        Menus { h, filter, kind, subpaths, pairs }
    }

    pub fn subpath_count(&self) -> usize {
        self.subpaths
    }

    pub fn pair_count(&self) -> usize {
        self.pairs
    }

    fn has_pair_branch(&self) -> bool {
        self.kind == KernelKind::General
    }

    /// Edges flipped by a selection, or `None` if it is not on the menu.
    pub fn edges(&self, sel: Selection) -> Option<Vec<EdgeId>> {
        match sel {
            Selection::None => Some(Vec::new()),
            Selection::Empty(Branch::SubPath) => (self.subpaths == 0).then(Vec::new),
            Selection::Empty(Branch::PathPair) => (self.has_pair_branch() && self.pairs == 0).then(Vec::new),
            Selection::SubPath(i) => self.h.subpath_at(self.filter, i).map(|s| self.h.edges_of(&s)),
            Selection::PathPair(i) if self.has_pair_branch() => self.h.anchored_pair_at(i).map(|(p, q)| {
                let mut e = self.h.anchored_edges(&p).to_vec();
                e.extend_from_slice(self.h.anchored_edges(&q));
                e
            }),
            Selection::PathPair(_) => None,
        }
    }

    pub fn probability(&self, sel: Selection) -> Prob {
        let b = branch_probability(self.kind);
        match sel {
            Selection::None | Selection::Empty(_) => b,
            Selection::SubPath(_) => b / ratio(self.subpaths, 1),
            Selection::PathPair(_) => b / ratio(self.pairs, 1),
        }
    }

    /// Every menu entry, in canonical order.
    pub fn all(&self) -> Vec<Selection> {
        let mut out = vec![Selection::None];
        if self.subpaths == 0 {
            out.push(Selection::Empty(Branch::SubPath));
        }
        out.extend((0..self.subpaths).map(Selection::SubPath));
        if self.has_pair_branch() {
            if self.pairs == 0 {
                out.push(Selection::Empty(Branch::PathPair));
            }
            out.extend((0..self.pairs).map(Selection::PathPair));
        }
        out
    }

    /// Entries whose flip turns `x` into `target`.
    pub fn leading_to(&self, x: &Coloring, target: &Coloring) -> Vec<Selection> {
        let diff = x.diff(target);
        if diff.is_empty() {
            return self.all().into_iter().filter(|s| matches!(s, Selection::None | Selection::Empty(_))).collect();
        }
        let (a, b) = self.h.colors;
        let swapped = |e: EdgeId| {
            let (c, d) = (x.color(e), target.color(e));
            (c == a && d == b) || (c == b && d == a)
        };
        if !diff.iter().all(|&e| swapped(e)) {
            return Vec::new();
        }
        let mut out = Vec::new();
        if let Some(s) = self.h.subpath_for_edges(&diff) {
            if let Some(i) = self.h.subpath_index(self.filter, &s) {
                out.push(Selection::SubPath(i));
            }
        }
        if self.has_pair_branch() {
            out.extend(self.h.anchored_pair_matches(&diff).into_iter().map(Selection::PathPair));
        }
        out
    }
}

pub(crate) fn apply_selection(menus: &Menus, x: &Coloring, sel: Selection) -> Result<Coloring> {
    let edges = menus
        .edges(sel)
        .ok_or_else(|| Error::WayDoesNotApply(alloc::format!("selection {sel:?} is not on the menu")))?;
    let mut out = x.clone();
    let (a, b) = menus.h.colors;
    out.flip(&edges, a, b);
    Ok(out)
}

/// The middle stage of either branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Middle {
    Action(Action),
    Pivot(Pivot),
}

fn pair_edges(graph: &BipartiteGraph, c: &Coloring, v: VertexId, (a, b): (Color, Color)) -> Vec<EdgeId> {
    graph.incident(v).iter().copied().filter(|&e| c.color(e) == a || c.color(e) == b).collect()
}

/// Middle-stage options from the almost coloring `a_col`, with their
/// conditional probabilities. An empty list means the state is outside the
/// kernel's domain.
pub(crate) fn middle_options(
    graph: &BipartiteGraph,
    kind: KernelKind,
    a_col: &Coloring,
    colors: MoveColors,
) -> Vec<(Middle, Prob)> {
    let ds = match status(graph, a_col) {
        ColoringStatus::Proper => Vec::new(),
        ColoringStatus::Almost(ds) => ds,
        ColoringStatus::Invalid(_) => return Vec::new(),
    };
    let pair = colors.pair();
    let mut out = Vec::new();
    match colors {
        MoveColors::Two(..) => {
            if !ds.is_empty() {
                let p = ratio(1, 2 * ds.len());
                for d in &ds {
                    for &e in &d.repeated_edges {
                        out.push((Middle::Action(Action::DeficientFlip { vertex: d.vertex, edge: e }), p.clone()));
                    }
                }
            } else {
                let h_edges: Vec<EdgeId> =
                    (0..graph.edge_count()).filter(|&e| a_col.color(e) == pair.0 || a_col.color(e) == pair.1).collect();
                if h_edges.is_empty() {
                    out.push((Middle::Action(Action::Nothing), one()));
                } else {
                    out.push((Middle::Action(Action::Nothing), ratio(1, 2)));
                    let p = ratio(1, 2 * h_edges.len());
                    out.extend(h_edges.into_iter().map(|e| (Middle::Action(Action::FreeFlip { edge: e }), p.clone())));
                }
            }
        }
        MoveColors::Three { distinguished: d2, .. } => {
            let n = graph.vertex_count();
            let deficient: Vec<VertexId> = ds.iter().map(|d| d.vertex).collect();
            match kind {
                KernelKind::General => {
                    let qualifying: Vec<(VertexId, Vec<EdgeId>)> = (0..n)
                        .filter(|v| !deficient.contains(v) && a_col.has_color_at(graph, *v, d2))
                        .map(|v| (v, pair_edges(graph, a_col, v, pair)))
                        .filter(|(_, f)| !f.is_empty())
                        .collect();
                    // a deficient vertex is picked with probability 1/2 whether one or two exist
                    let non_mass = match ds.len() {
                        0 => one(),
                        1 => ratio(1, 2),
                        _ => zero(),
                    };
                    for d in &ds {
                        for &e in &d.repeated_edges {
                            out.push((Middle::Pivot(Pivot::Deficient { vertex: d.vertex, edge: e }), ratio(1, 4)));
                        }
                    }
                    if ds.len() < 2 {
                        if qualifying.is_empty() {
                            out.push((Middle::Pivot(Pivot::None), non_mass));
                        } else {
                            let q = qualifying.len();
                            for (v, fs) in &qualifying {
                                let p = &non_mass / ratio(q * fs.len(), 1);
                                for &f in fs {
                                    out.push((Middle::Pivot(Pivot::NonDeficient { vertex: *v, edge: f }), p.clone()));
                                }
                            }
                        }
                    }
                }
                KernelKind::Regular => match ds.len() {
                    2 => {
                        for d in &ds {
                            if let Some(e) = a_col.edge_of_color(graph, d.vertex, d2) {
                                out.push((Middle::Pivot(Pivot::Deficient { vertex: d.vertex, edge: e }), ratio(1, 2)));
                            }
                        }
                    }
                    0 => {
                        for v in 0..n {
                            let fs = pair_edges(graph, a_col, v, pair);
                            if fs.is_empty() || !a_col.has_color_at(graph, v, d2) {
                                continue;
                            }
                            let p = ratio(1, n * fs.len());
                            for f in fs {
                                out.push((Middle::Pivot(Pivot::NonDeficient { vertex: v, edge: f }), p.clone()));
                            }
                        }
                    }
                    _ => {}
                },
            }
        }
    }
    out
}

/// Applies a middle-stage option. Returns `None` when the option leaves the
/// almost-coloring domain.
pub(crate) fn apply_middle(
    graph: &BipartiteGraph,
    kind: KernelKind,
    a_col: &Coloring,
    colors: MoveColors,
    m: Middle,
) -> Option<Coloring> {
    let (a, b) = colors.pair();
    let mut out = a_col.clone();
    match m {
        Middle::Action(Action::Nothing) | Middle::Pivot(Pivot::None) => {}
        Middle::Action(Action::DeficientFlip { edge, .. }) | Middle::Action(Action::FreeFlip { edge }) => {
            out.flip(&[edge], a, b);
        }
        Middle::Pivot(Pivot::Deficient { vertex, edge }) => {
            let d2 = match colors {
                MoveColors::Three { distinguished, .. } => distinguished,
                MoveColors::Two(..) => return None,
            };
            let walk = match kind {
                KernelKind::General => {
                    let tilde = a_col.color(edge);
                    maximal_through(graph, a_col, edge, (tilde, d2), None)
                }
                KernelKind::Regular => {
                    let tilde = repeated_color(graph, a_col, vertex)?;
                    maximal_from(graph, a_col, vertex, edge, (d2, tilde))
                }
            };
            walk.flip(&mut out);
        }
        Middle::Pivot(Pivot::NonDeficient { vertex, edge: f }) => {
            let d2 = match colors {
                MoveColors::Three { distinguished, .. } => distinguished,
                MoveColors::Two(..) => return None,
            };
            let e = a_col.edge_of_color(graph, vertex, d2)?;
            let tilde = a_col.color(f);
            let excluded = match kind {
                KernelKind::General => Some(f),
                KernelKind::Regular => None,
            };
            maximal_through(graph, a_col, e, (d2, tilde), excluded).flip(&mut out);
        }
    }
    match status(graph, &out) {
        ColoringStatus::Invalid(_) => None,
        _ => Some(out),
    }
}

fn repeated_color(graph: &BipartiteGraph, c: &Coloring, v: VertexId) -> Option<Color> {
    let inc = graph.incident(v);
    inc.iter().enumerate().find_map(|(i, &e)| inc[i + 1..].iter().any(|&f| c.color(f) == c.color(e)).then(|| c.color(e)))
}

/// One leaf of the repair tree.
#[derive(Debug, Clone)]
pub(crate) struct RepairLeaf {
    pub picks: Vec<RepairPick>,
    pub probability: Prob,
    /// `None` when the repair fails.
    pub result: Option<Coloring>,
}

/// All repair pick sequences from `b_col`.
pub(crate) fn repair_leaves(graph: &BipartiteGraph, b_col: &Coloring, ctx: ColorContext) -> Vec<RepairLeaf> {
    let mut out = Vec::new();
    let mut picks = Vec::new();
    repair_rec(graph, b_col.clone(), ctx, &mut picks, &mut out);
    out
}

fn repair_rec(
    graph: &BipartiteGraph,
    cur: Coloring,
    ctx: ColorContext,
    picks: &mut Vec<RepairPick>,
    out: &mut Vec<RepairLeaf>,
) {
    let leaf = |picks: &Vec<RepairPick>, result| RepairLeaf {
        picks: picks.clone(),
        probability: ratio(1, 1 << picks.len()),
        result,
    };
    match next_repair(graph, &cur, ctx) {
        Ok(None) => out.push(leaf(picks, Some(cur))),
        Err(_) => out.push(leaf(picks, None)),
        Ok(Some(_)) if picks.len() == MAX_REPAIR_WALKS => out.push(leaf(picks, None)),
        Ok(Some((d, partner))) => {
            for &e in &d.repeated_edges {
                let mut next = cur.clone();
                maximal_from(graph, &cur, d.vertex, e, (d.repeated_color, partner)).flip(&mut next);
                picks.push(RepairPick { vertex: d.vertex, edge: e });
                repair_rec(graph, next, ctx, picks, out);
                picks.pop();
            }
        }
    }
}

/// Probability that the repair stage turns `b_col` into `target`.
pub(crate) fn repair_probability(graph: &BipartiteGraph, b_col: &Coloring, ctx: ColorContext, target: &Coloring) -> Prob {
    repair_leaves(graph, b_col, ctx)
        .into_iter()
        .filter(|l| l.result.as_ref() == Some(target))
        .fold(zero(), |acc, l| acc + l.probability)
}

/// Probability that the middle stage turns `a_col` into `target`, with the
/// matching options.
pub(crate) fn middle_to(
    graph: &BipartiteGraph,
    kind: KernelKind,
    a_col: &Coloring,
    colors: MoveColors,
    target: &Coloring,
) -> (Prob, Vec<Middle>) {
    let mut p = zero();
    let mut ms = Vec::new();
    for (m, q) in middle_options(graph, kind, a_col, colors) {
        if apply_middle(graph, kind, a_col, colors, m).as_ref() == Some(target) {
            p += q;
            ms.push(m);
        }
    }
    (p, ms)
}

pub(crate) fn build_way(colors: MoveColors, selection: Selection, middle: Middle, repair: Vec<RepairPick>) -> Way {
    match (colors, middle) {
        (MoveColors::Two(a, b), Middle::Action(action)) => Way::TwoColor { colors: (a, b), selection, action, repair },
        (MoveColors::Three { pair, distinguished }, Middle::Pivot(pivot)) => {
            Way::ThreeColor { colors: pair, distinguished, selection, pivot, repair }
        }
        _ => unreachable!("middle stage does not match the color choice"),
    }
}

/// A target for [`find_way`]: the colors and the sequence of distinct
/// colorings the proposal must pass through, starting at its source.
#[derive(Debug, Clone)]
pub struct WaySearch {
    pub colors: MoveColors,
    pub path: Vec<Coloring>,
}

/// Stage boundaries `(i, j)`: selection ends at `path[i]`, the middle stage
/// at `path[j]`, repair at the last state.
pub(crate) fn stage_splits(len: usize) -> Vec<(usize, usize)> {
    let last = len - 1;
    let mut out = Vec::new();
    for i in 0..=1.min(last) {
        for j in i..=(i + 1).min(last) {
            if last - j <= 1 {
                out.push((i, j));
            }
        }
    }
    out
}

/// The first way (in canonical order) that starts at `path[0]` and passes
/// through exactly the given distinct states.
pub fn find_way(graph: &BipartiteGraph, kind: KernelKind, search: &WaySearch) -> Option<Way> {
    let path = &search.path;
    if path.is_empty() || path.len() > 4 {
        return None;
    }
    let colors = search.colors;
    let x = &path[0];
    let menus = Menus::new(graph, kind, x, colors);
    for (i, j) in stage_splits(path.len()) {
        let Some(&sel) = menus.leading_to(x, &path[i]).first() else { continue };
        let (_, ms) = middle_to(graph, kind, &path[i], colors, &path[j]);
        let Some(&m) = ms.first() else { continue };
        let target = path.last().unwrap();
        let leaf = repair_leaves(graph, &path[j], colors.context()).into_iter().find(|l| l.result.as_ref() == Some(target));
        if let Some(leaf) = leaf {
            return Some(build_way(colors, sel, m, leaf.picks));
        }
    }
    None
}
