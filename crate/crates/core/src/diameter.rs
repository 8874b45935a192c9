//! Explicit chain paths between any two proper colorings.
//!
//! Colors of the target are fixed one at a time in ascending order. For
//! the current color `c`, the symmetric difference of the `c` classes
//! splits into paths and cycles; each is handled by [`component_steps`],
//! which walks along it recoloring `c` and a partner color `c'` and flipping
//! `(c', c'')` walks where a third color is in the way. Every intermediate
//! coloring of that walk is proper or almost, and each step is packaged as
//! one chain move: the move's selection re-creates the current almost
//! coloring, its middle stage performs the step and its repair returns to
//! a proper coloring. Fixed colors are never used again, so once only two
//! free colors remain the rest is finished by flipping whole two-color
//! components.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::coloring::{is_proper, status, Color, Coloring, ColoringStatus};
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, EdgeId, VertexId};
use crate::kernel::stages::{build_way, middle_to, repair_leaves, Menus};
use crate::kernel::{find_way, way_probability, KernelKind, MoveColors, Way, WaySearch};
use crate::walk::{maximal_from, maximal_through, Walk};

/// One step of the walk along a component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ElementaryStep {
    Recolor { edge: EdgeId, from: Color, to: Color },
    /// Flip of a maximal two-color walk that avoids color `c`.
    Flip(Walk),
}

impl ElementaryStep {
    pub fn apply(&self, coloring: &mut Coloring) {
        match self {
            ElementaryStep::Recolor { edge, to, .. } => coloring.set(*edge, *to),
            ElementaryStep::Flip(w) => w.flip(coloring),
        }
    }
}

/// Orders the edges of a connected max-degree-2 edge set as a walk from
/// vertex `start`. Returns the vertex sequence and edge sequence.
fn order_component(graph: &BipartiteGraph, edges: &[EdgeId], start: VertexId, first: EdgeId) -> (Vec<VertexId>, Vec<EdgeId>) {
    let mut vs = vec![start];
    let mut es = vec![first];
    let mut cur = graph.other_end(first, start);
    let mut via = first;
    while es.len() < edges.len() {
        let next = graph.incident(cur).iter().copied().find(|e| *e != via && edges.contains(e));
        match next {
            Some(e) => {
                vs.push(cur);
                es.push(e);
                cur = graph.other_end(e, cur);
                via = e;
            }
            None => break,
        }
    }
    vs.push(cur);
    (vs, es)
}

fn shared_vertex(graph: &BipartiteGraph, a: EdgeId, b: EdgeId) -> VertexId {
    let (u, w) = graph.endpoints(a);
    let (x, y) = graph.endpoints(b);
    if u == x || u == y {
        u
    } else {
        w
    }
}

/// Number of deficient vertices, or `None` for an invalid coloring.
fn deficiency_count(graph: &BipartiteGraph, c: &Coloring) -> Option<usize> {
    match status(graph, c) {
        ColoringStatus::Proper => Some(0),
        ColoringStatus::Almost(ds) => Some(ds.len()),
        ColoringStatus::Invalid(_) => None,
    }
}

/// Where the walk along a component begins: the start vertex, the first
/// edge and the partner color `c'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WalkStart {
    pub vertex: VertexId,
    pub edge: EdgeId,
    pub partner: Color,
}

/// Checks that `n` is a path or cycle alternating between color `c` and
/// other colors in `palette` (which contains `c`) and lists the admissible
/// starts, the default one first.
pub fn walk_starts(
    graph: &BipartiteGraph,
    coloring: &Coloring,
    n: &[EdgeId],
    c: Color,
    palette: &[Color],
) -> Result<Vec<WalkStart>> {
    if palette.len() < 3 || !palette.contains(&c) {
        return Err(Error::Contract("the walk needs at least three usable colors including c".into()));
    }
    if n.is_empty() {
        return Ok(Vec::new());
    }
    let mut deg: alloc::collections::BTreeMap<VertexId, usize> = alloc::collections::BTreeMap::new();
    for &e in n {
        if !palette.contains(&coloring.color(e)) {
            return Err(Error::Contract(format!("edge {e} has a fixed color")));
        }
        let (u, w) = graph.endpoints(e);
        *deg.entry(u).or_default() += 1;
        *deg.entry(w).or_default() += 1;
    }
    if let Some((&v, _)) = deg.iter().find(|(_, &d)| d > 2) {
        return Err(Error::Contract(format!("vertex {v} has degree above two in the component")));
    }
    let ends: Vec<VertexId> = deg.iter().filter(|(_, &d)| d == 1).map(|(&v, _)| v).collect();
    let is_c = |e: EdgeId| coloring.color(e) == c;
    let end_edge = |v: VertexId| graph.incident(v).iter().copied().find(|e| n.contains(e)).unwrap();
    let unfixed_degree = |v: VertexId| graph.incident(v).iter().filter(|&&e| palette.contains(&coloring.color(e))).count();

    let (v0, e0) = match ends.first() {
        Some(&v) => (v, end_edge(v)),
        None => {
            let e = n[0];
            (graph.endpoints(e).0, e)
        }
    };
    let (_, es) = order_component(graph, n, v0, e0);
    if es.len() != n.len() {
        return Err(Error::Contract("the component is not connected".into()));
    }
    let closed = ends.is_empty();
    let pairs = es.windows(2).map(|w| (w[0], w[1])).chain(closed.then(|| (es[es.len() - 1], es[0])));
    for (x, y) in pairs {
        if is_c(x) == is_c(y) {
            return Err(Error::Contract(format!("edges {x} and {y} do not alternate with color {c}")));
        }
    }

    let mut starts = Vec::new();
    if closed {
        let mut firsts: Vec<EdgeId> = n.iter().copied().filter(|&e| !is_c(e)).collect();
        firsts.sort_unstable();
        for e in firsts {
            let (u, w) = graph.endpoints(e);
            for v in [u.min(w), u.max(w)] {
                starts.push(WalkStart { vertex: v, edge: e, partner: coloring.color(e) });
            }
        }
    } else {
        for &v in &ends {
            let e = end_edge(v);
            if is_c(e) {
                if unfixed_degree(v) >= palette.len() {
                    return Err(Error::Contract(format!("end vertex {v} has full degree")));
                }
            } else if graph.incident(v).iter().any(|&f| coloring.color(f) == c) {
                return Err(Error::Contract(format!("the path extends with a c edge at vertex {v}")));
            }
        }
        for &v in &ends {
            let e = end_edge(v);
            if !is_c(e) {
                starts.push(WalkStart { vertex: v, edge: e, partner: coloring.color(e) });
            }
        }
        // partners also absent across the first edge come first
        let mut from_c = Vec::new();
        for &v in &ends {
            let e = end_edge(v);
            if is_c(e) {
                let u = graph.other_end(e, v);
                for &m in palette.iter().filter(|&&m| m != c && !coloring.has_color_at(graph, v, m)) {
                    from_c.push((coloring.has_color_at(graph, u, m), WalkStart { vertex: v, edge: e, partner: m }));
                }
            }
        }
        from_c.sort_by_key(|(blocked, _)| *blocked);
        starts.extend(from_c.into_iter().map(|(_, s)| s));
    }
    Ok(starts)
}

/// The walk along component `n` that toggles membership of its edges in
/// color class `c`, using only colors in `palette`, from the default start.
/// Every returned step yields a proper or almost coloring; after the last
/// one the coloring is proper and its `c` class differs from that of
/// `coloring` exactly on `n`.
pub fn component_steps(
    graph: &BipartiteGraph,
    coloring: &Coloring,
    n: &[EdgeId],
    c: Color,
    palette: &[Color],
) -> Result<Vec<ElementaryStep>> {
    match walk_starts(graph, coloring, n, c, palette)?.first() {
        Some(&s) => component_steps_from(graph, coloring, n, c, palette, s),
        None => Ok(Vec::new()),
    }
}

/// [`component_steps`] from a given start, which must come from
/// [`walk_starts`].
pub fn component_steps_from(
    graph: &BipartiteGraph,
    coloring: &Coloring,
    n: &[EdgeId],
    c: Color,
    palette: &[Color],
    start: WalkStart,
) -> Result<Vec<ElementaryStep>> {
    component_walks(graph, coloring, n, c, palette, start, 1)
        .pop()
        .ok_or_else(|| Error::Contract(format!("the walk from vertex {} gets stuck", start.vertex)))
}

/// Up to `cap` complete walks from `start`. Where several flips keep the
/// coloring almost, all are tried, fewest deficiencies first.
pub fn component_walks(
    graph: &BipartiteGraph,
    coloring: &Coloring,
    n: &[EdgeId],
    c: Color,
    palette: &[Color],
    start: WalkStart,
    cap: usize,
) -> Vec<Vec<ElementaryStep>> {
    let (_, es) = order_component(graph, n, start.vertex, start.edge);
    let mut w = Walker { graph, c, c1: start.partner, palette, es: &es, cap, out: Vec::new() };
    w.go(0, coloring.clone(), &mut Vec::new());
    w.out
}

struct Walker<'a> {
    graph: &'a BipartiteGraph,
    c: Color,
    c1: Color,
    palette: &'a [Color],
    es: &'a [EdgeId],
    cap: usize,
    out: Vec<Vec<ElementaryStep>>,
}

impl Walker<'_> {
    /// Flips that are followed by a recolor (`Some(e)`) or that finish the
    /// walk, each with the deficiency count it leaves.
    fn flip_options(&self, cur: &Coloring, i: usize) -> Vec<(usize, Walk)> {
        let graph = self.graph;
        let mut out = Vec::new();
        if i < self.es.len() {
            let e = self.es[i];
            let col = cur.color(e);
            // the walk avoids the previous edge unless it would end next to it
            let prev = (i > 0).then(|| self.es[i - 1]);
            let mut excluded = vec![prev];
            if let Some(p) = prev {
                let v = shared_vertex(graph, p, e);
                excluded.extend(graph.incident(v).iter().filter(|&&f| f != p && cur.color(f) == self.c1).map(|&f| Some(f)));
            }
            excluded.push(None);
            for x in excluded {
                let w = maximal_through(graph, cur, e, (self.c1, col), x);
                let mut t = cur.clone();
                w.flip(&mut t);
                if deficiency_count(graph, &t).is_none() {
                    continue;
                }
                t.set(e, self.c);
                if let Some(d) = deficiency_count(graph, &t) {
                    if !out.iter().any(|(_, o): &(usize, Walk)| o.edges == w.edges) {
                        out.push((d, w));
                    }
                }
            }
        } else if let ColoringStatus::Almost(ds) = status(graph, cur) {
            for d in &ds {
                for m in self.palette.iter().copied().filter(|&m| m != self.c && d.missing_colors.contains(&m)) {
                    for &e in &d.repeated_edges {
                        let w = maximal_from(graph, cur, d.vertex, e, (d.repeated_color, m));
                        let mut t = cur.clone();
                        w.flip(&mut t);
                        if let Some(n) = deficiency_count(graph, &t) {
                            if n < ds.len() {
                                out.push((n, w));
                            }
                        }
                    }
                }
            }
        }
        out.sort_by_key(|(d, _)| *d);
        out
    }

    fn go(&mut self, i: usize, cur: Coloring, steps: &mut Vec<ElementaryStep>) {
        if self.out.len() >= self.cap {
            return;
        }
        if i == self.es.len() && is_proper(self.graph, &cur) {
            self.out.push(steps.clone());
            return;
        }
        let recolor = |cur: &Coloring, steps: &mut Vec<ElementaryStep>, e, from, to| {
            let mut t = cur.clone();
            let s = ElementaryStep::Recolor { edge: e, from, to };
            s.apply(&mut t);
            steps.push(s);
            t
        };
        if i < self.es.len() {
            let e = self.es[i];
            let col = cur.color(e);
            if col == self.c || col == self.c1 {
                let to = if col == self.c { self.c1 } else { self.c };
                let t = recolor(&cur, steps, e, col, to);
                self.go(i + 1, t, steps);
                steps.pop();
                return;
            }
        }
        for (_, w) in self.flip_options(&cur, i) {
            let mut t = cur.clone();
            w.flip(&mut t);
            steps.push(ElementaryStep::Flip(w));
            if i < self.es.len() {
                let t2 = recolor(&t, steps, self.es[i], self.c1, self.c);
                self.go(i + 1, t2, steps);
                steps.pop();
            } else {
                self.go(i, t, steps);
            }
            steps.pop();
        }
    }
}

/// Walks tried per start when packaging a component.
const WALK_VARIANTS: usize = 16;

/// The diameter bound for a kernel: `6|E|` moves in general, `3|E|` on
/// regular graphs.
pub fn length_bound(kind: KernelKind, edges: usize) -> usize {
    match kind {
        KernelKind::General => 6 * edges,
        KernelKind::Regular => 3 * edges,
    }
}

/// Large milestones mark a color class that now agrees with the target;
/// small milestones mark a finished component.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Milestone {
    Large { color: Color, after_moves: usize },
    Small { color: Color, after_moves: usize },
}

#[derive(Debug, Clone)]
pub struct TransformPlan {
    pub source: Coloring,
    pub target: Coloring,
    pub moves: Vec<Way>,
    /// `states[i]` is the coloring after `moves[i]`.
    pub states: Vec<Coloring>,
    pub milestones: Vec<Milestone>,
    /// Total edge count of the components walked edge by edge.
    pub component_edges: usize,
}

impl TransformPlan {
    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Replays every move and checks that it has positive probability and
    /// leads to the recorded state, ending at the target.
    pub fn verify(&self, graph: &BipartiteGraph, k: usize, kind: KernelKind) -> Result<()> {
        let mut cur = self.source.clone();
        for (i, (w, s)) in self.moves.iter().zip(&self.states).enumerate() {
            let p = way_probability(graph, k, kind, &cur, w)?;
            if p <= crate::prob::zero() {
                return Err(Error::Contract(format!("move {i} has probability zero")));
            }
            let next = crate::kernel::apply_way(graph, k, kind, &cur, w)?;
            if &next != s || !is_proper(graph, &next) {
                return Err(Error::Contract(format!("move {i} does not reach the recorded state")));
            }
            cur = next;
        }
        if cur != self.target {
            return Err(Error::Contract("the plan does not end at the target".into()));
        }
        Ok(())
    }
}

/// Edge sets of the non-trivial components of the symmetric difference of
/// the `c` classes, ordered by smallest vertex.
fn difference_components(graph: &BipartiteGraph, a: &Coloring, b: &Coloring, c: Color) -> Vec<Vec<EdgeId>> {
    let diff: BTreeSet<EdgeId> = (0..graph.edge_count()).filter(|&e| (a.color(e) == c) != (b.color(e) == c)).collect();
    components_of(graph, &diff)
}

fn components_of(graph: &BipartiteGraph, set: &BTreeSet<EdgeId>) -> Vec<Vec<EdgeId>> {
    let mut seen = BTreeSet::new();
    let mut out: Vec<(VertexId, Vec<EdgeId>)> = Vec::new();
    for &e0 in set {
        if seen.contains(&e0) {
            continue;
        }
        let mut comp = vec![e0];
        seen.insert(e0);
        let mut i = 0;
        while i < comp.len() {
            let (u, w) = graph.endpoints(comp[i]);
            for v in [u, w] {
                for &f in graph.incident(v) {
                    if set.contains(&f) && seen.insert(f) {
                        comp.push(f);
                    }
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        let low = comp.iter().flat_map(|&e| {
            let (u, w) = graph.endpoints(e);
            [u, w]
        });
        out.push((low.min().unwrap(), comp));
    }
    out.sort();
    out.into_iter().map(|(_, c)| c).collect()
}

/// Chain moves realizing the states `almost[1..]` one per move, starting
/// from the proper coloring `almost[0]`, with the proper coloring after
/// each move. Each move's selection re-creates the current almost coloring,
/// its middle stage performs the step and its repair restores properness.
pub fn package(graph: &BipartiteGraph, k: usize, kind: KernelKind, almost: &[Coloring]) -> Option<(Vec<Way>, Vec<Coloring>)> {
    let mut failed = BTreeSet::new();
    let mut ways = Vec::new();
    let mut states = Vec::new();
    if package_rec(graph, k, kind, almost, 0, &almost[0], &mut failed, &mut ways, &mut states) {
        Some((ways, states))
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn package_rec(
    graph: &BipartiteGraph,
    k: usize,
    kind: KernelKind,
    almost: &[Coloring],
    t: usize,
    x: &Coloring,
    failed: &mut BTreeSet<(usize, Vec<Color>)>,
    ways: &mut Vec<Way>,
    states: &mut Vec<Coloring>,
) -> bool {
    if t + 1 == almost.len() {
        return *x == almost[t];
    }
    if failed.contains(&(t, x.colors().to_vec())) {
        return false;
    }
    let (a_t, a_next) = (&almost[t], &almost[t + 1]);
    // the step happens in the middle stage, or in the selection when it
    // joins two proper colorings
    let mut splits = vec![(a_t, a_next)];
    if x == a_t && is_proper(graph, a_next) {
        splits.push((a_next, a_next));
    }
    for colors in MoveColors::all(k) {
        let menus = Menus::new(graph, kind, x, colors);
        let Some((sel, m)) = splits.iter().find_map(|&(s_target, m_target)| {
            let sel = *menus.leading_to(x, s_target).first()?;
            let (_, ms) = middle_to(graph, kind, s_target, colors, m_target);
            Some((sel, *ms.first()?))
        }) else {
            continue;
        };
        for leaf in repair_leaves(graph, a_next, colors.context()) {
            let Some(y) = leaf.result else { continue };
            ways.push(build_way(colors, sel, m, leaf.picks));
            states.push(y.clone());
            if package_rec(graph, k, kind, almost, t + 1, &y, failed, ways, states) {
                return true;
            }
            ways.pop();
            states.pop();
        }
    }
    failed.insert((t, x.colors().to_vec()));
    false
}

/// A single move taking `x` to `y`, if one exists.
fn direct_move(graph: &BipartiteGraph, k: usize, kind: KernelKind, x: &Coloring, y: &Coloring) -> Option<Way> {
    MoveColors::all(k)
        .into_iter()
        .find_map(|colors| find_way(graph, kind, &WaySearch { colors, path: vec![x.clone(), y.clone()] }))
}

/// A sequence of chain moves from `c1` to `c2`. Colors of `c2` are fixed in
/// ascending order while at least three colors are still free; the rest is
/// finished by flipping two-color components.
pub fn transform_plan(graph: &BipartiteGraph, k: usize, kind: KernelKind, c1: &Coloring, c2: &Coloring) -> Result<TransformPlan> {
    c1.check_against(graph)?;
    c2.check_against(graph)?;
    if c1.k() != k || c2.k() != k {
        return Err(Error::Contract(format!("both colorings must use k = {k} colors")));
    }
    if !is_proper(graph, c1) || !is_proper(graph, c2) {
        return Err(Error::NotProper);
    }
    let mut plan = TransformPlan {
        source: c1.clone(),
        target: c2.clone(),
        moves: Vec::new(),
        states: Vec::new(),
        milestones: Vec::new(),
        component_edges: 0,
    };
    let mut cur = c1.clone();
    let mut palette: Vec<Color> = (0..k as Color).collect();
    let order: Vec<Color> = (0..k as Color).filter(|&c| (0..graph.edge_count()).any(|e| c2.color(e) == c)).collect();
    for &c in &order {
        if palette.len() < 3 {
            break;
        }
        for comp in difference_components(graph, &cur, c2, c) {
            plan.component_edges += comp.len();
            let bound = (3 * comp.len()).div_ceil(2);
            let mut found = None;
            for start in walk_starts(graph, &cur, &comp, c, &palette)? {
                for steps in component_walks(graph, &cur, &comp, c, &palette, start, WALK_VARIANTS) {
                    if steps.len() > bound {
                        continue;
                    }
                    let mut almost = vec![cur.clone()];
                    for s in &steps {
                        let mut next = almost.last().unwrap().clone();
                        s.apply(&mut next);
                        almost.push(next);
                    }
                    if let Some(p) = package(graph, k, kind, &almost) {
                        found = Some((p, almost));
                        break;
                    }
                }
                if found.is_some() {
                    break;
                }
            }
            let ((ways, states), mut almost) = found.ok_or_else(|| {
                Error::Contract(format!("no chain moves realize the walk for color {c} on edges {comp:?}"))
            })?;
            plan.moves.extend(ways);
            plan.states.extend(states);
            cur = almost.pop().unwrap();
            plan.milestones.push(Milestone::Small { color: c, after_moves: plan.moves.len() });
        }
        plan.milestones.push(Milestone::Large { color: c, after_moves: plan.moves.len() });
        palette.retain(|&x| x != c);
    }
    // at most two free colors remain: flip whole two-color components
    let rest: BTreeSet<EdgeId> = (0..graph.edge_count()).filter(|&e| cur.color(e) != c2.color(e)).collect();
    for comp in components_of(graph, &rest) {
        let mut next = cur.clone();
        for &e in &comp {
            next.set(e, c2.color(e));
        }
        let w = direct_move(graph, k, kind, &cur, &next)
            .ok_or_else(|| Error::Contract(format!("no single move flips the component {comp:?}")))?;
        plan.moves.push(w);
        plan.states.push(next.clone());
        cur = next;
    }
    if cur != *c2 {
        return Err(Error::Contract("the plan did not reach the target".into()));
    }
    Ok(plan)
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::initial::initial_coloring;

    /// K_{4,4} minus a perfect matching, 3-colored, with the 4-cycle of
    /// the worked example (red 0, blue 2, green 1).
    fn example() -> (BipartiteGraph, Coloring, Vec<EdgeId>) {
        let pairs: Vec<_> = (0..4).flat_map(|i| (0..4).map(move |j| (i, j))).filter(|(i, j)| i != j).collect();
        let g = BipartiteGraph::new(4, 4, &pairs).unwrap();
        let l = Coloring::new(vec![0, 1, 2, 0, 2, 1, 2, 1, 0, 1, 2, 0], 3).unwrap();
        (g, l, vec![0, 2, 7, 8])
    }

    #[test]
    fn worked_example_walk() {
        let (g, l, n) = example();
        let steps = component_steps(&g, &l, &n, 0, &[0, 1, 2]).unwrap();
        assert_eq!(steps.len(), 5);
        assert_eq!(steps[0], ElementaryStep::Recolor { edge: 2, from: 2, to: 0 });
        assert_eq!(steps[1], ElementaryStep::Recolor { edge: 8, from: 0, to: 2 });
        match &steps[2] {
            ElementaryStep::Flip(w) => {
                assert!(w.closed);
                assert_eq!(w.colors, (2, 1));
                assert!(w.edges.contains(&7));
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(steps[3], ElementaryStep::Recolor { edge: 7, from: 2, to: 0 });
        assert_eq!(steps[4], ElementaryStep::Recolor { edge: 0, from: 0, to: 2 });
        let mut cur = l.clone();
        for s in &steps {
            s.apply(&mut cur);
            assert!(!matches!(status(&g, &cur), ColoringStatus::Invalid(_)));
        }
        let diff: Vec<EdgeId> = (0..12).filter(|&e| (l.color(e) == 0) != (cur.color(e) == 0)).collect();
        assert_eq!(diff, n);
    }

    #[test]
    fn single_edge() {
        // path u0 - w0 - u1 with the first edge colored 0
        let g = BipartiteGraph::new(2, 1, &[(0, 0), (1, 0)]).unwrap();
        let l = Coloring::new(vec![0, 1], 3).unwrap();
        let steps = component_steps(&g, &l, &[0], 0, &[0, 1, 2]).unwrap();
        assert_eq!(steps, vec![ElementaryStep::Recolor { edge: 0, from: 0, to: 2 }]);
    }

    #[test]
    fn contract_errors() {
        let g = BipartiteGraph::new(2, 1, &[(0, 0), (1, 0)]).unwrap();
        let l = Coloring::new(vec![0, 1], 3).unwrap();
        // edge 1 is not colored 0 but its end vertex already has a 0 edge
        let e = component_steps(&g, &l, &[1], 0, &[0, 1, 2]).unwrap_err();
        assert!(matches!(e, Error::Contract(ref m) if m.contains("vertex 2")), "{e}");
        assert!(component_steps(&g, &l, &[0], 0, &[0, 1]).is_err());
        assert!(component_steps(&g, &l, &[0, 1], 0, &[0, 1, 2]).is_ok());
    }

    #[test]
    fn identical_colorings() {
        let g = BipartiteGraph::complete(3, 3);
        let c = initial_coloring(&g, 3).unwrap();
        let plan = transform_plan(&g, 3, KernelKind::General, &c, &c).unwrap();
        assert!(plan.is_empty());
        plan.verify(&g, 3, KernelKind::General).unwrap();
    }

    #[test]
    fn rejects_mismatched_inputs() {
        let g = BipartiteGraph::complete(3, 3);
        let c = initial_coloring(&g, 3).unwrap();
        let d = initial_coloring(&g, 4).unwrap();
        assert!(transform_plan(&g, 3, KernelKind::General, &c, &d).is_err());
        let bad = Coloring::new(vec![0; 9], 3).unwrap();
        assert!(matches!(transform_plan(&g, 3, KernelKind::General, &c, &bad), Err(Error::NotProper)));
    }

    #[test]
    fn k33_all_pairs_regular() {
        let g = BipartiteGraph::complete(3, 3);
        let all = crate::oracle::enumerate(&g, 3, None, false).unwrap();
        for a in &all.colorings {
            for b in &all.colorings {
                let plan = transform_plan(&g, 3, KernelKind::Regular, a, b).unwrap();
                assert!(plan.len() <= length_bound(KernelKind::Regular, 9));
                plan.verify(&g, 3, KernelKind::Regular).unwrap();
            }
        }
    }
}
