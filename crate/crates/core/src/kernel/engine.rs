//! Sampling, replaying and scoring proposals.

use alloc::vec::Vec;

use rand::Rng;

use super::stages::{
    apply_middle, apply_selection, build_way, check_colors, color_probability, find_way, middle_options, middle_to,
    repair_leaves, repair_probability, stage_splits, Menus, Middle, WaySearch,
};
use super::{Branch, KernelKind, MoveColors, Selection, Way};
use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;
use crate::prob::{ratio, to_f64, zero, Prob};
use crate::walk::{maximal_from, next_repair, RepairPick, MAX_REPAIR_WALKS};

/// The colorings a proposal passes through: the source, after selection,
/// after the middle stage and after repair. Lazy proposals hold only the
/// source; aborted ones stop at the failing stage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trajectory {
    pub colors: Option<MoveColors>,
    pub states: Vec<Coloring>,
}

impl Trajectory {
    /// The states with consecutive repeats removed.
    pub fn essential(&self) -> Vec<Coloring> {
        let mut out: Vec<Coloring> = Vec::with_capacity(self.states.len());
        for s in &self.states {
            if out.last() != Some(s) {
                out.push(s.clone());
            }
        }
        out
    }
}

/// How a proposal ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Proper(Coloring),
    /// The middle stage left the almost-coloring domain, or the repair did
    /// not reach a proper coloring. The chain stays put.
    Aborted(&'static str),
}

#[derive(Debug, Clone)]
pub struct Proposal {
    pub from: Coloring,
    pub way: Way,
    /// Probability that the kernel emits exactly `way` from `from`.
    pub probability: Prob,
    pub trajectory: Trajectory,
    pub outcome: Outcome,
}

impl Proposal {
    /// The proposed coloring, unless the proposal aborted.
    pub fn to(&self) -> Option<&Coloring> {
        match &self.outcome {
            Outcome::Proper(c) => Some(c),
            Outcome::Aborted(_) => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Replay {
    pub trajectory: Trajectory,
    pub outcome: Outcome,
    pub probability: Prob,
}

/// A way together with its probability and result.
#[derive(Debug, Clone)]
pub struct EnumeratedWay {
    pub way: Way,
    pub probability: Prob,
    pub outcome: Outcome,
}

fn middle_of(way: &Way) -> Middle {
    match way {
        Way::TwoColor { action, .. } => Middle::Action(*action),
        Way::ThreeColor { pivot, .. } => Middle::Pivot(*pivot),
        Way::Lazy => unreachable!(),
    }
}

/// Replays a way from `from`, reporting every intermediate coloring.
pub fn replay(graph: &BipartiteGraph, k: usize, kind: KernelKind, from: &Coloring, way: &Way) -> Result<Replay> {
    let Some(colors) = way.move_colors() else {
        return Ok(Replay {
            trajectory: Trajectory { colors: None, states: alloc::vec![from.clone()] },
            outcome: Outcome::Proper(from.clone()),
            probability: color_probability(k, None),
        });
    };
    check_colors(k, colors)?;
    let selection = way.selection().expect("non-lazy way");
    let menus = Menus::new(graph, kind, from, colors);
    let a_col = apply_selection(&menus, from, selection)?;
    let mut probability = color_probability(k, Some(colors)) * menus.probability(selection);
    let middle = middle_of(way);
    let (_, p) = middle_options(graph, kind, &a_col, colors)
        .into_iter()
        .find(|(m, _)| *m == middle)
        .ok_or_else(|| Error::WayDoesNotApply(alloc::format!("{middle:?} is not available after the selection")))?;
    probability *= p;
    let mut trajectory = Trajectory { colors: Some(colors), states: alloc::vec![from.clone(), a_col.clone()] };
    let Some(b_col) = apply_middle(graph, kind, &a_col, colors, middle) else {
        if !way.repair().is_empty() {
            return Err(Error::WayDoesNotApply("repair picks after an aborted middle stage".into()));
        }
        return Ok(Replay { trajectory, outcome: Outcome::Aborted("middle"), probability });
    };
    trajectory.states.push(b_col.clone());
    let leaf = repair_leaves(graph, &b_col, colors.context())
        .into_iter()
        .find(|l| l.picks == way.repair())
        .ok_or_else(|| Error::WayDoesNotApply(alloc::format!("repair picks {:?} do not apply", way.repair())))?;
    probability *= leaf.probability;
    let outcome = match leaf.result {
        Some(y) => {
            trajectory.states.push(y.clone());
            Outcome::Proper(y)
        }
        None => Outcome::Aborted("repair"),
    };
    Ok(Replay { trajectory, outcome, probability })
}

/// Probability that the kernel emits `way` from `from`.
pub fn way_probability(graph: &BipartiteGraph, k: usize, kind: KernelKind, from: &Coloring, way: &Way) -> Result<Prob> {
    Ok(replay(graph, k, kind, from, way)?.probability)
}

/// The proper coloring a way produces.
pub fn apply_way(graph: &BipartiteGraph, k: usize, kind: KernelKind, from: &Coloring, way: &Way) -> Result<Coloring> {
    match replay(graph, k, kind, from, way)?.outcome {
        Outcome::Proper(c) => Ok(c),
        Outcome::Aborted(stage) => {
            Err(Error::WayDoesNotApply(alloc::format!("the way aborts in the {stage} stage and yields no coloring")))
        }
    }
}

fn sample_colors<R: Rng + ?Sized>(k: usize, rng: &mut R) -> Option<MoveColors> {
    let branch = rng.gen_range(0..4);
    let distinct = |rng: &mut R, n: usize| -> (Color, Color) {
        let a = rng.gen_range(0..n);
        let mut b = rng.gen_range(0..n - 1);
        if b >= a {
            b += 1;
        }
        (a.min(b) as Color, a.max(b) as Color)
    };
    match branch {
        2 if k >= 2 => {
            let (a, b) = distinct(rng, k);
            Some(MoveColors::Two(a, b))
        }
        3 if k >= 3 => {
            // a uniform triple with a uniform distinguished member is a
            // uniform distinguished color plus a uniform pair of the rest
            let d = rng.gen_range(0..k) as Color;
            let (a, b) = distinct(rng, k - 1);
            let lift = |c: Color| if c >= d { c + 1 } else { c };
            Some(MoveColors::Three { pair: (lift(a), lift(b)), distinguished: d })
        }
        _ => None,
    }
}

fn sample_selection<R: Rng + ?Sized>(menus: &Menus, kind: KernelKind, rng: &mut R) -> Selection {
    let branches = match kind {
        KernelKind::General => 3,
        KernelKind::Regular => 2,
    };
    match rng.gen_range(0..branches) {
        0 => Selection::None,
        1 => match menus.subpath_count() {
            0 => Selection::Empty(Branch::SubPath),
            n => Selection::SubPath(rng.gen_range(0..n)),
        },
        _ => match menus.pair_count() {
            0 => Selection::Empty(Branch::PathPair),
            n => Selection::PathPair(rng.gen_range(0..n)),
        },
    }
}

fn sample_weighted<T: Clone, R: Rng + ?Sized>(options: &[(T, Prob)], rng: &mut R) -> (T, Prob) {
    let u: f64 = rng.gen();
    let mut acc = 0.0;
    for (t, p) in options {
        acc += to_f64(p);
        if u < acc {
            return (t.clone(), p.clone());
        }
    }
    options.last().cloned().expect("non-empty option list")
}

/// Draws one proposal from the kernel.
pub fn propose<R: Rng + ?Sized>(
    graph: &BipartiteGraph,
    k: usize,
    kind: KernelKind,
    current: &Coloring,
    rng: &mut R,
) -> Result<Proposal> {
    let Some(colors) = sample_colors(k, rng) else {
        return Ok(Proposal {
            from: current.clone(),
            way: Way::Lazy,
            probability: color_probability(k, None),
            trajectory: Trajectory { colors: None, states: alloc::vec![current.clone()] },
            outcome: Outcome::Proper(current.clone()),
        });
    };
    let menus = Menus::new(graph, kind, current, colors);
    let selection = sample_selection(&menus, kind, rng);
    let a_col = apply_selection(&menus, current, selection)?;
    let mut probability = color_probability(k, Some(colors)) * menus.probability(selection);
    let options = middle_options(graph, kind, &a_col, colors);
    if options.is_empty() {
        return Err(Error::Contract(alloc::format!("no middle-stage option after {selection:?}")));
    }
    let (middle, p) = sample_weighted(&options, rng);
    probability *= p;
    let mut trajectory = Trajectory { colors: Some(colors), states: alloc::vec![current.clone(), a_col.clone()] };
    let mut picks = Vec::new();
    let outcome = match apply_middle(graph, kind, &a_col, colors, middle) {
        None => Outcome::Aborted("middle"),
        Some(b_col) => {
            trajectory.states.push(b_col.clone());
            let mut cur = b_col;
            loop {
                match next_repair(graph, &cur, colors.context()) {
                    Ok(None) => {
                        trajectory.states.push(cur.clone());
                        break Outcome::Proper(cur);
                    }
                    Ok(Some(_)) if picks.len() == MAX_REPAIR_WALKS => break Outcome::Aborted("repair"),
                    Err(_) => break Outcome::Aborted("repair"),
                    Ok(Some((d, partner))) => {
                        let e = d.repeated_edges[rng.gen_range(0..2)];
                        let walk = maximal_from(graph, &cur, d.vertex, e, (d.repeated_color, partner));
                        walk.flip(&mut cur);
                        picks.push(RepairPick { vertex: d.vertex, edge: e });
                    }
                }
            }
        }
    };
    probability *= ratio(1, 1 << picks.len());
    let way = build_way(colors, selection, middle, picks);
    Ok(Proposal { from: current.clone(), way, probability, trajectory, outcome })
}

/// Every way the kernel can emit from `from`, with probabilities summing
/// to one.
pub fn enumerate_ways(graph: &BipartiteGraph, k: usize, kind: KernelKind, from: &Coloring) -> Result<Vec<EnumeratedWay>> {
    let mut out = alloc::vec![EnumeratedWay {
        way: Way::Lazy,
        probability: color_probability(k, None),
        outcome: Outcome::Proper(from.clone()),
    }];
    for colors in MoveColors::all(k) {
        let pc = color_probability(k, Some(colors));
        let menus = Menus::new(graph, kind, from, colors);
        for selection in menus.all() {
            let a_col = apply_selection(&menus, from, selection)?;
            let ps = &pc * menus.probability(selection);
            for (middle, pm) in middle_options(graph, kind, &a_col, colors) {
                let p = &ps * pm;
                match apply_middle(graph, kind, &a_col, colors, middle) {
                    None => out.push(EnumeratedWay {
                        way: build_way(colors, selection, middle, Vec::new()),
                        probability: p,
                        outcome: Outcome::Aborted("middle"),
                    }),
                    Some(b_col) => {
                        for leaf in repair_leaves(graph, &b_col, colors.context()) {
                            out.push(EnumeratedWay {
                                way: build_way(colors, selection, middle, leaf.picks),
                                probability: &p * leaf.probability,
                                outcome: leaf.result.map_or(Outcome::Aborted("repair"), Outcome::Proper),
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Probability that a proposal from `path[0]` uses `colors` and passes
/// through exactly the distinct states of `path`, in order.
pub fn path_probability(
    graph: &BipartiteGraph,
    k: usize,
    kind: KernelKind,
    colors: Option<MoveColors>,
    path: &[Coloring],
) -> Prob {
    let Some(colors) = colors else {
        return if path.len() == 1 { color_probability(k, None) } else { zero() };
    };
    if path.is_empty() || path.len() > 4 || check_colors(k, colors).is_err() {
        return zero();
    }
    let x = &path[0];
    let menus = Menus::new(graph, kind, x, colors);
    let last = path.last().unwrap();
    let mut total = zero();
    for (i, j) in stage_splits(path.len()) {
        let ps: Prob = menus.leading_to(x, &path[i]).into_iter().fold(zero(), |acc, s| acc + menus.probability(s));
        if ps == zero() {
            continue;
        }
        let (pm, _) = middle_to(graph, kind, &path[i], colors, &path[j]);
        if pm == zero() {
            continue;
        }
        let pr = repair_probability(graph, &path[j], colors.context(), last);
        total += ps * pm * pr;
    }
    total * color_probability(k, Some(colors))
}

/// A way from `to` back to `from` that passes through the forward
/// proposal's intermediate colorings in reverse order.
pub fn reverse_way(
    graph: &BipartiteGraph,
    k: usize,
    kind: KernelKind,
    from: &Coloring,
    way: &Way,
    to: &Coloring,
) -> Result<Way> {
    let r = replay(graph, k, kind, from, way)?;
    if r.outcome != Outcome::Proper(to.clone()) {
        return Err(Error::WayDoesNotApply("the way does not lead to the given coloring".into()));
    }
    let Some(colors) = r.trajectory.colors else { return Ok(Way::Lazy) };
    let mut path = r.trajectory.essential();
    path.reverse();
    find_way(graph, kind, &WaySearch { colors, path }).ok_or(Error::BijectionFailure)
}
