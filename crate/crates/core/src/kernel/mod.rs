//! Proposal kernels on proper edge colorings.
//!
//! A proposal is one step of the chain. Half of the time it does nothing.
//! Otherwise it fixes two colors (or three, one of them distinguished),
//! possibly flips sub-paths of the two-color subgraph to create up to two
//! deficient vertices, performs one local change, and repairs what is left
//! by flipping alternating walks. A [`Way`] records every random choice, so
//! a proposal can be replayed and its probability computed exactly.
//!
//! Two kernels share this machinery: [`KernelKind::General`] for any
//! bipartite graph and [`KernelKind::Regular`] for `k`-regular graphs with
//! `k` colors, where every two-color subgraph is a union of cycles.

mod engine;
pub(crate) mod stages;
mod text;

pub use engine::{
    apply_way, enumerate_ways, path_probability, propose, replay, reverse_way, way_probability, EnumeratedWay,
    Outcome, Proposal, Replay, Trajectory,
};
pub use stages::{color_probability, find_way, WaySearch};

use alloc::vec::Vec;

use crate::coloring::Color;
use crate::walk::{ColorContext, RepairPick};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KernelKind {
    General,
    Regular,
}

/// The colors fixed by a non-lazy proposal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MoveColors {
    /// An unordered pair, stored ascending.
    Two(Color, Color),
    /// The subgraph pair (ascending) and the distinguished third color.
    Three { pair: (Color, Color), distinguished: Color },
}

impl MoveColors {
    pub fn pair(&self) -> (Color, Color) {
        match *self {
            MoveColors::Two(a, b) => (a, b),
            MoveColors::Three { pair, .. } => pair,
        }
    }

    pub fn context(&self) -> ColorContext {
        match *self {
            MoveColors::Two(a, b) => ColorContext::Pair(a, b),
            MoveColors::Three { pair: (a, b), distinguished } => ColorContext::Triple(a, b, distinguished),
        }
    }

    /// All color choices for `k` colors in canonical order.
    pub fn all(k: usize) -> Vec<MoveColors> {
        let mut out = Vec::new();
        for a in 0..k {
            for b in a + 1..k {
                out.push(MoveColors::Two(a as Color, b as Color));
            }
        }
        for a in 0..k {
            for b in a + 1..k {
                for c in b + 1..k {
                    let t = [a as Color, b as Color, c as Color];
                    for d in 0..3 {
                        let rest: Vec<Color> = (0..3).filter(|&i| i != d).map(|i| t[i]).collect();
                        out.push(MoveColors::Three { pair: (rest[0], rest[1]), distinguished: t[d] });
                    }
                }
            }
        }
        out
    }
}

/// Menu branch that a fall-through selection was drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Branch {
    SubPath,
    PathPair,
}

/// First stage: which sub-paths of the two-color subgraph get flipped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Selection {
    None,
    /// Index into the sub-path menu.
    SubPath(usize),
    /// Index into the anchored pair menu.
    PathPair(usize),
    /// The branch was drawn but its menu was empty; nothing is flipped.
    Empty(Branch),
}

/// Second stage of a two-color proposal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Action {
    Nothing,
    /// Recolor a repeated edge at a deficient vertex.
    DeficientFlip { vertex: usize, edge: usize },
    /// Recolor an edge when no vertex is deficient.
    FreeFlip { edge: usize },
}

/// Second stage of a three-color proposal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pivot {
    None,
    /// A deficient vertex and the edge its flip starts from.
    Deficient { vertex: usize, edge: usize },
    /// A non-deficient vertex and its subgraph-colored edge `f`.
    NonDeficient { vertex: usize, edge: usize },
}

/// Every random choice of one proposal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Way {
    Lazy,
    TwoColor { colors: (Color, Color), selection: Selection, action: Action, repair: Vec<RepairPick> },
    ThreeColor {
        colors: (Color, Color),
        distinguished: Color,
        selection: Selection,
        pivot: Pivot,
        repair: Vec<RepairPick>,
    },
}

impl Way {
    pub fn move_colors(&self) -> Option<MoveColors> {
        match *self {
            Way::Lazy => None,
            Way::TwoColor { colors: (a, b), .. } => Some(MoveColors::Two(a, b)),
            Way::ThreeColor { colors, distinguished, .. } => Some(MoveColors::Three { pair: colors, distinguished }),
        }
    }

    pub fn selection(&self) -> Option<Selection> {
        match self {
            Way::Lazy => None,
            Way::TwoColor { selection, .. } | Way::ThreeColor { selection, .. } => Some(*selection),
        }
    }

    pub fn repair(&self) -> &[RepairPick] {
        match self {
            Way::Lazy => &[],
            Way::TwoColor { repair, .. } | Way::ThreeColor { repair, .. } => repair,
        }
    }

    /// Short label of the branch taken, used by the chain statistics.
    pub fn branch_label(&self) -> &'static str {
        match self {
            Way::Lazy => "lazy",
            Way::TwoColor { action: Action::DeficientFlip { .. }, .. } => "two:deficient",
            Way::TwoColor { action: Action::FreeFlip { .. }, .. } => "two:free",
            Way::TwoColor { .. } => "two:none",
            Way::ThreeColor { pivot: Pivot::Deficient { .. }, .. } => "three:deficient",
            Way::ThreeColor { pivot: Pivot::NonDeficient { .. }, .. } => "three:nondeficient",
            Way::ThreeColor { .. } => "three:none",
        }
    }
}
