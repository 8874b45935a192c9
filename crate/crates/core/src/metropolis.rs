//! Metropolis-Hastings over the proposal kernels, targeting the uniform
//! distribution on proper colorings.
//!
//! A proposal is indexed by its color choice and the sequence of distinct
//! colorings it passes through. Its reverse is the same colors with that
//! sequence reversed, so the ratio is the probability of the reversed
//! sequence from the proposed coloring over the probability of the forward
//! sequence. When the reversed sequence cannot be proposed the ratio is zero
//! and the proposal is rejected; aborted proposals are rejected as well.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Zero};
use rand::Rng;

use crate::coloring::{is_proper, Coloring};
use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;
use crate::kernel::{find_way, path_probability, propose, KernelKind, Outcome, Way, WaySearch};
use crate::prob::{ratio, to_f64, Prob};

/// One Metropolis-Hastings step.
#[derive(Debug, Clone)]
pub struct MhStep {
    pub from: Coloring,
    /// The proposed coloring; equal to `from` for aborted proposals.
    pub to: Coloring,
    pub way: Way,
    /// A way from `to` back to `from` through the reversed states; `None`
    /// when there is none or the proposal aborted.
    pub reverse: Option<Way>,
    pub forward_prob: Prob,
    pub reverse_prob: Prob,
    /// `reverse_prob / forward_prob`; zero for aborted proposals.
    pub ratio: Prob,
    pub accepted: bool,
    pub aborted: bool,
}

impl MhStep {
    /// The state after the step.
    pub fn state(&self) -> &Coloring {
        if self.accepted {
            &self.to
        } else {
            &self.from
        }
    }

    /// `1 / min(1, ratio)`, or `None` when the ratio is zero.
    pub fn inverse_acceptance(&self) -> Option<Prob> {
        if self.ratio.is_zero() {
            None
        } else if self.ratio >= Prob::one() {
            Some(Prob::one())
        } else {
            Some(self.ratio.recip())
        }
    }
}

/// Accepts with probability `min(1, r)` using a 128-bit uniform draw; the
/// acceptance probability is off by less than `2^-128`.
fn accept<R: Rng + ?Sized>(r: &Prob, rng: &mut R) -> bool {
    if *r >= Prob::one() {
        return true;
    }
    if r.is_zero() {
        return false;
    }
    let u = BigInt::from_bytes_le(Sign::Plus, &rng.gen::<u128>().to_le_bytes());
    u * r.denom() < r.numer() << 128
}

/// Proposes from `current` and accepts or rejects.
pub fn mh_step<R: Rng + ?Sized>(
    graph: &BipartiteGraph,
    k: usize,
    kind: KernelKind,
    current: &Coloring,
    rng: &mut R,
) -> Result<MhStep> {
    let p = propose(graph, k, kind, current, rng)?;
    let to = match &p.outcome {
        Outcome::Proper(c) => c.clone(),
        Outcome::Aborted(_) => {
            return Ok(MhStep {
                from: current.clone(),
                to: current.clone(),
                way: p.way,
                reverse: None,
                forward_prob: p.probability,
                reverse_prob: Prob::zero(),
                ratio: Prob::zero(),
                accepted: false,
                aborted: true,
            });
        }
    };
    let colors = p.trajectory.colors;
    let path = p.trajectory.essential();
    let forward_prob = path_probability(graph, k, kind, colors, &path);
    let mut back = path;
    back.reverse();
    let reverse_prob = path_probability(graph, k, kind, colors, &back);
    let reverse = match colors {
        None => Some(Way::Lazy),
        Some(_) if reverse_prob.is_zero() => None,
        Some(colors) => find_way(graph, kind, &WaySearch { colors, path: back }),
    };
    if forward_prob.is_zero() || (reverse.is_none() && !reverse_prob.is_zero()) {
        return Err(Error::Contract(format!("inconsistent path probabilities for way {}", p.way)));
    }
    let r = &reverse_prob / &forward_prob;
    let accepted = accept(&r, rng);
    Ok(MhStep {
        from: current.clone(),
        to,
        way: p.way,
        reverse,
        forward_prob,
        reverse_prob,
        ratio: r,
        accepted,
        aborted: false,
    })
}

/// Proposal and acceptance counts of one branch.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BranchCount {
    pub proposed: u64,
    pub accepted: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChainStats {
    pub steps: u64,
    pub acceptances: u64,
    /// Steps whose proposal was the lazy self-loop.
    pub lazy: u64,
    /// Proposals that left the kernel's domain.
    pub aborted: u64,
    /// Proposals whose reversed path has probability zero.
    pub irreversible: u64,
    /// Largest `1 / min(1, ratio)` over proposals with a positive ratio.
    pub max_inverse_ratio: Prob,
    pub branches: BTreeMap<&'static str, BranchCount>,
}

impl Default for ChainStats {
    fn default() -> Self {
        ChainStats {
            steps: 0,
            acceptances: 0,
            lazy: 0,
            aborted: 0,
            irreversible: 0,
            max_inverse_ratio: Prob::one(),
            branches: BTreeMap::new(),
        }
    }
}

impl ChainStats {
    pub fn record(&mut self, step: &MhStep) {
        self.steps += 1;
        let b = self.branches.entry(step.way.branch_label()).or_default();
        b.proposed += 1;
        if step.accepted {
            self.acceptances += 1;
            b.accepted += 1;
        }
        if step.way == Way::Lazy {
            self.lazy += 1;
        }
        if step.aborted {
            self.aborted += 1;
        } else if step.ratio.is_zero() {
            self.irreversible += 1;
        }
        if let Some(inv) = step.inverse_acceptance() {
            if inv > self.max_inverse_ratio {
                self.max_inverse_ratio = inv;
            }
        }
    }

    /// Component-wise sum and max.
    pub fn merge(&mut self, other: &ChainStats) {
        self.steps += other.steps;
        self.acceptances += other.acceptances;
        self.lazy += other.lazy;
        self.aborted += other.aborted;
        self.irreversible += other.irreversible;
        if other.max_inverse_ratio > self.max_inverse_ratio {
            self.max_inverse_ratio = other.max_inverse_ratio.clone();
        }
        for (k, v) in &other.branches {
            let b = self.branches.entry(k).or_default();
            b.proposed += v.proposed;
            b.accepted += v.accepted;
        }
    }

    pub fn acceptance_rate(&self) -> f64 {
        if self.steps == 0 {
            0.0
        } else {
            self.acceptances as f64 / self.steps as f64
        }
    }

    pub fn max_inverse_ratio_f64(&self) -> f64 {
        to_f64(&self.max_inverse_ratio)
    }
}

/// Upper bound on the inverse acceptance ratio for a kernel on a graph
/// with `n` vertices: `96 n^2 (n - 1)` in general and `16 n (n - 1)` for
/// the regular kernel.
pub fn ratio_bound(kind: KernelKind, n: usize) -> Prob {
    let n1 = n.saturating_sub(1);
    match kind {
        KernelKind::General => ratio(96 * n * n * n1, 1),
        KernelKind::Regular => ratio(16 * n * n1, 1),
    }
}

/// Runs `steps` Metropolis-Hastings steps from `start`, keeping the start
/// and every `thin`-th state. Fails with [`Error::BoundViolation`] as soon
/// as a step's inverse acceptance ratio exceeds [`ratio_bound`].
pub fn run_chain<R: Rng + ?Sized>(
    graph: &BipartiteGraph,
    k: usize,
    kind: KernelKind,
    start: &Coloring,
    steps: u64,
    thin: u64,
    rng: &mut R,
) -> Result<(Vec<Coloring>, ChainStats)> {
    if thin == 0 {
        return Err(Error::Contract("thin must be at least 1".into()));
    }
    if !is_proper(graph, start) {
        return Err(Error::NotProper);
    }
    let bound = ratio_bound(kind, graph.vertex_count());
    let mut stats = ChainStats::default();
    let mut samples = alloc::vec![start.clone()];
    let mut cur = start.clone();
    for t in 1..=steps {
        let step = mh_step(graph, k, kind, &cur, rng)?;
        stats.record(&step);
        if let Some(inv) = step.inverse_acceptance() {
            if inv > bound {
                return Err(Error::BoundViolation(format!(
                    "inverse acceptance ratio {inv} exceeds {bound} at step {t}: way {} from [{}]",
                    step.way,
                    step.from.color_string()
                )));
            }
        }
        if step.accepted {
            cur = step.to;
        }
        if t % thin == 0 {
            samples.push(cur.clone());
        }
    }
    Ok((samples, stats))
}
