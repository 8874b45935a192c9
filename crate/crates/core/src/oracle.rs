//! Exhaustive enumeration of proper colorings and uniformity metrics.

use alloc::vec;
use alloc::vec::Vec;

use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;

/// Largest edge count enumerated without an explicit override.
pub const MAX_ORACLE_EDGES: usize = 24;

/// All proper colorings of a graph, in lexicographic order of the color
/// sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSet {
    pub colorings: Vec<Coloring>,
}

impl SolutionSet {
    pub fn len(&self) -> usize {
        self.colorings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colorings.is_empty()
    }

    pub fn index_of(&self, c: &Coloring) -> Option<usize> {
        self.colorings.binary_search_by(|x| x.colors().cmp(c.colors())).ok()
    }

    /// Counts per solution. Fails on a coloring outside the set.
    pub fn histogram<'a>(&self, samples: impl IntoIterator<Item = &'a Coloring>) -> Result<Vec<u64>> {
        let mut h = vec![0u64; self.len()];
        for s in samples {
            let i = self.index_of(s).ok_or_else(|| Error::Contract("sample is not a proper coloring".into()))?;
            h[i] += 1;
        }
        Ok(h)
    }
}

/// Depth-first enumeration over edges in index order, colors ascending.
/// `limit` caps the number of solutions; exceeding it is an error.
/// Graphs with more than [`MAX_ORACLE_EDGES`] edges need `force_large`.
pub fn enumerate(graph: &BipartiteGraph, k: usize, limit: Option<usize>, force_large: bool) -> Result<SolutionSet> {
    let m = graph.edge_count();
    if m > MAX_ORACLE_EDGES && !force_large {
        return Err(Error::TooLarge { edges: m, max: MAX_ORACLE_EDGES });
    }
    // used[v] is a bit set of colors present at v
    let words = k.div_ceil(64).max(1);
    let mut used = vec![0u64; graph.vertex_count() * words];
    let mut colors: Vec<Color> = vec![0; m];
    let mut out = Vec::new();
    let mut search = Search { graph, k, words, limit, used: &mut used, colors: &mut colors, out: &mut out };
    search.go(0)?;
    Ok(SolutionSet { colorings: out })
}

struct Search<'a> {
    graph: &'a BipartiteGraph,
    k: usize,
    words: usize,
    limit: Option<usize>,
    used: &'a mut Vec<u64>,
    colors: &'a mut Vec<Color>,
    out: &'a mut Vec<Coloring>,
}

impl Search<'_> {
    fn bit(&self, v: usize, c: usize) -> (usize, u64) {
        (v * self.words + c / 64, 1u64 << (c % 64))
    }

    fn go(&mut self, e: usize) -> Result<()> {
        if e == self.graph.edge_count() {
            if self.limit.is_some_and(|l| self.out.len() >= l) {
                return Err(Error::LimitExceeded { limit: self.limit.unwrap() });
            }
            self.out.push(Coloring::new(self.colors.clone(), self.k)?);
            return Ok(());
        }
        let (u, w) = self.graph.endpoints(e);
        for c in 0..self.k {
            let (iu, bu) = self.bit(u, c);
            let (iw, bw) = self.bit(w, c);
            if self.used[iu] & bu != 0 || self.used[iw] & bw != 0 {
                continue;
            }
            self.used[iu] |= bu;
            self.used[iw] |= bw;
            self.colors[e] = c as Color;
            let r = self.go(e + 1);
            self.used[iu] &= !bu;
            self.used[iw] &= !bw;
            r?;
        }
        Ok(())
    }
}

fn total(h: &[u64]) -> Result<f64> {
    let n: u64 = h.iter().sum();
    if n == 0 || h.is_empty() {
        return Err(Error::Contract("empty histogram".into()));
    }
    Ok(n as f64)
}

/// Total variation distance between the empirical distribution and the
/// uniform one.
pub fn tvd(h: &[u64]) -> Result<f64> {
    let n = total(h)?;
    let q = 1.0 / h.len() as f64;
    let s: f64 = h.iter().map(|&x| (x as f64 / n - q).abs()).sum();
    Ok(s / 2.0)
}

/// Pearson's statistic against the uniform expectation; `h.len() - 1`
/// degrees of freedom.
pub fn chi_square(h: &[u64]) -> Result<f64> {
    let n = total(h)?;
    let e = n / h.len() as f64;
    Ok(h.iter().map(|&x| (x as f64 - e) * (x as f64 - e) / e).sum())
}
