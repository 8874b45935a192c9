//! Latin rectangles and their completions as edge colorings.
//!
//! An `r × n` Latin rectangle `R` defines a bipartite graph on symbols and
//! columns: symbol `i` is joined to column `j` when `i` does not occur in
//! column `j`. The graph is `(n - r)`-regular and its proper
//! `(n - r)`-colorings are exactly the completions of `R`: color `l` on
//! edge `(i, j)` puts symbol `i` in row `r + l` of column `j`.
//!
//! Symbols are 0-based here.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::coloring::{is_proper, Color, Coloring};
use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;
use crate::initial::initial_coloring;
use crate::kernel::KernelKind;
use crate::metropolis::mh_step;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatinRectangle {
    n: usize,
    rows: Vec<Vec<u8>>,
}

impl LatinRectangle {
    /// Checks that every row is a permutation of `0..n` and no column
    /// repeats a symbol.
    pub fn new(n: usize, rows: Vec<Vec<u8>>) -> Result<Self> {
        if n == 0 || n > 256 {
            return Err(Error::InvalidRectangle(format!("order {n} is out of range")));
        }
        if rows.len() > n {
            return Err(Error::InvalidRectangle(format!("{} rows exceed the order {n}", rows.len())));
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidRectangle(format!("row {} has {} entries, expected {n}", r + 1, row.len())));
            }
            let mut seen = vec![false; n];
            for (j, &s) in row.iter().enumerate() {
                if s as usize >= n {
                    return Err(Error::InvalidRectangle(format!("row {} column {}: symbol out of range", r + 1, j + 1)));
                }
                if seen[s as usize] {
                    return Err(Error::InvalidRectangle(format!("row {} column {}: symbol repeated in row", r + 1, j + 1)));
                }
                seen[s as usize] = true;
            }
        }
        for j in 0..n {
            let mut seen = vec![false; n];
            for (r, row) in rows.iter().enumerate() {
                let s = row[j] as usize;
                if seen[s] {
                    return Err(Error::InvalidRectangle(format!(
                        "row {} column {}: symbol repeated in column",
                        r + 1,
                        j + 1
                    )));
                }
                seen[s] = true;
            }
        }
        Ok(LatinRectangle { n, rows })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn is_square(&self) -> bool {
        self.rows.len() == self.n
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatinSquare(LatinRectangle);

impl LatinSquare {
    pub fn new(n: usize, rows: Vec<Vec<u8>>) -> Result<Self> {
        if rows.len() != n {
            return Err(Error::InvalidRectangle(format!("a square of order {n} needs {n} rows")));
        }
        LatinRectangle::new(n, rows).map(LatinSquare)
    }

    pub fn order(&self) -> usize {
        self.0.n
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.0.rows
    }

    pub fn as_rectangle(&self) -> &LatinRectangle {
        &self.0
    }
}

/// The graph of a rectangle. Edge `e` joins symbol `cells[e].0` (left) to
/// column `cells[e].1` (right); edges are ordered by symbol, then column.
#[derive(Debug, Clone)]
pub struct RectangleGraph {
    pub graph: BipartiteGraph,
    pub k: usize,
    pub cells: Vec<(usize, usize)>,
}

pub fn rectangle_to_graph(r: &LatinRectangle) -> RectangleGraph {
    let n = r.n;
    let mut present = vec![vec![false; n]; n];
    for row in &r.rows {
        for (j, &s) in row.iter().enumerate() {
            present[s as usize][j] = true;
        }
    }
    let cells: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| !present[i][j]).collect();
    let graph = BipartiteGraph::new(n, n, &cells).expect("cells are distinct and in range");
    RectangleGraph { graph, k: n - r.rows.len(), cells }
}

/// Fills the missing rows from a proper coloring of the rectangle's graph.
pub fn coloring_to_completion(r: &LatinRectangle, rg: &RectangleGraph, c: &Coloring) -> Result<LatinSquare> {
    c.check_against(&rg.graph)?;
    if !is_proper(&rg.graph, c) {
        return Err(Error::Contract("the coloring is not proper".into()));
    }
    let n = r.n;
    let mut rows = r.rows.clone();
    rows.resize(n, vec![0; n]);
    for (e, &(i, j)) in rg.cells.iter().enumerate() {
        rows[r.rows.len() + c.color(e) as usize][j] = i as u8;
    }
    LatinSquare::new(n, rows).map_err(|e| Error::Contract(format!("completion is not a Latin square: {e}")))
}

/// The coloring of the rectangle's graph that yields `square`.
pub fn completion_to_coloring(r: &LatinRectangle, rg: &RectangleGraph, square: &LatinSquare) -> Result<Coloring> {
    let n = r.n;
    if square.order() != n || square.rows()[..r.rows.len()] != r.rows[..] {
        return Err(Error::Contract("the square does not extend the rectangle".into()));
    }
    let mut colors = vec![0 as Color; rg.cells.len()];
    for (l, row) in square.rows()[r.rows.len()..].iter().enumerate() {
        for (j, &s) in row.iter().enumerate() {
            let e = rg
                .graph
                .edge_between(s as usize, n + j)
                .ok_or_else(|| Error::Contract(format!("symbol {s} already occurs in column {j}")))?;
            colors[e] = l as Color;
        }
    }
    Coloring::new(colors, rg.k)
}

/// A completion drawn by running the regular Metropolis-Hastings chain for
/// `steps` steps from a deterministic initial coloring.
pub fn sample_completion<R: Rng + ?Sized>(r: &LatinRectangle, steps: u64, rng: &mut R) -> Result<LatinSquare> {
    if r.is_square() {
        return Ok(LatinSquare(r.clone()));
    }
    let rg = rectangle_to_graph(r);
    let mut cur = initial_coloring(&rg.graph, rg.k)?;
    for _ in 0..steps {
        let step = mh_step(&rg.graph, rg.k, KernelKind::Regular, &cur, rng)?;
        if step.accepted {
            cur = step.to;
        }
    }
    coloring_to_completion(r, &rg, &cur)
}
