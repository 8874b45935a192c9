//! Text formats for graphs, colorings, Latin rectangles and plans.
//!
//! Graph: `p bipartite <|U|> <|W|> <|E|>` followed by `e <u> <w>` lines,
//! 1-based, left ids `1..=|U|` and right ids `1..=|W|`. Edge ids follow the
//! order of the `e` lines, starting at 0.
//!
//! Coloring: `c <edge> <color>` lines, both 0-based, every edge exactly once.
//!
//! Rectangle: `latin <n> <r>` followed by `r` rows of `n` 1-based symbols.
//!
//! Blank lines and lines starting with `#` are ignored everywhere.

use std::fmt::Write as _;

use kempe_core::coloring::{Color, Coloring};
use kempe_core::diameter::{Milestone, TransformPlan};
use kempe_core::error::Error;
use kempe_core::graph::BipartiteGraph;
use kempe_core::latin::{LatinRectangle, LatinSquare};
use kempe_core::Way;

fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .map(|(i, l)| (i, l.split_whitespace().collect()))
}

fn num(tok: &str, line: usize) -> Result<usize, Error> {
    tok.parse().map_err(|_| Error::Parse(format!("line {line}: '{tok}' is not a non-negative integer")))
}

pub fn parse_graph(text: &str) -> Result<BipartiteGraph, Error> {
    let mut it = lines(text);
    let (line, header) = it.next().ok_or_else(|| Error::Parse("empty graph file".into()))?;
    if header.len() != 5 || header[0] != "p" || header[1] != "bipartite" {
        return Err(Error::Parse(format!("line {line}: expected 'p bipartite <U> <W> <E>'")));
    }
    let (nu, nw, ne) = (num(header[2], line)?, num(header[3], line)?, num(header[4], line)?);
    let mut pairs = Vec::with_capacity(ne);
    for (line, toks) in it {
        if toks.len() != 3 || toks[0] != "e" {
            return Err(Error::Parse(format!("line {line}: expected 'e <u> <w>'")));
        }
        let (u, w) = (num(toks[1], line)?, num(toks[2], line)?);
        if u == 0 || u > nu || w == 0 || w > nw {
            return Err(Error::Parse(format!("line {line}: vertex out of range")));
        }
        pairs.push((u - 1, w - 1));
    }
    if pairs.len() != ne {
        return Err(Error::Parse(format!("header announces {ne} edges, found {}", pairs.len())));
    }
    BipartiteGraph::new(nu, nw, &pairs)
}

pub fn write_graph(g: &BipartiteGraph) -> String {
    let mut s = format!("p bipartite {} {} {}\n", g.left_count(), g.right_count(), g.edge_count());
    for (u, w) in g.pairs() {
        let _ = writeln!(s, "e {} {}", u + 1, w + 1);
    }
    s
}

pub fn parse_coloring(text: &str, g: &BipartiteGraph, k: usize) -> Result<Coloring, Error> {
    let m = g.edge_count();
    let mut colors: Vec<Option<Color>> = vec![None; m];
    for (line, toks) in lines(text) {
        if toks.len() != 3 || toks[0] != "c" {
            return Err(Error::Parse(format!("line {line}: expected 'c <edge> <color>'")));
        }
        let (e, c) = (num(toks[1], line)?, num(toks[2], line)?);
        if e >= m {
            return Err(Error::UnknownEdge(e));
        }
        if c >= k || c > Color::MAX as usize {
            return Err(Error::ColorOutOfRange { edge: e, color: c, k });
        }
        if colors[e].replace(c as Color).is_some() {
            return Err(Error::Parse(format!("line {line}: edge {e} colored twice")));
        }
    }
    let found = colors.iter().filter(|c| c.is_some()).count();
    let colors: Option<Vec<Color>> = colors.into_iter().collect();
    let colors = colors.ok_or(Error::ColoringLength { expected: m, found })?;
    Coloring::new(colors, k)
}

pub fn write_coloring(c: &Coloring) -> String {
    let mut s = String::new();
    for (e, col) in c.colors().iter().enumerate() {
        let _ = writeln!(s, "c {e} {col}");
    }
    s
}

pub fn parse_rectangle(text: &str) -> Result<LatinRectangle, Error> {
    let mut it = lines(text);
    let (line, header) = it.next().ok_or_else(|| Error::Parse("empty rectangle file".into()))?;
    if header.len() != 3 || header[0] != "latin" {
        return Err(Error::Parse(format!("line {line}: expected 'latin <n> <r>'")));
    }
    let (n, r) = (num(header[1], line)?, num(header[2], line)?);
    if n == 0 || n > 256 {
        return Err(Error::InvalidRectangle(format!("order {n} is out of range")));
    }
    let mut rows = Vec::with_capacity(r);
    for (line, toks) in it {
        let row = toks
            .iter()
            .map(|t| match num(t, line)? {
                s @ 1..=256 => Ok((s - 1) as u8),
                _ => Err(Error::InvalidRectangle(format!("line {line}: symbol {t} out of range"))),
            })
            .collect::<Result<Vec<u8>, Error>>()?;
        rows.push(row);
    }
    if rows.len() != r {
        return Err(Error::InvalidRectangle(format!("header announces {r} rows, found {}", rows.len())));
    }
    LatinRectangle::new(n, rows)
}

pub fn write_rectangle(r: &LatinRectangle) -> String {
    let mut s = format!("latin {} {}\n", r.order(), r.row_count());
    for row in r.rows() {
        let cells: Vec<String> = row.iter().map(|&x| (x as usize + 1).to_string()).collect();
        s.push_str(&cells.join(" "));
        s.push('\n');
    }
    s
}

pub fn write_square(sq: &LatinSquare) -> String {
    write_rectangle(sq.as_rectangle())
}

/// One `way` line per move, with `milestone` lines after the move they
/// follow.
pub fn write_plan(plan: &TransformPlan) -> String {
    let mut s = String::new();
    let mut marks = plan.milestones.iter().peekable();
    let mut emit = |s: &mut String, done: usize| {
        while let Some(m) = marks.next_if(|m| after(m) == done) {
            let _ = match m {
                Milestone::Small { color, .. } => writeln!(s, "milestone small {color}"),
                Milestone::Large { color, .. } => writeln!(s, "milestone large {color}"),
            };
        }
    };
    emit(&mut s, 0);
    for (i, w) in plan.moves.iter().enumerate() {
        let _ = writeln!(s, "way {w}");
        emit(&mut s, i + 1);
    }
    s
}

fn after(m: &Milestone) -> usize {
    match *m {
        Milestone::Small { after_moves, .. } | Milestone::Large { after_moves, .. } => after_moves,
    }
}

/// The ways of a plan written by [`write_plan`].
pub fn parse_plan(text: &str) -> Result<Vec<Way>, Error> {
    text.lines()
        .filter_map(|l| l.strip_prefix("way "))
        .map(|w| w.parse::<Way>())
        .collect()
}
