#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;

use kempe_core::graph::BipartiteGraph;
use kempe_core::oracle::enumerate;
use kempe_core::Coloring;

pub fn k33() -> BipartiteGraph {
    BipartiteGraph::complete(3, 3)
}

/// Random bipartite graph with `2..=max_side` vertices per side and at
/// least one edge.
pub fn random_graph<R: Rng>(rng: &mut R, max_side: usize, p: f64) -> BipartiteGraph {
    loop {
        let (a, b) = (rng.gen_range(2..=max_side), rng.gen_range(2..=max_side));
        let pairs: Vec<_> = (0..a).flat_map(|u| (0..b).map(move |w| (u, w))).filter(|_| rng.gen_bool(p)).collect();
        if !pairs.is_empty() {
            return BipartiteGraph::new(a, b, &pairs).unwrap();
        }
    }
}

/// Random bipartite graph with at most `max_edges` edges and at least one.
pub fn random_small_graph<R: Rng>(rng: &mut R, max_edges: usize) -> BipartiteGraph {
    loop {
        let g = random_graph(rng, 5, 0.5);
        if g.edge_count() <= max_edges {
            return g;
        }
    }
}

/// Union of `k` random pairwise disjoint perfect matchings on `n + n`
/// vertices.
pub fn random_regular<R: Rng>(rng: &mut R, n: usize, k: usize) -> BipartiteGraph {
    'retry: loop {
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for _ in 0..k {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(rng);
            for (u, &w) in perm.iter().enumerate() {
                if pairs.contains(&(u, w)) {
                    continue 'retry;
                }
                pairs.push((u, w));
            }
        }
        return BipartiteGraph::new(n, n, &pairs).unwrap();
    }
}

/// Every proper `k`-coloring, in canonical order.
pub fn all_colorings(g: &BipartiteGraph, k: usize) -> Vec<Coloring> {
    enumerate(g, k, None, true).unwrap().colorings
}

/// A uniformly random proper `k`-coloring, drawn from the full list.
pub fn random_coloring<R: Rng>(rng: &mut R, g: &BipartiteGraph, k: usize) -> Coloring {
    let all = all_colorings(g, k);
    all.choose(rng).unwrap().clone()
}

/// Side-labelled bipartite graph: left count, right count, sorted edges.
type Shape = (usize, usize, Vec<(usize, usize)>);

fn degrees(s: &Shape) -> (Vec<usize>, Vec<usize>) {
    let (mut dl, mut dr) = (vec![0; s.0], vec![0; s.1]);
    for &(u, w) in &s.2 {
        dl[u] += 1;
        dr[w] += 1;
    }
    (dl, dr)
}

/// All orderings of `items` that keep items of equal key together, in key
/// order.
fn cell_orders(keys: &[usize]) -> Vec<Vec<usize>> {
    let mut idx: Vec<usize> = (0..keys.len()).collect();
    idx.sort_by_key(|&i| keys[i]);
    let mut out = vec![Vec::new()];
    let mut i = 0;
    while i < idx.len() {
        let j = (i..idx.len()).find(|&j| keys[idx[j]] != keys[idx[i]]).unwrap_or(idx.len());
        let cell = &idx[i..j];
        let mut perms = Vec::new();
        permute(&mut cell.to_vec(), 0, &mut perms);
        out = out.iter().flat_map(|p| perms.iter().map(move |q| [p.clone(), q.clone()].concat())).collect();
        i = j;
    }
    out
}

fn permute(v: &mut Vec<usize>, i: usize, out: &mut Vec<Vec<usize>>) {
    if i == v.len() {
        out.push(v.clone());
        return;
    }
    for j in i..v.len() {
        v.swap(i, j);
        permute(v, i + 1, out);
        v.swap(i, j);
    }
}

/// Smallest relabelled edge list over side-preserving relabellings that
/// sort vertices by degree.
fn canonical(s: &Shape) -> Shape {
    let (dl, dr) = degrees(s);
    let (ol, or) = (cell_orders(&dl), cell_orders(&dr));
    let mut best: Option<Vec<(usize, usize)>> = None;
    for pl in &ol {
        let mut lpos = vec![0; s.0];
        for (new, &old) in pl.iter().enumerate() {
            lpos[old] = new;
        }
        for pr in &or {
            let mut rpos = vec![0; s.1];
            for (new, &old) in pr.iter().enumerate() {
                rpos[old] = new;
            }
            let mut e: Vec<_> = s.2.iter().map(|&(u, w)| (lpos[u], rpos[w])).collect();
            e.sort_unstable();
            if best.as_ref().is_none_or(|b| e < *b) {
                best = Some(e);
            }
        }
    }
    (s.0, s.1, best.unwrap())
}

/// Connected bipartite graphs with `1..=max_edges` edges and maximum
/// degree at most `max_degree`, one per side-preserving isomorphism class.
fn connected_shapes(max_edges: usize, max_degree: usize) -> Vec<Shape> {
    use std::collections::BTreeSet;
    let mut layer: BTreeSet<Shape> = BTreeSet::from([(1, 1, vec![(0, 0)])]);
    let mut all: Vec<Shape> = layer.iter().cloned().collect();
    for _ in 1..max_edges {
        let mut next = BTreeSet::new();
        for s in &layer {
            let (dl, dr) = degrees(s);
            let mut grow = |t: Shape| {
                next.insert(canonical(&t));
            };
            for w in (0..s.1).filter(|&w| dr[w] < max_degree) {
                let mut e = s.2.clone();
                e.push((s.0, w));
                grow((s.0 + 1, s.1, e));
            }
            for u in (0..s.0).filter(|&u| dl[u] < max_degree) {
                let mut e = s.2.clone();
                e.push((u, s.1));
                grow((s.0, s.1 + 1, e));
                for w in (0..s.1).filter(|&w| dr[w] < max_degree && !s.2.contains(&(u, w))) {
                    let mut e = s.2.clone();
                    e.push((u, w));
                    grow((s.0, s.1, e));
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all
}

/// Every bipartite graph without isolated vertices having
/// `1..=max_edges` edges and maximum degree at most `max_degree`, up to
/// side-preserving isomorphism. Disconnected graphs are disjoint unions of
/// connected ones, components in canonical order.
pub fn small_graphs(max_edges: usize, max_degree: usize) -> Vec<BipartiteGraph> {
    let conn = connected_shapes(max_edges, max_degree);
    let mut out = Vec::new();
    // multisets of component indices, non-decreasing
    fn extend(conn: &[Shape], from: usize, left: usize, acc: &mut Vec<usize>, out: &mut Vec<BipartiteGraph>) {
        if !acc.is_empty() {
            let (mut a, mut b, mut pairs) = (0, 0, Vec::new());
            for &i in acc.iter() {
                let s = &conn[i];
                pairs.extend(s.2.iter().map(|&(u, w)| (u + a, w + b)));
                a += s.0;
                b += s.1;
            }
            out.push(BipartiteGraph::new(a, b, &pairs).unwrap());
        }
        for i in from..conn.len() {
            if conn[i].2.len() <= left {
                acc.push(i);
                extend(conn, i, left - conn[i].2.len(), acc, out);
                acc.pop();
            }
        }
    }
    extend(&conn, 0, max_edges, &mut Vec::new(), &mut out);
    out
}
