mod common;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use kempe_core::coloring::{is_proper, status, validate, ColoringStatus};
use kempe_core::diameter::{length_bound, transform_plan, Milestone, TransformPlan};
use kempe_core::graph::BipartiteGraph;
use kempe_core::kernel::{apply_way, propose, way_probability, Outcome};
use kempe_core::latin::{rectangle_to_graph, sample_completion, LatinRectangle};
use kempe_core::oracle::{chi_square, enumerate, tvd};
use kempe_core::prob::ratio;
use kempe_core::two_color::TwoColorSubgraph;
use kempe_core::walk::{maximal_from, next_repair, repair_deficiencies, ColorContext, RepairPick};
use kempe_core::{initial_coloring, Color, Coloring, KernelKind, Way};

use common::{random_graph, random_regular};

/// A random graph with a scrambled proper coloring, from one seed.
fn instance(seed: u64, max_side: usize, extra: usize) -> (BipartiteGraph, usize, Coloring) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = rng.gen_range(0.2..0.8);
    let g = random_graph(&mut rng, max_side, p);
    let k = g.max_degree() + extra;
    let mut c = initial_coloring(&g, k).unwrap();
    for _ in 0..50 {
        if let Ok(prop) = propose(&g, k, KernelKind::General, &c, &mut rng) {
            if let Some(to) = prop.to() {
                c = to.clone();
            }
        }
    }
    (g, k, c)
}

/// Fixed color classes stay equal to the target's after their large
/// milestone, and the walked components hold at most `per_edge * |E|` edges.
fn check_plan_invariants(g: &BipartiteGraph, plan: &TransformPlan, per_edge: usize) -> Result<(), TestCaseError> {
    let mut fixed: Vec<(Color, usize)> = Vec::new();
    for m in &plan.milestones {
        if let Milestone::Large { color, after_moves } = *m {
            fixed.push((color, after_moves));
        }
    }
    for (color, from) in fixed {
        for state in plan.states.iter().skip(from.saturating_sub(1)) {
            for e in 0..g.edge_count() {
                prop_assert_eq!(state.color(e) == color, plan.target.color(e) == color, "class {} changed after its milestone", color);
            }
        }
    }
    prop_assert!(plan.component_edges <= per_edge * g.edge_count());
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn initial_coloring_is_proper(seed in any::<u64>(), extra in 0usize..=3) {
        let (g, k, _) = instance(seed, 7, extra);
        let c = initial_coloring(&g, k).unwrap();
        prop_assert!(validate(&g, &c).unwrap().is_proper());
    }

    #[test]
    fn proposals_are_closed_and_replayable(seed in any::<u64>(), extra in 0usize..=2) {
        let (g, k, c) = instance(seed, 5, extra);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xabc);
        for _ in 0..20 {
            let prop = propose(&g, k, KernelKind::General, &c, &mut rng).unwrap();
            prop_assert!(prop.probability > ratio(0, 1) && prop.probability <= ratio(1, 1));
            prop_assert_eq!(way_probability(&g, k, KernelKind::General, &c, &prop.way).unwrap(), prop.probability.clone());
            let text = prop.way.to_string();
            prop_assert_eq!(text.parse::<Way>().unwrap(), prop.way.clone());
            if let Outcome::Proper(to) = &prop.outcome {
                prop_assert!(is_proper(&g, to));
                prop_assert_eq!(&apply_way(&g, k, KernelKind::General, &c, &prop.way).unwrap(), to);
            }
        }
    }

    #[test]
    fn validate_commutes_with_relabelling(seed in any::<u64>(), flip in 0usize..12) {
        let (g, k, mut c) = instance(seed, 5, 1);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = flip % g.edge_count();
        c.set(e, rng.gen_range(0..k) as Color);
        let mut perm: Vec<Color> = (0..k as Color).collect();
        perm.shuffle(&mut rng);
        let before = status(&g, &c);
        let after = status(&g, &c.relabel(&perm));
        match (&before, &after) {
            (ColoringStatus::Proper, ColoringStatus::Proper) => {}
            (ColoringStatus::Almost(a), ColoringStatus::Almost(b)) => {
                prop_assert_eq!(a.len(), b.len());
                for (x, y) in a.iter().zip(b) {
                    prop_assert_eq!(x.vertex, y.vertex);
                    prop_assert_eq!(perm[x.repeated_color as usize], y.repeated_color);
                    let mut mapped: Vec<Color> = x.missing_colors.iter().map(|&m| perm[m as usize]).collect();
                    mapped.sort_unstable();
                    prop_assert_eq!(&mapped, &y.missing_colors);
                }
            }
            (ColoringStatus::Invalid(a), ColoringStatus::Invalid(b)) => prop_assert_eq!(a, b),
            _ => prop_assert!(false, "{:?} became {:?}", before, after),
        }
    }

    #[test]
    fn two_color_components_alternate(seed in any::<u64>(), a in 0u8..4, b in 0u8..4) {
        prop_assume!(a != b);
        let (g, k, c) = instance(seed, 6, 1);
        prop_assume!((a as usize) < k && (b as usize) < k);
        let h = TwoColorSubgraph::build(&g, &c, a, b);
        for comp in &h.components {
            for w in comp.edges.windows(2) {
                prop_assert_ne!(c.color(w[0]), c.color(w[1]));
            }
            if comp.is_cycle() {
                prop_assert_eq!(comp.edges.len() % 2, 0);
            }
        }
    }

    #[test]
    fn repair_only_touches_walk_colors(seed in any::<u64>()) {
        let (g, k, c) = instance(seed, 5, 1);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        // recolor one edge to a color missing at one end to get an almost coloring
        let e = rng.gen_range(0..g.edge_count());
        let (u, _) = g.endpoints(e);
        let old = c.color(e);
        let Some(new) = (0..k as Color).find(|&x| x != old && !c.has_color_at(&g, u, x)) else { return Ok(()) };
        let mut a = c.clone();
        a.set(e, new);
        prop_assume!(matches!(status(&g, &a), ColoringStatus::Almost(_)));
        let ctx = ColorContext::Pair(old.min(new), old.max(new));
        let mut picks = Vec::new();
        let mut cur = a.clone();
        while let Ok(Some((d, partner))) = next_repair(&g, &cur, ctx) {
            if picks.len() == 4 {
                break;
            }
            let edge = d.repeated_edges[rng.gen_range(0..2)];
            maximal_from(&g, &cur, d.vertex, edge, (d.repeated_color, partner)).flip(&mut cur);
            picks.push(RepairPick { vertex: d.vertex, edge });
        }
        if let Ok((fixed, walks)) = repair_deficiencies(&g, &a, ctx, &picks) {
            prop_assert_eq!(&fixed, &cur);
            prop_assert!(is_proper(&g, &fixed));
            for f in a.diff(&fixed) {
                let w = walks.iter().find(|w| w.edges.contains(&f));
                prop_assert!(w.is_some(), "edge {} changed outside the walks", f);
                let (x, y) = w.unwrap().colors;
                prop_assert!([x, y].contains(&a.color(f)) && [x, y].contains(&fixed.color(f)));
            }
        }
    }

    #[test]
    fn plans_are_valid_and_short(seed in any::<u64>(), extra in 0usize..=1) {
        let (g, k, c1) = instance(seed, 4, extra);
        let (_, _, c2) = instance(seed, 4, extra);
        let mut rng = ChaCha8Rng::seed_from_u64(!seed);
        let mut c2 = c2;
        for _ in 0..50 {
            if let Some(to) = propose(&g, k, KernelKind::General, &c2, &mut rng).unwrap().to() {
                c2 = to.clone();
            }
        }
        let plan = transform_plan(&g, k, KernelKind::General, &c1, &c2).unwrap();
        plan.verify(&g, k, KernelKind::General).unwrap();
        prop_assert!(plan.len() <= length_bound(KernelKind::General, g.edge_count()));
        check_plan_invariants(&g, &plan, 3)?;
    }

    #[test]
    fn regular_plans_are_within_three_per_edge(seed in any::<u64>(), n in 3usize..=4, k in 2usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_regular(&mut rng, n, k);
        let mut ends = Vec::new();
        for _ in 0..2 {
            let mut c = initial_coloring(&g, k).unwrap();
            for _ in 0..40 {
                if let Some(to) = propose(&g, k, KernelKind::Regular, &c, &mut rng).unwrap().to() {
                    c = to.clone();
                }
            }
            ends.push(c);
        }
        let plan = transform_plan(&g, k, KernelKind::Regular, &ends[0], &ends[1]).unwrap();
        plan.verify(&g, k, KernelKind::Regular).unwrap();
        prop_assert!(plan.len() <= 3 * g.edge_count());
        check_plan_invariants(&g, &plan, 2)?;
    }

    #[test]
    fn coloring_count_is_invariant_under_relabelling(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, 4, 0.5);
        let k = g.max_degree();
        let (mut l, mut r): (Vec<usize>, Vec<usize>) = ((0..g.left_count()).collect(), (0..g.right_count()).collect());
        l.shuffle(&mut rng);
        r.shuffle(&mut rng);
        let mut pairs: Vec<(usize, usize)> = g.pairs().map(|(u, w)| (l[u], r[w])).collect();
        pairs.shuffle(&mut rng);
        let h = BipartiteGraph::new(g.left_count(), g.right_count(), &pairs).unwrap();
        let swapped: Vec<(usize, usize)> = pairs.iter().map(|&(u, w)| (w, u)).collect();
        let s = BipartiteGraph::new(g.right_count(), g.left_count(), &swapped).unwrap();
        let n = enumerate(&g, k, None, false).unwrap().len();
        prop_assert_eq!(n, enumerate(&h, k, None, false).unwrap().len());
        prop_assert_eq!(n, enumerate(&s, k, None, false).unwrap().len());
    }

    #[test]
    fn tvd_is_a_distance(h in prop::collection::vec(0u64..50, 2..20)) {
        prop_assume!(h.iter().sum::<u64>() > 0);
        let d = tvd(&h).unwrap();
        prop_assert!((0.0..=1.0).contains(&d));
        prop_assert!(chi_square(&h).unwrap() >= 0.0);
    }

    #[test]
    fn completions_extend_the_rectangle(seed in any::<u64>(), n in 2usize..=5, r in 0usize..=4) {
        prop_assume!(r <= n);
        // cyclic rows are always Latin
        let rows: Vec<Vec<u8>> = (0..r).map(|i| (0..n).map(|j| ((i + j) % n) as u8).collect()).collect();
        let rect = LatinRectangle::new(n, rows.clone()).unwrap();
        let sq = sample_completion(&rect, 200, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        prop_assert_eq!(&sq.rows()[..r], &rows[..]);
        prop_assert_eq!(rectangle_to_graph(&rect).graph.edge_count(), n * (n - r));
    }
}

#[test]
fn oracle_examples() {
    let path = BipartiteGraph::new(1, 2, &[(0, 0), (0, 1)]).unwrap();
    assert_eq!(enumerate(&path, 2, None, false).unwrap().len(), 2);
    let mut one = vec![0u64; 12];
    one[3] = 1200;
    assert!((tvd(&one).unwrap() - 11.0 / 12.0).abs() < 1e-12);
    assert!((chi_square(&one).unwrap() - 1200.0 * 11.0).abs() < 1e-6);
    assert_eq!(tvd(&[5, 5, 5]).unwrap(), 0.0);
    assert!(tvd(&[0, 0]).is_err());
}
