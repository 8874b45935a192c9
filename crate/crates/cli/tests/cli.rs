use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

use kempe::io::{parse_coloring, parse_graph, parse_plan, write_coloring};
use kempe_core::kernel::apply_way;
use kempe_core::oracle::{enumerate, tvd};
use kempe_core::{Coloring, KernelKind};

const K33: &str = "p bipartite 3 3 9\ne 1 1\ne 1 2\ne 1 3\ne 2 1\ne 2 2\ne 2 3\ne 3 1\ne 3 2\ne 3 3\n";

fn kempe(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kempe")).args(args).output().unwrap()
}

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stdout(o: &Output) -> String {
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stat<'a>(out: &'a str, key: &str) -> &'a str {
    out.lines().find_map(|l| l.strip_prefix(&format!("{key}="))).unwrap_or_else(|| panic!("no {key} in {out}"))
}

#[test]
fn enumerate_counts() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "k33.txt", K33);
    assert_eq!(stdout(&kempe(&["enumerate", "--graph", s(&g), "--k", "3"])), "12\n");
    let path = file(&dir, "path.txt", "p bipartite 1 2 2\ne 1 1\ne 1 2\n");
    assert_eq!(stdout(&kempe(&["enumerate", "--graph", s(&path), "--k", "2"])), "2\n");
    let out = dir.path().join("all.txt");
    stdout(&kempe(&["enumerate", "--graph", s(&g), "--k", "3", "--out", s(&out)]));
    assert_eq!(fs::read_to_string(&out).unwrap().lines().count(), 12);
}

#[test]
fn enumerate_refuses_large_graphs() {
    let dir = TempDir::new().unwrap();
    let mut text = String::from("p bipartite 5 5 25\n");
    for u in 1..=5 {
        for w in 1..=5 {
            text.push_str(&format!("e {u} {w}\n"));
        }
    }
    let g = file(&dir, "k55.txt", &text);
    let o = kempe(&["enumerate", "--graph", s(&g), "--k", "5"]);
    assert_eq!(o.status.code(), Some(2));
    let o = kempe(&["enumerate", "--graph", s(&g), "--k", "5", "--force-large", "--limit", "10"]);
    assert_eq!(o.status.code(), Some(2), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn sample_is_uniform_and_reproducible() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "k33.txt", K33);
    let (a, b) = (dir.path().join("a.txt"), dir.path().join("b.txt"));
    let args = |out: &Path| {
        vec!["sample", "--graph", s(&g), "--k", "3", "--steps", "100000", "--thin", "10", "--seed", "7", "--chains", "2"]
            .into_iter()
            .map(String::from)
            .chain(["--out".into(), s(out).into()])
            .collect::<Vec<String>>()
    };
    let run = |out: &Path| Command::new(env!("CARGO_BIN_EXE_kempe")).args(args(out)).output().unwrap();
    let stats = stdout(&run(&a));
    let again = stdout(&run(&b));
    assert_eq!(stats, again);
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert_eq!(stat(&stats, "kernel"), "regular");
    assert_eq!(stat(&stats, "distinct"), "12");
    assert!(stat(&stats, "max_inverse_ratio").split('/').all(|t| t.parse::<u64>().is_ok()));
    assert!(stat(&stats, "max_inverse_ratio_decimal").parse::<f64>().unwrap() <= 480.0);

    let graph = parse_graph(K33).unwrap();
    let set = enumerate(&graph, 3, None, false).unwrap();
    let samples: Vec<Coloring> = fs::read_to_string(&a)
        .unwrap()
        .lines()
        .map(|l| Coloring::new(l.split_whitespace().map(|t| t.parse().unwrap()).collect(), 3).unwrap())
        .collect();
    assert_eq!(samples.len(), 2 * 10_001);
    assert!(tvd(&set.histogram(&samples).unwrap()).unwrap() < 0.05);
}

#[test]
fn sample_from_a_given_coloring_with_the_general_kernel() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "k33.txt", K33);
    let graph = parse_graph(K33).unwrap();
    let start = enumerate(&graph, 3, None, false).unwrap().colorings[5].clone();
    let c = file(&dir, "c.txt", &write_coloring(&start));
    let out = stdout(&kempe(&[
        "sample", "--graph", s(&g), "--k", "3", "--coloring", s(&c), "--steps", "500", "--kernel", "general",
    ]));
    assert_eq!(stat(&out, "kernel"), "general");
    assert_eq!(stat(&out, "steps"), "500");
    assert_eq!(stat(&out, "ratio_bound"), "17280");
}

#[test]
fn infeasible_color_count_is_an_input_error() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "k33.txt", K33);
    let o = kempe(&["sample", "--graph", s(&g), "--k", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("infeasible color count"));
}

#[test]
fn malformed_inputs_exit_with_two() {
    let dir = TempDir::new().unwrap();
    let bad = file(&dir, "bad.txt", "p bipartite 2 2 1\ne 3 1\n");
    assert_eq!(kempe(&["enumerate", "--graph", s(&bad), "--k", "2"]).status.code(), Some(2));
    let missing = dir.path().join("missing.txt");
    assert_eq!(kempe(&["enumerate", "--graph", s(&missing), "--k", "2"]).status.code(), Some(2));
    let g = file(&dir, "k33.txt", K33);
    let improper = file(&dir, "c.txt", &(0..9).map(|e| format!("c {e} 0\n")).collect::<String>());
    let o = kempe(&["sample", "--graph", s(&g), "--k", "3", "--coloring", s(&improper)]);
    assert_eq!(o.status.code(), Some(2));
    let o = kempe(&["sample", "--graph", s(&g), "--k", "3", "--kernel", "regular", "--steps", "1"]);
    assert!(o.status.success());
    let path = file(&dir, "path.txt", "p bipartite 1 2 2\ne 1 1\ne 1 2\n");
    let o = kempe(&["sample", "--graph", s(&path), "--k", "2", "--kernel", "regular"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn path_plans_replay() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "k33.txt", K33);
    let graph = parse_graph(K33).unwrap();
    let all = enumerate(&graph, 3, None, false).unwrap().colorings;
    let (c1, c2) = (file(&dir, "c1.txt", &write_coloring(&all[0])), file(&dir, "c2.txt", &write_coloring(&all[11])));
    for (kind, bound) in [("general", "54"), ("regular", "27")] {
        let out = stdout(&kempe(&[
            "path", "--graph", s(&g), "--k", "3", "--coloring", s(&c1), "--coloring2", s(&c2), "--kernel", kind,
        ]));
        assert_eq!(stat(&out, "bound"), bound);
        let moves: usize = stat(&out, "moves").parse().unwrap();
        let ways = parse_plan(&out).unwrap();
        assert_eq!(ways.len(), moves);
        let k = if kind == "general" { KernelKind::General } else { KernelKind::Regular };
        let mut cur = parse_coloring(&fs::read_to_string(&c1).unwrap(), &graph, 3).unwrap();
        for w in &ways {
            cur = apply_way(&graph, 3, k, &cur, w).unwrap();
        }
        assert_eq!(cur, all[11]);
    }
    let same = stdout(&kempe(&["path", "--graph", s(&g), "--k", "3", "--coloring", s(&c1), "--coloring2", s(&c1)]));
    assert_eq!(stat(&same, "moves"), "0");
}

#[test]
fn latin_completion() {
    let dir = TempDir::new().unwrap();
    let forced = file(&dir, "r.txt", "latin 3 2\n1 2 3\n2 3 1\n");
    assert_eq!(stdout(&kempe(&["latin", "--rectangle", s(&forced)])), "latin 3 3\n1 2 3\n2 3 1\n3 1 2\n");
    let empty = file(&dir, "e.txt", "latin 4 0\n");
    let out = dir.path().join("sq.txt");
    stdout(&kempe(&["latin", "--rectangle", s(&empty), "--steps", "300", "--seed", "3", "--out", s(&out)]));
    let sq = fs::read_to_string(&out).unwrap();
    assert!(sq.starts_with("latin 4 4\n"));
    let invalid = file(&dir, "bad.txt", "latin 3 2\n1 2 3\n1 3 2\n");
    assert_eq!(kempe(&["latin", "--rectangle", s(&invalid)]).status.code(), Some(2));
}

#[test]
fn latin_order_three_is_uniform() {
    let dir = TempDir::new().unwrap();
    let empty = file(&dir, "e.txt", "latin 3 0\n");
    let mut counts = std::collections::BTreeMap::new();
    for seed in 0..1200 {
        let seed = seed.to_string();
        let sq = stdout(&kempe(&["latin", "--rectangle", s(&empty), "--steps", "60", "--seed", &seed]));
        *counts.entry(sq).or_insert(0u64) += 1;
    }
    assert_eq!(counts.len(), 12);
    let h: Vec<u64> = counts.into_values().collect();
    assert!(tvd(&h).unwrap() < 0.05, "{h:?}");
}
