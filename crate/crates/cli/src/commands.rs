//! The subcommands. Each returns the text for stdout; files named with
//! `--out` are written here.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use kempe_core::coloring::{is_proper, Coloring};
use kempe_core::diameter::{length_bound, transform_plan};
use kempe_core::error::Error;
use kempe_core::graph::BipartiteGraph;
use kempe_core::initial::initial_coloring;
use kempe_core::latin::sample_completion;
use kempe_core::metropolis::{ratio_bound, run_chain, ChainStats};
use kempe_core::oracle::enumerate;
use kempe_core::regular::assert_regular;
use kempe_core::KernelKind;

use crate::io;
use crate::CliError;

#[derive(Debug, Parser)]
#[command(name = "kempe", version, about = "Uniform sampling of edge colorings of bipartite graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the Metropolis-Hastings chain and write the sampled colorings.
    Sample(SampleArgs),
    /// Count (and optionally list) all proper colorings.
    Enumerate(EnumerateArgs),
    /// Build a sequence of chain moves between two colorings.
    Path(PathArgs),
    /// Sample a completion of a Latin rectangle.
    Latin(LatinArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KernelChoice {
    General,
    Regular,
    /// Regular when the graph is `k`-regular, general otherwise.
    Auto,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub k: usize,
    /// Starting coloring; a deterministic one is built when absent.
    #[arg(long)]
    pub coloring: Option<PathBuf>,
    #[arg(long, default_value_t = 100_000)]
    pub steps: u64,
    #[arg(long, default_value_t = 1)]
    pub thin: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1)]
    pub chains: u64,
    #[arg(long, value_enum, default_value_t = KernelChoice::Auto)]
    pub kernel: KernelChoice,
    /// One sampled coloring per line, chains in order.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub limit: Option<usize>,
    #[arg(long)]
    pub force_large: bool,
    /// One coloring per line in canonical order.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PathArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub coloring: PathBuf,
    #[arg(long)]
    pub coloring2: PathBuf,
    #[arg(long, value_enum, default_value_t = KernelChoice::Auto)]
    pub kernel: KernelChoice,
    /// The plan; written to stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LatinArgs {
    #[arg(long)]
    pub rectangle: PathBuf,
    #[arg(long, default_value_t = 100_000)]
    pub steps: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// The completed square; written to stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Sample(a) => sample(&a),
        Command::Enumerate(a) => enumerate_cmd(&a),
        Command::Path(a) => path(&a),
        Command::Latin(a) => latin(&a),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

fn load_graph(path: &Path) -> Result<BipartiteGraph, CliError> {
    Ok(io::parse_graph(&read(path)?)?)
}

fn load_coloring(path: &Path, g: &BipartiteGraph, k: usize) -> Result<Coloring, CliError> {
    let c = io::parse_coloring(&read(path)?, g, k)?;
    if !is_proper(g, &c) {
        return Err(Error::NotProper.into());
    }
    Ok(c)
}

fn check_k(g: &BipartiteGraph, k: usize) -> Result<(), CliError> {
    if k < g.max_degree() || k == 0 {
        return Err(Error::InfeasibleColorCount { k, max_degree: g.max_degree() }.into());
    }
    Ok(())
}

pub fn resolve_kernel(choice: KernelChoice, g: &BipartiteGraph, k: usize) -> Result<KernelKind, CliError> {
    match choice {
        KernelChoice::General => Ok(KernelKind::General),
        KernelChoice::Regular => {
            assert_regular(g, k)?;
            Ok(KernelKind::Regular)
        }
        KernelChoice::Auto => Ok(if assert_regular(g, k).is_ok() { KernelKind::Regular } else { KernelKind::General }),
    }
}

fn kernel_name(kind: KernelKind) -> &'static str {
    match kind {
        KernelKind::General => "general",
        KernelKind::Regular => "regular",
    }
}

/// The generator for chain `i`: one ChaCha8 seed shared by all chains,
/// one stream per chain.
pub fn chain_rng(seed: u64, i: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(i);
    rng
}

fn sample(a: &SampleArgs) -> Result<String, CliError> {
    let g = load_graph(&a.graph)?;
    check_k(&g, a.k)?;
    let kind = resolve_kernel(a.kernel, &g, a.k)?;
    let start = match &a.coloring {
        Some(p) => load_coloring(p, &g, a.k)?,
        None => initial_coloring(&g, a.k)?,
    };
    if a.thin == 0 || a.chains == 0 {
        return Err(CliError::Usage("--thin and --chains must be positive".into()));
    }
    let results: Vec<Result<(Vec<Coloring>, ChainStats), Error>> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..a.chains)
            .map(|i| {
                let (g, start) = (&g, &start);
                s.spawn(move || run_chain(g, a.k, kind, start, a.steps, a.thin, &mut chain_rng(a.seed, i)))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("chain thread panicked")).collect()
    });
    let mut stats = ChainStats::default();
    let mut lines = String::new();
    let mut distinct = std::collections::BTreeSet::new();
    for r in results {
        let (samples, st) = r.map_err(CliError::internal)?;
        stats.merge(&st);
        for c in &samples {
            if !is_proper(&g, c) {
                return Err(CliError::Internal(format!("sample [{}] is not proper", c.color_string())));
            }
            lines.push_str(&c.color_string());
            lines.push('\n');
            distinct.insert(c.colors().to_vec());
        }
    }
    if let Some(out) = &a.out {
        write(out, &lines)?;
    }
    let mut s = String::new();
    let _ = writeln!(s, "kernel={}", kernel_name(kind));
    let _ = writeln!(s, "chains={}", a.chains);
    let _ = writeln!(s, "steps={}", stats.steps);
    let _ = writeln!(s, "acceptances={}", stats.acceptances);
    let _ = writeln!(s, "acceptance_rate={:.6}", stats.acceptance_rate());
    let _ = writeln!(s, "lazy={}", stats.lazy);
    let _ = writeln!(s, "aborted={}", stats.aborted);
    let _ = writeln!(s, "irreversible={}", stats.irreversible);
    let _ = writeln!(s, "max_inverse_ratio={}", stats.max_inverse_ratio);
    let _ = writeln!(s, "max_inverse_ratio_decimal={:.6}", stats.max_inverse_ratio_f64());
    let _ = writeln!(s, "ratio_bound={}", ratio_bound(kind, g.vertex_count()));
    let _ = writeln!(s, "samples={}", lines.lines().count());
    let _ = writeln!(s, "distinct={}", distinct.len());
    for (label, b) in &stats.branches {
        let _ = writeln!(s, "branch.{label}={}/{}", b.accepted, b.proposed);
    }
    Ok(s)
}

fn enumerate_cmd(a: &EnumerateArgs) -> Result<String, CliError> {
    let g = load_graph(&a.graph)?;
    check_k(&g, a.k)?;
    let set = enumerate(&g, a.k, a.limit, a.force_large)?;
    if let Some(out) = &a.out {
        let text: String = set.colorings.iter().map(|c| c.color_string() + "\n").collect();
        write(out, &text)?;
    }
    Ok(format!("{}\n", set.len()))
}

fn path(a: &PathArgs) -> Result<String, CliError> {
    let g = load_graph(&a.graph)?;
    check_k(&g, a.k)?;
    let kind = resolve_kernel(a.kernel, &g, a.k)?;
    let c1 = load_coloring(&a.coloring, &g, a.k)?;
    let c2 = load_coloring(&a.coloring2, &g, a.k)?;
    let plan = transform_plan(&g, a.k, kind, &c1, &c2).map_err(CliError::internal)?;
    plan.verify(&g, a.k, kind).map_err(CliError::internal)?;
    let bound = length_bound(kind, g.edge_count());
    if plan.len() > bound {
        return Err(CliError::Internal(format!("plan has {} moves, above the bound {bound}", plan.len())));
    }
    let text = io::write_plan(&plan);
    let mut s = String::new();
    let _ = writeln!(s, "kernel={}", kernel_name(kind));
    let _ = writeln!(s, "moves={}", plan.len());
    let _ = writeln!(s, "bound={bound}");
    match &a.out {
        Some(out) => write(out, &text)?,
        None => s.push_str(&text),
    }
    Ok(s)
}

fn latin(a: &LatinArgs) -> Result<String, CliError> {
    let r = io::parse_rectangle(&read(&a.rectangle)?)?;
    let sq = sample_completion(&r, a.steps, &mut chain_rng(a.seed, 0))?;
    let text = io::write_square(&sq);
    match &a.out {
        Some(out) => {
            write(out, &text)?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}
