use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};
use double_chain::certify::{certify_embedding, certify_path, flat_index};
use double_chain::chains::{generate_double_chain, Color, Coloring, PointRef};
use double_chain::nhap::embed_nhap;
use double_chain::oracle::{brute_force_embed, brute_force_nhap, SearchBudget, SearchStatus};
use double_chain::trees::{embed_caterpillar, embed_star_forest, Caterpillar, ColoredGraph, Embedding};
use double_chain::EmbedError;
use double_chain_cli::format::{
    check_refs, parse_graph, refs_from_dto, refs_to_dto, EmbeddingDto, FormatError, Instance, OracleDto, PathDto,
    StatusDto,
};
use double_chain_cli::svg::{path_edges, render_svg, RenderStyle};
use double_chain_cli::sweep::{run_sweep, Suite, SweepConfig};
use double_chain_cli::{generate_instance, ColoringSpec};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde::Serialize;

#[derive(Parser)]
#[command(name = "dchain", version, about = "Alternating paths and trees on double-chains")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate an instance: the standard double-chain plus a coloring.
    Gen(GenArgs),
    /// Non-crossing alternating Hamiltonian path through an instance.
    EmbedPath(EmbedArgs),
    /// Embed a caterpillar on an instance.
    EmbedCaterpillar(GraphEmbedArgs),
    /// Embed a forest of stars on an instance.
    EmbedStars(GraphEmbedArgs),
    /// Exhaustive search for a path, or for an embedding with --graph.
    Oracle(OracleArgs),
    /// Check a path or an embedding against an instance.
    Verify(VerifyArgs),
    /// Draw an instance, optionally with a path or an embedding, as SVG.
    Render(VerifyArgs),
    /// Run an exhaustive small-n suite.
    Sweep(SweepArgs),
    /// Time the path construction over a size ladder.
    Bench(BenchArgs),
}

#[derive(Args)]
struct Output {
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    n1: usize,
    #[arg(long)]
    n2: usize,
    #[arg(long, value_enum, default_value = "random-equitable")]
    coloring: ColoringSpec,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    c1: Option<String>,
    #[arg(long)]
    c2: Option<String>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct EmbedArgs {
    /// Instance JSON; `-` reads stdin.
    #[arg(long, default_value = "-")]
    instance: String,
    /// Run the quadratic geometric validator on the result.
    #[arg(long)]
    certify: bool,
    /// Also write a drawing here.
    #[arg(long)]
    svg: Option<PathBuf>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct GraphEmbedArgs {
    #[command(flatten)]
    embed: EmbedArgs,
    /// Graph JSON; `-` reads stdin.
    #[arg(long)]
    graph: String,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long, default_value = "-")]
    instance: String,
    #[arg(long)]
    graph: Option<String>,
    #[arg(long, default_value_t = 10_000_000)]
    nodes: u64,
    #[arg(long)]
    time_ms: Option<u64>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value = "-")]
    instance: String,
    /// Path JSON (`{"order": ...}`).
    #[arg(long, conflicts_with_all = ["graph", "embedding"])]
    path: Option<String>,
    #[arg(long, requires = "embedding")]
    graph: Option<String>,
    /// Embedding JSON (`{"map": ...}`).
    #[arg(long, requires = "graph")]
    embedding: Option<String>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    #[arg(long, default_value_t = 8)]
    max_n: usize,
    /// Largest instance also searched by the oracle; defaults to --max-n.
    #[arg(long)]
    oracle_max_n: Option<usize>,
    #[arg(long, default_value_t = 1_000_000)]
    oracle_nodes: u64,
    /// Corrupt every output before validation, to test the harness.
    #[arg(long)]
    inject_fault: bool,
    #[arg(long)]
    threads: Option<usize>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_delimiter = ',', default_value = "10000,20000,40000,80000")]
    sizes: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_value = "0.2,0.5,0.8")]
    fracs: Vec<f64>,
    #[arg(long, default_value_t = 5)]
    reps: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    output: Output,
}

/// Failure classes, one exit code each.
enum Failure {
    Precondition(String),
    Internal(String),
    Inconclusive,
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Precondition(_) => 1,
            Failure::Internal(_) => 2,
            Failure::Inconclusive => 3,
        }
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::Precondition(e.to_string())
    }
}

impl From<EmbedError> for Failure {
    fn from(e: EmbedError) -> Self {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Precondition(e.to_string())
        }
    }
}

fn pre(e: impl std::fmt::Display) -> Failure {
    Failure::Precondition(e.to_string())
}

fn read_input(src: &str) -> Result<String, Failure> {
    if src == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| pre(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(src).map_err(|e| pre(format!("{src}: {e}")))
    }
}

fn write_text(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| pre(format!("{}: {e}", p.display()))),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| pre(format!("stdout: {e}"))),
    }
}

fn write_json(out: &Option<PathBuf>, value: &impl Serialize) -> Result<(), Failure> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Failure::Internal(e.to_string()))?;
    s.push('\n');
    write_text(out, &s)
}

fn load_instance(src: &str) -> Result<Instance, Failure> {
    Ok(Instance::parse(&read_input(src)?)?)
}

fn load_graph(src: &str) -> Result<ColoredGraph, Failure> {
    Ok(parse_graph(&read_input(src)?)?)
}

fn flat(inst: &Instance, refs: &[PointRef]) -> Vec<usize> {
    refs.iter().map(|&r| flat_index(inst.dc.c1.len(), r)).collect()
}

fn to_ref(inst: &Instance, i: usize) -> PointRef {
    let n1 = inst.dc.c1.len();
    if i < n1 {
        PointRef::c1(i)
    } else {
        PointRef::c2(i - n1)
    }
}

fn svg_for(inst: &Instance, edges: &[(usize, usize)]) -> String {
    render_svg(&inst.dc.all_points(), &inst.coloring.flat(), edges, &RenderStyle::default())
}

fn graph_edges(inst: &Instance, g: &ColoredGraph, map: &[PointRef]) -> Vec<(usize, usize)> {
    let m = flat(inst, map);
    g.edges().iter().map(|&(u, v)| (m[u], m[v])).collect()
}

fn gen(a: GenArgs) -> Result<(), Failure> {
    let explicit = a.c1.as_deref().zip(a.c2.as_deref());
    let inst = generate_instance(a.n1, a.n2, a.coloring, a.seed, explicit).map_err(pre)?;
    write_json(&a.output.out, &inst.to_dto())
}

fn embed_path(a: EmbedArgs) -> Result<(), Failure> {
    let inst = load_instance(&a.instance)?;
    let p = embed_nhap(&inst.dc, &inst.coloring)?;
    if a.certify {
        certify_path(&inst.dc, &inst.coloring, &p.order)
            .map_err(|d| Failure::Internal(format!("certification failed: {d}")))?;
    }
    if let Some(svg) = &a.svg {
        write_text(&Some(svg.clone()), &svg_for(&inst, &path_edges(&flat(&inst, &p.order))))?;
    }
    write_json(&a.output.out, &PathDto { order: refs_to_dto(&p.order) })
}

fn embed_graph(a: GraphEmbedArgs, stars: bool) -> Result<(), Failure> {
    let inst = load_instance(&a.embed.instance)?;
    let g = load_graph(&a.graph)?;
    let emb: Embedding = if stars {
        embed_star_forest(&inst.dc, &g, &inst.coloring)?
    } else {
        let cat = Caterpillar::new(g.clone()).map_err(pre)?;
        embed_caterpillar(&inst.dc, &cat, &inst.coloring)?
    };
    if a.embed.certify {
        certify_embedding(&inst.dc.all_points(), &inst.coloring.flat(), g.colors(), g.edges(), &flat(&inst, &emb.map))
            .map_err(|d| Failure::Internal(format!("certification failed: {d}")))?;
    }
    if let Some(svg) = &a.embed.svg {
        write_text(&Some(svg.clone()), &svg_for(&inst, &graph_edges(&inst, &g, &emb.map)))?;
    }
    write_json(&a.embed.output.out, &EmbeddingDto { map: refs_to_dto(&emb.map) })
}

fn oracle(a: OracleArgs) -> Result<(), Failure> {
    let inst = load_instance(&a.instance)?;
    let mut budget = SearchBudget::nodes(a.nodes);
    if let Some(ms) = a.time_ms {
        budget = budget.with_time_limit(Duration::from_millis(ms));
    }
    let points = inst.dc.all_points();
    let colors = inst.coloring.flat();
    let out = match &a.graph {
        Some(src) => brute_force_embed(&load_graph(src)?, &points, &colors, &budget),
        None => brute_force_nhap(&points, &colors, &budget),
    }
    .map_err(pre)?;
    let (status, witness) = match out.status {
        SearchStatus::Found(w) => {
            let refs: Vec<PointRef> = w.iter().map(|&i| to_ref(&inst, i)).collect();
            (StatusDto::Found, Some(refs_to_dto(&refs)))
        }
        SearchStatus::None => (StatusDto::None, None),
        SearchStatus::Inconclusive => (StatusDto::Inconclusive, None),
    };
    write_json(&a.output.out, &OracleDto { status, witness, nodes: out.nodes })?;
    if status == StatusDto::Inconclusive {
        return Err(Failure::Inconclusive);
    }
    Ok(())
}

/// What `verify` and `render` draw on top of the points.
enum Overlay {
    Nothing,
    Path(Vec<PointRef>),
    Graph(ColoredGraph, Vec<PointRef>),
}

fn load_overlay(inst: &Instance, a: &VerifyArgs) -> Result<Overlay, Failure> {
    if let Some(src) = &a.path {
        let p: PathDto = serde_json::from_str(&read_input(src)?).map_err(pre)?;
        let refs = refs_from_dto(&p.order);
        check_refs(&inst.dc, &refs)?;
        return Ok(Overlay::Path(refs));
    }
    if let (Some(g), Some(e)) = (&a.graph, &a.embedding) {
        let g = load_graph(g)?;
        let e: EmbeddingDto = serde_json::from_str(&read_input(e)?).map_err(pre)?;
        let refs = refs_from_dto(&e.map);
        check_refs(&inst.dc, &refs)?;
        if refs.len() != g.n() {
            return Err(pre(format!("embedding maps {} vertices, graph has {}", refs.len(), g.n())));
        }
        return Ok(Overlay::Graph(g, refs));
    }
    Ok(Overlay::Nothing)
}

#[derive(Serialize)]
struct Verdict {
    valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    defect: Option<String>,
}

fn verify(a: VerifyArgs) -> Result<(), Failure> {
    let inst = load_instance(&a.instance)?;
    let result = match load_overlay(&inst, &a)? {
        Overlay::Nothing => return Err(pre("give --path, or --graph with --embedding")),
        Overlay::Path(refs) => certify_path(&inst.dc, &inst.coloring, &refs).map_err(|d| d.to_string()),
        Overlay::Graph(g, refs) => certify_embedding(
            &inst.dc.all_points(),
            &inst.coloring.flat(),
            g.colors(),
            g.edges(),
            &flat(&inst, &refs),
        )
        .map_err(|d| d.to_string()),
    };
    let verdict = Verdict { valid: result.is_ok(), defect: result.clone().err() };
    write_json(&a.output.out, &verdict)?;
    result.map_err(|d| Failure::Precondition(format!("invalid: {d}")))
}

fn render(a: VerifyArgs) -> Result<(), Failure> {
    let inst = load_instance(&a.instance)?;
    let edges = match load_overlay(&inst, &a)? {
        Overlay::Nothing => Vec::new(),
        Overlay::Path(refs) => path_edges(&flat(&inst, &refs)),
        Overlay::Graph(g, refs) => graph_edges(&inst, &g, &refs),
    };
    write_text(&a.output.out, &svg_for(&inst, &edges))
}

fn sweep(a: SweepArgs) -> Result<(), Failure> {
    let cfg = SweepConfig {
        suite: a.suite,
        max_n: a.max_n,
        oracle_max_n: a.oracle_max_n.unwrap_or(a.max_n),
        oracle_nodes: a.oracle_nodes,
        inject_fault: a.inject_fault,
    };
    if a.max_n > 16 {
        return Err(pre("sweeps are exhaustive; --max-n is limited to 16"));
    }
    let report = match a.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| Failure::Internal(e.to_string()))?
            .install(|| run_sweep(&cfg)),
        None => run_sweep(&cfg),
    };
    write_json(&a.output.out, &report)?;
    if report.mismatches > 0 {
        return Err(Failure::Internal(format!("{} mismatches", report.mismatches)));
    }
    Ok(())
}

#[derive(Serialize)]
struct BenchRow {
    n: usize,
    n1: usize,
    n2: usize,
    best_seconds: f64,
    /// Against the previous size at the same fraction.
    ratio: Option<f64>,
}

#[derive(Serialize)]
struct BenchReport {
    seed: u64,
    reps: usize,
    rows: Vec<BenchRow>,
}

fn bench(a: BenchArgs) -> Result<(), Failure> {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(a.seed);
    let mut rows = Vec::new();
    for &frac in &a.fracs {
        if !(0.0..=1.0).contains(&frac) {
            return Err(pre(format!("fraction {frac} outside [0, 1]")));
        }
        let mut prev: Option<f64> = None;
        for &n in &a.sizes {
            let n1 = (n as f64 * frac).round() as usize;
            let n2 = n - n1;
            let dc = generate_double_chain(n1, n2).map_err(pre)?;
            let mut best = f64::INFINITY;
            for _ in 0..a.reps.max(1) {
                let mut c: Vec<Color> = (0..n).map(|i| if i % 2 == 0 { Color::Black } else { Color::White }).collect();
                c.shuffle(&mut rng);
                let col = Coloring::new(c[..n1].to_vec(), c[n1..].to_vec());
                let t = Instant::now();
                std::hint::black_box(embed_nhap(&dc, &col)?);
                best = best.min(t.elapsed().as_secs_f64());
            }
            rows.push(BenchRow { n, n1, n2, best_seconds: best, ratio: prev.map(|p| best / p) });
            prev = Some(best);
        }
    }
    write_json(&a.output.out, &BenchReport { seed: a.seed, reps: a.reps, rows })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Gen(a) => gen(a),
        Cmd::EmbedPath(a) => embed_path(a),
        Cmd::EmbedCaterpillar(a) => embed_graph(a, false),
        Cmd::EmbedStars(a) => embed_graph(a, true),
        Cmd::Oracle(a) => oracle(a),
        Cmd::Verify(a) => verify(a),
        Cmd::Render(a) => render(a),
        Cmd::Sweep(a) => sweep(a),
        Cmd::Bench(a) => bench(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Precondition(m) | Failure::Internal(m) => eprintln!("error: {m}"),
                Failure::Inconclusive => eprintln!("search budget exhausted"),
            }
            ExitCode::from(f.code())
        }
    }
}
