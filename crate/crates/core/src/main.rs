use std::fs::{self, File};
use std::io::BufWriter;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use ricci_net::analysis::{
    ensemble_correlate, mean_curve, network_correlate, removal_experiment, CorrelationReport, EfficiencyNorm,
    MetricPair, RemovalCurve, RemovalOptions, Strategy, Target,
};
use ricci_net::generators::GeneratorSpec;
use ricci_net::io::{read_edge_list, write_edge_list};
use ricci_net::reproduce::{default_fixture_dir, reproduce_table, ReproduceConfig, TableId};
use ricci_net::table::{compute_metrics, ComputeOptions, MetricSelection};
use ricci_net::{Error, Graph, Result, WalkKind};

#[derive(Debug, Parser)]
#[command(name = "ricci-net", version, about = "Discrete Ricci curvature of networks")]
struct Cli {
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sample a model network and write it as an edge list with a JSON sidecar.
    Generate(GenerateArgs),
    /// Compute curvature and classical metric columns on one network.
    Compute(ComputeArgs),
    /// Correlate metric columns on one network or a seed ensemble.
    Correlate(CorrelateArgs),
    /// Communication efficiency under ordered edge or vertex removal.
    Robustness(RobustnessArgs),
    /// Recompute a correlation table next to its reported values.
    ReproduceTable(ReproduceArgs),
}

#[derive(Debug, Args)]
struct SpecArgs {
    /// Generator family: er, ws, ba or hgg.
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    /// ER edge probability (rewiring probability for WS if --beta is absent).
    #[arg(long)]
    p: Option<f64>,
    /// WS lattice degree or HGG target mean degree.
    #[arg(long)]
    k: Option<f64>,
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    m0: Option<usize>,
    #[arg(long)]
    gamma: Option<f64>,
    #[arg(long)]
    temperature: Option<f64>,
    /// Base seed; ensemble member i uses seed + i.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl SpecArgs {
    fn tokens(&self) -> Vec<String> {
        let mut t = Vec::new();
        let mut push = |k: &str, v: Option<String>| {
            if let Some(v) = v {
                t.push(format!("{k}={v}"));
            }
        };
        push("family", self.family.clone());
        push("n", self.n.map(|v| v.to_string()));
        push("p", self.p.map(|v| v.to_string()));
        push("k", self.k.map(|v| v.to_string()));
        push("beta", self.beta.map(|v| v.to_string()));
        push("m", self.m.map(|v| v.to_string()));
        push("m0", self.m0.map(|v| v.to_string()));
        push("gamma", self.gamma.map(|v| v.to_string()));
        push("temperature", self.temperature.map(|v| v.to_string()));
        t
    }

    fn any(&self) -> bool {
        !self.tokens().is_empty()
    }

    /// Spec from `key=value` tokens overridden by flags.
    fn spec(&self, positional: &[String]) -> Result<GeneratorSpec> {
        let seed = format!("seed={}", self.seed);
        let flags = self.tokens();
        let mut all: Vec<&str> = positional.iter().map(String::as_str).collect();
        if !positional.iter().any(|t| t.starts_with("seed=")) {
            all.push(&seed);
        }
        all.extend(flags.iter().map(String::as_str));
        let spec = GeneratorSpec::parse_kv(all)?;
        spec.validate()?;
        Ok(spec)
    }
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Edge-list file (whitespace separated, `%`/`#` comments).
    #[arg(long)]
    input: Option<PathBuf>,
    #[command(flatten)]
    spec: SpecArgs,
}

enum Source {
    File(PathBuf),
    Model(GeneratorSpec),
}

impl InputArgs {
    fn source(&self) -> Result<Source> {
        match (&self.input, self.spec.any()) {
            (Some(_), true) => Err(Error::invalid("input", "give either --input or generator flags, not both")),
            (Some(p), false) => Ok(Source::File(p.clone())),
            (None, true) => Ok(Source::Model(self.spec.spec(&[])?)),
            (None, false) => Err(Error::invalid("input", "missing; give --input PATH or --family with its parameters")),
        }
    }
}

#[derive(Debug, Args)]
struct WalkArgs {
    /// Probability that the random walk stays put.
    #[arg(long, default_value_t = 0.5)]
    idleness: f64,
}

impl WalkArgs {
    fn walk(&self) -> Result<WalkKind> {
        WalkKind::new(self.idleness)
    }
}

#[derive(Debug, Args)]
struct GenerateArgs {
    /// Generator parameters as key=value tokens, e.g. `family=er n=100 p=0.05 seed=1`.
    tokens: Vec<String>,
    #[command(flatten)]
    spec: SpecArgs,
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct ComputeArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    walk: WalkArgs,
    /// Comma-separated metrics: or, fr, afr, ebc, emb, dis, deg, bc, cc, all.
    #[arg(long, default_value = "all")]
    metrics: String,
    /// Divide dispersion by embeddedness.
    #[arg(long)]
    normalized_dispersion: bool,
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct CorrelateArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    walk: WalkArgs,
    /// Ensemble size for generated networks.
    #[arg(long, default_value_t = 100)]
    samples: usize,
    /// Restrict the pairs to these metrics (same names as for `compute`).
    #[arg(long, default_value = "all")]
    metrics: String,
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum NormArg {
    Paper,
    Ordered,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Switch {
    Off,
    On,
}

#[derive(Debug, Args)]
struct RobustnessArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    walk: WalkArgs,
    /// Remove edges or vertices.
    #[arg(long, default_value = "edges")]
    target: String,
    /// Comma-separated strategies (default: all for the target).
    #[arg(long)]
    strategies: Option<String>,
    /// Recorded fractions, evenly spaced from 0 to 1.
    #[arg(long, default_value_t = 21)]
    steps: usize,
    /// Ensemble size for generated networks.
    #[arg(long, default_value_t = 20)]
    samples: usize,
    #[arg(long, value_enum, default_value_t = NormArg::Paper)]
    normalize_efficiency: NormArg,
    #[arg(long, value_enum, default_value_t = Switch::Off)]
    adaptive_removal: Switch,
    /// Use the remaining vertex count in the prefactor after vertex removal.
    #[arg(long)]
    renormalize_vertices: bool,
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct ReproduceArgs {
    /// I, II, III or IV.
    table: String,
    #[command(flatten)]
    walk: WalkArgs,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Vertex count of the model networks.
    #[arg(long, default_value_t = 1000)]
    n: usize,
    /// Directory with `<name>.txt` edge lists of the real networks.
    #[arg(long)]
    fixtures: Option<PathBuf>,
    #[arg(long, conflicts_with = "fixtures_only")]
    models_only: bool,
    #[arg(long)]
    fixtures_only: bool,
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

#[derive(Serialize)]
struct Sidecar<'a, T: Serialize> {
    command: &'a str,
    seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    spec: Option<&'a GeneratorSpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    input: Option<&'a Path>,
    details: T,
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    fs::write(path, text + "\n").map_err(|e| Error::io(path, e))
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    File::create(path).map(BufWriter::new).map_err(|e| Error::io(path, e))
}

fn ensure_dir(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))
}

/// Loads a file and reduces it to its largest connected component.
fn load_lcc(path: &Path) -> Result<Graph> {
    let (g, report) = read_edge_list(path)?;
    if report.discarded() > 0 {
        eprintln!(
            "note: dropped {} self-loop(s) and {} duplicate edge(s)",
            report.self_loops, report.duplicates
        );
    }
    lcc_with_note(g)
}

fn lcc_with_note(g: Graph) -> Result<Graph> {
    let (_, components) = g.components();
    let lcc = g.largest_connected_component();
    if components > 1 {
        eprintln!(
            "note: graph has {components} components; using the largest ({} of {} vertices, {} of {} edges)",
            lcc.vertex_count(),
            g.vertex_count(),
            lcc.edge_count(),
            g.edge_count()
        );
    }
    if lcc.edge_count() == 0 {
        return Err(Error::Domain("largest connected component has no edges".into()));
    }
    Ok(lcc)
}

fn file_stem(path: &Path) -> String {
    path.file_stem().map_or_else(|| "network".into(), |s| s.to_string_lossy().into_owned())
}

fn spec_stem(spec: &GeneratorSpec) -> String {
    format!("{}_n{}_s{}", spec.family, spec.n, spec.seed)
}

fn cmd_generate(args: &GenerateArgs) -> Result<()> {
    let spec = args.spec.spec(&args.tokens)?;
    let g = spec.generate()?;
    ensure_dir(&args.out)?;
    let stem = spec_stem(&spec);
    let edges = args.out.join(format!("{stem}.txt"));
    write_edge_list(&g, &edges)?;
    #[derive(Serialize)]
    struct Details {
        vertices: usize,
        edges: usize,
        kv: String,
    }
    let sidecar = Sidecar {
        command: "generate",
        seed: spec.seed,
        spec: Some(&spec),
        input: None,
        details: Details {
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            kv: spec.to_kv(),
        },
    };
    write_json(&args.out.join(format!("{stem}.json")), &sidecar)?;
    println!("{} ({} vertices, {} edges) -> {}", spec.to_kv(), g.vertex_count(), g.edge_count(), edges.display());
    Ok(())
}

fn cmd_compute(args: &ComputeArgs) -> Result<()> {
    let selection: MetricSelection = args.metrics.parse()?;
    let opts = ComputeOptions {
        walk: args.walk.walk()?,
        normalized_dispersion: args.normalized_dispersion,
    };
    let (g, name, spec, input) = match args.input.source()? {
        Source::File(p) => (load_lcc(&p)?, file_stem(&p), None, Some(p)),
        Source::Model(s) => (lcc_with_note(s.generate()?)?, spec_stem(&s), Some(s), None),
    };
    let (table, timings) = compute_metrics(&g, &name, &selection, &opts)?;
    ensure_dir(&args.out)?;
    let (edge_csv, vertex_csv) = table.write_csv_files(&args.out)?;
    #[derive(Serialize)]
    struct Details<'a> {
        idleness: f64,
        metrics: &'a str,
        normalized_dispersion: bool,
        betweenness: &'a str,
    }
    write_json(
        &args.out.join(format!("{name}_run.json")),
        &Sidecar {
            command: "compute",
            seed: spec.as_ref().map_or(0, |s| s.seed),
            spec: spec.as_ref(),
            input: input.as_deref(),
            details: Details {
                idleness: opts.walk.idleness(),
                metrics: &args.metrics,
                normalized_dispersion: args.normalized_dispersion,
                betweenness: "unnormalised, unordered pairs",
            },
        },
    )?;
    for (label, t) in &timings {
        println!("{label:<7} {:>10.3} ms", t.as_secs_f64() * 1e3);
    }
    println!(
        "{} edges -> {}\n{} vertices -> {}",
        table.edge_count(),
        edge_csv.display(),
        table.vertex_count(),
        vertex_csv.display()
    );
    Ok(())
}

fn pairs_for(metrics: &str) -> Result<Vec<MetricPair>> {
    let sel: MetricSelection = metrics.parse()?;
    let has = |p: &MetricPair, name: &str| -> bool {
        match p.scope {
            ricci_net::Scope::Edge => sel.edge.iter().any(|m| m.column() == name),
            ricci_net::Scope::Vertex => sel.vertex.iter().any(|m| m.column() == name),
        }
    };
    let pairs: Vec<MetricPair> = MetricPair::standard().into_iter().filter(|p| has(p, &p.a) && has(p, &p.b)).collect();
    if pairs.is_empty() {
        return Err(Error::invalid("metrics", "selection contains no comparable pair"));
    }
    Ok(pairs)
}

fn cmd_correlate(args: &CorrelateArgs) -> Result<()> {
    let pairs = pairs_for(&args.metrics)?;
    let walk = args.walk.walk()?;
    let (report, stem): (CorrelationReport, String) = match args.input.source()? {
        Source::File(p) => {
            let g = load_lcc(&p)?;
            (network_correlate(&g, &file_stem(&p), &pairs, walk)?, file_stem(&p))
        }
        Source::Model(s) => (ensemble_correlate(&s, args.samples, &pairs, walk)?, spec_stem(&s)),
    };
    ensure_dir(&args.out)?;
    let csv = args.out.join(format!("{stem}_correlations.csv"));
    report.write_csv(create(&csv)?)?;
    let json = args.out.join(format!("{stem}_correlations.json"));
    fs::write(&json, report.to_json()? + "\n").map_err(|e| Error::io(&json, e))?;
    print!("{}", report.render());
    if let Some(seed) = report.seed {
        println!("seeds {seed}..{}", seed + args.samples as u64 - 1);
    }
    println!("-> {}", csv.display());
    Ok(())
}

fn cmd_robustness(args: &RobustnessArgs) -> Result<()> {
    let target: Target = args.target.parse()?;
    let strategies: Vec<String> = match &args.strategies {
        Some(list) => list.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect(),
        None => Strategy::for_target(target).iter().map(|s| s.name().to_string()).collect(),
    };
    for s in &strategies {
        let st: Strategy = s.parse()?;
        if !st.applies_to(target) {
            return Err(Error::UnknownStrategy(format!("{s} (for {target})")));
        }
    }
    let opts = RemovalOptions {
        walk: args.walk.walk()?,
        norm: match args.normalize_efficiency {
            NormArg::Paper => EfficiencyNorm::Paper,
            NormArg::Ordered => EfficiencyNorm::Ordered,
        },
        adaptive: matches!(args.adaptive_removal, Switch::On),
        renormalize_vertices: args.renormalize_vertices,
    };
    if args.samples == 0 {
        return Err(Error::invalid("samples", "must be at least 1"));
    }
    let (graphs, stem, base_seed): (Vec<(Graph, u64)>, String, u64) = match args.input.source()? {
        Source::File(p) => (vec![(load_lcc(&p)?, args.input.spec.seed)], file_stem(&p), args.input.spec.seed),
        Source::Model(s) => {
            let gs = (0..args.samples as u64)
                .map(|i| {
                    let seed = s.seed + i;
                    Ok((s.with_seed(seed).generate()?.largest_connected_component(), seed))
                })
                .collect::<Result<Vec<_>>>()?;
            (gs, spec_stem(&s), s.seed)
        }
    };
    let mut curves = Vec::new();
    for s in &strategies {
        let runs = graphs
            .iter()
            .map(|(g, seed)| removal_experiment(g, target, s, args.steps, *seed, &opts))
            .collect::<Result<Vec<RemovalCurve>>>()?;
        let mut mean = runs[0].clone();
        mean.points = mean_curve(&runs)?;
        mean.seed = base_seed;
        curves.push(mean);
    }
    ensure_dir(&args.out)?;
    let csv = args.out.join(format!("{stem}_{target}_removal.csv"));
    ricci_net::analysis::write_curves_csv(&curves, create(&csv)?)?;
    #[derive(Serialize)]
    struct Details<'a> {
        target: String,
        networks: usize,
        steps: usize,
        options: &'a RemovalOptions,
        strategies: &'a [String],
    }
    write_json(
        &args.out.join(format!("{stem}_{target}_removal.json")),
        &Sidecar {
            command: "robustness",
            seed: base_seed,
            spec: None,
            input: args.input.input.as_deref(),
            details: Details {
                target: target.to_string(),
                networks: graphs.len(),
                steps: args.steps,
                options: &opts,
                strategies: &strategies,
            },
        },
    )?;
    for c in &curves {
        let half = c.points.iter().rfind(|p| p.fraction <= 0.5).expect("fraction 0 present");
        println!(
            "{:<18} E(0)={:.5}  E({:.2})={:.5}",
            c.strategy.name(),
            c.points[0].efficiency,
            half.fraction,
            half.efficiency
        );
    }
    println!("-> {}", csv.display());
    Ok(())
}

fn cmd_reproduce(args: &ReproduceArgs) -> Result<()> {
    let table: TableId = args.table.parse()?;
    let cfg = ReproduceConfig {
        samples: args.samples,
        seed: args.seed,
        walk: args.walk.walk()?,
        n: args.n,
        fixture_dir: args.fixtures.clone().unwrap_or_else(default_fixture_dir),
        include_models: !args.fixtures_only,
        include_fixtures: !args.models_only,
    };
    let report = reproduce_table(table, &cfg)?;
    ensure_dir(&args.out)?;
    let csv = args.out.join(format!("table_{table}.csv"));
    report.write_csv(create(&csv)?)?;
    print!("{}", report.render());
    println!("-> {}", csv.display());
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    if let Some(t) = cli.threads {
        if t == 0 {
            return Err(Error::invalid("threads", "must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| Error::invalid("threads", e.to_string()))?;
    }
    match &cli.command {
        Command::Generate(a) => cmd_generate(a),
        Command::Compute(a) => cmd_compute(a),
        Command::Correlate(a) => cmd_correlate(a),
        Command::Robustness(a) => cmd_robustness(a),
        Command::ReproduceTable(a) => cmd_reproduce(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_usage() { 1 } else { 2 })
        }
    }
}
