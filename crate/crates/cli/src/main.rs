//! `annigraph`: build finite rings from specs, inspect their ideal lattices
//! and graphs, compute genus, and run the verification suite.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, SystemTime, UNIX_EPOCH};

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use annigraph::{
    all_ideals, build_ag, build_zero_divisor_graph, builtin_corpus, classify, genus_exact, ideal_name,
    run_suite, Budget, FiniteRing, GenusStatus, RingSpec, SimpleGraph, Suite, Target, BUILTIN_CORPUS,
};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_INVALID_INPUT: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "annigraph",
    version,
    about = "Finite rings, annihilating-ideal graphs and graph genus"
)]
struct Cli {
    /// Search-node budget per genus computation.
    #[arg(long, global = true, default_value_t = annigraph::genus::DEFAULT_BUDGET_NODES)]
    budget_nodes: u64,

    /// Wall-clock budget per genus computation, in milliseconds.
    #[arg(long, global = true, env = "ANNIGRAPH_BUDGET_MS")]
    budget_ms: Option<u64>,

    /// Worker threads; defaults to the machine's parallelism.
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Write output to this path instead of stdout (a directory for `corpus`).
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Stamp output with the generation time.
    #[arg(long, global = true)]
    timestamp: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the classification of a ring as JSON.
    Info { spec: String },
    /// List the ideal lattice of a ring.
    Ideals {
        spec: String,
        #[arg(long, value_enum, default_value_t = ListFormat::Text)]
        format: ListFormat,
    },
    /// Emit the annihilating-ideal or zero-divisor graph of a ring.
    Graph {
        spec: String,
        #[arg(long, value_enum, default_value_t = GraphKind::Ag)]
        kind: GraphKind,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
    /// Compute the orientable genus of a catalog graph or a ring's graph.
    Genus {
        target: String,
        /// Which graph of a ring target to use; ignored for graph targets.
        #[arg(long, value_enum, default_value_t = GraphKind::Ag)]
        kind: GraphKind,
        #[arg(long, value_enum, default_value_t = ListFormat::Text)]
        format: ListFormat,
    },
    /// Run the verification suite over ring specs (default: built-in corpus).
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        specs: Vec<String>,
    },
    /// Write the built-in corpus as ring table files plus an index.
    Corpus,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GraphKind {
    Ag,
    Zdg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ListFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
    Csv,
}

/// Failure with the process exit code it maps to.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure {
            code: EXIT_INVALID_INPUT,
            error: e.into(),
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    if let Some(n) = cli.threads {
        if n == 0 {
            bail_input("--threads must be at least 1")?;
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("configuring the worker pool")?;
    }
    let budget = Budget {
        max_nodes: cli.budget_nodes,
        max_time: cli.budget_ms.map(Duration::from_millis),
    };
    let out = Output {
        path: cli.out.as_deref(),
        timestamp: cli.timestamp,
    };
    match &cli.command {
        Command::Info { spec } => {
            let ring = build_ring(spec)?;
            let lattice = all_ideals(&ring)?;
            let class = classify(&ring, &lattice)?;
            let mut v = serde_json::to_value(&class)?;
            v["spec"] = json!(spec);
            out.json(v)?;
            Ok(0)
        }
        Command::Ideals { spec, format } => {
            let ring = build_ring(spec)?;
            let lattice = all_ideals(&ring)?;
            let rows: Vec<(String, Vec<&str>)> = lattice
                .ideals()
                .iter()
                .map(|i| {
                    let members = i.to_vec().into_iter().map(|x| ring.label(x)).collect();
                    (ideal_name(&ring, &lattice, i), members)
                })
                .collect();
            match format {
                ListFormat::Text => {
                    let mut s = String::new();
                    for (k, (name, members)) in rows.iter().enumerate() {
                        s.push_str(&format!(
                            "{k}\t{name}\t{}\t{{{}}}\n",
                            members.len(),
                            members.join(", ")
                        ));
                    }
                    out.text(s)?;
                }
                ListFormat::Json => {
                    let ideals: Vec<Value> = rows
                        .iter()
                        .map(|(name, members)| json!({"name": name, "size": members.len(), "members": members}))
                        .collect();
                    out.json(json!({
                        "spec": spec,
                        "fingerprint": lattice.fingerprint(),
                        "ideals": ideals,
                    }))?;
                }
            }
            Ok(0)
        }
        Command::Graph { spec, kind, format } => {
            let ring = build_ring(spec)?;
            let g = ring_graph(&ring, *kind)?;
            match format {
                GraphFormat::Dot => out.text(g.to_dot())?,
                GraphFormat::Json => out.json(serde_json::to_value(g.to_json())?)?,
            }
            Ok(0)
        }
        Command::Genus { target, kind, format } => {
            let g = match Target::parse(target)? {
                Target::Graph(gs) => gs.build(),
                Target::Ring(rs) => ring_graph(&rs.build()?, *kind)?,
            };
            log::info!(
                "genus of {target}: {} vertices, {} edges",
                g.vertex_count(),
                g.edge_count()
            );
            let res = genus_exact(&g, &budget);
            match format {
                ListFormat::Text => out.text(format!("{}\n", res.summary()))?,
                ListFormat::Json => out.json(serde_json::to_value(&res)?)?,
            }
            Ok(if res.status == GenusStatus::Exact {
                0
            } else {
                EXIT_BUDGET
            })
        }
        Command::Verify { suite, format, specs } => {
            let suite: Suite = suite.parse()?;
            let corpus = if specs.is_empty() {
                builtin_corpus()
            } else {
                specs
                    .iter()
                    .map(|s| RingSpec::parse(s))
                    .collect::<Result<_, _>>()?
            };
            let report = run_suite(&corpus, suite, &budget);
            match format {
                ReportFormat::Text => out.text(report.to_text())?,
                ReportFormat::Json => out.json(serde_json::from_str(&report.to_json())?)?,
                ReportFormat::Csv => out.text(report.to_csv())?,
            }
            let s = report.summary();
            log::info!("{} pass, {} fail, {} skipped", s.pass, s.fail, s.skipped);
            Ok(if report.passed() { 0 } else { EXIT_VERIFY_FAILED })
        }
        Command::Corpus => {
            let dir = cli.out.as_deref().context("corpus needs --out <dir>")?;
            write_corpus(dir, cli.timestamp)?;
            Ok(0)
        }
    }
}

fn bail_input(msg: &str) -> Result<(), Failure> {
    Err(Failure {
        code: EXIT_INVALID_INPUT,
        error: anyhow::anyhow!("{msg}"),
    })
}

fn build_ring(spec: &str) -> anyhow::Result<FiniteRing> {
    let parsed = RingSpec::parse(spec)?;
    parsed.build().with_context(|| format!("building {spec}"))
}

fn ring_graph(ring: &FiniteRing, kind: GraphKind) -> anyhow::Result<SimpleGraph> {
    Ok(match kind {
        GraphKind::Ag => build_ag(ring, &all_ideals(ring)?)?,
        GraphKind::Zdg => build_zero_divisor_graph(ring),
    })
}

fn unix_now() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

struct Output<'a> {
    path: Option<&'a Path>,
    timestamp: bool,
}

impl Output<'_> {
    fn text(&self, mut s: String) -> anyhow::Result<()> {
        if self.timestamp {
            s.push_str(&format!("# generated_unix {}\n", unix_now()));
        }
        self.emit(s.as_bytes())
    }

    /// Objects gain a `generated_unix` field; arrays are wrapped.
    fn json(&self, mut v: Value) -> anyhow::Result<()> {
        if self.timestamp {
            v = match v {
                Value::Object(mut m) => {
                    m.insert("generated_unix".into(), json!(unix_now()));
                    Value::Object(m)
                }
                other => json!({"generated_unix": unix_now(), "results": other}),
            };
        }
        let s = serde_json::to_string_pretty(&v)? + "\n";
        self.emit(s.as_bytes())
    }

    fn emit(&self, bytes: &[u8]) -> anyhow::Result<()> {
        match self.path {
            Some(p) => fs::write(p, bytes).with_context(|| format!("writing {}", p.display())),
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout.write_all(bytes)?;
                stdout.flush()?;
                Ok(())
            }
        }
    }
}

/// File stem for a spec: alphanumerics kept, everything else `_`.
fn file_stem(spec: &str) -> String {
    spec.chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect()
}

fn write_corpus(dir: &Path, timestamp: bool) -> anyhow::Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let mut index = Vec::new();
    for (k, spec) in BUILTIN_CORPUS.iter().enumerate() {
        let ring = build_ring(spec)?;
        let file = format!("{k:02}_{}.json", file_stem(spec));
        let body = serde_json::to_string_pretty(&ring.to_table())? + "\n";
        fs::write(dir.join(&file), body)?;
        index.push(json!({
            "spec": spec,
            "file": file,
            "size": ring.size(),
            "fingerprint": ring.fingerprint(),
        }));
    }
    let mut doc = json!({ "rings": index });
    if timestamp {
        doc["generated_unix"] = json!(unix_now());
    }
    fs::write(dir.join("index.json"), serde_json::to_string_pretty(&doc)? + "\n")?;
    Ok(())
}
