use std::fmt::{self, Write as _};
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use edgegp::classes::{block_bounds, classify, gpe_auto};
use edgegp::edgelist::{read_graphs, write_graph, Format};
use edgegp::generate::{generate, FamilySpec};
use edgegp::geodesic::build_conflicts;
use edgegp::reduce::reduce;
use edgegp::solver::{gpe_bruteforce, gpe_exact, Bounds};
use edgegp::verify::{verify, Scope, Theorem, VerifyOptions};
use edgegp::{EdgeId, Graph};

#[derive(Parser)]
#[command(
    name = "edgegp",
    version,
    about = "Edge general position numbers of graphs"
)]
struct Cli {
    /// Graph format for input (default: detected) and output (default: graph6).
    #[arg(long, global = true)]
    format: Option<Format>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for verification sweeps.
    #[arg(long, global = true, env = "EDGEGP_JOBS")]
    jobs: Option<usize>,
    /// Seed for random families and sampled sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SolveMethod {
    /// Closed forms where they apply, branch and bound otherwise.
    Auto,
    Exact,
    Brute,
}

#[derive(Subcommand)]
enum Command {
    /// Compute gp_e of each input graph.
    Compute {
        /// Input file; stdin when omitted or "-".
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "auto")]
        method: SolveMethod,
    },
    /// Report structural properties as JSON.
    Classify { input: Option<PathBuf> },
    /// Contract internal paths and shorten pendant paths of a block graph.
    Reduce { input: Option<PathBuf> },
    /// List the edge triples lying on a common geodesic.
    Conflicts { input: Option<PathBuf> },
    /// Generate a graph family member, e.g. `gen chain_Gk 5`.
    Gen { family: String, params: Vec<String> },
    /// Check a theorem over enumerated, sampled or supplied graphs.
    Verify {
        theorem: String,
        /// Vertex range `A..B` (inclusive) or a single order.
        #[arg(long)]
        n: Option<String>,
        /// Draw this many seeded connected graphs per order instead of enumerating.
        #[arg(long)]
        sample: Option<usize>,
        /// Graph6 or edge-list file to check instead.
        #[arg(long, conflicts_with_all = ["n", "sample"])]
        corpus: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(&cli, &mut out);
    // a closed pipe (e.g. `| head`) is not an error
    let _ = io::stdout().lock().write_all(out.as_bytes());
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn read_input(path: &Option<PathBuf>, format: Option<Format>) -> anyhow::Result<Vec<Graph>> {
    let text = match path {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?
        }
        _ => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .context("reading stdin")?;
            s
        }
    };
    Ok(read_graphs(&text, format)?)
}

fn run(cli: &Cli, out: &mut String) -> anyhow::Result<ExitCode> {
    let out_format = cli.format.unwrap_or(Format::Graph6);
    match &cli.command {
        Command::Compute { input, method } => {
            for g in read_input(input, cli.format)? {
                print_result(out, &g, &compute(&g, *method)?, cli.json)?;
            }
        }
        Command::Classify { input } => {
            for g in read_input(input, cli.format)? {
                writeln!(out, "{}", serde_json::to_string_pretty(&classify(&g)?)?)?;
            }
        }
        Command::Reduce { input } => {
            for g in read_input(input, cli.format)? {
                let r = reduce(&g)?;
                if cli.json {
                    writeln!(out, "{}", graph_json(&r))?;
                } else {
                    write!(out, "{}", write_graph(&r, out_format))?;
                }
            }
        }
        Command::Conflicts { input } => {
            for g in read_input(input, cli.format)? {
                let conflicts = build_conflicts(&g)?;
                if cli.json {
                    let triples: Vec<[EdgeId; 3]> =
                        conflicts.triples().iter().map(|t| t.ids()).collect();
                    writeln!(
                        out,
                        "{}",
                        json!({ "m": g.edge_count(), "triples": triples })
                    )?;
                } else {
                    for t in conflicts.triples() {
                        let [a, b, c] = t.ids();
                        writeln!(out, "{a} {b} {c}")?;
                    }
                }
            }
        }
        Command::Gen { family, params } => {
            let g = generate(&FamilySpec::parse(family, params, cli.seed)?)?;
            if cli.json {
                writeln!(out, "{}", graph_json(&g))?;
            } else {
                write!(out, "{}", write_graph(&g, out_format))?;
            }
        }
        Command::Verify {
            theorem,
            n,
            sample,
            corpus,
        } => {
            let theorem: Theorem = theorem.parse()?;
            let scope = match (corpus, n, sample) {
                (Some(path), _, _) => Scope::Corpus {
                    name: path.display().to_string(),
                    graphs: read_input(&Some(path.clone()), cli.format)?,
                },
                (None, Some(range), None) => {
                    let (lo, hi) = parse_range(range)?;
                    Scope::Exhaustive { lo, hi }
                }
                (None, range, Some(count)) => {
                    let (lo, hi) = range
                        .as_deref()
                        .map(parse_range)
                        .transpose()?
                        .unwrap_or((6, 7));
                    Scope::Sampled {
                        lo,
                        hi,
                        count: *count,
                    }
                }
                (None, None, None) => Scope::Default,
            };
            let options = VerifyOptions {
                jobs: cli.jobs,
                seed: cli.seed,
                ..VerifyOptions::default()
            };
            let report = verify(theorem, scope, &options)?;
            if cli.json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
            } else {
                writeln!(
                    out,
                    "{} {}: {} checked, {} skipped, {} failed [{}] in {:.2}s",
                    report.theorem,
                    if report.passed { "PASS" } else { "FAIL" },
                    report.checked,
                    report.skipped,
                    report.failures.len(),
                    report.scope,
                    report.wall_time_secs,
                )?;
                for f in &report.failures {
                    writeln!(
                        out,
                        "  {}  expected {}, got {}",
                        f.graph6, f.expected, f.got
                    )?;
                }
            }
            if !report.passed {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_range(s: &str) -> anyhow::Result<(usize, usize)> {
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (a.trim().parse()?, b.trim().trim_start_matches('=').parse()?),
        None => {
            let n = s.trim().parse()?;
            (n, n)
        }
    };
    if lo > hi {
        bail!("empty range {s}");
    }
    Ok((lo, hi))
}

struct Computed {
    value: usize,
    witness: Vec<EdgeId>,
    method: String,
    bounds: Option<Bounds>,
}

/// Solves each component and sums, since a geodesic never leaves its component.
fn compute(g: &Graph, method: SolveMethod) -> anyhow::Result<Computed> {
    let components = g.components();
    if components.len() > 1 {
        eprintln!(
            "warning: input has {} components; gp_e is summed over them",
            components.len()
        );
    }
    let mut witness = Vec::new();
    let mut methods: Vec<String> = Vec::new();
    for comp in &components {
        let (h, origin) = g.induced_subgraph(comp);
        if h.edge_count() == 0 {
            continue;
        }
        let r = match method {
            SolveMethod::Auto => gpe_auto(&h)?,
            SolveMethod::Exact => gpe_exact(&h)?,
            SolveMethod::Brute => gpe_bruteforce(&h)?,
        };
        witness.extend(r.witness.iter().map(|&e| origin[e]));
        let name = r.method.to_string();
        if !methods.contains(&name) {
            methods.push(name);
        }
    }
    witness.sort_unstable();
    let method = if methods.is_empty() {
        "empty".to_string()
    } else {
        methods.join("+")
    };
    let bounds = if components.len() == 1 {
        block_bounds(g).ok()
    } else {
        None
    };
    Ok(Computed {
        value: witness.len(),
        witness,
        method,
        bounds,
    })
}

fn print_result(out: &mut String, g: &Graph, r: &Computed, json: bool) -> fmt::Result {
    if json {
        let bounds = r
            .bounds
            .map(|b| json!({ "s_prime": b.s_prime, "upper": b.upper }));
        let value = json!({
            "n": g.vertex_count(),
            "m": g.edge_count(),
            "gpe": r.value,
            "method": r.method,
            "witness": r.witness,
            "delta": g.max_degree(),
            "bounds": bounds,
        });
        return writeln!(out, "{value}");
    }
    writeln!(out, "gpe = {}", r.value)?;
    writeln!(out, "method: {}", r.method)?;
    let pairs: Vec<String> = r
        .witness
        .iter()
        .map(|&e| {
            let (u, v) = g.edge(e);
            format!("{u}-{v}")
        })
        .collect();
    writeln!(out, "witness: {}", pairs.join(" "))
}

fn graph_json(g: &Graph) -> Value {
    json!({
        "n": g.vertex_count(),
        "m": g.edge_count(),
        "edges": g.edges(),
        "graph6": edgegp::graph6::write_graph6(g),
    })
}
