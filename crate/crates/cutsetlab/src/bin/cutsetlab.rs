//! Command-line front end: single-graph reports, exhaustive sweeps, bridging
//! lemma verification, and bounded realizability search.
//!
//! Exit codes: 0 = verdict true / report produced, 1 = verdict false
//! (a witness is emitted), 2 = usage or input error.

use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cutsetlab::complex::{delta_complex, SimplicialComplex};
use cutsetlab::cutset::{cut_sets, is_unmixed, reduce_to_cut_set};
use cutsetlab::error::{Error, Result};
use cutsetlab::graph::{Graph, VertexSet};
use cutsetlab::report::VerdictReport;
use cutsetlab::system::{is_accessible_graph, is_strongly_accessible, Characterization, SetSystem};
use cutsetlab::verify::{
    effective_cap, find_bridging_cutset, realize_system, satisfies_s2, sweep, Check, LemmaVariant,
    SweepConfig,
};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser)]
#[command(name = "cutsetlab", version, about = "Cut sets, accessibility, and the complex Δ_G")]
struct Cli {
    /// Output format for every subcommand
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Parse graph files as graph6 instead of the text format
    #[arg(long, global = true)]
    graph6: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the cut sets of a graph and report unmixedness
    Cutsets { file: String },
    /// Decide whether a graph is accessible (unmixed + accessible cut sets)
    Accessible { file: String },
    /// Print the facets of Δ_G with purity and dimension
    Complex { file: String },
    /// Check Serre's condition (S₂) for Δ_G (or for a facet-list fixture)
    S2 { file: String },
    /// Reduce a vertex set to a cut set contained in it
    Reduce {
        file: String,
        /// Comma-separated 1-based vertex list
        #[arg(long)]
        set: VertexSet,
        /// Vertices the result should avoid, if possible
        #[arg(long, default_value = "")]
        avoid: VertexSet,
    },
    /// Search for a bridging cut set inside T1 ∪ T2
    Lemma {
        file: String,
        /// 4.3, 4.5, or 4.7
        #[arg(long)]
        variant: String,
        #[arg(long)]
        t1: VertexSet,
        #[arg(long)]
        t2: VertexSet,
        #[arg(long)]
        w1: VertexSet,
        #[arg(long)]
        w2: Option<VertexSet>,
    },
    /// Run a theorem check over all labeled graphs on up to max-n vertices
    Sweep {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        check: String,
        /// Edge-mask range lo:hi (hi exclusive) within each vertex count
        #[arg(long)]
        range: Option<String>,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Search for a graph whose cut-set family equals the given system
    Realize {
        /// JSON file {"n": int, "sets": [[int,...],...]}
        #[arg(long)]
        system: String,
        #[arg(long)]
        max_n: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn load_graph(cli: &Cli, path: &str) -> Result<Graph> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {path}: {e}")))?;
    if cli.graph6 {
        Graph::parse_graph6(text.trim())
    } else {
        Graph::parse_text(&text)
    }
}

fn verdict_exit(report: &VerdictReport) -> ExitCode {
    ExitCode::from(if report.verdict { 0 } else { 1 })
}

fn print_report(format: Format, label: &str, report: &VerdictReport) {
    match format {
        Format::Json => println!("{}", serde_json::to_string(report).expect("serializable")),
        Format::Text => {
            println!("{label} = {}", report.verdict);
            if let Some(w) = &report.witness {
                println!(
                    "witness: {}",
                    serde_json::to_string(w).expect("serializable")
                );
            }
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Cutsets { file } => {
            let g = load_graph(cli, file)?;
            let family = cut_sets(&g);
            let unmixed = is_unmixed(&g);
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::json!({ "cut_sets": family.sets, "unmixed": unmixed })
                ),
                Format::Text => {
                    let body: Vec<String> =
                        family.iter().map(|s| s.to_string()).collect();
                    println!("C(G) = {{{}}}", body.join(", "));
                    println!("unmixed = {unmixed}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Accessible { file } => {
            let g = load_graph(cli, file)?;
            let report = is_accessible_graph(&g);
            print_report(cli.format, "accessible", &report);
            if report.verdict && cli.format == Format::Text {
                let strong = is_strongly_accessible(
                    &SetSystem::from(&cut_sets(&g)),
                    Characterization::Deletion,
                );
                println!("strongly accessible cut sets = {}", strong.verdict);
            }
            Ok(verdict_exit(&report))
        }
        Command::Complex { file } => {
            let g = load_graph(cli, file)?;
            let d = delta_complex(&g)?;
            match cli.format {
                Format::Json => {
                    let strings: Vec<String> =
                        d.complex.facets().iter().map(|f| f.to_string()).collect();
                    println!(
                        "{}",
                        serde_json::json!({
                            "facets": d.facets,
                            "strings": strings,
                            "pure": d.complex.is_pure(),
                            "dimension": d.complex.dimension(),
                        })
                    );
                }
                Format::Text => {
                    for f in &d.facets {
                        println!("{}", f.face(g.n()));
                    }
                    println!("pure = {}", d.complex.is_pure());
                    println!("dimension = {}", d.complex.dimension());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::S2 { file } => {
            let text = fs::read_to_string(file)
                .map_err(|e| Error::InvalidInput(format!("cannot read {file}: {e}")))?;
            let complex = if !cli.graph6 && looks_like_complex(&text) {
                parse_complex_fixture(&text)?
            } else {
                let g = if cli.graph6 {
                    Graph::parse_graph6(text.trim())?
                } else {
                    Graph::parse_text(&text)?
                };
                let cap = effective_cap();
                if g.n() > cap {
                    return Err(Error::CapExceeded { requested: g.n(), cap });
                }
                delta_complex(&g)?.complex
            };
            let report = satisfies_s2(&complex);
            print_report(cli.format, "s2", &report);
            Ok(verdict_exit(&report))
        }
        Command::Reduce { file, set, avoid } => {
            let g = load_graph(cli, file)?;
            match reduce_to_cut_set(&g, *set, *avoid) {
                Ok(trace) => {
                    match cli.format {
                        Format::Json => println!(
                            "{}",
                            serde_json::to_string(&trace).expect("serializable")
                        ),
                        Format::Text => {
                            println!("input = {}", trace.input);
                            println!("result = {}", trace.result);
                            println!("removed = {:?}", trace.removed_order);
                        }
                    }
                    Ok(ExitCode::SUCCESS)
                }
                Err(Error::AvoidInfeasible { avoid }) => {
                    println!("avoid-infeasible: no reduction avoids {avoid}");
                    Ok(ExitCode::from(1))
                }
                Err(e) => Err(e),
            }
        }
        Command::Lemma { file, variant, t1, t2, w1, w2 } => {
            let g = load_graph(cli, file)?;
            let variant: LemmaVariant = variant.parse()?;
            if matches!(
                variant,
                LemmaVariant::ContainedTransversals | LemmaVariant::ClosedNeighborhood
            ) && w2.is_none()
            {
                return Err(Error::InvalidInput("--w2 is required for this variant".into()));
            }
            let report = find_bridging_cutset(&g, *t1, *t2, *w1, *w2, variant);
            print_report(cli.format, "bridging cut set found", &report);
            Ok(verdict_exit(&report))
        }
        Command::Sweep { max_n, check, range, workers } => {
            let check: Check = check.parse()?;
            let mut config = SweepConfig::new(*max_n, vec![check]);
            config.workers = *workers;
            if let Some(r) = range {
                config.range = Some(parse_range(r)?);
            }
            let summary = sweep(&config)?.remove(0);
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string(&summary).expect("serializable")
                ),
                Format::Text => {
                    println!(
                        "check {} on up to {} vertices: {} graphs, {} failures ({} ms)",
                        summary.check,
                        summary.max_n,
                        summary.graphs,
                        summary.failures,
                        summary.elapsed_ms
                    );
                    if let Some(w) = &summary.witness {
                        println!("witness graph:\n{}", w.graph);
                        println!(
                            "payload: {}",
                            serde_json::to_string(&w.payload).expect("serializable")
                        );
                    }
                }
            }
            Ok(ExitCode::from(if summary.failures == 0 { 0 } else { 1 }))
        }
        Command::Realize { system, max_n } => {
            let text = fs::read_to_string(system)
                .map_err(|e| Error::InvalidInput(format!("cannot read {system}: {e}")))?;
            let sys = SetSystem::from_json(&text)?;
            let report = realize_system(&sys, *max_n)?;
            print_report(cli.format, "realizable within bound", &report);
            Ok(verdict_exit(&report))
        }
    }
}

/// A fixture whose first content line is a facet string ("y1y2", "x1y1", "∅")
/// rather than a graph header.
fn looks_like_complex(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|l| l.starts_with('x') || l.starts_with('y') || l.starts_with('∅'))
}

fn parse_complex_fixture(text: &str) -> Result<SimplicialComplex> {
    let mut n = 1;
    for line in text.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let face: cutsetlab::complex::Face = line.parse()?;
        n = n.max(face.y.iter().chain(face.x.iter()).max().unwrap_or(1));
    }
    SimplicialComplex::parse(n, text)
}

fn parse_range(s: &str) -> Result<(u64, u64)> {
    let err = || Error::InvalidInput(format!("range must be lo:hi, got {s:?}"));
    let (lo, hi) = s.split_once(':').ok_or_else(err)?;
    let lo = lo.parse().map_err(|_| err())?;
    let hi = hi.parse().map_err(|_| err())?;
    if lo > hi {
        return Err(err());
    }
    Ok((lo, hi))
}
