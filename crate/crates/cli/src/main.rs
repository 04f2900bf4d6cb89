use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pmavoid_core::connectivity::cyclic_edge_connectivity;
use pmavoid_core::preclusion::{classify_with, ClassifyOptions, DEFAULT_MIS_CAP};
use pmavoid_core::twofactor::{build_path_witness_with_cap, extends_to_two_factor, DEFAULT_WITNESS_CAP};
use pmavoid_core::{io as gio, EdgeSet, Multigraph, PathSpec};
use pmavoid_cli::{filter_catalogue, read_catalogue_file, run_campaign, CampaignConfig, Caps, Predicate, Theorem};
use serde_json::json;

/// Perfect matchings avoiding prescribed edges: campaigns and single checks.
#[derive(Parser)]
#[command(name = "pmavoid", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a campaign over graph catalogues and report every disagreement.
    Verify(VerifyArgs),
    /// Cyclic edge-connectivity with a witness cut.
    CyclicConnectivity {
        #[command(flatten)]
        graphs: GraphSource,
    },
    /// Decide whether G - X has a perfect matching and explain why not.
    Classify {
        /// Graph in graph6 or sparse6.
        #[arg(long)]
        graph: String,
        /// Comma-separated edge ids.
        #[arg(long, value_delimiter = ',')]
        x: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        d: usize,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = DEFAULT_MIS_CAP)]
        mis_cap: usize,
    },
    /// Extend a path to a 2-factor, or certify that it cannot be.
    ExtendPath {
        #[arg(long)]
        graph: String,
        /// Comma-separated vertex list.
        #[arg(long, value_delimiter = ',')]
        path: Vec<usize>,
        #[arg(long, default_value_t = DEFAULT_WITNESS_CAP)]
        witness_cap: usize,
    },
    /// Print the graphs of a catalogue that satisfy the given hypotheses.
    Filter {
        input: PathBuf,
        #[arg(long)]
        regular: Option<usize>,
        #[arg(long)]
        even: bool,
        #[arg(long)]
        min_cyclic: Option<usize>,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    theorem: Theorem,
    /// graph6/sparse6 catalogue files.
    inputs: Vec<PathBuf>,
    #[arg(long, default_value_t = Caps::default().max_n)]
    max_n: usize,
    #[arg(long = "max-x", default_value_t = Caps::default().max_x_size)]
    max_x: usize,
    #[arg(long, default_value_t = Caps::default().max_paths)]
    max_paths: usize,
    /// Worker threads (0: one per core).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Values of k for the t2 campaign.
    #[arg(long, value_delimiter = ',', default_values_t = [1, 2])]
    k: Vec<usize>,
    #[arg(long, default_value_t = 3)]
    degree: usize,
    /// JSON-lines report destination (default: stdout).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GraphSource {
    /// A single graph in graph6 or sparse6.
    #[arg(long, conflicts_with = "input")]
    graph: Option<String>,
    /// A catalogue file, one graph per line.
    #[arg(long)]
    input: Option<PathBuf>,
}

type Failure = Box<dyn std::error::Error>;

fn parse_graph(text: &str) -> Result<Multigraph, Failure> {
    Ok(gio::parse_graph6(text.trim())?)
}

fn print_json(value: &impl serde::Serialize) -> Result<(), Failure> {
    println!("{}", serde_json::to_string(value)?);
    Ok(())
}

fn verify(args: VerifyArgs) -> Result<bool, Failure> {
    let cfg = CampaignConfig {
        theorem: args.theorem,
        input_files: args.inputs,
        caps: Caps {
            max_n: args.max_n,
            max_x_size: args.max_x,
            max_paths: args.max_paths,
        },
        jobs: args.jobs,
        ks: args.k,
        degree: args.degree,
    };
    let report = run_campaign(&cfg)?;
    match &args.out {
        Some(path) => report.write_jsonl(BufWriter::new(File::create(path)?))?,
        None => report.write_jsonl(io::stdout().lock())?,
    }
    let s = &report.summary;
    eprintln!(
        "{:?}: {} graphs, {} meeting hypotheses, {} skipped, {} instances, {} violations",
        report.theorem, s.graphs, s.hypotheses_met, s.skipped, s.instances, s.violations
    );
    Ok(s.violations == 0)
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Verify(args) => verify(args),
        Command::CyclicConnectivity { graphs } => {
            let list: Vec<Multigraph> = match (graphs.graph, graphs.input) {
                (Some(g), _) => vec![parse_graph(&g)?],
                (None, Some(path)) => read_catalogue_file(&path)?.into_iter().map(|e| e.graph).collect(),
                (None, None) => return Err("give --graph or --input".into()),
            };
            for g in &list {
                print_json(&json!({ "graph": gio::emit(g), "report": cyclic_edge_connectivity(g) }))?;
            }
            Ok(true)
        }
        Command::Classify { graph, x, d, k, mis_cap } => {
            let g = parse_graph(&graph)?;
            let x: EdgeSet = x.into_iter().collect();
            print_json(&classify_with(&g, &x, d, k, ClassifyOptions { mis_cap })?)?;
            Ok(true)
        }
        Command::ExtendPath { graph, path, witness_cap } => {
            let g = parse_graph(&graph)?;
            let p = PathSpec::from_vertices(&g, &path)?;
            match extends_to_two_factor(&g, &p)? {
                Some(tf) => print_json(&json!({ "path": path, "twoFactor": tf.edges })),
                None => {
                    let witness = build_path_witness_with_cap(&g, &p, witness_cap).ok();
                    print_json(&json!({ "path": path, "twoFactor": null, "witness": witness }))
                }
            }?;
            Ok(true)
        }
        Command::Filter {
            input,
            regular,
            even,
            min_cyclic,
        } => {
            let predicate = Predicate {
                regular,
                even_order: even,
                min_cyclic,
            };
            let (graphs, summary) = filter_catalogue(&input, &predicate)?;
            let mut out = io::stdout().lock();
            for e in &graphs {
                writeln!(out, "{}", gio::emit(&e.graph))?;
            }
            eprintln!("{}", serde_json::to_string(&summary)?);
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
