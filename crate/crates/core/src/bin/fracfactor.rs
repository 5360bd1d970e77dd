use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use fracfactor::factor::{decide, Method, Property};
use fracfactor::graph::{construct_h, construct_l};
use fracfactor::graph6::{enumerate_from_file, from_graph6, to_graph6};
use fracfactor::harness::{
    bounds_campaign, oracle_equivalence_campaign, spectral_threshold_scan, verify_h_not_covered,
    verify_l_spectral_bounds, verify_spectral_ordering, yuan_hao_campaign, CampaignConfig,
    GraphSource, IntRange, Report, Sampler, ScanConfig,
};
use fracfactor::spectral::{largest_eigenvalue, MatrixKind, DEFAULT_TOL};
use fracfactor::{FactorBounds, Graph, Result};

#[derive(Parser)]
#[command(
    name = "fracfactor",
    version,
    about = "Fractional [a,b]-factor and coveredness toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    /// K_(a-1) join (K_1 union K_(n-a))
    H,
    /// K_(4a+1) join (K_2 union K_(n-4a-3))
    L,
    Complete,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Structural,
    Lp,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixArg {
    Adjacency,
    SignlessLaplacian,
}

impl From<MatrixArg> for MatrixKind {
    fn from(m: MatrixArg) -> Self {
        match m {
            MatrixArg::Adjacency => MatrixKind::Adjacency,
            MatrixArg::SignlessLaplacian => MatrixKind::SignlessLaplacian,
        }
    }
}

#[derive(clap::Args)]
struct CheckArgs {
    /// A graph6 string, or a file with one graph6 string per line.
    #[arg(long)]
    graph6: String,
    #[arg(short)]
    a: u32,
    #[arg(short)]
    b: u32,
    #[arg(long, value_enum, default_value = "structural")]
    method: MethodArg,
}

#[derive(clap::Args)]
struct OutputArgs {
    /// Write the JSON-lines report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Print a named graph as graph6.
    Construct {
        #[arg(value_enum)]
        family: Family,
        #[arg(short)]
        n: usize,
        #[arg(short, default_value_t = 1)]
        a: usize,
        /// Print a JSON object with edges (and parts for L) instead.
        #[arg(long)]
        json: bool,
    },
    /// Largest eigenvalue of the adjacency or signless Laplacian matrix.
    Spectral {
        #[arg(long)]
        graph6: String,
        #[arg(long, value_enum, default_value = "adjacency")]
        matrix: MatrixArg,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Decide fractional [a,b]-coveredness.
    CheckCovered(CheckArgs),
    /// Decide existence of a fractional [a,b]-factor.
    CheckFactor(CheckArgs),
    /// Sweep the structural and spectral grids: H(n,a) non-coveredness,
    /// spectral ordering, L(n,a) bounds, Hong/Feng-Yu bounds and the
    /// degree/neighborhood conditions.
    VerifyLemmas {
        #[arg(long, default_value_t = 6)]
        a_max: usize,
        #[arg(long, default_value_t = 200)]
        n_max: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Largest order for the exhaustive H(n,a) checks.
        #[arg(long, default_value_t = 14)]
        h_n_max: usize,
        /// Random connected graphs (n <= 30) for the Hong/Feng-Yu bounds.
        #[arg(long, default_value_t = 10_000)]
        bound_samples: usize,
        /// Random dense graphs (n <= 14) for the degree/neighborhood conditions.
        #[arg(long, default_value_t = 2_000)]
        condition_samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Stress-test the spectral threshold on dense samples.
    ScanThreshold {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        a: u32,
        #[arg(short)]
        b: u32,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value = "adjacency")]
        matrix: MatrixArg,
        /// Samples remove up to this many edges (from K_n, or from H(n,a)
        /// with --near-extremal).
        #[arg(long, default_value_t = 6)]
        max_removed: usize,
        /// Perturb H(n,a) by adding up to this many edges instead of
        /// sampling dense graphs.
        #[arg(long)]
        near_extremal: Option<usize>,
        #[arg(long, default_value_t = fracfactor::harness::SCAN_TOL)]
        tol: f64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Cross-check the structural, LP and half-integral deciders.
    OracleEquiv {
        /// graph6 corpus; mutually exclusive with --random.
        #[arg(long, conflicts_with = "random")]
        file: Option<PathBuf>,
        /// Number of random G(n,p) graphs instead of a file.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Semicolon-separated a,b pairs.
        #[arg(long, default_value = "2,2;2,3")]
        pairs: String,
        #[arg(long, default_value_t = fracfactor::factor::DEFAULT_EDGE_CAP)]
        edge_cap: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
}

fn read_graphs(arg: &str) -> Result<Vec<Graph>> {
    if Path::new(arg).is_file() {
        enumerate_from_file(arg)?.collect()
    } else {
        Ok(vec![from_graph6(arg)?])
    }
}

fn parse_pairs(text: &str) -> Result<Vec<FactorBounds>> {
    text.split(';')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            let bad =
                || fracfactor::Error::InvalidParameter(format!("bad pair {p:?}, expected a,b"));
            let (a, b) = p.split_once(',').ok_or_else(bad)?;
            let a = a.trim().parse().map_err(|_| bad())?;
            let b = b.trim().parse().map_err(|_| bad())?;
            FactorBounds::new(a, b)
        })
        .collect()
}

fn print_json(value: &serde_json::Value) {
    println!("{value}");
}

fn emit(report: &Report, out: &OutputArgs) -> Result<bool> {
    match &out.output {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            report.write_jsonl(&mut w)?;
            w.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            report.write_jsonl(&mut w)?;
            w.flush()?;
        }
    }
    eprintln!("{}", report.summary_line());
    Ok(!report.has_failures())
}

fn check(args: &CheckArgs, property: Property) -> Result<bool> {
    let bounds = FactorBounds::new(args.a, args.b)?;
    for g in read_graphs(&args.graph6)? {
        let g6 = to_graph6(&g)?;
        let methods: &[Method] = match args.method {
            MethodArg::Structural => &[Method::Structural],
            MethodArg::Lp => &[Method::Lp],
            MethodArg::Both => &[Method::Structural, Method::Lp],
        };
        let verdicts = methods
            .iter()
            .map(|&m| decide(&g, bounds, property, m))
            .collect::<Result<Vec<_>>>()?;
        let mut line = json!({
            "graph6": g6,
            "a": args.a,
            "b": args.b,
            "property": property,
            "holds": verdicts[0].holds,
        });
        let names = ["structural", "lp"];
        let offset = usize::from(matches!(args.method, MethodArg::Lp));
        for (i, v) in verdicts.iter().enumerate() {
            line[names[i + offset]] = serde_json::to_value(v).expect("verdicts serialize");
        }
        if verdicts.len() == 2 {
            line["agree"] = (verdicts[0].holds == verdicts[1].holds).into();
        }
        print_json(&line);
    }
    Ok(true)
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Construct { family, n, a, json } => {
            let (g, parts) = match family {
                Family::H => (construct_h(n, a)?, None),
                Family::L => {
                    let l = construct_l(n, a)?;
                    (l.graph, Some(l.parts))
                }
                Family::Complete => (Graph::complete(n)?, None),
            };
            if json {
                print_json(&json!({
                    "graph6": to_graph6(&g)?,
                    "n": g.n(),
                    "m": g.m(),
                    "edges": g.edges(),
                    "parts": parts,
                }));
            } else {
                println!("{}", to_graph6(&g)?);
            }
            Ok(true)
        }
        Command::Spectral {
            graph6,
            matrix,
            tol,
        } => {
            let kind = MatrixKind::from(matrix);
            for g in read_graphs(&graph6)? {
                let r = largest_eigenvalue(&kind.of(&g), tol)?;
                print_json(&json!({
                    "graph6": to_graph6(&g)?,
                    "matrix": kind.name(),
                    "value": r.value,
                    "residual": r.residual,
                    "iterations": r.iterations,
                }));
            }
            Ok(true)
        }
        Command::CheckCovered(args) => check(&args, Property::Covered),
        Command::CheckFactor(args) => check(&args, Property::Factor),
        Command::VerifyLemmas {
            a_max,
            n_max,
            tol,
            h_n_max,
            bound_samples,
            condition_samples,
            seed,
            out,
        } => {
            let w = out.workers;
            let mut report = Report::new("verify-lemmas", Vec::new());
            let h_grid = IntRange::new(1, n_max.min(h_n_max))?;
            let a_grid = IntRange::new(1, a_max)?;
            report.extend(verify_h_not_covered(a_grid, h_grid, w)?);
            report.extend(verify_spectral_ordering(a_grid, h_grid, tol, w)?);
            report.extend(verify_l_spectral_bounds(
                a_grid,
                IntRange::new(1, n_max)?,
                tol,
                w,
            )?);

            let mut bounds = CampaignConfig::new(GraphSource::Random {
                sampler: Sampler::Connected {
                    n: IntRange::new(2, 30)?,
                },
                count: bound_samples,
            });
            bounds.tol = tol;
            bounds.seed = seed;
            bounds.worker_count = w;
            report.extend(bounds_campaign(&bounds)?);

            let mut conditions = CampaignConfig::new(GraphSource::Random {
                sampler: Sampler::Gnp {
                    n: IntRange::new(8, 14)?,
                    p_min: 0.6,
                    p_max: 1.0,
                },
                count: condition_samples,
            });
            conditions.pairs = parse_pairs("2,2;3,3;3,4;4,4")?;
            conditions.seed = seed;
            conditions.worker_count = w;
            report.extend(yuan_hao_campaign(&conditions)?);
            emit(&report, &out)
        }
        Command::ScanThreshold {
            n,
            a,
            b,
            samples,
            seed,
            matrix,
            max_removed,
            near_extremal,
            tol,
            out,
        } => {
            let mut c = ScanConfig::new(n, FactorBounds::new(a, b)?, matrix.into());
            c.samples = samples;
            c.seed = seed;
            c.sampler = match near_extremal {
                None => Sampler::Dense { n, max_removed },
                Some(max_added) => Sampler::NearExtremal {
                    n,
                    a: a as usize,
                    max_added,
                    max_removed,
                },
            };
            c.tol = tol;
            c.worker_count = out.workers;
            emit(&spectral_threshold_scan(&c)?, &out)
        }
        Command::OracleEquiv {
            file,
            random,
            n_max,
            seed,
            pairs,
            edge_cap,
            out,
        } => {
            let source = match (file, random) {
                (Some(path), _) => GraphSource::File(path),
                (None, Some(count)) => GraphSource::Random {
                    sampler: Sampler::Gnp {
                        n: IntRange::new(1, n_max)?,
                        p_min: 0.0,
                        p_max: 1.0,
                    },
                    count,
                },
                (None, None) => {
                    return Err(fracfactor::Error::InvalidParameter(
                        "give --file or --random".into(),
                    ));
                }
            };
            let mut c = CampaignConfig::new(source);
            c.pairs = parse_pairs(&pairs)?;
            c.seed = seed;
            c.worker_count = out.workers;
            c.edge_cap = edge_cap;
            emit(&oracle_equivalence_campaign(&c)?, &out)
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
