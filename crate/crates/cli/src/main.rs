use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use dispersion_core::approx::bounds::DEFAULT_SHRINK;
use dispersion_core::approx::{alg_lower_bound, lattice_y, opt_upper_bound, ratio_guarantee};
use serde_json::json;

use dispersion_cli::bench::{run_bench, BenchOptions};
use dispersion_cli::gen::{generate, Distribution, PRNG_NAME};
use dispersion_cli::io::{parse_graph, parse_points, write_points, GraphFormat};
use dispersion_cli::solve::{solve_graph, solve_points, AlgoChoice, SolveOptions};
use dispersion_cli::{CliError, Result};

#[derive(Parser)]
#[command(name = "dispersion", version, about = "Max-min k-dispersion solvers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance read from a point file, stdin, a graph file, or a generator.
    Solve {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = AlgoChoice::Exact)]
        algo: AlgoChoice,
        /// Point file; `-` or absent reads stdin.
        #[arg(long, conflicts_with_all = ["graph", "dist"])]
        input: Option<PathBuf>,
        /// Weighted graph file (matrix or `i j w` edge list).
        #[arg(long, conflicts_with = "dist")]
        graph: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Auto)]
        graph_format: GraphFormat,
        /// Generate the instance instead of reading one.
        #[arg(long, value_enum)]
        dist: Option<Distribution>,
        #[arg(long, requires = "dist")]
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Fall back to greedy when the lattice scheme finds too few occupied disks.
        #[arg(long)]
        fallback: bool,
        #[arg(long)]
        shrink: Option<f64>,
        #[arg(long)]
        radius_fraction: Option<f64>,
        #[arg(long)]
        max_part_cliques: Option<usize>,
    },
    /// Write a seeded point set.
    Gen {
        #[arg(long, value_enum)]
        dist: Distribution,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Fit the empirical running-time exponent over growing instances.
    Bench {
        #[arg(long, value_enum, default_value_t = AlgoChoice::Exact)]
        algo: AlgoChoice,
        #[arg(long)]
        k: usize,
        /// Comma-separated, strictly increasing, at least four.
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        d: usize,
        #[arg(long, default_value_t = 3)]
        repeats: usize,
    },
    /// Print the packing upper bound and the lattice guarantee for k.
    Bounds {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = DEFAULT_SHRINK)]
        shrink: f64,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn open_input(path: Option<&PathBuf>) -> Result<Box<dyn io::BufRead>> {
    Ok(match path {
        Some(p) if p.as_os_str() != "-" => Box::new(BufReader::new(File::open(p)?)),
        _ => Box::new(BufReader::new(io::stdin())),
    })
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Solve {
            k,
            algo,
            input,
            graph,
            graph_format,
            dist,
            n,
            seed,
            d,
            threads,
            fallback,
            shrink,
            radius_fraction,
            max_part_cliques,
        } => {
            let mut opts = SolveOptions::new(k, algo);
            opts.threads = threads;
            opts.fallback = fallback;
            if let Some(s) = shrink {
                opts.shrink = s;
            }
            if let Some(r) = radius_fraction {
                opts.radius_fraction = r;
            }
            if let Some(m) = max_part_cliques {
                opts.max_part_cliques = m;
            }

            let report = if let Some(path) = graph {
                let g = parse_graph(BufReader::new(File::open(path)?), graph_format)?;
                solve_graph(&g, &opts)?
            } else if let Some(dist) = dist {
                let n = n.ok_or_else(|| CliError::Usage("--dist needs --n".into()))?;
                let points = generate(dist, n, seed, d)?;
                let mut report = solve_points(&points, &opts)?;
                report.seed = Some(seed);
                report.config["dist"] = json!(dist.name());
                report.config["prng"] = json!(PRNG_NAME);
                report
            } else {
                let points = parse_points(open_input(input.as_ref())?)?;
                solve_points(&points, &opts)?
            };
            eprintln!("{}", report.summary());
            println!("{}", report.to_json());
            Ok(if report.status == "failed" { 1 } else { 0 })
        }
        Command::Gen {
            dist,
            n,
            d,
            seed,
            out,
        } => {
            let points = generate(dist, n, seed, d)?;
            match out {
                Some(path) => write_points(&points, io::BufWriter::new(File::create(path)?))?,
                None => {
                    let stdout = io::stdout();
                    let mut lock = io::BufWriter::new(stdout.lock());
                    write_points(&points, &mut lock)?;
                    lock.flush()?;
                }
            }
            eprintln!(
                "generated {n} {} points (seed {seed}, {PRNG_NAME})",
                dist.name()
            );
            Ok(0)
        }
        Command::Bench {
            algo,
            k,
            sizes,
            seed,
            d,
            repeats,
        } => {
            let report = run_bench(&BenchOptions {
                algo,
                k,
                sizes,
                seed,
                d,
                repeats,
            })?;
            for row in &report.rows {
                eprintln!("n={:>6}  median {:>12.3} ms", row.n, row.median_ms);
            }
            eprintln!("fitted exponent: {:.3}", report.fitted_exponent);
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("bench report serializes")
            );
            Ok(0)
        }
        Command::Bounds { k, shrink } => {
            let opt = opt_upper_bound(k)?;
            let alg = alg_lower_bound(k, shrink)?;
            let out = json!({
                "k": k,
                "shrink": shrink,
                "y": lattice_y(k, shrink)?,
                "opt_upper_bound": opt.packing,
                "opt_upper_bound_simplified": opt.simplified,
                "simplified_valid": opt.simplified_valid,
                "alg_lower_bound": alg,
                "ratio_guarantee": ratio_guarantee(shrink)?,
                "ratio_vs_packing_bound": alg / opt.packing,
            });
            eprintln!(
                "k={k}: OPT <= {:.6}, lattice ALG >= {:.6}",
                opt.packing, alg
            );
            println!(
                "{}",
                serde_json::to_string_pretty(&out).expect("bounds serialize")
            );
            Ok(0)
        }
    }
}
