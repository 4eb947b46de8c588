//! `aldous`: batch verification and data export.
//!
//! Exit status: 0 when the check passes, 1 when it fails, 2 on invalid
//! input. Output is assembled in full before anything is printed.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use aldous_core::conjecture::{check_conjecture, GammaVector};
use aldous_core::graphs::{generate, random_connected, seeded_rng, GraphKind, WeightSpec};
use aldous_core::interchange::{aldous_check, interchange_spectrum_capped, spectrum_via_irreps};
use aldous_core::reduce::{certify_elimination, reduce_to_edge, EliminationCertificate, EliminationOutcome, Skeleton};
use aldous_core::spectral::{multiset_equal, spectrum_csv};
use aldous_core::yor::YoungBasis;
use aldous_core::{Partition, Permutation, WeightedGraph};
use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(name = "aldous", version, about = "Interchange-process spectral gap checks")]
struct Cli {
    /// Relative tolerance for every numerical comparison.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,
    /// Seed for every random construction.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Output format; defaults to csv for `rep` and json otherwise.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Largest n for which the n!-state Laplacian is built.
    #[arg(long = "n-cap", global = true, default_value_t = 8)]
    n_cap: usize,
    /// Node budget for the certificate searches.
    #[arg(long, global = true, default_value_t = 100_000)]
    budget: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compare the interchange and random-walk gaps of a graph file.
    Gap { graph: PathBuf },
    /// Check the star-versus-clique inequality on every irrep of S_k.
    CheckConjecture {
        #[arg(long)]
        k: usize,
        /// Comma-separated k-1 nonnegative weights; all ones if omitted.
        #[arg(long)]
        gamma: Option<String>,
    },
    /// Search for an elimination order (or replay a saved certificate).
    Certify {
        #[arg(long, default_value_t = 4)]
        k: usize,
        /// Treat the input as a certificate and replay it.
        #[arg(long)]
        replay: bool,
        input: PathBuf,
    },
    /// Reduce the positive-edge skeleton of a graph to a single edge.
    Reduce { graph: PathBuf },
    /// Emit a graph file: path|cycle|star|complete|wheel N, nested D N, random N.
    Generate {
        kind: String,
        params: Vec<usize>,
        /// Draw weights from --seed instead of using unit weights.
        #[arg(long)]
        random_weights: bool,
        /// Extra-edge probability for `random`.
        #[arg(long, default_value_t = 0.3)]
        p: f64,
    },
    /// Per-irrep spectrum of the interchange Laplacian.
    Decompose { graph: PathBuf },
    /// Representation matrix of a permutation in cycle notation.
    Rep { shape: String, sigma: String },
}

struct Output {
    text: String,
    pass: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn read_graph(path: &Path) -> anyhow::Result<WeightedGraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    WeightedGraph::from_json(&text).with_context(|| format!("parsing {}", path.display()))
}

fn json<T: Serialize>(value: &T) -> anyhow::Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn run(cli: &Cli) -> anyhow::Result<Output> {
    if !(cli.tol > 0.0 && cli.tol.is_finite()) {
        bail!("--tol must be positive");
    }
    if cli.n_cap < 2 {
        bail!("--n-cap must be at least 2");
    }
    let format = cli.format.unwrap_or(match cli.command {
        Command::Rep { .. } => Format::Csv,
        _ => Format::Json,
    });
    match &cli.command {
        Command::Gap { graph } => {
            let g = read_graph(graph)?;
            let r = aldous_check(&g, cli.tol)?;
            let text = match format {
                Format::Json => json(&r)?,
                Format::Csv => format!(
                    "gap_interchange,gap_rw,argmin_partition,pass\n{:.16e},{:.16e},\"{}\",{}\n",
                    r.gap_interchange, r.gap_rw, r.argmin_partition, r.pass
                ),
            };
            Ok(Output { text, pass: r.pass })
        }
        Command::CheckConjecture { k, gamma } => {
            let gv = match gamma {
                Some(s) => GammaVector::parse(*k, s)?,
                None => GammaVector::ones(*k)?,
            };
            let r = check_conjecture(*k, &gv, cli.tol)?;
            let text = match format {
                Format::Json => json(&r)?,
                Format::Csv => {
                    let mut s = String::from("lambda,min_eig,boundary,psd\n");
                    for l in &r.per_lambda {
                        s += &format!("\"{}\",{:.16e},{},{}\n", l.lambda, l.min_eig, l.boundary, l.psd);
                    }
                    s
                }
            };
            Ok(Output { text, pass: r.pass })
        }
        Command::Certify { k, replay, input } => {
            let text = fs::read_to_string(input).with_context(|| format!("reading {}", input.display()))?;
            if *replay {
                let cert = parse_certificate(&text)?;
                let ok = cert.replay(1e-12);
                #[derive(Serialize)]
                struct Replay {
                    k: usize,
                    steps: usize,
                    valid: bool,
                }
                let r = Replay { k: cert.k, steps: cert.steps.len(), valid: ok };
                return Ok(Output { text: json(&r)?, pass: ok });
            }
            let g = WeightedGraph::from_json(&text).with_context(|| format!("parsing {}", input.display()))?;
            let out = certify_elimination(&g, *k, cli.budget)?;
            let pass = out.certificate().is_some();
            Ok(Output { text: json(&out)?, pass })
        }
        Command::Reduce { graph } => {
            let g = read_graph(graph)?;
            let out = reduce_to_edge(&Skeleton::from_graph(&g), cli.budget)?;
            let pass = out.certificate().is_some();
            Ok(Output { text: json(&out)?, pass })
        }
        Command::Generate { kind, params, random_weights, p } => {
            let weights = if *random_weights { WeightSpec::Seeded(cli.seed) } else { WeightSpec::Unit };
            let g = generate_graph(kind, params, &weights, *p, cli.seed)?;
            Ok(Output { text: g.to_json() + "\n", pass: true })
        }
        Command::Decompose { graph } => {
            let g = read_graph(graph)?;
            let spec = spectrum_via_irreps(&g)?;
            let multiset = spec.multiset();
            let direct = (g.n() <= cli.n_cap).then(|| interchange_spectrum_capped(&g, cli.n_cap)).transpose()?;
            let matches = direct.as_ref().map(|d| multiset_equal(d, &multiset, cli.tol));
            let text = match format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Report<'a> {
                        #[serde(flatten)]
                        spectrum: &'a aldous_core::interchange::IrrepSpectrum,
                        multiset: &'a [f64],
                        direct_matches: Option<bool>,
                    }
                    json(&Report { spectrum: &spec, multiset: &multiset, direct_matches: matches })?
                }
                Format::Csv => spectrum_csv(&multiset),
            };
            Ok(Output { text, pass: matches.unwrap_or(true) })
        }
        Command::Rep { shape, sigma } => {
            let lam: Partition = shape.parse()?;
            let perm = Permutation::from_cycles(lam.n(), sigma)?;
            let basis = YoungBasis::new(&lam);
            let m = basis.sigma(&perm)?;
            let text = match format {
                Format::Csv => m.to_csv(),
                Format::Json => {
                    #[derive(Serialize)]
                    struct Rep {
                        shape: String,
                        sigma: Vec<usize>,
                        tableaux: Vec<String>,
                        matrix: Vec<Vec<f64>>,
                    }
                    let rows = (0..m.dim()).map(|r| m.matrix.row(r).iter().map(|x| x + 0.0).collect()).collect();
                    json(&Rep {
                        shape: lam.to_string(),
                        sigma: perm.one_line(),
                        tableaux: basis.tableaux().iter().map(|t| t.to_string()).collect(),
                        matrix: rows,
                    })?
                }
            };
            Ok(Output { text, pass: true })
        }
    }
}

fn parse_certificate(text: &str) -> anyhow::Result<EliminationCertificate> {
    if let Ok(out) = serde_json::from_str::<EliminationOutcome>(text) {
        return out.certificate().cloned().context("the input records a failed search, not a certificate");
    }
    serde_json::from_str(text).context("parsing certificate")
}

fn generate_graph(kind: &str, params: &[usize], weights: &WeightSpec, p: f64, seed: u64) -> anyhow::Result<WeightedGraph> {
    let one = || -> anyhow::Result<usize> {
        match params {
            [n] => Ok(*n),
            _ => bail!("{kind} takes exactly one size parameter"),
        }
    };
    let kind = match kind {
        "path" => GraphKind::Path { n: one()? },
        "cycle" => GraphKind::Cycle { n: one()? },
        "star" => GraphKind::Star { n: one()? },
        "complete" => GraphKind::Complete { n: one()? },
        "wheel" => GraphKind::Wheel { n: one()? },
        "nested" | "nested-triangulation" => match params {
            [depth, branching] => GraphKind::NestedTriangulation { depth: *depth, branching: *branching },
            _ => bail!("nested takes depth and branching"),
        },
        "random" => {
            let n = one()?;
            if n == 0 || !(0.0..=1.0).contains(&p) {
                bail!("random needs n >= 1 and 0 <= p <= 1");
            }
            return Ok(random_connected(n, p, &mut seeded_rng(seed)));
        }
        other => bail!("unknown graph kind {other:?}"),
    };
    Ok(generate(&kind, weights)?)
}
