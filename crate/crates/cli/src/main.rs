mod format;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use arcc::io::{chain_from_json, complex_from_json, complex_to_json, coords_from_csv, points_from_csv, weights_from_json, ComplexJson};
use arcc::{
    betti_numbers, chordless_cycle_lifting, cubical, hodge_decompose, persistence, product, spanning_tree_lifting,
    spectral_basis, spectral_filter, validate_dim1, validate_dim2, validate_nd, vietoris_rips, vr_filtration,
    window_lifting, CellComplex, Chain, Coefficients, Embedding, Error, Filter, ValidationReport, Weights,
    DEFAULT_MAX_CYCLES,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use format::{json_num, json_nums, num};

#[derive(Parser, Debug)]
#[command(name = "arcc", version, about = "Cell complexes: validation, homology, Hodge theory, constructions")]
struct Cli {
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    output: Option<Output>,

    /// Values smaller than this in magnitude are printed as 0.
    #[arg(long, global = true, default_value_t = 1e-8, value_parser = positive)]
    tolerance: f64,

    /// Seed for randomized helpers. No current command draws random numbers.
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the regularity conditions of a complex.
    Validate {
        file: PathBuf,
        /// Use the closure-based check valid in every dimension.
        #[arg(long)]
        nd: bool,
    },
    /// Betti numbers, comma-separated by dimension.
    Betti {
        file: PathBuf,
        /// Integer coefficients (adds torsion to JSON output).
        #[arg(long)]
        integer: bool,
    },
    /// Hodge decomposition of a chain.
    Decompose {
        file: PathBuf,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        signal: PathBuf,
        #[arg(long)]
        weights: Option<PathBuf>,
    },
    /// Eigenvalues of the Hodge Laplacian with subspace tags.
    Spectrum {
        file: PathBuf,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        weights: Option<PathBuf>,
    },
    /// Apply a spectral filter to a chain.
    Filter {
        file: PathBuf,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        signal: PathBuf,
        /// identity, lowpass, heat:t=<t> or poly:<c0>,<c1>,...
        #[arg(long)]
        filter: String,
        #[arg(long)]
        weights: Option<PathBuf>,
    },
    /// Build a complex from points or grid sizes.
    #[command(subcommand)]
    Build(Build),
    /// Cartesian product of two complexes.
    Product { a: PathBuf, b: PathBuf },
    /// Attach 2-cells to a graph.
    #[command(subcommand)]
    Lift(Lift),
    /// Vietoris–Rips persistence diagram of a point cloud.
    Persist {
        points: PathBuf,
        #[arg(long)]
        max_eps: f64,
        #[arg(long)]
        max_dim: usize,
        #[arg(long)]
        keep_zero_bars: bool,
    },
}

#[derive(Subcommand, Debug)]
enum Build {
    Vr {
        points: PathBuf,
        #[arg(long)]
        eps: f64,
        #[arg(long)]
        maxdim: usize,
    },
    Cubical {
        #[arg(required = true)]
        sizes: Vec<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum Lift {
    Window {
        graph: PathBuf,
        #[arg(long)]
        coords: PathBuf,
    },
    Tree {
        graph: PathBuf,
        /// Root vertex label.
        #[arg(long)]
        root: Option<String>,
    },
    Chordless {
        graph: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_CYCLES)]
        max_cells: usize,
    },
}

fn positive(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        Ok(_) => Err("must be a positive number".into()),
        Err(e) => Err(e.to_string()),
    }
}

enum Failure {
    Domain(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::UnknownFilter(_) => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

struct Outcome {
    text: String,
    ok: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, ok: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            if !out.text.ends_with('\n') {
                println!();
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_complex(path: &Path) -> Result<CellComplex, Failure> {
    Ok(complex_from_json(&read(path)?)?)
}

fn load_signal(path: &Path, cc: &CellComplex, dim: usize) -> Result<Chain, Failure> {
    let chain = chain_from_json(&read(path)?)?;
    if chain.dim != dim {
        return Err(Failure::Usage(format!("signal is a {}-chain but --dim is {dim}", chain.dim)));
    }
    chain.check_against(cc)?;
    Ok(chain)
}

fn load_weights(path: Option<&PathBuf>, cc: &CellComplex) -> Result<Option<Weights>, Failure> {
    path.map(|p| {
        let w = weights_from_json(&read(p)?)?;
        w.check_against(cc)?;
        Ok(w)
    })
    .transpose()
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let tol = cli.tolerance;
    let fmt = |default: Output| cli.output.unwrap_or(default);
    match &cli.command {
        Command::Validate { file, nd } => {
            let cc = load_complex(file)?;
            let report = if *nd || cc.dim() > 2 {
                validate_nd(&cc)?
            } else {
                validate_dim1(&cc).merge(validate_dim2(&cc))
            };
            Ok(Outcome { ok: report.valid, text: render_report(&report, fmt(Output::Json)) })
        }
        Command::Betti { file, integer } => {
            let cc = load_complex(file)?;
            let coeffs = if *integer { Coefficients::Integer } else { Coefficients::Real };
            let summary = betti_numbers(&cc, coeffs)?;
            Ok(Outcome::ok(match fmt(Output::Csv) {
                Output::Csv => join(summary.betti.iter().map(usize::to_string)),
                Output::Json => pretty(&serde_json::to_value(&summary).expect("summary serializes")),
            }))
        }
        Command::Decompose { file, dim, signal, weights } => {
            let cc = load_complex(file)?;
            let x = load_signal(signal, &cc, *dim)?;
            let w = load_weights(weights.as_ref(), &cc)?;
            let d = hodge_decompose(&cc, &x, w.as_ref())?;
            let parts = [("gradient", &d.gradient), ("curl", &d.curl), ("harmonic", &d.harmonic)];
            Ok(Outcome::ok(match fmt(Output::Json) {
                Output::Json => {
                    let mut obj = serde_json::Map::new();
                    obj.insert("dim".into(), json!(dim));
                    for (name, c) in parts {
                        obj.insert(name.into(), json_nums(c.values.iter(), tol));
                    }
                    pretty(&Value::Object(obj))
                }
                Output::Csv => lines((0..x.len()).map(|i| {
                    let vals = parts.iter().map(|(_, c)| num(c.values[i], tol));
                    join(std::iter::once(csv_field(&cc.cells(*dim)[i])).chain(vals))
                })),
            }))
        }
        Command::Spectrum { file, dim, weights } => {
            let cc = load_complex(file)?;
            check_dim(&cc, *dim)?;
            let w = load_weights(weights.as_ref(), &cc)?;
            let basis = spectral_basis(&cc, *dim, w.as_ref())?;
            Ok(Outcome::ok(match fmt(Output::Csv) {
                Output::Csv => lines(
                    basis.eigenvalues.iter().zip(&basis.tags).map(|(&l, t)| format!("{},{t}", num(l, tol))),
                ),
                Output::Json => {
                    let vectors: Vec<Value> =
                        (0..basis.eigenvalues.len()).map(|i| json_nums(basis.eigenvectors.column(i).iter(), tol)).collect();
                    pretty(&json!({
                        "dim": dim,
                        "eigenvalues": json_nums(basis.eigenvalues.iter(), tol),
                        "tags": basis.tags,
                        "eigenvectors": vectors,
                    }))
                }
            }))
        }
        Command::Filter { file, dim, signal, filter, weights } => {
            let cc = load_complex(file)?;
            let x = load_signal(signal, &cc, *dim)?;
            let f: Filter<f64> = filter.parse()?;
            let w = load_weights(weights.as_ref(), &cc)?;
            let y = spectral_filter(&cc, &x, &f, w.as_ref())?;
            Ok(Outcome::ok(match fmt(Output::Json) {
                Output::Json => pretty(&json!({ "dim": dim, "values": json_nums(y.values.iter(), tol) })),
                Output::Csv => lines(
                    y.values.iter().enumerate().map(|(i, &v)| format!("{},{}", csv_field(&cc.cells(*dim)[i]), num(v, tol))),
                ),
            }))
        }
        Command::Build(Build::Vr { points, eps, maxdim }) => {
            let pc = points_from_csv(&read(points)?)?;
            let cc = vietoris_rips(&pc, *eps, *maxdim)?;
            Ok(Outcome::ok(render_complex(&cc, fmt(Output::Json))))
        }
        Command::Build(Build::Cubical { sizes }) => Ok(Outcome::ok(render_complex(&cubical(sizes)?, fmt(Output::Json)))),
        Command::Product { a, b } => {
            let cc = product(&load_complex(a)?, &load_complex(b)?);
            Ok(Outcome::ok(render_complex(&cc, fmt(Output::Json))))
        }
        Command::Lift(lift) => {
            let cc = match lift {
                Lift::Window { graph, coords } => {
                    let g = load_complex(graph)?;
                    let xy = coords_from_csv(&read(coords)?)?;
                    window_lifting(&Embedding::from_complex(g, xy)?)?
                }
                Lift::Tree { graph, root } => {
                    let g = load_complex(graph)?;
                    let r = root
                        .as_ref()
                        .map(|label| g.index_of(0, label).ok_or_else(|| Failure::Usage(format!("unknown root vertex {label:?}"))))
                        .transpose()?;
                    spanning_tree_lifting(&g, r)?
                }
                Lift::Chordless { graph, max_cells } => chordless_cycle_lifting(&load_complex(graph)?, *max_cells)?,
            };
            Ok(Outcome::ok(render_complex(&cc, fmt(Output::Json))))
        }
        Command::Persist { points, max_eps, max_dim, keep_zero_bars } => {
            let pc = points_from_csv(&read(points)?)?;
            let diagram = persistence(&vr_filtration(&pc, *max_eps, *max_dim)?, *keep_zero_bars);
            Ok(Outcome::ok(match fmt(Output::Csv) {
                Output::Csv => lines(diagram.bars.iter().map(|b| {
                    let death = b.death.map_or_else(|| "inf".to_owned(), |d| num(d, tol));
                    format!("{},{},{death}", b.dim, num(b.birth, tol))
                })),
                Output::Json => pretty(&Value::Array(
                    diagram
                        .bars
                        .iter()
                        .map(|b| {
                            json!({
                                "dim": b.dim,
                                "birth": json_num(b.birth, tol),
                                "death": b.death.map_or(Value::String("inf".into()), |d| json_num(d, tol)),
                            })
                        })
                        .collect(),
                )),
            }))
        }
    }
}

fn check_dim(cc: &CellComplex, dim: usize) -> Result<(), Failure> {
    if dim > cc.dim() {
        return Err(Failure::Usage(format!("--dim {dim} exceeds complex dimension {}", cc.dim())));
    }
    Ok(())
}

fn render_report(report: &ValidationReport, out: Output) -> String {
    match out {
        Output::Json => pretty(&serde_json::to_value(report).expect("report serializes")),
        Output::Csv => {
            let mut rows = vec![format!("valid,{}", report.valid)];
            rows.extend(report.failures.iter().map(|f| {
                format!("{},{},{},{}", f.condition.id(), f.dim, f.index, csv_field(&f.label))
            }));
            lines(rows.into_iter())
        }
    }
}

fn render_complex(cc: &CellComplex, out: Output) -> String {
    match out {
        Output::Json => complex_to_json(cc),
        Output::Csv => {
            let j = ComplexJson::from(cc);
            lines(j.boundaries.iter().flat_map(|b| b.entries.iter().map(move |(i, c, s)| format!("{},{i},{c},{s}", b.k))))
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("value serializes")
}

fn join(items: impl Iterator<Item = String>) -> String {
    items.collect::<Vec<_>>().join(",")
}

fn lines(items: impl Iterator<Item = String>) -> String {
    let mut s: String = items.map(|l| l + "\n").collect();
    if s.is_empty() {
        s.push('\n');
    }
    s
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}
