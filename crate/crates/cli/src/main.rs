//! `bdom`: generate family graphs, compute metrics, emit the known optimal
//! broadcasts, solve exactly, verify closed forms and export DOT.
//!
//! Exit codes: 0 success, 1 verification mismatch or domination failure,
//! 2 usage error, 3 I/O or parse error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use broadcast_domination::io::{
    export_dot, read_broadcast, read_graph, write_broadcast, write_graph, DotOptions,
};
use broadcast_domination::prelude::*;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Debug, Parser)]
#[command(name = "bdom", version, about = "Exact broadcast domination toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write the graph document of a family member.
    Gen {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Radius, diameter, eccentricities and center of a graph file.
    Metrics {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Write the known optimal broadcast for a family member.
    Construct {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute the broadcast domination number of a graph file exactly.
    Solve {
        file: PathBuf,
        /// Only accept broadcasts that cover every vertex exactly once.
        #[arg(long)]
        efficient: bool,
        /// Cost budget: `auto` (the radius) or a positive integer.
        #[arg(long, default_value = "auto", value_parser = parse_max_cost)]
        max_cost: CostBound,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
        threads: u16,
        #[arg(long)]
        json: bool,
    },
    /// Check closed form, construction and exact solver over a range.
    Verify {
        #[arg(long, value_parser = parse_kind)]
        family: FamilyKind,
        #[arg(long)]
        min: Option<usize>,
        #[arg(long)]
        max: Option<usize>,
        #[arg(long)]
        m_min: Option<usize>,
        #[arg(long)]
        m_max: Option<usize>,
        #[arg(long)]
        n_min: Option<usize>,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Export a graph file, optionally with a broadcast, for Graphviz.
    Export {
        file: PathBuf,
        #[arg(long, value_enum)]
        format: ExportFormat,
        #[arg(long)]
        broadcast: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct FamilyArgs {
    /// path, cycle, sunlet, sunlet-deg or gen-sunlet.
    #[arg(long, value_parser = parse_kind)]
    family: FamilyKind,
    #[arg(long)]
    n: Option<usize>,
    /// Cycle size for sunlet-deg and gen-sunlet.
    #[arg(long)]
    m: Option<usize>,
    /// Comma-separated branch lengths for gen-sunlet.
    #[arg(long, value_delimiter = ',')]
    lengths: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ExportFormat {
    Dot,
}

fn parse_kind(s: &str) -> Result<FamilyKind, String> {
    s.parse()
}

fn parse_max_cost(s: &str) -> Result<CostBound, String> {
    if s == "auto" {
        return Ok(CostBound::Auto);
    }
    match s.parse::<u32>() {
        Ok(b) if b >= 1 => Ok(CostBound::Explicit(b)),
        _ => Err(format!("expected `auto` or a positive integer, got {s:?}")),
    }
}

enum Failure {
    Usage(String),
    /// Verification mismatch or a broadcast that fails to dominate.
    Check(String),
    Input(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Check(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Input(_) => 3,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Failure::Check(_) => "check-failed",
            Failure::Usage(_) => "usage",
            Failure::Input(_) => "input",
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Check(m) | Failure::Input(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        match err {
            Error::InvalidFamilyParameter { .. } | Error::InvalidRange(_) => {
                Failure::Usage(err.to_string())
            }
            Error::BudgetExhausted { .. } => Failure::Check(err.to_string()),
            _ => Failure::Input(format!("{} ({})", err, err.kind())),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json_errors = matches!(
        cli.command,
        Command::Metrics { json: true, .. }
            | Command::Solve { json: true, .. }
            | Command::Verify { json: true, .. }
    );
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            if json_errors {
                let report =
                    json!({"error": {"kind": failure.kind(), "message": failure.message()}});
                eprintln!("{report}");
            } else {
                eprintln!("error: {}", failure.message());
            }
            ExitCode::from(failure.code())
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Gen { family, out } => {
            let spec = family.spec()?;
            let g = generate(&spec)?;
            emit(out.as_deref(), &write_graph(&g))?;
            Ok(0)
        }
        Command::Metrics { file, json } => {
            let g = load_graph(&file)?;
            let p = metrics(&g)?;
            let labels = |vs: &[usize]| vs.iter().map(|v| v + 1).collect::<Vec<_>>();
            if json {
                let doc = json!({
                    "center": labels(&p.center_vertices),
                    "diameter": p.diameter,
                    "eccentricity": p.per_vertex_eccentricity,
                    "radius": p.radius,
                });
                println!("{doc}");
            } else {
                println!("radius: {}", p.radius);
                println!("diameter: {}", p.diameter);
                println!("center: {}", join(labels(&p.center_vertices)));
                println!("eccentricity: {}", join(p.per_vertex_eccentricity.iter()));
            }
            Ok(0)
        }
        Command::Construct { family, out } => {
            let spec = family.spec()?;
            let g = generate(&spec)?;
            let f = construct(&spec)?.ok_or_else(|| {
                Failure::Usage(format!(
                    "no closed-form construction for {}; use `solve`",
                    spec.kind()
                ))
            })?;
            let report = coverage(&g, &f)?;
            if !report.is_dominating {
                return Err(Failure::Check(format!(
                    "construction {f} for {spec} leaves {} vertices uncovered",
                    report.uncovered.len()
                )));
            }
            emit(out.as_deref(), &write_broadcast(&f))?;
            Ok(0)
        }
        Command::Solve {
            file,
            efficient,
            max_cost,
            threads,
            json,
        } => {
            let g = load_graph(&file)?;
            let opts = SolveOptions {
                max_cost,
                require_efficient: efficient,
                parallelism: usize::from(threads),
            };
            let result = solve_exact(&g, &opts)?;
            let report = coverage(&g, &result.witness)?;
            if !report.is_dominating || (efficient && !report.is_efficient) {
                return Err(Failure::Check(format!(
                    "solver witness {} fails validation",
                    result.witness
                )));
            }
            if json {
                println!("{}", solve_json(&result, efficient));
            } else {
                if let Some(spec) = g.family() {
                    println!("graph: {spec}");
                }
                println!("gamma_b: {}", result.gamma_b);
                println!("witness: {}", result.witness);
                println!("efficient: {}", report.is_efficient);
                println!("candidates_checked: {}", result.candidates_checked);
                println!("elapsed_ms: {:.3}", result.elapsed.as_secs_f64() * 1e3);
            }
            Ok(0)
        }
        Command::Verify {
            family,
            min,
            max,
            m_min,
            m_max,
            n_min,
            n_max,
            json,
        } => {
            let n_range = (
                n_min
                    .or(min)
                    .ok_or_else(|| Failure::Usage("--min (or --n-min) is required".into()))?,
                n_max
                    .or(max)
                    .ok_or_else(|| Failure::Usage("--max (or --n-max) is required".into()))?,
            );
            let ranges = match family {
                FamilyKind::SunletDeg | FamilyKind::GeneralizedSunlet => {
                    let m = (
                        m_min.ok_or_else(|| {
                            Failure::Usage(format!("--m-min is required for {family}"))
                        })?,
                        m_max.ok_or_else(|| {
                            Failure::Usage(format!("--m-max is required for {family}"))
                        })?,
                    );
                    VerifyRanges::mn(m, n_range)
                }
                _ => VerifyRanges::n(n_range.0, n_range.1),
            };
            let rows = verify_family(family, &ranges, &SolveOptions::default())?;
            let matched = rows.iter().filter(|r| r.all_match).count();
            if json {
                for row in &rows {
                    let mut value = serde_json::to_value(row).expect("rows serialize");
                    value["instance"] = Value::String(row.spec.to_string());
                    println!("{value}");
                }
            } else {
                print_table(&rows);
                println!("{matched}/{} rows match", rows.len());
            }
            Ok(if matched == rows.len() { 0 } else { 1 })
        }
        Command::Export {
            file,
            format: ExportFormat::Dot,
            broadcast,
            out,
        } => {
            let g = load_graph(&file)?;
            let f = broadcast.as_deref().map(load_broadcast).transpose()?;
            let dot = export_dot(&g, f.as_ref(), DotOptions::default())?;
            emit(out.as_deref(), &dot)?;
            Ok(0)
        }
    }
}

impl FamilyArgs {
    fn spec(&self) -> Result<FamilySpec, Failure> {
        let need = |value: Option<usize>, flag: &str| {
            value.ok_or_else(|| {
                Failure::Usage(format!("--{flag} is required for --family {}", self.family))
            })
        };
        Ok(match self.family {
            FamilyKind::Path => FamilySpec::Path {
                n: need(self.n, "n")?,
            },
            FamilyKind::Cycle => FamilySpec::Cycle {
                n: need(self.n, "n")?,
            },
            FamilyKind::Sunlet => FamilySpec::Sunlet {
                n: need(self.n, "n")?,
            },
            FamilyKind::SunletDeg => FamilySpec::SunletDeg {
                m: need(self.m, "m")?,
                n: need(self.n, "n")?,
            },
            FamilyKind::GeneralizedSunlet => {
                let lengths = self.lengths.clone().ok_or_else(|| {
                    Failure::Usage("--lengths is required for --family gen-sunlet".into())
                })?;
                FamilySpec::GeneralizedSunlet {
                    m: self.m.unwrap_or(lengths.len()),
                    lengths,
                }
            }
        })
    }
}

/// Canonical single-line JSON for a solve result; no timing so the bytes
/// are stable across runs and thread counts.
fn solve_json(result: &SolveResult, efficient: bool) -> Value {
    let witness: serde_json::Map<String, Value> = result
        .witness
        .iter()
        .map(|(v, s)| ((v + 1).to_string(), Value::from(s)))
        .collect();
    json!({
        "candidates_checked": result.candidates_checked,
        "require_efficient": efficient,
        "gamma_b": result.gamma_b,
        "witness": witness,
    })
}

fn print_table(rows: &[broadcast_domination::formulas::VerificationRow]) {
    let opt = |v: Option<String>| v.unwrap_or_else(|| "-".to_string());
    let lines: Vec<[String; 6]> = rows
        .iter()
        .map(|r| {
            [
                r.spec.to_string(),
                opt(r.formula_value.map(|v| v.to_string())),
                opt(r.construction_cost.map(|v| v.to_string())),
                r.solver_value.to_string(),
                r.radius.to_string(),
                if r.all_match { "yes" } else { "NO" }.to_string(),
            ]
        })
        .collect();
    let header = [
        "instance",
        "formula",
        "construction",
        "solver",
        "radius",
        "match",
    ]
    .map(String::from);
    let mut widths = header.clone().map(|h| h.len());
    for line in &lines {
        for (w, cell) in widths.iter_mut().zip(line) {
            *w = (*w).max(cell.len());
        }
    }
    for line in std::iter::once(&header).chain(&lines) {
        let cells: Vec<String> = line
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        println!("{}", cells.join("  ").trim_end());
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    read_graph(&read_file(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_broadcast(path: &Path) -> Result<BroadcastAssignment, Failure> {
    read_broadcast(&read_file(path)?)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
