use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use polycut::complex::BoundaryComplex;
use polycut::cuts::{brute_force_cuts, global_min_cut, min_nontrivial_cut, Graph};
use polycut::formats::{
    complex_from_text, complex_to_json, complex_to_text, cut_to_json, graph_from_text, graph_to_text,
    parse_complex, points_from_text, reports_to_csv, reports_to_json,
};
use polycut::generators::{cyclic, ladder_stacked, random_plane_triangulation, simplex, waist_polytope};
use polycut::hull::facets_brute_force;
use polycut::verify::{self, PlaneForm, SuiteConfig, VerificationReport};

/// Simplicial polytope boundary complexes and the edge cuts of their graphs.
#[derive(Parser)]
#[command(name = "polycut", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a boundary complex.
    Gen {
        #[arg(value_enum)]
        family: Family,
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        output: Output,
    },
    /// Print the edge list of a complex.
    Graph {
        /// Complex file (JSON or text); stdin when omitted.
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Minimum edge cut of a graph or of a complex's graph.
    Mincut {
        input: Option<PathBuf>,
        /// Only cuts with at least two vertices on each side.
        #[arg(long)]
        nontrivial: bool,
        /// Enumerate every bipartition instead of using flows.
        #[arg(long)]
        brute_force: bool,
        #[arg(long, value_enum, default_value_t = InputKind::Auto)]
        input_kind: InputKind,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Boundary complex of the convex hull of a point file.
    Hull {
        input: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Run a verification suite and print its report.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Complex file for `main`, graph file for `side-bound` and `cut-oracle`.
        input: Option<PathBuf>,
        #[command(flatten)]
        params: Params,
        /// For `plane`: hold every nontrivial cut to six edges, not only minimum ones.
        #[arg(long)]
        strong: bool,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Params {
    #[arg(long)]
    dim: Option<usize>,
    #[arg(long)]
    verts: Option<usize>,
    #[arg(long)]
    flips: Option<usize>,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Coordinate bound for random point configurations.
    #[arg(long = "box")]
    bound: Option<u64>,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = ComplexFormat::Json)]
    format: ComplexFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Simplex,
    Cyclic,
    Ladder,
    Waist,
    Plane,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputKind {
    Auto,
    Graph,
    Complex,
}

#[derive(Clone, Copy, ValueEnum)]
enum ComplexFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Plane,
    Lbt,
    Balanced,
    VertexFigure,
    SideBound,
    Main,
    Waist,
    CyclicOracle,
    CutOracle,
    All,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = std::env::var("POLYCUT_THREADS").ok().and_then(|s| s.parse().ok()) {
        // Only fails if a pool already exists, which cannot happen here.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// `Ok(false)` means a verification ran and failed.
fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Gen { family, params, output } => {
            let c = generate(family, &params)?;
            emit_complex(&c, &output)?;
        }
        Command::Graph { input, out } => {
            let c = parse_complex(&read_input(input.as_ref())?)?;
            let g = c.skeleton_graph().map_err(|e| anyhow!("{e}"))?;
            write_output(out.as_ref(), &graph_to_text(&g))?;
        }
        Command::Mincut { input, nontrivial, brute_force, input_kind, out } => {
            let g = load_graph(&read_input(input.as_ref())?, input_kind)?;
            let cut = if brute_force {
                let oracle = brute_force_cuts(&g)?;
                if nontrivial {
                    oracle.min_nontrivial_cut
                } else {
                    Some(oracle.min_cut)
                }
            } else if nontrivial {
                min_nontrivial_cut(&g)?
            } else {
                Some(global_min_cut(&g)?)
            };
            let cut = cut.ok_or_else(|| anyhow!("nontrivial cuts need at least 4 vertices"))?;
            write_output(out.as_ref(), &(cut_to_json(&cut) + "\n"))?;
        }
        Command::Hull { input, output } => {
            let points = points_from_text(&read_input(input.as_ref())?)?;
            let hull = facets_brute_force(&points)?;
            if !hull.excluded.is_empty() {
                eprintln!("not hull vertices: {:?}", hull.excluded);
            }
            emit_complex(&hull.complex, &output)?;
        }
        Command::Verify { suite, input, params, strong, format, out } => {
            let reports = run_suite(suite, input.as_ref(), &params, strong)?;
            let text = match format {
                ReportFormat::Json => reports_to_json(&reports, true) + "\n",
                ReportFormat::Csv => reports_to_csv(&reports)?,
            };
            write_output(out.as_ref(), &text)?;
            return Ok(reports.iter().all(|r| r.passed));
        }
    }
    Ok(true)
}

fn require(value: Option<usize>, flag: &str) -> Result<usize> {
    value.ok_or_else(|| anyhow!("--{flag} is required"))
}

fn generate(family: Family, p: &Params) -> Result<BoundaryComplex> {
    Ok(match family {
        Family::Simplex => simplex(require(p.dim, "dim")?)?,
        Family::Cyclic => cyclic(require(p.dim, "dim")?, require(p.verts, "verts")?)?,
        Family::Ladder => ladder_stacked(require(p.dim, "dim")?)?.complex,
        Family::Waist => waist_polytope(require(p.dim, "dim")?)?.complex,
        Family::Plane => {
            if p.dim.is_some_and(|d| d != 3) {
                bail!("plane triangulations have --dim 3");
            }
            random_plane_triangulation(require(p.verts, "verts")?, p.flips.unwrap_or(0), p.seed)?.complex
        }
    })
}

fn run_suite(suite: Suite, input: Option<&PathBuf>, p: &Params, strong: bool) -> Result<Vec<VerificationReport>> {
    let corpus = || -> Result<Vec<verify::CorpusGraph>> {
        match input {
            Some(path) => {
                let g = load_graph(&read_input(Some(path))?, InputKind::Auto)?;
                Ok(vec![verify::CorpusGraph::new(path.display().to_string(), g)])
            }
            None => Ok(verify::cut_corpus(p.seed)),
        }
    };
    let form = if strong { PlaneForm::AllNontrivialCuts } else { PlaneForm::MinimumCuts };
    Ok(match suite {
        Suite::Plane => vec![verify::verify_plane(p.trials.unwrap_or(200), p.verts.unwrap_or(40), p.seed, form)?],
        Suite::Lbt => {
            let dims = p.dim.map_or(3..=8, |d| d..=d);
            vec![verify::verify_lbt(dims, p.verts.unwrap_or(30), p.trials.unwrap_or(5), p.seed)?]
        }
        Suite::Balanced => match p.dim {
            Some(d) => vec![verify::verify_balanced_partitions(d)?],
            None => vec![verify::verify_balanced_partitions(3)?, verify::verify_balanced_partitions(4)?],
        },
        Suite::VertexFigure => vec![verify::verify_vertex_figure(
            p.trials.unwrap_or(100),
            p.dim.unwrap_or(3),
            p.verts.unwrap_or(8),
            p.seed,
            p.bound.unwrap_or(1000),
        )?],
        Suite::SideBound => vec![verify::verify_side_bound(&corpus()?)?],
        Suite::CutOracle => vec![verify::verify_cut_equivalence(&corpus()?)?],
        Suite::Main => match input {
            Some(path) => {
                let c = parse_complex(&read_input(Some(path))?)?;
                vec![verify::verify_main_bound(&path.display().to_string(), &c)?]
            }
            None => verify::main_bound_examples()?
                .iter()
                .map(|(name, c)| verify::verify_main_bound(name, c))
                .collect::<Result<_, _>>()?,
        },
        Suite::Waist => match p.dim {
            Some(d) => vec![verify::verify_waist(d)?],
            None => (4..=8).map(verify::verify_waist).collect::<Result<_, _>>()?,
        },
        Suite::CyclicOracle => {
            let dims = p.dim.map_or(2..=5, |d| d..=d);
            vec![verify::verify_cyclic_oracle(dims, p.verts.unwrap_or(9))?]
        }
        Suite::All => verify::verify_all(&SuiteConfig { seed: p.seed, ..SuiteConfig::default() })?,
    })
}

fn load_graph(text: &str, kind: InputKind) -> Result<Graph> {
    let from_complex = |c: BoundaryComplex| c.skeleton_graph().map_err(|e| anyhow!("{e}"));
    match kind {
        InputKind::Graph => Ok(graph_from_text(text)?),
        InputKind::Complex => from_complex(parse_complex(text)?),
        InputKind::Auto if text.trim_start().starts_with('{') => from_complex(parse_complex(text)?),
        InputKind::Auto => match graph_from_text(text) {
            Ok(g) => Ok(g),
            Err(graph_err) => match complex_from_text(text) {
                Ok(c) => from_complex(c),
                Err(complex_err) => {
                    bail!("input is neither a graph ({graph_err}) nor a complex ({complex_err})")
                }
            },
        },
    }
}

fn emit_complex(c: &BoundaryComplex, output: &Output) -> Result<()> {
    let text = match output.format {
        ComplexFormat::Json => complex_to_json(c) + "\n",
        ComplexFormat::Text => complex_to_text(c),
    };
    write_output(output.out.as_ref(), &text)
}

fn read_input(path: Option<&PathBuf>) -> Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))
        }
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("reading stdin")?;
            Ok(s)
        }
    }
}

fn write_output(path: Option<&PathBuf>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}
