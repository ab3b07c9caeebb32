//! `paint`: command-line front end for the paintability crate.
//!
//! Exit codes: 0 success, 1 a claim failed or a certification was refuted,
//! 2 usage or input error.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use paintability::claims::{verify_claims, Status};
use paintability::engine::{exhaust, play, write_trace, Fixed, Model};
use paintability::graph::{export_dot, gen_named, parse_graph, serialize_graph};
use paintability::solver::{
    choice_number, is_lazy_paintable, is_paintable, is_strong_paintable, paint_number, SolveOptions,
    Verdict,
};
use paintability::strategy::{
    connectify, degeneracy_corrector, gadget_painter_script, lazy_corrector, lazy_gadget_painter_script,
    optimal_strategies, strong_gadget_corrector, CorrectorStrategy, PainterStrategy,
};
use paintability::streaming::{competitive_table, ALGORITHMS};
use paintability::{EraserMap, Graph};

#[derive(Parser)]
#[command(name = "paint", version, about = "On-line list colouring games: solve, play, certify")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide who wins the game on a graph.
    Solve {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "classical", value_parser = parse_model)]
        model: Model,
        /// Exit 1 unless Corrector wins.
        #[arg(long)]
        certify: bool,
        /// Disable every search reduction.
        #[arg(long)]
        unpruned: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Least list size with which Corrector wins the classical game.
    PaintNumber {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Least k such that the graph is colourable from any k-lists (small graphs only).
    ChoiceNumber {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Referee one game and print its trace as JSON lines.
    Play {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "classical", value_parser = parse_model)]
        model: Model,
        #[arg(long, value_enum, default_value_t = PainterName::Optimal)]
        painter: PainterName,
        #[arg(long, value_enum, default_value_t = CorrectorName::Optimal)]
        corrector: CorrectorName,
        /// Write the trace here instead of stdout.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Certify one strategy against every opponent; exit 1 if refuted.
    Exhaust {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "classical", value_parser = parse_model)]
        model: Model,
        #[arg(long, value_enum, conflicts_with = "corrector", required_unless_present = "corrector")]
        painter: Option<PainterName>,
        #[arg(long, value_enum)]
        corrector: Option<CorrectorName>,
    },
    /// Run the registered claims; exit 1 if any fails.
    VerifyClaims {
        /// Claim id glob, `*` matching any run of characters.
        filter: Option<String>,
        /// Also run long-running claims.
        #[arg(long)]
        extended: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Adversarial path instances against a streaming recolouring algorithm.
    StreamExperiment {
        #[arg(long, value_delimiter = ',', default_values_t = [16, 64, 256, 1024])]
        sizes: Vec<usize>,
        #[arg(long, default_value = "first_fit", value_parser = clap::builder::PossibleValuesParser::new(ALGORITHMS))]
        algorithm: String,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Print the graph in DOT syntax.
    ExportDot {
        #[command(flatten)]
        input: Input,
    },
    /// Print a generated graph in graph-file syntax.
    Gen {
        /// `family[:p1,p2,...]`, e.g. `cycle:5` or `schauz_gadget`.
        spec: String,
        #[arg(long)]
        erasers: Option<String>,
    },
}

#[derive(Args)]
struct Input {
    /// Graph file; stdin when neither this nor --gen is given.
    #[arg(long, conflicts_with = "gen")]
    graph: Option<PathBuf>,
    /// Generated graph, `family[:p1,p2,...]`.
    #[arg(long)]
    gen: Option<String>,
    /// `uniform:<k>` or a file of per-vertex eraser counts; overrides the graph's own.
    #[arg(long)]
    erasers: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    /// One JSON object per line.
    Records,
}

#[derive(Clone, Copy, ValueEnum)]
enum PainterName {
    Optimal,
    GadgetScript,
    LazyGadgetScript,
    /// The optimal painter restricted to connected moves.
    ConnectedOptimal,
}

#[derive(Clone, Copy, ValueEnum)]
enum CorrectorName {
    Optimal,
    Degeneracy,
    Lazy,
    StrongGadget,
}

/// Failure with its exit code.
struct Failure(u8, String);

impl From<paintability::Error> for Failure {
    fn from(e: paintability::Error) -> Self {
        Failure(2, e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure(2, e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure(2, e.to_string())
    }
}

type Res<T> = Result<T, Failure>;

fn parse_model(s: &str) -> Result<Model, String> {
    s.parse().map_err(|e: paintability::Error| e.to_string())
}

fn parse_gen(spec: &str) -> Res<(Graph, EraserMap)> {
    let (name, params) = spec.split_once(':').unwrap_or((spec, ""));
    let params = params
        .split(',')
        .filter(|p| !p.is_empty())
        .map(|p| p.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| Failure(2, format!("bad parameters in `{spec}`")))?;
    Ok(gen_named(name, &params)?)
}

fn parse_erasers(spec: &str, n: usize) -> Res<EraserMap> {
    if let Some(k) = spec.strip_prefix("uniform:") {
        let k = k
            .parse()
            .map_err(|_| Failure(2, format!("bad eraser count in `{spec}`")))?;
        return Ok(EraserMap::uniform(n, k));
    }
    let text = fs::read_to_string(spec).map_err(|e| Failure(2, format!("{spec}: {e}")))?;
    let counts = text
        .split_whitespace()
        .map(str::parse)
        .collect::<Result<Vec<u32>, _>>()
        .map_err(|_| Failure(2, format!("{spec}: expected whitespace-separated eraser counts")))?;
    Ok(EraserMap(counts))
}

impl Input {
    fn load(&self) -> Res<(Graph, EraserMap)> {
        let (g, e) = match (&self.graph, &self.gen) {
            (_, Some(spec)) => parse_gen(spec)?,
            (Some(path), None) => {
                let text = fs::read_to_string(path).map_err(|e| Failure(2, format!("{}: {e}", path.display())))?;
                parse_graph(&text).map_err(|e| Failure(2, format!("{}: {e}", path.display())))?
            }
            (None, None) => {
                let mut text = String::new();
                io::stdin().read_to_string(&mut text)?;
                parse_graph(&text).map_err(|e| Failure(2, format!("stdin: {e}")))?
            }
        };
        let e = match &self.erasers {
            Some(spec) => parse_erasers(spec, g.n())?,
            None => e,
        };
        e.check_for(&g)?;
        Ok((g, e))
    }
}

fn painter(name: PainterName, g: &Graph, e: &EraserMap) -> Res<Box<dyn PainterStrategy>> {
    Ok(match name {
        PainterName::Optimal => Box::new(optimal_strategies(g, e)?.0),
        PainterName::GadgetScript => Box::new(gadget_painter_script(g, e)?),
        PainterName::LazyGadgetScript => Box::new(lazy_gadget_painter_script(g, e)?),
        PainterName::ConnectedOptimal => Box::new(connectify(g, Box::new(optimal_strategies(g, e)?.0))),
    })
}

fn corrector(name: CorrectorName, g: &Graph, e: &EraserMap) -> Res<Box<dyn CorrectorStrategy>> {
    Ok(match name {
        CorrectorName::Optimal => Box::new(optimal_strategies(g, e)?.1),
        CorrectorName::Degeneracy => Box::new(degeneracy_corrector(g, e)?),
        CorrectorName::Lazy => Box::new(lazy_corrector(g, e)?),
        CorrectorName::StrongGadget => Box::new(strong_gadget_corrector(g, e)?),
    })
}

fn graph_name(g: &Graph) -> &str {
    g.name().unwrap_or("")
}

/// Prints a single named value in the requested format.
fn emit(format: Format, fields: &[(&str, serde_json::Value)], text: &str) -> Res<()> {
    let mut out = io::stdout().lock();
    match format {
        Format::Text => writeln!(out, "{text}")?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(fields.iter().map(|(k, _)| k))?;
            w.write_record(fields.iter().map(|(_, v)| match v {
                serde_json::Value::String(s) => s.clone(),
                other => other.to_string(),
            }))?;
            w.flush()?;
        }
        Format::Records => {
            let obj: serde_json::Map<_, _> = fields.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
            writeln!(out, "{}", serde_json::Value::Object(obj))?;
        }
    }
    Ok(())
}

fn solve(g: &Graph, e: &EraserMap, model: Model, unpruned: bool) -> Res<Verdict> {
    let opts = if unpruned { SolveOptions::unpruned() } else { SolveOptions::default() };
    Ok(match model {
        Model::Classical => is_paintable(g, e, opts)?,
        Model::Strong => is_strong_paintable(g, e)?,
        Model::Lazy { budget } => is_lazy_paintable(g, e, budget)?,
    })
}

fn run(cli: Cli) -> Res<u8> {
    match cli.command {
        Command::Solve {
            input,
            model,
            certify,
            unpruned,
            format,
        } => {
            let (g, e) = input.load()?;
            let verdict = solve(&g, &e, model, unpruned)?;
            let winner = verdict.winner.to_string();
            emit(
                format,
                &[
                    ("graph", json!(graph_name(&g))),
                    ("n", json!(g.n())),
                    ("model", json!(model)),
                    ("winner", json!(winner)),
                ],
                &winner,
            )?;
            Ok(u8::from(certify && !verdict.corrector_wins()))
        }
        Command::PaintNumber { input, format } => {
            let (g, _) = input.load()?;
            let p = paint_number(&g)?;
            emit(
                format,
                &[("graph", json!(graph_name(&g))), ("n", json!(g.n())), ("paint_number", json!(p))],
                &p.to_string(),
            )?;
            Ok(0)
        }
        Command::ChoiceNumber { input, format } => {
            let (g, _) = input.load()?;
            let c = choice_number(&g)?;
            emit(
                format,
                &[("graph", json!(graph_name(&g))), ("n", json!(g.n())), ("choice_number", json!(c))],
                &c.to_string(),
            )?;
            Ok(0)
        }
        Command::Play {
            input,
            model,
            painter: p,
            corrector: c,
            trace,
        } => {
            let (g, e) = input.load()?;
            let mut p = painter(p, &g, &e)?;
            let mut c = corrector(c, &g, &e)?;
            let t = play(&g, &e, model, p.as_mut(), c.as_mut())?;
            match trace {
                Some(path) => {
                    write_trace(&t, fs::File::create(&path)?)?;
                    println!("{}", t.winner());
                }
                None => write_trace(&t, io::stdout().lock())?,
            }
            Ok(0)
        }
        Command::Exhaust {
            input,
            model,
            painter: p,
            corrector: c,
        } => {
            let (g, e) = input.load()?;
            let fixed = match (p, c) {
                (Some(p), _) => Fixed::Painter(painter(p, &g, &e)?),
                (None, Some(c)) => Fixed::Corrector(corrector(c, &g, &e)?),
                (None, None) => return Err(Failure(2, "give --painter or --corrector".into())),
            };
            let report = exhaust(&g, &e, model, fixed)?;
            if report.fixed_side_wins {
                println!("certified: {} positions, {}", report.positions, report.winner);
                Ok(0)
            } else {
                println!("refuted: {} positions, {}", report.positions, report.winner);
                for step in &report.refutation {
                    println!("  {step}");
                }
                Ok(1)
            }
        }
        Command::VerifyClaims {
            filter,
            extended,
            format,
        } => {
            let results = verify_claims(filter.as_deref(), extended);
            if results.is_empty() {
                return Err(Failure(2, "no claim matches the filter".into()));
            }
            let mut out = io::stdout().lock();
            match format {
                Format::Text => {
                    for r in &results {
                        let observed = if r.observed.is_empty() { "-" } else { &r.observed };
                        writeln!(out, "{:<8} {:<26} {} [{:.2?}]", r.status, r.id, observed, r.runtime)?;
                        if r.status == Status::Fail {
                            writeln!(out, "         expected: {}", r.expected)?;
                        }
                    }
                }
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(out);
                    w.write_record(["id", "status", "expected", "observed", "runtime_s", "statement", "detail"])?;
                    for r in &results {
                        w.write_record([
                            r.id.clone(),
                            r.status.to_string(),
                            r.expected.clone(),
                            r.observed.clone(),
                            format!("{:.3}", r.runtime.as_secs_f64()),
                            r.statement.clone(),
                            r.detail.clone(),
                        ])?;
                    }
                    w.flush()?;
                }
                Format::Records => {
                    for r in &results {
                        let rec = json!({
                            "id": r.id,
                            "status": r.status.to_string(),
                            "statement": r.statement,
                            "expected": r.expected,
                            "observed": r.observed,
                            "detail": r.detail,
                            "runtime_s": r.runtime.as_secs_f64(),
                        });
                        writeln!(out, "{rec}")?;
                    }
                }
            }
            Ok(u8::from(results.iter().any(|r| r.status == Status::Fail)))
        }
        Command::StreamExperiment {
            sizes,
            algorithm,
            format,
        } => {
            let rows = competitive_table(&sizes, &algorithm)?;
            let mut out = io::stdout().lock();
            match format {
                Format::Csv | Format::Text => {
                    let mut w = csv::Writer::from_writer(out);
                    for row in &rows {
                        w.serialize(row)?;
                    }
                    w.flush()?;
                }
                Format::Records => {
                    for row in &rows {
                        writeln!(out, "{}", serde_json::to_string(row).expect("rows serialize"))?;
                    }
                }
            }
            Ok(0)
        }
        Command::ExportDot { input } => {
            let (g, e) = input.load()?;
            print!("{}", export_dot(&g, &e));
            Ok(0)
        }
        Command::Gen { spec, erasers } => {
            let (g, e) = parse_gen(&spec)?;
            let e = match erasers {
                Some(s) => parse_erasers(&s, g.n())?,
                None => e,
            };
            e.check_for(&g)?;
            print!("{}", serialize_graph(&g, &e));
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors.
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("paint: {msg}");
            ExitCode::from(code)
        }
    }
}
