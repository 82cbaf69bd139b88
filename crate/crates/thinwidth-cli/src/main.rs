//! `thinwidth`: width calculus for Morse words on the command line.
//!
//! Subcommands mirror the library: `width`, `validate`, `blowup`, `op`,
//! `bound`, `gap`, `graph loop`, `enum`, `table`, and `verify`. The global
//! `--json` flag switches every subcommand to a single JSON document on
//! stdout; diagnostics always go to stderr. Exit codes: 0 success, 1
//! operation failure or counterexample, 2 usage error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use thinwidth::{enumerate, gamma, ops, satellite, MorseWord, OpStep, Suite, SuiteLimits};

#[derive(Parser)]
#[command(name = "thinwidth", version, about = "Width calculus for Morse words")]
struct Cli {
    /// Emit a single JSON document on stdout instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for the verification suites.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Width, bridge number, and validity of a word.
    Width { word: String },
    /// Validity class of a word.
    Validate { word: String },
    /// Repeat each letter of a word n times (braid-pattern satellite word).
    Blowup {
        word: String,
        #[arg(short)]
        n: u32,
    },
    /// Apply a JSON sequence of word operations.
    Op {
        word: String,
        /// JSON file holding an array of operation steps.
        #[arg(long)]
        ops: PathBuf,
    },
    /// Per-critical-point satellite lower bound over a balanced loop word.
    Bound {
        loop_word: String,
        #[arg(short)]
        n: u32,
    },
    /// Width slack of a candidate satellite word against n^2 times the
    /// loop width.
    Gap {
        satellite_word: String,
        loop_word: String,
        #[arg(short)]
        n: u32,
    },
    /// Slab-graph analysis.
    Graph {
        #[command(subcommand)]
        command: GraphCommand,
    },
    /// List every knot word with the given bridge number.
    Enum {
        #[arg(short)]
        b: u32,
    },
    /// Minimum-width table for bridge numbers 1..=B.
    Table {
        #[arg(short = 'B')]
        b_max: u32,
    },
    /// Exhaustively check an invariant family (lemma45, blowup, bound,
    /// graph). Exits 1 when a counterexample is found.
    Verify {
        suite: String,
        #[command(flatten)]
        limits: LimitArgs,
    },
}

#[derive(Subcommand)]
enum GraphCommand {
    /// Find the unique loop of a tube spec and classify its vertices.
    Loop { spec: PathBuf },
}

#[derive(Args)]
struct LimitArgs {
    /// Longest word to scan (word suites).
    #[arg(long)]
    max_len: Option<usize>,
    /// Largest winding number (blowup and bound suites).
    #[arg(long)]
    max_n: Option<u32>,
    /// Largest vertex count (graph suite).
    #[arg(long)]
    max_vertices: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Width { word } => {
            let profile = parse_word(word)?.profile();
            if cli.json {
                print_json(&profile)?;
            } else {
                let bridge = profile
                    .bridge
                    .map_or_else(|| "-".to_string(), |b| b.to_string());
                println!(
                    "width={} bridge={} validity={}",
                    profile.width, bridge, profile.validity
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Validate { word } => {
            let w = parse_word(word)?;
            if cli.json {
                print_json(&json!({
                    "word": w.to_string(),
                    "validity": w.validity(),
                    "balanced": w.is_balanced(),
                    "nonnegative": w.is_nonnegative(),
                }))?;
            } else {
                println!("validity={}", w.validity());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Blowup { word, n } => {
            let x = parse_word(word)?;
            let y = satellite::blowup(&x, *n).map_err(|e| e.to_string())?;
            if cli.json {
                print_json(&json!({
                    "word": x.to_string(),
                    "n": n,
                    "result": y.to_string(),
                    "width": y.width(),
                }))?;
            } else {
                println!("{} (width {} = {}^2 * {})", y, y.width(), n, x.width());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Op { word, ops: path } => {
            let w = parse_word(word)?;
            let text = fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            let steps: Vec<OpStep> =
                serde_json::from_str(&text).map_err(|e| format!("invalid op sequence: {e}"))?;
            let result = ops::apply_sequence(&w, &steps).map_err(|e| e.to_string())?;
            if cli.json {
                print_json(&result)?;
            } else {
                for (k, entry) in result.trace.iter().enumerate() {
                    println!(
                        "step {}: {} width={} validity={}",
                        k + 1,
                        entry.step,
                        entry.width,
                        entry.validity
                    );
                }
                println!("result={}", result.final_word);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bound { loop_word, n } => {
            let w = parse_word(loop_word)?;
            let report = satellite::lower_bound(&w, *n).map_err(|e| e.to_string())?;
            if cli.json {
                print_json(&report)?;
            } else {
                for term in &report.terms {
                    println!(
                        "term {}: {} omega={} contribution={}",
                        term.index,
                        term.kind.name(),
                        term.omega,
                        term.contribution
                    );
                }
                println!(
                    "total={} n2w={} identity_holds={}",
                    report.total,
                    i64::from(*n) * i64::from(*n) * w.width(),
                    report.identity_holds
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Gap {
            satellite_word,
            loop_word,
            n,
        } => {
            let sat = parse_word(satellite_word)?;
            let companion = parse_word(loop_word)?;
            let gap = satellite::theorem_gap(&sat, &companion, *n).map_err(|e| e.to_string())?;
            if cli.json {
                print_json(&json!({
                    "satellite": sat.to_string(),
                    "loop": companion.to_string(),
                    "n": n,
                    "gap": gap,
                }))?;
            } else {
                println!(
                    "gap={} ({} - {}^2 * {})",
                    gap,
                    sat.width(),
                    n,
                    companion.width()
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Graph { command } => match command {
            GraphCommand::Loop { spec } => {
                let text = fs::read_to_string(spec)
                    .map_err(|e| format!("cannot read {}: {e}", spec.display()))?;
                let tube = gamma::load_spec(&text).map_err(|e| e.to_string())?;
                let analysis = gamma::find_unique_loop(&tube).map_err(|e| e.to_string())?;
                for warning in &analysis.warnings {
                    eprintln!("warning: {warning}");
                }
                if cli.json {
                    print_json(&analysis)?;
                } else {
                    println!("loop={}", analysis.loop_vertices.join(","));
                    println!("loop_word={}", analysis.loop_word);
                    println!("cycle_rank={}", analysis.cycle_rank);
                    for (id, class) in &analysis.classification {
                        println!("{id}={class}");
                    }
                }
                Ok(ExitCode::SUCCESS)
            }
        },
        Command::Enum { b } => {
            let result =
                enumerate::enumerate_knot_words(*b, max_bridge()?).map_err(|e| e.to_string())?;
            if cli.json {
                print_json(&result)?;
            } else {
                for word in &result.words {
                    println!("{word}");
                }
                println!(
                    "count={} min_width={} witnesses={}",
                    result.count,
                    result.min_width,
                    result
                        .witnesses
                        .iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(",")
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Table { b_max } => {
            let rows =
                enumerate::min_width_table(*b_max, max_bridge()?).map_err(|e| e.to_string())?;
            if cli.json {
                print_json(&rows)?;
            } else {
                for row in &rows {
                    println!(
                        "b={} count={} min_width={} witness={}",
                        row.bridge, row.count, row.min_width, row.witness
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, limits } => {
            // Unknown suite names are usage errors: exit 2, like clap's own
            // argument failures.
            let suite: Suite = match suite.parse() {
                Ok(suite) => suite,
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(ExitCode::from(2));
                }
            };
            let mut suite_limits = SuiteLimits::default();
            if let Some(v) = limits.max_len {
                suite_limits.max_len = v;
            }
            if let Some(v) = limits.max_n {
                suite_limits.max_n = v;
            }
            if let Some(v) = limits.max_vertices {
                suite_limits.max_vertices = v;
            }
            let report = enumerate::run_property_suite(suite, &suite_limits, cli.jobs.max(1))
                .map_err(|e| e.to_string())?;
            if cli.json {
                print_json(&report)?;
            } else if report.pass {
                println!(
                    "suite {}: PASS ({} instances)",
                    report.suite, report.instances
                );
            } else {
                let ce = report.counterexample.as_ref().expect("failing report");
                println!(
                    "suite {}: FAIL at {} ({})",
                    report.suite, ce.witness, ce.detail
                );
            }
            Ok(if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn parse_word(text: &str) -> Result<MorseWord, String> {
    MorseWord::parse(text).map_err(|e| e.to_string())
}

fn max_bridge() -> Result<u32, String> {
    match std::env::var("THINWIDTH_MAX_BRIDGE") {
        Ok(value) => value
            .parse()
            .map_err(|_| format!("THINWIDTH_MAX_BRIDGE must be a positive integer, got {value:?}")),
        Err(_) => Ok(enumerate::DEFAULT_MAX_BRIDGE),
    }
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<(), String> {
    let text = serde_json::to_string(value).map_err(|e: serde_json::Error| e.to_string())?;
    println!("{text}");
    Ok(())
}
