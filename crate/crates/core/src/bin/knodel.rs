use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use knodel::export::{to_dimacs, to_json};
use knodel::formulas::{predicted_gamma, predicted_verdict};
use knodel::harness::{run_suite, sweep, to_csv, to_jsonl, Suite};
use knodel::solver::{classify, exact_gamma, DeletionMode, SolverConfig};
use knodel::{KnodelGraph, VertexId};

#[derive(Parser)]
#[command(name = "knodel", version, about = "Knödel graphs and their domination numbers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dimacs,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum RowFormat {
    Csv,
    Jsonl,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Representative,
    All,
}

impl From<Mode> for DeletionMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Representative => DeletionMode::Representative,
            Mode::All => DeletionMode::All,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print W(delta, n) as a DIMACS or JSON edge list
    Gen {
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "dimacs")]
        format: GraphFormat,
    },
    /// Exact domination number, optionally of the graph minus one vertex
    Gamma {
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        n: usize,
        /// Vertex to delete, e.g. v1 or u7
        #[arg(long)]
        delete: Option<VertexId>,
    },
    /// Critical / stable verdict from the deletion profile
    Classify {
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        mode: Option<Mode>,
    },
    /// One row per even n in [min, max]
    Sweep {
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        min: usize,
        #[arg(long)]
        max: usize,
        #[arg(long, value_enum, default_value = "csv")]
        out: RowFormat,
        #[arg(long, value_enum)]
        mode: Option<Mode>,
    },
    /// Run property suites: core, constructions, criticality or all
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
    },
}

fn run(cli: Cli) -> knodel::Result<bool> {
    let config = SolverConfig::from_env();
    let mut out = std::io::stdout().lock();
    match cli.command {
        Command::Gen { delta, n, format } => {
            let g = KnodelGraph::new(delta, n)?;
            let text = match format {
                GraphFormat::Dimacs => to_dimacs(&g),
                GraphFormat::Json => to_json(&g),
            };
            out.write_all(text.as_bytes()).expect("stdout");
            Ok(true)
        }
        Command::Gamma { delta, n, delete } => {
            let g = KnodelGraph::new(delta, n)?;
            let r = exact_gamma(&g.view(), &config)?;
            writeln!(out, "gamma(W({delta},{n})) = {} witness {} nodes {}", r.gamma, r.witness, r.nodes_explored)
                .expect("stdout");
            if let Some(w) = delete {
                let d = exact_gamma(&g.deleted_view(w)?, &config)?;
                writeln!(out, "gamma(W({delta},{n}) - {w}) = {} witness {} nodes {}", d.gamma, d.witness, d.nodes_explored)
                    .expect("stdout");
            }
            Ok(true)
        }
        Command::Classify { delta, n, mode } => {
            let g = KnodelGraph::new(delta, n)?;
            let mode = mode.map(DeletionMode::from).unwrap_or_else(|| DeletionMode::default_for(n));
            let c = classify(&g, mode, &config)?;
            let mut line = format!(
                "W({delta},{n}) verdict {} gamma {} gamma_deleted {}",
                c.verdict,
                c.profile.base_gamma(),
                c.profile.per_vertex[&VertexId::v(1)]
            );
            let mut agree = true;
            if let Some(p) = predicted_verdict(delta, n) {
                agree = p == c.verdict && predicted_gamma(delta, n) == Some(c.profile.base_gamma());
                line += &format!(" predicted {p} {}", if agree { "agree" } else { "DISAGREE" });
            }
            writeln!(out, "{line}").expect("stdout");
            Ok(agree)
        }
        Command::Sweep { delta, min, max, out: format, mode } => {
            let rows = sweep(delta, min, max, mode.map(DeletionMode::from), &config)?;
            let text = match format {
                RowFormat::Csv => to_csv(&rows),
                RowFormat::Jsonl => to_jsonl(&rows),
            };
            out.write_all(text.as_bytes()).expect("stdout");
            Ok(rows.iter().all(|r| r.agrees()))
        }
        Command::Verify { suite } => {
            let reports = run_suite(suite, &config)?;
            for r in &reports {
                writeln!(out, "{r}").expect("stdout");
            }
            let failed = reports.iter().filter(|r| !r.ok()).count();
            writeln!(out, "{} checks, {} failed", reports.len(), failed).expect("stdout");
            Ok(failed == 0)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
