use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand};

use qimatch_core::example::run_example;
use qimatch_core::report::{analyze, planner_rows, table1};
use qimatch_core::{load_pgm, run_match, Image, MatchOptions, MatchReport, PlanMode};

/// Grover-amplified quantum image matching, simulated classically.
#[derive(Debug, Parser)]
#[command(name = "qimatch", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Locate a small image inside a big one.
    Match(MatchArgs),
    /// Iteration counts and success probabilities for a = 4, 8, ..., max.
    Table1 {
        #[arg(long, default_value_t = 65536)]
        max_a: u64,
        /// Comma-separated subset of exact, fit, optimal.
        #[arg(long, value_delimiter = ',', default_value = "exact,fit,optimal")]
        modes: Vec<PlanMode>,
        /// Also write the rows as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Replay the built-in 4x4 / 2x2 example and check every value.
    Example,
    /// Print the amplitude recurrence for one side length.
    Analyze {
        #[arg(long)]
        a: u64,
        /// Last iteration to print; defaults to one past the planned count.
        #[arg(long)]
        sweep_i: Option<u64>,
    },
}

#[derive(Debug, clap::Args)]
struct MatchArgs {
    #[arg(long)]
    big: PathBuf,
    #[arg(long)]
    small: PathBuf,
    #[arg(long, default_value = "exact")]
    mode: PlanMode,
    /// Override the planned iteration count.
    #[arg(long)]
    iterations: Option<u64>,
    #[arg(long, default_value_t = 1)]
    samples: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Run the classical matchers too.
    #[arg(long)]
    verify: bool,
    #[arg(long)]
    json: Option<PathBuf>,
    /// Include per-stage wall times in the report (breaks byte-identical output).
    #[arg(long)]
    timings: bool,
}

/// Failure classes, each with its own exit code.
#[derive(Debug)]
enum Failure {
    Io(anyhow::Error),
    Invalid(anyhow::Error),
    NoMatch,
    Mismatch,
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Io(_) => 1,
            Failure::Invalid(_) => 2,
            Failure::NoMatch => 3,
            Failure::Mismatch => 4,
        }
    }
}

type Outcome = Result<(), Failure>;

fn invalid(e: qimatch_core::Error) -> Failure {
    Failure::Invalid(e.into())
}

fn read_image(path: &Path) -> Result<Image, Failure> {
    let bytes = fs::read(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(Failure::Io)?;
    load_pgm(&bytes)
        .map_err(|e| Failure::Invalid(anyhow!(e).context(format!("parsing {}", path.display()))))
}

fn write_file(path: &Path, contents: &[u8]) -> Outcome {
    fs::write(path, contents)
        .with_context(|| format!("writing {}", path.display()))
        .map_err(Failure::Io)
}

fn print_report(r: &MatchReport) {
    let d = &r.dims;
    println!(
        "big {0}x{0}, small {1}x{1}, {2}-bit pixels",
        d.a,
        1u64 << d.m,
        d.q
    );
    println!(
        "plan: {} mode, {} iterations, predicted success {:.6} (lower bound {:.4})",
        r.plan.mode, r.plan.iterations, r.plan.predicted_success, r.plan.lower_bound
    );
    match (r.result.top_index, r.result.x, r.result.y) {
        (Some(k), Some(x), Some(y)) => println!(
            "match: index {k} at (x, y) = ({x}, {y}), {} marked position(s)",
            r.result.marked_count
        ),
        _ => println!("no match: no position carries the small image's upper-left pixel"),
    }
    if let Some(v) = &r.verify {
        println!("classical full block: {:?}", v.full_block);
        println!("classical anchor:     {:?}", v.anchor);
        if r.result.top_index.is_some() && !v.top_in_full_block {
            println!("warning: quantum location is not a full-block match");
        }
    }
    if let Some(s) = &r.samples {
        println!("samples (seed {}): {:?}", s.seed, s.counts);
    }
}

fn cmd_match(args: &MatchArgs) -> Outcome {
    let big = read_image(&args.big)?;
    let small = read_image(&args.small)?;
    let opts = MatchOptions {
        mode: args.mode,
        iterations: args.iterations,
        samples: args.samples,
        seed: args.seed,
        verify: args.verify,
        timings: args.timings,
    };
    let report = run_match(&big, &small, &opts).map_err(invalid)?.report;
    print_report(&report);
    if let Some(path) = &args.json {
        let mut text = serde_json::to_string_pretty(&report)
            .context("serializing report")
            .map_err(Failure::Io)?;
        text.push('\n');
        write_file(path, text.as_bytes())?;
    }
    if report.is_no_match() {
        return Err(Failure::NoMatch);
    }
    Ok(())
}

fn cmd_table1(max_a: u64, modes: &[PlanMode], csv_path: Option<&Path>) -> Outcome {
    let rows = table1(max_a).map_err(invalid)?;
    println!(
        "{:>8} {:>8} {:>8} {:>8} {:>10} {:>10}",
        "a", "exact", "fit", "optimal", "P(exact)", "bound"
    );
    for r in &rows {
        println!(
            "{:>8} {:>8} {:>8} {:>8} {:>10.6} {:>10.6}",
            r.a, r.exact, r.fit, r.optimal, r.predicted_success, r.lower_bound
        );
    }
    if let Some(path) = csv_path {
        let plans = planner_rows(max_a, modes).map_err(invalid)?;
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Failure::Io(e.into());
        w.write_record(["a", "mode", "iterations", "predicted_success", "lower_bound"])
            .map_err(io)?;
        for p in &plans {
            w.write_record([
                p.a.to_string(),
                p.mode.to_string(),
                p.iterations.to_string(),
                p.predicted_success.to_string(),
                p.lower_bound.to_string(),
            ])
            .map_err(io)?;
        }
        let bytes = w
            .into_inner()
            .map_err(|e| Failure::Io(anyhow!("flushing csv: {e}")))?;
        write_file(path, &bytes)?;
    }
    Ok(())
}

fn cmd_example() -> Outcome {
    let t = run_example();
    print!("{}", t.render());
    if t.all_pass() {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn cmd_analyze(a: u64, sweep_i: Option<u64>) -> Outcome {
    let exact = qimatch_core::grover::exact_iterations(a).map_err(invalid)?;
    let max_i = sweep_i.unwrap_or(exact + 1);
    let an = analyze(a, max_i).map_err(invalid)?;
    println!("{:>6} {:>14} {:>14} {:>12}  note", "i", "t", "t0", "t0^2");
    for p in &an.points {
        let mut note = Vec::new();
        if p.i == an.first_local_max {
            note.push("first local max");
        }
        if p.i == an.exact {
            note.push("planned (exact)");
        }
        let line = format!(
            "{:>6} {:>14.10} {:>14.10} {:>12.8}  {}",
            p.i,
            p.t,
            p.t0,
            p.probability,
            note.join(", ")
        );
        println!("{}", line.trim_end());
    }
    println!(
        "first local max at i = {}, exact plan i = {}",
        an.first_local_max, an.exact
    );
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Match(args) => cmd_match(args),
        Command::Table1 { max_a, modes, csv } => cmd_table1(*max_a, modes, csv.as_deref()),
        Command::Example => cmd_example(),
        Command::Analyze { a, sweep_i } => cmd_analyze(*a, *sweep_i),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Io(e) | Failure::Invalid(e) => eprintln!("error: {e:#}"),
                Failure::NoMatch => {}
                Failure::Mismatch => eprintln!("error: example values deviate"),
            }
            ExitCode::from(f.code())
        }
    }
}
