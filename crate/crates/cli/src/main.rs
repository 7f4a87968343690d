mod report;
mod suites;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};

use cumulant_core::cube::cumulant_graph;
use cumulant_core::cumulants::{
    cumulant, cumulant_terms, input_name, symbolic_formula, CumulantContext,
};
use cumulant_core::formal::cumulant_polytope_graph;
use cumulant_core::hom::SignConvention;
use cumulant_core::syntax::parse_tuple;
use cumulant_core::Error;

use report::{Recorder, Report};
use suites::{Params, Suite, DEGREE_LIMIT};

#[derive(Parser)]
#[command(
    name = "cumulant",
    version,
    about = "Exact checks for cumulants of the interval model"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and emit a report.
    Verify(VerifyArgs),
    /// Print a graph in DOT format.
    Graph(GraphArgs),
    /// Print the symbolic formula for K_n, or evaluate it on inputs.
    Cumulant(CumulantArgs),
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// Suite to run (same as --suite).
    #[arg(value_enum)]
    suite_name: Option<Suite>,
    #[arg(long, value_enum)]
    suite: Option<Suite>,
    #[arg(long, default_value_t = 3)]
    n_max: usize,
    /// Largest exponent of t in the truncation grid.
    #[arg(long, default_value_t = 4)]
    degree: usize,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, default_value = "A", value_parser = parse_convention)]
    sign_convention: SignConvention,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphKind {
    /// Vertices are the terms of K_n, edges the cells of the cube.
    Cube,
    /// Vertices are painted trees, edges the 1-dimensional composites.
    Polytope,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Dot,
}

#[derive(clap::Args)]
struct GraphArgs {
    #[arg(value_enum)]
    kind: GraphKind,
    n: usize,
    #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
    format: GraphFormat,
    #[arg(long, default_value = "A", value_parser = parse_convention)]
    sign_convention: SignConvention,
}

#[derive(clap::Args)]
struct CumulantArgs {
    n: usize,
    /// Semicolon-separated forms, e.g. "t ; dt".
    #[arg(long)]
    inputs: Option<String>,
}

fn parse_convention(s: &str) -> Result<SignConvention, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn usage_error(msg: String) -> ! {
    Cli::command().error(ErrorKind::ValueValidation, msg).exit()
}

fn check_range(what: &str, got: usize, lo: usize, hi: usize) {
    if !(lo..=hi).contains(&got) {
        usage_error(format!("{what} must be in {lo}..={hi}, got {got}"));
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Verify(args) => verify(args),
        Command::Graph(args) => graph(args),
        Command::Cumulant(args) => cumulant_cmd(args),
    }
}

fn verify(args: VerifyArgs) -> ExitCode {
    let suite = match (args.suite_name, args.suite) {
        (Some(a), Some(b)) if a != b => usage_error("conflicting suite names".to_string()),
        (a, b) => a.or(b).unwrap_or(Suite::All),
    };
    check_range("--n-max", args.n_max, 1, suite.n_max_limit());
    check_range("--degree", args.degree, 0, DEGREE_LIMIT);
    let params = Params {
        n_max: args.n_max,
        degree: args.degree,
        conv: args.sign_convention,
    };
    let mut rec = Recorder::default();
    suites::run(suite, &params, &mut rec);
    let report = Report::new(args.sign_convention, rec.entries);
    let body = match args.format {
        Format::Json => serde_json::to_string_pretty(&report).expect("serializable") + "\n",
        Format::Text => report.to_text(),
    };
    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, body) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{body}"),
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn graph(args: GraphArgs) -> ExitCode {
    let GraphFormat::Dot = args.format;
    let dot = match args.kind {
        GraphKind::Cube => {
            check_range("n", args.n, 2, 8);
            cumulant_graph(args.n).map(|g| g.to_dot())
        }
        GraphKind::Polytope => {
            check_range("n", args.n, 2, 4);
            cumulant_polytope_graph(args.n, args.sign_convention).map(|g| g.to_dot())
        }
    };
    match dot {
        Ok(dot) => {
            print!("{dot}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn cumulant_cmd(args: CumulantArgs) -> ExitCode {
    check_range("n", args.n, 1, 6);
    let Some(src) = args.inputs else {
        println!(
            "K{} = {}",
            args.n,
            symbolic_formula(args.n).expect("n >= 1")
        );
        return ExitCode::SUCCESS;
    };
    let inputs = match parse_tuple(&src) {
        Ok(x) => x,
        Err(Error::Parse { pos, msg }) => {
            eprintln!("error: parse error at position {pos}: {msg}");
            eprintln!("  {src}");
            eprintln!("  {}^", " ".repeat(pos));
            return ExitCode::from(2);
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if inputs.len() != args.n {
        eprintln!(
            "error: {}",
            Error::WrongInputCount {
                expected: args.n,
                got: inputs.len()
            }
        );
        return ExitCode::from(2);
    }
    let ctx = CumulantContext::integration();
    let names: Vec<String> = inputs
        .iter()
        .enumerate()
        .map(|(i, x)| format!("{} = {x}", input_name(i)))
        .collect();
    println!("K{} with {}", args.n, names.join(", "));
    for term in cumulant_terms(&ctx, &inputs).expect("nonempty") {
        let expr: String = term
            .composition
            .ranges()
            .into_iter()
            .map(|r| format!("e({})", r.map(input_name).collect::<String>()))
            .collect();
        let sign = if term.sign > 0 { '+' } else { '-' };
        println!("  {sign} {expr} = {}", term.value);
    }
    println!("total = {}", cumulant(&ctx, &inputs).expect("nonempty"));
    ExitCode::SUCCESS
}
