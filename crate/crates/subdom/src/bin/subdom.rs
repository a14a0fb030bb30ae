use std::error::Error;
use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use subdom::edgelist::write_edge_list;
use subdom::families::Family;
use subdom::graph6::{write_graph6_record, Strictness};
use subdom::stream::{GraphStream, StreamFormat};
use subdom::survey::{pair_union_check, survey_stream, tightness_filter, SurveyOptions};

/// Degree-sequence lower bounds for total domination: per-graph
/// invariant reports, exact solving, tightness catalogs, and
/// disjoint-union checks over graph streams.
#[derive(Parser)]
#[command(name = "subdom", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum, Default)]
enum FormatArg {
    #[default]
    Graph6,
    Edgelist,
}

impl From<FormatArg> for StreamFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Graph6 => StreamFormat::Graph6,
            FormatArg::Edgelist => StreamFormat::EdgeList,
        }
    }
}

#[derive(Args)]
struct StreamArgs {
    /// Input file; `-` reads standard input.
    file: PathBuf,
    /// Input format.
    #[arg(long, value_enum, default_value_t)]
    format: FormatArg,
    /// Accept nonzero graph6 padding bits instead of rejecting them.
    #[arg(long)]
    lenient: bool,
    /// Skip undecodable records instead of aborting.
    #[arg(long)]
    skip_malformed: bool,
}

#[derive(Args)]
struct SolveArgs {
    /// Largest order handed to the exact solver (at most 64).
    #[arg(long, default_value_t = subdom::solver::DEFAULT_CAP)]
    cap: usize,
    /// Search-node budget per graph; exhausted graphs are reported as such.
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Invariant-only reports (no solving), one JSON object per record.
    Invariants {
        #[command(flatten)]
        input: StreamArgs,
        /// Emit CSV instead of JSON lines.
        #[arg(long)]
        csv: bool,
    },
    /// Full reports with the exact total domination number.
    Solve {
        #[command(flatten)]
        input: StreamArgs,
        #[command(flatten)]
        solver: SolveArgs,
        /// Emit CSV instead of JSON lines.
        #[arg(long)]
        csv: bool,
        /// Skip the per-graph law assertions.
        #[arg(long)]
        no_assert: bool,
    },
    /// Emit exactly the records with gamma_t = sub_t, bytes preserved.
    Tight {
        #[command(flatten)]
        input: StreamArgs,
        #[command(flatten)]
        solver: SolveArgs,
    },
    /// Zip two streams and check the disjoint-union laws on each pair.
    UnionCheck {
        /// First input file; `-` reads standard input.
        file_a: PathBuf,
        /// Second input file.
        file_b: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: FormatArg,
        #[arg(long)]
        lenient: bool,
        #[command(flatten)]
        solver: SolveArgs,
    },
    /// Emit a named family graph as an edge list (or graph6 with --g6).
    Gen {
        /// One of: path, cycle, star, double_star, complete,
        /// complete_bipartite, circulant.
        family: String,
        /// Family parameters; circulant takes n followed by offsets.
        #[arg(required = true)]
        params: Vec<usize>,
        /// Emit a graph6 record instead of an edge list.
        #[arg(long)]
        g6: bool,
    },
}

fn open_input(path: &Path) -> io::Result<Box<dyn BufRead>> {
    if path == Path::new("-") {
        Ok(Box::new(io::stdin().lock()))
    } else {
        Ok(Box::new(BufReader::new(File::open(path)?)))
    }
}

fn open_stream(args: &StreamArgs) -> io::Result<GraphStream<Box<dyn BufRead>>> {
    let strictness = if args.lenient { Strictness::Lenient } else { Strictness::Strict };
    Ok(GraphStream::with_strictness(
        open_input(&args.file)?,
        args.format.into(),
        strictness,
    ))
}

fn run_survey(
    input: &StreamArgs,
    options: &SurveyOptions,
    csv: bool,
) -> Result<ExitCode, Box<dyn Error>> {
    let stream = open_stream(input)?;
    let stdout = io::stdout().lock();
    let mut out = BufWriter::new(stdout);
    if csv {
        writeln!(out, "{}", subdom::InvariantReport::csv_header())?;
    }
    let mut sink_error = None;
    let summary = survey_stream(stream, options, |report| {
        if sink_error.is_some() {
            return;
        }
        let line = if csv {
            report.to_csv_row()
        } else {
            serde_json::to_string(report).expect("reports always serialize")
        };
        if let Err(e) = writeln!(out, "{line}") {
            sink_error = Some(e);
        }
    })?;
    if let Some(e) = sink_error {
        return Err(e.into());
    }
    out.flush()?;
    eprintln!("{}", serde_json::to_string(&summary)?);
    Ok(if summary.violations.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn Error>> {
    match cli.command {
        Command::Invariants { input, csv } => {
            let options = SurveyOptions {
                cap: 0,
                skip_malformed: input.skip_malformed,
                ..Default::default()
            };
            run_survey(&input, &options, csv)
        }
        Command::Solve { input, solver, csv, no_assert } => {
            let options = SurveyOptions {
                cap: solver.cap,
                budget: solver.budget,
                assertions: !no_assert,
                skip_malformed: input.skip_malformed,
            };
            run_survey(&input, &options, csv)
        }
        Command::Tight { input, solver } => {
            let options = SurveyOptions {
                cap: solver.cap,
                budget: solver.budget,
                skip_malformed: input.skip_malformed,
                ..Default::default()
            };
            let stream = open_stream(&input)?;
            let mut out = BufWriter::new(io::stdout().lock());
            let stats = tightness_filter(stream, &options, &mut out)?;
            out.flush()?;
            eprintln!("tight: {} of {} records", stats.emitted, stats.total);
            Ok(ExitCode::SUCCESS)
        }
        Command::UnionCheck { file_a, file_b, format, lenient, solver } => {
            let strictness = if lenient { Strictness::Lenient } else { Strictness::Strict };
            let stream_a =
                GraphStream::with_strictness(open_input(&file_a)?, format.into(), strictness);
            let stream_b =
                GraphStream::with_strictness(open_input(&file_b)?, format.into(), strictness);
            let options = SurveyOptions {
                cap: solver.cap,
                budget: solver.budget,
                ..Default::default()
            };
            let summary = pair_union_check(stream_a, stream_b, &options)?;
            println!("{}", serde_json::to_string(&summary)?);
            Ok(if summary.violations.is_empty() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Gen { family, params, g6 } => {
            let family: Family = family.parse()?;
            let graph = subdom::families::generate(family, &params)?;
            if g6 {
                println!("{}", write_graph6_record(&graph)?);
            } else {
                print!("{}", write_edge_list(&graph));
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("subdom: {e}");
            ExitCode::from(2)
        }
    }
}
