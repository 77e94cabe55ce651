//! `cosmoface`: face lattices, f-vectors, simplex counts and volumes of
//! cosmological polytopes from the command line.
//!
//! Exit codes: 0 success, 2 input error, 3 cap exceeded, 4 verification
//! mismatch. Errors go to stderr as `error[<kind>]: <message>`.

mod caps;
mod commands;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cosmoface_core::multigraph::{parse_graph, GraphFormat};
use cosmoface_core::verify::VerifyMode;
use cosmoface_core::{catalog, Error, Multigraph};

use caps::CapFlags;
use commands::{FvectorMethod, Outcome, Report, SimplexMethod, VolumeMethod};

#[derive(Parser, Debug)]
#[command(
    name = "cosmoface",
    version,
    about = "Combinatorics of cosmological polytopes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    global: Global,
}

#[derive(Args, Debug)]
struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Graph input format; sniffed from the first character when omitted.
    #[arg(long, value_enum, global = true)]
    input_format: Option<InputFormat>,

    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// File of `key=value` cap assignments.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[arg(long, global = true)]
    max_subgraphs: Option<usize>,
    #[arg(long, global = true)]
    max_cycles: Option<usize>,
    #[arg(long, global = true)]
    max_faces: Option<usize>,
    #[arg(long, global = true)]
    max_oracle_vertices: Option<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    Text,
    Json,
}

/// Where the graph comes from: a file, `-` for stdin, or a catalog name.
#[derive(Args, Debug)]
struct Input {
    /// Graph file (`-` reads stdin).
    #[arg(required_unless_present = "graph", conflicts_with = "graph")]
    path: Option<PathBuf>,

    /// Built-in graph: P<n>, C<n>, K1,<k>, B<k>, K<n>, B2+pendant, C3+pendant, C3+2pendants, B2-B2.
    #[arg(long)]
    graph: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Polytope vertices and their coordinates.
    Vertices(Input),
    /// One facet per connected subgraph, with supporting functionals.
    Facets(Input),
    /// The full face lattice.
    Faces {
        #[command(flatten)]
        input: Input,
        /// Only list faces up to this dimension.
        #[arg(long)]
        max_dim: Option<i64>,
    },
    /// The f-polynomial.
    Fvector {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = FvMethod::Enum)]
        method: FvMethod,
    },
    /// Simplex faces by number of vertices.
    SimplexCount {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = ScMethod::Enum)]
        method: ScMethod,
    },
    /// Vertex faces and cycle faces.
    SpecialFaces(Input),
    /// Normalized volume.
    Volume {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = VolMethod::Triangulation)]
        method: VolMethod,
    },
    /// Compare the face criterion against the LP oracle.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Check every vertex subset.
        #[arg(long, conflicts_with = "samples")]
        exhaustive: bool,
        /// Number of random subsets to check.
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        /// Seed for subset sampling.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Closed-form edge and 2-face counts.
    Counts(Input),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum FvMethod {
    Enum,
    Tree,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ScMethod {
    Formula,
    Enum,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum VolMethod {
    Triangulation,
    Tree,
}

enum Failure {
    Core(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn report(&self) -> (String, ExitCode) {
        match self {
            Failure::Core(e @ Error::CapExceeded { .. }) => {
                (format!("error[{}]: {e}", e.kind()), ExitCode::from(3))
            }
            Failure::Core(e) => (format!("error[{}]: {e}", e.kind()), ExitCode::from(2)),
            Failure::Io(msg) => (format!("error[io]: {msg}"), ExitCode::from(2)),
        }
    }
}

fn load(input: &Input, format: Option<InputFormat>) -> Result<Multigraph, Failure> {
    if let Some(name) = &input.graph {
        return catalog::by_name(name)
            .ok_or_else(|| Failure::Io(format!("unknown catalog graph `{name}`")));
    }
    let path = input
        .path
        .as_ref()
        .expect("clap requires a path or --graph");
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Io(format!("stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?
    };
    let format = format.map(|f| match f {
        InputFormat::Text => GraphFormat::Text,
        InputFormat::Json => GraphFormat::Json,
    });
    Ok(parse_graph(&text, format)?)
}

/// Writes the report; a closed pipe downstream is not an error.
fn emit(report: &Report, format: Format) {
    let body = match format {
        Format::Json => serde_json::to_string_pretty(&report.json).expect("serializable") + "\n",
        Format::Csv => report.csv.clone(),
        Format::Text => report.text.clone(),
    };
    let mut out = io::stdout().lock();
    let _ = out.write_all(body.as_bytes()).and_then(|()| out.flush());
}

fn run(cli: Cli) -> Result<Outcome, Failure> {
    let g = &cli.global;
    let flags = CapFlags {
        max_subgraphs: g.max_subgraphs,
        max_cycles: g.max_cycles,
        max_faces: g.max_faces,
        max_oracle_vertices: g.max_oracle_vertices,
    };
    let env = std::env::var(caps::ENV_VAR).ok();
    let limits = caps::resolve(env.as_deref(), g.config.as_deref(), flags)?;
    if let Some(n) = g.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Io(format!("thread pool: {e}")))?;
    }
    let fmt = g.input_format;
    let done = |r: cosmoface_core::Result<Report>| r.map(Outcome::Done).map_err(Failure::from);
    match &cli.command {
        Command::Vertices(input) => Ok(Outcome::Done(commands::vertices(&load(input, fmt)?))),
        Command::Facets(input) => done(commands::facets(&load(input, fmt)?, &limits)),
        Command::Faces { input, max_dim } => {
            done(commands::faces(&load(input, fmt)?, &limits, *max_dim))
        }
        Command::Fvector { input, method } => {
            let method = match method {
                FvMethod::Enum => FvectorMethod::Enum,
                FvMethod::Tree => FvectorMethod::Tree,
            };
            done(commands::fvector(&load(input, fmt)?, &limits, method))
        }
        Command::SimplexCount { input, method } => {
            let method = match method {
                ScMethod::Formula => SimplexMethod::Formula,
                ScMethod::Enum => SimplexMethod::Enum,
            };
            done(commands::simplex_count(&load(input, fmt)?, &limits, method))
        }
        Command::SpecialFaces(input) => done(commands::special_faces(&load(input, fmt)?, &limits)),
        Command::Volume { input, method } => {
            let method = match method {
                VolMethod::Triangulation => VolumeMethod::Triangulation,
                VolMethod::Tree => VolumeMethod::Tree,
            };
            done(commands::volume(&load(input, fmt)?, &limits, method))
        }
        Command::Verify {
            input,
            exhaustive,
            samples,
            seed,
        } => {
            let mode = if *exhaustive {
                VerifyMode::Exhaustive
            } else {
                VerifyMode::Sampled {
                    samples: *samples,
                    seed: *seed,
                }
            };
            Ok(commands::run_verify(&load(input, fmt)?, &limits, mode)?)
        }
        Command::Counts(input) => done(commands::counts(&load(input, fmt)?, &limits)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.global.format;
    match run(cli) {
        Ok(Outcome::Done(report)) => {
            emit(&report, format);
            ExitCode::SUCCESS
        }
        Ok(Outcome::Mismatch(report)) => {
            emit(&report, format);
            eprintln!("error[mismatch]: face criterion and LP oracle disagree");
            ExitCode::from(4)
        }
        Err(f) => {
            let (line, code) = f.report();
            eprintln!("{line}");
            code
        }
    }
}
