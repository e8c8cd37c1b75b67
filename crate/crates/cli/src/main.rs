mod commands;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use commands::Report;

/// Construct, verify and search codeword-stabilized and cyclic quantum codes.
#[derive(Parser, Debug)]
#[command(name = "cws", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Worker threads (defaults to the available parallelism).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    workers: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact distance of a code descriptor.
    Distance {
        /// Path to a JSON descriptor, `-` for stdin, or inline JSON.
        #[arg(long)]
        input: String,
        /// Largest error weight to enumerate.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_weight: Option<u64>,
    },
    /// Sieve residues of a cyclic code for a target distance and verify a survivor.
    SearchCyclic {
        #[arg(long)]
        n: usize,
        /// Generator polynomial as a coefficient string.
        #[arg(long, conflicts_with = "p", required_unless_present = "p")]
        q: Option<String>,
        /// Check polynomial as a coefficient string.
        #[arg(long)]
        p: Option<String>,
        #[arg(long)]
        target_d: usize,
        /// Restrict to the symmetric residue family.
        #[arg(long)]
        symmetric: bool,
        /// Weight cap for verifying the survivor (defaults to the target).
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_weight: Option<u64>,
    },
    /// Gilbert-Varshamov tables.
    Gv {
        /// Lattice preset; overrides the ranges.
        #[arg(long, value_enum)]
        preset: Option<Preset>,
        /// Block lengths, `a`, `a..b` or `a..=b`.
        #[arg(long, default_value = "1..=0")]
        n: String,
        /// Encoded qubits; defaults to every `0..=n`.
        #[arg(long)]
        k: Option<String>,
        /// Report the largest k reaching this distance instead.
        #[arg(long)]
        target_d: Option<usize>,
        #[arg(long, default_value = "standard")]
        variant: String,
        /// Cap on the distance, e.g. from the graph.
        #[arg(long)]
        d_max: Option<usize>,
    },
    /// Generate and verify named code families.
    Families {
        #[command(subcommand)]
        family: Family,
    },
    /// Local-complementation orbit of a graph or CWS code with the distance bounds.
    LcOrbit {
        #[arg(long)]
        input: String,
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        orbit_cap: u64,
    },
    /// Distance of a graph state.
    GraphDistance {
        #[arg(long)]
        input: String,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_weight: Option<u64>,
    },
    /// Check a descriptor: self-orthogonality, encoded qubits and distance.
    Verify {
        #[arg(long)]
        input: String,
        /// Fail unless the distance reaches this value.
        #[arg(long)]
        target_d: Option<usize>,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_weight: Option<u64>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Preset {
    SquareTorus,
    Triangular,
}

#[derive(Subcommand, Debug)]
enum Family {
    /// Cyclic toric analogs `[[t^2 + (t+1)^2, 1, 2t+1]]`.
    Toric {
        /// Values of t, `a`, `a..b` or `a..=b`.
        #[arg(long, default_value = "1..=3")]
        t: String,
    },
    /// Rebuild the repetition-copies table from its generator strings.
    #[command(alias = "table1")]
    Repetition {
        /// Only rows with this repetition length.
        #[arg(long)]
        m: Option<usize>,
    },
    /// Search circulant graphs for k copies of the length-m repetition code.
    RepetitionSearch {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
    },
    /// Translation-pattern codes on an open square lattice.
    SquareFragment {
        #[arg(long, default_value_t = 5)]
        l: usize,
        #[arg(long = "box", default_value_t = 4)]
        box_size: usize,
        #[arg(long, default_value_t = 4)]
        k: usize,
        #[arg(long, default_value_t = 4)]
        target_d: usize,
    },
}

fn emit(report: &Report, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report.json).expect("serializable")),
        Format::Text => print!("{}", report.text),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(w) = cli.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(w as usize).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match commands::run(&cli.command) {
        Ok(report) => {
            emit(&report, cli.format);
            if let Some(msg) = &report.diagnostic {
                eprintln!("{msg}");
            }
            ExitCode::from(report.exit)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
