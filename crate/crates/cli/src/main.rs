//! `frustration`: exact frustration index/number and certified bounds for
//! signed graphs read from edge-list files.

mod commands;
mod report;

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use frustration_core::certify::CertifyError;
use frustration_core::families::{FamilySpec, PageSign};
use frustration_core::{io as sgio, Budget, SignedGraph, SolveError};

use commands::Solver;
use report::{Format, Report};

#[derive(Parser)]
#[command(
    name = "frustration",
    version,
    about = "Frustration index and number of signed graphs"
)]
struct Cli {
    /// Output style.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Raise the exact-solver limits to this many free bits / vertices.
    #[arg(long, global = true, value_name = "BITS")]
    budget: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Edge-list file; `-` or absent reads standard input.
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Test balance; prints a switching or a negative circle.
    Balance(Input),
    /// Exact frustration index l.
    Index(Input),
    /// Exact frustration number l0.
    Number(Input),
    /// Brute-force l over all edge subsets (tiny graphs only).
    OracleIndex(Input),
    /// Brute-force l0 over all vertex subsets (tiny graphs only).
    OracleNumber(Input),
    /// Certified l <= 3n/8 reduction for cubic graphs of girth at least 4.
    Reduce(Input),
    /// Convert a balancing vertex set of a subcubic graph to an edge set.
    #[command(visible_alias = "thm1")]
    VertexToEdge {
        #[command(flatten)]
        input: Input,
        /// Comma-separated vertex ids, e.g. `0,2,5`.
        #[arg(long, value_delimiter = ',', required = true, num_args = 0..)]
        vertices: Vec<usize>,
    },
    /// Degree-sequence bound: sum of floor(d/2) over the k largest degrees.
    Bound {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
    },
    /// Switch a loopless subcubic graph until its negative edges form a matching.
    Matching(Input),
    /// Emit a graph from a named family.
    Gen(GenArgs),
    /// Run every applicable check and print a verdict table.
    Certify(Input),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    /// k disjoint all-negative K4.
    K4neg,
    /// k disjoint theta graphs with one negative edge.
    Theta,
    /// n triangles sharing a vertex, one negative edge each.
    Book,
    /// Wagner graph, diagonals negative.
    Wagner,
    /// Random cubic graph of girth at least 4 with random signs.
    RandomCubicGirth4,
    /// Random subcubic multigraph.
    RandomSubcubic,
    /// Random signed multigraph.
    RandomSigned,
}

#[derive(Args)]
struct GenArgs {
    #[arg(value_enum)]
    family: Family,
    /// Copies for k4neg / theta.
    #[arg(long, default_value_t = 1)]
    k: usize,
    /// Pages for book, vertices for the random families.
    #[arg(long, default_value_t = 8)]
    n: usize,
    /// Edge count for random-signed.
    #[arg(long, default_value_t = 12)]
    m: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Allow loops (random-subcubic, random-signed).
    #[arg(long)]
    loops: bool,
    /// Allow parallel edges (random-signed).
    #[arg(long)]
    parallel: bool,
    /// Put each book page's negative sign on a spoke instead of the far edge.
    #[arg(long)]
    spoke: bool,
}

impl GenArgs {
    fn spec(&self) -> FamilySpec {
        match self.family {
            Family::K4neg => FamilySpec::K4AllNegative { copies: self.k },
            Family::Theta => FamilySpec::ThetaOneNegative { copies: self.k },
            Family::Book => FamilySpec::BookOfTriangles { pages: self.n },
            Family::Wagner => FamilySpec::WagnerSigned,
            Family::RandomCubicGirth4 => FamilySpec::RandomCubicGirth4 {
                vertices: self.n,
                seed: self.seed,
            },
            Family::RandomSubcubic => FamilySpec::RandomSubcubic {
                vertices: self.n,
                loops: self.loops,
                seed: self.seed,
            },
            Family::RandomSigned => FamilySpec::RandomSigned {
                vertices: self.n,
                edges: self.m,
                loops: self.loops,
                parallel: self.parallel,
                seed: self.seed,
            },
        }
    }

    fn generate(&self) -> Result<SignedGraph> {
        if self.spoke {
            anyhow::ensure!(
                matches!(self.family, Family::Book),
                "--spoke only applies to the book family"
            );
            return Ok(frustration_core::families::book_of_triangles_with(
                self.n,
                PageSign::Spoke,
            ));
        }
        Ok(self.spec().generate()?)
    }
}

fn read_graph(input: &Input) -> Result<SignedGraph> {
    let text = match &input.file {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?
        }
        _ => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .context("reading standard input")?;
            s
        }
    };
    let source = input
        .file
        .as_ref()
        .map_or("<stdin>".to_string(), |p| p.display().to_string());
    sgio::parse(&text).with_context(|| format!("parsing {source}"))
}

enum Output {
    Report(Report),
    Raw(String),
}

fn run(cli: &Cli) -> Result<Output> {
    let budget = cli.budget.map_or_else(Budget::default, Budget::raised);
    let report = match &cli.command {
        Command::Balance(i) => commands::balance(&read_graph(i)?)?,
        Command::Index(i) => commands::solve(&read_graph(i)?, &budget, Solver::Index)?,
        Command::Number(i) => commands::solve(&read_graph(i)?, &budget, Solver::Number)?,
        Command::OracleIndex(i) => commands::solve(&read_graph(i)?, &budget, Solver::OracleIndex)?,
        Command::OracleNumber(i) => {
            commands::solve(&read_graph(i)?, &budget, Solver::OracleNumber)?
        }
        Command::Reduce(i) => commands::reduce(&read_graph(i)?)?,
        Command::VertexToEdge { input, vertices } => {
            commands::vertex_to_edge(&read_graph(input)?, vertices)?
        }
        Command::Bound { input, k } => commands::bound(&read_graph(input)?, *k)?,
        Command::Matching(i) => commands::matching(&read_graph(i)?)?,
        Command::Certify(i) => commands::certify(&read_graph(i)?, &budget)?,
        Command::Gen(args) => {
            let g = args.generate()?;
            let family = match args.spoke {
                true => format!("book n={} spoke", args.n),
                false => args.spec().to_string(),
            };
            return Ok(Output::Raw(format!("c {family}\n{}", sgio::emit(&g))));
        }
    };
    Ok(Output::Report(report))
}

/// 1 for a failed verification, 3 for an exhausted budget, 2 otherwise.
fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if cause.downcast_ref::<SolveError>().is_some() {
            return 3;
        }
        if let Some(CertifyError::NotBalancing { .. } | CertifyError::Invariant(_)) =
            cause.downcast_ref::<CertifyError>()
        {
            return 1;
        }
    }
    2
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (out, code) = match run(&cli) {
        Ok(Output::Raw(s)) => (s, 0),
        Ok(Output::Report(r)) => (r.render(cli.format), if r.verified { 0 } else { 1 }),
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(exit_code(&e));
        }
    };
    let mut stdout = io::stdout().lock();
    if stdout
        .write_all(out.as_bytes())
        .and_then(|_| stdout.flush())
        .is_err()
    {
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
