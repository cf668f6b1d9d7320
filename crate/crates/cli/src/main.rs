//! `enumfpt`: ordered enumeration of bounded-size solutions from the command
//! line.

mod report;

use std::io::{self, BufWriter, Write};
use std::ops::ControlFlow;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use enumfpt::backdoors::{BaseClass, Horn, StrongBackdoors, StrongExtension, TwoCnf, WeakBackdoors, WeakExtension};
use enumfpt::chordal::{ChordalInstance, FillIn};
use enumfpt::closest_string::{parse_strings, FlipExtension};
use enumfpt::cluster::{ClusterInstance, MergeSplit};
use enumfpt::cnf::{parse_cnf, CnfFormula};
use enumfpt::graph::parse_graph;
use enumfpt::minones::{MinOnes, OnesExtension};
use enumfpt::oracle::brute_force;
use enumfpt::triangle::{TriangleDeletion, VertexRemoval};
use enumfpt::{enumerate_minimal, enumerate_ordered, MinimalSolutions, Neighbourhood, OpSet};

use report::{write_solution, DelayClock};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProblemKind {
    ClusterEditing,
    ChordalCompletion,
    ClosestString,
    WeakBackdoor,
    StrongBackdoor,
    Minones,
    TriangleDeletion,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    /// Every solution of size at most k, smallest first.
    All,
    /// Only the inclusion-minimal solutions.
    Min,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    JsonLines,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassName {
    Horn,
    #[value(name = "2cnf")]
    TwoCnf,
}

/// Enumerate the solutions of size at most k of a parameterized problem, in
/// order of increasing size.
#[derive(Debug, Parser)]
#[command(name = "enumfpt", version)]
struct Cli {
    problem: ProblemKind,

    /// DIMACS graph, DIMACS CNF, or `<k> <n> <d>` string file, by problem.
    #[arg(long)]
    input: PathBuf,

    /// Size bound. For closest-string this is d and defaults to the file's.
    #[arg(short)]
    k: Option<usize>,

    #[arg(long, value_enum, default_value_t = Mode::All)]
    mode: Mode,

    /// Stop after this many solutions.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    limit: Option<u64>,

    /// Base class for the backdoor problems.
    #[arg(long, value_enum)]
    class: Option<ClassName>,

    /// Print a delay report to stderr.
    #[arg(long)]
    stats: bool,

    /// Compare the output against brute force and exit 1 on divergence.
    #[arg(long)]
    oracle_check: bool,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

enum Failure {
    Config(String),
    Divergence(String),
}

impl From<enumfpt::Error> for Failure {
    fn from(e: enumfpt::Error) -> Self {
        Failure::Config(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Config(format!("i/o: {e}"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Divergence(msg)) => {
            eprintln!("divergence: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: &Cli) -> Result<(), Failure> {
    let text = std::fs::read_to_string(&cli.input)
        .map_err(|e| Failure::Config(format!("{}: {e}", cli.input.display())))?;
    let backdoor = matches!(cli.problem, ProblemKind::WeakBackdoor | ProblemKind::StrongBackdoor);
    if cli.class.is_some() && !backdoor {
        return Err(Failure::Config("--class only applies to weak-backdoor and strong-backdoor".into()));
    }
    let k = || cli.k.ok_or_else(|| Failure::Config("-k is required for this problem".into()));
    let located = |e: enumfpt::Error| Failure::Config(format!("{}: {e}", cli.input.display()));

    match cli.problem {
        ProblemKind::ClusterEditing => {
            let x = ClusterInstance::new(parse_graph(&text).map_err(located)?, k()?);
            run(&x, &MergeSplit::new(&x), cli)
        }
        ProblemKind::ChordalCompletion => {
            let x = ChordalInstance::new(parse_graph(&text).map_err(located)?, k()?);
            run(&x, &FillIn::new(&x), cli)
        }
        ProblemKind::TriangleDeletion => {
            let x = TriangleDeletion::new(parse_graph(&text).map_err(located)?, k()?);
            run(&x, &VertexRemoval::new(&x), cli)
        }
        ProblemKind::ClosestString => {
            let x = parse_strings(&text).map_err(located)?;
            let x = match cli.k {
                Some(d) => x.with_d(d),
                None => x,
            };
            run(&x, &FlipExtension::new(&x), cli)
        }
        ProblemKind::Minones => {
            let x = MinOnes::new(parse_cnf(&text).map_err(located)?, k()?);
            run(&x, &OnesExtension::new(&x), cli)
        }
        ProblemKind::WeakBackdoor | ProblemKind::StrongBackdoor => {
            let phi = parse_cnf(&text).map_err(located)?;
            if phi.max_clause_width() > 3 {
                return Err(located(enumfpt::Error::InvariantViolation(format!(
                    "clause of width {} (backdoor search expects 3CNF)",
                    phi.max_clause_width()
                ))));
            }
            match cli.class.unwrap_or(ClassName::Horn) {
                ClassName::Horn => backdoors(phi, k()?, Horn, cli),
                ClassName::TwoCnf => backdoors(phi, k()?, TwoCnf, cli),
            }
        }
    }
}

fn backdoors<C: BaseClass>(phi: CnfFormula, k: usize, class: C, cli: &Cli) -> Result<(), Failure> {
    if cli.problem == ProblemKind::WeakBackdoor {
        let x = WeakBackdoors::new(phi, k, class)?;
        run(&x, &WeakExtension::new(&x), cli)
    } else {
        let x = StrongBackdoors::new(phi, k, class);
        run(&x, &StrongExtension::new(&x), cli)
    }
}

fn run<P, N>(problem: &P, nbf: &N, cli: &Cli) -> Result<(), Failure>
where
    P: MinimalSolutions,
    N: Neighbourhood<Atom = P::Atom>,
{
    let expected = if cli.oracle_check {
        let oracle = brute_force(problem)?;
        Some(match cli.mode {
            Mode::All => oracle.all,
            Mode::Min => oracle.minimal,
        })
    } else {
        None
    };
    let limit = cli.limit.map_or(usize::MAX, |l| l as usize);
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut emitted: usize = 0;
    let mut failure: Option<Failure> = None;

    let mut emit = |s: &OpSet<P::Atom>, clock: &mut DelayClock| -> ControlFlow<()> {
        clock.tick();
        if let Some(want) = &expected {
            if want.get(emitted) != Some(s) {
                let oracle = want.get(emitted).map_or("nothing".to_string(), |w| format!("{} {w}", w.len()));
                failure = Some(Failure::Divergence(format!(
                    "solution #{}: emitted {} {s}, oracle has {oracle}",
                    emitted + 1,
                    s.len()
                )));
                return ControlFlow::Break(());
            }
        }
        let written = write_solution(&mut out, s, cli.format).and_then(|_| out.flush());
        match written {
            Ok(()) => {}
            Err(e) if e.kind() == io::ErrorKind::BrokenPipe => return ControlFlow::Break(()),
            Err(e) => {
                failure = Some(e.into());
                return ControlFlow::Break(());
            }
        }
        emitted += 1;
        if emitted >= limit {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    };

    let mut clock = DelayClock::start();
    let summary = match cli.mode {
        Mode::All => Some(enumerate_ordered(nbf, |s| emit(s, &mut clock))?),
        Mode::Min => {
            for s in enumerate_minimal(problem)? {
                if emit(&s, &mut clock).is_break() {
                    break;
                }
            }
            None
        }
    };
    let report = clock.finish(summary.as_ref());
    if let Some(f) = failure {
        return Err(f);
    }
    if let Some(want) = &expected {
        if emitted < limit && emitted != want.len() {
            return Err(Failure::Divergence(format!(
                "enumeration stopped after {emitted} solutions, oracle has {}",
                want.len()
            )));
        }
    }
    if cli.stats {
        report.write(&mut io::stderr().lock(), cli.format)?;
    }
    Ok(())
}
