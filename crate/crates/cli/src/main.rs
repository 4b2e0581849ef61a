//! `elltwo`: JSON-in, JSON-out front end for the laboratory.
//!
//! Exit codes: 0 success, 1 law violation or failed check, 2 invalid input
//! or parse error, 3 numerical failure. Results go to stdout as JSON;
//! diagnostics go to stderr. Identical arguments and input files produce
//! byte-identical output.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;

use elltwo::factorize::{self, PolarFlavor, PolarSide};
use elltwo::hilb;
use elltwo::inversecat::{self, Presentation};
use elltwo::lawlab;
use elltwo::ltwo::{self, PreservationLaw};
use elltwo::pinj::{self, ChainDiagram, FiniteSet, PartialInjection};
use elltwo::{Error, Matrix64};

const EXIT_FAILED_CHECK: u8 = 1;
const EXIT_INVALID_INPUT: u8 = 2;
const EXIT_NUMERICAL: u8 = 3;

#[derive(Parser)]
#[command(name = "elltwo", version, about = "Partial injections, Hilbert spaces, and the functor between them")]
struct Cli {
    /// Tolerance override for numerical judgments (default: relative 1e-9)
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Operations in the category of finite sets and partial injections
    Pinj {
        #[command(subcommand)]
        command: PinjCommand,
    },
    /// The functor itself: dimensions, matrices, preservation checks
    Ltwo {
        #[command(subcommand)]
        command: LtwoCommand,
    },
    /// Operator-level constructions on complex matrices
    Hilb {
        #[command(subcommand)]
        command: HilbCommand,
    },
    /// Inverse-category presentations and the Wagner-Preston embedding
    Embed {
        #[command(subcommand)]
        command: EmbedCommand,
    },
    /// Seeded property suites
    Laws {
        #[command(subcommand)]
        command: LawsCommand,
    },
    /// Executable counterexamples
    Demo {
        #[command(subcommand)]
        command: DemoCommand,
    },
}

#[derive(Subcommand)]
enum PinjCommand {
    /// Composite g . f (f applied first)
    Compose {
        #[arg(short)]
        f: PathBuf,
        #[arg(short)]
        g: PathBuf,
    },
    /// Relational converse f^dag
    Dagger {
        #[arg(short)]
        f: PathBuf,
    },
    /// Monoidal product f (x) g on Cartesian products
    Tensor {
        #[arg(short)]
        f: PathBuf,
        #[arg(short)]
        g: PathBuf,
    },
    /// Disjoint union f (+) g
    Oplus {
        #[arg(short)]
        f: PathBuf,
        #[arg(short)]
        g: PathBuf,
    },
    /// Equalizer of a parallel pair
    Equalizer {
        #[arg(short)]
        f: PathBuf,
        #[arg(short)]
        g: PathBuf,
    },
    /// Colimit of a finite chain diagram
    Colimit {
        /// Chain JSON: {"stages": [...], "links": [...]}
        #[arg(short)]
        chain: PathBuf,
    },
    /// Supremum of a directed family of parallel morphisms
    Sup {
        /// Morphism files, at least one
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
}

#[derive(Subcommand)]
enum LtwoCommand {
    /// Dimension of the image of a finite set
    Dim {
        #[arg(short)]
        x: PathBuf,
    },
    /// Matrix image of a partial injection
    Matrix {
        #[arg(short)]
        f: PathBuf,
    },
    /// Check one preservation law on concrete morphisms
    Verify {
        #[arg(long)]
        law: String,
        #[arg(short)]
        f: PathBuf,
        #[arg(short)]
        g: Option<PathBuf>,
    },
    /// Decide whether a matrix is the image of a partial injection
    BasisCheck {
        #[arg(short)]
        m: PathBuf,
        #[arg(short)]
        x: PathBuf,
        #[arg(short)]
        y: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Clone, Copy, ValueEnum)]
enum FlavorArg {
    KernelMatched,
    Strong,
}

#[derive(Subcommand)]
enum HilbCommand {
    /// Polar decomposition of a matrix
    Polar {
        #[arg(short)]
        m: PathBuf,
        #[arg(long, value_enum, default_value = "right")]
        side: SideArg,
        #[arg(long, value_enum, default_value = "kernel-matched")]
        flavor: FlavorArg,
    },
    /// Essential fullness: factor any matrix as v . l2(f) . u
    Factorize {
        #[arg(short)]
        m: PathBuf,
    },
    /// Factor a partial isometry as v . l2(f) . u with u, v unitary
    IsometryFactor {
        #[arg(short)]
        m: PathBuf,
    },
    /// Operator classification predicates
    Classify {
        #[arg(short)]
        m: PathBuf,
    },
    /// Orthonormal basis of the equalizer of a parallel pair
    Equalizer {
        #[arg(short)]
        m: PathBuf,
        #[arg(short)]
        n: PathBuf,
    },
    /// Inverse of a positive definite matrix
    Inverse {
        #[arg(short)]
        m: PathBuf,
    },
    /// Diagonal fill-in of a positive/partial-isometry square
    FillIn {
        #[arg(short)]
        l: PathBuf,
        #[arg(short)]
        r: PathBuf,
        #[arg(long)]
        top: PathBuf,
        #[arg(long)]
        bottom: PathBuf,
    },
    /// Partial-isometry chain composing to a small-norm matrix
    Chain {
        #[arg(short)]
        m: PathBuf,
    },
}

#[derive(Subcommand)]
enum EmbedCommand {
    /// Check the inverse-category laws of a presentation
    Validate {
        #[arg(short)]
        p: PathBuf,
    },
    /// Wagner-Preston embedding into partial injections
    Wp {
        #[arg(short)]
        p: PathBuf,
    },
    /// Build the embedding and verify functoriality, dagger, faithfulness
    Check {
        #[arg(short)]
        p: PathBuf,
    },
}

#[derive(Subcommand)]
enum LawsCommand {
    /// Run a named seeded suite
    Run {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        cases: u64,
        #[arg(long, default_value_t = 6)]
        max_size: usize,
    },
}

#[derive(Subcommand)]
enum DemoCommand {
    /// Equalizers are not preserved by the functor
    Equalizer,
    /// Exhaustive refutation of binary coproduct candidates
    Coproduct {
        /// Finite-set JSON for the left object (default: one singleton)
        #[arg(short)]
        x: Option<PathBuf>,
        /// Finite-set JSON for the right object (default: one singleton)
        #[arg(short)]
        y: Option<PathBuf>,
        #[arg(long, default_value_t = 3)]
        bound: usize,
    },
    /// Partial isometries are not closed under composition
    IsometryComposition {
        #[arg(long)]
        theta: f64,
    },
    /// Cotuple norms grow without bound
    NormGrowth {
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
    /// A dense-range monic epi that is no isomorphism, truncated
    DenseRange {
        #[arg(long, default_value_t = 4)]
        n: usize,
    },
    /// Kernel-complement projectors need not commute
    Restriction,
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("cannot parse {}: {e}", path.display()))
}

fn emit<T: Serialize>(value: &T) -> ExitCode {
    match serde_json::to_string_pretty(value) {
        Ok(text) => {
            // a closed pipe on the reading side is not our failure
            use std::io::Write;
            let _ = writeln!(std::io::stdout(), "{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("serialization failed: {e}");
            ExitCode::from(EXIT_NUMERICAL)
        }
    }
}

/// Emit a report whose pass/fail status decides the exit code.
fn emit_checked<T: Serialize>(value: &T, passed: bool) -> ExitCode {
    match serde_json::to_string_pretty(value) {
        Ok(text) => {
            use std::io::Write;
            let _ = writeln!(std::io::stdout(), "{text}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAILED_CHECK)
            }
        }
        Err(e) => {
            eprintln!("serialization failed: {e}");
            ExitCode::from(EXIT_NUMERICAL)
        }
    }
}

fn error_exit(e: Error) -> ExitCode {
    eprintln!("{e}");
    let code = match e {
        Error::Numerical(_) => EXIT_NUMERICAL,
        Error::Directedness(_) | Error::Consistency(_) => EXIT_FAILED_CHECK,
        _ => EXIT_INVALID_INPUT,
    };
    ExitCode::from(code)
}

fn parse_exit(message: String) -> ExitCode {
    eprintln!("{message}");
    ExitCode::from(EXIT_INVALID_INPUT)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let tol = cli.tol;
    match cli.command {
        Command::Pinj { command } => run_pinj(command),
        Command::Ltwo { command } => run_ltwo(command, tol),
        Command::Hilb { command } => run_hilb(command, tol),
        Command::Embed { command } => run_embed(command),
        Command::Laws { command } => run_laws(command),
        Command::Demo { command } => run_demo(command),
    }
}

macro_rules! parse {
    ($path:expr) => {
        match read_json(&$path) {
            Ok(v) => v,
            Err(message) => return parse_exit(message),
        }
    };
}

macro_rules! attempt {
    ($expr:expr) => {
        match $expr {
            Ok(v) => v,
            Err(e) => return error_exit(e),
        }
    };
}

fn run_pinj(command: PinjCommand) -> ExitCode {
    match command {
        PinjCommand::Compose { f, g } => {
            let f: PartialInjection = parse!(f);
            let g: PartialInjection = parse!(g);
            emit(&attempt!(pinj::compose(&g, &f)))
        }
        PinjCommand::Dagger { f } => {
            let f: PartialInjection = parse!(f);
            emit(&pinj::dagger(&f))
        }
        PinjCommand::Tensor { f, g } => {
            let f: PartialInjection = parse!(f);
            let g: PartialInjection = parse!(g);
            emit(&pinj::tensor(&f, &g))
        }
        PinjCommand::Oplus { f, g } => {
            let f: PartialInjection = parse!(f);
            let g: PartialInjection = parse!(g);
            emit(&pinj::oplus(&f, &g))
        }
        PinjCommand::Equalizer { f, g } => {
            let f: PartialInjection = parse!(f);
            let g: PartialInjection = parse!(g);
            let (object, morphism) = attempt!(pinj::equalizer(&f, &g));
            emit(&serde_json::json!({ "object": object, "morphism": morphism }))
        }
        PinjCommand::Colimit { chain } => {
            let chain: ChainDiagram = parse!(chain);
            let (colimit, cocone) = attempt!(pinj::chain_colimit(&chain));
            emit(&serde_json::json!({ "colimit": colimit, "cocone": cocone }))
        }
        PinjCommand::Sup { files } => {
            let mut family = Vec::new();
            for file in files {
                family.push(parse!(file));
            }
            emit(&attempt!(pinj::sup(&family)))
        }
    }
}

fn run_ltwo(command: LtwoCommand, tol: Option<f64>) -> ExitCode {
    match command {
        LtwoCommand::Dim { x } => {
            let x: FiniteSet = parse!(x);
            emit(&serde_json::json!({ "dim": ltwo::ltwo_object(&x) }))
        }
        LtwoCommand::Matrix { f } => {
            let f: PartialInjection = parse!(f);
            emit(&ltwo::ltwo_morphism::<f64>(&f).matrix)
        }
        LtwoCommand::Verify { law, f, g } => {
            let law = attempt!(PreservationLaw::parse(&law));
            let f: PartialInjection = parse!(f);
            let g: Option<PartialInjection> = match g {
                Some(path) => Some(parse!(path)),
                None => None,
            };
            let report = attempt!(ltwo::verify_preservation::<f64>(law, &f, g.as_ref()));
            let passed = report.pass;
            emit_checked(&report, passed)
        }
        LtwoCommand::BasisCheck { m, x, y } => {
            let m: Matrix64 = parse!(m);
            let x: FiniteSet = parse!(x);
            let y: FiniteSet = parse!(y);
            let recovered = attempt!(ltwo::pinj_from_matrix(&m, &x, &y, tol));
            emit(&serde_json::json!({
                "basis_preserving": recovered.is_some(),
                "morphism": recovered,
            }))
        }
    }
}

fn run_hilb(command: HilbCommand, tol: Option<f64>) -> ExitCode {
    match command {
        HilbCommand::Polar { m, side, flavor } => {
            let m: Matrix64 = parse!(m);
            let side = match side {
                SideArg::Left => PolarSide::Left,
                SideArg::Right => PolarSide::Right,
            };
            let flavor = match flavor {
                FlavorArg::KernelMatched => PolarFlavor::KernelMatched,
                FlavorArg::Strong => PolarFlavor::Strong,
            };
            emit(&attempt!(factorize::polar(&m, side, flavor, tol)))
        }
        HilbCommand::Factorize { m } => {
            let m: Matrix64 = parse!(m);
            emit(&attempt!(factorize::essential_full_factor(&m, tol)))
        }
        HilbCommand::IsometryFactor { m } => {
            let m: Matrix64 = parse!(m);
            emit(&attempt!(factorize::isometry_factor(&m, tol)))
        }
        HilbCommand::Classify { m } => {
            let m: Matrix64 = parse!(m);
            emit(&attempt!(hilb::classify(&m, tol)))
        }
        HilbCommand::Equalizer { m, n } => {
            let m: Matrix64 = parse!(m);
            let n: Matrix64 = parse!(n);
            emit(&attempt!(hilb::equalizer(&m, &n)))
        }
        HilbCommand::Inverse { m } => {
            let m: Matrix64 = parse!(m);
            emit(&attempt!(hilb::positive_inverse(&m, tol)))
        }
        HilbCommand::FillIn { l, r, top, bottom } => {
            let l: Matrix64 = parse!(l);
            let r: Matrix64 = parse!(r);
            let top: Matrix64 = parse!(top);
            let bottom: Matrix64 = parse!(bottom);
            emit(&attempt!(factorize::diagonal_fill_in(
                &l, &r, &top, &bottom, tol
            )))
        }
        HilbCommand::Chain { m } => {
            let m: Matrix64 = parse!(m);
            let factors = attempt!(factorize::finite_rank_chain(&m, tol));
            emit(&serde_json::json!({ "factors": factors }))
        }
    }
}

fn run_embed(command: EmbedCommand) -> ExitCode {
    match command {
        EmbedCommand::Validate { p } => {
            let p: Presentation = parse!(p);
            let report = inversecat::validate(&p);
            let passed = report.passed();
            emit_checked(&report, passed)
        }
        EmbedCommand::Wp { p } => {
            let p: Presentation = parse!(p);
            emit(&attempt!(inversecat::wagner_preston(&p)))
        }
        EmbedCommand::Check { p } => {
            let p: Presentation = parse!(p);
            let emb = attempt!(inversecat::wagner_preston(&p));
            let report = attempt!(inversecat::check_embedding(&p, &emb));
            let passed = report.passed();
            emit_checked(&report, passed)
        }
    }
}

fn run_laws(command: LawsCommand) -> ExitCode {
    match command {
        LawsCommand::Run {
            suite,
            seed,
            cases,
            max_size,
        } => {
            let report = attempt!(lawlab::run_suite(&suite, seed, cases, max_size));
            let passed = report.passed();
            emit_checked(&report, passed)
        }
    }
}

fn run_demo(command: DemoCommand) -> ExitCode {
    match command {
        DemoCommand::Equalizer => emit(&attempt!(lawlab::demo_equalizer_nonpreservation())),
        DemoCommand::Coproduct { x, y, bound } => {
            let singleton = |label: &str| {
                FiniteSet::new([label]).expect("singleton labels are distinct")
            };
            let x = match x {
                Some(path) => parse!(path),
                None => singleton("x"),
            };
            let y = match y {
                Some(path) => parse!(path),
                None => singleton("y"),
            };
            emit(&attempt!(lawlab::search_binary_coproduct(&x, &y, bound)))
        }
        DemoCommand::IsometryComposition { theta } => {
            emit(&attempt!(lawlab::demo_isometry_composition(theta)))
        }
        DemoCommand::NormGrowth { n } => emit(&attempt!(lawlab::demo_unbounded_cotuple(n))),
        DemoCommand::DenseRange { n } => emit(&attempt!(lawlab::demo_dense_range_noniso(n))),
        DemoCommand::Restriction => emit(&attempt!(lawlab::demo_restriction_failure())),
    }
}
