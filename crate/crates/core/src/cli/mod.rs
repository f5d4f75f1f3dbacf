//! The `bredim` command line: argument parsing, dispatch, and exit codes.
//!
//! | code | meaning |
//! |------|---------|
//! | 0    | success |
//! | 1    | a `verify` suite found a failure |
//! | 2    | invalid input (parse error, broken precondition) |
//! | 3    | parameters outside the range where a formula is known |
//! | 64   | usage error |

mod report;

use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::dims::{self, DimsError};
use crate::gog::{self, GogError};
use crate::homology::HomologyError;
use crate::lattice::{self, IntMatrix, LatticeError, Sublattice};
use crate::raag::{self, RaagError};
use crate::verify::{self, Fault, Scale, Suite};

pub use report::{Format, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_OUT_OF_RANGE: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

/// Environment variable overriding the default `verify` seed.
pub const SEED_ENV: &str = "BREDIM_SEED";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    OutOfRange(String),
    #[error("verification failed")]
    VerifyFailed,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Input(_) => EXIT_INPUT,
            CliError::OutOfRange(_) => EXIT_OUT_OF_RANGE,
            CliError::VerifyFailed => EXIT_VERIFY_FAILED,
        }
    }
}

impl From<LatticeError> for CliError {
    fn from(e: LatticeError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<HomologyError> for CliError {
    fn from(e: HomologyError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<RaagError> for CliError {
    fn from(e: RaagError) -> Self {
        match e {
            RaagError::OutOfRange { .. } => CliError::OutOfRange(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<DimsError> for CliError {
    fn from(e: DimsError) -> Self {
        match e {
            DimsError::OutOfRange(_) => CliError::OutOfRange(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<GogError> for CliError {
    fn from(e: GogError) -> Self {
        match e {
            GogError::Dims(d) => d.into(),
            _ => CliError::Input(e.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "bredim",
    version,
    about = "Dimensions of classifying spaces for families of virtually abelian subgroups"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sublattices of Z^n: normal forms, saturation, index, complements.
    #[command(subcommand)]
    Lattice(LatticeCmd),
    /// Right-angled Artin groups from graphs.
    #[command(subcommand)]
    Raag(RaagCmd),
    /// Closed-form dimension values and derivations.
    #[command(subcommand)]
    Dims(DimsCmd),
    /// Graphs of groups with virtually abelian vertex groups.
    #[command(subcommand)]
    Gog(GogCmd),
    /// Cross-check the library against brute-force oracles.
    Verify(VerifyArgs),
}

/// Lattice files: blocks of `n r` followed by `r` rows of `n` integers.
/// Use `-` to read standard input.
#[derive(Debug, Args)]
pub struct LatticeFiles {
    #[arg(required = true)]
    pub files: Vec<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum LatticeCmd {
    /// Hermite normal form H = U·M of the generator matrix.
    Hnf(LatticeFiles),
    /// Smith normal form D = S·M·T of the generator matrix.
    Snf(LatticeFiles),
    /// Smallest direct summand containing the lattice.
    Saturate(LatticeFiles),
    /// Index of the first lattice in the second.
    Index(LatticeFiles),
    /// Whether two lattices are commensurable.
    Commensurable(LatticeFiles),
    /// A complement N with L ⊕ N = Z^n.
    Complement(LatticeFiles),
    /// A unimodular matrix carrying the first lattice onto the second.
    MapAuto(LatticeFiles),
}

#[derive(Debug, Args)]
pub struct GraphFile {
    /// Edge list ("V E" then "u v" lines) or DIMACS; `-` for standard input.
    pub file: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum RaagCmd {
    /// Clique counts by size and the maximal cliques.
    Cliques {
        #[command(flatten)]
        graph: GraphFile,
        /// List every clique, not just the maximal ones.
        #[arg(long)]
        all: bool,
    },
    /// Cohomological dimension of the RAAG.
    Cd(GraphFile),
    /// Dimension for the family F_k.
    Gd {
        #[arg(long)]
        k: u64,
        #[command(flatten)]
        graph: GraphFile,
    },
    /// Cell counts of the Salvetti complex.
    Salvetti {
        #[command(flatten)]
        graph: GraphFile,
        /// Also compute integral cohomology in every degree.
        #[arg(long)]
        cohomology: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum DimsCmd {
    /// Virtually Z^n groups.
    Vab {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
    },
    /// Braid groups on n strands.
    Braid {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        /// The pure braid group.
        #[arg(long)]
        pure: bool,
    },
    /// Lower bound for Out(F_n).
    OutFn {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
    },
    /// Lower bound for Out of the RAAG on a string of d diamonds.
    OutDiamonds {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        k: u64,
    },
    /// Derive the upper bound n + k for Z^n step by step.
    DeriveZn {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        /// Print the derivation tree.
        #[arg(long)]
        tree: bool,
    },
}

#[derive(Debug, Args)]
pub struct GogArgs {
    #[arg(long)]
    pub k: u64,
    /// Graph-of-groups description; `-` for standard input.
    pub file: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum GogCmd {
    /// Exact dimension when the formula applies, bounds otherwise.
    Gd(GogArgs),
    /// Two-sided bounds from the coned-off Bass–Serre tree.
    Bounds(GogArgs),
    /// Cell classes of the coned-off tree and their stabilizers.
    Census(GogArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Lattice,
    Raag,
    Homology,
    Dims,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Lattice => Suite::Lattice,
            SuiteArg::Raag => Suite::Raag,
            SuiteArg::Homology => Suite::Homology,
            SuiteArg::Dims => Suite::Dims,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: SuiteArg,
    /// Random seed; defaults to $BREDIM_SEED, then a fixed value.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Replace one operation with a known-wrong version.
    #[arg(long, hide = true)]
    pub inject_fault: Option<String>,
}

/// What a run printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the CLI on `args` (without the program name). `stdin` is read only
/// when an input file is `-`.
pub fn run(args: &[String], stdin: &mut dyn Read) -> Outcome {
    let argv = std::iter::once("bredim".to_string()).chain(args.iter().cloned());
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let mut ctx = Context {
        stdin,
        stdin_text: None,
        inputs: Vec::new(),
    };
    match dispatch(&cli.command, args, &mut ctx) {
        Ok(report) => Outcome {
            code: EXIT_OK,
            stdout: report.render(cli.format),
            stderr: String::new(),
        },
        Err((e, report)) => {
            let stdout = report.map(|r| r.render(cli.format)).unwrap_or_default();
            let stderr = match &e {
                CliError::VerifyFailed => String::new(),
                other => format!("error: {other}\n"),
            };
            Outcome {
                code: e.exit_code(),
                stdout,
                stderr,
            }
        }
    }
}

struct Context<'a> {
    stdin: &'a mut dyn Read,
    stdin_text: Option<String>,
    inputs: Vec<String>,
}

impl Context<'_> {
    fn read(&mut self, path: &PathBuf) -> Result<String, CliError> {
        let text = if path.as_os_str() == "-" {
            if self.stdin_text.is_none() {
                let mut s = String::new();
                self.stdin
                    .read_to_string(&mut s)
                    .map_err(|e| CliError::Input(format!("reading standard input: {e}")))?;
                self.stdin_text = Some(s);
            }
            self.stdin_text.clone().unwrap_or_default()
        } else {
            std::fs::read_to_string(path)
                .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?
        };
        self.inputs.push(text.clone());
        Ok(text)
    }

    fn report(&self, args: &[String]) -> Report {
        Report::new(args, &self.inputs)
    }
}

type Failure = (CliError, Option<Box<Report>>);

fn dispatch(cmd: &Command, args: &[String], ctx: &mut Context) -> Result<Report, Failure> {
    let plain = |e: CliError| (e, None);
    match cmd {
        Command::Lattice(c) => lattice_cmd(c, args, ctx).map_err(plain),
        Command::Raag(c) => raag_cmd(c, args, ctx).map_err(plain),
        Command::Dims(c) => dims_cmd(c, args).map_err(plain),
        Command::Gog(c) => gog_cmd(c, args, ctx).map_err(plain),
        Command::Verify(v) => verify_cmd(v, args),
    }
}

fn read_blocks(files: &LatticeFiles, ctx: &mut Context) -> Result<Vec<IntMatrix>, CliError> {
    let mut blocks = Vec::new();
    for f in &files.files {
        let text = ctx.read(f)?;
        blocks.extend(lattice::parse_generator_matrices(&text)?);
    }
    Ok(blocks)
}

fn exactly<const N: usize>(blocks: Vec<IntMatrix>, what: &str) -> Result<[IntMatrix; N], CliError> {
    let found = blocks.len();
    blocks
        .try_into()
        .map_err(|_| CliError::Input(format!("{what} needs {N} lattice block(s), found {found}")))
}

fn lattice_from(m: &IntMatrix) -> Sublattice {
    Sublattice::from_matrix(m)
}

fn lattice_cmd(cmd: &LatticeCmd, args: &[String], ctx: &mut Context) -> Result<Report, CliError> {
    match cmd {
        LatticeCmd::Hnf(f) => {
            let [m] = exactly::<1>(read_blocks(f, ctx)?, "hnf")?;
            let form = lattice::hermite_decomposition(&m);
            let mut r = ctx.report(args);
            r.value("rank", form.rank());
            r.block("H", form.h.to_string());
            r.block("U", form.u.to_string());
            Ok(r)
        }
        LatticeCmd::Snf(f) => {
            let [m] = exactly::<1>(read_blocks(f, ctx)?, "snf")?;
            let form = lattice::smith_normal_form(&m);
            let factors: Vec<String> = form
                .invariant_factors()
                .iter()
                .map(ToString::to_string)
                .collect();
            let mut r = ctx.report(args);
            r.value("rank", form.rank());
            r.value("invariant_factors", factors.join(" "));
            r.block("D", form.d.to_string());
            r.block("S", form.s.to_string());
            r.block("T", form.t.to_string());
            Ok(r)
        }
        LatticeCmd::Saturate(f) => {
            let [m] = exactly::<1>(read_blocks(f, ctx)?, "saturate")?;
            let l = lattice_from(&m);
            let s = l.saturation();
            let mut r = ctx.report(args);
            r.block("", lattice::format_lattice(&s));
            r.value("index", l.saturation_index());
            Ok(r)
        }
        LatticeCmd::Index(f) => {
            let [a, b] = exactly::<2>(read_blocks(f, ctx)?, "index")?;
            let idx = lattice_from(&a).index_in(&lattice_from(&b))?;
            let mut r = ctx.report(args);
            r.value("index", idx);
            Ok(r)
        }
        LatticeCmd::Commensurable(f) => {
            let [a, b] = exactly::<2>(read_blocks(f, ctx)?, "commensurable")?;
            let (l, k) = (lattice_from(&a), lattice_from(&b));
            let c = l.commensurable(&k)?;
            let mut r = ctx.report(args);
            r.value("commensurable", c);
            r.value("intersection_rank", l.intersect(&k)?.rank());
            Ok(r)
        }
        LatticeCmd::Complement(f) => {
            let [m] = exactly::<1>(read_blocks(f, ctx)?, "complement")?;
            let n = lattice_from(&m).direct_complement()?;
            let mut r = ctx.report(args);
            r.block("", lattice::format_lattice(&n));
            Ok(r)
        }
        LatticeCmd::MapAuto(f) => {
            let [a, b] = exactly::<2>(read_blocks(f, ctx)?, "map-auto")?;
            let m = lattice_from(&a).mapping_automorphism(&lattice_from(&b))?;
            let mut r = ctx.report(args);
            r.value("det", m.determinant());
            r.block("A", m.to_string());
            Ok(r)
        }
    }
}

fn read_graph(g: &GraphFile, ctx: &mut Context) -> Result<raag::SimpleGraph, CliError> {
    let text = ctx.read(&g.file)?;
    Ok(raag::parse_graph(&text)?)
}

fn clique_lines(cliques: &[Vec<usize>]) -> String {
    cliques
        .iter()
        .map(|c| {
            c.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        })
        .map(|l| l + "\n")
        .collect()
}

fn raag_cmd(cmd: &RaagCmd, args: &[String], ctx: &mut Context) -> Result<Report, CliError> {
    match cmd {
        RaagCmd::Cliques { graph, all } => {
            let g = read_graph(graph, ctx)?;
            let t = raag::cliques(&g);
            let counts: Vec<String> = t.counts().iter().map(ToString::to_string).collect();
            let mut r = ctx.report(args);
            r.value("clique_number", t.clique_number());
            r.value("counts", counts.join(" "));
            if *all {
                for k in 1..=t.clique_number() {
                    r.block(&format!("size_{k}"), clique_lines(t.of_size(k)));
                }
            } else {
                r.block("maximal", clique_lines(&raag::maximal_cliques(&g)));
            }
            Ok(r)
        }
        RaagCmd::Cd(graph) => {
            let g = read_graph(graph, ctx)?;
            let mut r = ctx.report(args);
            r.fact("cd", &raag::cd_raag(&g));
            Ok(r)
        }
        RaagCmd::Gd { k, graph } => {
            let g = read_graph(graph, ctx)?;
            let fact = raag::gd_fk_raag(&g, *k)?;
            let mut r = ctx.report(args);
            r.fact("gd", &fact);
            Ok(r)
        }
        RaagCmd::Salvetti { graph, cohomology } => {
            let g = read_graph(graph, ctx)?;
            let s = raag::salvetti_complex(&g);
            let counts: Vec<String> = s.cell_counts().iter().map(ToString::to_string).collect();
            let mut r = ctx.report(args);
            r.value("dimension", s.top_degree());
            r.value("cells", counts.join(" "));
            if *cohomology {
                for k in 0..=s.top_degree() {
                    r.value(&format!("H^{k}"), s.cohomology(k)?);
                }
                r.cite(crate::dims::citations::RAAG_TORUS);
            }
            Ok(r)
        }
    }
}

fn dims_cmd(cmd: &DimsCmd, args: &[String]) -> Result<Report, CliError> {
    let mut r = Report::new(args, &[]);
    match *cmd {
        DimsCmd::Vab { n, k } => r.fact("gd", &dims::virtually_abelian_gd(n, k)?),
        DimsCmd::Braid { n, k, pure } => {
            r.fact("gd", &dims::braid_gd(n, k, pure)?);
            r.cite(dims::citations::BRAID_VCD);
        }
        DimsCmd::OutFn { n, k } => r.fact("gd", &dims::out_fn_lower(n, k)?),
        DimsCmd::OutDiamonds { d, k } => r.fact("gd", &dims::out_diamonds_lower(d, k)?),
        DimsCmd::DeriveZn { n, k, tree } => {
            let (bound, derivation) = dims::derive_zn_upper(n, k)?;
            r.bound("gd", bound);
            r.value("nodes", derivation.node_count());
            r.value("induction_depth", derivation.induction_depth());
            let sound = derivation.recheck().is_ok();
            r.value("sound", sound);
            cite_tree(&mut r, &derivation);
            if tree {
                r.tree(derivation.render_tree(), derivation.render_structured());
            }
        }
    }
    Ok(r)
}

fn cite_tree(r: &mut Report, d: &dims::Derivation) {
    r.cite(d.citation);
    for p in &d.premises {
        cite_tree(r, p);
    }
}

fn gog_cmd(cmd: &GogCmd, args: &[String], ctx: &mut Context) -> Result<Report, CliError> {
    let (GogCmd::Gd(a) | GogCmd::Bounds(a) | GogCmd::Census(a)) = cmd;
    let text = ctx.read(&a.file)?;
    let y = gog::parse_gog(&text)?;
    let mut r = ctx.report(args);
    r.value("m", y.max_vertex_rank());
    match cmd {
        GogCmd::Gd(_) => {
            let res = gog::gog_gd(&y, a.k)?;
            r.value("exact", res.exact);
            r.fact("gd", &res.fact);
            for d in &res.diagnostics {
                r.note(format!("formula not applicable: {d}"));
            }
        }
        GogCmd::Bounds(_) => {
            let b = gog::bass_serre_bounds(&y, a.k)?;
            r.bound("gd", b.bound);
            r.cite(crate::dims::citations::GOG_BOUNDS);
            for t in &b.terms {
                r.bound(&t.quantity, t.bound);
                r.cite(t.citation);
            }
        }
        GogCmd::Census(_) => {
            let c = gog::cell_census(&y, a.k)?;
            r.block("cells", c.render());
            r.value("well_formed", c.is_well_formed());
        }
    }
    Ok(r)
}

fn verify_cmd(v: &VerifyArgs, args: &[String]) -> Result<Report, Failure> {
    let input = |m: String| (CliError::Input(m), None);
    let seed = match v.seed {
        Some(s) => s,
        None => match std::env::var(SEED_ENV) {
            Ok(s) => s
                .trim()
                .parse()
                .map_err(|_| input(format!("{SEED_ENV}={s:?} is not a u64")))?,
            Err(_) => verify::DEFAULT_SEED,
        },
    };
    let imp = match &v.inject_fault {
        Some(name) => verify::Implementations::with_fault(name.parse::<Fault>().map_err(input)?),
        None => verify::Implementations::library(),
    };
    let reports = verify::run(v.suite.into(), seed, &imp, Scale::default());
    let mut r = Report::new(args, &[]);
    r.value("seed", seed);
    let mut passed = true;
    for s in &reports {
        for c in &s.checks {
            let key = format!("{}.{}", s.suite.name(), c.name);
            let status = if c.passed() { "pass" } else { "FAIL" };
            r.value(
                &key,
                format!("{status} instances={} failures={}", c.instances, c.failures),
            );
            for e in &c.examples {
                r.note(format!("{key}: {e}"));
            }
            passed &= c.passed();
        }
    }
    r.value("result", if passed { "pass" } else { "FAIL" });
    if passed {
        Ok(r)
    } else {
        Err((CliError::VerifyFailed, Some(Box::new(r))))
    }
}
