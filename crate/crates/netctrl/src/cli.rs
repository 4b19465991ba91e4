//! Argument parsing and subcommand dispatch.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use netctrl_core::control::DEFAULT_LIE_ORDER_CAP;
use netctrl_core::verify::{
    reference_examples, sweep_equivalence, sweep_zfs_implication, SubsetPolicy, SweepConfig,
    DEFAULT_SAMPLED_GRAPHS,
};
use netctrl_core::zero_forcing::{min_zfs_with_cap, DEFAULT_MIN_ZFS_ORDER_CAP};
use netctrl_core::{
    analyze_with, closure, EdgeProbability, Family, Graph, Limits, MatrixKind, PatternMatrix,
};

use crate::formats::{self, FormatError};
use crate::report::{
    ExamplesReport, MinimumZfsReport, OutputFormat, Render, VerifyReport, ZfsReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_EXPECTATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

/// Overrides both the Lie closure and the minimum zero forcing order caps.
pub const MAX_ORDER_ENV: &str = "NETCTRL_MAX_ORDER";

#[derive(Debug, Parser)]
#[command(
    name = "netctrl",
    version,
    about = "Zero forcing, Kalman and Lie-algebraic controllability on networks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Close a vertex set under the color change rule, or find a minimum zero forcing set.
    Zfs(ZfsArgs),
    /// Report Kalman rank, span P(A,Z) and Lie algebra dimension for one instance.
    Analyze(AnalyzeArgs),
    /// Sweep graphs, matrix kinds and control sets for consistency violations.
    Verify(VerifyArgs),
    /// Recompute the three worked examples.
    Examples(OutputArgs),
    /// Write a generated graph as an edge list or DOT.
    Generate(GenerateArgs),
    /// Convert an edge-list file to DOT.
    Dot {
        #[arg(long)]
        graph: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output format; defaults to json when --out ends in .json.
    #[arg(long = "report", value_enum)]
    pub format: Option<OutputFormat>,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl OutputArgs {
    fn format(&self) -> OutputFormat {
        self.format.unwrap_or_else(|| match &self.out {
            Some(p) if p.extension().is_some_and(|e| e == "json") => OutputFormat::Json,
            _ => OutputFormat::Text,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ZfsExpectation {
    Zfs,
    NotZfs,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("target").required(true).args(["set", "minimum"])))]
pub struct ZfsArgs {
    #[arg(long)]
    pub graph: PathBuf,
    /// Comma-separated 1-based labels, e.g. 1,3,5.
    #[arg(long)]
    pub set: Option<String>,
    #[arg(long)]
    pub minimum: bool,
    #[arg(long, value_enum, requires = "set")]
    pub expect: Option<ZfsExpectation>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ControlExpectation {
    Controllable,
    NotControllable,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("source").required(true).multiple(true).args(["graph", "matrix_file"])))]
pub struct AnalyzeArgs {
    #[arg(long)]
    pub graph: Option<PathBuf>,
    #[arg(long)]
    pub set: String,
    /// adjacency, laplacian or random:SEED.
    #[arg(long, default_value = "adjacency", value_parser = parse_kind)]
    pub matrix: MatrixKind,
    /// Explicit symmetric matrix; its off-diagonal pattern defines the graph.
    #[arg(long)]
    pub matrix_file: Option<PathBuf>,
    /// Checked against Lie-algebraic (quantum) controllability.
    #[arg(long, value_enum)]
    pub expect: Option<ControlExpectation>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub max_order: usize,
    /// Comma-separated matrix kinds.
    #[arg(long, default_value = "adjacency,laplacian", value_delimiter = ',', value_parser = parse_kind)]
    pub kinds: Vec<MatrixKind>,
    /// all, singletons, zfs or random:K:SEED.
    #[arg(long, default_value = "all", value_parser = parse_policy)]
    pub subsets: SubsetPolicy,
    /// Seed for the random graphs drawn above order 5.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Random graphs drawn per order above 5.
    #[arg(long, default_value_t = DEFAULT_SAMPLED_GRAPHS)]
    pub samples: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GeneratedFamily {
    Path,
    Cycle,
    Complete,
    Random,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long, value_enum)]
    pub family: GeneratedFamily,
    #[arg(long)]
    pub order: usize,
    /// Edge probability for random graphs, as p or num/den.
    #[arg(long, default_value = "1/2", value_parser = parse_probability)]
    pub p: EdgeProbability,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub dot: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_kind(s: &str) -> Result<MatrixKind, String> {
    s.parse().map_err(|e: netctrl_core::Error| e.to_string())
}

fn parse_policy(s: &str) -> Result<SubsetPolicy, String> {
    s.parse().map_err(|e: netctrl_core::Error| e.to_string())
}

fn parse_probability(s: &str) -> Result<EdgeProbability, String> {
    let (num, den) = s.split_once('/').unwrap_or((s, "1"));
    let num = num
        .trim()
        .parse()
        .map_err(|_| format!("bad numerator in {s:?}"))?;
    let den = den
        .trim()
        .parse()
        .map_err(|_| format!("bad denominator in {s:?}"))?;
    EdgeProbability::new(num, den).map_err(|e| e.to_string())
}

/// Anything that ends a run early with exit code 2.
#[derive(Debug, thiserror::Error)]
enum InputError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Format { path: PathBuf, source: FormatError },
    #[error(transparent)]
    Set(FormatError),
    #[error(transparent)]
    Core(#[from] netctrl_core::Error),
    #[error("{0}")]
    Other(String),
}

struct Caps {
    limits: Limits,
    zfs_order_cap: usize,
}

fn caps(stderr: &mut dyn Write) -> Result<Caps, InputError> {
    let Some(raw) = std::env::var_os(MAX_ORDER_ENV) else {
        return Ok(Caps {
            limits: Limits::default(),
            zfs_order_cap: DEFAULT_MIN_ZFS_ORDER_CAP,
        });
    };
    let cap: usize = raw
        .to_str()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&c| c >= 1)
        .ok_or_else(|| InputError::Other(format!("{MAX_ORDER_ENV} must be a positive integer")))?;
    let _ = writeln!(
        stderr,
        "warning: {MAX_ORDER_ENV}={cap} replaces the order caps (Lie closure {DEFAULT_LIE_ORDER_CAP}, \
         minimum zero forcing {DEFAULT_MIN_ZFS_ORDER_CAP}); exact arithmetic cost grows steeply with n"
    );
    Ok(Caps {
        limits: Limits { lie_order_cap: cap },
        zfs_order_cap: cap,
    })
}

fn read(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|source| InputError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn load_graph(path: &Path) -> Result<Graph, InputError> {
    formats::parse_graph(&read(path)?).map_err(|source| InputError::Format {
        path: path.to_path_buf(),
        source,
    })
}

fn emit(text: &str, out_path: Option<&Path>, stdout: &mut dyn Write) -> Result<(), InputError> {
    match out_path {
        Some(path) => std::fs::write(path, text).map_err(|source| InputError::Io {
            path: path.to_path_buf(),
            source,
        }),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|source| InputError::Io {
                path: PathBuf::from("<stdout>"),
                source,
            }),
    }
}

/// Parses `args` (program name first) and runs the subcommand. Returns the
/// process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_INPUT,
            };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == EXIT_OK { stdout } else { stderr };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match dispatch(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn dispatch(
    command: Command,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, InputError> {
    match command {
        Command::Zfs(args) => zfs(args, stdout, stderr),
        Command::Analyze(args) => analyze(args, stdout, stderr),
        Command::Verify(args) => verify(args, stdout, stderr),
        Command::Examples(output) => {
            let report = ExamplesReport::new(reference_examples()?);
            emit(
                &report.render(output.format()),
                output.out.as_deref(),
                stdout,
            )?;
            Ok(if report.all_match {
                EXIT_OK
            } else {
                EXIT_VIOLATION
            })
        }
        Command::Generate(args) => {
            let g = match args.family {
                GeneratedFamily::Path => Graph::generate(Family::Path, args.order)?,
                GeneratedFamily::Cycle => Graph::generate(Family::Cycle, args.order)?,
                GeneratedFamily::Complete => Graph::generate(Family::Complete, args.order)?,
                GeneratedFamily::Random => Graph::random_connected(args.order, args.p, args.seed)?,
            };
            let text = if args.dot {
                formats::to_dot(&g)
            } else {
                formats::write_graph(&g)
            };
            emit(&text, args.out.as_deref(), stdout)?;
            Ok(EXIT_OK)
        }
        Command::Dot { graph } => {
            emit(&formats::to_dot(&load_graph(&graph)?), None, stdout)?;
            Ok(EXIT_OK)
        }
    }
}

fn zfs(args: ZfsArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, InputError> {
    let g = load_graph(&args.graph)?;
    let format = args.output.format();
    let out = args.output.out.as_deref();
    let Some(spec) = args.set else {
        let caps = caps(stderr)?;
        let min = min_zfs_with_cap(&g, caps.zfs_order_cap)?;
        let (_, chronicle) = closure(&g, &min.witness)?;
        let report = MinimumZfsReport {
            zero_forcing_number: min.number,
            witness: min.witness,
            chronicle,
        };
        emit(&report.render(format), out, stdout)?;
        return Ok(EXIT_OK);
    };
    let set = formats::parse_set(&spec, g.order()).map_err(InputError::Set)?;
    let (closed, chronicle) = closure(&g, &set)?;
    let report = ZfsReport {
        is_zfs: closed.is_full(),
        set,
        closure: closed,
        chronicle,
    };
    emit(&report.render(format), out, stdout)?;
    let met = match args.expect {
        None => true,
        Some(ZfsExpectation::Zfs) => report.is_zfs,
        Some(ZfsExpectation::NotZfs) => !report.is_zfs,
    };
    if !met {
        let _ = writeln!(stderr, "expectation not met: is_zfs = {}", report.is_zfs);
    }
    Ok(if met { EXIT_OK } else { EXIT_EXPECTATION })
}

fn analyze(
    args: AnalyzeArgs,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, InputError> {
    let caps = caps(stderr)?;
    let a = match (&args.matrix_file, &args.graph) {
        (Some(path), graph) => {
            let m = formats::parse_matrix(&read(path)?).map_err(|source| InputError::Format {
                path: path.clone(),
                source,
            })?;
            let a = PatternMatrix::new(m)?;
            if let Some(graph) = graph {
                if &load_graph(graph)? != a.pattern() {
                    return Err(InputError::Other(format!(
                        "{} does not match the nonzero pattern of {}",
                        graph.display(),
                        path.display()
                    )));
                }
            }
            a
        }
        (None, Some(graph)) => PatternMatrix::build(&load_graph(graph)?, args.matrix),
        (None, None) => unreachable!("clap requires --graph or --matrix-file"),
    };
    let s = formats::parse_set(&args.set, a.order()).map_err(InputError::Set)?;
    let report = analyze_with(&a, &s, &caps.limits)?;
    emit(
        &report.render(args.output.format()),
        args.output.out.as_deref(),
        stdout,
    )?;

    if !report.is_consistent() {
        for v in report.violations() {
            let _ = writeln!(stderr, "THEOREM-VIOLATION: {}", v.check);
        }
        return Ok(EXIT_VIOLATION);
    }
    let met = match args.expect {
        None => true,
        Some(ControlExpectation::Controllable) => report.lie_controllable,
        Some(ControlExpectation::NotControllable) => !report.lie_controllable,
    };
    if !met {
        let _ = writeln!(
            stderr,
            "expectation not met: lie_controllable = {}",
            report.lie_controllable
        );
    }
    Ok(if met { EXIT_OK } else { EXIT_EXPECTATION })
}

fn verify(
    args: VerifyArgs,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, InputError> {
    let caps = caps(stderr)?;
    let mut config = SweepConfig::new(args.max_order, args.kinds, args.subsets);
    config.seed = args.seed;
    config.sampled_graphs = args.samples;
    config.limits = caps.limits;
    config.validate()?;
    let equivalence = sweep_equivalence(&config)?;
    let zfs_implication = sweep_zfs_implication(&config)?;
    let report = VerifyReport::new(config, equivalence, zfs_implication);
    emit(
        &report.render(args.output.format()),
        args.output.out.as_deref(),
        stdout,
    )?;
    Ok(if report.passed {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    })
}
