//! Command-line front end: generate families, construct and verify
//! representations, run the exact oracles, benchmark, convert formats.

pub mod bench;

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use localbox::bounds::{bounds_report, BoundsReport};
use localbox::construct::{construct, Strategy, StrategyKind};
use localbox::oracle::{
    exact_boxicity, exact_local_boxicity, exact_local_dimension, exact_product_dimension,
    positive_convention, OracleLimits, Outcome,
};
use localbox::poset::{crown_local_realizer, crown_poset};
use localbox::storage::{
    from_compact, read_graph, read_poset, read_representation_json, to_compact, write_graph,
    write_poset, write_representation_json, CompactGraphRecord,
};
use localbox::{generators, verify_representation, Error, Graph};

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const VERIFY_FAILED: i32 = 1;
    pub const INPUT: i32 = 2;
    pub const ORACLE_CAP: i32 = 3;
}

#[derive(Debug, Parser)]
#[command(
    name = "localbox",
    version,
    about = "Local box representations of graphs and local realizers of posets"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a graph or poset family as a text file.
    Gen(GenArgs),
    /// Build a representation with a strategy, verify it, write JSON.
    Construct(ConstructArgs),
    /// Print the bounds report of a graph.
    Analyze(AnalyzeArgs),
    /// Check a representation JSON against a graph.
    Verify(VerifyArgs),
    /// Exact values for tiny inputs.
    Oracle(OracleArgs),
    /// Time a strategy over a size sweep; prints CSV.
    Bench(BenchArgs),
    /// Convert a representation between JSON and compact binary.
    Convert(ConvertArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Roberts,
    Crown,
    Cycle,
    Path,
    LineGraphOf,
    Gnp,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    pub family: Family,
    /// Size parameter, or the source edge list for `line-graph-of`.
    pub param: String,
    /// Edge probability for `gnp`.
    pub p: Option<f64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Also write the frequency-3 local realizer (crown only) as compact binary.
    #[arg(long)]
    pub realizer: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct StrategyFlags {
    /// One of clawfree, biclique, peel, pairwise, product, auto.
    #[arg(long, default_value = "auto")]
    pub strategy: StrategyKind,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Peel degree threshold; defaults to ceil(sqrt(m)).
    #[arg(long)]
    pub threshold: Option<usize>,
    /// Number of parts for the pairwise strategy.
    #[arg(long = "parts", default_value_t = 2)]
    pub parts: usize,
    /// Per-part degree bound for the pairwise strategy; defaults to the maximum degree.
    #[arg(long = "part-bound")]
    pub part_bound: Option<usize>,
    /// Random partition attempts for the pairwise strategy.
    #[arg(long, default_value_t = 100)]
    pub tries: usize,
    /// Vertex cap for oracle-backed work.
    #[arg(long = "limits-n", default_value_t = OracleLimits::default().max_n)]
    pub limits_n: usize,
}

impl StrategyFlags {
    pub fn limits(&self) -> OracleLimits {
        OracleLimits {
            max_n: self.limits_n,
            ..OracleLimits::default()
        }
    }

    pub fn strategy(&self, g: &Graph) -> Strategy {
        match self.strategy {
            StrategyKind::Clawfree => Strategy::Clawfree,
            StrategyKind::Biclique => Strategy::Biclique,
            StrategyKind::Peel => Strategy::Peel {
                threshold: self.threshold,
            },
            StrategyKind::Pairwise => Strategy::Pairwise {
                parts: self.parts,
                bound: self.part_bound.unwrap_or_else(|| g.max_degree()),
                tries: self.tries,
                seed: self.seed,
            },
            StrategyKind::Product => Strategy::Product {
                limits: self.limits(),
            },
            StrategyKind::Auto => Strategy::Auto,
        }
    }
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    pub input: PathBuf,
    #[command(flatten)]
    pub flags: StrategyFlags,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// One or more edge lists; one row each.
    #[arg(required = true)]
    pub inputs: Vec<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub graph: PathBuf,
    pub representation: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    /// Local boxicity of a graph.
    Lbox,
    /// Boxicity of a graph.
    Box,
    /// Product dimension of a graph.
    Product,
    /// Local dimension of a poset.
    Ldim,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    pub which: Which,
    pub input: PathBuf,
    #[arg(long = "limits-n")]
    pub limits_n: Option<usize>,
    /// Search nodes allowed before answering "unknown".
    #[arg(long)]
    pub budget: Option<u64>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Comma-separated vertex counts.
    #[arg(long, value_delimiter = ',', default_values_t = [50, 100, 200, 400])]
    pub sizes: Vec<usize>,
    /// One of clawfree, biclique, peel, auto.
    #[arg(long, default_value = "clawfree")]
    pub strategy: StrategyKind,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Timed runs per size; the minimum is reported.
    #[arg(long, default_value_t = 5)]
    pub repeats: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Json,
    Compact,
}

#[derive(Debug, Args)]
pub struct ConvertArgs {
    pub input: PathBuf,
    #[arg(long, value_enum)]
    pub to: Target,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// A failure carrying its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        CliError {
            code: exit::INPUT,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::OracleCap { .. } => exit::ORACLE_CAP,
            Error::Internal(_) => exit::VERIFY_FAILED,
            _ => exit::INPUT,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

fn read_text(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> CliResult<Graph> {
    read_graph(&read_text(path)?).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn emit(out: &mut dyn Write, path: Option<&Path>, bytes: &[u8]) -> CliResult<()> {
    match path {
        Some(p) => {
            fs::write(p, bytes).map_err(|e| CliError::input(format!("{}: {e}", p.display())))
        }
        None => out
            .write_all(bytes)
            .map_err(|e| CliError::input(format!("stdout: {e}"))),
    }
}

fn line(out: &mut dyn Write, text: &str) -> CliResult<()> {
    writeln!(out, "{text}").map_err(|e| CliError::input(format!("stdout: {e}")))
}

/// Runs a parsed command. Normal output goes to `out`; the returned code is
/// the process exit status.
pub fn run(cli: Cli, out: &mut dyn Write) -> CliResult<i32> {
    match cli.command {
        Command::Gen(a) => cmd_gen(a, out),
        Command::Construct(a) => cmd_construct(a, out),
        Command::Analyze(a) => cmd_analyze(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Oracle(a) => cmd_oracle(a, out),
        Command::Bench(a) => cmd_bench(a, out),
        Command::Convert(a) => cmd_convert(a, out),
    }
}

fn size_param(a: &GenArgs) -> CliResult<usize> {
    a.param
        .parse()
        .map_err(|_| CliError::input(format!("{:?} is not a size", a.param)))
}

pub fn cmd_gen(a: GenArgs, out: &mut dyn Write) -> CliResult<i32> {
    let text = match a.family {
        Family::Crown => {
            let n = size_param(&a)?;
            let p = crown_poset(n)?;
            if let Some(path) = &a.realizer {
                let rec = localbox::storage::CompactPosetRecord::from_realizer(
                    2 * n,
                    &crown_local_realizer(n)?,
                )?;
                emit(out, Some(path), &rec.to_bytes())?;
            }
            format!("# crown n={n}\n{}", write_poset(&p))
        }
        Family::Roberts => {
            let n = size_param(&a)?;
            format!("# roberts n={n}\n{}", write_graph(&generators::roberts(n)?))
        }
        Family::Cycle => {
            let n = size_param(&a)?;
            if n < 3 {
                return Err(CliError::input("a cycle needs at least 3 vertices"));
            }
            format!("# cycle n={n}\n{}", write_graph(&generators::cycle(n)))
        }
        Family::Path => {
            let n = size_param(&a)?;
            format!("# path n={n}\n{}", write_graph(&generators::path(n)))
        }
        Family::LineGraphOf => {
            let source = load_graph(Path::new(&a.param))?;
            format!(
                "# line graph of {}\n{}",
                a.param,
                write_graph(&generators::line_graph(&source))
            )
        }
        Family::Gnp => {
            let n = size_param(&a)?;
            let p =
                a.p.ok_or_else(|| CliError::input("gnp needs an edge probability"))?;
            let g = generators::gnp(n, p, a.seed)?;
            format!("# gnp n={n} p={p} seed={}\n{}", a.seed, write_graph(&g))
        }
    };
    emit(out, a.out.as_deref(), text.as_bytes())?;
    Ok(exit::OK)
}

pub fn cmd_construct(a: ConstructArgs, out: &mut dyn Write) -> CliResult<i32> {
    let g = load_graph(&a.input)?;
    let rep = construct(&g, &a.flags.strategy(&g))?;
    let report = verify_representation(&g, &rep)?;
    let json = write_representation_json(&rep);
    let summary = format!(
        "n={} m={} delta={} strategy={} seed={} layers={} max_frequency={} verify={}",
        g.n(),
        g.m(),
        g.max_degree(),
        rep.strategy(),
        a.flags.seed,
        rep.layers().len(),
        report.max_frequency,
        if report.exact { "OK" } else { "FAIL" }
    );
    if !report.exact {
        line(out, &summary)?;
        return Ok(exit::VERIFY_FAILED);
    }
    match &a.out {
        Some(path) => {
            emit(out, Some(path), json.as_bytes())?;
            line(out, &summary)?;
        }
        None => {
            emit(out, None, json.as_bytes())?;
            eprintln!("{summary}");
        }
    }
    Ok(exit::OK)
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "n/a".to_string(), |x| x.to_string())
}

const ANALYZE_COLUMNS: [&str; 10] = [
    "input",
    "n",
    "m",
    "max_degree",
    "greedy_chi",
    "claw_free",
    "bound_degree",
    "bound_clawfree",
    "bound_order",
    "bound_size",
];

fn report_fields(name: &str, r: &BoundsReport) -> [String; 10] {
    [
        name.to_string(),
        r.n.to_string(),
        r.m.to_string(),
        r.max_degree.to_string(),
        r.greedy_chi.to_string(),
        r.claw_free.to_string(),
        opt(r.bound_degree),
        opt(r.bound_clawfree),
        opt(r.bound_order),
        opt(r.bound_size),
    ]
}

pub fn cmd_analyze(a: AnalyzeArgs, out: &mut dyn Write) -> CliResult<i32> {
    let mut rows = Vec::new();
    for path in &a.inputs {
        let g = load_graph(path)?;
        rows.push(report_fields(
            &path.display().to_string(),
            &bounds_report(&g),
        ));
    }
    let mut text = String::new();
    match a.format {
        Format::Csv => {
            text.push_str(&ANALYZE_COLUMNS.join(","));
            text.push('\n');
            for row in &rows {
                text.push_str(&row.join(","));
                text.push('\n');
            }
        }
        Format::Text => {
            let widths: Vec<usize> = (0..ANALYZE_COLUMNS.len())
                .map(|c| {
                    rows.iter()
                        .map(|r| r[c].len())
                        .chain([ANALYZE_COLUMNS[c].len()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let header = ANALYZE_COLUMNS.map(String::from);
            for row in std::iter::once(&header).chain(&rows) {
                let cells: Vec<String> = row
                    .iter()
                    .zip(&widths)
                    .map(|(s, w)| format!("{s:<w$}"))
                    .collect();
                let _ = writeln!(text, "{}", cells.join("  ").trim_end());
            }
        }
        Format::Json => {
            text.push('[');
            for (i, row) in rows.iter().enumerate() {
                let fields: Vec<String> = ANALYZE_COLUMNS
                    .iter()
                    .zip(row)
                    .enumerate()
                    .map(|(c, (k, v))| {
                        if c == 0 || v == "n/a" {
                            format!(
                                "\"{k}\":{}",
                                if v == "n/a" {
                                    "null".into()
                                } else {
                                    format!("{v:?}")
                                }
                            )
                        } else {
                            format!("\"{k}\":{v}")
                        }
                    })
                    .collect();
                let _ = write!(
                    text,
                    "{}{{{}}}",
                    if i > 0 { "," } else { "" },
                    fields.join(",")
                );
            }
            text.push_str("]\n");
        }
    }
    emit(out, a.out.as_deref(), text.as_bytes())?;
    Ok(exit::OK)
}

pub fn cmd_verify(a: VerifyArgs, out: &mut dyn Write) -> CliResult<i32> {
    let g = load_graph(&a.graph)?;
    let rep = read_representation_json(&read_text(&a.representation)?)
        .map_err(|e| CliError::input(format!("{}: {e}", a.representation.display())))?;
    let report = verify_representation(&g, &rep)?;
    line(
        out,
        &format!(
            "exact={} missing_edges={} surviving_nonedges={} max_frequency={}",
            report.exact,
            report.missing_edges.len(),
            report.surviving_nonedges.len(),
            report.max_frequency
        ),
    )?;
    for (u, v) in report.missing_edges.iter().take(10) {
        line(out, &format!("missing edge {u} {v}"))?;
    }
    for (u, v) in report.surviving_nonedges.iter().take(10) {
        line(out, &format!("surviving non-edge {u} {v}"))?;
    }
    Ok(if report.exact {
        exit::OK
    } else {
        exit::VERIFY_FAILED
    })
}

fn show<T: std::fmt::Display>(o: &Outcome<T>) -> String {
    match o {
        Outcome::Exact(v) => v.to_string(),
        Outcome::Unknown => "unknown".into(),
    }
}

pub fn cmd_oracle(a: OracleArgs, out: &mut dyn Write) -> CliResult<i32> {
    let mut lim = OracleLimits::default();
    if let Some(n) = a.limits_n {
        lim.max_n = n;
        lim.max_poset_n = n;
    }
    if let Some(b) = a.budget {
        lim.node_budget = b;
    }
    let text = match a.which {
        Which::Ldim => {
            let p =
                read_poset(&read_text(&a.input)?).map_err(|e| CliError::input(e.to_string()))?;
            format!("ldim={}", show(&exact_local_dimension(&p, &lim)?))
        }
        Which::Lbox => {
            let o = exact_local_boxicity(&load_graph(&a.input)?, &lim)?;
            format!(
                "lbox={} lbox_positive={}",
                show(&o),
                show(&o.clone().map(positive_convention))
            )
        }
        Which::Box => format!(
            "box={}",
            show(&exact_boxicity(&load_graph(&a.input)?, &lim)?)
        ),
        Which::Product => {
            let o = exact_product_dimension(&load_graph(&a.input)?, &lim)?;
            format!("product_dimension={}", show(&o.map(|(k, _)| k)))
        }
    };
    line(out, &text)?;
    Ok(exit::OK)
}

pub fn cmd_bench(a: BenchArgs, out: &mut dyn Write) -> CliResult<i32> {
    let mut text = String::from(bench::CSV_HEADER);
    text.push('\n');
    for &n in &a.sizes {
        let row = bench::run_one(n, a.strategy, a.seed, a.repeats.max(1))?;
        text.push_str(&row.csv());
        text.push('\n');
    }
    emit(out, a.out.as_deref(), text.as_bytes())?;
    Ok(exit::OK)
}

pub fn cmd_convert(a: ConvertArgs, out: &mut dyn Write) -> CliResult<i32> {
    let bytes =
        fs::read(&a.input).map_err(|e| CliError::input(format!("{}: {e}", a.input.display())))?;
    let rep = if bytes.starts_with(b"LBXC") {
        from_compact(&CompactGraphRecord::from_bytes(&bytes)?)?
    } else {
        let text = String::from_utf8(bytes)
            .map_err(|_| CliError::input("input is neither compact binary nor UTF-8 JSON"))?;
        read_representation_json(&text)?
    };
    let encoded = match a.to {
        Target::Json => write_representation_json(&rep).into_bytes(),
        Target::Compact => to_compact(&rep).to_bytes(),
    };
    if a.to == Target::Compact && a.out.is_none() {
        return Err(CliError::input("compact output is binary; pass --out"));
    }
    emit(out, a.out.as_deref(), &encoded)?;
    Ok(exit::OK)
}
