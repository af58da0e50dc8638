//! Argument definitions and command dispatch for the `seidel` binary.

use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use seidel_core::equitable::quotient_spectrum_subset;
use seidel_core::fixtures::{fixture, fixture_names};
use seidel_core::hypergraph::{gen_turan, BipartitionLabels};
use seidel_core::linalg::{default_zero_tol, LinalgError};
use seidel_core::{
    char_poly_exact, check_equitable, classify_edge, eig_symmetric, gen_complete_bipartite, inertia_of,
    quotient_matrix, real_roots, Hypergraph, HypergraphError, PartitionError, SeidelError, SeidelMatrix, Spectrum,
    TuranRule, VertexPartition, DEFAULT_EIG_TOL,
};

use crate::report::{write_csv, write_ndjson, Row, Summary};
use crate::sweep::{sweep_rows, write_rows, Family, Quantity, SweepError};
use crate::verify::{run_suite, Range, Suite, VerifyConfig, ANALYTIC_TOL};

/// Environment variable overriding the default eigensolver tolerance.
pub const TOL_ENV: &str = "SEIDEL_TOL";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    NoConvergence(String),
    #[error("{0}")]
    NotEquitable(String),
    #[error("i/o: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Input(_) | CliError::Io(_) => 2,
            CliError::NoConvergence(_) => 3,
            CliError::NotEquitable(_) => 4,
        }
    }
}

impl From<HypergraphError> for CliError {
    fn from(e: HypergraphError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<LinalgError> for CliError {
    fn from(e: LinalgError) -> Self {
        match e {
            LinalgError::NoConvergence { .. } => CliError::NoConvergence(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<SeidelError> for CliError {
    fn from(e: SeidelError) -> Self {
        match e {
            SeidelError::Hypergraph(h) => h.into(),
            SeidelError::Linalg(l) => l.into(),
        }
    }
}

impl From<PartitionError> for CliError {
    fn from(e: PartitionError) -> Self {
        match e {
            PartitionError::NotEquitable(_) => CliError::NotEquitable(e.to_string()),
            PartitionError::Linalg(l) => l.into(),
            PartitionError::InvalidPartition(_) => CliError::Input(e.to_string()),
        }
    }
}

impl From<SweepError> for CliError {
    fn from(e: SweepError) -> Self {
        match e {
            SweepError::Linalg(l) => l.into(),
            SweepError::Io(io) => io.into(),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(io::Error::other(e))
    }
}

/// Seidel spectra and energies of hypergraphs.
///
/// INPUT arguments take a JSON file path, `-` for stdin, or
/// `fixture:NAME` for a bundled example.
#[derive(Debug, Parser)]
#[command(name = "seidel", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a hypergraph as canonical JSON.
    Gen {
        #[command(subcommand)]
        what: GenCommand,
        /// Write to this file instead of stdout.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Print the Seidel spectrum, multiplicity clusters, trace residual and inertia.
    Spectrum {
        input: String,
        #[command(flatten)]
        edit: EditArgs,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        json: bool,
    },
    /// Print the Seidel energy to 7 decimals.
    Energy {
        input: String,
        #[command(flatten)]
        edit: EditArgs,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Delete a hyperedge or a vertex and write the result.
    Delete {
        input: String,
        /// 1-based vertices of the edge, e.g. `1,2,4`.
        #[arg(long, conflicts_with = "vertex")]
        edge: Option<String>,
        /// 1-based vertex.
        #[arg(long, required_unless_present = "edge")]
        vertex: Option<usize>,
        #[arg(long, value_enum, default_value_t = VertexMode::Strong)]
        mode: VertexMode,
        /// First side of a bipartition (e.g. `1-3`), used to type a deleted 3-edge.
        #[arg(long)]
        first_side: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a partition for equitability and analyse its quotient.
    Quotient {
        input: String,
        /// Blocks separated by `|`, e.g. `1|2,3|4-9`.
        #[arg(long)]
        partition: String,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Run verification suites and write a report.
    Verify(VerifyArgs),
    /// Closed form against brute force on a grid, as CSV.
    Sweep {
        #[arg(long, value_enum, default_value_t = Quantity::Energy)]
        quantity: Quantity,
        #[arg(long, value_enum, default_value_t = Family::C3)]
        family: Family,
        #[arg(long, default_value = "2:8")]
        m_range: Range,
        #[arg(long, default_value = "2:8")]
        n_range: Range,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum GenCommand {
    /// All k-subsets meeting both sides of an m + n bipartition.
    CompleteBipartite {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// k-uniform complete r-partite hypergraph on n vertices.
    Turan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        /// Require every vertex of an edge in a different part.
        #[arg(long)]
        strict: bool,
    },
    /// A bundled example.
    Fixture {
        #[arg(long)]
        name: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VertexMode {
    /// Remove the vertex and every edge through it.
    Strong,
    /// Remove the vertex from every edge, keeping the shrunken edges.
    Weak,
    /// Remove every edge through the vertex but keep it as an isolated vertex.
    Isolate,
}

/// Optional deletion applied before computing.
#[derive(Debug, Clone, Args)]
pub struct EditArgs {
    /// Delete this 1-based edge first, e.g. `1,4,5`.
    #[arg(long, conflicts_with = "delete_vertex")]
    pub delete_edge: Option<String>,
    /// Delete this 1-based vertex first.
    #[arg(long)]
    pub delete_vertex: Option<usize>,
    #[arg(long, value_enum, default_value_t = VertexMode::Strong, requires = "delete_vertex")]
    pub mode: VertexMode,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Suite name, or `all`.
    #[arg(long, value_parser = parse_suites)]
    pub suite: SuiteSelection,
    #[arg(long)]
    pub m_range: Option<Range>,
    #[arg(long)]
    pub n_range: Option<Range>,
    /// Comparison tolerance for analytic checks.
    #[arg(long, default_value_t = ANALYTIC_TOL)]
    pub tol: f64,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    pub format: ReportFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Include per-cell runtimes (makes output nondeterministic).
    #[arg(long)]
    pub timings: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteSelection(pub Vec<Suite>);

fn parse_suites(s: &str) -> Result<SuiteSelection, String> {
    if s == "all" {
        return Ok(SuiteSelection(Suite::all().to_vec()));
    }
    Suite::from_str(s, false).map(|suite| SuiteSelection(vec![suite])).map_err(|_| {
        let names: Vec<&str> = Suite::all().iter().map(Suite::name).collect();
        format!("unknown suite {s:?}; expected one of: all, {}", names.join(", "))
    })
}

/// Eigensolver tolerance: the flag, else `SEIDEL_TOL`, else the default.
pub fn resolve_tol(flag: Option<f64>) -> Result<f64, CliError> {
    let tol = match flag {
        Some(t) => t,
        None => match std::env::var(TOL_ENV) {
            Ok(text) => {
                text.trim().parse().map_err(|_| CliError::Usage(format!("{TOL_ENV}={text:?} is not a number")))?
            }
            Err(_) => DEFAULT_EIG_TOL,
        },
    };
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(CliError::Usage(format!("tolerance must be positive, got {tol}")));
    }
    Ok(tol)
}

/// Reads `fixture:NAME`, `-` (stdin) or a file path.
pub fn load(input: &str) -> Result<Hypergraph, CliError> {
    if let Some(name) = input.strip_prefix("fixture:") {
        return Ok(fixture(name)?);
    }
    let text = if input == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(input).map_err(|e| CliError::Input(format!("{input}: {e}")))?
    };
    Ok(Hypergraph::from_json(&text)?)
}

fn parse_label(s: &str) -> Result<usize, CliError> {
    match s.trim().parse::<usize>() {
        Ok(v) if v >= 1 => Ok(v - 1),
        _ => Err(CliError::Usage(format!("bad vertex label {s:?} (labels are 1-based)"))),
    }
}

fn parse_edge(s: &str) -> Result<Vec<usize>, CliError> {
    s.split(',').map(parse_label).collect()
}

fn apply_vertex(h: &Hypergraph, v: usize, mode: VertexMode) -> Result<Hypergraph, CliError> {
    let v = parse_label(&v.to_string())?;
    Ok(match mode {
        VertexMode::Strong => h.strong_delete_vertex(v)?,
        VertexMode::Weak => h.weak_delete_vertex(v)?.hypergraph,
        VertexMode::Isolate => h.isolate_vertex(v)?,
    })
}

fn apply_edit(h: Hypergraph, edit: &EditArgs) -> Result<Hypergraph, CliError> {
    if let Some(e) = &edit.delete_edge {
        return Ok(h.delete_hyperedge(&parse_edge(e)?)?);
    }
    match edit.delete_vertex {
        Some(v) => apply_vertex(&h, v, edit.mode),
        None => Ok(h),
    }
}

/// Fixed-point with 7 decimals, never printing `-0.0000000`.
pub fn fmt7(v: f64) -> String {
    let s = format!("{v:.7}");
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

fn open_out(path: &Option<PathBuf>) -> Result<Box<dyn Write>, CliError> {
    Ok(match path {
        Some(p) => {
            Box::new(BufWriter::new(File::create(p).map_err(|e| CliError::Input(format!("{}: {e}", p.display())))?))
        }
        None => Box::new(io::stdout().lock()),
    })
}

fn spectrum_of(h: &Hypergraph, tol: f64) -> Result<(SeidelMatrix, Spectrum), CliError> {
    let s = SeidelMatrix::of(h);
    let spec = eig_symmetric(s.real(), tol)?;
    Ok((s, spec))
}

/// Runs a parsed command. `Ok(1)` means verification found failures.
pub fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Gen { what, out } => cmd_gen(what, &out),
        Command::Spectrum { input, edit, tol, json } => cmd_spectrum(&input, &edit, tol, json),
        Command::Energy { input, edit, tol } => {
            let h = apply_edit(load(&input)?, &edit)?;
            let (_, spec) = spectrum_of(&h, resolve_tol(tol)?)?;
            println!("{}", fmt7(spec.energy()));
            Ok(0)
        }
        Command::Delete { input, edge, vertex, mode, first_side, out } => {
            cmd_delete(&input, edge, vertex, mode, first_side, &out)
        }
        Command::Quotient { input, partition, tol } => cmd_quotient(&input, &partition, tol),
        Command::Verify(args) => cmd_verify(args),
        Command::Sweep { quantity, family, m_range, n_range, out, jobs } => {
            let eig_tol = resolve_tol(None)?;
            let pool = pool(jobs)?;
            let rows = pool.install(|| sweep_rows(quantity, family, m_range, n_range, eig_tol))?;
            write_rows(quantity, &rows, open_out(&out)?)?;
            eprintln!("sweep: {} rows", rows.len());
            Ok(0)
        }
    }
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool, CliError> {
    rayon::ThreadPoolBuilder::new().num_threads(jobs).build().map_err(|e| CliError::Usage(e.to_string()))
}

fn cmd_gen(what: GenCommand, out: &Option<PathBuf>) -> Result<u8, CliError> {
    let h = match what {
        GenCommand::CompleteBipartite { k, m, n } => gen_complete_bipartite(k, m, n)?.0,
        GenCommand::Turan { n, k, r, strict } => {
            let rule = if strict { TuranRule::PairwiseDistinctParts } else { TuranRule::NotWithinOnePart };
            gen_turan(n, k, r, rule)?.0
        }
        GenCommand::Fixture { name } => fixture(&name).map_err(|_| {
            CliError::Usage(format!(
                "unknown fixture {name:?}; expected one of: {}",
                fixture_names().collect::<Vec<_>>().join(", ")
            ))
        })?,
    };
    let mut w = open_out(out)?;
    w.write_all(h.to_json().as_bytes())?;
    w.flush()?;
    eprintln!("edges: {}", h.edge_count());
    Ok(0)
}

fn cmd_spectrum(input: &str, edit: &EditArgs, tol: Option<f64>, as_json: bool) -> Result<u8, CliError> {
    let h = apply_edit(load(input)?, edit)?;
    let (s, spec) = spectrum_of(&h, resolve_tol(tol)?)?;
    let inertia = inertia_of(&spec, default_zero_tol(s.real()));
    let trace_residual = spec.sum().abs();
    let mut out = io::stdout().lock();
    if as_json {
        let clusters: Vec<_> = spec.clusters().iter().map(|(v, k)| json!({"value": v, "multiplicity": k})).collect();
        let doc = json!({
            "order": h.order(),
            "eigenvalues": spec.values(),
            "clusters": clusters,
            "energy": spec.energy(),
            "trace_residual": trace_residual,
            "inertia": [inertia.n_pos, inertia.n_zero, inertia.n_neg],
        });
        writeln!(out, "{doc}")?;
        return Ok(0);
    }
    writeln!(out, "order: {}", h.order())?;
    writeln!(out, "eigenvalues: {}", spec.values().iter().map(|v| fmt7(*v)).collect::<Vec<_>>().join(" "))?;
    writeln!(out, "clusters:")?;
    for (v, k) in spec.clusters() {
        writeln!(out, "  {:>14}  x{k}", fmt7(v))?;
    }
    writeln!(out, "energy: {}", fmt7(spec.energy()))?;
    writeln!(out, "trace residual: {trace_residual:.3e}")?;
    writeln!(out, "inertia (+, 0, -): {inertia}")?;
    Ok(0)
}

fn cmd_delete(
    input: &str,
    edge: Option<String>,
    vertex: Option<usize>,
    mode: VertexMode,
    first_side: Option<String>,
    out: &Option<PathBuf>,
) -> Result<u8, CliError> {
    let h = load(input)?;
    let (result, summary) = if let Some(e) = edge {
        let e = parse_edge(&e)?;
        let result = h.delete_hyperedge(&e)?;
        let mut summary = format!("removed edge {{{}}}", join_labels(&e));
        if let Some(side) = first_side {
            let a = parse_side(&side, h.order())?;
            let b: Vec<usize> = (0..h.order()).filter(|v| !a.contains(v)).collect();
            let labels = BipartitionLabels::new(h.order(), a, b)?;
            summary.push_str(&format!(", {}", classify_edge(&e, &labels)?));
        }
        (result, summary)
    } else {
        let v = vertex.expect("clap requires --vertex without --edge");
        let idx = parse_label(&v.to_string())?;
        match mode {
            VertexMode::Weak => {
                let w = h.weak_delete_vertex(idx)?;
                let summary = format!(
                    "weak deletion of vertex {v}: {} edges shrunk, {} dropped, {} merged",
                    w.shrunk, w.dropped, w.merged
                );
                (w.hypergraph, summary)
            }
            _ => {
                let result = apply_vertex(&h, v, mode)?;
                let removed = h.edge_count() - result.edge_count();
                let verb = if mode == VertexMode::Strong { "strong deletion" } else { "isolation" };
                (result, format!("{verb} of vertex {v}: {removed} edges removed"))
            }
        }
    };
    let mut w = open_out(out)?;
    w.write_all(result.to_json().as_bytes())?;
    w.flush()?;
    eprintln!("{summary}; result has {} vertices, {} edges", result.order(), result.edge_count());
    Ok(0)
}

fn parse_side(spec: &str, n: usize) -> Result<Vec<usize>, CliError> {
    let mut side = Vec::new();
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match item.split_once('-') {
            Some((a, b)) => side.extend(parse_label(a)?..=parse_label(b)?),
            None => side.push(parse_label(item)?),
        }
    }
    if side.iter().any(|&v| v >= n) {
        return Err(CliError::Usage(format!("--first-side {spec:?} exceeds order {n}")));
    }
    Ok(side)
}

fn join_labels(e: &[usize]) -> String {
    e.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(",")
}

fn cmd_quotient(input: &str, partition: &str, tol: Option<f64>) -> Result<u8, CliError> {
    let h = load(input)?;
    let tol = resolve_tol(tol)?;
    let p = VertexPartition::parse(partition, h.order())?;
    let (s, spec) = spectrum_of(&h, tol)?;
    let mut out = io::stdout().lock();
    writeln!(out, "partition: {p}")?;
    if let Err(w) = check_equitable(&s, &p)? {
        writeln!(out, "equitable: no")?;
        writeln!(out, "witness: {w}")?;
        return Err(CliError::NotEquitable(format!("partition is not equitable: {w}")));
    }
    writeln!(out, "equitable: yes")?;
    let q = quotient_matrix(&s, &p)?;
    writeln!(out, "quotient:\n{q}")?;
    let cp = char_poly_exact(&q)?;
    writeln!(out, "characteristic polynomial: {cp}")?;
    let roots = real_roots(&cp, tol)?;
    writeln!(out, "roots: {}", roots.iter().map(|r| fmt7(*r)).collect::<Vec<_>>().join(" "))?;
    let contained = quotient_spectrum_subset(&s, &p, &spec, ANALYTIC_TOL)?;
    writeln!(out, "roots contained in spectrum: {}", if contained { "yes" } else { "no" })?;
    Ok(0)
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, CliError> {
    if !(args.tol > 0.0 && args.tol.is_finite()) {
        return Err(CliError::Usage(format!("--tol must be positive, got {}", args.tol)));
    }
    let cfg = VerifyConfig {
        m_range: args.m_range,
        n_range: args.n_range,
        tol: args.tol,
        eig_tol: resolve_tol(None)?,
        timings: args.timings,
    };
    let pool = pool(args.jobs)?;
    let rows: Vec<Row> = pool.install(|| args.suite.0.iter().flat_map(|&s| run_suite(s, &cfg)).collect());
    let w = open_out(&args.out)?;
    match args.format {
        ReportFormat::Json => write_ndjson(&rows, w)?,
        ReportFormat::Csv => write_csv(&rows, w, args.timings)?,
    }
    let summary = Summary::of(&rows);
    eprintln!("verify: {} pass, {} fail, {} reported", summary.pass, summary.fail, summary.reported);
    Ok(if summary.ok() { 0 } else { 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_suite_name() {
        for s in Suite::all() {
            assert_eq!(parse_suites(s.name()).unwrap().0, vec![*s]);
        }
        assert_eq!(parse_suites("all").unwrap().0.len(), Suite::all().len());
        assert!(parse_suites("nope").is_err());
    }

    #[test]
    fn fixed_point_formatting() {
        assert_eq!(fmt7(-1e-12), "0.0000000");
        assert_eq!(fmt7(-1.5), "-1.5000000");
        assert_eq!(fmt7(16.886), "16.8860000");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::from(LinalgError::NoConvergence { sweeps: 1, off_norm: 1.0 }).exit_code(), 3);
        assert_eq!(CliError::Usage(String::new()).exit_code(), 2);
        assert_eq!(CliError::NotEquitable(String::new()).exit_code(), 4);
    }

    #[test]
    fn edge_and_side_parsing() {
        assert_eq!(parse_edge("1,2,4").unwrap(), vec![0, 1, 3]);
        assert!(parse_edge("0,1").is_err());
        assert_eq!(parse_side("1-3", 9).unwrap(), vec![0, 1, 2]);
        assert!(parse_side("1-10", 9).is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
