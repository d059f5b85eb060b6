//! Argument surface, report schema, and command implementations behind the
//! `locdom` binary.
//!
//! # Report schema: `locdom-report v1`
//!
//! Every reporting command prints exactly one report to standard output.
//! Line 1 is the literal header `locdom-report v1`; every following
//! non-empty line is `key: value` with a lowercase kebab-case key. Keys may
//! repeat — list-like payloads (reduction steps, twin pairs, sweep
//! violations) emit one line per item. Empty list values are written as
//! `-`. Every report carries `command`, `version`, and `elapsed-ms`;
//! [`validate_report`] is the bundled checker for this shape.
//!
//! The one non-reporting mode is `enum` without `--out`, whose standard
//! output is the raw graph6 stream itself.
//!
//! # Exit codes
//!
//! | code | meaning |
//! |-----:|---------|
//! | 0    | the command semantically succeeded |
//! | 1    | ran, but the answer is negative (invalid set, failed witness) or I/O failed |
//! | 2    | `construct`: the input violates the construction's hypotheses |
//! | 3    | `solve`/`sweep`: the node budget was exhausted (bounds printed) |
//! | 4    | `sweep`: bound violations were found |
//! | 64   | usage error (bad flags, unknown family, unsupported order) |
//! | 65   | input parse error (unreadable graph or vertex set) |

use std::fmt::{Display, Write as _};
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use locdom::{
    check_structure_lemmas, construct_half_ld, enumerate_graphs, four_cycles, generate,
    ld_number_exact, leaves_and_supports, ltd_number_exact, parse_edge_list, parse_graph6,
    sweep_conjecture, to_edge_list, to_graph6, triangles, twin_report, verify_ld, verify_ltd,
    CaseStep, ClaimKind, ConstructError, DegreeFilter, EnumError, EnumFilter, FamilyKind,
    FamilySpec, Graph, LdVerdict, SolveBudget, SolveError, SweepBound, VertexSet,
};

// ---------------------------------------------------------------------------
// Exit codes
// ---------------------------------------------------------------------------

/// The documented exit-code table.
pub mod exit_code {
    /// Command semantically succeeded.
    pub const OK: i32 = 0;
    /// Ran to completion with a negative answer, or an I/O failure.
    pub const FAILURE: i32 = 1;
    /// `construct`: input outside the construction's hypotheses.
    pub const HYPOTHESIS: i32 = 2;
    /// Node budget exhausted before the optimum was proven.
    pub const BUDGET: i32 = 3;
    /// `sweep`: at least one graph violates the checked bound.
    pub const VIOLATIONS: i32 = 4;
    /// Bad command line.
    pub const USAGE: i32 = 64;
    /// Unreadable graph or vertex-set input.
    pub const PARSE: i32 = 65;
}

// ---------------------------------------------------------------------------
// Report schema
// ---------------------------------------------------------------------------

/// First line of every report.
pub const REPORT_HEADER: &str = "locdom-report v1";

/// Keys the envelope guarantees on every report.
pub const REQUIRED_KEYS: [&str; 3] = ["command", "version", "elapsed-ms"];

/// Ordered `key: value` payload of one report.
///
/// Handlers fill in payload lines; [`Report::render`] wraps them in the
/// standard envelope (header, command echo, version, payload, timing).
#[derive(Debug, Clone, Default)]
pub struct Report {
    lines: Vec<(String, String)>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    /// Appends one `key: value` line. Keys must be lowercase kebab-case;
    /// values must be single-line. Violations are programming errors.
    pub fn push(&mut self, key: &str, value: impl Display) {
        debug_assert!(key_is_valid(key), "bad report key {key:?}");
        let value = value.to_string();
        debug_assert!(!value.contains('\n'), "multi-line report value for {key}");
        let value = if value.is_empty() {
            "-".to_string()
        } else {
            value
        };
        self.lines.push((key.to_string(), value));
    }

    /// Renders the full report text, envelope included.
    pub fn render(&self, command: &str, elapsed_ms: u128) -> String {
        let mut out = format!("{REPORT_HEADER}\n");
        let _ = writeln!(
            out,
            "command: {}",
            if command.is_empty() { "-" } else { command }
        );
        let _ = writeln!(out, "version: {}", env!("CARGO_PKG_VERSION"));
        for (key, value) in &self.lines {
            let _ = writeln!(out, "{key}: {value}");
        }
        let _ = writeln!(out, "elapsed-ms: {elapsed_ms}");
        out
    }
}

fn key_is_valid(key: &str) -> bool {
    key.chars().next().is_some_and(|c| c.is_ascii_lowercase())
        && key
            .chars()
            .all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '-')
}

/// Why a report fails schema validation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReportError {
    #[error("line 1: expected `{REPORT_HEADER}`, found {found:?}")]
    BadHeader { found: String },
    #[error("line {line}: not a `key: value` pair: {text:?}")]
    BadLine { line: usize, text: String },
    #[error("required key `{key}` is missing")]
    MissingKey { key: &'static str },
}

/// Checks that `text` is a well-formed `locdom-report v1` document.
pub fn validate_report(text: &str) -> Result<(), ReportError> {
    let mut lines = text.lines();
    let header = lines.next().unwrap_or_default();
    if header != REPORT_HEADER {
        return Err(ReportError::BadHeader {
            found: header.to_string(),
        });
    }
    let mut seen: Vec<&str> = Vec::new();
    for (i, line) in lines.enumerate() {
        if line.is_empty() {
            continue;
        }
        let bad = || ReportError::BadLine {
            line: i + 2,
            text: line.to_string(),
        };
        let (key, value) = line.split_once(": ").ok_or_else(bad)?;
        if !key_is_valid(key) || value.is_empty() {
            return Err(bad());
        }
        seen.push(key);
    }
    for key in REQUIRED_KEYS {
        if !seen.contains(&key) {
            return Err(ReportError::MissingKey { key });
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Command line
// ---------------------------------------------------------------------------

/// Locating-dominating sets on subcubic graphs: verify, solve, construct,
/// analyze, generate, enumerate, sweep, and convert.
#[derive(Parser, Debug)]
#[command(name = "locdom", version, max_term_width = 80)]
pub struct Cli {
    /// Worker threads for parallel sweeps (overrides LOCDOM_THREADS;
    /// default: all cores).
    #[arg(long, global = true, value_name = "T")]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check whether a vertex set is locating-(total-)dominating.
    ///
    /// Exit 0 iff the verdict is valid.
    Verify {
        /// Graph file, graph6 or edge list (autodetected).
        #[arg(long, value_name = "FILE")]
        graph: PathBuf,
        /// Comma-separated vertex indices, e.g. `0,2,5`.
        #[arg(long, value_name = "SET")]
        set: Option<String>,
        /// File holding the indices (same syntax); overrides --set.
        #[arg(long, value_name = "FILE")]
        set_file: Option<PathBuf>,
        /// Check the locating-total-dominating property instead.
        #[arg(long)]
        ltd: bool,
    },
    /// Compute the minimum locating-(total-)dominating set.
    ///
    /// Exit 3 with proven bounds if the node budget runs out.
    Solve {
        #[arg(long, value_name = "FILE")]
        graph: PathBuf,
        /// Solve the locating-total-dominating variant instead.
        #[arg(long)]
        ltd: bool,
        /// Give up after this many search nodes.
        #[arg(long, value_name = "N")]
        budget_nodes: Option<u64>,
    },
    /// Build a verified LD-set of size ≤ ⌊n/2⌋ with its reduction trace.
    ///
    /// Exit 2 names the hypothesis the input violates.
    Construct {
        #[arg(long, value_name = "FILE")]
        graph: PathBuf,
        /// Apply the hypotheses to each connected component separately and
        /// aggregate the certificates.
        #[arg(long)]
        per_component: bool,
    },
    /// Report twins, leaves and supports, triangles, 4-cycles, and the
    /// structural facts that hold on twin-free subcubic graphs.
    Twins {
        #[arg(long, value_name = "FILE")]
        graph: PathBuf,
    },
    /// Generate a named family instance and write its graph to a file.
    Family {
        /// Family name: ltd-comb, deg1-twins, deg2-twins, closed-reg,
        /// tight-subcubic, tight-cubic10, f-graph, f3-prime, prism,
        /// p2-box-c4, path, complete, star, or k33.
        #[arg(long, value_name = "NAME")]
        kind: String,
        /// Size/index parameter (blocks for the chained families, order for
        /// path/complete, leaves for star, index for f-graph).
        #[arg(long, value_name = "K")]
        k: Option<usize>,
        /// Degree parameter for closed-reg.
        #[arg(long, value_name = "R")]
        r: Option<usize>,
        /// Spine length for ltd-comb.
        #[arg(long, value_name = "P")]
        p: Option<usize>,
        /// Output graph file (.g6 for graph6, anything else edge list).
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
        /// Include the designated witness in the report.
        #[arg(long)]
        emit_witness: bool,
    },
    /// Enumerate graphs of order N, one canonical graph6 line each.
    ///
    /// Without --out the stream itself is the standard output and no
    /// report is printed.
    Enum {
        #[arg(long)]
        n: usize,
        /// Only 3-regular graphs.
        #[arg(long, conflicts_with = "subcubic")]
        cubic: bool,
        /// Maximum degree 3 (the default).
        #[arg(long)]
        subcubic: bool,
        /// Connected graphs only.
        #[arg(long)]
        connected: bool,
        /// Graphs without open or closed twins only.
        #[arg(long)]
        twin_free: bool,
        /// Write the stream to a file and print a report instead.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Enumerate, solve every graph, and check a bound.
    ///
    /// Exit 4 iff violations are found; exit 3 if the budget runs out.
    Sweep {
        #[arg(long)]
        n: usize,
        /// Only 3-regular graphs.
        #[arg(long, conflicts_with = "subcubic")]
        cubic: bool,
        /// Maximum degree 3 (the default).
        #[arg(long)]
        subcubic: bool,
        /// Connected graphs only.
        #[arg(long)]
        connected: bool,
        /// Graphs without open or closed twins only.
        #[arg(long)]
        twin_free: bool,
        /// Bound to check.
        #[arg(long, value_enum, default_value_t = BoundArg::Half)]
        bound: BoundArg,
        /// Give up after this many search nodes per graph.
        #[arg(long, value_name = "N")]
        budget_nodes: Option<u64>,
    },
    /// Convert between graph formats.
    ///
    /// Input is autodetected (graph6 or edge list); DOT is export-only.
    Convert {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
        /// Output format; defaults by extension (.g6 graph6, .dot/.gv DOT,
        /// anything else edge list).
        #[arg(long, value_enum)]
        to: Option<OutputFormat>,
    },
}

/// Bounds `sweep` can check.
#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundArg {
    /// γ ≤ ⌊n/2⌋.
    Half,
}

/// Output formats for `convert`.
#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Graph6,
    EdgeList,
    Dot,
}

impl OutputFormat {
    fn name(self) -> &'static str {
        match self {
            OutputFormat::Graph6 => "graph6",
            OutputFormat::EdgeList => "edge-list",
            OutputFormat::Dot => "dot",
        }
    }

    /// The default format for a path: `.g6` → graph6, `.dot`/`.gv` → DOT,
    /// anything else the edge-list dialect.
    pub fn for_path(path: &Path) -> OutputFormat {
        match path.extension().and_then(|e| e.to_str()) {
            Some("g6") => OutputFormat::Graph6,
            Some("dot") | Some("gv") => OutputFormat::Dot,
            _ => OutputFormat::EdgeList,
        }
    }
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

/// Errors that abort a command with a one-line diagnostic on stderr.
#[derive(Debug, Error)]
enum CmdError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Failure(String),
}

impl CmdError {
    fn code(&self) -> i32 {
        match self {
            CmdError::Usage(_) => exit_code::USAGE,
            CmdError::Parse(_) => exit_code::PARSE,
            CmdError::Failure(_) => exit_code::FAILURE,
        }
    }
}

/// A finished command: an optional report plus the exit code.
struct Outcome {
    report: Option<Report>,
    code: i32,
}

impl Outcome {
    fn report(report: Report, code: i32) -> Outcome {
        Outcome {
            report: Some(report),
            code,
        }
    }

    fn stream() -> Outcome {
        Outcome {
            report: None,
            code: exit_code::OK,
        }
    }
}

/// Runs a parsed command line to completion, printing the report (or the
/// graph6 stream) on standard output and diagnostics on standard error.
pub fn run(cli: Cli) -> i32 {
    configure_threads(cli.threads);
    let echo: Vec<String> = std::env::args().skip(1).collect();
    let start = Instant::now();
    match dispatch(cli.command) {
        Ok(Outcome {
            report: Some(report),
            code,
        }) => {
            print!(
                "{}",
                report.render(&echo.join(" "), start.elapsed().as_millis())
            );
            code
        }
        Ok(Outcome { report: None, code }) => code,
        Err(err) => {
            eprintln!("locdom: {err}");
            err.code()
        }
    }
}

fn dispatch(command: Command) -> Result<Outcome, CmdError> {
    match command {
        Command::Verify {
            graph,
            set,
            set_file,
            ltd,
        } => cmd_verify(&graph, set, set_file, ltd),
        Command::Solve {
            graph,
            ltd,
            budget_nodes,
        } => cmd_solve(&graph, ltd, budget_nodes),
        Command::Construct {
            graph,
            per_component,
        } => cmd_construct(&graph, per_component),
        Command::Twins { graph } => cmd_twins(&graph),
        Command::Family {
            kind,
            k,
            r,
            p,
            out,
            emit_witness,
        } => cmd_family(&kind, k, r, p, &out, emit_witness),
        Command::Enum {
            n,
            cubic,
            subcubic: _,
            connected,
            twin_free,
            out,
        } => cmd_enum(n, cubic, connected, twin_free, out.as_deref()),
        Command::Sweep {
            n,
            cubic,
            subcubic: _,
            connected,
            twin_free,
            bound,
            budget_nodes,
        } => cmd_sweep(n, cubic, connected, twin_free, bound, budget_nodes),
        Command::Convert { input, out, to } => cmd_convert(&input, &out, to),
    }
}

fn configure_threads(flag: Option<usize>) {
    let threads = flag.or_else(|| {
        std::env::var("LOCDOM_THREADS")
            .ok()
            .and_then(|raw| raw.parse().ok())
    });
    if let Some(t) = threads {
        if t > 0 {
            // Failure means a pool already exists (e.g. under a test
            // harness); the default pool is fine then.
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build_global();
        }
    }
}

// ---------------------------------------------------------------------------
// Input plumbing
// ---------------------------------------------------------------------------

struct Loaded {
    graph: Graph,
    format: &'static str,
}

fn load_graph(path: &Path) -> Result<Loaded, CmdError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CmdError::Failure(format!("cannot read {}: {e}", path.display())))?;
    match parse_graph6(text.trim()) {
        Ok(graph) => Ok(Loaded {
            graph,
            format: "graph6",
        }),
        Err(graph6) => match parse_edge_list(&text) {
            Ok(graph) => Ok(Loaded {
                graph,
                format: "edge-list",
            }),
            Err(edge_list) => Err(CmdError::Parse(format!(
                "{}: neither graph6 ({graph6}) nor an edge list ({edge_list})",
                path.display()
            ))),
        },
    }
}

fn describe_input(report: &mut Report, path: &Path, loaded: &Loaded) {
    report.push("input", path.display());
    report.push("format", loaded.format);
    report.push("n", loaded.graph.n());
    report.push("m", loaded.graph.edge_count());
}

/// Parses comma- or whitespace-separated vertex indices, checking range.
pub fn parse_set(text: &str, n: usize) -> Result<VertexSet, String> {
    let mut set = VertexSet::new();
    for token in text.split(|c: char| c == ',' || c.is_whitespace()) {
        if token.is_empty() {
            continue;
        }
        let v: usize = token
            .parse()
            .map_err(|_| format!("cannot parse vertex index {token:?}"))?;
        if v >= n {
            return Err(format!(
                "vertex {v} is out of range for a graph of order {n}"
            ));
        }
        set = set.union(&[v].into_iter().collect());
    }
    Ok(set)
}

fn csv(set: &VertexSet) -> String {
    let items: Vec<String> = set.iter().map(|v| v.to_string()).collect();
    if items.is_empty() {
        "-".to_string()
    } else {
        items.join(",")
    }
}

fn bracketed<T: Display>(items: impl IntoIterator<Item = T>) -> String {
    let items: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("[{}]", items.join(","))
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn cmd_verify(
    graph: &Path,
    set: Option<String>,
    set_file: Option<PathBuf>,
    ltd: bool,
) -> Result<Outcome, CmdError> {
    let loaded = load_graph(graph)?;
    // The file wins when both sources are given.
    let text = match (set_file, set) {
        (Some(file), _) => fs::read_to_string(&file)
            .map_err(|e| CmdError::Failure(format!("cannot read {}: {e}", file.display())))?,
        (None, Some(inline)) => inline,
        (None, None) => return Err(CmdError::Usage("pass --set or --set-file".to_string())),
    };
    let s = parse_set(&text, loaded.graph.n()).map_err(CmdError::Parse)?;
    let verdict = if ltd {
        verify_ltd(&loaded.graph, &s)
    } else {
        verify_ld(&loaded.graph, &s)
    };
    let mut report = Report::new();
    describe_input(&mut report, graph, &loaded);
    report.push("mode", if ltd { "ltd" } else { "ld" });
    report.push("set", csv(&s));
    report.push("set-size", s.len());
    match verdict {
        LdVerdict::Valid => report.push("verdict", "valid"),
        LdVerdict::Undominated(v) => {
            report.push("verdict", "undominated");
            report.push("failure", format!("vertex {v} has no dominator in the set"));
        }
        LdVerdict::Unseparated(u, v) => {
            report.push("verdict", "unseparated");
            report.push("failure", format!("vertices {u} and {v} share a code"));
        }
    }
    let code = if verdict.is_valid() {
        exit_code::OK
    } else {
        exit_code::FAILURE
    };
    Ok(Outcome::report(report, code))
}

// ---------------------------------------------------------------------------
// solve
// ---------------------------------------------------------------------------

fn cmd_solve(graph: &Path, ltd: bool, budget_nodes: Option<u64>) -> Result<Outcome, CmdError> {
    let loaded = load_graph(graph)?;
    let budget = budget_nodes.map_or_else(SolveBudget::unlimited, SolveBudget::nodes);
    let mut report = Report::new();
    describe_input(&mut report, graph, &loaded);
    report.push("mode", if ltd { "ltd" } else { "ld" });
    if let Some(nodes) = budget_nodes {
        report.push("budget-nodes", nodes);
    }
    let solved = if ltd {
        ltd_number_exact(&loaded.graph, budget)
    } else {
        ld_number_exact(&loaded.graph, budget)
    };
    match solved {
        Ok(res) => {
            report.push("value", res.value);
            report.push("witness", csv(&res.witness));
            report.push("explored", res.explored);
            Ok(Outcome::report(report, exit_code::OK))
        }
        Err(SolveError::BudgetExceeded {
            upper,
            lower,
            witness,
            explored,
        }) => {
            report.push("lower", lower);
            report.push("upper", upper);
            report.push("incumbent", csv(&witness));
            report.push("explored", explored);
            Ok(Outcome::report(report, exit_code::BUDGET))
        }
        Err(other) => {
            report.push("error", other);
            Ok(Outcome::report(report, exit_code::FAILURE))
        }
    }
}

// ---------------------------------------------------------------------------
// construct
// ---------------------------------------------------------------------------

fn push_step(report: &mut Report, step: &CaseStep, component: Option<usize>) {
    let mut value = String::new();
    if let Some(idx) = component {
        let _ = write!(value, "component={idx} ");
    }
    let _ = write!(
        value,
        "rule={} removed-vertices={} removed-edges={} added={} dropped={} calls={}",
        step.rule_id,
        bracketed(step.removed_vertices.iter()),
        bracketed(
            step.removed_edges
                .iter()
                .map(|&(u, v)| format!("({u},{v})"))
        ),
        bracketed(step.patch_added.iter()),
        bracketed(step.patch_removed.iter()),
        bracketed(step.sub_sizes.iter().map(|&(n, s)| format!("({n}:{s})"))),
    );
    report.push("step", value);
}

fn cmd_construct(graph: &Path, per_component: bool) -> Result<Outcome, CmdError> {
    let loaded = load_graph(graph)?;
    let g = &loaded.graph;
    let mut report = Report::new();
    describe_input(&mut report, graph, &loaded);
    report.push("per-component", per_component);

    if !per_component {
        return Ok(match construct_half_ld(g) {
            Ok(cert) => {
                report.push("witness", csv(&cert.witness));
                report.push("size", cert.witness.len());
                report.push("bound", g.n() / 2);
                report.push("fallbacks", cert.fallback_count);
                report.push("steps", cert.trace.len());
                for step in &cert.trace {
                    push_step(&mut report, step, None);
                }
                Outcome::report(report, exit_code::OK)
            }
            Err(ConstructError::HypothesisViolated(v)) => {
                report.push("violation", v);
                Outcome::report(report, exit_code::HYPOTHESIS)
            }
        });
    }

    // Per-component mode: certify each component on its own and union the
    // lifted witnesses. Separation never crosses components (codes live
    // inside closed neighborhoods), so the union stays valid, and the
    // per-component bounds sum to at most ⌊n/2⌋.
    let mut witness = VertexSet::new();
    let mut fallbacks = 0;
    let mut steps = Vec::new();
    for (idx, component) in g.components().iter().enumerate() {
        let drop: VertexSet = (0..g.n()).filter(|&v| !component.contains(v)).collect();
        let (h, map) = g.remove_vertices(&drop);
        match construct_half_ld(&h) {
            Ok(cert) => {
                report.push(
                    "component",
                    format!(
                        "idx={idx} n={} m={} size={} fallbacks={} steps={}",
                        h.n(),
                        h.edge_count(),
                        cert.witness.len(),
                        cert.fallback_count,
                        cert.trace.len()
                    ),
                );
                witness = witness.union(&map.lift(&cert.witness));
                fallbacks += cert.fallback_count;
                steps.extend(cert.trace.into_iter().map(|s| (idx, s)));
            }
            Err(ConstructError::HypothesisViolated(v)) => {
                report.push(
                    "violation",
                    format!("component {idx} ({}): {v}", csv(component)),
                );
                return Ok(Outcome::report(report, exit_code::HYPOTHESIS));
            }
        }
    }
    if !verify_ld(g, &witness).is_valid() {
        return Err(CmdError::Failure(
            "internal error: aggregated witness failed verification".to_string(),
        ));
    }
    report.push("witness", csv(&witness));
    report.push("size", witness.len());
    report.push("bound", g.n() / 2);
    report.push("fallbacks", fallbacks);
    report.push("steps", steps.len());
    for (idx, step) in &steps {
        // Step coordinates are local to their component's subgraph.
        push_step(&mut report, step, Some(*idx));
    }
    Ok(Outcome::report(report, exit_code::OK))
}

// ---------------------------------------------------------------------------
// twins
// ---------------------------------------------------------------------------

fn cmd_twins(graph: &Path) -> Result<Outcome, CmdError> {
    let loaded = load_graph(graph)?;
    let g = &loaded.graph;
    let mut report = Report::new();
    describe_input(&mut report, graph, &loaded);

    let twins = twin_report(g);
    report.push("twin-free", twins.is_twin_free());
    report.push("open-pairs", twins.open_pairs.len());
    for &(u, v, degree) in &twins.open_pairs {
        report.push("open-pair", format!("u={u} v={v} degree={degree}"));
    }
    report.push("closed-pairs", twins.closed_pairs.len());
    for &(u, v, degree) in &twins.closed_pairs {
        report.push("closed-pair", format!("u={u} v={v} degree={degree}"));
    }

    let (leaves, supports) = leaves_and_supports(g);
    report.push("leaves", csv(&leaves));
    report.push("supports", csv(&supports));
    report.push("triangles", triangles(g).len());
    report.push("four-cycles", four_cycles(g).len());

    match check_structure_lemmas(g) {
        Ok(structure) if structure.violations.is_empty() => {
            report.push("structure", "ok");
            report.push(
                "structure-common-neighbor-checked",
                structure.common_neighbor_checked,
            );
        }
        Ok(structure) => {
            report.push(
                "structure",
                format!("{} violations", structure.violations.len()),
            );
            for violation in &structure.violations {
                report.push("structure-violation", violation);
            }
        }
        Err(err) => report.push("structure", format!("skipped ({err})")),
    }
    Ok(Outcome::report(report, exit_code::OK))
}

// ---------------------------------------------------------------------------
// family
// ---------------------------------------------------------------------------

fn cmd_family(
    kind: &str,
    k: Option<usize>,
    r: Option<usize>,
    p: Option<usize>,
    out: &Path,
    emit_witness: bool,
) -> Result<Outcome, CmdError> {
    let kind: FamilyKind = kind.parse().map_err(|e| CmdError::Usage(format!("{e}")))?;
    let spec =
        FamilySpec::from_kind_params(kind, k, r, p).map_err(|e| CmdError::Usage(format!("{e}")))?;
    let inst = generate(spec).map_err(|e| CmdError::Usage(format!("{e}")))?;

    let format = match OutputFormat::for_path(out) {
        OutputFormat::Graph6 => OutputFormat::Graph6,
        _ => OutputFormat::EdgeList,
    };
    let text = match format {
        OutputFormat::Graph6 => format!("{}\n", to_graph6(&inst.graph)),
        _ => to_edge_list(&inst.graph),
    };
    fs::write(out, text)
        .map_err(|e| CmdError::Failure(format!("cannot write {}: {e}", out.display())))?;

    let verified = match inst.claim_kind {
        ClaimKind::ExactLtd => verify_ltd(&inst.graph, &inst.witness).is_valid(),
        _ => verify_ld(&inst.graph, &inst.witness).is_valid(),
    };
    let mut report = Report::new();
    report.push("kind", spec);
    report.push("n", inst.graph.n());
    report.push("m", inst.graph.edge_count());
    report.push("out", out.display());
    report.push("out-format", format.name());
    report.push("claimed", inst.claimed);
    report.push("claim-kind", inst.claim_kind);
    report.push("verified", verified);
    if emit_witness {
        report.push("witness", csv(&inst.witness));
    }
    let code = if verified {
        exit_code::OK
    } else {
        exit_code::FAILURE
    };
    Ok(Outcome::report(report, code))
}

// ---------------------------------------------------------------------------
// enum & sweep
// ---------------------------------------------------------------------------

fn build_filter(n: usize, cubic: bool, connected: bool, twin_free: bool) -> EnumFilter {
    EnumFilter {
        n,
        degree: if cubic {
            DegreeFilter::Regular(3)
        } else {
            DegreeFilter::Subcubic
        },
        connected,
        twin_free,
    }
}

fn describe_filter(report: &mut Report, filter: EnumFilter) {
    report.push("n", filter.n);
    report.push(
        "degree",
        match filter.degree {
            DegreeFilter::Subcubic => "subcubic".to_string(),
            DegreeFilter::Regular(d) => format!("{d}-regular"),
        },
    );
    report.push("connected", filter.connected);
    report.push("twin-free", filter.twin_free);
}

fn cmd_enum(
    n: usize,
    cubic: bool,
    connected: bool,
    twin_free: bool,
    out: Option<&Path>,
) -> Result<Outcome, CmdError> {
    let filter = build_filter(n, cubic, connected, twin_free);
    let graphs = enumerate_graphs(filter).map_err(enum_usage)?;
    let mut stream = String::new();
    for g in &graphs {
        let _ = writeln!(stream, "{}", to_graph6(g));
    }
    match out {
        Some(path) => {
            fs::write(path, stream)
                .map_err(|e| CmdError::Failure(format!("cannot write {}: {e}", path.display())))?;
            let mut report = Report::new();
            describe_filter(&mut report, filter);
            report.push("count", graphs.len());
            report.push("out", path.display());
            Ok(Outcome::report(report, exit_code::OK))
        }
        None => {
            print!("{stream}");
            Ok(Outcome::stream())
        }
    }
}

fn enum_usage(err: EnumError) -> CmdError {
    match err {
        EnumError::OrderTooLarge { .. } => CmdError::Usage(err.to_string()),
        EnumError::Solve(e) => CmdError::Failure(e.to_string()),
    }
}

fn cmd_sweep(
    n: usize,
    cubic: bool,
    connected: bool,
    twin_free: bool,
    bound: BoundArg,
    budget_nodes: Option<u64>,
) -> Result<Outcome, CmdError> {
    let filter = build_filter(n, cubic, connected, twin_free);
    let budget = budget_nodes.map_or_else(SolveBudget::unlimited, SolveBudget::nodes);
    let BoundArg::Half = bound;
    let mut report = Report::new();
    describe_filter(&mut report, filter);
    report.push("bound", "half");
    if let Some(nodes) = budget_nodes {
        report.push("budget-nodes", nodes);
    }
    match sweep_conjecture(filter, SweepBound::HalfOrder, budget) {
        Ok(sweep) => {
            let violations = sweep.violations();
            let tight = sweep.tight();
            report.push("count", sweep.count());
            report.push("violations", violations.len());
            report.push("tight", tight.len());
            match sweep.max_ratio() {
                Some(ratio) => report.push("max-ratio", format!("{ratio:.4}")),
                None => report.push("max-ratio", "-"),
            }
            for record in &violations {
                report.push(
                    "violation",
                    format!(
                        "graph6={} n={} gamma={}",
                        record.graph6, record.n, record.gamma
                    ),
                );
            }
            for record in &tight {
                report.push(
                    "tight-graph",
                    format!(
                        "graph6={} n={} gamma={}",
                        record.graph6, record.n, record.gamma
                    ),
                );
            }
            let code = if violations.is_empty() {
                exit_code::OK
            } else {
                exit_code::VIOLATIONS
            };
            Ok(Outcome::report(report, code))
        }
        Err(EnumError::Solve(SolveError::BudgetExceeded { explored, .. })) => {
            report.push(
                "error",
                format!("node budget exhausted after {explored} nodes"),
            );
            Ok(Outcome::report(report, exit_code::BUDGET))
        }
        Err(err) => Err(enum_usage(err)),
    }
}

// ---------------------------------------------------------------------------
// convert
// ---------------------------------------------------------------------------

/// Renders a graph in DOT, listing every vertex so isolated ones survive.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph {\n");
    for v in 0..g.n() {
        let _ = writeln!(out, "  {v};");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

fn cmd_convert(input: &Path, out: &Path, to: Option<OutputFormat>) -> Result<Outcome, CmdError> {
    let loaded = load_graph(input)?;
    let format = to.unwrap_or_else(|| OutputFormat::for_path(out));
    let text = match format {
        OutputFormat::Graph6 => format!("{}\n", to_graph6(&loaded.graph)),
        OutputFormat::EdgeList => to_edge_list(&loaded.graph),
        OutputFormat::Dot => to_dot(&loaded.graph),
    };
    fs::write(out, text)
        .map_err(|e| CmdError::Failure(format!("cannot write {}: {e}", out.display())))?;
    let mut report = Report::new();
    report.push("input", input.display());
    report.push("format", loaded.format);
    report.push("n", loaded.graph.n());
    report.push("m", loaded.graph.edge_count());
    report.push("out", out.display());
    report.push("out-format", format.name());
    Ok(Outcome::report(report, exit_code::OK))
}

// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rendered_reports_validate() {
        let mut report = Report::new();
        report.push("n", 5);
        report.push("witness", csv(&VertexSet::new()));
        let text = report.render("solve --graph g.g6", 12);
        validate_report(&text).unwrap();
        assert!(text.starts_with("locdom-report v1\ncommand: solve --graph g.g6\n"));
        assert!(text.contains("witness: -\n"));
        assert!(text.ends_with("elapsed-ms: 12\n"));
    }

    #[test]
    fn validator_rejects_malformed_documents() {
        assert_eq!(
            validate_report("locdom-report v2\n"),
            Err(ReportError::BadHeader {
                found: "locdom-report v2".to_string()
            })
        );
        let text = format!("{REPORT_HEADER}\ncommand: x\nversion: 1\nelapsed-ms: 0\nBadKey: y\n");
        assert_eq!(
            validate_report(&text),
            Err(ReportError::BadLine {
                line: 5,
                text: "BadKey: y".to_string()
            })
        );
        let text = format!("{REPORT_HEADER}\ncommand: x\nno-colon-here\n");
        assert!(matches!(
            validate_report(&text),
            Err(ReportError::BadLine { line: 3, .. })
        ));
        let text = format!("{REPORT_HEADER}\ncommand: x\nversion: 1\n");
        assert_eq!(
            validate_report(&text),
            Err(ReportError::MissingKey { key: "elapsed-ms" })
        );
    }

    #[test]
    fn sets_parse_with_range_checking() {
        let s = parse_set("0,2, 5", 6).unwrap();
        assert_eq!(csv(&s), "0,2,5");
        assert_eq!(parse_set("", 4).unwrap(), VertexSet::new());
        assert!(parse_set("1,zebra", 4).unwrap_err().contains("zebra"));
        assert!(parse_set("4", 4).unwrap_err().contains("out of range"));
    }

    #[test]
    fn output_format_follows_extension() {
        assert_eq!(
            OutputFormat::for_path(Path::new("x.g6")),
            OutputFormat::Graph6
        );
        assert_eq!(
            OutputFormat::for_path(Path::new("x.dot")),
            OutputFormat::Dot
        );
        assert_eq!(OutputFormat::for_path(Path::new("x.gv")), OutputFormat::Dot);
        assert_eq!(
            OutputFormat::for_path(Path::new("x.txt")),
            OutputFormat::EdgeList
        );
        assert_eq!(
            OutputFormat::for_path(Path::new("x")),
            OutputFormat::EdgeList
        );
    }

    #[test]
    fn dot_export_lists_vertices_and_edges() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let dot = to_dot(&g);
        assert_eq!(dot, "graph {\n  0;\n  1;\n  2;\n  0 -- 1;\n}\n");
    }

    #[test]
    fn cli_parses_the_documented_surface() {
        use clap::Parser;
        let cli = Cli::try_parse_from([
            "locdom",
            "sweep",
            "--n",
            "10",
            "--cubic",
            "--connected",
            "--twin-free",
        ])
        .unwrap();
        assert!(matches!(
            cli.command,
            Command::Sweep {
                n: 10,
                cubic: true,
                connected: true,
                twin_free: true,
                ..
            }
        ));
        assert!(
            Cli::try_parse_from(["locdom", "enum", "--n", "5", "--cubic", "--subcubic"]).is_err()
        );
    }
}
