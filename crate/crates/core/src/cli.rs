//! Command-line front end.
//!
//! Graphs are named with a small family language:
//! `path:N`, `cycle:N`, `kpartite:a,b,c` or `file:PATH` (edge-list format).
//! Every command prints either `key = value` lines or one JSON object whose
//! fields carry the names of the library types.
//!
//! Exit codes: 0 success, 1 input error, 2 size guard refused (rerun with
//! `--force`), 3 a check ran and failed (sweep mismatch, invalid
//! certificate, broken reduction equivalence).

use std::fmt::Write as _;
use std::fs;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::Once;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use crate::bounds::{bound_report, mu_p_with_witness};
use crate::closed_forms::{
    gamma_p_cycle, gamma_p_multipartite, gamma_p_path, r_1_path_cycle, r_p_cycle,
    r_p_multipartite, r_p_multipartite_by_counts, r_p_path, ClosedFormError, PartiteSpec,
};
use crate::corpus::{connected_graphs, partite_specs};
use crate::domination::gamma_p;
use crate::edge_list::{parse_edge_list, serialize_edge_list};
use crate::graph::Graph;
use crate::reduction::{
    build_gadget, check_reduction_with_limit, parse_dimacs_cnf, Cnf3, ReductionError,
    GADGET_VERTEX_LIMIT,
};
use crate::reinforcement::{check_certificate, eta_p, r_p, ReinforcementCertificate, ReinforcementError};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_GUARD: u8 = 2;
pub const EXIT_CHECK_FAILED: u8 = 3;

/// Default vertex limits per kernel.
pub const GAMMA_GUARD: usize = 24;
pub const ETA_GUARD: usize = 20;
pub const MU_GUARD: usize = 18;

#[derive(Debug, Clone, Parser)]
#[command(name = "preinforce", version, about = "Exact p-domination and p-reinforcement numbers")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Run exponential kernels above the default size guards.
    #[arg(long, global = true)]
    pub force: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct GraphArgs {
    /// path:N | cycle:N | kpartite:a,b,c | file:PATH
    #[arg(long)]
    pub family: Family,
    #[arg(short = 'p', value_parser = parse_p)]
    pub p: usize,
}

#[derive(Debug, Clone, Args)]
pub struct CnfArgs {
    /// DIMACS CNF file with 3-literal clauses
    #[arg(long)]
    pub cnf: PathBuf,
    #[arg(short = 'p', value_parser = parse_p)]
    pub p: usize,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// p-domination number and a minimum witness
    Gamma(GraphArgs),
    /// p-reinforcement number with an edge certificate
    Reinforce(GraphArgs),
    /// minimum total deficiency over sets of size gamma_p - 1
    Eta(GraphArgs),
    /// private-neighbor bound mu_p with its witness
    Mu(GraphArgs),
    /// exact r_p next to every applicable upper bound
    Bounds(GraphArgs),
    /// closed-form values for paths, cycles and complete multipartite graphs
    Formula(GraphArgs),
    /// build the gadget graph of a CNF
    Reduce {
        #[command(flatten)]
        input: CnfArgs,
        /// write PREFIX.edges and PREFIX.labels instead of printing
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// check satisfiability against r_p(gadget) = 1
    Verify(CnfArgs),
    /// validate a reinforcement certificate (JSON from `reinforce`)
    VerifyCert {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        cert: PathBuf,
    },
    /// compare exact values with formulas and bounds over a family range
    Sweep {
        /// path:A..=B | cycle:A..=B | kpartite-all:N | connected:A..=B
        #[arg(long)]
        family: SweepFamily,
        #[arg(long = "p-range", value_parser = parse_range)]
        p_range: RangeInclusive<usize>,
    },
}

fn parse_p(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("p must be at least 1".into()),
        Ok(p) => Ok(p),
        Err(e) => Err(e.to_string()),
    }
}

/// `A..=B`, `A..B` or a single `N`.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    let range = if let Some((a, b)) = s.split_once("..=") {
        num(a)?..=num(b)?
    } else if let Some((a, b)) = s.split_once("..") {
        let b = num(b)?;
        if b == 0 {
            return Err(format!("empty range {s:?}"));
        }
        num(a)?..=b - 1
    } else {
        let n = num(s)?;
        n..=n
    };
    if range.is_empty() {
        return Err(format!("empty range {s:?}"));
    }
    Ok(range)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Kpartite(PartiteSpec),
    File(PathBuf),
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (kind, arg) = s
            .split_once(':')
            .ok_or_else(|| format!("expected KIND:ARG, got {s:?}"))?;
        let size = || arg.parse::<usize>().map_err(|e| format!("{arg:?}: {e}"));
        match kind {
            "path" => Ok(Family::Path(size()?)),
            "cycle" => Ok(Family::Cycle(size()?)),
            "kpartite" => {
                let parts = arg
                    .split(',')
                    .map(|t| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}")))
                    .collect::<Result<Vec<_>, _>>()?;
                PartiteSpec::new(parts).map(Family::Kpartite).map_err(|e| e.to_string())
            }
            "file" => Ok(Family::File(PathBuf::from(arg))),
            _ => Err(format!("unknown family {kind:?}")),
        }
    }
}

impl Family {
    pub fn graph(&self) -> Result<Graph, CliError> {
        let input = |e: &dyn std::fmt::Display| CliError::Input(e.to_string());
        match self {
            Family::Path(n) => Graph::path(*n).map_err(|e| input(&e)),
            Family::Cycle(n) => Graph::cycle(*n).map_err(|e| input(&e)),
            Family::Kpartite(spec) => Ok(Graph::complete_multipartite(spec)),
            Family::File(path) => {
                let text = read(path)?;
                parse_edge_list(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SweepFamily {
    Path(RangeInclusive<usize>),
    Cycle(RangeInclusive<usize>),
    KpartiteAll(usize),
    Connected(RangeInclusive<usize>),
}

impl FromStr for SweepFamily {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (kind, arg) = s
            .split_once(':')
            .ok_or_else(|| format!("expected KIND:RANGE, got {s:?}"))?;
        match kind {
            "path" => Ok(SweepFamily::Path(parse_range(arg)?)),
            "cycle" => Ok(SweepFamily::Cycle(parse_range(arg)?)),
            "kpartite-all" => arg
                .parse()
                .map(SweepFamily::KpartiteAll)
                .map_err(|e| format!("{arg:?}: {e}")),
            "connected" => Ok(SweepFamily::Connected(parse_range(arg)?)),
            _ => Err(format!("unknown sweep family {kind:?}")),
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0} (use --force to override)")]
    Guard(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Guard(_) => EXIT_GUARD,
        }
    }
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub exit_code: u8,
    pub stdout: String,
    pub stderr: String,
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn guard(n: usize, limit: usize, what: &str, force: bool) -> Result<(), CliError> {
    if n > limit && !force {
        Err(CliError::Guard(format!("{what} refuses n = {n} > {limit}")))
    } else {
        Ok(())
    }
}

/// Caps the global rayon pool at `PREINFORCE_THREADS` when set.
pub fn configure_threads() {
    static INIT: Once = Once::new();
    INIT.call_once(|| {
        if let Some(k) = std::env::var("PREINFORCE_THREADS").ok().and_then(|v| v.parse().ok()) {
            // fails only if the pool already exists; keep it then
            let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
        }
    });
}

/// `key = value` lines for each top-level field.
fn text_lines(value: &Value) -> String {
    let mut s = String::new();
    if let Value::Object(map) = value {
        for (k, v) in map {
            let rendered = match v {
                Value::String(t) => t.clone(),
                other => other.to_string(),
            };
            writeln!(s, "{k} = {rendered}").unwrap();
        }
    }
    s
}

struct Report {
    json: Value,
    text: Option<String>,
    failed: bool,
}

impl Report {
    fn new(value: &impl Serialize) -> Self {
        Report { json: serde_json::to_value(value).expect("plain data"), text: None, failed: false }
    }

    fn with_text(mut self, text: String) -> Self {
        self.text = Some(text);
        self
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => format!("{}\n", serde_json::to_string_pretty(&self.json).unwrap()),
            Format::Text => self.text.clone().unwrap_or_else(|| text_lines(&self.json)),
        }
    }
}

pub fn run(config: &RunConfig) -> Outcome {
    configure_threads();
    match dispatch(config) {
        Ok(report) => Outcome {
            exit_code: if report.failed { EXIT_CHECK_FAILED } else { EXIT_OK },
            stdout: report.render(config.format),
            stderr: String::new(),
        },
        Err(e) => Outcome { exit_code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn dispatch(config: &RunConfig) -> Result<Report, CliError> {
    let force = config.force;
    match &config.command {
        Command::Gamma(a) => {
            let g = a.family.graph()?;
            guard(g.n(), GAMMA_GUARD, "gamma", force)?;
            Ok(Report::new(&gamma_p(&g, a.p)))
        }
        Command::Reinforce(a) => {
            let g = a.family.graph()?;
            guard(g.n(), ETA_GUARD, "reinforce", force)?;
            Ok(Report::new(&r_p(&g, a.p)))
        }
        Command::Eta(a) => {
            let g = a.family.graph()?;
            guard(g.n(), ETA_GUARD, "eta", force)?;
            match eta_p(&g, a.p) {
                Ok(e) => Ok(Report::new(&e)),
                Err(e @ ReinforcementError::ConventionCase { .. }) => {
                    Err(CliError::Input(format!("eta_p is undefined: {e}")))
                }
                Err(e) => Err(CliError::Input(e.to_string())),
            }
        }
        Command::Mu(a) => {
            let g = a.family.graph()?;
            guard(g.n(), MU_GUARD, "mu", force)?;
            mu_p_with_witness(&g, a.p)
                .map(|w| Report::new(&w))
                .ok_or_else(|| CliError::Input("mu_p needs a nonempty graph".into()))
        }
        Command::Bounds(a) => {
            let g = a.family.graph()?;
            guard(g.n(), MU_GUARD, "bounds", force)?;
            let report = bound_report(&g, a.p);
            let text = format!("{}\n", report.to_text());
            let failed = !report.all_hold;
            let mut r = Report::new(&report).with_text(text);
            r.failed = failed;
            Ok(r)
        }
        Command::Formula(a) => formula(&a.family, a.p),
        Command::Reduce { input, out } => reduce(input, out.as_ref()),
        Command::Verify(input) => verify(input, force),
        Command::VerifyCert { graph, cert } => {
            let g = graph.family.graph()?;
            guard(g.n(), GAMMA_GUARD, "verify-cert", force)?;
            let text = read(cert)?;
            let parsed: ReinforcementCertificate = serde_json::from_str(&text)
                .map_err(|e| CliError::Input(format!("{}: {e}", cert.display())))?;
            let flaw = check_certificate(&g, graph.p, &parsed).err().map(|f| f.to_string());
            #[derive(Serialize)]
            struct CertCheck {
                valid: bool,
                flaw: Option<String>,
            }
            let valid = flaw.is_none();
            let text = match &flaw {
                None => "certificate valid\n".to_string(),
                Some(f) => format!("certificate invalid: {f}\n"),
            };
            let mut r = Report::new(&CertCheck { valid, flaw }).with_text(text);
            r.failed = !valid;
            Ok(r)
        }
        Command::Sweep { family, p_range } => sweep(family, p_range.clone(), force),
    }
}

/// Closed-form values for a path or cycle.
#[derive(Debug, Clone, Serialize)]
pub struct ClosedFormReport {
    pub family: String,
    pub n: usize,
    pub p: usize,
    /// `None` for `p = 1`, which has no closed form here.
    pub gamma_p: Option<usize>,
    pub r_p: usize,
    /// `true` when `γ_p <= p` and `r_p = 0` by convention.
    pub convention: bool,
}

type ClosedFormFn = fn(usize, usize) -> Result<usize, ClosedFormError>;

fn closed_form(kind: &str, n: usize, p: usize) -> Result<ClosedFormReport, CliError> {
    let (gamma_fn, r_fn): (ClosedFormFn, ClosedFormFn) = match kind {
        "path" => (gamma_p_path, r_p_path),
        _ => (gamma_p_cycle, r_p_cycle),
    };
    let input = |e: ClosedFormError| CliError::Input(e.to_string());
    let (gamma_p, r, convention) = if p == 1 {
        (None, r_1_path_cycle(n).map_err(input)?, false)
    } else {
        let gamma = gamma_fn(n, p).map_err(input)?;
        match r_fn(n, p) {
            Ok(r) => (Some(gamma), r, false),
            Err(ClosedFormError::NotApplicable { .. }) => (Some(gamma), 0, true),
            Err(e) => return Err(input(e)),
        }
    };
    Ok(ClosedFormReport { family: kind.to_string(), n, p, gamma_p, r_p: r, convention })
}

fn formula(family: &Family, p: usize) -> Result<Report, CliError> {
    match family {
        Family::Path(n) => Ok(Report::new(&closed_form("path", *n, p)?)),
        Family::Cycle(n) => Ok(Report::new(&closed_form("cycle", *n, p)?)),
        Family::Kpartite(spec) => {
            let f = r_p_multipartite(spec, p).map_err(|e| CliError::Input(e.to_string()))?;
            let counts = r_p_multipartite_by_counts(spec, p).map_err(|e| CliError::Input(e.to_string()))?;
            let mut text = String::new();
            writeln!(text, "gamma_p = {}", f.gamma_p).unwrap();
            writeln!(text, "r_p = {}", f.r_p).unwrap();
            writeln!(text, "r_p_by_counts = {counts}").unwrap();
            writeln!(text, "minimizer = {:?}", f.minimizer).unwrap();
            writeln!(text, "{:<16} {:<14} {:>4} {:>4} {:>6}", "X", "positions", "f", "f*", "term").unwrap();
            let mut undefined = false;
            for t in &f.terms {
                // no qualifying Y: shown as the empty maximum 0, marked
                let (fs, term) = match (t.f_star, t.term) {
                    (Some(fs), Some(term)) => (fs.to_string(), term.to_string()),
                    _ => {
                        undefined = true;
                        ("0*".to_string(), format!("{}*", p * (t.f - f.gamma_p + 1)))
                    }
                };
                writeln!(
                    text,
                    "{:<16} {:<14} {:>4} {:>4} {:>6}",
                    format!("{:?}", t.parts),
                    format!("{:?}", t.positions),
                    t.f,
                    fs,
                    term
                )
                .unwrap();
            }
            if undefined {
                writeln!(text, "* no Y = X minus one part has f(Y) < p; f* read as max of nothing = 0").unwrap();
            }
            let mut report = Report::new(&f).with_text(text);
            report.json["r_p_by_counts"] = counts.into();
            Ok(report)
        }
        Family::File(_) => Err(CliError::Input(
            "no closed form for an arbitrary graph; use reinforce".into(),
        )),
    }
}

fn load_cnf(path: &PathBuf) -> Result<(Cnf3, Vec<String>), CliError> {
    let text = read(path)?;
    let (cnf, warnings) =
        parse_dimacs_cnf(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let warnings = warnings
        .into_iter()
        .map(|w| match w {
            crate::reduction::CnfWarning::UncoveredLiteral(l) => format!("literal {l} occurs in no clause"),
        })
        .collect();
    Ok((cnf, warnings))
}

fn reduce(input: &CnfArgs, out: Option<&PathBuf>) -> Result<Report, CliError> {
    let (cnf, warnings) = load_cnf(&input.cnf)?;
    let gadget = build_gadget(&cnf, input.p).map_err(|e| CliError::Input(e.to_string()))?;
    let edges = serialize_edge_list(gadget.graph());
    let labels = gadget.labels_text();

    #[derive(Serialize)]
    struct ReduceReport {
        vertices: usize,
        edges: usize,
        expected_gamma_p: usize,
        warnings: Vec<String>,
        #[serde(skip_serializing_if = "Option::is_none")]
        edges_path: Option<String>,
        #[serde(skip_serializing_if = "Option::is_none")]
        labels_path: Option<String>,
        #[serde(skip_serializing_if = "Option::is_none")]
        edge_list: Option<String>,
        #[serde(skip_serializing_if = "Option::is_none")]
        label_table: Option<String>,
    }
    let mut report = ReduceReport {
        vertices: gadget.graph().n(),
        edges: gadget.graph().edge_count(),
        expected_gamma_p: gadget.expected_gamma(),
        warnings,
        edges_path: None,
        labels_path: None,
        edge_list: None,
        label_table: None,
    };
    let text = match out {
        Some(prefix) => {
            let with_ext = |ext: &str| {
                let mut s = prefix.as_os_str().to_owned();
                s.push(ext);
                PathBuf::from(s)
            };
            let (ep, lp) = (with_ext(".edges"), with_ext(".labels"));
            let write = |p: &PathBuf, body: &str| {
                fs::write(p, body).map_err(|e| CliError::Input(format!("{}: {e}", p.display())))
            };
            write(&ep, &edges)?;
            write(&lp, &labels)?;
            report.edges_path = Some(ep.display().to_string());
            report.labels_path = Some(lp.display().to_string());
            None
        }
        None => {
            let t = format!("{edges}{}", report.warnings.iter().map(|w| format!("# warning: {w}\n")).collect::<String>());
            report.edge_list = Some(edges);
            report.label_table = Some(labels);
            Some(t)
        }
    };
    let r = Report::new(&report);
    Ok(match text {
        Some(t) => r.with_text(t),
        None => r,
    })
}

fn verify(input: &CnfArgs, force: bool) -> Result<Report, CliError> {
    let (cnf, _) = load_cnf(&input.cnf)?;
    let limit = if force { usize::MAX } else { GADGET_VERTEX_LIMIT };
    let check = check_reduction_with_limit(&cnf, input.p, limit).map_err(|e| match e {
        ReductionError::GadgetTooLarge { .. } => CliError::Guard(e.to_string()),
        other => CliError::Input(other.to_string()),
    })?;
    let text = format!(
        "{}\ngamma_p = {} (expected {})\n",
        check.summary(),
        check.gamma_p,
        check.expected_gamma_p
    );
    let failed = !check.holds;
    let mut r = Report::new(&check).with_text(text);
    r.failed = failed;
    Ok(r)
}

/// One instance of a sweep.
#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub instance: String,
    pub n: usize,
    pub p: usize,
    pub gamma_p: usize,
    pub gamma_p_formula: Option<usize>,
    pub r_p_formula: Option<usize>,
    /// Per-part count minimum, complete multipartite graphs only.
    pub r_p_by_counts: Option<usize>,
    pub r_p_exact: usize,
    pub mu_p: usize,
    pub bounds_hold: bool,
    pub matches: bool,
}

enum Formulas {
    Path(usize),
    Cycle(usize),
    Kpartite(PartiteSpec),
    None,
}

fn sweep_row(instance: String, g: &Graph, formulas: &Formulas, p: usize) -> SweepRow {
    let report = bound_report(g, p);
    let gamma = report.gamma_p;
    let (gamma_formula, r_formula) = match formulas {
        Formulas::Path(n) | Formulas::Cycle(n) => {
            let (gf, rf): (ClosedFormFn, ClosedFormFn) = match formulas {
                Formulas::Path(_) => (gamma_p_path, r_p_path),
                _ => (gamma_p_cycle, r_p_cycle),
            };
            if p == 1 {
                (None, (gamma > 1).then(|| r_1_path_cycle(*n).ok()).flatten())
            } else {
                (gf(*n, p).ok(), rf(*n, p).ok())
            }
        }
        Formulas::Kpartite(spec) => (
            gamma_p_multipartite(spec, p).ok(),
            r_p_multipartite(spec, p).ok().map(|f| f.r_p),
        ),
        Formulas::None => (None, None),
    };
    let r_by_counts = match formulas {
        Formulas::Kpartite(spec) => r_p_multipartite_by_counts(spec, p).ok(),
        _ => None,
    };
    let r_expected = if gamma > p { r_formula } else { Some(0) };
    let matches = gamma_formula.is_none_or(|v| v == gamma)
        && r_expected.is_none_or(|v| v == report.r_p_exact)
        && report.all_hold;
    SweepRow {
        instance,
        n: g.n(),
        p,
        gamma_p: gamma,
        gamma_p_formula: gamma_formula,
        r_p_formula: r_formula,
        r_p_by_counts: r_by_counts,
        r_p_exact: report.r_p_exact,
        mu_p: report.mu_p,
        bounds_hold: report.all_hold,
        matches,
    }
}

fn sweep_instances(family: &SweepFamily) -> Result<Vec<(String, Graph, Formulas)>, CliError> {
    let input = |e: crate::graph::GraphError| CliError::Input(e.to_string());
    Ok(match family {
        SweepFamily::Path(r) => r
            .clone()
            .map(|n| Ok((format!("path:{n}"), Graph::path(n).map_err(input)?, Formulas::Path(n))))
            .collect::<Result<_, CliError>>()?,
        SweepFamily::Cycle(r) => r
            .clone()
            .map(|n| Ok((format!("cycle:{n}"), Graph::cycle(n).map_err(input)?, Formulas::Cycle(n))))
            .collect::<Result<_, CliError>>()?,
        SweepFamily::KpartiteAll(total) => partite_specs(*total, 2..=4)
            .into_iter()
            .map(|s| {
                let parts: Vec<String> = s.parts().iter().map(usize::to_string).collect();
                (format!("kpartite:{}", parts.join(",")), Graph::complete_multipartite(&s), Formulas::Kpartite(s))
            })
            .collect(),
        SweepFamily::Connected(r) => {
            if *r.end() > crate::corpus::MAX_CANONICAL_VERTICES {
                return Err(CliError::Input(format!(
                    "connected graphs are enumerated up to n = {}",
                    crate::corpus::MAX_CANONICAL_VERTICES
                )));
            }
            r.clone()
                .flat_map(|n| {
                    connected_graphs(n)
                        .into_iter()
                        .enumerate()
                        .map(move |(i, g)| (format!("connected:{n}#{i}"), g, Formulas::None))
                })
                .collect()
        }
    })
}

fn sweep(family: &SweepFamily, p_range: RangeInclusive<usize>, force: bool) -> Result<Report, CliError> {
    if *p_range.start() == 0 {
        return Err(CliError::Input("p must be at least 1".into()));
    }
    let instances = sweep_instances(family)?;
    if let Some(n) = instances.iter().map(|(_, g, _)| g.n()).max() {
        guard(n, MU_GUARD, "sweep", force)?;
    }
    let jobs: Vec<(usize, usize)> = (0..instances.len())
        .flat_map(|i| p_range.clone().map(move |p| (i, p)))
        .collect();
    let rows: Vec<SweepRow> = jobs
        .par_iter()
        .map(|&(i, p)| {
            let (name, g, f) = &instances[i];
            sweep_row(name.clone(), g, f, p)
        })
        .collect();
    let mismatches = rows.iter().filter(|r| !r.matches).count();

    let opt = |v: Option<usize>| v.map_or(String::new(), |x| x.to_string());
    let mut csv = String::from("instance,n,p,gamma_p,gamma_p_formula,r_p_formula,r_p_by_counts,r_p_exact,mu_p,bounds_hold,matches\n");
    for r in &rows {
        writeln!(
            csv,
            "{},{},{},{},{},{},{},{},{},{},{}",
            r.instance,
            r.n,
            r.p,
            r.gamma_p,
            opt(r.gamma_p_formula),
            opt(r.r_p_formula),
            opt(r.r_p_by_counts),
            r.r_p_exact,
            r.mu_p,
            r.bounds_hold,
            r.matches
        )
        .unwrap();
    }
    #[derive(Serialize)]
    struct SweepReport {
        rows: Vec<SweepRow>,
        mismatches: usize,
    }
    let mut r = Report::new(&SweepReport { rows, mismatches }).with_text(csv);
    r.failed = mismatches > 0;
    Ok(r)
}
