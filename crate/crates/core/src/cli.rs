//! Command-line front end. [`run`] is the whole program minus process
//! plumbing so it can be driven from tests and bindings.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hessian::{
    cayley_check, check_log_concavity, complete_graph_hessian_identity, euler_check,
    identity1_check, IdentityMode, LogConcavityMode, RationalPoint, SYMBOLIC_MAX_R,
};
use crate::identity::{DEFAULT_SEED, DEFAULT_TRIALS};
use crate::lefschetz::{graph_slp_report, hodge_riemann_form, hodge_riemann_relation, slp_degree_one};
use crate::matrix_tree::{kirchhoff_polynomial, KirchhoffRoute};
use crate::poly::Polynomial;
use crate::rational::{format_rational, parse_rational};
use crate::report::VerificationReport;
use crate::sweep::{run_suite, SweepConfig, SUITES};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "kirchhoff", version, about = "Exact certificates for Kirchhoff polynomials")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Master seed for every randomized step.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Trials for randomized identity tests.
    #[arg(long, global = true, default_value_t = DEFAULT_TRIALS, value_parser = clap::value_parser!(u32).range(1..))]
    pub trials: u32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Input {
    /// Builtin graph (`K<m>`) or path to a graph file.
    #[arg(value_name = "GRAPH")]
    pub positional: Option<String>,
    /// Builtin graph (`K<m>`) or path to a graph file.
    #[arg(long)]
    pub graph: Option<String>,
    /// Graph file in the `p` / `e` text format.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Polynomial such as `x1*x2 + x1*x3 + x2*x3`.
    #[arg(long, conflicts_with_all = ["graph", "file", "positional"])]
    pub poly: Option<String>,
    /// Remove the first edge joining `u` and `v` (repeatable).
    #[arg(long = "delete", value_name = "U-V")]
    pub delete: Vec<String>,
}

#[derive(Args, Debug, Clone, Default)]
pub struct PointArgs {
    /// Comma-separated rationals; defaults to all ones.
    #[arg(long, allow_hyphen_values = true)]
    pub point: Option<String>,
    /// 1-based coordinates required strictly positive (comma-separated).
    #[arg(long)]
    pub cone: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Kirchhoff polynomial by both routes.
    Kirchhoff {
        #[command(flatten)]
        input: Input,
    },
    /// Spanning-tree count, optionally listed.
    Trees {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        list: bool,
    },
    /// (Strict) (homogeneous) log-concavity at a point.
    Logconcavity {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        point: PointArgs,
        #[arg(long, default_value = "strict_homogeneous")]
        mode: String,
        /// Fixed rank-one coefficient; quantified over the threshold range when omitted.
        #[arg(long)]
        s: Option<String>,
    },
    /// Hessian determinant identity of the complete graph on r+1 vertices.
    HessianIdentity {
        #[arg(long)]
        r: u32,
        /// `symbolic` or `evaluation`; symbolic by default when supported.
        #[arg(long)]
        mode: Option<String>,
    },
    /// Degree-one strong Lefschetz report.
    Slp {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        point: PointArgs,
    },
    /// Hodge-Riemann form and relation at degree one.
    HodgeRiemann {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        point: PointArgs,
    },
    /// Euler identities, symbolically.
    Euler {
        #[command(flatten)]
        input: Input,
    },
    /// Determinant identity for -F H + s grad grad^t.
    Identity1 {
        #[command(flatten)]
        input: Input,
    },
    /// Spanning trees of the complete graph on r+1 vertices.
    Cayley {
        #[arg(long)]
        r: u32,
    },
    /// Corpus property suites.
    Sweep {
        /// Suite to run (repeatable); all by default.
        #[arg(long = "suite")]
        suites: Vec<String>,
        #[arg(long, default_value_t = 5)]
        points: usize,
        #[arg(long, default_value_t = 6)]
        max_vertices: usize,
        /// Print the suite names and exit.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Comma-separated rationals, each `-?\d+(/\d+)?`.
pub fn parse_point(text: &str) -> Result<RationalPoint> {
    let coords = text.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?;
    Ok(RationalPoint::new(coords))
}

struct Outcome {
    command: &'static str,
    params: Map<String, Value>,
    results: Vec<Value>,
    verdict: bool,
    text: String,
}

impl Outcome {
    fn new(command: &'static str) -> Self {
        Outcome { command, params: Map::new(), results: Vec::new(), verdict: true, text: String::new() }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn param(&mut self, key: &str, value: impl Into<Value>) {
        self.params.insert(key.into(), value.into());
    }

    fn push(&mut self, value: impl Serialize) {
        self.results.push(serde_json::to_value(value).expect("serializable"));
    }
}

enum Target {
    Graph { graph: Graph, name: String },
    Poly(Polynomial),
}

impl Target {
    fn polynomial(&self) -> Polynomial {
        match self {
            Target::Graph { graph, .. } => kirchhoff_polynomial(graph, KirchhoffRoute::MatrixTree),
            Target::Poly(p) => p.clone(),
        }
    }

    fn describe(&self) -> String {
        match self {
            Target::Graph { graph, name } => {
                format!("{name} ({} vertices, {} edges)", graph.num_vertices(), graph.num_edges())
            }
            Target::Poly(p) => format!("polynomial in {} variables", p.num_vars()),
        }
    }

    fn names(&self, n: usize) -> Vec<String> {
        match self {
            Target::Graph { graph, .. } => graph.labels(),
            Target::Poly(_) => (1..=n).map(|i| format!("x{i}")).collect(),
        }
    }
}

fn load_graph_spec(spec: &str) -> Result<Graph> {
    let path = std::path::Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{spec}: {e}")))?;
        return Graph::parse(&text);
    }
    Graph::build(spec)
}

fn delete_edges(mut g: Graph, deletions: &[String]) -> Result<Graph> {
    for d in deletions {
        let (u, v) = d
            .split_once('-')
            .and_then(|(u, v)| Some((u.trim().parse::<usize>().ok()?, v.trim().parse::<usize>().ok()?)))
            .ok_or_else(|| Error::Parse(format!("expected U-V, got '{d}'")))?;
        let idx = g
            .edges()
            .iter()
            .position(|e| (e.u, e.v) == (u, v) || (e.u, e.v) == (v, u))
            .ok_or_else(|| Error::Parse(format!("no edge {u}-{v} to delete")))?;
        let keep: Vec<usize> = (0..g.num_edges()).filter(|&k| k != idx).collect();
        g = g.edge_subgraph(&keep)?;
    }
    Ok(g)
}

fn resolve(input: &Input, out: &mut Outcome) -> Result<Target> {
    if let Some(text) = &input.poly {
        out.param("poly", text.as_str());
        return Ok(Target::Poly(Polynomial::parse(text, None)?));
    }
    let (graph, name) = match (&input.positional, &input.graph, &input.file) {
        (Some(s), None, None) | (None, Some(s), None) => (load_graph_spec(s)?, s.clone()),
        (None, None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            (Graph::parse(&text)?, path.display().to_string())
        }
        (None, None, None) => return Err(Error::Parse("no input: give a graph or --poly".into())),
        _ => return Err(Error::Parse("give exactly one of GRAPH, --graph, --file".into())),
    };
    out.param("graph", name.as_str());
    let graph = delete_edges(graph, &input.delete)?;
    let name = if input.delete.is_empty() { name } else { format!("{name} minus {}", input.delete.join(",")) };
    if !input.delete.is_empty() {
        out.param("delete", input.delete.clone());
    }
    Ok(Target::Graph { graph, name })
}

fn resolve_point(args: &PointArgs, n: usize, out: &mut Outcome) -> Result<RationalPoint> {
    let base = match &args.point {
        Some(text) => parse_point(text)?,
        None => RationalPoint::ones(n),
    };
    if base.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, got: base.dim() });
    }
    let point = match &args.cone {
        Some(text) => {
            let idx = text
                .split(',')
                .map(|t| match t.trim().parse::<usize>() {
                    Ok(i) if i >= 1 => Ok(i - 1),
                    _ => Err(Error::Parse(format!("bad cone index '{t}'"))),
                })
                .collect::<Result<Vec<_>>>()?;
            out.param("cone", idx.iter().map(|i| i + 1).collect::<Vec<_>>());
            RationalPoint::with_cone(base.coords().to_vec(), idx)?
        }
        None => base,
    };
    out.param("point", serde_json::to_value(&point).expect("serializable"));
    Ok(point)
}

fn report_text(out: &mut Outcome, rep: &VerificationReport) {
    out.line(format!("claim: {}", rep.claim));
    if let Some(mode) = &rep.mode {
        out.line(format!("mode: {mode}"));
    }
    for (k, v) in &rep.details {
        out.line(format!("{k}: {}", plain(v)));
    }
    if let Some(w) = &rep.witness {
        out.line(format!("witness: {w}"));
    }
    out.line(format!("verdict: {}", rep.verdict));
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn kirchhoff_cmd(input: &Input, out: &mut Outcome) -> Result<()> {
    let target = resolve(input, out)?;
    let Target::Graph { graph, .. } = &target else {
        return Err(Error::Parse("kirchhoff needs a graph".into()));
    };
    let mt = kirchhoff_polynomial(graph, KirchhoffRoute::MatrixTree);
    let en = kirchhoff_polynomial(graph, KirchhoffRoute::Enumeration);
    let trees = graph.spanning_trees();
    let names = graph.labels();
    let matches = mt == en;
    out.verdict = matches;
    out.line(format!("graph: {}", target.describe()));
    let vars: Vec<String> = names.iter().enumerate().map(|(i, l)| format!("x{}={l}", i + 1)).collect();
    out.line(format!("variables: {}", vars.join(" ")));
    if trees.disconnected {
        out.line("warning: graph is disconnected, F = 0");
    }
    out.line(format!("F (matrix-tree): {}", mt.pretty(&names)));
    out.line(format!("F (enumeration): {}", en.pretty(&names)));
    out.line(format!("canonical: {mt}"));
    out.line(format!("terms: {}", mt.num_terms()));
    out.line(format!("spanning trees: {}", trees.len()));
    out.line(format!("match: {matches}"));
    out.push(json!({
        "num_vertices": graph.num_vertices(),
        "num_edges": graph.num_edges(),
        "variables": names,
        "matrix_tree": mt.to_string(),
        "enumeration": en.to_string(),
        "labeled": mt.pretty(&names),
        "terms": mt.num_terms(),
        "spanning_trees": trees.len(),
        "disconnected": trees.disconnected,
        "match": matches,
    }));
    Ok(())
}

fn trees_cmd(input: &Input, list: bool, out: &mut Outcome) -> Result<()> {
    let target = resolve(input, out)?;
    let Target::Graph { graph, .. } = &target else {
        return Err(Error::Parse("trees needs a graph".into()));
    };
    let trees = graph.spanning_trees();
    let labels: Vec<String> = graph.edges().iter().map(|e| e.label.clone()).collect();
    out.line(format!("graph: {}", target.describe()));
    if trees.disconnected {
        out.line("warning: graph is disconnected");
    }
    out.line(format!("spanning trees: {}", trees.len()));
    let listed: Vec<Vec<String>> =
        trees.trees.iter().map(|t| t.iter().map(|&e| labels[e].clone()).collect()).collect();
    if list {
        for t in &listed {
            out.line(format!("  {{{}}}", t.join(", ")));
        }
    }
    let mut result = json!({"count": trees.len(), "disconnected": trees.disconnected});
    if list {
        result["trees"] = json!(listed);
    }
    out.push(result);
    Ok(())
}

fn logconcavity_cmd(input: &Input, point: &PointArgs, mode: &str, s: Option<&str>, out: &mut Outcome) -> Result<()> {
    let target = resolve(input, out)?;
    let f = target.polynomial();
    let mode: LogConcavityMode = mode.parse()?;
    out.param("mode", mode.as_str());
    let s = s.map(parse_rational).transpose()?;
    if let Some(s) = &s {
        out.param("s", format_rational(s));
    }
    let a = resolve_point(point, f.num_vars(), out)?;
    let v = check_log_concavity(&f, &a, mode, s.as_ref())?;
    out.verdict = v.verdict;
    out.line(format!("input: {}", target.describe()));
    out.line(format!("point: {a}"));
    out.line(format!("mode: {mode}"));
    out.line(format!("s: {}", v.s_parameter));
    out.line(format!("F(a): {}", format_rational(&v.value)));
    out.line(format!("inertia: {}", v.inertia));
    if let Some(w) = &v.witness {
        let w: Vec<String> = w.iter().map(format_rational).collect();
        out.line(format!("witness: ({})", w.join(", ")));
    }
    if let Some(ws) = &v.witness_s {
        out.line(format!("witness s: {}", format_rational(ws)));
    }
    if let Some(reason) = &v.reason {
        out.line(format!("reason: {reason}"));
    }
    out.line(format!("verdict: {}", v.verdict));
    out.push(&v);
    Ok(())
}

fn hessian_identity_cmd(r: u32, mode: Option<&str>, trials: u32, seed: u64, out: &mut Outcome) -> Result<()> {
    let mode = match mode {
        Some(m) => m.parse()?,
        None if r <= SYMBOLIC_MAX_R => IdentityMode::Symbolic,
        None => IdentityMode::Evaluation,
    };
    out.param("r", r);
    out.param("mode", mode.to_string());
    let rep = complete_graph_hessian_identity(r, mode, trials, seed)?;
    out.verdict = rep.verdict;
    report_text(out, &rep);
    out.push(&rep);
    Ok(())
}

fn slp_cmd(input: &Input, point: &PointArgs, out: &mut Outcome) -> Result<()> {
    let target = resolve(input, out)?;
    let f = target.polynomial();
    let a = resolve_point(point, f.num_vars(), out)?;
    let rep = match &target {
        Target::Graph { graph, .. } => graph_slp_report(graph, &a)?,
        Target::Poly(p) => slp_degree_one(p, &a)?,
    };
    out.verdict = rep.slp_holds;
    out.line(format!("input: {}", target.describe()));
    out.line(format!("point: {a}"));
    out.line(format!("F(a): {}", format_rational(&rep.f_value)));
    out.line(format!("det H sign: {}", ["-", "0", "+"][(rep.det_sign + 1) as usize]));
    out.line(format!("inertia: {}", rep.hr_inertia));
    out.line(format!("hr: {}", rep.hr_relation_holds));
    out.line(format!("degree-one kernel dimension: {}", rep.kernel_dim));
    out.line(format!("slp: {}", rep.slp_holds));
    out.push(&rep);
    Ok(())
}

fn hodge_riemann_cmd(input: &Input, point: &PointArgs, out: &mut Outcome) -> Result<()> {
    let target = resolve(input, out)?;
    let f = target.polynomial();
    let a = resolve_point(point, f.num_vars(), out)?;
    let q = hodge_riemann_form(&f, &a)?;
    let rel = hodge_riemann_relation(&f, &a)?;
    out.verdict = rel.holds;
    out.line(format!("input: {}", target.describe()));
    out.line(format!("point: {a}"));
    out.line("form:");
    for row in q.rows() {
        let r: Vec<String> = row.iter().map(crate::rational::format_rational_short).collect();
        out.line(format!("  {}", r.join(" ")));
    }
    out.line(format!("inertia: {}", rel.inertia));
    out.line(format!("holds: {}", rel.holds));
    out.push(json!({"form": q.to_json(), "inertia": rel.inertia, "holds": rel.holds}));
    Ok(())
}

fn euler_cmd(input: &Input, out: &mut Outcome) -> Result<()> {
    let target = resolve(input, out)?;
    let f = target.polynomial();
    let rep = euler_check(&f)?;
    out.verdict = rep.holds;
    let names = target.names(f.num_vars());
    out.line(format!("input: {}", target.describe()));
    out.line(format!("degree: {}", rep.degree));
    out.line(format!("r(r-1)F - x^t H x = {}", rep.value_residual.pretty(&names)));
    let nonzero = rep.gradient_residuals.iter().filter(|p| !p.is_zero()).count();
    out.line(format!("nonzero entries of (r-1) grad F - H x: {nonzero}"));
    out.line(format!("holds: {}", rep.holds));
    out.push(json!({
        "holds": rep.holds,
        "degree": rep.degree,
        "value_residual": rep.value_residual.to_string(),
        "gradient_residuals": rep.gradient_residuals.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
    }));
    Ok(())
}

fn identity1_cmd(input: &Input, trials: u32, seed: u64, out: &mut Outcome) -> Result<()> {
    let target = resolve(input, out)?;
    let rep = identity1_check(&target.polynomial(), trials, seed)?;
    out.verdict = rep.verdict;
    out.line(format!("input: {}", target.describe()));
    report_text(out, &rep);
    out.push(&rep);
    Ok(())
}

fn cayley_cmd(r: u32, out: &mut Outcome) -> Result<()> {
    out.param("r", r);
    let rep = cayley_check(r)?;
    out.verdict = rep.verdict;
    report_text(out, &rep);
    out.push(&rep);
    Ok(())
}

fn sweep_cmd(suites: &[String], cfg: SweepConfig, list: bool, out: &mut Outcome) -> Result<()> {
    if list {
        for s in SUITES {
            out.line(*s);
        }
        out.push(SUITES);
        return Ok(());
    }
    let names: Vec<String> =
        if suites.is_empty() { SUITES.iter().map(|s| s.to_string()).collect() } else { suites.to_vec() };
    for n in &names {
        if !SUITES.contains(&n.as_str()) {
            return Err(Error::Parse(format!("unknown suite '{n}'")));
        }
    }
    out.param("suites", names.clone());
    out.param("points", cfg.points);
    out.param("max_vertices", cfg.max_vertices);
    for name in &names {
        let rep = run_suite(name, &cfg)?;
        out.verdict &= rep.passed;
        out.line(format!(
            "{:<22} cases {:>6}  failures {:>4}  {}",
            rep.name,
            rep.cases,
            rep.failure_count,
            if rep.passed { "PASS" } else { "FAIL" }
        ));
        for f in &rep.failures {
            out.line(format!("  {}: {}", f.case, f.detail));
        }
        out.push(&rep);
    }
    Ok(())
}

fn dispatch(cli: &Cli, out: &mut Outcome) -> Result<()> {
    let (seed, trials) = (cli.seed, cli.trials);
    match &cli.command {
        Command::Kirchhoff { input } => kirchhoff_cmd(input, out),
        Command::Trees { input, list } => trees_cmd(input, *list, out),
        Command::Logconcavity { input, point, mode, s } => logconcavity_cmd(input, point, mode, s.as_deref(), out),
        Command::HessianIdentity { r, mode } => hessian_identity_cmd(*r, mode.as_deref(), trials, seed, out),
        Command::Slp { input, point } => slp_cmd(input, point, out),
        Command::HodgeRiemann { input, point } => hodge_riemann_cmd(input, point, out),
        Command::Euler { input } => euler_cmd(input, out),
        Command::Identity1 { input } => identity1_cmd(input, trials, seed, out),
        Command::Cayley { r } => cayley_cmd(*r, out),
        Command::Sweep { suites, points, max_vertices, list } => {
            if !(1..=crate::corpus::MAX_CORPUS_VERTICES).contains(max_vertices) {
                return Err(Error::OutOfRange(format!("--max-vertices must be in 1..=7, got {max_vertices}")));
            }
            let cfg = SweepConfig { seed, points: *points, max_vertices: *max_vertices, trials };
            sweep_cmd(suites, cfg, *list, out)
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Kirchhoff { .. } => "kirchhoff",
        Command::Trees { .. } => "trees",
        Command::Logconcavity { .. } => "logconcavity",
        Command::HessianIdentity { .. } => "hessian-identity",
        Command::Slp { .. } => "slp",
        Command::HodgeRiemann { .. } => "hodge-riemann",
        Command::Euler { .. } => "euler",
        Command::Identity1 { .. } => "identity1",
        Command::Cayley { .. } => "cayley",
        Command::Sweep { .. } => "sweep",
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Exit codes: 0 all verdicts positive, 1 some verdict negative, 2 usage
/// or input error.
pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let msg = e.render().to_string();
            return if code == 0 {
                CliOutput { code, stdout: msg, stderr: String::new() }
            } else {
                CliOutput { code, stdout: String::new(), stderr: msg }
            };
        }
    };
    let mut out = Outcome::new(command_name(&cli.command));
    if let Err(e) = dispatch(&cli, &mut out) {
        return CliOutput { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") };
    }
    let code = if out.verdict { 0 } else { 1 };
    let stdout = match cli.format {
        Format::Json => {
            let doc = json!({
                "schema": SCHEMA_VERSION,
                "command": out.command,
                "params": Value::Object(out.params),
                "seed": cli.seed,
                "trials": cli.trials,
                "results": out.results,
                "verdict": out.verdict,
            });
            let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = out.text;
            s.push_str(&format!("seed: {}  trials: {}\n", cli.seed, cli.trials));
            s
        }
    };
    CliOutput { code, stdout, stderr: String::new() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    fn go(args: &[&str]) -> CliOutput {
        run(std::iter::once("kirchhoff").chain(args.iter().copied()))
    }

    #[test]
    fn parse_point_examples() {
        assert_eq!(parse_point("1,1,1").unwrap(), RationalPoint::ones(3));
        let p = parse_point("3/7,2,5/2").unwrap();
        assert_eq!(p.coords()[0], Rational::new(3.into(), 7.into()));
        assert!(parse_point("1/0").is_err());
        assert!(parse_point("1,,2").is_err());
    }

    #[test]
    fn kirchhoff_k4() {
        let out = go(&["kirchhoff", "K4"]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert!(out.stdout.contains("spanning trees: 16"));
        assert!(out.stdout.contains("match: true"));
        let minus = go(&["kirchhoff", "K4", "--delete", "2-3"]);
        assert!(minus.stdout.contains("spanning trees: 8"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(go(&["slp", "--graph", "K4", "--point", "1,1,1,1,1,1"]).code, 0);
        assert_eq!(go(&["logconcavity", "--poly", "x1^3 + x2^3 + x3^3"]).code, 1);
        assert_eq!(go(&["logconcavity", "--graph", "K4", "--point", "1,1"]).code, 2);
        assert_eq!(go(&["frobnicate"]).code, 2);
        assert_eq!(go(&["slp", "--graph", "K4", "--point", "1/0,1,1,1,1,1"]).code, 2);
        assert_eq!(go(&["--help"]).code, 0);
    }

    #[test]
    fn json_is_deterministic() {
        let a = go(&["hessian-identity", "--r", "4", "--mode", "evaluation", "--trials", "3", "--format", "json"]);
        let b = go(&["hessian-identity", "--r", "4", "--mode", "evaluation", "--trials", "3", "--format", "json"]);
        assert_eq!(a, b);
        let v: Value = serde_json::from_str(&a.stdout).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["seed"], 0);
        assert_eq!(v["trials"], 3);
        assert_eq!(v["verdict"], true);
    }
}
