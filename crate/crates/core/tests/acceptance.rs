//! Acceptance criteria 1-12, run sequentially so the timings are honest.
//! Prints one line per criterion and exits non-zero if any fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{leibniz_determinant, oracle_inertia};
use kirchhoff_core::cli;
use kirchhoff_core::corpus::{connected_graphs, multigraph_corpus, simple_corpus, simple_corpus_with_rank};
use kirchhoff_core::hessian::{complete_graph_hessian_identity, IdentityMode};
use kirchhoff_core::lefschetz::{degree_one_kernel, elementary_symmetric_slp};
use kirchhoff_core::rational::{factorial, int};
use kirchhoff_core::sweep::{run_suite, SuiteReport, SweepConfig};
use kirchhoff_core::{
    check_log_concavity, graph_slp_report, hessian_and_gradient_at, kirchhoff_polynomial, slp_degree_one, Graph,
    Inertia, KirchhoffRoute, LogConcavityMode, Polynomial, PolynomialMatrix, Rational, RationalPoint,
};
use num_traits::One;
use serde_json::Value;

struct Outcome {
    pass: bool,
    summary: String,
    notes: Vec<String>,
}

impl Outcome {
    fn new(pass: bool, summary: impl Into<String>) -> Self {
        Outcome { pass, summary: summary.into(), notes: Vec::new() }
    }

    fn note(mut self, n: impl Into<String>) -> Self {
        self.notes.push(n.into());
        self
    }
}

struct Criterion {
    id: u32,
    title: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

const K4_TERMS: [&str; 16] = [
    "12 13 14", "12 14 23", "13 14 23", "12 13 24", "13 14 24", "12 23 24", "13 23 24", "14 23 24",
    "12 13 34", "12 14 34", "12 23 34", "13 23 34", "14 23 34", "12 24 34", "13 24 34", "14 24 34",
];

const K4_MINUS_23_TERMS: [&str; 8] =
    ["12 13 14", "12 13 24", "13 14 24", "12 13 34", "12 14 34", "12 24 34", "13 24 34", "14 24 34"];

fn term_sets(g: &Graph) -> Option<BTreeSet<String>> {
    let f = kirchhoff_polynomial(g, KirchhoffRoute::Enumeration);
    let labels: Vec<&str> = g.edges().iter().map(|e| e.label.as_str()).collect();
    let mut out = BTreeSet::new();
    for (m, c) in f.terms() {
        if !c.is_one() {
            return None;
        }
        let mut names: Vec<&str> =
            m.exponents().iter().enumerate().filter(|(_, &e)| e == 1).map(|(i, _)| labels[i]).collect();
        names.sort();
        out.insert(names.join(" "));
    }
    Some(out)
}

fn expected(terms: &[&str]) -> BTreeSet<String> {
    terms.iter().map(|s| s.to_string()).collect()
}

fn cli_json(args: &[&str]) -> (i32, Value) {
    let out = cli::run(["kirchhoff"].iter().chain(args).chain(&["--format", "json"]).copied());
    (out.code, serde_json::from_str(&out.stdout).unwrap_or(Value::Null))
}

fn criterion_1() -> Outcome {
    let k4 = Graph::complete(4).expect("K4");
    let keep: Vec<usize> = (0..6).filter(|&i| k4.edges()[i].label != "23").collect();
    let minus = k4.edge_subgraph(&keep).expect("subgraph");
    let full_ok = term_sets(&k4) == Some(expected(&K4_TERMS));
    let minus_ok = term_sets(&minus) == Some(expected(&K4_MINUS_23_TERMS));
    let (c1, v1) = cli_json(&["kirchhoff", "K4"]);
    let (c2, v2) = cli_json(&["kirchhoff", "K4", "--delete", "2-3"]);
    let counts = (&v1["results"][0]["spanning_trees"], &v2["results"][0]["spanning_trees"]);
    let cli_ok = c1 == 0 && c2 == 0 && counts == (&Value::from(16), &Value::from(8));
    let routes_ok = v1["results"][0]["match"] == true && v2["results"][0]["match"] == true;
    Outcome::new(
        full_ok && minus_ok && cli_ok && routes_ok,
        format!("K4 16 terms {full_ok}, K4 minus 23 8 terms {minus_ok}, tree counts {} and {}", counts.0, counts.1),
    )
}

fn criterion_2() -> Outcome {
    let counts: Vec<usize> = (1..=5).map(|m| connected_graphs(m).len()).collect();
    let graphs = simple_corpus(5);
    let mismatches = graphs
        .iter()
        .filter(|g| {
            kirchhoff_polynomial(g, KirchhoffRoute::MatrixTree) != kirchhoff_polynomial(g, KirchhoffRoute::Enumeration)
        })
        .count();
    Outcome::new(
        counts == [1, 1, 2, 6, 21] && mismatches == 0,
        format!("{} graphs (classes per vertex count {counts:?}), {mismatches} mismatches", graphs.len()),
    )
}

fn criterion_3() -> Outcome {
    let f = kirchhoff_polynomial(&Graph::complete(4).expect("K4"), KirchhoffRoute::MatrixTree);
    let det = PolynomialMatrix::hessian(&f).determinant().expect("square");
    let identity = det == f.pow(2).scale(&int(-16));
    // Leibniz expansion of the evaluated Hessian at a few integer points.
    let points = [[1, 2, 3, 4, 5, 6], [7, 1, 1, 2, 9, 3], [2, 2, 5, 1, 4, 8]];
    let spot = points.iter().all(|p| {
        let x: Vec<Rational> = p.iter().map(|&v| int(v)).collect();
        let h: Vec<Vec<Rational>> = (0..6)
            .map(|i| {
                (0..6)
                    .map(|j| f.partial_derivative(i).unwrap().partial_derivative(j).unwrap().evaluate(&x).unwrap())
                    .collect()
            })
            .collect();
        let fx = f.evaluate(&x).unwrap();
        leibniz_determinant(&h) == int(-16) * &fx * &fx
    });
    let rep = complete_graph_hessian_identity(3, IdentityMode::Symbolic, 20, 0).expect("r = 3");
    let reported = rep.verdict && rep.details["constant"] == "-16/1" && rep.details["exponent"] == 2;
    Outcome::new(
        identity && spot && reported,
        format!("det H = -16 F^2 symbolically: {identity}; Leibniz spot checks: {spot}; report: {reported}"),
    )
}

fn criterion_4() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for r in [4u32, 5] {
        let rep = complete_graph_hessian_identity(r, IdentityMode::Evaluation, 20, 0).expect("valid r");
        let n = r * (r + 1) / 2;
        let constant = Rational::from_integer(num_bigint::BigInt::from(2).pow(n - r) * (r - 1))
            * if (n - 1) % 2 == 0 { int(1) } else { int(-1) };
        let constant_ok = rep.details["expected_constant"] == format!("{}/1", constant.numer()).as_str();
        let degree_ok = rep.details["degree_bound"] == n * (r - 2);
        let bound_ok = rep.details["failure_bound_below_2^-30"] == true;
        let ok = rep.verdict && rep.trials == Some(20) && constant_ok && degree_ok && bound_ok;
        pass &= ok;
        parts.push(format!("r={r}: {ok} bound {}", rep.details["failure_bound"].as_str().unwrap_or("?")));
    }
    Outcome::new(pass, parts.join("; "))
}

fn criterion_5() -> Outcome {
    let f = kirchhoff_polynomial(&Graph::complete(4).expect("K4"), KirchhoffRoute::MatrixTree);
    let ones = vec![int(1); 6];
    let h: Vec<Vec<Rational>> = (0..6)
        .map(|i| (0..6).map(|j| f.partial_derivative(i).unwrap().partial_derivative(j).unwrap().evaluate(&ones).unwrap()).collect())
        .collect();
    let independent = leibniz_determinant(&h);
    let library = hessian_and_gradient_at(&f, &ones).expect("dimension").hessian.determinant();
    let rep = complete_graph_hessian_identity(3, IdentityMode::Symbolic, 20, 0).expect("r = 3");
    let d = &rep.details;
    let flagged = d["alternative_closed_form"] == "-2048/1"
        && d["alternative_form_discrepancy"] == true
        && d["alternative_form_ratio"] == "1/2"
        && d["closed_form_at_ones"] == "-4096/1"
        && d["matches_closed_form"] == true;
    Outcome::new(
        independent == int(-4096) && library == int(-4096) && flagged,
        format!("det H(1) = {independent}; alternative closed form -2048 flagged as off by 1/2: {flagged}"),
    )
    .note("the single-power closed form with prefactor 2^(N-(r+1)) is half the value from 2^(N-r)(r-1) F^(N-r-1)")
}

fn suite(name: &str, cfg: &SweepConfig) -> SuiteReport {
    run_suite(name, cfg).expect("registered suite")
}

fn failure_lines(rep: &SuiteReport) -> Vec<String> {
    rep.failures.iter().map(|f| format!("{} failure {}: {}", rep.name, f.case, f.detail)).collect()
}

fn criterion_6_and_7() -> (Outcome, Outcome) {
    let cfg = SweepConfig::default();
    assert!(cfg.points >= 5 && cfg.max_vertices == 6);
    let rep = suite("signature", &cfg);
    let inertia_failures = rep.failures.iter().filter(|f| f.case.contains("inertia")).count();
    let strict_failures = rep.failures.iter().filter(|f| !f.case.contains("inertia")).count();
    // Failures are attributed by case name, which needs the full list.
    let attributable = rep.failure_count == rep.failures.len();
    // Characteristic-polynomial oracle on every graph up to five vertices.
    let mut oracle_bad = Vec::new();
    let oracle_graphs = simple_corpus_with_rank(5, 2);
    for g in &oracle_graphs {
        let f = kirchhoff_polynomial(g, KirchhoffRoute::MatrixTree);
        let n = f.num_vars();
        let a: Vec<Rational> = (0..n).map(|i| Rational::new((i as i64 % 5 + 1).into(), 2.into())).collect();
        let h = hessian_and_gradient_at(&f, &a).expect("dimension").hessian;
        if oracle_inertia(&h) != (Inertia { n_plus: 1, n_minus: n - 1, n_zero: 0 }) {
            oracle_bad.push(kirchhoff_core::corpus::graph_name(g));
        }
    }
    let mut six = Outcome::new(
        attributable && inertia_failures == 0 && oracle_bad.is_empty(),
        format!(
            "{} checks over graphs on 3..=6 vertices, {} failures; oracle agreement on {} graphs: {}",
            rep.cases,
            rep.failure_count,
            oracle_graphs.len(),
            oracle_bad.is_empty()
        ),
    );
    six.notes.extend(failure_lines(&rep));
    six.notes.extend(oracle_bad.iter().map(|g| format!("oracle disagrees on {g}")));
    let mut spot = true;
    for m in [4usize, 5] {
        let f = kirchhoff_polynomial(&Graph::complete(m).expect("complete"), KirchhoffRoute::MatrixTree);
        let a = RationalPoint::ones(f.num_vars());
        let v = check_log_concavity(&f, &a, LogConcavityMode::StrictHomogeneous, None).expect("r >= 3");
        spot &= v.verdict && v.inertia.n_zero == 1 && v.inertia.n_minus == 0;
    }
    let seven = Outcome::new(
        attributable && strict_failures == 0 && spot,
        format!("strict certificates in the same sweep: {} failures; K4, K5 at ones: {spot}", strict_failures),
    )
    .note("graphs on 3 vertices have degree 2 and are certified in strict mode; homogeneous modes need degree >= 3");
    (six, seven)
}

fn criterion_8() -> Outcome {
    let corpus = multigraph_corpus();
    let rep = suite("degeneracy", &SweepConfig::default());
    let small = corpus.iter().filter(|g| g.num_edges() <= 6).count();
    let mut out = Outcome::new(
        corpus.len() >= 5 && rep.passed,
        format!(
            "{} multigraphs ({small} symbolic, {} evaluated), {} checks, {} failures",
            corpus.len(),
            corpus.len() - small,
            rep.cases,
            rep.failure_count
        ),
    );
    out.notes.extend(failure_lines(&rep));
    out
}

fn criterion_9() -> Outcome {
    let f = Polynomial::parse("x1*x2 + x1*x3 + 4*x1*x4 + x2*x3 + x2*x4 + x3*x4", Some(4)).expect("valid");
    let structure = degree_one_kernel(&f).expect("homogeneous");
    let target = [int(-1), int(2), int(2), int(-1)];
    let kernel_ok = structure.kernel.len() == 1 && {
        let k = &structure.kernel[0];
        k.iter().zip(&target).all(|(x, y)| x == y) || k.iter().zip(&target).all(|(x, y)| x == &-y)
    };
    // Direct check that the operator annihilates F.
    let annihilated = (0..4)
        .map(|i| f.partial_derivative(i).unwrap().scale(&target[i]))
        .fold(Polynomial::zero(4), |acc, p| &acc + &p)
        .is_zero();
    let det_zero = PolynomialMatrix::hessian(&f).determinant().expect("square").is_zero();
    let quadric = slp_degree_one(&f, &RationalPoint::ones(4)).expect("valid");
    let k4 = graph_slp_report(&Graph::complete(4).expect("K4"), &RationalPoint::ones(6)).expect("simple");
    let k4_ok = k4.slp_holds && k4.hr_inertia == Inertia { n_plus: 1, n_minus: 5, n_zero: 0 };
    Outcome::new(
        kernel_ok && annihilated && det_zero && !quadric.slp_holds && k4_ok,
        format!(
            "kernel (-1,2,2,-1): {kernel_ok}, det H = 0: {det_zero}, slp false: {}; K4 slp with HR inertia {}: {k4_ok}",
            !quadric.slp_holds, k4.hr_inertia
        ),
    )
}

fn criterion_10() -> Outcome {
    let mut pass = true;
    let mut cases = 0;
    let mut literal_holds = BTreeSet::new();
    for n in 2..=8usize {
        let ones = vec![int(1); n];
        let en = Polynomial::elementary_symmetric(n, n).expect("k <= n");
        let mut derived = en.clone();
        for ell in 0..=n - 2 {
            if ell > 0 {
                derived = derived.directional_derivative(&ones).expect("dimension");
            }
            let target = Polynomial::elementary_symmetric(n, n - ell).expect("k <= n");
            let scale = Rational::from_integer(factorial(ell as u32));
            let correct = derived == target.scale(&scale);
            if target == derived.scale(&scale) {
                literal_holds.insert(ell);
            }
            let rep = elementary_symmetric_slp(n, ell, &RationalPoint::ones(n)).expect("valid");
            pass &= correct && rep.derivative_identity && rep.report.slp_holds;
            cases += 1;
        }
    }
    Outcome::new(pass, format!("{cases} pairs (n, l) with n <= 8: d^l e_n = l! e_(n-l) and SLP at ones"))
        .note(format!(
            "the transposed scaling e_(n-l) = l! d^l e_n holds only for l in {literal_holds:?}; the derivative identity is the one verified"
        ))
}

fn criterion_11() -> Outcome {
    let cfg = SweepConfig::default();
    let euler = suite("euler", &cfg);
    let identity = suite("identity1", &cfg);
    let mut out = Outcome::new(
        euler.passed && identity.passed,
        format!(
            "euler {} checks / {} failures; identity1 + rank-one lemma {} checks / {} failures",
            euler.cases, euler.failure_count, identity.cases, identity.failure_count
        ),
    );
    out.notes.extend(failure_lines(&euler));
    out.notes.extend(failure_lines(&identity));
    out
}

fn criterion_12() -> Outcome {
    let cfg = SweepConfig::default();
    let names = ["interlacing", "sylvester", "agv", "split_condition", "restriction", "lefschetz", "matroid", "matrix_tree"];
    let reports: Vec<SuiteReport> = names.iter().map(|n| suite(n, &cfg)).collect();
    let summary: Vec<String> = reports.iter().map(|r| format!("{} {}/{}", r.name, r.cases - r.failure_count, r.cases)).collect();
    let mut out = Outcome::new(reports.iter().all(|r| r.passed), summary.join(", "));
    for r in &reports {
        out.notes.extend(failure_lines(r));
    }
    out
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, title: "golden Kirchhoff polynomials", limit: Duration::from_secs(1), run: criterion_1 },
        Criterion { id: 2, title: "matrix-tree equivalence", limit: Duration::from_secs(60), run: criterion_2 },
        Criterion { id: 3, title: "complete-graph Hessian, symbolic", limit: Duration::from_secs(30), run: criterion_3 },
        Criterion { id: 4, title: "complete-graph Hessian, evaluation", limit: Duration::from_secs(60), run: criterion_4 },
        Criterion { id: 5, title: "Hessian value at ones", limit: Duration::from_secs(1), run: criterion_5 },
        Criterion { id: 8, title: "degeneracy", limit: Duration::from_secs(10), run: criterion_8 },
        Criterion { id: 9, title: "Hessian criterion and counterexample", limit: Duration::from_secs(1), run: criterion_9 },
        Criterion { id: 10, title: "elementary symmetric suite", limit: Duration::from_secs(60), run: criterion_10 },
        Criterion { id: 11, title: "identity suites", limit: Duration::from_secs(60), run: criterion_11 },
        Criterion { id: 12, title: "property suites", limit: Duration::from_secs(600), run: criterion_12 },
    ];
    let mut lines: Vec<(u32, bool, String, Vec<String>)> = Vec::new();
    let report = |id: u32, title: &str, outcome: Outcome, elapsed: Duration, limit: Duration| {
        let in_time = elapsed <= limit;
        let pass = outcome.pass && in_time;
        let line = format!(
            "criterion {id:>2} {}  {title}: {} [{:.2}s, limit {}s{}]",
            if pass { "PASS" } else { "FAIL" },
            outcome.summary,
            elapsed.as_secs_f64(),
            limit.as_secs(),
            if in_time { "" } else { ", over time" }
        );
        (id, pass, line, outcome.notes)
    };
    for c in &criteria[..5] {
        let start = Instant::now();
        let outcome = (c.run)();
        lines.push(report(c.id, c.title, outcome, start.elapsed(), c.limit));
    }
    let start = Instant::now();
    let (six, seven) = criterion_6_and_7();
    let elapsed = start.elapsed();
    lines.push(report(6, "signature sweep", six, elapsed, Duration::from_secs(300)));
    lines.push(report(7, "strict homogeneous certification", seven, elapsed, Duration::from_secs(300)));
    for c in &criteria[5..] {
        let start = Instant::now();
        let outcome = (c.run)();
        lines.push(report(c.id, c.title, outcome, start.elapsed(), c.limit));
    }
    let mut all = true;
    for (_, pass, line, notes) in &lines {
        all &= pass;
        println!("{line}");
        for n in notes {
            println!("    note: {n}");
        }
    }
    println!("acceptance: {} of {} criteria pass", lines.iter().filter(|l| l.1).count(), lines.len());
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
