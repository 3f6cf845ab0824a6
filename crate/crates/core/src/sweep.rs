//! Seeded property suites over the corpora. Every suite is deterministic
//! for a given [`SweepConfig`]; failures carry exact witnesses.

use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::corpus::{graph_name, matroid_corpus, multigraph_corpus, simple_corpus, simple_corpus_with_rank};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hessian::{
    check_log_concavity, euler_check, hessian_and_gradient_at, identity1_check, log_concavity_matrix,
    rank_one_det_check, split_condition_matrix, threshold, LogConcavityMode, RationalPoint,
    SymmetricRationalMatrix,
};
use crate::identity::{trial_rng, vanishes_at_random_points, FnEvaluator, SamplingRange};
use crate::lefschetz::{degree_one_kernel, elementary_symmetric_slp, graph_slp_report, hodge_riemann_relation};
use crate::matrix_tree::{kirchhoff_polynomial, laplacian, signed_cofactor_determinant, KirchhoffRoute, PolynomialMatrix};
use crate::matroid::Matroid;
use crate::poly::Polynomial;
use crate::rational::{int, rational_json, rationals_json, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SweepConfig {
    pub seed: u64,
    /// Sampled points per corpus item.
    pub points: usize,
    pub max_vertices: usize,
    pub trials: u32,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { seed: 0, points: 5, max_vertices: 6, trials: 20 }
    }
}

impl SweepConfig {
    fn small_vertices(&self) -> usize {
        self.max_vertices.min(5)
    }

    /// Independent stream for `(suite, case)`.
    fn rng(&self, suite: u64, case: usize) -> ChaCha8Rng {
        trial_rng(self.seed.wrapping_add(suite << 32), case as u32)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteFailure {
    pub case: String,
    pub detail: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub cases: usize,
    pub failure_count: usize,
    /// At most [`MAX_REPORTED_FAILURES`] entries, in corpus order.
    pub failures: Vec<SuiteFailure>,
    pub passed: bool,
    pub details: serde_json::Map<String, Value>,
}

pub const MAX_REPORTED_FAILURES: usize = 20;

#[derive(Default)]
struct Tally {
    cases: usize,
    failures: Vec<SuiteFailure>,
}

impl Tally {
    fn check(&mut self, ok: bool, case: impl FnOnce() -> String, detail: impl FnOnce() -> Value) {
        self.cases += 1;
        if !ok {
            self.failures.push(SuiteFailure { case: case(), detail: detail() });
        }
    }

    fn error(&mut self, case: String, err: Error) {
        self.cases += 1;
        self.failures.push(SuiteFailure { case, detail: json!({ "error": err.to_string() }) });
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.cases += other.cases;
        self.failures.extend(other.failures);
        self
    }

    fn finish(self, name: &str) -> SuiteReport {
        let failure_count = self.failures.len();
        let mut failures = self.failures;
        failures.truncate(MAX_REPORTED_FAILURES);
        SuiteReport {
            name: name.to_string(),
            cases: self.cases,
            failure_count,
            failures,
            passed: failure_count == 0,
            details: serde_json::Map::new(),
        }
    }
}

/// Runs `f` on every item in parallel and merges the tallies in item order.
fn over<T: Sync>(items: &[T], f: impl Fn(usize, &T) -> Tally + Sync) -> Tally {
    items
        .par_iter()
        .enumerate()
        .map(|(i, t)| f(i, t))
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Tally::default(), Tally::merge)
}

fn positive_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(1..=50).into(), rng.gen_range(1..=12).into())
}

fn nonnegative_rational(rng: &mut ChaCha8Rng) -> Rational {
    if rng.gen_range(0..3) == 0 {
        Rational::zero()
    } else {
        positive_rational(rng)
    }
}

fn signed_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(-30..=30).into(), rng.gen_range(1..=7).into())
}

fn positive_point(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    (0..n).map(|_| positive_rational(rng)).collect()
}

fn small_int(rng: &mut ChaCha8Rng) -> Rational {
    int(rng.gen_range(-3..=3))
}

fn random_symmetric(rng: &mut ChaCha8Rng, n: usize) -> SymmetricRationalMatrix {
    let vals: Vec<Vec<Rational>> = (0..n).map(|_| (0..n).map(|_| small_int(rng)).collect()).collect();
    let zero_row = if n > 1 && rng.gen_range(0..4) == 0 { Some(rng.gen_range(0..n)) } else { None };
    SymmetricRationalMatrix::from_fn(n, |i, j| {
        if Some(i) == zero_row || Some(j) == zero_row {
            Rational::zero()
        } else {
            vals[i][j].clone()
        }
    })
}

fn point_json(a: &[Rational]) -> Value {
    rationals_json(a)
}

fn kirchhoff(g: &Graph) -> Polynomial {
    kirchhoff_polynomial(g, KirchhoffRoute::MatrixTree)
}

/// The strict certificate appropriate to the degree: the quantified
/// strict-homogeneous check for `r >= 3`, plain strict for `r = 2`.
fn strict_mode(r: u32) -> LogConcavityMode {
    if r >= 3 {
        LogConcavityMode::StrictHomogeneous
    } else {
        LogConcavityMode::Strict
    }
}

fn proportional(u: &[Rational], v: &[Rational]) -> bool {
    let Some(i) = v.iter().position(|x| !x.is_zero()) else { return false };
    let c = &u[i] / &v[i];
    !c.is_zero() && u.iter().zip(v).all(|(x, y)| x == &(&c * y))
}

pub const SUITES: &[&str] = &[
    "matrix_tree",
    "matroid",
    "signature",
    "degeneracy",
    "agv",
    "lefschetz",
    "euler",
    "identity1",
    "interlacing",
    "sylvester",
    "split_condition",
    "restriction",
    "elementary_symmetric",
];

pub fn run_suite(name: &str, cfg: &SweepConfig) -> Result<SuiteReport> {
    Ok(match name {
        "matrix_tree" => matrix_tree_suite(cfg),
        "matroid" => matroid_suite(cfg),
        "signature" => signature_suite(cfg),
        "degeneracy" => degeneracy_suite(cfg),
        "agv" => agv_suite(cfg),
        "lefschetz" => lefschetz_suite(cfg),
        "euler" => euler_suite(cfg),
        "identity1" => identity1_suite(cfg),
        "interlacing" => interlacing_suite(cfg),
        "sylvester" => sylvester_suite(cfg),
        "split_condition" => split_condition_suite(cfg),
        "restriction" => restriction_suite(cfg),
        "elementary_symmetric" => elementary_symmetric_suite(8),
        _ => return Err(Error::Parse(format!("unknown suite '{name}'"))),
    })
}

pub fn run_all(cfg: &SweepConfig) -> Vec<SuiteReport> {
    SUITES.iter().map(|s| run_suite(s, cfg).expect("registered suite")).collect()
}

/// Route equivalence, cofactor invariance, zero row sums, tree counts and
/// the coordinate structure of `L^(11)` for complete graphs.
pub fn matrix_tree_suite(cfg: &SweepConfig) -> SuiteReport {
    let graphs: Vec<Graph> =
        simple_corpus(cfg.small_vertices()).into_iter().chain(multigraph_corpus()).collect();
    let mut tally = over(&graphs, |_, g| {
        let mut t = Tally::default();
        let name = graph_name(g);
        let f = kirchhoff(g);
        let e = kirchhoff_polynomial(g, KirchhoffRoute::Enumeration);
        t.check(f == e, || format!("{name} routes"), || json!({"matrix_tree": f.to_string(), "enumeration": e.to_string()}));
        let m = g.num_vertices();
        for i in 0..m {
            for j in 0..m {
                match signed_cofactor_determinant(g, i, j) {
                    Ok(c) => t.check(c == f, || format!("{name} cofactor ({},{})", i + 1, j + 1), || json!(c.to_string())),
                    Err(err) => t.error(format!("{name} cofactor"), err),
                }
            }
        }
        let l = laplacian(g);
        for (i, row) in l.rows().iter().enumerate() {
            let sum = row.iter().fold(Polynomial::zero(g.num_edges()), |acc, p| acc + p.clone());
            t.check(sum.is_zero(), || format!("{name} row sum {}", i + 1), || json!(sum.to_string()));
        }
        let ones = vec![Rational::one(); g.num_edges()];
        let count = g.spanning_trees().len();
        let value = f.evaluate(&ones).unwrap_or_else(|_| Rational::zero());
        t.check(value == int(count as i64), || format!("{name} tree count"), || json!({"count": count, "value": rational_json(&value)}));
        t
    });
    for r in 2..=5usize {
        let g = Graph::complete(r + 1).expect("r + 1 >= 2");
        let minor = laplacian(&g).cofactor(0, 0).expect("in range");
        let mut seen = Vec::new();
        let mut ok = minor.is_symmetric();
        for i in 0..r {
            for j in i + 1..r {
                let neg = -minor.get(i, j);
                let single = neg.num_terms() == 1
                    && neg.terms().next().is_some_and(|(m, c)| c.is_one() && m.degree() == 1);
                ok &= single && !seen.contains(&neg);
                seen.push(neg);
            }
        }
        tally.check(ok && seen.len() == r * (r - 1) / 2, || format!("K{} L^(11) coordinates", r + 1), || Value::Null);
    }
    tally.finish("matrix_tree")
}

/// Exchange axiom, deletion-contraction identity and the nonvanishing of
/// successive partials along a basis complement.
pub fn matroid_suite(cfg: &SweepConfig) -> SuiteReport {
    let corpus = matroid_corpus(cfg.small_vertices());
    over(&corpus, |_, nm| {
        let mut t = Tally::default();
        let m = &nm.matroid;
        let name = &nm.name;
        if m.ground_size() <= 10 {
            t.check(m.validate_exchange(), || format!("{name} exchange"), || Value::Null);
        }
        let f = m.basis_generating_function();
        for e in 0..m.ground_size() {
            if m.is_loop(e) || m.is_coloop(e) {
                continue;
            }
            match m.delete_contract(e) {
                Ok((del, con)) => {
                    let x = Polynomial::variable(m.ground_size(), e).expect("in range");
                    let rebuilt = del.basis_generating_function() + x * con.basis_generating_function();
                    t.check(rebuilt == f, || format!("{name} deletion-contraction e={}", e + 1), || json!(rebuilt.to_string()));
                }
                Err(err) => t.error(format!("{name} e={}", e + 1), err),
            }
        }
        if m.simplicity().loops.is_empty() {
            for b in m.bases() {
                let complement: Vec<usize> = (0..m.ground_size()).filter(|e| !b.contains(e)).collect();
                for k in 0..complement.len() {
                    let ok = f
                        .restrict_to_zero(&complement[..k])
                        .and_then(|p| p.partial_derivative(complement[k]))
                        .map(|p| !p.is_zero())
                        .unwrap_or(false);
                    t.check(ok, || format!("{name} basis {b:?} step {}", k + 1), || Value::Null);
                }
            }
        }
        t
    })
    .finish("matroid")
}

fn tree_cone_points(rng: &mut ChaCha8Rng, n: usize, tree: &[usize]) -> Vec<RationalPoint> {
    let inside: Vec<Rational> = positive_point(rng, n);
    let boundary: Vec<Rational> =
        (0..n).map(|i| if tree.contains(&i) { inside[i].clone() } else { Rational::zero() }).collect();
    let mixed: Vec<Rational> = (0..n)
        .map(|i| if tree.contains(&i) { positive_rational(rng) } else { nonnegative_rational(rng) })
        .collect();
    [boundary, mixed]
        .into_iter()
        .map(|c| RationalPoint::with_cone(c, tree.iter().copied()).expect("constructed inside the cone"))
        .collect()
}

/// Signature `(1, n-1, 0)` of the Hessian and the strict certificate with
/// kernel `span{a}` at positive points, and at cone points of spanning
/// trees for graphs on at most four vertices.
pub fn signature_suite(cfg: &SweepConfig) -> SuiteReport {
    let graphs = simple_corpus_with_rank(cfg.max_vertices, 2);
    over(&graphs, |gi, g| {
        let mut t = Tally::default();
        let name = graph_name(g);
        let f = kirchhoff(g);
        let n = f.num_vars();
        let r = (g.num_vertices() - 1) as u32;
        let mut rng = cfg.rng(1, gi);
        let mut points: Vec<RationalPoint> =
            (0..cfg.points).map(|_| RationalPoint::new(positive_point(&mut rng, n))).collect();
        if g.num_vertices() <= 4 {
            for tree in g.spanning_trees().trees {
                points.extend(tree_cone_points(&mut rng, n, &tree));
            }
        }
        for a in &points {
            match hessian_and_gradient_at(&f, a.coords()) {
                Ok(at) => {
                    let inertia = at.hessian.inertia();
                    t.check(
                        inertia.as_array() == [1, n - 1, 0],
                        || format!("{name} inertia at {a}"),
                        || json!({"point": a, "inertia": inertia}),
                    );
                }
                Err(err) => t.error(format!("{name} at {a}"), err),
            }
            match check_log_concavity(&f, a, strict_mode(r), None) {
                Ok(v) => {
                    let kernel_ok = r < 3 || (v.kernel.len() == 1 && proportional(&v.kernel[0], a.coords()));
                    t.check(
                        v.verdict && kernel_ok,
                        || format!("{name} {} at {a}", strict_mode(r)),
                        || serde_json::to_value(&v).unwrap_or(Value::Null),
                    );
                }
                Err(err) => t.error(format!("{name} certificate at {a}"), err),
            }
        }
        t
    })
    .finish("signature")
}

/// Graphs with a loop or a parallel pair: `det H` vanishes identically and
/// strict certificates fail with verified witnesses.
pub fn degeneracy_suite(cfg: &SweepConfig) -> SuiteReport {
    let graphs = multigraph_corpus();
    over(&graphs, |gi, g| {
        let mut t = Tally::default();
        let name = graph_name(g);
        let f = kirchhoff(g);
        let n = f.num_vars();
        let r = (g.num_vertices() - 1) as u32;
        if n <= 6 {
            match PolynomialMatrix::hessian(&f).determinant() {
                Ok(det) => t.check(det.is_zero(), || format!("{name} symbolic det"), || json!(det.to_string())),
                Err(err) => t.error(format!("{name} symbolic det"), err),
            }
        } else {
            let det = FnEvaluator::new(n, n as u32 * r.saturating_sub(2), |x: &[Rational]| {
                Ok(hessian_and_gradient_at(&f, x)?.hessian.determinant())
            });
            match vanishes_at_random_points(&det, cfg.trials, cfg.seed, SamplingRange::default()) {
                Ok(out) => t.check(
                    out.pass,
                    || format!("{name} evaluated det"),
                    || json!(out.witness.map(|w| point_json(&w.0))),
                ),
                Err(err) => t.error(format!("{name} evaluated det"), err),
            }
        }
        let mut rng = cfg.rng(2, gi);
        let a = RationalPoint::new(positive_point(&mut rng, n));
        let modes: &[LogConcavityMode] = if r >= 3 {
            &[LogConcavityMode::Strict, LogConcavityMode::StrictHomogeneous]
        } else {
            &[LogConcavityMode::Strict]
        };
        for &mode in modes {
            let outcome = check_log_concavity(&f, &a, mode, None).and_then(|v| {
                let (Some(y), Some(s)) = (v.witness.clone(), v.witness_s.clone()) else {
                    return Ok((v, None));
                };
                let q = log_concavity_matrix(&f, a.coords(), &s)?.quadratic_form(&y)?;
                Ok((v, Some(q)))
            });
            match outcome {
                Ok((v, q)) => t.check(
                    !v.verdict && q.as_ref().is_some_and(|q| !q.is_positive()),
                    || format!("{name} {mode} at {a}"),
                    || serde_json::to_value(&v).unwrap_or(Value::Null),
                ),
                Err(err) => t.error(format!("{name} {mode}"), err),
            }
        }
        t
    })
    .finish("degeneracy")
}

/// `M(s, a)` has no negative eigenvalue for basis generating functions,
/// `a >= 0`, `s >= (r-1)/r`.
pub fn agv_suite(cfg: &SweepConfig) -> SuiteReport {
    let corpus: Vec<_> = matroid_corpus(cfg.small_vertices()).into_iter().filter(|m| m.matroid.rank() >= 2).collect();
    over(&corpus, |mi, nm| {
        let mut t = Tally::default();
        let f = nm.matroid.basis_generating_function();
        let n = f.num_vars();
        let s0 = threshold(nm.matroid.rank() as u32);
        let mut rng = cfg.rng(3, mi);
        for k in 0..cfg.points {
            let a: Vec<Rational> = (0..n).map(|_| nonnegative_rational(&mut rng)).collect();
            let s = if k == 0 { s0.clone() } else { &s0 + positive_rational(&mut rng) / int(10) };
            match log_concavity_matrix(&f, &a, &s) {
                Ok(m) => {
                    let inertia = m.inertia();
                    t.check(
                        inertia.n_minus == 0,
                        || format!("{} at {:?}", nm.name, point_json(&a)),
                        || json!({"s": rational_json(&s), "inertia": inertia}),
                    );
                }
                Err(err) => t.error(nm.name.clone(), err),
            }
        }
        t
    })
    .finish("agv")
}

/// Degree-one SLP and Hodge-Riemann sweeps, criterion consistency, scaling
/// invariance and kernel-annihilator consistency.
pub fn lefschetz_suite(cfg: &SweepConfig) -> SuiteReport {
    let graphs = simple_corpus_with_rank(cfg.max_vertices, 2);
    let sweep = over(&graphs, |gi, g| {
        let mut t = Tally::default();
        let name = graph_name(g);
        let f = kirchhoff(g);
        let n = f.num_vars();
        let mut rng = cfg.rng(4, gi);
        for _ in 0..cfg.points {
            let a = RationalPoint::new(positive_point(&mut rng, n));
            match graph_slp_report(g, &a) {
                Ok(rep) => t.check(
                    rep.slp_holds && rep.hr_relation_holds && rep.hr_inertia.as_array() == [1, n - 1, 0],
                    || format!("{name} at {a}"),
                    || serde_json::to_value(&rep).unwrap_or(Value::Null),
                ),
                Err(err) => t.error(format!("{name} at {a}"), err),
            }
            let lambda = positive_rational(&mut rng);
            let scaled = a.scaled(&lambda);
            match (hodge_riemann_relation(&f, &a), hodge_riemann_relation(&f, &scaled)) {
                (Ok(x), Ok(y)) => t.check(
                    x == y,
                    || format!("{name} scaling by {lambda}"),
                    || json!({"before": x, "after": y}),
                ),
                (Err(err), _) | (_, Err(err)) => t.error(format!("{name} scaling"), err),
            }
        }
        t
    });
    let mut others: Vec<(String, Polynomial)> = multigraph_corpus().iter().map(|g| (graph_name(g), kirchhoff(g))).collect();
    others.push((
        "dependent quadric".into(),
        Polynomial::parse("x1*x2 + x1*x3 + 4*x1*x4 + x2*x3 + x2*x4 + x3*x4", Some(4)).expect("valid"),
    ));
    others.extend(graphs.iter().take(30).map(|g| (graph_name(g), kirchhoff(g))));
    let consistency = over(&others, |i, (name, f)| {
        let mut t = Tally::default();
        let structure = match degree_one_kernel(f) {
            Ok(s) => s,
            Err(err) => {
                t.error(name.clone(), err);
                return t;
            }
        };
        for c in &structure.kernel {
            let op = Polynomial::from_terms(
                f.num_vars(),
                c.iter().enumerate().map(|(k, ck)| {
                    let mut e = vec![0; f.num_vars()];
                    e[k] = 1;
                    (e, ck.clone())
                }),
            );
            let applied = op.and_then(|op| op.apply_diff_operator(f));
            t.check(
                applied.as_ref().is_ok_and(Polynomial::is_zero),
                || format!("{name} kernel annihilates"),
                || json!({"kernel": rationals_json(c)}),
            );
        }
        let mut rng = cfg.rng(5, i);
        let a = RationalPoint::new(positive_point(&mut rng, f.num_vars()));
        match (crate::lefschetz::slp_degree_one(f, &a), hessian_and_gradient_at(f, a.coords())) {
            (Ok(rep), Ok(at)) => {
                if structure.is_independent() && !rep.f_value.is_zero() {
                    let nz = at.hessian.inertia().n_zero;
                    t.check(rep.slp_holds == (nz == 0), || format!("{name} criterion at {a}"), || json!({"n_zero": nz}));
                }
            }
            (Err(err), _) | (_, Err(err)) => t.error(name.clone(), err),
        }
        t
    });
    sweep.merge(consistency).finish("lefschetz")
}

fn identity_corpus(cfg: &SweepConfig) -> Vec<(String, Polynomial)> {
    let mut out: Vec<(String, Polynomial)> = simple_corpus_with_rank(cfg.max_vertices, 2)
        .iter()
        .chain(multigraph_corpus().iter())
        .map(|g| (graph_name(g), kirchhoff(g)))
        .collect();
    out.extend(
        matroid_corpus(3)
            .into_iter()
            .filter(|m| m.name.starts_with('U'))
            .map(|m| (m.name, m.matroid.basis_generating_function())),
    );
    out
}

/// Both Euler identities symbolically, and `M((r-1)/r, a) a = 0`.
pub fn euler_suite(cfg: &SweepConfig) -> SuiteReport {
    let corpus = identity_corpus(cfg);
    over(&corpus, |i, (name, f)| {
        let mut t = Tally::default();
        match euler_check(f) {
            Ok(rep) => t.check(rep.holds, || format!("{name} euler"), || json!(rep.value_residual.to_string())),
            Err(err) => t.error(name.clone(), err),
        }
        let mut rng = cfg.rng(6, i);
        let a: Vec<Rational> = (0..f.num_vars()).map(|_| signed_rational(&mut rng)).collect();
        let r = f.homogeneous_degree().unwrap_or(0);
        match log_concavity_matrix(f, &a, &threshold(r)).and_then(|m| m.mul_vec(&a)) {
            Ok(v) => t.check(
                v.iter().all(Zero::is_zero),
                || format!("{name} threshold kernel at {:?}", point_json(&a)),
                || rationals_json(&v),
            ),
            Err(err) => t.error(name.clone(), err),
        }
        t
    })
    .finish("euler")
}

/// The determinant identity for `-F H + s g g^t` on the corpus, and the
/// rank-one determinant lemma on 100 random vectors.
pub fn identity1_suite(cfg: &SweepConfig) -> SuiteReport {
    let corpus = identity_corpus(cfg);
    let mut tally = over(&corpus, |i, (name, f)| {
        let mut t = Tally::default();
        match identity1_check(f, cfg.trials, cfg.seed.wrapping_add(i as u64)) {
            Ok(rep) => t.check(rep.verdict, || format!("{name} identity1"), || serde_json::to_value(&rep).unwrap_or(Value::Null)),
            Err(err) => t.error(name.clone(), err),
        }
        t
    });
    let mut rng = cfg.rng(7, 0);
    for k in 0..100 {
        let dim = rng.gen_range(1..=6);
        let v: Vec<Rational> = (0..dim).map(|_| signed_rational(&mut rng)).collect();
        let s = signed_rational(&mut rng);
        tally.check(
            rank_one_det_check(&v, &s),
            || format!("rank one #{k}"),
            || json!({"v": rationals_json(&v), "s": rational_json(&s)}),
        );
    }
    tally.finish("identity1")
}

/// Rank-one updates move each signature count by at most one in the
/// expected direction.
pub fn interlacing_suite(cfg: &SweepConfig) -> SuiteReport {
    let cases: Vec<usize> = (0..200).collect();
    over(&cases, |k, _| {
        let mut t = Tally::default();
        let mut rng = cfg.rng(8, k);
        let n = rng.gen_range(1..=8);
        let a = random_symmetric(&mut rng, n);
        let v: Vec<Rational> = (0..n).map(|_| small_int(&mut rng)).collect();
        let b = a.add_rank_one(&v, &Rational::one()).expect("matching dimension");
        let (ia, ib) = (a.inertia(), b.inertia());
        let ok = ia.n_plus <= ib.n_plus
            && ib.n_plus <= ia.n_plus + 1
            && ib.n_minus <= ia.n_minus
            && ia.n_minus <= ib.n_minus + 1;
        t.check(ok, || format!("case {k}"), || json!({"a": a.to_json(), "v": rationals_json(&v)}));
        t
    })
    .finish("interlacing")
}

/// Inertia is invariant under `M -> P^t M P` for invertible `P`.
pub fn sylvester_suite(cfg: &SweepConfig) -> SuiteReport {
    let cases: Vec<usize> = (0..200).collect();
    over(&cases, |k, _| {
        let mut t = Tally::default();
        let mut rng = cfg.rng(9, k);
        let n = rng.gen_range(1..=8);
        let a = random_symmetric(&mut rng, n);
        let p = loop {
            let p: Vec<Vec<Rational>> = (0..n).map(|_| (0..n).map(|_| small_int(&mut rng)).collect()).collect();
            if !crate::linalg::rational_determinant(&p).expect("square").is_zero() {
                break p;
            }
        };
        let b = a.congruent(&p).expect("square");
        t.check(
            a.inertia() == b.inertia(),
            || format!("case {k}"),
            || json!({"a": a.to_json(), "p": p.iter().map(|r| rationals_json(r)).collect::<Vec<_>>()}),
        );
        t
    })
    .finish("sylvester")
}

/// `-F H + s g g^t` and the split-condition matrix for each variable are
/// positive definite together (and semidefinite together).
pub fn split_condition_suite(cfg: &SweepConfig) -> SuiteReport {
    let corpus: Vec<_> = matroid_corpus(cfg.small_vertices().min(4)).into_iter().filter(|m| m.matroid.rank() >= 2).collect();
    over(&corpus, |mi, nm| {
        let mut t = Tally::default();
        let f = nm.matroid.basis_generating_function();
        let n = f.num_vars();
        let s0 = threshold(nm.matroid.rank() as u32);
        let mut rng = cfg.rng(10, mi);
        for _ in 0..cfg.points.min(3) {
            let a = positive_point(&mut rng, n);
            let s = &s0 + positive_rational(&mut rng) / int(20);
            let full = match log_concavity_matrix(&f, &a, &s) {
                Ok(m) => m.inertia(),
                Err(err) => {
                    t.error(nm.name.clone(), err);
                    continue;
                }
            };
            for k in 0..n {
                let f0 = f.restrict_to_zero(&[k]).and_then(|p| p.evaluate(&a));
                let fk = f.partial_derivative(k).and_then(|p| p.evaluate(&a));
                if !matches!((&f0, &fk), (Ok(x), Ok(y)) if !x.is_zero() && !y.is_zero()) {
                    continue;
                }
                match split_condition_matrix(&f, &a, k, &s) {
                    Ok(m) => {
                        let split = m.inertia();
                        t.check(
                            full.is_positive_definite() == split.is_positive_definite()
                                && full.is_positive_semidefinite() == split.is_positive_semidefinite(),
                            || format!("{} k={} at {:?}", nm.name, k + 1, point_json(&a)),
                            || json!({"s": rational_json(&s), "full": full, "split": split}),
                        );
                    }
                    Err(err) => t.error(nm.name.clone(), err),
                }
            }
        }
        t
    })
    .finish("split_condition")
}

/// For a basis `B` with complement `j_1 < ... < j_m`, deleting
/// `j_1, ..., j_k` keeps strict homogeneous log-concavity on the cone
/// where the coordinates of `B` are positive.
pub fn restriction_suite(cfg: &SweepConfig) -> SuiteReport {
    let graphs = simple_corpus_with_rank(cfg.small_vertices(), 3);
    over(&graphs, |gi, g| {
        let mut t = Tally::default();
        let name = graph_name(g);
        let matroid = match Matroid::graphic(g) {
            Ok(m) => m,
            Err(err) => {
                t.error(name, err);
                return t;
            }
        };
        let f = matroid.basis_generating_function();
        let n = f.num_vars();
        let mut rng = cfg.rng(11, gi);
        let bases = matroid.bases();
        let picks: Vec<usize> = (0..3.min(bases.len())).map(|_| rng.gen_range(0..bases.len())).collect();
        for bi in picks {
            let basis = &bases[bi];
            let complement: Vec<usize> = (0..n).filter(|e| !basis.contains(e)).collect();
            for k in 0..=complement.len() {
                let removed = &complement[..k];
                let restricted = f.restrict_to_zero(removed).and_then(|p| p.remove_variables(removed));
                let kept: Vec<usize> = (0..n).filter(|e| !removed.contains(e)).collect();
                let coords: Vec<Rational> = kept
                    .iter()
                    .map(|e| if basis.contains(e) { positive_rational(&mut rng) } else { nonnegative_rational(&mut rng) })
                    .collect();
                let cone: Vec<usize> = (0..kept.len()).filter(|&i| basis.contains(&kept[i])).collect();
                let outcome = restricted.and_then(|p| {
                    let a = RationalPoint::with_cone(coords.clone(), cone)?;
                    check_log_concavity(&p, &a, LogConcavityMode::StrictHomogeneous, None)
                });
                match outcome {
                    Ok(v) => t.check(
                        v.verdict,
                        || format!("{name} basis {basis:?} minus {removed:?}"),
                        || json!({"point": point_json(&coords), "verdict": v}),
                    ),
                    Err(err) => t.error(format!("{name} basis {basis:?}"), err),
                }
            }
        }
        t
    })
    .finish("restriction")
}

/// `d_ones^ell e_n = ell! e_(n-ell)` and SLP at degree one for
/// `e_(n-ell)` at ones, `2 <= n <= max_n`, `0 <= ell <= n-2`.
pub fn elementary_symmetric_suite(max_n: usize) -> SuiteReport {
    let cases: Vec<(usize, usize)> = (2..=max_n).flat_map(|n| (0..=n - 2).map(move |l| (n, l))).collect();
    let results: Vec<_> =
        cases.par_iter().map(|&(n, l)| elementary_symmetric_slp(n, l, &RationalPoint::ones(n))).collect();
    let mut tally = Tally::default();
    let mut holds = Vec::new();
    for (&(n, l), result) in cases.iter().zip(results) {
        match result {
            Ok(r) => {
                if r.scaled_variant {
                    holds.push(json!([n, l]));
                }
                tally.check(
                    r.derivative_identity && r.report.slp_holds,
                    || format!("n={n} ell={l}"),
                    || serde_json::to_value(&r).unwrap_or(Value::Null),
                );
            }
            Err(err) => tally.error(format!("n={n} ell={l}"), err),
        }
    }
    let mut report = tally.finish("elementary_symmetric");
    report.details.insert("scaled_variant_holds_for".into(), Value::Array(holds));
    report
}
