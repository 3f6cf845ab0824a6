//! Degree-one strong Lefschetz and Hodge-Riemann checks through the
//! Hessian criterion: `L = a . x` has SLP at degree one in `R*_F` iff
//! `F(a) != 0` and `det H_F(a) != 0`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hessian::{hessian_and_gradient_at, Inertia, RationalPoint, SymmetricRationalMatrix};
use crate::linalg::{nullspace, rank};
use crate::matrix_tree::{kirchhoff_polynomial, KirchhoffRoute};
use crate::poly::{Monomial, Polynomial};
use crate::rational::{factorial, serde_q, sign, Rational};

/// The partials `dF/dx_i` and their linear relations.
#[derive(Clone, Debug, PartialEq)]
pub struct DegreeOneStructure {
    pub partials: Vec<Polynomial>,
    /// Primitive integer vectors `c` with `sum c_i dF/dx_i = 0`.
    pub kernel: Vec<Vec<Rational>>,
    pub rank: usize,
}

impl DegreeOneStructure {
    pub fn is_independent(&self) -> bool {
        self.kernel.is_empty()
    }
}

fn primitive(v: Vec<Rational>) -> Vec<Rational> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v;
    }
    ints.into_iter().map(|x| Rational::from_integer(x / &g)).collect()
}

/// Kernel of the coefficient matrix of the partials (rows: monomials,
/// columns: variables).
pub fn degree_one_kernel(f: &Polynomial) -> Result<DegreeOneStructure> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = f.num_vars();
    let partials = f.gradient();
    let monomials: std::collections::BTreeSet<&Monomial> =
        partials.iter().flat_map(|p| p.terms().map(|(m, _)| m)).collect();
    let rows: Vec<Vec<Rational>> = monomials
        .iter()
        .map(|m| partials.iter().map(|p| p.coefficient(m.exponents())).collect())
        .collect();
    let kernel = nullspace(&rows, n).into_iter().map(primitive).collect();
    Ok(DegreeOneStructure { rank: rank(&rows), partials, kernel })
}

fn serialize_sign<S: Serializer>(value: &i8, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(match value {
        1 => "+",
        -1 => "-",
        _ => "0",
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SlpReport {
    #[serde(with = "serde_q")]
    pub f_value: Rational,
    #[serde(serialize_with = "serialize_sign")]
    pub det_sign: i8,
    #[serde(rename = "slp")]
    pub slp_holds: bool,
    #[serde(rename = "inertia")]
    pub hr_inertia: Inertia,
    #[serde(rename = "hr")]
    pub hr_relation_holds: bool,
    pub kernel_dim: usize,
    #[serde(skip)]
    pub det_value: Rational,
}

/// `(r-2)! H_F(a)`.
pub fn hodge_riemann_form(f: &Polynomial, a: &RationalPoint) -> Result<SymmetricRationalMatrix> {
    let r = f.homogeneous_degree()?;
    if r < 2 {
        return Err(Error::DegreeTooSmall { degree: r, required: 2 });
    }
    let h = hessian_and_gradient_at(f, a.coords())?.hessian;
    Ok(h.scaled(&Rational::from_integer(factorial(r - 2))))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HodgeRiemannOutcome {
    pub holds: bool,
    pub inertia: Inertia,
}

/// With `F(a) > 0`, the relation holds iff the form has inertia `(1, n-1, 0)`.
pub fn hodge_riemann_relation(f: &Polynomial, a: &RationalPoint) -> Result<HodgeRiemannOutcome> {
    let q = hodge_riemann_form(f, a)?;
    let value = f.evaluate(a.coords())?;
    if !value.is_positive() {
        return Err(Error::Precondition("Hodge-Riemann relation needs F(a) > 0".into()));
    }
    let inertia = q.inertia();
    Ok(HodgeRiemannOutcome { holds: inertia == Inertia::new(1, f.num_vars() - 1, 0), inertia })
}

/// Full degree-one report. A nontrivial degree-one kernel is reported in
/// `kernel_dim`, not rejected.
pub fn slp_degree_one(f: &Polynomial, a: &RationalPoint) -> Result<SlpReport> {
    let r = f.homogeneous_degree()?;
    if r < 2 {
        return Err(Error::DegreeTooSmall { degree: r, required: 2 });
    }
    let n = f.num_vars();
    if a.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, got: a.dim() });
    }
    let at = hessian_and_gradient_at(f, a.coords())?;
    let q = at.hessian.scaled(&Rational::from_integer(factorial(r - 2)));
    let det_value = at.hessian.determinant();
    let hr_inertia = q.inertia();
    let kernel_dim = degree_one_kernel(f)?.kernel.len();
    Ok(SlpReport {
        slp_holds: !at.value.is_zero() && !det_value.is_zero(),
        det_sign: sign(&det_value),
        hr_relation_holds: at.value.is_positive() && hr_inertia == Inertia::new(1, n - 1, 0),
        f_value: at.value,
        hr_inertia,
        kernel_dim,
        det_value,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ElementarySymmetricReport {
    pub n: usize,
    pub ell: usize,
    /// `d_ones^ell e_n = ell! e_(n-ell)`.
    pub derivative_identity: bool,
    /// The variant `e_(n-ell) = ell! d_ones^ell e_n`; true only for `ell <= 1`.
    pub scaled_variant: bool,
    pub report: SlpReport,
}

/// SLP at degree one for `e_(n-ell)`, `0 <= ell <= n-2`.
pub fn elementary_symmetric_slp(n: usize, ell: usize, a: &RationalPoint) -> Result<ElementarySymmetricReport> {
    if n < 2 || ell > n - 2 {
        return Err(Error::OutOfRange(format!("need 0 <= ell <= n - 2, got n = {n}, ell = {ell}")));
    }
    let e = Polynomial::elementary_symmetric(n, n - ell)?;
    let ones = vec![Rational::one(); n];
    let mut d = Polynomial::elementary_symmetric(n, n)?;
    for _ in 0..ell {
        d = d.directional_derivative(&ones)?;
    }
    let fact = Rational::from_integer(factorial(ell as u32));
    Ok(ElementarySymmetricReport {
        n,
        ell,
        derivative_identity: d == e.scale(&fact),
        scaled_variant: e == d.scale(&fact),
        report: slp_degree_one(&e, a)?,
    })
}

/// Report for a simple connected graph at a positive point.
pub fn graph_slp_report(g: &Graph, a: &RationalPoint) -> Result<SlpReport> {
    let simple = g.simplicity();
    if !simple.simple {
        return Err(Error::NotSimple(format!(
            "{} loop(s), {} parallel pair(s)",
            simple.loops.len(),
            simple.parallel_pairs.len()
        )));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.num_vertices() < 3 {
        return Err(Error::DegreeTooSmall { degree: g.num_vertices() as u32 - 1, required: 2 });
    }
    if !a.is_positive() {
        return Err(Error::PointOutsideCone("graph reports need a strictly positive point".into()));
    }
    slp_degree_one(&kirchhoff_polynomial(g, KirchhoffRoute::MatrixTree), a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn p(text: &str, n: usize) -> Polynomial {
        Polynomial::parse(text, Some(n)).unwrap()
    }

    fn dependent() -> Polynomial {
        p("x1*x2 + x1*x3 + 4*x1*x4 + x2*x3 + x2*x4 + x3*x4", 4)
    }

    #[test]
    fn dependency_kernel() {
        let s = degree_one_kernel(&dependent()).unwrap();
        assert_eq!(s.kernel.len(), 1);
        assert_eq!(s.rank, 3);
        let k = &s.kernel[0];
        let expected = [int(-1), int(2), int(2), int(-1)];
        let scale = &k[0] / &expected[0];
        assert!(k.iter().zip(&expected).all(|(x, y)| x == &(y * &scale)));
        let op = Polynomial::from_terms(4, (0..4).map(|i| {
            let mut e = vec![0; 4];
            e[i] = 1;
            (e, k[i].clone())
        }))
        .unwrap();
        assert!(op.apply_diff_operator(&dependent()).unwrap().is_zero());
    }

    #[test]
    fn independent_partials() {
        let k4 = kirchhoff_polynomial(&Graph::complete(4).unwrap(), KirchhoffRoute::Enumeration);
        assert!(degree_one_kernel(&k4).unwrap().is_independent());
        assert!(degree_one_kernel(&p("x1*x2", 2)).unwrap().is_independent());
        assert!(degree_one_kernel(&Polynomial::zero(2)).is_err());
    }

    #[test]
    fn dependent_quadric_fails_slp() {
        let r = slp_degree_one(&dependent(), &RationalPoint::ones(4)).unwrap();
        assert!(!r.slp_holds);
        assert_eq!(r.det_sign, 0);
        assert_eq!(r.kernel_dim, 1);
        let hr = hodge_riemann_relation(&dependent(), &RationalPoint::ones(4)).unwrap();
        assert!(!hr.holds);
        assert!(hr.inertia.n_zero > 0);
    }

    #[test]
    fn k4_report() {
        let r = graph_slp_report(&Graph::complete(4).unwrap(), &RationalPoint::ones(6)).unwrap();
        assert!(r.slp_holds && r.hr_relation_holds);
        assert_eq!(r.hr_inertia, Inertia::new(1, 5, 0));
        assert_eq!(r.f_value, int(16));
        assert_eq!(r.det_value, int(-4096));
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["inertia"], serde_json::json!([1, 5, 0]));
        assert_eq!(json["det_sign"], "-");
        assert_eq!(json["slp"], true);
    }

    #[test]
    fn k4_minus_edge_report() {
        let g = Graph::new(4, &[(1, 2), (1, 3), (1, 4), (2, 4), (3, 4)]).unwrap();
        let r = graph_slp_report(&g, &RationalPoint::from_integers(&[1, 2, 3, 4, 5])).unwrap();
        assert!(r.slp_holds && r.hr_relation_holds);
        assert_eq!(r.hr_inertia, Inertia::new(1, 4, 0));
    }

    #[test]
    fn graph_report_preconditions() {
        let doubled = Graph::new(3, &[(1, 2), (1, 2), (2, 3)]).unwrap();
        assert!(matches!(graph_slp_report(&doubled, &RationalPoint::ones(3)), Err(Error::NotSimple(_))));
        let k3 = Graph::complete(3).unwrap();
        assert!(graph_slp_report(&k3, &RationalPoint::from_integers(&[1, 0, 1])).is_err());
    }

    #[test]
    fn hodge_riemann_examples() {
        let e2 = Polynomial::elementary_symmetric(3, 2).unwrap();
        let q = hodge_riemann_form(&e2, &RationalPoint::ones(3)).unwrap();
        assert_eq!(q, SymmetricRationalMatrix::from_integers(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]).unwrap());
        let hr = hodge_riemann_relation(&e2, &RationalPoint::ones(3)).unwrap();
        assert!(hr.holds);
        assert_eq!(hr.inertia, Inertia::new(1, 2, 0));
        let neg = RationalPoint::from_integers(&[-1, -1, -1]);
        assert!(hodge_riemann_relation(&p("x1*x2*x3", 3), &neg).is_err());
    }

    #[test]
    fn elementary_symmetric() {
        let r = elementary_symmetric_slp(4, 1, &RationalPoint::ones(4)).unwrap();
        assert!(r.derivative_identity && r.scaled_variant && r.report.slp_holds);
        let r = elementary_symmetric_slp(3, 0, &RationalPoint::ones(3)).unwrap();
        assert!(r.report.slp_holds);
        let r = elementary_symmetric_slp(4, 2, &RationalPoint::ones(4)).unwrap();
        assert!(r.derivative_identity && !r.scaled_variant && r.report.slp_holds);
        assert!(elementary_symmetric_slp(4, 3, &RationalPoint::ones(4)).is_err());
    }

    #[test]
    fn product_of_variables() {
        for n in 2..6 {
            let f = Polynomial::elementary_symmetric(n, n).unwrap();
            let r = slp_degree_one(&f, &RationalPoint::ones(n)).unwrap();
            assert!(r.slp_holds);
            let expected = int((n as i64 - 1) * if n % 2 == 1 { 1 } else { -1 });
            assert_eq!(r.det_value, expected, "n = {n}");
        }
    }
}
