//! Weighted Laplacians, cofactors and the Matrix-Tree route to the
//! Kirchhoff polynomial.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::bareiss_determinant;
use crate::poly::Polynomial;

/// Square matrix of polynomials sharing one variable count.
#[derive(Clone, PartialEq, Eq)]
pub struct PolynomialMatrix {
    num_vars: usize,
    rows: Vec<Vec<Polynomial>>,
}

impl PolynomialMatrix {
    pub fn new(num_vars: usize, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let n = rows.len();
        for row in &rows {
            if row.len() != n {
                return Err(Error::NotSquare { rows: n, cols: row.len() });
            }
            for entry in row {
                if entry.num_vars() != num_vars {
                    return Err(Error::VariableCountMismatch { left: num_vars, right: entry.num_vars() });
                }
            }
        }
        Ok(PolynomialMatrix { num_vars, rows })
    }

    pub fn zeros(num_vars: usize, dim: usize) -> Self {
        PolynomialMatrix { num_vars, rows: vec![vec![Polynomial::zero(num_vars); dim]; dim] }
    }

    /// Symbolic Hessian `(d^2 F / dx_i dx_j)`.
    pub fn hessian(f: &Polynomial) -> Self {
        let n = f.num_vars();
        let grad = f.gradient();
        let mut rows = vec![vec![Polynomial::zero(n); n]; n];
        for i in 0..n {
            for j in i..n {
                let h = grad[i].partial_derivative(j).expect("index in range");
                rows[j][i] = h.clone();
                rows[i][j] = h;
            }
        }
        PolynomialMatrix { num_vars: n, rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<Polynomial>] {
        &self.rows
    }

    pub fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> Self {
        PolynomialMatrix {
            num_vars: self.num_vars,
            rows: self.rows.iter().map(|r| r.iter().map(&f).collect()).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (i + 1..n).all(|j| self.rows[i][j] == self.rows[j][i]))
    }

    /// Removes row `i` and column `j` (0-based).
    pub fn cofactor(&self, i: usize, j: usize) -> Result<PolynomialMatrix> {
        let n = self.dim();
        for idx in [i, j] {
            if idx >= n {
                return Err(Error::IndexOutOfRange { index: idx, size: n });
            }
        }
        let rows = self
            .rows
            .iter()
            .enumerate()
            .filter(|(r, _)| *r != i)
            .map(|(_, row)| {
                row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, p)| p.clone()).collect()
            })
            .collect();
        Ok(PolynomialMatrix { num_vars: self.num_vars, rows })
    }

    /// Fraction-free (Bareiss) determinant; exact polynomial division at
    /// every step.
    pub fn determinant(&self) -> Result<Polynomial> {
        bareiss_determinant(self.rows.clone(), Polynomial::one(self.num_vars))
    }

    /// Row-major canonical text, one row per line, entries separated by ` ; `.
    pub fn to_text(&self) -> String {
        self.rows
            .iter()
            .map(|r| r.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ; "))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl fmt::Debug for PolynomialMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolynomialMatrix[{}x{}]", self.dim(), self.dim())?;
        f.write_str(&self.to_text())
    }
}

/// `L = sum_e x_e (E_uu - E_uv - E_vu + E_vv)`. Loops contribute nothing.
pub fn laplacian(g: &Graph) -> PolynomialMatrix {
    let n = g.num_edges();
    let mut m = PolynomialMatrix::zeros(n, g.num_vertices());
    for (k, e) in g.edges().iter().enumerate() {
        if e.is_loop() {
            continue;
        }
        let x = Polynomial::variable(n, k).expect("edge index in range");
        let (u, v) = (e.u - 1, e.v - 1);
        m.rows[u][u] = &m.rows[u][u] + &x;
        m.rows[v][v] = &m.rows[v][v] + &x;
        m.rows[u][v] = &m.rows[u][v] - &x;
        m.rows[v][u] = &m.rows[v][u] - &x;
    }
    m
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KirchhoffRoute {
    /// `(+1) det L^(11)`.
    MatrixTree,
    /// Sum of tree monomials from the enumeration.
    Enumeration,
}

/// `F_G`; the zero polynomial for a disconnected graph.
pub fn kirchhoff_polynomial(g: &Graph, route: KirchhoffRoute) -> Polynomial {
    match route {
        KirchhoffRoute::MatrixTree => laplacian(g)
            .cofactor(0, 0)
            .and_then(|c| c.determinant())
            .expect("Laplacian cofactor determinant is exact"),
        KirchhoffRoute::Enumeration => {
            let n = g.num_edges();
            let trees = g.spanning_trees();
            let terms = trees.trees.iter().map(|t| {
                let mut exps = vec![0u32; n];
                for &e in t {
                    exps[e] = 1;
                }
                (exps, crate::rational::int(1))
            });
            Polynomial::from_terms(n, terms).expect("exponent length matches")
        }
    }
}

/// `(-1)^(i+j) det L^(ij)`, 0-based `i`, `j`.
pub fn signed_cofactor_determinant(g: &Graph, i: usize, j: usize) -> Result<Polynomial> {
    let det = laplacian(g).cofactor(i, j)?.determinant()?;
    Ok(if (i + j) % 2 == 1 { -&det } else { det })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, n: usize) -> Polynomial {
        Polynomial::parse(text, Some(n)).unwrap()
    }

    #[test]
    fn single_edge_laplacian() {
        let g = Graph::new(2, &[(1, 2)]).unwrap();
        let l = laplacian(&g);
        assert_eq!(l.get(0, 0), &p("x1", 1));
        assert_eq!(l.get(0, 1), &p("-x1", 1));
        assert_eq!(l.get(1, 0), &p("-x1", 1));
        assert_eq!(l.get(1, 1), &p("x1", 1));
    }

    #[test]
    fn loops_vanish() {
        let g = Graph::new(2, &[(1, 1), (2, 2)]).unwrap();
        let l = laplacian(&g);
        assert!(l.rows().iter().flatten().all(Polynomial::is_zero));
    }

    #[test]
    fn k4_laplacian_and_cofactor() {
        // x1=x12 x2=x13 x3=x14 x4=x23 x5=x24 x6=x34
        let l = laplacian(&Graph::complete(4).unwrap());
        assert_eq!(l.get(0, 0), &p("x1 + x2 + x3", 6));
        assert_eq!(l.get(1, 1), &p("x1 + x4 + x5", 6));
        assert_eq!(l.get(2, 2), &p("x2 + x4 + x6", 6));
        assert_eq!(l.get(3, 3), &p("x3 + x5 + x6", 6));
        assert_eq!(l.get(2, 3), &p("-x6", 6));
        assert!(l.is_symmetric());
        let c = l.cofactor(0, 0).unwrap();
        assert_eq!(c.dim(), 3);
        assert_eq!(c.get(0, 1), &p("-x4", 6));
        assert_eq!(c.get(0, 2), &p("-x5", 6));
        assert_eq!(c.get(1, 2), &p("-x6", 6));
        assert!(c.is_symmetric());
        let asym = l.cofactor(0, 1).unwrap();
        assert_eq!(asym.dim(), 3);
        assert!(!asym.is_symmetric());
        assert!(l.cofactor(4, 0).is_err());
    }

    #[test]
    fn empty_cofactor() {
        let m = PolynomialMatrix::new(1, vec![vec![p("x1", 1)]]).unwrap();
        let c = m.cofactor(0, 0).unwrap();
        assert_eq!(c.dim(), 0);
        assert_eq!(c.determinant().unwrap(), Polynomial::one(1));
    }

    #[test]
    fn routes_on_small_graphs() {
        let tri = Graph::new(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        let expected = p("x1*x2 + x1*x3 + x2*x3", 3);
        assert_eq!(kirchhoff_polynomial(&tri, KirchhoffRoute::MatrixTree), expected);
        assert_eq!(kirchhoff_polynomial(&tri, KirchhoffRoute::Enumeration), expected);

        let tree = Graph::new(4, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(kirchhoff_polynomial(&tree, KirchhoffRoute::MatrixTree), p("x1*x2*x3", 3));

        let split = Graph::new(4, &[(1, 2), (3, 4)]).unwrap();
        assert!(kirchhoff_polynomial(&split, KirchhoffRoute::MatrixTree).is_zero());
        assert!(kirchhoff_polynomial(&split, KirchhoffRoute::Enumeration).is_zero());
    }

    #[test]
    fn cofactor_sign_invariance_k4() {
        let g = Graph::complete(4).unwrap();
        let f = kirchhoff_polynomial(&g, KirchhoffRoute::Enumeration);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(signed_cofactor_determinant(&g, i, j).unwrap(), f, "cofactor ({i},{j})");
            }
        }
    }

    #[test]
    fn symbolic_hessian_is_symmetric() {
        let f = p("x1^2*x2 + 3*x2*x3^2", 3);
        let h = PolynomialMatrix::hessian(&f);
        assert!(h.is_symmetric());
        assert_eq!(h.get(0, 0), &p("2*x2", 3));
        assert_eq!(h.get(2, 2), &p("6*x2", 3));
        assert_eq!(h.get(1, 2), &p("6*x3", 3));
    }
}
