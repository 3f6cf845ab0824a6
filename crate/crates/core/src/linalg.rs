//! Exact dense linear algebra: fraction-free determinants over any ring with
//! exact division, and row reduction over `Q`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::Rational;

/// An integral domain whose quotients are computed exactly when they exist.
pub trait ExactRing: Clone + Send + Sync {
    /// Whether row updates are worth spreading over threads.
    const PARALLEL: bool = false;
    fn is_zero_element(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self / rhs`, or an error when `rhs` does not divide `self`.
    fn div_exact(&self, rhs: &Self) -> Result<Self>;
}

impl ExactRing for Rational {
    fn is_zero_element(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Result<Self> {
        if Zero::is_zero(rhs) {
            return Err(Error::DivisionByZero);
        }
        Ok(self / rhs)
    }
}

impl ExactRing for Polynomial {
    const PARALLEL: bool = true;
    fn is_zero_element(&self) -> bool {
        Polynomial::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Result<Self> {
        Polynomial::div_exact(self, rhs)
    }
}

/// Bareiss fraction-free elimination with row pivoting. `one` is the ring
/// unit (and the determinant of the empty matrix).
///
/// Every division performed is exact in theory; a failing division is
/// reported as [`Error::InexactDivision`] and indicates a bug upstream.
pub fn bareiss_determinant<T: ExactRing>(mut rows: Vec<Vec<T>>, one: T) -> Result<T> {
    let n = rows.len();
    let parallel = T::PARALLEL && n > 3;
    if let Some(bad) = rows.iter().find(|r| r.len() != n) {
        return Err(Error::NotSquare { rows: n, cols: bad.len() });
    }
    if n == 0 {
        return Ok(one);
    }
    let mut negate = false;
    let mut prev = one;
    for k in 0..n - 1 {
        if rows[k][k].is_zero_element() {
            match (k + 1..n).find(|&i| !rows[i][k].is_zero_element()) {
                Some(i) => {
                    rows.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(prev.sub(&prev)),
            }
        }
        let (head, tail) = rows.split_at_mut(k + 1);
        let pivot_row = &head[k];
        let pivot = &pivot_row[k];
        let step = |row: &mut Vec<T>| -> Result<()> {
            for j in k + 1..n {
                let num = row[j].mul(pivot).sub(&row[k].mul(&pivot_row[j]));
                row[j] = num.div_exact(&prev)?;
            }
            Ok(())
        };
        if parallel {
            tail.par_iter_mut().try_for_each(step)?;
        } else {
            tail.iter_mut().try_for_each(step)?;
        }
        prev = rows[k][k].clone();
    }
    let det = rows[n - 1][n - 1].clone();
    Ok(if negate { det.neg() } else { det })
}

impl ExactRing for BigInt {
    fn is_zero_element(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (q, r) = self.div_rem(rhs);
        if r.is_zero() { Ok(q) } else { Err(Error::InexactDivision) }
    }
}

/// Clears denominators row by row and runs integer Bareiss.
pub fn rational_determinant(rows: &[Vec<Rational>]) -> Result<Rational> {
    let mut scale = BigInt::one();
    let mut int_rows = Vec::with_capacity(rows.len());
    for row in rows {
        let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        int_rows.push(row.iter().map(|x| x.numer() * (&l / x.denom())).collect::<Vec<_>>());
        scale *= l;
    }
    let det = bareiss_determinant(int_rows, BigInt::one())?;
    Ok(Rational::new(det, scale))
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(rows: &mut [Vec<Rational>]) -> Vec<usize> {
    let m = rows.len();
    let n = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = Rational::from_integer(1.into()) / &rows[r][c];
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..n {
                    let delta = &f * &rows[r][j];
                    rows[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of `{ v : A v = 0 }` for an `m x n` matrix with `n` columns.
pub fn nullspace(rows: &[Vec<Rational>], num_cols: usize) -> Vec<Vec<Rational>> {
    let mut a = rows.to_vec();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..num_cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); num_cols];
            v[f] = Rational::from_integer(1.into());
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -a[r][f].clone();
            }
            v
        })
        .collect()
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut a = rows.to_vec();
    rref(&mut a).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn q(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn small_rational_determinants() {
        assert_eq!(rational_determinant(&q(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])).unwrap(), int(1));
        assert_eq!(rational_determinant(&q(&[&[0, 1], &[1, 0]])).unwrap(), int(-1));
        assert_eq!(rational_determinant(&q(&[&[1, 2], &[2, 4]])).unwrap(), int(0));
        assert_eq!(rational_determinant(&q(&[&[2, 1, 3], &[0, 0, 1], &[1, 5, 2]])).unwrap(), int(-9));
        assert_eq!(rational_determinant(&[]).unwrap(), int(1));
        let half = vec![vec![ratio(1, 2), int(1)], vec![int(1), ratio(1, 3)]];
        assert_eq!(rational_determinant(&half).unwrap(), ratio(1, 6) - int(1));
    }

    #[test]
    fn polynomial_determinant() {
        let x = Polynomial::variable(1, 0).unwrap();
        let one = Polynomial::one(1);
        let det = bareiss_determinant(vec![vec![x.clone(), one.clone()], vec![one.clone(), x.clone()]], one)
            .unwrap();
        assert_eq!(det, Polynomial::parse("x1^2 - 1", Some(1)).unwrap());
    }

    #[test]
    fn not_square() {
        assert!(matches!(
            rational_determinant(&[vec![int(1), int(2)]]),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn nullspace_and_rank() {
        let a = q(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(rank(&a), 1);
        let ns = nullspace(&a, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for row in &a {
                let s: Rational = row.iter().zip(v).map(|(x, y)| x * y).sum();
                assert!(s.is_zero());
            }
        }
        assert!(nullspace(&q(&[&[1, 0], &[0, 1]]), 2).is_empty());
    }
}
