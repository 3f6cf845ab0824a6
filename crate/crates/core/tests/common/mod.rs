//! Test-side oracles that share no code path with the library's
//! congruence diagonalization.

#![allow(dead_code)]

use kirchhoff_core::rational::int;
use kirchhoff_core::{Inertia, Rational, SymmetricRationalMatrix};
use num_traits::{Signed, Zero};

/// Characteristic polynomial coefficients `c_0..=c_n` (monic) by
/// Faddeev-LeVerrier.
pub fn char_poly(m: &SymmetricRationalMatrix) -> Vec<Rational> {
    let n = m.dim();
    let a = m.rows();
    let mut c = vec![Rational::zero(); n + 1];
    c[n] = int(1);
    let mut mk = vec![vec![Rational::zero(); n]; n];
    for k in 1..=n {
        let mut next = vec![vec![Rational::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut acc: Rational = (0..n).map(|t| &a[i][t] * &mk[t][j]).sum();
                if i == j {
                    acc += &c[n - k + 1];
                }
                next[i][j] = acc;
            }
        }
        let trace: Rational = (0..n).map(|i| (0..n).map(|t| &a[i][t] * &next[t][i]).sum::<Rational>()).sum();
        c[n - k] = -trace / int(k as i64);
        mk = next;
    }
    c
}

fn sign_changes(coeffs: &[Rational]) -> usize {
    let signs: Vec<bool> = coeffs.iter().filter(|c| !c.is_zero()).map(|c| c.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Inertia from Descartes' rule, exact for real-rooted polynomials.
pub fn oracle_inertia(m: &SymmetricRationalMatrix) -> Inertia {
    let c = char_poly(m);
    let z = c.iter().position(|x| !x.is_zero()).unwrap();
    let reduced = &c[z..];
    let reflected: Vec<Rational> =
        reduced.iter().enumerate().map(|(k, x)| if (k + z) % 2 == 1 { -x } else { x.clone() }).collect();
    Inertia { n_plus: sign_changes(reduced), n_minus: sign_changes(&reflected), n_zero: z }
}

/// Leibniz expansion, for small matrices only.
pub fn leibniz_determinant(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = Rational::zero();
    permute(0, &mut perm, m, &mut total);
    total
}

fn permute(k: usize, perm: &mut Vec<usize>, m: &[Vec<Rational>], total: &mut Rational) {
    if k == perm.len() {
        let inversions = (0..perm.len()).flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)));
        let odd = inversions.filter(|&(i, j)| perm[i] > perm[j]).count() % 2 == 1;
        let term: Rational = perm.iter().enumerate().map(|(i, &j)| m[i][j].clone()).product();
        if odd {
            *total -= term;
        } else {
            *total += term;
        }
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(k + 1, perm, m, total);
        perm.swap(k, i);
    }
}
