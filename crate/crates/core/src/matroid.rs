//! Matroids given by an explicit basis list.
//!
//! Elements are `0..ground_size` and map to variables `x_1 .. x_N`. Bases are
//! stored as bit masks, so the ground set is limited to 64 elements.

use std::collections::HashSet;

use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::{Graph, SimplicityReport};
use crate::poly::Polynomial;
use crate::rational::Rational;

pub const MAX_GROUND_SIZE: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matroid {
    ground_size: usize,
    rank: usize,
    bases: Vec<u64>,
}

fn mask_of(elements: &[usize]) -> u64 {
    elements.iter().fold(0u64, |m, &e| m | (1u64 << e))
}

fn elements_of(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask & (1u64 << i) != 0).collect()
}

impl Matroid {
    /// Checks range, non-emptiness and equicardinality. The exchange axiom
    /// is checked separately by [`Matroid::validate_exchange`].
    pub fn new(ground_size: usize, bases: &[Vec<usize>]) -> Result<Matroid> {
        if ground_size > MAX_GROUND_SIZE {
            return Err(Error::InvalidMatroid(format!("ground set larger than {MAX_GROUND_SIZE}")));
        }
        if bases.is_empty() {
            return Err(Error::InvalidMatroid("basis family is empty".into()));
        }
        let mut masks = Vec::with_capacity(bases.len());
        for b in bases {
            if let Some(&e) = b.iter().find(|&&e| e >= ground_size) {
                return Err(Error::IndexOutOfRange { index: e, size: ground_size });
            }
            let m = mask_of(b);
            if m.count_ones() as usize != b.len() {
                return Err(Error::InvalidMatroid(format!("repeated element in basis {b:?}")));
            }
            masks.push(m);
        }
        let rank = masks[0].count_ones() as usize;
        if masks.iter().any(|m| m.count_ones() as usize != rank) {
            return Err(Error::InvalidMatroid("bases have different sizes".into()));
        }
        masks.sort_unstable();
        masks.dedup();
        Ok(Matroid { ground_size, rank, bases: masks })
    }

    /// Ground set = edge indices, bases = spanning trees.
    pub fn graphic(g: &Graph) -> Result<Matroid> {
        let trees = g.spanning_trees();
        if trees.disconnected {
            return Err(Error::Disconnected);
        }
        Matroid::new(g.num_edges(), &trees.trees)
    }

    /// The uniform matroid `U(k, n)`.
    pub fn uniform(k: usize, n: usize) -> Result<Matroid> {
        if k > n {
            return Err(Error::OutOfRange(format!("U({k},{n}) needs k <= n")));
        }
        let mut bases = Vec::new();
        let mut current = Vec::with_capacity(k);
        fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if current.len() == k {
                out.push(current.clone());
                return;
            }
            for i in start..n {
                current.push(i);
                rec(i + 1, n, k, current, out);
                current.pop();
            }
        }
        rec(0, n, k, &mut current, &mut bases);
        Matroid::new(n, &bases)
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_bases(&self) -> usize {
        self.bases.len()
    }

    pub fn bases(&self) -> Vec<Vec<usize>> {
        self.bases.iter().map(|&m| elements_of(m)).collect()
    }

    pub fn is_basis(&self, elements: &[usize]) -> bool {
        self.bases.binary_search(&mask_of(elements)).is_ok()
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.bases.iter().all(|b| b & (1u64 << e) == 0)
    }

    pub fn is_coloop(&self, e: usize) -> bool {
        self.bases.iter().all(|b| b & (1u64 << e) != 0)
    }

    /// For all `B1, B2` and `x` in `B1 \ B2` there is `y` in `B2 \ B1` with
    /// `B1 - x + y` a basis.
    pub fn validate_exchange(&self) -> bool {
        let set: HashSet<u64> = self.bases.iter().copied().collect();
        for &b1 in &self.bases {
            for &b2 in &self.bases {
                let mut only1 = b1 & !b2;
                while only1 != 0 {
                    let x = only1 & only1.wrapping_neg();
                    only1 ^= x;
                    let mut only2 = b2 & !b1;
                    let mut found = false;
                    while only2 != 0 {
                        let y = only2 & only2.wrapping_neg();
                        only2 ^= y;
                        if set.contains(&((b1 & !x) | y)) {
                            found = true;
                            break;
                        }
                    }
                    if !found {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Loops are elements in no basis; `{e, f}` is a parallel pair when both
    /// are non-loops and no basis contains both.
    pub fn simplicity(&self) -> SimplicityReport {
        let loops: Vec<usize> = (0..self.ground_size).filter(|&e| self.is_loop(e)).collect();
        let mut parallel_pairs = Vec::new();
        for e in 0..self.ground_size {
            if loops.contains(&e) {
                continue;
            }
            for f in e + 1..self.ground_size {
                if loops.contains(&f) {
                    continue;
                }
                let both = (1u64 << e) | (1u64 << f);
                if self.bases.iter().all(|b| b & both != both) {
                    parallel_pairs.push((e, f));
                }
            }
        }
        SimplicityReport { simple: loops.is_empty() && parallel_pairs.is_empty(), loops, parallel_pairs }
    }

    /// `(M \ e, M / e)`. Both keep the ground size so their generating
    /// functions live in the same variables; `e` simply occurs in no basis.
    pub fn delete_contract(&self, e: usize) -> Result<(Matroid, Matroid)> {
        if e >= self.ground_size {
            return Err(Error::IndexOutOfRange { index: e, size: self.ground_size });
        }
        if self.is_loop(e) {
            return Err(Error::Loop(e));
        }
        if self.is_coloop(e) {
            return Err(Error::Coloop(e));
        }
        let bit = 1u64 << e;
        let deletion: Vec<u64> = self.bases.iter().copied().filter(|b| b & bit == 0).collect();
        let contraction: Vec<u64> =
            self.bases.iter().copied().filter(|b| b & bit != 0).map(|b| b & !bit).collect();
        Ok((
            Matroid { ground_size: self.ground_size, rank: self.rank, bases: deletion },
            Matroid { ground_size: self.ground_size, rank: self.rank - 1, bases: contraction },
        ))
    }

    /// `F_M = sum over bases B of prod_{i in B} x_i`.
    pub fn basis_generating_function(&self) -> Polynomial {
        let terms = self.bases.iter().map(|&b| {
            let exps = (0..self.ground_size).map(|i| ((b >> i) & 1) as u32).collect();
            (exps, Rational::one())
        });
        Polynomial::from_terms(self.ground_size, terms).expect("exponent length matches")
    }

    /// The unique circuit inside `B + e`.
    pub fn fundamental_circuit(&self, e: usize, basis: &[usize]) -> Result<Vec<usize>> {
        if e >= self.ground_size {
            return Err(Error::IndexOutOfRange { index: e, size: self.ground_size });
        }
        let b = mask_of(basis);
        if !self.is_basis(basis) {
            return Err(Error::NotABasis);
        }
        if b & (1u64 << e) != 0 {
            return Err(Error::ElementInBasis(e));
        }
        if self.is_loop(e) {
            return Err(Error::Loop(e));
        }
        let mut circuit = vec![e];
        for f in elements_of(b) {
            let swapped = (b & !(1u64 << f)) | (1u64 << e);
            if self.bases.binary_search(&swapped).is_ok() {
                circuit.push(f);
            }
        }
        circuit.sort_unstable();
        Ok(circuit)
    }
}
