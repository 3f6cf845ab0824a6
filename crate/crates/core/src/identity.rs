//! Randomized polynomial identity testing with exact evaluation.
//!
//! Both sides are evaluated exactly over `Q` at integer points drawn
//! uniformly from `[lo, hi]^n`. A nonzero difference of total degree `d`
//! vanishes at a random point with probability at most `d / (hi - lo + 1)`,
//! so `t` independent trials all passing by accident has probability at
//! most `(d / (hi - lo + 1))^t`.

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::Rational;

pub const DEFAULT_TRIALS: u32 = 20;
pub const DEFAULT_SEED: u64 = 0;

/// Anything that can be evaluated exactly at a rational point.
pub trait Evaluator: Sync {
    fn num_vars(&self) -> usize;
    fn evaluate_at(&self, point: &[Rational]) -> Result<Rational>;
    /// Upper bound on the total degree of the underlying polynomial.
    fn degree_bound(&self) -> u32;
}

impl Evaluator for Polynomial {
    fn num_vars(&self) -> usize {
        Polynomial::num_vars(self)
    }
    fn evaluate_at(&self, point: &[Rational]) -> Result<Rational> {
        self.evaluate(point)
    }
    fn degree_bound(&self) -> u32 {
        self.total_degree().unwrap_or(0)
    }
}

/// Wraps a closure with a declared variable count and degree bound.
pub struct FnEvaluator<F> {
    num_vars: usize,
    degree_bound: u32,
    f: F,
}

impl<F> FnEvaluator<F>
where
    F: Fn(&[Rational]) -> Result<Rational> + Sync,
{
    pub fn new(num_vars: usize, degree_bound: u32, f: F) -> Self {
        FnEvaluator { num_vars, degree_bound, f }
    }
}

impl<F> Evaluator for FnEvaluator<F>
where
    F: Fn(&[Rational]) -> Result<Rational> + Sync,
{
    fn num_vars(&self) -> usize {
        self.num_vars
    }
    fn evaluate_at(&self, point: &[Rational]) -> Result<Rational> {
        (self.f)(point)
    }
    fn degree_bound(&self) -> u32 {
        self.degree_bound
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SamplingRange {
    pub lo: u64,
    pub hi: u64,
}

impl Default for SamplingRange {
    /// `[1, 2^20]`.
    fn default() -> Self {
        SamplingRange { lo: 1, hi: 1 << 20 }
    }
}

impl SamplingRange {
    pub fn size(&self) -> u64 {
        self.hi - self.lo + 1
    }
}

/// `(degree / |S|)^trials`, kept exact.
#[derive(Clone, Debug, PartialEq)]
pub struct FailureBound {
    pub degree: u32,
    pub range_size: u64,
    pub trials: u32,
}

impl FailureBound {
    pub fn per_trial(&self) -> Rational {
        let p = Rational::new(BigInt::from(self.degree), BigInt::from(self.range_size));
        if p > Rational::one() {
            Rational::one()
        } else {
            p
        }
    }

    pub fn total(&self) -> Rational {
        Pow::pow(self.per_trial(), self.trials)
    }

    /// Exact test of `total < 2^-k`.
    pub fn below_two_to_minus(&self, k: u32) -> bool {
        self.total() * Rational::from_integer(BigInt::from(2).pow(k)) < Rational::one()
    }

    /// Approximate `log2(total)`, for display only.
    pub fn log2_estimate(&self) -> f64 {
        if self.degree == 0 {
            return f64::NEG_INFINITY;
        }
        let per = (self.degree as f64 / self.range_size as f64).min(1.0);
        self.trials as f64 * per.log2()
    }

    pub fn describe(&self) -> String {
        format!("({}/{})^{}", self.degree, self.range_size, self.trials)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityTestOutcome {
    pub pass: bool,
    pub trials: u32,
    pub seed: u64,
    pub range: SamplingRange,
    pub bound: FailureBound,
    /// Lexicographically least failing point, with both values there.
    pub witness: Option<(Vec<Rational>, Rational, Rational)>,
}

pub fn trial_rng(seed: u64, trial: u32) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_add(trial as u64))
}

pub fn sample_point(rng: &mut impl Rng, num_vars: usize, range: SamplingRange) -> Vec<Rational> {
    (0..num_vars)
        .map(|_| Rational::from_integer(BigInt::from(rng.gen_range(range.lo..=range.hi))))
        .collect()
}

/// Point for trial `trial`; trial seeds are `seed + trial`.
pub fn trial_point(seed: u64, trial: u32, num_vars: usize, range: SamplingRange) -> Vec<Rational> {
    sample_point(&mut trial_rng(seed, trial), num_vars, range)
}

pub fn polynomial_identity_test(
    lhs: &dyn Evaluator,
    rhs: &dyn Evaluator,
    trials: u32,
    seed: u64,
    range: SamplingRange,
) -> Result<IdentityTestOutcome> {
    if lhs.num_vars() != rhs.num_vars() {
        return Err(Error::VariableCountMismatch { left: lhs.num_vars(), right: rhs.num_vars() });
    }
    if range.lo > range.hi {
        return Err(Error::OutOfRange("empty sampling range".into()));
    }
    let n = lhs.num_vars();
    let results: Vec<Option<(Vec<Rational>, Rational, Rational)>> = (0..trials)
        .into_par_iter()
        .map(|t| -> Result<_> {
            let point = trial_point(seed, t, n, range);
            let l = lhs.evaluate_at(&point)?;
            let r = rhs.evaluate_at(&point)?;
            Ok(if l == r { None } else { Some((point, l, r)) })
        })
        .collect::<Result<_>>()?;
    let witness = results.into_iter().flatten().min_by(|a, b| a.0.cmp(&b.0));
    let degree = lhs.degree_bound().max(rhs.degree_bound());
    Ok(IdentityTestOutcome {
        pass: witness.is_none(),
        trials,
        seed,
        range,
        bound: FailureBound { degree, range_size: range.size(), trials },
        witness,
    })
}

/// Nonzero polynomial with rational coefficients evaluates to zero on
/// every sampled point? Convenience wrapper comparing against zero.
pub fn vanishes_at_random_points(
    f: &dyn Evaluator,
    trials: u32,
    seed: u64,
    range: SamplingRange,
) -> Result<IdentityTestOutcome> {
    let zero = FnEvaluator::new(f.num_vars(), 0, |_: &[Rational]| Ok(Rational::zero()));
    polynomial_identity_test(f, &zero, trials, seed, range)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_square_passes() {
        let lhs = Polynomial::parse("x1^2 + 2*x1*x2 + x2^2", Some(2)).unwrap();
        let sum = Polynomial::parse("x1 + x2", Some(2)).unwrap();
        let rhs = sum.pow(2);
        let out = polynomial_identity_test(&lhs, &rhs, 20, 0, SamplingRange::default()).unwrap();
        assert!(out.pass);
        assert!(out.bound.below_two_to_minus(30));
    }

    #[test]
    fn square_vs_identity_fails_with_witness() {
        let lhs = Polynomial::parse("x1^2", Some(1)).unwrap();
        let rhs = Polynomial::parse("x1", Some(1)).unwrap();
        let out = polynomial_identity_test(&lhs, &rhs, 20, 7, SamplingRange::default()).unwrap();
        assert!(!out.pass);
        let (point, l, r) = out.witness.unwrap();
        assert_eq!(lhs.evaluate(&point).unwrap(), l);
        assert_ne!(l, r);
    }

    #[test]
    fn deterministic_points() {
        let r = SamplingRange::default();
        assert_eq!(trial_point(5, 3, 4, r), trial_point(5, 3, 4, r));
        assert_eq!(trial_point(5, 3, 4, r), trial_point(6, 2, 4, r));
        assert_ne!(trial_point(5, 3, 4, r), trial_point(5, 4, 4, r));
    }

    #[test]
    fn closure_evaluator() {
        let f = Polynomial::parse("x1*x2 - x2", Some(2)).unwrap();
        let g = FnEvaluator::new(2, 2, |p: &[Rational]| Ok(&p[1] * (&p[0] - Rational::one())));
        assert!(polynomial_identity_test(&f, &g, 10, 1, SamplingRange::default()).unwrap().pass);
        let wrong = Polynomial::parse("x1*x2", Some(2)).unwrap();
        assert!(!vanishes_at_random_points(&wrong, 5, 1, SamplingRange::default()).unwrap().pass);
    }

    #[test]
    fn bound_arithmetic() {
        let b = FailureBound { degree: 45, range_size: 1 << 20, trials: 20 };
        assert!(b.below_two_to_minus(30));
        assert!(b.log2_estimate() < -200.0);
        let weak = FailureBound { degree: 1 << 19, range_size: 1 << 20, trials: 20 };
        assert!(weak.below_two_to_minus(19));
        assert!(!weak.below_two_to_minus(20));
    }
}
