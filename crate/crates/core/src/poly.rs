//! Sparse multivariate polynomials over `Q`.
//!
//! Terms are keyed by dense exponent vectors and kept in graded
//! lexicographic order (`x1 > x2 > ... > xn`). Iteration yields the leading
//! term first. No stored coefficient is ever zero.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_rational, format_rational_short, parse_rational, Rational};

/// Exponent vector. The derived ordering compares total degree first and then
/// the exponents lexicographically, which is graded lex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    degree: u32,
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        let degree = exponents.iter().sum();
        Monomial { degree, exponents }
    }

    pub fn one(num_vars: usize) -> Self {
        Monomial { degree: 0, exponents: vec![0; num_vars] }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| a + b)
            .collect();
        Monomial { degree: self.degree + other.degree, exponents }
    }

    /// `self / other` when `other` divides `self`.
    fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exponents = Vec::with_capacity(self.exponents.len());
        for (a, b) in self.exponents.iter().zip(&other.exponents) {
            exponents.push(a.checked_sub(*b)?);
        }
        Some(Monomial { degree: self.degree - other.degree, exponents })
    }

    pub fn is_multi_affine(&self) -> bool {
        self.exponents.iter().all(|&e| e <= 1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HomogeneityProfile {
    /// The zero polynomial counts as homogeneous.
    pub is_homogeneous: bool,
    /// `None` exactly for the zero polynomial, or when terms of several
    /// degrees are present.
    pub degree: Option<u32>,
    pub is_multi_affine: bool,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    num_vars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(num_vars: usize) -> Self {
        Polynomial { num_vars, terms: BTreeMap::new() }
    }

    pub fn one(num_vars: usize) -> Self {
        Self::constant(num_vars, Rational::one())
    }

    pub fn constant(num_vars: usize, value: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !value.is_zero() {
            terms.insert(Monomial::one(num_vars), value);
        }
        Polynomial { num_vars, terms }
    }

    /// The coordinate function `x_index` (0-based).
    pub fn variable(num_vars: usize, index: usize) -> Result<Self> {
        if index >= num_vars {
            return Err(Error::IndexOutOfRange { index, size: num_vars });
        }
        let mut exps = vec![0; num_vars];
        exps[index] = 1;
        Ok(Self::monomial(Monomial::new(exps), Rational::one()))
    }

    pub fn monomial(monomial: Monomial, coeff: Rational) -> Self {
        let num_vars = monomial.exponents.len();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(monomial, coeff);
        }
        Polynomial { num_vars, terms }
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging
    /// duplicates and dropping zeros.
    pub fn from_terms<I>(num_vars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (exps, coeff) in terms {
            if exps.len() != num_vars {
                return Err(Error::DimensionMismatch { expected: num_vars, got: exps.len() });
            }
            *acc.entry(Monomial::new(exps)).or_insert_with(Rational::zero) += coeff;
        }
        Ok(Self::from_map(num_vars, acc))
    }

    fn from_map(num_vars: usize, map: HashMap<Monomial, Rational>) -> Self {
        let terms: BTreeMap<_, _> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let p = Polynomial { num_vars, terms };
        debug_assert!(p.is_canonical());
        p
    }

    /// No zero coefficients, every exponent vector of the right length.
    pub fn is_canonical(&self) -> bool {
        self.terms.iter().all(|(m, c)| {
            !c.is_zero()
                && m.exponents.len() == self.num_vars
                && m.degree == m.exponents.iter().sum::<u32>()
        })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order, leading term first.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> Rational {
        self.terms
            .get(&Monomial::new(exponents.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Constant term when the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.degree == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.leading_term().map(|(m, _)| m.degree)
    }

    pub fn homogeneity_profile(&self) -> HomogeneityProfile {
        let is_multi_affine = self.terms.keys().all(Monomial::is_multi_affine);
        let (lo, hi) = match (self.terms.keys().next(), self.terms.keys().next_back()) {
            (Some(lo), Some(hi)) => (lo.degree, hi.degree),
            _ => {
                return HomogeneityProfile { is_homogeneous: true, degree: None, is_multi_affine }
            }
        };
        let is_homogeneous = lo == hi;
        HomogeneityProfile {
            is_homogeneous,
            degree: is_homogeneous.then_some(hi),
            is_multi_affine,
        }
    }

    /// Degree of a nonzero homogeneous polynomial.
    pub fn homogeneous_degree(&self) -> Result<u32> {
        let profile = self.homogeneity_profile();
        if !profile.is_homogeneous {
            return Err(Error::NotHomogeneous);
        }
        profile.degree.ok_or(Error::ZeroPolynomial)
    }

    fn check_vars(&self, other: &Polynomial) -> Result<()> {
        if self.num_vars != other.num_vars {
            return Err(Error::VariableCountMismatch { left: self.num_vars, right: other.num_vars });
        }
        Ok(())
    }

    fn check_index(&self, index: usize) -> Result<()> {
        if index >= self.num_vars {
            return Err(Error::IndexOutOfRange { index, size: self.num_vars });
        }
        Ok(())
    }

    fn check_point(&self, point: &[Rational]) -> Result<()> {
        if point.len() != self.num_vars {
            return Err(Error::DimensionMismatch { expected: self.num_vars, got: point.len() });
        }
        Ok(())
    }

    pub fn arithmetic(&self, rhs: &Polynomial, op: ArithOp) -> Result<Polynomial> {
        match op {
            ArithOp::Add => self.try_add(rhs),
            ArithOp::Sub => self.try_sub(rhs),
            ArithOp::Mul => self.try_mul(rhs),
        }
    }

    pub fn try_add(&self, rhs: &Polynomial) -> Result<Polynomial> {
        self.check_vars(rhs)?;
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        Ok(out)
    }

    pub fn try_sub(&self, rhs: &Polynomial) -> Result<Polynomial> {
        self.check_vars(rhs)?;
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        Ok(out)
    }

    pub fn try_mul(&self, rhs: &Polynomial) -> Result<Polynomial> {
        self.check_vars(rhs)?;
        if self.is_zero() || rhs.is_zero() {
            return Ok(Polynomial::zero(self.num_vars));
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let c = ca * cb;
                match acc.entry(ma.mul(mb)) {
                    std::collections::hash_map::Entry::Occupied(mut e) => *e.get_mut() += c,
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        Ok(Self::from_map(self.num_vars, acc))
    }

    /// `self += factor * other`, in place.
    fn add_scaled(&mut self, other: &Polynomial, factor: &Rational) {
        for (m, c) in &other.terms {
            let delta = c * factor;
            match self.terms.entry(m.clone()) {
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    *e.get_mut() += delta;
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
                std::collections::btree_map::Entry::Vacant(e) => {
                    if !delta.is_zero() {
                        e.insert(delta);
                    }
                }
            }
        }
    }

    /// `self -= coeff * x^shift * other`, in place.
    fn sub_shifted(&mut self, other: &Polynomial, shift: &Monomial, coeff: &Rational) {
        for (m, c) in &other.terms {
            let delta = c * coeff;
            match self.terms.entry(m.mul(shift)) {
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    *e.get_mut() -= delta;
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(-delta);
                }
            }
        }
    }

    pub fn scale(&self, factor: &Rational) -> Polynomial {
        if factor.is_zero() {
            return Polynomial::zero(self.num_vars);
        }
        Polynomial {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * factor)).collect(),
        }
    }

    pub fn pow(&self, exponent: u32) -> Polynomial {
        let mut result = Polynomial::one(self.num_vars);
        let mut base = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Exact quotient `self / divisor`; fails if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Polynomial) -> Result<Polynomial> {
        self.check_vars(divisor)?;
        let (dm, dc) = divisor.leading_term().ok_or(Error::DivisionByZero)?;
        let (dm, dc) = (dm.clone(), dc.clone());
        if divisor.terms.len() == 1 {
            let mut terms = BTreeMap::new();
            for (m, c) in &self.terms {
                let q = m.div(&dm).ok_or(Error::InexactDivision)?;
                terms.insert(q, c / &dc);
            }
            return Ok(Polynomial { num_vars: self.num_vars, terms });
        }
        let mut remainder = self.clone();
        let mut quotient = BTreeMap::new();
        while let Some((rm, rc)) = remainder.leading_term() {
            let shift = rm.div(&dm).ok_or(Error::InexactDivision)?;
            let coeff = rc / &dc;
            remainder.sub_shifted(divisor, &shift, &coeff);
            quotient.insert(shift, coeff);
        }
        Ok(Polynomial { num_vars: self.num_vars, terms: quotient })
    }

    pub fn partial_derivative(&self, index: usize) -> Result<Polynomial> {
        self.check_index(index)?;
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exponents[index];
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents.clone();
            exps[index] = e - 1;
            terms.insert(Monomial::new(exps), c * Rational::from_integer(BigInt::from(e)));
        }
        Ok(Polynomial { num_vars: self.num_vars, terms })
    }

    pub fn gradient(&self) -> Vec<Polynomial> {
        (0..self.num_vars)
            .map(|i| self.partial_derivative(i).expect("index in range"))
            .collect()
    }

    /// `sum_i direction[i] * dF/dx_i`.
    pub fn directional_derivative(&self, direction: &[Rational]) -> Result<Polynomial> {
        self.check_point(direction)?;
        let mut out = Polynomial::zero(self.num_vars);
        for (i, a) in direction.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            out.add_scaled(&self.partial_derivative(i)?, a);
        }
        Ok(out)
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        self.check_point(point)?;
        let max_exp = self.terms.keys().flat_map(|m| m.exponents.iter()).copied().max().unwrap_or(0);
        // powers[i][e] = point[i]^e
        let powers: Vec<Vec<Rational>> = point
            .iter()
            .map(|x| {
                let mut row = Vec::with_capacity(max_exp as usize + 1);
                row.push(Rational::one());
                for e in 1..=max_exp as usize {
                    let next = &row[e - 1] * x;
                    row.push(next);
                }
                row
            })
            .collect();
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut value = c.clone();
            for (i, &e) in m.exponents.iter().enumerate() {
                if e > 0 {
                    value *= &powers[i][e as usize];
                }
            }
            total += value;
        }
        Ok(total)
    }

    /// Substitutes zero for the listed variables. The variable count is kept.
    pub fn restrict_to_zero(&self, vars: &[usize]) -> Result<Polynomial> {
        for &v in vars {
            self.check_index(v)?;
        }
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| vars.iter().all(|&v| m.exponents[v] == 0))
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Ok(Polynomial { num_vars: self.num_vars, terms })
    }

    /// Drops the listed variables from the ambient space. Every listed
    /// variable must be absent from the support.
    pub fn remove_variables(&self, vars: &[usize]) -> Result<Polynomial> {
        for &v in vars {
            self.check_index(v)?;
        }
        if self.terms.keys().any(|m| vars.iter().any(|&v| m.exponents[v] != 0)) {
            return Err(Error::Precondition("removed variable occurs in the polynomial".into()));
        }
        let keep: Vec<usize> = (0..self.num_vars).filter(|i| !vars.contains(i)).collect();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (Monomial::new(keep.iter().map(|&i| m.exponents[i]).collect()), c.clone()))
            .collect();
        Ok(Polynomial { num_vars: keep.len(), terms })
    }

    /// Re-embeds into a larger ambient space; new variables are appended.
    pub fn extend_vars(&self, num_vars: usize) -> Result<Polynomial> {
        if num_vars < self.num_vars {
            return Err(Error::DimensionMismatch { expected: self.num_vars, got: num_vars });
        }
        let extra = num_vars - self.num_vars;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = m.exponents.clone();
                exps.extend(std::iter::repeat_n(0, extra));
                (Monomial { degree: m.degree, exponents: exps }, c.clone())
            })
            .collect();
        Ok(Polynomial { num_vars, terms })
    }

    /// `P(d/dx_1, ..., d/dx_n) F` where `self` is `P`.
    pub fn apply_diff_operator(&self, target: &Polynomial) -> Result<Polynomial> {
        self.check_vars(target)?;
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (pm, pc) in &self.terms {
            for (fm, fc) in &target.terms {
                let Some(rest) = fm.div(pm) else { continue };
                let mut falling = BigInt::one();
                for (&b, &a) in fm.exponents.iter().zip(&pm.exponents) {
                    for k in 0..a {
                        falling *= BigInt::from(b - k);
                    }
                }
                *acc.entry(rest).or_insert_with(Rational::zero) +=
                    pc * fc * Rational::from_integer(falling);
            }
        }
        Ok(Self::from_map(self.num_vars, acc))
    }

    /// `e_k(x_1, ..., x_n)`.
    pub fn elementary_symmetric(n: usize, k: usize) -> Result<Polynomial> {
        if k > n {
            return Err(Error::OutOfRange(format!("k = {k} exceeds n = {n}")));
        }
        let mut terms = BTreeMap::new();
        let mut exps = vec![0u32; n];
        fn rec(
            start: usize,
            left: usize,
            exps: &mut Vec<u32>,
            terms: &mut BTreeMap<Monomial, Rational>,
        ) {
            if left == 0 {
                terms.insert(Monomial::new(exps.clone()), Rational::one());
                return;
            }
            for i in start..=exps.len() - left {
                exps[i] = 1;
                rec(i + 1, left - 1, exps, terms);
                exps[i] = 0;
            }
        }
        rec(0, k, &mut exps, &mut terms);
        Ok(Polynomial { num_vars: n, terms })
    }

    /// Parses the canonical text form, or the looser `4*x1*x2 - x3^2` style.
    /// Variables are `x1 .. xn`. With `num_vars = None` the largest index seen
    /// fixes the variable count.
    pub fn parse(text: &str, num_vars: Option<usize>) -> Result<Polynomial> {
        let raw = parse_terms(text)?;
        let max_index = raw.iter().flat_map(|(_, f)| f.iter().map(|(i, _)| *i)).max().unwrap_or(0);
        let n = match num_vars {
            Some(n) if n < max_index => {
                return Err(Error::Parse(format!("variable x{max_index} exceeds {n} variables")))
            }
            Some(n) => n,
            None => max_index,
        };
        let terms = raw.into_iter().map(|(coeff, factors)| {
            let mut exps = vec![0u32; n];
            for (i, e) in factors {
                exps[i - 1] += e;
            }
            (exps, coeff)
        });
        Polynomial::from_terms(n, terms)
    }

    /// Human-oriented rendering with custom variable names.
    pub fn pretty(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.degree == 0 {
                factors.push(format_rational_short(&abs));
            }
            for (i, &e) in m.exponents.iter().enumerate() {
                let name = names.get(i).cloned().unwrap_or_else(|| format!("x{}", i + 1));
                match e {
                    0 => {}
                    1 => factors.push(name),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

type RawTerm = (Rational, Vec<(usize, u32)>);

fn parse_terms(text: &str) -> Result<Vec<RawTerm>> {
    #[derive(Debug, PartialEq)]
    enum Tok {
        Num(String),
        Var(usize),
        Caret,
        Star,
        Plus,
        Minus,
    }
    let bad = |msg: &str| Error::Parse(format!("polynomial: {msg}"));
    let chars: Vec<char> = text.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        match ch {
            c if c.is_whitespace() => i += 1,
            '+' => {
                toks.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                toks.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                toks.push(Tok::Star);
                i += 1;
            }
            '^' => {
                toks.push(Tok::Caret);
                i += 1;
            }
            'x' => {
                let start = i + 1;
                i = start;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let idx: usize = chars[start..i]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| bad("variable needs an index"))?;
                if idx == 0 {
                    return Err(bad("variables are numbered from x1"));
                }
                toks.push(Tok::Var(idx));
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '/') {
                    i += 1;
                }
                toks.push(Tok::Num(chars[start..i].iter().collect()));
            }
            other => return Err(bad(&format!("unexpected character '{other}'"))),
        }
    }
    if toks.is_empty() {
        return Err(bad("empty input"));
    }

    let mut terms = Vec::new();
    let mut pos = 0;
    let mut first = true;
    while pos < toks.len() {
        let mut negative = false;
        if !first {
            match toks[pos] {
                Tok::Plus => {}
                Tok::Minus => negative = true,
                _ => return Err(bad("expected '+' or '-' between terms")),
            }
            pos += 1;
        }
        first = false;
        while pos < toks.len() && (toks[pos] == Tok::Minus || toks[pos] == Tok::Plus) {
            if toks[pos] == Tok::Minus {
                negative = !negative;
            }
            pos += 1;
        }
        let mut coeff = Rational::one();
        let mut factors = Vec::new();
        loop {
            match toks.get(pos) {
                Some(Tok::Num(s)) => {
                    coeff *= parse_rational(s)?;
                    pos += 1;
                }
                Some(Tok::Var(v)) => {
                    let v = *v;
                    pos += 1;
                    let mut e = 1u32;
                    if toks.get(pos) == Some(&Tok::Caret) {
                        match toks.get(pos + 1) {
                            Some(Tok::Num(s)) => {
                                e = s.parse().map_err(|_| bad("bad exponent"))?;
                                pos += 2;
                            }
                            _ => return Err(bad("exponent expected after '^'")),
                        }
                    }
                    factors.push((v, e));
                }
                _ => return Err(bad("factor expected")),
            }
            if toks.get(pos) == Some(&Tok::Star) {
                pos += 1;
            } else {
                break;
            }
        }
        if negative {
            coeff = -coeff;
        }
        terms.push((coeff, factors));
    }
    Ok(terms)
}

/// Canonical serialization: `p/q * x<i>^<e> * ...` terms joined by ` + `,
/// leading term first. The zero polynomial is `0/1`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0/1");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            f.write_str(&format_rational(c))?;
            for (i, &e) in m.exponents.iter().enumerate() {
                if e > 0 {
                    write!(f, " * x{}^{}", i + 1, e)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({})", self.num_vars, self)
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Polynomial::parse(s, None)
    }
}

// Operator impls panic on a variable-count mismatch; use `try_*` for
// checked arithmetic.
impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("variable count mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("variable count mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("variable count mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        assert_eq!(self.num_vars, rhs.num_vars, "variable count mismatch");
        self.add_scaled(&rhs, &Rational::one());
        self
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(mut self, rhs: Polynomial) -> Polynomial {
        assert_eq!(self.num_vars, rhs.num_vars, "variable count mismatch");
        self.add_scaled(&rhs, &-Rational::one());
        self
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}
