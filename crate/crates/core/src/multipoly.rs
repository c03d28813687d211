//! Sparse multivariate polynomials with positive per-variable weights.
//!
//! Terms live in a `BTreeMap` keyed by exponent vector under graded-lex order
//! (total degree first, then lexicographic), so iteration and serialization
//! are reproducible. Zero coefficients are never stored.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Var {
    pub name: String,
    pub weight: u32,
}

impl Var {
    pub fn new(name: impl Into<String>, weight: u32) -> Self {
        Var { name: name.into(), weight }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum MultiPolyError {
    #[error("zero polynomial has no degree")]
    ZeroDegree,
    #[error("exponent vector {exp:?} has length {got}, expected {expected}")]
    ExponentLength { exp: Vec<u32>, got: usize, expected: usize },
    #[error("variable {0:?} must have a positive weight")]
    NonPositiveWeight(String),
    #[error("duplicate variable name {0:?}")]
    DuplicateVar(String),
    #[error("duplicate term with exponent {0:?}")]
    DuplicateTerm(Vec<u32>),
    #[error("invalid coefficient {0:?}")]
    BadCoefficient(String),
    #[error("unknown variable {0:?}")]
    UnknownVar(String),
}

/// Exponent vector ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn weighted_degree(&self, vars: &[Var]) -> u64 {
        self.0
            .iter()
            .zip(vars)
            .map(|(&e, v)| e as u64 * v.weight as u64)
            .sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MultiPoly<F> {
    vars: Vec<Var>,
    terms: BTreeMap<Monomial, F>,
}

fn check_vars(vars: &[Var]) -> Result<(), MultiPolyError> {
    for (i, v) in vars.iter().enumerate() {
        if v.weight == 0 {
            return Err(MultiPolyError::NonPositiveWeight(v.name.clone()));
        }
        if vars[..i].iter().any(|w| w.name == v.name) {
            return Err(MultiPolyError::DuplicateVar(v.name.clone()));
        }
    }
    Ok(())
}

impl<F: Scalar> MultiPoly<F> {
    pub fn zero(vars: Vec<Var>) -> Result<Self, MultiPolyError> {
        check_vars(&vars)?;
        Ok(MultiPoly { vars, terms: BTreeMap::new() })
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed and zero results dropped.
    pub fn from_terms(
        vars: Vec<Var>,
        terms: impl IntoIterator<Item = (Vec<u32>, F)>,
    ) -> Result<Self, MultiPolyError> {
        let mut p = Self::zero(vars)?;
        for (exp, c) in terms {
            p.check_len(&exp)?;
            p.add_term(Monomial(exp), c);
        }
        Ok(p)
    }

    fn check_len(&self, exp: &[u32]) -> Result<(), MultiPolyError> {
        if exp.len() != self.vars.len() {
            return Err(MultiPolyError::ExponentLength {
                exp: exp.to_vec(),
                got: exp.len(),
                expected: self.vars.len(),
            });
        }
        Ok(())
    }

    fn add_term(&mut self, m: Monomial, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(old) => {
                let s = old.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn constant(vars: Vec<Var>, c: F) -> Result<Self, MultiPolyError> {
        let n = vars.len();
        Self::from_terms(vars, [(vec![0; n], c)])
    }

    /// The variable with index `i` as a polynomial. Panics if out of range.
    pub fn var(vars: &[Var], i: usize) -> Self {
        assert!(i < vars.len(), "variable index out of range");
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Self::from_terms(vars.to_vec(), [(e, F::one())]).expect("valid variables")
    }

    /// Single term `c · x^exp`.
    pub fn term(vars: &[Var], exp: Vec<u32>, c: F) -> Result<Self, MultiPolyError> {
        Self::from_terms(vars.to_vec(), [(exp, c)])
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Result<usize, MultiPolyError> {
        self.vars
            .iter()
            .position(|v| v.name == name)
            .ok_or_else(|| MultiPolyError::UnknownVar(name.to_string()))
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&[u32], &F)> {
        self.terms.iter().map(|(m, c)| (m.0.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &[u32]) -> F {
        self.terms
            .get(&Monomial(exp.to_vec()))
            .cloned()
            .unwrap_or_else(F::zero)
    }

    /// Maximum weighted degree over the terms, and whether every term has it.
    pub fn weighted_degree(&self) -> Result<(u64, bool), MultiPolyError> {
        let degs: Vec<u64> = self
            .terms
            .keys()
            .map(|m| m.weighted_degree(&self.vars))
            .collect();
        let max = *degs.iter().max().ok_or(MultiPolyError::ZeroDegree)?;
        Ok((max, degs.iter().all(|&d| d == max)))
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a.clone() * c.clone());
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::constant(self.vars.clone(), F::one()).expect("valid variables");
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Keeps only the terms for which `keep` returns true.
    pub fn filter_terms(&self, mut keep: impl FnMut(&[u32], &F) -> bool) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, c)| keep(&m.0, c))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Replaces variable `i` by `q` (which must live over the same variables)
    /// and expands.
    pub fn substitute(&self, i: usize, q: &MultiPoly<F>) -> Self {
        assert_eq!(self.vars, q.vars, "substitution across different variable lists");
        let mut powers: Vec<MultiPoly<F>> = vec![];
        let mut out = MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (m, c) in &self.terms {
            let e = m.0[i] as usize;
            while powers.len() <= e {
                let next = match powers.last() {
                    None => Self::constant(self.vars.clone(), F::one()).expect("valid"),
                    Some(p) => p * q,
                };
                powers.push(next);
            }
            let mut rest = m.0.clone();
            rest[i] = 0;
            let mono = MultiPoly::term(&self.vars, rest, c.clone()).expect("same length");
            out = &out + &(&mono * &powers[e]);
        }
        out
    }

    /// Total degree in the variables listed in `idx`, for one exponent.
    pub fn partial_degree(exp: &[u32], idx: &[usize]) -> u32 {
        idx.iter().map(|&i| exp[i]).sum()
    }

    fn same_vars(&self, o: &Self) {
        assert_eq!(self.vars, o.vars, "arithmetic across different variable lists");
    }
}

impl<F: Scalar> std::ops::Add for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn add(self, o: &MultiPoly<F>) -> MultiPoly<F> {
        self.same_vars(o);
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<F: Scalar> std::ops::Sub for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn sub(self, o: &MultiPoly<F>) -> MultiPoly<F> {
        self.same_vars(o);
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<F: Scalar> std::ops::Mul for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn mul(self, o: &MultiPoly<F>) -> MultiPoly<F> {
        self.same_vars(o);
        let mut out = MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (ma, a) in &self.terms {
            for (mb, b) in &o.terms {
                let e: Vec<u32> = ma.0.iter().zip(&mb.0).map(|(x, y)| x + y).collect();
                out.add_term(Monomial(e), a.clone() * b.clone());
            }
        }
        out
    }
}

impl<F: Scalar> std::ops::Neg for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn neg(self) -> MultiPoly<F> {
        self.scale(&-F::one())
    }
}

impl<F: Scalar> fmt::Display for MultiPoly<F> {
    /// Terms from highest to lowest in graded-lex order, e.g. `x0*x2 + x1^2 - z`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let factors: Vec<String> = m
                .0
                .iter()
                .zip(&self.vars)
                .filter(|(e, _)| **e > 0)
                .map(|(e, v)| if *e == 1 { v.name.clone() } else { format!("{}^{}", v.name, e) })
                .collect();
            if factors.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{a}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

// ---- JSON ----

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: Vec<u32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    vars: Vec<Var>,
    terms: Vec<TermJson>,
}

impl<F: Scalar> Serialize for MultiPoly<F> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyJson {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermJson { exp: m.0.clone(), coeff: c.to_string() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de, F: Scalar> Deserialize<'de> for MultiPoly<F> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = PolyJson::deserialize(d)?;
        let mut p = MultiPoly::zero(raw.vars).map_err(D::Error::custom)?;
        for t in raw.terms {
            p.check_len(&t.exp).map_err(D::Error::custom)?;
            let c: F = t
                .coeff
                .parse()
                .map_err(|_| D::Error::custom(MultiPolyError::BadCoefficient(t.coeff.clone())))?;
            let m = Monomial(t.exp);
            if p.terms.contains_key(&m) {
                return Err(D::Error::custom(MultiPolyError::DuplicateTerm(m.0)));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }
}
