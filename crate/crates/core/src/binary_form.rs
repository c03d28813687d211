//! Binary forms `Σ cᵢ u^{d−i} vⁱ` of a fixed degree.
//!
//! Coefficients run `u^d, u^{d−1}v, …, v^d`. The zero form keeps its degree
//! (a zero section of 𝒪(d) is still a section of 𝒪(d)).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::poly::Poly;
use crate::rational::{serde_q, Rational};
use crate::roots;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum FormError {
    #[error("the linear form is zero")]
    ZeroLinear,
    #[error("expected a linear form, got degree {0}")]
    NotLinear(usize),
    #[error("order undefined for zero form")]
    ZeroForm,
    #[error("a point of P^1 needs coordinates not both zero")]
    BadPoint,
    #[error("a binary form needs at least one coefficient")]
    Empty,
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
}

#[derive(Clone, Debug, PartialEq)]
pub struct BinaryForm<F> {
    coeffs: Vec<F>,
}

impl<F: Scalar> BinaryForm<F> {
    pub fn new(coeffs: Vec<F>) -> Result<Self, FormError> {
        if coeffs.is_empty() {
            return Err(FormError::Empty);
        }
        Ok(BinaryForm { coeffs })
    }

    pub fn zero(degree: usize) -> Self {
        BinaryForm { coeffs: vec![F::zero(); degree + 1] }
    }

    /// `c · u^{d−k} v^k`.
    pub fn monomial(degree: usize, k: usize, c: F) -> Self {
        let mut f = Self::zero(degree);
        f.coeffs[k] = c;
        f
    }

    /// `a·u + b·v`.
    pub fn linear(a: F, b: F) -> Self {
        BinaryForm { coeffs: vec![a, b] }
    }

    /// The linear form vanishing at `[p0 : p1]`, namely `p1·u − p0·v`.
    pub fn vanishing_at(p: &(F, F)) -> Result<Self, FormError> {
        if p.0.is_zero() && p.1.is_zero() {
            return Err(FormError::BadPoint);
        }
        Ok(Self::linear(p.1.clone(), -p.0.clone()))
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn eval(&self, u: &F, v: &F) -> F {
        let d = self.degree();
        let mut acc = F::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc = acc + c.clone() * pow(u, d - i) * pow(v, i);
        }
        acc
    }

    pub fn scale(&self, c: &F) -> Self {
        BinaryForm { coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect() }
    }

    pub fn add(&self, o: &Self) -> Result<Self, FormError> {
        if self.degree() != o.degree() {
            return Err(FormError::DegreeMismatch(self.degree(), o.degree()));
        }
        Ok(BinaryForm {
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.clone() + b.clone()).collect(),
        })
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut c = vec![F::zero(); self.degree() + o.degree() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] = c[i + j].clone() + a.clone() * b.clone();
            }
        }
        BinaryForm { coeffs: c }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = BinaryForm { coeffs: vec![F::one()] };
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// `f(t, 1)` as a polynomial in `t = u/v`; `t^k` carries `c_{d−k}`.
    pub fn dehomogenize(&self) -> Poly<F> {
        Poly::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// Inverse of [`dehomogenize`](Self::dehomogenize) at a chosen degree
    /// (which must be at least the polynomial's degree).
    pub fn homogenize(p: &Poly<F>, degree: usize) -> Self {
        assert!(p.degree().unwrap_or(0) <= degree, "degree too small to homogenize");
        BinaryForm { coeffs: (0..=degree).map(|i| p.coeff(degree - i)).collect() }
    }

    /// Multiplicity of `v` as a factor, i.e. the order at `[1 : 0]`.
    pub fn ord_v(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Multiplicity of `u` as a factor, i.e. the order at `[0 : 1]`.
    pub fn ord_u(&self) -> Option<usize> {
        self.coeffs.iter().rev().position(|c| !c.is_zero())
    }

    /// Exact quotient by the linear form `l`, or `None` if `l ∤ self`.
    pub fn div_linear(&self, l: &Self) -> Result<Option<Self>, FormError> {
        if l.degree() != 1 {
            return Err(FormError::NotLinear(l.degree()));
        }
        let (a, b) = (&l.coeffs[0], &l.coeffs[1]);
        if a.is_zero() && b.is_zero() {
            return Err(FormError::ZeroLinear);
        }
        let d = self.degree();
        if self.is_zero() {
            return Ok(Some(Self::zero(d.saturating_sub(1))));
        }
        if d == 0 {
            return Ok(None);
        }
        let f = &self.coeffs;
        let mut g = vec![F::zero(); d];
        if !a.is_zero() {
            // f_i = a g_i + b g_{i-1}
            for i in 0..d {
                let prev = if i == 0 { F::zero() } else { b.clone() * g[i - 1].clone() };
                g[i] = (f[i].clone() - prev) / a.clone();
            }
            if f[d] != b.clone() * g[d - 1].clone() {
                return Ok(None);
            }
        } else {
            // f = b·v·g: f_0 = 0 and f_{i+1} = b g_i
            if !f[0].is_zero() {
                return Ok(None);
            }
            for i in 0..d {
                g[i] = f[i + 1].clone() / b.clone();
            }
        }
        Ok(Some(BinaryForm { coeffs: g }))
    }

    /// `l | self` by exact division; the zero form is divisible by anything.
    pub fn divides_linear(l: &Self, f: &Self) -> Result<bool, FormError> {
        Ok(f.div_linear(l)?.is_some())
    }

    /// Multiplicity of the point `p` as a root.
    pub fn ord_at_point(&self, p: &(F, F)) -> Result<usize, FormError> {
        if self.is_zero() {
            return Err(FormError::ZeroForm);
        }
        let l = Self::vanishing_at(p)?;
        let mut q = self.clone();
        let mut m = 0;
        while let Some(next) = q.div_linear(&l)? {
            q = next;
            m += 1;
        }
        Ok(m)
    }

    /// Substitutes `u ↦ a·u + b·v`, `v ↦ c·u + d·v`.
    pub fn compose_linear(&self, m: [[F; 2]; 2]) -> Self {
        let d = self.degree();
        let lu = Self::linear(m[0][0].clone(), m[0][1].clone());
        let lv = Self::linear(m[1][0].clone(), m[1][1].clone());
        let mut out = Self::zero(d);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = lu.pow((d - i) as u32).mul(&lv.pow(i as u32)).scale(c);
            out = out.add(&term).expect("same degree");
        }
        out
    }

    /// `(u, v) ↦ (v, u)`.
    pub fn swap(&self) -> Self {
        BinaryForm { coeffs: self.coeffs.iter().rev().cloned().collect() }
    }

    /// Greatest common divisor as a form, normalised so its first nonzero
    /// coefficient is 1. `gcd(0, g) = g` (normalised); `gcd(0, 0) = 0`.
    pub fn gcd(&self, o: &Self) -> Self {
        match (self.is_zero(), o.is_zero()) {
            (true, true) => return Self::zero(0),
            (true, false) => return o.normalized(),
            (false, true) => return self.normalized(),
            _ => {}
        }
        let k = self.ord_v().unwrap().min(o.ord_v().unwrap());
        let g = self.dehomogenize().gcd(&o.dehomogenize());
        let e = g.degree().unwrap_or(0);
        Self::homogenize(&g, e).mul(&Self::monomial(k, k, F::one())).normalized()
    }

    pub fn normalized(&self) -> Self {
        match self.coeffs.iter().find(|c| !c.is_zero()) {
            Some(c) => self.scale(&(F::one() / c.clone())),
            None => self.clone(),
        }
    }

    /// `∂f/∂t` of the dehomogenization, re-homogenized one degree lower:
    /// roots of multiplicity m (away from `[1:0]`) drop to multiplicity m−1.
    pub fn affine_derivative(&self) -> Self {
        let p = self.dehomogenize().derivative();
        Self::homogenize(&p, self.degree().saturating_sub(1))
    }
}

fn pow<F: Scalar>(x: &F, n: usize) -> F {
    let mut acc = F::one();
    for _ in 0..n {
        acc = acc * x.clone();
    }
    acc
}

// ---- ℚ-specific helpers ----

pub type QBinaryForm = BinaryForm<Rational>;

/// A point of ℙ¹ with coprime integer coordinates, normalised so the first
/// nonzero coordinate is positive.
pub fn normalize_point(p0: BigInt, p1: BigInt) -> Option<(BigInt, BigInt)> {
    if p0.is_zero() && p1.is_zero() {
        return None;
    }
    let g = p0.gcd(&p1);
    let (mut a, mut b) = (p0 / &g, p1 / &g);
    if a < BigInt::zero() || (a.is_zero() && b < BigInt::zero()) {
        a = -a;
        b = -b;
    }
    Some((a, b))
}

impl QBinaryForm {
    /// All ℚ-rational roots as coprime points `[p0 : p1]` with multiplicity.
    pub fn rational_points(&self) -> Result<Vec<((BigInt, BigInt), usize)>, FormError> {
        if self.is_zero() {
            return Err(FormError::ZeroForm);
        }
        let mut out = Vec::new();
        let kv = self.ord_v().unwrap();
        if kv > 0 {
            out.push(((BigInt::one(), BigInt::zero()), kv));
        }
        let p = self.dehomogenize();
        for r in roots::rational_roots(&p) {
            let m = roots::root_multiplicity(&p, &r);
            let pt = normalize_point(r.numer().clone(), r.denom().clone()).unwrap();
            out.push((pt, m));
        }
        Ok(out)
    }

    pub fn point(p: &(BigInt, BigInt)) -> (Rational, Rational) {
        (Rational::from_integer(p.0.clone()), Rational::from_integer(p.1.clone()))
    }
}

impl<F: Scalar> fmt::Display for BinaryForm<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mut parts = Vec::new();
            match d - i {
                0 => {}
                1 => parts.push("u".to_string()),
                e => parts.push(format!("u^{e}")),
            }
            match i {
                0 => {}
                1 => parts.push("v".to_string()),
                e => parts.push(format!("v^{e}")),
            }
            if parts.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", parts.join("*"))?;
            } else {
                write!(f, "{a}*{}", parts.join("*"))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Serialize for QBinaryForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serde_q::vec::serialize(&self.coeffs, s)
    }
}

impl<'de> Deserialize<'de> for QBinaryForm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let v = serde_q::vec::deserialize(d)?;
        BinaryForm::new(v).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn bf(v: &[i64]) -> QBinaryForm {
        BinaryForm::new(v.iter().map(|&c| int(c)).collect()).unwrap()
    }

    fn u() -> QBinaryForm {
        bf(&[1, 0])
    }
    fn v() -> QBinaryForm {
        bf(&[0, 1])
    }

    #[test]
    fn divisibility_examples() {
        let x1_plus_x2 = bf(&[1, 1]);
        let f = v().mul(&x1_plus_x2);
        assert!(BinaryForm::divides_linear(&v(), &f).unwrap());
        assert!(!BinaryForm::divides_linear(&v(), &u().pow(2)).unwrap());
        assert!(BinaryForm::divides_linear(&v(), &QBinaryForm::zero(3)).unwrap());
        assert_eq!(
            BinaryForm::divides_linear(&QBinaryForm::zero(1), &f),
            Err(FormError::ZeroLinear)
        );
    }

    #[test]
    fn orders() {
        let f = u().pow(3).mul(&v().pow(5));
        assert_eq!(f.ord_at_point(&(int(0), int(1))).unwrap(), 3);
        assert_eq!(f.ord_at_point(&(int(1), int(0))).unwrap(), 5);
        let g = bf(&[1, -1]).pow(2);
        assert_eq!(g.ord_at_point(&(int(1), int(1))).unwrap(), 2);
        assert_eq!(g.ord_at_point(&(int(2), int(1))).unwrap(), 0);
        assert_eq!(QBinaryForm::zero(4).ord_at_point(&(int(1), int(1))), Err(FormError::ZeroForm));
        assert_eq!(f.ord_u(), Some(3));
        assert_eq!(f.ord_v(), Some(5));
    }

    #[test]
    fn gcd_tracks_point_at_infinity() {
        let a = u().pow(2).mul(&v().pow(3)).mul(&bf(&[1, 2]));
        let b = v().pow(2).mul(&bf(&[1, 2]).pow(2));
        let g = a.gcd(&b);
        assert_eq!(g, v().pow(2).mul(&bf(&[1, 2])));
    }

    #[test]
    fn rational_points_of_split_form() {
        let f = bf(&[2, -1]).pow(2).mul(&v()).mul(&u().pow(3));
        let mut pts = f.rational_points().unwrap();
        pts.sort();
        let expect = vec![
            ((BigInt::from(0), BigInt::from(1)), 3),
            ((BigInt::from(1), BigInt::from(0)), 1),
            ((BigInt::from(1), BigInt::from(2)), 2),
        ];
        assert_eq!(pts, expect);
    }

    #[test]
    fn compose_and_swap() {
        let f = bf(&[1, 2, 3]);
        assert_eq!(f.swap(), bf(&[3, 2, 1]));
        let id = [[int(1), int(0)], [int(0), int(1)]];
        assert_eq!(f.compose_linear(id), f);
        // u ↦ u + v: (u+v)^2 + 2(u+v)v + 3v^2 = u^2 + 4uv + 6v^2
        let sh = [[int(1), int(1)], [int(0), int(1)]];
        assert_eq!(f.compose_linear(sh), bf(&[1, 4, 6]));
        assert_eq!(f.eval(&rat(1, 2), &int(1)), rat(17, 4));
    }

    #[test]
    fn display() {
        assert_eq!(bf(&[1, 0, -3]).to_string(), "u^2 - 3*v^2");
        assert_eq!(QBinaryForm::zero(2).to_string(), "0");
    }
}
