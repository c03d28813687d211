use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{IntersectionRing3, KStabError};
use crate::piecewise::PiecewisePoly;
use crate::poly::Poly;
use crate::rational::{int, serde_q, Rational};
use crate::roots::{self, IsolatingInterval, QPoly};

/// Optional cross-check: one piece of `vol` must equal the cube of a class
/// in an intersection ring (the nef segment).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NefCheck {
    pub ring: IntersectionRing3,
    pub class: BTreeMap<String, QPoly>,
    pub piece: usize,
}

/// A divisorial valuation over a pair `(X, cD)`.
///
/// `vol(t) = vol(L − tE)` for a fixed polarization `L`, and
/// `−K_X − cD ∼ (s₀ + s₁c)·L`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ValuationProfile {
    pub name: String,
    /// `(A₀, A₁)` with `A(c) = A₀ + A₁c`.
    #[serde(with = "serde_q::pair")]
    pub a_affine: (Rational, Rational),
    pub vol: PiecewisePoly<Rational>,
    #[serde(with = "serde_q::pair")]
    pub scale_affine: (Rational, Rational),
    #[serde(with = "serde_q")]
    pub t_end: Rational,
    /// Half-open range `[lo, hi)` of coefficients `c` the profile is meant for.
    #[serde(with = "serde_q::pair")]
    pub c_range: (Rational, Rational),
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nef_check: Option<NefCheck>,
}

/// Outcome of looking for the first zero of β in `(0, 1)`.
#[derive(Clone, Debug, PartialEq)]
pub enum Threshold {
    Rational(Rational),
    /// No rational root comes first; the smallest root is the unique root of
    /// `interval.poly` in the interval.
    Irrational(IsolatingInterval),
    NoWall,
    /// β vanishes identically.
    Degenerate,
}

impl Threshold {
    pub fn rational(&self) -> Option<&Rational> {
        match self {
            Threshold::Rational(r) => Some(r),
            _ => None,
        }
    }
}

fn affine(p: &(Rational, Rational)) -> QPoly {
    Poly::linear(p.0.clone(), p.1.clone())
}

impl ValuationProfile {
    pub fn validate(&self) -> Result<(), KStabError> {
        let bad = |reason: String| KStabError::InvalidProfile { name: self.name.clone(), reason };
        if !self.vol.start().is_zero() {
            return Err(bad(format!("volume must start at t = 0, starts at {}", self.vol.start())));
        }
        if &self.t_end != self.vol.end() {
            return Err(bad(format!("T_end {} differs from the volume domain end {}", self.t_end, self.vol.end())));
        }
        if !self.vol.eval(&self.t_end).is_some_and(|v| v.is_zero()) {
            return Err(bad("vol(T_end) must vanish".into()));
        }
        if !self.vol.eval(&Rational::zero()).is_some_and(|v| v > Rational::zero()) {
            return Err(bad("vol(0) must be positive".into()));
        }
        if !self.vol.is_non_increasing_sampled() {
            return Err(bad("volume increases between sample points".into()));
        }
        let (lo, hi) = &self.c_range;
        if lo >= hi {
            return Err(bad(format!("empty c-range [{lo}, {hi})")));
        }
        // A is affine, so positivity on [lo, hi) is decided at the endpoints.
        let a = affine(&self.a_affine);
        if a.eval(lo) <= Rational::zero() || a.eval(hi) < Rational::zero() {
            return Err(bad(format!("A(c) = {} is not positive on [{lo}, {hi})", a)));
        }
        if let Some(nc) = &self.nef_check {
            let piece = self
                .vol
                .pieces()
                .get(nc.piece)
                .ok_or_else(|| bad(format!("nef check refers to missing piece {}", nc.piece)))?;
            let cube = nc.ring.expand_cube(&nc.class)?;
            if &cube != piece {
                return Err(bad(format!("nef piece {piece} disagrees with the class cube {cube}")));
            }
        }
        Ok(())
    }

    /// `A(c)` as a polynomial in `c`.
    pub fn a_poly(&self) -> QPoly {
        affine(&self.a_affine)
    }

    /// `S(c) = (s₀ + s₁c) · ∫vol / vol(0)`.
    pub fn s_invariant(&self) -> Result<QPoly, KStabError> {
        let v0 = self.vol.eval(&Rational::zero()).unwrap_or_else(Rational::zero);
        if v0.is_zero() {
            return Err(KStabError::ZeroVolume);
        }
        Ok(affine(&self.scale_affine).scale(&(self.vol.integrate() / v0)))
    }

    /// `β(c) = A(c) − S(c)` as a polynomial in `c`.
    pub fn beta_poly(&self) -> Result<QPoly, KStabError> {
        Ok(&self.a_poly() - &self.s_invariant()?)
    }

    pub fn beta(&self, c: &Rational) -> Result<Rational, KStabError> {
        Ok(self.beta_poly()?.eval(c))
    }

    /// Smallest zero of β in the open interval `(0, 1)`.
    pub fn kst_threshold(&self) -> Result<Threshold, KStabError> {
        Ok(first_root_in_unit_interval(&self.beta_poly()?))
    }
}

pub(crate) fn first_root_in_unit_interval(b: &QPoly) -> Threshold {
    if b.is_zero() {
        return Threshold::Degenerate;
    }
    let (zero, one) = (Rational::zero(), Rational::one());
    let rational = roots::rational_roots(b).into_iter().find(|r| r > &zero && r < &one);
    let irr = roots::isolate_irrational_roots(&roots::deflate_rational_roots(b), &zero, &one)
        .into_iter()
        .next();
    match (rational, irr) {
        (Some(r), Some(iv)) if iv.root_below(&r) => Threshold::Irrational(iv),
        (Some(r), _) => Threshold::Rational(r),
        (None, Some(iv)) => Threshold::Irrational(iv),
        (None, None) => Threshold::NoWall,
    }
}

/// Closed form `S_{(X, N/(N+1)·D)}(D) = 1/((n+1)(N+1))` for `D ∼ −K_X` on an
/// `n`-dimensional `X`.
pub fn almost_cy_s(n: u32, big_n: u32) -> Rational {
    Rational::one() / int((n as i64 + 1) * (big_n as i64 + 1))
}

/// The same situation as a profile: `vol(−K − tD) = (1 − t)ⁿ` on `[0, 1]`,
/// `−K − cD ∼ (1 − c)(−K)`, `A_{(X,cD)}(D) = 1 − c`. Evaluating its
/// S-invariant at `c = N/(N+1)` reproduces [`almost_cy_s`].
pub fn almost_cy_profile(n: u32) -> ValuationProfile {
    let vol = Poly::linear(int(1), int(-1)).pow(n);
    ValuationProfile {
        name: format!("almost_cy_n{n}"),
        a_affine: (int(1), int(-1)),
        vol: PiecewisePoly::single(int(0), int(1), vol).expect("valid piece"),
        scale_affine: (int(1), int(-1)),
        t_end: int(1),
        c_range: (int(0), int(1)),
        nef_check: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn ord_q() -> ValuationProfile {
        ValuationProfile {
            name: "ord_Q".into(),
            a_affine: (int(1), int(-2)),
            vol: PiecewisePoly::single(int(0), rat(1, 2), Poly::linear(int(1), int(-2)).pow(3)).unwrap(),
            scale_affine: (int(4), int(-4)),
            t_end: rat(1, 2),
            c_range: (int(0), rat(1, 2)),
            nef_check: None,
        }
    }

    #[test]
    fn ord_q_values() {
        let p = ord_q();
        p.validate().unwrap();
        assert_eq!(p.s_invariant().unwrap(), Poly::linear(rat(1, 2), rat(-1, 2)));
        assert_eq!(p.kst_threshold().unwrap(), Threshold::Rational(rat(1, 3)));
        assert_eq!(p.beta(&int(0)).unwrap(), rat(1, 2));
    }

    #[test]
    fn degenerate_and_no_wall() {
        let mut p = ord_q();
        p.a_affine = (rat(1, 2), rat(-1, 2));
        assert_eq!(p.kst_threshold().unwrap(), Threshold::Degenerate);
        p.a_affine = (int(3), int(0));
        assert_eq!(p.kst_threshold().unwrap(), Threshold::NoWall);
    }

    #[test]
    fn irrational_first_root() {
        // 2c² − 1 has its only root in (0,1) at 1/√2; 4/5 is a later rational root.
        let b = &Poly::new(vec![int(-1), int(0), int(2)]) * &Poly::linear(rat(-4, 5), int(1));
        match first_root_in_unit_interval(&b) {
            Threshold::Irrational(iv) => assert!(iv.root_below(&rat(4, 5))),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn almost_cy() {
        assert_eq!(almost_cy_s(3, 4), rat(1, 20));
        let p = almost_cy_profile(3);
        p.validate().unwrap();
        assert_eq!(p.s_invariant().unwrap().eval(&rat(4, 5)), rat(1, 20));
    }

    #[test]
    fn validation_catches_bad_profiles() {
        let mut p = ord_q();
        p.t_end = int(1);
        assert!(p.validate().is_err());
        let mut p = ord_q();
        p.c_range = (int(0), int(1));
        assert!(p.validate().is_err());
        let mut p = ord_q();
        p.vol = PiecewisePoly::single(int(0), rat(1, 2), Poly::linear(int(0), int(2))).unwrap();
        assert!(p.validate().is_err());
    }
}
