//! The wall-and-chamber ledger for the models `𝓕(a, b)` and the arithmetic
//! of divisor classes in the span of `λ`, `H_h`, `H_u`.
//!
//! Parameters: `c ∈ (0, 1)` for K-moduli of `(ℙ³, cS)`, `a, b > 0` for the
//! polarization `λ + ½(a·H_h + b·H_u)`, linked by `c = 1/(1 + 2a)`; VGIT
//! slopes `t` give thresholds `(1 + 2t)/(3 − 2t)`.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::data::{self, DataError};
use crate::rational::{int, rat, serde_q, Rational};

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum WallsError {
    #[error("{what} out of range: {value}")]
    OutOfRange { what: &'static str, value: String },
    #[error("t = 3/2 is the pole of (1 + 2t)/(3 − 2t)")]
    SlopePole,
    #[error("inconsistent restriction relation on {0}: {1}")]
    Inconsistent(String, String),
    #[error("cannot combine classes restricted to {0} and {1}")]
    IncompatibleLoci(String, String),
    #[error("no restriction relation for {0}")]
    MissingRelation(String),
    #[error("certificate identity failed: {0}")]
    Identity(String),
    #[error("ledger is inconsistent: {0}")]
    Ledger(String),
}

fn out_of_range(what: &'static str, v: &Rational) -> WallsError {
    WallsError::OutOfRange { what, value: v.to_string() }
}

// ---------------------------------------------------------------------------
// parameter conversions

pub fn c_from_a(a: &Rational) -> Result<Rational, WallsError> {
    if !a.is_positive() {
        return Err(out_of_range("a (must be > 0)", a));
    }
    Ok(Rational::one() / (int(1) + int(2) * a))
}

pub fn a_from_c(c: &Rational) -> Result<Rational, WallsError> {
    if !c.is_positive() || c >= &Rational::one() {
        return Err(out_of_range("c (must be in (0, 1))", c));
    }
    Ok((int(1) - c) / (int(2) * c))
}

/// `(1 + 2t)/(3 − 2t)` for `t ∈ [0, 3/2)`.
pub fn kst_from_slope(t: &Rational) -> Result<Rational, WallsError> {
    if t == &rat(3, 2) {
        return Err(WallsError::SlopePole);
    }
    if t.is_negative() || t > &rat(3, 2) {
        return Err(out_of_range("t (must be in [0, 3/2))", t));
    }
    Ok((int(1) + int(2) * t) / (int(3) - int(2) * t))
}

// ---------------------------------------------------------------------------
// divisor classes

/// `ℓ·λ + h·H_h + u·H_u`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorClass {
    #[serde(rename = "lambda", with = "serde_q")]
    pub l: Rational,
    #[serde(with = "serde_q")]
    pub h: Rational,
    #[serde(with = "serde_q")]
    pub u: Rational,
}

impl DivisorClass {
    pub fn new(l: Rational, h: Rational, u: Rational) -> Self {
        DivisorClass { l, h, u }
    }

    pub fn lambda() -> Self {
        Self::new(int(1), int(0), int(0))
    }

    pub fn h_h() -> Self {
        Self::new(int(0), int(1), int(0))
    }

    pub fn h_u() -> Self {
        Self::new(int(0), int(0), int(1))
    }

    pub fn zero() -> Self {
        Self::new(int(0), int(0), int(0))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(&self.l * c, &self.h * c, &self.u * c)
    }

    /// Whether `self = k·other` for some rational `k > 0`.
    pub fn positively_proportional(&self, other: &Self) -> bool {
        let pairs = [(&self.l, &other.l), (&self.h, &other.h), (&self.u, &other.u)];
        let Some(k) = pairs.iter().find(|(_, o)| !o.is_zero()).map(|(s, o)| *s / *o) else {
            return self == other;
        };
        k.is_positive() && *self == other.scale(&k)
    }
}

impl Add for &DivisorClass {
    type Output = DivisorClass;
    fn add(self, o: &DivisorClass) -> DivisorClass {
        DivisorClass::new(&self.l + &o.l, &self.h + &o.h, &self.u + &o.u)
    }
}

impl Sub for &DivisorClass {
    type Output = DivisorClass;
    fn sub(self, o: &DivisorClass) -> DivisorClass {
        DivisorClass::new(&self.l - &o.l, &self.h - &o.h, &self.u - &o.u)
    }
}

impl Mul<&DivisorClass> for &Rational {
    type Output = DivisorClass;
    fn mul(self, d: &DivisorClass) -> DivisorClass {
        d.scale(self)
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·λ + {}·H_h + {}·H_u", self.l, self.h, self.u)
    }
}

/// Where a restriction relation is valid. `H_h°` is the open stratum: the
/// relation there says nothing about the closure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Locus {
    #[serde(rename = "H_u")]
    Hu,
    #[serde(rename = "H_h°")]
    HhOpen,
}

impl fmt::Display for Locus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Locus::Hu => "H_u",
            Locus::HhOpen => "H_h°",
        })
    }
}

/// `(lambda_coeff·λ + divisor_coeff·H)|_H = 0` on the tagged locus `H`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RestrictionRelation {
    pub locus: Locus,
    #[serde(with = "serde_q")]
    pub lambda_coeff: Rational,
    #[serde(with = "serde_q")]
    pub divisor_coeff: Rational,
}

impl RestrictionRelation {
    /// `(λ + s·H)|_H = 0`.
    pub fn new(locus: Locus, s: Rational) -> Self {
        RestrictionRelation { locus, lambda_coeff: int(1), divisor_coeff: s }
    }

    /// The `s` in `λ|_H = −s·H|_H`.
    fn lambda_rewrite(&self) -> Result<Rational, WallsError> {
        if self.lambda_coeff.is_zero() {
            let why = if self.divisor_coeff.is_zero() { "the relation is vacuous" } else { "it would force H|_H = 0" };
            return Err(WallsError::Inconsistent(self.locus.to_string(), why.into()));
        }
        Ok(&self.divisor_coeff / &self.lambda_coeff)
    }
}

pub fn default_relations() -> Vec<RestrictionRelation> {
    vec![RestrictionRelation::new(Locus::Hu, rat(1, 2)), RestrictionRelation::new(Locus::HhOpen, rat(1, 2))]
}

/// `coeff · H|_H` for the tagged locus `H`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RestrictedClass {
    pub locus: Locus,
    #[serde(with = "serde_q")]
    pub coeff: Rational,
}

impl RestrictedClass {
    pub fn add(&self, o: &Self) -> Result<Self, WallsError> {
        if self.locus != o.locus {
            return Err(WallsError::IncompatibleLoci(self.locus.to_string(), o.locus.to_string()));
        }
        Ok(RestrictedClass { locus: self.locus, coeff: &self.coeff + &o.coeff })
    }

    /// A restricted class lives on its locus; restricting it again is only
    /// meaningful on the same locus, where it is the identity.
    pub fn restrict(&self, locus: Locus) -> Result<Self, WallsError> {
        if self.locus != locus {
            return Err(WallsError::IncompatibleLoci(self.locus.to_string(), locus.to_string()));
        }
        Ok(self.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }
}

/// Restriction to `H_u` or `H_h°`: `λ ↦ −s·H`, and the other boundary
/// divisor restricts to 0 because `H_h ∩ H_u = ∅`.
pub fn restrict(d: &DivisorClass, locus: Locus, relations: &[RestrictionRelation]) -> Result<RestrictedClass, WallsError> {
    let rel = relations.iter().find(|r| r.locus == locus).ok_or_else(|| WallsError::MissingRelation(locus.to_string()))?;
    let s = rel.lambda_rewrite()?;
    let own = match locus {
        Locus::Hu => &d.u,
        Locus::HhOpen => &d.h,
    };
    Ok(RestrictedClass { locus, coeff: own - &d.l * s })
}

/// `(1 − c_w)/c_w` for the wall `c_w` at which the divisor appears.
fn wall_multiplier(c_w: &Rational) -> Rational {
    (int(1) - c_w) / c_w
}

/// `b` with `(λ + m·b·H)|_H = 0`, where `m = (1 − c_w)/c_w`.
fn solve_one(locus: Locus, c_w: &Rational, relations: &[RestrictionRelation]) -> Result<Rational, WallsError> {
    let m = wall_multiplier(c_w);
    // restriction of λ + m·b·H is (m·b − s)·H|_H; solve m·b = s
    let base = restrict(&DivisorClass::lambda(), locus, relations)?;
    if m.is_zero() {
        return Err(WallsError::Inconsistent(locus.to_string(), "zero multiplier".into()));
    }
    Ok(-base.coeff / m)
}

/// `(b_h, b_u)`: the boundary coefficients that make `λ + (1−c)/c·Δ^K`
/// restrict to zero on `H_h°` at `c = 1/3` and on `H_u` at `c = 9/13`.
pub fn solve_boundary_coeffs_with(relations: &[RestrictionRelation]) -> Result<(Rational, Rational), WallsError> {
    let bh = solve_one(Locus::HhOpen, &rat(1, 3), relations)?;
    let bu = solve_one(Locus::Hu, &rat(9, 13), relations)?;
    // re-check by restriction
    for (locus, c_w, b) in [(Locus::HhOpen, rat(1, 3), &bh), (Locus::Hu, rat(9, 13), &bu)] {
        let m = wall_multiplier(&c_w) * b;
        let d = match locus {
            Locus::Hu => DivisorClass::new(int(1), int(0), m),
            Locus::HhOpen => DivisorClass::new(int(1), m, int(0)),
        };
        if !restrict(&d, locus, relations)?.is_zero() {
            return Err(WallsError::Inconsistent(locus.to_string(), "solution does not restrict to 0".into()));
        }
    }
    Ok((bh, bu))
}

pub fn solve_boundary_coeffs() -> (Rational, Rational) {
    solve_boundary_coeffs_with(&default_relations()).expect("default relations are consistent")
}

/// `Δ^K = b_h·H_h + b_u·H_u`.
pub fn delta_k() -> DivisorClass {
    let (bh, bu) = solve_boundary_coeffs();
    DivisorClass::new(int(0), bh, bu)
}

/// `c·λ + (1 − c)·Δ^K`, a positive multiple of the CM class at `c`;
/// `c = 0` and `c = 1` are the limits `Δ^K` and `λ`.
pub fn cm_class(c: &Rational) -> Result<DivisorClass, WallsError> {
    if c.is_negative() || c > &Rational::one() {
        return Err(out_of_range("c (must be in [0, 1])", c));
    }
    Ok(&DivisorClass::lambda().scale(c) + &delta_k().scale(&(int(1) - c)))
}

/// `(1−c)^{-3}·Λ_{c} = (1−c)·Λ_{0} + 4⁴·c·Λ_Hodge`: the coefficients of
/// the absolute CM class and the Hodge class.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CmHodgeRelation {
    #[serde(with = "serde_q")]
    pub absolute: Rational,
    #[serde(with = "serde_q")]
    pub hodge: Rational,
}

pub fn cm_hodge_relation(c: &Rational) -> Result<CmHodgeRelation, WallsError> {
    if c.is_negative() || c >= &Rational::one() {
        return Err(out_of_range("c (must be in [0, 1))", c));
    }
    Ok(CmHodgeRelation { absolute: int(1) - c, hodge: int(256) * c })
}

// ---------------------------------------------------------------------------
// ampleness certificates

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AmpleCertificate {
    pub case: u8,
    #[serde(with = "serde_q::pair")]
    pub coefficients: (Rational, Rational),
    pub summands: [DivisorClass; 2],
    /// `λ + ½(a·H_h + b·H_u)`.
    pub target: DivisorClass,
}

fn target(a: &Rational, b: &Rational) -> DivisorClass {
    DivisorClass::new(int(1), a / int(2), b / int(2))
}

/// Case 1 (`b ≤ 9a/2`) writes the target as a convex combination of
/// `λ + 2a·Δ^K` and `λ + (a/2)·H_h`; case 2 (`b ≥ 9a/2`) of
/// `λ + (4b/9)·Δ^K` and `λ + (b/2)·H_u`. The identity is checked exactly.
pub fn ample_certificate_case(a: &Rational, b: &Rational, case: u8) -> Result<AmpleCertificate, WallsError> {
    let (zero, one) = (Rational::zero(), Rational::one());
    for (what, v) in [("a (must be in (0, 1))", a), ("b (must be in (0, 1))", b)] {
        if v <= &zero || v >= &one {
            return Err(out_of_range(what, v));
        }
    }
    let dk = delta_k();
    let lam = DivisorClass::lambda();
    let (k, s1, s2) = match case {
        1 => (int(2) * b / (int(9) * a), &lam + &dk.scale(&(int(2) * a)), &lam + &DivisorClass::h_h().scale(&(a / int(2)))),
        2 => (int(9) * a / (int(2) * b), &lam + &dk.scale(&(int(4) * b / int(9))), &lam + &DivisorClass::h_u().scale(&(b / int(2)))),
        _ => return Err(WallsError::Identity(format!("no case {case}"))),
    };
    if k < zero || k > one {
        return Err(WallsError::Identity(format!("case {case} is not convex at a = {a}, b = {b} (weight {k})")));
    }
    let rest = &one - &k;
    let sum = &s1.scale(&k) + &s2.scale(&rest);
    let t = target(a, b);
    if sum != t {
        return Err(WallsError::Identity(format!("{sum} ≠ {t}")));
    }
    Ok(AmpleCertificate { case, coefficients: (k, rest), summands: [s1, s2], target: t })
}

pub fn ample_certificate(a: &Rational, b: &Rational) -> Result<AmpleCertificate, WallsError> {
    let case = if b <= &(int(9) * a / int(2)) { 1 } else { 2 };
    ample_certificate_case(a, b, case)
}

// ---------------------------------------------------------------------------
// the ledger

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SlopeEntry {
    pub i: u32,
    #[serde(with = "serde_q")]
    pub t: Rational,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WallLedger {
    pub version: u32,
    #[serde(with = "serde_q::vec")]
    pub c_walls: Vec<Rational>,
    #[serde(with = "serde_q::vec")]
    pub a_walls: Vec<Rational>,
    /// The c-wall with no a-wall counterpart (it only moves the H_u blow-up).
    #[serde(with = "serde_q")]
    pub unigonal_wall: Rational,
    #[serde(with = "serde_q")]
    pub b_wall: Rational,
    /// `a` at which the construction of `𝓕(a, b)` switches sides of the
    /// unigonal wall; not a wall of the `(a, b)` plane.
    #[serde(with = "serde_q")]
    pub construction_switch_a: Rational,
    pub vgit_slopes: Vec<SlopeEntry>,
    pub strata_chain: Vec<String>,
    pub z_chain: Vec<String>,
}

/// How the model changes across a wall.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CrossingType {
    WeightedBlowUp,
    Flip,
    DivisorialContraction,
    Isomorphism,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlipCenters {
    /// Locus on the small-`a` (large-`c`) side.
    pub flipping: String,
    pub flipped: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Crossing {
    pub wall: String,
    pub crossing: CrossingType,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flip_centers: Option<FlipCenters>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub contracted: Option<String>,
    /// 1-based index into the a-walls.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a_index: Option<u32>,
    /// 1-based index into the c-walls.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c_index: Option<u32>,
}

/// A K-moduli wall on the c-line.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CWall {
    pub index: u32,
    #[serde(with = "serde_q")]
    pub c: Rational,
    pub crossing: CrossingType,
    /// Exceptional locus on the `c + ε` side.
    pub exceptional_plus: String,
    /// Exceptional locus (or blown-up point) on the `c − ε` side.
    pub exceptional_minus: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Model {
    HatF,
    KModuli,
    KirwanBlowUpOfGit,
    BlowDownOfHu,
    Git,
    Wall,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Chamber,
    Wall,
}

/// Everything here is constant on an open chamber; wall points get their
/// own descriptor.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChamberDescriptor {
    pub kind: Kind,
    pub model: Model,
    /// `[lo, hi]`; `hi = None` is +∞.
    #[serde(with = "range_serde")]
    pub a_range: (Rational, Option<Rational>),
    #[serde(with = "range_serde")]
    pub b_range: (Rational, Option<Rational>),
    #[serde(with = "serde_q::pair")]
    pub c_range: (Rational, Rational),
    /// Which of `H_h`, `H_u` are divisors on the model.
    pub divisors: Vec<String>,
    /// For a chamber, the walls bounding it; for a wall point, the walls
    /// through it.
    pub crossings: Vec<Crossing>,
}

mod range_serde {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &(Rational, Option<Rational>), s: S) -> Result<S::Ok, S::Error> {
        (r.0.to_string(), r.1.as_ref().map(|x| x.to_string())).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<(Rational, Option<Rational>), D::Error> {
        let (lo, hi): (String, Option<String>) = Deserialize::deserialize(d)?;
        let p = |x: &str| crate::rational::parse_rational(x).map_err(serde::de::Error::custom);
        Ok((p(&lo)?, hi.as_deref().map(p).transpose()?))
    }
}

/// Which clause of the construction of `𝓕(a, b)` applies at a point.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Construction {
    pub case: u8,
    #[serde(with = "serde_q")]
    pub c: Rational,
    pub description: String,
}

impl WallLedger {
    pub fn embedded() -> Self {
        Self::from_json(data::embedded(data::WALLS).expect("bundled")).expect("bundled ledger parses")
    }

    pub fn from_json(text: &str) -> Result<Self, DataError> {
        data::parse(data::WALLS, text)
    }

    /// Internal consistency: ordered walls, the a/c bridge, the slope table
    /// and the two chains agree with the flip-center rules.
    pub fn validate(&self) -> Result<(), WallsError> {
        let bad = |m: String| Err(WallsError::Ledger(m));
        let increasing = |v: &[Rational]| v.windows(2).all(|w| w[0] < w[1]);
        if !increasing(&self.c_walls) || self.c_walls.iter().any(|c| !c.is_positive() || c >= &Rational::one()) {
            return bad("c-walls must increase strictly inside (0, 1)".into());
        }
        if !increasing(&self.a_walls) || self.a_walls.iter().any(|a| !a.is_positive()) {
            return bad("a-walls must be positive and strictly increasing".into());
        }
        if self.c_walls.len() != 9 || self.a_walls.len() != 8 {
            return bad("expected nine c-walls and eight a-walls".into());
        }
        let bridge = self.bridge()?;
        if !bridge.matches {
            return bad(format!("c(a-walls) = {:?} but c-walls minus the unigonal wall = {:?}", bridge.mapped, bridge.expected));
        }
        if c_from_a(&self.construction_switch_a)? != self.unigonal_wall {
            return bad("the construction switch must map to the unigonal wall".into());
        }
        for i in 1..=7 {
            let (from_a, from_c) = self.flip_centers_both(i)?;
            if from_a != from_c {
                return bad(format!("a-wall {i}: {from_a:?} vs {from_c:?}"));
            }
            if !self.z_chain.contains(&from_a.flipping) || !self.strata_chain.contains(&from_a.flipped) {
                return bad(format!("a-wall {i}: centers {from_a:?} not in the chains"));
            }
        }
        for s in &self.vgit_slopes {
            kst_from_slope(&s.t)?;
        }
        Ok(())
    }

    /// `c_from_a` on the reversed a-walls against the c-walls without the
    /// unigonal one.
    pub fn bridge(&self) -> Result<Bridge, WallsError> {
        let mapped: Vec<Rational> = self.a_walls.iter().rev().map(c_from_a).collect::<Result<_, _>>()?;
        let expected: Vec<Rational> = self.c_walls.iter().filter(|c| **c != self.unigonal_wall).cloned().collect();
        let unigonal_flagged = self.c_walls.contains(&self.unigonal_wall) && !mapped.contains(&self.unigonal_wall);
        Ok(Bridge { matches: mapped == expected, unigonal_flagged, mapped, expected })
    }

    /// 1-based index of `c` among the c-walls.
    pub fn c_index(&self, c: &Rational) -> Option<u32> {
        self.c_walls.iter().position(|x| x == c).map(|k| k as u32 + 1)
    }

    /// The K-moduli wall crossing at the k-th c-wall.
    pub fn c_wall(&self, k: u32) -> Result<CWall, WallsError> {
        let c = self
            .c_walls
            .get((k as usize).wrapping_sub(1))
            .ok_or_else(|| out_of_range("c-wall index", &int(k.into())))?
            .clone();
        let (crossing, plus, minus) = match k {
            1 => (CrossingType::WeightedBlowUp, "H_h".to_string(), "[2Q]".to_string()),
            5 => (CrossingType::WeightedBlowUp, "H_u".to_string(), "[T]".to_string()),
            6 => (CrossingType::Flip, "Z5".to_string(), "W4".to_string()),
            _ => (CrossingType::Flip, format!("Z{k}"), format!("W{}", k - 1)),
        };
        Ok(CWall { index: k, c, crossing, exceptional_plus: plus, exceptional_minus: minus })
    }

    /// Flip centers at the i-th a-wall (1 ≤ i ≤ 7) by the a-index rule and
    /// via the matching c-wall.
    pub fn flip_centers_both(&self, i: u32) -> Result<(FlipCenters, FlipCenters), WallsError> {
        if !(1..=7).contains(&i) {
            return Err(out_of_range("a-wall index for a flip", &int(i.into())));
        }
        let j = if i >= 4 { 9 - i } else { 10 - i };
        let from_a = FlipCenters { flipping: format!("Z{j}"), flipped: format!("W{}", j - 1) };
        let c = c_from_a(&self.a_walls[i as usize - 1])?;
        let k = self.c_index(&c).ok_or_else(|| WallsError::Ledger(format!("c({}) = {c} is not a c-wall", self.a_walls[i as usize - 1])))?;
        let w = self.c_wall(k)?;
        Ok((from_a, FlipCenters { flipping: w.exceptional_plus, flipped: w.exceptional_minus }))
    }

    fn a_crossing(&self, i: u32) -> Result<Crossing, WallsError> {
        let a = &self.a_walls[i as usize - 1];
        let c_index = self.c_index(&c_from_a(a)?);
        let wall = format!("a = {a}");
        if i == 8 {
            return Ok(Crossing {
                wall,
                crossing: CrossingType::DivisorialContraction,
                flip_centers: None,
                contracted: Some("H_h".into()),
                a_index: Some(i),
                c_index,
            });
        }
        Ok(Crossing {
            wall,
            crossing: CrossingType::Flip,
            flip_centers: Some(self.flip_centers_both(i)?.0),
            contracted: None,
            a_index: Some(i),
            c_index,
        })
    }

    fn b_crossing(&self) -> Crossing {
        Crossing {
            wall: format!("b = {}", self.b_wall),
            crossing: CrossingType::DivisorialContraction,
            flip_centers: None,
            contracted: Some("H_u".into()),
            a_index: None,
            c_index: None,
        }
    }

    /// The model `𝓕(a, b)` up to isomorphism, as a chamber or wall
    /// descriptor.
    pub fn chamber(&self, a: &Rational, b: &Rational) -> Result<ChamberDescriptor, WallsError> {
        if !a.is_positive() {
            return Err(out_of_range("a (must be > 0)", a));
        }
        if !b.is_positive() {
            return Err(out_of_range("b (must be > 0)", b));
        }
        let one = Rational::one();
        let a_wall = self.a_walls.iter().position(|x| x == a).map(|k| k as u32 + 1);
        let on_b = b == &self.b_wall;

        // a-interval: index of the first wall above a
        let above = self.a_walls.iter().position(|x| x > a).unwrap_or(self.a_walls.len());
        let a_range = match a_wall {
            Some(_) => (a.clone(), Some(a.clone())),
            None => (
                if above == 0 { Rational::zero() } else { self.a_walls[above - 1].clone() },
                self.a_walls.get(above).cloned(),
            ),
        };
        let b_range = if on_b {
            (b.clone(), Some(b.clone()))
        } else if b < &self.b_wall {
            (Rational::zero(), Some(self.b_wall.clone()))
        } else {
            (self.b_wall.clone(), None)
        };
        let c_of = |x: &Option<Rational>| x.as_ref().map_or(Ok(Rational::zero()), c_from_a);
        let c_range = (c_of(&a_range.1)?, if a_range.0.is_zero() { one.clone() } else { c_from_a(&a_range.0)? });

        let mut divisors = Vec::new();
        if a < &one {
            divisors.push("H_h".to_string());
        }
        if b < &self.b_wall {
            divisors.push("H_u".to_string());
        }

        let git_corner = a >= &one && b >= &self.b_wall;
        if a_wall.is_some() || on_b {
            let mut crossings = Vec::new();
            if let Some(i) = a_wall {
                crossings.push(self.a_crossing(i)?);
            }
            if on_b {
                crossings.push(self.b_crossing());
            }
            return Ok(ChamberDescriptor {
                kind: Kind::Wall,
                model: if git_corner { Model::Git } else { Model::Wall },
                a_range,
                b_range,
                c_range,
                divisors,
                crossings,
            });
        }

        let small_b = b < &self.b_wall;
        let model = if a < &self.a_walls[0] {
            if small_b {
                Model::HatF
            } else {
                Model::BlowDownOfHu
            }
        } else if a < &rat(1, 2) {
            Model::KModuli
        } else if a < &one || small_b {
            Model::KirwanBlowUpOfGit
        } else {
            Model::Git
        };
        let mut crossings = Vec::new();
        if above > 0 {
            crossings.push(self.a_crossing(above as u32)?);
        }
        if above < self.a_walls.len() {
            crossings.push(self.a_crossing(above as u32 + 1)?);
        }
        crossings.push(self.b_crossing());
        Ok(ChamberDescriptor { kind: Kind::Chamber, model, a_range, b_range, c_range, divisors, crossings })
    }

    /// Which clause of the construction applies at `(a, b)`; unlike
    /// [`chamber`](Self::chamber) this can change inside a chamber.
    pub fn construction(&self, a: &Rational, b: &Rational) -> Result<Construction, WallsError> {
        let c = c_from_a(a)?;
        if !b.is_positive() {
            return Err(out_of_range("b (must be > 0)", b));
        }
        let low_a = a < &self.construction_switch_a;
        let low_b = b < &self.b_wall;
        let (case, description) = match (low_a, low_b) {
            (true, true) => (1, format!("K-moduli space at c = {c}")),
            (false, true) => (2, format!("Kirwan weighted blow-up of the K-moduli space at c = {c} at [(P^3, T)], extracting H_u")),
            (true, false) => (3, format!("Kirwan weighted blow-down of the K-moduli space at c = {c}, contracting H_u to a point")),
            (false, false) => (4, format!("K-moduli space at c = {c}")),
        };
        Ok(Construction { case, c, description })
    }

    /// The slope table recomputed: `(i, t, kst)` for each VGIT slope.
    pub fn table2(&self) -> Result<Vec<(u32, Rational, Rational)>, WallsError> {
        self.vgit_slopes.iter().map(|s| Ok((s.i, s.t.clone(), kst_from_slope(&s.t)?))).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Bridge {
    pub matches: bool,
    pub unigonal_flagged: bool,
    #[serde(with = "serde_q::vec")]
    pub mapped: Vec<Rational>,
    #[serde(with = "serde_q::vec")]
    pub expected: Vec<Rational>,
}
