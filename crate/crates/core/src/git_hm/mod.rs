//! One-parameter-subgroup limits in ℙ(1⁴, 2) and the Shah strata.
//!
//! Limit convention: a diagonal 1-PS with weights `w` sends `V(f)` to
//! `V(in_w f)` as `t → 0`, where `in_w f` keeps the terms of MAXIMAL weight
//! `Σ wᵢeᵢ` (substitute `xᵢ ↦ t^{−wᵢ}xᵢ`, clear denominators, set `t = 0`).
//! With weight `(0,0,0,0,−1)` this sends `V(z − q)` to `V(q)`, the one
//! explicit degeneration we have to match.

mod shah;
mod subgroup;
mod table;

pub use shah::{shah_stratify, shah_stratify_with, Branch, HighBranch, LowBranch, ShahInput, StratumLabel};
pub use subgroup::{default_alpha, AlphaAffine, OneParamSubgroup};
pub use table::{Table1, Table1Row};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::multipoly::{MultiPoly, MultiPolyError, Var};
use crate::rational::{serde_q, Rational};

pub type QMultiPoly = MultiPoly<Rational>;

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum GitError {
    #[error("initial part of the zero polynomial")]
    ZeroPolynomial,
    #[error("1-PS has {got} weights but the polynomial has {expected} variables")]
    WeightLength { got: usize, expected: usize },
    #[error("cannot parse weight {0:?} (expected e.g. \"3\", \"-1/2\", \"2alpha-1\")")]
    BadWeight(String),
    #[error("alpha must be positive, got {0}")]
    BadAlpha(String),
    #[error("degenerate limit: {0}")]
    Degenerate(String),
    #[error("outside classified strata: {0}")]
    Outside(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("no threshold-table row for stratum {0}")]
    MissingRow(u32),
    #[error(transparent)]
    Poly(#[from] MultiPolyError),
}

/// Coordinates `x₀, x₁, x₂, x₃` of weight 1 and `z` of weight 2.
pub fn p11112_vars() -> Vec<Var> {
    ["x0", "x1", "x2", "x3"]
        .iter()
        .map(|n| Var::new(*n, 1))
        .chain([Var::new("z", 2)])
        .collect()
}

fn term_weight(exp: &[u32], w: &[Rational]) -> Rational {
    exp.iter()
        .zip(w)
        .filter(|(e, _)| **e > 0)
        .fold(Rational::zero(), |acc, (e, wi)| acc + wi * Rational::from_integer((*e).into()))
}

/// Terms of `f` of maximal weight, and that weight.
pub fn initial_part(f: &QMultiPoly, w: &[Rational]) -> Result<(QMultiPoly, Rational), GitError> {
    if w.len() != f.vars().len() {
        return Err(GitError::WeightLength { got: w.len(), expected: f.vars().len() });
    }
    let max = f
        .terms()
        .map(|(e, _)| term_weight(e, w))
        .max()
        .ok_or(GitError::ZeroPolynomial)?;
    Ok((f.filter_terms(|e, _| term_weight(e, w) == max), max))
}

/// Limit of the pair `(V(z − q), V(z − q, z² + g))` under a diagonal 1-PS.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LimitPair {
    /// Equation of the limit threefold. When `z` has weight strictly below
    /// `in(q)` this is `in(q)` itself and does not involve `z`.
    pub q_inf: QMultiPoly,
    #[serde(with = "serde_q")]
    pub q_weight: Rational,
    pub z_free: bool,
    pub g_inf: QMultiPoly,
    #[serde(with = "serde_q::opt")]
    pub g_weight: Option<Rational>,
    /// `2·w_z == weight(g∞)`; `None` when `g = 0`.
    pub z2_matched: Option<bool>,
    /// `in(z² + g)`, the boundary equation in the limit.
    pub boundary_inf: QMultiPoly,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// `q` and `g` live over [`p11112_vars`] and do not involve `z`.
pub fn limit_pair(q: &QMultiPoly, g: &QMultiPoly, w: &[Rational]) -> Result<LimitPair, GitError> {
    let vars = p11112_vars();
    if q.vars() != vars.as_slice() || g.vars() != vars.as_slice() {
        return Err(GitError::Malformed("q and g must be written in x0, x1, x2, x3, z".into()));
    }
    if w.len() != vars.len() {
        return Err(GitError::WeightLength { got: w.len(), expected: vars.len() });
    }
    if q.is_zero() {
        return Err(GitError::Degenerate("q = 0 does not define a threefold".into()));
    }
    if q.terms().chain(g.terms()).any(|(e, _)| e[4] > 0) {
        return Err(GitError::Malformed("q and g must not involve z".into()));
    }
    let z = MultiPoly::var(&vars, 4);
    let (in_q, wq) = initial_part(q, w)?;
    let wz = w[4].clone();
    let (q_inf, q_weight, z_free) = if wz < wq {
        (in_q, wq, true)
    } else {
        let (p, wt) = initial_part(&(&z - q), w)?;
        (p, wt, false)
    };
    let boundary = &z.pow(2) + g;
    let (boundary_inf, _) = initial_part(&boundary, w)?;
    let (g_inf, g_weight, z2_matched, note) = if g.is_zero() {
        (g.clone(), None, None, Some("g = 0: the boundary is the double section z^2 = 0".to_string()))
    } else {
        let (gi, wg) = initial_part(g, w)?;
        let m = &wz + &wz == wg;
        (gi, Some(wg), Some(m), None)
    };
    Ok(LimitPair { q_inf, q_weight, z_free, g_inf, g_weight, z2_matched, boundary_inf, note })
}
