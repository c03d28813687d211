use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::KStabError;
use crate::rational::{int, serde_q, Rational};

/// α-invariant of `(ℙ¹, Σ cᵢ pᵢ)` plus bookkeeping about the convention.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlphaReport {
    /// `(1 − max cᵢ) / (2 − Σ cᵢ)`.
    #[serde(with = "serde_q")]
    pub value: Rational,
    pub convention: String,
    /// `(1 − max cᵢ)·(2 − Σ cᵢ)`, the product reading; never used as the answer.
    #[serde(with = "serde_q")]
    pub printed_product: Rational,
    pub note: String,
}

/// On ℙ¹ every divisor is a sum of points, so α is the minimum over points
/// of `A(p) / deg(−K − Δ) = (1 − c_p) / (2 − Σ cᵢ)`; points outside the
/// boundary have `c_p = 0`, which is why the empty list gives 1/2.
pub fn alpha_p1(coeffs: &[Rational]) -> Result<AlphaReport, KStabError> {
    let (zero, one) = (Rational::zero(), Rational::one());
    if let Some(c) = coeffs.iter().find(|c| *c < &zero || *c >= &one) {
        return Err(KStabError::Precondition(format!("boundary coefficient {c} is outside [0, 1)")));
    }
    let sum = coeffs.iter().fold(Rational::zero(), |a, c| a + c);
    let deg = int(2) - &sum;
    if deg <= zero {
        return Err(KStabError::NotLogFano(sum.to_string()));
    }
    let max = coeffs.iter().fold(Rational::zero(), |a, c| if c > &a { c.clone() } else { a });
    let num = one - max;
    Ok(AlphaReport {
        value: &num / &deg,
        convention: "quotient".into(),
        printed_product: &num * &deg,
        note: "α = (1 − max c)/(2 − Σ c); the product (1 − max c)(2 − Σ c) is a \
               different number and is reported only for comparison"
            .into(),
    })
}
