//! Shah's normal form `q² + g` for the non-slc GIT-polystable quartics and
//! the divisibility conditions that pick out the strata `W_i°`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{p11112_vars, GitError, OneParamSubgroup, QMultiPoly, Table1};
use crate::binary_form::{BinaryForm, QBinaryForm};
use crate::multipoly::MultiPoly;
use crate::rational::{serde_q, Rational};

/// `g = x₃³(x₀ + β₁) + x₂(x₃²f₁ + x₂x₃g₁ + x₂²h₁)`; used for `i ≥ 3`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HighBranch {
    /// Coefficients of `x₁, x₂, x₃`.
    #[serde(with = "serde_q::vec")]
    pub beta1: Vec<Rational>,
    /// `f₁, g₁, h₁` as coefficients of `(x₁, x₂)`.
    #[serde(with = "serde_q::pair")]
    pub f1: (Rational, Rational),
    #[serde(with = "serde_q::pair")]
    pub g1: (Rational, Rational),
    #[serde(with = "serde_q::pair")]
    pub h1: (Rational, Rational),
}

/// `g = x₃³·l₁(x₁, x₃)`; used for `i ≤ 2`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LowBranch {
    /// Coefficients of `(x₁, x₃)`.
    #[serde(with = "serde_q::pair")]
    pub l1: (Rational, Rational),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    High(HighBranch),
    Low(LowBranch),
}

/// `q = x₀x₂ + x₁² + a·x₃²` together with the data of `g`. Any `a` is
/// accepted; only the `W₀` condition looks at it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ShahInput {
    #[serde(with = "serde_q")]
    pub a: Rational,
    pub branch: Branch,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StratumLabel {
    pub i: u32,
    /// Which of the eight conditions fired (1-based, in the classical order).
    pub condition: u32,
    #[serde(with = "serde_q")]
    pub kst: Rational,
    pub ps_weights: OneParamSubgroup,
    #[serde(with = "serde_q::vec")]
    pub ps_weights_at_alpha: Vec<Rational>,
    #[serde(with = "serde_q")]
    pub alpha: Rational,
    pub singularity_label: String,
}

fn lin(p: &(Rational, Rational)) -> QBinaryForm {
    BinaryForm::linear(p.0.clone(), p.1.clone())
}

/// The second variable of a pair, `x₂` for `(x₁, x₂)` or `x₃` for `(x₁, x₃)`.
fn second() -> QBinaryForm {
    BinaryForm::linear(Rational::zero(), Rational::one())
}

fn divides(f: &QBinaryForm) -> bool {
    BinaryForm::divides_linear(&second(), f).expect("x2 is a nonzero linear form")
}

impl ShahInput {
    pub fn validate(&self) -> Result<(), GitError> {
        if let Branch::High(h) = &self.branch {
            if h.beta1.len() != 3 {
                return Err(GitError::Malformed(format!(
                    "beta1 is linear in x1, x2, x3 and needs 3 coefficients, got {}",
                    h.beta1.len()
                )));
            }
        }
        Ok(())
    }

    /// Conditions (1)–(8), each evaluated on its own, paired with the
    /// stratum index they select. A well-formed input satisfies at most one.
    pub fn matching_conditions(&self) -> Vec<(u32, u32)> {
        let mut hits = Vec::new();
        match &self.branch {
            Branch::High(h) => {
                let (f1, g1, h1) = (lin(&h.f1), lin(&h.g1), lin(&h.h1));
                let (x2_h, x2_g, x2_f) = (divides(&h1), divides(&g1), divides(&f1));
                if !x2_h {
                    hits.push((1, 8));
                }
                if x2_h && !x2_g {
                    hits.push((2, 7));
                }
                if x2_h && !h1.is_zero() && x2_g {
                    hits.push((3, 6));
                }
                // Read as: h₁ = 0, x₂ | g₁, and (g₁ ≠ 0 or x₂ ∤ f₁). Without the
                // x₂ | g₁ the condition would overlap with (2).
                if h1.is_zero() && x2_g && (!g1.is_zero() || !x2_f) {
                    hits.push((4, 4));
                }
                if h1.is_zero() && g1.is_zero() && x2_f && !f1.is_zero() {
                    hits.push((5, 3));
                }
            }
            Branch::Low(l) => {
                let l1 = lin(&l.l1);
                let x3_l = divides(&l1);
                if !x3_l {
                    hits.push((6, 2));
                }
                if x3_l && !l1.is_zero() {
                    hits.push((7, 1));
                }
                if l1.is_zero() && !self.a.is_zero() {
                    hits.push((8, 0));
                }
            }
        }
        hits
    }

    pub fn q(&self) -> QMultiPoly {
        let x = |i| -> QMultiPoly { MultiPoly::var(&p11112_vars(), i) };
        &(&(&x(0) * &x(2)) + &(&x(1) * &x(1))) + &(&x(3) * &x(3)).scale(&self.a)
    }

    /// The quartic `g` of the normal form (free of `z`).
    pub fn g(&self) -> QMultiPoly {
        let x = |i| -> QMultiPoly { MultiPoly::var(&p11112_vars(), i) };
        let zero: QMultiPoly = MultiPoly::zero(p11112_vars()).expect("valid variables");
        let linear = |cs: &[(usize, &Rational)]| -> QMultiPoly {
            cs.iter().fold(zero.clone(), |acc, (i, c)| &acc + &x(*i).scale(c))
        };
        match &self.branch {
            Branch::High(h) => {
                let b = linear(&[(1, &h.beta1[0]), (2, &h.beta1[1]), (3, &h.beta1[2])]);
                let f1 = linear(&[(1, &h.f1.0), (2, &h.f1.1)]);
                let g1 = linear(&[(1, &h.g1.0), (2, &h.g1.1)]);
                let h1 = linear(&[(1, &h.h1.0), (2, &h.h1.1)]);
                let x3 = x(3);
                let x2 = x(2);
                let inner = &(&(&x3.pow(2) * &f1) + &(&(&x2 * &x3) * &g1)) + &(&x2.pow(2) * &h1);
                &(&x3.pow(3) * &(&x(0) + &b)) + &(&x2 * &inner)
            }
            Branch::Low(l) => &x(3).pow(3) * &linear(&[(1, &l.l1.0), (3, &l.l1.1)]),
        }
    }

    /// The quartic surface `q² + g`.
    pub fn surface(&self) -> QMultiPoly {
        &self.q().pow(2) + &self.g()
    }
}

pub fn shah_stratify(input: &ShahInput) -> Result<StratumLabel, GitError> {
    shah_stratify_with(&Table1::embedded(), input)
}

pub fn shah_stratify_with(table: &Table1, input: &ShahInput) -> Result<StratumLabel, GitError> {
    input.validate()?;
    let hits = input.matching_conditions();
    let (condition, i) = match hits.as_slice() {
        [one] => *one,
        [] => {
            return Err(GitError::Outside(match input.branch {
                Branch::High(_) => "f1 = g1 = h1 = 0".into(),
                Branch::Low(_) => "g = 0 with a = 0".into(),
            }))
        }
        many => unreachable!("conditions overlap: {many:?}"),
    };
    let row = table.row(i)?;
    Ok(StratumLabel {
        i,
        condition,
        kst: row.kst.clone(),
        ps_weights: row.weights.clone(),
        ps_weights_at_alpha: row.weights.instantiate(&table.alpha)?,
        alpha: table.alpha.clone(),
        singularity_label: row.singularity_label.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::git_hm::limit_pair;
    use crate::rational::{int, rat};

    fn p(a: i64, b: i64) -> (Rational, Rational) {
        (int(a), int(b))
    }

    fn high(f1: (i64, i64), g1: (i64, i64), h1: (i64, i64)) -> ShahInput {
        ShahInput {
            a: int(1),
            branch: Branch::High(HighBranch {
                beta1: vec![int(0); 3],
                f1: p(f1.0, f1.1),
                g1: p(g1.0, g1.1),
                h1: p(h1.0, h1.1),
            }),
        }
    }

    fn low(a: i64, l1: (i64, i64)) -> ShahInput {
        ShahInput { a: int(a), branch: Branch::Low(LowBranch { l1: p(l1.0, l1.1) }) }
    }

    #[test]
    fn worked_examples() {
        let s = shah_stratify(&high((0, 0), (0, 0), (1, 0))).unwrap();
        assert_eq!((s.i, s.kst.clone()), (8, rat(9, 11)));
        assert_eq!(s.ps_weights_at_alpha, [8, 2, -4, -6, -5].map(int).to_vec());
        let s = shah_stratify(&high((0, 0), (1, 0), (0, 1))).unwrap();
        assert_eq!((s.i, s.kst), (7, rat(7, 9)));
        let s = shah_stratify(&low(1, (0, 0))).unwrap();
        assert_eq!((s.i, s.kst.clone()), (0, rat(1, 3)));
        assert_eq!(s.ps_weights_at_alpha, [0, 0, 0, 0, -1].map(int).to_vec());
    }

    #[test]
    fn outside() {
        assert!(matches!(shah_stratify(&high((0, 0), (0, 0), (0, 0))), Err(GitError::Outside(_))));
        assert!(matches!(shah_stratify(&low(0, (0, 0))), Err(GitError::Outside(_))));
    }

    /// One representative per stratum; its tabulated subgroup must give a
    /// z-free limit threefold and match the weight of z² with that of g∞.
    #[test]
    fn representatives_have_consistent_limits() {
        let cases = [
            (high((0, 0), (0, 0), (1, 0)), 8),
            (high((0, 0), (1, 0), (0, 1)), 7),
            (high((1, 0), (0, 0), (0, 1)), 6),
            (high((1, 0), (0, 1), (0, 0)), 4),
            (high((0, 1), (0, 0), (0, 0)), 3),
            (low(1, (1, 0)), 2),
            (low(1, (0, 1)), 1),
            (low(1, (0, 0)), 0),
        ];
        let t = Table1::embedded();
        for (input, i) in cases {
            let s = shah_stratify(&input).unwrap();
            assert_eq!(s.i, i);
            let l = limit_pair(&input.q(), &input.g(), &s.ps_weights_at_alpha).unwrap();
            assert!(l.z_free, "stratum {i}");
            if i > 0 {
                assert_eq!(l.z2_matched, Some(true), "stratum {i}");
            }
            assert_eq!(t.row(i).unwrap().kst, s.kst);
        }
    }

    #[test]
    fn json_shape() {
        let js = r#"{"a":"1","branch":{"low":{"l1":["0","1"]}}}"#;
        let inp: ShahInput = serde_json::from_str(js).unwrap();
        assert_eq!(inp, low(1, (0, 1)));
        let bad = r#"{"a":"1","branch":{"high":{"beta1":["0"],"f1":[0,0],"g1":[0,0],"h1":[1,0]}}}"#;
        let inp: ShahInput = serde_json::from_str(bad).unwrap();
        assert!(matches!(shah_stratify(&inp), Err(GitError::Malformed(_))));
    }
}
