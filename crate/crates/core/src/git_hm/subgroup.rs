use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::GitError;
use crate::rational::{parse_rational, rat, Rational};

/// Stand-in for "0 < α ≪ 1" in weight vectors.
pub fn default_alpha() -> Rational {
    rat(1, 100)
}

/// `c₀ + c₁·α`, written e.g. `2alpha-1` (`α` is accepted too).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlphaAffine {
    pub constant: Rational,
    pub alpha: Rational,
}

impl AlphaAffine {
    pub fn constant(c: Rational) -> Self {
        AlphaAffine { constant: c, alpha: Rational::zero() }
    }

    pub fn eval(&self, alpha: &Rational) -> Rational {
        &self.constant + &self.alpha * alpha
    }

    pub fn is_symbolic(&self) -> bool {
        !self.alpha.is_zero()
    }

    pub fn parse(s: &str) -> Result<Self, GitError> {
        let bad = || GitError::BadWeight(s.to_string());
        let t: String = s.replace('α', "alpha").replace('−', "-").chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(bad());
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, ch) in t.char_indices() {
            if (ch == '+' || ch == '-') && i > 0 {
                terms.push(&t[start..i]);
                start = i;
            }
        }
        terms.push(&t[start..]);
        let mut out = AlphaAffine::constant(Rational::zero());
        for term in terms {
            let (sign, body) = match term.as_bytes().first() {
                Some(b'-') => (-Rational::one(), &term[1..]),
                Some(b'+') => (Rational::one(), &term[1..]),
                _ => (Rational::one(), term),
            };
            if let Some(coef) = body.strip_suffix("alpha") {
                let coef = coef.strip_suffix('*').unwrap_or(coef);
                let c = if coef.is_empty() { Rational::one() } else { parse_rational(coef).map_err(|_| bad())? };
                out.alpha += sign * c;
            } else {
                if body.is_empty() {
                    return Err(bad());
                }
                out.constant += sign * parse_rational(body).map_err(|_| bad())?;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for AlphaAffine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.alpha.is_zero() {
            return write!(f, "{}", self.constant);
        }
        let a = &self.alpha;
        if a.is_one() {
            write!(f, "alpha")?;
        } else if (-a).is_one() {
            write!(f, "-alpha")?;
        } else {
            write!(f, "{a}alpha")?;
        }
        if self.constant.is_positive() {
            write!(f, "+{}", self.constant)?;
        } else if self.constant.is_negative() {
            write!(f, "{}", self.constant)?;
        }
        Ok(())
    }
}

impl Serialize for AlphaAffine {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for AlphaAffine {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            S(String),
            I(i64),
        }
        match Raw::deserialize(d)? {
            Raw::S(s) => AlphaAffine::parse(&s).map_err(D::Error::custom),
            Raw::I(i) => Ok(AlphaAffine::constant(crate::rational::int(i))),
        }
    }
}

/// Diagonal 1-PS on the coordinates `(x₀, x₁, x₂, x₃, z)` of ℙ(1⁴, 2).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OneParamSubgroup {
    pub weights: Vec<AlphaAffine>,
}

impl OneParamSubgroup {
    pub fn new(weights: Vec<AlphaAffine>) -> Self {
        OneParamSubgroup { weights }
    }

    pub fn from_rationals(w: Vec<Rational>) -> Self {
        OneParamSubgroup { weights: w.into_iter().map(AlphaAffine::constant).collect() }
    }

    pub fn parse(items: &[&str]) -> Result<Self, GitError> {
        Ok(OneParamSubgroup { weights: items.iter().map(|s| AlphaAffine::parse(s)).collect::<Result<_, _>>()? })
    }

    pub fn is_symbolic(&self) -> bool {
        self.weights.iter().any(AlphaAffine::is_symbolic)
    }

    pub fn instantiate(&self, alpha: &Rational) -> Result<Vec<Rational>, GitError> {
        if !alpha.is_positive() {
            return Err(GitError::BadAlpha(alpha.to_string()));
        }
        Ok(self.weights.iter().map(|w| w.eval(alpha)).collect())
    }

    /// Whether `α = a₁` and `α = a₂` order all monomials of weighted degree
    /// 2 and 4 in ℙ(1⁴, 2) the same way. Equal orderings at two small values
    /// is the evidence that `a₁` is already "sufficiently small".
    pub fn same_regime(&self, a1: &Rational, a2: &Rational) -> Result<bool, GitError> {
        if self.weights.len() != 5 {
            return Err(GitError::WeightLength { got: self.weights.len(), expected: 5 });
        }
        let (w1, w2) = (self.instantiate(a1)?, self.instantiate(a2)?);
        for deg in [2u32, 4] {
            let monos = monomials_p11112(deg);
            let wt = |w: &[Rational], e: &[u32]| {
                e.iter().zip(w).fold(Rational::zero(), |acc, (k, wi)| acc + wi * Rational::from_integer((*k).into()))
            };
            let v1: Vec<Rational> = monos.iter().map(|e| wt(&w1, e)).collect();
            let v2: Vec<Rational> = monos.iter().map(|e| wt(&w2, e)).collect();
            for i in 0..monos.len() {
                for j in i + 1..monos.len() {
                    if v1[i].cmp(&v1[j]) != v2[i].cmp(&v2[j]) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

/// Exponent vectors of weighted degree `d` in ℙ(1⁴, 2).
pub(crate) fn monomials_p11112(d: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for ez in 0..=d / 2 {
        let r = d - 2 * ez;
        for a in 0..=r {
            for b in 0..=r - a {
                for c in 0..=r - a - b {
                    out.push(vec![a, b, c, r - a - b - c, ez]);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn parse_and_print() {
        let w = AlphaAffine::parse("2alpha-1").unwrap();
        assert_eq!(w, AlphaAffine { constant: int(-1), alpha: int(2) });
        assert_eq!(w.to_string(), "2alpha-1");
        assert_eq!(AlphaAffine::parse("-3α").unwrap().to_string(), "-3alpha");
        assert_eq!(AlphaAffine::parse("alpha").unwrap().alpha, int(1));
        assert_eq!(AlphaAffine::parse("1/2*alpha + 3").unwrap().to_string(), "1/2alpha+3");
        assert_eq!(AlphaAffine::parse("-5").unwrap().to_string(), "-5");
        assert!(AlphaAffine::parse("beta").is_err());
        assert!(AlphaAffine::parse("").is_err());
        assert!(AlphaAffine::parse("1+").is_err());
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials_p11112(2).len(), 11);
        assert_eq!(monomials_p11112(4).len(), 46);
    }

    #[test]
    fn regime_of_small_alpha() {
        let s = OneParamSubgroup::parse(&["1", "alpha", "2alpha-1", "-3alpha", "-6alpha"]).unwrap();
        assert!(s.same_regime(&rat(1, 100), &rat(1, 1000)).unwrap());
        // α = 1/2 is outside the small regime: x0x2 now outweighs x0x3.
        assert!(!s.same_regime(&rat(1, 2), &rat(1, 1000)).unwrap());
        assert_eq!(s.instantiate(&rat(1, 100)).unwrap()[2], rat(-49, 50));
        assert!(s.instantiate(&int(0)).is_err());
    }
}
