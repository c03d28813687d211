use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::KStabError;
use crate::rational::{int, rat, serde_q, Rational};
use crate::roots::QPoly;

/// β of the quasi-monomial valuation `v_t` on a cone over `(V, cC)`:
///
/// `t·β_V + c·t·ord + (c+1)/3 − (4c+1)/3 · min{1, t·ord}`.
pub fn cone_beta(beta_v: &Rational, ord_e_c: &Rational, c: &Rational, t: &Rational) -> Result<Rational, KStabError> {
    if c < &Rational::zero() || c >= &rat(1, 2) {
        return Err(KStabError::Precondition(format!("cone β needs c in [0, 1/2), got {c}")));
    }
    if t <= &Rational::zero() {
        return Err(KStabError::Precondition(format!("cone β needs t > 0, got {t}")));
    }
    if ord_e_c < &Rational::zero() {
        return Err(KStabError::Precondition(format!("ord_E(C) must be nonnegative, got {ord_e_c}")));
    }
    let to = t * ord_e_c;
    let m = if to < Rational::one() { to.clone() } else { Rational::one() };
    let three = int(3);
    Ok(t * beta_v + c * &to + (c + int(1)) / &three - (int(4) * c + int(1)) / &three * m)
}

/// Local data at a singular point `o` for the normalized-volume test.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NormalizedVolCert {
    pub name: String,
    #[serde(with = "serde_q")]
    pub a_e: Rational,
    /// A lower bound for `ord_E(S)`.
    #[serde(with = "serde_q")]
    pub ord_e_s: Rational,
    #[serde(with = "serde_q")]
    pub local_vol: Rational,
    /// `(−K_X − cS)³` as a polynomial in `u = 1 − c`.
    pub pair_vol: QPoly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    UnstableCertified,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VolVerdict {
    pub verdict: Verdict,
    /// `(27/64)·(−K_X − cS)³`.
    #[serde(with = "serde_q")]
    pub left: Rational,
    /// `(A_E − c·ord_E S)³ · vol_{X,o}(E)`, an upper bound for the local
    /// normalized volume of the pair.
    #[serde(with = "serde_q")]
    pub right: Rational,
}

impl NormalizedVolCert {
    pub fn validate(&self) -> Result<(), KStabError> {
        let z = Rational::zero();
        for (what, v) in [("A_E", &self.a_e), ("ord_E(S)", &self.ord_e_s), ("local volume", &self.local_vol)] {
            if v <= &z {
                return Err(KStabError::NonPositive(format!("{what} = {v}")));
            }
        }
        if self.pair_vol.eval(&Rational::one()) <= z {
            return Err(KStabError::NonPositive("(−K_X)³".into()));
        }
        Ok(())
    }
}

/// Certifies K-instability of `(X, cS)` when
/// `(27/64)(−K_X − cS)³ > (A_E − c·ord_E S)³ · vol_{X,o}(E)`.
pub fn normalized_vol_unstable(cert: &NormalizedVolCert, c: &Rational) -> Result<VolVerdict, KStabError> {
    cert.validate()?;
    if c < &Rational::zero() || c >= &Rational::one() {
        return Err(KStabError::Precondition(format!("c must lie in [0, 1), got {c}")));
    }
    let u = Rational::one() - c;
    let left = rat(27, 64) * cert.pair_vol.eval(&u);
    let lc = &cert.a_e - c * &cert.ord_e_s;
    let right = &lc * &lc * &lc * &cert.local_vol;
    let verdict = if left > right { Verdict::UnstableCertified } else { Verdict::Inconclusive };
    Ok(VolVerdict { verdict, left, right })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;

    fn vertex(local_vol: Rational) -> NormalizedVolCert {
        NormalizedVolCert {
            name: "vertex".into(),
            a_e: int(1),
            ord_e_s: int(1),
            local_vol,
            pair_vol: Poly::monomial(int(64), 3),
        }
    }

    #[test]
    fn cone_vertices_are_unstable() {
        for c in [int(0), rat(1, 3), rat(1, 2), rat(9, 13), rat(9, 11)] {
            let u = int(1) - &c;
            let u3 = &u * &u * &u;
            let v = normalized_vol_unstable(&vertex(int(8)), &c).unwrap();
            assert_eq!(v.verdict, Verdict::UnstableCertified);
            assert_eq!(v.left, int(27) * &u3);
            assert_eq!(v.right, int(8) * &u3);
            let v = normalized_vol_unstable(&vertex(rat(4, 3)), &c).unwrap();
            assert_eq!(v.verdict, Verdict::UnstableCertified);
            assert_eq!(v.right, rat(4, 3) * &u3);
        }
    }

    #[test]
    fn equality_is_inconclusive() {
        let v = normalized_vol_unstable(&vertex(int(27)), &rat(1, 5)).unwrap();
        assert_eq!(v.verdict, Verdict::Inconclusive);
        assert_eq!(v.left, v.right);
        assert!(normalized_vol_unstable(&vertex(int(8)), &int(1)).is_err());
        assert!(normalized_vol_unstable(&vertex(int(0)), &int(0)).is_err());
    }

    #[test]
    fn cone_beta_cases() {
        let b = rat(-1, 7);
        assert_eq!(cone_beta(&b, &int(3), &rat(1, 4), &rat(1, 3)).unwrap(), &b * &rat(1, 3));
        assert_eq!(
            cone_beta(&b, &int(0), &rat(1, 4), &int(5)).unwrap(),
            &b * &int(5) + rat(5, 12)
        );
        assert!(cone_beta(&b, &int(0), &rat(1, 4), &int(100)).unwrap() < Rational::zero());
        assert_eq!(cone_beta(&int(0), &int(1), &int(0), &int(1)).unwrap(), int(0));
        assert!(cone_beta(&b, &int(1), &rat(1, 2), &int(1)).is_err());
    }
}
