//! The concrete exact scalar and its string encoding.
//!
//! Rationals always travel as strings: `"p/q"`, or `"p"` when `q = 1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let t = s.trim();
    if t.is_empty() {
        return Err("empty rational".into());
    }
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| format!("invalid rational {s:?}"))?;
    let d: BigInt = d.parse().map_err(|_| format!("invalid rational {s:?}"))?;
    if d.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Rational::new(n, d))
}

pub fn fmt_rational(q: &Rational) -> String {
    q.to_string()
}

/// Positive divisors of `n` by trial division. Intended for the small
/// integers that show up as leading/constant coefficients.
pub fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return vec![];
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if n.is_multiple_of(&d) {
            small.push(d.clone());
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Serde adapters for rationals stored as strings.
pub mod serde_q {
    use super::{parse_rational, Rational};
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&q.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let raw = StrOrInt::deserialize(d)?;
        raw.into_rational().map_err(D::Error::custom)
    }

    // Integers are accepted on input for convenience; output is always a string.
    #[derive(Deserialize)]
    #[serde(untagged)]
    pub(crate) enum StrOrInt {
        S(String),
        I(i64),
    }

    impl StrOrInt {
        pub(crate) fn into_rational(self) -> Result<Rational, String> {
            match self {
                StrOrInt::S(s) => parse_rational(&s),
                StrOrInt::I(i) => Ok(super::int(i)),
            }
        }
    }

    pub mod vec {
        use super::super::Rational;
        use super::StrOrInt;
        use serde::{de::Error, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

        pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for q in v {
                seq.serialize_element(&q.to_string())?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
            let raw: Vec<StrOrInt> = Vec::deserialize(d)?;
            raw.into_iter()
                .map(|r| r.into_rational().map_err(D::Error::custom))
                .collect()
        }
    }

    pub mod pair {
        use super::super::Rational;
        use serde::{Deserializer, Serializer};

        pub fn serialize<S: Serializer>(p: &(Rational, Rational), s: S) -> Result<S::Ok, S::Error> {
            super::vec::serialize(&[p.0.clone(), p.1.clone()], s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<(Rational, Rational), D::Error> {
            use serde::de::Error;
            let v = super::vec::deserialize(d)?;
            match <[Rational; 2]>::try_from(v) {
                Ok([a, b]) => Ok((a, b)),
                Err(v) => Err(D::Error::custom(format!("expected 2 rationals, got {}", v.len()))),
            }
        }
    }

    pub mod opt {
        use super::super::Rational;
        use super::StrOrInt;
        use serde::{de::Error, Deserialize, Deserializer, Serializer};

        pub fn serialize<S: Serializer>(q: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
            match q {
                Some(q) => s.serialize_some(&q.to_string()),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
            let raw: Option<StrOrInt> = Option::deserialize(d)?;
            raw.map(|r| r.into_rational().map_err(D::Error::custom)).transpose()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        assert_eq!(parse_rational("6/4").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("-3").unwrap(), int(-3));
        assert_eq!(fmt_rational(&rat(3, 2)), "3/2");
        assert_eq!(fmt_rational(&rat(4, 2)), "2");
        assert_eq!(fmt_rational(&rat(-1, 3)), "-1/3");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("0.5").is_err());
    }

    #[test]
    fn divisor_list() {
        let ds: Vec<i64> = divisors(&BigInt::from(12))
            .iter()
            .map(|d| d.try_into().unwrap())
            .collect();
        assert_eq!(ds, vec![1, 2, 3, 4, 6, 12]);
        assert!(divisors(&BigInt::from(0)).is_empty());
    }
}
