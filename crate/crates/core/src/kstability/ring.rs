use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::KStabError;
use crate::rational::{serde_q, Rational};
use crate::roots::QPoly;

/// Triple intersection numbers `Dᵢ·Dⱼ·D_k` on a threefold, stored once per
/// multiset of indices so the table is symmetric by construction.
#[derive(Clone, Debug, PartialEq)]
pub struct IntersectionRing3 {
    basis: Vec<String>,
    products: BTreeMap<[usize; 3], Rational>,
}

#[derive(Serialize, Deserialize)]
struct RawProduct {
    classes: Vec<String>,
    #[serde(with = "serde_q")]
    value: Rational,
}

#[derive(Serialize, Deserialize)]
struct RawRing {
    basis: Vec<String>,
    products: Vec<RawProduct>,
}

fn key(mut ix: [usize; 3]) -> [usize; 3] {
    ix.sort_unstable();
    ix
}

impl IntersectionRing3 {
    /// Every multiset of three basis classes must be given exactly once
    /// (repeats are allowed only if they agree).
    pub fn new(
        basis: Vec<String>,
        products: impl IntoIterator<Item = ([String; 3], Rational)>,
    ) -> Result<Self, KStabError> {
        if basis.is_empty() {
            return Err(KStabError::EmptyBasis);
        }
        for (i, b) in basis.iter().enumerate() {
            if basis[..i].contains(b) {
                return Err(KStabError::DuplicateClass(b.clone()));
            }
        }
        let mut ring = IntersectionRing3 { basis, products: BTreeMap::new() };
        for (names, v) in products {
            let ix = [ring.index(&names[0])?, ring.index(&names[1])?, ring.index(&names[2])?];
            let k = key(ix);
            match ring.products.get(&k) {
                Some(old) if old != &v => {
                    return Err(KStabError::ConflictingProduct(ring.label(k)));
                }
                _ => {
                    ring.products.insert(k, v);
                }
            }
        }
        let m = ring.basis.len();
        for i in 0..m {
            for j in i..m {
                for k in j..m {
                    if !ring.products.contains_key(&[i, j, k]) {
                        return Err(KStabError::MissingProduct(ring.label([i, j, k])));
                    }
                }
            }
        }
        Ok(ring)
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    fn index(&self, name: &str) -> Result<usize, KStabError> {
        self.basis
            .iter()
            .position(|b| b == name)
            .ok_or_else(|| KStabError::UnknownClass(name.to_string()))
    }

    fn label(&self, k: [usize; 3]) -> String {
        k.iter().map(|&i| self.basis[i].as_str()).collect::<Vec<_>>().join("·")
    }

    /// `Dᵢ·Dⱼ·D_k` by index.
    pub fn product(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.products[&key([i, j, k])]
    }

    /// Trilinear form on coefficient vectors whose entries are polynomials
    /// in `t` (constants included).
    pub fn trilinear(&self, x: &[QPoly], y: &[QPoly], z: &[QPoly]) -> QPoly {
        let m = self.basis.len();
        assert!(x.len() == m && y.len() == m && z.len() == m, "coefficient vector length");
        let mut acc = QPoly::zero();
        for i in 0..m {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..m {
                if y[j].is_zero() {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for k in 0..m {
                    let p = self.product(i, j, k);
                    if z[k].is_zero() || p.is_zero() {
                        continue;
                    }
                    acc = &acc + &(&xy * &z[k]).scale(p);
                }
            }
        }
        acc
    }

    /// Dense coefficient vector for a class given by name; missing names
    /// contribute zero.
    pub fn coefficients(&self, class: &BTreeMap<String, QPoly>) -> Result<Vec<QPoly>, KStabError> {
        let mut v = vec![QPoly::zero(); self.basis.len()];
        for (name, c) in class {
            v[self.index(name)?] = c.clone();
        }
        Ok(v)
    }

    /// `(Σ cᵢ(t) Dᵢ)³` as a polynomial in `t`.
    pub fn expand_cube(&self, class: &BTreeMap<String, QPoly>) -> Result<QPoly, KStabError> {
        let v = self.coefficients(class)?;
        Ok(self.trilinear(&v, &v, &v))
    }
}

impl Serialize for IntersectionRing3 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let products = self
            .products
            .iter()
            .map(|(k, v)| RawProduct {
                classes: k.iter().map(|&i| self.basis[i].clone()).collect(),
                value: v.clone(),
            })
            .collect();
        RawRing { basis: self.basis.clone(), products }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntersectionRing3 {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = RawRing::deserialize(d)?;
        let mut prods = Vec::with_capacity(raw.products.len());
        for p in raw.products {
            let n = p.classes.len();
            let arr: [String; 3] = p
                .classes
                .try_into()
                .map_err(|_| D::Error::custom(KStabError::NotTriple(n)))?;
            prods.push((arr, p.value));
        }
        IntersectionRing3::new(raw.basis, prods).map_err(D::Error::custom)
    }
}
