use serde::{Deserialize, Serialize};

use super::{KStabError, NormalizedVolCert, ValuationProfile};
use crate::data::{self, DataError};

/// The shipped valuation profiles and normalized-volume certificates.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProfileBundle {
    pub version: u32,
    pub profiles: Vec<ValuationProfile>,
    #[serde(default)]
    pub certificates: Vec<NormalizedVolCert>,
}

impl ProfileBundle {
    pub fn embedded() -> Self {
        Self::from_json(data::embedded(data::PROFILES).expect("bundled")).expect("bundled profiles parse")
    }

    pub fn from_json(text: &str) -> Result<Self, DataError> {
        data::parse(data::PROFILES, text)
    }

    pub fn profile(&self, name: &str) -> Option<&ValuationProfile> {
        self.profiles.iter().find(|p| p.name == name)
    }

    pub fn certificate(&self, name: &str) -> Option<&NormalizedVolCert> {
        self.certificates.iter().find(|c| c.name == name)
    }

    pub fn validate(&self) -> Result<(), KStabError> {
        self.profiles.iter().try_for_each(|p| p.validate())?;
        self.certificates.iter().try_for_each(|c| c.validate())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn bundled_profiles() {
        let b = ProfileBundle::embedded();
        b.validate().unwrap();
        let q = b.profile("ord_Q").unwrap();
        assert_eq!(q.kst_threshold().unwrap().rational(), Some(&rat(1, 3)));
        assert!(b.certificate("Xu_vertex").is_some());
        assert!(b.profile("nope").is_none());
    }
}
