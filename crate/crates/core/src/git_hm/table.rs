use serde::{Deserialize, Serialize};

use super::{GitError, OneParamSubgroup};
use crate::data::{self, DataError};
use crate::rational::{rat, serde_q, Rational};

/// One stratum `W_i°`: its K-semistable threshold and destabilizing 1-PS.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Table1Row {
    pub i: u32,
    #[serde(with = "serde_q")]
    pub kst: Rational,
    pub weights: OneParamSubgroup,
    pub singularity_label: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Table1 {
    pub version: u32,
    /// Value substituted for the symbolic α.
    #[serde(with = "serde_q")]
    pub alpha: Rational,
    pub rows: Vec<Table1Row>,
}

impl Table1 {
    pub fn embedded() -> Self {
        Self::from_json(data::embedded(data::TABLE1).expect("bundled")).expect("bundled table parses")
    }

    pub fn from_json(text: &str) -> Result<Self, DataError> {
        data::parse(data::TABLE1, text)
    }

    pub fn row(&self, i: u32) -> Result<&Table1Row, GitError> {
        self.rows.iter().find(|r| r.i == i).ok_or(GitError::MissingRow(i))
    }

    /// Every symbolic row orders the degree-2 and degree-4 monomials the
    /// same way at `α` and at `α/10`.
    pub fn alpha_regime_ok(&self) -> Result<bool, GitError> {
        let smaller = &self.alpha * rat(1, 10);
        for r in self.rows.iter().filter(|r| r.weights.is_symbolic()) {
            if !r.weights.same_regime(&self.alpha, &smaller)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn bundled_table() {
        let t = Table1::embedded();
        assert_eq!(t.rows.len(), 8);
        assert_eq!(t.alpha, rat(1, 100));
        assert_eq!(t.row(8).unwrap().kst, rat(9, 11));
        assert_eq!(t.row(0).unwrap().weights.instantiate(&t.alpha).unwrap()[4], int(-1));
        assert!(t.row(5).is_err());
        assert!(t.alpha_regime_ok().unwrap());
        // also at the two values named for the regime certificate
        for r in &t.rows {
            assert!(r.weights.same_regime(&rat(1, 100), &rat(1, 1000)).unwrap());
        }
    }
}
