//! Valuative K-stability: log discrepancies, expected vanishing orders,
//! β = A − S, thresholds, and a few closed-form certificates.
//!
//! Volume functions are data (a [`PiecewisePoly`](crate::PiecewisePoly) per
//! valuation), not the output of a Zariski decomposition; the nef segment can
//! be cross-checked against an [`IntersectionRing3`].

mod alpha;
mod bundle;
mod cert;
mod profile;
mod ring;

pub use alpha::{alpha_p1, AlphaReport};
pub use bundle::ProfileBundle;
pub use cert::{cone_beta, normalized_vol_unstable, NormalizedVolCert, VolVerdict, Verdict};
pub use profile::{almost_cy_s, almost_cy_profile, NefCheck, Threshold, ValuationProfile};
pub use ring::IntersectionRing3;

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum KStabError {
    #[error("intersection ring needs at least one basis class")]
    EmptyBasis,
    #[error("duplicate basis class {0:?}")]
    DuplicateClass(String),
    #[error("unknown basis class {0:?}")]
    UnknownClass(String),
    #[error("a triple product needs exactly three classes, got {0}")]
    NotTriple(usize),
    #[error("conflicting values for the product {0}")]
    ConflictingProduct(String),
    #[error("missing triple product {0}")]
    MissingProduct(String),
    #[error("profile {name}: {reason}")]
    InvalidProfile { name: String, reason: String },
    #[error("vol(0) = 0: the S-invariant is undefined")]
    ZeroVolume,
    #[error("{0}")]
    Precondition(String),
    #[error("not log Fano: sum of coefficients {0} is at least 2")]
    NotLogFano(String),
    #[error("certificate entries must be positive: {0}")]
    NonPositive(String),
}
