//! Continuous piecewise-polynomial functions on a closed interval.

use crate::poly::Poly;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum PiecewiseError {
    #[error("need at least two breakpoints")]
    TooFewBreakpoints,
    #[error("breakpoints must be strictly increasing (index {0})")]
    NotIncreasing(usize),
    #[error("expected {expected} pieces for the given breakpoints, got {got}")]
    PieceCount { expected: usize, got: usize },
    #[error("pieces {0} and {1} disagree at their shared breakpoint {2}")]
    Discontinuous(usize, usize, String),
    #[error("split point {0} is not interior to any piece")]
    BadSplit(String),
}

/// Piece `i` is valid on `[breakpoints[i], breakpoints[i+1]]`.
#[derive(Clone, Debug, PartialEq)]
pub struct PiecewisePoly<F> {
    breakpoints: Vec<F>,
    pieces: Vec<Poly<F>>,
}

impl<F: Scalar> PiecewisePoly<F> {
    pub fn new(breakpoints: Vec<F>, pieces: Vec<Poly<F>>) -> Result<Self, PiecewiseError> {
        if breakpoints.len() < 2 {
            return Err(PiecewiseError::TooFewBreakpoints);
        }
        if let Some(i) = (1..breakpoints.len()).find(|&i| breakpoints[i] <= breakpoints[i - 1]) {
            return Err(PiecewiseError::NotIncreasing(i));
        }
        if pieces.len() != breakpoints.len() - 1 {
            return Err(PiecewiseError::PieceCount {
                expected: breakpoints.len() - 1,
                got: pieces.len(),
            });
        }
        for i in 1..pieces.len() {
            let t = &breakpoints[i];
            if pieces[i - 1].eval(t) != pieces[i].eval(t) {
                return Err(PiecewiseError::Discontinuous(i - 1, i, t.to_string()));
            }
        }
        Ok(PiecewisePoly { breakpoints, pieces })
    }

    pub fn single(a: F, b: F, p: Poly<F>) -> Result<Self, PiecewiseError> {
        Self::new(vec![a, b], vec![p])
    }

    pub fn breakpoints(&self) -> &[F] {
        &self.breakpoints
    }

    pub fn pieces(&self) -> &[Poly<F>] {
        &self.pieces
    }

    pub fn start(&self) -> &F {
        &self.breakpoints[0]
    }

    pub fn end(&self) -> &F {
        self.breakpoints.last().expect("validated non-empty")
    }

    /// Value at `t`, or `None` outside the domain. At a shared breakpoint
    /// both neighbours agree, so the left piece is used.
    pub fn eval(&self, t: &F) -> Option<F> {
        if t < self.start() || t > self.end() {
            return None;
        }
        let i = (1..self.breakpoints.len())
            .find(|&i| t <= &self.breakpoints[i])
            .unwrap_or(self.pieces.len())
            - 1;
        Some(self.pieces[i].eval(t))
    }

    /// Exact integral over the whole domain.
    pub fn integrate(&self) -> F {
        self.pieces
            .iter()
            .enumerate()
            .fold(F::zero(), |acc, (i, p)| {
                acc + p.integrate(&self.breakpoints[i], &self.breakpoints[i + 1])
            })
    }

    /// Splits the piece containing `t` in its interior into two identical
    /// copies. The represented function is unchanged.
    pub fn refine_at(&self, t: F) -> Result<Self, PiecewiseError> {
        let i = (0..self.pieces.len())
            .find(|&i| self.breakpoints[i] < t && t < self.breakpoints[i + 1])
            .ok_or_else(|| PiecewiseError::BadSplit(t.to_string()))?;
        let mut bp = self.breakpoints.clone();
        let mut pieces = self.pieces.clone();
        bp.insert(i + 1, t);
        pieces.insert(i + 1, pieces[i].clone());
        Ok(PiecewisePoly { breakpoints: bp, pieces })
    }

    /// Breakpoints together with the midpoints of every piece, in order.
    pub fn sample_points(&self) -> Vec<F> {
        let two = F::from_i64(2);
        let mut out = Vec::with_capacity(2 * self.breakpoints.len());
        for i in 0..self.pieces.len() {
            out.push(self.breakpoints[i].clone());
            out.push((self.breakpoints[i].clone() + self.breakpoints[i + 1].clone()) / two.clone());
        }
        out.push(self.end().clone());
        out
    }

    /// Monotonicity as checked on [`sample_points`](Self::sample_points):
    /// values never increase from one sample to the next.
    pub fn is_non_increasing_sampled(&self) -> bool {
        let vals: Vec<F> = self
            .sample_points()
            .iter()
            .map(|t| self.eval(t).expect("sample lies in the domain"))
            .collect();
        vals.windows(2).all(|w| w[1] <= w[0])
    }
}

#[derive(serde::Serialize, serde::Deserialize)]
struct RawPiecewise {
    #[serde(with = "crate::rational::serde_q::vec")]
    breakpoints: Vec<crate::rational::Rational>,
    pieces: Vec<Poly<crate::rational::Rational>>,
}

impl serde::Serialize for PiecewisePoly<crate::rational::Rational> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RawPiecewise { breakpoints: self.breakpoints.clone(), pieces: self.pieces.clone() }
            .serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for PiecewisePoly<crate::rational::Rational> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = RawPiecewise::deserialize(d)?;
        PiecewisePoly::new(raw.breakpoints, raw.pieces).map_err(D::Error::custom)
    }
}
