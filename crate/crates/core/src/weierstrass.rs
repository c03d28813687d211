//! Weierstrass data `z² = y³ + A·x⁴y + B·x⁶` for unigonal K3 surfaces,
//! with `A`, `B` binary forms of degree 8 and 12 in `(u, v)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::binary_form::{FormError, QBinaryForm};
use crate::multipoly::{MultiPoly, Var};
use crate::rational::{int, serde_q, Rational};
use crate::roots;
use crate::BinaryForm;

type QMultiPoly = MultiPoly<Rational>;

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum WsError {
    #[error("the pair (A, B) = (0, 0) is the tangent-developable degeneration; the query needs a nonzero pair")]
    ZeroPair,
    #[error("{which} must have degree {expected}, got {got}")]
    Degree { which: &'static str, expected: usize, got: usize },
    #[error("a = 0: section passes through the vertex o ∈ X_u")]
    Vertex,
    #[error("cannot normalize the y^3 coefficient: {0}")]
    YCoefficient(String),
    #[error("internal error: mixed terms survive the substitution: {0}")]
    Residual(String),
    #[error("sl2 weight must be nonnegative, got {0}")]
    NegativeWeight(i64),
    #[error(transparent)]
    Form(#[from] FormError),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WeierstrassPair {
    #[serde(rename = "A")]
    pub a: QBinaryForm,
    #[serde(rename = "B")]
    pub b: QBinaryForm,
}

impl<'de> Deserialize<'de> for WeierstrassPair {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            #[serde(rename = "A")]
            a: QBinaryForm,
            #[serde(rename = "B")]
            b: QBinaryForm,
        }
        let r = Raw::deserialize(d)?;
        WeierstrassPair::new(r.a, r.b).map_err(serde::de::Error::custom)
    }
}

fn check_degree(which: &'static str, f: &QBinaryForm, expected: usize) -> Result<(), WsError> {
    if f.degree() != expected {
        return Err(WsError::Degree { which, expected, got: f.degree() });
    }
    Ok(())
}

impl WeierstrassPair {
    pub fn new(a: QBinaryForm, b: QBinaryForm) -> Result<Self, WsError> {
        check_degree("A", &a, 8)?;
        check_degree("B", &b, 12)?;
        Ok(WeierstrassPair { a, b })
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// `(t⁴·A∘g, t⁶·B∘g)`.
    pub fn act(&self, g: [[Rational; 2]; 2], t: &Rational) -> Self {
        let t2 = t * t;
        let t4 = &t2 * &t2;
        WeierstrassPair { a: self.a.compose_linear(g.clone()).scale(&t4), b: self.b.compose_linear(g).scale(&(&t4 * &t2)) }
    }

    pub fn swap(&self) -> Self {
        WeierstrassPair { a: self.a.swap(), b: self.b.swap() }
    }

    /// The pair as the section `z² − y³ − A·x⁴y − B·x⁶`.
    pub fn as_section(&self) -> AntiCanSection {
        AntiCanSection {
            a: Rational::one(),
            f2: BinaryForm::zero(2),
            f4: BinaryForm::zero(4),
            f6: BinaryForm::zero(6),
            f8: self.a.scale(&int(-1)),
            f12: self.b.scale(&int(-1)),
            b: int(-1),
        }
    }
}

pub fn discriminant(p: &WeierstrassPair) -> QBinaryForm {
    let a3 = p.a.pow(3).scale(&int(4));
    let b2 = p.b.pow(2).scale(&int(27));
    a3.add(&b2).expect("both of degree 24")
}

// ---------------------------------------------------------------------------
// slc criterion

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SlcWitness {
    /// A linear form vanishing at the bad point when it is rational,
    /// otherwise the (square-free) form cutting out all bad points.
    pub form: QBinaryForm,
    /// `[p0 : p1]` when the bad point is rational.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point: Option<(String, String)>,
    /// `None` stands for +∞ (the zero form).
    pub ord_a: Option<usize>,
    pub ord_b: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SlcReport {
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<SlcWitness>,
}

/// A form whose roots are exactly the points where `f` vanishes to order
/// at least `m`; `None` when `f = 0` (every point qualifies).
fn high_order_locus(f: &QBinaryForm, m: usize) -> Option<QBinaryForm> {
    if f.is_zero() {
        return None;
    }
    let p = f.dehomogenize();
    let mut g = p.clone();
    let mut d = p;
    for _ in 1..m {
        d = d.derivative();
        g = g.gcd(&d);
    }
    let g = roots::square_free(&g);
    let gd = g.degree().unwrap_or(0);
    let affine = BinaryForm::homogenize(&g, gd);
    let at_inf = f.ord_v().unwrap() >= m;
    Some(if at_inf { affine.mul(&BinaryForm::linear(Rational::zero(), Rational::one())) } else { affine })
}

fn ord_or_inf(f: &QBinaryForm, p: &(Rational, Rational)) -> Result<Option<usize>, FormError> {
    if f.is_zero() {
        Ok(None)
    } else {
        f.ord_at_point(p).map(Some)
    }
}

/// Passes iff at every point of ℙ¹ (over ℚ̄) `ord_p A ≤ 3` or `ord_p B ≤ 5`.
///
/// A bad point is a common root of the order-≥4 locus of `A` and the
/// order-≥6 locus of `B`, both of which are defined over ℚ, so one exact gcd
/// decides the question even when the bad point is irrational.
pub fn slc_check(p: &WeierstrassPair) -> Result<SlcReport, WsError> {
    if p.is_zero() {
        return Err(WsError::ZeroPair);
    }
    let bad = match (high_order_locus(&p.a, 4), high_order_locus(&p.b, 6)) {
        (Some(la), Some(lb)) => la.gcd(&lb),
        (Some(l), None) | (None, Some(l)) => l.normalized(),
        (None, None) => unreachable!("zero pair rejected above"),
    };
    if bad.degree() == 0 {
        return Ok(SlcReport { pass: true, witness: None });
    }
    let witness = match bad.rational_points()?.into_iter().next() {
        Some((pt, _)) => {
            let q = QBinaryForm::point(&pt);
            SlcWitness {
                form: BinaryForm::vanishing_at(&q)?.normalized(),
                point: Some((pt.0.to_string(), pt.1.to_string())),
                ord_a: ord_or_inf(&p.a, &q)?,
                ord_b: ord_or_inf(&p.b, &q)?,
            }
        }
        None => {
            // All bad points are conjugate irrationals; report orders
            // through the factor itself.
            let ord = |f: &QBinaryForm| -> Option<usize> {
                if f.is_zero() {
                    return None;
                }
                let (fp, bp) = (f.dehomogenize(), bad.dehomogenize());
                let mut q = fp;
                let mut m = 0;
                loop {
                    let (quo, r) = q.div_rem(&bp);
                    if !r.is_zero() {
                        break;
                    }
                    q = quo;
                    m += 1;
                }
                Some(m)
            };
            SlcWitness { form: bad.clone(), point: None, ord_a: ord(&p.a), ord_b: ord(&p.b) }
        }
    };
    Ok(SlcReport { pass: false, witness: Some(witness) })
}

// ---------------------------------------------------------------------------
// anti-canonical sections

/// `s = a·z² + f₂·xyz + f₆·x³z + b·y³ + f₄·x²y² + f₈·x⁴y + f₁₂·x⁶`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AntiCanSection {
    #[serde(with = "serde_q")]
    pub a: Rational,
    pub f2: QBinaryForm,
    pub f4: QBinaryForm,
    pub f6: QBinaryForm,
    pub f8: QBinaryForm,
    pub f12: QBinaryForm,
    #[serde(with = "serde_q")]
    pub b: Rational,
}

/// Coordinates `(u, v, x, y, z)` with weights making every section
/// homogeneous of degree 18.
pub fn section_vars() -> Vec<Var> {
    vec![Var::new("u", 1), Var::new("v", 1), Var::new("x", 1), Var::new("y", 6), Var::new("z", 9)]
}

const X: usize = 2;
const Y: usize = 3;
const Z: usize = 4;

/// `f(u, v) · x^i y^j z^k`.
pub fn lift_form(f: &QBinaryForm, i: u32, j: u32, k: u32) -> QMultiPoly {
    let d = f.degree() as u32;
    let terms = f
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| (vec![d - n as u32, n as u32, i, j, k], c.clone()));
    MultiPoly::from_terms(section_vars(), terms).expect("five exponents")
}

/// Coefficient of `x^i y^j z^k`, read as a binary form of degree `d`.
pub fn coefficient_form(s: &QMultiPoly, i: u32, j: u32, k: u32, d: usize) -> Result<QBinaryForm, WsError> {
    let mut out = vec![Rational::zero(); d + 1];
    for (e, c) in s.terms().filter(|(e, _)| e[X] == i && e[Y] == j && e[Z] == k) {
        if (e[0] + e[1]) as usize != d {
            return Err(WsError::Residual(format!("x^{i}y^{j}z^{k} has a coefficient of degree {}", e[0] + e[1])));
        }
        out[e[1] as usize] = c.clone();
    }
    Ok(BinaryForm::new(out)?)
}

impl AntiCanSection {
    pub fn validate(&self) -> Result<(), WsError> {
        check_degree("f2", &self.f2, 2)?;
        check_degree("f4", &self.f4, 4)?;
        check_degree("f6", &self.f6, 6)?;
        check_degree("f8", &self.f8, 8)?;
        check_degree("f12", &self.f12, 12)
    }

    pub fn polynomial(&self) -> QMultiPoly {
        let vars = section_vars();
        let c = |q: &Rational, i, j, k| lift_form(&BinaryForm::new(vec![q.clone()]).unwrap(), i, j, k);
        let parts = [
            c(&self.a, 0, 0, 2),
            lift_form(&self.f2, 1, 1, 1),
            lift_form(&self.f6, 3, 0, 1),
            c(&self.b, 0, 3, 0),
            lift_form(&self.f4, 2, 2, 0),
            lift_form(&self.f8, 4, 1, 0),
            lift_form(&self.f12, 6, 0, 0),
        ];
        parts.iter().fold(MultiPoly::zero(vars).unwrap(), |acc, p| &acc + p)
    }
}

/// The coordinate change used to reach Weierstrass form, recorded so it can
/// be undone: `y ↦ μ·y`, then `z ↦ z − z_shift_xy·xy − z_shift_x3·x³`, then
/// `y ↦ y + y_shift·x²`, all after dividing by `a`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeierstrassReduction {
    pub pair: WeierstrassPair,
    #[serde(with = "serde_q")]
    pub y_scale: Rational,
    pub z_shift_xy: QBinaryForm,
    pub z_shift_x3: QBinaryForm,
    pub y_shift: QBinaryForm,
}

fn rational_cbrt(q: &Rational) -> Option<Rational> {
    let root = |n: &BigInt| {
        let r = n.abs().cbrt();
        (&r * &r * &r == n.abs()).then(|| if n.is_negative() { -r } else { r })
    };
    Some(Rational::new(root(q.numer())?, root(q.denom())?))
}

/// Brings `s` to `z² − y³ − A·x⁴y − B·x⁶`, i.e. to the surface
/// `z² = y³ + A·x⁴y + B·x⁶`.
pub fn to_weierstrass(s: &AntiCanSection) -> Result<WeierstrassReduction, WsError> {
    s.validate()?;
    if s.a.is_zero() {
        return Err(WsError::Vertex);
    }
    if s.b.is_zero() {
        return Err(WsError::YCoefficient("b = 0, the section has no y^3 term".into()));
    }
    let vars = section_vars();
    let var = |i| MultiPoly::var(&vars, i);
    // y³ coefficient −1 after dividing by a needs (b/a)·μ³ = −1.
    let mu = rational_cbrt(&(-&s.a / &s.b))
        .ok_or_else(|| WsError::YCoefficient(format!("-a/b = {} is not a cube in Q", -&s.a / &s.b)))?;
    let mut p = s.polynomial().scale(&(Rational::one() / &s.a));
    p = p.substitute(Y, &var(Y).scale(&mu));

    let f2 = coefficient_form(&p, 1, 1, 1, 2)?;
    let f6 = coefficient_form(&p, 3, 0, 1, 6)?;
    let half = Rational::new(1.into(), 2.into());
    let (zs_xy, zs_x3) = (f2.scale(&half), f6.scale(&half));
    let z_sub = &(&var(Z) - &lift_form(&zs_xy, 1, 1, 0)) - &lift_form(&zs_x3, 3, 0, 0);
    p = p.substitute(Z, &z_sub);

    let f4 = coefficient_form(&p, 2, 2, 0, 4)?;
    let ys = f4.scale(&Rational::new(1.into(), 3.into()));
    p = p.substitute(Y, &(&var(Y) + &lift_form(&ys, 2, 0, 0)));

    let allowed = [[0, 0, 2], [0, 3, 0], [4, 1, 0], [6, 0, 0]];
    let residual = p.filter_terms(|e, _| !allowed.contains(&[e[X], e[Y], e[Z]]));
    if !residual.is_zero() {
        return Err(WsError::Residual(residual.to_string()));
    }
    let unit = |i, j, k, want: i64| coefficient_form(&p, i, j, k, 0).map(|f| f.coeffs()[0] == int(want));
    if !unit(0, 0, 2, 1)? || !unit(0, 3, 0, -1)? {
        return Err(WsError::Residual("z^2 / y^3 coefficients are not 1 / -1".into()));
    }
    let a = coefficient_form(&p, 4, 1, 0, 8)?.scale(&int(-1));
    let b = coefficient_form(&p, 6, 0, 0, 12)?.scale(&int(-1));
    Ok(WeierstrassReduction {
        pair: WeierstrassPair::new(a, b)?,
        y_scale: mu,
        z_shift_xy: zs_xy,
        z_shift_x3: zs_x3,
        y_shift: ys,
    })
}

// ---------------------------------------------------------------------------
// Hilbert–Mumford weights on ℙ(2⁹, 3¹³)

/// `g ∈ SL₂(ℤ)` with `g·[0:1] = p`, for a point with coprime coordinates.
pub fn sl2_moving_to(p: &(BigInt, BigInt)) -> [[Rational; 2]; 2] {
    // [[a, p0], [c, p1]] with a·p1 − c·p0 = 1
    let e = p.1.extended_gcd(&p.0);
    let (a, c) = (e.x, -e.y);
    debug_assert!(e.gcd.is_one());
    let q = |n: BigInt| Rational::from_integer(n);
    [[q(a), q(p.0.clone())], [q(c), q(p.1.clone())]]
}

fn coprime_point(p: &(Rational, Rational)) -> Result<(BigInt, BigInt), WsError> {
    let l = p.0.denom().lcm(p.1.denom());
    let x = (&p.0 * Rational::from_integer(l.clone())).to_integer();
    let y = (&p.1 * Rational::from_integer(l)).to_integer();
    crate::binary_form::normalize_point(x, y).ok_or(WsError::Form(FormError::BadPoint))
}

/// Moves `shift` to `[0:1]`, lets `diag(t^r, t^{−r})` act on `(u, v)` and
/// returns `min_k w_k / q_k` over the nonzero coordinates, where `w_k` is
/// the weight of the k-th coefficient and `q_k ∈ {2, 3}` its grading in
/// ℙ(2⁹, 3¹³). Dividing by the grading removes the 𝔾_m ambiguity
/// `(A, B) ~ (t⁴A, t⁶B)`.
pub fn hm_weight_ws(p: &WeierstrassPair, r: i64, shift: &(Rational, Rational)) -> Result<Rational, WsError> {
    if r < 0 {
        return Err(WsError::NegativeWeight(r));
    }
    if p.is_zero() {
        return Err(WsError::ZeroPair);
    }
    let g = sl2_moving_to(&coprime_point(shift)?);
    let moved = p.act(g, &Rational::one());
    let mut best: Option<Rational> = None;
    for (f, grade) in [(&moved.a, 2), (&moved.b, 3)] {
        let d = f.degree() as i64;
        for (k, c) in f.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // u^{d−k} v^k has weight r(d−k) − rk
            let w = Rational::new((r * (d - 2 * k as i64)).into(), BigInt::from(grade));
            best = Some(match best {
                Some(b) if b <= w => b,
                _ => w,
            });
        }
    }
    Ok(best.expect("nonzero pair"))
}
