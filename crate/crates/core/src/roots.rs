//! Exact real-root bookkeeping for univariate polynomials over ℚ.
//!
//! Rational roots come from the classical candidate list (±p/q with p | a₀,
//! q | aₙ). Whatever is left has no rational roots, so it never vanishes at a
//! rational point; that makes Sturm-sequence bisection on rational midpoints
//! safe, which is how irrational roots get isolated.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::Poly;
use crate::rational::{divisors, Rational};

pub type QPoly = Poly<Rational>;

/// Integer coefficients with content 1 and the same roots.
pub fn primitive_integer_coeffs(p: &QPoly) -> Vec<BigInt> {
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|c| c / &g).collect()
}

/// Distinct rational roots in increasing order. The zero polynomial has none
/// by convention (callers treat it separately).
pub fn rational_roots(p: &QPoly) -> Vec<Rational> {
    if p.degree().unwrap_or(0) == 0 {
        return vec![];
    }
    let mut roots = Vec::new();
    let mut q = p.clone();
    if q.coeff(0).is_zero() {
        roots.push(Rational::zero());
        while q.coeff(0).is_zero() {
            q = Poly::new(q.coeffs()[1..].to_vec());
        }
    }
    if q.degree().unwrap_or(0) > 0 {
        let ints = primitive_integer_coeffs(&q);
        let a0 = ints.first().expect("nonzero").clone();
        let an = ints.last().expect("nonzero").clone();
        for num in divisors(&a0) {
            for den in divisors(&an) {
                for s in [num.clone(), -num.clone()] {
                    let r = Rational::new(s, den.clone());
                    if !roots.contains(&r) && q.eval(&r).is_zero() {
                        roots.push(r);
                    }
                }
            }
        }
    }
    roots.sort();
    roots
}

/// Multiplicity of `r` as a root of `p` (zero if it is not a root).
pub fn root_multiplicity(p: &QPoly, r: &Rational) -> usize {
    let lin = Poly::linear(-r.clone(), Rational::one());
    let mut q = p.clone();
    let mut m = 0;
    while !q.is_zero() {
        let (quot, rem) = q.div_rem(&lin);
        if !rem.is_zero() {
            break;
        }
        q = quot;
        m += 1;
    }
    m
}

/// `p` with every rational root divided out (all multiplicities).
pub fn deflate_rational_roots(p: &QPoly) -> QPoly {
    let mut q = p.clone();
    for r in rational_roots(p) {
        let lin = Poly::linear(-r.clone(), Rational::one());
        for _ in 0..root_multiplicity(p, &r) {
            q = q.div_rem(&lin).0;
        }
    }
    q
}

/// Square-free part `p / gcd(p, p')`.
pub fn square_free(p: &QPoly) -> QPoly {
    let g = p.gcd(&p.derivative());
    if g.degree().unwrap_or(0) == 0 {
        return p.clone();
    }
    p.div_rem(&g).0
}

fn sturm_sequence(p: &QPoly) -> Vec<QPoly> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(-&r);
    }
    seq
}

fn sign_changes(seq: &[QPoly], x: &Rational) -> usize {
    let signs: Vec<i8> = seq.iter().map(|q| q.sign_at(x)).filter(|&s| s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// An open interval `(lo, hi)` containing exactly one real root of `poly`.
#[derive(Clone, Debug, PartialEq)]
pub struct IsolatingInterval {
    pub lo: Rational,
    pub hi: Rational,
    pub poly: QPoly,
}

/// Isolates the real roots of `p` in the open interval `(lo, hi)`.
///
/// Requires that `p` has no rational roots (deflate first); then `p` never
/// vanishes at the rational bisection points and Sturm counts are exact.
pub fn isolate_irrational_roots(p: &QPoly, lo: &Rational, hi: &Rational) -> Vec<IsolatingInterval> {
    let sf = square_free(p);
    if sf.degree().unwrap_or(0) == 0 {
        return vec![];
    }
    debug_assert!(rational_roots(&sf).is_empty(), "deflate rational roots first");
    let seq = sturm_sequence(&sf);
    let count = |a: &Rational, b: &Rational| sign_changes(&seq, a) - sign_changes(&seq, b);
    let mut out = Vec::new();
    let mut stack = vec![(lo.clone(), hi.clone())];
    let two = Rational::from_integer(2.into());
    while let Some((a, b)) = stack.pop() {
        match count(&a, &b) {
            0 => {}
            1 => out.push(IsolatingInterval { lo: a, hi: b, poly: sf.clone() }),
            _ => {
                let m = (&a + &b) / &two;
                stack.push((m.clone(), b));
                stack.push((a, m));
            }
        }
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    out
}

impl IsolatingInterval {
    /// Halves the interval, keeping the half with the root.
    pub fn bisect(&self) -> IsolatingInterval {
        let m = (&self.lo + &self.hi) / Rational::from_integer(2.into());
        let (sl, sm) = (self.poly.sign_at(&self.lo), self.poly.sign_at(&m));
        if sl != sm {
            IsolatingInterval { lo: self.lo.clone(), hi: m, poly: self.poly.clone() }
        } else {
            IsolatingInterval { lo: m, hi: self.hi.clone(), poly: self.poly.clone() }
        }
    }

    /// True if the root is strictly below `r` (`r` is never a root here).
    pub fn root_below(&self, r: &Rational) -> bool {
        let mut iv = self.clone();
        loop {
            if &iv.hi <= r {
                return true;
            }
            if &iv.lo >= r {
                return false;
            }
            iv = iv.bisect();
        }
    }
}

/// Sign of the leading coefficient, used by callers that need the behaviour
/// of a polynomial at +∞.
pub fn sign_at_infinity(p: &QPoly) -> i8 {
    match p.leading() {
        None => 0,
        Some(l) if l.is_positive() => 1,
        Some(_) => -1,
    }
}
