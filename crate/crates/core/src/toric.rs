//! Lattice cones of rank ≤ 3, 2D lattice polygons, invariant sublattices of
//! cyclic quotients, and Altmann's versal base for toric Gorenstein
//! threefold singularities.

use std::collections::BTreeSet;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::multipoly::{MultiPoly, Var};
use crate::rational::{serde_q, Rational};

type QMultiPoly = MultiPoly<Rational>;

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum ToricError {
    #[error("only ranks 2 and 3 are supported, got {0}")]
    Rank(usize),
    #[error("vectors of different lengths: {0}")]
    RankMismatch(String),
    #[error("zero generator")]
    ZeroGenerator,
    #[error("cone is not full-dimensional")]
    NotFullDimensional,
    #[error("cone contains a line")]
    NotStronglyConvex,
    #[error("slice is unbounded along the ray ({0}, {1})")]
    Unbounded(String, String),
    #[error("slice is empty")]
    Empty,
    #[error("slice has a non-lattice vertex ({0}, {1})")]
    NotLattice(String, String),
    #[error("degenerate polygon: {0}")]
    Degenerate(String),
    #[error("vertices are not in strictly convex counterclockwise position")]
    NotConvex,
    #[error("modulus must be at least 1, got {0}")]
    Modulus(i64),
    #[error("{0}")]
    Character(String),
    #[error("verification degree K must be at least 1")]
    KZero,
    #[error("higher-degree obstruction at degree {k}: g_{k},{component} reduces to {residue}")]
    Obstruction { k: u32, component: String, residue: String },
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn cross(a: &[i64], b: &[i64]) -> [i64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn primitive(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0i64, |g, x| g.gcd(x));
    if g == 0 {
        v.to_vec()
    } else {
        v.iter().map(|x| x / g).collect()
    }
}

/// Rank of a list of integer vectors, by exact elimination.
pub fn rank(vs: &[Vec<i64>]) -> usize {
    let mut rows: Vec<Vec<Rational>> = vs.iter().map(|v| v.iter().map(|&x| q(x)).collect()).collect();
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = &rows[i][c] / &rows[r][c];
                for k in 0..cols {
                    let d = &f * &rows[r][k];
                    rows[i][k] -= d;
                }
            }
        }
        r += 1;
    }
    r
}

/// A rational polyhedral cone given by its primitive extremal generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cone {
    pub generators: Vec<Vec<i64>>,
}

impl<'de> Deserialize<'de> for Cone {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            generators: Vec<Vec<i64>>,
        }
        Cone::new(Raw::deserialize(d)?.generators).map_err(serde::de::Error::custom)
    }
}

impl Cone {
    /// Normalizes to primitive generators, drops duplicates and non-extremal
    /// rays, and sorts. The cone must be full-dimensional and strongly convex.
    pub fn new(generators: Vec<Vec<i64>>) -> Result<Self, ToricError> {
        let n = generators.first().map_or(0, Vec::len);
        if !(2..=3).contains(&n) {
            return Err(ToricError::Rank(n));
        }
        if let Some(g) = generators.iter().find(|g| g.len() != n) {
            return Err(ToricError::RankMismatch(format!("{g:?} in rank {n}")));
        }
        if generators.iter().any(|g| g.iter().all(|x| *x == 0)) {
            return Err(ToricError::ZeroGenerator);
        }
        let gens: BTreeSet<Vec<i64>> = generators.iter().map(|g| primitive(g)).collect();
        let gens: Vec<Vec<i64>> = gens.into_iter().collect();
        if rank(&gens) < n {
            return Err(ToricError::NotFullDimensional);
        }
        let normals = facet_normals(&gens);
        if rank(&normals) < n {
            return Err(ToricError::NotStronglyConvex);
        }
        let extremal = gens
            .into_iter()
            .filter(|g| {
                let on: Vec<Vec<i64>> = normals.iter().filter(|m| dot(m, g) == 0).cloned().collect();
                rank(&on) == n - 1
            })
            .collect();
        Ok(Cone { generators: extremal })
    }

    pub fn rank(&self) -> usize {
        self.generators[0].len()
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        facet_normals(&self.generators).iter().all(|m| dot(m, v) >= 0)
    }
}

/// Primitive inner normals of the facets of a full-dimensional cone.
fn facet_normals(gens: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = gens[0].len();
    let mut cands: Vec<Vec<i64>> = Vec::new();
    if n == 2 {
        for g in gens {
            cands.push(vec![-g[1], g[0]]);
        }
    } else {
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                cands.push(cross(a, b).to_vec());
            }
        }
    }
    let mut out = BTreeSet::new();
    for c in cands {
        if c.iter().all(|x| *x == 0) {
            continue;
        }
        for s in [1, -1] {
            let m: Vec<i64> = c.iter().map(|x| s * x).collect();
            if gens.iter().all(|g| dot(&m, g) >= 0) {
                out.insert(primitive(&m));
            }
        }
    }
    out.into_iter().collect()
}

/// `σ^∨`: its extremal rays are the facet normals of `σ`.
pub fn dual_cone(c: &Cone) -> Result<Cone, ToricError> {
    Cone::new(facet_normals(&c.generators))
}

// ---------------------------------------------------------------------------
// lattices

/// Row-style Hermite normal form of the lattice spanned by `rows`: upper
/// triangular, positive pivots, entries above a pivot reduced into
/// `[0, pivot)`. Zero rows are dropped.
pub fn hnf(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<i64>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        // Euclid on column c among rows r..
        loop {
            let nz: Vec<usize> = (r..m.len()).filter(|&i| m[i][c] != 0).collect();
            if nz.len() <= 1 {
                if let Some(&p) = nz.first() {
                    m.swap(r, p);
                }
                break;
            }
            let p = *nz.iter().min_by_key(|&&i| m[i][c].abs()).unwrap();
            m.swap(r, p);
            for i in r + 1..m.len() {
                let f = Integer::div_floor(&m[i][c], &m[r][c]);
                if f != 0 {
                    for k in 0..cols {
                        m[i][k] -= f * m[r][k];
                    }
                }
            }
        }
        if r < m.len() && m[r][c] != 0 {
            if m[r][c] < 0 {
                m[r].iter_mut().for_each(|x| *x = -*x);
            }
            for i in 0..r {
                let f = Integer::div_floor(&m[i][c], &m[r][c]);
                if f != 0 {
                    for k in 0..cols {
                        m[i][k] -= f * m[r][k];
                    }
                }
            }
            r += 1;
        }
    }
    m.truncate(r);
    m
}

fn det3(m: &[Vec<i64>]) -> i64 {
    match m.len() {
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        3 => dot(&m[0], &cross(&m[1], &m[2])),
        _ => unreachable!("rank ≤ 3"),
    }
}

/// Index of a full-rank sublattice of `ℤ^r` (r ≤ 3) given by a basis.
pub fn lattice_index(basis: &[Vec<i64>]) -> i64 {
    det3(basis).abs()
}

/// Whether two bases span the same lattice.
pub fn same_lattice(a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    hnf(a) == hnf(b)
}

/// Basis (in Hermite normal form) of `{m ∈ ℤ^r : w·m ≡ 0 mod n}`.
pub fn invariant_sublattice(weights: &[i64], n: i64) -> Result<Vec<Vec<i64>>, ToricError> {
    if n < 1 {
        return Err(ToricError::Modulus(n));
    }
    let r = weights.len();
    let w: Vec<i64> = weights.iter().map(|x| x.mod_floor(&n)).collect();
    // m ∈ L iff (m, k) lies in the integer kernel of the row (w | n) for some
    // k. Column-reduce the row to (g, 0, …, 0) with a unimodular U; the
    // other columns of U span that kernel, and projecting drops k.
    let mut row: Vec<i64> = w.iter().copied().chain([n]).collect();
    let mut u: Vec<Vec<i64>> = (0..=r).map(|i| (0..=r).map(|j| i64::from(i == j)).collect()).collect();
    loop {
        let nz: Vec<usize> = (0..=r).filter(|&j| row[j] != 0).collect();
        if nz.len() <= 1 {
            break;
        }
        let p = *nz.iter().min_by_key(|&&j| row[j].abs()).unwrap();
        for &j in &nz {
            if j != p {
                let f = Integer::div_floor(&row[j], &row[p]);
                row[j] -= f * row[p];
                for col in u.iter_mut() {
                    col[j] -= f * col[p];
                }
            }
        }
    }
    let pivot = (0..=r).find(|&j| row[j] != 0).expect("n ≥ 1 keeps the row nonzero");
    let gens: Vec<Vec<i64>> = (0..=r).filter(|&j| j != pivot).map(|j| (0..r).map(|i| u[i][j]).collect()).collect();
    let basis = hnf(&gens);
    debug_assert!(basis.iter().all(|b| dot(b, &w).mod_floor(&n) == 0));
    Ok(basis)
}

/// Characters of a cyclic group acting on a toric variety are given on the
/// semigroup generators; this recovers the character `χ` on the whole
/// lattice with `χ·gᵢ ≡ wᵢ (mod n)`. Searches `(ℤ/n)^r`, so `n` must be small.
pub fn lattice_character(gens: &[Vec<i64>], weights: &[i64], n: i64) -> Result<Vec<i64>, ToricError> {
    if n < 1 {
        return Err(ToricError::Modulus(n));
    }
    if gens.len() != weights.len() {
        return Err(ToricError::RankMismatch("one weight per generator".into()));
    }
    let r = gens.first().map_or(0, Vec::len);
    if n.checked_pow(r as u32).map_or(true, |s| s > 1_000_000) {
        return Err(ToricError::Character(format!("search space n^r = {n}^{r} too large")));
    }
    let mut found = Vec::new();
    let total = n.pow(r as u32);
    for idx in 0..total {
        let chi: Vec<i64> = (0..r).map(|k| (idx / n.pow(k as u32)) % n).collect();
        if gens.iter().zip(weights).all(|(g, w)| (dot(&chi, g) - w).mod_floor(&n) == 0) {
            found.push(chi);
        }
    }
    match found.len() {
        1 => Ok(found.pop().unwrap()),
        0 => Err(ToricError::Character("no lattice character matches the weights".into())),
        k => Err(ToricError::Character(format!("{k} lattice characters match; generators do not span mod n"))),
    }
}

// ---------------------------------------------------------------------------
// polygons

/// A convex lattice polygon with counterclockwise vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Polytope2D {
    pub vertices: Vec<[i64; 2]>,
}

impl<'de> Deserialize<'de> for Polytope2D {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            vertices: Vec<[i64; 2]>,
        }
        Polytope2D::new(Raw::deserialize(d)?.vertices).map_err(serde::de::Error::custom)
    }
}

fn turn(a: [i64; 2], b: [i64; 2], c: [i64; 2]) -> i64 {
    (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
}

impl Polytope2D {
    /// Requires at least three vertices in strictly convex counterclockwise
    /// position: every other vertex lies strictly left of every edge.
    pub fn new(vertices: Vec<[i64; 2]>) -> Result<Self, ToricError> {
        let n = vertices.len();
        if n < 3 {
            return Err(ToricError::Degenerate(format!("{n} vertices")));
        }
        for i in 0..n {
            let (a, b) = (vertices[i], vertices[(i + 1) % n]);
            for (k, &c) in vertices.iter().enumerate() {
                if k != i && k != (i + 1) % n && turn(a, b, c) <= 0 {
                    return Err(ToricError::NotConvex);
                }
            }
        }
        Ok(Polytope2D { vertices })
    }

    /// The same polygon listed counterclockwise from vertex `k`.
    pub fn rotated(&self, k: usize) -> Self {
        let n = self.vertices.len();
        Polytope2D { vertices: (0..n).map(|i| self.vertices[(i + k) % n]).collect() }
    }

    /// Counterclockwise edge vectors starting at the origin when it is a
    /// vertex, else at the lexicographically smallest vertex.
    pub fn edges(&self) -> Vec<[i64; 2]> {
        let start = self
            .vertices
            .iter()
            .position(|v| *v == [0, 0])
            .unwrap_or_else(|| (0..self.vertices.len()).min_by_key(|&i| self.vertices[i]).unwrap());
        let p = self.rotated(start);
        let n = p.vertices.len();
        (0..n)
            .map(|i| {
                let (a, b) = (p.vertices[i], p.vertices[(i + 1) % n]);
                [b[0] - a[0], b[1] - a[1]]
            })
            .collect()
    }
}

/// Rational half-plane `α·a + β·b + γ ≥ 0`.
type HalfPlane = (Rational, Rational, Rational);

fn feasible(h: &[HalfPlane], p: &(Rational, Rational)) -> bool {
    h.iter().all(|(a, b, c)| a * &p.0 + b * &p.1 + c >= Rational::zero())
}

/// `Q = {(a, b) : a·v₁ + b·v₂ + v₃ ∈ σ}` for a rank-3 cone `σ`.
pub fn polytope_slice(sigma: &Cone, basis: &[Vec<Rational>; 3]) -> Result<Polytope2D, ToricError> {
    if sigma.rank() != 3 || basis.iter().any(|v| v.len() != 3) {
        return Err(ToricError::Rank(sigma.rank()));
    }
    let qdot = |m: &[i64], v: &[Rational]| m.iter().zip(v).fold(Rational::zero(), |s, (x, y)| s + q(*x) * y);
    let h: Vec<HalfPlane> = facet_normals(&sigma.generators)
        .iter()
        .map(|m| (qdot(m, &basis[0]), qdot(m, &basis[1]), qdot(m, &basis[2])))
        .collect();

    // Recession directions: a nonzero recession cone has a ray on some
    // boundary line, or is everything (covered by the axes).
    let zero = Rational::zero();
    let mut dirs: Vec<(Rational, Rational)> = vec![(q(1), zero.clone()), (zero.clone(), q(1))];
    dirs.extend(h.iter().map(|(a, b, _)| (-b.clone(), a.clone())));
    for d in dirs.iter().flat_map(|d| [d.clone(), (-d.0.clone(), -d.1.clone())]) {
        if (d.0.is_zero() && d.1.is_zero()) || !h.iter().all(|(a, b, _)| a * &d.0 + b * &d.1 >= zero) {
            continue;
        }
        return Err(ToricError::Unbounded(d.0.to_string(), d.1.to_string()));
    }

    let mut pts: BTreeSet<(Rational, Rational)> = BTreeSet::new();
    for (i, (a1, b1, c1)) in h.iter().enumerate() {
        for (a2, b2, c2) in &h[i + 1..] {
            let det = a1 * b2 - a2 * b1;
            if det.is_zero() {
                continue;
            }
            let p = ((b1 * c2 - b2 * c1) / &det, (a2 * c1 - a1 * c2) / &det);
            if feasible(&h, &p) {
                pts.insert(p);
            }
        }
    }
    if pts.is_empty() {
        return Err(ToricError::Empty);
    }
    let hull = convex_hull(pts.into_iter().collect());
    let mut verts = Vec::with_capacity(hull.len());
    for (x, y) in hull {
        if !x.is_integer() || !y.is_integer() {
            return Err(ToricError::NotLattice(x.to_string(), y.to_string()));
        }
        let to_i = |r: &Rational| -> i64 { r.to_integer().try_into().expect("small coordinates") };
        verts.push([to_i(&x), to_i(&y)]);
    }
    // Start at the origin if present, else at the lexicographic minimum.
    let start = verts.iter().position(|v| *v == [0, 0]).unwrap_or(0);
    verts.rotate_left(start);
    Polytope2D::new(verts)
}

/// Andrew's monotone chain over exact rationals; counterclockwise, starting
/// at the lexicographically smallest point, collinear points dropped.
fn convex_hull(mut pts: Vec<(Rational, Rational)>) -> Vec<(Rational, Rational)> {
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let cr = |o: &(Rational, Rational), a: &(Rational, Rational), b: &(Rational, Rational)| {
        (&a.0 - &o.0) * (&b.1 - &o.1) - (&a.1 - &o.1) * (&b.0 - &o.0)
    };
    let mut lower: Vec<(Rational, Rational)> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && !cr(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive() {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<(Rational, Rational)> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && !cr(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive() {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

// ---------------------------------------------------------------------------
// versal base

pub const DEFAULT_VERIFY_DEGREE: u32 = 12;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VersalReport {
    pub edges: Vec<[i64; 2]>,
    /// Reduced row echelon basis of the span of `g_{1,x}`, `g_{1,y}`, as
    /// coefficient vectors in `t₁ … t_N`.
    pub linear_relations: Vec<Vec<String>>,
    /// The same relations written out, e.g. `t1 - t3`.
    pub relations_display: Vec<String>,
    pub verified_degree: u32,
    pub base_dimension: i64,
}

fn t_vars(n: usize) -> Vec<Var> {
    (1..=n).map(|i| Var::new(format!("t{i}"), 1)).collect()
}

/// Reduced row echelon form; returns the nonzero rows and pivot columns.
fn rref(mut m: Vec<Vec<Rational>>) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = Rational::one() / &m[r][c];
        m[r].iter_mut().for_each(|x| *x *= &inv);
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for k in 0..cols {
                    let d = &f * &m[r][k];
                    m[i][k] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

fn linear_form(vars: &[Var], coeffs: &[Rational]) -> QMultiPoly {
    coeffs
        .iter()
        .enumerate()
        .fold(MultiPoly::zero(vars.to_vec()).unwrap(), |acc, (i, c)| &acc + &MultiPoly::var(vars, i).scale(c))
}

/// `g_k(t) = Σ t_i^k d^i`; the k = 1 relations are solved for their pivot
/// variables and substituted into every `g_k`, `k ≤ K`, which must then
/// vanish identically.
pub fn versal_base(poly: &Polytope2D, k_max: u32) -> Result<VersalReport, ToricError> {
    if k_max == 0 {
        return Err(ToricError::KZero);
    }
    let edges = poly.edges();
    let n = edges.len();
    let vars = t_vars(n);
    let rows: Vec<Vec<Rational>> = (0..2).map(|c| edges.iter().map(|d| q(d[c])).collect()).collect();
    let (rels, pivots) = rref(rows);

    // pivot variable ↦ −(rest of its row)
    let mut subs = Vec::new();
    for (row, &p) in rels.iter().zip(&pivots) {
        let mut rest: Vec<Rational> = row.iter().map(|x| -x).collect();
        rest[p] = Rational::zero();
        subs.push((p, linear_form(&vars, &rest)));
    }
    for k in 1..=k_max {
        for (c, name) in [(0, "x"), (1, "y")] {
            let mut g = MultiPoly::zero(vars.clone()).unwrap();
            for (i, d) in edges.iter().enumerate() {
                g = &g + &MultiPoly::var(&vars, i).pow(k).scale(&q(d[c]));
            }
            for (p, s) in &subs {
                g = g.substitute(*p, s);
            }
            if !g.is_zero() {
                return Err(ToricError::Obstruction { k, component: name.into(), residue: g.to_string() });
            }
        }
    }
    let display = rels.iter().map(|r| linear_form(&vars, r).to_string()).collect();
    Ok(VersalReport {
        edges,
        linear_relations: rels.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect(),
        relations_display: display,
        verified_degree: k_max,
        base_dimension: n as i64 - rels.len() as i64 - 1,
    })
}

/// Input for `polytope_slice` in JSON form.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SliceInput {
    pub cone: Cone,
    #[serde(with = "basis_serde")]
    pub basis: [Vec<Rational>; 3],
}

mod basis_serde {
    use super::*;
    use serde::{Deserializer, Serializer};

    #[derive(Serialize, Deserialize)]
    struct V(#[serde(with = "serde_q::vec")] Vec<Rational>);

    pub fn serialize<S: Serializer>(b: &[Vec<Rational>; 3], s: S) -> Result<S::Ok, S::Error> {
        b.iter().map(|v| V(v.clone())).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<[Vec<Rational>; 3], D::Error> {
        let v: Vec<V> = Vec::deserialize(d)?;
        let v: Vec<Vec<Rational>> = v.into_iter().map(|x| x.0).collect();
        v.try_into().map_err(|_| serde::de::Error::custom("basis needs exactly three vectors"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn cone(g: &[[i64; 3]]) -> Cone {
        Cone::new(g.iter().map(|v| v.to_vec()).collect()).unwrap()
    }

    fn sorted(c: &Cone) -> Vec<Vec<i64>> {
        let mut g = c.generators.clone();
        g.sort();
        g
    }

    #[test]
    fn quadric_cone_duality() {
        let omega = cone(&[[0, 0, 1], [1, 1, 1], [1, 0, 1], [0, 1, 1]]);
        let sigma = dual_cone(&omega).unwrap();
        let mut want = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, -1, 1], vec![-1, 0, 1]];
        want.sort();
        assert_eq!(sorted(&sigma), want);
        assert_eq!(sorted(&dual_cone(&sigma).unwrap()), sorted(&omega));
        let oct = cone(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]]);
        assert_eq!(sorted(&dual_cone(&oct).unwrap()), sorted(&oct));
    }

    #[test]
    fn cone_validation() {
        assert_eq!(Cone::new(vec![vec![1, 0, 0], vec![0, 1, 0]]), Err(ToricError::NotFullDimensional));
        let half = vec![vec![1, 0, 0], vec![-1, 0, 0], vec![0, 1, 0], vec![0, -1, 0], vec![0, 0, 1]];
        assert_eq!(Cone::new(half), Err(ToricError::NotStronglyConvex));
        // non-primitive and interior generators are normalized away
        let c = Cone::new(vec![vec![2, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 1]]).unwrap();
        assert_eq!(c.generators.len(), 3);
        assert!(c.generators.contains(&vec![1, 0, 0]));
        let c2 = Cone::new(vec![vec![1, 0], vec![1, 2]]).unwrap();
        assert_eq!(sorted(&dual_cone(&c2).unwrap()), vec![vec![0, 1], vec![2, -1]]);
    }

    #[test]
    fn mu3_sublattice() {
        let gens = vec![vec![0, 0, 1], vec![1, 1, 1], vec![1, 0, 1], vec![0, 1, 1]];
        let chi = lattice_character(&gens, &[1, 2, 2, 1], 3).unwrap();
        assert_eq!(chi, vec![1, 0, 1]);
        let m = invariant_sublattice(&chi, 3).unwrap();
        assert_eq!(m, vec![vec![1, 0, 2], vec![0, 1, 0], vec![0, 0, 3]]);
        assert_eq!(lattice_index(&m), 3);
        assert_eq!(invariant_sublattice(&[1, 0, 0], 2).unwrap(), vec![vec![2, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(invariant_sublattice(&[5, 7, 9], 1).unwrap(), vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert!(invariant_sublattice(&[1], 0).is_err());
    }

    #[test]
    fn slice_of_sigma() {
        let sigma = cone(&[[1, 0, 0], [0, 1, 0], [0, -1, 1], [-1, 0, 1]]);
        let basis = [vec![rat(1, 1), rat(-1, 1), rat(0, 1)], vec![rat(-2, 3), rat(0, 1), rat(1, 3)], vec![rat(0, 1), rat(1, 1), rat(0, 1)]];
        let qp = polytope_slice(&sigma, &basis).unwrap();
        assert_eq!(qp.vertices, vec![[0, 0], [1, 0], [2, 3], [1, 3]]);

        let oct = cone(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]]);
        let std = [vec![rat(1, 1), rat(0, 1), rat(0, 1)], vec![rat(0, 1), rat(1, 1), rat(0, 1)], vec![rat(0, 1), rat(0, 1), rat(1, 1)]];
        assert!(matches!(polytope_slice(&oct, &std), Err(ToricError::Unbounded(..))));
        let sq = cone(&[[0, 0, 1], [1, 0, 1], [1, 1, 1], [0, 1, 1]]);
        assert_eq!(polytope_slice(&sq, &std).unwrap().vertices, vec![[0, 0], [1, 0], [1, 1], [0, 1]]);
    }

    #[test]
    fn versal_examples() {
        let qp = Polytope2D::new(vec![[0, 0], [1, 0], [2, 3], [1, 3]]).unwrap();
        let r = versal_base(&qp, 12).unwrap();
        assert_eq!(r.edges, vec![[1, 0], [1, 3], [-1, 0], [-1, -3]]);
        assert_eq!(r.relations_display, vec!["t1 - t3", "t2 - t4"]);
        assert_eq!(r.base_dimension, 1);
        let tri = Polytope2D::new(vec![[0, 0], [1, 0], [0, 1]]).unwrap();
        assert_eq!(versal_base(&tri, 12).unwrap().base_dimension, 0);
        let sq = Polytope2D::new(vec![[0, 0], [1, 0], [1, 1], [0, 1]]).unwrap();
        assert_eq!(versal_base(&sq, 12).unwrap().base_dimension, 1);
        // the hexagon's k = 1 relations do not kill g₂
        let hex = Polytope2D::new(vec![[0, 0], [1, 0], [2, 1], [2, 2], [1, 2], [0, 1]]).unwrap();
        assert!(matches!(versal_base(&hex, 12), Err(ToricError::Obstruction { k: 2, .. })));
        assert!(versal_base(&sq, 0).is_err());
    }

    #[test]
    fn polygon_validation() {
        assert_eq!(Polytope2D::new(vec![[0, 0], [0, 1], [1, 0]]), Err(ToricError::NotConvex));
        assert!(Polytope2D::new(vec![[0, 0], [1, 0]]).is_err());
        assert_eq!(Polytope2D::new(vec![[0, 0], [1, 0], [2, 0], [1, 1]]), Err(ToricError::NotConvex));
    }
}
