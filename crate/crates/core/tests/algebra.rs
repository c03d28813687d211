use std::collections::BTreeMap;

use kmoduli_core::binary_form::{BinaryForm, QBinaryForm};
use kmoduli_core::git_hm::p11112_vars;
use kmoduli_core::kstability::{IntersectionRing3, ProfileBundle};
use kmoduli_core::multipoly::MultiPoly;
use kmoduli_core::{int, rat, PiecewisePoly, Poly, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use proptest::prelude::*;

type QPoly = Poly<Rational>;

fn q() -> impl Strategy<Value = Rational> {
    (-60i64..60, 1i64..25).prop_map(|(n, d)| rat(n, d))
}

fn nonzero_q() -> impl Strategy<Value = Rational> {
    q().prop_filter("nonzero", |x| !x.is_zero())
}

/// Exponent vectors over x0..x3 (weight 1) and z (weight 2) of weighted degree d.
fn monomials(d: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for e4 in 0..=d / 2 {
        let rest = d - 2 * e4;
        for e0 in 0..=rest {
            for e1 in 0..=rest - e0 {
                for e2 in 0..=rest - e0 - e1 {
                    out.push(vec![e0, e1, e2, rest - e0 - e1 - e2, e4]);
                }
            }
        }
    }
    out
}

fn homogeneous(d: u32) -> impl Strategy<Value = MultiPoly<Rational>> {
    let ms = monomials(d);
    let n = ms.len();
    proptest::collection::vec((0..n, nonzero_q()), 1..5).prop_map(move |picks| {
        let mut f = MultiPoly::zero(p11112_vars()).unwrap();
        for (k, c) in picks {
            f = &f + &MultiPoly::term(&p11112_vars(), ms[k].clone(), c).unwrap();
        }
        f
    })
}

/// Simpson's rule is exact on cubics; used as an independent integrator.
fn simpson(p: &QPoly, a: &Rational, b: &Rational) -> Rational {
    let m = (a + b) / int(2);
    (b - a) / int(6) * (p.eval(a) + int(4) * p.eval(&m) + p.eval(b))
}

fn e0_volume() -> PiecewisePoly<Rational> {
    ProfileBundle::embedded().profile("E0_twisted_cubic").unwrap().vol.clone()
}

#[test]
fn twisted_cubic_volume_integral() {
    let vol = e0_volume();
    assert_eq!(vol.integrate(), rat(11, 16));
    let bp = vol.breakpoints();
    let oracle = vol.pieces().iter().enumerate().fold(Rational::zero(), |acc, (i, p)| {
        assert!(p.degree().unwrap_or(0) <= 3);
        acc + simpson(p, &bp[i], &bp[i + 1])
    });
    assert_eq!(oracle, rat(11, 16));
}

#[test]
fn nef_piece_is_the_cube_of_the_class() {
    let b = ProfileBundle::embedded();
    let nc = b.profile("E0_twisted_cubic").unwrap().nef_check.clone().unwrap();
    let cube = nc.ring.expand_cube(&nc.class).unwrap();
    assert_eq!(cube, Poly::new(vec![int(1), int(0), rat(-3, 2), rat(2, 3)]));
    // by hand: (a·H + b·T)³ with H³ = 1, H²T = 4, HT² = −2, T³ = −8
    let a = Poly::new(vec![int(1), rat(-2, 3)]);
    let bt = Poly::new(vec![int(0), rat(1, 6)]);
    let a2 = &a * &a;
    let b2 = &bt * &bt;
    let hand = &(&(&(&a2 * &a) + &(&a2 * &bt).scale(&int(12))) + &(&a * &b2).scale(&int(-6))) + &(&b2 * &bt).scale(&int(-8));
    assert_eq!(hand, cube);
}

fn ring(values: &[Rational]) -> IntersectionRing3 {
    let names = ["D0", "D1", "D2"];
    let mut prods = Vec::new();
    let mut k = 0;
    for i in 0..3 {
        for j in i..3 {
            for l in j..3 {
                prods.push(([names[i].to_string(), names[j].to_string(), names[l].to_string()], values[k].clone()));
                k += 1;
            }
        }
    }
    IntersectionRing3::new(names.iter().map(|s| s.to_string()).collect(), prods).unwrap()
}

fn consts(v: &[Rational]) -> Vec<QPoly> {
    v.iter().map(|c| Poly::new(vec![c.clone()])).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rationals_form_a_field(a in q(), b in nonzero_q(), c in q()) {
        prop_assert_eq!(&(&a / &b) * &b, a.clone());
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&(&b * (int(1) / &b)), &int(1));
    }

    #[test]
    fn weighted_degree_is_additive((d1, d2, f, g) in (1u32..4, 1u32..4).prop_flat_map(|(a, b)| (Just(a), Just(b), homogeneous(a), homogeneous(b)))) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        prop_assert_eq!(f.weighted_degree().unwrap(), (d1 as u64, true));
        prop_assert_eq!(g.weighted_degree().unwrap(), (d2 as u64, true));
        prop_assert_eq!((&f * &g).weighted_degree().unwrap(), ((d1 + d2) as u64, true));
    }

    #[test]
    fn refinement_keeps_the_integral(split in 1i64..99, piece in 0usize..2) {
        let vol = e0_volume();
        let bp = vol.breakpoints().to_vec();
        let t = &bp[piece] + (&bp[piece + 1] - &bp[piece]) * rat(split, 100);
        let fine = vol.refine_at(t).unwrap();
        prop_assert_eq!(fine.breakpoints().len(), bp.len() + 1);
        prop_assert_eq!(fine.integrate(), vol.integrate());
    }

    #[test]
    fn refinement_of_random_cubics(cs in proptest::collection::vec(q(), 1..5), a in q(), len in 1i64..10, split in 1i64..20) {
        let p = Poly::new(cs);
        let b = &a + int(len);
        let f = PiecewisePoly::single(a.clone(), b.clone(), p.clone()).unwrap();
        let t = &a + rat(len * split, 20);
        prop_assume!(t < b);
        let fine = f.refine_at(t).unwrap();
        prop_assert_eq!(fine.integrate(), f.integrate());
        prop_assert_eq!(f.integrate(), simpson(&p, &a, &b));
    }

    #[test]
    fn orders_sum_to_at_most_the_degree(cs in proptest::collection::vec(-6i64..6, 2..8)) {
        let f: QBinaryForm = BinaryForm::new(cs.into_iter().map(int).collect()).unwrap();
        prop_assume!(!f.is_zero());
        let pts = f.rational_points().unwrap();
        let total: usize = pts.iter().map(|(_, m)| m).sum();
        prop_assert!(total <= f.degree());
        for (p, m) in &pts {
            prop_assert_eq!(f.ord_at_point(&QBinaryForm::point(p)).unwrap(), *m);
        }
    }

    #[test]
    fn split_forms_have_full_order(points in proptest::collection::vec((-5i64..6, 0i64..4), 1..7), c in nonzero_q()) {
        let mut f: QBinaryForm = BinaryForm::new(vec![c]).unwrap();
        for (p0, p1) in &points {
            prop_assume!(*p0 != 0 || *p1 != 0);
            f = f.mul(&BinaryForm::vanishing_at(&(int(*p0), int(*p1))).unwrap());
        }
        let pts = f.rational_points().unwrap();
        let total: usize = pts.iter().map(|(_, m)| m).sum();
        prop_assert_eq!(total, f.degree());
        // multiplicity at each chosen point is the number of proportional copies
        for (p0, p1) in &points {
            let expected = points.iter().filter(|(a, b)| a * p1 == b * p0).count();
            prop_assert_eq!(f.ord_at_point(&(int(*p0), int(*p1))).unwrap(), expected);
        }
        prop_assert!(pts.iter().all(|((a, b), _)| a.gcd(b) == BigInt::from(1)));
    }

    #[test]
    fn trilinear_and_symmetric(
        vals in proptest::collection::vec(q(), 10),
        x in proptest::collection::vec(q(), 3),
        x2 in proptest::collection::vec(q(), 3),
        y in proptest::collection::vec(q(), 3),
        z in proptest::collection::vec(q(), 3),
        s in q(),
    ) {
        let r = ring(&vals);
        let (x, x2, y, z) = (consts(&x), consts(&x2), consts(&y), consts(&z));
        let sum: Vec<QPoly> = x.iter().zip(&x2).map(|(a, b)| a + &b.scale(&s)).collect();
        let lhs = r.trilinear(&sum, &y, &z);
        let rhs = &r.trilinear(&x, &y, &z) + &r.trilinear(&x2, &y, &z).scale(&s);
        prop_assert_eq!(lhs, rhs);
        let xyz = r.trilinear(&x, &y, &z);
        prop_assert_eq!(&xyz, &r.trilinear(&y, &x, &z));
        prop_assert_eq!(&xyz, &r.trilinear(&z, &y, &x));
        prop_assert_eq!(&xyz, &r.trilinear(&x, &z, &y));
    }

    #[test]
    fn expand_cube_splits_coefficients(vals in proptest::collection::vec(q(), 10), c in proptest::collection::vec(q(), 3), split in proptest::collection::vec(q(), 3)) {
        // (D + E)³ = D³ + 3D²E + 3DE² + E³ where the class is split at random
        let r = ring(&vals);
        let names = ["D0", "D1", "D2"];
        let class: BTreeMap<String, QPoly> = names.iter().zip(&c).map(|(n, v)| (n.to_string(), Poly::new(vec![v.clone()]))).collect();
        let d = consts(&split);
        let e: Vec<QPoly> = c.iter().zip(&split).map(|(a, b)| Poly::new(vec![a - b])).collect();
        let three = int(3);
        let expected = &(&(&r.trilinear(&d, &d, &d) + &r.trilinear(&d, &d, &e).scale(&three)) + &r.trilinear(&d, &e, &e).scale(&three)) + &r.trilinear(&e, &e, &e);
        prop_assert_eq!(r.expand_cube(&class).unwrap(), expected);
    }
}
