use kmoduli_core::git_hm::{
    initial_part, limit_pair, p11112_vars, shah_stratify, Branch, GitError, HighBranch, LowBranch, QMultiPoly, ShahInput, Table1,
};
use kmoduli_core::multipoly::MultiPoly;
use kmoduli_core::{int, rat, Rational};
use num_traits::Zero;
use proptest::prelude::*;

fn x(i: usize) -> QMultiPoly {
    MultiPoly::var(&p11112_vars(), i)
}

fn q_form(a: Rational) -> QMultiPoly {
    &(&(&x(0) * &x(2)) + &(&x(1) * &x(1))) + &(&x(3) * &x(3)).scale(&a)
}

/// Weight of a term, computed without touching the library.
fn weight(e: &[u32], w: &[Rational]) -> Rational {
    e.iter().zip(w).map(|(k, wi)| wi * int(*k as i64)).fold(Rational::zero(), |a, b| a + b)
}

fn max_weight(f: &QMultiPoly, w: &[Rational]) -> Rational {
    f.terms().map(|(e, _)| weight(e, w)).max().unwrap()
}

fn small_q() -> impl Strategy<Value = Rational> {
    (-9i64..10, 1i64..5).prop_map(|(n, d)| rat(n, d))
}

fn poly() -> impl Strategy<Value = QMultiPoly> {
    proptest::collection::vec((proptest::collection::vec(0u32..3, 5), small_q()), 1..6).prop_map(|ts| {
        ts.into_iter().fold(MultiPoly::zero(p11112_vars()).unwrap(), |acc, (e, c)| &acc + &MultiPoly::term(&p11112_vars(), e, c).unwrap())
    })
}

fn weights() -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec((-12i64..13, 1i64..4).prop_map(|(n, d)| rat(n, d)), 5)
}

#[test]
fn initial_part_examples() {
    let w0 = [0, 0, 0, 0, -1].map(int).to_vec();
    let z = x(4);
    let f = &z - &q_form(int(1));
    assert_eq!(initial_part(&f, &w0).unwrap(), (-&q_form(int(1)), int(0)));
    let triv = vec![int(0); 5];
    assert_eq!(initial_part(&f, &triv).unwrap(), (f.clone(), int(0)));
    let w8 = [8, 2, -4, -6, -5].map(int).to_vec();
    let f = &x(0).pow(4) + &x(3).pow(4);
    assert_eq!(weight(&[0, 0, 0, 4, 0], &w8), int(-24));
    assert_eq!(initial_part(&f, &w8).unwrap(), (x(0).pow(4), int(32)));
    assert!(matches!(initial_part(&MultiPoly::zero(p11112_vars()).unwrap(), &w8), Err(GitError::ZeroPolynomial)));
}

#[test]
fn double_quadric_degeneration() {
    let q = q_form(int(1));
    let g = MultiPoly::zero(p11112_vars()).unwrap();
    let l = limit_pair(&q, &g, &[0, 0, 0, 0, -1].map(int)).unwrap();
    assert_eq!(l.q_inf, q);
    assert!(l.z_free);
    assert!(l.g_inf.is_zero());
    assert_eq!(l.boundary_inf, x(4).pow(2));
}

#[test]
fn w8_representative_limit() {
    let input = ShahInput {
        a: int(1),
        branch: Branch::High(HighBranch {
            beta1: vec![int(0); 3],
            f1: (int(0), int(0)),
            g1: (int(0), int(0)),
            h1: (int(1), int(0)),
        }),
    };
    let w = [8, 2, -4, -6, -5].map(int);
    let (q, g) = (input.q(), input.g());
    let l = limit_pair(&q, &g, &w).unwrap();
    // oracle: enumerate every monomial of q and g
    let wq = max_weight(&q, &w);
    let wg = max_weight(&g, &w);
    assert_eq!(l.z_free, w[4] < wq);
    assert!(l.z_free);
    assert_eq!(l.z2_matched, Some(&w[4] + &w[4] == wg));
    assert_eq!(l.z2_matched, Some(true));
    assert!(l.q_inf.terms().all(|(e, _)| e[4] == 0));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn initial_part_is_multiplicative(f in poly(), g in poly(), w in weights()) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let (inf, wf) = initial_part(&f, &w).unwrap();
        let (ing, wg) = initial_part(&g, &w).unwrap();
        let (infg, wfg) = initial_part(&(&f * &g), &w).unwrap();
        prop_assert_eq!(infg, &inf * &ing);
        prop_assert_eq!(wfg, &wf + &wg);
        prop_assert_eq!(&wf, &max_weight(&f, &w));
    }

    #[test]
    fn initial_part_is_idempotent(f in poly(), w in weights()) {
        prop_assume!(!f.is_zero());
        let (inf, wf) = initial_part(&f, &w).unwrap();
        prop_assert_eq!(initial_part(&inf, &w).unwrap(), (inf.clone(), wf.clone()));
        prop_assert!(inf.terms().all(|(e, _)| weight(e, &w) == wf));
    }
}

fn pair() -> impl Strategy<Value = (Rational, Rational)> {
    // zeros are heavily over-represented so every divisibility pattern shows up
    let c = prop_oneof![3 => Just(int(0)), 2 => small_q()];
    (c.clone(), c)
}

fn shah_input() -> impl Strategy<Value = ShahInput> {
    let a = prop_oneof![Just(int(0)), small_q()];
    let high = (proptest::collection::vec(small_q(), 3), pair(), pair(), pair())
        .prop_map(|(beta1, f1, g1, h1)| Branch::High(HighBranch { beta1, f1, g1, h1 }));
    let low = pair().prop_map(|l1| Branch::Low(LowBranch { l1 }));
    (a, prop_oneof![high, low]).prop_map(|(a, branch)| ShahInput { a, branch })
}

/// Decision-list reading of the strata, evaluated top to bottom.
fn oracle(input: &ShahInput) -> Option<u32> {
    let nz = |p: &(Rational, Rational)| !p.0.is_zero() || !p.1.is_zero();
    match &input.branch {
        Branch::High(h) => {
            if !h.h1.0.is_zero() {
                Some(8)
            } else if !h.g1.0.is_zero() {
                Some(7)
            } else if nz(&h.h1) {
                Some(6)
            } else if nz(&h.g1) || !h.f1.0.is_zero() {
                Some(4)
            } else if nz(&h.f1) {
                Some(3)
            } else {
                None
            }
        }
        Branch::Low(l) => {
            if !l.l1.0.is_zero() {
                Some(2)
            } else if nz(&l.l1) {
                Some(1)
            } else if !input.a.is_zero() {
                Some(0)
            } else {
                None
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn shah_is_a_partition(input in shah_input()) {
        let hits = input.matching_conditions();
        prop_assert!(hits.len() <= 1);
        match (shah_stratify(&input), oracle(&input)) {
            (Ok(s), Some(i)) => {
                prop_assert_eq!(hits.len(), 1);
                prop_assert_eq!(s.i, i);
                let t = Table1::embedded();
                prop_assert_eq!(&s.kst, &t.row(i).unwrap().kst);
            }
            (Err(GitError::Outside(_)), None) => prop_assert!(hits.is_empty()),
            (got, want) => prop_assert!(false, "library {:?} vs oracle {:?}", got.map(|s| s.i), want),
        }
    }
}

#[test]
fn shah_exclusive_on_a_small_box() {
    let vals = [-1, 0, 1];
    let mut seen = std::collections::BTreeSet::new();
    for a in [0, 1] {
        for f in vals.iter().flat_map(|p| vals.iter().map(move |q| (int(*p), int(*q)))) {
            for g in vals.iter().flat_map(|p| vals.iter().map(move |q| (int(*p), int(*q)))) {
                for h in vals.iter().flat_map(|p| vals.iter().map(move |q| (int(*p), int(*q)))) {
                    let input = ShahInput {
                        a: int(a),
                        branch: Branch::High(HighBranch { beta1: vec![int(0); 3], f1: f.clone(), g1: g.clone(), h1: h }),
                    };
                    let hits = input.matching_conditions();
                    assert!(hits.len() <= 1, "{input:?} hits {hits:?}");
                    assert_eq!(hits.first().map(|h| h.1), oracle(&input));
                    seen.extend(hits.iter().map(|h| h.1));
                }
            }
        }
        for l in vals.iter().flat_map(|p| vals.iter().map(move |q| (int(*p), int(*q)))) {
            let input = ShahInput { a: int(a), branch: Branch::Low(LowBranch { l1: l }) };
            let hits = input.matching_conditions();
            assert!(hits.len() <= 1);
            assert_eq!(hits.first().map(|h| h.1), oracle(&input));
            seen.extend(hits.iter().map(|h| h.1));
        }
    }
    assert_eq!(seen.into_iter().collect::<Vec<_>>(), vec![0, 1, 2, 3, 4, 6, 7, 8]);
}

#[test]
fn thresholds_increase_with_the_stratum() {
    let t = Table1::embedded();
    let ks: Vec<_> = [0, 1, 2, 3, 4, 6, 7, 8].iter().map(|i| t.row(*i).unwrap().kst.clone()).collect();
    assert_eq!(ks, vec![rat(1, 3), rat(1, 2), rat(3, 5), rat(2, 3), rat(5, 7), rat(3, 4), rat(7, 9), rat(9, 11)]);
    assert!(ks.windows(2).all(|w| w[0] <= w[1]));
}

#[test]
fn worked_strata() {
    let s = shah_stratify(&ShahInput {
        a: int(1),
        branch: Branch::High(HighBranch { beta1: vec![int(0); 3], f1: (int(0), int(0)), g1: (int(0), int(0)), h1: (int(1), int(0)) }),
    })
    .unwrap();
    assert_eq!((s.i, s.kst), (8, rat(9, 11)));
    assert_eq!(s.ps_weights_at_alpha, [8, 2, -4, -6, -5].map(int).to_vec());
    let s = shah_stratify(&ShahInput {
        a: int(1),
        branch: Branch::High(HighBranch { beta1: vec![int(0); 3], f1: (int(0), int(0)), g1: (int(1), int(0)), h1: (int(0), int(1)) }),
    })
    .unwrap();
    assert_eq!((s.i, s.kst), (7, rat(7, 9)));
    let s = shah_stratify(&ShahInput { a: int(3), branch: Branch::Low(LowBranch { l1: (int(0), int(0)) }) }).unwrap();
    assert_eq!((s.i, s.kst), (0, rat(1, 3)));
    assert_eq!(s.ps_weights_at_alpha, [0, 0, 0, 0, -1].map(int).to_vec());
}
