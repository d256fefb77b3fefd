//! Invariants checked on random inputs.

use num_complex::Complex64;
use proptest::prelude::*;

use skewsym::algebra::{annihilator, character, hnf_basis, ComplexRational, Poly1, RationalTurn, SkewPoly};
use skewsym::cli::{parse_expr, Expr};
use skewsym::skew::{normalize, SkewProduct};
use skewsym::symmetry::{brute_force_group, sigma_order, symmetry_group, ConditionSet, SigmaOrder};

fn vectors() -> impl Strategy<Value = Vec<[i64; 2]>> {
    prop::collection::vec([-12i64..=12, -12i64..=12], 0..5)
}

proptest! {
    #[test]
    fn hnf_is_idempotent(vs in vectors()) {
        let l = hnf_basis(&vs);
        prop_assert_eq!(hnf_basis(l.basis()), l.clone());
        let mut rev = vs.clone();
        rev.reverse();
        prop_assert_eq!(hnf_basis(&rev), l.clone());
        for v in &vs {
            prop_assert!(l.contains(*v));
        }
    }

    #[test]
    fn hnf_ignores_redundant_generators(vs in vectors(), a in -3i64..=3, b in -3i64..=3) {
        prop_assume!(vs.len() >= 2);
        let extra = [a * vs[0][0] + b * vs[1][0], a * vs[0][1] + b * vs[1][1]];
        let mut more = vs.clone();
        more.push(extra);
        prop_assert_eq!(hnf_basis(&more), hnf_basis(&vs));
    }

    #[test]
    fn annihilator_elements_kill_the_lattice(vs in vectors()) {
        let l = hnf_basis(&vs);
        let g = annihilator(&l);
        for e in g.elements_up_to_order(6) {
            for &v in l.basis() {
                prop_assert!(character(v, &e).is_identity());
            }
        }
        if let (Some(n), Some(es)) = (g.order(), g.elements()) {
            prop_assert_eq!(n as usize, es.len());
            prop_assert_eq!(Some(n), l.index());
        }
    }

    #[test]
    fn turns_form_a_group(a in -30i64..30, m in 1i64..30, b in -30i64..30, n in 1i64..30) {
        let (s, t) = (RationalTurn::new(a, m), RationalTurn::new(b, n));
        prop_assert!(s.compose(&s.inverse()).is_identity());
        prop_assert_eq!(s.compose(&t), t.compose(&s));
        prop_assert!(s.pow(s.order()).is_identity());
        let z = s.to_complex() * t.to_complex();
        prop_assert!((s.compose(&t).to_complex() - z).norm() < 1e-12);
    }
}

fn expr() -> impl Strategy<Value = Expr> {
    let num = (0i64..20, 1i64..6, any::<bool>()).prop_map(|(n, d, imag)| {
        let c = if imag { ComplexRational::from_parts(0, 1, n, d) } else { ComplexRational::from_ratio(n, d) };
        Expr::Num(c)
    });
    let leaf = prop_oneof![num, Just(Expr::Z), Just(Expr::W)];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|e| Expr::Neg(Box::new(e))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
            (inner, 0u32..4).prop_map(|(a, k)| Expr::Pow(Box::new(a), k)),
        ]
    })
}

proptest! {
    #[test]
    fn printed_expressions_reparse(e in expr()) {
        let text = e.to_string();
        let back = parse_expr(&text).unwrap();
        prop_assert_eq!(back.to_string(), text.clone());
        prop_assert_eq!(back.to_skew_poly().unwrap(), e.to_skew_poly().unwrap());
        let poly = e.to_skew_poly().unwrap();
        prop_assert_eq!(parse_expr(&poly.to_string()).unwrap().to_skew_poly().unwrap(), poly);
    }
}

fn small_map() -> impl Strategy<Value = SkewProduct> {
    let p = (2u32..=4, prop::collection::vec((0u32..4, -2i64..=2), 0..3));
    let q = (2u32..=4, 0i64..=3, 1i64..=2, prop::collection::vec((0i64..=4, 0u32..4, -3i64..=3), 0..4));
    (p, q).prop_filter_map("degenerate", |((delta, pt), (d, l, lead, qt))| {
        let mut p = Poly1::monomial(ComplexRational::one(), delta);
        for (e, c) in pt.into_iter().filter(|&(e, _)| e < delta) {
            p.add_term(e, &c.into());
        }
        let mut q = SkewPoly::monomial(lead.into(), l, d);
        for (n, m, c) in qt.into_iter().filter(|&(_, m, _)| m < d) {
            q.add_term(n, m, &c.into());
        }
        SkewProduct::new(p, q).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn closure_is_certified(f in small_map()) {
        let Some(t) = normalize(&f).translated else { return Ok(()) };
        let c = ConditionSet::new(&t);
        prop_assert!(c.is_certified(), "{} -> {:?}", f, c);
    }

    #[test]
    fn exact_groups_match_oracle(f in small_map()) {
        let Ok(r) = symmetry_group(&f) else { return Ok(()) };
        prop_assume!(r.status.is_exact());
        prop_assert_eq!(r.group.elements_up_to_order(6), brute_force_group(&f, 6, 3).unwrap());
    }

    #[test]
    fn every_candidate_is_bounded_by_level_one(f in small_map()) {
        let Ok(r) = symmetry_group(&f) else { return Ok(()) };
        let Some(c) = r.conditions else { return Ok(()) };
        for e in r.group.elements_up_to_order(6) {
            for &v in c.level1.basis() {
                prop_assert!(character(v, &e).is_identity());
            }
        }
    }
}

fn normal_form_poly() -> impl Strategy<Value = Poly1> {
    (2u32..=8, 1u32..=4, prop::collection::vec((-3i64..=3, -2i64..=2), 8)).prop_map(|(delta, stride, cs)| {
        let mut p = Poly1::monomial(ComplexRational::one(), delta);
        for j in 0..delta - 1 {
            if (delta - j) % stride == 0 {
                let (a, b) = cs[j as usize];
                p.add_term(j, &ComplexRational::from_parts(a, 1, b, 1));
            }
        }
        p
    })
}

proptest! {
    #[test]
    fn sigma_order_is_maximal(p in normal_form_poly()) {
        let delta = p.degree().unwrap();
        let order = sigma_order(&p).unwrap();
        let pts = [Complex64::new(0.3, 0.7), Complex64::new(-1.1, 0.2), Complex64::new(0.5, -0.9)];
        let commutes = |k: i64| {
            let mu = RationalTurn::new(1, k).to_complex();
            pts.iter().all(|&z| (p.eval_c64(mu * z) - mu.powu(delta) * p.eval_c64(z)).norm() < 1e-9 * (1.0 + p.eval_c64(z).norm()))
        };
        match order {
            SigmaOrder::Finite(m) => {
                prop_assert!(commutes(m));
                for k in 1..=24 {
                    prop_assert_eq!(commutes(k), m % k == 0, "k = {}", k);
                }
            }
            SigmaOrder::Infinite => prop_assert!((1..=24).all(commutes)),
        }
    }

    #[test]
    fn centering_preserves_rotation_order(p in normal_form_poly(), s in -3i64..=3) {
        // Conjugating by a translation moves the centroid but keeps Σ_p.
        let shift = ComplexRational::from_int(s);
        let mut moved = p.shift(&shift);
        moved.add_term(0, &ComplexRational::from_int(-s));
        let f = SkewProduct::new(moved, SkewPoly::monomial(ComplexRational::one(), 0, 2)).unwrap();
        let back = normalize(&f).p_tilde;
        prop_assert_eq!(sigma_order(&back).unwrap(), sigma_order(&p).unwrap());
    }
}
