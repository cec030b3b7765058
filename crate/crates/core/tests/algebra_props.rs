use num_traits::Zero;
use proptest::prelude::*;

use zz_core::moduli::{aut_pair_group, pairs_isomorphic, reversions_equivalent_by_targets, reversions_equivalent_by_transport, witness_holds};
use zz_core::pair::{classify_case, dual_graph, surface_report};
use zz_core::poly::{
    affine_equivalences, depress, multiplicity_profile, scale_equivalences, stabilizer, squarefree_decomposition,
    SolutionSet, SubstitutionWitness,
};
use zz_core::rational::rat;
use zz_core::zigzag::{reversion_trace, ZigzagType};
use zz_core::{PairClass, Poly, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn nonzero() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    (1..=max_deg)
        .prop_flat_map(|d| (prop::collection::vec(-4i64..=4, d), prop_oneof![Just(1i64), Just(-1), Just(2), Just(3)]))
        .prop_map(|(mut c, lead)| {
            c.push(lead);
            Poly::from_ints(&c)
        })
}

fn pair(max_deg: usize) -> impl Strategy<Value = PairClass> {
    (poly(max_deg), poly(max_deg)).prop_map(|(p, q)| PairClass::new(p, q).unwrap())
}

fn case_iii_pair() -> impl Strategy<Value = PairClass> {
    (poly(3), poly(3)).prop_map(|(p, q)| {
        let w = Poly::var();
        PairClass::new(&w * &p, &w * &q).unwrap()
    })
}

/// `[αP(βw), γQ(δw + t)]`, with `t = 0` unless `P(0) ≠ 0`.
fn isomorphic_copy() -> impl Strategy<Value = (PairClass, PairClass)> {
    (pair(4), nonzero(), nonzero(), nonzero(), nonzero(), rational()).prop_map(|(c, a, b, g, d, t)| {
        let t = if c.p.coeff(0).is_zero() { Rational::zero() } else { t };
        let p2 = SubstitutionWitness::scale(a, b).apply_scale(&c.p);
        let q2 = SubstitutionWitness::affine(g, d, t).apply_affine(&c.q);
        let c2 = PairClass::new(p2, q2).unwrap();
        (c, c2)
    })
}

fn members(s: &SolutionSet) -> Vec<SubstitutionWitness> {
    s.sample(&[rat(1, 1), rat(-2, 1), rat(1, 3)])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn profile_totals_degree(p in poly(6)) {
        let m = multiplicity_profile(&p).unwrap();
        prop_assert_eq!(m.weighted_total(), p.degree());
        let mut prod = Poly::constant(p.leading());
        for (i, f) in squarefree_decomposition(&p).unwrap() {
            prod = &prod * &f.pow(i);
        }
        prop_assert_eq!(prod, p);
    }

    #[test]
    fn scale_witnesses_resubstitute(p in poly(5), a in nonzero(), b in nonzero()) {
        let p2 = SubstitutionWitness::scale(a, b).apply_scale(&p);
        let s = scale_equivalences(&p, &p2);
        prop_assert!(!s.is_empty());
        let back = scale_equivalences(&p2, &p);
        for w in members(&s) {
            prop_assert_eq!(w.apply_scale(&p), p2.clone());
            let inv = w.inverse();
            prop_assert_eq!(inv.apply_scale(&p2), p.clone());
            prop_assert!(members(&back).contains(&inv) || back.is_family());
        }
    }

    #[test]
    fn affine_equivalence_is_an_equivalence(
        q in poly(5),
        w1 in (nonzero(), nonzero(), rational()),
        w2 in (nonzero(), nonzero(), rational()),
    ) {
        let w1 = SubstitutionWitness::affine(w1.0, w1.1, w1.2);
        let w2 = SubstitutionWitness::affine(w2.0, w2.1, w2.2);
        let q2 = w1.apply_affine(&q);
        let q3 = w2.apply_affine(&q2);
        let refl = affine_equivalences(&q, &q, true).best().unwrap();
        prop_assert_eq!(refl.apply_affine(&q), q.clone());
        prop_assert_eq!(refl.delta_or_one(), rat(1, 1));
        let f = affine_equivalences(&q, &q2, true).best().unwrap();
        prop_assert_eq!(f.apply_affine(&q), q2.clone());
        prop_assert_eq!(f.inverse().apply_affine(&q2), q.clone());
        prop_assert!(!affine_equivalences(&q2, &q, true).is_empty());
        let g = affine_equivalences(&q2, &q3, true).best().unwrap();
        prop_assert_eq!(f.then(&g).apply_affine(&q), q3.clone());
        prop_assert!(!affine_equivalences(&q, &q3, true).is_empty());
    }

    #[test]
    fn stabilizers_are_groups(p in poly(5), shift in any::<bool>()) {
        let s = stabilizer(&p, shift);
        let ms = members(&s);
        for a in &ms {
            let inv = a.inverse();
            if shift {
                prop_assert_eq!(inv.apply_affine(&p), p.clone());
            } else {
                prop_assert_eq!(inv.apply_scale(&p), p.clone());
            }
            for b in &ms {
                let c = a.then(b);
                if shift {
                    prop_assert_eq!(c.apply_affine(&p), p.clone());
                } else {
                    prop_assert_eq!(c.apply_scale(&p), p.clone());
                }
                if let SolutionSet::Finite { witnesses } = &s {
                    prop_assert!(witnesses.contains(&c));
                }
            }
        }
    }

    #[test]
    fn depression_commutes_with_substitution(q in poly(5), d in nonzero(), t in rational()) {
        let q2 = q.compose_linear(&d, &t);
        let (dq, _) = depress(&q);
        let (dq2, _) = depress(&q2);
        prop_assert!(!scale_equivalences(&dq, &dq2).is_empty());
    }

    #[test]
    fn isomorphism_solver_is_sound((c1, c2) in isomorphic_copy()) {
        let w = pairs_isomorphic(&c1, &c2);
        prop_assert!(w.is_some());
        prop_assert!(witness_holds(&c1, &c2, w.as_ref().unwrap()));
        prop_assert_eq!(c1.case(), c2.case());
        prop_assert_eq!(classify_case(&c1.p, &c1.q).unwrap(), classify_case(&c2.p, &c2.q).unwrap());
    }

    #[test]
    fn isomorphism_is_an_equivalence((c1, c2) in isomorphic_copy(), c3 in pair(4)) {
        prop_assert!(pairs_isomorphic(&c1, &c1).is_some());
        prop_assert!(pairs_isomorphic(&c2, &c1).is_some());
        let via = pairs_isomorphic(&c2, &c3).is_some();
        prop_assert_eq!(via, pairs_isomorphic(&c1, &c3).is_some());
    }

    #[test]
    fn boundary_and_root_bookkeeping(c in pair(4)) {
        let g = dual_graph(&c.p, &c.q).unwrap();
        let want = vec![0, -1, -(c.p.degree() as i64) - 1, -(c.q.degree() as i64) - 1];
        prop_assert_eq!(g.boundary_weights(), want);
        prop_assert_eq!(g.sum_r(), c.p.degree() + 1);
        prop_assert_eq!(g.sum_s(), c.q.degree());
        let r = surface_report(&c.p, &c.q).unwrap();
        if r.smooth {
            prop_assert!(r.singularities.is_empty());
        }
    }

    #[test]
    fn pair_automorphisms_fix_the_pair(c in pair(3), params in prop::collection::vec(nonzero(), 1..3)) {
        for t in aut_pair_group(&c).sample(&params) {
            let img = t.apply(&c);
            prop_assert!(img.same_rep(&c));
            prop_assert!(pairs_isomorphic(&c, &img).is_some());
        }
    }

    #[test]
    fn reversion_equivalence_implementations_agree(c in pair(3), l1 in rational(), l2 in rational()) {
        prop_assert_eq!(
            reversions_equivalent_by_targets(&c, &l1, &l2),
            reversions_equivalent_by_transport(&c, &l1, &l2)
        );
    }

    #[test]
    fn reversion_trace_is_an_involution(tail in prop::collection::vec(2i64..=7, 0..5)) {
        let z = ZigzagType::standard(&tail);
        let t = reversion_trace(&z).unwrap();
        for s in &t.steps {
            prop_assert_eq!(s.resulting.seq.len(), z.seq.len());
        }
        let back = reversion_trace(&t.final_type).unwrap();
        prop_assert_eq!(back.final_type, z);
    }
}

#[test]
fn final_types_exhaustive() {
    fn rec(prefix: &mut Vec<i64>, left: usize) {
        if !prefix.is_empty() {
            let z = ZigzagType::standard(prefix);
            let mut want: Vec<i64> = vec![0, -1];
            want.extend(prefix.iter().rev().map(|a| -a));
            assert_eq!(reversion_trace(&z).unwrap().final_type.seq, want);
        }
        if left == 0 {
            return;
        }
        for a in 2..=6 {
            prefix.push(a);
            rec(prefix, left - 1);
            prefix.pop();
        }
    }
    rec(&mut Vec::new(), 4);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn case_three_pairs_stay_case_three(c in case_iii_pair()) {
        prop_assert_eq!(c.case(), zz_core::Case::III);
        prop_assert_eq!(c.swapped().case(), zz_core::Case::III);
    }
}
