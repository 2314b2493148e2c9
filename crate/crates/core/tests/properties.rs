use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use superschur::config::Limits;
use superschur::fractions::{frac_add, frac_mul, kappa_scalar, Fraction, MatMorphism, Object};
use superschur::ideals::{check_closure, jmn_sequence};
use superschur::partitions::{partitions_of, Partition};
use superschur::rational::{q, Q};
use superschur::selfcheck::{random_element, random_even_map, random_perm};
use superschur::supereval::{evaluate, perm_operator, SuperSpace};
use superschur::symgroup::{primitive_idempotent, young_symmetrizer, GroupAlgebraElement};

fn small_space() -> impl Strategy<Value = SuperSpace> {
    (0usize..=2, 0usize..=2)
        .prop_filter("nonzero", |(m, n)| m + n > 0 && m + n <= 3)
        .prop_map(|(m, n)| SuperSpace::new(m, n))
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn evaluation_is_multiplicative(seed: u64, d in 1usize..=4, v in small_space()) {
        let limits = Limits::default();
        let mut r = rng(seed);
        let x = random_element(d, 3, &mut r);
        let y = random_element(d, 3, &mut r);
        let lhs = evaluate(&x.multiply(&y).unwrap(), v, &limits).unwrap();
        let rhs = evaluate(&x, v, &limits).unwrap().compose(&evaluate(&y, v, &limits).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn evaluation_is_linear(seed: u64, d in 1usize..=4, v in small_space()) {
        let limits = Limits::default();
        let mut r = rng(seed);
        let x = random_element(d, 3, &mut r);
        let y = random_element(d, 3, &mut r);
        let c = Q::new(3.into(), 7.into());
        let lhs = evaluate(&(&x + &y.scale(&c)), v, &limits).unwrap();
        let rhs = evaluate(&x, v, &limits).unwrap().add(&evaluate(&y, v, &limits).unwrap().scale(&c)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn embedding_tensors_with_identity(seed: u64, d in 1usize..=3, v in small_space()) {
        let limits = Limits::default();
        let x = random_element(d, 3, &mut rng(seed));
        let lhs = evaluate(&x.embed(), v, &limits).unwrap();
        prop_assert_eq!(lhs, evaluate(&x, v, &limits).unwrap().tensor_identity());
    }

    #[test]
    fn koszul_action_is_a_homomorphism(seed: u64, d in 1usize..=4, v in small_space()) {
        let mut r = rng(seed);
        let (s, t) = (random_perm(d, &mut r), random_perm(d, &mut r));
        let lhs = perm_operator(&s.compose(&t), v);
        let rhs = perm_operator(&s, v).compose(&perm_operator(&t, v)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn contraction_matches_partial_supertrace(seed: u64, d in 2usize..=4, v in small_space()) {
        let limits = Limits::default();
        let x = random_element(d, 4, &mut rng(seed));
        let t = q(v.superdim());
        let lhs = evaluate(&x.contract(&t).unwrap(), v, &limits).unwrap();
        let rhs = evaluate(&x, v, &limits).unwrap().partial_supertrace(d).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn supertrace_is_trace_polynomial(seed: u64, d in 1usize..=4, v in small_space()) {
        let limits = Limits::default();
        let x = random_element(d, 5, &mut rng(seed));
        let st = evaluate(&x, v, &limits).unwrap().supertrace();
        prop_assert_eq!(st, x.trace_poly().eval_int(v.superdim()));
    }

    #[test]
    fn trace_polynomial_is_ordinary_trace_when_even(seed: u64, d in 1usize..=4, m in 1usize..=3) {
        let limits = Limits::default();
        let v = SuperSpace::even(m);
        let x = random_element(d, 4, &mut rng(seed));
        let op = evaluate(&x, v, &limits).unwrap();
        prop_assert_eq!(op.trace(), op.supertrace());
        prop_assert_eq!(op.trace(), x.trace_poly().eval_int(m as i64));
    }

    #[test]
    fn support_of_sum_is_within_union(seed: u64, d in 1usize..=4) {
        let mut r = rng(seed);
        let x = random_element(d, 3, &mut r);
        let y = random_element(d, 3, &mut r);
        let sum = (&x + &y).isotypic_support();
        let union: std::collections::BTreeSet<Partition> =
            x.isotypic_support().union(&y.isotypic_support()).cloned().collect();
        prop_assert!(sum.is_subset(&union));
    }

    #[test]
    fn fraction_arithmetic_maps_to_scalars(seed: u64, a in 1i64..=5, b in -5i64..=5, c in 1i64..=5) {
        let mut r = rng(seed);
        let obj = Object::space(SuperSpace::new(1, 1));
        let mut f = random_even_map(&obj, &Object::unit(), &mut r);
        if f.is_zero() {
            f = MatMorphism::new(obj.clone(), Object::unit(), vec![vec![q(1), q(0)]]).unwrap();
        }
        let x = Fraction::scalar(q(b), q(a)).unwrap();
        let y = Fraction::new(f.scale(&q(c)), f.clone()).unwrap();
        let kx = kappa_scalar(&x).unwrap();
        let ky = kappa_scalar(&y).unwrap();
        prop_assert_eq!(kx.clone(), Q::new(b.into(), a.into()));
        prop_assert_eq!(ky.clone(), q(c));
        prop_assert_eq!(kappa_scalar(&frac_add(&x, &y).unwrap()).unwrap(), &kx + &ky);
        prop_assert_eq!(kappa_scalar(&frac_mul(&x, &y).unwrap()).unwrap(), &kx * &ky);
    }
}

fn rank_of_idempotent(e: &GroupAlgebraElement, v: SuperSpace) -> (u64, u64) {
    let op = evaluate(e, v, &Limits::default()).unwrap();
    assert_eq!(op.compose(&op).unwrap(), op, "not idempotent");
    let r = op.rank_pair().unwrap();
    (r.even, r.odd)
}

#[test]
fn idempotent_rank_matches_supertrace() {
    for d in 1..=4 {
        for lambda in partitions_of(d) {
            let e = primitive_idempotent(&lambda).unwrap();
            for (m, n) in [(1, 1), (2, 1), (1, 2)] {
                let v = SuperSpace::new(m, n);
                let (even, odd) = rank_of_idempotent(&e, v);
                let st = evaluate(&e, v, &Limits::default()).unwrap().supertrace();
                assert_eq!(st, q(even as i64 - odd as i64), "{lambda:?} on {m}|{n}");
            }
        }
    }
}

#[test]
fn jmn_sequences_are_nested_and_closed() {
    let limits = Limits::default();
    for (m, n) in [(0, 0), (1, 0), (0, 1), (1, 1), (2, 1), (1, 2)] {
        let seq = jmn_sequence(m, n, 5, &limits).unwrap();
        let report = check_closure(&seq, &limits).unwrap();
        assert!(report.induction_ok && report.contraction_ok, "J_{m}|{n}");
        let bigger = jmn_sequence(m + 1, n + 1, 5, &limits).unwrap();
        for d in 0..=5 {
            assert!(bigger.killed_at(d).is_subset(seq.killed_at(d)), "J_{}|{} inside J_{m}|{n} at {d}", m + 1, n + 1);
        }
        // (m+1)|(n+1) first differs from m|n in degree (m+1)(n+1)
        let first = (m + 1) * (n + 1);
        if first <= 5 {
            assert!(bigger.killed_at(first).len() < seq.killed_at(first).len());
        }
    }
}

#[test]
fn young_symmetrizers_evaluate_to_zero_exactly_above_the_rectangle() {
    let limits = Limits::default();
    let v = SuperSpace::new(1, 1);
    for d in 1..=5 {
        for lambda in partitions_of(d) {
            let c = young_symmetrizer(&lambda).unwrap();
            let zero = evaluate(&c, v, &limits).unwrap().is_zero();
            assert_eq!(zero, lambda.contains(&Partition::new(vec![2, 2]).unwrap()), "{lambda:?}");
        }
    }
}

#[test]
fn fraction_equivalence_is_an_equivalence_relation() {
    let mut r = rng(11);
    let u = Object::unit();
    let mut fractions = Vec::new();
    for i in 0..12 {
        let (m, n) = [(1, 0), (1, 1), (2, 0), (2, 1)][i % 4];
        let a = Object::space(SuperSpace::new(m, n));
        let f = loop {
            let f = random_even_map(&a, &u, &mut r);
            if !f.is_zero() {
                break f;
            }
        };
        let c = q(1 + (i as i64 % 3));
        fractions.push((Fraction::new(f.scale(&c), f).unwrap(), c));
    }
    for (x, cx) in &fractions {
        assert!(x.equivalent(x).unwrap());
        for (y, cy) in &fractions {
            let xy = x.equivalent(y).unwrap();
            assert_eq!(xy, y.equivalent(x).unwrap());
            assert_eq!(xy, cx == cy);
            for (z, _) in &fractions {
                if xy && y.equivalent(z).unwrap() {
                    assert!(x.equivalent(z).unwrap());
                }
            }
        }
    }
}
