//! A quick run of the library's structural identities at small sizes, used
//! by the `selfcheck` command. Each check recomputes its claim from two
//! independent routes.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::config::Limits;
use crate::error::Result;
use crate::fractions::{frac_add, frac_mul, frac_solve_full, kappa_scalar, Fraction, MatMorphism, Object};
use crate::ideals::{
    check_closure, enumerate_prime_sequences, expected_prime_sequences, jmn_sequence, member_by_eval,
    orientation_scan, pinned_rectangle, PINNED_ORIENTATION,
};
use crate::linalg;
use crate::partitions::partitions_of;
use crate::rational::{q, Q};
use crate::schurweyl::{
    contraction_assignment, contraction_entry, direct_contraction_entry, direct_sum_check, hook_square_sum,
    p_square_closed_form, rectangle_scan, square, tau_rho_product, tau_weyl,
};
use crate::supereval::{commutant_dim, evaluate, image_algebra_semisimple, perm_span_dim, SuperSpace};
use crate::symgroup::{primitive_idempotent, quasi_idempotent_scalar, young_symmetrizer, GroupAlgebraElement, Perm};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

pub fn random_perm(d: usize, rng: &mut ChaCha8Rng) -> Perm {
    let mut images: Vec<usize> = (0..d).collect();
    images.shuffle(rng);
    Perm::from_images(images).expect("a shuffle is a permutation")
}

/// Up to `terms` random permutations with small nonzero rational
/// coefficients.
pub fn random_element(d: usize, terms: usize, rng: &mut ChaCha8Rng) -> GroupAlgebraElement {
    let mut x = GroupAlgebraElement::zero(d);
    for _ in 0..terms {
        let num: i64 = rng.gen_range(1..=6) * if rng.gen_bool(0.5) { 1 } else { -1 };
        let den: i64 = rng.gen_range(1..=4);
        let t = GroupAlgebraElement::from_perm(random_perm(d, rng)).scale(&Q::new(num.into(), den.into()));
        x = &x + &t;
    }
    x
}

/// A random even map between two objects with small integer entries.
pub fn random_even_map(source: &Object, target: &Object, rng: &mut ChaCha8Rng) -> MatMorphism {
    let (ps, pt) = (source.parities(), target.parities());
    let mut matrix = linalg::zeros(target.dim(), source.dim());
    for (i, row) in matrix.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            if ps[j] == pt[i] {
                *v = q(rng.gen_range(-3..=3));
            }
        }
    }
    MatMorphism::new(source.clone(), target.clone(), matrix).expect("parity respected")
}

fn check(name: &'static str, run: impl FnOnce() -> Result<(bool, String)>) -> CheckResult {
    match run() {
        Ok((passed, detail)) => CheckResult { name, passed, detail },
        Err(e) => CheckResult { name, passed: false, detail: format!("error: {e}") },
    }
}

fn count(ok: usize, total: usize) -> (bool, String) {
    (ok == total, format!("{ok}/{total}"))
}

pub fn run_all(seed: u64, limits: &Limits) -> Vec<CheckResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();

    out.push(check("supertrace_identity", || {
        let (mut ok, mut total) = (0, 0);
        for d in 1..=4 {
            for dim in 1..=3usize {
                for n in 0..=dim {
                    let v = SuperSpace::new(dim - n, n);
                    for _ in 0..3 {
                        let x = random_element(d, 4, &mut rng);
                        total += 1;
                        if evaluate(&x, v, limits)?.supertrace() == x.trace_poly().eval_int(v.superdim()) {
                            ok += 1;
                        }
                    }
                }
            }
        }
        Ok(count(ok, total))
    }));

    out.push(check("orientation_pinned", || {
        let found = orientation_scan(limits)?;
        Ok((found == vec![PINNED_ORIENTATION], format!("{found:?}")))
    }));

    out.push(check("kernel_is_rectangle_containment", || {
        let (mut ok, mut total) = (0, 0);
        for d in 1..=4 {
            for lambda in partitions_of(d) {
                let c = young_symmetrizer(&lambda)?;
                for (m, n) in [(1, 0), (0, 1), (1, 1), (2, 0), (2, 1), (1, 2)] {
                    total += 1;
                    if member_by_eval(&c, m, n, limits)? == lambda.contains(&pinned_rectangle(m, n)) {
                        ok += 1;
                    }
                }
            }
        }
        Ok(count(ok, total))
    }));

    out.push(check("commutant_is_perm_span", || {
        let (mut ok, mut total) = (0, 0);
        for dim in 1..=3usize {
            for n in 0..=dim {
                let v = SuperSpace::new(dim - n, n);
                for d in 1..=3 {
                    if (dim as u64).pow(2 * d as u32) > 729 {
                        continue;
                    }
                    total += 1;
                    let c = commutant_dim(v, d, limits)? as u64;
                    if c == perm_span_dim(v, d, limits)? as u64 && c == hook_square_sum(v, d) {
                        ok += 1;
                    }
                }
            }
        }
        Ok(count(ok, total))
    }));

    out.push(check("image_algebra_semisimple", || {
        let (mut ok, mut total) = (0, 0);
        for (m, n) in [(1, 0), (0, 1), (1, 1), (2, 0)] {
            for d in 1..=3 {
                total += 1;
                if image_algebra_semisimple(SuperSpace::new(m, n), d, limits)? {
                    ok += 1;
                }
            }
        }
        Ok(count(ok, total))
    }));

    out.push(check("rectangle_criterion_scan", || {
        let rows = rectangle_scan(1..=4, 2, limits)?;
        let ok = rows.iter().filter(|r| r.consistent()).count();
        Ok(count(ok, rows.len()))
    }));

    out.push(check("contraction_entry_formula", || {
        let (mut ok, mut total) = (0, 0);
        for d in 1..=4 {
            for lambda in partitions_of(d) {
                for (m, n) in [(1, 1), (2, 1), (1, 2), (0, 2)] {
                    for l in 1..=lambda.part(0) {
                        if contraction_assignment(&lambda, l, m, n, 0).is_none() {
                            continue;
                        }
                        total += 1;
                        if contraction_entry(&lambda, l, m, n)?.value == direct_contraction_entry(&lambda, l, m, n)? {
                            ok += 1;
                        }
                    }
                }
            }
        }
        Ok(count(ok, total))
    }));

    out.push(check("closed_forms", || {
        let mut ok = true;
        for m0 in 1..=2 {
            ok &= p_square_closed_form(m0)? == primitive_idempotent(&square(m0))?.trace_poly();
            for m in 2 * m0..=8 {
                ok &= tau_rho_product(m0, m)? == tau_weyl(&square(m0), m)?;
            }
        }
        Ok((ok, String::new()))
    }));

    out.push(check("jmn_closure", || {
        let (mut ok, mut total) = (0, 0);
        for (m, n) in [(0, 0), (1, 0), (0, 1), (1, 1), (2, 0), (0, 2)] {
            total += 1;
            let r = check_closure(&jmn_sequence(m, n, 4, limits)?, limits)?;
            if r.induction_ok && r.contraction_ok {
                ok += 1;
            }
        }
        Ok(count(ok, total))
    }));

    out.push(check("prime_classification", || {
        let (mut ok, mut total) = (0, 0);
        for r in [0, 1] {
            total += 1;
            if enumerate_prime_sequences(r, 4, seed, limits)? == expected_prime_sequences(r, 4, limits)? {
                ok += 1;
            }
        }
        Ok(count(ok, total))
    }));

    out.push(check("direct_sum_branching", || {
        let (mut ok, mut total) = (0, 0);
        let spaces = [SuperSpace::new(1, 0), SuperSpace::new(0, 1), SuperSpace::new(1, 1)];
        for d in 1..=3 {
            for lambda in partitions_of(d) {
                for v in spaces {
                    for w in spaces {
                        total += 1;
                        if direct_sum_check(&lambda, v, w, limits)? {
                            ok += 1;
                        }
                    }
                }
            }
        }
        Ok(count(ok, total))
    }));

    out.push(check("quasi_idempotence", || {
        let (mut ok, mut total) = (0, 0);
        for d in 1..=5 {
            for lambda in partitions_of(d) {
                total += 1;
                let c = young_symmetrizer(&lambda)?;
                if c.multiply(&c)? == c.scale(&quasi_idempotent_scalar(&lambda)) {
                    ok += 1;
                }
            }
        }
        Ok(count(ok, total))
    }));

    out.push(check("fraction_solver", || {
        let (mut ok, mut total) = (0, 0);
        let u = Object::unit();
        for _ in 0..20 {
            let m = rng.gen_range(1..=3usize);
            let n = rng.gen_range(0..=(4 - m));
            let a = Object::space(SuperSpace::new(m, n));
            let mut f = random_even_map(&a, &u, &mut rng);
            if f.is_zero() {
                f = MatMorphism::new(a.clone(), u.clone(), {
                    let mut row = vec![q(0); a.dim()];
                    row[0] = q(1);
                    vec![row]
                })?;
            }
            let c = Object::space(SuperSpace::new(1, 1));
            let l = random_even_map(&c, &c, &mut rng);
            total += 1;
            let sol = frac_solve_full(&f.tensor(&l), &f, &c, &c)?;
            if sol.l == l && sol.nullity == 0 {
                ok += 1;
            }
            let x = Fraction::scalar(q(rng.gen_range(-5..=5)), q(rng.gen_range(1..=5)))?;
            let y = Fraction::new(f.scale(&q(rng.gen_range(-5..=5))), f.clone())?;
            total += 2;
            if kappa_scalar(&frac_add(&x, &y)?)? == kappa_scalar(&x)? + kappa_scalar(&y)? {
                ok += 1;
            }
            if kappa_scalar(&frac_mul(&x, &y)?)? == kappa_scalar(&x)? * kappa_scalar(&y)? {
                ok += 1;
            }
        }
        Ok(count(ok, total))
    }));

    out
}
