//! Schur functors of super vector spaces: closed-form trace polynomials
//! for square shapes, two product forms of the dimension of a square Schur
//! module, super dimensions and vanishing of `S^lambda(k^{m|n})`, the
//! diagonal entry of a contracted Young symmetrizer, and the
//! Littlewood-Richardson branching of `S^lambda(V + W)`.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::ideals::pinned_rectangle;
use crate::partitions::{lr_coeff, partitions_of, Partition};
use crate::rational::{factorial, q, Q};
use crate::supereval::{evaluate, operator_entry, DimPair, SuperSpace};
use crate::symgroup::{young_symmetrizer, TracePolynomial};

/// The square partition with `m0` rows and columns.
pub fn square(m0: usize) -> Partition {
    Partition::new(vec![m0; m0]).expect("constant parts")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareTraceForm {
    pub m0: usize,
    pub polynomial: TracePolynomial,
}

impl SquareTraceForm {
    pub fn closed_form(m0: usize) -> Result<Self> {
        Ok(SquareTraceForm { m0, polynomial: p_square_closed_form(m0)? })
    }
}

/// `prod_{-m0 < i < m0} (m0 - i)^{|i| - m0} (t - i)^{m0 - |i|}`, the trace
/// polynomial of the primitive idempotent of the `m0 x m0` square.
pub fn p_square_closed_form(m0: usize) -> Result<TracePolynomial> {
    if m0 == 0 {
        return Err(Error::Precondition("the square needs at least one box".into()));
    }
    let m0 = m0 as i64;
    let mut poly = TracePolynomial::constant(Q::one());
    for i in (1 - m0)..m0 {
        let e = (m0 - i.abs()) as usize;
        let base = q(m0 - i);
        let scale = Q::one() / num_traits::pow(base, e);
        poly = &poly * &TracePolynomial::linear(q(i)).pow(e).scale(&scale);
    }
    Ok(poly)
}

/// Weyl's product `prod_{i<j<=m} (lambda_i - lambda_j + j - i) / (j - i)`
/// with `lambda` padded by zeros to `m` parts.
pub fn tau_weyl(lambda: &Partition, m: usize) -> Result<Q> {
    if lambda.len() > m {
        return Err(Error::Precondition(format!("{lambda:?} has more than {m} rows")));
    }
    let mut acc = Q::one();
    for i in 0..m {
        for j in i + 1..m {
            let num = lambda.part(i) as i64 - lambda.part(j) as i64 + (j - i) as i64;
            acc *= Q::new(num.into(), ((j - i) as i64).into());
        }
    }
    Ok(acc)
}

/// `prod_l l^{rho(l - m0) - rho(l)}` with `rho(l) = min(l, m - l, m0)` for
/// `0 < l < m` and 0 otherwise. Exponents vanish once `l >= m + m0`.
pub fn tau_rho_product(m0: usize, m: usize) -> Result<Q> {
    if m < 2 * m0 {
        return Err(Error::OutsideValidityRange { m, min: 2 * m0 });
    }
    let (m0, m) = (m0 as i64, m as i64);
    let rho = |l: i64| if l > 0 && l < m { l.min(m - l).min(m0) } else { 0 };
    let mut acc = Q::one();
    for l in 1..=(m + m0) {
        let e = rho(l - m0) - rho(l);
        let base = q(l);
        if e >= 0 {
            acc *= num_traits::pow(base, e as usize);
        } else {
            acc /= num_traits::pow(base, (-e) as usize);
        }
    }
    Ok(acc)
}

/// Even and odd dimensions of `S^lambda(V)`, read off as the rank of the
/// Young symmetrizer on `V^{(x)|lambda|}`.
pub fn schur_dim(lambda: &Partition, space: SuperSpace, limits: &Limits) -> Result<DimPair> {
    if lambda.is_empty() {
        return Ok(DimPair::new(1, 0));
    }
    limits.check_eval(space.dim(), lambda.size())?;
    let c = young_symmetrizer(lambda)?;
    evaluate(&c, space, limits)?.rank_pair()
}

/// Combinatorial vanishing test for `S^lambda(k^{m|n})`.
pub fn schur_vanishes(lambda: &Partition, space: SuperSpace) -> bool {
    lambda.contains(&pinned_rectangle(space.m, space.n))
}

/// `sum f^lambda^2` over `lambda |- d` with `S^lambda(V) != 0`: the
/// dimension of the commutant predicted by Schur-Weyl duality.
pub fn hook_square_sum(space: SuperSpace, d: usize) -> u64 {
    partitions_of(d)
        .iter()
        .filter(|l| !schur_vanishes(l, space))
        .map(|l| l.count_standard_tableaux().pow(2))
        .sum()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContractionEntry {
    pub lambda: Partition,
    pub l: usize,
    pub m: usize,
    pub n: usize,
    #[serde(with = "crate::rational::serde_q")]
    pub value: Q,
}

/// Closed form for a diagonal entry of the contraction of `c_{lambda^t}`
/// at the factor of box `(1, l)`.
///
/// `lambda` is the shape whose rows are antisymmetrized, so the evaluated
/// symmetrizer is `young_symmetrizer(lambda.transpose())`. With
/// `n0 = min(n, rows)` the value is
/// `C / lambda_1 * (m - n - lambda_1 + lambda^t_l)` where
/// `C = lambda_1! ... lambda_{n0}! * prod_{j : lambda^t_j >= n0} (lambda^t_j - n0)!`.
/// For `n = 0` it is the uncontracted entry `prod_j lambda^t_j!`.
pub fn contraction_entry(lambda: &Partition, l: usize, m: usize, n: usize) -> Result<ContractionEntry> {
    if lambda.is_empty() || l == 0 || l > lambda.part(0) {
        return Err(Error::ColumnOutOfRange { l, max: lambda.part(0) });
    }
    let lt = lambda.transpose();
    let fact = |k: usize| Q::from_integer(factorial(k));
    let value = if n == 0 {
        lt.parts().iter().map(|&c| fact(c)).product()
    } else {
        let n0 = n.min(lambda.len());
        let rows: Q = (0..n0).map(|i| fact(lambda.part(i))).product();
        let cols: Q = lt.parts().iter().filter(|&&c| c >= n0).map(|&c| fact(c - n0)).product();
        let lambda1 = lambda.part(0) as i64;
        let linear = m as i64 - n as i64 - lambda1 + lt.part(l - 1) as i64;
        rows * cols * q(linear) / q(lambda1)
    };
    Ok(ContractionEntry { lambda: lambda.clone(), l, m, n, value })
}

/// The basis assignment behind [`contraction_entry`]: box `(1, l)` gets
/// basis vector `e`; other boxes in row `i <= n0` get the `i`-th odd vector;
/// boxes `(i, j)` below get the `j`-th even vector. Returned as a
/// multi-index of `V^{(x)d}` under the canonical tableau of `lambda^t`, or
/// `None` when a row below `n0` is longer than `m`.
pub fn contraction_assignment(lambda: &Partition, l: usize, m: usize, n: usize, e: usize) -> Option<Vec<usize>> {
    let lt = lambda.transpose();
    let n0 = n.min(lambda.len());
    let mut offsets = vec![0; lt.len() + 1];
    for r in 0..lt.len() {
        offsets[r + 1] = offsets[r] + lt.part(r);
    }
    let mut index = vec![0; lambda.size()];
    for (i, j) in lambda.boxes() {
        let basis = if (i, j) == (0, l - 1) {
            e
        } else if i < n0 {
            m + i
        } else if j < m {
            j
        } else {
            return None;
        };
        // box (i, j) of lambda is box (j, i) of the transpose
        index[offsets[j] + i] = basis;
    }
    Some(index)
}

/// The same diagonal entry computed from the evaluated symmetrizer:
/// `sum_r f_{l; e+_r} - sum_s f_{l; e-_s}`.
pub fn direct_contraction_entry(lambda: &Partition, l: usize, m: usize, n: usize) -> Result<Q> {
    if lambda.is_empty() || l == 0 || l > lambda.part(0) {
        return Err(Error::ColumnOutOfRange { l, max: lambda.part(0) });
    }
    let c = young_symmetrizer(&lambda.transpose())?;
    let space = SuperSpace::new(m, n);
    let mut total = Q::zero();
    for e in 0..space.dim() {
        let index = contraction_assignment(lambda, l, m, n, e).ok_or_else(|| {
            Error::Precondition(format!("{lambda:?} has a row below {} longer than {m}", n.min(lambda.len())))
        })?;
        let entry = operator_entry(&c, space, &index, &index)?;
        if space.is_odd(e) {
            total -= entry;
        } else {
            total += entry;
        }
    }
    Ok(total)
}

/// The single uncontracted diagonal entry `f_{l; e}` for basis vector `e`.
pub fn direct_single_entry(lambda: &Partition, l: usize, m: usize, n: usize, e: usize) -> Result<Q> {
    let space = SuperSpace::new(m, n);
    if lambda.is_empty() || l == 0 || l > lambda.part(0) {
        return Err(Error::ColumnOutOfRange { l, max: lambda.part(0) });
    }
    if e >= space.dim() {
        return Err(Error::Precondition(format!("basis vector {e} outside {space}")));
    }
    let index = contraction_assignment(lambda, l, m, n, e)
        .ok_or_else(|| Error::Precondition(format!("no basis assignment for {lambda:?} on {space}")))?;
    operator_entry(&young_symmetrizer(&lambda.transpose())?, space, &index, &index)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RectangleCriterion {
    pub f_nonzero: bool,
    pub all_contractions_zero: bool,
}

/// Whether `c_lambda` acts nontrivially on `V^{(x)d}` and whether every
/// partial supertrace of that action vanishes.
pub fn rectangle_criterion(lambda: &Partition, space: SuperSpace, limits: &Limits) -> Result<RectangleCriterion> {
    let c = young_symmetrizer(lambda)?;
    let f = evaluate(&c, space, limits)?;
    let mut all_zero = true;
    for j in 1..=lambda.size() {
        if !f.partial_supertrace(j)?.is_zero() {
            all_zero = false;
            break;
        }
    }
    Ok(RectangleCriterion { f_nonzero: !f.is_zero(), all_contractions_zero: all_zero })
}

/// True iff `lambda` is a vanishing rectangle of some `m'|n'` with
/// `m' - n' = m - n`.
pub fn is_matching_rectangle(lambda: &Partition, space: SuperSpace) -> bool {
    let Some((rows, cols)) = lambda.rectangle_shape() else {
        return false;
    };
    (0..rows.max(cols)).any(|m2| {
        (0..rows.max(cols)).any(|n2| {
            m2 as i64 - n2 as i64 == space.superdim() && pinned_rectangle(m2, n2) == *lambda
        })
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RectangleRecord {
    pub lambda: String,
    pub m: usize,
    pub n: usize,
    pub f_nonzero: bool,
    pub contractions_zero: bool,
    pub is_rectangle: bool,
}

impl RectangleRecord {
    /// Rows with `f != 0` and vanishing contractions are exactly the
    /// matching rectangles with `f != 0`.
    pub fn consistent(&self) -> bool {
        (self.f_nonzero && self.contractions_zero) == (self.is_rectangle && self.f_nonzero)
    }
}

/// All `(lambda, m|n)` with `|lambda| = d` in `degrees`, `m, n <= max_each`,
/// `m + n >= 1` and `(m+n)^d` within the evaluation bound.
pub fn rectangle_scan(degrees: std::ops::RangeInclusive<usize>, max_each: usize, limits: &Limits) -> Result<Vec<RectangleRecord>> {
    let mut out = Vec::new();
    for d in degrees {
        for m in 0..=max_each {
            for n in 0..=max_each {
                let space = SuperSpace::new(m, n);
                if space.dim() == 0 || limits.check_eval(space.dim(), d).is_err() {
                    continue;
                }
                for lambda in partitions_of(d) {
                    let crit = rectangle_criterion(&lambda, space, limits)?;
                    out.push(RectangleRecord {
                        lambda: lambda.to_wire(),
                        m,
                        n,
                        f_nonzero: crit.f_nonzero,
                        contractions_zero: crit.all_contractions_zero,
                        is_rectangle: is_matching_rectangle(&lambda, space),
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Both sides of the branching rule
/// `S^lambda(V + W) = sum c^lambda_{mu nu} S^mu(V) (x) S^nu(W)` as
/// dimension pairs.
pub fn direct_sum_sides(lambda: &Partition, v: SuperSpace, w: SuperSpace, limits: &Limits) -> Result<(DimPair, DimPair)> {
    let d = lambda.size();
    limits.check_eval(v.dim() + w.dim(), d)?;
    let left = schur_dim(lambda, v.direct_sum(&w), limits)?;
    let mut right = DimPair::default();
    for k in 0..=d {
        for mu in partitions_of(k) {
            if !lambda.contains(&mu) {
                continue;
            }
            for nu in partitions_of(d - k) {
                let c = lr_coeff(lambda, &mu, &nu);
                if c == 0 {
                    continue;
                }
                let term = schur_dim(&mu, v, limits)?.tensor(&schur_dim(&nu, w, limits)?);
                right = right.add(&term.times(c));
            }
        }
    }
    Ok((left, right))
}

pub fn direct_sum_check(lambda: &Partition, v: SuperSpace, w: SuperSpace, limits: &Limits) -> Result<bool> {
    let (left, right) = direct_sum_sides(lambda, v, w, limits)?;
    Ok(left == right)
}
