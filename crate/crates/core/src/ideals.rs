//! Truncated tensor ideals of the free rigid tensor category of rank `r`.
//!
//! In degree `d` an ideal is a two-sided ideal of Q[S_d], hence a union of
//! isotypic blocks, so a truncated ideal is recorded as the set of killed
//! partitions in each degree `0..=D`. Degree 0 holds the unit: killing the
//! empty partition kills everything.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition};
use crate::rational::{q, Q};
use crate::supereval::{evaluates_to_zero, SuperSpace};
use crate::symgroup::{young_symmetrizer, GroupAlgebraElement, Perm};

/// How the vanishing rectangle of `k^{m|n}` sits relative to
/// [`Partition::rectangle`], which has `m+1` columns and `n+1` rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    AsStated,
    Transposed,
}

/// Fixed by [`orientation_scan`]: with row symmetrizers applied after
/// column antisymmetrizers, `S^lambda(k^{m|0})` needs at most `m` rows, so
/// the vanishing rectangle has `m+1` rows and `n+1` columns.
pub const PINNED_ORIENTATION: Orientation = Orientation::Transposed;

pub fn oriented_rectangle(orientation: Orientation, m: usize, n: usize) -> Partition {
    match orientation {
        Orientation::AsStated => Partition::rectangle(m, n),
        Orientation::Transposed => Partition::rectangle(m, n).transpose(),
    }
}

/// The diagram whose containment decides `c_lambda` acting as zero on
/// `k^{m|n}`.
pub fn pinned_rectangle(m: usize, n: usize) -> Partition {
    oriented_rectangle(PINNED_ORIENTATION, m, n)
}

/// The orientations consistent with evaluation: for every `lambda` of size
/// at most 4 and `1 <= m + n <= 2`, `c_lambda` evaluates to zero exactly
/// when `lambda` contains the oriented rectangle.
pub fn orientation_scan(limits: &Limits) -> Result<Vec<Orientation>> {
    let mut ok = vec![true, true];
    let candidates = [Orientation::AsStated, Orientation::Transposed];
    for d in 1..=4 {
        for lambda in partitions_of(d) {
            let c = young_symmetrizer(&lambda)?;
            for (m, n) in [(1, 0), (0, 1), (2, 0), (1, 1), (0, 2)] {
                let zero = evaluates_to_zero(&c, SuperSpace::new(m, n), limits)?;
                for (k, o) in candidates.iter().enumerate() {
                    if lambda.contains(&oriented_rectangle(*o, m, n)) != zero {
                        ok[k] = false;
                    }
                }
            }
        }
    }
    Ok(candidates.into_iter().zip(ok).filter(|(_, v)| *v).map(|(o, _)| o).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IdealSequence {
    pub rank: i64,
    pub max_degree: usize,
    /// Killed partitions for every degree `0..=max_degree`.
    pub killed: BTreeMap<usize, BTreeSet<Partition>>,
}

impl IdealSequence {
    pub fn zero(rank: i64, max_degree: usize) -> Self {
        let killed = (0..=max_degree).map(|d| (d, BTreeSet::new())).collect();
        IdealSequence { rank, max_degree, killed }
    }

    /// Everything killed, the unit included.
    pub fn full(rank: i64, max_degree: usize) -> Self {
        let killed = (0..=max_degree).map(|d| (d, partitions_of(d).into_iter().collect())).collect();
        IdealSequence { rank, max_degree, killed }
    }

    pub fn killed_at(&self, d: usize) -> &BTreeSet<Partition> {
        static EMPTY: BTreeSet<Partition> = BTreeSet::new();
        self.killed.get(&d).unwrap_or(&EMPTY)
    }

    pub fn kills(&self, lambda: &Partition) -> bool {
        self.killed_at(lambda.size()).contains(lambda)
    }

    pub fn kills_unit(&self) -> bool {
        self.kills(&Partition::empty())
    }

    pub fn is_zero(&self) -> bool {
        self.killed.values().all(BTreeSet::is_empty)
    }

    /// True iff `x` lies in the ideal in its degree.
    pub fn contains_element(&self, x: &GroupAlgebraElement) -> bool {
        x.isotypic_support().is_subset(self.killed_at(x.degree()))
    }

    pub fn to_json(&self) -> IdealJson {
        IdealJson {
            rank: self.rank,
            max_degree: self.max_degree,
            killed: self
                .killed
                .iter()
                .map(|(d, set)| (d.to_string(), set.iter().map(Partition::to_wire).collect()))
                .collect(),
        }
    }

    pub fn from_json(json: &IdealJson) -> Result<Self> {
        let mut seq = IdealSequence::zero(json.rank, json.max_degree);
        for (key, parts) in &json.killed {
            let d: usize = key.parse().map_err(|_| Error::Parse(format!("degree key {key:?}")))?;
            if d > json.max_degree {
                return Err(Error::Parse(format!("degree {d} beyond max_degree {}", json.max_degree)));
            }
            let mut set = BTreeSet::new();
            for w in parts {
                let p: Partition = w.parse()?;
                if p.size() != d {
                    return Err(Error::SizeMismatch(format!("{w:?} listed under degree {d}")));
                }
                set.insert(p);
            }
            seq.killed.insert(d, set);
        }
        Ok(seq)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub rank: i64,
    pub max_degree: usize,
    pub killed: BTreeMap<String, Vec<String>>,
}

/// The kernel of evaluation on `k^{m|n}`, truncated at degree `max_degree`.
pub fn jmn_sequence(m: usize, n: usize, max_degree: usize, limits: &Limits) -> Result<IdealSequence> {
    limits.check_degree(max_degree)?;
    let rect = pinned_rectangle(m, n);
    let killed = (0..=max_degree)
        .map(|d| (d, partitions_of(d).into_iter().filter(|l| l.contains(&rect)).collect()))
        .collect();
    Ok(IdealSequence { rank: m as i64 - n as i64, max_degree, killed })
}

pub fn member_by_eval(x: &GroupAlgebraElement, m: usize, n: usize, limits: &Limits) -> Result<bool> {
    evaluates_to_zero(x, SuperSpace::new(m, n), limits)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClosureReport {
    pub induction_ok: bool,
    pub contraction_ok: bool,
}

/// Partitions reached by contracting the block of `lambda` at loop value
/// `r`.
///
/// Contraction over the last strand is a bimodule map for the copy of
/// S_d on the first strands, and `S_{d+1}` is the union of the cosets
/// `S_d s_i` and `s_j S_d` with `s_i` the transposition `(i, d+1)`. So the
/// block generated by `c_lambda` contracts into the ideal generated by the
/// `(d+1)^2` elements `contract(s_i c_lambda s_j)`.
pub fn contraction_support(lambda: &Partition, rank: i64) -> Result<BTreeSet<Partition>> {
    let d1 = lambda.size();
    if d1 == 0 {
        return Err(Error::ZeroDegree);
    }
    let c = young_symmetrizer(lambda)?;
    let t = q(rank);
    let cosets: Vec<GroupAlgebraElement> = (0..d1)
        .map(|i| GroupAlgebraElement::from_perm(Perm::transposition(d1, i, d1 - 1)))
        .collect();
    let mut out = BTreeSet::new();
    for s in &cosets {
        let left = s.multiply(&c)?;
        for u in &cosets {
            let x = left.multiply(u)?.contract(&t)?;
            out.extend(x.isotypic_support());
        }
    }
    Ok(out)
}

pub fn check_closure(seq: &IdealSequence, limits: &Limits) -> Result<ClosureReport> {
    limits.check_degree(seq.max_degree)?;
    let mut induction_ok = true;
    for d in 0..seq.max_degree {
        for lambda in seq.killed_at(d) {
            if !lambda.add_box().iter().all(|mu| seq.kills(mu)) {
                induction_ok = false;
            }
        }
    }
    let mut contraction_ok = true;
    'outer: for d in 1..=seq.max_degree {
        for lambda in seq.killed_at(d) {
            if !contraction_support(lambda, seq.rank)?.is_subset(seq.killed_at(d - 1)) {
                contraction_ok = false;
                break 'outer;
            }
        }
    }
    Ok(ClosureReport { induction_ok, contraction_ok })
}

/// Number of random two-sided translates `a c_lambda b` tried besides
/// `c_lambda` itself in [`is_prime`].
pub const EXTRA_REPRESENTATIVES: usize = 3;

fn random_perm(d: usize, rng: &mut ChaCha8Rng) -> Perm {
    let mut images: Vec<usize> = (0..d).collect();
    images.shuffle(rng);
    Perm::from_images(images).expect("shuffled identity")
}

/// `c_lambda` and up to [`EXTRA_REPRESENTATIVES`] nonzero elements
/// `a c_lambda b` of its block for random permutations `a, b`.
fn block_representatives(lambda: &Partition, rng: &mut ChaCha8Rng) -> Result<Vec<GroupAlgebraElement>> {
    let c = young_symmetrizer(lambda)?;
    let d = lambda.size();
    let mut reps = vec![c.clone()];
    for _ in 0..EXTRA_REPRESENTATIVES {
        let a = GroupAlgebraElement::from_perm(random_perm(d, rng));
        let b = GroupAlgebraElement::from_perm(random_perm(d, rng));
        let x = a.multiply(&c)?.multiply(&b)?;
        if !x.is_zero() && !reps.contains(&x) {
            reps.push(x);
        }
    }
    Ok(reps)
}

/// Truncated primality: for surviving blocks `lambda` in degree `d1 >= 1`
/// and `mu` in degree `d2 >= 1` with `d1 + d2 <= D`, block
/// representatives `x, y` must have `x (x) y` outside the ideal. An ideal
/// containing the unit is everything and counts as prime.
pub fn is_prime(seq: &IdealSequence, seed: u64, limits: &Limits) -> Result<bool> {
    limits.check_degree(seq.max_degree)?;
    if seq.kills_unit() {
        return Ok(true);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut reps: HashMap<Partition, Vec<GroupAlgebraElement>> = HashMap::new();
    for d in 1..seq.max_degree {
        for lambda in partitions_of(d) {
            if !seq.kills(&lambda) {
                reps.insert(lambda.clone(), block_representatives(&lambda, &mut rng)?);
            }
        }
    }
    for d1 in 1..seq.max_degree {
        for d2 in 1..=(seq.max_degree - d1) {
            for lambda in partitions_of(d1).iter().filter(|l| !seq.kills(l)) {
                for mu in partitions_of(d2).iter().filter(|l| !seq.kills(l)) {
                    for x in &reps[lambda] {
                        for y in &reps[mu] {
                            if seq.contains_element(&x.tensor(y)) {
                                return Ok(false);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Caches the per-partition data of a classification run.
struct Classifier {
    rank: i64,
    contraction: HashMap<Partition, BTreeSet<Partition>>,
}

impl Classifier {
    fn contraction(&mut self, lambda: &Partition) -> Result<&BTreeSet<Partition>> {
        if !self.contraction.contains_key(lambda) {
            let s = contraction_support(lambda, self.rank)?;
            self.contraction.insert(lambda.clone(), s);
        }
        Ok(&self.contraction[lambda])
    }

    /// Extends `prefix` (degrees `0..d`) by every admissible killed set in
    /// degree `d`: supersets of the add-a-box images whose contractions
    /// stay in degree `d - 1`.
    fn extend(&mut self, prefix: &mut Vec<BTreeSet<Partition>>, max_degree: usize, out: &mut Vec<Vec<BTreeSet<Partition>>>) -> Result<()> {
        let d = prefix.len();
        if d > max_degree {
            out.push(prefix.clone());
            return Ok(());
        }
        let forced: BTreeSet<Partition> = prefix[d - 1].iter().flat_map(|l| l.add_box()).collect();
        let free: Vec<Partition> = partitions_of(d).into_iter().filter(|l| !forced.contains(l)).collect();
        for mask in 0u64..(1u64 << free.len()) {
            let mut set = forced.clone();
            for (k, l) in free.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    set.insert(l.clone());
                }
            }
            let mut closed = true;
            for l in &set {
                if !self.contraction(l)?.is_subset(&prefix[d - 1]) {
                    closed = false;
                    break;
                }
            }
            if closed {
                prefix.push(set);
                self.extend(prefix, max_degree, out)?;
                prefix.pop();
            }
        }
        Ok(())
    }
}

/// Every closed, prime truncated ideal of rank `r` up to degree `D`, in
/// canonical order.
pub fn enumerate_prime_sequences(rank: i64, max_degree: usize, seed: u64, limits: &Limits) -> Result<Vec<IdealSequence>> {
    if max_degree == 0 {
        return Err(Error::ZeroDegree);
    }
    if max_degree > limits.max_classify_degree {
        return Err(Error::bound("classification degree", max_degree as u128, limits.max_classify_degree as u128));
    }
    limits.check_degree(max_degree)?;
    let mut classifier = Classifier { rank, contraction: HashMap::new() };
    let mut raw = Vec::new();
    for unit_killed in [false, true] {
        let mut prefix = vec![if unit_killed {
            BTreeSet::from([Partition::empty()])
        } else {
            BTreeSet::new()
        }];
        classifier.extend(&mut prefix, max_degree, &mut raw)?;
    }
    let mut out = BTreeSet::new();
    for levels in raw {
        let seq = IdealSequence {
            rank,
            max_degree,
            killed: levels.into_iter().enumerate().collect(),
        };
        if is_prime(&seq, seed, limits)? {
            out.insert(seq);
        }
    }
    Ok(out.into_iter().collect())
}

/// The truncated sequences the classification predicts for rank `r`: zero,
/// everything, and each `J_{m|n}` with `m - n = r` whose rectangle fits in
/// degree `D`.
pub fn expected_prime_sequences(rank: i64, max_degree: usize, limits: &Limits) -> Result<Vec<IdealSequence>> {
    let mut out = BTreeSet::from([IdealSequence::zero(rank, max_degree), IdealSequence::full(rank, max_degree)]);
    for n in 0..=max_degree {
        let m = n as i64 + rank;
        if m < 0 {
            continue;
        }
        let m = m as usize;
        if (m + 1) * (n + 1) <= max_degree {
            out.insert(jmn_sequence(m, n, max_degree, limits)?);
        }
    }
    Ok(out.into_iter().collect())
}

/// Degree-0 membership of a scalar as an element of `Q[S_0]`.
pub fn unit_element(c: Q) -> GroupAlgebraElement {
    GroupAlgebraElement::identity(0).scale(&c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn lim() -> Limits {
        Limits::default()
    }

    fn set(items: &[&str]) -> BTreeSet<Partition> {
        items.iter().map(|s| p(s)).collect()
    }

    #[test]
    fn orientation_is_pinned_by_evaluation() {
        assert_eq!(orientation_scan(&lim()).unwrap(), vec![PINNED_ORIENTATION]);
        assert_eq!(pinned_rectangle(1, 0), p("1,1"));
        assert_eq!(pinned_rectangle(0, 1), p("2"));
        assert_eq!(pinned_rectangle(2, 1), p("2,2,2"));
    }

    #[test]
    fn jmn_examples() {
        let j = jmn_sequence(1, 1, 4, &lim()).unwrap();
        assert_eq!(j.rank, 0);
        assert_eq!(j.killed_at(4), &set(&["2,2"]));
        for d in 0..4 {
            assert!(j.killed_at(d).is_empty());
        }
        let j = jmn_sequence(0, 0, 2, &lim()).unwrap();
        assert_eq!(j.killed_at(1), &set(&["1"]));
        assert_eq!(j.killed_at(2), &set(&["2", "1,1"]));
        assert!(!j.kills_unit());
        let j = jmn_sequence(2, 2, 4, &lim()).unwrap();
        assert!(j.is_zero());
        assert!(jmn_sequence(1, 1, 8, &lim()).is_err());
    }

    #[test]
    fn member_examples() {
        let c22 = young_symmetrizer(&p("2,2")).unwrap();
        assert!(member_by_eval(&c22, 1, 1, &lim()).unwrap());
        assert!(!member_by_eval(&GroupAlgebraElement::identity(3), 0, 1, &lim()).unwrap());
        let c11 = young_symmetrizer(&p("1,1")).unwrap();
        assert!(member_by_eval(&c11, 1, 0, &lim()).unwrap());
    }

    #[test]
    fn closure_examples() {
        let r = check_closure(&jmn_sequence(1, 1, 5, &lim()).unwrap(), &lim()).unwrap();
        assert_eq!(r, ClosureReport { induction_ok: true, contraction_ok: true });
        let mut bad = IdealSequence::zero(0, 3);
        bad.killed.insert(2, set(&["2"]));
        assert!(!check_closure(&bad, &lim()).unwrap().induction_ok);
        let r = check_closure(&IdealSequence::zero(3, 4), &lim()).unwrap();
        assert_eq!(r, ClosureReport { induction_ok: true, contraction_ok: true });
        // killing every positive degree keeps the unit alive only at rank 0
        let mut all_but_unit = IdealSequence::full(1, 3);
        all_but_unit.killed.insert(0, BTreeSet::new());
        assert!(!check_closure(&all_but_unit, &lim()).unwrap().contraction_ok);
        all_but_unit.rank = 0;
        assert!(check_closure(&all_but_unit, &lim()).unwrap().contraction_ok);
    }

    #[test]
    fn contraction_support_of_a_box() {
        assert_eq!(contraction_support(&p("1"), 2).unwrap(), set(&[""]));
        assert!(contraction_support(&p("1"), 0).unwrap().is_empty());
        // contracting the antisymmetrizer on two strands gives (t - 1) e
        assert!(contraction_support(&p("1,1"), 1).unwrap().is_empty());
        assert_eq!(contraction_support(&p("1,1"), 3).unwrap(), set(&["1"]));
    }

    #[test]
    fn prime_examples() {
        assert!(is_prime(&jmn_sequence(1, 0, 4, &lim()).unwrap(), 0, &lim()).unwrap());
        assert!(is_prime(&IdealSequence::full(0, 4), 0, &lim()).unwrap());
        assert!(is_prime(&IdealSequence::zero(0, 4), 0, &lim()).unwrap());
        // the union of the families above (2) and above (1,1): the box
        // survives, but its square lies in both
        let mut union = IdealSequence::zero(0, 2);
        union.killed.insert(2, set(&["2", "1,1"]));
        assert!(!is_prime(&union, 0, &lim()).unwrap());
    }

    #[test]
    fn json_roundtrip() {
        let j = jmn_sequence(1, 0, 3, &lim()).unwrap();
        let text = serde_json::to_string(&j.to_json()).unwrap();
        assert!(text.contains("\"2\":[\"1,1\"]"), "{text}");
        let back: IdealJson = serde_json::from_str(&text).unwrap();
        assert_eq!(IdealSequence::from_json(&back).unwrap(), j);
        let full = IdealSequence::full(0, 1).to_json();
        assert_eq!(full.killed["0"], vec![String::new()]);
    }

    #[test]
    fn unit_element_support() {
        assert_eq!(unit_element(q(2)).isotypic_support(), set(&[""]));
        assert!(unit_element(q(0)).isotypic_support().is_empty());
    }
}
