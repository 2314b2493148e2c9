use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::character::mn_character;
use super::perm::{all_perms, block_stabilizer, Perm};
use super::poly::TracePolynomial;
use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition};
use crate::rational::{factorial, q, serde_q, Q};

/// An element of the group algebra Q[S_d]: a finite rational combination of
/// permutations of a fixed degree. Zero coefficients are never stored, so
/// equality is termwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    degree: usize,
    terms: BTreeMap<Perm, Q>,
}

impl GroupAlgebraElement {
    pub fn zero(degree: usize) -> Self {
        Self { degree, terms: BTreeMap::new() }
    }

    pub fn identity(degree: usize) -> Self {
        Self::from_perm(Perm::identity(degree))
    }

    pub fn from_perm(p: Perm) -> Self {
        Self::from_terms(p.degree(), [(p, Q::one())]).expect("single term has one degree")
    }

    pub fn from_terms<I: IntoIterator<Item = (Perm, Q)>>(degree: usize, terms: I) -> Result<Self> {
        let mut out = Self::zero(degree);
        for (p, c) in terms {
            if p.degree() != degree {
                return Err(Error::DegreeMismatch { left: degree, right: p.degree() });
            }
            out.add_term(p, c);
        }
        Ok(out)
    }

    fn add_term(&mut self, p: Perm, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, p: &Perm) -> Q {
        self.terms.get(p).cloned().unwrap_or_else(Q::zero)
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree);
        }
        Self {
            degree: self.degree,
            terms: self.terms.iter().map(|(p, x)| (p.clone(), x * c)).collect(),
        }
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: other.degree });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    /// Convolution product; `x * y` applies `y` first.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut acc: HashMap<Perm, Q> = HashMap::new();
        for (p, a) in &self.terms {
            for (r, b) in &other.terms {
                *acc.entry(p.compose(r)).or_insert_with(Q::zero) += a * b;
            }
        }
        Self::from_terms(self.degree, acc)
    }

    /// The inclusion Q[S_d] -> Q[S_{d+1}]: each permutation fixes the new
    /// last strand.
    pub fn embed(&self) -> Self {
        Self {
            degree: self.degree + 1,
            terms: self.terms.iter().map(|(p, c)| (p.extend(), c.clone())).collect(),
        }
    }

    /// `self` on the first strands, `other` on the remaining ones.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.degree + other.degree);
        for (p, a) in &self.terms {
            for (r, b) in &other.terms {
                out.add_term(p.juxtapose(r), a * b);
            }
        }
        out
    }

    /// Partial trace over the last strand with loop value `t`. A permutation
    /// fixing the last point restricts and picks up a factor `t`; otherwise
    /// the strand through the last point is spliced out.
    pub fn contract(&self, t: &Q) -> Result<Self> {
        if self.degree == 0 {
            return Err(Error::ZeroDegree);
        }
        let last = self.degree - 1;
        let mut out = Self::zero(last);
        for (p, c) in &self.terms {
            let img = p.images();
            if img[last] == last {
                let restricted = Perm::from_images(img[..last].to_vec()).expect("restriction");
                out.add_term(restricted, c * t);
            } else {
                let pre = p.inverse().apply(last);
                let mut spliced = img[..last].to_vec();
                spliced[pre] = img[last];
                out.add_term(Perm::from_images(spliced).expect("splice"), c.clone());
            }
        }
        Ok(out)
    }

    /// `sum_sigma coeff(sigma) * t^(cycles of sigma)`.
    pub fn trace_poly(&self) -> TracePolynomial {
        let mut coeffs = vec![Q::zero(); self.degree + 1];
        for (p, c) in &self.terms {
            coeffs[p.cycle_count()] += c;
        }
        TracePolynomial::new(coeffs)
    }

    /// The partitions whose isotypic block of `self` is nonzero. Block
    /// `lambda` vanishes iff `sum_tau x_tau chi^lambda(tau sigma) = 0` for
    /// every sigma, since that sum is the trace of `rho(x) rho(sigma)`.
    pub fn isotypic_support(&self) -> BTreeSet<Partition> {
        if self.is_zero() {
            return BTreeSet::new();
        }
        let perms = all_perms(self.degree);
        let mut classes: HashMap<Partition, usize> = HashMap::new();
        let class_of: Vec<(Perm, usize)> = perms
            .iter()
            .map(|s| {
                let ct = s.cycle_type();
                let n = classes.len();
                (s.clone(), *classes.entry(ct).or_insert(n))
            })
            .collect();
        let class_index: HashMap<Perm, usize> = class_of.into_iter().collect();
        let mut class_list = vec![Partition::empty(); classes.len()];
        for (ct, i) in &classes {
            class_list[*i] = ct.clone();
        }
        let mut support = BTreeSet::new();
        for lambda in partitions_of(self.degree) {
            let chi: Vec<i64> = class_list
                .iter()
                .map(|c| mn_character(&lambda, c).expect("sizes agree"))
                .collect();
            let nonzero = perms.iter().any(|sigma| {
                let mut acc = Q::zero();
                for (tau, c) in &self.terms {
                    let v = chi[class_index[&tau.compose(sigma)]];
                    if v != 0 {
                        acc += c * q(v);
                    }
                }
                !acc.is_zero()
            });
            if nonzero {
                support.insert(lambda);
            }
        }
        support
    }

    pub fn to_json(&self) -> ElementJson {
        ElementJson {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(p, c)| TermJson { perm: p.one_line(), coeff: c.clone() })
                .collect(),
        }
    }

    pub fn from_json(json: &ElementJson) -> Result<Self> {
        Self::terms_from_json(json.degree, &json.terms)
    }

    pub fn terms_from_json(degree: usize, terms: &[TermJson]) -> Result<Self> {
        let terms = terms
            .iter()
            .map(|t| Ok((Perm::from_one_line(&t.perm)?, t.coeff.clone())))
            .collect::<Result<Vec<_>>>()?;
        Self::from_terms(degree, terms)
    }
}

impl Add for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;

    /// Panics on a degree mismatch; use `try_add` for fallible addition.
    fn add(self, rhs: &GroupAlgebraElement) -> GroupAlgebraElement {
        self.try_add(rhs).expect("degree mismatch in group algebra addition")
    }
}

impl Neg for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;

    fn neg(self) -> GroupAlgebraElement {
        self.scale(&q(-1))
    }
}

impl Sub for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;

    fn sub(self, rhs: &GroupAlgebraElement) -> GroupAlgebraElement {
        self + &(-rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub perm: Vec<usize>,
    #[serde(with = "serde_q")]
    pub coeff: Q,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub degree: usize,
    pub terms: Vec<TermJson>,
}

/// Rows of the canonical tableau: row `i` holds `lambda_1 + .. + lambda_{i-1} + 1 ..`,
/// as 0-based positions.
pub fn canonical_rows(lambda: &Partition) -> Vec<Vec<usize>> {
    let mut next = 0;
    lambda
        .parts()
        .iter()
        .map(|&len| {
            let row: Vec<usize> = (next..next + len).collect();
            next += len;
            row
        })
        .collect()
}

pub fn canonical_columns(lambda: &Partition) -> Vec<Vec<usize>> {
    let rows = canonical_rows(lambda);
    (0..lambda.part(0))
        .map(|j| rows.iter().filter_map(|r| r.get(j).copied()).collect())
        .collect()
}

/// Sum of the row-preserving permutations of the canonical tableau.
pub fn row_symmetrizer(lambda: &Partition) -> GroupAlgebraElement {
    let d = lambda.size();
    let terms = block_stabilizer(d, &canonical_rows(lambda)).into_iter().map(|p| (p, Q::one()));
    GroupAlgebraElement::from_terms(d, terms).expect("uniform degree")
}

/// Signed sum of the column-preserving permutations.
pub fn column_antisymmetrizer(lambda: &Partition) -> GroupAlgebraElement {
    let d = lambda.size();
    let terms = block_stabilizer(d, &canonical_columns(lambda))
        .into_iter()
        .map(|p| {
            let s = p.sign();
            (p, q(s))
        });
    GroupAlgebraElement::from_terms(d, terms).expect("uniform degree")
}

/// `c_lambda = a_lambda * b_lambda` for the canonical row-filling tableau:
/// antisymmetrize columns, then symmetrize rows.
pub fn young_symmetrizer(lambda: &Partition) -> Result<GroupAlgebraElement> {
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    row_symmetrizer(lambda).multiply(&column_antisymmetrizer(lambda))
}

/// `d! / f^lambda`, the scalar with `c_lambda^2 = scalar * c_lambda`.
pub fn quasi_idempotent_scalar(lambda: &Partition) -> Q {
    Q::new(factorial(lambda.size()), BigInt::from(lambda.count_standard_tableaux()))
}

/// The primitive idempotent `e_lambda = (f^lambda / d!) c_lambda`.
pub fn primitive_idempotent(lambda: &Partition) -> Result<GroupAlgebraElement> {
    Ok(young_symmetrizer(lambda)?.scale(&quasi_idempotent_scalar(lambda).recip()))
}
