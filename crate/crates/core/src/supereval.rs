//! Super vector spaces `k^{m|n}`, the Koszul-signed action of S_d on tensor
//! powers, and the linear algebra of the resulting operators: supertraces,
//! partial supertraces, image dimensions, gl(m|n) commutants and the trace
//! form of the image algebra.
//!
//! Basis vectors `0..m` are even and `m..m+n` odd. Multi-indices of
//! `V^{(x)d}` are ordered lexicographically with the leftmost factor most
//! significant.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::linalg::{self, Dense, Echelon, SparseRow};
use crate::rational::{q, serde_q, Q};
use crate::symgroup::{all_perms, GroupAlgebraElement, Perm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SuperSpace {
    pub m: usize,
    pub n: usize,
}

impl SuperSpace {
    pub fn new(m: usize, n: usize) -> Self {
        SuperSpace { m, n }
    }

    pub fn even(m: usize) -> Self {
        SuperSpace { m, n: 0 }
    }

    pub fn unit() -> Self {
        SuperSpace { m: 1, n: 0 }
    }

    pub fn dim(&self) -> usize {
        self.m + self.n
    }

    pub fn superdim(&self) -> i64 {
        self.m as i64 - self.n as i64
    }

    pub fn is_odd(&self, basis: usize) -> bool {
        basis >= self.m
    }

    pub fn side(&self, d: usize) -> usize {
        self.dim().pow(d as u32)
    }

    pub fn direct_sum(&self, other: &SuperSpace) -> SuperSpace {
        SuperSpace::new(self.m + other.m, self.n + other.n)
    }

    /// `self (x) other` as a super space, with the product basis ordered
    /// lexicographically (left factor most significant).
    pub fn tensor(&self, other: &SuperSpace) -> SuperSpace {
        SuperSpace::new(self.m * other.m + self.n * other.n, self.m * other.n + self.n * other.m)
    }

    /// Parity of product-basis element `i` of `self (x) other` in
    /// lexicographic order. This is not `tensor().is_odd(i)`: the product
    /// basis is not sorted even-first.
    pub fn tensor_parity(&self, other: &SuperSpace, i: usize) -> bool {
        self.is_odd(i / other.dim()) ^ other.is_odd(i % other.dim())
    }
}

impl fmt::Display for SuperSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.m, self.n)
    }
}

/// Even and odd dimensions of a super vector space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct DimPair {
    pub even: u64,
    pub odd: u64,
}

impl DimPair {
    pub fn new(even: u64, odd: u64) -> Self {
        DimPair { even, odd }
    }

    pub fn superdim(&self) -> i64 {
        self.even as i64 - self.odd as i64
    }

    pub fn total(&self) -> u64 {
        self.even + self.odd
    }

    /// Dimension pair of a tensor product.
    pub fn tensor(&self, other: &DimPair) -> DimPair {
        DimPair {
            even: self.even * other.even + self.odd * other.odd,
            odd: self.even * other.odd + self.odd * other.even,
        }
    }

    pub fn add(&self, other: &DimPair) -> DimPair {
        DimPair { even: self.even + other.even, odd: self.odd + other.odd }
    }

    pub fn times(&self, k: u64) -> DimPair {
        DimPair { even: self.even * k, odd: self.odd * k }
    }
}

/// Digits of a multi-index, leftmost factor first.
pub fn digits(mut index: usize, base: usize, d: usize) -> Vec<usize> {
    let mut out = vec![0; d];
    for slot in out.iter_mut().rev() {
        *slot = index % base;
        index /= base;
    }
    out
}

pub fn undigits(digits: &[usize], base: usize) -> usize {
    digits.iter().fold(0, |acc, &x| acc * base + x)
}

/// Sparse exact-rational endomorphism of `V^{(x)d}`, stored by rows.
#[derive(Clone, PartialEq, Eq)]
pub struct SuperOperator {
    space: SuperSpace,
    degree: usize,
    rows: Vec<SparseRow>,
}

impl fmt::Debug for SuperOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SuperOperator({}^{}, {} nonzeros)",
            self.space,
            self.degree,
            self.nnz()
        )
    }
}

impl SuperOperator {
    pub fn zero(space: SuperSpace, degree: usize) -> Self {
        SuperOperator { space, degree, rows: vec![Vec::new(); space.side(degree)] }
    }

    pub fn identity(space: SuperSpace, degree: usize) -> Self {
        let rows = (0..space.side(degree)).map(|i| vec![(i, Q::one())]).collect();
        SuperOperator { space, degree, rows }
    }

    pub fn from_rows(space: SuperSpace, degree: usize, rows: Vec<SparseRow>) -> Result<Self> {
        let side = space.side(degree);
        if rows.len() != side || rows.iter().flatten().any(|(c, _)| *c >= side) {
            return Err(Error::ShapeMismatch(format!("operator on ({space})^{degree} needs side {side}")));
        }
        let rows = rows
            .into_iter()
            .map(|r| linalg::sparse_from_map(r.into_iter().fold(BTreeMap::new(), |mut m, (c, v)| {
                *m.entry(c).or_insert_with(Q::zero) += v;
                m
            })))
            .collect();
        Ok(SuperOperator { space, degree, rows })
    }

    pub fn space(&self) -> SuperSpace {
        self.space
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn side(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> Q {
        self.rows[r]
            .binary_search_by_key(&c, |e| e.0)
            .map(|k| self.rows[r][k].1.clone())
            .unwrap_or_else(|_| Q::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    /// Total parity of a multi-index.
    pub fn index_parity(&self, index: usize) -> bool {
        let base = self.space.dim();
        digits(index, base, self.degree).iter().filter(|&&i| self.space.is_odd(i)).count() % 2 == 1
    }

    pub fn is_even(&self) -> bool {
        self.rows.iter().enumerate().all(|(r, row)| {
            let pr = self.index_parity(r);
            row.iter().all(|(c, _)| self.index_parity(*c) == pr)
        })
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.space != other.space || self.degree != other.degree {
            return Err(Error::ShapeMismatch(format!(
                "({})^{} vs ({})^{}",
                self.space, self.degree, other.space, other.degree
            )));
        }
        Ok(())
    }

    /// Composition `self . other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
                for (k, a) in row {
                    for (j, b) in &other.rows[*k] {
                        *acc.entry(*j).or_insert_with(Q::zero) += a * b;
                    }
                }
                linalg::sparse_from_map(acc)
            })
            .collect();
        Ok(SuperOperator { space: self.space, degree: self.degree, rows })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| {
                let mut acc: BTreeMap<usize, Q> = a.iter().cloned().collect();
                for (c, v) in b {
                    *acc.entry(*c).or_insert_with(Q::zero) += v;
                }
                linalg::sparse_from_map(acc)
            })
            .collect();
        Ok(SuperOperator { space: self.space, degree: self.degree, rows })
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero(self.space, self.degree);
        }
        let rows = self.rows.iter().map(|r| r.iter().map(|(j, v)| (*j, v * c)).collect()).collect();
        SuperOperator { space: self.space, degree: self.degree, rows }
    }

    /// `self (x) id_V`, one more factor on the right.
    pub fn tensor_identity(&self) -> Self {
        let b = self.space.dim();
        let mut rows = Vec::with_capacity(self.side() * b);
        for row in &self.rows {
            for k in 0..b {
                rows.push(row.iter().map(|(c, v)| (c * b + k, v.clone())).collect());
            }
        }
        SuperOperator { space: self.space, degree: self.degree + 1, rows }
    }

    pub fn trace(&self) -> Q {
        (0..self.side()).map(|i| self.get(i, i)).fold(Q::zero(), |a, b| a + b)
    }

    /// `sum_I (-1)^{|I|} A[I, I]`.
    pub fn supertrace(&self) -> Q {
        let mut acc = Q::zero();
        for i in 0..self.side() {
            let v = self.get(i, i);
            if v.is_zero() {
                continue;
            }
            if self.index_parity(i) {
                acc -= v;
            } else {
                acc += v;
            }
        }
        acc
    }

    /// Supertrace over tensor factor `position` (1-based). The traced
    /// factor is first moved to the right end past the later factors, which
    /// costs `(-1)^{|k| (|tail_I| + |tail_J|)}`, and then closed off with the
    /// supertrace sign `(-1)^{|k|}`.
    pub fn partial_supertrace(&self, position: usize) -> Result<Self> {
        let d = self.degree;
        if position == 0 || position > d {
            return Err(Error::PositionOutOfRange { position, degree: d });
        }
        let p = position - 1;
        let base = self.space.dim();
        let tail_parity = |ds: &[usize]| ds[p + 1..].iter().filter(|&&x| self.space.is_odd(x)).count();
        let mut out: Vec<BTreeMap<usize, Q>> = vec![BTreeMap::new(); self.space.side(d - 1)];
        for (r, row) in self.rows.iter().enumerate() {
            let rd = digits(r, base, d);
            let k = rd[p];
            let k_odd = self.space.is_odd(k);
            let mut r_rest = rd.clone();
            r_rest.remove(p);
            let r_new = undigits(&r_rest, base);
            for (c, v) in row {
                let cd = digits(*c, base, d);
                if cd[p] != k {
                    continue;
                }
                let mut c_rest = cd.clone();
                c_rest.remove(p);
                let c_new = undigits(&c_rest, base);
                let flips = if k_odd { 1 + tail_parity(&rd) + tail_parity(&cd) } else { 0 };
                let entry = out[r_new].entry(c_new).or_insert_with(Q::zero);
                if flips % 2 == 0 {
                    *entry += v;
                } else {
                    *entry -= v;
                }
            }
        }
        let rows = out.into_iter().map(linalg::sparse_from_map).collect();
        Ok(SuperOperator { space: self.space, degree: d - 1, rows })
    }

    /// Even and odd dimensions of the image.
    pub fn rank_pair(&self) -> Result<DimPair> {
        if !self.is_even() {
            return Err(Error::NotEven);
        }
        let parity: Vec<bool> = (0..self.side()).map(|i| self.index_parity(i)).collect();
        let mut pair = DimPair::default();
        for component in row_components(&self.rows, self.side()) {
            let odd = parity[component[0]];
            let rank = linalg::sparse_rank(component.iter().map(|&r| self.rows[r].clone()));
            if odd {
                pair.odd += rank as u64;
            } else {
                pair.even += rank as u64;
            }
        }
        Ok(pair)
    }

    pub fn to_json(&self) -> OperatorJson {
        let base = self.space.dim();
        let entries = self
            .rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| {
                row.iter().map(move |(c, v)| EntryJson {
                    row: digits(r, base, self.degree),
                    col: digits(*c, base, self.degree),
                    coeff: v.clone(),
                })
            })
            .collect();
        OperatorJson { degree: self.degree, space: self.space, entries }
    }

    pub fn from_json(json: &OperatorJson) -> Result<Self> {
        let base = json.space.dim();
        let d = json.degree;
        let mut rows = vec![Vec::new(); json.space.side(d)];
        for e in &json.entries {
            if e.row.len() != d || e.col.len() != d || e.row.iter().chain(&e.col).any(|&x| x >= base) {
                return Err(Error::ShapeMismatch(format!("bad multi-index in entry {:?}/{:?}", e.row, e.col)));
            }
            rows[undigits(&e.row, base)].push((undigits(&e.col, base), e.coeff.clone()));
        }
        Self::from_rows(json.space, d, rows)
    }
}

/// Groups row indices into the connected components of the bipartite
/// row/column incidence graph; rank is additive over components. Rows of
/// the zero pattern are dropped.
fn row_components(rows: &[SparseRow], side: usize) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..side).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    // union rows that share a column
    let mut owner: HashMap<usize, usize> = HashMap::new();
    for (r, row) in rows.iter().enumerate() {
        for (c, _) in row {
            if let Some(&o) = owner.get(c) {
                let (a, b) = (find(&mut parent, o), find(&mut parent, r));
                parent[a] = b;
            } else {
                owner.insert(*c, r);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (r, row) in rows.iter().enumerate() {
        if !row.is_empty() {
            let root = find(&mut parent, r);
            groups.entry(root).or_default().push(r);
        }
    }
    groups.into_values().collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    pub row: Vec<usize>,
    pub col: Vec<usize>,
    #[serde(with = "serde_q")]
    pub coeff: Q,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorJson {
    pub degree: usize,
    pub space: SuperSpace,
    pub entries: Vec<EntryJson>,
}

/// Where `sigma` sends basis tensor `index`, and the Koszul sign: the vector
/// in position `k` moves to position `sigma(k)`, and each pair of odd
/// vectors whose order is reversed contributes a factor -1.
fn permute_index(sigma: &Perm, ds: &[usize], space: SuperSpace) -> (usize, bool) {
    let d = ds.len();
    let mut target = vec![0; d];
    for (k, &x) in ds.iter().enumerate() {
        target[sigma.apply(k)] = x;
    }
    let mut negative = false;
    for k in 0..d {
        if !space.is_odd(ds[k]) {
            continue;
        }
        for l in k + 1..d {
            if space.is_odd(ds[l]) && sigma.apply(k) > sigma.apply(l) {
                negative = !negative;
            }
        }
    }
    (undigits(&target, space.dim()), negative)
}

/// The symmetry of `V^{(x)d}` induced by `sigma`, with Koszul signs.
pub fn perm_operator(sigma: &Perm, space: SuperSpace) -> SuperOperator {
    let d = sigma.degree();
    let side = space.side(d);
    let mut rows: Vec<SparseRow> = vec![Vec::new(); side];
    for col in 0..side {
        let (row, neg) = permute_index(sigma, &digits(col, space.dim(), d), space);
        rows[row].push((col, if neg { q(-1) } else { q(1) }));
    }
    SuperOperator { space, degree: d, rows }
}

/// The image of a group-algebra element under the Koszul-signed action.
pub fn evaluate(x: &GroupAlgebraElement, space: SuperSpace, limits: &Limits) -> Result<SuperOperator> {
    let d = x.degree();
    limits.check_eval(space.dim(), d)?;
    let side = space.side(d);
    let terms: Vec<(&Perm, &Q)> = x.terms().collect();
    let mut rows: Vec<SparseRow> = vec![Vec::new(); side];
    let mut col_acc: HashMap<usize, Q> = HashMap::new();
    for col in 0..side {
        let ds = digits(col, space.dim(), d);
        col_acc.clear();
        for (sigma, c) in &terms {
            let (row, neg) = permute_index(sigma, &ds, space);
            let e = col_acc.entry(row).or_insert_with(Q::zero);
            if neg {
                *e -= *c;
            } else {
                *e += *c;
            }
        }
        for (row, v) in col_acc.drain() {
            if !v.is_zero() {
                rows[row].push((col, v));
            }
        }
    }
    Ok(SuperOperator { space, degree: d, rows })
}

/// Matrix entry `evaluate(x)[row, col]` for multi-indices given as digits,
/// without building the operator.
pub fn operator_entry(x: &GroupAlgebraElement, space: SuperSpace, row: &[usize], col: &[usize]) -> Result<Q> {
    let d = x.degree();
    if row.len() != d || col.len() != d || row.iter().chain(col).any(|&i| i >= space.dim()) {
        return Err(Error::ShapeMismatch(format!("multi-indices {row:?}/{col:?} on ({space})^{d}")));
    }
    let target = undigits(row, space.dim());
    let mut acc = Q::zero();
    for (sigma, c) in x.terms() {
        let (r, neg) = permute_index(sigma, col, space);
        if r == target {
            if neg {
                acc -= c;
            } else {
                acc += c;
            }
        }
    }
    Ok(acc)
}

/// True iff `x` acts as zero on `V^{(x)d}`.
pub fn evaluates_to_zero(x: &GroupAlgebraElement, space: SuperSpace, limits: &Limits) -> Result<bool> {
    Ok(evaluate(x, space, limits)?.is_zero())
}

/// Weight (occupation count of each basis vector) of a multi-index.
fn weight(ds: &[usize], base: usize) -> Vec<u8> {
    let mut w = vec![0u8; base];
    for &x in ds {
        w[x] += 1;
    }
    w
}

/// Dimension of the even operators on `V^{(x)d}` commuting with the
/// Leibniz action of every elementary matrix `E_ab` of gl(m|n).
///
/// Commuting with the diagonal `E_aa` forces `X[I,J] = 0` unless `I` and
/// `J` have the same weight, so the unknowns are the entries of the
/// weight-diagonal blocks (such operators are automatically even). The
/// off-diagonal generators give the remaining linear equations, and the
/// answer is the nullspace dimension.
pub fn commutant_dim(space: SuperSpace, d: usize, limits: &Limits) -> Result<usize> {
    if d == 0 {
        return Err(Error::ZeroDegree);
    }
    limits.check_commutant(space.dim(), d)?;
    let base = space.dim();
    let side = space.side(d);
    if side == 0 {
        return Ok(0);
    }
    let all_digits: Vec<Vec<usize>> = (0..side).map(|i| digits(i, base, d)).collect();
    let mut blocks: BTreeMap<Vec<u8>, Vec<usize>> = BTreeMap::new();
    for (i, ds) in all_digits.iter().enumerate() {
        blocks.entry(weight(ds, base)).or_default().push(i);
    }
    // unknown id of X[I, J] for I, J in one weight block
    let mut block_of = vec![(0usize, 0usize); side];
    let mut offsets = Vec::new();
    let mut unknowns = 0;
    for (b, members) in blocks.values().enumerate() {
        offsets.push(unknowns);
        for (pos, &i) in members.iter().enumerate() {
            block_of[i] = (b, pos);
        }
        unknowns += members.len() * members.len();
    }
    let block_sizes: Vec<usize> = blocks.values().map(Vec::len).collect();
    let var = |i: usize, j: usize| {
        let (b, pi) = block_of[i];
        let (b2, pj) = block_of[j];
        debug_assert_eq!(b, b2);
        offsets[b] + pi * block_sizes[b] + pj
    };
    // E_ab applied at each position of e_J holding b: (target, sign)
    let leibniz = |ds: &[usize], from: usize, to: usize| -> Vec<(usize, bool)> {
        let gen_odd = space.is_odd(from) ^ space.is_odd(to);
        let mut out = Vec::new();
        let mut prefix_odd = false;
        for (k, &x) in ds.iter().enumerate() {
            if x == from {
                let mut t = ds.to_vec();
                t[k] = to;
                out.push((undigits(&t, base), gen_odd && prefix_odd));
            }
            prefix_odd ^= space.is_odd(x);
        }
        out
    };

    let mut ech = Echelon::new();
    for a in 0..base {
        for b in 0..base {
            if a == b {
                continue;
            }
            // (Delta X)[I,J] - (X Delta)[I,J] = 0 where weight(I) = weight(J) + e_a - e_b
            for (j, jd) in all_digits.iter().enumerate() {
                let right: Vec<(usize, bool)> = leibniz(jd, b, a);
                if right.is_empty() {
                    continue;
                }
                let target_block = &blocks[&weight(&all_digits[right[0].0], base)];
                for &i in target_block {
                    let mut eq: BTreeMap<usize, Q> = BTreeMap::new();
                    // Delta[I, K] X[K, J]: K = I with one `a` turned back into `b`
                    for (k, neg) in leibniz(&all_digits[i], a, b) {
                        // sign is computed on K's prefix, which equals I's prefix
                        let e = eq.entry(var(k, j)).or_insert_with(Q::zero);
                        if neg {
                            *e -= q(1);
                        } else {
                            *e += q(1);
                        }
                    }
                    for &(k, neg) in &right {
                        let e = eq.entry(var(i, k)).or_insert_with(Q::zero);
                        if neg {
                            *e += q(1);
                        } else {
                            *e -= q(1);
                        }
                    }
                    let row = linalg::sparse_from_map(eq);
                    if !row.is_empty() {
                        ech.insert(row);
                    }
                }
            }
        }
    }
    Ok(unknowns - ech.rank())
}

/// Dimension of the span of the symmetries `{perm_operator(sigma)}`.
pub fn perm_span_dim(space: SuperSpace, d: usize, limits: &Limits) -> Result<usize> {
    limits.check_commutant(space.dim(), d)?;
    Ok(independent_perms(space, d).len())
}

/// A maximal subset of S_d with linearly independent symmetries, greedily
/// in lexicographic order.
fn independent_perms(space: SuperSpace, d: usize) -> Vec<Perm> {
    let side = space.side(d);
    let mut ech = Echelon::new();
    let mut out = Vec::new();
    for sigma in all_perms(d) {
        let op = perm_operator(&sigma, space);
        let mut flat: SparseRow = Vec::with_capacity(side);
        for (r, row) in op.rows.iter().enumerate() {
            for (c, v) in row {
                flat.push((r * side + c, v.clone()));
            }
        }
        if ech.insert(flat) {
            out.push(sigma);
        }
    }
    out
}

/// Gram matrix of the ordinary trace form `(x, y) -> tr(xy)` on a basis of
/// the image of Q[S_d] in `End(V^{(x)d})`.
pub fn image_trace_gram(space: SuperSpace, d: usize, limits: &Limits) -> Result<Dense> {
    if d == 0 {
        return Err(Error::ZeroDegree);
    }
    limits.check_commutant(space.dim(), d)?;
    let basis: Vec<SuperOperator> =
        independent_perms(space, d).iter().map(|s| perm_operator(s, space)).collect();
    let mut gram = linalg::zeros(basis.len(), basis.len());
    for (i, x) in basis.iter().enumerate() {
        for (j, y) in basis.iter().enumerate().skip(i) {
            let t = x.compose(y)?.trace();
            gram[i][j] = t.clone();
            gram[j][i] = t;
        }
    }
    Ok(gram)
}

/// Semisimplicity of the image algebra: in characteristic 0 the trace form
/// of a faithful module is nondegenerate exactly when the algebra is
/// semisimple.
pub fn image_algebra_semisimple(space: SuperSpace, d: usize, limits: &Limits) -> Result<bool> {
    let gram = image_trace_gram(space, d, limits)?;
    Ok(gram.is_empty() || !linalg::determinant(&gram).is_zero())
}

/// Koszul symmetry `A (x) B (x) C -> B (x) A (x) C` as a dense matrix in the
/// lexicographic product bases, rows indexed by the target. Each factor is
/// given by the parities of its basis vectors.
pub fn koszul_swap(a: &[bool], b: &[bool], c_dim: usize) -> Dense {
    let (da, db) = (a.len(), b.len());
    let n = da * db * c_dim;
    let mut m = linalg::zeros(n, n);
    for i in 0..da {
        for j in 0..db {
            for k in 0..c_dim {
                let src = (i * db + j) * c_dim + k;
                let dst = (j * da + i) * c_dim + k;
                m[dst][src] = if a[i] && b[j] { q(-1) } else { q(1) };
            }
        }
    }
    m
}

/// Basis parities of a super space, even vectors first.
pub fn parities(space: SuperSpace) -> Vec<bool> {
    (0..space.dim()).map(|i| space.is_odd(i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::Partition;
    use crate::symgroup::{primitive_idempotent, young_symmetrizer};

    fn perm(v: &[usize]) -> Perm {
        Perm::from_one_line(v).unwrap()
    }

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn perm_operator_examples() {
        let swap = perm(&[2, 1]);
        let odd_line = perm_operator(&swap, SuperSpace::new(0, 1));
        assert_eq!(odd_line.side(), 1);
        assert_eq!(odd_line.get(0, 0), q(-1));
        let flip = perm_operator(&swap, SuperSpace::new(2, 0));
        for (i, j) in [(0, 0), (1, 2), (2, 1), (3, 3)] {
            assert_eq!(flip.get(i, j), q(1));
        }
        assert_eq!(flip.nnz(), 4);
        let v = SuperSpace::new(1, 2);
        assert_eq!(perm_operator(&Perm::identity(3), v), SuperOperator::identity(v, 3));
    }

    #[test]
    fn evaluate_examples() {
        let c11 = young_symmetrizer(&"1,1".parse().unwrap()).unwrap();
        assert!(evaluate(&c11, SuperSpace::new(1, 0), &lim()).unwrap().is_zero());
        let c2 = young_symmetrizer(&"2".parse().unwrap()).unwrap();
        assert!(evaluate(&c2, SuperSpace::new(0, 1), &lim()).unwrap().is_zero());
        let v = SuperSpace::new(2, 1);
        assert_eq!(
            evaluate(&GroupAlgebraElement::identity(2), v, &lim()).unwrap(),
            SuperOperator::identity(v, 2)
        );
        let big = Limits { max_eval_dim: 8, ..Limits::default() };
        assert!(matches!(
            evaluate(&GroupAlgebraElement::identity(4), v, &big),
            Err(Error::SizeBound { .. })
        ));
    }

    #[test]
    fn supertrace_examples() {
        assert_eq!(SuperOperator::identity(SuperSpace::new(1, 1), 2).supertrace(), q(0));
        assert_eq!(SuperOperator::identity(SuperSpace::new(2, 1), 1).supertrace(), q(1));
        let x = GroupAlgebraElement::from_terms(2, [(perm(&[1, 2]), q(1)), (perm(&[2, 1]), q(1))]).unwrap();
        assert_eq!(evaluate(&x, SuperSpace::new(1, 1), &lim()).unwrap().supertrace(), q(0));
    }

    #[test]
    fn partial_supertrace_examples() {
        for v in [SuperSpace::new(2, 1), SuperSpace::new(1, 2), SuperSpace::new(0, 2)] {
            let id = SuperOperator::identity(v, 2);
            assert_eq!(
                id.partial_supertrace(2).unwrap(),
                SuperOperator::identity(v, 1).scale(&q(v.superdim()))
            );
            let swap = perm_operator(&perm(&[2, 1]), v);
            assert_eq!(swap.partial_supertrace(2).unwrap(), SuperOperator::identity(v, 1));
            assert_eq!(swap.partial_supertrace(1).unwrap(), SuperOperator::identity(v, 1));
            let one = SuperOperator::identity(v, 1);
            let scalar = one.partial_supertrace(1).unwrap();
            assert_eq!(scalar.side(), 1);
            assert_eq!(scalar.get(0, 0), one.supertrace());
        }
        let op = SuperOperator::identity(SuperSpace::new(1, 1), 2);
        assert!(matches!(op.partial_supertrace(3), Err(Error::PositionOutOfRange { .. })));
        assert!(op.partial_supertrace(0).is_err());
    }

    #[test]
    fn rank_pair_examples() {
        let v = SuperSpace::new(1, 1);
        assert_eq!(SuperOperator::zero(v, 2).rank_pair().unwrap(), DimPair::new(0, 0));
        assert_eq!(SuperOperator::identity(v, 1).rank_pair().unwrap(), DimPair::new(1, 1));
        let e2 = primitive_idempotent(&"2".parse().unwrap()).unwrap();
        assert_eq!(evaluate(&e2, v, &lim()).unwrap().rank_pair().unwrap(), DimPair::new(1, 1));
        // an odd operator on 1|1
        let odd = SuperOperator::from_rows(v, 1, vec![vec![(1, q(1))], vec![]]).unwrap();
        assert_eq!(odd.rank_pair(), Err(Error::NotEven));
    }

    #[test]
    fn commutant_examples() {
        assert_eq!(commutant_dim(SuperSpace::new(1, 0), 2, &lim()).unwrap(), 1);
        assert_eq!(commutant_dim(SuperSpace::new(1, 1), 2, &lim()).unwrap(), 2);
        assert_eq!(commutant_dim(SuperSpace::new(2, 0), 2, &lim()).unwrap(), 2);
        assert!(matches!(
            commutant_dim(SuperSpace::new(3, 1), 4, &lim()),
            Err(Error::SizeBound { .. })
        ));
    }

    #[test]
    fn semisimple_examples() {
        assert!(image_algebra_semisimple(SuperSpace::new(1, 0), 2, &lim()).unwrap());
        assert!(image_algebra_semisimple(SuperSpace::new(1, 1), 3, &lim()).unwrap());
        assert!(image_algebra_semisimple(SuperSpace::new(2, 1), 2, &lim()).unwrap());
    }

    #[test]
    fn koszul_swap_signs() {
        let a = SuperSpace::new(1, 1);
        let s = koszul_swap(&parities(a), &parities(a), 1);
        // e_1 (x) e_1 with both odd picks up -1
        assert_eq!(s[3][3], q(-1));
        assert_eq!(s[2][1], q(1));
        let op = perm_operator(&perm(&[2, 1]), a);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(s[i][j], op.get(i, j));
            }
        }
    }

    #[test]
    fn operator_json_roundtrip() {
        let c = young_symmetrizer(&Partition::new(vec![2, 1]).unwrap()).unwrap();
        let op = evaluate(&c, SuperSpace::new(1, 1), &lim()).unwrap();
        let json = serde_json::to_string(&op.to_json()).unwrap();
        let back: OperatorJson = serde_json::from_str(&json).unwrap();
        assert_eq!(SuperOperator::from_json(&back).unwrap(), op);
    }
}
