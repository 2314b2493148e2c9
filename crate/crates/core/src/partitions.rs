//! Partitions and Young-diagram combinatorics.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{factorial, Q};

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// stripped on construction, so `()` is the unique partition of 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has an interior zero")));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts first; for building partitions from unordered data.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Row `i` (0-based); rows past the end have length 0.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn transpose(&self) -> Partition {
        let cols = self.part(0);
        Partition((0..cols).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }

    /// True iff the diagram of `self` contains the diagram of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.0.iter().enumerate().all(|(i, &p)| p <= self.part(i))
    }

    /// `n + 1` rows of length `m + 1`.
    pub fn rectangle(m: usize, n: usize) -> Partition {
        Partition(vec![m + 1; n + 1])
    }

    /// `(rows, columns)` when the diagram is a nonempty rectangle.
    pub fn rectangle_shape(&self) -> Option<(usize, usize)> {
        let first = *self.0.first()?;
        self.0.iter().all(|&p| p == first).then_some((self.len(), first))
    }

    /// Hook length of box `(i, j)`, 0-based.
    pub fn hook(&self, i: usize, j: usize) -> usize {
        let arm = self.part(i) - j - 1;
        let leg = self.0[i + 1..].iter().filter(|&&p| p > j).count();
        arm + leg + 1
    }

    /// Boxes `(row, column)`, 0-based, in reading order.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p).map(move |j| (i, j)))
    }

    /// Number of standard Young tableaux, by the hook length formula.
    pub fn count_standard_tableaux(&self) -> u64 {
        let hooks = self
            .boxes()
            .fold(BigInt::one(), |acc, (i, j)| acc * BigInt::from(self.hook(i, j)));
        (factorial(self.size()) / hooks)
            .to_u64()
            .expect("f^lambda fits in u64 for the sizes handled here")
    }

    /// All partitions obtained by adding one box.
    pub fn add_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.len() {
            if i == 0 || self.part(i - 1) > self.part(i) {
                let mut p = self.0.clone();
                if i == p.len() {
                    p.push(1);
                } else {
                    p[i] += 1;
                }
                out.push(Partition(p));
            }
        }
        out
    }

    /// All partitions obtained by removing one corner box.
    pub fn remove_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            if self.part(i) > self.part(i + 1) {
                let mut p = self.0.clone();
                p[i] -= 1;
                out.push(Partition::new(p).expect("removing a corner keeps a partition"));
            }
        }
        out
    }

    pub fn to_wire(&self) -> String {
        self.0.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_wire())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_wire())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Partition::new(Vec::<usize>::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// Partitions of `d`, in decreasing lexicographic order.
pub fn partitions_of(d: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(d, d, &mut Vec::new(), &mut out);
    out
}

/// Dimension of the Schur functor of `lambda` on an `m`-dimensional purely
/// even space; 0 when `lambda` has more than `m` rows.
pub fn weyl_dim(lambda: &Partition, m: usize) -> u64 {
    if lambda.len() > m {
        return 0;
    }
    let mut acc = Q::one();
    for i in 0..m {
        for j in i + 1..m {
            let num = lambda.part(i) as i64 - lambda.part(j) as i64 + (j - i) as i64;
            acc *= Q::new(BigInt::from(num), BigInt::from(j - i));
        }
    }
    debug_assert!(acc.is_integer());
    acc.to_integer().to_u64().expect("dimension fits in u64")
}

/// Littlewood-Richardson coefficient `c^lambda_{mu, nu}`, counted as
/// semistandard fillings of `lambda / mu` with content `nu` whose reverse
/// reading word is a lattice word.
pub fn lr_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if mu.size() + nu.size() != lambda.size() || !lambda.contains(mu) || !lambda.contains(nu) {
        return 0;
    }
    // Cells of the skew shape in reverse reading order: rows top to bottom,
    // each row right to left.
    let cells: Vec<(usize, usize)> = (0..lambda.len())
        .flat_map(|i| (mu.part(i)..lambda.part(i)).rev().map(move |j| (i, j)))
        .collect();
    let mut fill = vec![vec![0usize; lambda.part(0)]; lambda.len()];
    let mut counts = vec![0usize; nu.len()];

    fn go(
        k: usize,
        cells: &[(usize, usize)],
        lambda: &Partition,
        mu: &Partition,
        nu: &Partition,
        fill: &mut Vec<Vec<usize>>,
        counts: &mut Vec<usize>,
    ) -> u64 {
        let Some(&(i, j)) = cells.get(k) else {
            return 1;
        };
        let mut total = 0;
        for v in 0..nu.len() {
            if counts[v] == nu.part(v) {
                continue;
            }
            // lattice: after placing v, #v <= #(v-1)
            if v > 0 && counts[v] + 1 > counts[v - 1] {
                continue;
            }
            // row weakly increasing: the cell to the right was already filled
            if j + 1 < lambda.part(i) && fill[i][j + 1] < v {
                continue;
            }
            // column strictly increasing against the skew cell above
            if i > 0 && j >= mu.part(i - 1) && fill[i - 1][j] >= v {
                continue;
            }
            fill[i][j] = v;
            counts[v] += 1;
            total += go(k + 1, cells, lambda, mu, nu, fill, counts);
            counts[v] -= 1;
        }
        total
    }
    go(0, &cells, lambda, mu, nu, &mut fill, &mut counts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Standard tableaux by removing the box holding the largest entry.
    fn syt_oracle(l: &Partition) -> u64 {
        if l.is_empty() {
            return 1;
        }
        l.remove_box().iter().map(syt_oracle).sum()
    }

    /// Semistandard tableaux with entries in 1..=m, filled box by box.
    fn ssyt_oracle(l: &Partition, m: usize) -> u64 {
        let boxes: Vec<_> = l.boxes().collect();
        let mut t = vec![vec![0usize; l.part(0)]; l.len()];
        fn go(k: usize, boxes: &[(usize, usize)], t: &mut Vec<Vec<usize>>, m: usize) -> u64 {
            let Some(&(i, j)) = boxes.get(k) else { return 1 };
            let lo = {
                let left = if j > 0 { t[i][j - 1] } else { 1 };
                let up = if i > 0 { t[i - 1][j] + 1 } else { 1 };
                left.max(up)
            };
            (lo..=m)
                .map(|v| {
                    t[i][j] = v;
                    go(k + 1, boxes, t, m)
                })
                .sum()
        }
        go(0, &boxes, &mut t, m)
    }

    #[test]
    fn construction_and_wire() {
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), p("2,1"));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!("2,x".parse::<Partition>().is_err());
        assert_eq!(p("").size(), 0);
        assert_eq!(p("2,2,1").to_wire(), "2,2,1");
        let json = serde_json::to_string(&p("3,1")).unwrap();
        assert_eq!(json, "[3,1]");
        assert_eq!(serde_json::from_str::<Partition>("[3,1]").unwrap(), p("3,1"));
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p("3,1").transpose(), p("2,1,1"));
        assert_eq!(p("2,2").transpose(), p("2,2"));
        assert_eq!(p("").transpose(), p(""));
    }

    #[test]
    fn contains_examples() {
        assert!(p("2,2").contains(&p("2,1")));
        assert!(!p("3,1").contains(&p("2,2")));
        assert!(p("2,2").contains(&p("2,2")));
    }

    #[test]
    fn rectangle_examples() {
        assert_eq!(Partition::rectangle(1, 1), p("2,2"));
        assert_eq!(Partition::rectangle(0, 0), p("1"));
        assert_eq!(Partition::rectangle(2, 0), p("3"));
        assert_eq!(p("3,3").rectangle_shape(), Some((2, 3)));
        assert_eq!(p("3,2").rectangle_shape(), None);
    }

    #[test]
    fn standard_tableaux() {
        assert_eq!(p("2,1").count_standard_tableaux(), 2);
        assert_eq!(p("5").count_standard_tableaux(), 1);
        assert_eq!(p("2,2").count_standard_tableaux(), 2);
        for d in 0..=8 {
            for l in partitions_of(d) {
                assert_eq!(l.count_standard_tableaux(), syt_oracle(&l), "{l:?}");
            }
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|d| partitions_of(d).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn weyl_dim_examples_and_oracle() {
        assert_eq!(weyl_dim(&p("2,1"), 2), 2);
        assert_eq!(weyl_dim(&p("2,2"), 3), 6);
        assert_eq!(weyl_dim(&p("1,1,1"), 2), 0);
        for d in 0..=6 {
            for l in partitions_of(d) {
                for m in 1..=4 {
                    assert_eq!(weyl_dim(&l, m), ssyt_oracle(&l, m), "{l:?} m={m}");
                }
            }
        }
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coeff(&p("2,1"), &p("1"), &p("1,1")), 1);
        assert_eq!(lr_coeff(&p("2"), &p("1"), &p("1")), 1);
        assert_eq!(lr_coeff(&p("1,1,1"), &p("1"), &p("1")), 0);
        // c^{321}_{21,21} = 2 is the smallest coefficient above 1
        assert_eq!(lr_coeff(&p("3,2,1"), &p("2,1"), &p("2,1")), 2);
        assert_eq!(lr_coeff(&p("2,1"), &p(""), &p("2,1")), 1);
    }

    #[test]
    fn lr_symmetry_and_transpose() {
        for d in 0..=6 {
            for l in partitions_of(d) {
                for k in 0..=d {
                    for mu in partitions_of(k) {
                        for nu in partitions_of(d - k) {
                            let c = lr_coeff(&l, &mu, &nu);
                            assert_eq!(c, lr_coeff(&l, &nu, &mu));
                            assert_eq!(
                                c,
                                lr_coeff(&l.transpose(), &mu.transpose(), &nu.transpose())
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lr_induction_dimension() {
        let binom = |n: u64, k: u64| -> u64 { (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i) };
        for a in 0..=6usize {
            for b in 0..=6 - a {
                for mu in partitions_of(a) {
                    for nu in partitions_of(b) {
                        let lhs: u64 = partitions_of(a + b)
                            .iter()
                            .map(|l| lr_coeff(l, &mu, &nu) * l.count_standard_tableaux())
                            .sum();
                        let rhs = binom((a + b) as u64, a as u64)
                            * mu.count_standard_tableaux()
                            * nu.count_standard_tableaux();
                        assert_eq!(lhs, rhs, "{mu:?} {nu:?}");
                    }
                }
            }
        }
    }
}
