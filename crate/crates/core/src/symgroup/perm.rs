use std::fmt;

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// A permutation of `{0, .., d-1}` stored as its images. The wire form is
/// 1-based one-line notation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(d: usize) -> Self {
        Perm((0..d).collect())
    }

    /// From 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &i in &images {
            if i >= d || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
        }
        Ok(Perm(images))
    }

    /// From 1-based one-line notation, e.g. `[2, 1]` for the swap in S_2.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::InvalidPermutation(format!("{images:?} is not 1-based")));
        }
        Self::from_images(images.iter().map(|&i| i - 1).collect())
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.0.iter().map(|&i| i + 1).collect()
    }

    /// Swap of the 0-based points `i` and `j`.
    pub fn transposition(d: usize, i: usize, j: usize) -> Self {
        let mut p: Vec<usize> = (0..d).collect();
        p.swap(i, j);
        Perm(p)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// `self * other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &p) in self.0.iter().enumerate() {
            inv[p] = i;
        }
        Perm(inv)
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i];
                len += 1;
            }
            out.push(len);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        self.cycle_lengths().len()
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_unsorted(self.cycle_lengths())
    }

    pub fn sign(&self) -> i64 {
        if (self.degree() - self.cycle_count()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Juxtaposition: `self` on the first strands, `other` on the rest.
    pub fn juxtapose(&self, other: &Perm) -> Perm {
        let a = self.degree();
        Perm(self.0.iter().copied().chain(other.0.iter().map(|&i| i + a)).collect())
    }

    /// The same permutation on one more point, fixing the new last point.
    pub fn extend(&self) -> Perm {
        let mut p = self.0.clone();
        p.push(p.len());
        Perm(p)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.one_line())
    }
}

/// All of S_d in lexicographic order of one-line notation.
pub fn all_perms(d: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..d).collect();
    loop {
        out.push(Perm(cur.clone()));
        // next lexicographic permutation
        let Some(i) = (1..d).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..d).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

/// All permutations of `{0..d-1}` that map each block to itself.
pub fn block_stabilizer(d: usize, blocks: &[Vec<usize>]) -> Vec<Perm> {
    let mut out = vec![Perm::identity(d)];
    for block in blocks.iter().filter(|b| b.len() > 1) {
        let local = all_perms(block.len());
        let mut next = Vec::with_capacity(out.len() * local.len());
        for base in &out {
            for l in &local {
                let mut p = base.0.clone();
                for (k, &pos) in block.iter().enumerate() {
                    p[pos] = block[l.0[k]];
                }
                next.push(Perm(p));
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_order() {
        // (12)(13) with the right factor applied first: 1->3, 3->2, 2->1
        let s12 = Perm::from_one_line(&[2, 1, 3]).unwrap();
        let s13 = Perm::from_one_line(&[3, 2, 1]).unwrap();
        assert_eq!(s12.compose(&s13).one_line(), vec![3, 1, 2]);
    }

    #[test]
    fn basics() {
        assert_eq!(Perm::identity(4).cycle_count(), 4);
        assert_eq!(all_perms(4).len(), 24);
        assert!(Perm::from_one_line(&[1, 1]).is_err());
        assert!(Perm::from_one_line(&[0, 1]).is_err());
        let p = Perm::from_one_line(&[2, 3, 1, 5, 4]).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert_eq!(p.cycle_type(), "3,2".parse().unwrap());
        assert_eq!(p.sign(), -1);
        assert_eq!(block_stabilizer(4, &[vec![0, 1], vec![2, 3]]).len(), 4);
    }
}
