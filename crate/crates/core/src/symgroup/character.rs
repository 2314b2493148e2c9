//! Irreducible characters of S_d by the Murnaghan-Nakayama rule, using
//! beta-sets: removing a rim hook of length k slides one bead k places down
//! the abacus, with sign given by the beads jumped over.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::partitions::Partition;

type Cache = Mutex<HashMap<(Partition, Partition), i64>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `chi^lambda` on the class with the given cycle type.
pub fn mn_character(lambda: &Partition, cycle_type: &Partition) -> Result<i64> {
    if lambda.size() != cycle_type.size() {
        return Err(Error::SizeMismatch(format!(
            "|{lambda:?}| = {} but the class {cycle_type:?} has size {}",
            lambda.size(),
            cycle_type.size()
        )));
    }
    Ok(character(lambda, cycle_type.parts()))
}

fn character(lambda: &Partition, cycles: &[usize]) -> i64 {
    let Some((&k, rest)) = cycles.split_first() else {
        return 1;
    };
    let key = (lambda.clone(), Partition::from_unsorted(cycles.to_vec()));
    if let Some(&v) = cache().lock().unwrap().get(&key) {
        return v;
    }
    let value = rim_hook_removals(lambda, k)
        .into_iter()
        .map(|(sign, smaller)| sign * character(&smaller, rest))
        .sum();
    cache().lock().unwrap().insert(key, value);
    value
}

/// Every way of removing a rim hook of length `k`, with its sign
/// `(-1)^(height)`.
pub fn rim_hook_removals(lambda: &Partition, k: usize) -> Vec<(i64, Partition)> {
    let l = lambda.len();
    let beta: Vec<usize> = (0..l).map(|i| lambda.part(i) + (l - 1 - i)).collect();
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let jumped = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[idx] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = next.iter().enumerate().map(|(i, &x)| x - (l - 1 - i)).collect();
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        out.push((sign, Partition::new(parts).expect("beta-set gives a partition")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_of;
    use crate::symgroup::perm::all_perms;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(mn_character(&p("2,1"), &p("3")).unwrap(), -1);
        assert_eq!(mn_character(&p("4"), &p("2,1,1")).unwrap(), 1);
        assert_eq!(mn_character(&p("1,1"), &p("1,1")).unwrap(), 1);
        assert_eq!(mn_character(&p("1,1"), &p("2")).unwrap(), -1);
        assert!(mn_character(&p("2"), &p("1")).is_err());
    }

    #[test]
    fn degree_is_standard_tableaux_count() {
        for d in 1..=7 {
            let id = Partition::new(vec![1; d]).unwrap();
            for l in partitions_of(d) {
                assert_eq!(mn_character(&l, &id).unwrap() as u64, l.count_standard_tableaux());
            }
        }
    }

    #[test]
    fn column_orthogonality() {
        // sum over sigma of chi^l(sigma) chi^m(sigma) = d! [l == m]
        for d in 1..=5 {
            let perms = all_perms(d);
            let parts = partitions_of(d);
            for a in &parts {
                for b in &parts {
                    let s: i64 = perms
                        .iter()
                        .map(|s| {
                            let c = s.cycle_type();
                            mn_character(a, &c).unwrap() * mn_character(b, &c).unwrap()
                        })
                        .sum();
                    let expect = if a == b { perms.len() as i64 } else { 0 };
                    assert_eq!(s, expect, "{a:?} {b:?}");
                }
            }
        }
    }

    #[test]
    fn sign_character_is_transpose_twist() {
        for d in 1..=6 {
            for l in partitions_of(d) {
                for c in partitions_of(d) {
                    let sign = if (d - c.len()) % 2 == 0 { 1 } else { -1 };
                    assert_eq!(
                        mn_character(&l.transpose(), &c).unwrap(),
                        sign * mn_character(&l, &c).unwrap()
                    );
                }
            }
        }
    }
}
