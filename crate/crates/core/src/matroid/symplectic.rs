//! Rank-2 `BC_n`-matroids: basis sets in `J_n²` with the maximality property.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::ground::{admissible_pairs, AdmissiblePair, Pair};
use crate::order::{enumerate_admissible_orders, AdmissibleOrder};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymplecticMatroid {
    n: usize,
    bases: BTreeSet<AdmissiblePair>,
}

impl SymplecticMatroid {
    /// Checks the labels and the maximality property under all `2^n · n!` orders.
    pub fn new(n: usize, bases: impl IntoIterator<Item = AdmissiblePair>) -> Result<Self> {
        let bases: BTreeSet<AdmissiblePair> = bases.into_iter().collect();
        if bases.is_empty() {
            return Err(Error::Empty);
        }
        for p in &bases {
            for l in p.labels() {
                if l.index() > n {
                    return Err(Error::LabelOutOfRange { value: l.signed(), n });
                }
            }
        }
        if let Some(ord) = failing_order(&bases, n) {
            return Err(Error::NotSymplectic(ord.to_string()));
        }
        Ok(SymplecticMatroid { n, bases })
    }

    /// All of `J_n²`.
    pub fn full(n: usize) -> Result<Self> {
        Self::new(n, admissible_pairs(n))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bases(&self) -> &BTreeSet<AdmissiblePair> {
        &self.bases
    }

    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }

    /// The same basis set viewed as pairs of `E_n`.
    pub fn pairs(&self) -> BTreeSet<Pair> {
        self.bases.iter().map(|p| p.pair()).collect()
    }
}

impl fmt::Display for SymplecticMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.bases.iter().join(","))
    }
}

fn failing_order(bases: &BTreeSet<AdmissiblePair>, n: usize) -> Option<AdmissibleOrder> {
    enumerate_admissible_orders(n)
        .into_iter()
        .find(|ord| ord.maximal(bases).len() != 1)
}

/// `B` is nonempty and has a unique Gale-maximal element under every admissible order.
pub fn is_symplectic_matroid(bases: &BTreeSet<AdmissiblePair>, n: usize) -> bool {
    !bases.is_empty()
        && bases.iter().flat_map(|p| p.labels()).all(|l| l.index() <= n)
        && failing_order(bases, n).is_none()
}

/// Largest `n` for which [`enumerate_symplectic`] scans all `2^|J_n²|` subsets.
pub const EXHAUSTIVE_MAX_N: usize = 3;

/// Every symplectic matroid on `E_n`, sorted by size and then lexicographically.
pub fn enumerate_symplectic(n: usize) -> Result<Vec<SymplecticMatroid>> {
    if n > EXHAUSTIVE_MAX_N {
        return Err(Error::TooLarge { n, max: EXHAUSTIVE_MAX_N });
    }
    let pairs = admissible_pairs(n);
    let k = pairs.len();
    // above[o][m]: elements b ≠ m with m ≤ b under order o.
    let above: Vec<Vec<u64>> = enumerate_admissible_orders(n)
        .iter()
        .map(|ord| {
            (0..k)
                .map(|m| {
                    (0..k)
                        .filter(|&b| b != m && ord.gale_leq(pairs[m], pairs[b]))
                        .fold(0u64, |acc, b| acc | 1 << b)
                })
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << k) {
        let ok = above.iter().all(|ab| {
            (0..k)
                .filter(|&m| mask >> m & 1 == 1 && mask & ab[m] == 0)
                .count()
                == 1
        });
        if ok {
            let bases = (0..k).filter(|&m| mask >> m & 1 == 1).map(|m| pairs[m]).collect();
            out.push(SymplecticMatroid { n, bases });
        }
    }
    out.sort_by(|a, b| (a.len(), &a.bases).cmp(&(b.len(), &b.bases)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::Label;

    fn ap(n: usize, a: i64, b: i64) -> AdmissiblePair {
        AdmissiblePair::new(Label::new(a, n).unwrap(), Label::new(b, n).unwrap()).unwrap()
    }

    #[test]
    fn every_nonempty_subset_is_symplectic_for_n2() {
        let all = admissible_pairs(2);
        for mask in 1u32..16 {
            let set: BTreeSet<_> = (0..4).filter(|k| mask >> k & 1 == 1).map(|k| all[k]).collect();
            assert!(is_symplectic_matroid(&set, 2));
        }
        assert!(!is_symplectic_matroid(&BTreeSet::new(), 2));
    }

    #[test]
    fn n2_count_and_histogram() {
        let all = enumerate_symplectic(2).unwrap();
        assert_eq!(all.len(), 15);
        let mut hist = [0; 5];
        for m in &all {
            hist[m.len()] += 1;
        }
        assert_eq!(hist[1..], [4, 6, 4, 1]);
    }

    #[test]
    fn n1_has_none_and_n4_is_refused() {
        assert!(enumerate_symplectic(1).unwrap().is_empty());
        assert_eq!(enumerate_symplectic(4), Err(Error::TooLarge { n: 4, max: 3 }));
    }

    #[test]
    fn degree_one_projection_example_is_symplectic() {
        let b = [(1, 3), (1, -3), (2, 3), (2, -3), (-2, 3), (-2, -3), (-1, 2), (-1, -2)];
        let set: BTreeSet<_> = b.iter().map(|&(x, y)| ap(3, x, y)).collect();
        assert!(is_symplectic_matroid(&set, 3));
    }

    #[test]
    fn two_incomparable_bases_fail_for_n3() {
        // under 3 > 2 > 1 > 1* > 2* > 3* neither pair dominates the other
        let set = BTreeSet::from([ap(3, 1, 2), ap(3, 3, -2)]);
        assert!(!is_symplectic_matroid(&set, 3));
        assert!(matches!(SymplecticMatroid::new(3, set), Err(Error::NotSymplectic(_))));
        assert_eq!(SymplecticMatroid::new(3, []), Err(Error::Empty));
    }

    #[test]
    fn enumeration_agrees_with_the_direct_check() {
        let fast: BTreeSet<_> = enumerate_symplectic(3).unwrap().into_iter().collect();
        let all = admissible_pairs(3);
        let mut slow = BTreeSet::new();
        for mask in 1u32..(1 << all.len()) {
            let set: BTreeSet<_> = (0..all.len()).filter(|k| mask >> k & 1 == 1).map(|k| all[k]).collect();
            if let Ok(m) = SymplecticMatroid::new(3, set) {
                slow.insert(m);
            }
        }
        assert_eq!(fast, slow);
    }
}
