//! `S_2n`-orbits of rank-2 matroids are classified by the multiset of bag sizes.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::ground::Label;
use crate::matroid::SymmetricMatroid;

/// A formal product `k_1 · k_2 ⋯ k_ℓ` with `ℓ ≥ 2`, `1 ≤ k_i < 2n` and `Σ k_i ≤ 2n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionType {
    /// Weakly decreasing.
    parts: Vec<usize>,
}

impl PartitionType {
    pub fn new(n: usize, mut parts: Vec<usize>) -> Result<Self> {
        if parts.len() < 2 {
            return Err(Error::InvalidPartition("need at least two factors".into()));
        }
        if parts.iter().any(|&k| k == 0 || k >= 2 * n) {
            return Err(Error::InvalidPartition(format!(
                "factors must lie in [1, {}]",
                2 * n - 1
            )));
        }
        if parts.iter().sum::<usize>() > 2 * n {
            return Err(Error::InvalidPartition(format!("weight exceeds {}", 2 * n)));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(PartitionType { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }
}

impl fmt::Display for PartitionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.parts.iter().join("·"))
    }
}

pub fn partition_type(m: &SymmetricMatroid) -> PartitionType {
    let mut parts: Vec<usize> = m.bags().iter().map(|b| b.len()).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    PartitionType { parts }
}

/// Consecutive blocks of positions `{1..k_1}, {k_1+1..k_1+k_2}, …`; the tail are loops.
pub fn canonical_matroid(pi: &PartitionType, n: usize) -> Result<SymmetricMatroid> {
    let pi = PartitionType::new(n, pi.parts.clone())?;
    let mut next = 1;
    let mut bags = Vec::with_capacity(pi.length());
    for &k in &pi.parts {
        let bag = (next..next + k)
            .map(|p| Label::from_position(p, n))
            .collect::<Result<Vec<_>>>()?;
        bags.push(bag);
        next += k;
    }
    SymmetricMatroid::new(n, bags)
}

/// All partition types for `E_n`, sorted.
pub fn enumerate_partition_types(n: usize) -> Vec<PartitionType> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(remaining: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() >= 2 {
            out.push(cur.clone());
        }
        for k in (1..=max.min(remaining)).rev() {
            cur.push(k);
            go(remaining - k, k, cur, out);
            cur.pop();
        }
    }
    if n >= 1 {
        go(2 * n, 2 * n - 1, &mut cur, &mut out);
    }
    let mut out: Vec<PartitionType> = out.into_iter().map(|parts| PartitionType { parts }).collect();
    out.sort();
    out
}
