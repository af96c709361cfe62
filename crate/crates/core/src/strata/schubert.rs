//! Schubert varieties of `SpG(2,2n)`, its Betti numbers and torus-fixed points.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::ground::{admissible_pairs, AdmissiblePair};
use crate::order::AdmissibleOrder;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchubertVariety {
    pub pair: AdmissiblePair,
    /// Coordinates `x_b` with `b ≰ pair` in the standard Gale order.
    pub vanishing: BTreeSet<AdmissiblePair>,
    pub dim: usize,
}

/// `p(i) + p(j) − 3` below the middle, `p(i) + p(j) − 4` above it.
pub fn schubert_dim(pair: AdmissiblePair, n: usize) -> usize {
    let (a, b) = pair.pair().positions(n);
    let s = a + b;
    debug_assert_ne!(s, 2 * n + 1, "admissible pairs never sum to 2n+1");
    if s < 2 * n + 1 {
        s - 3
    } else {
        s - 4
    }
}

pub fn sp_schubert(pair: AdmissiblePair, n: usize) -> SchubertVariety {
    let ord = AdmissibleOrder::standard(n);
    let vanishing = admissible_pairs(n)
        .into_iter()
        .filter(|&b| !ord.gale_leq(b, pair))
        .collect();
    SchubertVariety { pair, vanishing, dim: schubert_dim(pair, n) }
}

/// `dim_C SpG(2,2n)`.
pub fn symplectic_grassmannian_dim(n: usize) -> usize {
    4 * n - 5
}

fn check_rank(n: usize) -> Result<()> {
    if n < 2 {
        Err(Error::RankTooSmall { n, min: 2 })
    } else {
        Ok(())
    }
}

/// `b_k(G(2,2n))` for `k = 0..=4n−4`, counting `{i<j} ⊆ [2n]` by `i + j − 3`.
pub fn grassmannian_betti(n: usize) -> Vec<u64> {
    let m = 2 * n;
    let mut out = vec![0; 2 * m - 3];
    for (i, j) in (1..=m).tuple_combinations() {
        out[i + j - 3] += 1;
    }
    out
}

/// Hyperplane-section transfer: `b_k` agrees with `G(2,2n)` below the middle
/// degree and with `b_{k+1}(G(2,2n))` from it on.
pub fn betti_by_lefschetz(n: usize) -> Result<Vec<u64>> {
    check_rank(n)?;
    let g = grassmannian_betti(n);
    Ok((0..=symplectic_grassmannian_dim(n))
        .map(|k| if k <= 2 * n - 3 { g[k] } else { g[k + 1] })
        .collect())
}

/// Number of admissible pairs whose Schubert variety has dimension `k`.
pub fn betti_by_schubert_cells(n: usize) -> Result<Vec<u64>> {
    check_rank(n)?;
    let mut out = vec![0; symplectic_grassmannian_dim(n) + 1];
    for p in admissible_pairs(n) {
        out[schubert_dim(p, n)] += 1;
    }
    Ok(out)
}

/// Ranks of `H_{2k}(SpG(2,2n))`, `k = 0..=4n−5`, after checking both counts agree.
pub fn betti_numbers(n: usize) -> Result<Vec<u64>> {
    let a = betti_by_lefschetz(n)?;
    let b = betti_by_schubert_cells(n)?;
    if a != b {
        return Err(Error::Construction(format!("Betti counts disagree: {a:?} vs {b:?}")));
    }
    Ok(a)
}

/// The `T`-fixed points `[p_{i,j}]`, one per admissible pair.
pub fn fixed_points(n: usize) -> Result<Vec<AdmissiblePair>> {
    check_rank(n)?;
    Ok(admissible_pairs(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::Label;

    fn ap(n: usize, a: i64, b: i64) -> AdmissiblePair {
        AdmissiblePair::new(Label::new(a, n).unwrap(), Label::new(b, n).unwrap()).unwrap()
    }

    #[test]
    fn schubert_dimensions() {
        for n in 2..=5 {
            assert_eq!(sp_schubert(ap(n, 1, 2), n).dim, 0);
        }
        assert_eq!(sp_schubert(ap(2, 2, -1), 2).dim, 2);
        let top = sp_schubert(ap(3, -2, -1), 3);
        assert_eq!(top.dim, 7);
        assert!(top.vanishing.is_empty());
        assert_eq!(sp_schubert(ap(3, 1, 2), 3).vanishing.len(), 11);
    }

    #[test]
    fn betti_examples() {
        assert_eq!(betti_numbers(2).unwrap(), vec![1, 1, 1, 1]);
        assert_eq!(betti_numbers(3).unwrap(), vec![1, 1, 2, 2, 2, 2, 1, 1]);
        assert_eq!(grassmannian_betti(2), vec![1, 1, 2, 1, 1]);
        assert_eq!(betti_numbers(1), Err(Error::RankTooSmall { n: 1, min: 2 }));
    }

    #[test]
    fn fixed_point_counts() {
        for (n, want) in [(2, 4), (3, 12), (4, 24)] {
            assert_eq!(fixed_points(n).unwrap().len(), want);
        }
        let names: Vec<String> = fixed_points(2).unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(names.len(), 4);
    }
}
