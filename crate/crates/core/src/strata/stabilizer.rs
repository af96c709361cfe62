//! Torus stabilizers of points in a thin Schubert cell.
//!
//! `t` fixes a point with matroid `M` iff `t^{w_b}` is the same scalar for every
//! base `b`, where `w_b` is the weight of `b`. The stabilizer is therefore the
//! character group of `Z^k / L` with `L` spanned by the differences `w_b − w_{b'}`.

use std::fmt;

use crate::exact::rank_int;
use crate::ground::Pair;
use crate::matroid::SymmetricMatroid;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Torus {
    /// `T' = (C^*)^{2n}` acting on all coordinates.
    Full,
    /// `T = (C^*)^n` with `t_{i*} = t_i^{-1}`.
    Symplectic,
}

impl Torus {
    pub fn rank(self, n: usize) -> usize {
        match self {
            Torus::Full => 2 * n,
            Torus::Symplectic => n,
        }
    }
}

impl fmt::Display for Torus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Torus::Full => "T'",
            Torus::Symplectic => "T",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StabilizerReport {
    pub torus: Torus,
    pub dim: usize,
    /// Number of `{±1}` solutions; only computed when `dim = 0`.
    pub components: Option<u64>,
}

/// Character of the torus on the coordinate `x_b`.
pub fn base_weight(pair: Pair, n: usize, torus: Torus) -> Vec<i64> {
    let mut w = vec![0; torus.rank(n)];
    for l in pair.labels() {
        match torus {
            Torus::Full => w[l.position(n) - 1] += 1,
            Torus::Symplectic => w[l.index() - 1] += l.sign(),
        }
    }
    w
}

/// Generators `w_b − w_{b_0}` of the lattice `L`.
pub fn relation_lattice(m: &SymmetricMatroid, torus: Torus) -> Vec<Vec<i64>> {
    let n = m.n();
    let weights: Vec<Vec<i64>> = m.bases().into_iter().map(|b| base_weight(b, n, torus)).collect();
    let Some((first, rest)) = weights.split_first() else {
        return Vec::new();
    };
    rest.iter()
        .map(|w| w.iter().zip(first).map(|(a, b)| a - b).collect())
        .collect()
}

pub fn stabilizer(m: &SymmetricMatroid, torus: Torus) -> StabilizerReport {
    let k = torus.rank(m.n());
    let lattice = relation_lattice(m, torus);
    let dim = k - rank_int(&lattice);
    let components = (dim == 0).then(|| sign_solutions(&lattice, k));
    StabilizerReport { torus, dim, components }
}

/// `#{t ∈ {±1}^k : t^v = 1 for every generator v}`.
fn sign_solutions(lattice: &[Vec<i64>], k: usize) -> u64 {
    (0u64..1 << k)
        .filter(|mask| {
            lattice.iter().all(|v| {
                let odd_negatives = v
                    .iter()
                    .enumerate()
                    .filter(|&(i, &e)| mask >> i & 1 == 1 && e.rem_euclid(2) == 1)
                    .count();
                odd_negatives % 2 == 0
            })
        })
        .count() as u64
}
