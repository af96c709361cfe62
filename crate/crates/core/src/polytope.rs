//! Moment polytopes kept as generating sets of lattice points.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::exact::{affine_rank, in_convex_hull};
use crate::ground::{admissible_pairs, AdmissiblePair, Label, Pair};
use crate::matroid::{SymmetricMatroid, SymplecticMatroid};

/// `conv(points)` in `Z^dim`. The points generate the polytope but need not
/// all be vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePolytope {
    dim: usize,
    points: BTreeSet<Vec<i64>>,
}

impl LatticePolytope {
    pub fn new(dim: usize, points: impl IntoIterator<Item = Vec<i64>>) -> Result<Self> {
        let points: BTreeSet<Vec<i64>> = points.into_iter().collect();
        if let Some(p) = points.iter().find(|p| p.len() != dim) {
            return Err(Error::DimensionMismatch(dim, p.len()));
        }
        Ok(LatticePolytope { dim, points })
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &BTreeSet<Vec<i64>> {
        &self.points
    }

    fn point_vec(&self) -> Vec<Vec<i64>> {
        self.points.iter().cloned().collect()
    }

    pub fn contains(&self, q: &[i64]) -> bool {
        q.len() == self.dim && in_convex_hull(&self.point_vec(), q)
    }

    /// Rank over `Q` of `{p − p_0}`; `None` for the empty polytope.
    pub fn affine_dim(&self) -> Option<usize> {
        (!self.points.is_empty()).then(|| affine_rank(&self.point_vec()))
    }
}

/// `e_i + e_j ∈ Z^{2n}` with coordinates indexed by position.
pub fn pair_vector(pair: Pair, n: usize) -> Vec<i64> {
    let mut v = vec![0; 2 * n];
    let (a, b) = pair.positions(n);
    v[a - 1] += 1;
    v[b - 1] += 1;
    v
}

/// `conv{e_i + e_j : {i,j} ∈ B(M)}`.
pub fn symmetric_polytope(m: &SymmetricMatroid) -> LatticePolytope {
    let n = m.n();
    LatticePolytope {
        dim: 2 * n,
        points: m.bases().into_iter().map(|p| pair_vector(p, n)).collect(),
    }
}

/// `conv{ε_i + ε_j : {i,j} ∈ B(N)}` with `ε_i = φ_i`, `ε_{i*} = −φ_i`.
pub fn symplectic_polytope(n: &SymplecticMatroid) -> LatticePolytope {
    let size = n.n();
    LatticePolytope {
        dim: size,
        points: n.bases().iter().map(|p| p.weight(size)).collect(),
    }
}

/// The linear map `e_i ↦ ε_i` from `Z^{2n}` to `Z^n`.
pub fn project_vector(v: &[i64], n: usize) -> Vec<i64> {
    (1..=n)
        .map(|i| {
            v[Label::plain(i).position(n) - 1] - v[Label::starred(i).position(n) - 1]
        })
        .collect()
}

pub fn project_pi(p: &LatticePolytope) -> Result<LatticePolytope> {
    if !p.dim.is_multiple_of(2) {
        return Err(Error::DimensionMismatch(p.dim, 2 * (p.dim / 2)));
    }
    let n = p.dim / 2;
    Ok(LatticePolytope {
        dim: n,
        points: p.points.iter().map(|v| project_vector(v, n)).collect(),
    })
}

pub fn affine_dim(p: &LatticePolytope) -> Option<usize> {
    p.affine_dim()
}

/// `conv(P) = conv(Q)`: each generating point lies in the hull of the other set.
pub fn hull_equal(p: &LatticePolytope, q: &LatticePolytope) -> Result<bool> {
    if p.dim != q.dim {
        return Err(Error::DimensionMismatch(p.dim, q.dim));
    }
    if p.points == q.points {
        return Ok(true);
    }
    let (pv, qv) = (p.point_vec(), q.point_vec());
    Ok(pv.iter().all(|x| in_convex_hull(&qv, x)) && qv.iter().all(|x| in_convex_hull(&pv, x)))
}

/// Pairs `{i,j}` whose vector `e_i + e_j` is a generating point.
pub fn symmetric_bases(p: &LatticePolytope) -> BTreeSet<Pair> {
    let n = p.dim / 2;
    p.points
        .iter()
        .filter_map(|v| {
            let ones: Vec<usize> = (0..v.len()).filter(|&k| v[k] == 1).collect();
            let exact = ones.len() == 2 && v.iter().sum::<i64>() == 2;
            exact.then(|| {
                let l = |k: usize| Label::from_position(k + 1, n).expect("position in range");
                Pair::new(l(ones[0]), l(ones[1])).expect("distinct positions")
            })
        })
        .collect()
}

/// Admissible pairs whose weight `ε_i + ε_j` is a generating point.
/// Distinct admissible pairs have distinct weights.
pub fn symplectic_bases(p: &LatticePolytope) -> BTreeSet<AdmissiblePair> {
    admissible_pairs(p.dim)
        .into_iter()
        .filter(|b| p.points.contains(&b.weight(p.dim)))
        .collect()
}
