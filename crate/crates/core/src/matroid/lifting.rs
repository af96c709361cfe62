//! The symplectic projection `π` and its symmetric liftings.
//!
//! `π` deletes the diagonal bases `{i, i*}`, so a lifting of `N` has basis set
//! `B(N) ∪ D` for some set `D` of diagonals. Searching all `2^n` choices of
//! `D` is therefore complete. `N` is representable over `C` exactly when some
//! lifting has degree `0` or at least `2`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::ground::{AdmissiblePair, Pair};
use crate::matroid::{SymmetricMatroid, SymplecticMatroid};

/// `B(M)` without its diagonal pairs.
pub fn symplectic_projection(m: &SymmetricMatroid) -> Result<BTreeSet<AdmissiblePair>> {
    let out: BTreeSet<AdmissiblePair> = m
        .bases()
        .into_iter()
        .filter_map(|p| AdmissiblePair::try_from(p).ok())
        .collect();
    if out.is_empty() {
        Err(Error::EmptyProjection)
    } else {
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lifting {
    pub matroid: SymmetricMatroid,
    pub degree: usize,
}

/// All symmetric matroids projecting to `N`, by degree descending.
pub fn liftings(n: &SymplecticMatroid) -> Result<Vec<Lifting>> {
    let base: BTreeSet<Pair> = n.pairs();
    let size = n.n();
    let mut out = Vec::new();
    for mask in 0u32..(1 << size) {
        let mut bases = base.clone();
        bases.extend((0..size).filter(|k| mask >> k & 1 == 1).map(|k| Pair::diagonal(k + 1)));
        if let Ok(matroid) = SymmetricMatroid::from_bases(size, &bases) {
            out.push(Lifting {
                degree: mask.count_ones() as usize,
                matroid,
            });
        }
    }
    if out.is_empty() {
        return Err(Error::NoLifting);
    }
    out.sort_by(|a, b| b.degree.cmp(&a.degree).then_with(|| a.matroid.cmp(&b.matroid)));
    Ok(out)
}

/// Which degrees `≠ 1` occur among the liftings of a representable matroid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Trichotomy {
    OnlyDegreeZero,
    OnlyDegreeAtLeastTwo,
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representability {
    pub representable: bool,
    /// The lifting used for cells and witnesses: `max(N)` when a lifting of
    /// degree `≥ 2` exists, the degree-0 lifting otherwise.
    pub witness_lifting: Option<SymmetricMatroid>,
    pub trichotomy: Option<Trichotomy>,
    /// `{N}`, `{max(N)}` or both, following the trichotomy.
    pub normal_liftings: Vec<SymmetricMatroid>,
    /// Every lifting of the largest degree `≥ 2`; more than one flags a
    /// non-unique `max(N)`.
    pub maximal_liftings: Vec<SymmetricMatroid>,
    pub liftings: Vec<Lifting>,
}

impl Representability {
    pub fn max_is_ambiguous(&self) -> bool {
        self.maximal_liftings.len() > 1
    }
}

pub fn is_representable(n: &SymplecticMatroid) -> Representability {
    let all = liftings(n).unwrap_or_default();
    let zero = all.iter().find(|l| l.degree == 0).map(|l| l.matroid.clone());
    let top = all.iter().map(|l| l.degree).filter(|&d| d >= 2).max();
    let maximal: Vec<SymmetricMatroid> = match top {
        Some(d) => all.iter().filter(|l| l.degree == d).map(|l| l.matroid.clone()).collect(),
        None => Vec::new(),
    };
    let (trichotomy, normal) = match (&zero, maximal.first()) {
        (Some(z), None) => (Some(Trichotomy::OnlyDegreeZero), vec![z.clone()]),
        (None, Some(m)) => (Some(Trichotomy::OnlyDegreeAtLeastTwo), vec![m.clone()]),
        (Some(z), Some(m)) => (Some(Trichotomy::Both), vec![z.clone(), m.clone()]),
        (None, None) => (None, Vec::new()),
    };
    Representability {
        representable: trichotomy.is_some(),
        witness_lifting: maximal.first().cloned().or(zero),
        trichotomy,
        normal_liftings: normal,
        maximal_liftings: maximal,
        liftings: all,
    }
}

/// `max(N)`, or the degree-0 lifting when no lifting of degree `≥ 2` exists.
pub fn max_lifting(n: &SymplecticMatroid) -> Result<SymmetricMatroid> {
    is_representable(n).witness_lifting.ok_or(Error::NotRepresentable)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::Label;

    fn ap(n: usize, a: i64, b: i64) -> AdmissiblePair {
        AdmissiblePair::new(Label::new(a, n).unwrap(), Label::new(b, n).unwrap()).unwrap()
    }

    fn sym(n: usize, bags: &[&[i64]]) -> SymmetricMatroid {
        SymmetricMatroid::new(n, bags.iter().map(|b| b.iter().map(|&v| Label::new(v, n).unwrap()).collect::<Vec<_>>())).unwrap()
    }

    fn degree_one_obstruction() -> SymplecticMatroid {
        let b = [(1, 3), (1, -3), (2, 3), (2, -3), (-2, 3), (-2, -3), (-1, 2), (-1, -2)];
        SymplecticMatroid::new(3, b.iter().map(|&(x, y)| ap(3, x, y))).unwrap()
    }

    #[test]
    fn projection_examples() {
        let m = sym(2, &[&[1], &[-1], &[2], &[-2]]);
        let expect: BTreeSet<_> = [ap(2, 1, 2), ap(2, 1, -2), ap(2, -1, 2), ap(2, -1, -2)].into();
        assert_eq!(symplectic_projection(&m).unwrap(), expect);

        let m0 = sym(2, &[&[1], &[2]]);
        let b: BTreeSet<_> = m0.bases().into_iter().map(|p| AdmissiblePair::try_from(p).unwrap()).collect();
        assert_eq!(symplectic_projection(&m0).unwrap(), b);

        let m1 = sym(3, &[&[1, 2, -2], &[-1, 3, -3]]);
        assert_eq!(m1.bases().len(), 9);
        assert_eq!(symplectic_projection(&m1).unwrap(), degree_one_obstruction().bases().clone());

        let lone = sym(2, &[&[1], &[-1]]);
        assert_eq!(symplectic_projection(&lone), Err(Error::EmptyProjection));
    }

    #[test]
    fn opposite_pairs_have_a_single_degree_two_lifting() {
        let n = SymplecticMatroid::new(2, [ap(2, 1, 2), ap(2, -1, -2)]).unwrap();
        let ls = liftings(&n).unwrap();
        assert_eq!(ls.len(), 1);
        assert_eq!(ls[0].degree, 2);
        assert_eq!(ls[0].matroid, sym(2, &[&[1, -2], &[2, -1]]));
        let r = is_representable(&n);
        assert!(r.representable);
        assert_eq!(r.trichotomy, Some(Trichotomy::OnlyDegreeAtLeastTwo));
    }

    #[test]
    fn single_base_lifts_with_degree_zero() {
        let n = SymplecticMatroid::new(2, [ap(2, 1, 2)]).unwrap();
        let ls = liftings(&n).unwrap();
        assert!(ls.iter().any(|l| l.degree == 0 && l.matroid == sym(2, &[&[1], &[2]])));
        let r = is_representable(&n);
        assert!(r.representable);
        assert_eq!(r.trichotomy, Some(Trichotomy::OnlyDegreeZero));
        assert_eq!(r.normal_liftings, vec![sym(2, &[&[1], &[2]])]);
        // degree-1 liftings exist but are never chosen
        assert_eq!(ls[0].degree, 1);
        assert_eq!(max_lifting(&n).unwrap(), sym(2, &[&[1], &[2]]));
    }

    #[test]
    fn degree_one_obstruction_has_no_other_lifting() {
        let n = degree_one_obstruction();
        let ls = liftings(&n).unwrap();
        assert!(ls.iter().all(|l| l.degree == 1));
        let r = is_representable(&n);
        assert!(!r.representable);
        assert_eq!(r.trichotomy, None);
        assert_eq!(max_lifting(&n), Err(Error::NotRepresentable));
    }

    #[test]
    fn full_n2_has_both_kinds() {
        let r = is_representable(&SymplecticMatroid::full(2).unwrap());
        assert_eq!(r.trichotomy, Some(Trichotomy::Both));
        assert_eq!(r.witness_lifting, Some(sym(2, &[&[1], &[2], &[-2], &[-1]])));
        assert_eq!(r.normal_liftings[0], sym(2, &[&[1, -1], &[2, -2]]));
        assert!(!r.max_is_ambiguous());
    }
}
