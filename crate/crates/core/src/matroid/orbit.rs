//! Orbits of basis sets under `S_2n` or `BC_n`.

use std::collections::{BTreeMap, BTreeSet};

use crate::ground::Pair;
use crate::group::{hyperoctahedral_group, symmetric_group, Permutation};
use crate::matroid::SymplecticMatroid;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Group {
    /// `S_2n`, all permutations of positions.
    Symmetric,
    /// `BC_n`, the signed permutations.
    Hyperoctahedral,
}

impl Group {
    pub fn elements(self, n: usize) -> Vec<Permutation> {
        match self {
            Group::Symmetric => symmetric_group(n),
            Group::Hyperoctahedral => hyperoctahedral_group(n)
                .into_iter()
                .map(|t| t.permutation().clone())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit<T> {
    /// Lexicographically smallest image of the orbit's members.
    pub representative: BTreeSet<Pair>,
    /// The input items lying in this orbit, in input order.
    pub members: Vec<T>,
}

pub fn apply(tau: &Permutation, set: &BTreeSet<Pair>) -> BTreeSet<Pair> {
    set.iter().map(|&p| tau.apply_pair(p)).collect()
}

/// Smallest basis set in the orbit of `set`.
pub fn canonical_form(set: &BTreeSet<Pair>, elements: &[Permutation]) -> BTreeSet<Pair> {
    elements
        .iter()
        .map(|t| apply(t, set))
        .min()
        .unwrap_or_else(|| set.clone())
}

/// Partitions `sets` into orbits, sorted by representative.
pub fn orbits(n: usize, sets: &[BTreeSet<Pair>], group: Group) -> Vec<Orbit<BTreeSet<Pair>>> {
    group_by_orbit(sets.iter().cloned(), |s| s.clone(), &group.elements(n))
}

/// `BC_n`-orbits of symplectic matroids.
pub fn symplectic_orbits(matroids: &[SymplecticMatroid]) -> Vec<Orbit<SymplecticMatroid>> {
    let Some(first) = matroids.first() else {
        return Vec::new();
    };
    let elements = Group::Hyperoctahedral.elements(first.n());
    group_by_orbit(matroids.iter().cloned(), SymplecticMatroid::pairs, &elements)
}

fn group_by_orbit<T>(
    items: impl Iterator<Item = T>,
    key: impl Fn(&T) -> BTreeSet<Pair>,
    elements: &[Permutation],
) -> Vec<Orbit<T>> {
    let mut by_rep: BTreeMap<BTreeSet<Pair>, Vec<T>> = BTreeMap::new();
    for item in items {
        let rep = canonical_form(&key(&item), elements);
        by_rep.entry(rep).or_default().push(item);
    }
    by_rep
        .into_iter()
        .map(|(representative, members)| Orbit { representative, members })
        .collect()
}
