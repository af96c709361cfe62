#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::Rng;
use sympmat_core::exact::{rational, Rational};
use sympmat_core::{AdmissiblePair, Label, Pair, SymmetricMatroid, SymplecticMatroid};

pub fn l(v: i64, n: usize) -> Label {
    Label::new(v, n).unwrap()
}

pub fn ap(n: usize, a: i64, b: i64) -> AdmissiblePair {
    AdmissiblePair::new(l(a, n), l(b, n)).unwrap()
}

pub fn pair(n: usize, a: i64, b: i64) -> Pair {
    Pair::new(l(a, n), l(b, n)).unwrap()
}

pub fn sym(n: usize, bags: &[&[i64]]) -> SymmetricMatroid {
    SymmetricMatroid::new(n, bags.iter().map(|b| b.iter().map(|&v| l(v, n)).collect::<Vec<_>>()))
        .unwrap()
}

pub fn sp(n: usize, bases: &[(i64, i64)]) -> SymplecticMatroid {
    SymplecticMatroid::new(n, bases.iter().map(|&(a, b)| ap(n, a, b))).unwrap()
}

/// Projection of the bags `{1,2,2*}, {1*,3,3*}`: symplectic, but every lifting has degree 1.
pub fn degree_one_obstruction() -> SymplecticMatroid {
    sp(3, &[(1, 3), (1, -3), (2, 3), (2, -3), (-2, 3), (-2, -3), (-1, 2), (-1, -2)])
}

pub fn projection(m: &SymmetricMatroid) -> BTreeSet<AdmissiblePair> {
    m.bases()
        .into_iter()
        .filter_map(|p| AdmissiblePair::try_from(p).ok())
        .collect()
}

/// Entries `p/q` with `|p| ≤ 6`, `1 ≤ q ≤ 4`.
pub fn random_rational(rng: &mut impl Rng) -> Rational {
    rational(rng.gen_range(-6..=6), rng.gen_range(1..=4))
}

pub fn random_matrix(rng: &mut impl Rng, n: usize) -> Vec<Vec<Rational>> {
    (0..2).map(|_| (0..2 * n).map(|_| random_rational(rng)).collect()).collect()
}

pub fn random_nonzero(rng: &mut impl Rng) -> Rational {
    loop {
        let x = random_rational(rng);
        if x != rational(0, 1) {
            return x;
        }
    }
}
