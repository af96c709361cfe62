//! Exact-rational Plücker witnesses and representability certificates.
//!
//! A witness is a `2 × 2n` matrix whose columns are indexed by positions. Its
//! Plücker coordinate `x_{i,j}` (positions `i < j`) is the minor on columns
//! `i, j` in that order. The symplectic relation is `s = Σ_i x_{i,i*}`.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{integer, rank, Rational};
use crate::ground::{AdmissiblePair, Label, Pair};
use crate::matroid::{is_representable, SymmetricMatroid, SymplecticMatroid};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PluckerWitness {
    n: usize,
    /// Two rows of length `2n`.
    matrix: [Vec<Rational>; 2],
    /// Minors for position pairs `(i, j)`, `i < j`, in lexicographic order.
    plucker: Vec<Rational>,
}

impl PluckerWitness {
    pub fn new(matrix: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = matrix.first().map_or(0, Vec::len);
        if matrix.len() != 2 || matrix[1].len() != cols || cols < 2 || !cols.is_multiple_of(2) {
            return Err(Error::Shape {
                expected: 2 * (cols / 2).max(1),
                rows: matrix.len(),
                cols,
            });
        }
        let plucker = plucker_vector(&matrix)?;
        let mut rows = matrix.into_iter();
        let top = rows.next().expect("two rows");
        let bottom = rows.next().expect("two rows");
        Ok(PluckerWitness { n: cols / 2, matrix: [top, bottom], plucker })
    }

    pub fn from_integers(rows: [&[i64]; 2]) -> Result<Self> {
        Self::new(rows.iter().map(|r| r.iter().map(|&x| integer(x)).collect()).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &[Vec<Rational>; 2] {
        &self.matrix
    }

    pub fn plucker(&self) -> &[Rational] {
        &self.plucker
    }

    /// `x_{i,j}` for 1-based positions `i < j`.
    pub fn coordinate_at(&self, i: usize, j: usize) -> &Rational {
        &self.plucker[pair_index(i, j, 2 * self.n)]
    }

    pub fn coordinate(&self, pair: Pair) -> &Rational {
        let (i, j) = pair.positions(self.n);
        self.coordinate_at(i, j)
    }

    /// Pairs of labels with a nonzero coordinate.
    pub fn support(&self) -> BTreeSet<Pair> {
        position_pairs(2 * self.n)
            .filter(|&(i, j)| !self.coordinate_at(i, j).is_zero())
            .map(|(i, j)| pair_at(i, j, self.n))
            .collect()
    }
}

impl fmt::Display for PluckerWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.matrix {
            writeln!(f, "[{}]", row.iter().join(", "))?;
        }
        Ok(())
    }
}

fn position_pairs(m: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=m).tuple_combinations()
}

fn pair_index(i: usize, j: usize, m: usize) -> usize {
    debug_assert!(1 <= i && i < j && j <= m);
    // pairs (a, ·) with a < i come first
    (i - 1) * m - (i - 1) * i / 2 + (j - i - 1)
}

fn pair_at(i: usize, j: usize, n: usize) -> Pair {
    let l = |p| Label::from_position(p, n).expect("position in range");
    Pair::new(l(i), l(j)).expect("distinct positions")
}

/// All `2 × 2` minors of a `2 × m` matrix, ordered as [`PluckerWitness::plucker`].
pub fn plucker_vector(matrix: &[Vec<Rational>]) -> Result<Vec<Rational>> {
    let cols = matrix.first().map_or(0, Vec::len);
    if matrix.len() != 2 || matrix[1].len() != cols {
        return Err(Error::Shape { expected: cols, rows: matrix.len(), cols });
    }
    let (u, v) = (&matrix[0], &matrix[1]);
    let out: Vec<Rational> = position_pairs(cols)
        .map(|(i, j)| &u[i - 1] * &v[j - 1] - &u[j - 1] * &v[i - 1])
        .collect();
    if out.iter().all(Zero::is_zero) {
        return Err(Error::RankDeficient);
    }
    Ok(out)
}

/// The matroid `M'(x)` of nonzero coordinates.
pub fn matroid_of_witness(w: &PluckerWitness) -> SymmetricMatroid {
    SymmetricMatroid::from_bases(w.n, &w.support()).expect("a rank-2 matrix realises a matroid")
}

pub fn symplectic_sum(w: &PluckerWitness) -> Rational {
    let m = 2 * w.n;
    (1..=w.n).map(|i| w.coordinate_at(i, m + 1 - i)).sum()
}

/// Every three-term relation `x_ab x_cd − x_ac x_bd + x_ad x_bc = 0`, `a < b < c < d`.
pub fn grassmann_plucker_holds(w: &PluckerWitness) -> bool {
    let x = |i, j| w.coordinate_at(i, j);
    (1..=2 * w.n).tuple_combinations().all(|(a, b, c, d)| {
        (x(a, b) * x(c, d) - x(a, c) * x(b, d) + x(a, d) * x(b, c)).is_zero()
    })
}

/// Scales column `i` by `μ_i` and column `i*` by `μ_i⁻¹`.
pub fn torus_act(w: &PluckerWitness, mu: &[Rational]) -> Result<PluckerWitness> {
    if mu.len() != w.n {
        return Err(Error::DimensionMismatch(w.n, mu.len()));
    }
    if mu.iter().any(Zero::is_zero) {
        return Err(Error::Construction("torus element has a zero entry".into()));
    }
    let mut matrix: Vec<Vec<Rational>> = w.matrix.to_vec();
    for (k, m) in mu.iter().enumerate() {
        let i = Label::plain(k + 1).position(w.n) - 1;
        let s = Label::starred(k + 1).position(w.n) - 1;
        let inv = m.recip();
        for row in &mut matrix {
            row[i] = &row[i] * m;
            row[s] = &row[s] * &inv;
        }
    }
    PluckerWitness::new(matrix)
}

/// Columns `c_e · (1, a_b)` for `e` in bag `b`, zero for loops; `scales[p]` is
/// `c_e` for the label at position `p + 1`.
fn assemble(m: &SymmetricMatroid, values: &[i64], scales: &[Rational]) -> Vec<Vec<Rational>> {
    let n = m.n();
    let mut rows = vec![vec![Rational::zero(); 2 * n]; 2];
    for (b, bag) in m.bags().iter().enumerate() {
        for l in bag {
            let p = l.position(n) - 1;
            rows[0][p] = scales[p].clone();
            rows[1][p] = &scales[p] * integer(values[b]);
        }
    }
    rows
}

/// A realisation of `M` with bag values `0, 1, 2, …` in bag order.
pub fn build_witness(m: &SymmetricMatroid) -> PluckerWitness {
    let values: Vec<i64> = (0..m.length() as i64).collect();
    let ones = vec![Rational::one(); 2 * m.n()];
    PluckerWitness::new(assemble(m, &values, &ones)).expect("two bags give a nonzero minor")
}

/// A certified witness for a representable `N`, realising its lifting of
/// degree `0` or `≥ 2` and lying on `s = 0`.
pub fn build_symplectic_witness(n: &SymplecticMatroid) -> Result<PluckerWitness> {
    let m = is_representable(n).witness_lifting.ok_or(Error::NotRepresentable)?;
    let w = if m.degree() == 0 {
        build_witness(&m)
    } else {
        solve_on_hyperplane(&m)?
    };
    if !verify_certificate(&w, n).is_valid() || matroid_of_witness(&w) != m {
        return Err(Error::Construction(format!("certificate failed for {m}")));
    }
    Ok(w)
}

/// Rescales column `i*` of the first diagonal index `i`: `s` is affine in that
/// scalar with nonzero slope `x_{i,i*}`. The remaining diagonal terms must not
/// cancel; permuting bag values cannot help with two bags, so a second
/// fallback doubles the scalar of one other diagonal column.
fn solve_on_hyperplane(m: &SymmetricMatroid) -> Result<PluckerWitness> {
    let n = m.n();
    let diagonals = m.diagonal_indices();
    let col = |i: usize| Label::starred(i).position(n) - 1;
    let first = diagonals[0];
    let ell = m.length() as i64;
    let boosts = std::iter::once(None).chain(diagonals[1..].iter().map(|&j| Some(col(j))));
    for (boost, values) in boosts.cartesian_product((0..ell).permutations(ell as usize)) {
        let mut scales = vec![Rational::one(); 2 * n];
        if let Some(j) = boost {
            scales[j] = integer(2);
        }
        let w = PluckerWitness::new(assemble(m, &values, &scales))?;
        let slope = w.coordinate(Pair::diagonal(first)).clone();
        let rest = symplectic_sum(&w) - &slope;
        if rest.is_zero() {
            continue;
        }
        scales[col(first)] = -rest / slope;
        return PluckerWitness::new(assemble(m, &values, &scales));
    }
    Err(Error::Construction(format!("no scalars put {m} on s = 0")))
}

/// Reasons a certificate can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Failure {
    GroundSet,
    Rank,
    PluckerRelation,
    SymplecticSum,
    Pattern,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Failure::GroundSet => "witness and matroid live on different ground sets",
            Failure::Rank => "matrix rank is not 2",
            Failure::PluckerRelation => "a Grassmann-Plücker relation fails",
            Failure::SymplecticSum => "symplectic sum is nonzero",
            Failure::Pattern => "admissible nonzero pattern differs from the bases",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub failures: Vec<Failure>,
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            f.write_str("valid")
        } else {
            write!(f, "invalid: {}", self.failures.iter().join("; "))
        }
    }
}

/// Admissible pairs with a nonzero coordinate.
pub fn admissible_support(w: &PluckerWitness) -> BTreeSet<AdmissiblePair> {
    w.support()
        .into_iter()
        .filter_map(|p| AdmissiblePair::try_from(p).ok())
        .collect()
}

pub fn verify_certificate(w: &PluckerWitness, n: &SymplecticMatroid) -> Verdict {
    let mut failures = Vec::new();
    if w.n != n.n() {
        failures.push(Failure::GroundSet);
    }
    if rank(w.matrix()) != 2 {
        failures.push(Failure::Rank);
    }
    if !grassmann_plucker_holds(w) {
        failures.push(Failure::PluckerRelation);
    }
    if !symplectic_sum(w).is_zero() {
        failures.push(Failure::SymplecticSum);
    }
    if admissible_support(w) != *n.bases() {
        failures.push(Failure::Pattern);
    }
    Verdict { failures }
}
