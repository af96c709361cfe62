//! The ground set `E_n = [n] ∪ [n*]`, its star involution and pairs of labels.
//!
//! A [`Label`] is stored in signed form (`i` for `i`, `-i` for `i*`), which
//! makes the involution independent of `n`. Its [`Ord`] follows the internal
//! positions `1 < 2 < … < n < n* < … < 1*`, i.e. the position bijection
//! `p(i) = i`, `p(i*) = 2n − i + 1`, so sorting labels and sorting positions
//! agree for every `n`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Label(i32);

impl Label {
    /// Builds a label from its signed form, checking `1 <= |value| <= n`.
    pub fn new(value: i64, n: usize) -> Result<Self> {
        if value == 0 || value.unsigned_abs() as usize > n {
            return Err(Error::LabelOutOfRange { value, n });
        }
        Ok(Label(value as i32))
    }

    /// The unstarred label `i`. Panics on `i == 0`.
    pub fn plain(i: usize) -> Self {
        assert!(i > 0, "labels start at 1");
        Label(i as i32)
    }

    /// The starred label `i*`. Panics on `i == 0`.
    pub fn starred(i: usize) -> Self {
        assert!(i > 0, "labels start at 1");
        Label(-(i as i32))
    }

    pub fn from_position(position: usize, n: usize) -> Result<Self> {
        match position {
            p if p >= 1 && p <= n => Ok(Label(p as i32)),
            p if p > n && p <= 2 * n => Ok(Label(-((2 * n + 1 - p) as i32))),
            _ => Err(Error::PositionOutOfRange { position, n }),
        }
    }

    /// Position in `[2n]`: `i ↦ i`, `i* ↦ 2n − i + 1`.
    pub fn position(self, n: usize) -> usize {
        if self.0 > 0 {
            self.0 as usize
        } else {
            2 * n + 1 - self.index()
        }
    }

    pub fn star(self) -> Self {
        Label(-self.0)
    }

    pub fn signed(self) -> i64 {
        self.0 as i64
    }

    /// The underlying index `i` of both `i` and `i*`.
    pub fn index(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn is_starred(self) -> bool {
        self.0 < 0
    }

    /// `+1` for `i`, `-1` for `i*`; the coefficient of `φ_i` in `ε_label`.
    pub fn sign(self) -> i64 {
        self.0.signum() as i64
    }

    fn key(self) -> (bool, i32) {
        (self.0 < 0, self.0)
    }
}

impl Ord for Label {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_starred() {
            write!(f, "{}*", self.index())
        } else {
            write!(f, "{}", self.index())
        }
    }
}

/// All labels of `E_n` in position order.
pub fn labels(n: usize) -> impl Iterator<Item = Label> + Clone {
    (1..=n).map(Label::plain).chain((1..=n).rev().map(Label::starred))
}

/// An unordered pair of distinct labels, stored with `lo < hi` in position order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pair {
    lo: Label,
    hi: Label,
}

impl Pair {
    pub fn new(a: Label, b: Label) -> Result<Self> {
        match a.cmp(&b) {
            Ordering::Less => Ok(Pair { lo: a, hi: b }),
            Ordering::Greater => Ok(Pair { lo: b, hi: a }),
            Ordering::Equal => Err(Error::DegeneratePair(a)),
        }
    }

    /// The diagonal pair `{i, i*}`.
    pub fn diagonal(i: usize) -> Self {
        Pair {
            lo: Label::plain(i),
            hi: Label::starred(i),
        }
    }

    pub fn lo(self) -> Label {
        self.lo
    }

    pub fn hi(self) -> Label {
        self.hi
    }

    pub fn labels(self) -> [Label; 2] {
        [self.lo, self.hi]
    }

    pub fn is_diagonal(self) -> bool {
        self.lo.star() == self.hi
    }

    pub fn contains(self, label: Label) -> bool {
        self.lo == label || self.hi == label
    }

    /// Positions `(p(lo), p(hi))`, increasing.
    pub fn positions(self, n: usize) -> (usize, usize) {
        (self.lo.position(n), self.hi.position(n))
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.lo, self.hi)
    }
}

/// A pair `{i, j}` with `j ≠ i*`; an element of `J_n²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdmissiblePair(Pair);

impl AdmissiblePair {
    pub fn new(a: Label, b: Label) -> Result<Self> {
        Pair::new(a, b)?.try_into()
    }

    pub fn pair(self) -> Pair {
        self.0
    }

    pub fn lo(self) -> Label {
        self.0.lo
    }

    pub fn hi(self) -> Label {
        self.0.hi
    }

    pub fn labels(self) -> [Label; 2] {
        self.0.labels()
    }

    pub fn contains(self, label: Label) -> bool {
        self.0.contains(label)
    }

    /// `ε_lo + ε_hi ∈ Z^n`.
    pub fn weight(self, n: usize) -> Vec<i64> {
        let mut v = vec![0; n];
        for l in self.labels() {
            v[l.index() - 1] += l.sign();
        }
        v
    }
}

impl TryFrom<Pair> for AdmissiblePair {
    type Error = Error;

    fn try_from(pair: Pair) -> Result<Self> {
        if pair.is_diagonal() {
            Err(Error::NotAdmissible(pair.lo, pair.hi))
        } else {
            Ok(AdmissiblePair(pair))
        }
    }
}

impl From<AdmissiblePair> for Pair {
    fn from(p: AdmissiblePair) -> Pair {
        p.0
    }
}

impl fmt::Display for AdmissiblePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `S ∩ S* = ∅`.
pub fn is_admissible_set<'a>(set: impl IntoIterator<Item = &'a Label>) -> bool {
    let set: BTreeSet<Label> = set.into_iter().copied().collect();
    set.iter().all(|l| !set.contains(&l.star()))
}

/// All `C(2n, 2)` pairs of `E_n`, lexicographic in position order.
pub fn all_pairs(n: usize) -> Vec<Pair> {
    let ls: Vec<Label> = labels(n).collect();
    let mut out = Vec::with_capacity(ls.len() * ls.len().saturating_sub(1) / 2);
    for (k, &a) in ls.iter().enumerate() {
        for &b in &ls[k + 1..] {
            out.push(Pair { lo: a, hi: b });
        }
    }
    out
}

/// `J_n²`, lexicographic in position order; `2n(n − 1)` elements.
pub fn admissible_pairs(n: usize) -> Vec<AdmissiblePair> {
    all_pairs(n)
        .into_iter()
        .filter_map(|p| AdmissiblePair::try_from(p).ok())
        .collect()
}
