//! Rank-2 matroids on `E_n` presented as non-intersecting families of bags.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::ground::{labels, Label, Pair};

/// A rank-2 `S_2n`-matroid: pairwise disjoint nonempty bags (at least two),
/// every label outside the bags is a loop, and the bases are the pairs that
/// meet two different bags.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymmetricMatroid {
    n: usize,
    /// Sorted by smallest label.
    bags: Vec<BTreeSet<Label>>,
}

/// Codimension-one moves on a family of bags.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Move {
    /// Turn a label into a loop, erasing every base through it.
    Erase(Label),
    /// Merge the bags containing the two labels.
    Merge(Label, Label),
    /// Split the bag containing the label into `{label}` and the rest.
    Split(Label),
}

impl SymmetricMatroid {
    pub fn new<B, I>(n: usize, bags: B) -> Result<Self>
    where
        B: IntoIterator<Item = I>,
        I: IntoIterator<Item = Label>,
    {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for bag in bags {
            let bag: BTreeSet<Label> = bag.into_iter().collect();
            if bag.is_empty() {
                return Err(Error::InvalidFamily("empty bag".into()));
            }
            for &l in &bag {
                if l.index() > n {
                    return Err(Error::LabelOutOfRange { value: l.signed(), n });
                }
                if !seen.insert(l) {
                    return Err(Error::InvalidFamily(format!("label {l} lies in two bags")));
                }
            }
            out.push(bag);
        }
        if out.len() < 2 {
            return Err(Error::InvalidFamily(format!(
                "need at least two bags, got {}",
                out.len()
            )));
        }
        Ok(Self::from_bags_unchecked(n, out))
    }

    fn from_bags_unchecked(n: usize, mut bags: Vec<BTreeSet<Label>>) -> Self {
        bags.sort_by_key(|b| *b.first().expect("bags are nonempty"));
        SymmetricMatroid { n, bags }
    }

    /// Recovers the family of bags from a basis set.
    ///
    /// On the support (the union of the bases) the relation `i ~ j ⇔ {i,j} ∉ B`
    /// must be an equivalence whose classes are the bags, and `B` must contain
    /// every cross-class pair.
    pub fn from_bases<'a>(n: usize, bases: impl IntoIterator<Item = &'a Pair>) -> Result<Self> {
        let bases: BTreeSet<Pair> = bases.into_iter().copied().collect();
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
        let support: BTreeSet<Label> = bases.iter().flat_map(|p| p.labels()).collect();
        let is_base = |a: Label, b: Label| bases.contains(&Pair::new(a, b).expect("distinct"));

        // First-fit grouping by class representative; checked exhaustively below.
        let mut classes: Vec<BTreeSet<Label>> = Vec::new();
        for &x in &support {
            match classes
                .iter_mut()
                .find(|c| !is_base(x, *c.first().expect("nonempty")))
            {
                Some(c) => {
                    c.insert(x);
                }
                None => classes.push(BTreeSet::from([x])),
            }
        }
        let class_of: BTreeMap<Label, usize> = classes
            .iter()
            .enumerate()
            .flat_map(|(k, c)| c.iter().map(move |&l| (l, k)))
            .collect();
        for (&a, &b) in support.iter().tuple_combinations() {
            let same = class_of[&a] == class_of[&b];
            match (same, is_base(a, b)) {
                (true, true) => {
                    return Err(Error::NotAMatroid(format!(
                        "non-bases are not transitive: {a} and {b} are both tied to {} but {{{a},{b}}} is a base",
                        classes[class_of[&a]].first().expect("nonempty")
                    )))
                }
                (false, false) => {
                    return Err(Error::NotAMatroid(format!(
                        "cross pair {{{a},{b}}} is missing from the bases"
                    )))
                }
                _ => {}
            }
        }
        Ok(Self::from_bags_unchecked(n, classes))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bags(&self) -> &[BTreeSet<Label>] {
        &self.bags
    }

    pub fn bag_of(&self, label: Label) -> Option<usize> {
        self.bags.iter().position(|b| b.contains(&label))
    }

    pub fn support(&self) -> BTreeSet<Label> {
        self.bags.iter().flatten().copied().collect()
    }

    pub fn loops(&self) -> Vec<Label> {
        let support = self.support();
        labels(self.n).filter(|l| !support.contains(l)).collect()
    }

    /// `w(M)`: number of non-loops.
    pub fn weight(&self) -> usize {
        self.bags.iter().map(BTreeSet::len).sum()
    }

    /// `ℓ(M)`: number of bags.
    pub fn length(&self) -> usize {
        self.bags.len()
    }

    /// All pairs meeting two distinct bags.
    pub fn bases(&self) -> BTreeSet<Pair> {
        let mut out = BTreeSet::new();
        for (a, b) in self.bags.iter().tuple_combinations() {
            for &x in a {
                for &y in b {
                    out.insert(Pair::new(x, y).expect("bags are disjoint"));
                }
            }
        }
        out
    }

    /// `A(M) ∩ [n]`: the indices `i` whose diagonal `{i, i*}` is a base.
    pub fn diagonal_indices(&self) -> Vec<usize> {
        (1..=self.n)
            .filter(|&i| {
                match (self.bag_of(Label::plain(i)), self.bag_of(Label::starred(i))) {
                    (Some(a), Some(b)) => a != b,
                    _ => false,
                }
            })
            .collect()
    }

    /// Number of diagonal pairs `{i, i*}` among the bases.
    pub fn degree(&self) -> usize {
        self.diagonal_indices().len()
    }

    pub fn transform(&self, mv: Move) -> Result<Self> {
        let find = |l: Label| {
            self.bag_of(l)
                .ok_or_else(|| Error::InvalidMove(format!("{l} is a loop")))
        };
        let mut bags = self.bags.clone();
        match mv {
            Move::Erase(l) => {
                let k = find(l)?;
                bags[k].remove(&l);
                if bags[k].is_empty() {
                    bags.remove(k);
                }
                if bags.len() < 2 {
                    return Err(Error::InvalidMove(format!(
                        "erasing {l} leaves fewer than two bags"
                    )));
                }
            }
            Move::Merge(a, b) => {
                let (ka, kb) = (find(a)?, find(b)?);
                if ka == kb {
                    return Err(Error::InvalidMove(format!("{a} and {b} share a bag")));
                }
                if bags.len() < 3 {
                    return Err(Error::InvalidMove(
                        "merging would leave fewer than two bags".into(),
                    ));
                }
                let moved = bags[kb].clone();
                bags[ka].extend(moved);
                bags.remove(kb);
            }
            Move::Split(l) => {
                let k = find(l)?;
                if bags[k].len() < 2 {
                    return Err(Error::InvalidMove(format!("the bag of {l} is a singleton")));
                }
                bags[k].remove(&l);
                bags.push(BTreeSet::from([l]));
            }
        }
        Ok(Self::from_bags_unchecked(self.n, bags))
    }
}

impl fmt::Display for SymmetricMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bags = self
            .bags
            .iter()
            .map(|b| format!("{{{}}}", b.iter().join(",")))
            .join("");
        write!(f, "{bags}")
    }
}

/// Every rank-2 matroid on `E_n`, sorted. Limited to `n <= 4`.
pub fn enumerate_symmetric(n: usize) -> Result<Vec<SymmetricMatroid>> {
    const MAX: usize = 4;
    if n > MAX {
        return Err(Error::TooLarge { n, max: MAX });
    }
    let ls: Vec<Label> = labels(n).collect();
    let mut out = Vec::new();
    let mut bags: Vec<BTreeSet<Label>> = Vec::new();
    assign(&ls, &mut bags, &mut |bags| {
        if bags.len() >= 2 {
            out.push(SymmetricMatroid::from_bags_unchecked(n, bags.to_vec()));
        }
    });
    out.sort();
    Ok(out)
}

/// Each label becomes a loop, joins an existing bag or opens a new one.
fn assign(rest: &[Label], bags: &mut Vec<BTreeSet<Label>>, emit: &mut impl FnMut(&[BTreeSet<Label>])) {
    let Some((&l, rest)) = rest.split_first() else {
        emit(bags);
        return;
    };
    assign(rest, bags, emit);
    for k in 0..bags.len() {
        bags[k].insert(l);
        assign(rest, bags, emit);
        bags[k].remove(&l);
    }
    bags.push(BTreeSet::from([l]));
    assign(rest, bags, emit);
    bags.pop();
}
