//! Admissible orders on `E_n` and the Gale order they induce on `J_n²`.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::ground::{is_admissible_set, AdmissiblePair, Label};

/// A total order on `E_n` whose top `n` labels form an admissible set and
/// whose bottom `n` labels are their stars in reverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AdmissibleOrder {
    n: usize,
    /// Largest first.
    listing: Vec<Label>,
    /// `rank[p(l) - 1]` is the height of `l`, `0` for the smallest label.
    rank: Vec<usize>,
}

impl AdmissibleOrder {
    /// Builds an order from its listing, largest label first.
    pub fn new(n: usize, listing: Vec<Label>) -> Result<Self> {
        if listing.len() != 2 * n {
            return Err(Error::InvalidOrder(format!(
                "expected {} labels, got {}",
                2 * n,
                listing.len()
            )));
        }
        if listing.iter().any(|l| l.index() == 0 || l.index() > n) {
            return Err(Error::InvalidOrder("label out of range".into()));
        }
        let distinct: BTreeSet<Label> = listing.iter().copied().collect();
        if distinct.len() != 2 * n {
            return Err(Error::InvalidOrder("repeated label".into()));
        }
        let (top, bottom) = listing.split_at(n);
        if !is_admissible_set(top) {
            return Err(Error::InvalidOrder("top half is not admissible".into()));
        }
        if !top.iter().rev().map(|l| l.star()).eq(bottom.iter().copied()) {
            return Err(Error::InvalidOrder(
                "bottom half is not the reversed stars of the top half".into(),
            ));
        }
        Ok(Self::from_listing_unchecked(n, listing))
    }

    /// The order `s_1 > … > s_n > s_n* > … > s_1*` for an admissible `top`.
    fn from_top(n: usize, top: &[Label]) -> Self {
        let listing = top
            .iter()
            .copied()
            .chain(top.iter().rev().map(|l| l.star()))
            .collect();
        Self::from_listing_unchecked(n, listing)
    }

    fn from_listing_unchecked(n: usize, listing: Vec<Label>) -> Self {
        let mut rank = vec![0; 2 * n];
        for (k, l) in listing.iter().enumerate() {
            rank[l.position(n) - 1] = 2 * n - 1 - k;
        }
        AdmissibleOrder { n, listing, rank }
    }

    /// `1 < 2 < … < n < n* < … < 1*`.
    pub fn standard(n: usize) -> Self {
        let top: Vec<Label> = (1..=n).map(Label::starred).collect();
        Self::from_top(n, &top)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Labels from largest to smallest.
    pub fn listing(&self) -> &[Label] {
        &self.listing
    }

    pub fn rank(&self, label: Label) -> usize {
        self.rank[label.position(self.n) - 1]
    }

    pub fn less(&self, a: Label, b: Label) -> bool {
        self.rank(a) < self.rank(b)
    }

    /// The pair as `(smaller, larger)` ranks under this order.
    fn sorted_ranks(&self, p: AdmissiblePair) -> (usize, usize) {
        let (a, b) = (self.rank(p.lo()), self.rank(p.hi()));
        (a.min(b), a.max(b))
    }

    /// Gale comparison `a ≤ b`: both pairs sorted by this order, then compared
    /// componentwise with ties allowed.
    pub fn gale_leq(&self, a: AdmissiblePair, b: AdmissiblePair) -> bool {
        let (a0, a1) = self.sorted_ranks(a);
        let (b0, b1) = self.sorted_ranks(b);
        a0 <= b0 && a1 <= b1
    }

    /// Maximal elements of `set` under the Gale order.
    pub fn maximal<'a>(
        &self,
        set: impl IntoIterator<Item = &'a AdmissiblePair> + Clone,
    ) -> Vec<AdmissiblePair> {
        set.clone()
            .into_iter()
            .filter(|&&m| {
                !set.clone()
                    .into_iter()
                    .any(|&b| b != m && self.gale_leq(m, b))
            })
            .copied()
            .collect()
    }

    pub fn reversed(&self) -> Self {
        let top: Vec<Label> = self.listing[..self.n].iter().map(|l| l.star()).collect();
        Self::from_top(self.n, &top)
    }
}

impl fmt::Display for AdmissibleOrder {
    /// Smallest first, e.g. `1<2<2*<1*`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.listing.iter().rev().join("<"))
    }
}

/// Free function form of [`AdmissibleOrder::gale_leq`].
pub fn gale_leq(a: AdmissiblePair, b: AdmissiblePair, ord: &AdmissibleOrder) -> bool {
    ord.gale_leq(a, b)
}

/// All `2^n · n!` admissible orders, sorted lexicographically by listing.
pub fn enumerate_admissible_orders(n: usize) -> Vec<AdmissibleOrder> {
    let mut out = Vec::new();
    for perm in (1..=n).permutations(n) {
        for signs in 0u32..(1 << n) {
            let top: Vec<Label> = perm
                .iter()
                .enumerate()
                .map(|(k, &i)| {
                    if signs >> k & 1 == 1 {
                        Label::starred(i)
                    } else {
                        Label::plain(i)
                    }
                })
                .collect();
            out.push(AdmissibleOrder::from_top(n, &top));
        }
    }
    out.sort_by(|a, b| a.listing.cmp(&b.listing));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::{admissible_pairs, labels};

    fn l(v: i64) -> Label {
        Label::new(v, 3).unwrap()
    }

    fn all_labels_once(n: usize, listing: &[Label]) -> bool {
        let got: BTreeSet<Label> = listing.iter().copied().collect();
        got == labels(n).collect()
    }

    fn from_display(n: usize, ascending: &[i64]) -> AdmissibleOrder {
        let listing = ascending.iter().rev().map(|&v| Label::new(v, n).unwrap()).collect();
        AdmissibleOrder::new(n, listing).unwrap()
    }

    #[test]
    fn order_counts() {
        assert_eq!(enumerate_admissible_orders(1).len(), 2);
        assert_eq!(enumerate_admissible_orders(2).len(), 8);
        assert_eq!(enumerate_admissible_orders(3).len(), 48);
    }

    #[test]
    fn n1_orders_are_both_orientations() {
        let shown: Vec<String> = enumerate_admissible_orders(1).iter().map(|o| o.to_string()).collect();
        assert!(shown.contains(&"1<1*".to_string()));
        assert!(shown.contains(&"1*<1".to_string()));
    }

    #[test]
    fn n2_listed_orders_exist() {
        let all = enumerate_admissible_orders(2);
        for asc in [[1, 2, -2, -1], [2, -1, 1, -2], [1, -2, 2, -1], [2, 1, -1, -2]] {
            let o = from_display(2, &asc);
            assert!(all.contains(&o), "{o}");
        }
        assert_eq!(AdmissibleOrder::standard(2), from_display(2, &[1, 2, -2, -1]));
    }

    #[test]
    fn invalid_listings_are_rejected() {
        // 1 > 2 > 1* > 2*: bottom half is not the reversed stars
        let bad: Vec<Label> = [1, 2, -1, -2].iter().map(|&v| Label::new(v, 2).unwrap()).collect();
        assert!(AdmissibleOrder::new(2, bad).is_err());
        let good: Vec<Label> = [1, 2, -2, -1].iter().map(|&v| Label::new(v, 2).unwrap()).collect();
        assert!(AdmissibleOrder::new(2, good).is_ok());
        assert!(AdmissibleOrder::new(3, vec![l(1), l(2), l(3)]).is_err());
        let bad2 = vec![Label::plain(1), Label::starred(1), Label::plain(2), Label::starred(2)];
        assert!(AdmissibleOrder::new(2, bad2).is_err());
    }

    #[test]
    fn standard_chain_for_n2() {
        // 12 < 12* < 21* < 2*1*
        let o = AdmissibleOrder::standard(2);
        let p = |a, b| AdmissiblePair::new(Label::new(a, 2).unwrap(), Label::new(b, 2).unwrap()).unwrap();
        let chain = [p(1, 2), p(1, -2), p(2, -1), p(-2, -1)];
        for w in chain.windows(2) {
            assert!(o.gale_leq(w[0], w[1]));
            assert!(!o.gale_leq(w[1], w[0]));
        }
        assert!(o.gale_leq(p(1, 2), p(1, 2)));
    }

    #[test]
    fn unique_maximum_under_2_1star_1_2star() {
        let o = from_display(2, &[2, -1, 1, -2]);
        let all = admissible_pairs(2);
        let max = o.maximal(&all);
        let p = |a, b| AdmissiblePair::new(Label::new(a, 2).unwrap(), Label::new(b, 2).unwrap()).unwrap();
        assert_eq!(max, vec![p(1, -2)]);
        // chain 21* < 21 < 1*2* < 12*
        let chain = [p(2, -1), p(2, 1), p(-1, -2), p(1, -2)];
        for w in chain.windows(2) {
            assert!(o.gale_leq(w[0], w[1]));
        }
    }

    #[test]
    fn reversal_is_an_involution_on_the_order_set() {
        for n in 1..=4 {
            let all = enumerate_admissible_orders(n);
            for o in &all {
                let r = o.reversed();
                assert!(all.contains(&r));
                assert_ne!(&r, o);
                assert_eq!(&r.reversed(), o);
                assert!(all_labels_once(n, o.listing()));
            }
        }
    }
}
