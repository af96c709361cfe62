//! `S_2n` acting on positions and its hyperoctahedral subgroup `BC_n`.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::ground::{AdmissiblePair, Label, Pair};

/// A permutation of the positions `[2n]`, acting on labels through `p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    n: usize,
    /// `images[k]` is the image of position `k + 1`, zero-based.
    images: Vec<usize>,
}

impl Permutation {
    /// `images[k]` is the (1-based) image of position `k + 1`.
    pub fn new(n: usize, images: &[usize]) -> Result<Self> {
        let m = 2 * n;
        if images.len() != m {
            return Err(Error::NotSignedPermutation(format!(
                "expected {m} images, got {}",
                images.len()
            )));
        }
        let mut seen = vec![false; m];
        for &p in images {
            if p == 0 || p > m || std::mem::replace(&mut seen[p - 1], true) {
                return Err(Error::NotSignedPermutation(format!(
                    "{images:?} is not a bijection of [{m}]"
                )));
            }
        }
        Ok(Permutation {
            n,
            images: images.iter().map(|p| p - 1).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            n,
            images: (0..2 * n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn apply(&self, label: Label) -> Label {
        let p = self.images[label.position(self.n) - 1] + 1;
        Label::from_position(p, self.n).expect("image lies in [2n]")
    }

    pub fn apply_pair(&self, pair: Pair) -> Pair {
        Pair::new(self.apply(pair.lo()), self.apply(pair.hi())).expect("bijection keeps labels distinct")
    }

    /// `τ(i*) = τ(i)*` for every label.
    pub fn is_signed(&self) -> bool {
        crate::ground::labels(self.n).all(|l| self.apply(l.star()) == self.apply(l).star())
    }
}

/// An element of `BC_n ⊂ S_2n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation(Permutation);

impl SignedPermutation {
    pub fn new(perm: Permutation) -> Result<Self> {
        if perm.is_signed() {
            Ok(SignedPermutation(perm))
        } else {
            Err(Error::NotSignedPermutation(format!(
                "{:?} does not commute with the star involution",
                perm.images
            )))
        }
    }

    /// Builds `τ` from the signed images of `1, …, n`; the images of the
    /// starred labels follow from `τ(i*) = τ(i)*`.
    pub fn from_signed_images(n: usize, images: &[i64]) -> Result<Self> {
        if images.len() != n {
            return Err(Error::NotSignedPermutation(format!(
                "expected {n} images, got {}",
                images.len()
            )));
        }
        let mut positions = vec![0; 2 * n];
        for (k, &v) in images.iter().enumerate() {
            let img = Label::new(v, n)?;
            let i = Label::plain(k + 1);
            positions[i.position(n) - 1] = img.position(n);
            positions[i.star().position(n) - 1] = img.star().position(n);
        }
        Self::new(Permutation::new(n, &positions)?)
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation(Permutation::identity(n))
    }

    pub fn permutation(&self) -> &Permutation {
        &self.0
    }

    pub fn apply(&self, label: Label) -> Label {
        self.0.apply(label)
    }

    /// Admissibility is preserved: `τ(j) = τ(i)*` would force `j = i*`.
    pub fn apply_pair(&self, pair: AdmissiblePair) -> AdmissiblePair {
        AdmissiblePair::try_from(self.0.apply_pair(pair.pair())).expect("BC_n preserves J_n²")
    }
}

/// Applies `τ` to an admissible pair, rejecting `τ ∉ BC_n`.
pub fn apply_signed_perm(tau: &Permutation, pair: AdmissiblePair) -> Result<AdmissiblePair> {
    Ok(SignedPermutation::new(tau.clone())?.apply_pair(pair))
}

/// All `2^n · n!` elements of `BC_n`, sorted.
pub fn hyperoctahedral_group(n: usize) -> Vec<SignedPermutation> {
    let mut out = Vec::new();
    for perm in (1..=n).permutations(n) {
        for signs in 0u32..(1 << n) {
            let images: Vec<i64> = perm
                .iter()
                .enumerate()
                .map(|(k, &i)| if signs >> k & 1 == 1 { -(i as i64) } else { i as i64 })
                .collect();
            out.push(SignedPermutation::from_signed_images(n, &images).expect("valid by construction"));
        }
    }
    out.sort();
    out
}

/// All `(2n)!` elements of `S_2n`, sorted.
pub fn symmetric_group(n: usize) -> Vec<Permutation> {
    (1..=2 * n)
        .permutations(2 * n)
        .map(|images| Permutation::new(n, &images).expect("valid by construction"))
        .collect()
}
