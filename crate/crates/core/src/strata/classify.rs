//! Per-stratum reports and the `n = 2` table of torus-invariant subvarieties.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::ground::Pair;
use crate::matroid::{
    enumerate_symplectic, is_representable, symplectic_orbits, SymmetricMatroid,
    SymplecticMatroid, EXHAUSTIVE_MAX_N,
};
use crate::strata::{cell_dims, stabilizer, CellDims, StabilizerReport, Torus};

/// Homology classes of `T`-invariant subvarieties of `SpG(2,4)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HomologyClass {
    Point,
    Line,
    TwoLines,
    Hyperplane,
    TwoHyperplanes,
    Whole,
}

impl HomologyClass {
    /// Complex dimension of a cycle in this class.
    pub fn dim(self) -> usize {
        match self {
            HomologyClass::Point => 0,
            HomologyClass::Line | HomologyClass::TwoLines => 1,
            HomologyClass::Hyperplane | HomologyClass::TwoHyperplanes => 2,
            HomologyClass::Whole => 3,
        }
    }
}

impl fmt::Display for HomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HomologyClass::Point => "[*]",
            HomologyClass::Line => "[P1]",
            HomologyClass::TwoLines => "2[P1]",
            HomologyClass::Hyperplane => "[H]",
            HomologyClass::TwoHyperplanes => "2[H]",
            HomologyClass::Whole => "[SpG]",
        })
    }
}

/// Class of the closure of the stratum of `N` in `SpG(2,4)`.
pub fn stratum_class(n: &SymplecticMatroid) -> Option<HomologyClass> {
    if n.n() != 2 {
        return None;
    }
    let bases: Vec<_> = n.bases().iter().collect();
    Some(match bases.len() {
        1 => HomologyClass::Point,
        2 if bases[0].labels().iter().any(|&l| bases[1].contains(l)) => HomologyClass::Line,
        2 => HomologyClass::TwoLines,
        3 => HomologyClass::Hyperplane,
        _ => HomologyClass::Whole,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumReport {
    pub matroid: SymplecticMatroid,
    pub representable: bool,
    /// The lifting of degree `≥ 2` of largest degree, else the degree-0 one.
    pub max_lifting: SymmetricMatroid,
    /// More than one lifting attains the largest degree `≥ 2`.
    pub max_ambiguous: bool,
    pub degree: usize,
    pub weight: usize,
    pub length: usize,
    pub dims: CellDims,
    pub stabilizer_full: StabilizerReport,
    pub stabilizer: StabilizerReport,
    pub homology_class: Option<HomologyClass>,
    /// Index of the `BC_n`-orbit in the sorted orbit list.
    pub orbit_class: usize,
    pub orbit_representative: BTreeSet<Pair>,
}

pub fn stratum_report(n: &SymplecticMatroid, orbit: (usize, &BTreeSet<Pair>)) -> Result<StratumReport> {
    let rep = is_representable(n);
    let m = rep.witness_lifting.clone().ok_or(Error::NotRepresentable)?;
    Ok(StratumReport {
        matroid: n.clone(),
        representable: rep.representable,
        max_ambiguous: rep.max_is_ambiguous(),
        degree: m.degree(),
        weight: m.weight(),
        length: m.length(),
        dims: cell_dims(n)?,
        stabilizer_full: stabilizer(&m, Torus::Full),
        stabilizer: stabilizer(&m, Torus::Symplectic),
        homology_class: stratum_class(n),
        orbit_class: orbit.0,
        orbit_representative: orbit.1.clone(),
        max_lifting: m,
    })
}

/// One report per representable symplectic matroid on `E_n`, in enumeration order.
pub fn classify(n: usize) -> Result<Vec<StratumReport>> {
    let all = enumerate_symplectic(n)?;
    let orbits = symplectic_orbits(&all);
    let mut out = Vec::new();
    for m in &all {
        if !is_representable(m).representable {
            continue;
        }
        let (k, orbit) = orbits
            .iter()
            .enumerate()
            .find(|(_, o)| o.members.contains(m))
            .expect("orbits cover the enumeration");
        out.push(stratum_report(m, (k, &orbit.representative))?);
    }
    Ok(out)
}

/// A `T`-invariant irreducible subvariety of `SpG(2,4)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantType {
    pub stratum: SymplecticMatroid,
    /// The closure of a single closed orbit inside a stratum with a
    /// positive-dimensional quotient, rather than the whole stratum.
    pub closed_orbit: bool,
    pub class: HomologyClass,
    pub dim: i64,
}

/// The sixteen types: one per stratum, plus a closed-orbit closure for every
/// stratum whose quotient is positive-dimensional.
pub fn invariant_types_n2() -> Result<Vec<InvariantType>> {
    let mut out = Vec::new();
    for r in classify(2)? {
        let class = r.homology_class.expect("n = 2");
        out.push(InvariantType {
            stratum: r.matroid.clone(),
            closed_orbit: false,
            class,
            dim: r.dims.total,
        });
        if r.dims.quotient > 0 {
            out.push(InvariantType {
                stratum: r.matroid,
                closed_orbit: true,
                class: HomologyClass::TwoHyperplanes,
                dim: r.dims.fiber,
            });
        }
    }
    Ok(out)
}

/// Rejects `n` beyond the exhaustive range before any work is done.
pub fn check_classifiable(n: usize) -> Result<()> {
    if n > EXHAUSTIVE_MAX_N {
        Err(Error::TooLarge { n, max: EXHAUSTIVE_MAX_N })
    } else {
        Ok(())
    }
}
