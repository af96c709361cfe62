//! Matroid input: inline signed pairs, a JSON file, or the full matroid.

use std::collections::BTreeSet;
use std::path::Path;

use serde::Deserialize;
use sympmat_core::{AdmissiblePair, Label, SymplecticMatroid};

use crate::Failure;

#[derive(Debug, Deserialize)]
pub struct MatroidFile {
    pub n: usize,
    pub bases: Vec<[i64; 2]>,
}

pub fn parse_pairs(json: &str) -> Result<Vec<[i64; 2]>, Failure> {
    serde_json::from_str(json).map_err(|e| Failure::Usage(format!("--bases must be a JSON list of pairs: {e}")))
}

pub fn read_file(path: &Path) -> Result<MatroidFile, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::Usage(format!("{} is not a matroid document: {e}", path.display())))
}

pub fn admissible_set(n: usize, pairs: &[[i64; 2]]) -> Result<BTreeSet<AdmissiblePair>, Failure> {
    pairs
        .iter()
        .map(|&[a, b]| {
            let a = Label::new(a, n)?;
            let b = Label::new(b, n)?;
            AdmissiblePair::new(a, b)
        })
        .collect::<Result<_, _>>()
        .map_err(Failure::domain)
}

pub fn symplectic(n: usize, pairs: &[[i64; 2]]) -> Result<SymplecticMatroid, Failure> {
    SymplecticMatroid::new(n, admissible_set(n, pairs)?).map_err(Failure::domain)
}
