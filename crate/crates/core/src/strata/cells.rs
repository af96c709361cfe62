//! Dimensions of symplectic thin Schubert cells and their torus quotients.

use std::fmt;

use crate::error::{Error, Result};
use crate::matroid::{max_lifting, SymmetricMatroid, SymplecticMatroid};
use crate::polytope::symplectic_polytope;

/// Which branch of the closed-form dimension count applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormulaCase {
    /// `ℓ = 2`: `0 + 0`.
    TwoBags,
    /// `ℓ > 2`, degree `0`: `(w − 1) + (ℓ − 3)`.
    DegreeZero,
    /// `ℓ > 2`, degree `≥ 2`: `(w − deg) + (ℓ + deg − 5)`.
    DegreeAtLeastTwo,
}

impl fmt::Display for FormulaCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormulaCase::TwoBags => "two-bags",
            FormulaCase::DegreeZero => "degree-zero",
            FormulaCase::DegreeAtLeastTwo => "degree-at-least-two",
        })
    }
}

/// The closed form, split as `fiber + base`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FormulaDims {
    pub case: FormulaCase,
    pub fiber: i64,
    pub base: i64,
}

impl FormulaDims {
    pub fn total(&self) -> i64 {
        self.fiber + self.base
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CellDims {
    pub formula: FormulaDims,
    /// `dim G_M − [deg ≥ 2]` with `dim G_M = w + ℓ − 4`.
    pub total: i64,
    /// Affine dimension of the symplectic moment polytope.
    pub fiber: i64,
    pub quotient: i64,
    /// `formula.total() ≠ total`.
    pub flagged: bool,
}

pub fn formula_dims(m: &SymmetricMatroid) -> FormulaDims {
    let (w, l, d) = (m.weight() as i64, m.length() as i64, m.degree() as i64);
    if l == 2 {
        FormulaDims { case: FormulaCase::TwoBags, fiber: 0, base: 0 }
    } else if d == 0 {
        FormulaDims { case: FormulaCase::DegreeZero, fiber: w - 1, base: l - 3 }
    } else {
        FormulaDims { case: FormulaCase::DegreeAtLeastTwo, fiber: w - d, base: l + d - 5 }
    }
}

/// `dim G_M ∩ H` for a lifting of degree `0` or `≥ 2`.
pub fn stratum_dim(m: &SymmetricMatroid) -> i64 {
    let g = m.weight() as i64 + m.length() as i64 - 4;
    if m.degree() >= 2 {
        g - 1
    } else {
        g
    }
}

pub fn cell_dims(n: &SymplecticMatroid) -> Result<CellDims> {
    let m = max_lifting(n)?;
    let total = stratum_dim(&m);
    let fiber = symplectic_polytope(n).affine_dim().ok_or(Error::Empty)? as i64;
    let formula = formula_dims(&m);
    Ok(CellDims {
        formula,
        total,
        fiber,
        quotient: total - fiber,
        flagged: formula.total() != total,
    })
}
