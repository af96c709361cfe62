//! Stabilizers, cell dimensions, Schubert varieties and the classification of
//! torus-invariant subvarieties of `SpG(2,2n)`.
//!
//! Dimensions are complex dimensions. A stabilizer dimension counts the whole
//! torus, so a fixed point has stabilizer equal to the torus.

mod cells;
mod classify;
mod schubert;
mod stabilizer;

pub use cells::{cell_dims, formula_dims, stratum_dim, CellDims, FormulaCase, FormulaDims};
pub use classify::{
    check_classifiable, classify, invariant_types_n2, stratum_class, stratum_report,
    HomologyClass, InvariantType, StratumReport,
};
pub use schubert::{
    betti_by_lefschetz, betti_by_schubert_cells, betti_numbers, fixed_points,
    grassmannian_betti, schubert_dim, sp_schubert, symplectic_grassmannian_dim,
    SchubertVariety,
};
pub use stabilizer::{base_weight, relation_lattice, stabilizer, StabilizerReport, Torus};
