//! Rank-2 symplectic Coxeter matroids made executable.
//!
//! * [`ground`], [`order`], [`group`]: the labels `E_n = [n] ∪ [n*]`, admissible
//!   orders with their Gale orders on `J_n²`, and the hyperoctahedral group.
//! * [`matroid`]: symmetric matroids as bags, symplectic matroids, orbits, the
//!   symplectic projection, liftings and the representability test.
//! * [`polytope`]: moment polytopes as exact lattice point sets.
//! * [`witness`]: exact rational Plücker witnesses and their certificates.
//! * [`strata`]: stabilizers, thin Schubert cell dimensions, Schubert varieties,
//!   Betti numbers and the `n = 2` classification of torus-invariant subvarieties.

pub mod error;
pub mod exact;
pub mod ground;
pub mod group;
pub mod matroid;
pub mod order;
pub mod polytope;
pub mod strata;
pub mod witness;

pub use error::{Error, Result};
pub use exact::Rational;
pub use ground::{admissible_pairs, is_admissible_set, AdmissiblePair, Label, Pair};
pub use group::{apply_signed_perm, hyperoctahedral_group, Permutation, SignedPermutation};
pub use matroid::{
    enumerate_symplectic, is_representable, is_symplectic_matroid, liftings,
    symplectic_projection, Representability, SymmetricMatroid, SymplecticMatroid, Trichotomy,
};
pub use order::{enumerate_admissible_orders, gale_leq, AdmissibleOrder};
pub use polytope::LatticePolytope;
pub use strata::{StabilizerReport, StratumReport, Torus};
pub use witness::{PluckerWitness, Verdict};
