//! Rank-2 symmetric (`S_2n`) and symplectic (`BC_n`) matroids.

mod lifting;
mod orbit;
mod partition;
mod symmetric;
mod symplectic;

pub use lifting::{
    is_representable, liftings, max_lifting, symplectic_projection, Lifting, Representability,
    Trichotomy,
};
pub use orbit::{canonical_form, orbits, symplectic_orbits, Group, Orbit};
pub use partition::{canonical_matroid, enumerate_partition_types, partition_type, PartitionType};
pub use symmetric::{enumerate_symmetric, Move, SymmetricMatroid};
pub use symplectic::{enumerate_symplectic, is_symplectic_matroid, SymplecticMatroid, EXHAUSTIVE_MAX_N};
