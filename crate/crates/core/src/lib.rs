//! Exact computations on matroids given by their bases: lattices of flats,
//! nested set complexes, Bergman complexes as posets of loopless matroid
//! types, and the direct-sum decomposition of each face's matroid type.

pub mod complexes;
pub mod decomposition;
pub mod error;
pub mod io;
pub mod lattice;
pub mod linalg;
pub mod matroid;
pub mod subset;
pub mod union_find;

pub use complexes::{
    bergman_complex, cone_dimension, face_vertex_set_check, flacets, has_full_omega_rank,
    matroid_type_from_flats, matroid_type_oracle, refinement_audit, AuditReport, BergmanComplex,
    BergmanFace, FaceCheck, FaceRejection, MatroidType, WeightVector,
};
pub use decomposition::{
    coarseness_all, coarseness_chain, decompose_face, partition_from_vertices, verify_finest,
    BlockPartition, CoarsenessReport, Decomposition, Summand,
};
pub use error::{Error, Result};
pub use lattice::{lattice_of_flats, BuildingSet, FlatLattice, SimplicialComplex};
pub use matroid::{direct_sum, direct_sum_on, Matroid, MinorSpec};
pub use subset::GroundSubset;
