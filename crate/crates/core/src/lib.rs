//! Cayley graphs of finite groups and their distance-balance structure.
//!
//! The pipeline is: build a [`FiniteGroup`], validate a connection set and
//! construct a [`CayleyGraph`], compute its [`DistanceMatrix`], then classify
//! every distance `l` up to the diameter with [`full_profile`].
//!
//! ```
//! use cayley_db::{all_pairs, full_profile, s1_generators, CayleyGraph, Mode, WitnessCap};
//!
//! let g = CayleyGraph::dihedral(6, &s1_generators(6, 2), Mode::Strict).unwrap();
//! let d = all_pairs(g.graph());
//! let profile = full_profile(&d, WitnessCap::default()).unwrap();
//! assert!(profile.highly_distance_balanced);
//! ```
//!
//! The [`verify`] module sweeps whole parameter families and [`explore`]
//! enumerates open dihedral families into censuses.

#![forbid(unsafe_code)]

pub mod balance;
pub mod cayley;
pub mod error;
pub mod explore;
pub mod graph;
pub mod group;
pub mod metric;
pub mod verify;

/// Version tag carried by every JSON document this crate writes.
pub const SCHEMA_VERSION: &str = "1.0";

pub use balance::{
    full_profile, is_ell_balanced, mostar_index, w_set_sizes, w_sets, BalanceProfile,
    GraphDescriptor, LevelVerdict, PairBalance, ProfileReport, WitnessCap,
};
pub use cayley::{
    build_cayley, dihedral_adjacency_oracle, s1_generators, s2_generators, shift_for,
    validate_generating_set, CayleyGraph, CubicFamily, GeneratingSet, Mode,
};
pub use error::{Error, Result};
pub use explore::{
    census, census_stream, enumerate_family, Census, CensusRow, Dedupe, Family, FamilySpec,
};
pub use graph::Graph;
pub use group::{
    conjugate_b, dihedral_inverse, dihedral_mul, parse_elements, parse_permutations,
    DihedralElement, FiniteGroup, GroupElement, Permutation,
};
pub use metric::{
    all_pairs, bfs_from, ensure_matrix_fits, DistanceMatrix, MAX_MATRIX_VERTICES, UNREACHABLE,
};
pub use verify::SweepReport;
