//! Combinatorial kernel for triangulations of a product of two simplices.
//!
//! A triangulation of the product of an `(n-1)`-simplex and a `(d-1)`-simplex
//! is encoded as a set of spanning trees of the complete bipartite graph
//! `K_{n,d}`, one per right degree vector. Refining those tree-types yields a
//! generic tropical oriented matroid; scanning its minors for central topes
//! yields a matching ensemble; and the ensemble determines the triangulation
//! back. This crate implements all three layers together with the checkable
//! axioms and exhaustive desk-scale enumeration used to verify them.
//!
//! Both parameters are capped at 16 so every coordinate subset fits in one
//! machine word; everything here is meant for exhaustive runs at small sizes,
//! not asymptotics.

pub mod compat;
pub mod ensemble;
pub mod lattice;
pub mod set;
pub mod tom;
pub mod triangulation;
pub mod types;

pub use compat::{compatible, compatible_digraph, find_cycle, CycleWitness};
pub use ensemble::{
    central_tope, extract, order_from_pairs, reconstruct, staircase, validate_ensemble,
    validate_field, Matching, MatchingEnsemble, MatchingField,
};
pub use lattice::{lattice_points, LatticePoint};
pub use set::SmallSet;
pub use tom::{is_type_of, Semitype, Tom};
pub use triangulation::{
    base_topes, count_triangulations, enumerate_triangulations, spanning_trees, tope_toward,
    topes_of, validate_triangulation, Budget, Triangulation,
};
pub use types::{Params, Tope, Type};
