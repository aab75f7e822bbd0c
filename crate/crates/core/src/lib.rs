//! Abstract polytopes as properly edge-colored flag graphs.
//!
//! The crate represents pre-maniplexes, maniplexes and polytopes by their flag
//! graphs ([`Maniplex`]) and provides:
//!
//! - structural predicates: commutation, the path intersection property,
//!   `(i, j)`-flatness, facet and vertex bipartiteness;
//! - constructions: trivial and flat extensions `P|k`, extensions driven by a
//!   perfect 1-factorization of `K_k`, `r`-mixes and flat amalgamations;
//! - symmetry: automorphism groups, symmetry type graphs, regularity and the
//!   parity analysis of amalgamation automorphisms;
//! - the MPX and FAC text formats and DOT export.

pub mod builders;
pub mod constructions;
pub mod dot;
pub mod error;
pub mod factorization;
pub mod graph;
pub mod maniplex;
pub mod morphism;
pub mod mpx;
pub mod reproduce;
pub mod symmetry;

pub use constructions::{
    auto_factorization_extension, check_flat_extension_necessary, factorization_extension, flat_amalgamation,
    flat_extension, iterate_extension, mix, trivial_extension, Layered, LayeredFlag, Mix, MixFlag,
};
pub use error::{Error, Result};
pub use factorization::OneFactorization;
pub use graph::{chromatic_decision, ColoringOutcome, SimpleGraph};
pub use maniplex::{
    Bipartition, Color, ColorComponentLabeling, Face, FacetGraph, Flag, Maniplex, NonCommuting, OddCycle,
    PolytopeViolation, RootedManiplex,
};
pub use morphism::{covers, is_automorphism, is_isomorphic};
pub use mpx::{read_mpx, write_mpx};
pub use symmetry::{
    amalgam_group_check, automorphism_group, automorphism_parity, is_hereditary_extension, is_regular,
    symmetry_type_graph, AmalgamGroupReport, Automorphism, AutomorphismGroup, Dart, Parity, SymmetryTypeGraph,
};
