//! Exact computations for toric contact manifolds.
//!
//! A toric diagram `D` (a rational simplicial polytope with unimodular
//! facets) encodes a Q-Gorenstein toric contact manifold. This crate computes,
//! with exact integer and rational arithmetic only:
//!
//! * the Ehrhart quasi-polynomial and δ-vector of `D` ([`ehrhart`]);
//! * contact Betti numbers, both from the δ-vector and by enumerating closed
//!   Reeb orbits with their Conley–Zehnder indices ([`contact`]);
//! * orbifold cohomology of crepant toric resolutions of the symplectic cone
//!   and the contact homology it predicts ([`resolution`]);
//! * orbifold cohomology of the base of a Reeb quotient and the contact
//!   homology of prequantizations ([`prequant`]).
//!
//! The lattice and polytope layers ([`exactlat`], [`polytope`]) are general
//! purpose. The [`cli`] module backs the `toric-contact` binary, and
//! [`corpus`] ships the standard example documents.
//!
//! Runnable walkthroughs live in the crate's `examples/` directory:
//!
//! | example | capability |
//! |---|---|
//! | `lattice_normal_forms` | Hermite/Smith forms, basis completion, jets |
//! | `ehrhart_delta` | quasi-polynomial, δ-vector, reciprocity |
//! | `reflexive_polygons` | brute-force enumeration and Hibi palindromicity |
//! | `reeb_orbits` | Conley–Zehnder indices of Reeb orbit families |
//! | `contact_betti` | contact Betti numbers from both pipelines |
//! | `crepant_resolution` | triangulations, fans, box elements, support functions |
//! | `prequantization` | labelled polytopes, Reeb quotients, twisted sectors |
//! | `cross_validation` | every applicable pipeline on every corpus document |

pub mod cli;
pub mod contact;
pub mod corpus;
pub mod document;
pub mod ehrhart;
pub mod exactlat;
pub mod format;
pub mod graded;
pub mod poly;
pub mod polytope;
pub mod prequant;
pub mod resolution;

pub use graded::{GradedDimension, Window};
