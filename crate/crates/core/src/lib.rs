//! Candidate-graph search and constraint analysis for multitime Landau-Zener
//! (MTLZ) models.
//!
//! The crate walks the same pipeline for every graph: structural queries on
//! [`graph::Graph`], the necessary candidate rules in [`rules`], seeded
//! exhaustive enumeration in [`search`], orientation and r-factor analysis in
//! [`orientation`], the multipath magnitude system in [`gamma`], and direct
//! checks of explicit MTLZ data in [`verifier`].

pub mod graph;
pub mod families;
pub mod rules;
pub mod search;
pub mod orientation;
pub mod gamma;
pub mod verifier;
pub mod report;
