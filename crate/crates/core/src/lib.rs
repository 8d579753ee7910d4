//! Decorated JSJ graphs of graph manifolds: validation, invariants,
//! homeomorphism and profinite-isomorphism deciders, profinite genus
//! enumeration, and finite-quotient fingerprints of the fundamental group.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod census;
pub mod decider;
pub mod fixtures;
pub mod genus;
pub mod invariants;
pub mod kappa;
pub mod model;
pub mod presentation;
pub mod rational;
#[cfg(feature = "sample")]
pub mod sample;

pub use decider::{
    check_homeomorphic, check_profinite_iso, iso_candidates, DecideError, HomeoWitness, IsoCandidate,
    ProfiniteWitness, Verdict,
};
pub use genus::{construct_scaled, is_profinitely_rigid, profinite_genus, GenusResult, RigidityReason};
pub use invariants::{bipartition, fiber_flip, total_slope, twist_move, Bipartition, TwistTarget};
pub use kappa::{kappa_solutions, KappaConstraint};
pub use model::{
    mirror, validate, BaseOrbifold, ConePoint, Edge, EdgeEnd, EndSide, GluingMatrix, GraphManifold, RuleCode,
    SeifertPiece, ValidationReport, Violation,
};
pub use rational::Rational;
