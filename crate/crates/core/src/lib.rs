//! Exceptional-curve combinatorics of threefold flops.
//!
//! The library models the dual graph of a resolved rational double point as
//! a configuration of (-2)-curves, computes fundamental cycles by
//! saturation (with an independent exhaustive oracle and closed-form
//! cross-checks), marks the strict transform of a contracted curve to read
//! off the length invariant, decomposes the diagram into the sub-diagrams
//! of the partial resolution, and reproduces, step by combinatorial step,
//! the classification of the marked diagram by its length:
//!
//! | length | 1  | 2  | 3  | 4  | 5  | 6  |
//! |--------|----|----|----|----|----|----|
//! | type   | A1 | D4 | E6 | E7 | E8 | E8 |
//!
//! Every value is an exact integer; every operation is a pure function of
//! immutable inputs and safe to call from multiple threads.

pub mod classify;
pub mod cycle;
pub mod diagram;
pub mod error;
pub mod flop;
pub mod fundcycle;
pub mod matrix;
pub mod verify;

pub use classify::{
    ClassificationReport, FactCheck, InferenceRule, RuleApplication, RuleKind, classify,
    theorem_type, verify_proof_facts, verify_uniqueness,
};
pub use cycle::Cycle;
pub use diagram::{
    AdeType, CurveConfiguration, Family, Vertex, ade_types_up_to, build_ade, classify_tree,
    delete_vertex, describe_vertex,
};
pub use error::Error;
pub use flop::{
    MarkedDiagram, PartialResolution, ResolutionComponent, SectionData, attachment_points,
    d_multiplicity, end_component_multiplicities, enumerate_marked, mark, partial_resolution,
    vertex_orbits,
};
pub use fundcycle::{
    ComputationTrace, TraceStep, ade_fundamental_cycle, brute_force_fundamental_cycle,
    fundamental_cycle_closed_form, laufer_fundamental_cycle,
};
pub use matrix::{intersection_matrix, is_negative_definite};
pub use verify::{VerificationReport, run_verification, run_verification_with_cycles};
