use std::fmt;

use thiserror::Error;

use crate::diagram::{AdeType, Family, Vertex};

/// Why a configuration failed ADE recognition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotAdeReason {
    Empty,
    NotConnected,
    NotATree,
    DegreeTooHigh { vertex: Vertex, degree: usize },
    MultipleTrivalent { first: Vertex, second: Vertex },
    /// Sorted arm vertex-counts around the unique trivalent vertex.
    ArmProfile { arms: Vec<usize> },
}

impl fmt::Display for NotAdeReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotAdeReason::Empty => write!(f, "configuration has no vertices"),
            NotAdeReason::NotConnected => write!(f, "configuration is not connected"),
            NotAdeReason::NotATree => write!(f, "configuration contains a cycle"),
            NotAdeReason::DegreeTooHigh { vertex, degree } => {
                write!(f, "vertex {vertex} has degree {degree} > 3")
            }
            NotAdeReason::MultipleTrivalent { first, second } => {
                write!(f, "more than one trivalent vertex ({first} and {second})")
            }
            NotAdeReason::ArmProfile { arms } => {
                write!(f, "trivalent vertex with arm profile {arms:?} is not ADE")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}: {constraint}")]
    InvalidRank {
        family: Family,
        rank: u32,
        constraint: &'static str,
    },
    #[error("cannot parse {input:?} as an ADE type (expected A<n>, D<n> or E<n>)")]
    ParseType { input: String },
    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),
    #[error("edge at vertex {0} is a loop")]
    LoopEdge(Vertex),
    #[error("not an ADE configuration: {0}")]
    NotAde(NotAdeReason),
    #[error("cycles live on different configurations")]
    MismatchedConfigurations,
    #[error("coefficient {value} at vertex {vertex} is negative")]
    NegativeCoefficient { vertex: Vertex, value: i64 },
    #[error("cycle must assign a coefficient to exactly the vertices of its configuration")]
    CoefficientDomain,
    #[error("configuration is not connected")]
    NotConnected,
    #[error("intersection form is not negative definite")]
    NotNegativeDefinite,
    #[error("internal error: saturation did not converge within {cap} steps")]
    IterationCapExceeded { cap: usize },
    #[error("bound too small: no anti-nef cycle with coefficients in [1, {bound}]")]
    OracleBoundTooSmall { bound: i64 },
    #[error("not a fundamental-cycle situation: anti-nef cycles have no unique minimal element")]
    OracleAmbiguous,
    #[error("component index {index} out of range (0..{count})")]
    ComponentIndex { index: usize, count: usize },
    #[error("component {index} has type {ade_type}, not an A-family chain")]
    NotAChainComponent { index: usize, ade_type: AdeType },
    #[error("length {0} is outside 1..=6")]
    InvalidLength(i64),
    #[error("length must be a positive integer, got {0}")]
    NonPositiveLength(i64),
    #[error("max rank {0} is too small: must be at least 8 to cover the E family")]
    MaxRankTooSmall(u32),
}
