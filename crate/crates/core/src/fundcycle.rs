//! Fundamental cycles: Laufer-style saturation, an independent exhaustive
//! oracle, and closed-form tables for the A and D families.
//!
//! The fundamental cycle of a connected negative-definite configuration is
//! the minimal positive cycle Z with `Z . C_v <= 0` for every curve. For
//! ADE diagrams it carries the highest-root multiplicities; the maximum
//! coefficient over all ADE diagrams is 6 (at the trivalent vertex of E8).

use std::collections::BTreeMap;

use crate::cycle::Cycle;
use crate::diagram::{AdeType, CurveConfiguration, Family, Vertex, build_ade};
use crate::error::Error;
use crate::matrix::is_negative_definite;

/// One saturation step: the vertex whose positive pairing triggered it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub vertex: Vertex,
    /// Value of `Z . C_v` immediately before `C_v` was added.
    pub pairing_value: i64,
}

/// Full record of a saturation run. Replaying `steps` from the unit cycle
/// at `start` reproduces `result`, and the result pairs nonpositively with
/// every curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComputationTrace {
    pub start: Vertex,
    pub steps: Vec<TraceStep>,
    pub result: Cycle,
}

/// Number of saturation steps allowed per vertex squared. Generous: the
/// coefficient sum of any ADE fundamental cycle is at most 29 (E8).
const CAP_FACTOR: usize = 10;

/// Compute the fundamental cycle by saturation.
///
/// Starts from the unit cycle at the smallest vertex identifier; while some
/// curve pairs positively, adds the smallest such vertex. The start and the
/// tie-break fix a deterministic trace, but the resulting cycle does not
/// depend on either choice.
pub fn laufer_fundamental_cycle(config: &CurveConfiguration) -> Result<ComputationTrace, Error> {
    let cap = CAP_FACTOR * config.vertex_count() * config.vertex_count();
    laufer_with_strategy(config, None, cap, |candidates| candidates[0])
}

/// Saturation with an explicit start vertex, step cap, and tie-breaking
/// strategy. `choose` receives the ascending list of positive-pairing
/// vertices and picks the one to add.
pub(crate) fn laufer_with_strategy(
    config: &CurveConfiguration,
    start: Option<Vertex>,
    cap: usize,
    mut choose: impl FnMut(&[Vertex]) -> Vertex,
) -> Result<ComputationTrace, Error> {
    if !config.is_connected() {
        return Err(Error::NotConnected);
    }
    if !is_negative_definite(config) {
        return Err(Error::NotNegativeDefinite);
    }
    let start = start.unwrap_or_else(|| config.vertices()[0]);
    let mut cycle = Cycle::unit(config, start)?;
    let mut steps = Vec::new();
    loop {
        let positive: Vec<Vertex> = config
            .vertices()
            .iter()
            .copied()
            .filter(|&v| cycle.pairing_with_unit(v).expect("own vertex") > 0)
            .collect();
        if positive.is_empty() {
            break;
        }
        let vertex = choose(&positive);
        let pairing_value = cycle.pairing_with_unit(vertex)?;
        cycle.bump(vertex);
        steps.push(TraceStep {
            vertex,
            pairing_value,
        });
        if steps.len() > cap {
            return Err(Error::IterationCapExceeded { cap });
        }
    }
    Ok(ComputationTrace {
        start,
        steps,
        result: cycle,
    })
}

/// Independent oracle: enumerate every positive cycle with coefficients in
/// `[1, bound]`, keep the anti-nef ones, and check that they have a unique
/// componentwise-minimal element (their meet), which is returned.
///
/// Rank 8 or less is recommended (the enumeration is `bound^rank`), and a
/// bound of at least 6 covers every ADE diagram.
pub fn brute_force_fundamental_cycle(
    config: &CurveConfiguration,
    bound: i64,
) -> Result<Cycle, Error> {
    let vertices = config.vertices();
    let n = vertices.len();
    if n == 0 || bound < 1 {
        return Err(Error::OracleBoundTooSmall { bound });
    }
    let neighbor_indices: Vec<Vec<usize>> = vertices
        .iter()
        .map(|&v| {
            config
                .neighbors(v)
                .iter()
                .map(|w| config.index_of(*w).expect("neighbor is a vertex"))
                .collect()
        })
        .collect();
    let weights: Vec<i64> = vertices.iter().map(|&v| config.self_intersection(v)).collect();
    let anti_nef = |z: &[i64]| {
        (0..n).all(|i| {
            let mut value = weights[i] * z[i];
            for &j in &neighbor_indices[i] {
                value += z[j];
            }
            value <= 0
        })
    };

    let mut meet: Option<Vec<i64>> = None;
    let mut current = vec![1i64; n];
    loop {
        if anti_nef(&current) {
            match &mut meet {
                None => meet = Some(current.clone()),
                Some(m) => {
                    for (mi, &ci) in m.iter_mut().zip(&current) {
                        *mi = (*mi).min(ci);
                    }
                }
            }
        }
        // Odometer over [1, bound]^n.
        let mut pos = 0;
        loop {
            if pos == n {
                let meet = meet.ok_or(Error::OracleBoundTooSmall { bound })?;
                // A unique minimal element exists exactly when the meet is
                // itself anti-nef (it is then the minimum of the set).
                if !anti_nef(&meet) {
                    return Err(Error::OracleAmbiguous);
                }
                let coefficients: BTreeMap<Vertex, i64> =
                    vertices.iter().copied().zip(meet).collect();
                return Cycle::new(config, coefficients);
            }
            if current[pos] < bound {
                current[pos] += 1;
                break;
            }
            current[pos] = 1;
            pos += 1;
        }
    }
}

/// Closed-form fundamental cycles, for ranks where the exhaustive oracle is
/// infeasible: all ones for `A(n)`; for `D(n)`, 1 at vertex 1 and both fork
/// leaves, 2 on the rest of the chain; stored vectors for E6, E7 and E8.
pub fn fundamental_cycle_closed_form(t: AdeType) -> Cycle {
    let config = build_ade(t);
    let n = t.rank();
    let coefficient = |v: Vertex| -> i64 {
        match t.family() {
            Family::A => 1,
            Family::D => {
                if v.0 == 1 || v.0 >= n - 1 {
                    1
                } else {
                    2
                }
            }
            Family::E => {
                let table: &[i64] = match n {
                    6 => &[1, 2, 3, 2, 1, 2],
                    7 => &[2, 3, 4, 3, 2, 1, 2],
                    _ => &[2, 4, 6, 5, 4, 3, 2, 3],
                };
                table[(v.0 - 1) as usize]
            }
        }
    };
    Cycle::from_fn(&config, coefficient).expect("closed-form coefficients are nonnegative")
}

/// Fundamental cycle of the canonical diagram for `t`.
pub fn ade_fundamental_cycle(t: AdeType) -> Cycle {
    laufer_fundamental_cycle(&build_ade(t))
        .expect("ADE diagrams are connected and negative definite")
        .result
}
