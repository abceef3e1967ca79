//! The aggregated verification suite behind `verify`: the six
//! classification rows, the proof-fact table, oracle and closed-form
//! equivalence for the fundamental cycles, and the structural invariants
//! of the intersection pairing.

use std::collections::BTreeMap;

use crate::classify::{FactCheck, candidate_label, classify, verify_proof_facts, verify_uniqueness};
use crate::cycle::Cycle;
use crate::diagram::{AdeType, ade_types_up_to, build_ade};
use crate::error::Error;
use crate::flop::attachment_points;
use crate::fundcycle::{
    brute_force_fundamental_cycle, fundamental_cycle_closed_form, laufer_fundamental_cycle,
};

#[derive(Debug)]
pub struct VerificationReport {
    pub max_rank: u32,
    pub facts: Vec<FactCheck>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.facts.iter().all(|f| f.pass)
    }

    pub fn failures(&self) -> Vec<&FactCheck> {
        self.facts.iter().filter(|f| !f.pass).collect()
    }
}

/// Run every check at the given rank bound.
pub fn run_verification(max_rank: u32) -> Result<VerificationReport, Error> {
    run_verification_with_cycles(max_rank, &BTreeMap::new())
}

/// Same suite, with the fundamental cycle of selected types replaced by the
/// given ones. The cycle-level checks consume the substituted cycles, so an
/// injected perturbation must surface as failing facts naming the type;
/// production callers pass no overrides.
pub fn run_verification_with_cycles(
    max_rank: u32,
    overrides: &BTreeMap<AdeType, Cycle>,
) -> Result<VerificationReport, Error> {
    if max_rank < 8 {
        return Err(Error::MaxRankTooSmall(max_rank));
    }
    let cycle_for = |t: AdeType| -> Cycle {
        overrides.get(&t).cloned().unwrap_or_else(|| {
            laufer_fundamental_cycle(&build_ade(t))
                .expect("canonical diagrams are connected and negative definite")
                .result
        })
    };
    let mut facts = Vec::new();

    // Classification rows.
    for length in 1..=6 {
        let report = classify(length, max_rank)?;
        let expected = format!("survivor {}, verified, unique", report.expected_type);
        let computed = match report.survivor() {
            Some(survivor) => format!(
                "survivor {}{}{}",
                survivor.ade_type(),
                if report.is_verified() { ", verified" } else { ", NOT verified" },
                if verify_uniqueness(&report) { ", unique" } else { ", NOT unique" },
            ),
            None => format!(
                "{} survivors: {}",
                report.survivors.len(),
                report
                    .survivors
                    .iter()
                    .map(candidate_label)
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
        };
        facts.push(FactCheck::equals(
            format!("classification at length {length}"),
            expected,
            computed,
        ));
    }

    facts.extend(verify_proof_facts(max_rank));

    // Saturation agrees with the exhaustive oracle at every rank the
    // oracle can reach.
    {
        let mismatches: Vec<String> = ade_types_up_to(max_rank.min(8))
            .into_iter()
            .filter(|&t| {
                let oracle = brute_force_fundamental_cycle(&build_ade(t), 6)
                    .expect("bound 6 covers every ADE type");
                cycle_for(t) != oracle
            })
            .map(|t| t.to_string())
            .collect();
        facts.push(FactCheck::new(
            "fundamental cycle matches the exhaustive oracle (rank ≤ 8, bound 6)",
            "no mismatches",
            if mismatches.is_empty() {
                "no mismatches".to_string()
            } else {
                format!("mismatch at {}", mismatches.join(", "))
            },
            mismatches.is_empty(),
        ));
    }

    // Saturation agrees with the closed form on every rank in range.
    {
        let mismatches: Vec<String> = ade_types_up_to(max_rank)
            .into_iter()
            .filter(|&t| cycle_for(t) != fundamental_cycle_closed_form(t))
            .map(|t| t.to_string())
            .collect();
        facts.push(FactCheck::new(
            format!("fundamental cycle matches the closed form (rank ≤ {max_rank})"),
            "no mismatches",
            if mismatches.is_empty() {
                "no mismatches".to_string()
            } else {
                format!("mismatch at {}", mismatches.join(", "))
            },
            mismatches.is_empty(),
        ));
    }

    // F . F = -2 for every fundamental cycle.
    {
        let violations: Vec<String> = ade_types_up_to(max_rank)
            .into_iter()
            .filter_map(|t| {
                let f = cycle_for(t);
                let self_pairing = f.pairing(&f).expect("same configuration");
                (self_pairing != -2).then(|| format!("{t}: {self_pairing}"))
            })
            .collect();
        facts.push(FactCheck::new(
            format!("F . F = -2 for every type (rank ≤ {max_rank})"),
            "always -2",
            if violations.is_empty() {
                "always -2".to_string()
            } else {
                format!("violated at {}", violations.join("; "))
            },
            violations.is_empty(),
        ));
    }

    // Anti-nef certificate: F . C_v <= 0 everywhere, strictly negative
    // exactly at the attachment vertices.
    {
        let mut violation = None;
        'outer: for t in ade_types_up_to(max_rank) {
            let config = build_ade(t);
            let f = cycle_for(t);
            let section = attachment_points(&config).expect("canonical diagrams are ADE");
            for &v in config.vertices() {
                let pairing = match f.pairing_with_unit(v) {
                    Ok(p) => p,
                    Err(_) => {
                        violation = Some(format!("{t}: cycle domain mismatch"));
                        break 'outer;
                    }
                };
                if pairing > 0 {
                    violation = Some(format!("{t}: F . C_{v} = {pairing} > 0"));
                    break 'outer;
                }
                let is_attach = section.attach_points.iter().any(|&(w, _)| w == v);
                if (pairing < 0) != is_attach {
                    violation = Some(format!("{t}: strict negativity at {v} disagrees with the attachment set"));
                    break 'outer;
                }
            }
        }
        facts.push(FactCheck::new(
            format!("anti-nef certificate, strict exactly at attachments (rank ≤ {max_rank})"),
            "holds for every type",
            violation.clone().unwrap_or_else(|| "holds for every type".to_string()),
            violation.is_none(),
        ));
    }

    // Gluing identity: F . C_v plus the residual incidence at v vanishes.
    {
        let mut violation = None;
        'outer: for t in ade_types_up_to(max_rank) {
            let config = build_ade(t);
            let f = cycle_for(t);
            let section = attachment_points(&config).expect("canonical diagrams are ADE");
            for &v in config.vertices() {
                let incidence: i64 = section
                    .attach_points
                    .iter()
                    .filter(|&&(w, _)| w == v)
                    .map(|&(_, count)| count)
                    .sum();
                let Ok(pairing) = f.pairing_with_unit(v) else {
                    violation = Some(format!("{t}: cycle domain mismatch"));
                    break 'outer;
                };
                if pairing + incidence != 0 {
                    violation = Some(format!("{t}: (F + D') . C_{v} = {}", pairing + incidence));
                    break 'outer;
                }
            }
        }
        facts.push(FactCheck::new(
            format!("gluing identity (F + D') . C_v = 0 (rank ≤ {max_rank})"),
            "holds for every type",
            violation.clone().unwrap_or_else(|| "holds for every type".to_string()),
            violation.is_none(),
        ));
    }

    Ok(VerificationReport { max_rank, facts })
}
