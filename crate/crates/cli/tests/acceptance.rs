//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line. Run with `cargo test -p floplen-cli --test acceptance
//! -- --nocapture` to see the lines for passing criteria too.

use std::collections::BTreeMap;
use std::process::Command;
use std::time::{Duration, Instant};

use floplen::{
    AdeType, Cycle, Family, Vertex, ade_fundamental_cycle, ade_types_up_to, attachment_points,
    brute_force_fundamental_cycle, build_ade, classify, enumerate_marked,
    fundamental_cycle_closed_form, laufer_fundamental_cycle, mark, partial_resolution,
    run_verification_with_cycles, verify_uniqueness,
};
use floplen_cli::verification_exit;

fn conclude(number: u32, name: &str, failures: Vec<String>) {
    let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("acceptance {number} ({name}): {verdict}");
    assert!(failures.is_empty(), "criterion {number} ({name}): {failures:#?}");
}

fn ade(s: &str) -> AdeType {
    s.parse().unwrap()
}

#[test]
fn acceptance_1_theorem_table() {
    // classify 1..6 through the CLI reproduces [A1, D4, E6, E7, E8, E8]
    // with exit code 0, in under 5 seconds total at max rank 12.
    let expected = ["A1", "D4", "E6", "E7", "E8", "E8"];
    let mut failures = Vec::new();
    let started = Instant::now();
    for (length, name) in (1..=6).zip(expected) {
        let output = Command::new(env!("CARGO_BIN_EXE_floplen"))
            .args([
                "classify",
                &length.to_string(),
                "--max-rank",
                "12",
                "--format",
                "json",
            ])
            .output()
            .expect("binary runs");
        if output.status.code() != Some(0) {
            failures.push(format!("length {length}: exit {:?}", output.status.code()));
            continue;
        }
        let value: serde_json::Value =
            serde_json::from_slice(&output.stdout).expect("JSON output");
        if value["survivor"]["type"] != name {
            failures.push(format!(
                "length {length}: survivor {} instead of {name}",
                value["survivor"]["type"]
            ));
        }
        if value["verified"] != true {
            failures.push(format!("length {length}: not verified"));
        }
    }
    let elapsed = started.elapsed();
    if elapsed >= Duration::from_secs(5) {
        failures.push(format!("six classify runs took {elapsed:?}, expected < 5 s"));
    }
    conclude(1, "theorem table", failures);
}

#[test]
fn acceptance_2_uniqueness_remark() {
    // Exactly one vertex of multiplicity equal to the length on each
    // survivor.
    let mut failures = Vec::new();
    for length in 1..=6 {
        let report = classify(length, 12).expect("valid arguments");
        if !verify_uniqueness(&report) {
            failures.push(format!("length {length}: uniqueness remark fails"));
            continue;
        }
        let survivor = report.survivor().expect("unique survivor");
        let count = survivor
            .config()
            .vertices()
            .iter()
            .filter(|&&v| survivor.fundamental_cycle().coefficient(v) == length)
            .count();
        if count != 1 {
            failures.push(format!(
                "length {length}: {count} vertices of multiplicity {length}"
            ));
        }
    }
    conclude(2, "uniqueness remark", failures);
}

#[test]
fn acceptance_3_oracle_equivalence() {
    // Saturation = exhaustive oracle (bound 6) for every type of rank at
    // most 8; saturation = closed form for every rank at most 20; under
    // 60 seconds in total.
    let mut failures = Vec::new();
    let started = Instant::now();
    for t in ade_types_up_to(8) {
        let config = build_ade(t);
        let fast = laufer_fundamental_cycle(&config).expect("ADE input").result;
        match brute_force_fundamental_cycle(&config, 6) {
            Ok(oracle) => {
                if fast != oracle {
                    failures.push(format!("{t}: saturation disagrees with the oracle"));
                }
            }
            Err(e) => failures.push(format!("{t}: oracle failed: {e}")),
        }
    }
    for t in ade_types_up_to(20) {
        if ade_fundamental_cycle(t) != fundamental_cycle_closed_form(t) {
            failures.push(format!("{t}: saturation disagrees with the closed form"));
        }
    }
    let elapsed = started.elapsed();
    if elapsed >= Duration::from_secs(60) {
        failures.push(format!("oracle comparison took {elapsed:?}, expected < 60 s"));
    }
    conclude(3, "oracle equivalence", failures);
}

#[test]
fn acceptance_4_d_bound() {
    // Every marking of length 1 or 2 (all families, every vertex, rank up
    // to 12) has every d_i at most 3, and the two quoted d values at
    // length 3 are exactly 3.
    let mut failures = Vec::new();
    for t in ade_types_up_to(12) {
        let config = build_ade(t);
        let cycle = ade_fundamental_cycle(t);
        for &v in config.vertices() {
            if cycle.coefficient(v) > 2 {
                continue;
            }
            let marked = mark(t, v).expect("vertex in range");
            let resolution = partial_resolution(&marked);
            for index in 0..resolution.components.len() {
                let d = resolution.d_multiplicity(index).expect("index in range");
                if d > 3 {
                    failures.push(format!("{t} marked at {v}: d = {d} > 3"));
                }
            }
        }
    }
    for (type_name, k0, component_name) in [("E7", 2, "A5"), ("E8", 6, "E6")] {
        let marked = mark(ade(type_name), Vertex(k0)).expect("valid vertex");
        let resolution = partial_resolution(&marked);
        let index = resolution
            .components
            .iter()
            .position(|c| c.ade_type == ade(component_name))
            .expect("component present");
        let d = resolution.d_multiplicity(index).expect("index in range");
        if d != 3 {
            failures.push(format!(
                "({type_name}, {k0}): d over {component_name} is {d}, expected 3"
            ));
        }
    }
    conclude(4, "d_i bound", failures);
}

#[test]
fn acceptance_5_case_splits() {
    // The six partial-resolution splits and the two quoted end
    // multiplicity sets.
    let mut failures = Vec::new();
    let split_cases: &[(&str, u32, &[&str])] = &[
        ("E7", 2, &["A1", "A5"]),
        ("E7", 4, &["A2", "A4"]),
        ("E8", 6, &["A1", "E6"]),
        ("E8", 8, &["A7"]),
        ("E8", 5, &["A2", "D5"]),
        ("E8", 2, &["A1", "A6"]),
    ];
    for &(type_name, k0, expected) in split_cases {
        let marked = mark(ade(type_name), Vertex(k0)).expect("valid vertex");
        let resolution = partial_resolution(&marked);
        let mut types: Vec<AdeType> = resolution.components.iter().map(|c| c.ade_type).collect();
        types.sort();
        let expected: Vec<AdeType> = expected.iter().map(|s| ade(s)).collect();
        if types != expected {
            failures.push(format!(
                "({type_name}, {k0}): split {types:?}, expected {expected:?}"
            ));
        }
    }
    let end_cases: &[(&str, u32, &str, &[i64])] = &[
        ("E7", 4, "A4", &[2, 2]),
        ("E8", 2, "A6", &[2, 3]),
    ];
    for &(type_name, k0, component_name, expected) in end_cases {
        let marked = mark(ade(type_name), Vertex(k0)).expect("valid vertex");
        let resolution = partial_resolution(&marked);
        let index = resolution
            .components
            .iter()
            .position(|c| c.ade_type == ade(component_name))
            .expect("component present");
        let mut ends: Vec<i64> = resolution
            .end_component_multiplicities(index)
            .expect("A-family component")
            .iter()
            .map(|&(_, m)| m)
            .collect();
        ends.sort_unstable();
        if ends != expected {
            failures.push(format!(
                "({type_name}, {k0}): end multiplicities {ends:?}, expected {expected:?}"
            ));
        }
    }
    conclude(5, "case splits", failures);
}

#[test]
fn acceptance_6_structural_invariants() {
    // For every type of rank at most 20: F.F = -2, the anti-nef
    // certificate, attachment multiplicity 2 for D/E, and two
    // multiplicity-1 chain ends for A.
    let mut failures = Vec::new();
    for t in ade_types_up_to(20) {
        let config = build_ade(t);
        let f = ade_fundamental_cycle(t);
        if f.pairing(&f).expect("same configuration") != -2 {
            failures.push(format!("{t}: F.F != -2"));
        }
        if !f.is_anti_nef() {
            failures.push(format!("{t}: F is not anti-nef"));
        }
        let section = attachment_points(&config).expect("ADE input");
        match t.family() {
            Family::A => {
                let expected = if t.rank() == 1 {
                    vec![(Vertex(1), 2)]
                } else {
                    vec![(Vertex(1), 1), (Vertex(t.rank()), 1)]
                };
                if section.attach_points != expected || section.branch_count != 2 {
                    failures.push(format!("{t}: attachment {:?}", section.attach_points));
                }
                if t.rank() > 1 {
                    for &(v, _) in &section.attach_points {
                        if f.coefficient(v) != 1 {
                            failures.push(format!("{t}: end multiplicity != 1 at {v}"));
                        }
                    }
                }
            }
            Family::D | Family::E => {
                if section.attach_points.len() != 1 || section.branch_count != 1 {
                    failures.push(format!("{t}: attachment {:?}", section.attach_points));
                } else {
                    let (v, count) = section.attach_points[0];
                    if count != 1 || f.coefficient(v) != 2 {
                        failures.push(format!("{t}: attachment vertex {v} has multiplicity {}", f.coefficient(v)));
                    }
                }
            }
        }
    }
    conclude(6, "structural invariants", failures);
}

#[test]
fn acceptance_7_negative_control() {
    // A perturbed E8 fundamental cycle must fail verification, the failed
    // facts must name E8, and the exit code mapping must report 1. The
    // unperturbed suite stays green with exit 0.
    let mut failures = Vec::new();
    let e8 = ade("E8");
    let good = ade_fundamental_cycle(e8);
    let perturbed = Cycle::from_fn(good.config(), |v| {
        good.coefficient(v) + i64::from(v == Vertex(5))
    })
    .expect("nonnegative coefficients");
    let overrides = BTreeMap::from([(e8, perturbed)]);
    let faulty = run_verification_with_cycles(12, &overrides).expect("valid rank");
    if faulty.passed() {
        failures.push("perturbed cycle passed verification".to_string());
    }
    if verification_exit(&faulty) != 1 {
        failures.push(format!("exit code {} instead of 1", verification_exit(&faulty)));
    }
    let named = faulty
        .failures()
        .iter()
        .all(|f| f.name.contains("E8") || f.computed.contains("E8"));
    if faulty.failures().is_empty() || !named {
        failures.push(format!("failed facts do not name E8: {:?}", faulty.failures()));
    }

    let clean = floplen::run_verification(12).expect("valid rank");
    if !clean.passed() || verification_exit(&clean) != 0 {
        failures.push("unperturbed verification did not pass with exit 0".to_string());
    }
    conclude(7, "negative control", failures);
}

#[test]
fn enumeration_is_rank_stable() {
    // Supporting check used by criterion 1: widening the rank window
    // changes no survivor.
    let mut failures = Vec::new();
    for length in 1..=6 {
        let narrow = classify(length, 8).expect("valid arguments");
        let wide = classify(length, 20).expect("valid arguments");
        let label = |report: &floplen::ClassificationReport| {
            report
                .survivor()
                .map(|s| format!("{}@{}", s.ade_type(), s.marked_vertex()))
        };
        if label(&narrow) != label(&wide) {
            failures.push(format!("length {length}: survivor changed with rank"));
        }
        if length >= 3 && enumerate_marked(length, 20).expect("valid").len()
            != enumerate_marked(length, 8).expect("valid").len()
        {
            failures.push(format!("length {length}: candidate count changed with rank"));
        }
    }
    conclude(0, "rank stability", failures);
}
