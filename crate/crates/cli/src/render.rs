//! Plain-text tables. All output is byte-deterministic: every collection
//! is iterated in its stored (sorted) order.

use std::fmt::Write;

use floplen::classify::{ClassificationReport, FactCheck, candidate_label};
use floplen::flop::{MarkedDiagram, PartialResolution};
use floplen::fundcycle::ComputationTrace;
use floplen::verify::VerificationReport;
use floplen::{AdeType, CurveConfiguration, Cycle, describe_vertex};

pub fn diagram_table(
    t: AdeType,
    config: &CurveConfiguration,
    cycle: Option<&Cycle>,
    describe: bool,
) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "{t}: {} vertices, {} edges",
        config.vertex_count(),
        config.edge_count()
    )
    .unwrap();
    let header = match (cycle.is_some(), describe) {
        (true, true) => "vertex  self  neighbors      F  position",
        (true, false) => "vertex  self  neighbors      F",
        (false, true) => "vertex  self  neighbors      position",
        (false, false) => "vertex  self  neighbors",
    };
    writeln!(out, "{header}").unwrap();
    for &v in config.vertices() {
        let neighbors = config
            .neighbors(v)
            .iter()
            .map(|w| w.to_string())
            .collect::<Vec<_>>()
            .join(",");
        write!(
            out,
            "{:<6}  {:<4}  {:<13}",
            v.to_string(),
            config.self_intersection(v),
            neighbors
        )
        .unwrap();
        if let Some(cycle) = cycle {
            write!(out, "  {}", cycle.coefficient(v)).unwrap();
        }
        if describe {
            write!(out, "  {}", describe_vertex(t, v).expect("vertex in range")).unwrap();
        }
        writeln!(out).unwrap();
    }
    out
}

pub fn fundcycle_table(t: AdeType, trace: &ComputationTrace, with_trace: bool) -> String {
    let mut out = String::new();
    writeln!(out, "fundamental cycle of {t}: {}", trace.result).unwrap();
    writeln!(out, "max coefficient {}", trace.result.max_coefficient()).unwrap();
    if with_trace {
        writeln!(out, "trace (start: unit cycle at vertex {}):", trace.start).unwrap();
        if trace.steps.is_empty() {
            writeln!(out, "  already anti-nef, no steps").unwrap();
        } else {
            writeln!(out, "  step  vertex  pairing before").unwrap();
            for (i, step) in trace.steps.iter().enumerate() {
                writeln!(
                    out,
                    "  {:<4}  {:<6}  {}",
                    i + 1,
                    step.vertex.to_string(),
                    step.pairing_value
                )
                .unwrap();
            }
        }
    }
    out
}

pub fn mark_table(resolution: &PartialResolution, describe: bool) -> String {
    let marked = &resolution.parent;
    let mut out = String::new();
    writeln!(
        out,
        "{} marked at vertex {}: length {}",
        marked.ade_type(),
        marked.marked_vertex(),
        marked.length()
    )
    .unwrap();
    writeln!(out, "fundamental cycle: {}", marked.fundamental_cycle()).unwrap();
    let points = resolution
        .section
        .attach_points
        .iter()
        .map(|(v, count)| format!("vertex {v} (count {count})"))
        .collect::<Vec<_>>()
        .join(", ");
    writeln!(
        out,
        "attachments: {points}; residual branches: {}",
        resolution.section.branch_count
    )
    .unwrap();
    if resolution.components.is_empty() {
        writeln!(out, "components: none").unwrap();
    } else {
        writeln!(out, "components:").unwrap();
        let mut rows: Vec<[String; 8]> = Vec::new();
        for (index, component) in resolution.components.iter().enumerate() {
            let join = |items: Vec<String>| {
                if items.is_empty() {
                    "-".to_string()
                } else {
                    items.join(",")
                }
            };
            rows.push([
                (index + 1).to_string(),
                component.ade_type.to_string(),
                join(component.config.vertices().iter().map(|v| v.to_string()).collect()),
                component.fundamental_cycle.to_string(),
                join(component.marked_neighbors.iter().map(|v| v.to_string()).collect()),
                join(
                    component
                        .attach_points
                        .iter()
                        .map(|(v, count)| format!("{v}:{count}"))
                        .collect(),
                ),
                resolution
                    .d_multiplicity(index)
                    .expect("index in range")
                    .to_string(),
                match resolution.end_component_multiplicities(index) {
                    Ok(ends) => join(ends.iter().map(|(v, m)| format!("{v}:{m}")).collect()),
                    Err(_) => "-".to_string(),
                },
            ]);
        }
        let header = ["#", "type", "vertices", "F_i", "adj(mark)", "attach", "d", "ends (mult in F)"];
        let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
        for row in &rows {
            for (width, cell) in widths.iter_mut().zip(row.iter()) {
                *width = (*width).max(cell.chars().count());
            }
        }
        let format_row = |cells: &[&str]| {
            let mut line = String::from(" ");
            for (cell, width) in cells.iter().zip(&widths) {
                line.push(' ');
                line.push_str(cell);
                line.extend(std::iter::repeat_n(' ', width - cell.chars().count() + 1));
            }
            line.trim_end().to_string()
        };
        writeln!(out, "{}", format_row(&header)).unwrap();
        for row in &rows {
            let cells: Vec<&str> = row.iter().map(String::as_str).collect();
            writeln!(out, "{}", format_row(&cells)).unwrap();
        }
    }
    if describe {
        writeln!(out, "legend:").unwrap();
        for &v in marked.config().vertices() {
            writeln!(
                out,
                "  vertex {v}: {}",
                describe_vertex(marked.ade_type(), v).expect("vertex in range")
            )
            .unwrap();
        }
    }
    out
}

pub fn enumerate_table(length: i64, max_rank: u32, found: &[MarkedDiagram]) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "{} marked diagram(s) of length {length} up to automorphism (rank ≤ {max_rank}):",
        found.len()
    )
    .unwrap();
    for marked in found {
        writeln!(
            out,
            "  {} marked at vertex {}",
            marked.ade_type(),
            marked.marked_vertex()
        )
        .unwrap();
    }
    out
}

fn fact_lines(out: &mut String, facts: &[FactCheck], indent: &str) {
    for fact in facts {
        let verdict = if fact.pass { "PASS" } else { "FAIL" };
        writeln!(
            out,
            "{indent}[{verdict}] {} — expected: {}; computed: {}",
            fact.name, fact.expected, fact.computed
        )
        .unwrap();
    }
}

pub fn classify_table(report: &ClassificationReport, max_rank: u32) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "classification at length {} (rank ≤ {max_rank})",
        report.length
    )
    .unwrap();
    writeln!(out, "expected type: {}", report.expected_type).unwrap();
    let candidates = report
        .candidates
        .iter()
        .map(candidate_label)
        .collect::<Vec<_>>()
        .join(", ");
    writeln!(out, "candidates ({}): {candidates}", report.candidates.len()).unwrap();
    for elimination in &report.eliminations {
        writeln!(out, "eliminated {}:", candidate_label(&elimination.candidate)).unwrap();
        for application in &elimination.rules {
            writeln!(
                out,
                "  - [{}] {}: {}",
                application.rule.kind, application.rule.id, application.detail
            )
            .unwrap();
            writeln!(out, "      quote: \"{}\"", application.rule.quote).unwrap();
        }
    }
    match report.survivor() {
        Some(survivor) => {
            writeln!(out, "survivor: {}", candidate_label(survivor)).unwrap();
        }
        None => {
            let survivors = report
                .survivors
                .iter()
                .map(candidate_label)
                .collect::<Vec<_>>()
                .join(", ");
            writeln!(out, "survivors ({}): {survivors}", report.survivors.len()).unwrap();
        }
    }
    writeln!(
        out,
        "uniqueness (one vertex of multiplicity {}): {}",
        report.length,
        if report.uniqueness_check { "yes" } else { "NO" }
    )
    .unwrap();
    writeln!(out, "facts:").unwrap();
    fact_lines(&mut out, &report.facts, "  ");
    writeln!(out, "rules in force:").unwrap();
    for rule in &report.rules_in_force {
        writeln!(out, "  [{}] {}: {}", rule.kind, rule.id, rule.statement).unwrap();
        writeln!(out, "      quote: \"{}\"", rule.quote).unwrap();
    }
    writeln!(
        out,
        "verdict: {}",
        if report.is_verified() { "VERIFIED" } else { "NOT VERIFIED" }
    )
    .unwrap();
    out
}

pub fn verify_table(report: &VerificationReport) -> String {
    let mut out = String::new();
    writeln!(out, "verification (rank ≤ {})", report.max_rank).unwrap();
    fact_lines(&mut out, &report.facts, "");
    let failed = report.facts.iter().filter(|f| !f.pass).count();
    writeln!(
        out,
        "{} facts, {} passed, {failed} failed",
        report.facts.len(),
        report.facts.len() - failed
    )
    .unwrap();
    writeln!(out, "verdict: {}", if report.passed() { "PASS" } else { "FAIL" }).unwrap();
    out
}
