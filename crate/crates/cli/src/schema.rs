//! The JSON schemas emitted by the CLI. These are the documented wire
//! formats; every structure round-trips through serde.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use floplen::classify::{ClassificationReport, FactCheck, InferenceRule, RuleApplication};
use floplen::flop::{MarkedDiagram, PartialResolution};
use floplen::fundcycle::ComputationTrace;
use floplen::verify::VerificationReport;
use floplen::{AdeType, CurveConfiguration, Cycle};

/// `{"family": "E", "rank": 8, "edges": [[1, 2], ...]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub family: String,
    pub rank: u32,
    pub edges: Vec<(u32, u32)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fundamental_cycle: Option<CycleJson>,
}

/// `{"coefficients": {"1": 2, ...}}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleJson {
    pub coefficients: BTreeMap<String, i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FundcycleJson {
    pub coefficients: BTreeMap<String, i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub start: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<TraceStepJson>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStepJson {
    pub vertex: u32,
    pub pairing: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AttachPointJson {
    pub vertex: u32,
    pub count: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AttachmentsJson {
    pub branch_count: i64,
    pub points: Vec<AttachPointJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentJson {
    /// 1-based, in smallest-identifier order.
    pub index: usize,
    #[serde(rename = "type")]
    pub ade_type: String,
    pub vertices: Vec<u32>,
    pub fundamental_cycle: CycleJson,
    pub adjacent_to_marked: Vec<u32>,
    pub attach_points: Vec<AttachPointJson>,
    pub d: i64,
    /// Chain ends with their multiplicities in the ambient fundamental
    /// cycle; A-family components only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub end_multiplicities: Option<Vec<EndMultiplicityJson>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndMultiplicityJson {
    pub vertex: u32,
    pub multiplicity: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkJson {
    #[serde(rename = "type")]
    pub ade_type: String,
    pub marked_vertex: u32,
    pub length: i64,
    pub fundamental_cycle: CycleJson,
    pub attachments: AttachmentsJson,
    pub components: Vec<ComponentJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateJson {
    #[serde(rename = "type")]
    pub ade_type: String,
    pub marked_vertex: u32,
    pub length: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleJson {
    pub id: String,
    pub kind: String,
    pub statement: String,
    pub quote: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleApplicationJson {
    pub id: String,
    pub kind: String,
    pub statement: String,
    pub quote: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationJson {
    pub candidate: CandidateJson,
    pub rules: Vec<RuleApplicationJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactJson {
    pub fact: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyJson {
    pub length: i64,
    pub expected: String,
    pub candidates: Vec<CandidateJson>,
    pub eliminations: Vec<EliminationJson>,
    pub survivor: Option<CandidateJson>,
    pub uniqueness_check: bool,
    pub rules_in_force: Vec<RuleJson>,
    pub facts: Vec<FactJson>,
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyJson {
    pub max_rank: u32,
    pub facts: Vec<FactJson>,
    pub passed: bool,
}

pub fn cycle_json(cycle: &Cycle) -> CycleJson {
    CycleJson {
        coefficients: cycle
            .coefficients()
            .iter()
            .map(|(v, &c)| (v.to_string(), c))
            .collect(),
    }
}

pub fn diagram_json(t: AdeType, config: &CurveConfiguration, cycle: Option<&Cycle>) -> DiagramJson {
    DiagramJson {
        family: t.family().to_string(),
        rank: t.rank(),
        edges: config.edges().map(|(a, b)| (a.0, b.0)).collect(),
        fundamental_cycle: cycle.map(cycle_json),
    }
}

pub fn fundcycle_json(trace: &ComputationTrace, with_trace: bool) -> FundcycleJson {
    FundcycleJson {
        coefficients: cycle_json(&trace.result).coefficients,
        start: with_trace.then_some(trace.start.0),
        trace: with_trace.then(|| {
            trace
                .steps
                .iter()
                .map(|s| TraceStepJson {
                    vertex: s.vertex.0,
                    pairing: s.pairing_value,
                })
                .collect()
        }),
    }
}

pub fn candidate_json(marked: &MarkedDiagram) -> CandidateJson {
    CandidateJson {
        ade_type: marked.ade_type().to_string(),
        marked_vertex: marked.marked_vertex().0,
        length: marked.length(),
    }
}

pub fn mark_json(resolution: &PartialResolution) -> MarkJson {
    let marked = &resolution.parent;
    let components = resolution
        .components
        .iter()
        .enumerate()
        .map(|(index, component)| ComponentJson {
            index: index + 1,
            ade_type: component.ade_type.to_string(),
            vertices: component.config.vertices().iter().map(|v| v.0).collect(),
            fundamental_cycle: cycle_json(&component.fundamental_cycle),
            adjacent_to_marked: component.marked_neighbors.iter().map(|v| v.0).collect(),
            attach_points: component
                .attach_points
                .iter()
                .map(|&(v, count)| AttachPointJson { vertex: v.0, count })
                .collect(),
            d: resolution.d_multiplicity(index).expect("index in range"),
            end_multiplicities: resolution
                .end_component_multiplicities(index)
                .ok()
                .map(|ends| {
                    ends.iter()
                        .map(|&(v, multiplicity)| EndMultiplicityJson {
                            vertex: v.0,
                            multiplicity,
                        })
                        .collect()
                }),
        })
        .collect();
    MarkJson {
        ade_type: marked.ade_type().to_string(),
        marked_vertex: marked.marked_vertex().0,
        length: marked.length(),
        fundamental_cycle: cycle_json(marked.fundamental_cycle()),
        attachments: AttachmentsJson {
            branch_count: resolution.section.branch_count,
            points: resolution
                .section
                .attach_points
                .iter()
                .map(|&(v, count)| AttachPointJson { vertex: v.0, count })
                .collect(),
        },
        components,
    }
}

fn rule_json(rule: &InferenceRule) -> RuleJson {
    RuleJson {
        id: rule.id.to_string(),
        kind: rule.kind.to_string(),
        statement: rule.statement.to_string(),
        quote: rule.quote.to_string(),
    }
}

fn rule_application_json(application: &RuleApplication) -> RuleApplicationJson {
    RuleApplicationJson {
        id: application.rule.id.to_string(),
        kind: application.rule.kind.to_string(),
        statement: application.rule.statement.to_string(),
        quote: application.rule.quote.to_string(),
        detail: application.detail.clone(),
    }
}

fn fact_json(fact: &FactCheck) -> FactJson {
    FactJson {
        fact: fact.name.clone(),
        expected: fact.expected.clone(),
        computed: fact.computed.clone(),
        pass: fact.pass,
    }
}

pub fn classify_json(report: &ClassificationReport) -> ClassifyJson {
    ClassifyJson {
        length: report.length,
        expected: report.expected_type.to_string(),
        candidates: report.candidates.iter().map(candidate_json).collect(),
        eliminations: report
            .eliminations
            .iter()
            .map(|e| EliminationJson {
                candidate: candidate_json(&e.candidate),
                rules: e.rules.iter().map(rule_application_json).collect(),
            })
            .collect(),
        survivor: report.survivor().map(candidate_json),
        uniqueness_check: report.uniqueness_check,
        rules_in_force: report.rules_in_force.iter().map(|r| rule_json(r)).collect(),
        facts: report.facts.iter().map(fact_json).collect(),
        verified: report.is_verified(),
    }
}

pub fn verify_json(report: &VerificationReport) -> VerifyJson {
    VerifyJson {
        max_rank: report.max_rank,
        facts: report.facts.iter().map(fact_json).collect(),
        passed: report.passed(),
    }
}

pub fn to_pretty(value: &impl Serialize) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("schemas serialize");
    text.push('\n');
    text
}
