//! Length-by-length reproduction of the classification of marked ADE
//! diagrams, as a machine-checkable case analysis.
//!
//! For each length the candidates are enumerated, then eliminated by
//! inference rules until a single survivor remains. Combinatorial rules
//! are decided entirely by computations in this crate. Analytic axioms are
//! steps of the underlying geometric argument (blow-ups, conics,
//! singularity comparisons of hyperplane sections) that the library
//! records with a verbatim citation instead of re-deriving; every use is
//! flagged in the report, and the combinatorial premises those steps rely
//! on (component splits, d values, end multiplicities) are verified
//! independently.

use std::collections::BTreeSet;
use std::fmt;

use crate::diagram::{AdeType, Family, Vertex, ade_types_up_to, build_ade};
use crate::error::Error;
use crate::flop::{
    MarkedDiagram, PartialResolution, attachment_points, enumerate_marked, mark,
    partial_resolution,
};
use crate::fundcycle::ade_fundamental_cycle;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleKind {
    Combinatorial,
    AnalyticAxiom,
}

impl fmt::Display for RuleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleKind::Combinatorial => write!(f, "combinatorial"),
            RuleKind::AnalyticAxiom => write!(f, "analytic-axiom"),
        }
    }
}

/// A single inference of the case analysis.
///
/// `quote` is the verbatim anchor for the step in the classification
/// theorem's proof; analytic axioms always carry one. `applies_to` is the
/// combinatorial precondition under which the rule may be cited.
pub struct InferenceRule {
    pub id: &'static str,
    pub kind: RuleKind,
    pub statement: &'static str,
    pub quote: &'static str,
    pub applies_to: fn(&CandidateCase) -> bool,
}

impl fmt::Debug for InferenceRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("InferenceRule")
            .field("id", &self.id)
            .field("kind", &self.kind)
            .finish()
    }
}

/// Precomputed combinatorial data for one enumerated candidate.
#[derive(Debug, Clone)]
pub struct CandidateCase {
    pub marked: MarkedDiagram,
    pub resolution: PartialResolution,
    pub component_types: Vec<AdeType>,
    pub d_values: Vec<i64>,
    /// Indices of components containing at least one attachment point.
    pub attach_component_indices: Vec<usize>,
}

impl CandidateCase {
    pub fn new(marked: &MarkedDiagram) -> Self {
        let resolution = partial_resolution(marked);
        let component_types = resolution.components.iter().map(|c| c.ade_type).collect();
        let d_values = (0..resolution.components.len())
            .map(|i| resolution.d_multiplicity(i).expect("index in range"))
            .collect();
        let attach_component_indices = resolution
            .components
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.attach_points.is_empty())
            .map(|(i, _)| i)
            .collect();
        CandidateCase {
            marked: marked.clone(),
            resolution,
            component_types,
            d_values,
            attach_component_indices,
        }
    }

    fn sorted_types(&self) -> Vec<AdeType> {
        let mut types = self.component_types.clone();
        types.sort();
        types
    }

    fn split_label(&self) -> String {
        format_split(&self.sorted_types())
    }

    /// The two-component pattern {A1 with the attachment, other}: returns
    /// (a1 index, other index).
    fn a1_attach_pattern(&self) -> Option<(usize, usize)> {
        if self.component_types.len() != 2 {
            return None;
        }
        let a1 = AdeType::a(1).unwrap();
        let (a1_index, other_index) = if self.component_types[0] == a1 {
            (0, 1)
        } else if self.component_types[1] == a1 {
            (1, 0)
        } else {
            return None;
        };
        if self.component_types[other_index] == a1 {
            return None;
        }
        (self.attach_component_indices == vec![a1_index]).then_some((a1_index, other_index))
    }

    /// Sorted multiplicities in the ambient fundamental cycle at the chain
    /// ends of the unique attach-bearing component, when that component is
    /// an A-family chain.
    fn attach_end_multiplicities(&self) -> Option<Vec<i64>> {
        let [index] = self.attach_component_indices.as_slice() else {
            return None;
        };
        let ends = self.resolution.end_component_multiplicities(*index).ok()?;
        let mut multiplicities: Vec<i64> = ends.iter().map(|&(_, m)| m).collect();
        multiplicities.sort_unstable();
        Some(multiplicities)
    }
}

fn rank_is(case: &CandidateCase, family: Family, ranks: &[u32]) -> bool {
    case.marked.ade_type().family() == family && ranks.contains(&case.marked.ade_type().rank())
}

fn applies_always(_: &CandidateCase) -> bool {
    true
}

fn applies_small_d(case: &CandidateCase) -> bool {
    case.marked.length() <= 2 && case.d_values.iter().all(|&d| d <= 3)
}

fn applies_former_length_three(case: &CandidateCase) -> bool {
    case.marked.length() == 3
        && (rank_is(case, Family::E, &[7]) || rank_is(case, Family::E, &[8]))
        && case
            .a1_attach_pattern()
            .is_some_and(|(_, other)| case.d_values[other] == 3)
}

fn applies_latter_length_three(case: &CandidateCase) -> bool {
    case.marked.length() == 3
        && (rank_is(case, Family::E, &[7]) || rank_is(case, Family::E, &[8]))
        && case.component_types.iter().all(|t| t.family() == Family::A)
        && case.attach_end_multiplicities() == Some(vec![2, 2])
}

fn applies_latter_length_three_two_components(case: &CandidateCase) -> bool {
    applies_latter_length_three(case) && case.component_types.len() == 2
}

fn applies_former_length_four(case: &CandidateCase) -> bool {
    case.marked.length() == 4
        && rank_is(case, Family::E, &[8])
        && case.component_types.iter().any(|t| t.family() == Family::D)
}

fn applies_latter_length_four(case: &CandidateCase) -> bool {
    case.marked.length() == 4
        && rank_is(case, Family::E, &[8])
        && case.component_types.iter().all(|t| t.family() == Family::A)
        && case.attach_end_multiplicities() == Some(vec![2, 3])
}

fn applies_enumeration(case: &CandidateCase) -> bool {
    case.marked.length() >= 5
}

/// Away from the singular points of the intermediate surface, a symmetric
/// general section has only A_{l-1} singularities.
pub static LOCAL_EQUATION: InferenceRule = InferenceRule {
    id: "local-equation-off-singular-points",
    kind: RuleKind::AnalyticAxiom,
    statement: "away from the singular points of the partial resolution, every singularity of a \
                symmetric general section is a rational double point of type A_{l-1}",
    quote: "equations of the type x^ℓ + ty = 0",
    applies_to: applies_always,
};

/// With every d value at most 3 (lengths 1 and 2), the symmetric section
/// is nonsingular at every singular point of the partial resolution.
pub static NONSINGULAR_SMALL_D: InferenceRule = InferenceRule {
    id: "nonsingular-small-d",
    kind: RuleKind::AnalyticAxiom,
    statement: "when every d_i is at most 3 (lengths 1 and 2), the symmetric general section is \
                nonsingular at each singular point",
    quote: "hence L' is nonsingular at the P_i",
    applies_to: applies_small_d,
};

/// The two general sections carry the same singularity multiset, so the
/// component types must be reproducible by the singularities the rules in
/// force allow.
pub static SYMMETRY: InferenceRule = InferenceRule {
    id: "section-symmetry",
    kind: RuleKind::Combinatorial,
    statement: "two general sections have the same singularity multiset, so the multiset of \
                component types must be reproducible under the rules in force",
    quote: "H and H' have the same type of singularities, and so do L and L'",
    applies_to: applies_always,
};

/// Spot use of the d-bound at the quoted d = 3 points in the length-3
/// former cases; never generalized to other lengths or values.
pub static SPOT_D3_NONSINGULAR: InferenceRule = InferenceRule {
    id: "nonsingular-at-d3-spot",
    kind: RuleKind::AnalyticAxiom,
    statement: "in the length-3 cases splitting as A1 plus one larger component, d = 3 over the \
                larger component makes the symmetric section nonsingular there",
    quote: "while being nonsingular at P_2, since d_2 = 3",
    applies_to: applies_former_length_three,
};

pub static SIMPLER_CONTRADICTION: InferenceRule = InferenceRule {
    id: "simpler-singularities",
    kind: RuleKind::AnalyticAxiom,
    statement: "the symmetric section would carry strictly simpler singularities than the \
                original, which is impossible",
    quote: "Therefore, L' has simpler singularities than L, a contradiction",
    applies_to: applies_former_length_three,
};

/// Recorded as stated for the two-component latter case at length 3; no
/// general rule relating d values to singularity types is imposed at
/// lengths 3 and up.
pub static AT_MOST_A2_SPOT: InferenceRule = InferenceRule {
    id: "at-most-a2-spot",
    kind: RuleKind::AnalyticAxiom,
    statement: "in the two-component latter case at length 3, the symmetric section has at most \
                an A2 singularity at the non-attachment point",
    quote: "it has at most A_2 at P_2",
    applies_to: applies_latter_length_three_two_components,
};

/// Blow-up conic argument for the length-3 latter cases; its combinatorial
/// premise is that the attach-bearing chain has end multiplicities 2 and 2.
pub static CONIC: InferenceRule = InferenceRule {
    id: "nonsingular-conic",
    kind: RuleKind::AnalyticAxiom,
    statement: "blowing up the attachment-side singular point, the residual conic is forced to \
                be nonsingular, leaving an A1 there and contradicting the symmetry of the two \
                sections",
    quote: "B' must be a nonsingular conic",
    applies_to: applies_latter_length_three,
};

pub static SYMMETRY_CONTRADICTION_D5: InferenceRule = InferenceRule {
    id: "symmetry-contradiction-d5",
    kind: RuleKind::AnalyticAxiom,
    statement: "in the length-4 split with a D5 component, two successive blow-ups make the \
                symmetric section nonsingular where symmetry requires a D5 point",
    quote: "this contradicts the symmetry of L and L'",
    applies_to: applies_former_length_four,
};

pub static SYMMETRY_CONTRADICTION_A6: InferenceRule = InferenceRule {
    id: "symmetry-contradiction-a6",
    kind: RuleKind::AnalyticAxiom,
    statement: "in the length-4 split into chains with end multiplicities 3 and 2, the strict \
                transform of the contracted curve would pass through the intersection of the \
                two exceptional lines",
    quote: "a contradiction to the symmetry",
    applies_to: applies_latter_length_four,
};

pub static ENUMERATION: InferenceRule = InferenceRule {
    id: "coefficient-enumeration",
    kind: RuleKind::Combinatorial,
    statement: "exhaustive enumeration of fundamental-cycle multiplicities over the ADE families \
                leaves a single candidate",
    quote: "if ℓ ≥ 5, the assertion of the theorem is clear",
    applies_to: applies_enumeration,
};

/// One cited rule with the concrete data it was applied to.
#[derive(Debug)]
pub struct RuleApplication {
    pub rule: &'static InferenceRule,
    pub detail: String,
}

#[derive(Debug)]
pub struct Elimination {
    pub candidate: MarkedDiagram,
    pub rules: Vec<RuleApplication>,
}

/// One verified fact: what was expected, what was computed, and whether
/// they agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactCheck {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

impl FactCheck {
    pub fn new(
        name: impl Into<String>,
        expected: impl Into<String>,
        computed: impl Into<String>,
        pass: bool,
    ) -> Self {
        FactCheck {
            name: name.into(),
            expected: expected.into(),
            computed: computed.into(),
            pass,
        }
    }

    /// Pass exactly when the two renderings agree.
    pub fn equals(name: impl Into<String>, expected: String, computed: String) -> Self {
        let pass = expected == computed;
        FactCheck {
            name: name.into(),
            expected,
            computed,
            pass,
        }
    }
}

/// Everything `classify` established for one length.
#[derive(Debug)]
pub struct ClassificationReport {
    pub length: i64,
    /// The type the classification table asserts for this length.
    pub expected_type: AdeType,
    pub candidates: Vec<MarkedDiagram>,
    pub eliminations: Vec<Elimination>,
    pub survivors: Vec<MarkedDiagram>,
    pub rules_in_force: Vec<&'static InferenceRule>,
    pub facts: Vec<FactCheck>,
    pub uniqueness_check: bool,
}

impl ClassificationReport {
    /// The unique survivor, when there is exactly one.
    pub fn survivor(&self) -> Option<&MarkedDiagram> {
        match self.survivors.as_slice() {
            [only] => Some(only),
            _ => None,
        }
    }

    /// True when a unique survivor of the expected type remains, the
    /// uniqueness remark holds, and every recorded fact passed.
    pub fn is_verified(&self) -> bool {
        self.survivor()
            .is_some_and(|s| s.ade_type() == self.expected_type)
            && self.uniqueness_check
            && self.facts.iter().all(|f| f.pass)
    }
}

/// The classification table: lengths 1..=6 map to A1, D4, E6, E7, E8, E8.
pub fn theorem_type(length: i64) -> Result<AdeType, Error> {
    match length {
        1 => AdeType::a(1),
        2 => AdeType::d(4),
        3 => AdeType::e(6),
        4 => AdeType::e(7),
        5 | 6 => AdeType::e(8),
        other => Err(Error::InvalidLength(other)),
    }
}

pub fn candidate_label(marked: &MarkedDiagram) -> String {
    format!("{}@{}", marked.ade_type(), marked.marked_vertex())
}

fn format_split(types: &[AdeType]) -> String {
    if types.is_empty() {
        return "(none)".to_string();
    }
    types
        .iter()
        .map(|t| t.to_string())
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Expected case data for the lengths treated case by case. The marked
/// vertices are the canonical-labeling positions of the relevant
/// fundamental-cycle multiplicities; splits, d values and end
/// multiplicities are the quoted combinatorial premises.
struct ProofCase {
    length: i64,
    family: Family,
    rank: u32,
    marked_vertex: u32,
    split: &'static [(Family, u32)],
    /// (component type, expected d over it)
    d_over: Option<((Family, u32), i64)>,
    /// (component type, sorted expected ambient multiplicities at its ends)
    ends: Option<((Family, u32), &'static [i64])>,
}

static PROOF_CASES: &[ProofCase] = &[
    ProofCase {
        length: 3,
        family: Family::E,
        rank: 7,
        marked_vertex: 2,
        split: &[(Family::A, 1), (Family::A, 5)],
        d_over: Some(((Family::A, 5), 3)),
        ends: None,
    },
    ProofCase {
        length: 3,
        family: Family::E,
        rank: 7,
        marked_vertex: 4,
        split: &[(Family::A, 2), (Family::A, 4)],
        d_over: None,
        ends: Some(((Family::A, 4), &[2, 2])),
    },
    ProofCase {
        length: 3,
        family: Family::E,
        rank: 8,
        marked_vertex: 6,
        split: &[(Family::A, 1), (Family::E, 6)],
        d_over: Some(((Family::E, 6), 3)),
        ends: None,
    },
    ProofCase {
        length: 3,
        family: Family::E,
        rank: 8,
        marked_vertex: 8,
        split: &[(Family::A, 7)],
        d_over: None,
        ends: Some(((Family::A, 7), &[2, 2])),
    },
    ProofCase {
        length: 4,
        family: Family::E,
        rank: 8,
        marked_vertex: 5,
        split: &[(Family::A, 2), (Family::D, 5)],
        d_over: None,
        ends: None,
    },
    ProofCase {
        length: 4,
        family: Family::E,
        rank: 8,
        marked_vertex: 2,
        split: &[(Family::A, 1), (Family::A, 6)],
        d_over: None,
        ends: Some(((Family::A, 6), &[2, 3])),
    },
];

fn proof_case_facts(proof_case: &ProofCase) -> Vec<FactCheck> {
    let ty = AdeType::new(proof_case.family, proof_case.rank).expect("table types are valid");
    let marked = mark(ty, Vertex(proof_case.marked_vertex)).expect("table vertices are valid");
    let label = candidate_label(&marked);
    let case = CandidateCase::new(&marked);
    let mut facts = Vec::new();

    let expected_split: Vec<AdeType> = proof_case
        .split
        .iter()
        .map(|&(f, r)| AdeType::new(f, r).expect("table types are valid"))
        .collect();
    facts.push(FactCheck::equals(
        format!("components of {label}"),
        format_split(&expected_split),
        case.split_label(),
    ));

    if let Some((target, expected_d)) = proof_case.d_over {
        let target = AdeType::new(target.0, target.1).expect("table types are valid");
        let computed = case
            .component_types
            .iter()
            .position(|&t| t == target)
            .map(|i| case.d_values[i].to_string())
            .unwrap_or_else(|| "component missing".to_string());
        facts.push(FactCheck::equals(
            format!("d over the {target} component of {label}"),
            expected_d.to_string(),
            computed,
        ));
    }

    if let Some((target, expected_ends)) = proof_case.ends {
        let target = AdeType::new(target.0, target.1).expect("table types are valid");
        let computed = case
            .component_types
            .iter()
            .position(|&t| t == target)
            .and_then(|i| case.resolution.end_component_multiplicities(i).ok())
            .map(|ends| {
                let mut multiplicities: Vec<i64> = ends.iter().map(|&(_, m)| m).collect();
                multiplicities.sort_unstable();
                format!("{multiplicities:?}")
            })
            .unwrap_or_else(|| "component missing".to_string());
        facts.push(FactCheck::equals(
            format!("ambient multiplicities at the ends of the {target} component of {label}"),
            format!("{expected_ends:?}"),
            computed,
        ));
    }

    facts
}

fn rules_in_force(length: i64) -> Vec<&'static InferenceRule> {
    match length {
        1 | 2 => vec![&LOCAL_EQUATION, &NONSINGULAR_SMALL_D, &SYMMETRY],
        3 => vec![
            &LOCAL_EQUATION,
            &SYMMETRY,
            &SPOT_D3_NONSINGULAR,
            &SIMPLER_CONTRADICTION,
            &AT_MOST_A2_SPOT,
            &CONIC,
        ],
        4 => vec![
            &LOCAL_EQUATION,
            &SYMMETRY,
            &SYMMETRY_CONTRADICTION_D5,
            &SYMMETRY_CONTRADICTION_A6,
        ],
        _ => vec![&ENUMERATION],
    }
}

fn apply(rule: &'static InferenceRule, detail: String) -> RuleApplication {
    RuleApplication { rule, detail }
}

/// Elimination chain for one candidate, or `None` if it survives. A
/// candidate matched by no rule survives; a wrong survivor then fails the
/// report rather than being forced out.
fn try_eliminate(case: &CandidateCase) -> Option<Vec<RuleApplication>> {
    let a1 = AdeType::a(1).unwrap();
    match case.marked.length() {
        1 => {
            if case.component_types.is_empty() || !(NONSINGULAR_SMALL_D.applies_to)(case) {
                return None;
            }
            Some(vec![
                apply(
                    &NONSINGULAR_SMALL_D,
                    format!("d values {:?} are all ≤ 3", case.d_values),
                ),
                apply(
                    &SYMMETRY,
                    format!(
                        "a symmetric section is nonsingular everywhere, so every component must \
                         be empty; found {}",
                        case.split_label()
                    ),
                ),
            ])
        }
        2 => {
            let (index, offending) = case
                .component_types
                .iter()
                .enumerate()
                .find(|&(_, &t)| t != a1)?;
            if !(NONSINGULAR_SMALL_D.applies_to)(case) {
                return None;
            }
            Some(vec![
                apply(
                    &NONSINGULAR_SMALL_D,
                    format!("d values {:?} are all ≤ 3", case.d_values),
                ),
                apply(
                    &SYMMETRY,
                    format!(
                        "every component must be A1; component {} is {offending}",
                        index + 1
                    ),
                ),
            ])
        }
        3 => {
            if (SPOT_D3_NONSINGULAR.applies_to)(case) {
                let (_, other) = case.a1_attach_pattern().expect("checked by the predicate");
                Some(vec![
                    apply(
                        &SPOT_D3_NONSINGULAR,
                        format!(
                            "components {}; d = {} over the {} component",
                            case.split_label(),
                            case.d_values[other],
                            case.component_types[other]
                        ),
                    ),
                    apply(
                        &SIMPLER_CONTRADICTION,
                        format!(
                            "at most A1 remains against {}, strictly simpler",
                            case.split_label()
                        ),
                    ),
                ])
            } else if (CONIC.applies_to)(case) {
                let mut chain = Vec::new();
                if (AT_MOST_A2_SPOT.applies_to)(case) {
                    chain.push(apply(
                        &AT_MOST_A2_SPOT,
                        format!("components {}", case.split_label()),
                    ));
                }
                chain.push(apply(
                    &CONIC,
                    format!(
                        "components {}; attach-bearing chain has end multiplicities {:?}",
                        case.split_label(),
                        case.attach_end_multiplicities().expect("checked by the predicate")
                    ),
                ));
                Some(chain)
            } else {
                None
            }
        }
        4 => {
            if (SYMMETRY_CONTRADICTION_D5.applies_to)(case) {
                Some(vec![apply(
                    &SYMMETRY_CONTRADICTION_D5,
                    format!("components {}", case.split_label()),
                )])
            } else if (SYMMETRY_CONTRADICTION_A6.applies_to)(case) {
                Some(vec![apply(
                    &SYMMETRY_CONTRADICTION_A6,
                    format!(
                        "components {}; attach-bearing chain has end multiplicities {:?}",
                        case.split_label(),
                        case.attach_end_multiplicities().expect("checked by the predicate")
                    ),
                )])
            } else {
                None
            }
        }
        _ => None,
    }
}

fn length_facts(length: i64, max_rank: u32, cases: &[CandidateCase]) -> Vec<FactCheck> {
    let mut facts = Vec::new();
    match length {
        1 | 2 => {
            let max_d = cases
                .iter()
                .flat_map(|c| c.d_values.iter().copied())
                .max()
                .unwrap_or(0);
            facts.push(FactCheck::new(
                format!(
                    "d_i ≤ 3 over the {} length-{length} candidates (rank ≤ {max_rank})",
                    cases.len()
                ),
                "max d_i ≤ 3",
                format!("max d_i = {max_d}"),
                max_d <= 3,
            ));
        }
        3 | 4 => {
            let expected = if length == 3 {
                "E6@3, E7@2, E7@4, E8@6, E8@8"
            } else {
                "E7@3, E8@2, E8@5"
            };
            let computed = cases
                .iter()
                .map(|c| candidate_label(&c.marked))
                .collect::<Vec<_>>()
                .join(", ");
            facts.push(FactCheck::equals(
                format!("length-{length} candidates up to automorphism"),
                expected.to_string(),
                computed,
            ));
            for proof_case in PROOF_CASES.iter().filter(|c| c.length == length) {
                facts.extend(proof_case_facts(proof_case));
            }
        }
        _ => {
            let expected = if length == 5 { "E8@4" } else { "E8@3" };
            let computed = cases
                .iter()
                .map(|c| candidate_label(&c.marked))
                .collect::<Vec<_>>()
                .join(", ");
            facts.push(FactCheck::equals(
                format!("length-{length} candidates up to automorphism"),
                expected.to_string(),
                computed,
            ));
        }
    }
    facts
}

/// Run the case analysis for one length.
pub fn classify(length: i64, max_rank: u32) -> Result<ClassificationReport, Error> {
    let expected_type = theorem_type(length)?;
    if max_rank < 8 {
        return Err(Error::MaxRankTooSmall(max_rank));
    }
    let candidates = enumerate_marked(length, max_rank)?;
    let cases: Vec<CandidateCase> = candidates.iter().map(CandidateCase::new).collect();
    let facts = length_facts(length, max_rank, &cases);

    let mut eliminations = Vec::new();
    let mut survivors = Vec::new();
    for case in &cases {
        match try_eliminate(case) {
            Some(rules) => eliminations.push(Elimination {
                candidate: case.marked.clone(),
                rules,
            }),
            None => survivors.push(case.marked.clone()),
        }
    }

    let uniqueness_check = match survivors.as_slice() {
        [survivor] => multiplicity_count(survivor) == 1,
        _ => false,
    };

    Ok(ClassificationReport {
        length,
        expected_type,
        candidates,
        eliminations,
        survivors,
        rules_in_force: rules_in_force(length),
        facts,
        uniqueness_check,
    })
}

fn multiplicity_count(marked: &MarkedDiagram) -> usize {
    marked
        .config()
        .vertices()
        .iter()
        .filter(|&&v| marked.fundamental_cycle().coefficient(v) == marked.length())
        .count()
}

/// The uniqueness remark: the survivor's diagram has exactly one vertex
/// whose fundamental-cycle multiplicity equals the length (a literal
/// vertex count, no automorphism quotient).
pub fn verify_uniqueness(report: &ClassificationReport) -> bool {
    report
        .survivor()
        .is_some_and(|survivor| multiplicity_count(survivor) == 1)
}

/// Evaluate the full fact table behind the case analysis: the exhaustive
/// d bound for lengths 1 and 2, every quoted split, d value and end
/// multiplicity, the attachment structure of every family, and the audit
/// that eliminations at lengths 1, 2, 5 and 6 cite no analytic axiom
/// beyond the small-d rule. Failures are entries, not errors.
pub fn verify_proof_facts(max_rank: u32) -> Vec<FactCheck> {
    let sweep_rank = max_rank.max(8);
    let mut facts = Vec::new();

    // Exhaustive d bound over every marking of length 1 or 2 (no
    // automorphism quotient).
    for length in [1i64, 2] {
        let mut max_d = 0i64;
        let mut count = 0usize;
        for t in ade_types_up_to(sweep_rank) {
            let cycle = ade_fundamental_cycle(t);
            let config = build_ade(t);
            for &v in config.vertices() {
                if cycle.coefficient(v) != length {
                    continue;
                }
                count += 1;
                let marked = mark(t, v).expect("vertex comes from the configuration");
                let resolution = partial_resolution(&marked);
                for index in 0..resolution.components.len() {
                    max_d = max_d.max(resolution.d_multiplicity(index).expect("index in range"));
                }
            }
        }
        facts.push(FactCheck::new(
            format!("d_i ≤ 3 for every length-{length} marking, all families, rank ≤ {sweep_rank} ({count} markings)"),
            "max d_i ≤ 3",
            format!("max d_i = {max_d}"),
            max_d <= 3,
        ));
    }

    for proof_case in PROOF_CASES {
        facts.extend(proof_case_facts(proof_case));
    }

    // Attachment structure: D and E diagrams have a single attachment
    // vertex of ambient multiplicity 2.
    {
        let mut violation = None;
        for t in ade_types_up_to(sweep_rank)
            .into_iter()
            .filter(|t| t.family() != Family::A)
        {
            let config = build_ade(t);
            let section = attachment_points(&config).expect("canonical diagrams are ADE");
            let cycle = ade_fundamental_cycle(t);
            let good = matches!(section.attach_points.as_slice(), [(v, 1)] if cycle.coefficient(*v) == 2)
                && section.branch_count == 1;
            if !good {
                violation = Some(t);
                break;
            }
        }
        facts.push(FactCheck::new(
            format!("D/E attachment: one vertex, ambient multiplicity 2 (rank ≤ {sweep_rank})"),
            "holds for every D and E type",
            match violation {
                None => "holds for every D and E type".to_string(),
                Some(t) => format!("violated at {t}"),
            },
            violation.is_none(),
        ));
    }

    // Attachment structure: A diagrams carry two residual branches at
    // multiplicity-1 chain ends (both on the single vertex for A1).
    {
        let mut violation = None;
        for n in 1..=sweep_rank {
            let t = AdeType::a(n).unwrap();
            let config = build_ade(t);
            let section = attachment_points(&config).expect("canonical diagrams are ADE");
            let cycle = ade_fundamental_cycle(t);
            let good = if n == 1 {
                section.attach_points == vec![(Vertex(1), 2)] && section.branch_count == 2
            } else {
                section.attach_points == vec![(Vertex(1), 1), (Vertex(n), 1)]
                    && section.branch_count == 2
                    && cycle.coefficient(Vertex(1)) == 1
                    && cycle.coefficient(Vertex(n)) == 1
            };
            if !good {
                violation = Some(t);
                break;
            }
        }
        facts.push(FactCheck::new(
            format!("A-family attachment: two branches at the chain ends (rank ≤ {sweep_rank})"),
            "holds for every A type",
            match violation {
                None => "holds for every A type".to_string(),
                Some(t) => format!("violated at {t}"),
            },
            violation.is_none(),
        ));
    }

    // Rule-usage audit.
    {
        let mut cited: BTreeSet<&'static str> = BTreeSet::new();
        for length in [1i64, 2, 5, 6] {
            let report = classify(length, sweep_rank).expect("valid length and rank");
            for elimination in &report.eliminations {
                for application in &elimination.rules {
                    if application.rule.kind == RuleKind::AnalyticAxiom {
                        cited.insert(application.rule.id);
                    }
                }
            }
        }
        let pass = cited.iter().all(|&id| id == NONSINGULAR_SMALL_D.id);
        let computed = if cited.is_empty() {
            "none".to_string()
        } else {
            cited.iter().copied().collect::<Vec<_>>().join(", ")
        };
        facts.push(FactCheck::new(
            "analytic axioms cited by eliminations at lengths 1, 2, 5 and 6",
            format!("at most {:?}", NONSINGULAR_SMALL_D.id),
            computed,
            pass,
        ));
    }

    facts
}
