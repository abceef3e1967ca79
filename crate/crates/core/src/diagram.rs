//! Configurations of (-2)-curves: ADE diagram construction, shape
//! recognition, and vertex deletion.
//!
//! Canonical labeling, used by every constructor and every documented
//! vertex address:
//!
//! * `A(n)`: chain `1 - 2 - ... - n`
//! * `D(n)`: chain `1 - 2 - ... - (n-2)`, leaves `n-1` and `n` attached to `n-2`
//! * `E(n)`: chain `1 - 2 - ... - (n-1)`, vertex `n` attached to vertex `3`
//!
//! Vertex identifiers are stable: deleting a vertex yields components that
//! keep their original identifiers, so facts about a sub-diagram can be
//! reported against the parent.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, NotAdeReason};

/// The three simply-laced families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    D,
    E,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A => write!(f, "A"),
            Family::D => write!(f, "D"),
            Family::E => write!(f, "E"),
        }
    }
}

/// A validated ADE type: `A(n >= 1)`, `D(n >= 4)`, `E(6)`, `E(7)` or `E(8)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AdeType {
    family: Family,
    rank: u32,
}

impl AdeType {
    pub fn new(family: Family, rank: u32) -> Result<Self, Error> {
        let constraint = match family {
            Family::A if rank < 1 => Some("rank must be ≥ 1"),
            Family::D if rank < 4 => Some("rank must be ≥ 4"),
            Family::E if !(6..=8).contains(&rank) => Some("rank must be 6, 7 or 8"),
            _ => None,
        };
        match constraint {
            Some(constraint) => Err(Error::InvalidRank {
                family,
                rank,
                constraint,
            }),
            None => Ok(AdeType { family, rank }),
        }
    }

    pub fn a(rank: u32) -> Result<Self, Error> {
        Self::new(Family::A, rank)
    }

    pub fn d(rank: u32) -> Result<Self, Error> {
        Self::new(Family::D, rank)
    }

    pub fn e(rank: u32) -> Result<Self, Error> {
        Self::new(Family::E, rank)
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> u32 {
        self.rank
    }
}

impl fmt::Display for AdeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for AdeType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let parse_err = || Error::ParseType {
            input: s.to_string(),
        };
        let mut chars = s.chars();
        let family = match chars.next() {
            Some('A') | Some('a') => Family::A,
            Some('D') | Some('d') => Family::D,
            Some('E') | Some('e') => Family::E,
            _ => return Err(parse_err()),
        };
        let rank: u32 = chars.as_str().parse().map_err(|_| parse_err())?;
        AdeType::new(family, rank)
    }
}

/// Stable identifier of an exceptional curve in a configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex(pub u32);

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A weighted dual graph of (-2)-curves: vertices, transversal
/// intersections as unordered edges, and the self-intersection of each
/// curve (always -2 here).
///
/// Construction rejects loops; repeated edges collapse to one. Arbitrary
/// graphs are allowed (negative definiteness and tree-ness are checked by
/// the operations that need them), but [`build_ade`] always produces trees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveConfiguration {
    vertices: Vec<Vertex>,
    edges: BTreeSet<(Vertex, Vertex)>,
    self_intersection: BTreeMap<Vertex, i64>,
}

impl CurveConfiguration {
    pub fn from_edges(vertex_ids: &[u32], edge_list: &[(u32, u32)]) -> Result<Self, Error> {
        let vertex_set: BTreeSet<Vertex> = vertex_ids.iter().map(|&v| Vertex(v)).collect();
        let mut edges = BTreeSet::new();
        for &(a, b) in edge_list {
            let (a, b) = (Vertex(a), Vertex(b));
            if a == b {
                return Err(Error::LoopEdge(a));
            }
            for v in [a, b] {
                if !vertex_set.contains(&v) {
                    return Err(Error::UnknownVertex(v));
                }
            }
            edges.insert((a.min(b), a.max(b)));
        }
        let self_intersection = vertex_set.iter().map(|&v| (v, -2)).collect();
        Ok(CurveConfiguration {
            vertices: vertex_set.into_iter().collect(),
            edges,
            self_intersection,
        })
    }

    /// Vertex identifiers in ascending order.
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as normalized `(min, max)` pairs, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.edges.iter().copied()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.self_intersection.contains_key(&v)
    }

    /// Self-intersection number of the curve at `v`.
    ///
    /// Panics if `v` is not a vertex of this configuration.
    pub fn self_intersection(&self, v: Vertex) -> i64 {
        self.self_intersection[&v]
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn neighbors(&self, v: Vertex) -> Vec<Vertex> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).len()
    }

    /// Position of `v` in the sorted vertex list (the matrix index).
    pub fn index_of(&self, v: Vertex) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    pub fn is_connected(&self) -> bool {
        let Some(&start) = self.vertices.first() else {
            return false;
        };
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen.len() == self.vertices.len()
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edges.len() == self.vertices.len() - 1
    }
}

/// Build the canonical ADE configuration for `t`.
///
/// Deterministic: identical input yields the identical vertex ordering and
/// edge set.
pub fn build_ade(t: AdeType) -> CurveConfiguration {
    let n = t.rank();
    let mut edges = Vec::new();
    match t.family() {
        Family::A => {
            for i in 1..n {
                edges.push((i, i + 1));
            }
        }
        Family::D => {
            for i in 1..n - 2 {
                edges.push((i, i + 1));
            }
            edges.push((n - 2, n - 1));
            edges.push((n - 2, n));
        }
        Family::E => {
            for i in 1..n - 1 {
                edges.push((i, i + 1));
            }
            edges.push((3, n));
        }
    }
    let ids: Vec<u32> = (1..=n).collect();
    CurveConfiguration::from_edges(&ids, &edges).expect("canonical ADE diagrams are valid")
}

/// All ADE types with rank at most `max_rank`, in scan order:
/// A by rank, then D by rank, then E6, E7, E8.
pub fn ade_types_up_to(max_rank: u32) -> Vec<AdeType> {
    let mut types = Vec::new();
    for n in 1..=max_rank {
        types.push(AdeType::a(n).unwrap());
    }
    for n in 4..=max_rank {
        types.push(AdeType::d(n).unwrap());
    }
    for n in 6..=max_rank.min(8) {
        types.push(AdeType::e(n).unwrap());
    }
    types
}

/// Recognize which ADE diagram a tree is.
///
/// A chain is `A(n)`. A tree with exactly one trivalent vertex is matched
/// by the sorted vertex-counts of its three arms: `{1,1,k}` is `D(k+3)`,
/// `{1,2,2}` is `E6`, `{1,2,3}` is `E7`, `{1,2,4}` is `E8`. Anything else
/// is rejected with the offending feature.
pub fn classify_tree(config: &CurveConfiguration) -> Result<AdeType, Error> {
    if config.vertex_count() == 0 {
        return Err(Error::NotAde(NotAdeReason::Empty));
    }
    if !config.is_connected() {
        return Err(Error::NotAde(NotAdeReason::NotConnected));
    }
    if config.edge_count() != config.vertex_count() - 1 {
        return Err(Error::NotAde(NotAdeReason::NotATree));
    }
    for &v in config.vertices() {
        let degree = config.degree(v);
        if degree > 3 {
            return Err(Error::NotAde(NotAdeReason::DegreeTooHigh { vertex: v, degree }));
        }
    }
    let trivalent: Vec<Vertex> = config
        .vertices()
        .iter()
        .copied()
        .filter(|&v| config.degree(v) == 3)
        .collect();
    match trivalent.as_slice() {
        [] => AdeType::a(config.vertex_count() as u32),
        [center] => {
            let mut arms: Vec<usize> = delete_vertex(config, *center)
                .expect("center is a vertex")
                .iter()
                .map(|arm| arm.vertex_count())
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, k] => AdeType::d(*k as u32 + 3),
                [1, 2, 2] => AdeType::e(6),
                [1, 2, 3] => AdeType::e(7),
                [1, 2, 4] => AdeType::e(8),
                _ => Err(Error::NotAde(NotAdeReason::ArmProfile { arms })),
            }
        }
        [first, second, ..] => Err(Error::NotAde(NotAdeReason::MultipleTrivalent {
            first: *first,
            second: *second,
        })),
    }
}

/// Connected components of the induced subgraph on `vertices \ {v}`.
///
/// Components keep their original vertex identifiers and are ordered by
/// smallest contained identifier.
pub fn delete_vertex(
    config: &CurveConfiguration,
    v: Vertex,
) -> Result<Vec<CurveConfiguration>, Error> {
    if !config.contains(v) {
        return Err(Error::UnknownVertex(v));
    }
    let mut remaining: BTreeSet<Vertex> =
        config.vertices().iter().copied().filter(|&w| w != v).collect();
    let mut components = Vec::new();
    while let Some(&start) = remaining.iter().next() {
        let mut member = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for w in config.neighbors(u) {
                if remaining.contains(&w) && member.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        for m in &member {
            remaining.remove(m);
        }
        let ids: Vec<u32> = member.iter().map(|w| w.0).collect();
        let edges: Vec<(u32, u32)> = config
            .edges()
            .filter(|(a, b)| member.contains(a) && member.contains(b))
            .map(|(a, b)| (a.0, b.0))
            .collect();
        components.push(
            CurveConfiguration::from_edges(&ids, &edges).expect("induced subgraph is valid"),
        );
    }
    // BTreeSet iteration already yields components by smallest member.
    Ok(components)
}

/// Human-readable position of a canonical-labeling vertex, for the CLI
/// legend.
pub fn describe_vertex(t: AdeType, v: Vertex) -> Result<String, Error> {
    let n = t.rank();
    if v.0 < 1 || v.0 > n {
        return Err(Error::UnknownVertex(v));
    }
    let text = match t.family() {
        Family::A => {
            if n == 1 {
                "the only vertex".to_string()
            } else if v.0 == 1 || v.0 == n {
                "chain end".to_string()
            } else {
                "chain vertex".to_string()
            }
        }
        Family::D => {
            if v.0 == n - 2 {
                "fork (trivalent) vertex".to_string()
            } else if v.0 > n - 2 {
                "fork leaf".to_string()
            } else if v.0 == 1 {
                "chain end".to_string()
            } else {
                "chain vertex".to_string()
            }
        }
        Family::E => {
            if v.0 == 3 {
                "trivalent vertex".to_string()
            } else if v.0 == n {
                "branch vertex (attached to vertex 3)".to_string()
            } else if v.0 == 1 {
                "short-arm end".to_string()
            } else if v.0 == n - 1 {
                "long-arm end".to_string()
            } else {
                "chain vertex".to_string()
            }
        }
    };
    Ok(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ade(s: &str) -> AdeType {
        s.parse().unwrap()
    }

    #[test]
    fn rank_constraints() {
        assert!(AdeType::a(1).is_ok());
        assert!(AdeType::d(4).is_ok());
        assert!(AdeType::e(6).is_ok());
        assert!(AdeType::e(8).is_ok());
        let err = AdeType::d(3).unwrap_err();
        assert!(err.to_string().contains("rank must be ≥ 4"), "{err}");
        assert!(AdeType::a(0).is_err());
        assert!(AdeType::e(9).is_err());
        assert!(AdeType::e(5).is_err());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(ade("A5").to_string(), "A5");
        assert_eq!(ade("e8"), AdeType::e(8).unwrap());
        assert!("F4".parse::<AdeType>().is_err());
        assert!("A".parse::<AdeType>().is_err());
        assert!("A-3".parse::<AdeType>().is_err());
    }

    #[test]
    fn a1_is_a_point() {
        let config = build_ade(ade("A1"));
        assert_eq!(config.vertex_count(), 1);
        assert_eq!(config.edge_count(), 0);
        assert_eq!(config.self_intersection(Vertex(1)), -2);
    }

    #[test]
    fn d4_is_a_star() {
        let config = build_ade(ade("D4"));
        assert_eq!(config.vertex_count(), 4);
        assert_eq!(config.degree(Vertex(2)), 3);
        for v in [1, 3, 4] {
            assert_eq!(config.degree(Vertex(v)), 1);
        }
    }

    #[test]
    fn e8_shape() {
        let config = build_ade(ade("E8"));
        assert_eq!(config.vertex_count(), 8);
        assert_eq!(config.edge_count(), 7);
        assert_eq!(config.degree(Vertex(3)), 3);
        assert!(config.has_edge(Vertex(3), Vertex(8)));
        // Vertex 3 is the third chain vertex from the short end.
        assert_eq!(config.neighbors(Vertex(3)), vec![Vertex(2), Vertex(4), Vertex(8)]);
    }

    #[test]
    fn trees_and_connectivity() {
        for t in ade_types_up_to(20) {
            let config = build_ade(t);
            assert!(config.is_tree(), "{t} should be a tree");
            assert_eq!(config.edge_count(), config.vertex_count() - 1);
            let max_degree = config
                .vertices()
                .iter()
                .map(|&v| config.degree(v))
                .max()
                .unwrap();
            assert!(max_degree <= 3, "{t} has degree {max_degree}");
        }
    }

    #[test]
    fn classify_round_trip() {
        for t in ade_types_up_to(20) {
            assert_eq!(classify_tree(&build_ade(t)).unwrap(), t);
        }
    }

    #[test]
    fn classify_chain_and_star() {
        let chain = CurveConfiguration::from_edges(&[1, 2, 3, 4, 5], &[(1, 2), (2, 3), (3, 4), (4, 5)])
            .unwrap();
        assert_eq!(classify_tree(&chain).unwrap(), ade("A5"));
        let star = CurveConfiguration::from_edges(&[1, 2, 3, 4, 5], &[(3, 1), (3, 2), (3, 4), (4, 5)])
            .unwrap();
        assert_eq!(classify_tree(&star).unwrap(), ade("D5"));
    }

    #[test]
    fn classify_rejections() {
        let empty = CurveConfiguration::from_edges(&[], &[]).unwrap();
        assert!(matches!(
            classify_tree(&empty),
            Err(Error::NotAde(NotAdeReason::Empty))
        ));

        let disconnected = CurveConfiguration::from_edges(&[1, 2, 3], &[(1, 2)]).unwrap();
        assert!(matches!(
            classify_tree(&disconnected),
            Err(Error::NotAde(NotAdeReason::NotConnected))
        ));

        let triangle =
            CurveConfiguration::from_edges(&[1, 2, 3], &[(1, 2), (2, 3), (1, 3)]).unwrap();
        assert!(matches!(
            classify_tree(&triangle),
            Err(Error::NotAde(NotAdeReason::NotATree))
        ));

        let cross = CurveConfiguration::from_edges(&[1, 2, 3, 4, 5], &[(1, 5), (2, 5), (3, 5), (4, 5)])
            .unwrap();
        assert!(matches!(
            classify_tree(&cross),
            Err(Error::NotAde(NotAdeReason::DegreeTooHigh { degree: 4, .. }))
        ));

        // Two trivalent vertices.
        let h_shape = CurveConfiguration::from_edges(
            &[1, 2, 3, 4, 5, 6],
            &[(1, 3), (2, 3), (3, 4), (4, 5), (4, 6)],
        )
        .unwrap();
        assert!(matches!(
            classify_tree(&h_shape),
            Err(Error::NotAde(NotAdeReason::MultipleTrivalent { .. }))
        ));

        // Arms {1,2,5}: one vertex past E8.
        let too_long = CurveConfiguration::from_edges(
            &[1, 2, 3, 4, 5, 6, 7, 8, 9],
            &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (3, 9)],
        )
        .unwrap();
        match classify_tree(&too_long) {
            Err(Error::NotAde(NotAdeReason::ArmProfile { arms })) => {
                assert_eq!(arms, vec![1, 2, 5]);
            }
            other => panic!("expected arm-profile rejection, got {other:?}"),
        }
    }

    #[test]
    fn loops_are_rejected() {
        assert!(matches!(
            CurveConfiguration::from_edges(&[1], &[(1, 1)]),
            Err(Error::LoopEdge(Vertex(1)))
        ));
    }

    #[test]
    fn delete_a1_vertex_leaves_nothing() {
        let config = build_ade(ade("A1"));
        assert!(delete_vertex(&config, Vertex(1)).unwrap().is_empty());
    }

    #[test]
    fn delete_d4_center_gives_three_points() {
        let config = build_ade(ade("D4"));
        let parts = delete_vertex(&config, Vertex(2)).unwrap();
        assert_eq!(parts.len(), 3);
        for part in &parts {
            assert_eq!(classify_tree(part).unwrap(), ade("A1"));
        }
        let ids: Vec<u32> = parts.iter().map(|p| p.vertices()[0].0).collect();
        assert_eq!(ids, vec![1, 3, 4]);
    }

    #[test]
    fn delete_e7_coefficient_three_vertex() {
        // Vertex 2 deleted from E7 splits into A1 and A5.
        let config = build_ade(ade("E7"));
        let parts = delete_vertex(&config, Vertex(2)).unwrap();
        let types: Vec<AdeType> = parts.iter().map(|p| classify_tree(p).unwrap()).collect();
        assert_eq!(types, vec![ade("A1"), ade("A5")]);
    }

    #[test]
    fn delete_unknown_vertex() {
        let config = build_ade(ade("A2"));
        assert!(matches!(
            delete_vertex(&config, Vertex(7)),
            Err(Error::UnknownVertex(Vertex(7)))
        ));
    }

    #[test]
    fn deletion_partitions_the_rest() {
        for t in ade_types_up_to(12) {
            let config = build_ade(t);
            for &v in config.vertices() {
                let parts = delete_vertex(&config, v).unwrap();
                let mut seen = BTreeSet::new();
                for part in &parts {
                    for &w in part.vertices() {
                        assert_ne!(w, v);
                        assert!(seen.insert(w), "{t}: vertex {w} in two components");
                        assert!(!part.has_edge(w, v));
                    }
                }
                assert_eq!(seen.len(), config.vertex_count() - 1);
            }
        }
    }

    #[test]
    fn describe_positions() {
        assert_eq!(describe_vertex(ade("A1"), Vertex(1)).unwrap(), "the only vertex");
        assert_eq!(
            describe_vertex(ade("D4"), Vertex(2)).unwrap(),
            "fork (trivalent) vertex"
        );
        assert_eq!(describe_vertex(ade("E8"), Vertex(3)).unwrap(), "trivalent vertex");
        assert!(describe_vertex(ade("A3"), Vertex(9)).is_err());
    }
}
