//! Marked diagrams and the combinatorics of the contraction that keeps a
//! single exceptional curve.
//!
//! A marked diagram is an ADE configuration with a distinguished vertex,
//! the strict transform of the contracted curve. Its length is the
//! fundamental-cycle multiplicity there. Deleting the marked vertex
//! decomposes the diagram into the sub-diagrams sitting over the singular
//! points of the intermediate surface; each gets its own fundamental
//! cycle, recomputed on the sub-configuration (never restricted from the
//! ambient cycle, which is a different vector).

use std::collections::BTreeMap;

use crate::cycle::Cycle;
use crate::diagram::{
    AdeType, CurveConfiguration, Family, Vertex, build_ade, classify_tree, delete_vertex,
};
use crate::error::Error;
use crate::fundcycle::laufer_fundamental_cycle;

/// An ADE configuration with a marked vertex and its length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedDiagram {
    ade_type: AdeType,
    marked_vertex: Vertex,
    config: CurveConfiguration,
    fundamental_cycle: Cycle,
    length: i64,
}

impl MarkedDiagram {
    pub fn ade_type(&self) -> AdeType {
        self.ade_type
    }

    pub fn marked_vertex(&self) -> Vertex {
        self.marked_vertex
    }

    pub fn config(&self) -> &CurveConfiguration {
        &self.config
    }

    pub fn fundamental_cycle(&self) -> &Cycle {
        &self.fundamental_cycle
    }

    /// Multiplicity of the fundamental cycle at the marked vertex.
    pub fn length(&self) -> i64 {
        self.length
    }
}

/// Where the residual divisor of the total transform meets the diagram.
///
/// The residual part is reduced and meets the configuration transversally
/// at the vertices where the fundamental cycle pairs strictly negatively;
/// the incidence count at such a vertex is minus that pairing. For `A(n)`
/// with n >= 2 these are the two chain ends (count 1 each); for `A(1)` the
/// single vertex carries count 2; for D and E there is a single attachment
/// vertex of multiplicity 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionData {
    pub attach_points: Vec<(Vertex, i64)>,
    /// Total incidence count: the number of residual branches (2 for the
    /// A family, 1 otherwise).
    pub branch_count: i64,
}

/// One connected piece of the diagram after deleting the marked vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionComponent {
    pub config: CurveConfiguration,
    pub ade_type: AdeType,
    /// Fundamental cycle of this component in its own right.
    pub fundamental_cycle: Cycle,
    /// Vertices of this component adjacent to the marked vertex in the
    /// parent diagram.
    pub marked_neighbors: Vec<Vertex>,
    /// Parent attachment points that land inside this component.
    pub attach_points: Vec<(Vertex, i64)>,
}

/// The decomposition of a marked diagram: components ordered by smallest
/// original vertex identifier, plus the parent's section data. Attachment
/// points at the marked vertex itself belong to no component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialResolution {
    pub parent: MarkedDiagram,
    pub section: SectionData,
    pub components: Vec<ResolutionComponent>,
}

impl PartialResolution {
    /// The intersection multiplicity at the component's singular point:
    /// `length * sum of F_i over neighbors of the marked vertex` plus the
    /// residual incidences weighted by `F_i`.
    pub fn d_multiplicity(&self, index: usize) -> Result<i64, Error> {
        let component = self.component(index)?;
        let length = self.parent.length();
        let neighbor_term: i64 = component
            .marked_neighbors
            .iter()
            .map(|&v| component.fundamental_cycle.coefficient(v))
            .sum();
        let attach_term: i64 = component
            .attach_points
            .iter()
            .map(|&(v, count)| count * component.fundamental_cycle.coefficient(v))
            .sum();
        Ok(length * neighbor_term + attach_term)
    }

    /// Chain ends of an A-family component, with their multiplicities in
    /// the parent diagram's fundamental cycle. A single entry for `A(1)`.
    pub fn end_component_multiplicities(&self, index: usize) -> Result<Vec<(Vertex, i64)>, Error> {
        let component = self.component(index)?;
        if component.ade_type.family() != Family::A {
            return Err(Error::NotAChainComponent {
                index,
                ade_type: component.ade_type,
            });
        }
        let parent_cycle = self.parent.fundamental_cycle();
        Ok(component
            .config
            .vertices()
            .iter()
            .copied()
            .filter(|&v| component.config.degree(v) <= 1)
            .map(|v| (v, parent_cycle.coefficient(v)))
            .collect())
    }

    pub fn component(&self, index: usize) -> Result<&ResolutionComponent, Error> {
        self.components.get(index).ok_or(Error::ComponentIndex {
            index,
            count: self.components.len(),
        })
    }
}

/// Assemble the marked diagram for `t` with the mark at `k0`.
pub fn mark(t: AdeType, marked_vertex: Vertex) -> Result<MarkedDiagram, Error> {
    let config = build_ade(t);
    if !config.contains(marked_vertex) {
        return Err(Error::UnknownVertex(marked_vertex));
    }
    let fundamental_cycle = laufer_fundamental_cycle(&config)
        .expect("ADE diagrams are connected and negative definite")
        .result;
    let length = fundamental_cycle.coefficient(marked_vertex);
    Ok(MarkedDiagram {
        ade_type: t,
        marked_vertex,
        config,
        fundamental_cycle,
        length,
    })
}

/// All marked diagrams of the given length over `A(1..=max_rank)`,
/// `D(4..=max_rank)` and `E(6..8)`, up to diagram automorphism. Orbit
/// representatives are the smallest vertex identifiers; output order is
/// the family scan order with ascending representatives.
pub fn enumerate_marked(length: i64, max_rank: u32) -> Result<Vec<MarkedDiagram>, Error> {
    if length < 1 {
        return Err(Error::NonPositiveLength(length));
    }
    if max_rank < 8 {
        return Err(Error::MaxRankTooSmall(max_rank));
    }
    let mut found = Vec::new();
    for t in crate::diagram::ade_types_up_to(max_rank) {
        let cycle = crate::fundcycle::ade_fundamental_cycle(t);
        for orbit in vertex_orbits(t) {
            let representative = orbit[0];
            if cycle.coefficient(representative) == length {
                found.push(mark(t, representative)?);
            }
        }
    }
    Ok(found)
}

/// Attachment data of the residual divisor on an ADE configuration.
pub fn attachment_points(config: &CurveConfiguration) -> Result<SectionData, Error> {
    classify_tree(config)?;
    let cycle = laufer_fundamental_cycle(config)?.result;
    let mut attach_points = Vec::new();
    let mut branch_count = 0;
    for &v in config.vertices() {
        let pairing = cycle.pairing_with_unit(v)?;
        if pairing < 0 {
            attach_points.push((v, -pairing));
            branch_count += -pairing;
        }
    }
    Ok(SectionData {
        attach_points,
        branch_count,
    })
}

/// Decompose a marked diagram into its components, classifying each and
/// recomputing its fundamental cycle from scratch.
pub fn partial_resolution(marked: &MarkedDiagram) -> PartialResolution {
    let section =
        attachment_points(marked.config()).expect("marked diagrams are built on ADE configurations");
    let pieces = delete_vertex(marked.config(), marked.marked_vertex())
        .expect("marked vertex belongs to the configuration");
    let components = pieces
        .into_iter()
        .map(|config| {
            let ade_type = classify_tree(&config)
                .expect("a connected subgraph of an ADE tree is again ADE");
            let fundamental_cycle = laufer_fundamental_cycle(&config)
                .expect("subconfigurations stay connected and negative definite")
                .result;
            let marked_neighbors = config
                .vertices()
                .iter()
                .copied()
                .filter(|&v| marked.config().has_edge(v, marked.marked_vertex()))
                .collect();
            let attach_points = section
                .attach_points
                .iter()
                .copied()
                .filter(|&(v, _)| config.contains(v))
                .collect();
            ResolutionComponent {
                config,
                ade_type,
                fundamental_cycle,
                marked_neighbors,
                attach_points,
            }
        })
        .collect();
    PartialResolution {
        parent: marked.clone(),
        section,
        components,
    }
}

/// Convenience form of [`PartialResolution::d_multiplicity`].
pub fn d_multiplicity(marked: &MarkedDiagram, index: usize) -> Result<i64, Error> {
    partial_resolution(marked).d_multiplicity(index)
}

/// Convenience form of [`PartialResolution::end_component_multiplicities`].
pub fn end_component_multiplicities(
    marked: &MarkedDiagram,
    index: usize,
) -> Result<Vec<(Vertex, i64)>, Error> {
    partial_resolution(marked).end_component_multiplicities(index)
}

/// Generators of the diagram automorphism group under the canonical
/// labeling: the reflection for `A(n)`, the leaf permutations for `D(4)`,
/// the fork-leaf swap for `D(n >= 5)`, and the arm reflection for `E6`.
/// `E7`, `E8` and `A(1)` are rigid.
pub fn automorphism_generators(t: AdeType) -> Vec<BTreeMap<Vertex, Vertex>> {
    let n = t.rank();
    let identity = || -> BTreeMap<Vertex, Vertex> {
        (1..=n).map(|i| (Vertex(i), Vertex(i))).collect()
    };
    let swap = |pairs: &[(u32, u32)]| {
        let mut map = identity();
        for &(a, b) in pairs {
            map.insert(Vertex(a), Vertex(b));
            map.insert(Vertex(b), Vertex(a));
        }
        map
    };
    match t.family() {
        Family::A => {
            if n == 1 {
                vec![]
            } else {
                let pairs: Vec<(u32, u32)> =
                    (1..=n / 2).map(|i| (i, n + 1 - i)).collect();
                vec![swap(&pairs)]
            }
        }
        Family::D => {
            if n == 4 {
                vec![swap(&[(1, 3)]), swap(&[(3, 4)])]
            } else {
                vec![swap(&[(n - 1, n)])]
            }
        }
        Family::E => {
            if n == 6 {
                vec![swap(&[(1, 5), (2, 4)])]
            } else {
                vec![]
            }
        }
    }
}

/// Vertex orbits under the full automorphism group, each sorted, ordered
/// by smallest member.
pub fn vertex_orbits(t: AdeType) -> Vec<Vec<Vertex>> {
    let n = t.rank();
    let generators = automorphism_generators(t);
    // Union-find over 1..=n.
    let mut parent: Vec<usize> = (0..=n as usize).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let root = find(parent, parent[i]);
            parent[i] = root;
        }
        parent[i]
    }
    for generator in &generators {
        for (&from, &to) in generator {
            let a = find(&mut parent, from.0 as usize);
            let b = find(&mut parent, to.0 as usize);
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut orbits: BTreeMap<usize, Vec<Vertex>> = BTreeMap::new();
    for i in 1..=n as usize {
        let root = find(&mut parent, i);
        orbits.entry(root).or_default().push(Vertex(i as u32));
    }
    orbits.into_values().collect()
}
