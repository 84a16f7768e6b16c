//! Combinatorics of the supersingular loci: a finite truncation of the
//! biregular tree underlying the building of the adjoint inner form, the
//! bipartite incidence model of irreducible components and superspecial
//! points, the fiber cardinalities of the two Hecke correspondences, their
//! characteristic-zero degrees, and the contraction identifying singular
//! points with components.

use crate::local_reps::is_prime;
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SsLocusError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("interior vertex {vertex} has valency {got}, expected {expected}")]
    ValencyViolation {
        vertex: usize,
        got: usize,
        expected: usize,
    },
    #[error("edge ({a},{b}) joins two vertices of the same kind")]
    NotBipartite { a: usize, b: usize },
    #[error("edge endpoint {index} out of range")]
    EdgeOutOfRange { index: usize },
}

/// First-kind vertices carry the irreducible components (valency p^2+1),
/// second-kind vertices the superspecial points (valency p+1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexKind {
    First,
    Second,
}

impl VertexKind {
    pub fn other(self) -> VertexKind {
        match self {
            VertexKind::First => VertexKind::Second,
            VertexKind::Second => VertexKind::First,
        }
    }
}

impl fmt::Display for VertexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexKind::First => write!(f, "first"),
            VertexKind::Second => write!(f, "second"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeVertex {
    pub id: usize,
    pub kind: VertexKind,
    pub depth: usize,
}

/// A radius-truncated biregular tree: first-kind vertices have valency
/// p^2+1, second-kind vertices valency p+1, and every edge joins the two
/// kinds. Vertices at full depth are boundary vertices and exempt from the
/// valency rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiregularTree {
    p: u64,
    radius: usize,
    root: usize,
    vertices: Vec<TreeVertex>,
    adjacency: Vec<Vec<usize>>,
}

impl BiregularTree {
    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|n| n.len()).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> &[TreeVertex] {
        &self.vertices
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn is_interior(&self, v: usize) -> bool {
        self.vertices[v].depth < self.radius
    }

    pub fn valency_target(&self, kind: VertexKind) -> usize {
        match kind {
            VertexKind::First => (self.p * self.p + 1) as usize,
            VertexKind::Second => (self.p + 1) as usize,
        }
    }

    /// Verifies bipartiteness on every edge and the exact valency at every
    /// interior vertex.
    pub fn check_invariants(&self) -> Result<(), SsLocusError> {
        for v in &self.vertices {
            for &w in &self.adjacency[v.id] {
                if self.vertices[w].kind == v.kind {
                    return Err(SsLocusError::NotBipartite { a: v.id, b: w });
                }
            }
            if self.is_interior(v.id) {
                let expected = self.valency_target(v.kind);
                let got = self.adjacency[v.id].len();
                if got != expected {
                    return Err(SsLocusError::ValencyViolation {
                        vertex: v.id,
                        got,
                        expected,
                    });
                }
            }
        }
        Ok(())
    }

    /// GraphViz rendering, deterministic vertex and edge order.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph biregular_tree {\n");
        for v in &self.vertices {
            let shape = match v.kind {
                VertexKind::First => "box",
                VertexKind::Second => "circle",
            };
            out.push_str(&format!(
                "  v{} [shape={shape}, label=\"{}{}\"];\n",
                v.id,
                match v.kind {
                    VertexKind::First => "N",
                    VertexKind::Second => "M",
                },
                v.id
            ));
        }
        for v in &self.vertices {
            for &w in &self.adjacency[v.id] {
                if v.id < w {
                    out.push_str(&format!("  v{} -- v{};\n", v.id, w));
                }
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct TreeJson<'a> {
            p: u64,
            radius: usize,
            root: usize,
            vertices: &'a [TreeVertex],
            edges: Vec<(usize, usize)>,
        }
        let mut edges = Vec::new();
        for v in &self.vertices {
            for &w in &self.adjacency[v.id] {
                if v.id < w {
                    edges.push((v.id, w));
                }
            }
        }
        serde_json::to_string(&TreeJson {
            p: self.p,
            radius: self.radius,
            root: self.root,
            vertices: &self.vertices,
            edges,
        })
        .expect("serializable")
    }
}

/// Breadth-first truncation of the (p^2+1, p+1)-biregular tree.
pub fn build_tree(
    p: u64,
    root_kind: VertexKind,
    radius: usize,
) -> Result<BiregularTree, SsLocusError> {
    if !is_prime(p) {
        return Err(SsLocusError::NotPrime(p));
    }
    let mut tree = BiregularTree {
        p,
        radius,
        root: 0,
        vertices: vec![TreeVertex {
            id: 0,
            kind: root_kind,
            depth: 0,
        }],
        adjacency: vec![Vec::new()],
    };
    let mut frontier = vec![0usize];
    for depth in 1..=radius {
        let mut next = Vec::new();
        for &v in &frontier {
            let kind = tree.vertices[v].kind;
            let child_kind = kind.other();
            let target = tree.valency_target(kind);
            let children = target - tree.adjacency[v].len();
            for _ in 0..children {
                let id = tree.vertices.len();
                tree.vertices.push(TreeVertex {
                    id,
                    kind: child_kind,
                    depth,
                });
                tree.adjacency.push(vec![v]);
                tree.adjacency[v].push(id);
                next.push(id);
            }
        }
        frontier = next;
    }
    Ok(tree)
}

/// Ekedahl-Oort strata for fibers of the first correspondence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EoStratumA {
    Ordinary,
    PRankOne,
    SupersingularNotSuperspecial,
    Superspecial,
}

/// Kernel-type strata for fibers of the second correspondence, tagged by the
/// p-torsion of the polarization kernel (or the ambient p-torsion in the
/// supersingular-not-superspecial case).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EoStratumB {
    MuPTimesZModP,
    I11,
    AlphaPTimesAlphaP,
    I21Ambient,
}

/// A fiber is either a finite set of reduced points or a projective line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiberSize {
    Points(u64),
    ProjectiveLine,
}

impl FiberSize {
    pub fn finite(&self) -> Option<u64> {
        match self {
            FiberSize::Points(n) => Some(*n),
            FiberSize::ProjectiveLine => None,
        }
    }
}

impl fmt::Display for FiberSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiberSize::Points(n) => write!(f, "{n}"),
            FiberSize::ProjectiveLine => write!(f, "P1"),
        }
    }
}

impl Serialize for FiberSize {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            FiberSize::Points(n) => serializer.serialize_u64(*n),
            FiberSize::ProjectiveLine => serializer.serialize_str("P1"),
        }
    }
}

/// Reduced fiber of the first correspondence over a point in the given
/// stratum: 2(p+1) ordinary points, 3 at p-rank one, 1 at supersingular but
/// not superspecial, and a projective line over a superspecial point.
pub fn fiber_card_a(stratum: EoStratumA, p: u64) -> Result<FiberSize, SsLocusError> {
    if !is_prime(p) {
        return Err(SsLocusError::NotPrime(p));
    }
    Ok(match stratum {
        EoStratumA::Ordinary => FiberSize::Points(2 * (p + 1)),
        EoStratumA::PRankOne => FiberSize::Points(3),
        EoStratumA::SupersingularNotSuperspecial => FiberSize::Points(1),
        EoStratumA::Superspecial => FiberSize::ProjectiveLine,
    })
}

/// Reduced fiber of the second correspondence: two points over p-rank two or
/// one, a single point over supersingular points outside the singular locus,
/// and a projective line over the singular locus.
pub fn fiber_card_b(stratum: EoStratumB, p: u64) -> Result<FiberSize, SsLocusError> {
    if !is_prime(p) {
        return Err(SsLocusError::NotPrime(p));
    }
    Ok(match stratum {
        EoStratumB::MuPTimesZModP => FiberSize::Points(2),
        EoStratumB::I11 => FiberSize::Points(1),
        EoStratumB::I21Ambient => FiberSize::Points(1),
        EoStratumB::AlphaPTimesAlphaP => FiberSize::ProjectiveLine,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Correspondence {
    A,
    B,
}

/// Degree of the correspondence in characteristic zero: the number of order-p
/// subgroup schemes of (Z/p)^4 for the first map, of (Z/p)^2 for the second.
pub fn generic_degree(correspondence: Correspondence, p: u64) -> Result<u64, SsLocusError> {
    if !is_prime(p) {
        return Err(SsLocusError::NotPrime(p));
    }
    Ok(match correspondence {
        Correspondence::A => p * p * p + p * p + p + 1,
        Correspondence::B => p + 1,
    })
}

/// Bipartite incidence geometry: irreducible components against superspecial
/// points. Multedges are permitted; models derived from a tree are simple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncidenceModel {
    pub p: u64,
    pub components: Vec<String>,
    pub superspecial_points: Vec<String>,
    /// (component index, point index) pairs.
    pub incidence: Vec<(usize, usize)>,
    pub interior_components: Vec<bool>,
    pub interior_points: Vec<bool>,
}

impl IncidenceModel {
    /// Free-standing model with every vertex marked interior.
    pub fn new(
        p: u64,
        components: Vec<String>,
        superspecial_points: Vec<String>,
        incidence: Vec<(usize, usize)>,
    ) -> Result<Self, SsLocusError> {
        if !is_prime(p) {
            return Err(SsLocusError::NotPrime(p));
        }
        for &(c, m) in &incidence {
            if c >= components.len() {
                return Err(SsLocusError::EdgeOutOfRange { index: c });
            }
            if m >= superspecial_points.len() {
                return Err(SsLocusError::EdgeOutOfRange { index: m });
            }
        }
        let interior_components = vec![true; components.len()];
        let interior_points = vec![true; superspecial_points.len()];
        Ok(IncidenceModel {
            p,
            components,
            superspecial_points,
            incidence,
            interior_components,
            interior_points,
        })
    }

    pub fn component_degree(&self, i: usize) -> usize {
        self.incidence.iter().filter(|&&(c, _)| c == i).count()
    }

    pub fn point_degree(&self, j: usize) -> usize {
        self.incidence.iter().filter(|&&(_, m)| m == j).count()
    }

    /// Every interior superspecial point lies on exactly p+1 components,
    /// every interior component carries exactly p^2+1 superspecial points.
    pub fn check_interior_valencies(&self) -> Result<(), SsLocusError> {
        for (i, interior) in self.interior_components.iter().enumerate() {
            if *interior {
                let got = self.component_degree(i);
                let expected = (self.p * self.p + 1) as usize;
                if got != expected {
                    return Err(SsLocusError::ValencyViolation {
                        vertex: i,
                        got,
                        expected,
                    });
                }
            }
        }
        for (j, interior) in self.interior_points.iter().enumerate() {
            if *interior {
                let got = self.point_degree(j);
                let expected = (self.p + 1) as usize;
                if got != expected {
                    return Err(SsLocusError::ValencyViolation {
                        vertex: j,
                        got,
                        expected,
                    });
                }
            }
        }
        Ok(())
    }

    /// Total incidence counted from the component side and from the point
    /// side; both always equal the edge count.
    pub fn handshake(&self) -> (usize, usize) {
        let from_components: usize = (0..self.components.len())
            .map(|i| self.component_degree(i))
            .sum();
        let from_points: usize = (0..self.superspecial_points.len())
            .map(|j| self.point_degree(j))
            .sum();
        (from_components, from_points)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph incidence {\n");
        for (i, label) in self.components.iter().enumerate() {
            out.push_str(&format!("  c{i} [shape=box, label=\"{label}\"];\n"));
        }
        for (j, label) in self.superspecial_points.iter().enumerate() {
            out.push_str(&format!("  m{j} [shape=circle, label=\"{label}\"];\n"));
        }
        for &(c, m) in &self.incidence {
            out.push_str(&format!("  c{c} -- m{m};\n"));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

/// Components become first-kind vertices, superspecial points second-kind
/// vertices, incidence is the edge relation.
pub fn incidence_from_tree(tree: &BiregularTree) -> IncidenceModel {
    let mut components = Vec::new();
    let mut points = Vec::new();
    let mut comp_index = vec![usize::MAX; tree.vertex_count()];
    let mut point_index = vec![usize::MAX; tree.vertex_count()];
    let mut interior_components = Vec::new();
    let mut interior_points = Vec::new();
    for v in tree.vertices() {
        match v.kind {
            VertexKind::First => {
                comp_index[v.id] = components.len();
                components.push(format!("N{}", v.id));
                interior_components.push(tree.is_interior(v.id));
            }
            VertexKind::Second => {
                point_index[v.id] = points.len();
                points.push(format!("M{}", v.id));
                interior_points.push(tree.is_interior(v.id));
            }
        }
    }
    let mut incidence = Vec::new();
    for v in tree.vertices() {
        if v.kind == VertexKind::First {
            for &w in tree.neighbors(v.id) {
                incidence.push((comp_index[v.id], point_index[w]));
            }
        }
    }
    IncidenceModel {
        p: tree.prime(),
        components,
        superspecial_points: points,
        incidence,
        interior_components,
        interior_points,
    }
}

/// The singular locus of the paramodular model after contracting the
/// component family: one singular point per component, superspecial points
/// untouched.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SingularLocusModel {
    /// Labels of the singular points, in bijection with the components.
    pub sigma: Vec<String>,
    /// The untouched superspecial labels.
    pub superspecial_points: Vec<String>,
    /// Pairwise disjointness of the contracted family, read off from
    /// bipartiteness of the incidence model.
    pub e_components_pairwise_disjoint: bool,
}

impl SingularLocusModel {
    pub fn sigma_size(&self) -> usize {
        self.sigma.len()
    }
}

/// Contract the component family to points: the singular points are in
/// bijection with the component set.
pub fn contract_e(model: &IncidenceModel) -> SingularLocusModel {
    SingularLocusModel {
        sigma: model.components.clone(),
        superspecial_points: model.superspecial_points.clone(),
        // components only ever meet superspecial points in the bipartite
        // model, never each other
        e_components_pairwise_disjoint: true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_counts_radius_one() {
        let t = build_tree(2, VertexKind::First, 1).unwrap();
        assert_eq!(t.vertex_count(), 6); // 1 + (p^2+1)
        assert_eq!(t.edge_count(), 5);
        t.check_invariants().unwrap();

        let t = build_tree(3, VertexKind::Second, 1).unwrap();
        assert_eq!(t.vertex_count(), 5); // 1 + (p+1)
        t.check_invariants().unwrap();
    }

    #[test]
    fn tree_radius_zero() {
        let t = build_tree(5, VertexKind::First, 0).unwrap();
        assert_eq!(t.vertex_count(), 1);
        assert_eq!(t.edge_count(), 0);
        t.check_invariants().unwrap();
    }

    #[test]
    fn tree_rejects_non_prime() {
        assert!(matches!(
            build_tree(4, VertexKind::First, 1),
            Err(SsLocusError::NotPrime(4))
        ));
    }

    #[test]
    fn tree_invariants_hold_deeper() {
        // deep truncations for small p, shallow ones for larger p to keep
        // the vertex counts in the tens of thousands
        let matrix: &[(u64, usize)] = &[(2, 5), (3, 5), (5, 3), (7, 2)];
        for &(p, max_radius) in matrix {
            for radius in 0..=max_radius {
                for kind in [VertexKind::First, VertexKind::Second] {
                    let t = build_tree(p, kind, radius).unwrap();
                    t.check_invariants().unwrap();
                    incidence_from_tree(&t).check_interior_valencies().unwrap();
                }
            }
        }
    }

    #[test]
    fn fiber_tables() {
        assert_eq!(
            fiber_card_a(EoStratumA::Ordinary, 3).unwrap(),
            FiberSize::Points(8)
        );
        assert_eq!(
            fiber_card_a(EoStratumA::PRankOne, 7).unwrap(),
            FiberSize::Points(3)
        );
        assert_eq!(
            fiber_card_a(EoStratumA::SupersingularNotSuperspecial, 5).unwrap(),
            FiberSize::Points(1)
        );
        assert_eq!(
            fiber_card_a(EoStratumA::Superspecial, 2).unwrap(),
            FiberSize::ProjectiveLine
        );
        assert_eq!(
            fiber_card_b(EoStratumB::MuPTimesZModP, 3).unwrap(),
            FiberSize::Points(2)
        );
        assert_eq!(
            fiber_card_b(EoStratumB::I11, 3).unwrap(),
            FiberSize::Points(1)
        );
        assert_eq!(
            fiber_card_b(EoStratumB::I21Ambient, 3).unwrap(),
            FiberSize::Points(1)
        );
        assert_eq!(
            fiber_card_b(EoStratumB::AlphaPTimesAlphaP, 3).unwrap(),
            FiberSize::ProjectiveLine
        );
    }

    #[test]
    fn degrees_and_factorization() {
        assert_eq!(generic_degree(Correspondence::A, 2).unwrap(), 15);
        assert_eq!(generic_degree(Correspondence::B, 5).unwrap(), 6);
        for p in [2u64, 3, 5, 7, 11] {
            let d = generic_degree(Correspondence::A, p).unwrap();
            assert_eq!(d, (p * p + 1) * (p + 1));
        }
    }

    #[test]
    fn incidence_from_tree_valencies() {
        let t = build_tree(2, VertexKind::First, 2).unwrap();
        let model = incidence_from_tree(&t);
        model.check_interior_valencies().unwrap();
        // each interior superspecial point lies on exactly p+1 = 3 components
        for (j, interior) in model.interior_points.iter().enumerate() {
            if *interior {
                assert_eq!(model.point_degree(j), 3);
            }
        }
        let (a, b) = model.handshake();
        assert_eq!(a, b);
        assert_eq!(a, model.incidence.len());
    }

    #[test]
    fn incidence_radius_zero_first_root() {
        let t = build_tree(3, VertexKind::First, 0).unwrap();
        let model = incidence_from_tree(&t);
        assert_eq!(model.components.len(), 1);
        assert_eq!(model.superspecial_points.len(), 0);
    }

    #[test]
    fn contraction_is_a_bijection() {
        let t = build_tree(2, VertexKind::First, 2).unwrap();
        let model = incidence_from_tree(&t);
        let sing = contract_e(&model);
        assert_eq!(sing.sigma_size(), model.components.len());
        assert_eq!(sing.superspecial_points, model.superspecial_points);
        assert!(sing.e_components_pairwise_disjoint);
        // deterministic: a second contraction yields the same point set
        assert_eq!(contract_e(&model), sing);
    }

    #[test]
    fn free_standing_model() {
        let model = IncidenceModel::new(
            2,
            (0..7).map(|i| format!("N{i}")).collect(),
            vec!["M0".into()],
            vec![(0, 0), (1, 0), (2, 0)],
        )
        .unwrap();
        let sing = contract_e(&model);
        assert_eq!(sing.sigma_size(), 7);
        // multigraph allowed
        let multi = IncidenceModel::new(
            2,
            vec!["N0".into()],
            vec!["M0".into()],
            vec![(0, 0), (0, 0)],
        )
        .unwrap();
        assert_eq!(multi.component_degree(0), 2);
    }

    #[test]
    fn fiber_counts_bounded_by_generic_degree() {
        for p in [2u64, 3, 5, 7, 11] {
            let deg = generic_degree(Correspondence::A, p).unwrap();
            for s in [
                EoStratumA::Ordinary,
                EoStratumA::PRankOne,
                EoStratumA::SupersingularNotSuperspecial,
            ] {
                let n = fiber_card_a(s, p).unwrap().finite().unwrap();
                assert!(n <= deg);
            }
        }
    }

    #[test]
    fn dot_exports() {
        let t = build_tree(2, VertexKind::First, 1).unwrap();
        let dot = t.to_dot();
        assert!(dot.starts_with("graph biregular_tree {"));
        assert_eq!(dot.matches(" -- ").count(), t.edge_count());
        let model = incidence_from_tree(&t);
        assert!(model.to_dot().contains("c0 -- m0;"));
    }
}
