//! Polyhedrality: every face is a simple cycle and any two faces meet in
//! nothing, one vertex, or one edge. Also the dual multigraph, whose
//! simplicity is an independent test of the same property for cubic graphs.

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use crate::embedmap::{Dart, EmbeddedGraph, FaceWalk};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntersectionError {
    #[error("a face cannot be intersected with itself")]
    SameFace,
}

/// How two faces meet.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum IntersectionKind {
    Empty,
    OneVertex(usize),
    /// Endpoints of the shared edge, smaller first.
    OneEdge(usize, usize),
    Violation {
        shared_vertices: BTreeSet<usize>,
        shared_edges: BTreeSet<(usize, usize)>,
    },
}

impl IntersectionKind {
    pub fn is_violation(&self) -> bool {
        matches!(self, IntersectionKind::Violation { .. })
    }
}

/// A face walk is simple when it has at least three darts and never
/// revisits a vertex. Two-dart walks around a single edge are not cycles.
pub fn is_simple_face(face: &FaceWalk) -> bool {
    if face.len() < 3 {
        return false;
    }
    let vertices = face.vertex_set();
    vertices.len() == face.len()
}

pub fn face_intersection(a: &FaceWalk, b: &FaceWalk) -> Result<IntersectionKind, IntersectionError> {
    if a == b {
        return Err(IntersectionError::SameFace);
    }
    let shared_vertices: BTreeSet<usize> = a.vertex_set().intersection(&b.vertex_set()).copied().collect();
    let shared_edges: BTreeSet<(usize, usize)> = a.edge_set().intersection(&b.edge_set()).copied().collect();
    Ok(classify(shared_vertices, shared_edges))
}

fn classify(shared_vertices: BTreeSet<usize>, shared_edges: BTreeSet<(usize, usize)>) -> IntersectionKind {
    let vertices: Vec<usize> = shared_vertices.iter().copied().collect();
    match (vertices.as_slice(), shared_edges.len()) {
        ([], _) => IntersectionKind::Empty,
        ([v], _) => IntersectionKind::OneVertex(*v),
        ([u, v], 1) if shared_edges.contains(&(*u, *v)) => IntersectionKind::OneEdge(*u, *v),
        _ => IntersectionKind::Violation {
            shared_vertices,
            shared_edges,
        },
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyhedralViolation {
    NonSimpleFace(FaceWalk),
    /// Indices into the canonical face list, smaller first.
    BadPair {
        first: usize,
        second: usize,
        kind: IntersectionKind,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyhedralVerdict {
    pub violation: Option<PolyhedralViolation>,
}

impl PolyhedralVerdict {
    pub fn polyhedral(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks all faces for simplicity first, then all face pairs in
/// lexicographic index order, and reports the first problem found.
pub fn check_polyhedral(g: &EmbeddedGraph) -> PolyhedralVerdict {
    let faces = g.faces();
    check_faces(&faces)
}

pub fn check_faces(faces: &[FaceWalk]) -> PolyhedralVerdict {
    if let Some(face) = faces.iter().find(|f| !is_simple_face(f)) {
        return PolyhedralVerdict {
            violation: Some(PolyhedralViolation::NonSimpleFace(face.clone())),
        };
    }
    let vertex_sets: Vec<BTreeSet<usize>> = faces.iter().map(FaceWalk::vertex_set).collect();
    let edge_sets: Vec<BTreeSet<(usize, usize)>> = faces.iter().map(FaceWalk::edge_set).collect();
    for i in 0..faces.len() {
        for j in i + 1..faces.len() {
            let shared_vertices: BTreeSet<usize> = vertex_sets[i].intersection(&vertex_sets[j]).copied().collect();
            if shared_vertices.len() < 2 {
                continue;
            }
            let shared_edges = edge_sets[i].intersection(&edge_sets[j]).copied().collect();
            let kind = classify(shared_vertices, shared_edges);
            if kind.is_violation() {
                return PolyhedralVerdict {
                    violation: Some(PolyhedralViolation::BadPair {
                        first: i,
                        second: j,
                        kind,
                    }),
                };
            }
        }
    }
    PolyhedralVerdict { violation: None }
}

/// One dual edge per primal edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualEdge {
    /// The primal edge `(u, v)`, `u < v`.
    pub primal: (usize, usize),
    /// Face indices on the two sides, smaller first; equal for a loop.
    pub faces: (usize, usize),
}

impl DualEdge {
    pub fn is_loop(&self) -> bool {
        self.faces.0 == self.faces.1
    }
}

/// The dual multigraph: faces become vertices, primal edges become edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualGraph {
    pub face_count: usize,
    pub edges: Vec<DualEdge>,
}

impl DualGraph {
    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|e| e.is_loop()).count()
    }

    /// Number of non-loop edges that share both end faces with another edge.
    pub fn parallel_count(&self) -> usize {
        self.multiplicities()
            .into_iter()
            .filter(|&((a, b), count)| a != b && count > 1)
            .map(|(_, count)| count)
            .sum()
    }

    /// Edge multiplicity per unordered face pair, loops included.
    pub fn multiplicities(&self) -> Vec<((usize, usize), usize)> {
        let mut counts: std::collections::BTreeMap<(usize, usize), usize> = Default::default();
        for e in &self.edges {
            *counts.entry(e.faces).or_default() += 1;
        }
        counts.into_iter().collect()
    }

    pub fn is_simple(&self) -> bool {
        self.loop_count() == 0 && self.parallel_count() == 0
    }
}

pub fn build_dual(g: &EmbeddedGraph) -> DualGraph {
    let faces = g.faces();
    let mut face_of: HashMap<Dart, usize> = HashMap::with_capacity(g.dart_count());
    for (index, face) in faces.iter().enumerate() {
        for &d in face.darts() {
            face_of.insert(d, index);
        }
    }
    let edges = g
        .edges()
        .into_iter()
        .map(|(u, v)| {
            let left = face_of[&Dart::new(u, v)];
            let right = face_of[&Dart::new(v, u)];
            DualEdge {
                primal: (u, v),
                faces: (left.min(right), left.max(right)),
            }
        })
        .collect();
    DualGraph {
        face_count: faces.len(),
        edges,
    }
}

pub fn dual_is_simple(g: &EmbeddedGraph) -> bool {
    build_dual(g).is_simple()
}
