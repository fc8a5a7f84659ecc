//! JSON report shapes. Field order is declaration order.

use std::collections::BTreeMap;

use embedkit::enumerate::{Counterexample, Representative};
use embedkit::polyhedral::DualGraph;
use embedkit::{Certificate, Dart, EmbeddedGraph, FaceWalk, IntersectionKind, ProofAnchor};
use serde::Serialize;

#[derive(Serialize)]
pub struct Face {
    pub vertices: Vec<usize>,
    pub darts: Vec<[usize; 2]>,
}

impl From<&FaceWalk> for Face {
    fn from(face: &FaceWalk) -> Face {
        Face {
            vertices: face.vertex_cycle(),
            darts: face.darts().iter().map(|&d| dart(d)).collect(),
        }
    }
}

pub fn dart(d: Dart) -> [usize; 2] {
    [d.tail, d.head]
}

#[derive(Serialize)]
#[serde(tag = "kind")]
pub enum Intersection {
    Empty,
    OneVertex {
        vertex: usize,
    },
    OneEdge {
        edge: [usize; 2],
    },
    Violation {
        shared_vertices: Vec<usize>,
        shared_edges: Vec<[usize; 2]>,
    },
}

impl From<&IntersectionKind> for Intersection {
    fn from(kind: &IntersectionKind) -> Intersection {
        match kind {
            IntersectionKind::Empty => Intersection::Empty,
            IntersectionKind::OneVertex(v) => Intersection::OneVertex { vertex: *v },
            IntersectionKind::OneEdge(u, v) => Intersection::OneEdge { edge: [*u, *v] },
            IntersectionKind::Violation {
                shared_vertices,
                shared_edges,
            } => Intersection::Violation {
                shared_vertices: shared_vertices.iter().copied().collect(),
                shared_edges: shared_edges.iter().map(|&(u, v)| [u, v]).collect(),
            },
        }
    }
}

#[derive(Serialize)]
pub struct FacesReport {
    pub command: &'static str,
    pub inputs: Vec<String>,
    pub vertices: usize,
    pub edges: usize,
    pub faces: Vec<Face>,
}

#[derive(Serialize)]
pub struct GenusReport {
    pub command: &'static str,
    pub inputs: Vec<String>,
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub genus: usize,
}

#[derive(Serialize)]
#[serde(tag = "type")]
pub enum Violation {
    NonSimpleFace {
        face: Face,
    },
    BadPair {
        faces: [usize; 2],
        first: Face,
        second: Face,
        intersection: Intersection,
    },
}

#[derive(Serialize)]
pub struct CheckReport {
    pub command: &'static str,
    pub inputs: Vec<String>,
    pub polyhedral: bool,
    pub genus: usize,
    pub violation: Option<Violation>,
}

#[derive(Serialize)]
pub struct DualEdge {
    pub faces: [usize; 2],
    pub primal: [usize; 2],
}

#[derive(Serialize)]
pub struct DualReport {
    pub command: &'static str,
    pub inputs: Vec<String>,
    pub vertices: usize,
    pub edges: usize,
    pub loops: usize,
    pub parallel: usize,
    pub simple: bool,
    pub adjacency: Vec<DualEdge>,
}

impl DualReport {
    pub fn new(inputs: Vec<String>, dual: &DualGraph) -> DualReport {
        DualReport {
            command: "dual",
            inputs,
            vertices: dual.face_count,
            edges: dual.edges.len(),
            loops: dual.loop_count(),
            parallel: dual.parallel_count(),
            simple: dual.is_simple(),
            adjacency: dual
                .edges
                .iter()
                .map(|e| DualEdge {
                    faces: [e.faces.0, e.faces.1],
                    primal: [e.primal.0, e.primal.1],
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct CompareReport {
    pub command: &'static str,
    pub inputs: Vec<String>,
    pub relation: String,
    pub types: Vec<i8>,
}

#[derive(Serialize)]
#[serde(tag = "type")]
pub enum Anchor {
    Type2Vertex {
        vertex: usize,
        first_angle: [[usize; 2]; 2],
        second_angle: [[usize; 2]; 2],
    },
    MixedEdge {
        edge: [usize; 2],
    },
}

impl From<&ProofAnchor> for Anchor {
    fn from(anchor: &ProofAnchor) -> Anchor {
        match *anchor {
            ProofAnchor::Type2Vertex {
                vertex,
                first_angle,
                second_angle,
            } => Anchor::Type2Vertex {
                vertex,
                first_angle: [dart(first_angle.0), dart(first_angle.1)],
                second_angle: [dart(second_angle.0), dart(second_angle.1)],
            },
            ProofAnchor::MixedEdge { edge } => Anchor::MixedEdge { edge: dart(edge) },
        }
    }
}

#[derive(Serialize)]
#[serde(tag = "type")]
pub enum CertificateReport {
    NonSimpleFace {
        face: Face,
    },
    CrossingPair {
        first: Face,
        second: Face,
        intersection: Intersection,
    },
}

impl From<&Certificate> for CertificateReport {
    fn from(certificate: &Certificate) -> CertificateReport {
        match certificate {
            Certificate::NonSimpleFace(face) => CertificateReport::NonSimpleFace { face: face.into() },
            Certificate::CrossingPair { first, second, kind } => CertificateReport::CrossingPair {
                first: first.into(),
                second: second.into(),
                intersection: kind.into(),
            },
        }
    }
}

#[derive(Serialize)]
pub struct WitnessReport {
    pub command: &'static str,
    pub inputs: Vec<String>,
    pub anchor: Anchor,
    pub certificate: CertificateReport,
    pub verified: bool,
}

#[derive(Serialize)]
pub struct Embedding {
    pub index: Option<usize>,
    pub genus: usize,
    pub rotations: Vec<Vec<usize>>,
}

impl From<&Representative> for Embedding {
    fn from(r: &Representative) -> Embedding {
        Embedding {
            index: Some(r.index),
            genus: r.genus,
            rotations: r.embedding.rotations().to_vec(),
        }
    }
}

pub fn rotations(g: &EmbeddedGraph) -> Vec<Vec<usize>> {
    g.rotations().to_vec()
}

#[derive(Serialize)]
pub struct CensusReport {
    pub command: &'static str,
    pub inputs: Vec<String>,
    pub graph: String,
    pub total: usize,
    pub raw_by_genus: BTreeMap<usize, usize>,
    pub classes_by_genus: BTreeMap<usize, usize>,
    pub polyhedral_raw_by_genus: BTreeMap<usize, usize>,
    pub polyhedral_classes: usize,
    pub polyhedral_representatives: Vec<Embedding>,
}

#[derive(Serialize)]
pub struct CounterexampleReport {
    pub index: Option<usize>,
    pub genus: usize,
    pub reason: String,
    pub rotations: Vec<Vec<usize>>,
}

impl From<&Counterexample> for CounterexampleReport {
    fn from(c: &Counterexample) -> CounterexampleReport {
        CounterexampleReport {
            index: c.index,
            genus: c.genus,
            reason: c.reason.clone(),
            rotations: rotations(&c.embedding),
        }
    }
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub command: &'static str,
    pub inputs: Vec<String>,
    pub claim: String,
    pub pass: bool,
    pub systems: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polyhedral_class_genera: Option<Vec<usize>>,
    pub counterexample: Option<CounterexampleReport>,
}
