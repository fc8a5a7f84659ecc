//! Certificates that an embedding of a 3-connected planar graph which is
//! neither the plane embedding nor its mirror is not polyhedral.
//!
//! The construction compares the candidate with the plane reference vertex
//! by vertex. If some vertex has a rotation that is neither the reference's
//! nor its reversal, two candidate angles at that vertex are found whose
//! faces cross there; otherwise an edge joins a vertex with the reference
//! rotation to one with the reversed rotation, and the two faces along that
//! edge cross. In both cases the faces are closed curves in the plane
//! reference that cross once, so they must meet again, and the candidate
//! fails the polyhedral intersection rule.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::compare::{classify_types, equivalent, vertex_type, CompareError, VertexType};
use crate::embedmap::{Dart, DartError, EmbeddedGraph, FaceWalk};
use crate::enumerate::is_three_connected;
use crate::polyhedral::{check_polyhedral, face_intersection, is_simple_face, IntersectionKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Precondition {
    NotPlane,
    NotPolyhedralRef,
    Not3Connected,
    UnderlyingMismatch,
}

impl fmt::Display for Precondition {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str(match self {
            Precondition::NotPlane => "reference is not plane",
            Precondition::NotPolyhedralRef => "reference is not polyhedral",
            Precondition::Not3Connected => "graph is not 3-connected",
            Precondition::UnderlyingMismatch => "embeddings are over different labeled graphs",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("candidate is equivalent to the reference")]
    EquivalentInput,
    #[error("precondition failed: {0}")]
    PreconditionFailed(Precondition),
    /// The construction did not produce a valid certificate. Never expected.
    #[error("witness construction failed: {0}")]
    Internal(String),
}

impl From<CompareError> for WitnessError {
    fn from(err: CompareError) -> WitnessError {
        match err {
            CompareError::UnderlyingMismatch => WitnessError::PreconditionFailed(Precondition::UnderlyingMismatch),
            CompareError::LowDegree { .. } => WitnessError::PreconditionFailed(Precondition::Not3Connected),
        }
    }
}

/// An angle of the candidate: `second` follows `first` clockwise.
pub type Angle = (Dart, Dart);

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProofAnchor {
    /// A vertex typed 2, with two candidate angles that interleave in the reference.
    Type2Vertex {
        vertex: usize,
        first_angle: Angle,
        second_angle: Angle,
    },
    /// `edge` runs from a vertex typed +1 to a vertex typed −1.
    MixedEdge { edge: Dart },
}

impl ProofAnchor {
    /// Dart runs that the first and second crossing faces of the candidate must contain.
    pub fn face_runs(&self, reference: &EmbeddedGraph) -> Result<(Vec<Dart>, Vec<Dart>), DartError> {
        match *self {
            ProofAnchor::Type2Vertex {
                first_angle,
                second_angle,
                ..
            } => Ok((
                vec![first_angle.0.inverse(), first_angle.1],
                vec![second_angle.0.inverse(), second_angle.1],
            )),
            ProofAnchor::MixedEdge { edge } => {
                let back = edge.inverse();
                let before_edge = reference.prev_dart(edge)?;
                let after_edge = reference.next_dart(edge)?;
                let before_back = reference.prev_dart(back)?;
                let after_back = reference.next_dart(back)?;
                Ok((
                    vec![before_edge.inverse(), edge, before_back],
                    vec![after_back.inverse(), back, after_edge],
                ))
            }
        }
    }
}

impl fmt::Display for ProofAnchor {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        match self {
            ProofAnchor::Type2Vertex {
                vertex,
                first_angle,
                second_angle,
            } => write!(
                f,
                "Type2Vertex {vertex}: angles {{{},{}}} and {{{},{}}}",
                first_angle.0, first_angle.1, second_angle.0, second_angle.1
            ),
            ProofAnchor::MixedEdge { edge } => write!(f, "MixedEdge {edge}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    NonSimpleFace(FaceWalk),
    CrossingPair {
        first: FaceWalk,
        second: FaceWalk,
        kind: IntersectionKind,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub anchor: ProofAnchor,
    pub certificate: Certificate,
}

/// Whether the pairs `{a, b}` and `{c, d}` separate each other in the
/// reference rotation at their common tail.
pub fn crossing_at_vertex(reference: &EmbeddedGraph, p1: Angle, p2: Angle) -> Result<bool, DartError> {
    let darts = [p1.0, p1.1, p2.0, p2.1];
    if let Some(other) = darts.iter().find(|d| d.tail != p1.0.tail) {
        return Err(DartError::DifferentTails(p1.0, *other));
    }
    for (i, a) in darts.iter().enumerate() {
        if darts[i + 1..].contains(a) {
            return Err(DartError::SameDart(*a));
        }
        if !reference.contains_dart(*a) {
            return Err(DartError::UnknownDart(*a));
        }
    }
    let rotation = reference.rotation(p1.0.tail);
    let position = |d: Dart| rotation.iter().position(|&u| u == d.head).unwrap();
    let (lo, hi) = {
        let (x, y) = (position(p1.0), position(p1.1));
        (x.min(y), x.max(y))
    };
    let inside = |d: Dart| lo < position(d) && position(d) < hi;
    Ok(inside(p2.0) != inside(p2.1))
}

/// A plane, polyhedral, 3-connected embedding against which candidates are compared.
#[derive(Debug, Clone)]
pub struct Reference {
    embedding: EmbeddedGraph,
}

impl Reference {
    pub fn new(embedding: &EmbeddedGraph) -> Result<Reference, WitnessError> {
        if embedding.genus() != 0 {
            return Err(WitnessError::PreconditionFailed(Precondition::NotPlane));
        }
        if !check_polyhedral(embedding).polyhedral() {
            return Err(WitnessError::PreconditionFailed(Precondition::NotPolyhedralRef));
        }
        if !is_three_connected(&embedding.underlying()) {
            return Err(WitnessError::PreconditionFailed(Precondition::Not3Connected));
        }
        Ok(Reference {
            embedding: embedding.clone(),
        })
    }

    pub fn embedding(&self) -> &EmbeddedGraph {
        &self.embedding
    }

    pub fn find_anchor(&self, candidate: &EmbeddedGraph) -> Result<ProofAnchor, WitnessError> {
        let reference = &self.embedding;
        if !reference.has_same_underlying(candidate) {
            return Err(WitnessError::PreconditionFailed(Precondition::UnderlyingMismatch));
        }
        if equivalent(reference, candidate)? {
            return Err(WitnessError::EquivalentInput);
        }
        let types = classify_types(reference, candidate)?;
        if let Some(vertex) = types.types.iter().position(|&t| t == VertexType::Other) {
            return self.type2_anchor(candidate, vertex);
        }
        let edge = reference
            .darts()
            .into_iter()
            .find(|d| types.type_of(d.tail) == VertexType::Same && types.type_of(d.head) == VertexType::Reversed)
            .ok_or_else(|| WitnessError::Internal("no type-2 vertex and no mixed edge".into()))?;
        Ok(ProofAnchor::MixedEdge { edge })
    }

    fn type2_anchor(&self, candidate: &EmbeddedGraph, vertex: usize) -> Result<ProofAnchor, WitnessError> {
        let reference = self.embedding.rotation(vertex);
        let degree = reference.len();
        let ref_pos = |u: usize| reference.iter().position(|&w| w == u).unwrap();
        let ref_succ = |u: usize| reference[(ref_pos(u) + 1) % degree];
        let ref_pred = |u: usize| reference[(ref_pos(u) + degree - 1) % degree];
        let adjacent = |a: usize, b: usize| ref_succ(a) == b || ref_succ(b) == a;

        let order = candidate.rotation(vertex);
        // Re-anchor at the first place where the candidate leaves the
        // reference order (read in whichever direction matches at the start).
        let shift = if !adjacent(order[0], order[1]) {
            0
        } else {
            let forward = ref_succ(order[0]) == order[1];
            (1..degree)
                .find(|&j| {
                    let next = if forward {
                        ref_succ(order[j])
                    } else {
                        ref_pred(order[j])
                    };
                    next != order[(j + 1) % degree]
                })
                .ok_or_else(|| WitnessError::Internal(format!("vertex {vertex} is not of type 2")))?
        };
        let e: Vec<usize> = (0..degree).map(|k| order[(k + shift) % degree]).collect();
        if adjacent(e[0], e[1]) {
            return Err(WitnessError::Internal(format!(
                "re-anchored pair at vertex {vertex} is still a reference angle"
            )));
        }

        // The reference read from e[0], oriented so that e[d-1] comes after e[1].
        let start = ref_pos(e[0]);
        let mut reading: Vec<usize> = (0..degree).map(|k| reference[(start + k) % degree]).collect();
        let at = |reading: &[usize], u: usize| reading.iter().position(|&w| w == u).unwrap();
        if at(&reading, e[degree - 1]) < at(&reading, e[1]) {
            reading[1..].reverse();
        }
        let first_block = &reading[1..at(&reading, e[1])];

        let cand_index = |u: usize| e.iter().position(|&w| w == u).unwrap();
        let y = first_block
            .iter()
            .map(|&u| cand_index(u))
            .max()
            .ok_or_else(|| WitnessError::Internal("empty block between the first angle".into()))?;
        if y + 1 >= degree || first_block.contains(&e[y + 1]) {
            return Err(WitnessError::Internal(format!(
                "second angle at vertex {vertex} does not straddle the first"
            )));
        }
        Ok(ProofAnchor::Type2Vertex {
            vertex,
            first_angle: (Dart::new(vertex, e[0]), Dart::new(vertex, e[1])),
            second_angle: (Dart::new(vertex, e[y]), Dart::new(vertex, e[y + 1])),
        })
    }

    pub fn extract(&self, candidate: &EmbeddedGraph) -> Result<Witness, WitnessError> {
        let anchor = self.find_anchor(candidate)?;
        let faces = candidate.faces();
        let certificate = match faces.iter().find(|f| !is_simple_face(f)) {
            Some(face) => Certificate::NonSimpleFace(face.clone()),
            None => {
                let (first_run, second_run) = anchor
                    .face_runs(&self.embedding)
                    .map_err(|e| WitnessError::Internal(e.to_string()))?;
                let locate = |run: &[Dart]| {
                    faces
                        .iter()
                        .find(|f| f.contains_run(run))
                        .cloned()
                        .ok_or_else(|| WitnessError::Internal(format!("no candidate face contains {run:?}")))
                };
                let first = locate(&first_run)?;
                let second = locate(&second_run)?;
                let kind = face_intersection(&first, &second)
                    .map_err(|_| WitnessError::Internal("both runs lie on the same simple face".into()))?;
                if !kind.is_violation() {
                    return Err(WitnessError::Internal(format!(
                        "crossing faces {first} and {second} meet only in {kind:?}"
                    )));
                }
                Certificate::CrossingPair { first, second, kind }
            }
        };
        let witness = Witness { anchor, certificate };
        witness
            .verify(&self.embedding, candidate)
            .map_err(WitnessError::Internal)?;
        Ok(witness)
    }
}

pub fn find_proof_anchor(reference: &EmbeddedGraph, candidate: &EmbeddedGraph) -> Result<ProofAnchor, WitnessError> {
    Reference::new(reference)?.find_anchor(candidate)
}

pub fn extract_witness(reference: &EmbeddedGraph, candidate: &EmbeddedGraph) -> Result<Witness, WitnessError> {
    Reference::new(reference)?.extract(candidate)
}

impl Witness {
    /// Re-checks every claim of the certificate from the two embeddings alone.
    pub fn verify(&self, reference: &EmbeddedGraph, candidate: &EmbeddedGraph) -> Result<(), String> {
        let show = |e: DartError| e.to_string();
        match self.anchor {
            ProofAnchor::Type2Vertex {
                vertex,
                first_angle,
                second_angle,
            } => {
                for (a, b) in [first_angle, second_angle] {
                    if a.tail != vertex || candidate.next_dart(a).map_err(show)? != b {
                        return Err(format!("{{{a},{b}}} is not a candidate angle at {vertex}"));
                    }
                    if reference.is_angle(a, b).map_err(show)? {
                        return Err(format!("{{{a},{b}}} is an angle of the reference"));
                    }
                }
                if !crossing_at_vertex(reference, first_angle, second_angle).map_err(show)? {
                    return Err("anchor angles do not interleave in the reference".into());
                }
            }
            ProofAnchor::MixedEdge { edge } => {
                let tail = vertex_type(reference, candidate, edge.tail).map_err(|e| e.to_string())?;
                let head = vertex_type(reference, candidate, edge.head).map_err(|e| e.to_string())?;
                if (tail, head) != (VertexType::Same, VertexType::Reversed) {
                    return Err(format!("edge {edge} has types ({tail}, {head})"));
                }
            }
        }

        let faces = candidate.faces();
        match &self.certificate {
            Certificate::NonSimpleFace(face) => {
                if !faces.contains(face) {
                    return Err(format!("{face} is not a face of the candidate"));
                }
                let distinct: BTreeSet<usize> = face.vertex_set();
                if face.len() >= 3 && distinct.len() == face.len() {
                    return Err(format!("{face} is a simple cycle"));
                }
            }
            Certificate::CrossingPair { first, second, kind } => {
                if !faces.contains(first) || !faces.contains(second) {
                    return Err("crossing faces are not faces of the candidate".into());
                }
                if first == second {
                    return Err("crossing faces coincide".into());
                }
                let (first_run, second_run) = self.anchor.face_runs(reference).map_err(show)?;
                if !first.contains_run(&first_run) || !second.contains_run(&second_run) {
                    return Err("crossing faces do not pass through the anchor".into());
                }
                let vertices: BTreeSet<usize> =
                    first.vertex_set().intersection(&second.vertex_set()).copied().collect();
                let edges: BTreeSet<(usize, usize)> =
                    first.edge_set().intersection(&second.edge_set()).copied().collect();
                let single_edge = vertices.len() == 2
                    && edges.len() == 1
                    && edges
                        .iter()
                        .all(|&(u, v)| vertices.contains(&u) && vertices.contains(&v));
                if vertices.len() < 2 || single_edge {
                    return Err("crossing faces meet in at most a vertex or an edge".into());
                }
                let expected = IntersectionKind::Violation {
                    shared_vertices: vertices,
                    shared_edges: edges,
                };
                if *kind != expected {
                    return Err(format!("recorded intersection {kind:?} differs from {expected:?}"));
                }
            }
        }
        Ok(())
    }
}
