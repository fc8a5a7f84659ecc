//! Combinatorial embeddings of small graphs as rotation systems.
//!
//! - [`embedmap`]: darts, rotation systems, face tracing, genus, mirror images.
//! - [`polyhedral`]: the polyhedral-embedding test and dual multigraphs.
//! - [`compare`]: per-vertex comparison of two rotation systems.
//! - [`witness`]: non-polyhedrality certificates for non-plane embeddings of
//!   3-connected planar graphs.
//! - [`enumerate`]: exhaustive rotation-system enumeration and verifiers.

pub mod catalog;
pub mod compare;
pub mod embedmap;
pub mod enumerate;
pub mod graph;
pub mod polyhedral;
pub mod witness;

pub use compare::{classify_types, equivalent, vertex_type, CompareError, Relation, TypeAssignment, VertexType};
pub use embedmap::{Dart, DartError, EmbeddedGraph, EmbeddingError, FaceWalk};
pub use enumerate::{
    canonical_key, find_planar_embedding, genus_census, is_three_connected, verify_cubic_corollary,
    verify_low_connectivity, verify_polyhedral_plane_only, verify_whitney, CensusReport, Claim, EnumerateError,
    RotationSpace, VerificationResult, DEFAULT_BUDGET,
};
pub use graph::{Graph, GraphError};
pub use polyhedral::{
    build_dual, check_polyhedral, dual_is_simple, face_intersection, is_simple_face, DualGraph, IntersectionKind,
    PolyhedralVerdict, PolyhedralViolation,
};
pub use witness::{
    crossing_at_vertex, extract_witness, find_proof_anchor, Certificate, ProofAnchor, Reference, Witness, WitnessError,
};
